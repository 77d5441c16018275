#include "bespaced/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "bespaced/error.hpp"
#include "bespaced/filter.hpp"
#include "bespaced/fold.hpp"
#include "bespaced/geometry.hpp"
#include "bespaced/io.hpp"
#include "bespaced/normalize.hpp"

namespace bespaced::cli {

namespace {

constexpr std::string_view kOwnerPointsPrefix = "owner-points:";

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::vector<Coord> parse_coords(const std::string& text, std::size_t count, const char* flag) {
  std::vector<Coord> values;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(',', begin);
    if (end == std::string::npos) end = text.size();
    Coord v{};
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw InvalidArgument(std::string(flag) + ": \"" + text + "\" is not a comma-separated list of integers");
    }
    values.push_back(v);
    begin = end + 1;
  }
  if (values.size() != count) {
    throw InvalidArgument(std::string(flag) + ": expected " + std::to_string(count) +
                          " integers, got " + std::to_string(values.size()));
  }
  return values;
}

OccupyBox parse_box(const std::string& text, const char* flag) {
  auto v = parse_coords(text, 4, flag);
  return OccupyBox{v[0], v[1], v[2], v[3]}.normalized();
}

void emit(std::ostream& out, const Invariant& inv, const std::string& mode) {
  const Layout layout = mode == "pretty" ? Layout::Pretty : Layout::Compact;
  out << serialize(inv, layout);
  if (layout == Layout::Compact) out << '\n';
}

struct Options {
  std::string in;
  std::string pipeline = "std";
  std::string mode = "compact";
  std::string miss = "true";
  std::string agg;
  Time start = 0;
  Time stop = 0;
  Time step = 0;
  Time time = 0;
  std::string start_box;
  std::string stop_box;
  std::string space_step;
  std::string grid;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spatio-temporal invariant engine: normalize, filter, fold and query .stinv models",
               "bespaced"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&o](CLI::App* cmd) {
    cmd->add_option("--in", o.in, "Model file (.stinv), or - for standard input")->required();
  };
  auto add_mode = [&o](CLI::App* cmd) {
    cmd->add_option("--mode", o.mode, "Output layout")
        ->check(CLI::IsMember({"compact", "pretty"}))
        ->capture_default_str();
  };

  auto* normalize = app.add_subcommand("normalize", "Print the model in normal form");
  add_input(normalize);
  normalize->add_option("--pipeline", o.pipeline, "std or owner (merge implications by premise)")
      ->check(CLI::IsMember({"std", "owner"}))
      ->capture_default_str();
  add_mode(normalize);

  auto* filter_time_cmd = app.add_subcommand("filter-time", "Keep what holds in [start, stop)");
  add_input(filter_time_cmd);
  filter_time_cmd->add_option("--start", o.start, "Window start (inclusive)")->required();
  filter_time_cmd->add_option("--stop", o.stop, "Window stop (exclusive)")->required();
  filter_time_cmd->add_option("--miss", o.miss, "Value whose negation replaces out-of-window time points")
      ->check(CLI::IsMember({"true", "false"}))
      ->capture_default_str();
  add_mode(filter_time_cmd);

  auto* fold_time_cmd = app.add_subcommand("fold-time", "Fold an aggregator over time steps");
  add_input(fold_time_cmd);
  fold_time_cmd->add_option("--start", o.start, "First time point")->required();
  fold_time_cmd->add_option("--stop", o.stop, "Last time point (inclusive)")->required();
  fold_time_cmd->add_option("--step", o.step, "Time increment, > 0")->required();
  o.agg = "area";
  fold_time_cmd->add_option("--agg", o.agg, "Aggregator")
      ->check(CLI::IsMember({"area"}))
      ->capture_default_str();

  auto* fold_space_cmd = app.add_subcommand("fold-space", "Fold an aggregator along a box path");
  add_input(fold_space_cmd);
  fold_space_cmd->add_option("--start-box", o.start_box, "x1,y1,x2,y2")->required();
  fold_space_cmd->add_option("--stop-box", o.stop_box, "x1,y1,x2,y2")->required();
  fold_space_cmd->add_option("--step", o.space_step, "dx,dy")->required();
  fold_space_cmd->add_option("--agg", o.agg, "owner-points:LABEL")->required();

  auto* query = app.add_subcommand("query", "Per-owner point counts at a time inside a grid");
  add_input(query);
  query->add_option("--time", o.time, "Time point")->required();
  query->add_option("--grid", o.grid, "x1,y1,x2,y2")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  }

  try {
    const Invariant model = parse(read_input(o.in, in));

    if (normalize->parsed()) {
      emit(out, o.pipeline == "owner" ? normalize_owner_occupied(model) : normalize_std(model), o.mode);
    } else if (filter_time_cmd->parsed()) {
      const TimeWindow window{o.start, o.stop};
      emit(out, filter_time(model, window, o.miss == "true"), o.mode);
    } else if (fold_time_cmd->parsed()) {
      const TimeIteration iter{o.start, o.stop, o.step};
      out << fold_time<std::int64_t>(model, 0, iter, add_area_occupied) << '\n';
    } else if (fold_space_cmd->parsed()) {
      if (!o.agg.starts_with(kOwnerPointsPrefix)) {
        throw InvalidArgument("--agg must be owner-points:LABEL, got \"" + o.agg + "\"");
      }
      const auto step = parse_coords(o.space_step, 2, "--step");
      const IterationPath path{parse_box(o.start_box, "--start-box"),
                               parse_box(o.stop_box, "--stop-box"), step[0], step[1]};
      const Invariant normalized = normalize_owner_occupied(model);
      const auto aggregator = owner_points(o.agg.substr(kOwnerPointsPrefix.size()));
      out << fold_space<std::int64_t>(normalized, 0, path, aggregator) << '\n';
    } else if (query->parsed()) {
      const OccupyBox grid = parse_box(o.grid, "--grid");
      PointSemantics semantics;
      try {
        semantics = point_semantics(model, o.time);
      } catch (const ShapeError&) {
        semantics = point_semantics(normalize_std(model), o.time);
      }
      std::vector<std::pair<std::string, std::size_t>> rows;
      for (const auto& [owner, points] : clip(semantics, grid)) {
        rows.emplace_back(owner.empty() ? "<anonymous>" : owner, points.size());
      }
      std::ranges::sort(rows);
      for (const auto& [owner, count] : rows) out << owner << '\t' << count << '\n';
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kShapeFailure;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  }
}

}  // namespace bespaced::cli
