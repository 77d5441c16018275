// Acceptance suite: runs every acceptance criterion once and prints one
// PASS/FAIL line per criterion.  Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bespaced/cli.hpp"
#include "bespaced/filter.hpp"
#include "bespaced/fold.hpp"
#include "bespaced/geometry.hpp"
#include "bespaced/io.hpp"
#include "bespaced/normalize.hpp"
#include "bespaced/rewrite.hpp"
#include "support/oracle.hpp"
#include "support/random_terms.hpp"
#include "support/worked_models.hpp"

namespace {

using namespace bespaced;
using bespaced::testing::Rng;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later checks still run but keep the first message.
struct Check {
  Outcome& out;
  void operator()(bool cond, const std::string& msg) const {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = msg;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 = no runtime bound
  std::function<void(Check)> body;
};

std::string show(const Invariant& t) { return to_string(t); }

// ── 1 ───────────────────────────────────────────────────────────────────────
void fold_time_cloud_series(Check check) {
  const std::int64_t got =
      fold_time<std::int64_t>(testing::time_series(), 0, TimeIteration(1, 3, 1), add_area_occupied);
  check(got == 342, "foldTime = " + std::to_string(got) + ", expected 342");
}

// ── 2 ───────────────────────────────────────────────────────────────────────
void fold_space_cloud_coverage(Check check) {
  const Invariant model = normalize_owner_occupied(testing::space_series());
  const IterationPath path(testing::start_box(), testing::stop_box(), 5, 5);
  std::vector<std::int64_t> steps;
  const Aggregator<std::int64_t> traced = [&](std::int64_t acc, const Invariant& sub) {
    const std::int64_t next = add_cloudy_area(acc, sub);
    steps.push_back(next - acc);
    return next;
  };
  const std::int64_t got = fold_space<std::int64_t>(model, 0, path, traced);
  check(got == 76, "foldSpace = " + std::to_string(got) + ", expected 76");
  const std::vector<std::int64_t> expected = {1, 25, 25, 25, 0, 0};
  std::string seen;
  for (auto s : steps) seen += std::to_string(s) + " ";
  check(steps == expected, "per-step contributions " + seen + ", expected 1 25 25 25 0 0");
}

// ── 3 ───────────────────────────────────────────────────────────────────────
void cloud_box_areas(Check check) {
  const std::int64_t a1 = calculate_area(testing::b1().as<OccupyBox>());
  const std::int64_t a2 = calculate_area(testing::b2().as<OccupyBox>());
  const std::int64_t a3 = calculate_area(testing::b3().as<OccupyBox>());
  check(a1 == 100 && a2 == 121 && a3 == 121,
        "areas " + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3));
}

// ── 4 ───────────────────────────────────────────────────────────────────────
void implies_false_rule(Check check) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const Invariant t = testing::random_term(rng, 5);
    const Invariant r = simplify(Implies{False{}, t});
    check(r == Invariant{True{}}, "IMPLIES(FALSE, " + show(t) + ") -> " + show(r));
  }
}

// ── 5 ───────────────────────────────────────────────────────────────────────
void merge_owners_example(Check check) {
  const Invariant got = merge_owners(testing::merge_input());
  check(got == testing::merge_expected(), "mergeOwners -> " + show(got));
}

// ── 6 ───────────────────────────────────────────────────────────────────────
void simplify_idempotence(Check check) {
  Rng rng(6);
  for (int i = 0; i < 10000; ++i) {
    const Invariant t = testing::random_term(rng, 6);
    const SimplifyTrace trace = simplify_traced(t);
    check(simplify(trace.result) == trace.result, "not idempotent on " + show(t));
    check(trace.rewriting_passes <= t.size(), "passes " + std::to_string(trace.rewriting_passes) +
                                                  " > size " + std::to_string(t.size()) + " on " + show(t));
  }
}

// ── 7 ───────────────────────────────────────────────────────────────────────
void normalization_canonicity(Check check) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Invariant> kids;
    const auto n = testing::uniform(rng, 2, 8);
    for (int k = 0; k < n; ++k) kids.push_back(testing::random_term(rng, 4));
    const std::string reference = serialize(normalize_std(BigAnd{kids}));
    for (int p = 0; p < 5; ++p) {
      std::ranges::shuffle(kids, rng);
      const std::string got = serialize(normalize_std(BigAnd{kids}));
      check(got == reference, "permutation changed normal form: " + got + " vs " + reference);
    }
  }
}

// ── 8 ───────────────────────────────────────────────────────────────────────
bool has_time_point(const Invariant& t) {
  if (t.is<TimePoint>()) return true;
  return std::ranges::any_of(children(t), has_time_point);
}

void semantic_preservation(Check check) {
  Rng rng(8);
  testing::GuardedModelOptions opt;
  opt.grid_lo = 0;
  opt.grid_hi = 20;
  opt.time_lo = 0;
  opt.time_hi = 10;
  for (int i = 0; i < 500; ++i) {
    const Invariant m = testing::random_guarded_model(rng, opt);
    const Invariant simplified = simplify(m);
    const Invariant normalized = normalize_owner_occupied(m);

    // Clauses whose guard mentions no TimePoint: what must remain outside a window.
    std::vector<Invariant> untimed;
    for (const auto& c : m.as<BigAnd>().terms) {
      if (!has_time_point(c.as<Implies>().premise)) untimed.push_back(c);
    }
    const Invariant untimed_model = BigAnd{std::move(untimed)};

    const Time a = testing::uniform(rng, 0, 10);
    const Time b = testing::uniform(rng, a, 11);
    const TimeWindow window(a, b);
    const Invariant filtered = filter_time(m, window);

    for (Time t = 0; t <= 10; ++t) {
      const PointSemantics expected = point_semantics(m, t);
      check(point_semantics(simplified, t) == expected, "simplify changed semantics of " + show(m));
      check(point_semantics(normalized, t) == expected,
            "normalizeOwnerOccupied changed semantics of " + show(m));
      const PointSemantics got = point_semantics(filtered, t);
      if (window.contains(t)) {
        check(got == expected, "filterTime changed semantics inside the window for " + show(m));
      } else {
        check(got == point_semantics(untimed_model, t),
              "filterTime kept TimePoint-guarded points outside the window for " + show(m));
      }
    }
  }
}

// ── 9 ───────────────────────────────────────────────────────────────────────
void geometry_oracle(Check check) {
  Rng rng(9);
  for (int i = 0; i < 10000; ++i) {
    const OccupyBox a = testing::random_box(rng, -50, 50);
    const OccupyBox b = testing::random_box(rng, -50, 50);
    const auto pa = testing::brute_points(a);
    const auto pb = testing::brute_points(b);
    check(calculate_area(a) == static_cast<std::int64_t>(pa.size()), "area mismatch on " + show(a));
    const auto both = testing::intersection(pa, pb);
    const auto r = intersect_boxes(a, b);
    const bool ok = both.empty() ? !r.has_value() : (r.has_value() && testing::brute_points(*r) == both);
    check(ok, "intersection mismatch on " + show(a) + " and " + show(b));
  }
}

// ── 10 ──────────────────────────────────────────────────────────────────────
std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return std::string(BESPACED_GOLDEN_DIR) + "/" + name; }

void round_trip_and_goldens(Check check) {
  Rng rng(10);
  for (int i = 0; i < 10000; ++i) {
    const Invariant t = testing::random_term(rng, 6);
    for (Layout layout : {Layout::Compact, Layout::Pretty}) {
      const std::string text = serialize(t, layout);
      check(parse(text) == t, "round trip failed for " + text);
    }
  }

  struct Golden {
    std::vector<std::string> args;
    std::string expected_file;
  };
  const std::vector<Golden> goldens = {
      {{"fold-time", "--in", golden("time_series.stinv"), "--start", "1", "--stop", "3", "--step", "1", "--agg",
        "area"},
       "fold_time.out"},
      {{"fold-space", "--in", golden("space_series.stinv"), "--start-box", "1,1,5,5", "--stop-box", "26,26,30,30",
        "--step", "5,5", "--agg", "owner-points:cloud"},
       "fold_space.out"},
      {{"normalize", "--in", golden("merge_owners.stinv"), "--pipeline", "owner"}, "merge_owners.out"},
  };
  for (const auto& g : goldens) {
    const std::string expected = read_file(golden(g.expected_file));
    check(!expected.empty(), "missing golden " + g.expected_file);
    for (int run = 0; run < 2; ++run) {
      std::istringstream in;
      std::ostringstream out, err;
      const int code = cli::run(g.args, in, out, err);
      check(code == 0, g.expected_file + ": exit " + std::to_string(code) + " " + err.str());
      check(out.str() == expected, g.expected_file + ": output differs from golden: " + out.str());
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "foldTime over the cloud time series = 342", 1, fold_time_cloud_series},
      {2, "foldSpace cloud coverage = 76 (1,25,25,25,0,0)", 1, fold_space_cloud_coverage},
      {3, "calculateArea b1,b2,b3 = 100,121,121", 0, cloud_box_areas},
      {4, "IMPLIES(FALSE, t) -> TRUE for 100 random t", 0, implies_false_rule},
      {5, "mergeOwners worked example", 0, merge_owners_example},
      {6, "simplify idempotence and pass bound, 10^4 terms", 30, simplify_idempotence},
      {7, "normalizeStd permutation canonicity, 10^3 x 5", 30, normalization_canonicity},
      {8, "semantic preservation on 500 guarded models", 60, semantic_preservation},
      {9, "geometry oracle on 10^4 random boxes", 10, geometry_oracle},
      {10, "round trip 10^4 terms both modes, CLI goldens stable", 0, round_trip_and_goldens},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto begin = std::chrono::steady_clock::now();
    try {
      c.body(Check{outcome});
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    if (outcome.ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome.ok = false;
      outcome.detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    if (!outcome.ok) ++failures;

    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << seconds << " s";
    if (c.limit_seconds > 0) line << " / limit " << c.limit_seconds << " s";
    line << "]";
    if (!outcome.ok) line << "  -- " << outcome.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
