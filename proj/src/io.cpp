#include "bespaced/io.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <limits>

#include "bespaced/error.hpp"
#include "json.hpp"
#include "overloaded.hpp"

namespace bespaced {

using json = nlohmann::ordered_json;
using detail::Overloaded;

namespace {

// ── Writing ─────────────────────────────────────────────────────────────────

json encode(const Invariant& inv) {
  json j;
  j["op"] = kind_name(inv.kind());
  inv.visit(Overloaded{
      [](const True&) {},
      [](const False&) {},
      [&](const TimePoint& a) { j["timepoint"] = a.timepoint; },
      [&](const TimeInterval& a) {
        j["timepoint1"] = a.timepoint1;
        j["timepoint2"] = a.timepoint2;
      },
      [&](const Owner& a) { j["owner"] = a.owner; },
      [&](const Event& a) { j["event"] = a.event; },
      [&](const ComponentState& a) { j["state"] = a.state; },
      [&](const Prob& a) { j["p"] = a.probability; },
      [&](const OccupyPoint& a) {
        j["x"] = a.x;
        j["y"] = a.y;
      },
      [&](const OccupyBox& a) {
        j["x1"] = a.x1;
        j["y1"] = a.y1;
        j["x2"] = a.x2;
        j["y2"] = a.y2;
      },
      [&](const OwnPoint& a) {
        j["owningcomponent"] = a.owningcomponent;
        j["x"] = a.x;
        j["y"] = a.y;
      },
      [&](const OwnBox& a) {
        j["owningcomponent"] = a.owningcomponent;
        j["x1"] = a.x1;
        j["y1"] = a.y1;
        j["x2"] = a.x2;
        j["y2"] = a.y2;
      },
      [&](const Occupy3DPoint& a) {
        j["x"] = a.x;
        j["y"] = a.y;
        j["z"] = a.z;
      },
      [&](const Occupy3DBox& a) {
        j["x1"] = a.x1;
        j["y1"] = a.y1;
        j["z1"] = a.z1;
        j["x2"] = a.x2;
        j["y2"] = a.y2;
        j["z2"] = a.z2;
      },
      [&](const OccupyCircle& a) {
        j["x1"] = a.x1;
        j["y1"] = a.y1;
        j["radius"] = a.radius;
      },
      [&](const OccupyNode& a) { j["node"] = a.node; },
      [&](const Edge& a) {
        j["source"] = a.source;
        j["target"] = a.target;
      },
      [&](const Transition& a) {
        j["source"] = a.source;
        j["event"] = a.event;
        j["target"] = a.target;
      },
      [&](const Not& n) { j["t"] = encode(n.t); },
      [&](const And& n) {
        j["t1"] = encode(n.t1);
        j["t2"] = encode(n.t2);
      },
      [&](const Or& n) {
        j["t1"] = encode(n.t1);
        j["t2"] = encode(n.t2);
      },
      [&](const Implies& n) {
        j["premise"] = encode(n.premise);
        j["conclusion"] = encode(n.conclusion);
      },
      [&](const BigAnd& n) {
        j["args"] = json::array();
        for (const auto& c : n.terms) j["args"].push_back(encode(c));
      },
      [&](const BigOr& n) {
        j["args"] = json::array();
        for (const auto& c : n.terms) j["args"].push_back(encode(c));
      },
  });
  return j;
}

std::string dump(const json& j, Layout layout) {
  return layout == Layout::Compact ? j.dump() : j.dump(2) + "\n";
}

// ── Reading ─────────────────────────────────────────────────────────────────

// A JSON object being decoded into one constructor.  `path` is a JSON pointer
// to the object, used in error messages.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  void expect_keys(std::string_view op, std::initializer_list<std::string_view> fields) const {
    for (auto f : fields) {
      if (!j_.contains(std::string(f))) {
        fail(std::string(op) + " is missing field \"" + std::string(f) + "\"");
      }
    }
    for (const auto& item : j_.items()) {
      if (item.key() == "op") continue;
      if (std::ranges::find(fields, std::string_view(item.key())) == fields.end()) {
        fail(std::string(op) + " has unexpected field \"" + item.key() + "\"");
      }
    }
  }

  std::int64_t integer(const char* key) const {
    const json& v = j_.at(key);
    if (v.is_number_integer() && !v.is_number_unsigned()) return v.get<std::int64_t>();
    if (v.is_number_unsigned()) {
      auto u = v.get<std::uint64_t>();
      if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        return static_cast<std::int64_t>(u);
      }
    }
    fail("field \"" + std::string(key) + "\" must be a 64-bit integer");
  }

  std::string text(const char* key) const {
    const json& v = j_.at(key);
    if (!v.is_string()) fail("field \"" + std::string(key) + "\" must be a string");
    return v.get<std::string>();
  }

  double number(const char* key) const {
    const json& v = j_.at(key);
    if (!v.is_number()) fail("field \"" + std::string(key) + "\" must be a number");
    return v.get<double>();
  }

  Invariant child(const char* key) const;

  std::vector<Invariant> list(const char* key) const;

  std::string where() const { return "at " + (path_.empty() ? std::string("/") : path_) + ": "; }

  [[noreturn]] void fail(const std::string& message) const { throw SchemaError(where() + message); }

 private:
  const json& j_;
  std::string path_;
};

Invariant decode(const json& j, const std::string& path);

Invariant Reader::child(const char* key) const { return decode(j_.at(key), path_ + "/" + key); }

std::vector<Invariant> Reader::list(const char* key) const {
  const json& v = j_.at(key);
  if (!v.is_array()) fail("field \"" + std::string(key) + "\" must be an array");
  std::vector<Invariant> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(decode(v[i], path_ + "/" + key + "/" + std::to_string(i)));
  }
  return out;
}

// Prefixes range violations raised by value constructors with their location.
template <class Make>
Invariant build(const Reader& r, Make&& make) {
  try {
    return make();
  } catch (const RangeError& e) {
    throw RangeError(r.where() + e.what());
  }
}

Invariant decode(const json& j, const std::string& path) {
  Reader r(j, path);
  if (!j.is_object()) r.fail("expected an object");
  if (!j.contains("op")) r.fail("missing field \"op\"");
  if (!j.at("op").is_string()) r.fail("field \"op\" must be a string");
  const std::string op = j.at("op").get<std::string>();

  auto is = [&op](Kind k) { return op == kind_name(k); };

  if (is(Kind::True)) {
    r.expect_keys(op, {});
    return True{};
  }
  if (is(Kind::False)) {
    r.expect_keys(op, {});
    return False{};
  }
  if (is(Kind::TimePoint)) {
    r.expect_keys(op, {"timepoint"});
    return TimePoint{r.integer("timepoint")};
  }
  if (is(Kind::TimeInterval)) {
    r.expect_keys(op, {"timepoint1", "timepoint2"});
    return build(r, [&] { return Invariant{TimeInterval{r.integer("timepoint1"), r.integer("timepoint2")}}; });
  }
  if (is(Kind::Owner)) {
    r.expect_keys(op, {"owner"});
    return Owner{r.text("owner")};
  }
  if (is(Kind::Event)) {
    r.expect_keys(op, {"event"});
    return Event{r.text("event")};
  }
  if (is(Kind::ComponentState)) {
    r.expect_keys(op, {"state"});
    return ComponentState{r.text("state")};
  }
  if (is(Kind::Prob)) {
    r.expect_keys(op, {"p"});
    const double p = r.number("p");
    if (!(p >= 0.0 && p <= 1.0)) {
      throw RangeError(r.where() + "Prob p=" + j.at("p").dump() + " is outside [0, 1]");
    }
    return Prob{p};
  }
  if (is(Kind::OccupyPoint)) {
    r.expect_keys(op, {"x", "y"});
    return OccupyPoint{r.integer("x"), r.integer("y")};
  }
  if (is(Kind::OccupyBox)) {
    r.expect_keys(op, {"x1", "y1", "x2", "y2"});
    return mk_box(r.integer("x1"), r.integer("y1"), r.integer("x2"), r.integer("y2"));
  }
  if (is(Kind::OwnPoint)) {
    r.expect_keys(op, {"owningcomponent", "x", "y"});
    return OwnPoint{r.text("owningcomponent"), r.integer("x"), r.integer("y")};
  }
  if (is(Kind::OwnBox)) {
    r.expect_keys(op, {"owningcomponent", "x1", "y1", "x2", "y2"});
    return OwnBox{r.text("owningcomponent"), r.integer("x1"), r.integer("y1"), r.integer("x2"),
                  r.integer("y2")};
  }
  if (is(Kind::Occupy3DPoint)) {
    r.expect_keys(op, {"x", "y", "z"});
    return Occupy3DPoint{r.integer("x"), r.integer("y"), r.integer("z")};
  }
  if (is(Kind::Occupy3DBox)) {
    r.expect_keys(op, {"x1", "y1", "z1", "x2", "y2", "z2"});
    return Occupy3DBox{r.integer("x1"), r.integer("y1"), r.integer("z1"),
                       r.integer("x2"), r.integer("y2"), r.integer("z2")};
  }
  if (is(Kind::OccupyCircle)) {
    r.expect_keys(op, {"x1", "y1", "radius"});
    return OccupyCircle{r.integer("x1"), r.integer("y1"), r.integer("radius")};
  }
  if (is(Kind::OccupyNode)) {
    r.expect_keys(op, {"node"});
    return OccupyNode{r.text("node")};
  }
  if (is(Kind::Edge)) {
    r.expect_keys(op, {"source", "target"});
    return Edge{r.text("source"), r.text("target")};
  }
  if (is(Kind::Transition)) {
    r.expect_keys(op, {"source", "event", "target"});
    return Transition{r.text("source"), r.text("event"), r.text("target")};
  }
  if (is(Kind::Not)) {
    r.expect_keys(op, {"t"});
    return Not{r.child("t")};
  }
  if (is(Kind::And)) {
    r.expect_keys(op, {"t1", "t2"});
    return And{r.child("t1"), r.child("t2")};
  }
  if (is(Kind::Or)) {
    r.expect_keys(op, {"t1", "t2"});
    return Or{r.child("t1"), r.child("t2")};
  }
  if (is(Kind::Implies)) {
    r.expect_keys(op, {"premise", "conclusion"});
    return Implies{r.child("premise"), r.child("conclusion")};
  }
  if (is(Kind::BigAnd)) {
    r.expect_keys(op, {"args"});
    return BigAnd{r.list("args")};
  }
  if (is(Kind::BigOr)) {
    r.expect_keys(op, {"args"});
    return BigOr{r.list("args")};
  }
  r.fail("unknown op \"" + op + "\"");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the byte at which parsing stopped.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
  }
}

}  // namespace

std::string serialize(const Invariant& inv, Layout layout) { return dump(encode(inv), layout); }

std::string serialize_document(const ModelDocument& doc, Layout layout) {
  json j;
  j["version"] = doc.version;
  j["root"] = encode(doc.root);
  return dump(j, layout);
}

ModelDocument parse_document(std::string_view text) {
  const json j = parse_json(text);
  if (j.is_object() && !j.contains("op") && (j.contains("version") || j.contains("root"))) {
    Reader r(j, "");
    if (!j.contains("version") || !j.at("version").is_string()) {
      r.fail("document needs a string \"version\"");
    }
    if (j.at("version").get<std::string>() != kFormatVersion) {
      r.fail("unsupported document version \"" + j.at("version").get<std::string>() + "\"");
    }
    r.expect_keys("document", {"version", "root"});
    return ModelDocument{j.at("version").get<std::string>(), decode(j.at("root"), "/root")};
  }
  return ModelDocument{std::string(kFormatVersion), decode(j, "")};
}

Invariant parse(std::string_view text) { return parse_document(text).root; }

}  // namespace bespaced
