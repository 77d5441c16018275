#include "bespaced/geometry.hpp"

#include <algorithm>
#include <iterator>

#include "bespaced/error.hpp"
#include "overloaded.hpp"

namespace bespaced {

using detail::Overloaded;

std::int64_t calculate_area(const OccupyBox& box) {
  const OccupyBox b = box.normalized();
  return (b.x2 - b.x1 + 1) * (b.y2 - b.y1 + 1);
}

std::vector<GridPoint> expand_box_to_points(const OccupyBox& box) {
  const OccupyBox b = box.normalized();
  std::vector<GridPoint> points;
  points.reserve(static_cast<std::size_t>(calculate_area(b)));
  for (Coord y = b.y1; y <= b.y2; ++y) {
    for (Coord x = b.x1; x <= b.x2; ++x) points.push_back({x, y});
  }
  return points;
}

std::optional<OccupyBox> intersect_boxes(const OccupyBox& a, const OccupyBox& b) {
  const OccupyBox p = a.normalized();
  const OccupyBox q = b.normalized();
  OccupyBox r{std::max(p.x1, q.x1), std::max(p.y1, q.y1), std::min(p.x2, q.x2),
              std::min(p.y2, q.y2)};
  if (r.x1 > r.x2 || r.y1 > r.y2) return std::nullopt;
  return r;
}

bool contains(const OccupyBox& box, GridPoint p) {
  const OccupyBox b = box.normalized();
  return b.x1 <= p.x && p.x <= b.x2 && b.y1 <= p.y && p.y <= b.y2;
}

namespace {

[[noreturn]] void reject(const Invariant& inv, std::string_view where) {
  throw ShapeError(std::string("not in guarded normal form: ") + std::string(kind_name(inv.kind())) +
                   " is not allowed as " + std::string(where));
}

// Collects the owner named by a guard, validating the guard shape.
void scan_guard(const Invariant& guard, std::string& owner, bool& has_owner) {
  guard.visit(Overloaded{
      [](const True&) {},
      [](const False&) {},
      [](const TimePoint&) {},
      [](const TimeInterval&) {},
      [&](const Owner& o) {
        if (has_owner && owner != o.owner) {
          throw ShapeError("guard names two owners: \"" + owner + "\" and \"" + o.owner + "\"");
        }
        owner = o.owner;
        has_owner = true;
      },
      [&](const And& n) {
        scan_guard(n.t1, owner, has_owner);
        scan_guard(n.t2, owner, has_owner);
      },
      [&](const BigAnd& n) {
        for (const auto& c : n.terms) scan_guard(c, owner, has_owner);
      },
      [&](const auto&) { reject(guard, "a guard"); },
  });
}

void scan_geometry(const Invariant& geometry, std::vector<OccupyBox>& regions) {
  geometry.visit(Overloaded{
      [&](const OccupyBox& b) { regions.push_back(b); },
      [&](const OccupyPoint& p) { regions.push_back({p.x, p.y, p.x, p.y}); },
      [](const True&) {},
      [&](const And& n) {
        scan_geometry(n.t1, regions);
        scan_geometry(n.t2, regions);
      },
      [&](const BigAnd& n) {
        for (const auto& c : n.terms) scan_geometry(c, regions);
      },
      [&](const auto&) { reject(geometry, "geometry"); },
  });
}

void scan_model(const Invariant& model, std::vector<GuardedClause>& out) {
  model.visit(Overloaded{
      [](const True&) {},
      [&](const And& n) {
        scan_model(n.t1, out);
        scan_model(n.t2, out);
      },
      [&](const BigAnd& n) {
        for (const auto& c : n.terms) scan_model(c, out);
      },
      [&](const Implies& n) {
        GuardedClause clause{n.premise, {}, {}, true};
        bool has_owner = false;
        scan_guard(n.premise, clause.owner, has_owner);
        scan_geometry(n.conclusion, clause.regions);
        out.push_back(std::move(clause));
      },
      [&](const OwnBox& b) {
        out.push_back({Owner{b.owningcomponent}, b.owningcomponent, {{b.x1, b.y1, b.x2, b.y2}}, true});
      },
      [&](const OwnPoint& p) {
        out.push_back({Owner{p.owningcomponent}, p.owningcomponent, {{p.x, p.y, p.x, p.y}}, true});
      },
      [&](const OccupyBox&) {
        GuardedClause clause{True{}, {}, {}, false};
        scan_geometry(model, clause.regions);
        out.push_back(std::move(clause));
      },
      [&](const OccupyPoint&) {
        GuardedClause clause{True{}, {}, {}, false};
        scan_geometry(model, clause.regions);
        out.push_back(std::move(clause));
      },
      [&](const auto&) { reject(model, "a model clause"); },
  });
}

}  // namespace

std::vector<GuardedClause> guarded_clauses(const Invariant& model) {
  std::vector<GuardedClause> clauses;
  scan_model(model, clauses);
  return clauses;
}

bool is_guarded_normal_form(const Invariant& model) {
  try {
    guarded_clauses(model);
    return true;
  } catch (const ShapeError&) {
    return false;
  }
}

bool guard_holds_at(const Invariant& guard, Time t) {
  return guard.visit(Overloaded{
      [](const False&) { return false; },
      [t](const TimePoint& a) { return a.timepoint == t; },
      [t](const TimeInterval& a) { return a.timepoint1 <= t && t <= a.timepoint2; },
      [t](const And& n) { return guard_holds_at(n.t1, t) && guard_holds_at(n.t2, t); },
      [t](const BigAnd& n) {
        return std::ranges::all_of(n.terms, [t](const Invariant& c) { return guard_holds_at(c, t); });
      },
      [](const auto&) { return true; },
  });
}

PointSemantics point_semantics(const Invariant& model, Time t) {
  PointSemantics semantics;
  for (const auto& clause : guarded_clauses(model)) {
    if (!guard_holds_at(clause.guard, t) || clause.regions.empty()) continue;
    PointSet& bucket = semantics[clause.owner];
    for (const auto& region : clause.regions) {
      for (GridPoint p : expand_box_to_points(region)) bucket.insert(p);
    }
  }
  return semantics;
}

PointSemantics clip(const PointSemantics& semantics, const OccupyBox& window) {
  PointSemantics clipped;
  for (const auto& [owner, points] : semantics) {
    PointSet& bucket = clipped[owner];
    std::ranges::copy_if(points, std::inserter(bucket, bucket.end()),
                         [&](GridPoint p) { return contains(window, p); });
  }
  return clipped;
}

}  // namespace bespaced
