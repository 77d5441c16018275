#include "bespaced/filter.hpp"

#include <algorithm>
#include <string>

#include "bespaced/error.hpp"
#include "bespaced/geometry.hpp"
#include "bespaced/rewrite.hpp"

namespace bespaced {

TimeWindow::TimeWindow(Time start, Time stop) : start_(start), stop_(stop) {
  if (start > stop) {
    throw InvalidArgument("time window start " + std::to_string(start) + " is after stop " +
                          std::to_string(stop));
  }
}

namespace {

Invariant rewrite_time_points(const Invariant& inv, const TimeWindow& window, const Invariant& miss) {
  switch (inv.kind()) {
    case Kind::TimePoint:
      return window.contains(inv.as<TimePoint>().timepoint) ? inv : miss;
    case Kind::Implies:
    case Kind::And:
    case Kind::Or:
    case Kind::BigAnd:
    case Kind::BigOr: {
      std::vector<Invariant> kids = children(inv);
      bool changed = false;
      for (auto& kid : kids) {
        Invariant next = rewrite_time_points(kid, window, miss);
        if (!next.same_node(kid)) {
          kid = std::move(next);
          changed = true;
        }
      }
      return changed ? with_children(inv, std::move(kids)) : inv;
    }
    default:
      return inv;
  }
}

Invariant encode_points(const PointSet& points) {
  std::vector<Invariant> atoms;
  atoms.reserve(points.size());
  for (GridPoint p : points) atoms.push_back(OccupyPoint{p.x, p.y});
  switch (atoms.size()) {
    case 1:
      return atoms.front();
    case 2:
      return And{atoms[0], atoms[1]};
    default:
      return BigAnd{std::move(atoms)};
  }
}

}  // namespace

Invariant filter_time(const Invariant& inv, const TimeWindow& window, bool miss_value) {
  const Invariant miss = miss_value ? Invariant{False{}} : Invariant{True{}};
  return simplify(rewrite_time_points(inv, window, miss));
}

Invariant filter_space(const Invariant& inv, const OccupyBox& window) {
  const OccupyBox frame = window.normalized();
  std::vector<Invariant> kept;
  for (const auto& clause : guarded_clauses(inv)) {
    PointSet inside;
    for (const auto& region : clause.regions) {
      if (auto overlap = intersect_boxes(region, frame)) {
        for (GridPoint p : expand_box_to_points(*overlap)) inside.insert(p);
      }
    }
    if (inside.empty()) continue;
    Invariant geometry = encode_points(inside);
    kept.push_back(clause.guarded ? Invariant{Implies{clause.guard, std::move(geometry)}}
                                  : std::move(geometry));
  }
  if (kept.empty()) return True{};
  if (kept.size() == 1) return kept.front();
  return BigAnd{std::move(kept)};
}

}  // namespace bespaced
