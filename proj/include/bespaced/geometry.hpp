// ============================================================================
// bespaced/geometry.hpp — grid geometry and the point-set semantics oracle
// ============================================================================
//
// Boxes are inclusive on both corners: OccupyBox(1,1,10,10) covers 100 grid
// points.  Points are enumerated row-major (y outer, x inner, ascending), and
// GridPoint's ordering follows the same convention so ordered containers of
// points iterate in enumeration order.
//
// The oracle works on the guarded fragment of the language:
//
//   model    := TRUE | clause | AND(model, model) | BIGAND(model...)
//   clause   := IMPLIES(guard, geometry) | geometry | OwnBox | OwnPoint
//   guard    := TRUE | FALSE | TimePoint | TimeInterval | Owner
//             | AND(guard, guard) | BIGAND(guard...)
//   geometry := OccupyBox | OccupyPoint | TRUE | AND(geometry, geometry)
//             | BIGAND(geometry...)
//
// A guard names at most one owner.  OwnBox/OwnPoint are read as
// IMPLIES(Owner(c), box/point); geometry with no owner goes to the anonymous
// bucket "".  Anything else (NOT, OR, circles, 3D, topology, events, ...)
// raises ShapeError.
// ============================================================================

#ifndef BESPACED_GEOMETRY_HPP
#define BESPACED_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bespaced/invariant.hpp"

namespace bespaced {

struct GridPoint {
  Coord x;
  Coord y;

  bool operator==(const GridPoint&) const = default;
  std::strong_ordering operator<=>(const GridPoint& o) const {
    if (auto c = y <=> o.y; c != 0) return c;
    return x <=> o.x;
  }
};

using PointSet = std::set<GridPoint>;

/// Owner label -> occupied points.  The anonymous owner is "".
using PointSemantics = std::map<std::string, PointSet>;

inline constexpr std::string_view kAnonymousOwner = "";

/// Number of grid points covered: (x2 - x1 + 1) * (y2 - y1 + 1) after corner ordering.
std::int64_t calculate_area(const OccupyBox& box);

/// All points of the box, row-major.
std::vector<GridPoint> expand_box_to_points(const OccupyBox& box);

/// Overlap of two boxes, or nullopt when they share no grid point.
std::optional<OccupyBox> intersect_boxes(const OccupyBox& a, const OccupyBox& b);

bool contains(const OccupyBox& box, GridPoint p);

/// An implication of a guarded model with its geometry reduced to boxes
/// (points become single-cell boxes).
struct GuardedClause {
  /// The premise as written; TRUE for bare geometry.
  Invariant guard;
  /// Owner named by the guard, "" when none.
  std::string owner;
  std::vector<OccupyBox> regions;
  /// False for bare geometry (no IMPLIES and no OwnBox/OwnPoint wrapper).
  bool guarded = true;
};

/// Decompose a guarded model into its clauses, in document order.
/// Throws ShapeError outside the fragment.
std::vector<GuardedClause> guarded_clauses(const Invariant& model);

bool is_guarded_normal_form(const Invariant& model);

/// Whether the time atoms of a guard hold at t.  TimePoint(u) holds iff u == t;
/// TimeInterval(a, b) holds iff a <= t <= b; FALSE never holds.
bool guard_holds_at(const Invariant& guard, Time t);

/// Ground truth: for each clause whose guard holds at t, every point of its
/// geometry is added to the guard's owner.  Owners with no points are absent.
/// Throws ShapeError outside the fragment.
PointSemantics point_semantics(const Invariant& model, Time t);

/// Restrict every owner's points to the box; owners left empty are kept.
PointSemantics clip(const PointSemantics& semantics, const OccupyBox& window);

}  // namespace bespaced

#endif  // BESPACED_GEOMETRY_HPP
