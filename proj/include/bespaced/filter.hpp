#ifndef BESPACED_FILTER_HPP
#define BESPACED_FILTER_HPP

#include "bespaced/invariant.hpp"

namespace bespaced {

/// Half-open time window [start, stop).
class TimeWindow {
 public:
  /// Throws InvalidArgument if start > stop.  start == stop is the empty window.
  TimeWindow(Time start, Time stop);

  Time start() const noexcept { return start_; }
  Time stop() const noexcept { return stop_; }
  bool contains(Time t) const noexcept { return start_ <= t && t < stop_; }

 private:
  Time start_;
  Time stop_;
};

/// Rewrite-then-simplify time filter.
///
/// Every TimePoint outside the window is replaced by the constant
/// NOT(miss_value) (FALSE for the default, which suits conjunctive models),
/// then the whole term is simplified so dead branches such as
/// IMPLIES(FALSE, ...) disappear.  The rewrite descends through IMPLIES, AND,
/// BIGAND, OR and BIGOR only; every other node, TimeInterval and NOT
/// included, is left as is.
Invariant filter_time(const Invariant& inv, const TimeWindow& window, bool miss_value = true);

/// Restrict a guarded model to the grid points inside `window`.
///
/// Each clause keeps its guard; its geometry becomes the points it covers
/// inside the window, row-major, as OccupyPoint (one point), AND(p1, p2) (two)
/// or BIGAND(points) (three or more).  Clauses with no point inside are
/// dropped.  The result is TRUE, the single surviving clause, or a BIGAND of
/// the survivors in their original order.  OwnBox/OwnPoint clauses come out
/// as IMPLIES(Owner(c), points).
///
/// Throws ShapeError if the model is not in guarded normal form.
Invariant filter_space(const Invariant& inv, const OccupyBox& window);

}  // namespace bespaced

#endif  // BESPACED_FILTER_HPP
