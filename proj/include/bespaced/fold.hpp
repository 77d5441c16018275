// ============================================================================
// bespaced/fold.hpp — folding over time steps and spatial iteration paths
// ============================================================================
//
// Both folds visit a sequence of steps in order, cut the sub-invariant that
// is relevant to the step out of the model with a filter, and hand it to an
// aggregation function together with the running accumulator:
//
//   foldTime:  t = start, start+step, ..., <= stop;  sub = filter_time(model, [t, t+step))
//   foldSpace: B0 = startArea, B(i+1) = B(i) + translation, ..., B(k) = stopArea;
//              sub = filter_space(model, B(i))
//
// Stop bounds are inclusive.  A step with nothing relevant hands TRUE to the
// aggregator.  Overlapping path boxes are allowed; each visit sees its own
// filtered model and nothing is deduplicated across steps.
// ============================================================================

#ifndef BESPACED_FOLD_HPP
#define BESPACED_FOLD_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "bespaced/filter.hpp"
#include "bespaced/invariant.hpp"

namespace bespaced {

template <class A>
using Aggregator = std::function<A(A, const Invariant&)>;

class TimeIteration {
 public:
  /// Throws InvalidArgument unless step > 0 and start <= stop.
  TimeIteration(Time start, Time stop, Time step);

  Time start() const noexcept { return start_; }
  Time stop() const noexcept { return stop_; }
  Time step() const noexcept { return step_; }

  /// floor((stop - start) / step) + 1
  std::size_t visit_count() const noexcept;

  /// The window [t, t + step) for the i-th visit, clamped at the top of the
  /// Time range.
  TimeWindow window(std::size_t i) const noexcept;

 private:
  Time start_;
  Time stop_;
  Time step_;
};

class IterationPath {
 public:
  /// Throws InvalidArgument if the translation is (0, 0) or the stop box is
  /// not the start box shifted by a whole number k >= 0 of translations.
  IterationPath(const OccupyBox& start_area, const OccupyBox& stop_area, Coord dx, Coord dy);

  const OccupyBox& start_area() const noexcept { return start_; }
  const OccupyBox& stop_area() const noexcept { return stop_; }
  Coord dx() const noexcept { return dx_; }
  Coord dy() const noexcept { return dy_; }

  /// k + 1
  std::size_t visit_count() const noexcept { return steps_ + 1; }
  OccupyBox box(std::size_t i) const noexcept;

 private:
  OccupyBox start_;
  OccupyBox stop_;
  Coord dx_;
  Coord dy_;
  std::size_t steps_;
};

template <class A>
A fold_time(const Invariant& model, A init, const TimeIteration& iter, const Aggregator<A>& f) {
  A acc = std::move(init);
  for (std::size_t i = 0, n = iter.visit_count(); i < n; ++i) {
    acc = f(std::move(acc), filter_time(model, iter.window(i), true));
  }
  return acc;
}

/// The model must be in guarded normal form; normalize it first
/// (normalize_owner_occupied) if it is not.
template <class A>
A fold_space(const Invariant& model, A init, const IterationPath& path, const Aggregator<A>& f) {
  A acc = std::move(init);
  for (std::size_t i = 0, n = path.visit_count(); i < n; ++i) {
    acc = f(std::move(acc), filter_space(model, path.box(i)));
  }
  return acc;
}

// ── Aggregators ─────────────────────────────────────────────────────────────

/// total + area of the box concluded by an IMPLIES(_, OccupyBox).  An AND or
/// BIGAND is searched one level deep and the areas of its matching
/// implications are summed (overlaps counted twice).  Anything else adds 0.
std::int64_t add_area_occupied(std::int64_t total, const Invariant& item);

/// total + number of points occupied by `owner` in a filter_space result.
/// Counts IMPLIES(Owner(owner), conclusion) with conclusion OccupyPoint (1),
/// AND(point, point) (2) or BIGAND(points) (its length), looking through a
/// top-level AND/BIGAND or a single bare IMPLIES.
std::int64_t add_owner_points(std::int64_t total, const Invariant& sub, const std::string& owner);

/// add_owner_points for the owner "cloud".
std::int64_t add_cloudy_area(std::int64_t total, const Invariant& sub);

/// Aggregator counting the points of one owner.
Aggregator<std::int64_t> owner_points(std::string owner);

}  // namespace bespaced

#endif  // BESPACED_FOLD_HPP
