#include "bespaced/fold.hpp"

#include <limits>
#include <optional>
#include <sstream>

#include "bespaced/error.hpp"
#include "bespaced/geometry.hpp"

namespace bespaced {

TimeIteration::TimeIteration(Time start, Time stop, Time step)
    : start_(start), stop_(stop), step_(step) {
  if (step <= 0) throw InvalidArgument("time step must be positive, got " + std::to_string(step));
  if (start > stop) {
    throw InvalidArgument("time iteration start " + std::to_string(start) + " is after stop " +
                          std::to_string(stop));
  }
}

std::size_t TimeIteration::visit_count() const noexcept {
  const auto span = static_cast<std::uint64_t>(stop_) - static_cast<std::uint64_t>(start_);
  return static_cast<std::size_t>(span / static_cast<std::uint64_t>(step_) + 1);
}

TimeWindow TimeIteration::window(std::size_t i) const noexcept {
  const Time t = static_cast<Time>(static_cast<std::uint64_t>(start_) +
                                   static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(step_));
  constexpr Time kMax = std::numeric_limits<Time>::max();
  const Time end = t > kMax - step_ ? kMax : t + step_;
  return TimeWindow{t, end};
}

namespace {

std::string describe(const OccupyBox& b) {
  std::ostringstream os;
  os << '(' << b.x1 << ',' << b.y1 << ',' << b.x2 << ',' << b.y2 << ')';
  return os.str();
}

// Number of whole translations along one axis, if that axis pins it down.
// Returns nullopt when delta is zero (axis does not constrain k).
std::optional<std::int64_t> steps_along(Coord from, Coord to, Coord delta) {
  if (delta == 0) return std::nullopt;
  const Coord diff = to - from;
  if (diff % delta != 0 || diff / delta < 0) return -1;
  return diff / delta;
}

}  // namespace

IterationPath::IterationPath(const OccupyBox& start_area, const OccupyBox& stop_area, Coord dx,
                             Coord dy)
    : start_(start_area.normalized()), stop_(stop_area.normalized()), dx_(dx), dy_(dy), steps_(0) {
  if (dx == 0 && dy == 0) throw InvalidArgument("iteration path translation must not be (0,0)");
  auto kx = steps_along(start_.x1, stop_.x1, dx);
  auto ky = steps_along(start_.y1, stop_.y1, dy);
  std::int64_t k = kx ? *kx : *ky;
  if (kx && ky && *kx != *ky) k = -1;
  if (k < 0 || start_.shifted(k * dx, k * dy) != stop_) {
    throw InvalidArgument("stop box " + describe(stop_) + " is not reachable from start box " +
                          describe(start_) + " by translation (" + std::to_string(dx) + "," +
                          std::to_string(dy) + ")");
  }
  steps_ = static_cast<std::size_t>(k);
}

OccupyBox IterationPath::box(std::size_t i) const noexcept {
  const auto k = static_cast<Coord>(i);
  return start_.shifted(k * dx_, k * dy_);
}

// ── Aggregators ─────────────────────────────────────────────────────────────

namespace {

std::int64_t implied_box_area(const Invariant& item) {
  if (auto* imp = item.get_if<Implies>()) {
    if (auto* box = imp->conclusion.get_if<OccupyBox>()) return calculate_area(*box);
  }
  return 0;
}

std::int64_t owner_point_count(const Invariant& inv, const std::string& owner) {
  auto* imp = inv.get_if<Implies>();
  if (!imp) return 0;
  auto* premise = imp->premise.get_if<Owner>();
  if (!premise || premise->owner != owner) return 0;
  const Invariant& c = imp->conclusion;
  if (c.is<OccupyPoint>()) return 1;
  if (auto* pair = c.get_if<And>(); pair && pair->t1.is<OccupyPoint>() && pair->t2.is<OccupyPoint>()) {
    return 2;
  }
  if (auto* list = c.get_if<BigAnd>()) {
    for (const auto& p : list->terms) {
      if (!p.is<OccupyPoint>()) return 0;
    }
    return static_cast<std::int64_t>(list->terms.size());
  }
  return 0;
}

}  // namespace

std::int64_t add_area_occupied(std::int64_t total, const Invariant& item) {
  std::int64_t area = 0;
  if (auto* pair = item.get_if<And>()) {
    area = implied_box_area(pair->t1) + implied_box_area(pair->t2);
  } else if (auto* list = item.get_if<BigAnd>()) {
    for (const auto& c : list->terms) area += implied_box_area(c);
  } else {
    area = implied_box_area(item);
  }
  return total + area;
}

std::int64_t add_owner_points(std::int64_t total, const Invariant& sub, const std::string& owner) {
  std::int64_t area = 0;
  if (auto* pair = sub.get_if<And>()) {
    area = owner_point_count(pair->t1, owner) + owner_point_count(pair->t2, owner);
  } else if (auto* list = sub.get_if<BigAnd>()) {
    for (const auto& c : list->terms) area += owner_point_count(c, owner);
  } else if (sub.is<Implies>()) {
    area = owner_point_count(sub, owner);
  }
  return total + area;
}

std::int64_t add_cloudy_area(std::int64_t total, const Invariant& sub) {
  static const std::string kCloud = "cloud";
  return add_owner_points(total, sub, kCloud);
}

Aggregator<std::int64_t> owner_points(std::string owner) {
  return [owner = std::move(owner)](std::int64_t total, const Invariant& sub) {
    return add_owner_points(total, sub, owner);
  };
}

}  // namespace bespaced
