// ============================================================================
// bespaced/invariant.hpp — the invariant term language
// ============================================================================
//
// An Invariant is an immutable, reference-counted term.  Each constructor of
// the language is a plain aggregate (True, And, OccupyBox, ...) and an
// Invariant is implicitly constructible from any of them, so models read
// close to the way they are written down:
//
//     Invariant to1 = Implies{TimePoint{1}, OccupyBox{1, 1, 10, 10}};
//     Invariant series = BigAnd{{to1, to2, to3}};
//
// Construction enforces the value invariants of the language:
//   - boxes are stored corner-ordered (x1 <= x2, y1 <= y2, z1 <= z2);
//   - TimeInterval requires t1 <= t2;
//   - Prob requires 0 <= p <= 1.
//
// The alternatives of InvariantVariant are listed in canonical rank order, so
// the variant index doubles as the primary key of the canonical term order.
// ============================================================================

#ifndef BESPACED_INVARIANT_HPP
#define BESPACED_INVARIANT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace bespaced {

using Time = std::int64_t;
using Coord = std::int64_t;

// ── Atoms ───────────────────────────────────────────────────────────────────

struct True {
  auto operator<=>(const True&) const = default;
};
struct False {
  auto operator<=>(const False&) const = default;
};

struct TimePoint {
  Time timepoint;
  auto operator<=>(const TimePoint&) const = default;
};
struct TimeInterval {
  Time timepoint1;
  Time timepoint2;
  auto operator<=>(const TimeInterval&) const = default;
};

struct Owner {
  std::string owner;
  auto operator<=>(const Owner&) const = default;
};
struct Event {
  std::string event;
  auto operator<=>(const Event&) const = default;
};
struct ComponentState {
  std::string state;
  auto operator<=>(const ComponentState&) const = default;
};

struct Prob {
  double probability;
  bool operator==(const Prob& o) const { return probability == o.probability; }
  // Values are finite and -0.0 is stored as +0.0, so this is a total order.
  std::strong_ordering operator<=>(const Prob& o) const {
    if (probability < o.probability) return std::strong_ordering::less;
    if (o.probability < probability) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

struct OccupyPoint {
  Coord x;
  Coord y;
  auto operator<=>(const OccupyPoint&) const = default;
};

struct OccupyBox {
  Coord x1;
  Coord y1;
  Coord x2;
  Coord y2;

  /// Same box with corners swapped per axis so that x1 <= x2 and y1 <= y2.
  OccupyBox normalized() const;
  /// Translate by (dx, dy).
  OccupyBox shifted(Coord dx, Coord dy) const { return {x1 + dx, y1 + dy, x2 + dx, y2 + dy}; }

  auto operator<=>(const OccupyBox&) const = default;
};

struct OwnPoint {
  std::string owningcomponent;
  Coord x;
  Coord y;
  auto operator<=>(const OwnPoint&) const = default;
};
struct OwnBox {
  std::string owningcomponent;
  Coord x1;
  Coord y1;
  Coord x2;
  Coord y2;
  auto operator<=>(const OwnBox&) const = default;
};

struct Occupy3DPoint {
  Coord x;
  Coord y;
  Coord z;
  auto operator<=>(const Occupy3DPoint&) const = default;
};
struct Occupy3DBox {
  Coord x1;
  Coord y1;
  Coord z1;
  Coord x2;
  Coord y2;
  Coord z2;
  auto operator<=>(const Occupy3DBox&) const = default;
};
struct OccupyCircle {
  Coord x1;
  Coord y1;
  Coord radius;
  auto operator<=>(const OccupyCircle&) const = default;
};

struct OccupyNode {
  std::string node;
  auto operator<=>(const OccupyNode&) const = default;
};
struct Edge {
  std::string source;
  std::string target;
  auto operator<=>(const Edge&) const = default;
};
struct Transition {
  std::string source;
  std::string event;
  std::string target;
  auto operator<=>(const Transition&) const = default;
};

// ── Connectives (need Invariant to be complete) ─────────────────────────────

struct Not;
struct And;
struct Or;
struct Implies;
struct BigAnd;
struct BigOr;

using InvariantVariant =
    std::variant<True, False, TimePoint, TimeInterval, Owner, Event, ComponentState, Prob,
                 OccupyPoint, OccupyBox, OwnPoint, OwnBox, Occupy3DPoint, Occupy3DBox,
                 OccupyCircle, OccupyNode, Edge, Transition, Not, And, Or, Implies, BigAnd,
                 BigOr>;

/// Constructor tag; the numeric value is the rank used by the canonical order.
enum class Kind : std::uint8_t {
  True,
  False,
  TimePoint,
  TimeInterval,
  Owner,
  Event,
  ComponentState,
  Prob,
  OccupyPoint,
  OccupyBox,
  OwnPoint,
  OwnBox,
  Occupy3DPoint,
  Occupy3DBox,
  OccupyCircle,
  OccupyNode,
  Edge,
  Transition,
  Not,
  And,
  Or,
  Implies,
  BigAnd,
  BigOr,
};

inline constexpr std::size_t kKindCount = std::variant_size_v<InvariantVariant>;

/// Constructor name as written in models ("IMPLIES", "OccupyBox", ...).
std::string_view kind_name(Kind kind);

namespace detail {
struct Node;

template <class T, class Variant>
struct is_alternative;
template <class T, class... Ts>
struct is_alternative<T, std::variant<Ts...>>
    : std::bool_constant<(std::is_same_v<T, Ts> || ...)> {};
}  // namespace detail

template <class T>
concept InvariantAlternative = detail::is_alternative<std::remove_cvref_t<T>, InvariantVariant>::value;

class Invariant {
 public:
  /// TRUE.
  Invariant();

  template <InvariantAlternative T>
  Invariant(T value);  // NOLINT(google-explicit-constructor)

  Kind kind() const noexcept;

  template <InvariantAlternative T>
  bool is() const noexcept;

  template <InvariantAlternative T>
  const T& as() const;

  template <InvariantAlternative T>
  const T* get_if() const noexcept;

  template <class Visitor>
  decltype(auto) visit(Visitor&& visitor) const;

  const InvariantVariant& variant() const noexcept;

  /// Number of constructor nodes in the term.
  std::size_t size() const noexcept;
  /// Longest root-to-leaf path, counted in nodes.
  std::size_t depth() const noexcept;

  bool is_atom() const noexcept { return kind() < Kind::Not; }

  /// True iff both handles refer to the same node (cheap identity check).
  bool same_node(const Invariant& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Invariant& a, const Invariant& b);
  friend std::strong_ordering operator<=>(const Invariant& a, const Invariant& b);

 private:
  std::shared_ptr<const detail::Node> node_;

  static std::shared_ptr<const detail::Node> make_node(InvariantVariant value);
};

struct Not {
  Invariant t;
  auto operator<=>(const Not&) const = default;
};
struct And {
  Invariant t1;
  Invariant t2;
  auto operator<=>(const And&) const = default;
};
struct Or {
  Invariant t1;
  Invariant t2;
  auto operator<=>(const Or&) const = default;
};
struct Implies {
  Invariant premise;
  Invariant conclusion;
  auto operator<=>(const Implies&) const = default;
};
struct BigAnd {
  std::vector<Invariant> terms;
  auto operator<=>(const BigAnd&) const = default;
};
struct BigOr {
  std::vector<Invariant> terms;
  auto operator<=>(const BigOr&) const = default;
};

namespace detail {
struct Node {
  InvariantVariant value;
  std::size_t size;
  std::size_t depth;
};

OccupyBox checked(OccupyBox v);
OwnBox checked(OwnBox v);
Occupy3DBox checked(Occupy3DBox v);
TimeInterval checked(TimeInterval v);
Prob checked(Prob v);
template <class T>
T checked(T v) {
  return v;
}
}  // namespace detail

template <InvariantAlternative T>
Invariant::Invariant(T value) : node_(make_node(detail::checked(std::move(value)))) {}

template <InvariantAlternative T>
bool Invariant::is() const noexcept {
  return std::holds_alternative<T>(variant());
}

template <InvariantAlternative T>
const T& Invariant::as() const {
  return std::get<T>(variant());
}

template <InvariantAlternative T>
const T* Invariant::get_if() const noexcept {
  return std::get_if<T>(&variant());
}

template <class Visitor>
decltype(auto) Invariant::visit(Visitor&& visitor) const {
  return std::visit(std::forward<Visitor>(visitor), variant());
}

/// Canonical total order: constructor rank first, then fields left to right.
std::strong_ordering compare(const Invariant& a, const Invariant& b);

/// Corner-ordered OccupyBox term.
Invariant mk_box(Coord x1, Coord y1, Coord x2, Coord y2);

/// Immediate sub-invariants in field order (empty for atoms).
std::vector<Invariant> children(const Invariant& inv);

/// Rebuild a connective with new children, keeping the constructor.  The
/// child count must match children(inv); atoms are returned unchanged.
Invariant with_children(const Invariant& inv, std::vector<Invariant> kids);

/// Prints the constructor syntax, e.g. IMPLIES(TimePoint(1), OccupyBox(1,1,10,10)).
std::ostream& operator<<(std::ostream& os, const Invariant& inv);
std::string to_string(const Invariant& inv);

}  // namespace bespaced

#endif  // BESPACED_INVARIANT_HPP
