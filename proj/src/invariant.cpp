#include "bespaced/invariant.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>

#include "bespaced/error.hpp"
#include "overloaded.hpp"

namespace bespaced {

namespace {

constexpr std::array<std::string_view, kKindCount> kKindNames = {
    "TRUE",         "FALSE",         "TimePoint",     "TimeInterval", "Owner",
    "Event",        "ComponentState", "Prob",         "OccupyPoint",  "OccupyBox",
    "OwnPoint",     "OwnBox",        "Occupy3DPoint", "Occupy3DBox",  "OccupyCircle",
    "OccupyNode",   "Edge",          "Transition",    "NOT",          "AND",
    "OR",           "IMPLIES",       "BIGAND",        "BIGOR",
};

using detail::Overloaded;

template <class T>
void order_pair(T& lo, T& hi) {
  if (hi < lo) std::swap(lo, hi);
}

}  // namespace

std::string_view kind_name(Kind kind) { return kKindNames.at(static_cast<std::size_t>(kind)); }

OccupyBox OccupyBox::normalized() const {
  OccupyBox b = *this;
  order_pair(b.x1, b.x2);
  order_pair(b.y1, b.y2);
  return b;
}

namespace detail {

OccupyBox checked(OccupyBox v) { return v.normalized(); }

OwnBox checked(OwnBox v) {
  order_pair(v.x1, v.x2);
  order_pair(v.y1, v.y2);
  return v;
}

Occupy3DBox checked(Occupy3DBox v) {
  order_pair(v.x1, v.x2);
  order_pair(v.y1, v.y2);
  order_pair(v.z1, v.z2);
  return v;
}

TimeInterval checked(TimeInterval v) {
  if (v.timepoint1 > v.timepoint2) {
    throw RangeError("TimeInterval(" + std::to_string(v.timepoint1) + ", " +
                     std::to_string(v.timepoint2) + "): timepoint1 > timepoint2");
  }
  return v;
}

Prob checked(Prob v) {
  // Written this way round so NaN is rejected too.
  if (!(v.probability >= 0.0 && v.probability <= 1.0)) {
    std::ostringstream os;
    os << "Prob(" << v.probability << "): probability outside [0, 1]";
    throw RangeError(os.str());
  }
  if (v.probability == 0.0) v.probability = 0.0;  // fold -0.0 into +0.0
  return v;
}

}  // namespace detail

std::shared_ptr<const detail::Node> Invariant::make_node(InvariantVariant value) {
  std::size_t size = 1;
  std::size_t depth = 0;
  auto account = [&](const Invariant& child) {
    size += child.size();
    depth = std::max(depth, child.depth());
  };
  std::visit(Overloaded{
                 [&](const Not& n) { account(n.t); },
                 [&](const And& n) { account(n.t1), account(n.t2); },
                 [&](const Or& n) { account(n.t1), account(n.t2); },
                 [&](const Implies& n) { account(n.premise), account(n.conclusion); },
                 [&](const BigAnd& n) { std::ranges::for_each(n.terms, account); },
                 [&](const BigOr& n) { std::ranges::for_each(n.terms, account); },
                 [](const auto&) {},
             },
             value);
  return std::make_shared<const detail::Node>(detail::Node{std::move(value), size, depth + 1});
}

Invariant::Invariant() {
  static const std::shared_ptr<const detail::Node> kTrue = make_node(True{});
  node_ = kTrue;
}

Kind Invariant::kind() const noexcept { return static_cast<Kind>(node_->value.index()); }

const InvariantVariant& Invariant::variant() const noexcept { return node_->value; }

std::size_t Invariant::size() const noexcept { return node_->size; }

std::size_t Invariant::depth() const noexcept { return node_->depth; }

bool operator==(const Invariant& a, const Invariant& b) {
  if (a.node_ == b.node_) return true;
  if (a.size() != b.size()) return false;
  return a.variant() == b.variant();
}

std::strong_ordering operator<=>(const Invariant& a, const Invariant& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& va = a.variant();
  const auto& vb = b.variant();
  if (va.index() != vb.index()) return va.index() <=> vb.index();
  return std::visit(
      [&vb](const auto& x) -> std::strong_ordering {
        using T = std::remove_cvref_t<decltype(x)>;
        return x <=> std::get<T>(vb);
      },
      va);
}

std::strong_ordering compare(const Invariant& a, const Invariant& b) { return a <=> b; }

Invariant mk_box(Coord x1, Coord y1, Coord x2, Coord y2) { return OccupyBox{x1, y1, x2, y2}; }

std::vector<Invariant> children(const Invariant& inv) {
  return inv.visit(Overloaded{
      [](const Not& n) { return std::vector<Invariant>{n.t}; },
      [](const And& n) { return std::vector<Invariant>{n.t1, n.t2}; },
      [](const Or& n) { return std::vector<Invariant>{n.t1, n.t2}; },
      [](const Implies& n) { return std::vector<Invariant>{n.premise, n.conclusion}; },
      [](const BigAnd& n) { return n.terms; },
      [](const BigOr& n) { return n.terms; },
      [](const auto&) { return std::vector<Invariant>{}; },
  });
}

Invariant with_children(const Invariant& inv, std::vector<Invariant> kids) {
  auto need = [&kids](std::size_t n) {
    if (kids.size() != n) throw InvalidArgument("with_children: wrong child count");
  };
  switch (inv.kind()) {
    case Kind::Not:
      need(1);
      return Not{std::move(kids[0])};
    case Kind::And:
      need(2);
      return And{std::move(kids[0]), std::move(kids[1])};
    case Kind::Or:
      need(2);
      return Or{std::move(kids[0]), std::move(kids[1])};
    case Kind::Implies:
      need(2);
      return Implies{std::move(kids[0]), std::move(kids[1])};
    case Kind::BigAnd:
      return BigAnd{std::move(kids)};
    case Kind::BigOr:
      return BigOr{std::move(kids)};
    default:
      need(0);
      return inv;
  }
}

namespace {

void quote(std::ostream& os, const std::string& s) { os << '"' << s << '"'; }

void print_list(std::ostream& os, const std::vector<Invariant>& terms) {
  os << '(';
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << ", ";
    os << terms[i];
  }
  os << ')';
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Invariant& inv) {
  os << kind_name(inv.kind());
  inv.visit(Overloaded{
      [&](const True&) { os << "()"; },
      [&](const False&) { os << "()"; },
      [&](const TimePoint& a) { os << '(' << a.timepoint << ')'; },
      [&](const TimeInterval& a) { os << '(' << a.timepoint1 << ", " << a.timepoint2 << ')'; },
      [&](const Owner& a) { os << '(', quote(os, a.owner), os << ')'; },
      [&](const Event& a) { os << '(', quote(os, a.event), os << ')'; },
      [&](const ComponentState& a) { os << '(', quote(os, a.state), os << ')'; },
      [&](const Prob& a) { os << '(' << a.probability << ')'; },
      [&](const OccupyPoint& a) { os << '(' << a.x << ',' << a.y << ')'; },
      [&](const OccupyBox& a) {
        os << '(' << a.x1 << ',' << a.y1 << ',' << a.x2 << ',' << a.y2 << ')';
      },
      [&](const OwnPoint& a) {
        os << '(', quote(os, a.owningcomponent), os << ',' << a.x << ',' << a.y << ')';
      },
      [&](const OwnBox& a) {
        os << '(', quote(os, a.owningcomponent);
        os << ',' << a.x1 << ',' << a.y1 << ',' << a.x2 << ',' << a.y2 << ')';
      },
      [&](const Occupy3DPoint& a) { os << '(' << a.x << ',' << a.y << ',' << a.z << ')'; },
      [&](const Occupy3DBox& a) {
        os << '(' << a.x1 << ',' << a.y1 << ',' << a.z1 << ',' << a.x2 << ',' << a.y2 << ','
           << a.z2 << ')';
      },
      [&](const OccupyCircle& a) { os << '(' << a.x1 << ',' << a.y1 << ',' << a.radius << ')'; },
      [&](const OccupyNode& a) { os << '(', quote(os, a.node), os << ')'; },
      [&](const Edge& a) {
        os << '(', quote(os, a.source), os << ", ", quote(os, a.target), os << ')';
      },
      [&](const Transition& a) {
        os << '(', quote(os, a.source), os << ", ", quote(os, a.event), os << ", ";
        quote(os, a.target), os << ')';
      },
      [&](const Not& n) { os << '(' << n.t << ')'; },
      [&](const And& n) { os << '(' << n.t1 << ", " << n.t2 << ')'; },
      [&](const Or& n) { os << '(' << n.t1 << ", " << n.t2 << ')'; },
      [&](const Implies& n) { os << '(' << n.premise << ", " << n.conclusion << ')'; },
      [&](const BigAnd& n) { print_list(os, n.terms); },
      [&](const BigOr& n) { print_list(os, n.terms); },
  });
  return os;
}

std::string to_string(const Invariant& inv) {
  std::ostringstream os;
  os << inv;
  return os.str();
}

}  // namespace bespaced
