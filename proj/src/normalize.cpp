#include "bespaced/normalize.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "bespaced/error.hpp"
#include "bespaced/rewrite.hpp"

namespace bespaced {

InvariantProcessor compose(InvariantProcessor outer, InvariantProcessor inner) {
  return [outer = std::move(outer), inner = std::move(inner)](const Invariant& inv) {
    return outer(inner(inv));
  };
}

namespace {

// Rebuilds inv with `fn` applied to each child; keeps the node if nothing changed.
template <class Fn>
Invariant map_children(const Invariant& inv, Fn&& fn) {
  if (inv.is_atom()) return inv;
  std::vector<Invariant> kids = children(inv);
  bool changed = false;
  for (auto& kid : kids) {
    Invariant next = fn(kid);
    if (!next.same_node(kid)) {
      kid = std::move(next);
      changed = true;
    }
  }
  return changed ? with_children(inv, std::move(kids)) : inv;
}

bool is_conjunction(const Invariant& t) { return t.is<And>() || t.is<BigAnd>(); }
bool is_disjunction(const Invariant& t) { return t.is<Or>() || t.is<BigOr>(); }

template <class Big>
Invariant splice(std::vector<Invariant> kids, bool (*same_kind)(const Invariant&)) {
  std::vector<Invariant> flat;
  flat.reserve(kids.size());
  for (auto& kid : kids) {
    if (same_kind(kid)) {
      const auto& inner = children(kid);
      flat.insert(flat.end(), inner.begin(), inner.end());
    } else {
      flat.push_back(std::move(kid));
    }
  }
  return Big{std::move(flat)};
}

// Post-order rewrite: children first, then `fn` on the rebuilt node.
template <class Fn>
Invariant bottom_up(const Invariant& inv, Fn&& fn) {
  return fn(map_children(inv, [&](const Invariant& c) { return bottom_up(c, fn); }));
}

std::optional<std::vector<Invariant>> sorted_terms(const std::vector<Invariant>& terms) {
  if (std::ranges::is_sorted(terms)) return std::nullopt;
  std::vector<Invariant> sorted = terms;
  std::ranges::sort(sorted);
  return sorted;
}

std::optional<std::vector<Invariant>> unique_terms(const std::vector<Invariant>& terms) {
  std::set<Invariant> seen;
  std::vector<Invariant> unique;
  unique.reserve(terms.size());
  for (const auto& t : terms) {
    if (seen.insert(t).second) unique.push_back(t);
  }
  if (unique.size() == terms.size()) return std::nullopt;
  return unique;
}

}  // namespace

Invariant flatten(const Invariant& inv) {
  return bottom_up(inv, [](const Invariant& node) -> Invariant {
    if (is_conjunction(node)) {
      const auto kids = children(node);
      return std::ranges::any_of(kids, is_conjunction) ? splice<BigAnd>(kids, is_conjunction) : node;
    }
    if (is_disjunction(node)) {
      const auto kids = children(node);
      return std::ranges::any_of(kids, is_disjunction) ? splice<BigOr>(kids, is_disjunction) : node;
    }
    return node;
  });
}

Invariant order(const Invariant& inv) {
  return bottom_up(inv, [](const Invariant& node) -> Invariant {
    if (auto* n = node.get_if<BigAnd>()) {
      if (auto t = sorted_terms(n->terms)) return BigAnd{std::move(*t)};
    } else if (auto* n = node.get_if<BigOr>()) {
      if (auto t = sorted_terms(n->terms)) return BigOr{std::move(*t)};
    } else if (auto* n = node.get_if<And>(); n && n->t2 < n->t1) {
      return And{n->t2, n->t1};
    } else if (auto* n = node.get_if<Or>(); n && n->t2 < n->t1) {
      return Or{n->t2, n->t1};
    }
    return node;
  });
}

Invariant deduplicate(const Invariant& inv) {
  return bottom_up(inv, [](const Invariant& node) -> Invariant {
    if (auto* n = node.get_if<BigAnd>()) {
      if (auto t = unique_terms(n->terms)) return BigAnd{std::move(*t)};
    } else if (auto* n = node.get_if<BigOr>()) {
      if (auto t = unique_terms(n->terms)) return BigOr{std::move(*t)};
    } else if (auto* n = node.get_if<And>(); n && n->t1 == n->t2) {
      return n->t1;
    } else if (auto* n = node.get_if<Or>(); n && n->t1 == n->t2) {
      return n->t1;
    }
    return node;
  });
}

Invariant normalize_std(const Invariant& inv) {
  // The composition as a whole is iterated: flattening can expose duplicates
  // and singletons that the earlier stages of the same round have already
  // passed over.  Every round ends sorted, so a later round only changes the
  // term if simplify, deduplicate or flatten shrinks it.
  static const InvariantProcessor round =
      compose(order, compose(flatten, compose(order, compose(deduplicate, simplify))));
  Invariant current = inv;
  for (;;) {
    Invariant next = round(current);
    if (next == current) return next;
    current = std::move(next);
  }
}

Invariant merge_owners(const Invariant& inv) {
  std::vector<Invariant> implications;
  if (inv.is<Implies>()) {
    implications.push_back(inv);
  } else if (auto* list = inv.get_if<BigAnd>()) {
    implications = list->terms;
  } else {
    throw ShapeError("merge_owners expects a BIGAND of IMPLIES, got " +
                     std::string(kind_name(inv.kind())));
  }

  std::vector<std::pair<Invariant, std::vector<Invariant>>> groups;
  for (const auto& item : implications) {
    auto* imp = item.get_if<Implies>();
    if (!imp) {
      throw ShapeError("merge_owners expects a BIGAND of IMPLIES, found a " +
                       std::string(kind_name(item.kind())) + " conjunct");
    }
    auto it = std::ranges::find_if(groups, [&](const auto& g) { return g.first == imp->premise; });
    if (it == groups.end()) {
      groups.emplace_back(imp->premise, std::vector<Invariant>{imp->conclusion});
    } else {
      it->second.push_back(imp->conclusion);
    }
  }

  std::vector<Invariant> merged;
  merged.reserve(groups.size());
  for (auto& [premise, conclusions] : groups) {
    Invariant conclusion = conclusions.size() == 1   ? conclusions.front()
                           : conclusions.size() == 2 ? Invariant{And{conclusions[0], conclusions[1]}}
                                                     : Invariant{BigAnd{std::move(conclusions)}};
    merged.push_back(Implies{premise, std::move(conclusion)});
  }
  return BigAnd{std::move(merged)};
}

Invariant normalize_owner_occupied(const Invariant& inv) {
  static const InvariantProcessor pipeline =
      compose(normalize_std, compose(merge_owners, normalize_std));
  return pipeline(inv);
}

}  // namespace bespaced
