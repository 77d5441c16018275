#include "bespaced/rewrite.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <ranges>

namespace bespaced {

namespace {

bool is_true(const Invariant& t) { return t.is<True>(); }
bool is_false(const Invariant& t) { return t.is<False>(); }

// ── IMPLIES ─────────────────────────────────────────────────────────────────

std::optional<Invariant> implies_false_premise(const Invariant& t) {
  if (auto* n = t.get_if<Implies>(); n && is_false(n->premise)) return Invariant{True{}};
  return std::nullopt;
}

std::optional<Invariant> implies_true_premise(const Invariant& t) {
  if (auto* n = t.get_if<Implies>(); n && is_true(n->premise)) return n->conclusion;
  return std::nullopt;
}

std::optional<Invariant> implies_true_conclusion(const Invariant& t) {
  if (auto* n = t.get_if<Implies>(); n && is_true(n->conclusion)) return Invariant{True{}};
  return std::nullopt;
}

// ── AND / OR ────────────────────────────────────────────────────────────────

template <class Binary, bool Left, bool Unit>
std::optional<Invariant> unit_rule(const Invariant& t) {
  // Unit constant on one side: the other side survives.
  auto* n = t.get_if<Binary>();
  if (!n) return std::nullopt;
  const Invariant& probe = Left ? n->t1 : n->t2;
  const Invariant& other = Left ? n->t2 : n->t1;
  if (Unit ? is_true(probe) : is_false(probe)) return other;
  return std::nullopt;
}

template <class Binary, bool Left, bool Zero>
std::optional<Invariant> zero_rule(const Invariant& t) {
  // Absorbing constant on one side: the whole node collapses to it.
  auto* n = t.get_if<Binary>();
  if (!n) return std::nullopt;
  const Invariant& probe = Left ? n->t1 : n->t2;
  if (Zero ? is_true(probe) : is_false(probe)) return probe;
  return std::nullopt;
}

// ── NOT ─────────────────────────────────────────────────────────────────────

std::optional<Invariant> not_true(const Invariant& t) {
  if (auto* n = t.get_if<Not>(); n && is_true(n->t)) return Invariant{False{}};
  return std::nullopt;
}

std::optional<Invariant> not_false(const Invariant& t) {
  if (auto* n = t.get_if<Not>(); n && is_false(n->t)) return Invariant{True{}};
  return std::nullopt;
}

// ── BIGAND / BIGOR ──────────────────────────────────────────────────────────

template <class Big, class Zero>
std::optional<Invariant> big_zero(const Invariant& t) {
  auto* n = t.get_if<Big>();
  if (n && std::ranges::any_of(n->terms, [](const Invariant& c) { return c.is<Zero>(); })) {
    return Invariant{Zero{}};
  }
  return std::nullopt;
}

template <class Big, class Unit>
std::optional<Invariant> big_drop_unit(const Invariant& t) {
  auto* n = t.get_if<Big>();
  if (!n || std::ranges::none_of(n->terms, [](const Invariant& c) { return c.is<Unit>(); })) {
    return std::nullopt;
  }
  std::vector<Invariant> kept;
  kept.reserve(n->terms.size());
  std::ranges::copy_if(n->terms, std::back_inserter(kept),
                       [](const Invariant& c) { return !c.is<Unit>(); });
  return Invariant{Big{std::move(kept)}};
}

template <class Big, class Unit>
std::optional<Invariant> big_empty(const Invariant& t) {
  if (auto* n = t.get_if<Big>(); n && n->terms.empty()) return Invariant{Unit{}};
  return std::nullopt;
}

template <class Big>
std::optional<Invariant> big_singleton(const Invariant& t) {
  if (auto* n = t.get_if<Big>(); n && n->terms.size() == 1) return n->terms.front();
  return std::nullopt;
}

constexpr std::array kRules = {
    RewriteRule{"implies-false-premise", &implies_false_premise},
    RewriteRule{"implies-true-premise", &implies_true_premise},
    RewriteRule{"implies-true-conclusion", &implies_true_conclusion},
    RewriteRule{"and-true-left", &unit_rule<And, true, true>},
    RewriteRule{"and-true-right", &unit_rule<And, false, true>},
    RewriteRule{"and-false-left", &zero_rule<And, true, false>},
    RewriteRule{"and-false-right", &zero_rule<And, false, false>},
    RewriteRule{"or-false-left", &unit_rule<Or, true, false>},
    RewriteRule{"or-false-right", &unit_rule<Or, false, false>},
    RewriteRule{"or-true-left", &zero_rule<Or, true, true>},
    RewriteRule{"or-true-right", &zero_rule<Or, false, true>},
    RewriteRule{"not-true", &not_true},
    RewriteRule{"not-false", &not_false},
    RewriteRule{"bigand-false", &big_zero<BigAnd, False>},
    RewriteRule{"bigand-drop-true", &big_drop_unit<BigAnd, True>},
    RewriteRule{"bigand-empty", &big_empty<BigAnd, True>},
    RewriteRule{"bigand-singleton", &big_singleton<BigAnd>},
    RewriteRule{"bigor-true", &big_zero<BigOr, True>},
    RewriteRule{"bigor-drop-false", &big_drop_unit<BigOr, False>},
    RewriteRule{"bigor-empty", &big_empty<BigOr, False>},
    RewriteRule{"bigor-singleton", &big_singleton<BigOr>},
};

std::optional<Invariant> rewrite_root(const Invariant& t) {
  for (const auto& rule : kRules) {
    if (auto r = rule.apply(t)) return r;
  }
  return std::nullopt;
}

}  // namespace

std::span<const RewriteRule> rule_table() { return kRules; }

RewriteStep apply_once(const Invariant& inv, Traversal traversal) {
  if (inv.is_atom()) return {inv, false};

  std::vector<Invariant> kids = children(inv);
  bool changed = false;
  auto visit_child = [&](Invariant& child) {
    auto step = apply_once(child, traversal);
    if (step.changed) {
      child = std::move(step.term);
      changed = true;
    }
  };
  if (traversal == Traversal::LeftToRight) {
    std::ranges::for_each(kids, visit_child);
  } else {
    std::ranges::for_each(kids | std::views::reverse, visit_child);
  }

  Invariant node = changed ? with_children(inv, std::move(kids)) : inv;
  while (auto r = rewrite_root(node)) {
    node = std::move(*r);
    changed = true;
  }
  return {std::move(node), changed};
}

SimplifyTrace simplify_traced(const Invariant& inv, Traversal traversal) {
  SimplifyTrace trace{inv, 0};
  for (;;) {
    auto step = apply_once(trace.result, traversal);
    if (!step.changed) return trace;
    trace.result = std::move(step.term);
    ++trace.rewriting_passes;
  }
}

Invariant simplify(const Invariant& inv) { return simplify_traced(inv).result; }

bool is_simplified(const Invariant& inv) {
  if (rewrite_root(inv)) return false;
  return std::ranges::all_of(children(inv), is_simplified);
}

}  // namespace bespaced
