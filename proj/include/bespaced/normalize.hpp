// ============================================================================
// bespaced/normalize.hpp — invariant processors and normalization pipelines
// ============================================================================
//
// A processor is a total function Invariant -> Invariant.  Normalizers are
// built by composing processors, so a model can be put into the canonical
// form its use case needs:
//
//   normalize_std            simplify, deduplicate, order, flatten, order;
//                            repeated until nothing changes
//   normalize_owner_occupied normalize_std, merge_owners, normalize_std
//
// After normalize_std, invariants that differ only in the order or
// multiplicity of BIGAND/BIGOR children, or in how nested conjunctions and
// disjunctions are bracketed, are structurally equal.
// ============================================================================

#ifndef BESPACED_NORMALIZE_HPP
#define BESPACED_NORMALIZE_HPP

#include <functional>

#include "bespaced/invariant.hpp"

namespace bespaced {

using InvariantProcessor = std::function<Invariant(const Invariant&)>;

/// outer ∘ inner: inner runs first.
InvariantProcessor compose(InvariantProcessor outer, InvariantProcessor inner);

/// Splices nested conjunctions into one BIGAND and nested disjunctions into
/// one BIGOR, preserving left-to-right order: AND(AND(a,b),c) becomes
/// BIGAND(a,b,c).  An AND/OR with no conjunctive/disjunctive child is left
/// binary.  Applies below NOT and IMPLIES too.
Invariant flatten(const Invariant& inv);

/// Sorts the children of every BIGAND/BIGOR (and the two sides of every
/// AND/OR) by the canonical order.
Invariant order(const Invariant& inv);

/// Drops structurally repeated children of every BIGAND/BIGOR, keeping the
/// first occurrence; AND(x,x) and OR(x,x) become x.
Invariant deduplicate(const Invariant& inv);

Invariant normalize_std(const Invariant& inv);

/// Expects a BIGAND of IMPLIES (a lone IMPLIES counts as a one-element
/// BIGAND).  Implications with structurally equal premises are merged into
/// one whose conclusion is the single conclusion, AND of two, or BIGAND of
/// three or more, in first-occurrence order.  Groups keep the position of
/// their first member.  The result is always a BIGAND.
///
///   BIGAND(IMPLIES(A,X), IMPLIES(B,Y), IMPLIES(A,Z))
///     -> BIGAND(IMPLIES(A, AND(X,Z)), IMPLIES(B,Y))
///
/// Throws ShapeError on any other shape.
Invariant merge_owners(const Invariant& inv);

/// normalize_std, then merge_owners, then normalize_std again so the merged
/// conclusions are themselves in normal form.  Propagates merge_owners'
/// ShapeError.
Invariant normalize_owner_occupied(const Invariant& inv);

}  // namespace bespaced

#endif  // BESPACED_NORMALIZE_HPP
