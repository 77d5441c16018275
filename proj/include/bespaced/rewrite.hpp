#ifndef BESPACED_REWRITE_HPP
#define BESPACED_REWRITE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "bespaced/invariant.hpp"

namespace bespaced {

/// One simplification rule.  `apply` inspects only the root of its argument
/// and returns the rewritten term, or nullopt if the rule does not match.
/// Every rule either shrinks the term or turns an empty BIGAND/BIGOR into a
/// constant, so repeated application terminates.
struct RewriteRule {
  std::string_view name;
  std::optional<Invariant> (*apply)(const Invariant&);
};

/// The fixed Boolean simplification rules, in the order they are tried:
///
///   IMPLIES(FALSE,t) -> TRUE     IMPLIES(TRUE,t) -> t     IMPLIES(t,TRUE) -> TRUE
///   AND(TRUE,t) -> t    AND(t,TRUE) -> t    AND(FALSE,t) -> FALSE   AND(t,FALSE) -> FALSE
///   OR(FALSE,t) -> t    OR(t,FALSE) -> t    OR(TRUE,t) -> TRUE      OR(t,TRUE) -> TRUE
///   NOT(TRUE) -> FALSE  NOT(FALSE) -> TRUE
///   BIGAND: FALSE child -> FALSE; drop TRUE children; [] -> TRUE; [x] -> x
///   BIGOR:  TRUE child -> TRUE;   drop FALSE children; [] -> FALSE; [x] -> x
///
/// No contradiction or tautology detection: AND(x, NOT(x)) is left alone.
std::span<const RewriteRule> rule_table();

/// Order in which the children of a node are rewritten during a pass.
enum class Traversal { LeftToRight, RightToLeft };

struct RewriteStep {
  Invariant term;
  bool changed;
};

/// One bottom-up pass: children are rewritten first, then rules are applied at
/// the node until none matches.  If `changed` is false the returned term is
/// the input node itself.
RewriteStep apply_once(const Invariant& inv, Traversal traversal = Traversal::LeftToRight);

struct SimplifyTrace {
  Invariant result;
  /// Passes that changed the term (the confirming no-op pass is not counted).
  std::size_t rewriting_passes;
};

/// Repeats apply_once until a pass reports no change.
SimplifyTrace simplify_traced(const Invariant& inv, Traversal traversal = Traversal::LeftToRight);

/// Fixpoint of the rule table.
Invariant simplify(const Invariant& inv);

/// True iff no rule matches any subterm.
bool is_simplified(const Invariant& inv);

}  // namespace bespaced

#endif  // BESPACED_REWRITE_HPP
