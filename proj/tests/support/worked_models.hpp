// Worked models used across the test suites: the cloud time series, the
// mountain/cloud space series and the implication-merging example.
#ifndef BESPACED_TESTS_WORKED_MODELS_HPP
#define BESPACED_TESTS_WORKED_MODELS_HPP

#include <vector>

#include "bespaced/invariant.hpp"

namespace bespaced::testing {

inline Invariant b1() { return OccupyBox{1, 1, 10, 10}; }
inline Invariant b2() { return OccupyBox{5, 5, 15, 15}; }
inline Invariant b3() { return OccupyBox{10, 10, 20, 20}; }
inline Invariant b4() { return OccupyBox{21, 21, 30, 30}; }

inline Invariant to1() { return Implies{TimePoint{1}, b1()}; }
inline Invariant to2() { return Implies{TimePoint{2}, b2()}; }
inline Invariant to3() { return Implies{TimePoint{3}, b3()}; }

/// BIGAND(to1, to2, to3): one cloud box per time point.
inline Invariant time_series() { return BigAnd{{to1(), to2(), to3()}}; }

inline Invariant mountain() { return Owner{"mountain"}; }
inline Invariant cloud() { return Owner{"cloud"}; }

/// BIGAND(s1..s4): b1, b4 owned by mountain; b2, b3 by cloud.
inline Invariant space_series() {
  return BigAnd{{Implies{mountain(), b1()}, Implies{cloud(), b2()}, Implies{cloud(), b3()},
                 Implies{mountain(), b4()}}};
}

inline OccupyBox start_box() { return {1, 1, 5, 5}; }
inline OccupyBox stop_box() { return {26, 26, 30, 30}; }

// Premises A, B and conclusions X, Y, Z of the merge example.
inline Invariant owner_a() { return Owner{"A"}; }
inline Invariant owner_b() { return Owner{"B"}; }
inline Invariant x_box() { return OccupyBox{1, 1, 2, 2}; }
inline Invariant y_box() { return OccupyBox{3, 3, 4, 4}; }
inline Invariant z_box() { return OccupyBox{5, 5, 6, 6}; }

/// BIGAND(IMPLIES(A,X), IMPLIES(B,Y), IMPLIES(A,Z))
inline Invariant merge_input() {
  return BigAnd{{Implies{owner_a(), x_box()}, Implies{owner_b(), y_box()}, Implies{owner_a(), z_box()}}};
}

/// BIGAND(IMPLIES(A, AND(X,Z)), IMPLIES(B,Y))
inline Invariant merge_expected() {
  return BigAnd{{Implies{owner_a(), And{x_box(), z_box()}}, Implies{owner_b(), y_box()}}};
}

}  // namespace bespaced::testing

#endif  // BESPACED_TESTS_WORKED_MODELS_HPP
