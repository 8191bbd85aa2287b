#pragma once

// Bounded checkers for semidualizing / quasidualizing modules, derived
// reflexivity, Bass and Auslander classes, and one verifier per theorem.
//
// "Ext^i = 0 for all i > 0" is checked for 1 <= i <= bound. Every theorem
// verifier compares both sides at the same bound; the underlying
// isomorphisms are degreewise, so bounded agreement is exact.
//
// All modules here have finite length, so the full / Matlis-reflexive /
// artinian / noetherian variants of each class coincide and are reported
// simply as G, A and B.

#include <string>
#include <vector>

#include "qdual/homology.hpp"

namespace qdual {

enum class Verdict { Pass, Fail, Vacuous };
std::string_view to_string(Verdict v);

struct Condition {
  std::string label;
  Verdict verdict = Verdict::Pass;
  std::string witness;
};

struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::Pass;
  Index bound = 0;
  std::vector<Condition> conditions;

  bool passed() const { return verdict == Verdict::Pass; }
  /// FAIL if any condition fails, VACUOUS if every condition is vacuous (or
  /// there are none), PASS otherwise.
  void settle();
};

inline constexpr Index kDefaultBound = 4;

CheckReport is_semidualizing(const Module& c, Index bound = kDefaultBound);
CheckReport is_quasidualizing(const Module& t, Index bound = kDefaultBound);
/// L in G_M.
CheckReport is_derived_reflexive(const Module& l, const Module& m, Index bound = kDefaultBound);
/// L in B_{L'}.
CheckReport in_bass_class(const Module& l, const Module& lp, Index bound = kDefaultBound);
/// L in A_{L'}.
CheckReport in_auslander_class(const Module& l, const Module& lp, Index bound = kDefaultBound);

/// Semidualizing X has quasidualizing dual and vice versa; delta_X^E is an
/// isomorphism. VACUOUS when X is neither.
CheckReport check_duality_swap(const Module& x, Index bound = kDefaultBound);

/// The four Matlis-duality correspondences between Bass classes and derived
/// reflexive classes for a quasidualizing T. Throws NotQuasidualizing.
CheckReport check_theorem_B(const Module& t, const Module& m, Index bound = kDefaultBound);

/// G_{T^v} = A_T and G_T = A_{T^v}, evaluated on M. Throws NotQuasidualizing.
CheckReport check_class_equality(const Module& t, const Module& m, Index bound = kDefaultBound);

/// Two-of-three for G_T along a short exact sequence: if two terms are in
/// G_T at `bound`, the third must be at bound - 1. Requires bound >= 2.
CheckReport check_two_of_three(const Module& t, const ShortExactSequence& ses, Index bound = kDefaultBound);

/// Hom(L, T) = 0 only for L = 0.
CheckReport check_hom_faithful(const Module& l, const Module& t);

/// Experimental: records whether T (x) L != 0 for L != 0. A FAIL is a
/// finding, never a defect.
CheckReport probe_tensor_faithful(const Module& l, const Module& t);

/// E semidualizing, R quasidualizing, and equal verdicts of the two
/// predicates on every candidate.
CheckReport check_artinian_collapse(const RingPtr& ring, const std::vector<Module>& candidates,
                                    Index bound = kDefaultBound);

/// Ext swap under Matlis duality: Ext^i(M, N) ~ Ext^i(N^v, M^v) and
/// Ext^i(M, N^v) ~ Ext^i(N, M^v), dimensions for 0 <= i <= bound.
CheckReport check_matlis_swap(const Module& m, const Module& n, Index bound = kDefaultBound);
/// ext_dims against ext_dims_via_injective.
CheckReport check_ext_cross_oracle(const Module& m, const Module& n, Index bound = kDefaultBound);
/// dim Tor_i(M, N) = dim Ext^i(M, N^v).
CheckReport check_ext_tor_duality(const Module& m, const Module& n, Index bound = kDefaultBound);

}  // namespace qdual
