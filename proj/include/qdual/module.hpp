#pragma once

// Finite-length modules over a Ring, stored as one action matrix per ring
// basis element. Over an artinian ring finitely generated, noetherian and
// artinian all mean finite length, which every value here has by construction.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qdual/ring.hpp"

namespace qdual {

class Module {
 public:
  /// Placeholder with no ring; assign before use.
  Module() = default;
  /// Validates the unit law and A_i A_j = sum_k c_ijk A_k; throws
  /// Error(Compatibility) with the first failing pair.
  Module(RingPtr ring, std::vector<Mat> action);

  /// Skips validation. For constructions that preserve the invariants.
  static Module trusted(RingPtr ring, std::vector<Mat> action);

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  Index dim() const { return dim_; }
  const std::vector<Mat>& actions() const { return action_; }
  const Mat& action(Index i) const { return action_[static_cast<std::size_t>(i)]; }
  /// Action of an arbitrary ring element given by coordinates.
  Mat action_of(const Vec& r) const;

  std::optional<std::pair<Index, Index>> compatibility_violation() const;
  bool unit_acts_as_identity() const;

  std::size_t structural_hash() const;
  friend bool operator==(const Module& a, const Module& b);

 private:
  RingPtr ring_;
  Index dim_ = 0;
  std::vector<Mat> action_;
};

bool same_ring(const Module& a, const Module& b);
void require_same_ring(const Module& a, const Module& b);

/// R-linear map; matrix is target.dim() x source.dim().
struct ModuleMap {
  Module source;
  Module target;
  Mat matrix;

  /// matrix * A_i(source) == A_i(target) * matrix for every basis index i.
  bool is_homomorphism() const;
};

ModuleMap identity_map(const Module& m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct ShortExactSequence {
  ModuleMap sub;   // L1 -> L2, injective
  ModuleMap quot;  // L2 -> L3, surjective

  const Module& first() const { return sub.source; }
  const Module& middle() const { return sub.target; }
  const Module& last() const { return quot.target; }
  bool is_exact() const;
};

Module regular_module(const RingPtr& ring);
Module free_module(const RingPtr& ring, Index rank);
Module zero_module(const RingPtr& ring);
/// k = R / m.
Module simple_module(const RingPtr& ring);
Module direct_sum(const Module& m, const Module& n);

/// m M as a subspace of M.
Subspace<Entry> radical_submodule(const Module& m);
/// {x in M : m x = 0}.
Subspace<Entry> socle(const Module& m);
/// dim_k(M / m M), i.e. the number of generators of any minimal generating set.
Index minimal_generator_count(const Module& m);

/// Columns of `spanning` span an R-submodule K of `ambient`; returns a minimal
/// generating set of K chosen greedily from those columns.
Mat minimal_generators(const Module& ambient, const Mat& spanning);

struct Submodule {
  Subspace<Entry> space;
  Module module;
  ModuleMap inclusion;
};

/// Smallest submodule containing the given columns.
Submodule submodule_generated(const Module& m, const Mat& vectors);
/// Wraps an action-closed subspace; throws Error(NotSubmodule) otherwise.
Submodule as_submodule(const Module& m, const Subspace<Entry>& space);

struct Quotient {
  Module module;
  ModuleMap projection;
};

/// M / S on the standard vectors complementary to the pivots of S.
Quotient quotient_module(const Module& m, const Subspace<Entry>& sub);
ShortExactSequence ses_from_submodule(const Module& m, const Subspace<Entry>& sub);

/// R^rank modulo the submodule generated by `relations` (columns in R^rank).
Module quotient_of_free(const RingPtr& ring, Index rank, const Mat& relations);

/// Deterministic in `seed`: a quotient of R^a (1 <= a <= max_free_rank) by
/// a seeded set of random elements, re-drawn if the quotient is zero.
Module random_module(const RingPtr& ring, Index max_free_rank, std::uint64_t seed);

/// splitmix64 step, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qdual
