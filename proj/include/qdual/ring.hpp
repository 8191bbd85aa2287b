#pragma once

// Finite-dimensional commutative local algebras over F_p, given by structure
// constants. Such an algebra is artinian, hence complete, so it plays the
// role of both the ring and its completion.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qdual/field_linalg.hpp"

namespace qdual {

/// Raw, unvalidated multiplication table: products[i * dim + j] is the
/// coordinate column of e_i * e_j.
struct StructureConstants {
  std::uint32_t p = 2;
  Index dim = 0;
  std::vector<Vec> products;
  Vec unit;

  const Vec& product(Index i, Index j) const {
    return products[static_cast<std::size_t>(i * dim + j)];
  }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  /// Checks primality, the unit law, commutativity, associativity and
  /// locality (in that order); throws Error naming the first violated law.
  static RingPtr validate(std::string name, const StructureConstants& raw);

  const std::string& name() const { return name_; }
  const PrimeField& field() const { return field_; }
  Index dim() const { return table_.dim; }
  const Vec& unit() const { return table_.unit; }
  const StructureConstants& table() const { return table_; }

  /// Matrix of x -> e_i * x.
  const Mat& left_multiplication(Index i) const {
    return left_mul_[static_cast<std::size_t>(i)];
  }
  /// Matrix of x -> r * x.
  Mat multiplication_by(const Vec& r) const;
  Vec multiply(const Vec& a, const Vec& b) const;

  /// Nilradical, which is the maximal ideal of a local artinian algebra.
  const Subspace<Entry>& radical() const { return radical_; }
  /// dim_{F_p} of the residue field R / m.
  Index residue_degree() const { return residue_degree_; }
  /// Ring elements generating R as an F_p-algebra (together with 1).
  const std::vector<Vec>& algebra_generators() const { return generators_; }

 private:
  Ring() : field_(2) {}

  std::string name_;
  PrimeField field_;
  StructureConstants table_;
  std::vector<Mat> left_mul_;
  Subspace<Entry> radical_;
  Index residue_degree_ = 0;
  std::vector<Vec> generators_;
};

/// Kernel of the m-fold Frobenius x -> x^(p^m) with p^m >= dim. Requires a
/// commutative associative table; throws if the result is not an ideal.
Subspace<Entry> jacobson_radical(const StructureConstants& table);

inline const Subspace<Entry>& jacobson_radical(const Ring& ring) { return ring.radical(); }

struct Locality {
  bool local = false;
  /// Number of simple factors of R / N (1 iff local).
  Index simple_factors = 0;
  Index residue_degree = 0;
};

/// Counts simple factors of R / N via the Frobenius-fixed subspace.
Locality is_local(const StructureConstants& table, const Subspace<Entry>& radical);

}  // namespace qdual
