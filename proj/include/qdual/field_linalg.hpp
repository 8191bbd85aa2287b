#pragma once

// Exact dense linear algebra over a prime field F_p.
//
// Matrices are plain Eigen integer matrices whose entries are kept reduced to
// [0, p). The modulus lives in a PrimeField value passed alongside, so every
// Eigen expression (block, transpose, product, ...) stays usable; products are
// formed in 64-bit arithmetic and reduced once at the end.

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdual/error.hpp"

namespace qdual {

using Index = Eigen::Index;

template <std::integral Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <std::integral Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <std::integral Scalar>
using RowMajorMatrixX =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Entry = std::int64_t;
using Mat = MatrixX<Entry>;
using Vec = VectorX<Entry>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

class PrimeField {
 public:
  /// p < 2^16 keeps every pairwise product below 2^32, so sums of up to 2^31
  /// products fit in an int64 accumulator before reduction.
  static constexpr std::uint32_t kModulusLimit = 1u << 16;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= kModulusLimit || !is_prime(p))
      throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p));
  }

  std::uint32_t modulus() const noexcept { return p_; }

  template <std::integral S>
  S reduce(S x) const noexcept {
    S r = x % static_cast<S>(p_);
    return r < 0 ? r + static_cast<S>(p_) : r;
  }

  template <std::integral S>
  S negate(S x) const noexcept {
    return x == 0 ? 0 : static_cast<S>(p_) - x;
  }

  template <std::integral S>
  S inverse(S a) const {
    // Fermat: a^(p-2).
    std::uint64_t base = static_cast<std::uint64_t>(reduce(a));
    if (base == 0) throw Error(ErrorKind::BadArgument, "inverse of zero");
    std::uint64_t result = 1;
    for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1u) result = result * base % p_;
      base = base * base % p_;
    }
    return static_cast<S>(result);
  }

  template <typename Derived>
  auto reduced(const Eigen::MatrixBase<Derived>& a) const {
    using S = typename Derived::Scalar;
    const S p = static_cast<S>(p_);
    return a.unaryExpr([p](S x) {
      S r = x % p;
      return r < 0 ? r + p : r;
    });
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Product of two reduced matrices, reduced.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> mul(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b,
                                       const PrimeField& f) {
  MatrixX<typename DerivedA::Scalar> prod = a * b;
  return f.reduced(prod);
}

template <std::integral Scalar>
struct RowEchelon {
  MatrixX<Scalar> reduced;
  Index rank = 0;
  std::vector<Index> pivots;
};

/// Reduced row-echelon form. Pivots are taken leftmost-first, using the
/// topmost eligible row, so the result is a deterministic function of `a`.
template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& a,
                                          const PrimeField& f) {
  using S = typename Derived::Scalar;
  RowMajorMatrixX<S> m = f.reduced(a);
  const Index rows = m.rows();
  const Index cols = m.cols();
  const S p = static_cast<S>(f.modulus());
  RowEchelon<S> out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = r;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) m.row(sel).swap(m.row(r));
    const Index width = cols - c;
    if (m(r, c) != 1) {
      const S inv = f.inverse(m(r, c));
      m.row(r).tail(width) =
          (m.row(r).tail(width) * inv).unaryExpr([p](S x) { return x % p; });
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const S factor = p - m(i, c);
      m.row(i).tail(width) = (m.row(i).tail(width) + factor * m.row(r).tail(width))
                                 .unaryExpr([p](S x) { return x % p; });
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = m;
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a, const PrimeField& f) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return rref(a, f).rank;
}

/// A subspace of F_p^n held in "pivot form": `basis` has one column per
/// dimension and the rows listed in `pivots` form an identity block. The
/// coordinates of a member vector are therefore just its pivot entries.
template <std::integral Scalar>
struct Subspace {
  MatrixX<Scalar> basis;
  std::vector<Index> pivots;

  Index ambient_dim() const { return basis.rows(); }
  Index dim() const { return basis.cols(); }

  template <typename Derived>
  MatrixX<Scalar> coordinates(const Eigen::MatrixBase<Derived>& vs) const {
    MatrixX<Scalar> out(dim(), vs.cols());
    for (Index j = 0; j < dim(); ++j) out.row(j) = vs.row(pivots[j]);
    return out;
  }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& vs, const PrimeField& f) const {
    if (vs.cols() == 0) return true;
    MatrixX<Scalar> back = mul(basis, coordinates(vs), f);
    return back == f.reduced(vs).eval();
  }

  /// Indices outside the pivot set, ascending; the standard vectors at these
  /// indices span a complement.
  std::vector<Index> complement() const {
    std::vector<bool> taken(static_cast<std::size_t>(ambient_dim()), false);
    for (Index p : pivots) taken[static_cast<std::size_t>(p)] = true;
    std::vector<Index> out;
    for (Index i = 0; i < ambient_dim(); ++i)
      if (!taken[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
  }

  /// Matrix of the quotient map F_p^n -> F_p^n / this, in the basis of
  /// complement() standard vectors.
  MatrixX<Scalar> quotient_projection(const PrimeField& f) const {
    const std::vector<Index> comp = complement();
    const Index n = ambient_dim();
    MatrixX<Scalar> q = MatrixX<Scalar>::Zero(static_cast<Index>(comp.size()), n);
    for (std::size_t r = 0; r < comp.size(); ++r) {
      const Index row = static_cast<Index>(r);
      q(row, comp[r]) = 1;
      for (Index j = 0; j < dim(); ++j)
        q(row, pivots[j]) = f.reduce(q(row, pivots[j]) - basis(comp[r], j));
    }
    return q;
  }
};

/// Column space of `columns`.
template <typename Derived>
Subspace<typename Derived::Scalar> span(const Eigen::MatrixBase<Derived>& columns,
                                        const PrimeField& f) {
  using S = typename Derived::Scalar;
  Subspace<S> out;
  if (columns.cols() == 0 || columns.rows() == 0) {
    out.basis = MatrixX<S>::Zero(columns.rows(), 0);
    return out;
  }
  auto e = rref(columns.transpose(), f);
  out.basis = e.reduced.topRows(e.rank).transpose();
  out.pivots = std::move(e.pivots);
  return out;
}

/// Null space; basis vectors are indexed by the free columns of rref(a).
template <typename Derived>
Subspace<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& a,
                                              const PrimeField& f) {
  using S = typename Derived::Scalar;
  const Index n = a.cols();
  Subspace<S> out;
  if (a.rows() == 0) {
    out.basis = MatrixX<S>::Identity(n, n);
    for (Index i = 0; i < n; ++i) out.pivots.push_back(i);
    return out;
  }
  const auto e = rref(a, f);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) out.pivots.push_back(c);
  out.basis = MatrixX<S>::Zero(n, static_cast<Index>(out.pivots.size()));
  for (std::size_t j = 0; j < out.pivots.size(); ++j) {
    const Index col = static_cast<Index>(j);
    const Index free = out.pivots[j];
    out.basis(free, col) = 1;
    for (Index r = 0; r < e.rank; ++r)
      out.basis(e.pivots[static_cast<std::size_t>(r)], col) = f.negate(e.reduced(r, free));
  }
  return out;
}

template <typename Derived>
MatrixX<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& a,
                                               const PrimeField& f) {
  return null_space(a, f).basis;
}

/// Some x with a * x = b, or nullopt. Free variables are set to zero.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
    const PrimeField& f) {
  using S = typename DerivedA::Scalar;
  if (a.rows() != b.rows())
    throw Error(ErrorKind::BadArgument, "solve: dimension mismatch");
  MatrixX<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = rref(aug, f);
  VectorX<S> x = VectorX<S>::Zero(a.cols());
  for (Index r = 0; r < e.rank; ++r) {
    const Index c = e.pivots[static_cast<std::size_t>(r)];
    if (c == a.cols()) return std::nullopt;
    x(c) = e.reduced(r, a.cols());
  }
  return x;
}

/// Kronecker product; block (i, j) of the result is a(i, j) * b, i.e. the
/// basis pair (i, k) maps to index i * b.rows() + k.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> kronecker(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b,
                                             const PrimeField& f) {
  using S = typename DerivedA::Scalar;
  const Index m = b.rows();
  const Index n = b.cols();
  MatrixX<S> out = MatrixX<S>::Zero(a.rows() * m, a.cols() * n);
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) out.block(i * m, j * n, m, n) = f.reduced(a(i, j) * b);
  return out;
}

/// Growing span with cheap membership tests. Rows are kept so that each has
/// a leading 1 at its pivot and zeros at the pivots of earlier rows.
template <std::integral Scalar>
class IncrementalSpan {
 public:
  IncrementalSpan(Index ambient, const PrimeField& f) : n_(ambient), f_(f) {}

  Index dim() const { return static_cast<Index>(rows_.size()); }

  VectorX<Scalar> residual(VectorX<Scalar> v) const {
    const Scalar p = static_cast<Scalar>(f_.modulus());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar c = v(pivots_[k]);
      if (c == 0) continue;
      v = (v + (p - c) * rows_[k]).unaryExpr([p](Scalar x) { return x % p; });
    }
    return v;
  }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    return residual(f_.reduced(v)).isZero();
  }

  /// Returns true iff v enlarged the span.
  template <typename Derived>
  bool insert(const Eigen::MatrixBase<Derived>& v) {
    VectorX<Scalar> r = residual(f_.reduced(v));
    Index lead = 0;
    while (lead < n_ && r(lead) == 0) ++lead;
    if (lead == n_) return false;
    const Scalar inv = f_.inverse(r(lead));
    const Scalar p = static_cast<Scalar>(f_.modulus());
    r = (r * inv).unaryExpr([p](Scalar x) { return x % p; });
    rows_.push_back(std::move(r));
    pivots_.push_back(lead);
    return true;
  }

  template <typename Derived>
  void insert_columns(const Eigen::MatrixBase<Derived>& vs) {
    for (Index j = 0; j < vs.cols(); ++j) insert(vs.col(j));
  }

 private:
  Index n_;
  PrimeField f_;
  std::vector<VectorX<Scalar>> rows_;
  std::vector<Index> pivots_;
};

}  // namespace qdual
