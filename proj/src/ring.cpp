#include "qdual/ring.hpp"

#include <sstream>

namespace qdual {

namespace {

Vec basis_vector(Index dim, Index i) {
  Vec v = Vec::Zero(dim);
  v(i) = 1;
  return v;
}

std::vector<Mat> left_multiplications(const StructureConstants& t, const PrimeField& f) {
  std::vector<Mat> out;
  out.reserve(static_cast<std::size_t>(t.dim));
  for (Index i = 0; i < t.dim; ++i) {
    Mat l(t.dim, t.dim);
    for (Index j = 0; j < t.dim; ++j) l.col(j) = f.reduced(t.product(i, j));
    out.push_back(std::move(l));
  }
  return out;
}

Mat combine(const std::vector<Mat>& mats, const Vec& coeffs, const PrimeField& f) {
  Mat acc = Mat::Zero(mats.front().rows(), mats.front().cols());
  for (Index i = 0; i < coeffs.size(); ++i)
    if (coeffs(i) != 0) acc += coeffs(i) * mats[static_cast<std::size_t>(i)];
  return f.reduced(acc);
}

Vec product(const std::vector<Mat>& left, const Vec& a, const Vec& b, const PrimeField& f) {
  return mul(combine(left, a, f), b, f);
}

Vec power(const std::vector<Mat>& left, const Vec& unit, Vec x, std::uint64_t e,
          const PrimeField& f) {
  Vec result = unit;
  while (e > 0) {
    if (e & 1u) result = product(left, result, x, f);
    e >>= 1;
    if (e > 0) x = product(left, x, x, f);
  }
  return result;
}

/// Matrix of x -> x^(p^m) with p^m >= dim; linear because the table is
/// commutative of characteristic p.
Mat frobenius_power(const StructureConstants& t, const std::vector<Mat>& left,
                    const PrimeField& f) {
  const std::uint64_t p = f.modulus();
  Mat fr(t.dim, t.dim);
  for (Index j = 0; j < t.dim; ++j)
    fr.col(j) = power(left, f.reduced(t.unit), basis_vector(t.dim, j), p, f);
  Mat acc = fr;
  for (std::uint64_t q = p; q < static_cast<std::uint64_t>(t.dim); q *= p) acc = mul(acc, fr, f);
  return acc;
}

std::string triple(Index i, Index j, Index k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

}  // namespace

Subspace<Entry> jacobson_radical(const StructureConstants& table) {
  const PrimeField f(table.p);
  const auto left = left_multiplications(table, f);
  Subspace<Entry> nil = null_space(frobenius_power(table, left, f), f);
  for (Index i = 0; i < table.dim; ++i) {
    if (!nil.contains(mul(left[static_cast<std::size_t>(i)], nil.basis, f), f))
      throw Error(ErrorKind::NotLocal, "nilradical not closed under e_" + std::to_string(i));
  }
  return nil;
}

Locality is_local(const StructureConstants& table, const Subspace<Entry>& radical) {
  const PrimeField f(table.p);
  const auto left = left_multiplications(table, f);
  // Single Frobenius on R / N; its fixed points form a product of copies of
  // F_p, one per simple factor.
  Mat fr(table.dim, table.dim);
  for (Index j = 0; j < table.dim; ++j)
    fr.col(j) = power(left, f.reduced(table.unit), basis_vector(table.dim, j), f.modulus(), f);
  const Mat q = radical.quotient_projection(f);
  const auto comp = radical.complement();
  Mat lift = Mat::Zero(table.dim, static_cast<Index>(comp.size()));
  for (std::size_t c = 0; c < comp.size(); ++c) lift(comp[c], static_cast<Index>(c)) = 1;
  const Mat induced = mul(q, mul(fr, lift, f), f);
  const Index n = induced.rows();
  const Mat shifted = f.reduced(induced - Mat::Identity(n, n));
  Locality out;
  out.simple_factors = n - rank(shifted, f);
  out.local = out.simple_factors == 1;
  out.residue_degree = out.local ? n : 0;
  return out;
}

RingPtr Ring::validate(std::string name, const StructureConstants& raw) {
  const PrimeField f(raw.p);
  const Index d = raw.dim;
  if (d < 1) throw Error(ErrorKind::BadArgument, "ring dimension must be at least 1");
  if (raw.unit.size() != d || raw.products.size() != static_cast<std::size_t>(d * d))
    throw Error(ErrorKind::BadArgument, "structure constants have inconsistent dimensions");
  for (const Vec& c : raw.products)
    if (c.size() != d) throw Error(ErrorKind::BadArgument, "product column of wrong length");

  StructureConstants t = raw;
  for (Vec& c : t.products) c = f.reduced(c);
  t.unit = f.reduced(raw.unit);

  auto left = left_multiplications(t, f);
  const Mat by_unit = combine(left, t.unit, f);
  if (by_unit != Mat::Identity(d, d)) {
    Index bad = 0;
    while (by_unit.col(bad) == basis_vector(d, bad)) ++bad;
    throw Error(ErrorKind::BadUnit, "unit * e_" + std::to_string(bad) + " != e_" + std::to_string(bad));
  }
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j)
      if (t.product(i, j) != t.product(j, i))
        throw Error(ErrorKind::NotCommutative, "e_" + std::to_string(i) + "*e_" + std::to_string(j) +
                                                   " != e_" + std::to_string(j) + "*e_" +
                                                   std::to_string(i));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) {
        const Vec lhs = product(left, t.product(i, j), basis_vector(d, k), f);
        const Vec rhs = mul(left[static_cast<std::size_t>(i)], t.product(j, k), f);
        if (lhs != rhs) throw Error(ErrorKind::NotAssociative, "triple " + triple(i, j, k));
      }

  Subspace<Entry> radical = jacobson_radical(t);
  const Locality loc = is_local(t, radical);
  if (!loc.local)
    throw Error(ErrorKind::NotLocal, "R/N has " + std::to_string(loc.simple_factors) +
                                         " simple factors (Frobenius-fixed dimension)");

  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->name_ = std::move(name);
  ring->field_ = f;
  ring->table_ = std::move(t);
  ring->left_mul_ = std::move(left);
  ring->radical_ = std::move(radical);
  ring->residue_degree_ = loc.residue_degree;

  // Greedy algebra generators: add a basis element whenever it lies outside
  // the subalgebra generated so far.
  IncrementalSpan<Entry> sub(d, f);
  std::vector<Vec> members{ring->table_.unit};
  sub.insert(ring->table_.unit);
  for (Index i = 0; i < d; ++i) {
    const Vec e = basis_vector(d, i);
    if (sub.contains(e)) continue;
    ring->generators_.push_back(e);
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (const Vec& g : ring->generators_) {
        Vec w = ring->multiply(g, members[m]);
        if (sub.insert(w)) members.push_back(std::move(w));
      }
    }
  }
  return ring;
}

Mat Ring::multiplication_by(const Vec& r) const { return combine(left_mul_, r, field_); }

Vec Ring::multiply(const Vec& a, const Vec& b) const { return product(left_mul_, a, b, field_); }

}  // namespace qdual
