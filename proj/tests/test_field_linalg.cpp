#include "doctest.h"
#include "oracles.hpp"

using namespace qdual;

TEST_CASE("prime field arithmetic") {
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(65537), Error);
  CHECK_NOTHROW(PrimeField(65521));
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
    const PrimeField f(p);
    for (Entry a = 1; a < std::min<Entry>(p, 50); ++a) CHECK(f.reduce(a * f.inverse(a)) == 1);
    CHECK(f.reduce(-1) == p - 1);
    CHECK(f.reduce(f.negate(3) + 3) == 0);
  }
  try {
    PrimeField(4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("products of large entries stay reduced") {
  const PrimeField f(65521);
  const Mat a = Mat::Constant(3, 3, 65520);
  const Mat c = mul(a, a, f);
  CHECK(c(0, 0) == 3);
}

TEST_CASE("rref is reduced, idempotent and preserves row space") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const Index rows = 1 + static_cast<Index>(rng() % 4);
      const Index cols = 1 + static_cast<Index>(rng() % 4);
      const Mat a = oracle::random_matrix(rng, rows, cols, p);
      const auto e = rref(a, f);
      CHECK(e.rank == oracle::rank(a, p));
      CHECK(rank(a, f) == oracle::rank(Mat(a.transpose()), p));
      for (Index r = 0; r < e.rank; ++r) {
        const Index c = e.pivots[static_cast<std::size_t>(r)];
        CHECK(e.reduced(r, c) == 1);
        for (Index o = 0; o < rows; ++o)
          if (o != r) CHECK(e.reduced(o, c) == 0);
        if (r > 0) CHECK(c > e.pivots[static_cast<std::size_t>(r - 1)]);
      }
      CHECK(Mat(rref(e.reduced, f).reduced) == Mat(e.reduced));
      for (Index r = 0; r < e.rank; ++r) CHECK(oracle::in_span(Mat(a.transpose()), Vec(e.reduced.row(r).transpose()), p));
    }
  }
}

TEST_CASE("rank of empty and zero matrices") {
  const PrimeField f(3);
  CHECK(rank(Mat(0, 4), f) == 0);
  CHECK(rank(Mat(4, 0), f) == 0);
  CHECK(rank(Mat::Zero(3, 3), f) == 0);
  CHECK(rank(Mat::Identity(3, 3), f) == 3);
}

TEST_CASE("null space matches enumeration") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const Index rows = static_cast<Index>(rng() % 4);
      const Index cols = 1 + static_cast<Index>(rng() % 5);
      const Mat a = oracle::random_matrix(rng, rows, cols, p);
      const Subspace<Entry> k = null_space(a, f);
      CHECK(k.dim() == oracle::kernel_dim(a, p));
      if (rows > 0 && k.dim() > 0) CHECK(mul(a, k.basis, f).isZero());
      CHECK(rank(k.basis, f) == k.dim());
    }
  }
}

TEST_CASE("span membership, coordinates and complement") {
  std::mt19937_64 rng(17);
  const PrimeField f(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 3);
    const Mat cols = oracle::random_matrix(rng, n, 1 + static_cast<Index>(rng() % 3), 3);
    const Subspace<Entry> s = span(cols, f);
    CHECK(s.dim() == oracle::rank(Mat(cols.transpose()), 3));
    oracle::for_each_vector(n, 3, [&](const Vec& v) {
      const bool inside = oracle::in_span(cols, v, 3);
      CHECK(s.contains(v, f) == inside);
      if (inside) CHECK(Vec(f.reduced(s.basis * s.coordinates(v))) == Vec(f.reduced(v)));
    });
    CHECK(static_cast<Index>(s.complement().size()) == n - s.dim());
    const Mat q = s.quotient_projection(f);
    CHECK(q.rows() == n - s.dim());
    if (s.dim() > 0) CHECK(mul(q, s.basis, f).isZero());
    CHECK(rank(q, f) == n - s.dim());
  }
}

TEST_CASE("solve finds a solution exactly when one exists") {
  std::mt19937_64 rng(23);
  const PrimeField f(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat a = oracle::random_matrix(rng, 3, 3, 2);
    const Vec b = oracle::random_matrix(rng, 3, 1, 2);
    const auto x = solve(a, b, f);
    CHECK(x.has_value() == oracle::in_span(a, b, 2));
    if (x) CHECK(Vec(mul(a, *x, f)) == b);
  }
}

TEST_CASE("kronecker product follows the mixed-product rule") {
  std::mt19937_64 rng(29);
  const PrimeField f(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = oracle::random_matrix(rng, 2, 3, 5), c = oracle::random_matrix(rng, 3, 2, 5);
    const Mat b = oracle::random_matrix(rng, 2, 2, 5), d = oracle::random_matrix(rng, 2, 1, 5);
    const Mat k = kronecker(a, b, f);
    CHECK(k.rows() == 4);
    CHECK(k.cols() == 6);
    CHECK(k(2, 3) == f.reduce(a(1, 1) * b(0, 1)));
    CHECK(mul(k, kronecker(c, d, f), f) == kronecker(mul(a, c, f), mul(b, d, f), f));
  }
}

TEST_CASE("incremental span agrees with batch rank") {
  std::mt19937_64 rng(31);
  const PrimeField f(2);
  const Mat cols = oracle::random_matrix(rng, 5, 7, 2);
  IncrementalSpan<Entry> inc(5, f);
  Index inserted = 0;
  for (Index c = 0; c < cols.cols(); ++c) {
    const bool before = inc.contains(cols.col(c));
    CHECK(inc.insert(cols.col(c)) == !before);
    inserted += !before;
    CHECK(inc.dim() == rank(cols.leftCols(c + 1), f));
  }
  CHECK(inserted == rank(cols, f));
}
