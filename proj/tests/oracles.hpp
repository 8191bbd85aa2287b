#pragma once

// Brute-force reference implementations by enumeration over F_p, and small
// random generators for property tests.

#include <cmath>
#include <functional>
#include <random>

#include "qdual/classes.hpp"
#include "qdual/corpus.hpp"
#include "qdual/sampling.hpp"

namespace oracle {

using qdual::Index;
using qdual::Mat;
using qdual::Module;
using qdual::Vec;

/// Calls fn on every vector of F_p^n.
inline void for_each_vector(Index n, std::int64_t p, const std::function<void(const Vec&)>& fn) {
  Vec v = Vec::Zero(n);
  while (true) {
    fn(v);
    Index i = 0;
    while (i < n && v(i) == p - 1) v(i++) = 0;
    if (i == n) return;
    ++v(i);
  }
}

inline Index log_p(std::uint64_t count, std::int64_t p) {
  Index e = 0;
  while (count > 1) {
    count /= static_cast<std::uint64_t>(p);
    ++e;
  }
  return e;
}

inline bool is_zero_mod(const Mat& m, std::int64_t p) {
  for (Index i = 0; i < m.size(); ++i)
    if (((m.data()[i] % p) + p) % p != 0) return false;
  return true;
}

/// dim ker A by counting solutions.
inline Index kernel_dim(const Mat& a, std::int64_t p) {
  std::uint64_t count = 0;
  for_each_vector(a.cols(), p, [&](const Vec& x) { count += is_zero_mod(a * x, p); });
  return log_p(count, p);
}

inline Index rank(const Mat& a, std::int64_t p) { return a.cols() - kernel_dim(a, p); }

/// Whether v is an F_p-combination of the columns.
inline bool in_span(const Mat& cols, const Vec& v, std::int64_t p) {
  bool found = false;
  for_each_vector(cols.cols(), p, [&](const Vec& c) { found = found || is_zero_mod(cols * c - v, p); });
  return found;
}

/// dim Hom_R(M, N): count matrices commuting with every basis action.
inline Index hom_dim(const Module& m, const Module& n) {
  const std::int64_t p = m.field().modulus();
  std::uint64_t count = 0;
  for_each_vector(m.dim() * n.dim(), p, [&](const Vec& v) {
    const Mat phi = Eigen::Map<const Mat>(v.data(), n.dim(), m.dim());
    bool ok = true;
    for (Index i = 0; i < m.ring()->dim() && ok; ++i) ok = is_zero_mod(phi * m.action(i) - n.action(i) * phi, p);
    count += ok;
  });
  return log_p(count, p);
}

/// dim (M (x) N) as the dimension of balanced bilinear forms M x N -> F_p.
inline Index tensor_dim(const Module& m, const Module& n) {
  const std::int64_t p = m.field().modulus();
  std::uint64_t count = 0;
  for_each_vector(m.dim() * n.dim(), p, [&](const Vec& v) {
    const Mat b = Eigen::Map<const Mat>(v.data(), m.dim(), n.dim());
    bool ok = true;
    for (Index i = 0; i < m.ring()->dim() && ok; ++i)
      ok = is_zero_mod(m.action(i).transpose() * b - b * n.action(i), p);
    count += ok;
  });
  return log_p(count, p);
}

/// dim of {x in M : r x = 0 for every r in the radical}.
inline Index socle_dim(const Module& m) {
  const std::int64_t p = m.field().modulus();
  const auto& rad = m.ring()->radical();
  std::uint64_t count = 0;
  for_each_vector(m.dim(), p, [&](const Vec& x) {
    bool ok = true;
    for (Index j = 0; j < rad.dim() && ok; ++j) ok = is_zero_mod(m.action_of(rad.basis.col(j)) * x, p);
    count += ok;
  });
  return log_p(count, p);
}

inline Mat random_matrix(std::mt19937_64& rng, Index rows, Index cols, std::int64_t p) {
  Mat m(rows, cols);
  for (Index i = 0; i < m.size(); ++i) m.data()[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
  return m;
}

/// Small modules over `ring` of dimension at most max_dim.
inline std::vector<Module> small_modules(const qdual::RingPtr& ring, Index count, Index max_dim, std::uint64_t seed) {
  qdual::SampleConfig c;
  c.count = count;
  c.max_dim = max_dim;
  c.seed = seed;
  return qdual::sample_modules(ring, c);
}

}  // namespace oracle
