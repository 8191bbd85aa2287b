#include "qdual/module.hpp"

#include <functional>
#include <random>
#include <string>

namespace qdual {

namespace {

Mat block_diagonal(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Mat standard_lift(Index ambient, const std::vector<Index>& indices) {
  Mat lift = Mat::Zero(ambient, static_cast<Index>(indices.size()));
  for (std::size_t c = 0; c < indices.size(); ++c) lift(indices[c], static_cast<Index>(c)) = 1;
  return lift;
}

bool closed_under_action(const Module& m, const Subspace<Entry>& s) {
  const PrimeField& f = m.field();
  for (const Vec& g : m.ring()->algebra_generators())
    if (!s.contains(mul(m.action_of(g), s.basis, f), f)) return false;
  return true;
}

}  // namespace

Module::Module(RingPtr ring, std::vector<Mat> action) : Module(trusted(std::move(ring), std::move(action))) {
  const Index d = ring_->dim();
  if (static_cast<Index>(action_.size()) != d)
    throw Error(ErrorKind::Compatibility, "expected " + std::to_string(d) + " action matrices");
  for (Mat& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_)
      throw Error(ErrorKind::Compatibility, "action matrices must all be square of the same size");
    a = field().reduced(a);
  }
  if (!unit_acts_as_identity()) throw Error(ErrorKind::Compatibility, "unit does not act as identity");
  if (auto bad = compatibility_violation())
    throw Error(ErrorKind::Compatibility, "pair (" + std::to_string(bad->first) + "," +
                                              std::to_string(bad->second) + ")");
}

Module Module::trusted(RingPtr ring, std::vector<Mat> action) {
  Module m;
  m.ring_ = std::move(ring);
  m.action_ = std::move(action);
  m.dim_ = m.action_.empty() ? 0 : m.action_.front().rows();
  return m;
}

Mat Module::action_of(const Vec& r) const {
  Mat acc = Mat::Zero(dim_, dim_);
  for (Index i = 0; i < r.size(); ++i)
    if (r(i) != 0) acc += r(i) * action_[static_cast<std::size_t>(i)];
  return field().reduced(acc);
}

bool Module::unit_acts_as_identity() const {
  return action_of(ring_->unit()) == Mat::Identity(dim_, dim_);
}

std::optional<std::pair<Index, Index>> Module::compatibility_violation() const {
  const Index d = ring_->dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = i; j < d; ++j) {
      const Mat lhs = mul(action(i), action(j), field());
      if (lhs != action_of(ring_->table().product(i, j))) return std::make_pair(i, j);
      if (i != j && lhs != mul(action(j), action(i), field())) return std::make_pair(i, j);
    }
  return std::nullopt;
}

std::size_t Module::structural_hash() const {
  std::size_t h = std::hash<const Ring*>{}(ring_.get()) ^ static_cast<std::size_t>(dim_) * 0x9e3779b97f4a7c15ull;
  for (const Mat& a : action_)
    for (Index k = 0; k < a.size(); ++k)
      h = (h ^ static_cast<std::size_t>(a.data()[k])) * 0x100000001b3ull;
  return h;
}

bool operator==(const Module& a, const Module& b) {
  return same_ring(a, b) && a.dim_ == b.dim_ && a.action_ == b.action_;
}

bool same_ring(const Module& a, const Module& b) {
  return a.ring() == b.ring() ||
         (a.ring()->name() == b.ring()->name() && a.field() == b.field() &&
          a.ring()->table().products == b.ring()->table().products &&
          a.ring()->unit() == b.ring()->unit());
}

void require_same_ring(const Module& a, const Module& b) {
  if (!same_ring(a, b))
    throw Error(ErrorKind::RingMismatch, a.ring()->name() + " vs " + b.ring()->name());
}

bool ModuleMap::is_homomorphism() const {
  if (!same_ring(source, target)) return false;
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
  const PrimeField& f = source.field();
  for (Index i = 0; i < source.ring()->dim(); ++i)
    if (mul(matrix, source.action(i), f) != mul(target.action(i), matrix, f)) return false;
  return true;
}

ModuleMap identity_map(const Module& m) { return {m, m, Mat::Identity(m.dim(), m.dim())}; }

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  return {f.source, g.target, mul(g.matrix, f.matrix, f.source.field())};
}

bool ShortExactSequence::is_exact() const {
  const PrimeField& f = middle().field();
  if (!(sub.target == quot.source)) return false;
  if (rank(sub.matrix, f) != first().dim()) return false;
  if (rank(quot.matrix, f) != last().dim()) return false;
  if (!mul(quot.matrix, sub.matrix, f).isZero()) return false;
  return middle().dim() == first().dim() + last().dim();
}

Module regular_module(const RingPtr& ring) { return free_module(ring, 1); }

Module free_module(const RingPtr& ring, Index rank_) {
  std::vector<Mat> action;
  const Index d = ring->dim();
  for (Index i = 0; i < d; ++i) {
    Mat a = Mat::Zero(d * rank_, d * rank_);
    for (Index b = 0; b < rank_; ++b) a.block(b * d, b * d, d, d) = ring->left_multiplication(i);
    action.push_back(std::move(a));
  }
  return Module::trusted(ring, std::move(action));
}

Module zero_module(const RingPtr& ring) { return free_module(ring, 0); }

Module simple_module(const RingPtr& ring) {
  return quotient_module(regular_module(ring), ring->radical()).module;
}

Module direct_sum(const Module& m, const Module& n) {
  require_same_ring(m, n);
  std::vector<Mat> action;
  for (Index i = 0; i < m.ring()->dim(); ++i) action.push_back(block_diagonal(m.action(i), n.action(i)));
  return Module::trusted(m.ring(), std::move(action));
}

Subspace<Entry> radical_submodule(const Module& m) {
  const auto& rad = m.ring()->radical();
  Mat images(m.dim(), m.dim() * rad.dim());
  for (Index j = 0; j < rad.dim(); ++j)
    images.middleCols(j * m.dim(), m.dim()) = m.action_of(rad.basis.col(j));
  return span(images, m.field());
}

Subspace<Entry> socle(const Module& m) {
  const auto& rad = m.ring()->radical();
  Mat stacked(m.dim() * rad.dim(), m.dim());
  for (Index j = 0; j < rad.dim(); ++j)
    stacked.middleRows(j * m.dim(), m.dim()) = m.action_of(rad.basis.col(j));
  return null_space(stacked, m.field());
}

Index minimal_generator_count(const Module& m) {
  return (m.dim() - radical_submodule(m).dim()) / m.ring()->residue_degree();
}

Mat minimal_generators(const Module& ambient, const Mat& spanning) {
  const PrimeField& f = ambient.field();
  const auto& rad = ambient.ring()->radical();
  IncrementalSpan<Entry> covered(ambient.dim(), f);
  for (Index j = 0; j < rad.dim(); ++j)
    covered.insert_columns(mul(ambient.action_of(rad.basis.col(j)), spanning, f));
  std::vector<Index> chosen;
  for (Index c = 0; c < spanning.cols(); ++c) {
    if (covered.contains(spanning.col(c))) continue;
    chosen.push_back(c);
    for (const Mat& a : ambient.actions()) covered.insert(mul(a, spanning.col(c), f));
  }
  Mat out(ambient.dim(), static_cast<Index>(chosen.size()));
  for (std::size_t k = 0; k < chosen.size(); ++k) out.col(static_cast<Index>(k)) = spanning.col(chosen[k]);
  return out;
}

Submodule as_submodule(const Module& m, const Subspace<Entry>& space) {
  if (!closed_under_action(m, space)) throw Error(ErrorKind::NotSubmodule, "subspace is not action-closed");
  std::vector<Mat> action;
  for (const Mat& a : m.actions()) action.push_back(space.coordinates(mul(a, space.basis, m.field())));
  Module sub = Module::trusted(m.ring(), std::move(action));
  ModuleMap inclusion{sub, m, space.basis};
  return {space, std::move(sub), std::move(inclusion)};
}

Submodule submodule_generated(const Module& m, const Mat& vectors) {
  const PrimeField& f = m.field();
  IncrementalSpan<Entry> seen(m.dim(), f);
  std::vector<Vec> members;
  for (Index c = 0; c < vectors.cols(); ++c)
    if (seen.insert(vectors.col(c))) members.push_back(f.reduced(vectors.col(c)));
  std::vector<Mat> gens;
  for (const Vec& g : m.ring()->algebra_generators()) gens.push_back(m.action_of(g));
  for (std::size_t k = 0; k < members.size(); ++k)
    for (const Mat& g : gens) {
      Vec w = mul(g, members[k], f);
      if (seen.insert(w)) members.push_back(std::move(w));
    }
  Mat cols(m.dim(), static_cast<Index>(members.size()));
  for (std::size_t k = 0; k < members.size(); ++k) cols.col(static_cast<Index>(k)) = members[k];
  return as_submodule(m, span(cols, f));
}

Quotient quotient_module(const Module& m, const Subspace<Entry>& sub) {
  if (!closed_under_action(m, sub)) throw Error(ErrorKind::NotSubmodule, "subspace is not action-closed");
  const PrimeField& f = m.field();
  const Mat q = sub.quotient_projection(f);
  const Mat lift = standard_lift(m.dim(), sub.complement());
  std::vector<Mat> action;
  for (const Mat& a : m.actions()) action.push_back(mul(q, mul(a, lift, f), f));
  Module quot = Module::trusted(m.ring(), std::move(action));
  ModuleMap projection{m, quot, q};
  return {std::move(quot), std::move(projection)};
}

ShortExactSequence ses_from_submodule(const Module& m, const Subspace<Entry>& sub) {
  Submodule s = as_submodule(m, sub);
  Quotient q = quotient_module(m, sub);
  return {std::move(s.inclusion), std::move(q.projection)};
}

Module quotient_of_free(const RingPtr& ring, Index rank_, const Mat& relations) {
  const Module free = free_module(ring, rank_);
  return quotient_module(free, submodule_generated(free, relations).space).module;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Module random_module(const RingPtr& ring, Index max_free_rank, std::uint64_t seed) {
  if (max_free_rank < 1) throw Error(ErrorKind::BadArgument, "max_free_rank must be >= 1");
  const PrimeField& f = ring->field();
  const Index d = ring->dim();
  const auto& rad = ring->radical();
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    // Raw engine output only; distribution objects differ between standard
    // libraries and would break cross-platform reproducibility.
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    auto draw = [&rng](std::uint64_t n) { return static_cast<Index>(rng() % n); };
    const Index a = 1 + draw(static_cast<std::uint64_t>(max_free_rank));
    const Module free = free_module(ring, a);
    const Index count = draw(static_cast<std::uint64_t>(a + 2));
    Mat relations(a * d, count);
    for (Index r = 0; r < count; ++r) {
      Vec v(a * d);
      for (Index k = 0; k < v.size(); ++k) v(k) = draw(f.modulus());
      // Mostly relations inside m R^a, so whole free summands are not killed.
      if (rad.dim() > 0 && draw(4) != 0) {
        Vec x = Vec::Zero(d);
        for (Index j = 0; j < rad.dim(); ++j) x += draw(f.modulus()) * rad.basis.col(j);
        v = mul(free.action_of(f.reduced(x)), v, f);
      }
      relations.col(r) = v;
    }
    const Submodule s = submodule_generated(free, relations);
    if (s.space.dim() == free.dim()) continue;
    return quotient_module(free, s.space).module;
  }
  return regular_module(ring);
}

}  // namespace qdual
