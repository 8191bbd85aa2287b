#include "qdual/sampling.hpp"

#include <random>

#include "qdual/functors.hpp"

namespace qdual {

namespace {

constexpr std::uint64_t kTriesPerSample = 64;

Module bounded_module(const RingPtr& ring, const SampleConfig& config, std::uint64_t stream) {
  for (std::uint64_t attempt = 0; attempt < kTriesPerSample; ++attempt) {
    Module m = random_module(ring, config.max_free_rank, mix_seed(config.seed, stream * kTriesPerSample + attempt));
    if (m.dim() > 0 && m.dim() <= config.max_dim) return m;
  }
  return simple_module(ring);
}

}  // namespace

std::vector<Module> sample_modules(const RingPtr& ring, const SampleConfig& config) {
  std::vector<Module> out;
  for (Index i = 0; i < config.count; ++i) out.push_back(bounded_module(ring, config, static_cast<std::uint64_t>(i)));
  return out;
}

std::vector<ShortExactSequence> sample_sequences(const RingPtr& ring, const SampleConfig& config) {
  std::vector<ShortExactSequence> out;
  const PrimeField& f = ring->field();
  for (Index i = 0; i < config.count; ++i) {
    const Module middle = bounded_module(ring, config, (1ull << 32) + static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(mix_seed(config.seed ^ 0x5e5u, static_cast<std::uint64_t>(i)));
    const Index gens = 1 + static_cast<Index>(rng() % 2);
    Mat vectors(middle.dim(), gens);
    for (Index c = 0; c < gens; ++c)
      for (Index r = 0; r < middle.dim(); ++r) vectors(r, c) = static_cast<Entry>(rng() % f.modulus());
    out.push_back(ses_from_submodule(middle, submodule_generated(middle, vectors).space));
  }
  return out;
}

ShortExactSequence split_free_sequence(const RingPtr& ring, Index a, Index b) {
  const Index d = ring->dim();
  const Module left = free_module(ring, a);
  const Module mid = free_module(ring, a + b);
  const Module right = free_module(ring, b);
  ModuleMap sub{left, mid, Mat::Identity(mid.dim(), left.dim())};
  Mat proj = Mat::Zero(right.dim(), mid.dim());
  proj.rightCols(b * d) = Mat::Identity(b * d, b * d);
  ModuleMap quot{mid, right, proj};
  return {std::move(sub), std::move(quot)};
}

ShortExactSequence socle_sequence(const Module& m) { return ses_from_submodule(m, socle(m)); }

}  // namespace qdual
