#include "qdual/homology.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qdual {

namespace {

/// F_p matrix of the R-linear map R^b -> ambient sending generator k to
/// images.col(k).
Mat free_map_matrix(const Module& ambient, const Mat& images) {
  const Index d = ambient.ring()->dim();
  const PrimeField& f = ambient.field();
  Mat out(ambient.dim(), images.cols() * d);
  for (Index i = 0; i < d; ++i) {
    const Mat moved = mul(ambient.action(i), images, f);
    for (Index k = 0; k < images.cols(); ++k) out.col(k * d + i) = moved.col(k);
  }
  return out;
}

FreeResolution start_resolution(const Module& m) {
  FreeResolution res;
  res.module = m;
  res.length = 0;
  const Mat gens = minimal_generators(m, Mat::Identity(m.dim(), m.dim()));
  res.betti.push_back(gens.cols());
  res.augmentation = {free_module(m.ring(), gens.cols()), m, free_map_matrix(m, gens)};
  return res;
}

void extend_resolution(FreeResolution& res, Index length) {
  const Index d = res.module.ring()->dim();
  const PrimeField& f = res.module.field();
  while (res.length < length) {
    const Mat& previous = res.length == 0 ? res.augmentation.matrix : res.differentials.back();
    const Index prev_rank = res.betti.back();
    const Module prev_free = free_module(res.module.ring(), prev_rank);
    Mat gens;
    if (prev_rank == 0) {
      gens = Mat::Zero(0, 0);
    } else {
      const Subspace<Entry> syzygy = null_space(previous, f);
      gens = minimal_generators(prev_free, syzygy.basis);
    }
    res.betti.push_back(gens.cols());
    res.generator_images.push_back(gens);
    res.differentials.push_back(prev_rank == 0 ? Mat::Zero(0, gens.cols() * d) : free_map_matrix(prev_free, gens));
    ++res.length;
  }
}

FreeResolution truncated(const FreeResolution& full, Index length) {
  FreeResolution out = full;
  out.length = length;
  out.betti.resize(static_cast<std::size_t>(length + 1));
  out.differentials.resize(static_cast<std::size_t>(length));
  out.generator_images.resize(static_cast<std::size_t>(length));
  return out;
}

/// Block matrix with block (row_block(j,k), col_block) = act_N(ring entry);
/// used for both Hom(d, N) and d (x) N.
Mat induced_on(const FreeResolution& res, Index i, const Module& n, bool transpose_blocks) {
  const Index rows = res.betti[static_cast<std::size_t>(i - 1)];
  const Index cols = res.betti[static_cast<std::size_t>(i)];
  const Index nn = n.dim();
  Mat out = Mat::Zero(transpose_blocks ? cols * nn : rows * nn, transpose_blocks ? rows * nn : cols * nn);
  for (Index j = 0; j < rows; ++j)
    for (Index k = 0; k < cols; ++k) {
      const Vec r = res.entry(i, j, k);
      if (r.isZero()) continue;
      const Mat act = n.action_of(r);
      if (transpose_blocks)
        out.block(k * nn, j * nn, nn, nn) = act;
      else
        out.block(j * nn, k * nn, nn, nn) = act;
    }
  return out;
}

}  // namespace

Vec FreeResolution::entry(Index i, Index j, Index k) const {
  const Index d = module.ring()->dim();
  return generator_images[static_cast<std::size_t>(i - 1)].block(j * d, k, d, 1);
}

struct ResolutionCache::Impl {
  struct Slot {
    Module key;
    std::shared_ptr<const FreeResolution> value;
  };
  mutable std::shared_mutex mutex;
  std::unordered_map<std::size_t, std::vector<Slot>> table;
  std::size_t count = 0;
};

ResolutionCache::ResolutionCache() : impl_(std::make_shared<Impl>()) {}

ResolutionCache& ResolutionCache::global() {
  static ResolutionCache cache;
  return cache;
}

std::shared_ptr<const FreeResolution> ResolutionCache::get(const Module& m, Index length) {
  const std::size_t h = m.structural_hash();
  std::shared_ptr<const FreeResolution> shorter;
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->table.find(h);
    if (it != impl_->table.end())
      for (const auto& slot : it->second)
        if (slot.key == m) {
          if (slot.value->length >= length) return slot.value;
          shorter = slot.value;
        }
  }
  auto fresh = std::make_shared<FreeResolution>(shorter ? *shorter : start_resolution(m));
  extend_resolution(*fresh, length);
  std::unique_lock lock(impl_->mutex);
  auto& bucket = impl_->table[h];
  for (auto& slot : bucket)
    if (slot.key == m) {
      if (slot.value->length < fresh->length) slot.value = fresh;
      return slot.value;
    }
  bucket.push_back({m, fresh});
  ++impl_->count;
  return fresh;
}

void ResolutionCache::clear() {
  std::unique_lock lock(impl_->mutex);
  impl_->table.clear();
  impl_->count = 0;
}

std::size_t ResolutionCache::size() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->count;
}

FreeResolution minimal_free_resolution(const Module& m, Index length) {
  if (length < 0) throw Error(ErrorKind::BadArgument, "resolution length must be >= 0");
  return truncated(*ResolutionCache::global().get(m, length), length);
}

InjectiveResolution injective_resolution(const Module& m, Index length) {
  if (length < 0) throw Error(ErrorKind::BadArgument, "resolution length must be >= 0");
  const auto res = ResolutionCache::global().get(matlis_dual(m), length);
  InjectiveResolution out;
  out.module = m;
  out.length = length;
  out.betti.assign(res->betti.begin(), res->betti.begin() + length + 1);
  for (Index i = 0; i < length; ++i)
    out.codifferentials.push_back(res->differentials[static_cast<std::size_t>(i)].transpose());
  out.coaugmentation = {m, matlis_dual(res->augmentation.source), res->augmentation.matrix.transpose()};
  return out;
}

std::vector<Index> complex_homology(const std::vector<Mat>& maps, const PrimeField& f) {
  if (maps.empty()) return {};
  std::vector<Index> ranks;
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (j > 0) {
      if (maps[j].cols() != maps[j - 1].rows())
        throw Error(ErrorKind::NotAComplex, "shape mismatch at index " + std::to_string(j));
      if (maps[j].rows() > 0 && maps[j - 1].cols() > 0 && !mul(maps[j], maps[j - 1], f).isZero())
        throw Error(ErrorKind::NotAComplex, "nonzero composite at index " + std::to_string(j));
    }
    ranks.push_back(rank(maps[j], f));
  }
  std::vector<Index> out;
  for (std::size_t j = 0; j <= maps.size(); ++j) {
    const Index space = j < maps.size() ? maps[j].cols() : maps.back().rows();
    const Index kernel = space - (j < maps.size() ? ranks[j] : 0);
    out.push_back(kernel - (j > 0 ? ranks[j - 1] : 0));
  }
  return out;
}

std::vector<Index> ext_dims(const Module& m, const Module& n, Index bound) {
  require_same_ring(m, n);
  const auto res = ResolutionCache::global().get(m, bound + 1);
  std::vector<Mat> maps;
  for (Index i = 0; i <= bound; ++i) maps.push_back(induced_on(*res, i + 1, n, true));
  auto dims = complex_homology(maps, m.field());
  dims.resize(static_cast<std::size_t>(bound + 1));
  return dims;
}

std::vector<Index> tor_dims(const Module& m, const Module& n, Index bound) {
  require_same_ring(m, n);
  const auto res = ResolutionCache::global().get(m, bound + 1);
  std::vector<Mat> maps;
  for (Index i = bound + 1; i >= 1; --i) maps.push_back(induced_on(*res, i, n, false));
  const auto h = complex_homology(maps, m.field());
  // h[j] is Tor_{bound + 1 - j}; h[0] lacks the incoming boundary and is dropped.
  std::vector<Index> dims;
  for (Index i = 0; i <= bound; ++i) dims.push_back(h[static_cast<std::size_t>(bound + 1 - i)]);
  return dims;
}

std::vector<Index> ext_dims_via_injective(const Module& m, const Module& n, Index bound) {
  require_same_ring(m, n);
  const PrimeField& f = m.field();
  const Index d = m.ring()->dim();
  const InjectiveResolution inj = injective_resolution(n, bound + 1);
  const HomModule h = hom_module(m, injective_hull_E(m.ring()));
  const Index hd = h.module.dim();
  std::vector<Mat> maps;
  for (Index j = 0; j <= bound; ++j) {
    const Mat& cod = inj.codifferentials[static_cast<std::size_t>(j)];
    const Index src = inj.betti[static_cast<std::size_t>(j)];
    const Index dst = inj.betti[static_cast<std::size_t>(j + 1)];
    Mat delta = Mat::Zero(dst * hd, src * hd);
    for (Index s = 0; s < src; ++s)
      for (Index k = 0; k < dst; ++k) {
        const Mat block = cod.block(k * d, s * d, d, d);
        if (block.isZero()) continue;
        for (Index t = 0; t < hd; ++t)
          delta.block(k * hd, s * hd + t, hd, 1) = h.coordinates(mul(block, h.element(t), f));
      }
    maps.push_back(std::move(delta));
  }
  auto dims = complex_homology(maps, f);
  dims.resize(static_cast<std::size_t>(bound + 1));
  return dims;
}

}  // namespace qdual
