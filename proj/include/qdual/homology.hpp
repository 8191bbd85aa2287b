#pragma once

// Minimal free resolutions, injective coresolutions by copies of E, and
// Ext / Tor dimensions. Only dimensions are exposed; the R-module structure
// of Ext and Tor is never needed by the class predicates.

#include <memory>
#include <vector>

#include "qdual/functors.hpp"

namespace qdual {

/// Prefix F_length -> ... -> F_0 -> M of a minimal free resolution, with
/// F_i = R^betti[i].
struct FreeResolution {
  Module module;
  Index length = 0;
  std::vector<Index> betti;
  /// differentials[i - 1] is d_i : R^b_i -> R^b_{i-1} as an F_p matrix of size
  /// (b_{i-1} dim R) x (b_i dim R).
  std::vector<Mat> differentials;
  /// generator_images[i - 1] column k is d_i applied to the k-th free generator
  /// of F_i, i.e. the ring-valued entries of d_i stacked in blocks of dim R.
  std::vector<Mat> generator_images;
  /// R^b_0 -> M.
  ModuleMap augmentation;

  /// Ring element in row j, column k of d_i.
  Vec entry(Index i, Index j, Index k) const;
};

FreeResolution minimal_free_resolution(const Module& m, Index length);

/// Coresolution M -> E^b_0 -> E^b_1 -> ... obtained by dualizing the minimal
/// free resolution of M^v.
struct InjectiveResolution {
  Module module;
  Index length = 0;
  std::vector<Index> betti;
  /// codifferentials[i] : E^b_i -> E^b_{i+1}, for i < length.
  std::vector<Mat> codifferentials;
  /// M -> E^b_0.
  ModuleMap coaugmentation;
};

InjectiveResolution injective_resolution(const Module& m, Index length);

/// Homology of V_0 -> V_1 -> ... -> V_k given maps[j] : V_j -> V_{j+1}.
/// Entry j is dim ker(maps[j]) - rank(maps[j-1]); the last space counts as
/// the kernel of the zero map. Throws Error(NotAComplex) with the first index
/// j where maps[j] * maps[j-1] != 0.
std::vector<Index> complex_homology(const std::vector<Mat>& maps, const PrimeField& f);

/// dim Ext^i(M, N) for 0 <= i <= bound, via Hom(F_., N).
std::vector<Index> ext_dims(const Module& m, const Module& n, Index bound);
/// dim Tor_i(M, N) for 0 <= i <= bound, via F_. (x) N.
std::vector<Index> tor_dims(const Module& m, const Module& n, Index bound);
/// dim Ext^i(M, N) via Hom(M, I^.) with I^. the injective coresolution of N.
std::vector<Index> ext_dims_via_injective(const Module& m, const Module& n, Index bound);

/// Thread-safe memo of resolution prefixes keyed by module structure.
class ResolutionCache {
 public:
  static ResolutionCache& global();

  std::shared_ptr<const FreeResolution> get(const Module& m, Index length);
  void clear();
  std::size_t size() const;

 private:
  struct Impl;
  ResolutionCache();
  std::shared_ptr<Impl> impl_;
};

}  // namespace qdual
