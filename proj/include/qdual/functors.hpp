#pragma once

// Hom, tensor and Matlis duality on finite-length modules, and the natural
// transformations between them, each returned as an explicit ModuleMap.

#include <string_view>
#include <vector>

#include "qdual/module.hpp"

namespace qdual {

/// Hom_R(M, N) as the solution space of phi A_i(M) = A_i(N) phi. Elements are
/// stored as vec(phi), column-major, so basis column j reshapes to a
/// target_dim x source_dim matrix.
struct HomModule {
  Module module;
  Subspace<Entry> space;
  Index source_dim = 0;
  Index target_dim = 0;

  Mat element(Index j) const;
  /// Coordinates of an R-linear phi in the basis element(0..dim-1).
  Vec coordinates(const Mat& phi) const;
};

HomModule hom_module(const Module& m, const Module& n);

/// M (x)_R N as a quotient of the F_p-tensor product. The basis consists of
/// the pure tensors e_a (x) e_b whose index a * right_dim + b is listed in
/// basis_indices; projection maps F_p-tensors onto that basis.
struct TensorModule {
  Module module;
  Mat projection;
  std::vector<Index> basis_indices;
  Index left_dim = 0;
  Index right_dim = 0;
};

TensorModule tensor_module(const Module& m, const Module& n);

/// F_p-linear dual with transposed action; naturally Hom_R(M, E).
Module matlis_dual(const Module& m);
/// f^v : N^v -> M^v for f : M -> N.
ModuleMap dual_map(const ModuleMap& f);
/// E = (R)^v, the injective hull of the residue field.
Module injective_hull_E(const RingPtr& ring);

enum class NaturalMapKind { Homothety, Biduality, Evaluation, AuslanderGamma, HomEvaluation };
std::string_view to_string(NaturalMapKind kind);

/// chi : R -> Hom(M, M), r -> (x -> r x).
ModuleMap homothety_map(const Module& m);
/// delta : L -> Hom(Hom(L, M), M), l -> (phi -> phi(l)).
ModuleMap biduality_map(const Module& l, const Module& m);
/// xi : Hom(L', L) (x) L' -> L, phi (x) x -> phi(x).
ModuleMap evaluation_map(const Module& lp, const Module& l);
/// gamma : L -> Hom(L', L' (x) L), l -> (x -> x (x) l).
ModuleMap gamma_map(const Module& lp, const Module& l);
/// theta : L (x) Hom(L', L'') -> Hom(Hom(L, L'), L''), a (x) phi -> (beta -> phi(beta(a))).
ModuleMap hom_evaluation_map(const Module& l, const Module& lp, const Module& lpp);

/// Hom(f, M) : Hom(L', M) -> Hom(L, M) for f : L -> L'.
ModuleMap hom_precompose(const ModuleMap& f, const Module& m);
/// Hom(L, g) : Hom(L, M) -> Hom(L, M') for g : M -> M'.
ModuleMap hom_postcompose(const Module& l, const ModuleMap& g);

struct IsoDiagnostics {
  bool isomorphism = false;
  bool injective = false;
  bool surjective = false;
  Index rank = 0;
};

IsoDiagnostics is_isomorphism(const ModuleMap& f);

}  // namespace qdual
