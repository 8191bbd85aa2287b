#include "qdual/functors.hpp"

namespace qdual {

namespace {

Vec vectorize(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

Mat lift_of(Index ambient, const std::vector<Index>& indices) {
  Mat lift = Mat::Zero(ambient, static_cast<Index>(indices.size()));
  for (std::size_t c = 0; c < indices.size(); ++c) lift(indices[c], static_cast<Index>(c)) = 1;
  return lift;
}

}  // namespace

Mat HomModule::element(Index j) const {
  return Eigen::Map<const Mat>(space.basis.col(j).data(), target_dim, source_dim);
}

Vec HomModule::coordinates(const Mat& phi) const { return space.coordinates(vectorize(phi)); }

HomModule hom_module(const Module& m, const Module& n) {
  require_same_ring(m, n);
  const PrimeField& f = m.field();
  const Index nm = m.dim();
  const Index nn = n.dim();
  HomModule out;
  out.source_dim = nm;
  out.target_dim = nn;
  if (nm == 0 || nn == 0) {
    out.space.basis = Mat::Zero(nm * nn, 0);
    out.module = zero_module(m.ring());
    return out;
  }
  const auto& gens = m.ring()->algebra_generators();
  const Index cells = nm * nn;
  Mat equations(cells * static_cast<Index>(gens.size()), cells);
  const Mat id_m = Mat::Identity(nm, nm);
  const Mat id_n = Mat::Identity(nn, nn);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Mat a = m.action_of(gens[g]);
    const Mat b = n.action_of(gens[g]);
    // vec(phi A) - vec(B phi) with column-major vec.
    equations.middleRows(static_cast<Index>(g) * cells, cells) =
        f.reduced(kronecker(Mat(a.transpose()), id_n, f) - kronecker(id_m, b, f));
  }
  out.space = null_space(equations, f);
  std::vector<Mat> action;
  for (const Mat& b : n.actions()) {
    Mat act(out.space.dim(), out.space.dim());
    for (Index j = 0; j < out.space.dim(); ++j) act.col(j) = out.coordinates(mul(b, out.element(j), f));
    action.push_back(std::move(act));
  }
  out.module = Module::trusted(m.ring(), std::move(action));
  return out;
}

TensorModule tensor_module(const Module& m, const Module& n) {
  require_same_ring(m, n);
  const PrimeField& f = m.field();
  const Index nm = m.dim();
  const Index nn = n.dim();
  const Index cells = nm * nn;
  TensorModule out;
  out.left_dim = nm;
  out.right_dim = nn;
  if (cells == 0) {
    out.projection = Mat::Zero(0, 0);
    out.module = zero_module(m.ring());
    return out;
  }
  const auto& gens = m.ring()->algebra_generators();
  const Mat id_m = Mat::Identity(nm, nm);
  const Mat id_n = Mat::Identity(nn, nn);
  Mat relations(cells, cells * static_cast<Index>(gens.size()));
  for (std::size_t g = 0; g < gens.size(); ++g)
    relations.middleCols(static_cast<Index>(g) * cells, cells) =
        f.reduced(kronecker(m.action_of(gens[g]), id_n, f) - kronecker(id_m, n.action_of(gens[g]), f));
  const Subspace<Entry> rel = span(relations, f);
  out.projection = rel.quotient_projection(f);
  out.basis_indices = rel.complement();
  const Mat lift = lift_of(cells, out.basis_indices);
  std::vector<Mat> action;
  for (const Mat& a : m.actions())
    action.push_back(mul(out.projection, mul(kronecker(a, id_n, f), lift, f), f));
  out.module = Module::trusted(m.ring(), std::move(action));
  return out;
}

Module matlis_dual(const Module& m) {
  std::vector<Mat> action;
  for (const Mat& a : m.actions()) action.push_back(a.transpose());
  return Module::trusted(m.ring(), std::move(action));
}

ModuleMap dual_map(const ModuleMap& f) {
  return {matlis_dual(f.target), matlis_dual(f.source), f.matrix.transpose()};
}

Module injective_hull_E(const RingPtr& ring) { return matlis_dual(regular_module(ring)); }

std::string_view to_string(NaturalMapKind kind) {
  switch (kind) {
    case NaturalMapKind::Homothety: return "homothety";
    case NaturalMapKind::Biduality: return "biduality";
    case NaturalMapKind::Evaluation: return "evaluation";
    case NaturalMapKind::AuslanderGamma: return "gamma";
    case NaturalMapKind::HomEvaluation: return "hom-evaluation";
  }
  return "unknown";
}

ModuleMap homothety_map(const Module& m) {
  const HomModule h = hom_module(m, m);
  const Index d = m.ring()->dim();
  Mat matrix(h.module.dim(), d);
  for (Index i = 0; i < d; ++i) matrix.col(i) = h.coordinates(m.action(i));
  return {regular_module(m.ring()), h.module, std::move(matrix)};
}

ModuleMap biduality_map(const Module& l, const Module& m) {
  const PrimeField& f = l.field();
  const HomModule h1 = hom_module(l, m);
  const HomModule h2 = hom_module(h1.module, m);
  Mat matrix(h2.module.dim(), l.dim());
  for (Index b = 0; b < l.dim(); ++b) {
    // psi(phi_j) = phi_j(e_b).
    Mat psi(m.dim(), h1.module.dim());
    for (Index j = 0; j < h1.module.dim(); ++j) psi.col(j) = h1.element(j).col(b);
    matrix.col(b) = h2.coordinates(f.reduced(psi));
  }
  return {l, h2.module, std::move(matrix)};
}

ModuleMap evaluation_map(const Module& lp, const Module& l) {
  const HomModule h = hom_module(lp, l);
  const TensorModule t = tensor_module(h.module, lp);
  Mat matrix(l.dim(), t.module.dim());
  for (std::size_t c = 0; c < t.basis_indices.size(); ++c) {
    const Index a = t.basis_indices[c] / t.right_dim;
    const Index b = t.basis_indices[c] % t.right_dim;
    matrix.col(static_cast<Index>(c)) = h.element(a).col(b);
  }
  return {t.module, l, std::move(matrix)};
}

ModuleMap gamma_map(const Module& lp, const Module& l) {
  const TensorModule t = tensor_module(lp, l);
  const HomModule g = hom_module(lp, t.module);
  Mat matrix(g.module.dim(), l.dim());
  for (Index b = 0; b < l.dim(); ++b) {
    // psi(e_a) = projection of e_a (x) e_b.
    Mat psi(t.module.dim(), lp.dim());
    for (Index a = 0; a < lp.dim(); ++a) psi.col(a) = t.projection.col(a * l.dim() + b);
    matrix.col(b) = g.coordinates(psi);
  }
  return {l, g.module, std::move(matrix)};
}

ModuleMap hom_evaluation_map(const Module& l, const Module& lp, const Module& lpp) {
  const PrimeField& f = l.field();
  const HomModule h = hom_module(lp, lpp);
  const TensorModule s = tensor_module(l, h.module);
  const HomModule beta = hom_module(l, lp);
  const HomModule g = hom_module(beta.module, lpp);
  Mat matrix(g.module.dim(), s.module.dim());
  for (std::size_t c = 0; c < s.basis_indices.size(); ++c) {
    const Index a = s.basis_indices[c] / s.right_dim;
    const Index phi = s.basis_indices[c] % s.right_dim;
    Mat psi(lpp.dim(), beta.module.dim());
    for (Index j = 0; j < beta.module.dim(); ++j) psi.col(j) = mul(h.element(phi), beta.element(j).col(a), f);
    matrix.col(static_cast<Index>(c)) = g.coordinates(psi);
  }
  return {s.module, g.module, std::move(matrix)};
}

ModuleMap hom_precompose(const ModuleMap& fmap, const Module& m) {
  const PrimeField& f = m.field();
  const HomModule from = hom_module(fmap.target, m);
  const HomModule to = hom_module(fmap.source, m);
  Mat matrix(to.module.dim(), from.module.dim());
  for (Index j = 0; j < from.module.dim(); ++j)
    matrix.col(j) = to.coordinates(mul(from.element(j), fmap.matrix, f));
  return {from.module, to.module, std::move(matrix)};
}

ModuleMap hom_postcompose(const Module& l, const ModuleMap& gmap) {
  const PrimeField& f = l.field();
  const HomModule from = hom_module(l, gmap.source);
  const HomModule to = hom_module(l, gmap.target);
  Mat matrix(to.module.dim(), from.module.dim());
  for (Index j = 0; j < from.module.dim(); ++j)
    matrix.col(j) = to.coordinates(mul(gmap.matrix, from.element(j), f));
  return {from.module, to.module, std::move(matrix)};
}

IsoDiagnostics is_isomorphism(const ModuleMap& fmap) {
  IsoDiagnostics d;
  d.rank = rank(fmap.matrix, fmap.source.field());
  d.injective = d.rank == fmap.matrix.cols();
  d.surjective = d.rank == fmap.matrix.rows();
  d.isomorphism = d.injective && d.surjective;
  return d;
}

}  // namespace qdual
