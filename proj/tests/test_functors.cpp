#include "doctest.h"
#include "oracles.hpp"

using namespace qdual;

namespace {

std::vector<Module> pool(const RingPtr& ring, Index max_dim, std::uint64_t seed) {
  auto ms = oracle::small_modules(ring, 6, max_dim, seed);
  ms.push_back(simple_module(ring));
  ms.push_back(regular_module(ring));
  ms.push_back(injective_hull_E(ring));
  return ms;
}

bool iso(const ModuleMap& f) { return is_isomorphism(f).isomorphism; }

}  // namespace

TEST_CASE("Hom and tensor dimensions match enumeration") {
  for (const auto& [id, ring] : builtin_corpus()) {
    CAPTURE(id);
    const std::int64_t p = ring->field().modulus();
    const Index cap = p == 2 ? 12 : 7;
    const auto ms = pool(ring, 4, 101);
    for (const Module& m : ms)
      for (const Module& n : ms) {
        if (m.dim() * n.dim() > cap) continue;
        CHECK(hom_module(m, n).module.dim() == oracle::hom_dim(m, n));
        CHECK(tensor_module(m, n).module.dim() == oracle::tensor_dim(m, n));
      }
  }
}

TEST_CASE("Hom elements are homomorphisms and the induced action is valid") {
  for (const auto& [id, ring] : builtin_corpus())
    for (const Module& m : pool(ring, 4, 7))
      for (const Module& n : pool(ring, 3, 8)) {
        const HomModule h = hom_module(m, n);
        for (Index j = 0; j < h.module.dim(); ++j) CHECK(ModuleMap{m, n, h.element(j)}.is_homomorphism());
        CHECK_NOTHROW(Module(ring, h.module.actions()));
        const TensorModule t = tensor_module(m, n);
        CHECK_NOTHROW(Module(ring, t.module.actions()));
      }
}

TEST_CASE("unit isomorphisms and adjunction dimensions") {
  for (const auto& [id, ring] : builtin_corpus()) {
    const Module r = regular_module(ring);
    const Module e = injective_hull_E(ring);
    for (const Module& m : pool(ring, 5, 13)) {
      CHECK(hom_module(r, m).module.dim() == m.dim());
      CHECK(tensor_module(r, m).module.dim() == m.dim());
      CHECK(tensor_module(m, r).module.dim() == m.dim());
      CHECK(hom_module(m, e).module.dim() == m.dim());
      CHECK(matlis_dual(matlis_dual(m)) == m);
      for (const Module& n : pool(ring, 3, 14))
        CHECK(hom_module(tensor_module(m, n).module, e).module.dim() ==
              hom_module(m, hom_module(n, e).module).module.dim());
    }
  }
}

TEST_CASE("natural maps are homomorphisms with the expected isomorphisms") {
  for (const auto& [id, ring] : builtin_corpus()) {
    CAPTURE(id);
    const Module r = regular_module(ring);
    const Module e = injective_hull_E(ring);
    CHECK(iso(homothety_map(r)));
    CHECK(iso(homothety_map(e)));
    for (const Module& m : pool(ring, 4, 21)) {
      const ModuleMap bid = biduality_map(m, e);
      CHECK(bid.is_homomorphism());
      CHECK(iso(bid));
      if (id != "r5") CHECK(iso(biduality_map(m, r)));
      const ModuleMap ev = evaluation_map(r, m);
      CHECK(ev.is_homomorphism());
      CHECK(iso(ev));
      const ModuleMap g = gamma_map(r, m);
      CHECK(g.is_homomorphism());
      CHECK(iso(g));
      CHECK(evaluation_map(e, m).is_homomorphism());
      CHECK(gamma_map(e, m).is_homomorphism());
      CHECK(homothety_map(m).is_homomorphism());
      for (const Module& lp : pool(ring, 3, 22)) {
        const ModuleMap theta = hom_evaluation_map(m, lp, e);
        CHECK(theta.is_homomorphism());
        CHECK(iso(theta));
      }
    }
  }
}

TEST_CASE("biduality into R fails for k over the non-Gorenstein ring") {
  const RingPtr ring = builtin_corpus().at("r5");
  const Module k = simple_module(ring);
  const Module r = regular_module(ring);
  CHECK(hom_module(k, r).module.dim() == 2);
  CHECK(hom_module(hom_module(k, r).module, r).module.dim() == 4);
  CHECK_FALSE(iso(biduality_map(k, r)));
}

TEST_CASE("Hom is functorial in both arguments") {
  const RingPtr ring = builtin_corpus().at("r5");
  for (const Module& m : pool(ring, 4, 31)) {
    const Module n = injective_hull_E(ring);
    CHECK(iso(hom_precompose(identity_map(m), n)));
    CHECK(iso(hom_postcompose(n, identity_map(m))));
    const ShortExactSequence ses = socle_sequence(m);
    const ModuleMap pre = hom_precompose(ses.quot, n);
    CHECK(pre.is_homomorphism());
    CHECK(is_isomorphism(pre).injective);
    const ModuleMap dual = dual_map(ses.sub);
    CHECK(dual.is_homomorphism());
    CHECK(is_isomorphism(dual).surjective);
  }
}

TEST_CASE("zero modules short-circuit") {
  const RingPtr ring = builtin_corpus().at("r6");
  const Module z = zero_module(ring);
  const Module e = injective_hull_E(ring);
  CHECK(hom_module(z, e).module.dim() == 0);
  CHECK(hom_module(e, z).module.dim() == 0);
  CHECK(tensor_module(z, e).module.dim() == 0);
  CHECK(to_string(NaturalMapKind::AuslanderGamma) == "gamma");
}
