#include "qdual/classes.hpp"

#include <sstream>

namespace qdual {

namespace {

std::string join(const std::vector<Index>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

Condition passed_condition(std::string label, std::string witness) {
  return {std::move(label), Verdict::Pass, std::move(witness)};
}

Condition iso_condition(std::string label, const ModuleMap& f) {
  const IsoDiagnostics d = is_isomorphism(f);
  std::ostringstream os;
  os << "dims " << f.source.dim() << "->" << f.target.dim() << " rank " << d.rank
     << " injective=" << (d.injective ? "yes" : "no") << " surjective=" << (d.surjective ? "yes" : "no");
  return {std::move(label), d.isomorphism ? Verdict::Pass : Verdict::Fail, os.str()};
}

/// Entries 1..bound of `dims` must vanish; the witness names the first
/// nonzero degree.
Condition vanishing_condition(std::string label, const std::vector<Index>& dims) {
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] != 0)
      return {std::move(label), Verdict::Fail,
              "degree " + std::to_string(i) + " has dim " + std::to_string(dims[i]) + " [" + join(dims) + "]"};
  return passed_condition(std::move(label), "[" + join(dims) + "]");
}

Condition iff_condition(std::string label, const CheckReport& lhs, const CheckReport& rhs) {
  const bool agree = lhs.verdict == rhs.verdict;
  std::string witness = lhs.name + "=" + std::string(to_string(lhs.verdict)) + " " + rhs.name + "=" +
                        std::string(to_string(rhs.verdict));
  return {std::move(label), agree ? Verdict::Pass : Verdict::Fail, std::move(witness)};
}

CheckReport make_report(std::string name, Index bound, std::vector<Condition> conditions) {
  CheckReport r{std::move(name), Verdict::Pass, bound, std::move(conditions)};
  r.settle();
  return r;
}

CheckReport dualizing_predicate(std::string name, std::string finiteness, const Module& c, Index bound) {
  std::vector<Condition> conds;
  conds.push_back(passed_condition(std::move(finiteness), "automatic: finite length"));
  conds.push_back(iso_condition("homothety-iso", homothety_map(c)));
  conds.push_back(vanishing_condition("ext-self-vanishing", ext_dims(c, c, bound)));
  return make_report(std::move(name), bound, std::move(conds));
}

void require_quasidualizing(const Module& t, Index bound) {
  const CheckReport q = is_quasidualizing(t, bound);
  if (!q.passed()) throw Error(ErrorKind::NotQuasidualizing, "parameter module fails at bound " + std::to_string(bound));
}

CheckReport renamed(CheckReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Vacuous: return "VACUOUS";
  }
  return "FAIL";
}

void CheckReport::settle() {
  bool any_fail = false;
  bool all_vacuous = true;
  for (const auto& c : conditions) {
    any_fail = any_fail || c.verdict == Verdict::Fail;
    all_vacuous = all_vacuous && c.verdict == Verdict::Vacuous;
  }
  verdict = any_fail ? Verdict::Fail : all_vacuous ? Verdict::Vacuous : Verdict::Pass;
}

CheckReport is_semidualizing(const Module& c, Index bound) {
  return dualizing_predicate("semidualizing", "finitely-generated", c, bound);
}

CheckReport is_quasidualizing(const Module& t, Index bound) {
  return dualizing_predicate("quasidualizing", "artinian", t, bound);
}

CheckReport is_derived_reflexive(const Module& l, const Module& m, Index bound) {
  require_same_ring(l, m);
  std::vector<Condition> conds;
  conds.push_back(iso_condition("biduality-iso", biduality_map(l, m)));
  conds.push_back(vanishing_condition("ext-L-M-vanishing", ext_dims(l, m, bound)));
  const HomModule h = hom_module(l, m);
  conds.push_back(vanishing_condition("ext-HomLM-M-vanishing", ext_dims(h.module, m, bound)));
  return make_report("derived-reflexive", bound, std::move(conds));
}

CheckReport in_bass_class(const Module& l, const Module& lp, Index bound) {
  require_same_ring(l, lp);
  std::vector<Condition> conds;
  conds.push_back(iso_condition("evaluation-iso", evaluation_map(lp, l)));
  conds.push_back(vanishing_condition("ext-Lp-L-vanishing", ext_dims(lp, l, bound)));
  const HomModule h = hom_module(lp, l);
  conds.push_back(vanishing_condition("tor-Lp-HomLpL-vanishing", tor_dims(lp, h.module, bound)));
  return make_report("bass", bound, std::move(conds));
}

CheckReport in_auslander_class(const Module& l, const Module& lp, Index bound) {
  require_same_ring(l, lp);
  std::vector<Condition> conds;
  conds.push_back(iso_condition("gamma-iso", gamma_map(lp, l)));
  conds.push_back(vanishing_condition("tor-Lp-L-vanishing", tor_dims(lp, l, bound)));
  const TensorModule t = tensor_module(lp, l);
  conds.push_back(vanishing_condition("ext-Lp-LpL-vanishing", ext_dims(lp, t.module, bound)));
  return make_report("auslander", bound, std::move(conds));
}

CheckReport check_duality_swap(const Module& x, Index bound) {
  const CheckReport sd = is_semidualizing(x, bound);
  const CheckReport qd = is_quasidualizing(x, bound);
  if (!sd.passed() && !qd.passed())
    return make_report("duality-swap", bound, {{"hypothesis", Verdict::Vacuous, "neither semidualizing nor quasidualizing"}});
  const Module dual = matlis_dual(x);
  const Module e = injective_hull_E(x.ring());
  std::vector<Condition> conds;
  if (sd.passed()) {
    const CheckReport q = is_quasidualizing(dual, bound);
    conds.push_back({"semidualizing=>dual-quasidualizing", q.verdict, "dual " + std::string(to_string(q.verdict))});
  } else {
    conds.push_back({"semidualizing=>dual-quasidualizing", Verdict::Vacuous, "not semidualizing"});
  }
  if (qd.passed()) {
    const CheckReport s = is_semidualizing(dual, bound);
    conds.push_back({"quasidualizing=>dual-semidualizing", s.verdict, "dual " + std::string(to_string(s.verdict))});
  } else {
    conds.push_back({"quasidualizing=>dual-semidualizing", Verdict::Vacuous, "not quasidualizing"});
  }
  conds.push_back(iso_condition("involutive-biduality-E", biduality_map(x, e)));
  return make_report("duality-swap", bound, std::move(conds));
}

CheckReport check_theorem_B(const Module& t, const Module& m, Index bound) {
  require_same_ring(t, m);
  require_quasidualizing(t, bound);
  const Module td = matlis_dual(t);
  const Module md = matlis_dual(m);
  std::vector<Condition> conds;
  conds.push_back(iff_condition("(i)B_Tv(M)<=>G_T(Mv)", renamed(in_bass_class(m, td, bound), "B_Tv(M)"),
                                renamed(is_derived_reflexive(md, t, bound), "G_T(Mv)")));
  conds.push_back(iff_condition("(ii)G_T(M)<=>B_Tv(Mv)", renamed(is_derived_reflexive(m, t, bound), "G_T(M)"),
                                renamed(in_bass_class(md, td, bound), "B_Tv(Mv)")));
  conds.push_back(iff_condition("(iii)B_T(M)<=>G_Tv(Mv)", renamed(in_bass_class(m, t, bound), "B_T(M)"),
                                renamed(is_derived_reflexive(md, td, bound), "G_Tv(Mv)")));
  conds.push_back(iff_condition("(iv)G_Tv(M)<=>B_T(Mv)", renamed(is_derived_reflexive(m, td, bound), "G_Tv(M)"),
                                renamed(in_bass_class(md, t, bound), "B_T(Mv)")));
  return make_report("theorem-b", bound, std::move(conds));
}

CheckReport check_class_equality(const Module& t, const Module& m, Index bound) {
  require_same_ring(t, m);
  require_quasidualizing(t, bound);
  const Module td = matlis_dual(t);
  std::vector<Condition> conds;
  conds.push_back(iff_condition("G_Tv=A_T", renamed(is_derived_reflexive(m, td, bound), "G_Tv(M)"),
                                renamed(in_auslander_class(m, t, bound), "A_T(M)")));
  conds.push_back(iff_condition("G_T=A_Tv", renamed(is_derived_reflexive(m, t, bound), "G_T(M)"),
                                renamed(in_auslander_class(m, td, bound), "A_Tv(M)")));
  return make_report("class-equality", bound, std::move(conds));
}

CheckReport check_two_of_three(const Module& t, const ShortExactSequence& ses, Index bound) {
  if (bound < 2) throw Error(ErrorKind::BadArgument, "two-of-three needs bound >= 2");
  require_same_ring(t, ses.middle());
  require_quasidualizing(t, bound);
  const Module* terms[3] = {&ses.first(), &ses.middle(), &ses.last()};
  Verdict member[3];
  int inside = 0;
  std::string summary;
  for (int j = 0; j < 3; ++j) {
    member[j] = is_derived_reflexive(*terms[j], t, bound).verdict;
    inside += member[j] == Verdict::Pass;
    summary += (j ? " L" : "L") + std::to_string(j + 1) + "=" + std::string(to_string(member[j]));
  }
  if (inside < 2) return make_report("two-of-three", bound, {{"hypothesis", Verdict::Vacuous, summary}});
  std::vector<Condition> conds;
  if (inside == 3) conds.push_back(passed_condition("all-three-members", summary));
  for (int j = 0; j < 3; ++j) {
    if (member[j] == Verdict::Pass) continue;
    const CheckReport third = is_derived_reflexive(*terms[j], t, bound - 1);
    conds.push_back({"L" + std::to_string(j + 1) + "-in-G_T@" + std::to_string(bound - 1), third.verdict, summary});
  }
  return make_report("two-of-three", bound, std::move(conds));
}

CheckReport check_hom_faithful(const Module& l, const Module& t) {
  require_same_ring(l, t);
  const Index h = hom_module(l, t).module.dim();
  const std::string witness = "dim L=" + std::to_string(l.dim()) + " dim Hom(L,T)=" + std::to_string(h);
  const bool ok = l.dim() == 0 ? h == 0 : h > 0;
  return make_report("hom-faithful", 0, {{l.dim() == 0 ? "hom-of-zero" : "hom-nonzero", ok ? Verdict::Pass : Verdict::Fail, witness}});
}

CheckReport probe_tensor_faithful(const Module& l, const Module& t) {
  require_same_ring(l, t);
  const Index n = tensor_module(t, l).module.dim();
  const std::string witness = "dim L=" + std::to_string(l.dim()) + " dim T(x)L=" + std::to_string(n);
  const bool ok = l.dim() == 0 ? n == 0 : n > 0;
  return make_report("tensor-faithful-probe", 0, {{l.dim() == 0 ? "tensor-of-zero" : "tensor-nonzero", ok ? Verdict::Pass : Verdict::Fail, witness}});
}

CheckReport check_artinian_collapse(const RingPtr& ring, const std::vector<Module>& candidates, Index bound) {
  std::vector<Condition> conds;
  const CheckReport e = is_semidualizing(injective_hull_E(ring), bound);
  conds.push_back({"E-semidualizing", e.verdict, ""});
  const CheckReport r = is_quasidualizing(regular_module(ring), bound);
  conds.push_back({"R-quasidualizing", r.verdict, ""});
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const CheckReport s = is_semidualizing(candidates[j], bound);
    const CheckReport q = is_quasidualizing(candidates[j], bound);
    conds.push_back({"candidate-" + std::to_string(j) + "-agree", s.verdict == q.verdict ? Verdict::Pass : Verdict::Fail,
                     "semidualizing=" + std::string(to_string(s.verdict)) +
                         " quasidualizing=" + std::string(to_string(q.verdict))});
  }
  for (auto& c : conds)
    if (c.witness.empty()) c.witness = c.verdict == Verdict::Pass ? "holds" : "violated";
  return make_report("artinian-collapse", bound, std::move(conds));
}

namespace {

Condition dims_agree(std::string label, const std::vector<Index>& a, const std::vector<Index>& b) {
  return {std::move(label), a == b ? Verdict::Pass : Verdict::Fail, "[" + join(a) + "] vs [" + join(b) + "]"};
}

}  // namespace

CheckReport check_matlis_swap(const Module& m, const Module& n, Index bound) {
  require_same_ring(m, n);
  const Module mv = matlis_dual(m);
  const Module nv = matlis_dual(n);
  std::vector<Condition> conds;
  conds.push_back(dims_agree("Ext(M,N)=Ext(Nv,Mv)", ext_dims(m, n, bound), ext_dims(nv, mv, bound)));
  conds.push_back(dims_agree("Ext(M,Nv)=Ext(N,Mv)", ext_dims(m, nv, bound), ext_dims(n, mv, bound)));
  return make_report("matlis-swap", bound, std::move(conds));
}

CheckReport check_ext_cross_oracle(const Module& m, const Module& n, Index bound) {
  return make_report("ext-cross-oracle", bound,
                     {dims_agree("projective=injective", ext_dims(m, n, bound), ext_dims_via_injective(m, n, bound))});
}

CheckReport check_ext_tor_duality(const Module& m, const Module& n, Index bound) {
  return make_report("ext-tor-duality", bound,
                     {dims_agree("Tor(M,N)=Ext(M,Nv)", tor_dims(m, n, bound), ext_dims(m, matlis_dual(n), bound))});
}

}  // namespace qdual
