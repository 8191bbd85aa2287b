// Acceptance criteria, one line per criterion. Exit status is nonzero if any
// criterion fails.

#include <functional>
#include <iostream>
#include <sstream>

#include "qdual/cli.hpp"
#include "qdual/corpus.hpp"
#include "qdual/sampling.hpp"

using namespace qdual;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

const std::vector<std::string> kAll = {"r1", "r2", "r3", "r4", "r5", "r6"};
const std::vector<std::string> kFat = {"r3", "r4", "r5", "r6"};

RingPtr ring(const std::string& id) { return builtin_corpus().at(id); }

std::vector<Module> samples(const std::string& id, Index count) {
  SampleConfig c;
  c.count = count;
  c.max_dim = 6;
  c.seed = mix_seed(7, static_cast<std::uint64_t>(id.back() - '0'));
  return sample_modules(ring(id), c);
}

std::string first_failure(const CheckReport& r) {
  for (const auto& c : r.conditions)
    if (c.verdict == Verdict::Fail) return r.name + ":" + c.label + " " + c.witness;
  return r.name;
}

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

Outcome quasidualizing_examples() {
  Outcome o;
  for (const auto& id : kAll) {
    require(o, is_quasidualizing(injective_hull_E(ring(id)), 4).passed(), id + ": E not quasidualizing");
    require(o, is_semidualizing(regular_module(ring(id)), 4).passed(), id + ": R not semidualizing");
  }
  if (o.ok) o.detail = "6 rings";
  return o;
}

Outcome artinian_collapse() {
  Outcome o;
  for (const auto& id : kAll) {
    const RingPtr r = ring(id);
    const CheckReport rep =
        check_artinian_collapse(r, {regular_module(r), injective_hull_E(r), simple_module(r)}, 4);
    require(o, rep.passed(), id + ": " + first_failure(rep));
  }
  if (o.ok) o.detail = "6 rings x {R, E, k}";
  return o;
}

/// Runs `check` on seeded pairs (M_i, M_{i+1}) over r3..r6.
Outcome pairwise(const std::function<CheckReport(const Module&, const Module&)>& check) {
  Outcome o;
  Index pairs = 0;
  for (const auto& id : kFat) {
    const auto ms = samples(id, 15);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const CheckReport rep = check(ms[i], ms[(i + 1) % ms.size()]);
      require(o, rep.passed(), id + " pair " + std::to_string(i) + ": " + first_failure(rep));
      ++pairs;
    }
  }
  require(o, pairs >= 50, "only " + std::to_string(pairs) + " pairs");
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, degrees 0..4";
  return o;
}

Outcome duality_swap() {
  Outcome o;
  for (const auto& id : kAll)
    for (const Module& x : {regular_module(ring(id)), injective_hull_E(ring(id))}) {
      const CheckReport rep = check_duality_swap(x, 4);
      require(o, rep.passed(), id + ": " + first_failure(rep));
    }
  if (o.ok) o.detail = "6 rings x {R, E}";
  return o;
}

Outcome theorem_b() {
  Outcome o;
  const RingPtr r5 = ring("r5");
  const auto ms = samples("r5", 30);
  Index both_false = 0;
  for (const Module& t : {regular_module(r5), injective_hull_E(r5)})
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const CheckReport rep = check_theorem_B(t, ms[i], 4);
      require(o, rep.passed(), "M" + std::to_string(i) + ": " + first_failure(rep));
      bool any = false;
      for (const auto& c : rep.conditions) any = any || c.witness.find("=PASS") == std::string::npos;
      both_false += any;
    }
  require(o, both_false >= 5, "only " + std::to_string(both_false) + " both-false samples");
  if (o.ok) o.detail = std::to_string(ms.size()) + " modules x {R, E}, " + std::to_string(both_false) + " cases false on both sides";
  return o;
}

Outcome class_equality() {
  Outcome o;
  const RingPtr r5 = ring("r5");
  const auto ms = samples("r5", 30);
  for (const Module& t : {regular_module(r5), injective_hull_E(r5)})
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const CheckReport rep = check_class_equality(t, ms[i], 4);
      require(o, rep.passed(), "M" + std::to_string(i) + ": " + first_failure(rep));
    }
  if (o.ok) o.detail = std::to_string(ms.size()) + " modules x {R, E}";
  return o;
}

Outcome two_of_three() {
  Outcome o;
  const RingPtr r5 = ring("r5");
  SampleConfig c;
  c.count = 30;
  c.seed = 7;
  const Module r = regular_module(r5);
  const Module e = injective_hull_E(r5);
  std::vector<std::pair<Module, ShortExactSequence>> cases;
  for (const auto& ses : sample_sequences(r5, c)) cases.emplace_back(r, ses);
  for (Index a = 1; a <= 2; ++a)
    for (Index b = 0; b <= 2; ++b) cases.emplace_back(r, split_free_sequence(r5, a, b));
  cases.emplace_back(e, socle_sequence(e));
  Index nonvacuous = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const CheckReport rep = check_two_of_three(cases[i].first, cases[i].second, 4);
    require(o, rep.verdict != Verdict::Fail, "sequence " + std::to_string(i) + ": " + first_failure(rep));
    nonvacuous += rep.verdict == Verdict::Pass;
  }
  require(o, nonvacuous >= 5, "only " + std::to_string(nonvacuous) + " non-vacuous");
  if (o.ok) o.detail = std::to_string(cases.size()) + " sequences, " + std::to_string(nonvacuous) + " non-vacuous";
  return o;
}

Outcome faithfulness() {
  Outcome o;
  Index checked = 0;
  for (const auto& id : kFat)
    for (const Module& t : {regular_module(ring(id)), injective_hull_E(ring(id))}) {
      require(o, check_hom_faithful(zero_module(ring(id)), t).passed(), id + ": Hom(0,T) != 0");
      for (const Module& l : samples(id, 30)) {
        const CheckReport rep = check_hom_faithful(l, t);
        require(o, rep.passed(), id + ": " + first_failure(rep));
        ++checked;
      }
    }
  if (o.ok) o.detail = std::to_string(checked) + " nonzero modules";
  return o;
}

Outcome spot_values() {
  Outcome o;
  const std::vector<Index> betti = minimal_free_resolution(simple_module(ring("r5")), 6).betti;
  require(o, betti == std::vector<Index>{1, 2, 4, 8, 16, 32, 64}, "Betti of k over r5");
  const Module k3 = simple_module(ring("r3"));
  require(o, ext_dims(k3, k3, 6) == std::vector<Index>(7, 1), "Ext(k,k) over r3");
  require(o, minimal_generator_count(injective_hull_E(ring("r5"))) == 2, "E over r5 needs 2 generators");
  require(o, minimal_generator_count(regular_module(ring("r5"))) == 1, "R over r5 is cyclic");
  if (o.ok) o.detail = "betti 1 2 4 8 16 32 64; Ext(k,k) = 1^7; mu(E) = 2, mu(R) = 1";
  return o;
}

Outcome negative_paths() {
  Outcome o;
  auto kind = [](const std::function<void()>& fn) -> std::optional<Error> {
    try {
      fn();
    } catch (const Error& e) {
      return e;
    }
    return std::nullopt;
  };
  const auto local = kind([] { corpus_ring("r7"); });
  require(o, local && local->kind() == ErrorKind::NotLocal, "r7 not rejected as NotLocal");
  const RingTable table{{"r3", ring("r3")}};
  const auto compat = kind([&] {
    parse_module("[module]\nname = bad\nring = r3\ndim = 1\nact 0 = 1\nact 1 = 1\n", table);
  });
  require(o, compat && compat->kind() == ErrorKind::Compatibility &&
                 std::string(compat->witness()).find("pair (") != std::string::npos,
          "incompatible module file not rejected with a pair");
  std::string src(corpus_source("r3"));
  src.replace(src.find("p = 2"), 5, "p = 4");
  const auto prime = kind([&] { parse_ring(src); });
  require(o, prime && prime->kind() == ErrorKind::NotPrime, "p = 4 not rejected as NotPrime");
  if (o.ok) o.detail = "NotLocal, Compatibility " + std::string(compat->witness()) + ", NotPrime";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> args = {"verify", "--suite", "all", "--seed", "7"};
  std::ostringstream a, b, err;
  const int ca = run_cli(args, a, err);
  ResolutionCache::global().clear();
  const int cb = run_cli(args, b, err);
  require(o, a.str() == b.str(), "reports differ");
  require(o, ca == 0 && cb == 0, "verify reported failures: exit " + std::to_string(ca));
  if (o.ok) o.detail = std::to_string(a.str().size()) + " identical bytes, exit 0";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"quasidualizing examples", quasidualizing_examples},
      {"artinian collapse", artinian_collapse},
      {"Ext Matlis swap", [] { return pairwise([](auto& m, auto& n) { return check_matlis_swap(m, n, 4); }); }},
      {"Ext cross-oracle", [] { return pairwise([](auto& m, auto& n) { return check_ext_cross_oracle(m, n, 4); }); }},
      {"Ext-Tor duality", [] { return pairwise([](auto& m, auto& n) { return check_ext_tor_duality(m, n, 4); }); }},
      {"duality swap", duality_swap},
      {"Bass / reflexive correspondences", theorem_b},
      {"class equalities", class_equality},
      {"two-of-three", two_of_three},
      {"Hom faithfulness", faithfulness},
      {"structural spot values", spot_values},
      {"negative paths", negative_paths},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << "AC" << i + 1 << " " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
