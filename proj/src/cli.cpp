#include "qdual/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qdual/corpus.hpp"
#include "qdual/sampling.hpp"

namespace qdual {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RingPtr load_ring(const std::string& spec) {
  if (spec.rfind("corpus:", 0) == 0) return corpus_ring(spec.substr(7));
  return parse_ring(read_file(spec));
}

/// R, E, k, 0, optionally with ^n, or a module file over `ring`.
Module load_module(const std::string& spec, const RingPtr& ring) {
  std::string base = spec;
  Index power = 1;
  if (const auto caret = spec.find('^'); caret != std::string::npos && caret > 0) {
    base = spec.substr(0, caret);
    try {
      power = std::stol(spec.substr(caret + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadArgument, "bad exponent in " + spec);
    }
    if (power < 0) throw Error(ErrorKind::BadArgument, "negative exponent in " + spec);
  }
  Module one;
  if (base == "R") {
    return free_module(ring, power);
  } else if (base == "E") {
    one = injective_hull_E(ring);
  } else if (base == "k") {
    one = simple_module(ring);
  } else if (base == "0") {
    return zero_module(ring);
  } else {
    RingTable table{{ring->name(), ring}};
    return parse_module(read_file(spec), table).module;
  }
  Module out = zero_module(ring);
  for (Index j = 0; j < power; ++j) out = direct_sum(out, one);
  return out;
}

std::string join(const std::vector<Index>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

void print_matrix(std::ostream& out, const Mat& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    out << "  ";
    for (Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

std::uint64_t name_stream(std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- verify

struct Tally {
  std::vector<std::string> lines;
  Index pass = 0;
  Index fail = 0;
  Index vacuous = 0;
  /// Theorem-B conditions where both sides fail.
  Index both_false = 0;
  /// Two-of-three reports that were not vacuous.
  Index nonvacuous = 0;

  void add(const Tally& o) {
    lines.insert(lines.end(), o.lines.begin(), o.lines.end());
    pass += o.pass;
    fail += o.fail;
    vacuous += o.vacuous;
    both_false += o.both_false;
    nonvacuous += o.nonvacuous;
  }
};

void record(Tally& t, const CheckReport& report, const std::string& prefix) {
  for (auto& line : report_lines(report, prefix)) t.lines.push_back(std::move(line));
  if (report.conditions.empty()) {
    ++(report.verdict == Verdict::Fail ? t.fail : report.verdict == Verdict::Pass ? t.pass : t.vacuous);
    return;
  }
  for (const auto& c : report.conditions)
    ++(c.verdict == Verdict::Fail ? t.fail : c.verdict == Verdict::Pass ? t.pass : t.vacuous);
}

using Job = std::function<Tally()>;

/// Wraps a job so a library error becomes a FAIL line instead of aborting.
Job guarded(std::string prefix, std::function<void(Tally&)> body) {
  return [prefix = std::move(prefix), body = std::move(body)] {
    Tally t;
    try {
      body(t);
    } catch (const Error& e) {
      t.lines.push_back("CHECK " + prefix + " FAIL " + e.what());
      ++t.fail;
    }
    return t;
  };
}

struct RingContext {
  std::string id;
  RingPtr ring;
  std::vector<Module> samples;
  std::vector<ShortExactSequence> sequences;
};

void theorem_jobs(const std::string& suite, const RingContext& rc, Index bound, std::vector<Job>& jobs) {
  const std::pair<const char*, Module> params[] = {{"R", regular_module(rc.ring)}, {"E", injective_hull_E(rc.ring)}};
  for (const auto& [tname, t] : params)
    for (std::size_t s = 0; s < rc.samples.size(); ++s) {
      const std::string prefix = suite + "/" + rc.id + "/T=" + tname + "/M" + std::to_string(s);
      jobs.push_back(guarded(prefix, [=, t = t, m = rc.samples[s]](Tally& out) {
        if (suite == "theorem-b") {
          const CheckReport r = check_theorem_B(t, m, bound);
          for (const auto& c : r.conditions)
            if (c.verdict == Verdict::Pass && c.witness.find("=PASS") == std::string::npos) ++out.both_false;
          record(out, r, prefix);
        } else {
          record(out, check_class_equality(t, m, bound), prefix);
        }
      }));
    }
}

void two_of_three_jobs(const RingContext& rc, Index bound, std::vector<Job>& jobs) {
  const std::string base = "two-of-three/" + rc.id;
  auto add = [&](const std::string& name, const Module& t, const ShortExactSequence& ses) {
    const std::string prefix = base + "/" + name;
    jobs.push_back(guarded(prefix, [=](Tally& out) {
      const CheckReport r = check_two_of_three(t, ses, bound);
      if (r.verdict != Verdict::Vacuous) ++out.nonvacuous;
      record(out, r, prefix);
    }));
  };
  const Module r = regular_module(rc.ring);
  const Module e = injective_hull_E(rc.ring);
  for (std::size_t s = 0; s < rc.sequences.size(); ++s) add("T=R/S" + std::to_string(s), r, rc.sequences[s]);
  for (std::size_t s = 0; s < rc.sequences.size(); ++s) add("T=E/S" + std::to_string(s), e, rc.sequences[s]);
  const std::pair<Index, Index> splits[] = {{1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (const auto& [a, b] : splits)
    add("T=R/split" + std::to_string(a) + "," + std::to_string(b), r, split_free_sequence(rc.ring, a, b));
  add("T=E/socle-E", e, socle_sequence(e));
}

void suite_jobs(const std::string& suite, const RingContext& rc, Index bound, std::vector<Job>& jobs) {
  const RingPtr& ring = rc.ring;
  const std::string base = suite + "/" + rc.id;
  const std::pair<const char*, Module> params[] = {{"R", regular_module(ring)}, {"E", injective_hull_E(ring)}};
  if (suite == "collapse") {
    jobs.push_back(guarded(base, [=](Tally& out) {
      const std::vector<Module> cands = {regular_module(ring), injective_hull_E(ring), simple_module(ring)};
      record(out, check_artinian_collapse(ring, cands, bound), base);
    }));
  } else if (suite == "duality-swap") {
    const std::pair<const char*, Module> cands[] = {
        {"R", regular_module(ring)}, {"E", injective_hull_E(ring)}, {"k", simple_module(ring)}};
    for (const auto& [name, x] : cands) {
      const std::string prefix = base + "/" + name;
      jobs.push_back(guarded(prefix, [=, x = x](Tally& out) { record(out, check_duality_swap(x, bound), prefix); }));
    }
  } else if (suite == "theorem-b" || suite == "class-equality") {
    theorem_jobs(suite, rc, bound, jobs);
  } else if (suite == "two-of-three") {
    two_of_three_jobs(rc, bound, jobs);
  } else if (suite == "hom-faithful" || suite == "probe") {
    const bool probe = suite == "probe";
    for (const auto& [tname, t] : params) {
      std::vector<Module> ls = rc.samples;
      ls.push_back(zero_module(ring));
      for (std::size_t s = 0; s < ls.size(); ++s) {
        const std::string prefix =
            base + "/T=" + tname + "/" + (s + 1 == ls.size() ? std::string("zero") : "L" + std::to_string(s));
        jobs.push_back(guarded(prefix, [=, t = t, l = ls[s]](Tally& out) {
          if (!probe) {
            record(out, check_hom_faithful(l, t), prefix);
            return;
          }
          // Probe findings are informational and never count as failures.
          for (auto& line : report_lines(probe_tensor_faithful(l, t), prefix, "PROBE")) out.lines.push_back(line);
        }));
      }
    }
  } else {
    const std::size_t n = rc.samples.size();
    for (std::size_t s = 0; s < n; ++s) {
      const std::string prefix = base + "/M" + std::to_string(s) + ",M" + std::to_string((s + 1) % n);
      jobs.push_back(guarded(prefix, [=, m = rc.samples[s], nn = rc.samples[(s + 1) % n]](Tally& out) {
        if (suite == "matlis-swap")
          record(out, check_matlis_swap(m, nn, bound), prefix);
        else if (suite == "ext-oracle")
          record(out, check_ext_cross_oracle(m, nn, bound), prefix);
        else
          record(out, check_ext_tor_duality(m, nn, bound), prefix);
      }));
    }
  }
}

std::vector<std::pair<std::string, RingPtr>> select_rings(const std::string& selector) {
  std::vector<std::pair<std::string, RingPtr>> out;
  if (selector == "all") {
    for (const auto& [id, ring] : builtin_corpus()) out.emplace_back(id, ring);
  } else {
    RingPtr ring = load_ring(selector);
    out.emplace_back(ring->name(), ring);
  }
  return out;
}

// ---------------------------------------------------------------- commands

int emit(std::ostream& out, const CheckReport& report, const std::string& prefix) {
  for (const auto& line : report_lines(report, prefix)) out << line << '\n';
  return report.verdict == Verdict::Fail ? 1 : 0;
}

CheckReport classify(const std::string& role, const Module& m, const Module* param, Index bound) {
  if (role == "semidualizing") return is_semidualizing(m, bound);
  if (role == "quasidualizing") return is_quasidualizing(m, bound);
  if (!param) throw Error(ErrorKind::BadArgument, "--as " + role + " needs --param");
  if (role == "derived-reflexive") return is_derived_reflexive(m, *param, bound);
  if (role == "bass") return in_bass_class(m, *param, bound);
  return in_auslander_class(m, *param, bound);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"collapse",     "duality-swap", "theorem-b",  "class-equality",
                                                 "two-of-three", "hom-faithful", "matlis-swap", "ext-oracle",
                                                 "ext-tor",      "probe"};
  return names;
}

std::vector<std::string> report_lines(const CheckReport& report, const std::string& prefix, const std::string& tag) {
  std::vector<std::string> lines;
  if (report.conditions.empty()) {
    lines.push_back(tag + " " + prefix + " " + std::string(to_string(report.verdict)) + " no conditions");
    return lines;
  }
  for (const auto& c : report.conditions) {
    std::string line = tag + " " + prefix + ":" + c.label + " " + std::string(to_string(c.verdict));
    if (!c.witness.empty()) line += " " + c.witness;
    lines.push_back(std::move(line));
  }
  return lines;
}

int run_verify(const SuiteConfig& config, std::ostream& out, std::ostream& err) {
  if (config.bound < 1 || config.samples < 1) {
    err << "error: --bound and --samples must be >= 1\n";
    return 2;
  }
  std::vector<std::string> suites;
  if (config.suite == "all") {
    suites = suite_names();
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
      err << "error: unknown suite " << config.suite << '\n';
      return 2;
    }
    suites = {config.suite};
  }
  if (config.suite == "two-of-three" || config.suite == "all")
    if (config.bound < 2) {
      err << "error: two-of-three needs --bound >= 2\n";
      return 2;
    }

  std::vector<RingContext> rings;
  for (auto& [id, ring] : select_rings(config.ring)) {
    SampleConfig sc;
    sc.count = config.samples;
    sc.max_free_rank = config.max_free_rank;
    sc.max_dim = config.max_dim;
    sc.seed = mix_seed(config.seed, name_stream(id));
    RingContext rc{id, ring, sample_modules(ring, sc), {}};
    sc.seed = mix_seed(sc.seed, 2);
    rc.sequences = sample_sequences(ring, sc);
    rings.push_back(std::move(rc));
  }

  Tally total;
  for (const auto& suite : suites)
    for (const auto& rc : rings) {
      std::vector<Job> jobs;
      suite_jobs(suite, rc, config.bound, jobs);
      const auto results = parallel_map(jobs.size(), [&](std::size_t i) { return jobs[i](); });
      Tally group;
      for (const auto& r : results) group.add(r);
      if (suite == "theorem-b") group.lines.push_back("INFO theorem-b/" + rc.id + " both-false=" + std::to_string(group.both_false));
      if (suite == "two-of-three") {
        group.lines.push_back("INFO two-of-three/" + rc.id + " non-vacuous=" + std::to_string(group.nonvacuous));
        if (config.min_nonvacuous > 0) {
          const bool ok = group.nonvacuous >= config.min_nonvacuous;
          group.lines.push_back("CHECK two-of-three/" + rc.id + ":non-vacuous-minimum " + (ok ? "PASS " : "FAIL ") +
                                std::to_string(group.nonvacuous) + ">=" + std::to_string(config.min_nonvacuous));
          ++(ok ? group.pass : group.fail);
        }
      }
      total.add(group);
    }
  for (const auto& line : total.lines) out << line << '\n';
  out << "SUMMARY " << (total.fail == 0 ? "PASS" : "FAIL") << " pass=" << total.pass << " fail=" << total.fail
      << " vacuous=" << total.vacuous << " bound=" << config.bound << " samples=" << config.samples
      << " seed=" << config.seed << '\n';
  return total.fail == 0 ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite local algebras, Matlis duality and quasidualizing modules", "qdual"};
  app.require_subcommand(1);

  std::string ring_spec;
  std::string module_a;
  std::string module_b;
  Index degree = 4;

  auto* check_ring = app.add_subcommand("check-ring", "Validate a ring file or corpus:<id>");
  check_ring->add_option("ring", ring_spec)->required();

  auto* dual = app.add_subcommand("dual", "Print the Matlis dual of a module");
  auto* hom = app.add_subcommand("hom", "Print Hom(M, N)");
  auto* tensor = app.add_subcommand("tensor", "Print M (x) N");
  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N) for 0 <= i <= I");
  auto* tor = app.add_subcommand("tor", "dim Tor_i(M, N) for 0 <= i <= I");
  auto* resolve = app.add_subcommand("resolve", "Minimal free resolution of M");
  std::string via = "projective";
  bool matrices = false;
  for (auto* sub : {dual, hom, tensor, ext, tor, resolve}) {
    sub->add_option("--ring", ring_spec, "corpus:<id> or ring file")->required();
    sub->add_option("M", module_a, "R, E, k, 0, X^n or module file")->required();
  }
  for (auto* sub : {hom, tensor, ext, tor}) sub->add_option("N", module_b)->required();
  for (auto* sub : {ext, tor, resolve}) sub->add_option("-i,--degree", degree, "top degree")->check(CLI::NonNegativeNumber);
  ext->add_option("--via", via)->check(CLI::IsMember({"projective", "injective"}));
  resolve->add_flag("--matrices", matrices, "print the differentials");

  auto* cls = app.add_subcommand("classify", "Check one class predicate");
  std::string role;
  std::string param_spec;
  Index bound = kDefaultBound;
  cls->add_option("--ring", ring_spec)->required();
  cls->add_option("--module", module_a)->required();
  cls->add_option("--as", role)
      ->required()
      ->check(CLI::IsMember({"semidualizing", "quasidualizing", "derived-reflexive", "bass", "auslander"}));
  cls->add_option("--param", param_spec, "second module for derived-reflexive, bass, auslander");
  cls->add_option("--bound", bound)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  SuiteConfig config;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.insert(suite_choices.begin(), "all");
  verify->add_option("--suite", config.suite)->check(CLI::IsMember(suite_choices));
  verify->add_option("--ring", config.ring, "all, corpus:<id> or ring file");
  verify->add_option("--bound", config.bound)->check(CLI::PositiveNumber);
  verify->add_option("--samples", config.samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed);
  verify->add_option("--max-free-rank", config.max_free_rank)->check(CLI::PositiveNumber);
  verify->add_option("--max-dim", config.max_dim)->check(CLI::PositiveNumber);
  verify->add_option("--min-nonvacuous", config.min_nonvacuous)->check(CLI::NonNegativeNumber);

  auto* corpus = app.add_subcommand("corpus", "List built-in rings or print one");
  std::string corpus_id;
  corpus->add_option("id", corpus_id);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check_ring) {
      try {
        const RingPtr ring = load_ring(ring_spec);
        out << "CHECK check-ring/" << ring->name() << ":valid PASS dim " << ring->dim() << " p " << ring->field().modulus()
            << " residue-degree " << ring->residue_degree() << '\n';
        return 0;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::BadArgument || e.kind() == ErrorKind::UnknownRing)
          throw;
        out << "CHECK check-ring/" << ring_spec << ":valid FAIL " << e.what() << '\n';
        return 1;
      }
    }
    if (*corpus) {
      if (corpus_id.empty()) {
        for (const auto& id : corpus_ids()) out << id << '\n';
      } else {
        out << corpus_source(corpus_id);
      }
      return 0;
    }
    if (*verify) return run_verify(config, out, err);

    const RingPtr ring = load_ring(ring_spec);
    const Module m = load_module(module_a, ring);
    if (*dual) {
      out << serialize_module(matlis_dual(m), "dual");
    } else if (*hom) {
      out << serialize_module(hom_module(m, load_module(module_b, ring)).module, "hom");
    } else if (*tensor) {
      out << serialize_module(tensor_module(m, load_module(module_b, ring)).module, "tensor");
    } else if (*ext) {
      const Module n = load_module(module_b, ring);
      out << "dims " << join(via == "injective" ? ext_dims_via_injective(m, n, degree) : ext_dims(m, n, degree)) << '\n';
    } else if (*tor) {
      out << "dims " << join(tor_dims(m, load_module(module_b, ring), degree)) << '\n';
    } else if (*resolve) {
      const FreeResolution res = minimal_free_resolution(m, degree);
      out << "betti " << join(res.betti) << '\n';
      if (matrices)
        for (std::size_t i = 0; i < res.differentials.size(); ++i) {
          out << "d" << i + 1 << " " << res.differentials[i].rows() << "x" << res.differentials[i].cols() << '\n';
          print_matrix(out, res.differentials[i]);
        }
    } else if (*cls) {
      std::optional<Module> param;
      if (!param_spec.empty()) param = load_module(param_spec, ring);
      const CheckReport r = classify(role, m, param ? &*param : nullptr, bound);
      return emit(out, r, "classify/" + ring->name() + "/" + module_a + "/" + role);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qdual
