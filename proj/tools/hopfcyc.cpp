// hopfcyc: batch front end for the invariant cyclic homology library.
// Exit codes: 0 success, 1 a verification reported failure, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "bundle.hpp"
#include "hopfcyc/presentation.hpp"
#include "hopfcyc/serialize.hpp"
#include "json.hpp"

using namespace hopfcyc;
using namespace hopfcyc::cli;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string file;
  std::string report;
  std::string output;
  std::string mode;
  std::vector<std::string> oracle_args;
  int nmax = -1;
  int pmax = 2;
  int qmax = 3;
  int degree = 3;
  int max_dim = 512;
  int samples = 0;
  std::uint64_t seed = 1;
  long long budget = kDefaultBudget;
};

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

json checks_json(const AxiomReport& r) {
  json j = json::object();
  for (const auto& [name, ok] : r.checks) j[name] = ok;
  return j;
}

void emit_report(const Options& o, const json& j) {
  if (o.report.empty()) return;
  std::ofstream out(o.report);
  if (!out) throw PreconditionError("cannot write '" + o.report + "'");
  out << j.dump(2) << "\n";
}

void table_csv(const std::vector<std::pair<std::string, std::vector<int>>>& cols, int bound) {
  std::cout << "degree";
  for (const auto& c : cols) std::cout << "," << c.first;
  std::cout << ",nmax\n";
  size_t rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.second.size());
  for (size_t n = 0; n < rows; ++n) {
    std::cout << n;
    for (const auto& c : cols) std::cout << "," << (n < c.second.size() ? std::to_string(c.second[n]) : "");
    std::cout << "," << bound << "\n";
  }
}

void expect_kind(const Bundle& b, const std::string& kind) {
  if (b.kind() != kind) throw PreconditionError("bundle kind is '" + b.kind() + "', expected '" + kind + "'");
}

int bundle_nmax(const Options& o, const Bundle& b) { return o.nmax >= 0 ? o.nmax : b.get_int("limits.nmax", 3); }

int cmd_parse(const Options& o) {
  Presentation p = parse_presentation(read_file(o.file));
  std::cout << p.to_text();
  return kOk;
}

int cmd_compile(const Options& o) {
  HopfAlgebra h = compile(parse_presentation(read_file(o.file)), o.max_dim);
  std::string text = write_structure(h);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out) throw PreconditionError("cannot write '" + o.output + "'");
    out << text;
  }
  if (!h.certificate.ok()) {
    for (const auto& f : h.certificate.failures()) std::cerr << "certificate: " << f << " fails\n";
    return kFailed;
  }
  return kOk;
}

// S(a(1)) a(2) = a(1) S(a(2)) = eps(a) 1 on random integer combinations
bool antipode_samples(const HopfAlgebra& h, int samples, std::uint64_t seed, std::vector<std::string>& witnesses) {
  const Field& f = h.field;
  const int d = h.dim();
  SparseMatrix id = SparseMatrix::identity(d, f);
  SparseMatrix left = h.mult * tensor(h.antipode, id) * h.comult;
  SparseMatrix right = h.mult * tensor(id, h.antipode) * h.comult;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  bool ok = true;
  for (int s = 0; s < samples; ++s) {
    std::vector<std::pair<int, Scalar>> entries;
    for (int i = 0; i < d; ++i) entries.emplace_back(i, Scalar::from_int(f, coef(rng)));
    SparseVec a = vec_normalize(entries);
    SparseVec expect = vec_scale(h.unit, h.eps(a));
    if (left.apply(a) != expect || right.apply(a) != expect) {
      ok = false;
      witnesses.push_back("antipode identity fails on sample " + std::to_string(s));
    }
  }
  return ok;
}

int cmd_check(const Options& o) {
  json j;
  j["kind"] = "check";
  j["input"] = o.file;
  bool ok = true;
  std::vector<std::string> witnesses;
  if (o.file.rfind("builtin:", 0) != 0) {
    std::string text = read_file(o.file);
    if (text.find("[basis]") == std::string::npos) {
      Presentation p = parse_presentation(text);
      try {
        HopfAlgebra h = compile(p, o.max_dim);
        j["dim"] = h.dim();
        j["checks"] = checks_json(h.certificate);
        ok = h.certificate.ok();
        if (o.samples > 0) ok = antipode_samples(h, o.samples, o.seed, witnesses) && ok;
      } catch (const NotFiniteDimensional&) {
        AxiomReport r = check_bounded(p, o.degree, &witnesses);
        j["dim"] = nullptr;
        j["degree_bound"] = o.degree;
        j["checks"] = checks_json(r);
        ok = r.ok();
      }
      j["ok"] = ok;
      j["witnesses"] = witnesses;
      std::cout << j.dump(2) << "\n";
      emit_report(o, j);
      return ok ? kOk : kFailed;
    }
  }
  HopfAlgebra h = load_hopf(o.file, Field::rational(), "");
  j["dim"] = h.dim();
  j["checks"] = checks_json(h.certificate);
  ok = h.certificate.ok();
  if (o.samples > 0) ok = antipode_samples(h, o.samples, o.seed, witnesses) && ok;
  j["ok"] = ok;
  j["witnesses"] = witnesses;
  std::cout << j.dump(2) << "\n";
  emit_report(o, j);
  return ok ? kOk : kFailed;
}

json dims_json(const CyclicModuleData& c) {
  json d = json::array();
  for (int n = 0; n <= c.nmax(); ++n) d.push_back(c.dim(n));
  return d;
}

int cmd_triple(const Options& o) {
  Bundle b = load_bundle(o.file);
  expect_kind(b, "triple");
  HopfAlgebra h = bundle_hopf(b);
  HopfTriple t = bundle_triple(b, h);
  const int nmax = bundle_nmax(o, b);
  InvariantChains ch = coinvariant_chain_module(t, nmax, CoinvariantMethod::automatic, o.budget);
  CyclicReport rep = certify(ch.module);
  json j;
  j["kind"] = "triple";
  j["nmax"] = nmax;
  j["dims"] = dims_json(ch.module);
  j["certificate"] = {{"sigma_fixes_M", ch.pair.sigma_fixes_M},
                      {"involution", ch.pair.involution},
                      {"compatible", ch.pair.compatible()},
                      {"axioms", rep.axioms.ok()},
                      {"cyclic", rep.cyclic}};
  j["witnesses"] = rep.witnesses;
  for (const auto& d : ch.pair.details) j["witnesses"].push_back(d);
  std::vector<int> hh = hochschild_homology(ch.module);
  std::vector<int> hc;
  if (ch.module.status == CyclicStatus::cyclic) hc = cyclic_homology(ch.module);
  j["HH"] = hh;
  j["HC"] = hc;
  table_csv({{"HH", hh}, {"HC", hc}}, nmax);
  emit_report(o, j);
  if (ch.pair.compatible() && !rep.cyclic) {
    std::cerr << "verification failed: compatible pair but tau^{n+1} != id\n";
    return kFailed;
  }
  if (!ch.pair.compatible()) std::cerr << "note: pair is not compatible; module left paracyclic, HC omitted\n";
  return rep.axioms.ok() ? kOk : kFailed;
}

int cmd_cotriple(const Options& o) {
  Bundle b = load_bundle(o.file);
  expect_kind(b, "cotriple");
  HopfAlgebra h = bundle_hopf(b);
  HopfCotriple t = bundle_cotriple(b, h);
  const int nmax = bundle_nmax(o, b);
  CoinvariantCochains cc = coinvariant_cochain_module(t, nmax, o.budget);
  CyclicReport rep = certify(cc.module);
  json j;
  j["kind"] = "cotriple";
  j["nmax"] = nmax;
  j["dims"] = dims_json(cc.module);
  j["certificate"] = {{"delta_fixes_V", cc.pair.delta_fixes_V},
                      {"involution", cc.pair.involution},
                      {"axioms", rep.axioms.ok()},
                      {"cocyclic", rep.cyclic}};
  j["witnesses"] = rep.witnesses;
  std::vector<int> hc = cyclic_homology(cc.module), hh = hochschild_homology(cc.module);
  j["HH"] = hh;
  j["HC"] = hc;
  table_csv({{"HH", hh}, {"HC", hc}}, nmax);
  emit_report(o, j);
  return rep.axioms.ok() && rep.cyclic ? kOk : kFailed;
}

struct SmashInputs {
  HopfAlgebra h;
  SmashProduct s;
  HModule m;
  SparseVec sigma;
};

SmashInputs smash_inputs(const Bundle& b) {
  HopfAlgebra h = bundle_hopf(b);
  SmashProduct s = bundle_smash(b, h);
  HModule m = parse_module(h, b.get("smash.module", "trivial"));
  SparseVec sigma = parse_grouplike(h, b.get("smash.sigma", "unit"));
  return {h, s, m, sigma};
}

json grid_json(const std::vector<std::vector<int>>& g) {
  json j = json::array();
  for (const auto& row : g) j.push_back(row);
  return j;
}

int cmd_smash(const Options& o) {
  Bundle b = load_bundle(o.file);
  expect_kind(b, "smash");
  SmashInputs in = smash_inputs(b);
  const int pmax = b.get_int("limits.pmax", o.pmax), qmax = b.get_int("limits.qmax", o.qmax);
  SpectralSequenceReport r = spectral_sequence(in.s, in.m, in.sigma, pmax, qmax);
  std::cout << "page,p,q,dim,pmax,qmax\n";
  for (const auto& [page, grid] : {std::pair{"E1", &r.e1}, std::pair{"E2", &r.e2}})
    for (size_t p = 0; p < grid->size(); ++p)
      for (size_t q = 0; q < (*grid)[p].size(); ++q)
        std::cout << page << "," << p << "," << q << "," << (*grid)[p][q] << "," << pmax << "," << qmax << "\n";
  json j;
  j["kind"] = "smash";
  j["pmax"] = pmax;
  j["qmax"] = qmax;
  j["smash_certificate"] = in.s.certificate.ok();
  j["E1"] = grid_json(r.e1);
  j["E1_rows"] = grid_json(r.e1_rows);
  j["E2"] = grid_json(r.e2);
  j["HC"] = r.hc;
  j["E2_total"] = r.e2_total;
  j["certificate"] = {{"e1_agree", r.e1_agree},
                      {"columns_cyclic", r.columns_cyclic},
                      {"collapsed", r.collapsed},
                      {"converges", r.converges}};
  emit_report(o, j);
  return r.e1_agree && r.columns_cyclic && r.converges ? kOk : kFailed;
}

// mode: hopf-homology | hopf-cohomology | decompose; empty picks from the bundle kind
int cmd_oracle(const Options& o) {
  Bundle b = load_bundle(o.file);
  HopfAlgebra h = bundle_hopf(b);
  const int nmax = bundle_nmax(o, b);
  const std::string kind = b.kind();
  if (kind != "triple" && kind != "cotriple") throw PreconditionError("oracle needs a triple or cotriple bundle");
  std::string mode = o.mode;
  if (mode.empty()) {
    const bool decomposable = kind == "triple" ? h.is_cocommutative() : h.is_commutative();
    mode = decomposable ? "decompose" : kind == "triple" ? "hopf-homology" : "hopf-cohomology";
  }
  json j;
  j["kind"] = "oracle";
  j["mode"] = mode;
  j["nmax"] = nmax;
  if (mode == "hopf-homology") {
    if (kind != "triple") throw PreconditionError("hopf-homology needs a triple bundle");
    std::vector<int> hh = hopf_homology(h, parse_module(h, b.get("triple.module", "trivial")), nmax);
    j["hopf_homology"] = hh;
    table_csv({{"hopf", hh}}, nmax);
    emit_report(o, j);
    return kOk;
  }
  if (mode == "hopf-cohomology") {
    if (kind != "cotriple") throw PreconditionError("hopf-cohomology needs a cotriple bundle");
    std::vector<int> hc = hopf_cohomology(h, parse_comodule(h, b.get("cotriple.comodule", "trivial")), nmax);
    j["hopf_cohomology"] = hc;
    table_csv({{"hopf", hc}}, nmax);
    emit_report(o, j);
    return kOk;
  }
  if (mode != "decompose") throw PreconditionError("unknown oracle mode '" + mode + "'");
  DecompositionReport d =
      kind == "triple"
          ? decomposition_check_cocommutative(h, parse_module(h, b.get("triple.module", "trivial")), nmax)
          : decomposition_check_commutative(h, parse_comodule(h, b.get("cotriple.comodule", "trivial")), nmax);
  j["oracle"] = d.oracle;
  j["summed"] = d.summed;
  j["cyclic"] = d.cyclic;
  j["equal"] = d.equal;
  j["witnesses"] = d.failures;
  table_csv({{"hopf", d.oracle}, {"summed", d.summed}, {"HC", d.cyclic}}, nmax);
  emit_report(o, j);
  for (const auto& w : d.failures) std::cerr << "mismatch: " << w << "\n";
  return d.equal ? kOk : kFailed;
}

int cmd_compare(const Options& o) {
  Bundle b = load_bundle(o.file);
  const int nmax = bundle_nmax(o, b);
  const std::string kind = b.kind();
  json j;
  j["kind"] = "compare";
  j["construction"] = kind;
  j["nmax"] = nmax;
  bool ok = false;
  std::vector<std::string> failures;
  if (kind == "triple") {
    HopfAlgebra h = bundle_hopf(b);
    if (b.get("triple.algebra", "self") != "self") throw PreconditionError("compare needs triple.algebra = self");
    ReducedComparison rc = compare_reduced_model(h, parse_module(h, b.get("triple.module", "trivial")),
                                                 parse_grouplike(h, b.get("triple.sigma", "unit")), nmax);
    j["isomorphic"] = rc.isomorphic;
    j["equivariant"] = rc.equivariant;
    ok = rc.isomorphic && rc.equivariant;
    failures = rc.failures;
  } else if (kind == "cotriple") {
    HopfAlgebra h = bundle_hopf(b);
    ReducedCocyclicComparison rc =
        compare_reduced_cocyclic(h, parse_comodule(h, b.get("cotriple.comodule", "trivial")),
                                 parse_character(h, b.get("cotriple.delta", "counit")), nmax);
    j["isomorphic"] = rc.isomorphic;
    j["equivariant"] = rc.equivariant;
    ok = rc.isomorphic && rc.equivariant;
    failures = rc.failures;
  } else if (kind == "smash") {
    SmashInputs in = smash_inputs(b);
    DiagonalComparison dc = diagonal_vs_invariant(in.s, in.m, in.sigma, nmax);
    EzReport ez = ez_compare(in.s, in.m, in.sigma, nmax);
    j["phi_psi_inverse"] = dc.inverse;
    j["phi_cyclic_map"] = dc.cyclic_map;
    j["tot_mixed"] = ez.mixed_ok;
    j["HC_tot"] = ez.hc_tot;
    j["HC_diagonal"] = ez.hc_diagonal;
    j["tot_equals_diagonal"] = ez.equal;
    ok = dc.inverse && dc.cyclic_map && ez.mixed_ok && ez.equal;
    failures = dc.failures;
  } else {
    throw PreconditionError("unknown construction kind '" + kind + "'");
  }
  j["ok"] = ok;
  j["witnesses"] = failures;
  std::cout << j.dump(2) << "\n";
  emit_report(o, j);
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfcyc: invariant cyclic homology of Hopf triples and cotriples"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for randomized property checks");
  app.add_option("--budget", o.budget, "cap on chain-space dimensions");

  auto file_arg = [&](CLI::App* s, const std::string& what) { s->add_option("file", o.file, what)->required(); };
  auto* parse = app.add_subcommand("parse", "print the normalized presentation");
  file_arg(parse, ".hopf presentation");
  auto* comp = app.add_subcommand("compile", "emit structure constants of a presentation");
  file_arg(comp, ".hopf presentation");
  comp->add_option("-o,--output", o.output, "output file");
  comp->add_option("--max-dim", o.max_dim, "basis size limit");
  auto* check = app.add_subcommand("check", "certify Hopf axioms and print the certificate as JSON");
  file_arg(check, "presentation, structure file or builtin:<name>");
  check->add_option("--degree", o.degree, "monomial degree bound for infinite presentations");
  check->add_option("--max-dim", o.max_dim, "basis size limit");
  check->add_option("--samples", o.samples, "random antipode samples (uses --seed)");
  check->add_option("--seed", o.seed, "seed for random samples");
  std::vector<CLI::App*> bundled;
  bundled.push_back(app.add_subcommand("triple", "coinvariant chains of a Hopf triple: HH/HC table"));
  bundled.push_back(app.add_subcommand("cotriple", "coinvariant cochains of a Hopf cotriple: HH/HC table"));
  bundled.push_back(app.add_subcommand("smash", "E1/E2 grids of the smash product spectral sequence"));
  bundled.push_back(app.add_subcommand("oracle", "Hopf (co)homology and the decomposition check"));
  bundled.push_back(app.add_subcommand("compare", "reduced models and Eilenberg-Zilber comparisons"));
  for (auto* s : bundled) {
    if (s->get_name() == "oracle")
      s->add_option("args", o.oracle_args, "[hopf-homology|hopf-cohomology|decompose] bundle")
          ->required()
          ->expected(1, 2);
    else
      file_arg(s, "bundle file");
    s->add_option("--nmax", o.nmax, "top degree");
    s->add_option("--report", o.report, "write a JSON report");
    s->add_option("--budget", o.budget, "cap on chain-space dimensions");
  }
  bundled[2]->add_option("--pmax", o.pmax, "top horizontal degree");
  bundled[2]->add_option("--qmax", o.qmax, "top vertical degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "oracle") {
    o.file = o.oracle_args.back();
    if (o.oracle_args.size() == 2) o.mode = o.oracle_args.front();
  }
  try {
    if (cmd == "parse") return cmd_parse(o);
    if (cmd == "compile") return cmd_compile(o);
    if (cmd == "check") return cmd_check(o);
    if (cmd == "triple") return cmd_triple(o);
    if (cmd == "cotriple") return cmd_cotriple(o);
    if (cmd == "smash") return cmd_smash(o);
    if (cmd == "oracle") return cmd_oracle(o);
    if (cmd == "compare") return cmd_compare(o);
  } catch (const ParseError& e) {
    std::cerr << o.file << ":" << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
