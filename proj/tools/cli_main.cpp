// bsglab command line front end: every analysis as a reproducible batch
// command. Exit codes: 0 ok, 2 usage, 3 domain error, 4 failed statistical
// test.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bsglab/classify.hpp"
#include "bsglab/generator.hpp"
#include "bsglab/lfsr.hpp"
#include "bsglab/report_io.hpp"
#include "bsglab/simulate.hpp"

#ifndef BSGLAB_VERSION
#define BSGLAB_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace bsglab;

json make_manifest(const std::string& command, json parameters, const std::string& out_path) {
  json m;
  m["command"] = command;
  m["version"] = BSGLAB_VERSION;
  m["parameters"] = std::move(parameters);
  m["outputs"] = out_path.empty() ? json::array({"-"}) : json::array({out_path});
  return m;
}

// Stdout by default; with --out the bytes go to the file and the manifest to
// a .manifest.json sibling. JSON payloads embed the manifest either way.
void deliver(const std::string& payload, const json& manifest, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << payload;
  std::ofstream mf(out_path + ".manifest.json", std::ios::binary);
  mf << manifest.dump(2) << '\n';
}

BitSeq read_input_bits(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    text << f.rdbuf();
  }
  return parse_bits(text.str());
}

std::string bits_csv(const BitSeq& bits) {
  std::ostringstream os;
  os << "i,bit\n";
  for (std::size_t i = 0; i < bits.size(); ++i)
    os << i << ',' << int(bits[i]) << '\n';
  return os.str();
}

struct GenerateArgs {
  std::string poly, state, format = "bits", out;
  std::uint64_t n = 0;
};

int run_generate(const GenerateArgs& a) {
  const Poly p = parse_poly(a.poly);
  const LfsrConfig c{p.degree, p.taps, parse_bits(a.state)};
  const BitSeq bits = lfsr_bits(c, a.n);
  const json manifest = make_manifest(
      "generate",
      {{"poly", poly_str(p.degree, p.taps)},
       {"state", to_string(c.seed)},
       {"n", a.n},
       {"format", a.format}},
      a.out);
  deliver(a.format == "csv" ? bits_csv(bits) : to_string(bits) + "\n", manifest, a.out);
  return 0;
}

struct KeystreamArgs {
  std::string gen, in, lfsr_poly, lfsr_state, out;
  std::uint64_t n = 0;
  bool show_states = false;
};

int run_keystream(const KeystreamArgs& a) {
  BitSeq x;
  json source;
  if (!a.in.empty()) {
    x = read_input_bits(a.in);
    source = {{"in", a.in}};
  } else {
    const Poly p = parse_poly(a.lfsr_poly);
    const LfsrConfig c{p.degree, p.taps, parse_bits(a.lfsr_state)};
    x = lfsr_bits(c, a.n);
    source = {{"lfsr_poly", poly_str(p.degree, p.taps)},
              {"lfsr_state", to_string(c.seed)},
              {"n", a.n}};
  }
  const StateSeq y = run_states(x);
  const BitSeq z = a.gen == "bsg" ? bsg_from_states(y) : absg_from_states(y);

  std::string payload = to_string(z) + "\n";
  if (a.show_states) payload += to_string(y) + "\n";
  json params = {{"gen", a.gen}, {"show_states", a.show_states}};
  params.update(source);
  deliver(payload, make_manifest("keystream", params, a.out), a.out);
  return 0;
}

struct ClassifyArgs {
  std::string poly, out;
  int degree = 0;
  bool all_primitive = false, csv = false, no_direct = false;
  int max_degree = 16, threads = 0;
};

int run_classify(const ClassifyArgs& a) {
  ClassifyOptions opts;
  opts.max_degree = a.max_degree;
  opts.direct_check = !a.no_direct;
  opts.threads = a.threads;

  std::vector<std::vector<int>> tap_sets;
  int degree = 0;
  if (a.all_primitive) {
    degree = a.degree;
    if (degree > opts.max_degree)
      throw std::domain_error("L-too-large: exhaustive classification ceiling exceeded");
    tap_sets = all_primitive_taps(degree);
  } else {
    const Poly p = parse_poly(a.poly);
    degree = p.degree;
    tap_sets.push_back(p.taps);
  }

  std::vector<ClassReport> reports;
  reports.reserve(tap_sets.size());
  for (const auto& taps : tap_sets) {
    BitSeq seed(static_cast<std::size_t>(degree), 0);
    seed[0] = 1;
    reports.push_back(full_report(LfsrConfig{degree, taps, seed}, opts));
  }

  json params = {{"csv", a.csv},
                 {"direct_check", opts.direct_check},
                 {"max_degree", opts.max_degree}};
  if (a.all_primitive) {
    params["all_primitive"] = true;
    params["degree"] = degree;
  } else {
    params["poly"] = poly_str(degree, tap_sets[0]);
  }
  const json manifest = make_manifest("classify", params, a.out);

  std::string payload;
  if (a.csv) {
    std::ostringstream os;
    os << class_report_csv_header() << '\n';
    for (const auto& r : reports) os << class_report_csv_row(r) << '\n';
    payload = os.str();
  } else {
    json doc;
    doc["manifest"] = manifest;
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    payload = doc.dump(2) + "\n";
  }
  deliver(payload, manifest, a.out);
  return 0;
}

struct PmfArgs {
  int n = 0;
  bool csv = false, compare_gaussian = false, kl = false;
  std::string out;
};

int run_pmf(const PmfArgs& a) {
  const PmfTable t = pmf_table(a.n);
  const json manifest = make_manifest("pmf",
                                      {{"N", a.n},
                                       {"csv", a.csv},
                                       {"compare_gaussian", a.compare_gaussian},
                                       {"kl", a.kl}},
                                      a.out);
  std::string payload;
  if (a.csv) {
    std::ostringstream os;
    write_pmf_csv(os, t, a.compare_gaussian);
    payload = os.str();
  } else {
    json doc;
    doc["manifest"] = manifest;
    doc["summary"] = pmf_summary(t);
    if (!a.kl) {
      doc["summary"].erase("kl_nats");
      doc["summary"].erase("cdf_sup_distance");
    }
    payload = doc.dump(2) + "\n";
  }
  deliver(payload, manifest, a.out);
  return 0;
}

struct SimulateArgs {
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::string gen = "state", out;
  bool chi2 = false, csv = false;
  double level = 0.999;
  int threads = 0;
};

int run_simulate(const SimulateArgs& a) {
  SimConfig c;
  c.n = a.n;
  c.trials = a.trials;
  c.seed = a.seed;
  c.kind = a.gen == "bsg" ? GenKind::Bsg : a.gen == "absg" ? GenKind::Absg : GenKind::StateOnly;
  c.threads = a.threads;

  const EmpiricalDist e = simulate(c);
  const PmfTable t = pmf_table(a.n);
  std::optional<Chi2Result> chi2;
  if (a.chi2) chi2 = chi2_gof(e, t);

  const json manifest = make_manifest("simulate",
                                      {{"N", a.n},
                                       {"trials", a.trials},
                                       {"seed", a.seed},
                                       {"gen", a.gen},
                                       {"chi2", a.chi2},
                                       {"level", a.level},
                                       {"csv", a.csv}},
                                      a.out);
  std::string payload;
  if (a.csv) {
    std::ostringstream os;
    write_sim_csv(os, e, t);
    payload = os.str();
    if (chi2) {
      std::cerr << "chi2 statistic=" << fmt_double(chi2->statistic) << " dof=" << chi2->dof
                << " p=" << fmt_double(chi2->p_value)
                << (chi2_pass(*chi2, a.level) ? " PASS" : " FAIL") << '\n';
    }
  } else {
    json doc;
    doc["manifest"] = manifest;
    doc["result"] = to_json(e, t, chi2 ? &*chi2 : nullptr, a.level);
    payload = doc.dump(2) + "\n";
  }
  deliver(payload, manifest, a.out);
  return chi2 && !chi2_pass(*chi2, a.level) ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bit-search keystream generator laboratory"};
  app.set_version_flag("--version", BSGLAB_VERSION);
  app.require_subcommand(1);

  GenerateArgs ga;
  auto* cg = app.add_subcommand("generate", "emit LFSR output bits");
  cg->add_option("--poly", ga.poly, "feedback polynomial, x^3+x+1 or 3,1,0")->required();
  cg->add_option("--state", ga.state, "initial fill bits, s_0 first")->required();
  cg->add_option("-n,--count", ga.n, "number of output bits")->required();
  cg->add_option("--format", ga.format, "bits or csv")
      ->check(CLI::IsMember({"bits", "csv"}));
  cg->add_option("--out", ga.out, "write output here plus a .manifest.json sibling");

  KeystreamArgs ka;
  auto* ck = app.add_subcommand("keystream", "run a bit-search generator over input bits");
  ck->add_option("--gen", ka.gen, "bsg or absg")
      ->required()
      ->check(CLI::IsMember({"bsg", "absg"}));
  auto* in_opt = ck->add_option("--in", ka.in, "input bits file, - for stdin");
  auto* lp = ck->add_option("--lfsr-poly", ka.lfsr_poly, "generate input from this LFSR");
  auto* ls = ck->add_option("--lfsr-state", ka.lfsr_state, "LFSR initial fill");
  auto* ln = ck->add_option("-n,--count", ka.n, "LFSR bits to feed");
  lp->needs(ls)->needs(ln)->excludes(in_opt);
  ls->needs(lp);
  ln->needs(lp);
  ck->add_flag("--show-states", ka.show_states, "also print the state line, - for no emission");
  ck->add_option("--out", ka.out, "write output here plus a .manifest.json sibling");

  ClassifyArgs ca;
  auto* cc = app.add_subcommand("classify", "shift classes and periods of an m-sequence");
  auto* po = cc->add_option("--poly", ca.poly, "feedback polynomial");
  auto* ap = cc->add_flag("--all-primitive", ca.all_primitive, "sweep every primitive polynomial");
  auto* dg = cc->add_option("--degree", ca.degree, "degree for --all-primitive");
  ap->needs(dg)->excludes(po);
  dg->needs(ap);
  cc->add_flag("--csv", ca.csv, "CSV rows instead of JSON");
  cc->add_flag("--no-direct-check", ca.no_direct, "skip the per-shift simulation check");
  cc->add_option("--max-degree", ca.max_degree, "classification ceiling");
  cc->add_option("--threads", ca.threads, "worker cap, 0 = all cores");
  cc->add_option("--out", ca.out, "write output here plus a .manifest.json sibling");

  PmfArgs pa;
  auto* cp = app.add_subcommand("pmf", "exact law of the emission count");
  cp->add_option("-N,--bits", pa.n, "input length")->required();
  cp->add_flag("--csv", pa.csv, "per-k CSV instead of the JSON summary");
  cp->add_flag("--compare-gaussian", pa.compare_gaussian, "add the limit Gaussian column");
  cp->add_flag("--kl", pa.kl, "include divergence from the limit Gaussian");
  cp->add_option("--out", pa.out, "write output here plus a .manifest.json sibling");

  SimulateArgs sa;
  auto* cs = app.add_subcommand("simulate", "Monte Carlo emission counts vs the exact law");
  cs->add_option("-N,--bits", sa.n, "input length per trial")->required();
  cs->add_option("--trials", sa.trials, "number of trials")->required();
  cs->add_option("--seed", sa.seed, "run seed");
  cs->add_option("--gen", sa.gen, "state, bsg, or absg")
      ->check(CLI::IsMember({"state", "bsg", "absg"}));
  cs->add_flag("--chi2", sa.chi2, "goodness-of-fit verdict; exit 4 on failure");
  cs->add_option("--level", sa.level, "chi2 confidence level");
  cs->add_option("--threads", sa.threads, "worker cap, 0 = all cores");
  cs->add_flag("--csv", sa.csv, "per-k CSV instead of JSON");
  cs->add_option("--out", sa.out, "write output here plus a .manifest.json sibling");

  // keystream needs exactly one input source
  ck->parse_complete_callback([&] {
    if (ka.in.empty() && ka.lfsr_poly.empty())
      throw CLI::RequiredError("keystream: --in or --lfsr-poly");
  });
  cc->parse_complete_callback([&] {
    if (ca.poly.empty() && !ca.all_primitive)
      throw CLI::RequiredError("classify: --poly or --all-primitive");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return 2;
  }

  try {
    if (cg->parsed()) return run_generate(ga);
    if (ck->parsed()) return run_keystream(ka);
    if (cc->parsed()) return run_classify(ca);
    if (cp->parsed()) return run_pmf(pa);
    if (cs->parsed()) return run_simulate(sa);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
