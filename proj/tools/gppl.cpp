// Command-line front end: evaluate programs against the exact, symbolic, and
// Monte Carlo backends; check random-graph-model laws; run the internal
// measure calculators. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success/PASS, 1 check FAIL, 2 usage/parse/type error.

#include "gppl/json_io.hpp"
#include "gppl/termgen.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using gppl::Rat;
using json = gppl::io::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) { return json::parse(read_file(path)); }

gppl::lang::TermPtr load_program(const std::string& path) {
  return gppl::lang::parse(read_file(path));
}

struct EvalOptions {
  std::string program, backend = "symbolic", graphon_path, impl_path;
  std::uint64_t trials = 100000, seed = 0;
  bool dump_normal_form = false;
};

int run_eval(const EvalOptions& opt) {
  auto program = load_program(opt.program);
  json out;
  if (opt.backend == "symbolic") {
    if (opt.graphon_path.empty()) throw CLI::ValidationError("--graphon is required");
    auto w = gppl::io::graphon_from_json(load_json(opt.graphon_path));
    auto nf = gppl::sym::normalize(program);
    out["dist"] = gppl::io::outcomes_json(gppl::sym::outcome_distribution(nf, w));
    if (opt.dump_normal_form) out["normal_form"] = gppl::io::normal_form_json(nf);
  } else if (opt.backend == "exact") {
    if (opt.impl_path.empty()) throw CLI::ValidationError("--impl is required");
    auto model = gppl::io::finite_model_from_json(load_json(opt.impl_path));
    out["dist"] = gppl::io::outcomes_json(gppl::exact::eval_exact(model, program));
  } else if (opt.backend == "mc") {
    if (opt.impl_path.empty()) throw CLI::ValidationError("--impl is required");
    auto impl = gppl::io::impl_from_json(load_json(opt.impl_path));
    auto est = gppl::mc::estimate(program, impl, opt.trials, {opt.seed});
    out = gppl::io::empirical_json(est);
    if (opt.dump_normal_form) {
      auto nf = gppl::sym::normalize(program);
      out["normal_form"] = gppl::io::normal_form_json(nf);
    }
  } else {
    throw CLI::ValidationError("unknown backend " + opt.backend);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

struct RgmOptions {
  std::string graphon_path, check = "all";
  int n = 3;
};

int run_rgm(const RgmOptions& opt) {
  auto w = gppl::io::graphon_from_json(load_json(opt.graphon_path));
  auto model = gppl::sym::induced_rgm(w, opt.n);
  json out;
  out["n"] = opt.n;
  json levels = json::array();
  for (auto& level : model.levels) levels.push_back(gppl::io::adj_dist_json(level));
  out["p"] = levels;

  bool pass = true;
  json checks = json::object();
  auto want = [&](const std::string& name) { return opt.check == "all" || opt.check == name; };
  if (want("exchangeable")) {
    json per = json::array();
    for (int n = 1; n <= opt.n; ++n) {
      auto r = gppl::graphon::check_exchangeable(model.levels[n - 1], n);
      pass = pass && r.pass;
      per.push_back({{"n", n}, {"pass", r.pass}, {"detail", r.detail}});
    }
    checks["exchangeable"] = per;
  }
  if (want("consistent")) {
    json per = json::array();
    for (int n = 1; n + 1 <= opt.n; ++n) {
      auto r = gppl::graphon::check_consistent(model.levels[n], model.levels[n - 1]);
      pass = pass && r.pass;
      per.push_back({{"n", n}, {"pass", r.pass}, {"detail", r.detail}});
    }
    checks["consistent"] = per;
  }
  if (want("local")) {
    json per = json::array();
    for (int n = 2; n <= opt.n; ++n)
      for (int k = 1; k < n; ++k) {
        std::vector<int> a, b;
        for (int i = 0; i < k; ++i) a.push_back(i);
        for (int i = k; i < n; ++i) b.push_back(i);
        auto r = gppl::graphon::check_local(model.levels[n - 1], a, b);
        pass = pass && r.pass;
        per.push_back({{"n", n}, {"split", k}, {"pass", r.pass}, {"detail", r.detail}});
      }
    checks["local"] = per;
  }
  // The symbolic route must reproduce the direct enumeration.
  bool agrees = true;
  if (w.exact())
    for (int n = 1; n <= opt.n; ++n)
      agrees = agrees && model.levels[n - 1] == gppl::graphon::p_w_n(w, n);
  out["checks"] = checks;
  out["agrees_with_direct"] = agrees;
  pass = pass && agrees;
  out["pass"] = pass;
  std::cout << out.dump() << "\n";
  return pass ? 0 : 1;
}

struct LawOptions {
  std::string impl_path;
  std::uint64_t seed = 0;
  int count = 200;
};

int run_check_laws(const LawOptions& opt) {
  gppl::exact::FiniteModel model = opt.impl_path.empty()
                                       ? gppl::exact::two_cluster_model()
                                       : gppl::io::finite_model_from_json(load_json(opt.impl_path));
  gppl::gen::TermGen gen(opt.seed);
  json laws = json::object();
  bool pass = true;
  using gppl::exact::LawId;
  for (LawId law : {LawId::LetAssoc, LawId::LetPair, LawId::LetComm, LawId::LetAffine,
                    LawId::LetVal}) {
    std::vector<gppl::exact::LawInstance> instances;
    instances.reserve(opt.count);
    for (int i = 0; i < opt.count; ++i) instances.push_back(gen.law_instance(law, 6));
    auto report = gppl::exact::check_law(model, law, instances);
    int failures = 0;
    for (auto& item : report.items)
      if (!item.pass) ++failures;
    pass = pass && report.all_pass;
    laws[gppl::exact::law_name(law)] = {{"instances", opt.count}, {"failures", failures}};
  }
  json axioms = json::object();
  for (auto& [law, inst] :
       {std::pair{LawId::EdgeIrrefl, gppl::exact::axiom_edge_irrefl()},
        std::pair{LawId::EdgeSym, gppl::exact::axiom_edge_sym()},
        std::pair{LawId::EdgeDet, gppl::exact::axiom_edge_det()}}) {
    auto report = gppl::exact::check_law(model, law, {inst});
    axioms[gppl::exact::law_name(law)] = {{"pass", report.all_pass},
                                          {"detail", report.items[0].detail}};
  }
  json out = {{"laws", laws}, {"axioms", axioms}, {"pass", pass}};
  std::cout << out.dump() << "\n";
  return pass ? 0 : 1;
}

struct FubiniOptions {
  std::string alpha = "1/2", beta = "1/2", corpus = "standard";
};

int run_fubini(const FubiniOptions& opt) {
  Rat alpha = gppl::parse_rational(opt.alpha);
  Rat beta = gppl::parse_rational(opt.beta);
  std::vector<std::pair<std::string, gppl::rado::DefinableSet2>> corpus;
  if (opt.corpus == "edge") {
    corpus.emplace_back("edge",
                        gppl::rado::DefinableSet2::edge_relation(gppl::rado::empty_support()));
  } else if (opt.corpus == "diagonal") {
    corpus.emplace_back("diagonal",
                        gppl::rado::DefinableSet2::diagonal(gppl::rado::empty_support()));
  } else if (opt.corpus == "full") {
    corpus.emplace_back("full", gppl::rado::DefinableSet2::whole(gppl::rado::empty_support()));
  } else if (opt.corpus == "standard") {
    corpus = gppl::rado::extension_corpus_up_to_one_param();
  } else {
    throw CLI::ValidationError("unknown corpus " + opt.corpus);
  }
  auto report = gppl::rado::fubini_check(alpha, beta, corpus);
  json out;
  if (report.items.size() == 1) {
    out = {{"xy", gppl::io::rat_json(report.items[0].xy)},
           {"yx", gppl::io::rat_json(report.items[0].yx)},
           {"equal", report.items[0].equal}};
  } else {
    json items = json::array();
    for (auto& item : report.items)
      items.push_back({{"name", item.name},
                       {"xy", gppl::io::rat_json(item.xy)},
                       {"yx", gppl::io::rat_json(item.yx)},
                       {"equal", item.equal}});
    out = {{"items", items}, {"all_equal", report.all_equal}};
  }
  std::cout << out.dump() << "\n";
  return 0;
}

struct SampleOptions {
  std::string program, impl_path;
  std::uint64_t trials = 100000, seed = 0;
};

int run_sample(const SampleOptions& opt) {
  auto program = load_program(opt.program);
  auto impl = gppl::io::impl_from_json(load_json(opt.impl_path));
  auto est = gppl::mc::estimate(program, impl, opt.trials, {opt.seed});
  std::cout << gppl::io::empirical_json(est).dump() << "\n";
  return 0;
}

struct CrossOptions {
  std::string program, graphon_path;
  std::uint64_t trials = 100000, seed = 0;
};

int run_cross_check(const CrossOptions& opt) {
  auto program = load_program(opt.program);
  auto w = gppl::io::graphon_from_json(load_json(opt.graphon_path));
  if (!w.exact())
    throw CLI::ValidationError("cross-check needs an exact graphon (constant or step)");
  auto exact_dist = gppl::sym::outcome_distribution(gppl::sym::normalize(program), w);
  gppl::mc::GraphImpl impl = w.kind() == gppl::graphon::Graphon::Kind::Constant
                                 ? gppl::mc::GraphImpl::er_memo(w.alpha())
                                 : gppl::mc::GraphImpl::step_color(w.weights(), w.matrix());
  auto est = gppl::mc::estimate(program, impl, opt.trials, {opt.seed});

  bool pass = true;
  json rows = json::array();
  std::set<gppl::Value> outcomes;
  for (auto& [v, p] : exact_dist.support()) outcomes.insert(v);
  for (auto& [v, c] : est.counts) outcomes.insert(v);
  for (auto& v : outcomes) {
    double p = gppl::rat_double(exact_dist.prob(v));
    double se = std::sqrt(p * (1.0 - p) / static_cast<double>(est.trials));
    double phat = est.freq(v);
    bool ok = se == 0.0 ? phat == p : std::abs(phat - p) <= 4.0 * se;
    pass = pass && ok;
    rows.push_back({{"value", v.to_string()},
                    {"exact", gppl::io::rat_json(exact_dist.prob(v))},
                    {"estimate", phat},
                    {"se", se},
                    {"within_4se", ok}});
  }
  json out = {{"trials", est.trials}, {"outcomes", rows}, {"pass", pass}};
  std::cout << out.dump() << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gppl: interpreter toolchain for the (vertex, new, edge) interface"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  auto* eval = app.add_subcommand("eval", "evaluate a program's outcome distribution");
  eval->add_option("--program", eval_opt.program, "program file")->required();
  eval->add_option("--backend", eval_opt.backend, "exact|symbolic|mc");
  eval->add_option("--graphon", eval_opt.graphon_path, "graphon spec (symbolic backend)");
  eval->add_option("--impl", eval_opt.impl_path, "implementation spec (exact/mc backends)");
  eval->add_option("--trials", eval_opt.trials, "Monte Carlo trials");
  eval->add_option("--seed", eval_opt.seed, "random seed");
  eval->add_flag("--dump-normal-form", eval_opt.dump_normal_form, "include the normal form");

  RgmOptions rgm_opt;
  auto* rgm = app.add_subcommand("rgm", "induced random graph model and its laws");
  rgm->add_option("--graphon", rgm_opt.graphon_path, "graphon spec")->required();
  rgm->add_option("--n", rgm_opt.n, "largest graph size");
  rgm->add_option("--check", rgm_opt.check, "exchangeable|consistent|local|all");

  LawOptions law_opt;
  auto* laws = app.add_subcommand("check-laws", "random program-law suite on the exact backend");
  laws->add_option("--impl", law_opt.impl_path, "finite model (default: two clusters)");
  laws->add_option("--seed", law_opt.seed, "generator seed");
  laws->add_option("--count", law_opt.count, "instances per law");

  FubiniOptions fub_opt;
  auto* fubini = app.add_subcommand("fubini", "iterated internal integrals on vertex pairs");
  fubini->add_option("--alpha", fub_opt.alpha, "edge chance for the y measure");
  fubini->add_option("--beta", fub_opt.beta, "edge chance for the x measure");
  fubini->add_option("--corpus", fub_opt.corpus, "edge|diagonal|full|standard");

  SampleOptions sample_opt;
  auto* sample = app.add_subcommand("sample", "Monte Carlo outcome frequencies");
  sample->add_option("--program", sample_opt.program, "program file")->required();
  sample->add_option("--impl", sample_opt.impl_path, "implementation spec")->required();
  sample->add_option("--trials", sample_opt.trials, "trial count");
  sample->add_option("--seed", sample_opt.seed, "random seed");

  CrossOptions cross_opt;
  auto* cross = app.add_subcommand("cross-check", "symbolic value vs Monte Carlo estimate");
  cross->add_option("--program", cross_opt.program, "program file")->required();
  cross->add_option("--graphon", cross_opt.graphon_path, "graphon spec")->required();
  cross->add_option("--trials", cross_opt.trials, "trial count");
  cross->add_option("--seed", cross_opt.seed, "random seed");

  try {
    app.parse(argc, argv);
    if (*eval) return run_eval(eval_opt);
    if (*rgm) return run_rgm(rgm_opt);
    if (*laws) return run_check_laws(law_opt);
    if (*fubini) return run_fubini(fub_opt);
    if (*sample) return run_sample(sample_opt);
    if (*cross) return run_cross_check(cross_opt);
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
}
