#include "starsat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "starsat/binomial.hpp"
#include "starsat/certificate_json.hpp"
#include "starsat/edge_list.hpp"
#include "starsat/error.hpp"
#include "starsat/experiments.hpp"
#include "starsat/factor.hpp"
#include "starsat/independence.hpp"
#include "starsat/matching.hpp"
#include "starsat/rng.hpp"
#include "starsat/saturation.hpp"

namespace starsat {

namespace {

constexpr CommandEntry kCommands[] = {
    {"sample_gnp", "gen gnp"},
    {"regular_circulant", "gen regular"},
    {"complete_graph", "gen complete"},
    {"empty_graph", "gen empty"},
    {"induced_subgraph", "gen induced"},
    {"is_k_independent", "alpha check"},
    {"greedy_k_independent", "alpha greedy"},
    {"alpha_k_exact", "alpha exact"},
    {"alpha_k_predicted_band", "moment band"},
    {"binomial_tail_upper", "moment tail"},
    {"binomial_cdf", "moment cdf"},
    {"first_moment_Xs", "moment xs"},
    {"max_matching", "factor matching"},
    {"d_factor", "factor find"},
    {"d_factor_bruteforce", "factor brute"},
    {"af_embedding_condition", "factor condition"},
    {"check_certificate", "check"},
    {"sat_lower_bound", "sat-lower"},
    {"construct_upper", "sat-upper"},
    {"greedy_saturated", "sat-upper --method saturated-greedy"},
    {"sat_exact", "sat-exact"},
    {"classical_sat_star", "formula star"},
    {"classical_sat_clique", "formula clique"},
    {"reference_bands", "formula bands"},
    {"run_grid", "experiment run"},
    {"summarize", "experiment summarize"},
    {"verify_small", "experiment verify-small"},
};

enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("STARSAT_LOG");
  if (!env) return LogLevel::error;
  const std::string v = env;
  if (v == "debug") return LogLevel::debug;
  if (v == "info") return LogLevel::info;
  return LogLevel::error;
}

struct Options {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  int r = 2;
  int k = 0;
  double p = 0.5;
  Vertex n = 0;
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  std::string format = "plain";
  std::string out;
  std::string graph;
  std::string cert;
  std::string cert_out;
  std::string method;
  std::string config;
  std::string in;
  std::string vertices;
  Vertex d = 1;
  Vertex s = 1;
  Vertex delta = 1;
  double epsilon = 0.25;
  bool timing = false;
  Vertex max_n = 8;
  std::size_t count = 100;
  std::vector<int> r_list{2, 3};
  bool include_complete = false;
  std::vector<long long> positional;
};

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err), level_(log_level()) {}

  int run(const std::vector<std::string>& args);

 private:
  void log(LogLevel level, const std::string& msg) const {
    if (level <= level_) err_ << "starsat: " << msg << '\n';
  }

  // Emits to --out (temp file then rename) or to standard output.
  void emit(const std::string& text) const {
    if (opt_.out.empty()) {
      out_ << text;
      return;
    }
    const std::filesystem::path target(opt_.out);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw ParseError(0, "cannot write " + tmp.string());
      f << text;
      if (!f.flush()) throw ParseError(0, "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
    log(LogLevel::info, "wrote " + target.string());
  }

  void emit_json(const nlohmann::json& j) const { emit(j.dump(2) + "\n"); }
  bool json() const { return opt_.format == "json"; }

  Graph load_graph() const {
    if (opt_.graph.empty()) throw CLI::RequiredError("--graph");
    return read_edge_list_file(opt_.graph);
  }

  void write_cert(const SaturationCertificate& cert) const {
    if (opt_.cert_out.empty()) return;
    std::filesystem::path target(opt_.cert_out), tmp = target;
    tmp += ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw ParseError(0, "cannot write " + tmp.string());
      f << certificate_to_json(cert).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, target);
  }

  int gen(const std::string& kind);
  int alpha(const std::string& kind);
  int sat_lower();
  int sat_upper();
  int sat_exact_cmd();
  int check();
  int formula(const std::string& kind);
  int experiment(const std::string& kind);
  int moment(const std::string& kind);
  int factor(const std::string& kind);

  std::ostream& out_;
  std::ostream& err_;
  LogLevel level_;
  Options opt_;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

std::string fmt(const Rational& q) {
  if (q.den == 1) return std::to_string(q.num);
  return fmt(q.to_double());
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--vertices", "not an integer: " + item);
    }
  }
  return out;
}

std::string edge_lines(const EdgeList& edges) {
  std::string s;
  for (const Edge& e : edges) s += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  return s;
}

nlohmann::json edges_json(const EdgeList& edges) {
  nlohmann::json a = nlohmann::json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

int Cli::gen(const std::string& kind) {
  Graph g;
  std::vector<Vertex> original;
  if (kind == "gnp") {
    g = sample_gnp(opt_.n, opt_.p, RngSeed{opt_.seed, opt_.stream});
  } else if (kind == "regular") {
    g = regular_circulant(opt_.n, opt_.d);
  } else if (kind == "complete") {
    g = complete_graph(opt_.n);
  } else if (kind == "empty") {
    g = Graph(opt_.n);
  } else {
    const Graph host = load_graph();
    InducedSubgraph sub = induced_subgraph(host, parse_vertex_list(opt_.vertices));
    g = std::move(sub.graph);
    original = std::move(sub.original);
  }
  if (json())
    emit_json({{"n", g.order()}, {"m", g.size()}, {"edges", edges_json(g.edges())}, {"original", original}});
  else
    emit(write_edge_list(g));
  return kExitOk;
}

int Cli::alpha(const std::string& kind) {
  const Graph g = load_graph();
  if (kind == "check") {
    const bool ok = is_k_independent(g, parse_vertex_list(opt_.vertices), opt_.k);
    emit(json() ? nlohmann::json{{"k_independent", ok}}.dump() + "\n" : std::string(ok ? "true\n" : "false\n"));
    return kExitOk;
  }
  KIndependentWitness w;
  bool exact = true;
  std::uint64_t nodes = 0;
  if (kind == "greedy") {
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    if (opt_.seed != 0) std::shuffle(order.begin(), order.end(), Xoshiro256ss(RngSeed{opt_.seed, opt_.stream}));
    w = greedy_k_independent(g, opt_.k, order);
    exact = false;
  } else {
    AlphaResult a = alpha_k_exact(g, opt_.k, opt_.budget);
    w = std::move(a.witness);
    exact = a.exact;
    nodes = a.nodes;
    if (!exact) log(LogLevel::error, "budget exhausted; size is a lower bound on alpha_k");
  }
  if (json()) {
    nlohmann::json j = witness_to_json(w);
    j["exact"] = exact;
    j["nodes"] = nodes;
    emit_json(j);
  } else {
    emit(std::to_string(w.size()) + "\n");
  }
  return kExitOk;
}

int Cli::sat_lower() {
  const Graph g = load_graph();
  AlphaMethod method = AlphaMethod::exact;
  if (opt_.method == "greedy-upper")
    method = AlphaMethod::greedy_upper;
  else if (!opt_.method.empty() && opt_.method != "exact")
    throw CLI::ValidationError("--method", "expected exact or greedy-upper");
  const LowerBound lb = sat_lower_bound(g, opt_.r, method, opt_.budget);
  if (!lb.certified) log(LogLevel::error, "budget exhausted; lower bound is not certified");
  if (json())
    emit_json({{"lower", std::to_string(lb.value.num) + "/" + std::to_string(lb.value.den)},
               {"lower_value", lb.value.to_double()},
               {"lower_ceiled", lb.ceiled},
               {"alpha", lb.alpha},
               {"certified", lb.certified}});
  else
    emit(fmt(lb.value) + "\n");
  return kExitOk;
}

int Cli::sat_upper() {
  const Graph g = load_graph();
  if (opt_.method == "saturated-greedy") {
    const SaturationCertificate cert = greedy_saturated(g, opt_.r);
    write_cert(cert);
    if (json())
      emit_json({{"upper", cert.edge_count()}, {"certificate", certificate_to_json(cert)}});
    else
      emit(std::to_string(cert.edge_count()) + "\n");
    return kExitOk;
  }
  IndependentSetMethod method = IndependentSetMethod::exact;
  if (opt_.method == "greedy")
    method = IndependentSetMethod::greedy;
  else if (!opt_.method.empty() && opt_.method != "exact")
    throw CLI::ValidationError("--method", "expected exact, greedy or saturated-greedy");
  const UpperBound ub = construct_upper(g, opt_.r, method, opt_.budget);
  if (ub.downgraded) log(LogLevel::error, "budget exhausted; independent set is not maximum");
  write_cert(ub.certificate);
  if (json())
    emit_json({{"upper", ub.upper},
               {"ell_used", ub.ell_used},
               {"via_factor", ub.via_factor},
               {"downgraded", ub.downgraded},
               {"independent_set", witness_to_json(ub.independent_set)},
               {"certificate", certificate_to_json(ub.certificate)}});
  else
    emit(std::to_string(ub.upper) + "\n");
  return kExitOk;
}

int Cli::sat_exact_cmd() {
  const Graph g = load_graph();
  const ExactResult ex = sat_exact(g, opt_.r, opt_.budget);
  if (!ex.exact)
    log(LogLevel::error, "budget exhausted; sat lies in [" + std::to_string(ex.lower) + ", " +
                             std::to_string(ex.value) + "]");
  write_cert(ex.witness);
  if (json())
    emit_json({{"value", ex.value},
               {"lower", ex.lower},
               {"exact", ex.exact},
               {"nodes", ex.nodes},
               {"certificate", certificate_to_json(ex.witness)}});
  else
    emit(std::to_string(ex.value) + "\n");
  return kExitOk;
}

int Cli::check() {
  const Graph g = load_graph();
  if (opt_.cert.empty()) throw CLI::RequiredError("--cert");
  std::ifstream f(opt_.cert);
  if (!f) throw ParseError(0, "cannot open " + opt_.cert);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("certificate is not JSON: ") + e.what());
  }
  const SaturationCertificate stored = certificate_from_json(j);
  if (stored.n != g.order() || stored.host_hash != graph_hash(g))
    throw DomainError("certificate host_hash " + hash_hex(stored.host_hash) + " does not match graph hash " +
                      hash_hex(graph_hash(g)));
  const SaturationCertificate cert = check_certificate(stored.edges, g, stored.r);
  if (json())
    emit_json(certificate_to_json(cert));
  else
    emit(std::string(to_string(cert.verdict)) + "\n");
  return cert.valid() ? kExitOk : kExitDomain;
}

int Cli::formula(const std::string& kind) {
  if (kind == "star" || kind == "clique") {
    if (opt_.positional.size() != 2) throw CLI::ValidationError("formula", "expected two integers: n r");
    const auto n = opt_.positional[0], r = opt_.positional[1];
    emit(std::to_string(kind == "star" ? classical_sat_star(n, r) : classical_sat_clique(n, r)) + "\n");
    return kExitOk;
  }
  const ReferenceBands bands = reference_bands(opt_.n, ProbParams(opt_.p), opt_.r, opt_.epsilon);
  if (json()) {
    nlohmann::json j{{"main", {bands.main.lo, bands.main.hi}}};
    if (bands.matching) j["matching"] = {bands.matching->lo, bands.matching->hi};
    emit_json(j);
  } else {
    std::string s = fmt(bands.main.lo) + "\n" + fmt(bands.main.hi) + "\n";
    if (bands.matching) s += fmt(bands.matching->lo) + "\n" + fmt(bands.matching->hi) + "\n";
    emit(s);
  }
  return kExitOk;
}

int Cli::experiment(const std::string& kind) {
  if (kind == "run") {
    if (opt_.config.empty()) throw CLI::RequiredError("--config");
    std::ifstream f(opt_.config);
    if (!f) throw ParseError(0, "cannot open " + opt_.config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("config is not JSON: ") + e.what());
    }
    const ExperimentConfig config = ExperimentConfig::from_json(j);
    log(LogLevel::info, "running grid with " + std::to_string(opt_.jobs) + " worker(s)");
    const GridResult result = run_grid(config, RunOptions{opt_.jobs, false});
    emit(records_to_csv(result.records, opt_.timing));
    return kExitOk;
  }
  if (kind == "summarize") {
    if (opt_.in.empty()) throw CLI::RequiredError("--in");
    std::ifstream f(opt_.in, std::ios::binary);
    if (!f) throw ParseError(0, "cannot open " + opt_.in);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    emit(summary_to_csv(summarize(records_from_csv(text), opt_.epsilon)));
    return kExitOk;
  }
  const VerifyReport report = verify_small(opt_.max_n, opt_.r_list, opt_.count, opt_.seed, opt_.include_complete);
  if (json()) {
    nlohmann::json v = nlohmann::json::array();
    for (const Violation& x : report.violations)
      v.push_back({{"graph", x.graph_index}, {"n", x.n}, {"r", x.r}, {"what", x.what}});
    emit_json({{"checks", report.observations.size()}, {"violations", v}});
  } else {
    std::string s = std::to_string(report.violations.size()) + "\n";
    for (const Violation& x : report.violations)
      s += "graph " + std::to_string(x.graph_index) + " n=" + std::to_string(x.n) + " r=" + std::to_string(x.r) +
           ": " + x.what + "\n";
    emit(s);
  }
  return report.violations.empty() ? kExitOk : kExitDomain;
}

int Cli::moment(const std::string& kind) {
  double value = 0;
  if (kind == "xs") {
    value = first_moment_Xs({opt_.n, ProbParams(opt_.p), opt_.k, opt_.s});
  } else if (kind == "tail") {
    value = binomial_tail_upper(opt_.n, opt_.s, opt_.p);
  } else if (kind == "cdf") {
    value = binomial_cdf(opt_.n, opt_.s, opt_.p);
  } else {
    const Band band = alpha_k_predicted_band(opt_.n, ProbParams(opt_.p), opt_.k);
    if (json())
      emit_json({{"lo", band.lo}, {"hi", band.hi}});
    else
      emit(fmt(band.lo) + "\n" + fmt(band.hi) + "\n");
    return kExitOk;
  }
  emit(json() ? nlohmann::json{{"value", value}}.dump() + "\n" : fmt(value) + "\n");
  return kExitOk;
}

int Cli::factor(const std::string& kind) {
  if (kind == "condition") {
    const bool ok = af_embedding_condition(opt_.n, opt_.delta, ProbParams(opt_.p));
    emit(json() ? nlohmann::json{{"condition", ok}}.dump() + "\n" : std::string(ok ? "true\n" : "false\n"));
    return kExitOk;
  }
  const Graph g = load_graph();
  if (kind == "matching") {
    const EdgeList m = max_matching(g);
    if (json())
      emit_json({{"size", m.size()}, {"edges", edges_json(m)}});
    else
      emit(std::to_string(m.size()) + "\n" + edge_lines(m));
    return kExitOk;
  }
  const FactorResult f = kind == "find" ? d_factor(g, opt_.d) : d_factor_bruteforce(g, opt_.d);
  if (json())
    emit_json({{"found", f.found}, {"d", f.d}, {"edges", edges_json(f.edges)}});
  else
    emit(std::string(f.found ? "found\n" : "not-found\n") + edge_lines(f.edges));
  return kExitOk;
}

int Cli::run(const std::vector<std::string>& args) {
  CLI::App app{"starsat: star saturation numbers of graphs and random graphs", "starsat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto fmt_opt = [&](CLI::App* sub) {
    sub->add_option("--format", opt_.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    sub->add_option("--out", opt_.out, "Write output to this path instead of standard output");
  };
  auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", opt_.graph, "Edge-list file")->required(); };

  CLI::App* gen = app.add_subcommand("gen", "Write graphs as edge lists");
  gen->require_subcommand(1);
  auto* gen_gnp = gen->add_subcommand("gnp", "Sample G(n, p)");
  gen_gnp->add_option("--n", opt_.n)->required();
  gen_gnp->add_option("--p", opt_.p)->required();
  gen_gnp->add_option("--seed", opt_.seed)->required();
  gen_gnp->add_option("--stream", opt_.stream);
  auto* gen_regular = gen->add_subcommand("regular", "d-regular circulant");
  gen_regular->add_option("--n", opt_.n)->required();
  gen_regular->add_option("--d", opt_.d)->required();
  auto* gen_complete = gen->add_subcommand("complete", "Complete graph K_n");
  gen_complete->add_option("--n", opt_.n)->required();
  auto* gen_empty = gen->add_subcommand("empty", "Edgeless graph");
  gen_empty->add_option("--n", opt_.n)->required();
  auto* gen_induced = gen->add_subcommand("induced", "Induced subgraph on --vertices");
  graph_opt(gen_induced);
  gen_induced->add_option("--vertices", opt_.vertices, "Comma-separated vertex ids")->required();
  for (auto* s : {gen_gnp, gen_regular, gen_complete, gen_empty, gen_induced}) fmt_opt(s);

  CLI::App* alpha = app.add_subcommand("alpha", "k-independent sets");
  alpha->require_subcommand(1);
  auto* alpha_exact = alpha->add_subcommand("exact", "alpha_k by branch and bound");
  auto* alpha_greedy = alpha->add_subcommand("greedy", "Greedy maximal k-independent set");
  auto* alpha_check = alpha->add_subcommand("check", "Is --vertices k-independent?");
  for (auto* s : {alpha_exact, alpha_greedy, alpha_check}) {
    graph_opt(s);
    s->add_option("--k", opt_.k)->required();
    fmt_opt(s);
  }
  alpha_exact->add_option("--budget", opt_.budget);
  alpha_greedy->add_option("--seed", opt_.seed, "Shuffle the scan order (0 keeps identity order)");
  alpha_check->add_option("--vertices", opt_.vertices)->required();

  CLI::App* lower = app.add_subcommand("sat-lower", "Lower bound (r-1)(n - alpha_{r-2})/2");
  CLI::App* upper = app.add_subcommand("sat-upper", "Constructive upper bound with certificate");
  CLI::App* exact = app.add_subcommand("sat-exact", "Exact sat(G, K_{1,r})");
  for (auto* s : {lower, upper, exact}) {
    graph_opt(s);
    s->add_option("--r", opt_.r)->required();
    s->add_option("--budget", opt_.budget);
    fmt_opt(s);
  }
  lower->add_option("--method", opt_.method, "exact | greedy-upper");
  upper->add_option("--method", opt_.method, "exact | greedy | saturated-greedy");
  upper->add_option("--cert-out", opt_.cert_out, "Write the certificate JSON here");
  exact->add_option("--cert-out", opt_.cert_out, "Write the certificate JSON here");

  CLI::App* check = app.add_subcommand("check", "Verify a saturation certificate against a graph");
  graph_opt(check);
  check->add_option("--cert", opt_.cert)->required();
  fmt_opt(check);

  CLI::App* formula = app.add_subcommand("formula", "Closed-form reference values");
  formula->require_subcommand(1);
  auto* formula_star = formula->add_subcommand("star", "sat(n, K_{1,r})");
  auto* formula_clique = formula->add_subcommand("clique", "sat(n, K_r)");
  for (auto* s : {formula_star, formula_clique}) s->add_option("n_r", opt_.positional, "n r")->expected(2)->required();
  auto* formula_bands = formula->add_subcommand("bands", "Reference bands for G(n, p)");
  formula_bands->add_option("--n", opt_.n)->required();
  formula_bands->add_option("--p", opt_.p)->required();
  formula_bands->add_option("--r", opt_.r)->required();
  formula_bands->add_option("--epsilon", opt_.epsilon);
  fmt_opt(formula_bands);

  CLI::App* experiment = app.add_subcommand("experiment", "Seeded Monte Carlo grids");
  experiment->require_subcommand(1);
  auto* exp_run = experiment->add_subcommand("run", "Run a config, emit record CSV");
  exp_run->add_option("--config", opt_.config)->required();
  exp_run->add_option("--jobs", opt_.jobs)->check(CLI::PositiveNumber);
  exp_run->add_flag("--timing", opt_.timing, "Fill elapsed_ms (output no longer reproducible)");
  auto* exp_summary = experiment->add_subcommand("summarize", "Summarize a record CSV");
  exp_summary->add_option("--in", opt_.in)->required();
  exp_summary->add_option("--epsilon", opt_.epsilon);
  auto* exp_verify = experiment->add_subcommand("verify-small", "Cross-check bounds on small random graphs");
  exp_verify->add_option("--max-n", opt_.max_n);
  exp_verify->add_option("--r", opt_.r_list)->delimiter(',');
  exp_verify->add_option("--count", opt_.count);
  exp_verify->add_option("--seed", opt_.seed)->required();
  exp_verify->add_flag("--include-complete", opt_.include_complete);
  for (auto* s : {exp_run, exp_summary, exp_verify}) fmt_opt(s);

  CLI::App* moment = app.add_subcommand("moment", "First-moment and binomial tail quantities");
  moment->require_subcommand(1);
  auto* m_xs = moment->add_subcommand("xs", "E[X_s]");
  m_xs->add_option("--n", opt_.n)->required();
  m_xs->add_option("--p", opt_.p)->required();
  m_xs->add_option("--k", opt_.k)->required();
  m_xs->add_option("--s", opt_.s)->required();
  auto* m_tail = moment->add_subcommand("tail", "C(n,s)(1-p)^(n-s)");
  auto* m_cdf = moment->add_subcommand("cdf", "P(Bin(n,p) <= s)");
  for (auto* s : {m_tail, m_cdf}) {
    s->add_option("--n", opt_.n)->required();
    s->add_option("--s", opt_.s)->required();
    s->add_option("--p", opt_.p)->required();
  }
  auto* m_band = moment->add_subcommand("band", "Predicted alpha_k window");
  m_band->add_option("--n", opt_.n)->required();
  m_band->add_option("--p", opt_.p)->required();
  m_band->add_option("--k", opt_.k)->required();
  for (auto* s : {m_xs, m_tail, m_cdf, m_band}) fmt_opt(s);

  CLI::App* factor = app.add_subcommand("factor", "Matchings and d-factors");
  factor->require_subcommand(1);
  auto* f_find = factor->add_subcommand("find", "d-factor via matching");
  auto* f_brute = factor->add_subcommand("brute", "d-factor by exhaustive search");
  for (auto* s : {f_find, f_brute}) {
    graph_opt(s);
    s->add_option("--d", opt_.d)->required();
  }
  auto* f_matching = factor->add_subcommand("matching", "Maximum matching");
  graph_opt(f_matching);
  auto* f_condition = factor->add_subcommand("condition", "Embedding condition for max degree --delta");
  f_condition->add_option("--n", opt_.n)->required();
  f_condition->add_option("--delta", opt_.delta)->required();
  f_condition->add_option("--p", opt_.p)->required();
  for (auto* s : {f_find, f_brute, f_matching, f_condition}) fmt_opt(s);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front(); sub;
         sub = sub->get_subcommands().empty() ? nullptr : sub->get_subcommands().front())
      target = sub;
    out_ << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err_ << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto chosen = [](const CLI::App* parent) {
    return parent->get_subcommands().empty() ? std::string() : parent->get_subcommands().front()->get_name();
  };
  try {
    if (gen->parsed()) return this->gen(chosen(gen));
    if (alpha->parsed()) return this->alpha(chosen(alpha));
    if (lower->parsed()) return sat_lower();
    if (upper->parsed()) return sat_upper();
    if (exact->parsed()) return sat_exact_cmd();
    if (check->parsed()) return this->check();
    if (formula->parsed()) return this->formula(chosen(formula));
    if (experiment->parsed()) return this->experiment(chosen(experiment));
    if (moment->parsed()) return this->moment(chosen(moment));
    if (factor->parsed()) return this->factor(chosen(factor));
  } catch (const CLI::Error& e) {
    err_ << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InfeasibleError& e) {
    err_ << "infeasible: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ParseError& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

std::span<const CommandEntry> command_table() { return kCommands; }

}  // namespace starsat
