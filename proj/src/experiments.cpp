#include "starsat/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "starsat/binomial.hpp"
#include "starsat/error.hpp"
#include "starsat/rng.hpp"

namespace starsat {

namespace {

constexpr Method kAllMethods[] = {Method::lower, Method::upper_greedy, Method::upper_exact_alpha,
                                  Method::exact, Method::alpha_k,      Method::first_moment};

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string p_hex(double p) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(p)));
  return buf;
}

struct TrialOutcome {
  TrialRecord record;
  std::optional<SaturationCertificate> certificate;
};

TrialOutcome run_method(const Graph& g, const ExperimentConfig& config, Method method, int r, double p,
                        bool retain) {
  TrialOutcome out;
  TrialRecord& rec = out.record;
  const std::uint64_t budget = config.budget(method);
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case Method::lower: {
      const LowerBound lb = sat_lower_bound(g, r, AlphaMethod::exact, budget);
      rec.value = lb.value.to_double();
      rec.certified = lb.certified;
      break;
    }
    case Method::upper_greedy:
    case Method::upper_exact_alpha: {
      const auto is = method == Method::upper_greedy ? IndependentSetMethod::greedy : IndependentSetMethod::exact;
      UpperBound ub = construct_upper(g, r, is, budget);
      rec.value = static_cast<double>(ub.upper);
      rec.ell_used = ub.ell_used;
      rec.certified = !ub.downgraded;
      if (retain) out.certificate = std::move(ub.certificate);
      break;
    }
    case Method::exact: {
      ExactResult ex = sat_exact(g, r, budget);
      rec.value = static_cast<double>(ex.value);
      rec.certified = ex.exact;
      if (retain) out.certificate = std::move(ex.witness);
      break;
    }
    case Method::alpha_k: {
      const AlphaResult a = alpha_k_exact(g, r - 2, budget);
      rec.value = static_cast<double>(a.witness.size());
      rec.certified = a.exact;
      break;
    }
    case Method::first_moment: {
      try {
        const ProbParams params(p);
        const Band band = alpha_k_predicted_band(g.order(), params, r - 2);
        const auto s = static_cast<Vertex>(std::floor(band.hi)) + 1;
        if (s < 1 || s > g.order()) throw DomainError("threshold outside 1..n");
        rec.value = first_moment_Xs({g.order(), params, r - 2, s});
        rec.certified = true;
      } catch (const DomainError&) {
        rec.value = std::numeric_limits<double>::quiet_NaN();
        rec.certified = false;
      }
      break;
    }
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <class T>
T parse_number(std::string_view s, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line, std::string("malformed ") + what);
  return value;
}

double parse_value(std::string_view s, std::size_t line) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return parse_number<double>(s, line, "value");
}

}  // namespace

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::lower:
      return "lower";
    case Method::upper_greedy:
      return "upper-greedy";
    case Method::upper_exact_alpha:
      return "upper-exact-alpha";
    case Method::exact:
      return "exact";
    case Method::alpha_k:
      return "alpha_k";
    case Method::first_moment:
      return "first-moment";
  }
  return "lower";
}

std::optional<Method> method_from_name(std::string_view s) noexcept {
  for (Method m : kAllMethods)
    if (method_name(m) == s) return m;
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (trials_per_cell < 1) throw DomainError("trials_per_cell must be at least 1");
  if (n_values.empty() || p_values.empty() || r_values.empty() || methods.empty())
    throw DomainError("n_values, p_values, r_values and methods must be nonempty");
  for (Vertex n : n_values)
    if (n < 2) throw DomainError("every n must be at least 2");
  for (double p : p_values)
    if (!(p > 0.0 && p < 1.0)) throw DomainError("every p must lie in (0, 1)");
  for (int r : r_values)
    if (r < 2) throw DomainError("every r must be at least 2");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in [0, 1)");
}

std::uint64_t ExperimentConfig::budget(Method m) const {
  auto it = budgets.find(m);
  return it == budgets.end() ? kDefaultBudget : it->second;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  static const char* const kKeys[] = {"n_values", "p_values", "r_values", "trials_per_cell", "master_seed",
                                      "methods",  "budgets",  "epsilon",  "graph_family"};
  try {
    for (const auto& [key, _] : j.items())
      if (std::find_if(std::begin(kKeys), std::end(kKeys), [&](const char* k) { return key == k; }) ==
          std::end(kKeys))
        throw ParseError(0, "unknown config key \"" + key + "\"");
    ExperimentConfig c;
    c.n_values = j.at("n_values").get<std::vector<Vertex>>();
    c.p_values = j.at("p_values").get<std::vector<double>>();
    c.r_values = j.at("r_values").get<std::vector<int>>();
    c.trials_per_cell = j.at("trials_per_cell").get<int>();
    c.master_seed = j.at("master_seed").get<std::uint64_t>();
    for (const auto& name : j.at("methods")) {
      auto m = method_from_name(name.get<std::string>());
      if (!m) throw ParseError(0, "unknown method \"" + name.get<std::string>() + "\"");
      c.methods.push_back(*m);
    }
    if (j.contains("budgets"))
      for (const auto& [name, value] : j.at("budgets").items()) {
        auto m = method_from_name(name);
        if (!m) throw ParseError(0, "unknown method in budgets \"" + name + "\"");
        c.budgets[*m] = value.get<std::uint64_t>();
      }
    if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
    if (j.contains("graph_family")) {
      const auto family = j.at("graph_family").get<std::string>();
      if (family == "gnp")
        c.graph_family = GraphFamily::gnp;
      else if (family == "complete")
        c.graph_family = GraphFamily::complete;
      else
        throw ParseError(0, "unknown graph_family \"" + family + "\"");
    }
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed config: ") + e.what());
  }
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json methods_json = nlohmann::json::array();
  for (Method m : methods) methods_json.push_back(std::string(method_name(m)));
  nlohmann::json budgets_json = nlohmann::json::object();
  for (const auto& [m, b] : budgets) budgets_json[std::string(method_name(m))] = b;
  return {{"n_values", n_values},
          {"p_values", p_values},
          {"r_values", r_values},
          {"trials_per_cell", trials_per_cell},
          {"master_seed", master_seed},
          {"methods", methods_json},
          {"budgets", budgets_json},
          {"epsilon", epsilon},
          {"graph_family", graph_family == GraphFamily::gnp ? "gnp" : "complete"}};
}

std::uint64_t derive_seed(std::uint64_t master, Vertex n, double p, int r, int trial) noexcept {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ static_cast<std::uint64_t>(n));
  h = mix64(h ^ std::bit_cast<std::uint64_t>(p));
  h = mix64(h ^ static_cast<std::uint64_t>(r));
  h = mix64(h ^ static_cast<std::uint64_t>(trial));
  return h;
}

GridResult run_grid(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  struct Task {
    Vertex n;
    double p;
    int r;
    int trial;
  };
  std::vector<Task> tasks;
  for (Vertex n : config.n_values)
    for (double p : config.p_values)
      for (int r : config.r_values)
        for (int t = 0; t < config.trials_per_cell; ++t) tasks.push_back({n, p, r, t});

  std::vector<std::vector<TrialOutcome>> results(tasks.size());
  std::vector<Graph> hosts(options.retain_certificates ? tasks.size() : 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      const std::uint64_t seed = derive_seed(config.master_seed, task.n, task.p, task.r, task.trial);
      const Graph g = config.graph_family == GraphFamily::complete ? complete_graph(task.n)
                                                                   : sample_gnp(task.n, task.p, RngSeed{seed, 0});
      for (Method m : config.methods) {
        TrialOutcome outcome = run_method(g, config, m, task.r, task.p, options.retain_certificates);
        TrialRecord& rec = outcome.record;
        rec.n = task.n;
        rec.p = task.p;
        rec.r = task.r;
        rec.trial = task.trial;
        rec.method = m;
        rec.rng_id = std::string(kRngId);
        rec.seed = seed;
        results[i].push_back(std::move(outcome));
      }
      if (options.retain_certificates) hosts[i] = g;
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  GridResult out;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    for (auto& outcome : results[i]) {
      out.records.push_back(std::move(outcome.record));
      if (options.retain_certificates) {
        out.certificates.push_back(std::move(outcome.certificate));
        out.hosts.push_back(hosts[i]);
      }
    }
  return out;
}

std::string records_to_csv(const std::vector<TrialRecord>& records, bool include_timing) {
  std::string s = "n,p_hex,p_decimal,r,trial,method,value,ell_used,certified,elapsed_ms,rng_id,seed\n";
  for (const TrialRecord& rec : records) {
    s += std::to_string(rec.n) + ',' + p_hex(rec.p) + ',' + format_double(rec.p) + ',' + std::to_string(rec.r) +
         ',' + std::to_string(rec.trial) + ',' + std::string(method_name(rec.method)) + ',' +
         format_double(rec.value) + ',' + (rec.ell_used ? std::to_string(*rec.ell_used) : "") + ',' +
         (rec.certified ? "true" : "false") + ',' + (include_timing ? format_double(rec.elapsed_ms) : "") + ',' +
         rec.rng_id + ',' + std::to_string(rec.seed) + '\n';
  }
  return s;
}

std::vector<TrialRecord> records_from_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines[0] != "n,p_hex,p_decimal,r,trial,method,value,ell_used,certified,elapsed_ms,rng_id,seed")
    throw ParseError(1, "missing or unexpected record CSV header");
  std::vector<TrialRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const auto f = split(lines[i], ',');
    if (f.size() != 12) throw ParseError(line, "expected 12 fields");
    TrialRecord rec;
    rec.n = parse_number<Vertex>(f[0], line, "n");
    std::string_view hex = f[1];
    if (hex.substr(0, 2) != "0x") throw ParseError(line, "malformed p_hex");
    hex.remove_prefix(2);
    std::uint64_t bits = 0;
    auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), bits, 16);
    if (ec != std::errc{} || ptr != hex.data() + hex.size()) throw ParseError(line, "malformed p_hex");
    rec.p = std::bit_cast<double>(bits);
    rec.r = parse_number<int>(f[3], line, "r");
    rec.trial = parse_number<int>(f[4], line, "trial");
    auto m = method_from_name(f[5]);
    if (!m) throw ParseError(line, "unknown method");
    rec.method = *m;
    rec.value = parse_value(f[6], line);
    if (!f[7].empty()) rec.ell_used = parse_number<Vertex>(f[7], line, "ell_used");
    if (f[8] != "true" && f[8] != "false") throw ParseError(line, "certified must be true or false");
    rec.certified = f[8] == "true";
    if (!f[9].empty()) rec.elapsed_ms = parse_value(f[9], line);
    rec.rng_id = std::string(f[10]);
    rec.seed = parse_number<std::uint64_t>(f[11], line, "seed");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records, double epsilon) {
  if (records.empty()) throw DomainError("nothing to summarize");
  for (const TrialRecord& rec : records)
    if (rec.rng_id != records.front().rng_id)
      throw DomainError("records mix rng ids \"" + records.front().rng_id + "\" and \"" + rec.rng_id + "\"");

  std::vector<SummaryRow> rows;
  std::vector<std::vector<double>> values;
  for (const TrialRecord& rec : records) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& row) {
      return row.n == rec.n && std::bit_cast<std::uint64_t>(row.p) == std::bit_cast<std::uint64_t>(rec.p) &&
             row.r == rec.r && row.method == rec.method;
    });
    if (it == rows.end()) {
      rows.push_back({rec.n, rec.p, rec.r, rec.method, 0, 0, 0, 0, 0, std::nullopt, std::nullopt});
      values.emplace_back();
      it = rows.end() - 1;
    }
    values[static_cast<std::size_t>(it - rows.begin())].push_back(rec.value);
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    SummaryRow& row = rows[i];
    const std::vector<double>& v = values[i];
    row.count = v.size();
    double sum = 0;
    for (double x : v) sum += x;
    row.mean = sum / static_cast<double>(v.size());
    double ss = 0;
    for (double x : v) ss += (x - row.mean) * (x - row.mean);
    row.stdev = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
    row.min = *std::min_element(v.begin(), v.end());
    row.max = *std::max_element(v.begin(), v.end());

    try {
      const ProbParams params(row.p);
      switch (row.method) {
        case Method::alpha_k:
          row.band = alpha_k_predicted_band(row.n, params, row.r - 2);
          break;
        case Method::first_moment:
          break;
        default:
          row.band = reference_bands(row.n, params, row.r, epsilon).main;
          break;
      }
    } catch (const DomainError&) {
      row.band.reset();
    }
    if (row.band) {
      const auto hits = std::count_if(v.begin(), v.end(), [&](double x) { return row.band->contains(x); });
      row.band_hit_frac = static_cast<double>(hits) / static_cast<double>(v.size());
    }
  }
  return rows;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
  std::string s = "n,p_decimal,r,method,count,mean,stdev,min,max,band_lo,band_hi,band_hit_frac\n";
  for (const SummaryRow& row : rows) {
    s += std::to_string(row.n) + ',' + format_double(row.p) + ',' + std::to_string(row.r) + ',' +
         std::string(method_name(row.method)) + ',' + std::to_string(row.count) + ',' + format_double(row.mean) +
         ',' + format_double(row.stdev) + ',' + format_double(row.min) + ',' + format_double(row.max) + ',' +
         (row.band ? format_double(row.band->lo) : "") + ',' + (row.band ? format_double(row.band->hi) : "") + ',' +
         (row.band_hit_frac ? format_double(*row.band_hit_frac) : "") + '\n';
  }
  return s;
}

VerifyReport verify_small(Vertex max_n, const std::vector<int>& r_values, std::size_t graph_count,
                          std::uint64_t seed, bool include_complete) {
  if (max_n < 1 || max_n > 10) throw DomainError("verify_small supports 1 <= max_n <= 10");
  for (int r : r_values)
    if (r < 2) throw DomainError("every r must be at least 2");

  std::vector<Graph> corpus;
  Xoshiro256ss rng(RngSeed{seed, 0});
  constexpr double kPs[] = {0.3, 0.5, 0.7};
  for (std::size_t i = 0; i < graph_count; ++i) {
    const auto n = static_cast<Vertex>(1 + rng.below(static_cast<std::uint64_t>(max_n)));
    const double p = kPs[rng.below(3)];
    corpus.push_back(sample_gnp(n, p, RngSeed{seed, i + 1}));
  }
  if (include_complete)
    for (Vertex n = 1; n <= max_n; ++n) corpus.push_back(complete_graph(n));

  VerifyReport report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    for (int r : r_values) {
      auto fail = [&](std::string what) { report.violations.push_back({i, g.order(), r, std::move(what)}); };
      const LowerBound lower = sat_lower_bound(g, r);
      const ExactResult exact = sat_exact(g, r);
      const UpperBound upper = construct_upper(g, r);
      const SaturationCertificate greedy = greedy_saturated(g, r);
      if (!lower.certified) fail("lower bound not certified");
      if (!exact.exact) fail("exact search ran out of budget");
      if (lower.ceiled > exact.value)
        fail("lower " + std::to_string(lower.ceiled) + " > exact " + std::to_string(exact.value));
      if (exact.value > upper.upper)
        fail("exact " + std::to_string(exact.value) + " > upper " + std::to_string(upper.upper));
      if (exact.value > greedy.edge_count())
        fail("exact " + std::to_string(exact.value) + " > greedy " + std::to_string(greedy.edge_count()));
      if (!check_certificate(exact.witness.edges, g, r).valid()) fail("exact witness invalid");
      if (!check_certificate(upper.certificate.edges, g, r).valid()) fail("upper certificate invalid");
      if (!greedy.valid()) fail("greedy certificate invalid");
      if (upper.via_factor && upper.upper * 2 != static_cast<std::int64_t>(g.order() - upper.ell_used) * (r - 1))
        fail("factor-path upper does not equal (n - ell)(r - 1)/2");
      if (r == 2) {
        const auto mmm = static_cast<std::int64_t>(min_maximal_matching_bruteforce(g).size());
        if (mmm != exact.value)
          fail("r=2 exact " + std::to_string(exact.value) + " != minimum maximal matching " + std::to_string(mmm));
      }
      report.observations.push_back({i, g.order(), g.size(), r, lower.ceiled, exact.value, upper.upper});
    }
  }
  return report;
}

}  // namespace starsat
