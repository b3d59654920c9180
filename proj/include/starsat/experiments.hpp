#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "starsat/graph.hpp"
#include "starsat/independence.hpp"
#include "starsat/saturation.hpp"

namespace starsat {

enum class Method { lower, upper_greedy, upper_exact_alpha, exact, alpha_k, first_moment };

std::string_view method_name(Method m) noexcept;  // "lower", "upper-greedy", ...
std::optional<Method> method_from_name(std::string_view s) noexcept;

enum class GraphFamily { gnp, complete };

struct ExperimentConfig {
  std::vector<Vertex> n_values;
  std::vector<double> p_values;
  std::vector<int> r_values;
  int trials_per_cell = 1;
  std::uint64_t master_seed = 0;
  std::vector<Method> methods;
  std::map<Method, std::uint64_t> budgets;  // missing entries use kDefaultBudget
  double epsilon = 0.25;
  GraphFamily graph_family = GraphFamily::gnp;

  void validate() const;  // throws DomainError
  std::uint64_t budget(Method m) const;

  // JSON keys mirror the field names; methods and budget keys use method_name().
  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct TrialRecord {
  Vertex n = 0;
  double p = 0;
  int r = 2;
  int trial = 0;
  Method method = Method::lower;
  double value = 0;
  std::optional<Vertex> ell_used;
  bool certified = false;
  double elapsed_ms = 0;
  std::string rng_id;
  std::uint64_t seed = 0;  // graph seed of this trial
};

// Graph seed of one trial: splitmix64 chain over master, n, bits(p), r, trial.
std::uint64_t derive_seed(std::uint64_t master, Vertex n, double p, int r, int trial) noexcept;

struct RunOptions {
  int jobs = 1;
  bool retain_certificates = false;
};

struct GridResult {
  std::vector<TrialRecord> records;  // sorted by (cell, trial, method)
  std::vector<std::optional<SaturationCertificate>> certificates;  // parallel to records when retained
  std::vector<Graph> hosts;  // per record when retained, else empty
};

// One record per (cell, trial, method). Cells enumerate n, then p, then r in
// config order. Output is independent of `jobs`.
GridResult run_grid(const ExperimentConfig& config, const RunOptions& options = {});

// CSV columns: n,p_hex,p_decimal,r,trial,method,value,ell_used,certified,elapsed_ms,rng_id,seed.
// elapsed_ms is left empty unless include_timing, so untimed output is reproducible byte for byte.
std::string records_to_csv(const std::vector<TrialRecord>& records, bool include_timing = false);
std::vector<TrialRecord> records_from_csv(std::string_view text);  // throws ParseError

struct SummaryRow {
  Vertex n = 0;
  double p = 0;
  int r = 2;
  Method method = Method::lower;
  std::size_t count = 0;
  double mean = 0;
  double stdev = 0;  // sample standard deviation, 0 for a single record
  double min = 0;
  double max = 0;
  std::optional<Band> band;
  std::optional<double> band_hit_frac;
};

// Band per method: the main saturation band for lower/upper-*/exact,
// alpha_k_predicted_band(n, p, r - 2) for alpha_k, none for first-moment.
// Throws DomainError on empty input or mixed rng ids.
std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records, double epsilon);
std::string summary_to_csv(const std::vector<SummaryRow>& rows);

struct Violation {
  std::size_t graph_index = 0;
  Vertex n = 0;
  int r = 2;
  std::string what;
};

struct SmallObservation {
  std::size_t graph_index = 0;
  Vertex n = 0;
  std::size_t m = 0;
  int r = 2;
  std::int64_t lower_ceiled = 0;
  std::int64_t exact = 0;
  std::int64_t upper = 0;
};

struct VerifyReport {
  std::vector<Violation> violations;
  std::vector<SmallObservation> observations;
};

// Random corpus of `graph_count` graphs (n uniform in 1..max_n, p in {0.3, 0.5, 0.7})
// plus K_1..K_max_n when include_complete. Checks the lower/exact/upper sandwich,
// certificate validity and, for r = 2, agreement with min_maximal_matching_bruteforce.
VerifyReport verify_small(Vertex max_n, const std::vector<int>& r_values, std::size_t graph_count,
                          std::uint64_t seed, bool include_complete = false);

}  // namespace starsat
