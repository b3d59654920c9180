#include <cmath>

#include "doctest.h"
#include "starsat/error.hpp"
#include "starsat/experiments.hpp"
#include "starsat/rng.hpp"
#include "starsat/saturation.hpp"

using namespace starsat;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n_values = {8, 12};
  c.p_values = {0.3, 0.6};
  c.r_values = {2};
  c.trials_per_cell = 5;
  c.master_seed = 99;
  c.methods = {Method::lower, Method::upper_greedy};
  return c;
}

}  // namespace

TEST_CASE("method names") {
  for (Method m : {Method::lower, Method::upper_greedy, Method::upper_exact_alpha, Method::exact, Method::alpha_k,
                   Method::first_moment})
    CHECK(method_from_name(method_name(m)) == m);
  CHECK(method_name(Method::upper_exact_alpha) == "upper-exact-alpha");
  CHECK_FALSE(method_from_name("upper"));
}

TEST_CASE("config validation and JSON") {
  ExperimentConfig c = small_config();
  CHECK_NOTHROW(c.validate());
  const ExperimentConfig back = ExperimentConfig::from_json(c.to_json());
  CHECK(back.to_json() == c.to_json());
  c.trials_per_cell = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = small_config();
  c.p_values = {1.0};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = small_config();
  c.r_values = {1};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = small_config();
  c.n_values = {1};
  CHECK_THROWS_AS(c.validate(), DomainError);
  nlohmann::json j = small_config().to_json();
  j["colour"] = 1;
  CHECK_THROWS_AS(ExperimentConfig::from_json(j), ParseError);
  j = small_config().to_json();
  j["methods"] = {"lower", "magic"};
  CHECK_THROWS_AS(ExperimentConfig::from_json(j), ParseError);
}

TEST_CASE("grid record count and order") {
  const GridResult r = run_grid(small_config());
  REQUIRE(r.records.size() == 2 * 2 * 1 * 5 * 2);
  CHECK(r.records[0].n == 8);
  CHECK(r.records[0].p == 0.3);
  CHECK(r.records[0].method == Method::lower);
  CHECK(r.records[1].method == Method::upper_greedy);
  CHECK(r.records[0].seed == r.records[1].seed);
  CHECK(r.records.back().n == 12);
  for (const TrialRecord& rec : r.records) CHECK(rec.rng_id == kRngId);
}

TEST_CASE("complete-graph override reproduces the lower-bound value") {
  ExperimentConfig c;
  c.n_values = {4};
  c.p_values = {0.5};
  c.r_values = {2};
  c.trials_per_cell = 1;
  c.methods = {Method::lower};
  c.graph_family = GraphFamily::complete;
  const GridResult r = run_grid(c);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].value == 1.5);
  CHECK(r.records[0].certified);
}

TEST_CASE("grid output is independent of worker count") {
  ExperimentConfig c = small_config();
  c.methods = {Method::lower, Method::upper_greedy, Method::upper_exact_alpha, Method::exact, Method::alpha_k,
               Method::first_moment};
  c.r_values = {2, 3};
  const std::string one = records_to_csv(run_grid(c, {1, false}).records);
  CHECK(one == records_to_csv(run_grid(c, {1, false}).records));
  CHECK(one == records_to_csv(run_grid(c, {4, false}).records));
  CHECK(one == records_to_csv(run_grid(c, {8, false}).records));
}

TEST_CASE("seed derivation") {
  CHECK(derive_seed(1, 10, 0.5, 2, 0) == derive_seed(1, 10, 0.5, 2, 0));
  CHECK(derive_seed(1, 10, 0.5, 2, 0) != derive_seed(1, 10, 0.5, 2, 1));
  CHECK(derive_seed(1, 10, 0.5, 2, 0) != derive_seed(2, 10, 0.5, 2, 0));
  CHECK(derive_seed(1, 10, 0.5, 2, 0) != derive_seed(1, 10, 0.5000000000000001, 2, 0));
}

TEST_CASE("retained certificates are valid") {
  ExperimentConfig c = small_config();
  c.methods = {Method::upper_greedy, Method::upper_exact_alpha, Method::exact, Method::lower};
  c.r_values = {2, 3};
  const GridResult r = run_grid(c, {2, true});
  REQUIRE(r.certificates.size() == r.records.size());
  REQUIRE(r.hosts.size() == r.records.size());
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    if (r.records[i].method == Method::lower) {
      CHECK_FALSE(r.certificates[i]);
      continue;
    }
    REQUIRE(r.certificates[i]);
    const SaturationCertificate& cert = *r.certificates[i];
    CHECK(check_certificate(cert.edges, r.hosts[i], r.records[i].r).valid());
    CHECK(cert.edge_count() == static_cast<std::int64_t>(r.records[i].value));
  }
}

TEST_CASE("CSV round trip") {
  ExperimentConfig c = small_config();
  c.methods = {Method::lower, Method::upper_exact_alpha, Method::first_moment};
  const GridResult r = run_grid(c);
  const std::string csv = records_to_csv(r.records);
  CHECK(csv.rfind("n,p_hex,p_decimal,r,trial,method,value,ell_used,certified,elapsed_ms,rng_id,seed\n", 0) == 0);
  const std::vector<TrialRecord> back = records_from_csv(csv);
  REQUIRE(back.size() == r.records.size());
  CHECK(records_to_csv(back) == csv);
  CHECK(summary_to_csv(summarize(back, 0.25)) == summary_to_csv(summarize(r.records, 0.25)));
  CHECK_THROWS_AS(records_from_csv("n,p\n1,2\n"), ParseError);
}

TEST_CASE("summarize") {
  TrialRecord base;
  base.n = 100;
  base.p = 0.5;
  base.r = 2;
  base.method = Method::upper_greedy;
  base.rng_id = std::string(kRngId);
  base.value = 7;
  std::vector<SummaryRow> one = summarize({base}, 0.25);
  REQUIRE(one.size() == 1);
  CHECK(one[0].count == 1);
  CHECK(one[0].mean == 7);
  CHECK(one[0].stdev == 0);

  std::vector<TrialRecord> three(3, base);
  for (auto& t : three) t.value = 45;
  const ReferenceBands bands = reference_bands(100, ProbParams(0.5), 2, 0.25);
  REQUIRE(bands.main.contains(45));
  const std::vector<SummaryRow> s = summarize(three, 0.25);
  CHECK(*s[0].band_hit_frac == 1.0);
  CHECK(s[0].band->lo == bands.main.lo);

  three[1].value = 48;
  three[2].value = 51;
  const std::vector<SummaryRow> t = summarize(three, 0.25);
  CHECK(t[0].mean == 48);
  CHECK(t[0].stdev == 3);
  CHECK(t[0].min == 45);
  CHECK(t[0].max == 51);
  CHECK(*t[0].band_hit_frac == doctest::Approx(1.0 / 3));

  std::vector<TrialRecord> mixed(2, base);
  mixed[1].rng_id = "other";
  CHECK_THROWS_AS(summarize(mixed, 0.25), DomainError);
  CHECK_THROWS_AS(summarize({}, 0.25), DomainError);
}

TEST_CASE("verify_small") {
  CHECK(verify_small(8, {2, 3}, 0, 1).violations.empty());
  const VerifyReport small = verify_small(4, {2}, 20, 5, true);
  CHECK(small.violations.empty());
  bool saw_k4 = false;
  for (const SmallObservation& o : small.observations)
    if (o.n == 4 && o.m == 6) {
      saw_k4 = true;
      CHECK(o.exact == 2);
    }
  CHECK(saw_k4);
  CHECK(verify_small(8, {2, 3}, 150, 7).violations.empty());
  CHECK_THROWS_AS(verify_small(11, {2}, 1, 1), DomainError);
}
