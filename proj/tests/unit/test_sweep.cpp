#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "tprabi/alpha.hpp"
#include "tprabi/bethe.hpp"
#include "tprabi/checks.hpp"
#include "tprabi/csv.hpp"
#include "tprabi/sweep.hpp"

using tprabi::Complex;
using tprabi::CsvTable;
using tprabi::GridSpec;

namespace {

double cell_number(const CsvTable& t, std::size_t row, const std::string& col) {
  for (std::size_t k = 0; k < t.header().size(); ++k) {
    if (t.header()[k] != col) continue;
    const auto& cell = t.row(row)[k];
    if (std::holds_alternative<double>(cell)) return std::get<double>(cell);
    return static_cast<double>(std::get<long long>(cell));
  }
  throw std::runtime_error("missing column " + col);
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("grid validation") {
  CHECK(GridSpec{0.0, 1.0, 3}.points() == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(GridSpec{0.3, 0.3, 1}.points() == std::vector<double>{0.3});
  CHECK_THROWS_AS(GridSpec{1.0, 0.0, 5}.points(), tprabi::InvalidParameter);
  CHECK_THROWS_AS(GridSpec{0.1, 0.2, 0}.points(), tprabi::InvalidParameter);
  CHECK_THROWS_AS(GridSpec{0.1, 0.2, 1}.points(), tprabi::InvalidParameter);
}

TEST_CASE("alpha scan: one row per grid point, tight residuals") {
  tprabi::AlphaScanSpec spec;
  spec.lambda_grid = {0.05, 1.0, 96};
  const CsvTable table = tprabi::cmd_alpha_scan(spec);
  CHECK(table.row_count() == 96);
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    CHECK(cell_number(table, r, "branch_point") == 0.0);
    for (int k = 1; k <= 4; ++k) {
      const double res = cell_number(table, r, "residual" + std::to_string(k));
      CHECK(res >= 0.0);
      CHECK(res < 1e-9);
    }
  }
}

TEST_CASE("alpha scan rejects a grid through zero") {
  tprabi::AlphaScanSpec spec;
  spec.lambda_grid = {-0.1, 0.1, 3};
  CHECK_THROWS_AS((void)tprabi::cmd_alpha_scan(spec),
                  tprabi::InvalidParameter);
}

TEST_CASE("alpha scan is deterministic across thread counts") {
  tprabi::AlphaScanSpec spec;
  spec.lambda_grid = {0.05, 1.2, 64};
  spec.threads = 1;
  const std::string serial = tprabi::cmd_alpha_scan(spec).to_string();
  spec.threads = 4;
  const std::string parallel = tprabi::cmd_alpha_scan(spec).to_string();
  CHECK(serial == parallel);
}

TEST_CASE("solve: first excited state carries the origin root") {
  tprabi::SolveSpec spec;
  spec.n = 1;
  spec.omega = 1.0;
  spec.lambda = 0.3;
  spec.epsilon = 0.2;
  spec.run_oracle = false;
  const CsvTable table = tprabi::cmd_solve(spec);
  bool found = false;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    if (std::abs(cell_number(table, r, "re_z1")) < 1e-10 &&
        std::abs(cell_number(table, r, "im_z1")) < 1e-10 &&
        cell_number(table, r, "verified") == 1.0)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("solve rejects the singular coupling") {
  tprabi::SolveSpec spec;
  spec.lambda = 0.0;
  CHECK_THROWS_AS((void)tprabi::cmd_solve(spec), tprabi::InvalidParameter);
}

TEST_CASE("sweep: closed-form energies on the n = 1 fast path") {
  tprabi::SweepGridSpec spec;
  spec.n = 1;
  spec.lambda_grid = {0.1, 0.4, 4};
  spec.epsilon_grid = {-0.5, 0.5, 3};
  spec.branch = 3;
  const CsvTable table = tprabi::cmd_sweep(spec);
  REQUIRE(table.row_count() > 0);
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const double lam = cell_number(table, r, "lambda");
    const double eps = cell_number(table, r, "epsilon");
    const Complex alpha(cell_number(table, r, "re_alpha"),
                        cell_number(table, r, "im_alpha"));
    const tprabi::ModelParams params(0.0, eps, 1.0, lam);
    const Complex expected = tprabi::first_excited_energy(alpha, params);
    const Complex got(cell_number(table, r, "re_E"),
                      cell_number(table, r, "im_E"));
    CHECK(std::abs(got - expected) / (1.0 + std::abs(expected)) < 1e-12);
    CHECK(cell_number(table, r, "verified") == 1.0);
  }
}

TEST_CASE("sweep: unreachable fixed splitting empties the locus") {
  tprabi::SweepGridSpec spec;
  spec.n = 0;
  spec.lambda_grid = {0.05, 0.45, 10};
  spec.epsilon_grid = {-1.0, 1.0, 10};
  spec.delta = 10.0;  // delta^2 = 100 is far outside the reachable range
  const CsvTable table = tprabi::cmd_sweep(spec);
  for (std::size_t r = 0; r < table.row_count(); ++r)
    CHECK(cell_number(table, r, "physical") == 0.0);
}

TEST_CASE("sweep is deterministic across thread counts") {
  tprabi::SweepGridSpec spec;
  spec.n = 0;
  spec.lambda_grid = {0.1, 0.4, 6};
  spec.epsilon_grid = {-0.6, 0.6, 5};
  spec.threads = 1;
  const std::string serial = tprabi::cmd_sweep(spec).to_string();
  spec.threads = 4;
  const std::string parallel = tprabi::cmd_sweep(spec).to_string();
  CHECK(serial == parallel);
}

TEST_CASE("oracle command reports the analytic match") {
  tprabi::OracleSpec spec;
  spec.omega = 1.0;
  spec.lambda = 0.0;
  spec.epsilon = 0.25;
  spec.delta = 0.6;
  spec.energy = std::sqrt(0.6 * 0.6 + 0.25 * 0.25);
  const CsvTable table = tprabi::cmd_oracle(spec);
  REQUIRE(table.row_count() == 1);
  CHECK(cell_number(table, 0, "matched") == 1.0);
  CHECK(cell_number(table, 0, "unstable") == 0.0);
}

TEST_CASE("verify table and fault injection") {
  tprabi::CheckOptions options;
  options.only = "n0-exactness";
  auto results = tprabi::run_checks(options);
  REQUIRE(results.size() == 1);
  CHECK(results[0].pass);

  options.inject_fault = 1e-3;
  results = tprabi::run_checks(options);
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].pass);

  const CsvTable table = tprabi::verify_table(results);
  CHECK(table.row_count() == 1);
  CHECK(table.to_string().find("fail") != std::string::npos);

  tprabi::CheckOptions bogus;
  bogus.only = "no-such-check";
  CHECK_THROWS_AS((void)tprabi::run_checks(bogus), tprabi::InvalidParameter);
}

TEST_CASE("csv formatting is locale-free and rectangular") {
  CsvTable table({"a", "b"});
  table.push_row({0.5, std::string("x")});
  CHECK(table.to_string() == "a,b\n0.5,x\n");
  CHECK_THROWS_AS(table.push_row({1.0}), tprabi::InvalidParameter);
  CHECK(CsvTable::format_cell(1e-17).find(',') == std::string::npos);
}

}  // TEST_SUITE
