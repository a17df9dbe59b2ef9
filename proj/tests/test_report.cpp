#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ulab/report.hpp"
#include "ulab/spectral.hpp"
#include "ulab/step_basis.hpp"

using namespace ulab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("ulab_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("JSON records round-trip bit-exactly") {
  const auto records = run_protocol({10, 100, 40, 400});
  for (const auto& r : records) {
    const std::string line = report::to_json(r).dump();
    const MeasurementRecord back = report::record_from_json(report::Json::parse(line));
    CHECK(back.stage == r.stage);
    CHECK(back.U == r.U);
    CHECK(back.P == r.P);
    CHECK(back.P_cumulative == r.P_cumulative);
    CHECK(back.sd_x == r.sd_x);
    CHECK(back.sd_p == r.sd_p);
    CHECK(back.approx == r.approx);
    CHECK(back.params.kmax == 400);
  }
  const auto j = report::to_json(records[3]);
  CHECK(j.at("approx").get<bool>());
  CHECK(j.at("stage") == "iv");

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 200; ++i) {
    MeasurementRecord r;
    r.U = u(rng) * 1e-7;
    r.P = std::abs(u(rng)) / 1e3;
    const auto back = report::record_from_json(report::Json::parse(report::to_json(r).dump()));
    CHECK(back.U == r.U);
    CHECK(back.P == r.P);
  }
}

TEST_CASE("format_double keeps 17 digits") {
  CHECK(report::format_double(0.1) == "0.10000000000000001");
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 100; ++i) {
    const double v = std::exp(u(rng));
    CHECK(std::stod(report::format_double(v)) == v);
  }
}

TEST_CASE("CSV layout") {
  report::Table t{{"a", "b"}, {{1.0, 0.5}, {2.0, 0.25}}};
  CHECK(report::to_csv(t) == "a,b\n1,0.5\n2,0.25\n");
  CHECK(report::to_json_lines(t) == "{\"a\":1.0,\"b\":0.5}\n{\"a\":2.0,\"b\":0.25}\n");
}

TEST_CASE("kennard table") {
  const report::Table t = report::kennard_table(5);
  REQUIRE(t.rows.size() == 5);
  CHECK(std::abs(t.rows[0][1] - 0.180756) < 1e-6);
  CHECK(std::abs(t.rows[0][2] - 3.14159) < 1e-5);
  CHECK(std::abs(t.rows[0][3] - 0.567862) < 1e-6);
  CHECK(t.rows[1][3] == doctest::Approx(1.670289835237122));
  for (const auto& row : t.rows) CHECK(row[3] >= 0.5);
}

TEST_CASE("figures") {
  report::FigureConfig cfg;
  cfg.params = {10, 200, 80, 800};
  cfg.samples = 4001;
  cfg.spectrum_kmax = 1600;
  const report::FigureSet f = report::make_figures(cfg);

  SUBCASE("fig1 peak") {
    CHECK(f.fig1.rows[2000][0] == 0.5);
    CHECK(f.fig1.rows[2000][1] == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("fig3 cutoff behaviour") {
    double total = 0.0, tail = 0.0, peak = 0.0, tail_peak = 0.0;
    for (const auto& row : f.fig3.rows) {
      total += row[1];
      peak = std::max(peak, row[1]);
      if (row[0] > 800) {
        tail += row[1];
        tail_peak = std::max(tail_peak, row[1]);
      }
    }
    CHECK(f.fig3.rows.size() == 1600);
    CHECK(f.fig3.rows[0][1] == doctest::Approx(0.00899826).epsilon(1e-6));
    // Individual coefficients past the cutoff stay below 2% of the peak.
    CHECK(tail_peak < 0.02 * peak);
    // The 1/k^2 tail still carries about 5% of the unit norm.
    const double kept = total - tail;
    CHECK(1.0 - kept == doctest::Approx(0.0500588079306251).epsilon(1e-9));
    const SineSeries far = sine_coefficients(reduce({10, 1}, 200, 80), 200000);
    CHECK(far.weight() > 0.9997);
  }
  SUBCASE("fig4 follows fig2") {
    double peak = 0.0, l1_diff = 0.0, l1 = 0.0;
    for (std::size_t i = 0; i < f.fig2.rows.size(); ++i) {
      peak = std::max(peak, f.fig2.rows[i][1]);
      l1_diff += std::abs(f.fig4.rows[i][1] - f.fig2.rows[i][1]);
      l1 += f.fig2.rows[i][1];
    }
    CHECK(peak == doctest::Approx(2.0 * std::pow(std::sin(kPi * 0.4), 2) * 200 /
                                  reduce({10, 1}, 200, 80).B()));
    CHECK(l1_diff / l1 < 0.5);
    // The reconstruction is concentrated on the slice.
    double inside = 0.0, all = 0.0;
    for (const auto& row : f.fig4.rows) {
      all += row[1];
      if (row[0] >= 0.39 && row[0] <= 0.405) inside += row[1];
    }
    CHECK(inside / all > 0.9);
  }
  SUBCASE("written files are deterministic") {
    const fs::path a = scratch("figs_a"), b = scratch("figs_b");
    const auto pa = report::write_figures(f, a);
    const auto pb = report::write_figures(report::make_figures(cfg), b);
    REQUIRE(pa.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string ta = slurp(pa[i]);
      CHECK(ta == slurp(pb[i]));
      CHECK(ta.find('\r') == std::string::npos);
    }
    const auto rows = parse_csv(slurp(a / "fig1.csv"));
    CHECK(rows.size() == 4001);
    CHECK(rows[2000][1] == doctest::Approx(2.0));
    CHECK(slurp(a / "fig3.csv").rfind("k,weight\n", 0) == 0);
  }
}

TEST_CASE("atomic write reports the path on failure") {
  CHECK_THROWS_WITH_AS(report::write_file_atomic("/nonexistent_dir_ulab/x.csv", "x"),
                       doctest::Contains("nonexistent_dir_ulab"), std::runtime_error);
}

TEST_CASE("lab reports") {
  const auto lp = report::landau_pollak_json(lp::build_projectors(64, {0, 8}, {0, 8}));
  CHECK(lp.at("trace_EPE").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lp.at("chain_pass").get<bool>());
  CHECK(lp.at("counting_pass").get<bool>());
  CHECK(lp.at("lp_equality_pass").get<bool>());
  const auto lp256 = report::landau_pollak_json(lp::build_projectors(256, {0, 16}, {0, 16}));
  CHECK(lp256.at("lp_equality_pass").get<bool>());

  const auto d = report::diffraction_json({1000, 1, 0.5, 0.01});
  CHECK(d.at("detection_probability").get<double>() == doctest::Approx(0.005));
  CHECK(d.at("regime") == "beyond-crossover");
  CHECK(d.at("uncertainty_product").is_null());
  const auto d2 = report::diffraction_json({10, 1, 0.5, 0.01});
  CHECK(d2.at("uncertainty_product").get<double>() == doctest::Approx(0.005));
  CHECK(d2.at("probability_over_product").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("CLI end to end") {
  const fs::path dir = scratch("cli");
  const std::string cli = ULAB_CLI_PATH;

  SUBCASE("protocol output parses back") {
    const fs::path out = dir / "records.jsonl";
    const std::string cmd = cli + " protocol --n 10 --N 200 --l0 80 --out " + out.string() +
                            " 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::istringstream in(slurp(out));
    std::string line;
    std::vector<MeasurementRecord> recs;
    while (std::getline(in, line)) {
      recs.push_back(report::record_from_json(report::Json::parse(line)));
    }
    REQUIRE(recs.size() == 4);
    CHECK(std::abs(recs[1].U - 0.00453444) < 1e-8);
    CHECK(recs[2].U == doctest::Approx(0.827034).epsilon(0.005));
    CHECK(recs[3].approx);
    const auto direct = run_protocol({10, 200, 80, 800});
    for (int i = 0; i < 4; ++i) CHECK(recs[i].U == direct[i].U);
  }
  SUBCASE("figures honour the output directory variable") {
    const std::string cmd = "ULAB_OUTPUT_DIR=" + dir.string() + " " + cli +
                            " figures --N 100 --l0 40 > /dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    for (const char* name : {"fig1.csv", "fig2.csv", "fig3.csv", "fig4.csv"}) {
      CHECK(fs::exists(dir / name));
    }
    CHECK(parse_csv(slurp(dir / "fig3.csv")).size() == 800);
  }
  SUBCASE("invalid parameters fail") {
    CHECK(std::system((cli + " protocol --N 0 2>/dev/null").c_str()) != 0);
    CHECK(std::system((cli + " protocol --panels 999 2>/dev/null").c_str()) != 0);
    CHECK(std::system((cli + " figures --outdir /proc/ulab_nope 2>/dev/null >/dev/null").c_str()) != 0);
  }
}
