#include "ulab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

#include "ulab/errors.hpp"
#include "ulab/packet.hpp"
#include "ulab/spectral.hpp"
#include "ulab/step_basis.hpp"

namespace ulab::report {

namespace fs = std::filesystem;

std::filesystem::path default_output_dir() {
  const char* env = std::getenv(kOutputDirEnv);
  return (env && *env) ? fs::path(env) : fs::path(".");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const MeasurementRecord& r) {
  return Json{
      {"stage", std::string(to_string(r.stage))},
      {"U", r.U},
      {"P", r.P},
      {"P_cumulative", r.P_cumulative},
      {"sd_x", r.sd_x},
      {"sd_p", r.sd_p},
      {"approx", r.approx},
      {"params",
       {{"n", r.params.n},
        {"N", r.params.N},
        {"l0", r.params.l0},
        {"kmax", r.params.kmax}}},
  };
}

MeasurementRecord record_from_json(const Json& j) {
  MeasurementRecord r;
  r.stage = parse_stage(j.at("stage").get<std::string>());
  r.U = j.at("U").get<double>();
  r.P = j.at("P").get<double>();
  r.P_cumulative = j.value("P_cumulative", r.P);
  r.sd_x = j.value("sd_x", 0.0);
  r.sd_p = j.value("sd_p", 0.0);
  r.approx = j.value("approx", false);
  const Json& p = j.at("params");
  r.params = {p.at("n").get<int>(), p.at("N").get<int>(),
              p.at("l0").get<int>(), p.at("kmax").get<int>()};
  return r;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json_lines(const Table& table) {
  std::string out;
  for (const auto& row : table.rows) {
    Json j = Json::object();
    for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i) {
      j[table.header[i]] = row[i];
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path.string());
  }
}

Table kennard_table(int kmax_rows) {
  if (kmax_rows < 1) {
    throw ParameterError("kennard table needs at least one row");
  }
  Table t{{"k", "sd_x", "sd_p", "product"}, {}};
  for (int k = 1; k <= kmax_rows; ++k) {
    const MomentSet m = analytic_moments({0, k});
    t.rows.push_back({static_cast<double>(k), m.x.sd, m.p.sd, kennard_product(k)});
  }
  return t;
}

FigureSet make_figures(const FigureConfig& config) {
  config.params.validate();
  if (config.samples < 2) throw ParameterError("samples must be >= 2");
  if (config.spectrum_kmax < 1) {
    throw ParameterError("spectrum_kmax must be >= 1");
  }
  const auto& prm = config.params;
  const ElementaryPacket packet{prm.n, 1};
  const ReducedState reduced = reduce(packet, prm.N, prm.l0);
  const TruncatedState truncated =
      reconstruct_truncated(sine_coefficients(reduced, prm.kmax));
  const SineSeries spectrum = sine_coefficients(reduced, config.spectrum_kmax);

  FigureSet f;
  f.fig1.header = {"x", "density"};
  f.fig2.header = {"x", "density"};
  f.fig3.header = {"k", "weight"};
  f.fig4.header = {"x", "density"};
  const double last = config.samples - 1;
  for (int j = 0; j < config.samples; ++j) {
    const double x = j / last;
    f.fig1.rows.push_back({x, std::norm(eval_packet(packet, x))});
    f.fig2.rows.push_back({x, reduced.density(x)});
    f.fig4.rows.push_back({x, truncated.density(x)});
  }
  for (int k = 1; k <= spectrum.kmax(); ++k) {
    f.fig3.rows.push_back(
        {static_cast<double>(k), std::norm(spectrum.coeffs[k - 1])});
  }
  return f;
}

std::vector<fs::path> write_figures(const FigureSet& figures,
                                    const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + dir.string());
  std::vector<fs::path> written;
  const std::pair<const char*, const Table*> items[] = {
      {"fig1.csv", &figures.fig1},
      {"fig2.csv", &figures.fig2},
      {"fig3.csv", &figures.fig3},
      {"fig4.csv", &figures.fig4},
  };
  for (const auto& [name, table] : items) {
    const fs::path path = dir / name;
    write_file_atomic(path, to_csv(*table));
    written.push_back(path);
  }
  return written;
}

Json landau_pollak_json(const lp::ProjectorPair& pair) {
  const lp::ProjectorResiduals res = lp::residuals(pair);
  const lp::ChainReport chain = lp::check_chain(pair);
  const lp::LpReport ineq = lp::check_lp_inequality(pair);
  const double worst = std::max({res.idempotent_E, res.idempotent_P,
                                 res.hermitian_E, res.hermitian_P});
  return Json{
      {"M", pair.M},
      {"wx", pair.x_window.width},
      {"wp", pair.p_window.width},
      {"x0", pair.x_window.start},
      {"p0", pair.p_window.start},
      {"second", pair.kind == lp::SecondKind::kMomentum ? "momentum"
                                                        : "coordinate"},
      {"projector_residual", worst},
      {"projector_pass", worst <= 1e-12},
      {"norm_EP", chain.norm_EP},
      {"norm_EP_sq", chain.norm_EP * chain.norm_EP},
      {"trace_EPE", chain.trace_EPE},
      {"trace_PEP", chain.trace_PEP},
      {"sqrt_trace_EPE", std::sqrt(chain.trace_EPE)},
      {"counting", chain.counting},
      {"counting_pass", std::abs(chain.trace_EPE - chain.counting) <= 1e-12},
      {"chain_pass", chain.chain_holds},
      {"lambda_max_EplusP", ineq.lambda_max_EplusP},
      {"lp_bound", ineq.bound},
      {"lp_residual", ineq.residual},
      {"lp_equality_pass", ineq.equality_holds},
  };
}

Json diffraction_json(const diffraction::DiffractionSetup& s) {
  namespace d = diffraction;
  const double dp = d::momentum_uncertainty(s).value;
  const double crossover = d::crossover_size(s);
  const double prob = d::detection_probability(s).value;
  Json j{
      {"p0", s.p0},
      {"dp0", s.dp0},
      {"q_over_L", s.q_over_L},
      {"dq_over_L", s.dq_over_L},
      {"momentum_uncertainty", dp},
      {"crossover_dq_over_L", crossover},
      {"detection_probability", prob},
      {"order_of_magnitude", true},
  };
  if (s.dq_over_L <= crossover) {
    const double product = d::uncertainty_product(s).value;
    j["regime"] = "intrinsic";
    j["uncertainty_product"] = product;
    j["probability_over_product"] = prob / product;
    j["product_below_hbar"] = product < 1.0;
  } else {
    j["regime"] = "beyond-crossover";
    j["uncertainty_product"] = nullptr;
    j["probability_over_product"] = nullptr;
  }
  return j;
}

}  // namespace ulab::report
