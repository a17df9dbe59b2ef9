// ulab: command-line front end for the uncertainty/probability lab.
//
//   ulab kennard        deviation table of psi_{n,k}
//   ulab protocol       four-stage sampling records (JSON lines)
//   ulab figures        fig1.csv .. fig4.csv
//   ulab landau-pollak  discrete projector report (JSON)
//   ulab diffraction    diffraction estimates (JSON)

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ulab/diffraction.hpp"
#include "ulab/landau_pollak.hpp"
#include "ulab/protocol.hpp"
#include "ulab/report.hpp"

namespace fs = std::filesystem;
using namespace ulab;

namespace {

struct ProtocolFlags {
  int n = 10;
  int N = 200;
  int l0 = 80;
  std::optional<int> kmax;
  std::size_t panels = 100000;
  std::string policy = "mixed";

  ProtocolParams params() const { return {n, N, l0, kmax.value_or(4 * N)}; }
};

void add_protocol_flags(CLI::App* cmd, ProtocolFlags& f) {
  cmd->add_option("--n", f.n, "Bloch index of the prepared packet");
  cmd->add_option("--N", f.N, "detector count");
  cmd->add_option("--l0", f.l0, "fired detector (1-based from x = 0)");
  cmd->add_option("--kmax", f.kmax, "sine-series cutoff (default 4N)");
  cmd->add_option("--panels", f.panels, "Simpson panels (even, >= 100)");
  cmd->add_option("--policy", f.policy,
                  "truncated-series moment normalization")
      ->check(CLI::IsMember({"mixed", "normalized", "raw"}));
}

// Writes to --out (relative paths resolved against the default output
// directory) or stdout.
void emit(const std::string& out, const std::string& content) {
  if (out.empty()) {
    std::cout << content;
    return;
  }
  fs::path path(out);
  if (path.is_relative()) path = report::default_output_dir() / path;
  report::write_file_atomic(path, content);
  std::cerr << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uncertainty products and sampling probabilities of localized "
               "wave packets"};
  app.require_subcommand(1);

  std::string out;
  std::string format = "json";

  auto* kennard = app.add_subcommand("kennard", "deviation table of psi_{n,k}");
  int kennard_rows = 10;
  std::string kennard_format = "csv";
  kennard->add_option("--rows", kennard_rows, "largest k in the table");
  kennard->add_option("--format", kennard_format)
      ->check(CLI::IsMember({"csv", "json"}));
  kennard->add_option("--out", out, "output file (default stdout)");

  auto* protocol = app.add_subcommand("protocol", "run stages i-iv");
  ProtocolFlags pflags;
  add_protocol_flags(protocol, pflags);
  protocol->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  protocol->add_option("--out", out, "output file (default stdout)");

  auto* figures = app.add_subcommand("figures", "emit fig1..fig4 CSV data");
  ProtocolFlags fflags;
  add_protocol_flags(figures, fflags);
  int samples = 1001;
  std::optional<int> spectrum_kmax;
  std::string outdir;
  figures->add_option("--samples", samples, "points per density figure");
  figures->add_option("--spectrum-kmax", spectrum_kmax,
                      "largest k in fig3 (default 2*kmax)");
  figures->add_option("--outdir", outdir,
                      std::string("output directory (default $") +
                          report::kOutputDirEnv + " or .)");

  auto* landau = app.add_subcommand("landau-pollak", "projector inequalities");
  int M = 64, wx = 8, wp = 8, x0 = 0, p0w = 0;
  bool coordinate_second = false;
  landau->add_option("--M", M, "grid size");
  landau->add_option("--wx", wx, "coordinate window width");
  landau->add_option("--wp", wp, "second window width");
  landau->add_option("--x0", x0, "coordinate window start");
  landau->add_option("--p0", p0w, "second window start");
  landau->add_flag("--coordinate-second", coordinate_second,
                   "make the second projector a coordinate window");
  landau->add_option("--out", out, "output file (default stdout)");

  auto* diffr = app.add_subcommand("diffraction", "pin-hole estimates");
  diffraction::DiffractionSetup setup;
  diffr->add_option("--p0", setup.p0, "incoming momentum (hbar/L)");
  diffr->add_option("--dp0", setup.dp0, "prepared momentum spread (hbar/L)");
  diffr->add_option("--q", setup.q_over_L, "detector radius / L");
  diffr->add_option("--dq", setup.dq_over_L, "detector size / L");
  diffr->add_option("--annulus-norm", setup.annulus_norm,
                    "2 pi |psi|^2 L^2 normalization");
  diffr->add_option("--out", out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*kennard) {
      const auto table = report::kennard_table(kennard_rows);
      emit(out, kennard_format == "csv" ? report::to_csv(table)
                                        : report::to_json_lines(table));
    } else if (*protocol) {
      ProtocolOptions options;
      options.quadrature.panels = pflags.panels;
      options.normalization = parse_normalization(pflags.policy);
      const auto records = run_protocol(pflags.params(), options);
      std::string text;
      if (format == "json") {
        for (const auto& r : records) text += report::to_json(r).dump() + "\n";
      } else {
        text = "stage,U,P,P_cumulative,sd_x,sd_p,n,N,l0,kmax,approx\n";
        for (const auto& r : records) {
          text += std::string(to_string(r.stage));
          for (double v : {r.U, r.P, r.P_cumulative, r.sd_x, r.sd_p}) {
            text += "," + report::format_double(v);
          }
          text += "," + std::to_string(r.params.n) + "," +
                  std::to_string(r.params.N) + "," +
                  std::to_string(r.params.l0) + "," +
                  std::to_string(r.params.kmax) + "," +
                  (r.approx ? "1" : "0") + "\n";
        }
      }
      emit(out, text);
    } else if (*figures) {
      report::FigureConfig config;
      config.params = fflags.params();
      config.samples = samples;
      config.spectrum_kmax = spectrum_kmax.value_or(2 * config.params.kmax);
      const fs::path dir =
          outdir.empty() ? report::default_output_dir() : fs::path(outdir);
      for (const auto& p :
           report::write_figures(report::make_figures(config), dir)) {
        std::cout << p.string() << '\n';
      }
    } else if (*landau) {
      const auto pair = lp::build_projectors(
          M, {x0, wx}, {p0w, wp},
          coordinate_second ? lp::SecondKind::kCoordinate
                            : lp::SecondKind::kMomentum);
      emit(out, report::landau_pollak_json(pair).dump() + "\n");
    } else if (*diffr) {
      emit(out, report::diffraction_json(setup).dump() + "\n");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
