// Command-line front end: validates the fixed-point sensing MSE against
// Monte Carlo, generates rate-distortion frontiers, and tabulates the
// asymptotic effective-SNR comparisons. Emits CSV plus a JSON run manifest;
// reruns with the same manifest reproduce the CSVs byte for byte.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isac/asymptotics.hpp"
#include "isac/core.hpp"
#include "isac/das_sensing.hpp"
#include "isac/frontier.hpp"
#include "isac/montecarlo.hpp"
#include "isac/pilot_sensing.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kToolVersion = "0.1.0";

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Full round-trip precision so golden-file comparisons are exact.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(const fs::path& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open " + path.string());
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';  // LF line endings
  }

 private:
  std::ofstream out_;
};

struct CommonOptions {
  isac::SystemConfig config{12, 12, 30.0, db_to_linear(5.0)};
  isac::mc::McConfig mc{3000, 20240901, 64};
  std::string out_dir = "out";
};

/// Flat JSON config file mirroring the SystemConfig/McConfig field names;
/// explicit CLI flags override file values.
void load_config_file(const std::string& path, CommonOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  ordered_json j;
  in >> j;
  int M = opts.config.M, N = opts.config.N;
  double T = opts.config.T, rho = opts.config.rho;
  if (j.contains("M")) M = j["M"].get<int>();
  if (j.contains("N")) N = j["N"].get<int>();
  if (j.contains("T")) T = j["T"].get<double>();
  if (j.contains("rho")) rho = j["rho"].get<double>();
  opts.config = isac::SystemConfig(M, N, T, rho);
  if (j.contains("trials")) opts.mc.trials = j["trials"].get<long>();
  if (j.contains("seed")) opts.mc.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("batch")) opts.mc.batch = j["batch"].get<int>();
}

ordered_json config_json(const isac::SystemConfig& config) {
  return {{"M", config.M}, {"N", config.N}, {"T", config.T}, {"rho", config.rho}};
}

ordered_json mc_json(const isac::mc::McConfig& mc) {
  return {{"trials", mc.trials}, {"seed", mc.seed}, {"batch", mc.batch}};
}

void write_manifest(const fs::path& dir, const std::string& command, const CommonOptions& opts,
                    const ordered_json& params, const std::vector<std::string>& outputs,
                    double wall_time_s) {
  ordered_json manifest;
  manifest["command"] = command;
  manifest["config"] = config_json(opts.config);
  manifest["mc"] = mc_json(opts.mc);
  manifest["params"] = params;
  manifest["output_paths"] = outputs;
  manifest["tool_version"] = kToolVersion;
  manifest["wall_time_s"] = wall_time_s;
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  out << manifest.dump(2) << '\n';
  for (const auto& name : outputs) {
    if (!fs::exists(dir / name)) throw std::runtime_error("missing declared output " + name);
  }
}

int cmd_validate_rmt(const CommonOptions& opts, double gamma, double c,
                     const std::vector<int>& M_list, const std::vector<double>& rho_d_db) {
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir(opts.out_dir);
  fs::create_directories(dir);

  bool assertions_ok = true;
  CsvWriter csv(dir / "validate_rmt.csv");
  csv.row({"M", "rho_d_db", "mc_mean", "mc_stderr", "rmt", "jensen"});
  for (int M : M_list) {
    const int N = M;
    const int T_d = std::max(1, static_cast<int>(std::lround(M / gamma)));
    double prev_rmt = 0.0;
    for (std::size_t i = 0; i < rho_d_db.size(); ++i) {
      const double rho_d = db_to_linear(rho_d_db[i]);
      const double rmt = isac::das::rmt_mse(N, M, c, rho_d, T_d);
      const double jensen = isac::das::jensen_bound_matched(N, M, c, rho_d, T_d);
      isac::mc::McConfig point = opts.mc;
      point.seed = isac::mc::derive_stream(opts.mc.seed, 1000ull * M + i);
      const auto est = isac::mc::empirical_das_mse(N, M, c, rho_d, T_d, point);
      csv.row({std::to_string(M), fmt(rho_d_db[i]), fmt(est.mean), fmt(est.std_err), fmt(rmt),
               fmt(jensen)});

      if (!(jensen < rmt)) {
        std::cerr << "assertion failed: jensen >= rmt at M=" << M << " rho_d_db=" << rho_d_db[i]
                  << "\n";
        assertions_ok = false;
      }
      if (i > 0 && !(rmt < prev_rmt)) {
        std::cerr << "assertion failed: rmt not decreasing in rho_d at M=" << M << "\n";
        assertions_ok = false;
      }
      if (M >= 8 && opts.mc.trials >= 3000 && std::abs(est.mean - rmt) / rmt > 0.03) {
        std::cerr << "assertion failed: |mc - rmt|/rmt > 3% at M=" << M
                  << " rho_d_db=" << rho_d_db[i] << "\n";
        assertions_ok = false;
      }
      prev_rmt = rmt;
    }
  }

  ordered_json params{{"gamma", gamma}, {"c", c}, {"M_list", M_list}, {"rho_d_db", rho_d_db}};
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_manifest(dir, "validate-rmt", opts, params, {"validate_rmt.csv"}, secs);
  return assertions_ok ? 0 : 1;
}

int cmd_rd_curve(const CommonOptions& opts, const std::vector<std::string>& scheme_names, int grid,
                 bool include_inactive) {
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir(opts.out_dir);
  fs::create_directories(dir);

  const double nm = opts.config.prior_variance();
  std::vector<std::string> outputs;
  for (const auto& name : scheme_names) {
    isac::frontier::CurveRequest request{opts.config, isac::scheme_from_string(name), grid,
                                         opts.mc, include_inactive};
    const auto curve = isac::frontier::rd_curve(request);

    const std::string file = "rd_" + name + ".csv";
    CsvWriter csv(dir / file);
    csv.row({"D", "D_normalized", "R", "R_stderr", "T_tau", "rho_tau", "rho_d", "rho_eff"});
    for (const auto& p : curve.points) {
      csv.row({fmt(p.D), fmt(p.D / nm), fmt(p.R), fmt(p.R_std_err), fmt(p.split.T_tau),
               fmt(p.split.rho_tau), fmt(p.split.rho_d), fmt(p.rho_eff)});
    }
    outputs.push_back(file);
  }

  ordered_json params{{"schemes", scheme_names},
                      {"grid_points", grid},
                      {"include_inactive", include_inactive}};
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_manifest(dir, "rd-curve", opts, params, outputs, secs);
  return 0;
}

int cmd_asymptotics(const CommonOptions& opts, const std::vector<double>& K_grid,
                    const std::vector<double>& rho_db_grid,
                    const std::vector<double>& lowsnr_rho_db) {
  using isac::Power;
  using isac::Sensing;
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir(opts.out_dir);
  fs::create_directories(dir);

  CsvWriter table(dir / "asymptotics_table.csv");
  table.row({"K", "rho_db", "rho", "ps_opt", "das_opt", "ps_eq", "das_eq", "gain_opt", "gain_eq"});
  for (double K : K_grid)
    for (double rho_db : rho_db_grid) {
      const double rho = db_to_linear(rho_db);
      const auto opt = isac::asymp::high_snr_report(Power::Optimal, K, rho);
      const auto eq = isac::asymp::high_snr_report(Power::Equal, K, rho);
      table.row({fmt(K), fmt(rho_db), fmt(rho), fmt(opt.rho_eff_ps), fmt(opt.rho_eff_das),
                 fmt(eq.rho_eff_ps), fmt(eq.rho_eff_das), fmt(opt.gain_ratio),
                 fmt(eq.gain_ratio)});
    }

  std::vector<double> rho_grid;
  for (double db : lowsnr_rho_db) rho_grid.push_back(db_to_linear(db));
  const auto rows = isac::asymp::verify_low_snr_limit(opts.config, rho_grid);
  CsvWriter lowsnr(dir / "asymptotics_lowsnr.csv");
  lowsnr.row({"rho", "ps_opt", "das_opt", "ratio_opt", "ps_eq", "das_eq", "ratio_eq"});
  for (const auto& r : rows)
    lowsnr.row({fmt(r.rho), fmt(r.ps_opt), fmt(r.das_opt), fmt(r.ratio_opt), fmt(r.ps_eq),
                fmt(r.das_eq), fmt(r.ratio_eq)});

  ordered_json fit = ordered_json::object();
  std::vector<double> fit_grid;
  for (double K : K_grid)
    if (K >= 2.0) fit_grid.push_back(K);
  CsvWriter conv(dir / "asymptotics_convergence.csv");
  conv.row({"K", "das_gap", "ps_gap"});
  if (fit_grid.size() >= 2) {
    const auto report = isac::asymp::verify_high_snr_convergence(fit_grid);
    for (const auto& p : report.points) conv.row({fmt(p.K), fmt(p.das_gap), fmt(p.ps_gap)});
    fit = {{"das_rate", report.das_rate},
           {"ps_rate", report.ps_rate},
           {"das_ls_slope", report.das_ls_slope},
           {"ps_ls_slope", report.ps_ls_slope}};
  }

  ordered_json params{{"K_grid", K_grid},
                      {"rho_db_grid", rho_db_grid},
                      {"lowsnr_rho_db", lowsnr_rho_db},
                      {"convergence_fit", fit}};
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_manifest(dir, "asymptotics",
                 opts, params,
                 {"asymptotics_table.csv", "asymptotics_lowsnr.csv", "asymptotics_convergence.csv"},
                 secs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate-distortion frontiers for non-coherent MIMO links with pilot-only and "
               "data-aided sensing"};
  app.require_subcommand(1);

  // shared options, registered per subcommand
  struct Raw {
    std::string config_file;
    int M = 12, N = 12;
    double T = 30.0;
    double rho_db = 5.0, rho = 0.0;
    long trials = 3000;
    std::uint64_t seed = 20240901;
    int batch = 64;
    std::string out = "out";
  };

  auto add_common = [](CLI::App* cmd, Raw& raw) {
    cmd->add_option("--config", raw.config_file, "flat JSON config file (M,N,T,rho,trials,seed,batch)");
    cmd->add_option("--M", raw.M, "transmit antennas");
    cmd->add_option("--N", raw.N, "receive antennas");
    cmd->add_option("--T", raw.T, "coherence block length (symbols)");
    cmd->add_option("--rho-db", raw.rho_db, "total SNR in dB");
    cmd->add_option("--rho", raw.rho, "total SNR, linear (overrides --rho-db)");
    cmd->add_option("--trials", raw.trials, "Monte Carlo trials per point");
    cmd->add_option("--seed", raw.seed, "master seed");
    cmd->add_option("--batch", raw.batch, "trials per scheduling chunk");
    cmd->add_option("--out", raw.out, "output directory");
  };

  auto resolve = [](CLI::App* cmd, const Raw& raw) {
    CommonOptions opts;
    if (cmd->count("--config")) load_config_file(raw.config_file, opts);
    int M = cmd->count("--M") ? raw.M : opts.config.M;
    int N = cmd->count("--N") ? raw.N : opts.config.N;
    double T = cmd->count("--T") ? raw.T : opts.config.T;
    double rho = opts.config.rho;
    if (cmd->count("--rho-db")) rho = db_to_linear(raw.rho_db);
    if (cmd->count("--rho")) rho = raw.rho;
    opts.config = isac::SystemConfig(M, N, T, rho);
    if (cmd->count("--trials")) opts.mc.trials = raw.trials;
    if (cmd->count("--seed")) opts.mc.seed = raw.seed;
    if (cmd->count("--batch")) opts.mc.batch = raw.batch;
    opts.out_dir = raw.out;
    return opts;
  };

  // validate-rmt
  auto* validate = app.add_subcommand("validate-rmt", "sensing-MSE fixed point vs Monte Carlo");
  Raw raw_v;
  add_common(validate, raw_v);
  double gamma = 0.25, c = 2.0;
  std::vector<int> M_list{8, 16, 32};
  std::vector<double> rho_d_db{-10, -7.5, -5, -2.5, 0, 2.5, 5, 7.5, 10, 12.5, 15, 17.5, 20};
  validate->add_option("--gamma", gamma, "aspect ratio M/T_d");
  validate->add_option("--c", c, "pilot prior gain");
  validate->add_option("--M-list", M_list, "antenna counts to sweep");
  validate->add_option("--rho-d-db", rho_d_db, "data SNR grid in dB");

  // rd-curve
  auto* rd = app.add_subcommand("rd-curve", "rate-distortion frontier per scheme");
  Raw raw_r;
  add_common(rd, raw_r);
  std::vector<std::string> schemes{"ps-opt", "ps-eq", "das-opt", "das-eq"};
  int grid = 20;
  bool include_inactive = false;
  rd->add_option("--schemes", schemes, "subset of ps-opt ps-eq das-opt das-eq");
  rd->add_option("--grid", grid, "distortion grid points per curve");
  rd->add_flag("--include-inactive", include_inactive, "extend curves past D_star");

  // asymptotics
  auto* asy = app.add_subcommand("asymptotics", "low/high-SNR closed-form comparisons");
  Raw raw_a;
  add_common(asy, raw_a);
  std::vector<double> K_grid{4, 16, 64, 256};
  std::vector<double> rho_db_grid{40.0};
  std::vector<double> lowsnr_rho_db{-40.0, -30.0, -20.0};
  asy->add_option("--K", K_grid, "data-phase lengths T_d/M (each > 1)");
  asy->add_option("--table-rho-db", rho_db_grid, "SNR grid for the high-SNR table");
  asy->add_option("--lowsnr-rho-db", lowsnr_rho_db, "SNR grid for the low-SNR ratio trace");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate_rmt(resolve(validate, raw_v), gamma, c, M_list, rho_d_db);
    if (rd->parsed()) return cmd_rd_curve(resolve(rd, raw_r), schemes, grid, include_inactive);
    if (asy->parsed()) return cmd_asymptotics(resolve(asy, raw_a), K_grid, rho_db_grid, lowsnr_rho_db);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
