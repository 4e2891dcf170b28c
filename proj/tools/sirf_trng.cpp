// SPDX-License-Identifier: Apache-2.0
// sirf_trng: run the simulated generator, analyze bit files, run experiments.
#include <cerrno>
#include <csignal>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reports.hpp"
#include "sirf/errors.hpp"
#include "sirf/stat/uniformity.hpp"

namespace {

using namespace sirf;
using namespace sirf::trng;
using cli::json;

enum Exit : int { kOk = 0, kFailure = 1, kConfig = 2, kDegenerate = 3, kIo = 4 };

/// Flags shared by every subcommand. Each one maps onto a config key, and is
/// applied after --config so the command line wins.
struct RunFlags {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> settings;
  bool no_chaining = false;
  std::string report;

  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { settings.emplace_back(key, v); }, help);
  }

  void attach(CLI::App* app, bool with_out) {
    app->add_option("--config", config_path, "key = value config file, applied before flags");
    add(app, "--device-seed", "device_seed", "device fingerprint seed");
    add(app, "--noise-seed", "noise_seed", "measurement noise seed");
    add(app, "--sigma", "sigma", "measurement noise sigma in DV counts");
    add(app, "--temp-offset", "temp_offset", "additive DV offset (temperature model)");
    add(app, "--supply-scale", "supply_scale", "multiplicative DV scale (supply model)");
    add(app, "--rc", "rc", "range constant: rand or 128..191");
    add(app, "--tcc", "tcc", "trim code constant: rand or even 8..22");
    add(app, "--bits", "bits", "bit budget");
    add(app, "--perms", "perms", "IID permutations");
    add(app, "--pcc-pairs", "pcc_pairs", "sampled set pairs for the PCC scan");
    add(app, "--pcc-seed", "pcc_seed", "pair sampling seed");
    if (with_out) add(app, "--out", "out", "output path, - for stdout");
    app->add_flag("--no-chaining", no_chaining, "disable SF chaining");
    app->add_option("--report", report, "write a JSON report here");
  }

  RunConfig resolve() const {
    RunConfig c;
    if (!config_path.empty()) load_config_file(c, config_path);
    for (const auto& [k, v] : settings) apply_setting(c, k, v);
    if (no_chaining) c.chaining = false;
    if (!report.empty()) c.report = report;
    c.validate();
    return c;
  }
};

/// Writes packed bits; "-" is stdout. A closed pipe surfaces as IoError.
class BitWriter {
 public:
  explicit BitWriter(const std::string& path) {
    if (path == "-") {
      f_ = stdout;
      std::setvbuf(stdout, nullptr, _IONBF, 0);
    } else {
      f_ = std::fopen(path.c_str(), "wb");
      if (!f_) throw IoError("cannot open " + path + ": " + std::strerror(errno));
      owned_ = true;
    }
  }
  ~BitWriter() {
    if (owned_) std::fclose(f_);
  }
  BitWriter(const BitWriter&) = delete;
  BitWriter& operator=(const BitWriter&) = delete;

  void write(std::span<const std::uint8_t> bytes) {
    if (std::fwrite(bytes.data(), 1, bytes.size(), f_) != bytes.size() || std::fflush(f_) != 0) {
      throw IoError(std::string("write failed: ") + std::strerror(errno));
    }
  }
  void close() {
    if (owned_ && std::fclose(f_) != 0) throw IoError("close failed");
    owned_ = false;
  }

 private:
  std::FILE* f_ = nullptr;
  bool owned_ = false;
};

void maybe_report(const RunConfig& cfg, const json& j) {
  if (!cfg.report.empty()) cli::write_json(cfg.report, j);
}

int cmd_run(const RunConfig& cfg) {
  BitWriter out(cfg.out);
  std::uint64_t left = cfg.bits;
  // the last cycle is cut to the budget; a partial final byte is zero-padded
  const RunReport rep = run_trng(cfg, [&](const BitSequence& b) {
    const std::uint64_t take = std::min<std::uint64_t>(left, b.size());
    out.write(take == b.size() ? b.bytes() : b.slice(0, take).bytes());
    left -= take;
    return left > 0;
  });
  out.close();
  maybe_report(cfg, {{"command", "run"}, {"config", cli::to_json(cfg)}, {"run", cli::to_json(rep)},
                     {"bits_written", cfg.bits}});
  std::fprintf(stderr, "%llu bits in %llu cycle(s), %.3f s\n", static_cast<unsigned long long>(cfg.bits),
               static_cast<unsigned long long>(rep.cycles), rep.seconds_total);
  return kOk;
}

int cmd_analyze(const RunConfig& cfg, const std::string& path, bool skip_iid) {
  const BitSequence bits = read_bit_file(path);
  std::printf("%s: %zu bits\n", path.c_str(), bits.size());
  json j{{"command", "analyze"}, {"input", path}, {"bits", bits.size()}};
  bool ok = true;

  const auto ais = stat::ais31_suite(bits);
  for (const auto& v : ais.verdicts) {
    std::printf("  %-28s %s  %s = %g  (%s)\n", v.name.c_str(),
                v.insufficient_data ? "n/a " : (v.pass ? "pass" : "FAIL"),
                v.values.empty() ? "-" : v.values.front().first.c_str(), v.statistic(), v.threshold.c_str());
  }
  j["ais31"] = cli::to_json(ais);

  try {
    const auto e = stat::estimate_all(bits);
    std::printf("  min-entropy  mcv %.5f  collision %.5f  markov %.5f  compression %.5f  min %.5f\n", e.mcv,
                e.collision, e.markov, e.compression, e.minimum());
    j["estimators"] = cli::to_json(e);
  } catch (const InsufficientData& ex) {
    std::printf("  min-entropy  n/a (%s)\n", ex.what());
  }

  if (bits.size() >= 64) {
    j["frequency_p"] = stat::frequency_pvalue(bits);
    j["poker_p"] = stat::poker_pvalue(bits);
    std::printf("  frequency p %.4f  poker p %.4f\n", j["frequency_p"].get<double>(), j["poker_p"].get<double>());
  }

  if (!skip_iid) {
    const auto r = stat::iid_permutation_suite(bits, cfg.perms);
    for (const auto& t : r.tests) std::printf("  iid %-24s %s\n", t.name.c_str(), t.pass ? "pass" : "FAIL");
    if (r.degenerate_input) std::printf("  iid input is constant; counters are not meaningful\n");
    j["iid"] = cli::to_json(r);
    ok = ok && r.all_pass();
  }
  ok = ok && ais.all_pass();
  j["pass"] = ok;
  maybe_report(cfg, j);
  return kOk;
}

int cmd_pcc(const RunConfig& cfg, const std::string& csv_prefix, bool all_pairs) {
  stat::PccSampling s;
  s.mode = all_pairs ? stat::PccSampling::Mode::all_pairs : stat::PccSampling::Mode::random;
  s.pairs = cfg.pcc_pairs;
  s.seed = cfg.pcc_seed;
  const PccExperiment e = experiment_pcc(cfg, s);
  std::printf("pairs %llu\n", static_cast<unsigned long long>(e.pairs_sampled));
  std::printf("chained    max |r| %.5f  pairs |r| >= 0.99: %llu\n", e.chained.max_abs_r,
              static_cast<unsigned long long>(e.chained.count_at_least(0.99)));
  std::printf("unchained  max |r| %.5f  pairs |r| >= 0.99: %llu\n", e.unchained.max_abs_r,
              static_cast<unsigned long long>(e.unchained.count_at_least(0.99)));
  cli::write_text(csv_prefix + "_chained.csv", cli::pcc_histogram_csv(e.chained));
  cli::write_text(csv_prefix + "_unchained.csv", cli::pcc_histogram_csv(e.unchained));
  maybe_report(cfg, {{"command", "pcc"},
                     {"config", cli::to_json(cfg)},
                     {"pairs_sampled", e.pairs_sampled},
                     {"chained", cli::to_json(e.chained)},
                     {"unchained", cli::to_json(e.unchained)}});
  return kOk;
}

int cmd_rctcc(const RunConfig& cfg, std::vector<std::uint64_t> seeds, unsigned devices, const std::string& csv) {
  if (seeds.empty()) {
    for (unsigned i = 0; i < devices; ++i) seeds.push_back(cfg.device_seed + i);
  }
  if (seeds.size() < 2) throw ConfigError("rctcc needs at least 2 devices");
  const RcTccExperiment e = experiment_rc_tcc(cfg, seeds, cfg.bits);
  json cells = json::array();
  for (const auto& c : e.cells) {
    std::printf("rc %-4s tcc %-4s  median minimum %.5f\n", c.rc_randomized ? "on" : "off",
                c.tcc_randomized ? "on" : "off", c.median_minimum());
    json per = json::array();
    for (const auto& s : c.per_device) per.push_back(cli::to_json(s));
    cells.push_back({{"rc_randomized", c.rc_randomized},
                     {"tcc_randomized", c.tcc_randomized},
                     {"median_minimum", c.median_minimum()},
                     {"per_device", per}});
  }
  cli::write_text(csv, cli::rc_tcc_csv(e));
  maybe_report(cfg, {{"command", "rctcc"},
                     {"config", cli::to_json(cfg)},
                     {"device_seeds", e.device_seeds},
                     {"bits_per_device", e.bits_per_device},
                     {"cells", cells}});
  return kOk;
}

int cmd_envsweep(const RunConfig& cfg, const std::vector<double>& temps, const std::vector<double>& scales,
                 const std::string& csv) {
  std::vector<EnvCondition> sweep;
  for (double t : temps) sweep.push_back(EnvCondition{t, 1.0});
  for (double s : scales) sweep.push_back(EnvCondition{0.0, s});
  for (const auto& e : sweep) e.validate();
  const auto pts = experiment_env_attack(cfg, sweep);
  json arr = json::array();
  for (const auto& p : pts) {
    std::printf("temp %+8.3f scale %.4f  divergence %.6f%s\n", p.env.temp_offset, p.env.supply_scale, p.divergence,
                p.nonce_matches_baseline ? "" : "  (nonce differs)");
    arr.push_back({{"temp_offset", p.env.temp_offset},
                   {"supply_scale", p.env.supply_scale},
                   {"divergence", p.divergence},
                   {"nonce_matches_baseline", p.nonce_matches_baseline}});
  }
  cli::write_text(csv, cli::env_csv(pts));
  maybe_report(cfg, {{"command", "envsweep"}, {"config", cli::to_json(cfg)}, {"points", arr}});
  return kOk;
}

int cmd_export_nonce(const RunConfig& cfg, std::size_t count, bool raw) {
  const auto nonces = collect_nonces(cfg, count);
  BitWriter out(cfg.out);
  if (raw) {
    BitSequence bits;
    for (const auto& n : nonces) {
      for (std::size_t i = 0; i < kNonceBits; ++i) bits.push_back(n.bits[i]);
    }
    out.write(bits.bytes());
  } else {
    std::string text;
    for (const auto& n : nonces) text += n.to_hex() + "\n";
    out.write(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }
  out.close();
  maybe_report(cfg, {{"command", "export-nonce"}, {"config", cli::to_json(cfg)}, {"nonces", count},
                     {"bits", count * kNonceBits}});
  return kOk;
}

int cmd_bench(const RunConfig& cfg) {
  const RunReport r = run_trng(cfg, {});
  std::printf("%llu bits, %llu cycle(s): phase one %.3f s, sponge %.3f s, total %.3f s, %.3f Mbit/s\n",
              static_cast<unsigned long long>(r.bits_emitted), static_cast<unsigned long long>(r.cycles),
              r.seconds_phase_one, r.seconds_sponge, r.seconds_total, r.bits_per_second / 1e6);
  maybe_report(cfg, {{"command", "bench"}, {"config", cli::to_json(cfg)}, {"run", cli::to_json(r)}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGPIPE, SIG_IGN);

  CLI::App app{"Simulated SiRF PUF-TRNG"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sirf_trng 0.1.0");

  RunFlags f;
  auto* run = app.add_subcommand("run", "generate bits and write them packed MSB-first");
  f.attach(run, true);

  auto* analyze = app.add_subcommand("analyze", "run the statistical suite on a packed bit file");
  std::string input;
  bool skip_iid = false;
  analyze->add_option("file", input, "packed bit file")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--skip-iid", skip_iid, "skip the permutation suite");
  f.attach(analyze, false);

  auto* pcc = app.add_subcommand("pcc", "correlation scan with and without SF chaining");
  std::string pcc_csv = "pcc";
  bool all_pairs = false;
  pcc->add_option("--csv-prefix", pcc_csv, "histogram CSVs go to PREFIX_chained.csv and PREFIX_unchained.csv");
  pcc->add_flag("--all-pairs", all_pairs, "scan all 2048*2047/2 pairs");
  f.attach(pcc, false);

  auto* rctcc = app.add_subcommand("rctcc", "RC/TCC randomization ablation over several devices");
  std::vector<std::uint64_t> seeds;
  unsigned devices = 5;
  std::string rctcc_csv = "rctcc.csv";
  rctcc->add_option("--device-seeds", seeds, "explicit device seeds")->delimiter(',');
  rctcc->add_option("--devices", devices, "number of consecutive device seeds from --device-seed")
      ->check(CLI::PositiveNumber);
  rctcc->add_option("--csv", rctcc_csv, "per-device estimates");
  f.attach(rctcc, false);

  auto* env = app.add_subcommand("envsweep", "output divergence under temperature and supply changes");
  std::vector<double> temps{10, -10, 20, -20, 50, -50};
  std::vector<double> scales{0.95, 1.05};
  std::string env_csv = "envsweep.csv";
  env->add_option("--temps", temps, "temperature offsets")->delimiter(',');
  env->add_option("--scales", scales, "supply scales")->delimiter(',');
  env->add_option("--csv", env_csv, "per-point divergence");
  f.attach(env, false);

  auto* nonce = app.add_subcommand("export-nonce", "boot-strap nonces, one hex line each");
  std::size_t count = 1;
  bool raw = false;
  nonce->add_option("--count", count, "number of boot-straps")->check(CLI::PositiveNumber);
  nonce->add_flag("--raw", raw, "write concatenated nonce bits packed instead of hex");
  f.attach(nonce, true);

  auto* bench = app.add_subcommand("bench", "time the pipeline without writing bits");
  f.attach(bench, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    RunConfig cfg = f.resolve();
    if (*run) return cmd_run(cfg);
    if (*analyze) return cmd_analyze(cfg, input, skip_iid);
    if (*pcc) return cmd_pcc(cfg, pcc_csv, all_pairs);
    if (*rctcc) {
      // per-device budget defaults to 1 MByte unless --bits was given
      bool bits_set = false;
      for (const auto& [k, v] : f.settings) bits_set = bits_set || k == "bits";
      if (!bits_set) cfg.bits = 8000000;
      return cmd_rctcc(cfg, seeds, devices, rctcc_csv);
    }
    if (*env) return cmd_envsweep(cfg, temps, scales, env_csv);
    if (*nonce) return cmd_export_nonce(cfg, count, raw);
    if (*bench) return cmd_bench(cfg);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfig;
  } catch (const InvalidGeometry& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfig;
  } catch (const DegenerateRange& e) {
    std::fprintf(stderr, "degenerate DV range: %s\n", e.what());
    return kDegenerate;
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFailure;
  }
  return kFailure;
}
