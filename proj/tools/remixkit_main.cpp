// remixkit: deterministic music-remix enhancement toolkit.
//
// Subcommands: gen-demo, remix, degrade, enhance, eval, nalr. Scenes are
// JSON files naming four stereo stems, per-stem gains, a listener profile,
// a synthetic degradation, and estimator settings. All audio is 44.1 kHz
// WAV; outputs are 32-bit float.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "remixkit/demo.hpp"
#include "remixkit/kernels.hpp"
#include "remixkit/log.hpp"
#include "remixkit/metrics.hpp"
#include "remixkit/scene.hpp"
#include "remixkit/stft.hpp"
#include "remixkit/wav.hpp"

namespace fs = std::filesystem;
using namespace remixkit;

namespace {

struct SceneArgs {
  std::string scene_path;
  std::string out_dir;
  std::string mode;
  int order = 0;
  std::optional<std::uint64_t> seed;
};

void add_scene_options(CLI::App* cmd, SceneArgs& args, bool estimator_flags) {
  cmd->add_option("--scene", args.scene_path, "Scene JSON file")->required();
  cmd->add_option("--out", args.out_dir,
                  "Output directory (default: scene's output_dir)");
  cmd->add_option("--seed", args.seed, "Override the scene seed");
  if (estimator_flags) {
    cmd->add_option("--mode", args.mode, "Estimator mode: crm or df");
    cmd->add_option("--order", args.order, "Deep filter order N (>= 1)");
  }
}

struct LoadedScene {
  SceneFile file;
  RemixScene run;
  fs::path out_dir;
};

LoadedScene prepare(const SceneArgs& args) {
  LoadedScene loaded;
  loaded.file = load_scene(args.scene_path);
  if (args.seed) {
    loaded.file.seed = *args.seed;
    loaded.file.degradation.seed = *args.seed;
  }
  if (!args.mode.empty()) {
    if (args.mode == "crm")
      loaded.file.mode = EnhanceMode::crm;
    else if (args.mode == "df")
      loaded.file.mode = EnhanceMode::df;
    else
      throw std::runtime_error("--mode must be crm or df");
  }
  if (args.order > 0)
    loaded.file.estimator.order = FilterOrder::causal(args.order);

  const fs::path scene_dir = fs::path(args.scene_path).parent_path();
  loaded.run = load_scene_inputs(loaded.file, scene_dir.string());

  fs::path out = args.out_dir.empty() ? fs::path(loaded.file.output_dir)
                                      : fs::path(args.out_dir);
  if (out.is_relative() && args.out_dir.empty()) out = scene_dir / out;
  fs::create_directories(out);
  loaded.out_dir = out;
  return loaded;
}

int cmd_gen_demo(const std::string& out_dir, std::uint64_t seed) {
  generate_demo(out_dir, seed);
  log::info("wrote demo stems and scene.json to %s", out_dir.c_str());
  return 0;
}

int cmd_remix(const SceneArgs& args) {
  LoadedScene loaded = prepare(args);
  const SignalStack stack = build_signal_stack(loaded.run);
  write_wav((loaded.out_dir / "pre_nalr.wav").string(), stack.pre_nalr_remix);
  write_wav((loaded.out_dir / "nalred.wav").string(), stack.nalred_remix);
  log::info("wrote %s and %s",
            (loaded.out_dir / "pre_nalr.wav").c_str(),
            (loaded.out_dir / "nalred.wav").c_str());
  return 0;
}

int cmd_degrade(const SceneArgs& args) {
  LoadedScene loaded = prepare(args);
  const SignalStack stack = build_signal_stack(loaded.run);
  const AudioBuffer degraded =
      degrade(stack.nalred_remix, loaded.run.degradation);
  write_wav((loaded.out_dir / "nalred_degraded.wav").string(), degraded);
  log::info("wrote %s", (loaded.out_dir / "nalred_degraded.wav").c_str());
  return 0;
}

int cmd_enhance(const SceneArgs& args) {
  LoadedScene loaded = prepare(args);
  const PipelineResult result = run_pipeline(loaded.run);

  write_wav((loaded.out_dir / "enhanced.wav").string(), result.enhanced);
  const std::string report = report_to_json(result, loaded.file);
  std::ofstream os(loaded.out_dir / "report.json");
  os << report;
  if (!os) throw std::runtime_error("enhance: cannot write report.json");
  std::printf("%s", report.c_str());
  log::info("wrote %s and report.json (sdr before=%.3f after=%.3f dB)",
            (loaded.out_dir / "enhanced.wav").c_str(),
            result.sdr_before.mean_db, result.sdr_after.mean_db);
  return 0;
}

AudioBuffer read_wav_checked(const std::string& path) {
  AudioBuffer audio = read_wav(path);
  if (audio.sample_rate != 44100)
    throw std::runtime_error(path + ": sampled at " +
                             std::to_string(audio.sample_rate) +
                             " Hz; 44100 Hz is required (no resampling)");
  return audio;
}

int cmd_eval(const std::string& ref_path, const std::string& est_path,
             const std::string& json_out) {
  const AudioBuffer ref = read_wav_checked(ref_path);
  const AudioBuffer est = read_wav_checked(est_path);
  const SdrResult s = sdr(ref, est);
  const MaeResult m = mae(ref, est);
  const std::string text = metrics_to_json(s, m);
  std::printf("%s", text.c_str());
  if (!json_out.empty()) {
    std::ofstream os(json_out);
    os << text;
    if (!os) throw std::runtime_error("eval: cannot write " + json_out);
  }
  return 0;
}

int cmd_nalr(const std::string& audiogram_path, const std::string& in_path,
             const std::string& out_path) {
  const Audiogram audiogram = load_audiogram(audiogram_path);
  const auto gains = nalr_gains(audiogram);
  std::printf("freq_hz  insertion_gain_db\n");
  for (std::size_t i = 0; i < gains.size(); ++i)
    std::printf("%7.0f  %8.2f\n", Audiogram::kFrequenciesHz[i], gains[i]);

  const AudioBuffer in = read_wav_checked(in_path);
  const FirFilter fir = design_fir(gains, in.sample_rate);
  write_wav(out_path, apply_fir(in, fir));
  log::info("wrote %s", out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic music-remix enhancement toolkit"};
  app.require_subcommand(1);

  std::string demo_dir = "demo";
  std::uint64_t demo_seed = 1;
  auto* gen = app.add_subcommand("gen-demo", "write deterministic demo stems and scene");
  gen->add_option("--out", demo_dir, "Output directory");
  gen->add_option("--seed", demo_seed, "Seed for the synthetic material");

  SceneArgs remix_args, degrade_args, enhance_args;
  auto* remix = app.add_subcommand("remix", "apply gains, mix, and NAL-R");
  add_scene_options(remix, remix_args, false);
  auto* degrade_cmd = app.add_subcommand("degrade", "write the degraded NALRed remix");
  add_scene_options(degrade_cmd, degrade_args, false);
  auto* enhance = app.add_subcommand("enhance", "run the full pipeline and report metrics");
  add_scene_options(enhance, enhance_args, true);

  std::string eval_ref, eval_est, eval_json;
  auto* eval_cmd = app.add_subcommand("eval", "SDR/MAE between two WAV files");
  eval_cmd->add_option("reference", eval_ref, "Reference WAV")->required();
  eval_cmd->add_option("estimate", eval_est, "Estimate WAV")->required();
  eval_cmd->add_option("--json", eval_json, "Also write the report to this path");

  std::string nalr_audiogram, nalr_in, nalr_out = "nalred.wav";
  auto* nalr_cmd = app.add_subcommand("nalr", "prescribe and apply NAL-R amplification");
  nalr_cmd->add_option("audiogram", nalr_audiogram, "Audiogram JSON")->required();
  nalr_cmd->add_option("input", nalr_in, "Input WAV")->required();
  nalr_cmd->add_option("--out", nalr_out, "Output WAV path");

  CLI11_PARSE(app, argc, argv);

  try {
    log::debug("simd backend: %s",
               kernels::backend_name(kernels::active_backend()));
    if (gen->parsed()) return cmd_gen_demo(demo_dir, demo_seed);
    if (remix->parsed()) return cmd_remix(remix_args);
    if (degrade_cmd->parsed()) return cmd_degrade(degrade_args);
    if (enhance->parsed()) return cmd_enhance(enhance_args);
    if (eval_cmd->parsed()) return cmd_eval(eval_ref, eval_est, eval_json);
    if (nalr_cmd->parsed()) return cmd_nalr(nalr_audiogram, nalr_in, nalr_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
