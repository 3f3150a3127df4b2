#include "remixkit/scene.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "remixkit/wav.hpp"

namespace remixkit {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  throw std::runtime_error("scene: " + where + ": " + msg);
}

void require_keys(const ordered_json& obj, const std::string& where,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) bad(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!required.count(key) && !optional.count(key))
      bad(where, "unknown key '" + key + "'");
  }
  for (const auto& key : required)
    if (!obj.contains(key)) bad(where, "missing key '" + key + "'");
}

double get_number(const ordered_json& obj, const std::string& where,
                  const std::string& key) {
  if (!obj.at(key).is_number()) bad(where + "." + key, "expected a number");
  return obj.at(key).get<double>();
}

Audiogram audiogram_from_json(const ordered_json& j, const std::string& where) {
  require_keys(j, where, {"frequencies_hz", "levels_db_hl"});
  const auto& freqs = j.at("frequencies_hz");
  const auto& levels = j.at("levels_db_hl");
  if (!freqs.is_array() || freqs.size() != Audiogram::kFrequenciesHz.size())
    bad(where + ".frequencies_hz", "expected 7 frequencies");
  if (!levels.is_array() || levels.size() != Audiogram::kFrequenciesHz.size())
    bad(where + ".levels_db_hl", "expected 7 levels");
  Audiogram a;
  for (std::size_t i = 0; i < Audiogram::kFrequenciesHz.size(); ++i) {
    if (freqs[i].get<double>() != Audiogram::kFrequenciesHz[i])
      bad(where + ".frequencies_hz",
          "frequency " + std::to_string(i) + " must be " +
              std::to_string(int(Audiogram::kFrequenciesHz[i])) + " Hz");
    a.levels_db_hl[i] = levels[i].get<double>();
  }
  a.validate();
  return a;
}

ordered_json audiogram_to_json(const Audiogram& a) {
  ordered_json j;
  j["frequencies_hz"] = Audiogram::kFrequenciesHz;
  j["levels_db_hl"] = a.levels_db_hl;
  return j;
}

}  // namespace

SceneFile parse_scene(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    bad("json", e.what());
  }
  require_keys(j, "scene",
               {"stems", "gains_db", "listener", "degradation", "estimator",
                "output_dir", "seed"});

  SceneFile scene;
  const auto& stems = j.at("stems");
  require_keys(stems, "scene.stems",
               {kStemNames[0], kStemNames[1], kStemNames[2], kStemNames[3]});
  for (std::size_t i = 0; i < kStemNames.size(); ++i) {
    if (!stems.at(kStemNames[i]).is_string())
      bad(std::string("scene.stems.") + kStemNames[i], "expected a path string");
    scene.stem_paths[i] = stems.at(kStemNames[i]).get<std::string>();
  }

  const auto& gains = j.at("gains_db");
  require_keys(gains, "scene.gains_db",
               {kStemNames[0], kStemNames[1], kStemNames[2], kStemNames[3]});
  for (std::size_t i = 0; i < kStemNames.size(); ++i)
    scene.gains.db[i] = get_number(gains, "scene.gains_db", kStemNames[i]);
  scene.gains.validate();

  const auto& listener = j.at("listener");
  require_keys(listener, "scene.listener", {"id", "left", "right"});
  scene.listener.id = listener.at("id").get<std::string>();
  scene.listener.left = audiogram_from_json(listener.at("left"), "scene.listener.left");
  scene.listener.right =
      audiogram_from_json(listener.at("right"), "scene.listener.right");

  const auto& deg = j.at("degradation");
  require_keys(deg, "scene.degradation",
               {"magnitude_jitter_db", "phase_jitter_rad", "fir_length",
                "advance_frames"},
               {"noise_snr_db"});
  scene.degradation.magnitude_jitter_db =
      get_number(deg, "scene.degradation", "magnitude_jitter_db");
  scene.degradation.phase_jitter_rad =
      get_number(deg, "scene.degradation", "phase_jitter_rad");
  scene.degradation.fir_length =
      int(get_number(deg, "scene.degradation", "fir_length"));
  scene.degradation.advance_frames =
      int(get_number(deg, "scene.degradation", "advance_frames"));
  if (deg.contains("noise_snr_db") && !deg.at("noise_snr_db").is_null())
    scene.degradation.noise_snr_db =
        get_number(deg, "scene.degradation", "noise_snr_db");
  scene.degradation.validate();

  const auto& est = j.at("estimator");
  require_keys(est, "scene.estimator", {"mode", "order"},
               {"lookahead", "ridge", "block_frames", "eps"});
  const std::string mode = est.at("mode").get<std::string>();
  if (mode == "crm")
    scene.mode = EnhanceMode::crm;
  else if (mode == "df")
    scene.mode = EnhanceMode::df;
  else
    bad("scene.estimator.mode", "expected 'crm' or 'df'");
  const int order = int(get_number(est, "scene.estimator", "order"));
  if (order < 1) bad("scene.estimator.order", "must be >= 1");
  int lookahead = 0;
  if (est.contains("lookahead"))
    lookahead = int(get_number(est, "scene.estimator", "lookahead"));
  if (lookahead < 0 || lookahead >= order)
    bad("scene.estimator.lookahead", "must be in [0, order)");
  scene.estimator.order = FilterOrder{order - 1 - lookahead, lookahead};
  if (est.contains("ridge"))
    scene.estimator.ridge = get_number(est, "scene.estimator", "ridge");
  if (est.contains("block_frames"))
    scene.estimator.block_frames =
        int(get_number(est, "scene.estimator", "block_frames"));
  if (est.contains("eps"))
    scene.estimator.eps = get_number(est, "scene.estimator", "eps");
  scene.estimator.validate();

  scene.output_dir = j.at("output_dir").get<std::string>();
  if (!j.at("seed").is_number_unsigned())
    bad("scene.seed", "expected a nonnegative integer");
  scene.seed = j.at("seed").get<std::uint64_t>();
  scene.degradation.seed = scene.seed;
  return scene;
}

SceneFile load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("scene: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

std::string serialize_scene(const SceneFile& scene) {
  ordered_json j;
  for (std::size_t i = 0; i < kStemNames.size(); ++i)
    j["stems"][kStemNames[i]] = scene.stem_paths[i];
  for (std::size_t i = 0; i < kStemNames.size(); ++i)
    j["gains_db"][kStemNames[i]] = scene.gains.db[i];
  j["listener"]["id"] = scene.listener.id;
  j["listener"]["left"] = audiogram_to_json(scene.listener.left);
  j["listener"]["right"] = audiogram_to_json(scene.listener.right);
  auto& deg = j["degradation"];
  deg["magnitude_jitter_db"] = scene.degradation.magnitude_jitter_db;
  deg["phase_jitter_rad"] = scene.degradation.phase_jitter_rad;
  deg["fir_length"] = scene.degradation.fir_length;
  deg["advance_frames"] = scene.degradation.advance_frames;
  if (scene.degradation.noise_snr_db)
    deg["noise_snr_db"] = *scene.degradation.noise_snr_db;
  auto& est = j["estimator"];
  est["mode"] = scene.mode == EnhanceMode::crm ? "crm" : "df";
  est["order"] = scene.estimator.order.order();
  est["lookahead"] = scene.estimator.order.lookahead;
  est["ridge"] = scene.estimator.ridge;
  est["block_frames"] = scene.estimator.block_frames;
  est["eps"] = scene.estimator.eps;
  j["output_dir"] = scene.output_dir;
  j["seed"] = scene.seed;
  return j.dump(2) + "\n";
}

Audiogram parse_audiogram(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    bad("audiogram json", e.what());
  }
  return audiogram_from_json(j, "audiogram");
}

Audiogram load_audiogram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("audiogram: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_audiogram(ss.str());
}

RemixScene load_scene_inputs(const SceneFile& scene,
                             const std::string& scene_dir) {
  RemixScene run;
  for (std::size_t i = 0; i < kStemNames.size(); ++i) {
    std::filesystem::path p(scene.stem_paths[i]);
    if (p.is_relative()) p = std::filesystem::path(scene_dir) / p;
    if (!std::filesystem::exists(p))
      throw std::runtime_error(std::string("scene: missing stem file for '") +
                               kStemNames[i] + "': " + p.string());
    run.stems[i] = read_wav(p.string());
    if (run.stems[i].sample_rate != 44100)
      throw std::runtime_error(
          std::string("scene: stem '") + kStemNames[i] + "' (" + p.string() +
          ") is sampled at " + std::to_string(run.stems[i].sample_rate) +
          " Hz; 44100 Hz is required and resampling is not performed");
  }
  run.gains = scene.gains;
  run.listener = scene.listener;
  run.degradation = scene.degradation;
  run.mode = scene.mode;
  run.estimator = scene.estimator;
  run.stems.validate();
  return run;
}

namespace {

ordered_json metric_block(const SdrResult& s, const MaeResult& m) {
  ordered_json j;
  j["sdr_db"]["per_channel"] = s.per_channel_db;
  j["sdr_db"]["mean"] = s.mean_db;
  j["sdr_db"]["variant"] = "energy-ratio";
  j["mae"]["per_channel"] = m.per_channel;
  j["mae"]["mean"] = m.mean;
  return j;
}

}  // namespace

std::string metrics_to_json(const SdrResult& sdr_result,
                            const MaeResult& mae_result) {
  return metric_block(sdr_result, mae_result).dump(2) + "\n";
}

std::string report_to_json(const PipelineResult& result,
                           const SceneFile& scene) {
  ordered_json j;
  j["before"] = metric_block(result.sdr_before, result.mae_before);
  j["after"] = metric_block(result.sdr_after, result.mae_after);
  auto& fit = j["fit"];
  fit["total_relative_residual"] = result.fit.total_relative_residual;
  fit["block_count"] = result.fit.block_count;
  fit["degenerate_systems"] = result.fit.degenerate_systems;
  fit["pinv_fallbacks"] = result.fit.pinv_fallbacks;
  fit["max_condition"] = result.fit.max_condition;
  double before_total = 0.0, after_total = 0.0;
  for (double v : result.fit.residual_before) before_total += v;
  for (double v : result.fit.residual_after) after_total += v;
  fit["residual_before_total"] = before_total;
  fit["residual_after_total"] = after_total;
  auto& cfg = j["config"];
  cfg["mode"] = scene.mode == EnhanceMode::crm ? "crm" : "df";
  cfg["order"] = scene.estimator.order.order();
  cfg["lookahead"] = scene.estimator.order.lookahead;
  cfg["ridge"] = scene.estimator.ridge;
  cfg["block_frames"] = scene.estimator.block_frames;
  cfg["eps"] = scene.estimator.eps;
  cfg["seed"] = scene.seed;
  auto& deg = cfg["degradation"];
  deg["magnitude_jitter_db"] = scene.degradation.magnitude_jitter_db;
  deg["phase_jitter_rad"] = scene.degradation.phase_jitter_rad;
  deg["fir_length"] = scene.degradation.fir_length;
  deg["advance_frames"] = scene.degradation.advance_frames;
  if (scene.degradation.noise_snr_db)
    deg["noise_snr_db"] = *scene.degradation.noise_snr_db;
  return j.dump(2) + "\n";
}

}  // namespace remixkit
