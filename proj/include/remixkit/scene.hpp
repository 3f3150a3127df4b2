#pragma once

#include <string>

#include "remixkit/pipeline.hpp"

namespace remixkit {

// Serialized scene: stem paths plus every pipeline setting. Relative stem
// paths resolve against the scene file's directory.
struct SceneFile {
  std::array<std::string, 4> stem_paths;  // kStemNames order
  RemixGains gains;
  ListenerProfile listener;
  DegradationSpec degradation;
  EnhanceMode mode = EnhanceMode::df;
  EstimatorConfig estimator;
  std::string output_dir = ".";
  std::uint64_t seed = 0;
};

// Strict parse: unknown keys, missing keys, or out-of-range values raise
// std::runtime_error with the offending key path.
SceneFile parse_scene(const std::string& json_text);
SceneFile load_scene(const std::string& path);

// Canonical serialization; parse(serialize(s)) round-trips exactly.
std::string serialize_scene(const SceneFile& scene);

// Audiogram JSON fragment ({"frequencies_hz": [...], "levels_db_hl": [...]}).
Audiogram parse_audiogram(const std::string& json_text);
Audiogram load_audiogram(const std::string& path);

// Loads the scene's stems (resolving relative paths) and builds the
// runnable scene. Enforces the 44100 Hz contract.
RemixScene load_scene_inputs(const SceneFile& scene,
                             const std::string& scene_dir);

// Metric/fit report as pretty-printed JSON with a stable key order.
std::string report_to_json(const PipelineResult& result,
                           const SceneFile& scene);
std::string metrics_to_json(const SdrResult& sdr_result,
                            const MaeResult& mae_result);

}  // namespace remixkit
