#pragma once

#include <cstdint>
#include <string>

#include "remixkit/scene.hpp"

namespace remixkit {

// Synthesizes four deterministic 5-second stereo stems (tonal and noise
// material with fade-in/out) plus a ready-to-run scene.json in out_dir.
// Returns the written scene. Identical seeds produce identical files.
SceneFile generate_demo(const std::string& out_dir, std::uint64_t seed = 1);

}  // namespace remixkit
