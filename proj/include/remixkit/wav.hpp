#pragma once

#include <string>

#include "remixkit/audio.hpp"

namespace remixkit {

enum class WavEncoding { pcm16, pcm24, float32 };

// Reads 16/24-bit PCM or 32-bit float RIFF/WAVE files with 1-2 channels.
// Other encodings raise std::runtime_error naming the file.
AudioBuffer read_wav(const std::string& path);

// Writes the buffer with the requested encoding. Integer output saturates
// out-of-range samples and logs a warning; float output is written as-is.
void write_wav(const std::string& path, const AudioBuffer& audio,
               WavEncoding encoding = WavEncoding::float32);

}  // namespace remixkit
