#include "remixkit/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "remixkit/log.hpp"

namespace remixkit {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw std::runtime_error("wav: " + path + ": " + msg);
}

std::uint32_t read_u32(const unsigned char* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 |
         std::uint32_t(p[2]) << 16 | std::uint32_t(p[3]) << 24;
}

std::uint16_t read_u16(const unsigned char* p) {
  return std::uint16_t(p[0] | p[1] << 8);
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
  out.push_back((v >> 16) & 0xFF);
  out.push_back((v >> 24) & 0xFF);
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(v & 0xFF);
  out.push_back((v >> 8) & 0xFF);
}

}  // namespace

AudioBuffer read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    fail(path, "not a RIFF/WAVE file");

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t chunk_len = read_u32(bytes.data() + pos + 4);
    const unsigned char* body = bytes.data() + pos + 8;
    if (pos + 8 + chunk_len > bytes.size()) fail(path, "truncated chunk");
    if (std::memcmp(bytes.data() + pos, "fmt ", 4) == 0) {
      if (chunk_len < 16) fail(path, "malformed fmt chunk");
      format = read_u16(body);
      channels = read_u16(body + 2);
      rate = read_u32(body + 4);
      bits = read_u16(body + 14);
      if (format == kFormatExtensible) {
        if (chunk_len < 40) fail(path, "malformed extensible fmt chunk");
        format = read_u16(body + 24);  // first bytes of the subformat GUID
      }
    } else if (std::memcmp(bytes.data() + pos, "data", 4) == 0) {
      data = body;
      data_len = chunk_len;
    }
    pos += 8 + chunk_len + (chunk_len & 1);
  }

  if (!data) fail(path, "missing data chunk");
  if (channels < 1 || channels > 2)
    fail(path, "expected 1 or 2 channels, got " + std::to_string(channels));
  const bool is_float = format == kFormatFloat;
  if (!(format == kFormatPcm && (bits == 16 || bits == 24)) &&
      !(is_float && bits == 32))
    fail(path, "unsupported encoding (need 16/24-bit PCM or 32-bit float)");

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frame_bytes = bytes_per_sample * channels;
  const std::size_t frames = data_len / frame_bytes;

  AudioBuffer audio(channels, frames, int(rate));
  for (std::size_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      const unsigned char* s = data + i * frame_bytes + c * bytes_per_sample;
      double v = 0.0;
      if (is_float) {
        float f;
        std::memcpy(&f, s, 4);
        v = f;
      } else if (bits == 16) {
        v = double(std::int16_t(s[0] | s[1] << 8)) / 32768.0;
      } else {
        std::int32_t raw = s[0] | s[1] << 8 | s[2] << 16;
        if (raw & 0x800000) raw |= ~0xFFFFFF;
        v = double(raw) / 8388608.0;
      }
      audio.channels[c][i] = v;
    }
  }
  return audio;
}

void write_wav(const std::string& path, const AudioBuffer& audio,
               WavEncoding encoding) {
  audio.validate("write_wav");
  if (audio.num_channels() < 1 || audio.num_channels() > 2)
    fail(path, "expected 1 or 2 channels");

  const int channels = audio.num_channels();
  const std::size_t frames = audio.length();
  const int bits = encoding == WavEncoding::pcm16
                       ? 16
                       : encoding == WavEncoding::pcm24 ? 24 : 32;
  const std::uint16_t format =
      encoding == WavEncoding::float32 ? kFormatFloat : kFormatPcm;
  const std::size_t frame_bytes = std::size_t(bits / 8) * channels;
  const std::size_t data_len = frames * frame_bytes;

  std::vector<unsigned char> out;
  out.reserve(44 + data_len);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, std::uint32_t(36 + data_len));
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, format);
  put_u16(out, std::uint16_t(channels));
  put_u32(out, std::uint32_t(audio.sample_rate));
  put_u32(out, std::uint32_t(audio.sample_rate * frame_bytes));
  put_u16(out, std::uint16_t(frame_bytes));
  put_u16(out, std::uint16_t(bits));
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, std::uint32_t(data_len));

  std::size_t clipped = 0;
  for (std::size_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      const double v = audio.channels[c][i];
      if (encoding == WavEncoding::float32) {
        const float f = float(v);
        unsigned char b[4];
        std::memcpy(b, &f, 4);
        out.insert(out.end(), b, b + 4);
      } else if (encoding == WavEncoding::pcm16) {
        double scaled = v * 32768.0;
        if (scaled > 32767.0) { scaled = 32767.0; ++clipped; }
        if (scaled < -32768.0) { scaled = -32768.0; ++clipped; }
        const auto s = std::int16_t(std::lrint(scaled));
        put_u16(out, std::uint16_t(s));
      } else {
        double scaled = v * 8388608.0;
        if (scaled > 8388607.0) { scaled = 8388607.0; ++clipped; }
        if (scaled < -8388608.0) { scaled = -8388608.0; ++clipped; }
        const auto s = std::int32_t(std::lrint(scaled));
        out.push_back(s & 0xFF);
        out.push_back((s >> 8) & 0xFF);
        out.push_back((s >> 16) & 0xFF);
      }
    }
  }
  if (clipped > 0)
    log::warn("%s: %zu samples saturated during integer export", path.c_str(),
              clipped);

  std::ofstream os(path, std::ios::binary);
  if (!os) fail(path, "cannot open for writing");
  os.write(reinterpret_cast<const char*>(out.data()),
           std::streamsize(out.size()));
  if (!os) fail(path, "write failed");
}

}  // namespace remixkit
