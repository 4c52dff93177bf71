// core/src/audio.cc

// Copyright 2026  Diarsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "diarsim/audio.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace diarsim {

namespace {

struct WavFormat {
  std::uint16_t audio_format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

std::uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return b[0] | (b[1] << 8) | (b[2] << 16) | (std::uint32_t(b[3]) << 24);
}

std::uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8),
               static_cast<char>(v >> 16), static_cast<char>(v >> 24)};
  out.write(b, 4);
}

void write_u16(std::ostream& out, std::uint16_t v) {
  char b[2] = {static_cast<char>(v), static_cast<char>(v >> 8)};
  out.write(b, 2);
}

// Walks RIFF chunks up to "data"; validates 16-bit PCM mono. Returns the
// format and leaves the stream positioned at the start of sample data, with
// the data byte count in *data_bytes.
WavFormat open_wav(std::ifstream& in, const std::filesystem::path& path,
                   std::uint32_t* data_bytes) {
  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) {
    throw std::runtime_error(path.string() + ": not a RIFF/WAV file");
  }
  read_u32(in);  // riff size
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) {
    throw std::runtime_error(path.string() + ": not a WAVE file");
  }
  WavFormat format;
  bool have_format = false;
  while (in.read(tag, 4)) {
    std::uint32_t chunk_size = read_u32(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      format.audio_format = read_u16(in);
      format.channels = read_u16(in);
      format.sample_rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      format.bits_per_sample = read_u16(in);
      if (chunk_size > 16) in.seekg(chunk_size - 16, std::ios::cur);
      have_format = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_format) {
        throw std::runtime_error(path.string() + ": data chunk before fmt");
      }
      if (format.audio_format != 1 || format.bits_per_sample != 16) {
        throw std::runtime_error(path.string() +
                                 ": only 16-bit PCM WAV is supported");
      }
      if (format.channels != 1) {
        throw std::runtime_error(path.string() +
                                 ": expected mono audio, got " +
                                 std::to_string(format.channels) +
                                 " channels (downmix is not performed)");
      }
      *data_bytes = chunk_size;
      return format;
    } else {
      // skip unknown chunk (word-aligned)
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  throw std::runtime_error(path.string() + ": no data chunk found");
}

}  // namespace

AudioBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::uint32_t data_bytes = 0;
  WavFormat format = open_wav(in, path, &data_bytes);

  AudioBuffer buffer;
  buffer.sample_rate = static_cast<int>(format.sample_rate);
  std::size_t num_samples = data_bytes / 2;
  std::vector<std::int16_t> raw(num_samples);
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(num_samples * 2));
  if (!in) throw std::runtime_error(path.string() + ": truncated data chunk");
  buffer.samples.resize(num_samples);
  for (std::size_t i = 0; i < num_samples; ++i) {
    buffer.samples[i] = static_cast<float>(raw[i]) / 32768.0f;
  }
  return buffer;
}

std::pair<int, std::size_t> read_wav_info(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::uint32_t data_bytes = 0;
  WavFormat format = open_wav(in, path, &data_bytes);
  return {static_cast<int>(format.sample_rate), data_bytes / 2};
}

std::size_t write_wav(const std::filesystem::path& path,
                      std::span<const float> samples, int sample_rate) {
  if (sample_rate <= 0) {
    throw std::invalid_argument("write_wav: sample_rate must be positive");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());

  std::uint32_t data_bytes = static_cast<std::uint32_t>(samples.size() * 2);
  out.write("RIFF", 4);
  write_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, 1);  // mono
  write_u32(out, static_cast<std::uint32_t>(sample_rate));
  write_u32(out, static_cast<std::uint32_t>(sample_rate) * 2);
  write_u16(out, 2);
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, data_bytes);

  std::size_t clipped = 0;
  std::vector<std::int16_t> raw(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    long v = std::lround(static_cast<double>(samples[i]) * 32767.0);
    if (v > 32767) {
      v = 32767;
      ++clipped;
    } else if (v < -32768) {
      v = -32768;
      ++clipped;
    }
    raw[i] = static_cast<std::int16_t>(v);
  }
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size() * 2));
  if (!out) throw std::runtime_error("short write to " + path.string());
  return clipped;
}

const AudioBuffer& WavDirectoryProvider::get(const std::string& recording_id) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(recording_id);
  if (it == cache_.end()) {
    it = cache_.emplace(recording_id, read_wav(path_for(recording_id))).first;
  }
  return it->second;
}

std::filesystem::path WavDirectoryProvider::path_for(
    const std::string& recording_id) const {
  return dir_ / (recording_id + ".wav");
}

const AudioBuffer& MemoryAudioProvider::get(const std::string& recording_id) {
  auto it = buffers_.find(recording_id);
  if (it == buffers_.end()) {
    throw std::runtime_error("no audio registered for id '" + recording_id + "'");
  }
  return it->second;
}

}  // namespace diarsim
