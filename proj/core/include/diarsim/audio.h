// core/include/diarsim/audio.h

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

#ifndef DIARSIM_AUDIO_H_
#define DIARSIM_AUDIO_H_

#include <filesystem>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace diarsim {

/// Mono audio in float samples, nominal range [-1, 1).
struct AudioBuffer {
  std::vector<float> samples;
  int sample_rate = 0;

  double duration() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

/// Reads a 16-bit PCM mono WAV file. Stereo or non-PCM input is rejected, not
/// downmixed. Samples are scaled by 1/32768.
AudioBuffer read_wav(const std::filesystem::path& path);

/// Reads only the header: (sample_rate, num_samples). Cheap way to validate a
/// corpus without loading audio.
std::pair<int, std::size_t> read_wav_info(const std::filesystem::path& path);

/// Writes 16-bit PCM mono. Samples are scaled by 32767, rounded to nearest
/// and clipped into [-32768, 32767]; returns the number of clipped samples.
std::size_t write_wav(const std::filesystem::path& path,
                      std::span<const float> samples, int sample_rate);

/// Maps a recording id to its audio. Rendering and pair derivation go through
/// this so tests can feed synthetic buffers without touching the filesystem.
class AudioProvider {
 public:
  virtual ~AudioProvider() = default;
  virtual const AudioBuffer& get(const std::string& recording_id) = 0;
};

/// Resolves recording ids as <dir>/<id>.wav with an in-memory cache.
/// get() is safe to call from multiple threads.
class WavDirectoryProvider : public AudioProvider {
 public:
  explicit WavDirectoryProvider(std::filesystem::path dir)
      : dir_(std::move(dir)) {}
  const AudioBuffer& get(const std::string& recording_id) override;
  std::filesystem::path path_for(const std::string& recording_id) const;

 private:
  std::filesystem::path dir_;
  std::mutex mutex_;
  std::map<std::string, AudioBuffer> cache_;
};

/// Fixed in-memory table of buffers; unknown ids raise.
class MemoryAudioProvider : public AudioProvider {
 public:
  void add(const std::string& recording_id, AudioBuffer buffer) {
    buffers_[recording_id] = std::move(buffer);
  }
  const AudioBuffer& get(const std::string& recording_id) override;

 private:
  std::map<std::string, AudioBuffer> buffers_;
};

}  // namespace diarsim

#endif  // DIARSIM_AUDIO_H_
