// core/include/diarsim/pool.h

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

#ifndef DIARSIM_POOL_H_
#define DIARSIM_POOL_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diarsim/annotation.h"
#include "diarsim/vad.h"

namespace diarsim {

/// One usable speech excerpt of one speaker inside a source recording.
struct SpeechSegment {
  std::string source_audio;  // recording id, resolved by an AudioProvider
  double onset = 0.0;
  double duration = 0.0;
  std::string speaker;

  bool operator==(const SpeechSegment&) const = default;
};

/// Per-speaker catalog of speech segments. Immutable after construction and
/// safe to share across parallel generation workers.
struct SegmentPool {
  std::map<std::string, std::vector<SpeechSegment>> by_speaker;
  int sample_rate = 0;

  std::size_t num_speakers() const { return by_speaker.size(); }
  std::size_t num_segments() const;
  std::vector<std::string> speaker_ids() const;
};

struct PoolBuildOptions {
  double min_segment_s = 0.0;
  /// Recordings whose estimated SNR falls below this are excluded entirely.
  /// Disabled when unset. 15 dB is a reasonable starting point for
  /// in-the-wild sources.
  std::optional<double> snr_floor_db;
  SnrConfig snr;
};

struct PoolBuildResult {
  SegmentPool pool;
  std::vector<std::string> warnings;
  /// Recording ids dropped by the SNR filter, with the measured value.
  std::vector<std::pair<std::string, double>> excluded_recordings;
};

/// Audio lengths and sample rates per recording id, probed from WAV headers.
struct RecordingInfo {
  int sample_rate = 0;
  double duration_s = 0.0;
};

/// Builds a pool from reference annotations plus a directory of
/// <recording-id>.wav files. Segments are clipped to the source length,
/// segments shorter than min_segment_s are dropped, and recordings failing
/// the SNR floor are excluded (the SNR filter reads sample data; everything
/// else needs only headers). Mixed sample rates raise an error listing the
/// offending files. Speakers left without segments are omitted with a
/// warning record.
PoolBuildResult build_pool(const std::vector<ReferenceAnnotation>& annotations,
                           const std::filesystem::path& audio_dir,
                           const PoolBuildOptions& options = {});

/// Same, but with recording metadata (and optional SNR values) supplied by
/// the caller. Used by tests and by in-memory pipelines.
PoolBuildResult build_pool(const std::vector<ReferenceAnnotation>& annotations,
                           const std::map<std::string, RecordingInfo>& recordings,
                           const std::map<std::string, double>& snr_by_recording,
                           const PoolBuildOptions& options = {});

/// Flattens a pool back to per-recording annotations (the segment-list view).
std::vector<ReferenceAnnotation> pool_to_annotations(const SegmentPool& pool);

}  // namespace diarsim

#endif  // DIARSIM_POOL_H_
