// core/include/diarsim/vad.h

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

#ifndef DIARSIM_VAD_H_
#define DIARSIM_VAD_H_

#include <span>
#include <vector>

namespace diarsim {

/// A [onset, onset + duration) time interval in seconds.
struct TimeInterval {
  double onset = 0.0;
  double duration = 0.0;
  double end() const { return onset + duration; }
  bool operator==(const TimeInterval&) const = default;
};

struct EnergyVadConfig {
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  /// Frames whose log energy is more than this below the peak frame are
  /// treated as non-speech.
  double threshold_db_below_peak = 35.0;
  double min_speech_s = 0.3;
  double min_gap_s = 0.2;
};

/// Energy VAD: marks frames whose log energy exceeds (peak - threshold),
/// bridges gaps shorter than min_gap_s, then drops intervals shorter than
/// min_speech_s. All-zero input gives an empty list. Output intervals are
/// sorted and pairwise disjoint.
std::vector<TimeInterval> energy_vad(std::span<const float> samples,
                                     int sample_rate,
                                     const EnergyVadConfig& config = {});

struct SnrEstimate {
  double db = 0.0;
  /// Set when the noise-floor decile has exactly zero energy and the value
  /// was replaced by the configured ceiling.
  bool clipped = false;
};

struct SnrConfig {
  double frame_ms = 25.0;
  double ceiling_db = 60.0;
};

/// Decile-ratio SNR: 10*log10(mean energy of the top 10% of frames / mean
/// energy of the bottom 10%). Needs no model and is invariant to global gain.
SnrEstimate estimate_snr(std::span<const float> samples, int sample_rate,
                         const SnrConfig& config = {});

}  // namespace diarsim

#endif  // DIARSIM_VAD_H_
