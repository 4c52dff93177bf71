// core/src/vad.cc

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

#include "diarsim/vad.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace diarsim {

namespace {

// Mean squared sample value per frame. Frames are placed every hop samples;
// the last partial frame is included if it has at least one sample.
std::vector<double> frame_energies(std::span<const float> samples,
                                   std::size_t frame_len, std::size_t hop) {
  std::vector<double> energies;
  if (samples.empty()) return energies;
  for (std::size_t start = 0; start < samples.size(); start += hop) {
    std::size_t end = std::min(start + frame_len, samples.size());
    double sum = 0.0;
    for (std::size_t i = start; i < end; ++i) {
      sum += static_cast<double>(samples[i]) * samples[i];
    }
    energies.push_back(sum / static_cast<double>(frame_len));
    if (end == samples.size()) break;
  }
  return energies;
}

}  // namespace

std::vector<TimeInterval> energy_vad(std::span<const float> samples,
                                     int sample_rate,
                                     const EnergyVadConfig& config) {
  if (sample_rate <= 0) throw std::invalid_argument("energy_vad: bad sample rate");
  if (config.frame_ms <= 0 || config.hop_ms <= 0) {
    throw std::invalid_argument("energy_vad: frame_ms and hop_ms must be > 0");
  }
  std::vector<TimeInterval> result;
  if (samples.empty()) return result;

  auto frame_len = static_cast<std::size_t>(
      std::lround(config.frame_ms * 1e-3 * sample_rate));
  auto hop =
      static_cast<std::size_t>(std::lround(config.hop_ms * 1e-3 * sample_rate));
  if (frame_len == 0 || hop == 0) {
    throw std::invalid_argument("energy_vad: frame or hop shorter than one sample");
  }

  std::vector<double> energies = frame_energies(samples, frame_len, hop);
  double peak = *std::max_element(energies.begin(), energies.end());
  if (peak <= 0.0) return result;  // digital silence

  double floor = peak * std::pow(10.0, -config.threshold_db_below_peak / 10.0);
  double hop_s = static_cast<double>(hop) / sample_rate;
  double frame_s = static_cast<double>(frame_len) / sample_rate;
  double total_s = static_cast<double>(samples.size()) / sample_rate;

  // Maximal runs of frames above the floor.
  std::vector<TimeInterval> intervals;
  std::size_t f = 0;
  while (f < energies.size()) {
    if (energies[f] <= floor) {
      ++f;
      continue;
    }
    std::size_t first = f;
    while (f < energies.size() && energies[f] > floor) ++f;
    double onset = static_cast<double>(first) * hop_s;
    double end = std::min(static_cast<double>(f - 1) * hop_s + frame_s, total_s);
    intervals.push_back({onset, end - onset});
  }

  // Bridge short gaps, then enforce the minimum speech length.
  std::vector<TimeInterval> bridged;
  for (const auto& interval : intervals) {
    if (!bridged.empty() &&
        interval.onset - bridged.back().end() < config.min_gap_s) {
      bridged.back().duration = interval.end() - bridged.back().onset;
    } else {
      bridged.push_back(interval);
    }
  }
  for (const auto& interval : bridged) {
    if (interval.duration >= config.min_speech_s) result.push_back(interval);
  }
  return result;
}

SnrEstimate estimate_snr(std::span<const float> samples, int sample_rate,
                         const SnrConfig& config) {
  if (sample_rate <= 0) throw std::invalid_argument("estimate_snr: bad sample rate");
  if (samples.empty()) throw std::invalid_argument("estimate_snr: empty audio");
  auto frame_len = static_cast<std::size_t>(
      std::lround(config.frame_ms * 1e-3 * sample_rate));
  if (frame_len == 0) throw std::invalid_argument("estimate_snr: frame too short");

  // Non-overlapping frames for the decile statistics.
  std::vector<double> energies = frame_energies(samples, frame_len, frame_len);
  std::sort(energies.begin(), energies.end());

  std::size_t decile = std::max<std::size_t>(1, energies.size() / 10);
  double bottom = std::accumulate(energies.begin(), energies.begin() + decile, 0.0) /
                  static_cast<double>(decile);
  double top = std::accumulate(energies.end() - decile, energies.end(), 0.0) /
               static_cast<double>(decile);

  if (bottom <= 0.0) return {config.ceiling_db, true};
  double db = 10.0 * std::log10(top / bottom);
  if (db > config.ceiling_db) return {config.ceiling_db, true};
  return {db, false};
}

}  // namespace diarsim
