// core/src/pool.cc

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

#include "diarsim/pool.h"

#include <algorithm>
#include <stdexcept>

#include "diarsim/audio.h"

namespace diarsim {

std::size_t SegmentPool::num_segments() const {
  std::size_t n = 0;
  for (const auto& [speaker, segments] : by_speaker) n += segments.size();
  return n;
}

std::vector<std::string> SegmentPool::speaker_ids() const {
  std::vector<std::string> ids;
  ids.reserve(by_speaker.size());
  for (const auto& [speaker, segments] : by_speaker) ids.push_back(speaker);
  return ids;
}

PoolBuildResult build_pool(const std::vector<ReferenceAnnotation>& annotations,
                           const std::filesystem::path& audio_dir,
                           const PoolBuildOptions& options) {
  std::map<std::string, RecordingInfo> recordings;
  std::map<std::string, double> snr_by_recording;
  for (const auto& annotation : annotations) {
    auto path = audio_dir / (annotation.recording_id + ".wav");
    if (options.snr_floor_db) {
      AudioBuffer audio = read_wav(path);
      recordings[annotation.recording_id] = {
          audio.sample_rate, audio.duration()};
      snr_by_recording[annotation.recording_id] =
          estimate_snr(audio.samples, audio.sample_rate, options.snr).db;
    } else {
      auto [rate, num_samples] = read_wav_info(path);
      recordings[annotation.recording_id] = {
          rate, static_cast<double>(num_samples) / rate};
    }
  }
  return build_pool(annotations, recordings, snr_by_recording, options);
}

PoolBuildResult build_pool(const std::vector<ReferenceAnnotation>& annotations,
                           const std::map<std::string, RecordingInfo>& recordings,
                           const std::map<std::string, double>& snr_by_recording,
                           const PoolBuildOptions& options) {
  PoolBuildResult result;

  // The pool has a single sample rate; anything else needs resampling, which
  // this toolkit does not do.
  int rate = 0;
  std::vector<std::string> offending;
  for (const auto& [id, info] : recordings) {
    if (rate == 0) rate = info.sample_rate;
    if (info.sample_rate != rate) offending.push_back(id);
  }
  if (!offending.empty()) {
    std::string message = "mixed sample rates and no resampling support; "
                          "offending recordings:";
    for (const auto& id : offending) message += " " + id;
    throw std::runtime_error(message);
  }
  result.pool.sample_rate = rate;

  for (const auto& annotation : annotations) {
    auto info_it = recordings.find(annotation.recording_id);
    if (info_it == recordings.end()) {
      throw std::runtime_error("no audio metadata for recording '" +
                               annotation.recording_id + "'");
    }
    if (options.snr_floor_db) {
      auto snr_it = snr_by_recording.find(annotation.recording_id);
      if (snr_it == snr_by_recording.end()) {
        throw std::runtime_error("no SNR measurement for recording '" +
                                 annotation.recording_id + "'");
      }
      if (snr_it->second < *options.snr_floor_db) {
        result.excluded_recordings.emplace_back(annotation.recording_id,
                                                snr_it->second);
        continue;
      }
    }
    double audio_len = info_it->second.duration_s;
    for (const auto& interval : annotation.intervals) {
      if (interval.onset >= audio_len) continue;
      double duration = std::min(interval.duration, audio_len - interval.onset);
      if (duration < options.min_segment_s || duration <= 0) continue;
      result.pool.by_speaker[interval.speaker].push_back(
          {annotation.recording_id, interval.onset, duration, interval.speaker});
    }
  }

  // Speakers can lose all segments to the filters; report rather than keep
  // empty entries.
  std::map<std::string, bool> seen;
  for (const auto& annotation : annotations) {
    for (const auto& interval : annotation.intervals) seen[interval.speaker] = true;
  }
  for (const auto& [speaker, present] : seen) {
    if (!result.pool.by_speaker.count(speaker)) {
      result.warnings.push_back("speaker '" + speaker +
                                "' has no surviving segments and was omitted");
    }
  }
  for (auto& [speaker, segments] : result.pool.by_speaker) {
    std::sort(segments.begin(), segments.end(),
              [](const SpeechSegment& a, const SpeechSegment& b) {
                if (a.source_audio != b.source_audio)
                  return a.source_audio < b.source_audio;
                return a.onset < b.onset;
              });
  }
  return result;
}

std::vector<ReferenceAnnotation> pool_to_annotations(const SegmentPool& pool) {
  std::map<std::string, std::vector<SpeakerInterval>> by_recording;
  for (const auto& [speaker, segments] : pool.by_speaker) {
    for (const auto& segment : segments) {
      by_recording[segment.source_audio].push_back(
          {segment.speaker, segment.onset, segment.duration});
    }
  }
  std::vector<ReferenceAnnotation> annotations;
  for (auto& [recording, intervals] : by_recording) {
    ReferenceAnnotation annotation{recording, std::move(intervals)};
    std::sort(annotation.intervals.begin(), annotation.intervals.end(),
              [](const SpeakerInterval& a, const SpeakerInterval& b) {
                if (a.onset != b.onset) return a.onset < b.onset;
                return a.speaker < b.speaker;
              });
    annotations.push_back(std::move(annotation));
  }
  return annotations;
}

}  // namespace diarsim
