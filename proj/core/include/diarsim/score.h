// core/include/diarsim/score.h

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

#ifndef DIARSIM_SCORE_H_
#define DIARSIM_SCORE_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "diarsim/activity.h"
#include "diarsim/annotation.h"

namespace diarsim {

/// NIST-style diarization error report for one recording or a pooled set.
struct DERReport {
  double scored_speech = 0.0;  // seconds of reference speech actually scored
  double missed = 0.0;
  double false_alarm = 0.0;
  double confusion = 0.0;
  double der = 0.0;  // (missed + false_alarm + confusion) / scored_speech
  double collar = 0.0;
  /// Optimal hypothesis-speaker -> reference-speaker map (time-weighted).
  std::map<std::string, std::string> mapping;
};

/// Thresholds posteriors into a binary matrix; entries >= threshold become 1.
ActivityMatrix binarize(const ActivityMatrix& posteriors, double threshold = 0.5);

/// Per-speaker median filter over frames with replicated edges. The window
/// must be odd; window 1 is the identity. Input must be binary.
ActivityMatrix median_filter(const ActivityMatrix& matrix, int window);

/// Maximal runs of ones become intervals [start*step, end*step).
ReferenceAnnotation matrix_to_annotation(const ActivityMatrix& matrix,
                                         double frame_step,
                                         const std::vector<std::string>& speakers,
                                         const std::string& recording_id = "");

/// Inverse of matrix_to_annotation for frame-aligned annotations: a frame is
/// active when its center falls inside an interval. Speakers become columns
/// in sorted order (or in the given order when provided).
ActivityMatrix rasterize_annotation(const ReferenceAnnotation& annotation,
                                    double frame_step,
                                    std::vector<std::string> speakers = {},
                                    int min_frames = 0);

/// Diarization error rate with a forgiveness collar around reference-segment
/// boundaries (NIST md-eval convention) and a global time-weighted optimal
/// speaker mapping computed with the assignment solver. When score_overlap is
/// false, regions where two or more reference speakers are active are
/// excluded from scoring. Raises when no reference speech is scored.
DERReport der(const ReferenceAnnotation& reference,
              const ReferenceAnnotation& hypothesis, double collar_s = 0.25,
              bool score_overlap = true);

enum class MedianMode { kAuto, kOn, kOff };

struct ScoreOptions {
  double collar_s = 0.25;
  bool score_overlap = true;
  /// kAuto reproduces the evaluation protocol: filter with window 11 when the
  /// collar is nonzero, no filtering when the collar is 0.
  MedianMode median = MedianMode::kAuto;
  int median_window = 11;
  double frame_step = 0.01;
};

struct FileScore {
  std::string recording_id;
  DERReport report;
  bool hypothesis_missing = false;
};

struct ScoreDirectoryResult {
  DERReport total;  // error durations pooled across files, then divided
  std::vector<FileScore> per_file;
  std::vector<std::string> warnings;
};

/// Scores every reference recording found in ref_dir (*.rttm) against the
/// hypotheses in hyp_dir, matching by recording id. A missing hypothesis
/// counts as all-miss for that file and is flagged.
ScoreDirectoryResult score_directory(const std::filesystem::path& ref_dir,
                                     const std::filesystem::path& hyp_dir,
                                     const ScoreOptions& options = {});

/// Scores in-memory annotation sets; the directory variant is a thin wrapper.
ScoreDirectoryResult score_annotations(
    const std::vector<ReferenceAnnotation>& references,
    const std::vector<ReferenceAnnotation>& hypotheses,
    const ScoreOptions& options = {});

/// Applies the median-filter post-processing step to a hypothesis annotation
/// by rasterizing it, filtering each speaker column and converting back.
ReferenceAnnotation median_filter_annotation(const ReferenceAnnotation& hypothesis,
                                             int window, double frame_step);

/// Aggregate activity durations of one annotation: total speech (union over
/// speakers), overlapped time (>= 2 speakers), time per speaker.
struct ActivityStats {
  double total_speech = 0.0;
  double overlap = 0.0;
  std::map<std::string, double> per_speaker;

  double overlap_fraction() const {
    return total_speech > 0.0 ? overlap / total_speech : 0.0;
  }
};
ActivityStats activity_stats(const ReferenceAnnotation& annotation);

}  // namespace diarsim

#endif  // DIARSIM_SCORE_H_
