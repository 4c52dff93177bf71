// core/include/diarsim/annotation.h

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

#ifndef DIARSIM_ANNOTATION_H_
#define DIARSIM_ANNOTATION_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace diarsim {

/// One speaker-attributed speech interval, in seconds.
struct SpeakerInterval {
  std::string speaker;
  double onset = 0.0;
  double duration = 0.0;

  double end() const { return onset + duration; }
  bool operator==(const SpeakerInterval&) const = default;
};

/// "Who spoke when" for one recording. Intervals of different speakers may
/// overlap; intervals of one speaker are non-overlapping once normalized.
struct ReferenceAnnotation {
  std::string recording_id;
  std::vector<SpeakerInterval> intervals;

  /// Merges overlapping/abutting same-speaker intervals and sorts the result
  /// by (onset, speaker). Gaps up to `epsilon` count as abutting.
  void normalize(double epsilon = 1e-9);

  std::vector<std::string> speakers() const;  // sorted, unique
  double max_end() const;
  bool empty() const { return intervals.empty(); }
  bool operator==(const ReferenceAnnotation&) const = default;
};

/// Parses NIST RTTM. Only SPEAKER-typed lines are read; other line types are
/// skipped. Returns one annotation per distinct recording id, sorted by id,
/// each normalized (same-speaker overlaps merged). A line that does not
/// follow the 9-field convention raises an error naming the line number, as
/// does a non-positive duration or a negative onset.
std::vector<ReferenceAnnotation> parse_rttm(std::istream& in);

/// Writes SPEAKER lines with onset/duration rounded to 2 decimal places.
/// Intervals whose duration rounds to 0.00 are dropped so that the emitted
/// file always parses back.
void write_rttm(const ReferenceAnnotation& annotation, std::ostream& out);
void write_rttm(const std::vector<ReferenceAnnotation>& annotations,
                std::ostream& out);

/// Round-trips an annotation through the RTTM text form, giving exactly what
/// a reader of the emitted file will see (2-decimal quantization plus
/// re-normalization).
ReferenceAnnotation quantize_to_rttm(const ReferenceAnnotation& annotation);

/// Parses the segment-list format: one "recording-id speaker onset duration"
/// per line, '#' comments and blank lines allowed. Output is grouped per
/// recording and normalized like parse_rttm.
std::vector<ReferenceAnnotation> parse_segment_list(std::istream& in);

/// Writes the segment-list format with full double precision (shortest
/// round-trip representation).
void write_segment_list(const std::vector<ReferenceAnnotation>& annotations,
                        std::ostream& out);

/// Formats a double with the shortest representation that parses back to the
/// same value.
std::string format_double(double value);

}  // namespace diarsim

#endif  // DIARSIM_ANNOTATION_H_
