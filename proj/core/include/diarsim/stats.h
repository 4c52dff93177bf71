// core/include/diarsim/stats.h

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

#ifndef DIARSIM_STATS_H_
#define DIARSIM_STATS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "diarsim/annotation.h"
#include "diarsim/rng.h"

namespace diarsim {

/// Binned counts over nonnegative seconds. Bin k covers
/// [k * bin_width, (k + 1) * bin_width). Sparse storage, exact integer
/// counts so files round-trip bit-exactly.
class Histogram {
 public:
  explicit Histogram(double bin_width = 0.01);

  void add(double value, std::uint64_t count = 1);
  /// Picks a bin with probability proportional to its count, then uniform
  /// within the bin. Returned values always lie inside observed bins.
  double sample(Rng& rng) const;

  bool empty() const { return total_ == 0; }
  std::uint64_t total() const { return total_; }
  double bin_width() const { return bin_width_; }
  double mean() const;  // bin centers weighted by counts
  double min_edge() const;
  double max_edge() const;
  const std::vector<std::pair<std::uint32_t, std::uint64_t>>& bins() const {
    return bins_;
  }
  /// Adds `count` observations to bin `index` directly.
  void add_bin(std::uint32_t index, std::uint64_t count);

  bool operator==(const Histogram&) const = default;

 private:
  double bin_width_;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> bins_;  // sorted by index
  std::uint64_t total_ = 0;
};

/// Turn-transition statistics estimated from real conversations: pause and
/// overlap length distributions plus the transition probabilities that drive
/// simulated-conversation planning.
struct TurnStatistics {
  Histogram same_speaker_pause;
  Histogram cross_speaker_pause;
  Histogram cross_speaker_overlap;
  double p_same_speaker = 0.0;
  double p_overlap_given_change = 0.0;

  /// Raw transition counts, kept for reporting and equal-weight pooling.
  std::uint64_t transitions_same = 0;
  std::uint64_t transitions_cross_pause = 0;
  std::uint64_t transitions_cross_overlap = 0;

  std::uint64_t total_transitions() const {
    return transitions_same + transitions_cross_pause + transitions_cross_overlap;
  }
  /// Checks probability ranges and that every histogram reachable with
  /// nonzero probability is nonempty. Throws on violation.
  void validate() const;

  bool operator==(const TurnStatistics&) const = default;
};

/// Extracts turn transitions from annotations and pools them with equal
/// weight per transition. Turns are the merged per-speaker intervals ordered
/// by onset; each consecutive pair is classified as a same-speaker pause, a
/// cross-speaker pause (gap >= 0) or a cross-speaker overlap (gap < 0, the
/// magnitude truncated to the following turn's length). Raises if no
/// transition exists at all.
TurnStatistics estimate_turn_statistics(
    const std::vector<ReferenceAnnotation>& annotations,
    double bin_width_s = 0.01);

/// Plain-text statistics file with a format-version header. Round-trips
/// bit-exactly (integer counts, shortest-round-trip doubles).
void save_statistics(const TurnStatistics& stats, std::ostream& out);
void save_statistics(const TurnStatistics& stats,
                     const std::filesystem::path& path);
TurnStatistics load_statistics(std::istream& in);
TurnStatistics load_statistics(const std::filesystem::path& path);

}  // namespace diarsim

#endif  // DIARSIM_STATS_H_
