// core/include/diarsim/pitloss.h

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

#ifndef DIARSIM_PITLOSS_H_
#define DIARSIM_PITLOSS_H_

#include <filesystem>
#include <vector>

#include "diarsim/activity.h"

namespace diarsim {

/// Probabilities are clamped into [kLossEpsilon, 1 - kLossEpsilon] before any
/// logarithm.
inline constexpr double kLossEpsilon = 1e-7;

/// Default weight of the auxiliary VAD term in the combined loss.
inline constexpr double kDefaultVadAlpha = 0.2;

/// Minimum-cost assignment: to_reference[i] is the reference column assigned
/// to predicted row i; total_cost is the sum of the chosen matrix entries.
struct Assignment {
  std::vector<int> to_reference;
  double total_cost = 0.0;
};

/// Exact minimum-cost assignment of a square matrix of finite reals, cubic in
/// the matrix size (shortest augmenting paths on the dual). NaN entries are
/// rejected. Brute force over permutations would be factorial and already
/// impractical for the speaker counts this toolkit targets.
Assignment hungarian(const std::vector<std::vector<double>>& cost);

/// Permutation-invariant diarization loss: the cost of pairing predicted
/// speaker i with reference speaker j is the frame-mean binary cross-entropy
/// of the two columns, and the returned scalar is the speaker-mean cost along
/// the optimal assignment. When speaker counts differ the smaller matrix is
/// padded with all-zero columns. Frame counts must match.
std::pair<double, Assignment> pit_diarization_loss(
    const ActivityMatrix& posteriors, const ActivityMatrix& labels);

/// Auxiliary speech/non-speech loss. Per frame, the model's silence
/// probability is the product over speakers of (1 - posterior) and the
/// silence label is 1 when no reference speaker is active; the loss is the
/// frame-mean binary cross-entropy between the two. Assignment-free. Labels
/// must be binary.
double vad_loss(const ActivityMatrix& posteriors, const ActivityMatrix& labels);

/// Mean binary cross-entropy of attractor existence probabilities against
/// (1, ..., 1, 0): `true_speakers` ones followed by a zero. The vector length
/// must be true_speakers + 1.
double attractor_existence_loss(const std::vector<double>& existence,
                                int true_speakers);

struct LossBreakdown {
  double diarization = 0.0;
  double attractors = 0.0;
  double vad = 0.0;
  double alpha = kDefaultVadAlpha;
  double combined = 0.0;
  Assignment assignment;
};

/// combined = diarization + attractors + alpha * vad. The number of true
/// speakers for the attractor term is the label column count.
LossBreakdown combined_loss(const ActivityMatrix& posteriors,
                            const ActivityMatrix& labels,
                            const std::vector<double>& existence,
                            double alpha = kDefaultVadAlpha);

/// Binary tensor file: header of two little-endian uint32 (frames, speakers)
/// followed by frames*speakers row-major float32 values. The bridge format
/// for loss parity checks against external training code.
ActivityMatrix read_activity_tensor(const std::filesystem::path& path);
void write_activity_tensor(const std::filesystem::path& path,
                           const ActivityMatrix& matrix);

}  // namespace diarsim

#endif  // DIARSIM_PITLOSS_H_
