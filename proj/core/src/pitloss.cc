// core/src/pitloss.cc

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

#include "diarsim/pitloss.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace diarsim {

namespace {

double clamp_probability(double p) {
  return std::clamp(p, kLossEpsilon, 1.0 - kLossEpsilon);
}

/// Binary cross-entropy of probability p against target t, with p clamped.
double bce(double p, double t) {
  p = clamp_probability(p);
  return -(t * std::log(p) + (1.0 - t) * std::log(1.0 - p));
}

}  // namespace

Assignment hungarian(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("hungarian: cost matrix must be square");
    }
    for (double v : row) {
      if (std::isnan(v)) throw std::invalid_argument("hungarian: NaN cost entry");
      if (std::isinf(v)) throw std::invalid_argument("hungarian: non-finite cost entry");
    }
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Dual potentials u (rows) and v (columns); match[j] is the row assigned to
  // column j. Index 0 is a sentinel, rows/columns are 1-based here.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> min_reduced(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = match[j0], j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (reduced < min_reduced[j]) {
          min_reduced[j] = reduced;
          way[j] = j0;
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_reduced[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    // Augment along the recorded alternating path.
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment result;
  result.to_reference.assign(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (match[j] != 0) result.to_reference[match[j] - 1] = j - 1;
  }
  for (int i = 0; i < n; ++i) {
    result.total_cost += cost[i][result.to_reference[i]];
  }
  return result;
}

std::pair<double, Assignment> pit_diarization_loss(
    const ActivityMatrix& posteriors, const ActivityMatrix& labels) {
  if (posteriors.frames() != labels.frames()) {
    throw std::invalid_argument(
        "pit_diarization_loss: frame count mismatch between posteriors and labels");
  }
  posteriors.validate_unit_range();
  labels.validate_unit_range();

  const int speakers = std::max(posteriors.speakers(), labels.speakers());
  if (speakers == 0 || posteriors.frames() == 0) {
    throw std::invalid_argument("pit_diarization_loss: empty input");
  }
  const ActivityMatrix padded_posteriors =
      posteriors.padded(speakers - posteriors.speakers());
  const ActivityMatrix padded_labels = labels.padded(speakers - labels.speakers());
  const int frames = padded_posteriors.frames();

  std::vector<std::vector<double>> cost(speakers, std::vector<double>(speakers));
  for (int i = 0; i < speakers; ++i) {
    for (int j = 0; j < speakers; ++j) {
      double sum = 0.0;
      for (int f = 0; f < frames; ++f) {
        sum += bce(padded_posteriors.at(f, i), padded_labels.at(f, j));
      }
      cost[i][j] = sum / frames;
    }
  }
  Assignment assignment = hungarian(cost);
  return {assignment.total_cost / speakers, std::move(assignment)};
}

double vad_loss(const ActivityMatrix& posteriors, const ActivityMatrix& labels) {
  if (posteriors.frames() != labels.frames() ||
      posteriors.speakers() != labels.speakers()) {
    throw std::invalid_argument("vad_loss: shape mismatch");
  }
  if (posteriors.frames() == 0) {
    throw std::invalid_argument("vad_loss: empty input");
  }
  posteriors.validate_unit_range();
  if (!labels.is_binary()) {
    throw std::invalid_argument("vad_loss: labels must be binary");
  }

  const int frames = posteriors.frames();
  const int speakers = posteriors.speakers();
  double sum = 0.0;
  for (int f = 0; f < frames; ++f) {
    double p_silence = 1.0;
    double label_sum = 0.0;
    for (int s = 0; s < speakers; ++s) {
      p_silence *= 1.0 - posteriors.at(f, s);
      label_sum += labels.at(f, s);
    }
    double silence_label = label_sum == 0.0 ? 1.0 : 0.0;
    sum += bce(p_silence, silence_label);
  }
  return sum / frames;
}

double attractor_existence_loss(const std::vector<double>& existence,
                                int true_speakers) {
  if (existence.empty()) {
    throw std::invalid_argument("attractor_existence_loss: empty vector");
  }
  if (static_cast<int>(existence.size()) != true_speakers + 1) {
    throw std::invalid_argument(
        "attractor_existence_loss: expected true_speakers + 1 probabilities");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < existence.size(); ++i) {
    double p = existence[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(
          "attractor_existence_loss: probability outside [0, 1]");
    }
    double target = i + 1 < existence.size() ? 1.0 : 0.0;
    sum += bce(p, target);
  }
  return sum / static_cast<double>(existence.size());
}

LossBreakdown combined_loss(const ActivityMatrix& posteriors,
                            const ActivityMatrix& labels,
                            const std::vector<double>& existence, double alpha) {
  LossBreakdown breakdown;
  breakdown.alpha = alpha;
  auto [diarization, assignment] = pit_diarization_loss(posteriors, labels);
  breakdown.diarization = diarization;
  breakdown.assignment = std::move(assignment);
  breakdown.attractors = attractor_existence_loss(existence, labels.speakers());
  breakdown.vad = vad_loss(posteriors.padded(labels.speakers() - posteriors.speakers()),
                           labels.padded(posteriors.speakers() - labels.speakers()));
  breakdown.combined =
      breakdown.diarization + breakdown.attractors + alpha * breakdown.vad;
  return breakdown;
}

ActivityMatrix read_activity_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::uint32_t dims[2];
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  if (!in) throw std::runtime_error(path.string() + ": truncated tensor header");
  ActivityMatrix matrix(static_cast<int>(dims[0]), static_cast<int>(dims[1]));
  std::vector<float> raw(static_cast<std::size_t>(dims[0]) * dims[1]);
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size() * sizeof(float)));
  if (!in) throw std::runtime_error(path.string() + ": truncated tensor data");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    matrix.values()[i] = static_cast<double>(raw[i]);
  }
  return matrix;
}

void write_activity_tensor(const std::filesystem::path& path,
                           const ActivityMatrix& matrix) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::uint32_t dims[2] = {static_cast<std::uint32_t>(matrix.frames()),
                           static_cast<std::uint32_t>(matrix.speakers())};
  out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  std::vector<float> raw(matrix.values().size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = static_cast<float>(matrix.values()[i]);
  }
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size() * sizeof(float)));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

}  // namespace diarsim
