// core/include/diarsim/activity.h

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

#ifndef DIARSIM_ACTIVITY_H_
#define DIARSIM_ACTIVITY_H_

#include <vector>

namespace diarsim {

/// Frames x speakers grid of activity values in [0, 1]. Binary when holding
/// labels, fractional when holding model posteriors. Row-major storage.
class ActivityMatrix {
 public:
  ActivityMatrix() = default;
  ActivityMatrix(int frames, int speakers, double frame_step = 0.01)
      : frames_(frames),
        speakers_(speakers),
        frame_step_(frame_step),
        values_(static_cast<std::size_t>(frames) * speakers, 0.0) {}

  double& at(int frame, int speaker) {
    return values_[static_cast<std::size_t>(frame) * speakers_ + speaker];
  }
  double at(int frame, int speaker) const {
    return values_[static_cast<std::size_t>(frame) * speakers_ + speaker];
  }

  int frames() const { return frames_; }
  int speakers() const { return speakers_; }
  double frame_step() const { return frame_step_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  /// True when every entry is exactly 0 or 1.
  bool is_binary() const;
  /// Throws unless every entry lies in [0, 1].
  void validate_unit_range() const;
  /// Copy with `extra` all-zero speaker columns appended.
  ActivityMatrix padded(int extra) const;

  bool operator==(const ActivityMatrix&) const = default;

 private:
  int frames_ = 0;
  int speakers_ = 0;
  double frame_step_ = 0.01;
  std::vector<double> values_;
};

}  // namespace diarsim

#endif  // DIARSIM_ACTIVITY_H_
