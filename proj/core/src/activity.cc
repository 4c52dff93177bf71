// core/src/activity.cc

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

#include "diarsim/activity.h"

#include <stdexcept>

namespace diarsim {

bool ActivityMatrix::is_binary() const {
  for (double v : values_) {
    if (v != 0.0 && v != 1.0) return false;
  }
  return true;
}

void ActivityMatrix::validate_unit_range() const {
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("ActivityMatrix: entry outside [0, 1]");
    }
  }
}

ActivityMatrix ActivityMatrix::padded(int extra) const {
  if (extra <= 0) return *this;
  ActivityMatrix out(frames_, speakers_ + extra, frame_step_);
  for (int f = 0; f < frames_; ++f) {
    for (int s = 0; s < speakers_; ++s) out.at(f, s) = at(f, s);
  }
  return out;
}

}  // namespace diarsim
