// core/src/annotation.cc

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

#include "diarsim/annotation.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace diarsim {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string field;
  while (ss >> field) fields.push_back(field);
  return fields;
}

double parse_seconds(const std::string& text, int line_no, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": cannot parse " + what + " '" + text + "'");
  }
  return value;
}

void check_interval(double onset, double duration, int line_no) {
  if (duration <= 0) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": non-positive duration " + format_double(duration));
  }
  if (onset < 0) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": negative onset " + format_double(onset));
  }
}

std::vector<ReferenceAnnotation> group_by_recording(
    std::map<std::string, std::vector<SpeakerInterval>>&& by_recording) {
  std::vector<ReferenceAnnotation> annotations;
  annotations.reserve(by_recording.size());
  for (auto& [recording, intervals] : by_recording) {
    ReferenceAnnotation annotation{recording, std::move(intervals)};
    annotation.normalize();
    annotations.push_back(std::move(annotation));
  }
  return annotations;
}

}  // namespace

void ReferenceAnnotation::normalize(double epsilon) {
  std::map<std::string, std::vector<SpeakerInterval>> per_speaker;
  for (const auto& interval : intervals) {
    per_speaker[interval.speaker].push_back(interval);
  }
  std::vector<SpeakerInterval> merged;
  for (auto& [speaker, list] : per_speaker) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return a.onset < b.onset;
    });
    for (const auto& interval : list) {
      if (!merged.empty() && merged.back().speaker == speaker &&
          interval.onset <= merged.back().end() + epsilon) {
        double end = std::max(merged.back().end(), interval.end());
        merged.back().duration = end - merged.back().onset;
      } else {
        merged.push_back(interval);
      }
    }
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    return a.onset != b.onset ? a.onset < b.onset : a.speaker < b.speaker;
  });
  intervals = std::move(merged);
}

std::vector<std::string> ReferenceAnnotation::speakers() const {
  std::set<std::string> unique;
  for (const auto& interval : intervals) unique.insert(interval.speaker);
  return {unique.begin(), unique.end()};
}

double ReferenceAnnotation::max_end() const {
  double end = 0.0;
  for (const auto& interval : intervals) end = std::max(end, interval.end());
  return end;
}

std::vector<ReferenceAnnotation> parse_rttm(std::istream& in) {
  std::map<std::string, std::vector<SpeakerInterval>> by_recording;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields[0] != "SPEAKER") continue;
    if (fields.size() < 9) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 9 RTTM fields, got " +
                               std::to_string(fields.size()));
    }
    double onset = parse_seconds(fields[3], line_no, "onset");
    double duration = parse_seconds(fields[4], line_no, "duration");
    check_interval(onset, duration, line_no);
    by_recording[fields[1]].push_back({fields[7], onset, duration});
  }
  return group_by_recording(std::move(by_recording));
}

void write_rttm(const ReferenceAnnotation& annotation, std::ostream& out) {
  char onset_buf[64], duration_buf[64];
  for (const auto& interval : annotation.intervals) {
    std::snprintf(onset_buf, sizeof(onset_buf), "%.2f", interval.onset);
    std::snprintf(duration_buf, sizeof(duration_buf), "%.2f", interval.duration);
    if (std::string_view(duration_buf) == "0.00") continue;
    out << "SPEAKER " << annotation.recording_id << " 1 " << onset_buf << ' '
        << duration_buf << " <NA> <NA> " << interval.speaker << " <NA> <NA>\n";
  }
}

void write_rttm(const std::vector<ReferenceAnnotation>& annotations,
                std::ostream& out) {
  for (const auto& annotation : annotations) write_rttm(annotation, out);
}

ReferenceAnnotation quantize_to_rttm(const ReferenceAnnotation& annotation) {
  std::stringstream buffer;
  write_rttm(annotation, buffer);
  auto parsed = parse_rttm(buffer);
  if (parsed.empty()) return ReferenceAnnotation{annotation.recording_id, {}};
  return std::move(parsed.front());
}

std::vector<ReferenceAnnotation> parse_segment_list(std::istream& in) {
  std::map<std::string, std::vector<SpeakerInterval>> by_recording;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 4) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 'recording speaker onset duration', got " +
                               std::to_string(fields.size()) + " fields");
    }
    double onset = parse_seconds(fields[2], line_no, "onset");
    double duration = parse_seconds(fields[3], line_no, "duration");
    check_interval(onset, duration, line_no);
    by_recording[fields[0]].push_back({fields[1], onset, duration});
  }
  return group_by_recording(std::move(by_recording));
}

void write_segment_list(const std::vector<ReferenceAnnotation>& annotations,
                        std::ostream& out) {
  for (const auto& annotation : annotations) {
    for (const auto& interval : annotation.intervals) {
      out << annotation.recording_id << ' ' << interval.speaker << ' '
          << format_double(interval.onset) << ' '
          << format_double(interval.duration) << '\n';
    }
  }
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

}  // namespace diarsim
