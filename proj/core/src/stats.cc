// core/src/stats.cc

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

#include "diarsim/stats.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace diarsim {

namespace {
constexpr const char* kFormatTag = "diarsim-stats";
constexpr const char* kFormatVersion = "1";
}  // namespace

Histogram::Histogram(double bin_width) : bin_width_(bin_width) {
  if (bin_width <= 0) {
    throw std::invalid_argument("Histogram: bin_width must be > 0");
  }
}

void Histogram::add(double value, std::uint64_t count) {
  if (value < 0) throw std::invalid_argument("Histogram: negative value");
  if (count == 0) return;
  auto index = static_cast<std::uint32_t>(value / bin_width_);
  auto it = std::lower_bound(
      bins_.begin(), bins_.end(), index,
      [](const auto& bin, std::uint32_t idx) { return bin.first < idx; });
  if (it != bins_.end() && it->first == index) {
    it->second += count;
  } else {
    bins_.insert(it, {index, count});
  }
  total_ += count;
}

void Histogram::add_bin(std::uint32_t index, std::uint64_t count) {
  add((index + 0.5) * bin_width_, count);
}

double Histogram::sample(Rng& rng) const {
  if (empty()) throw std::runtime_error("Histogram::sample: empty histogram");
  std::uint64_t pick = rng.uniform_int(total_);
  std::uint64_t cumulative = 0;
  for (const auto& [index, count] : bins_) {
    cumulative += count;
    if (pick < cumulative) {
      return (static_cast<double>(index) + rng.uniform()) * bin_width_;
    }
  }
  // unreachable: pick < total_ and counts sum to total_
  throw std::logic_error("Histogram::sample: cumulative count mismatch");
}

double Histogram::mean() const {
  if (empty()) throw std::runtime_error("Histogram::mean: empty histogram");
  double sum = 0.0;
  for (const auto& [index, count] : bins_) {
    sum += (static_cast<double>(index) + 0.5) * bin_width_ *
           static_cast<double>(count);
  }
  return sum / static_cast<double>(total_);
}

double Histogram::min_edge() const {
  if (empty()) throw std::runtime_error("Histogram::min_edge: empty histogram");
  return static_cast<double>(bins_.front().first) * bin_width_;
}

double Histogram::max_edge() const {
  if (empty()) throw std::runtime_error("Histogram::max_edge: empty histogram");
  return static_cast<double>(bins_.back().first + 1) * bin_width_;
}

void TurnStatistics::validate() const {
  auto check_probability = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::runtime_error(std::string("TurnStatistics: ") + name +
                               " outside [0, 1]");
    }
  };
  check_probability(p_same_speaker, "p_same_speaker");
  check_probability(p_overlap_given_change, "p_overlap_given_change");
  if (p_same_speaker > 0.0 && same_speaker_pause.empty()) {
    throw std::runtime_error(
        "TurnStatistics: same_speaker_pause is empty but reachable");
  }
  double p_change = 1.0 - p_same_speaker;
  if (p_change * (1.0 - p_overlap_given_change) > 0.0 &&
      cross_speaker_pause.empty()) {
    throw std::runtime_error(
        "TurnStatistics: cross_speaker_pause is empty but reachable");
  }
  if (p_change * p_overlap_given_change > 0.0 && cross_speaker_overlap.empty()) {
    throw std::runtime_error(
        "TurnStatistics: cross_speaker_overlap is empty but reachable");
  }
}

TurnStatistics estimate_turn_statistics(
    const std::vector<ReferenceAnnotation>& annotations, double bin_width_s) {
  TurnStatistics stats;
  stats.same_speaker_pause = Histogram(bin_width_s);
  stats.cross_speaker_pause = Histogram(bin_width_s);
  stats.cross_speaker_overlap = Histogram(bin_width_s);

  for (const auto& raw : annotations) {
    ReferenceAnnotation annotation = raw;
    annotation.normalize();
    const auto& turns = annotation.intervals;  // sorted by onset
    for (std::size_t i = 0; i + 1 < turns.size(); ++i) {
      const auto& current = turns[i];
      const auto& next = turns[i + 1];
      double gap = next.onset - current.end();
      if (current.speaker == next.speaker) {
        // After normalization same-speaker neighbours never overlap.
        stats.same_speaker_pause.add(std::max(gap, 0.0));
        ++stats.transitions_same;
      } else if (gap >= 0.0) {
        stats.cross_speaker_pause.add(gap);
        ++stats.transitions_cross_pause;
      } else {
        // A turn fully inside the current one counts as an overlap of its
        // own length.
        double overlap = std::min(-gap, next.duration);
        stats.cross_speaker_overlap.add(overlap);
        ++stats.transitions_cross_overlap;
      }
    }
  }

  std::uint64_t total = stats.total_transitions();
  if (total == 0) {
    throw std::runtime_error(
        "estimate_turn_statistics: no turn transitions in input");
  }
  std::uint64_t changes =
      stats.transitions_cross_pause + stats.transitions_cross_overlap;
  stats.p_same_speaker =
      static_cast<double>(stats.transitions_same) / static_cast<double>(total);
  stats.p_overlap_given_change =
      changes == 0 ? 0.0
                   : static_cast<double>(stats.transitions_cross_overlap) /
                         static_cast<double>(changes);
  return stats;
}

namespace {

void write_histogram(std::ostream& out, const char* name,
                     const Histogram& histogram) {
  out << "histogram " << name << ' ' << format_double(histogram.bin_width())
      << ' ' << histogram.bins().size() << '\n';
  for (const auto& [index, count] : histogram.bins()) {
    out << index << ' ' << count << '\n';
  }
}

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') return line;
  }
  throw std::runtime_error("statistics file: unexpected end of file");
}

template <typename T>
T parse_number(const std::string& text, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error(std::string("statistics file: bad ") + what +
                             " '" + text + "'");
  }
  return value;
}

Histogram read_histogram(std::istream& in, const std::string& expected_name) {
  std::istringstream header(next_content_line(in));
  std::string keyword, name, width_text, size_text;
  header >> keyword >> name >> width_text >> size_text;
  if (keyword != "histogram" || name != expected_name) {
    throw std::runtime_error("statistics file: expected histogram '" +
                             expected_name + "'");
  }
  double bin_width = parse_number<double>(width_text, "bin width");
  if (bin_width <= 0) {
    throw std::runtime_error("statistics file: bin width must be > 0");
  }
  auto num_bins = parse_number<std::uint64_t>(size_text, "bin count");
  if (num_bins == 0) {
    throw std::runtime_error("statistics file: empty histogram '" +
                             expected_name + "'");
  }
  Histogram histogram(bin_width);
  for (std::uint64_t i = 0; i < num_bins; ++i) {
    std::istringstream bin_line(next_content_line(in));
    std::string index_text, count_text;
    bin_line >> index_text >> count_text;
    auto index = parse_number<std::uint32_t>(index_text, "bin index");
    auto count = parse_number<std::uint64_t>(count_text, "bin count");
    if (count == 0) {
      throw std::runtime_error("statistics file: zero-count bin");
    }
    histogram.add_bin(index, count);
  }
  return histogram;
}

double read_keyed_double(std::istream& in, const std::string& key) {
  std::istringstream line(next_content_line(in));
  std::string name, value_text;
  line >> name >> value_text;
  if (name != key) {
    throw std::runtime_error("statistics file: expected key '" + key +
                             "', got '" + name + "'");
  }
  return parse_number<double>(value_text, key.c_str());
}

std::uint64_t read_keyed_u64(std::istream& in, const std::string& key) {
  std::istringstream line(next_content_line(in));
  std::string name, value_text;
  line >> name >> value_text;
  if (name != key) {
    throw std::runtime_error("statistics file: expected key '" + key +
                             "', got '" + name + "'");
  }
  return parse_number<std::uint64_t>(value_text, key.c_str());
}

}  // namespace

void save_statistics(const TurnStatistics& stats, std::ostream& out) {
  out << kFormatTag << " v" << kFormatVersion << '\n';
  out << "p_same_speaker " << format_double(stats.p_same_speaker) << '\n';
  out << "p_overlap_given_change " << format_double(stats.p_overlap_given_change)
      << '\n';
  out << "transitions_same " << stats.transitions_same << '\n';
  out << "transitions_cross_pause " << stats.transitions_cross_pause << '\n';
  out << "transitions_cross_overlap " << stats.transitions_cross_overlap << '\n';
  write_histogram(out, "same_speaker_pause", stats.same_speaker_pause);
  write_histogram(out, "cross_speaker_pause", stats.cross_speaker_pause);
  write_histogram(out, "cross_speaker_overlap", stats.cross_speaker_overlap);
}

void save_statistics(const TurnStatistics& stats,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  save_statistics(stats, out);
}

TurnStatistics load_statistics(std::istream& in) {
  std::istringstream header(next_content_line(in));
  std::string tag, version;
  header >> tag >> version;
  if (tag != kFormatTag || version != std::string("v") + kFormatVersion) {
    throw std::runtime_error("statistics file: version tag mismatch (got '" +
                             tag + " " + version + "', expected '" + kFormatTag +
                             " v" + kFormatVersion + "')");
  }
  TurnStatistics stats;
  stats.p_same_speaker = read_keyed_double(in, "p_same_speaker");
  stats.p_overlap_given_change = read_keyed_double(in, "p_overlap_given_change");
  stats.transitions_same = read_keyed_u64(in, "transitions_same");
  stats.transitions_cross_pause = read_keyed_u64(in, "transitions_cross_pause");
  stats.transitions_cross_overlap =
      read_keyed_u64(in, "transitions_cross_overlap");
  stats.same_speaker_pause = read_histogram(in, "same_speaker_pause");
  stats.cross_speaker_pause = read_histogram(in, "cross_speaker_pause");
  stats.cross_speaker_overlap = read_histogram(in, "cross_speaker_overlap");
  stats.validate();
  return stats;
}

TurnStatistics load_statistics(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_statistics(in);
}

}  // namespace diarsim
