// Copyright 2026 The qddlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qddlab/sequence.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qddlab::seq {

PulseAxis axis_from_char(char c) {
  switch (c) {
    case 'I': return PulseAxis::Identity;
    case 'X': return PulseAxis::X;
    case 'Y': return PulseAxis::Y;
    case 'Z': return PulseAxis::Z;
    default: throw std::invalid_argument(std::string("unknown pulse axis '") + c + "'");
  }
}

hp::Real PulseSequence::total_duration() const {
  hp::Real t(0L);
  for (const auto& d : intervals) t += d;
  return t;
}

std::size_t PulseSequence::pulse_count() const {
  std::size_t n = 0;
  for (auto p : pulses)
    if (p != PulseAxis::Identity) ++n;
  return n;
}

PulseAxis PulseSequence::net_pauli() const {
  PulseAxis net = PulseAxis::Identity;
  for (auto p : pulses) net = net * p;
  return net;
}

void PulseSequence::validate() const {
  if (intervals.size() != pulses.size()) {
    throw std::invalid_argument("PulseSequence: intervals/pulses length mismatch");
  }
  for (const auto& d : intervals) {
    if (d < hp::Real(0L)) throw std::invalid_argument("PulseSequence: negative interval");
  }
}

void SequenceBuilder::add_interval(const hp::Real& d) {
  if (d < hp::Real(0L)) throw std::invalid_argument("SequenceBuilder: negative interval");
  if (d.is_zero()) return;  // zero gap: following pulses merge with the pending one
  intervals_.push_back(d);
  pulses_.push_back(PulseAxis::Identity);
}

void SequenceBuilder::add_pulse(PulseAxis a) {
  if (pulses_.empty()) {
    if (a != PulseAxis::Identity) {
      throw std::logic_error("SequenceBuilder: pulse before the first interval");
    }
    return;
  }
  pulses_.back() = pulses_.back() * a;
}

void SequenceBuilder::append(const PulseSequence& sub) {
  sub.validate();
  for (std::size_t i = 0; i < sub.size(); ++i) {
    add_interval(sub.intervals[i]);
    add_pulse(sub.pulses[i]);
  }
}

PulseSequence SequenceBuilder::finish(std::string label) {
  PulseSequence s;
  s.intervals = std::move(intervals_);
  s.pulses = std::move(pulses_);
  s.label = std::move(label);
  intervals_.clear();
  pulses_.clear();
  return s;
}

PulseSequence canonicalize(const PulseSequence& s) {
  s.validate();
  // Pass 1: drop zero-duration gaps, multiplying coincident pulses.
  SequenceBuilder b;
  for (std::size_t i = 0; i < s.size(); ++i) {
    b.add_interval(s.intervals[i]);
    b.add_pulse(s.pulses[i]);
  }
  PulseSequence c = b.finish(s.label);
  // Pass 2: merge intervals separated by an interior Identity pulse.
  PulseSequence out;
  out.label = c.label;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!out.intervals.empty() && out.pulses.back() == PulseAxis::Identity) {
      out.intervals.back() += c.intervals[i];
      out.pulses.back() = c.pulses[i];
    } else {
      out.intervals.push_back(c.intervals[i]);
      out.pulses.push_back(c.pulses[i]);
    }
  }
  return out;
}

bool is_canonical(const PulseSequence& s) {
  if (s.intervals.size() != s.pulses.size()) return false;
  for (const auto& d : s.intervals) {
    if (!(d > hp::Real(0L))) return false;
  }
  for (std::size_t i = 0; i + 1 < s.pulses.size(); ++i) {
    if (s.pulses[i] == PulseAxis::Identity) return false;
  }
  return true;
}

bool sequences_equal(const PulseSequence& a, const PulseSequence& b) {
  PulseSequence ca = canonicalize(a);
  PulseSequence cb = canonicalize(b);
  if (ca.size() != cb.size()) return false;
  hp::Real eps = hp::tol(10);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca.pulses[i] != cb.pulses[i]) return false;
    if (hp::abs(ca.intervals[i] - cb.intervals[i]) > eps) return false;
  }
  return true;
}

std::vector<PulseEvent> to_events(const PulseSequence& s) {
  s.validate();
  hp::Real total = s.total_duration();
  if (!(total > hp::Real(0L))) throw std::invalid_argument("to_events: zero total duration");
  std::vector<PulseEvent> ev;
  hp::Real cum(0L);
  for (std::size_t i = 0; i < s.size(); ++i) {
    cum += s.intervals[i];
    if (s.pulses[i] != PulseAxis::Identity) ev.push_back({cum / total, s.pulses[i]});
  }
  return ev;
}

void write_schedule_csv(const PulseSequence& s, std::ostream& out) {
  out << "time,axis\n";
  for (const auto& e : to_events(s)) {
    out << e.time.str(30) << ',' << axis_char(e.axis) << '\n';
  }
}

PulseSequence read_schedule_csv(std::istream& in, const std::string& label) {
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("schedule CSV line " + std::to_string(lineno) + ": " + msg);
  };

  if (!std::getline(in, line)) {
    lineno = 1;
    fail("empty file");
  }
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "time,axis") fail("expected header 'time,axis'");

  std::vector<hp::Real> times;
  std::vector<PulseAxis> axes;
  hp::Real one(1L);
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) fail("missing comma");
    std::string tstr = line.substr(0, comma);
    std::string astr = line.substr(comma + 1);
    if (astr.size() != 1) fail("axis field must be a single character");
    PulseAxis ax;
    try {
      ax = axis_from_char(astr[0]);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
      throw;  // unreachable
    }
    if (ax == PulseAxis::Identity) fail("Identity is not a pulse event");
    hp::Real t(0L);
    try {
      t = hp::Real(tstr);
    } catch (const std::invalid_argument&) {
      fail("cannot parse time '" + tstr + "'");
    }
    if (!(t > hp::Real(0L))) fail("times must be positive");
    if (t > one) fail("times must be normalized to total duration 1");
    if (!times.empty() && !(t > times.back())) fail("times must be strictly increasing");
    times.push_back(t);
    axes.push_back(ax);
  }
  if (times.empty()) {
    lineno = 1;
    fail("no pulse events");
  }

  PulseSequence s;
  s.label = label;
  hp::Real prev(0L);
  for (std::size_t i = 0; i < times.size(); ++i) {
    s.intervals.push_back(times[i] - prev);
    s.pulses.push_back(axes[i]);
    prev = times[i];
  }
  if (prev < one) {
    s.intervals.push_back(one - prev);
    s.pulses.push_back(PulseAxis::Identity);
  }
  // Rescale so the shortest interval is 1 (the engine's tau unit).
  hp::Real min = s.intervals[0];
  for (const auto& d : s.intervals)
    if (d < min) min = d;
  hp::Real inv = hp::Real(1L) / min;
  for (auto& d : s.intervals) d *= inv;
  return s;
}

}  // namespace qddlab::seq
