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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qddlab/hp/real.hpp"
#include "qddlab/pulse.hpp"

namespace qddlab::seq {

/// An ordered list of free-evolution intervals (dimensionless multiples of
/// the minimum pulse interval tau) with a pulse fired after each one.  The
/// final pulse terminates the sequence and may be Identity.  Index 0 is
/// executed first.
struct PulseSequence {
  std::vector<hp::Real> intervals;
  std::vector<PulseAxis> pulses;
  std::string label;

  std::size_t size() const { return intervals.size(); }
  hp::Real total_duration() const;
  /// Number of non-Identity pulses, terminal included.
  std::size_t pulse_count() const;
  /// Product of all pulses modulo global phase.
  PulseAxis net_pauli() const;
  /// Sizes match, every interval is finite and >= 0 (zero-duration gaps are
  /// legal only until canonicalize runs).
  void validate() const;
};

/// Accumulates a sequence chronologically.  Pulses added with no interval
/// in between multiply in the Pauli group, so coincident pulses collapse to
/// a single event at construction time.
class SequenceBuilder {
 public:
  void add_interval(const hp::Real& d);
  void add_pulse(PulseAxis a);
  /// Appends every interval/pulse of `sub`; its terminal pulse becomes the
  /// pending pulse and merges with whatever is added next.
  void append(const PulseSequence& sub);
  PulseSequence finish(std::string label);

 private:
  std::vector<hp::Real> intervals_;
  std::vector<PulseAxis> pulses_;
};

/// Canonical form: no zero-duration gaps (coincident pulses multiplied out)
/// and no interior Identity pulse (identity-separated intervals merged into
/// one of summed duration).  Physical action is unchanged up to global
/// phase.  Idempotent.
PulseSequence canonicalize(const PulseSequence& s);

bool is_canonical(const PulseSequence& s);

/// Compares canonical forms: same pulse lists, durations within
/// 10^-(digits-10).  Labels are ignored.
bool sequences_equal(const PulseSequence& a, const PulseSequence& b);

/// One pulse event on the normalized time axis (total duration = 1).
struct PulseEvent {
  hp::Real time;
  PulseAxis axis;
};

/// Pulse events of a canonical sequence, times normalized so the sequence
/// spans (0, 1].  A terminal Identity produces no event.
std::vector<PulseEvent> to_events(const PulseSequence& s);

/// Writes the `time,axis` schedule CSV (times normalized to 1, 30
/// significant digits, chronological, Identity events omitted).
void write_schedule_csv(const PulseSequence& s, std::ostream& out);

/// Parses a schedule CSV back into a sequence.  Times must be strictly
/// increasing in (0, 1]; intervals are rescaled so the smallest is 1; if no
/// event lands at t = 1 a trailing interval with an Identity terminator is
/// appended.  Throws std::runtime_error with the offending line number on
/// malformed input.
PulseSequence read_schedule_csv(std::istream& in, const std::string& label);

}  // namespace qddlab::seq
