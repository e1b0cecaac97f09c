/* Copyright 2026 The psyq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psyq/algebra.hpp"

namespace psyq {

using Semiarc = int;

enum class CrossingKind { PositiveClassical, NegativeClassical, Singular };

std::string_view kind_token(CrossingKind kind);  // "X+", "X-", "S"

/// One crossing, described with both strands running downward: strand A enters
/// at the upper left and leaves at the lower right, strand B enters at the upper
/// right and leaves at the lower left.
///
/// PositiveClassical: A passes under B. Singular: a rigid vertex or a
/// precrossing. NegativeClassical: A passes over B.
///
/// The crossing maps send (upper_left, lower_left) to (upper_right, lower_right)
/// for positive and singular crossings; a negative crossing is read from the
/// bottom, sending (lower_left, upper_left) to (lower_right, upper_right).
struct Crossing {
  CrossingKind kind = CrossingKind::PositiveClassical;
  Semiarc upper_left = 0;   // A in
  Semiarc lower_left = 0;   // B out
  Semiarc upper_right = 0;  // B in
  Semiarc lower_right = 0;  // A out

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// An oriented singular-link or pseudoknot diagram as a list of crossings over
/// semiarcs 0..m-1. Crossing-free components are listed as loops.
class DiagramCode {
 public:
  /// Validates incidence and throws IncidenceError. Every non-loop semiarc must
  /// enter exactly one crossing and leave exactly one crossing.
  DiagramCode(int semiarc_count, std::vector<Crossing> crossings, std::vector<Semiarc> loops = {});

  int semiarc_count() const noexcept { return semiarc_count_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Semiarc>& loops() const noexcept { return loops_; }
  /// Each component as its semiarcs in orientation order, starting from the smallest id.
  const std::vector<std::vector<Semiarc>>& components() const noexcept { return components_; }

  /// The next semiarc along the strand, or the semiarc itself for a loop.
  Semiarc successor(Semiarc s) const { return successor_[s]; }

  std::size_t count(CrossingKind kind) const;

  friend bool operator==(const DiagramCode& a, const DiagramCode& b) {
    return a.semiarc_count_ == b.semiarc_count_ && a.crossings_ == b.crossings_ &&
           a.loops_ == b.loops_;
  }

 private:
  int semiarc_count_;
  std::vector<Crossing> crossings_;
  std::vector<Semiarc> loops_;
  std::vector<Semiarc> successor_;
  std::vector<std::vector<Semiarc>> components_;
};

/// Text format: `arcs <m>`, then lines `<X+|X-|S> <ul> <ll> <ur> <lr>` and
/// `loop <s>`; `#` starts a comment. Throws ParseError or IncidenceError.
DiagramCode parse_diagram(std::string_view text);
std::string serialize_diagram(const DiagramCode& d);

/// `target = left * right` under `op`. Two per crossing.
struct CrossingRelation {
  std::size_t crossing = 0;
  Semiarc target = 0;
  Operation op = Operation::UnderTri;
  Semiarc left = 0;
  Semiarc right = 0;
};

/// The coloring relations, two per crossing, in the crossing-map form:
///   positive: ur = ll ▷̄ ul, lr = ul ▷̱ ll
///   singular: ur = ll •̄ ul, lr = ul •̱ ll
///   negative: lr = ul ▷̄ ll, ur = ll ▷̱ ul
std::vector<CrossingRelation> generate_constraints(const DiagramCode& d);

/// A letter of a singular braid word on strands 1..k: sigma_i^{+-1} or tau_i.
struct BraidLetter {
  CrossingKind kind = CrossingKind::PositiveClassical;
  int position = 1;  // acts on positions i, i+1 (1-based)
};

/// Tokens "s<i>", "s<i>^-1" (or "S<i>"), "t<i>", separated by spaces.
std::vector<BraidLetter> parse_braid_word(std::string_view word);

/// Closure of a downward singular braid. Untouched strands become loops.
DiagramCode braid_closure(int strands, std::span<const BraidLetter> word);

struct CatalogEntry {
  std::string name;
  std::string description;
  DiagramCode code;
  /// For move variants: the base diagram and the move relating them.
  std::string base;
  std::string move;
  /// The move is only valid for pseudoknots (precrossing kink).
  bool pseudoknot_only = false;
};

const std::vector<CatalogEntry>& catalog_entries();
/// Throws UnknownDiagramError.
const CatalogEntry& catalog_entry(std::string_view name);
DiagramCode catalog(std::string_view name);

/// e.g. "2 components, 2 singular crossings".
std::string summarize(const DiagramCode& d);

}  // namespace psyq
