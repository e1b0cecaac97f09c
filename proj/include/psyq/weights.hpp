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

#include <string>
#include <string_view>
#include <vector>

#include "psyq/algebra.hpp"
#include "psyq/modlinalg.hpp"

namespace psyq {

/// An n x n table of residues mod N, indexed (first argument, second argument).
class ResidueTable {
 public:
  ResidueTable() = default;
  ResidueTable(int order, Residue modulus);
  /// Entries are reduced mod `modulus`. Throws TableShapeError on shape problems.
  ResidueTable(Residue modulus, const std::vector<std::vector<Residue>>& rows);

  int order() const noexcept { return order_; }
  Residue modulus() const noexcept { return modulus_; }
  Residue operator()(Element x, Element y) const { return entries_[x * order_ + y]; }
  void set(Element x, Element y, Residue v);
  std::vector<std::vector<Residue>> to_rows() const;

  friend bool operator==(const ResidueTable&, const ResidueTable&) = default;

 private:
  int order_ = 0;
  Residue modulus_ = 2;
  std::vector<Residue> entries_;
};

/// A candidate Boltzmann weight (phi, psi) with values in Z_N.
struct WeightPair {
  ResidueTable phi;
  ResidueTable psi;

  WeightPair() = default;
  /// Throws TableShapeError unless both tables share order and modulus.
  WeightPair(ResidueTable phi_table, ResidueTable psi_table);

  int order() const noexcept { return phi.order(); }
  Residue modulus() const noexcept { return phi.modulus(); }

  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

WeightPair operator+(const WeightPair& a, const WeightPair& b);
WeightPair operator*(Residue k, const WeightPair& w);

struct WeightViolation {
  /// "i", "ii", "iii.1", "iii.2", "iii.3", "v", "vi.1", "vi.2"
  std::string condition;
  std::vector<Element> witness;
};

struct WeightReport {
  bool satisfies_core = true;       // (i), (ii), (iii)
  bool pI_adequate = true;          // (v)
  bool strongly_compatible = true;  // (vi)
  std::vector<WeightViolation> violations;
};

/// Exhaustive check of the Boltzmann weight conditions. Throws OrderMismatchError.
WeightReport validate_weight_pair(const Psyquandle& x, const WeightPair& w);

struct CocycleReport {
  bool is_cocycle = true;
  std::vector<WeightViolation> violations;  // "i" or "ii"
};

/// Biquandle 2-cocycle condition for phi against the ▷-operations of `b`.
CocycleReport check_biquandle_cocycle(const Psyquandle& b, const ResidueTable& phi);

struct WeightConditions {
  bool require_pI = false;
  bool require_strong = false;
};

/// The Z_N-module of weight pairs meeting the selected conditions.
struct WeightSpace {
  Residue modulus = 2;
  int order = 0;
  BigCount count = 0;
  std::vector<WeightPair> generators;
  SolutionSpace solutions;

  /// Every member, zero pair first. Throws EnumerationCapExceeded.
  std::vector<WeightPair> enumerate(std::uint64_t cap) const;
};

/// The homogeneous linear system over Z_N in the 2n^2 unknowns (phi then psi,
/// row-major) whose solutions are exactly the weight pairs meeting `conditions`.
ModMatrix weight_condition_system(const Psyquandle& x, Residue modulus,
                                  WeightConditions conditions);

WeightSpace weight_solution_space(const Psyquandle& x, Residue modulus,
                                  WeightConditions conditions);

/// Flattens to the unknown vector layout of weight_condition_system and back.
std::vector<Residue> flatten(const WeightPair& w);
WeightPair unflatten(int order, Residue modulus, const std::vector<Residue>& values);

/// Reads "mod N", n rows of phi, a blank line, n rows of psi.
WeightPair parse_weight_pair(std::string_view text);
std::string serialize_weight_pair(const WeightPair& w);

std::string describe(const WeightViolation& v);

}  // namespace psyq
