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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psyq/algebra.hpp"
#include "psyq/diagram.hpp"
#include "psyq/modlinalg.hpp"
#include "psyq/weights.hpp"

namespace psyq {

/// Element assigned to each semiarc, indexed by semiarc id.
using Coloring = std::vector<Element>;

/// Calls `visit` once per coloring. Backtracking over semiarcs in strand order
/// with propagation through the crossing maps.
void for_each_coloring(const DiagramCode& d, const Psyquandle& x,
                       const std::function<void(const Coloring&)>& visit);

std::vector<Coloring> enumerate_colorings(const DiagramCode& d, const Psyquandle& x);

std::uint64_t counting_invariant(const DiagramCode& d, const Psyquandle& x);

bool is_coloring(const DiagramCode& d, const Psyquandle& x, const Coloring& c);

/// The coloring relations as a homogeneous system over Z_n when all four
/// operations are affine-linear (x*y = alpha x + beta y); nullopt otherwise.
std::optional<ModMatrix> coloring_system(const DiagramCode& d, const Psyquandle& x);

struct BoltzmannWeight {
  Residue total = 0;
  Residue phi_part = 0;
  Residue psi_part = 0;

  friend bool operator==(const BoltzmannWeight&, const BoltzmannWeight&) = default;
};

/// Throws InvalidColoringError if `c` is not a coloring, OrderMismatchError on
/// mismatched orders.
BoltzmannWeight boltzmann_weight(const Coloring& c, const WeightPair& w, const DiagramCode& d,
                                 const Psyquandle& x);

enum class PolynomialMode { SingleVariable, TwoVariable };
enum class Interpretation { SingularLink, Pseudoknot };

std::string_view mode_name(PolynomialMode mode);  // "single" / "two"

struct WeightPolynomial {
  Residue modulus = 2;
  PolynomialMode mode = PolynomialMode::SingleVariable;
  /// (exponent of w, 0) or (exponent of u, exponent of v), each in [0, N).
  std::map<std::pair<Residue, Residue>, std::uint64_t> terms;

  std::uint64_t coefficient_sum() const;

  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;
};

/// Throws InvalidWeightError when w fails the core conditions, CompatibilityError
/// for TwoVariable without strong compatibility, AdequacyError for the pseudoknot
/// interpretation unless both X and w are pI-adequate.
WeightPolynomial enhanced_polynomial(const DiagramCode& d, const Psyquandle& x,
                                     const WeightPair& w, PolynomialMode mode,
                                     Interpretation interpretation = Interpretation::SingularLink);

/// e.g. "6 + 6w", "2u^7", "5v^2"; "0" when empty.
std::string polynomial_to_string(const WeightPolynomial& p);

struct InvariantResult {
  std::string diagram;
  std::string psyquandle_hash;
  std::uint64_t counting_invariant = 0;
  WeightPolynomial polynomial;

  friend bool operator==(const InvariantResult&, const InvariantResult&) = default;
};

/// {diagram, psyquandle_hash, modulus, mode, counting_invariant, terms, rendered}
std::string to_json(const InvariantResult& r, int indent = -1);
/// Throws ParseError.
InvariantResult parse_invariant_result(std::string_view json_text);

}  // namespace psyq
