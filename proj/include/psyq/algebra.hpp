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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psyq {

/// An element of a finite psyquandle, 0-based.
using Element = int;

/// Square operation table: entry (x, y) is x * y with the row as left operand.
class OperationTable {
 public:
  OperationTable() = default;
  /// Row-major entries. Throws TableShapeError on size or range problems.
  OperationTable(int order, std::vector<Element> entries);

  static OperationTable from_function(int order,
                                      const std::function<Element(Element, Element)>& op);

  int order() const noexcept { return order_; }
  Element operator()(Element x, Element y) const { return entries_[x * order_ + y]; }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  /// Every column y gives a bijection x -> x * y.
  bool right_invertible() const;
  /// Table of the right inverse: x *^-1 y. Empty when not right-invertible.
  std::optional<OperationTable> right_inverse() const;

  friend bool operator==(const OperationTable&, const OperationTable&) = default;

 private:
  int order_ = 0;
  std::vector<Element> entries_;
};

enum class Operation { UnderTri, OverTri, UnderDot, OverDot };

std::string_view operation_name(Operation op);

/// The four raw tables of a candidate psyquandle, not yet checked.
struct OperationTables {
  OperationTable under_tri;
  OperationTable over_tri;
  OperationTable under_dot;
  OperationTable over_dot;

  int order() const noexcept { return under_tri.order(); }
  const OperationTable& get(Operation op) const;

  friend bool operator==(const OperationTables&, const OperationTables&) = default;
};

struct AxiomViolation {
  /// "0:under_tri", "i", "ii:S", "ii:S'", "iii.1", ..., "iv.2", "v.1", ..., "v.6".
  std::string axiom;
  std::vector<Element> witness;
};

struct AxiomReport {
  bool valid = true;
  std::vector<AxiomViolation> violations;
  bool pI_adequate = false;
};

/// Exhaustive check of axioms (0)-(v). Each violated identity is reported once,
/// with its lexicographically smallest witness. Axiom (iv) needs the inverse of
/// the over-dot operation and is skipped when that table is not invertible (the
/// (0) violation is reported instead).
AxiomReport check_axioms(const OperationTables& tables);

/// A finite psyquandle on {0, ..., n-1}; immutable, inverses precomputed.
class Psyquandle {
 public:
  /// Throws InvalidPsyquandleError when `tables` fail check_axioms.
  explicit Psyquandle(OperationTables tables);

  int order() const noexcept { return tables_.order(); }
  const OperationTables& tables() const noexcept { return tables_; }
  bool pI_adequate() const noexcept { return pI_adequate_; }

  Element under_tri(Element x, Element y) const { return tables_.under_tri(x, y); }
  Element over_tri(Element x, Element y) const { return tables_.over_tri(x, y); }
  Element under_dot(Element x, Element y) const { return tables_.under_dot(x, y); }
  Element over_dot(Element x, Element y) const { return tables_.over_dot(x, y); }

  Element inv_under_tri(Element x, Element y) const { return inverses_[0](x, y); }
  Element inv_over_tri(Element x, Element y) const { return inverses_[1](x, y); }
  Element inv_under_dot(Element x, Element y) const { return inverses_[2](x, y); }
  Element inv_over_dot(Element x, Element y) const { return inverses_[3](x, y); }

  Element apply(Operation op, Element x, Element y) const { return tables_.get(op)(x, y); }
  Element apply_inverse(Operation op, Element x, Element y) const {
    return inverses_[static_cast<int>(op)](x, y);
  }

  /// S(x, y) = (y ▷̄ x, x ▷̱ y).
  std::pair<Element, Element> classical_map(Element x, Element y) const {
    return {over_tri(y, x), under_tri(x, y)};
  }
  /// S'(x, y) = (y •̄ x, x •̱ y).
  std::pair<Element, Element> singular_map(Element x, Element y) const {
    return {over_dot(y, x), under_dot(x, y)};
  }
  std::pair<Element, Element> classical_map_inverse(Element a, Element b) const;
  std::pair<Element, Element> singular_map_inverse(Element a, Element b) const;

  friend bool operator==(const Psyquandle& a, const Psyquandle& b) {
    return a.tables_ == b.tables_;
  }

 private:
  OperationTables tables_;
  std::array<OperationTable, 4> inverses_;
  std::vector<int> classical_preimage_;
  std::vector<int> singular_preimage_;
  bool pI_adequate_ = false;
};

/// Biquandle promoted by setting •̄ = ▷̄ and •̱ = ▷̱.
/// Throws NotABiquandleError when the result fails the axioms.
Psyquandle promote_biquandle(const OperationTable& under_tri, const OperationTable& over_tri);

struct AlexanderParameters {
  int modulus = 0;
  int t = 0;
  int s = 0;
  int a = 0;
  int b = 0;
};

/// Alexander psyquandle over Z_n:
///   x ▷̱ y = tx + (s-t)y,  x ▷̄ y = sx,  x •̱ y = ax + (s-a)y,  x •̄ y = bx + (s-b)y.
/// Throws ParameterError unless t, s, a, b are units and t + s - a - b = 0 mod n.
Psyquandle alexander_psyquandle(const AlexanderParameters& p);

/// Coefficients (alpha, beta) with x * y = alpha x + beta y over Z_order, if the
/// table is linear in that sense.
std::optional<std::pair<int, int>> linear_form(const OperationTable& table);

/// Reads the n x 4n block-matrix format (1-based entries). No axiom check.
OperationTables parse_operation_tables(std::string_view text);
/// parse_operation_tables followed by construction (throws InvalidPsyquandleError).
Psyquandle parse_psyquandle_matrix(std::string_view text);
std::string serialize_psyquandle_matrix(const OperationTables& tables);

/// Stable 64-bit FNV-1a digest of the serialized block matrix, as 16 hex digits.
std::string fingerprint(const OperationTables& tables);

std::string describe(const AxiomViolation& v);

}  // namespace psyq
