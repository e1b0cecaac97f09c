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
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "psyq/invariants.hpp"

namespace psyq {

struct SuiteRow {
  std::string diagram;
  std::uint64_t count = 0;
  WeightPolynomial polynomial;
};

/// Evaluates every named diagram against one (X, w) pair, in input order.
std::vector<SuiteRow> evaluate_rows(const std::vector<std::pair<std::string, DiagramCode>>& diagrams,
                                    const Psyquandle& x, const WeightPair& w, PolynomialMode mode);

/// Groups rows by counting invariant, then by polynomial, in the layout
///
///   Φ_X^Z | Φ_X^{φ,ψ}(L) | L
///   ------+--------------+----------
///       5 | 5            | K1, unknot
///         | 5w^2         | K2
///
/// with a rule between count groups. Counts ascend; polynomials ascend by
/// their term maps; diagrams keep input order.
std::string format_invariant_table(const std::vector<SuiteRow>& rows);

struct SuiteBlock {
  std::string psyquandle_file;
  std::string weight_file;
  Residue modulus = 2;
  std::vector<SuiteRow> rows;
};

/// Every `<stem>.psy` with a sibling `<stem>.wgt` in `dir`, against every
/// `*.dgm` in `dir` (sorted, labelled by file name) and, optionally, the base entries
/// of the catalog. Throws ParseError and the module errors of its inputs.
std::vector<SuiteBlock> run_suite(const std::filesystem::path& dir, bool with_catalog,
                                  PolynomialMode mode);

std::string format_suite(const std::vector<SuiteBlock>& blocks);

}  // namespace psyq
