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

#include "psyq/suite.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "psyq/errors.hpp"

namespace psyq {
namespace {

WeightPolynomial single(Residue N, std::map<std::pair<Residue, Residue>, std::uint64_t> terms) {
  WeightPolynomial p;
  p.modulus = N;
  p.terms = std::move(terms);
  return p;
}

TEST(Suite, TableGroupsByCountThenPolynomial) {
  const std::vector<SuiteRow> rows{
      {"3_1", 12, single(2, {{{0, 0}, 6}, {{1, 0}, 6}})},
      {"5_2", 12, single(2, {{{1, 0}, 12}})},
      {"4_1", 12, single(2, {{{0, 0}, 6}, {{1, 0}, 6}})},
      {"6_4", 36, single(2, {{{0, 0}, 18}, {{1, 0}, 18}})},
  };
  EXPECT_EQ(format_invariant_table(rows),
            "Φ_X^Z | Φ_X^{φ,ψ}(L) | L\n"
            "------+--------------+---------\n"
            "   12 | 6 + 6w       | 3_1, 4_1\n"
            "      | 12w          | 5_2\n"
            "------+--------------+---------\n"
            "   36 | 18 + 18w     | 6_4\n");
}

TEST(Suite, EmptyTableIsJustTheHeader) {
  EXPECT_EQ(format_invariant_table({}), "Φ_X^Z | Φ_X^{φ,ψ}(L) | L\n");
}

TEST(Suite, DirectoryRunPairsFilesByStem) {
  const auto blocks = run_suite(oracle::data_path("suite"), false, PolynomialMode::TwoVariable);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].psyquandle_file, "alex5.psy");
  EXPECT_EQ(blocks[0].modulus, 4);
  ASSERT_EQ(blocks[0].rows.size(), 3u);
  EXPECT_EQ(blocks[0].rows[0].diagram, "K1.dgm");
  EXPECT_EQ(polynomial_to_string(blocks[0].rows[1].polynomial), "5v^2");
  EXPECT_EQ(format_suite(blocks).rfind("# alex5.psy with alex5.wgt (mod 4)\n", 0), 0u);
  EXPECT_THROW(run_suite(oracle::data_path("no-such-dir"), false, PolynomialMode::SingleVariable), ParseError);
}

}  // namespace
}  // namespace psyq
