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

#include "psyq/algebra.hpp"

#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "psyq/errors.hpp"

namespace psyq {
namespace {

std::set<std::string> labels(const AxiomReport& r) {
  std::set<std::string> out;
  for (const auto& v : r.violations) out.insert(v.axiom);
  return out;
}

TEST(Algebra, AlexanderExampleIsValidAndPIAdequate) {
  const auto x = alexander_psyquandle({5, 3, 2, 4, 1});
  EXPECT_TRUE(x.pI_adequate());
  EXPECT_EQ(x.under_tri(1, 0), 3);
  EXPECT_EQ(x.under_tri(0, 1), 4);
  EXPECT_EQ(x.over_tri(2, 4), 4);
  EXPECT_EQ(x.under_dot(1, 1), 2);
  EXPECT_EQ(x.over_dot(2, 4), 1);

  const auto from_file = oracle::load_psyquandle("alex5.psy");
  EXPECT_EQ(from_file, x);
}

TEST(Algebra, LinearFormsOfAlexanderTables) {
  const auto x = alexander_psyquandle({5, 3, 2, 4, 1});
  EXPECT_EQ(linear_form(x.tables().under_tri), (std::pair{3, 4}));
  EXPECT_EQ(linear_form(x.tables().over_tri), (std::pair{2, 0}));
  EXPECT_EQ(linear_form(x.tables().under_dot), (std::pair{4, 3}));
  EXPECT_EQ(linear_form(x.tables().over_dot), (std::pair{1, 1}));

  const auto shifted = OperationTable::from_function(3, [](Element a, Element) { return (a + 1) % 3; });
  EXPECT_FALSE(linear_form(shifted).has_value());
}

TEST(Algebra, BlockMatrixExampleFailsOnlyTheTwistAxiom) {
  const auto tables = parse_operation_tables(oracle::slurp(oracle::data_path("block3.psy")));
  const AxiomReport r = check_axioms(tables);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(r.pI_adequate);
  EXPECT_EQ(labels(r), (std::set<std::string>{"iv.1", "iv.2"}));
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations.front().witness, (std::vector<Element>{0, 0}));

  // iv.1 at (x, y): x •̱ ((y ▷̄ x) •̄⁻¹ x) is x + 2 while the right side is x.
  for (Element x = 0; x < 3; ++x) {
    const Element p = tables.over_dot.right_inverse().value()(tables.over_tri(0, x), x);
    EXPECT_EQ(tables.under_dot(x, p), (x + 2) % 3);
  }
  EXPECT_THROW(Psyquandle{tables}, InvalidPsyquandleError);
}

TEST(Algebra, BrokenColumnViolatesRightInvertibility) {
  auto tables = parse_operation_tables(oracle::slurp(oracle::data_path("block3.psy")));
  auto entries = tables.under_dot.entries();
  ASSERT_EQ(entries[0], 2);
  entries[0] = 0;  // row 1, column 1: 3 -> 1
  tables.under_dot = OperationTable(3, entries);
  const AxiomReport r = check_axioms(tables);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(labels(r).count("0:under_dot"));
}

TEST(Algebra, IdentityOperationsFormAPsyquandle) {
  const auto id = OperationTable::from_function(3, [](Element a, Element) { return a; });
  const AxiomReport r = check_axioms({id, id, id, id});
  EXPECT_TRUE(r.valid);
  EXPECT_TRUE(r.pI_adequate);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Algebra, ExamplePsyquandlesAreValid) {
  for (const char* name : {"ex52.psy", "ex53.psy", "ex54.psy"}) {
    SCOPED_TRACE(name);
    const auto tables = parse_operation_tables(oracle::slurp(oracle::data_path(name)));
    const AxiomReport r = check_axioms(tables);
    EXPECT_TRUE(r.valid);
    EXPECT_TRUE(r.pI_adequate);
  }
}

TEST(Algebra, AlexanderParameterSweep) {
  for (int n : {2, 3, 4, 5, 6, 7}) {
    int accepted = 0;
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const bool units = std::gcd(t, n) == 1 && std::gcd(s, n) == 1 &&
                               std::gcd(a, n) == 1 && std::gcd(b, n) == 1;
            const bool balanced = (t + s - a - b) % n == 0;
            if (units && balanced) {
              const auto x = alexander_psyquandle({n, t, s, a, b});
              EXPECT_TRUE(x.pI_adequate()) << n << t << s << a << b;
              ++accepted;
            } else {
              EXPECT_THROW(alexander_psyquandle({n, t, s, a, b}), ParameterError);
            }
          }
    EXPECT_GT(accepted, 0) << n;
  }
}

TEST(Algebra, InverseOperationsUndoTheOperations) {
  const auto x = oracle::load_psyquandle("ex53.psy");
  for (Element a = 0; a < x.order(); ++a)
    for (Element b = 0; b < x.order(); ++b)
      for (Operation op : {Operation::UnderTri, Operation::OverTri, Operation::UnderDot,
                           Operation::OverDot}) {
        EXPECT_EQ(x.apply_inverse(op, x.apply(op, a, b), b), a);
        EXPECT_EQ(x.apply(op, x.apply_inverse(op, a, b), b), a);
      }
}

TEST(Algebra, CrossingMapsInvertOnAllPairs) {
  const auto x = alexander_psyquandle({7, 3, 2, 4, 1});
  for (Element a = 0; a < 7; ++a)
    for (Element b = 0; b < 7; ++b) {
      auto [c, d] = x.classical_map(a, b);
      EXPECT_EQ(x.classical_map_inverse(c, d), (std::pair{a, b}));
      auto [e, f] = x.singular_map(a, b);
      EXPECT_EQ(x.singular_map_inverse(e, f), (std::pair{a, b}));
    }
}

TEST(Algebra, BiquandlePromotion) {
  const auto d3 = oracle::dihedral(3);
  EXPECT_EQ(d3.tables().under_dot, d3.tables().under_tri);
  EXPECT_EQ(d3.tables().over_dot, d3.tables().over_tri);
  EXPECT_TRUE(d3.pI_adequate());

  const auto bad = OperationTable::from_function(3, [](Element a, Element b) { return (a + b) % 3; });
  const auto id = OperationTable::from_function(3, [](Element a, Element) { return a; });
  EXPECT_THROW(promote_biquandle(bad, id), NotABiquandleError);
}

TEST(Algebra, RandomTablesMatchAxiomReportConsistency) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2;
    std::array<OperationTable, 4> t;
    for (auto& table : t) {
      std::vector<Element> e(n * n);
      for (auto& v : e) v = static_cast<Element>(rng() % n);
      table = OperationTable(n, e);
    }
    const AxiomReport r = check_axioms({t[0], t[1], t[2], t[3]});
    EXPECT_EQ(r.valid, r.violations.empty());
    bool diag = true;
    for (Element a = 0; a < n; ++a) diag = diag && t[2](a, a) == t[3](a, a);
    EXPECT_EQ(r.pI_adequate, diag);
    if (r.valid) EXPECT_NO_THROW(Psyquandle({t[0], t[1], t[2], t[3]}));
  }
}

TEST(Algebra, ParseSerializeRoundTrip) {
  for (const char* name : {"alex5.psy", "ex53.psy", "ex54.psy", "block3.psy"}) {
    SCOPED_TRACE(name);
    const auto tables = parse_operation_tables(oracle::slurp(oracle::data_path(name)));
    const std::string text = serialize_psyquandle_matrix(tables);
    EXPECT_EQ(parse_operation_tables(text), tables);
    EXPECT_EQ(serialize_psyquandle_matrix(parse_operation_tables(text)), text);
  }
  EXPECT_EQ(serialize_psyquandle_matrix(parse_operation_tables(oracle::slurp(oracle::data_path("ex52.psy")))),
            "n = 2\n1 1 | 1 1 | 2 2 | 2 2\n2 2 | 2 2 | 1 1 | 1 1\n");
}

TEST(Algebra, ParseAcceptsBracketsAndImplicitOrder) {
  const auto t = parse_operation_tables("[1, 1, 1, 1, 2, 2, 2, 2]\n[2, 2, 2, 2, 1, 1, 1, 1]\n");
  EXPECT_EQ(t.order(), 2);
  EXPECT_EQ(t.under_dot(0, 1), 1);
}

TEST(Algebra, ParseErrors) {
  EXPECT_THROW(parse_operation_tables(""), ParseError);
  EXPECT_THROW(parse_operation_tables("n = 2\n1 1 1 1 2 2 2 2\n"), ParseError);
  EXPECT_THROW(parse_operation_tables("1 1 1 1 2 2 2\n2 2 2 2 1 1 1 1\n"), ParseError);
  EXPECT_THROW(parse_operation_tables("1 1 1 1 2 2 2 3\n2 2 2 2 1 1 1 1\n"), ParseError);
  EXPECT_THROW(parse_operation_tables("1 1 1 1 2 2 2 x\n2 2 2 2 1 1 1 1\n"), ParseError);
  try {
    parse_operation_tables("n = 2\n1 1 1 1 2 2 2 2\n2 2 2 2 1 1 1 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(OperationTable(2, {0, 1, 1}), TableShapeError);
  EXPECT_THROW(OperationTable(2, {0, 1, 1, 2}), TableShapeError);
}

TEST(Algebra, FingerprintIsStableAndDiscriminating) {
  const auto a = alexander_psyquandle({5, 3, 2, 4, 1});
  const auto b = alexander_psyquandle({5, 2, 3, 4, 1});
  EXPECT_EQ(fingerprint(a.tables()), fingerprint(oracle::load_psyquandle("alex5.psy").tables()));
  EXPECT_NE(fingerprint(a.tables()), fingerprint(b.tables()));
  EXPECT_EQ(fingerprint(a.tables()).size(), 16u);
}

TEST(Algebra, DescribeUsesOneBasedWitnesses) {
  EXPECT_EQ(describe(AxiomViolation{"iii.2", {0, 1, 2}}), "axiom iii.2 fails at (1, 2, 3)");
}

}  // namespace
}  // namespace psyq
