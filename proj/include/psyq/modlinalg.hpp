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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psyq {

using Residue = std::int64_t;
using BigCount = boost::multiprecision::cpp_int;

/// Dense row-major matrix over Z_n. Moduli must fit in 31 bits.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, Residue modulus);
  /// Entries may be negative or exceed the modulus; they are reduced.
  ModMatrix(Residue modulus, const std::vector<std::vector<Residue>>& rows);

  static ModMatrix identity(std::size_t n, Residue modulus);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue modulus() const noexcept { return modulus_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v);

  std::vector<Residue> row(std::size_t r) const;
  std::vector<std::vector<Residue>> to_rows() const;
  std::vector<Residue> apply(std::span<const Residue> x) const;

  ModMatrix operator*(const ModMatrix& rhs) const;
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

  Residue reduce(Residue v) const noexcept {
    v %= modulus_;
    return v < 0 ? v + modulus_ : v;
  }

  // Elementary operations, used by the eliminations.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void scale_row(std::size_t r, Residue k);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, Residue k);
  void add_col(std::size_t dst, std::size_t src, Residue k);
  /// (row a, row b) <- (p a + q b, r a + s b)
  void combine_rows(std::size_t a, std::size_t b, Residue p, Residue q, Residue r, Residue s);
  void combine_cols(std::size_t a, std::size_t b, Residue p, Residue q, Residue r, Residue s);

 private:
  std::size_t rows_;
  std::size_t cols_;
  Residue modulus_;
  std::vector<Residue> data_;
};

bool is_prime(Residue n);
/// Inverse of a unit mod n, or nullopt.
std::optional<Residue> unit_inverse(Residue a, Residue n);

/// Reduced row echelon form over a prime field. Throws CompositeModulusError.
ModMatrix rref_mod(const ModMatrix& m);
std::size_t rank_mod_prime(const ModMatrix& m);

struct SmithDecomposition {
  ModMatrix diagonal;  // D = U m V, entries divisors of n (0 standing for n), d_i | d_{i+1}
  ModMatrix left;      // U, rows x rows
  ModMatrix right;     // V, cols x cols
};

SmithDecomposition smith_normal_form(const ModMatrix& m);

/// Inverse over Z_n by elimination. Throws SingularMatrixError.
ModMatrix inverse(const ModMatrix& m);

/// Solution set of m x = b over Z_n: particular + span of generators.
struct SolutionSpace {
  Residue modulus = 0;
  std::size_t unknowns = 0;
  std::optional<std::vector<Residue>> particular;
  /// Number of choices contributed by each cyclic factor (gcd(d_i, n), or n for a free column).
  std::vector<Residue> factor_sizes;
  /// Generator k ranges over factor_sizes[k] distinct multiples.
  std::vector<std::vector<Residue>> generators;
  BigCount count = 0;
};

SolutionSpace solve(const ModMatrix& m, std::span<const Residue> rhs);
SolutionSpace solve_homogeneous(const ModMatrix& m);

/// Every solution, in mixed-radix order over the generators.
/// Throws EnumerationCapExceeded when count > cap.
std::vector<std::vector<Residue>> enumerate_solutions(const SolutionSpace& space,
                                                      std::uint64_t cap);

/// PSYQ_ENUM_CAP from the environment, defaulting to 10^6.
std::uint64_t default_enumeration_cap();

/// Parses "mod <n>" followed by rows of comma- or space-separated integers.
ModMatrix parse_mod_matrix(std::string_view text);
std::string format_mod_matrix(const ModMatrix& m);

}  // namespace psyq
