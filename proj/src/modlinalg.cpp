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

#include "psyq/modlinalg.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <tuple>

#include "psyq/errors.hpp"

namespace psyq {

namespace {

// s*a + t*b = g = gcd(a, b), for non-negative a, b.
std::tuple<Residue, Residue, Residue> extended_gcd(Residue a, Residue b) {
  Residue old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Residue q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  return {old_r, old_s, old_t};
}

void check_modulus(Residue n) {
  if (n < 2) throw Error("modulus must be at least 2, got " + std::to_string(n));
  if (n > (Residue{1} << 31)) throw Error("modulus too large: " + std::to_string(n));
}

}  // namespace

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, Residue modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  check_modulus(modulus);
}

ModMatrix::ModMatrix(Residue modulus, const std::vector<std::vector<Residue>>& rows)
    : ModMatrix(rows.size(), rows.empty() ? 0 : rows.front().size(), modulus) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
  }
}

ModMatrix ModMatrix::identity(std::size_t n, Residue modulus) {
  ModMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void ModMatrix::set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = reduce(v); }

std::vector<Residue> ModMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::vector<Residue>> ModMatrix::to_rows() const {
  std::vector<std::vector<Residue>> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<Residue> ModMatrix::apply(std::span<const Residue> x) const {
  if (x.size() != cols_) throw Error("vector length does not match matrix columns");
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Residue acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = reduce(acc + (*this)(r, c) * reduce(x[c]));
    out[r] = acc;
  }
  return out;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  if (cols_ != rhs.rows_ || modulus_ != rhs.modulus_)
    throw Error("incompatible matrices for multiplication");
  ModMatrix out(rows_, rhs.cols_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Residue a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out.data_[r * out.cols_ + c] = reduce(out.data_[r * out.cols_ + c] + a * rhs(k, c));
    }
  return out;
}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

void ModMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(data_[r * cols_ + a], data_[r * cols_ + b]);
}

void ModMatrix::scale_row(std::size_t r, Residue k) {
  k = reduce(k);
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = reduce(data_[r * cols_ + c] * k);
}

void ModMatrix::add_row(std::size_t dst, std::size_t src, Residue k) {
  k = reduce(k);
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    data_[dst * cols_ + c] = reduce(data_[dst * cols_ + c] + k * data_[src * cols_ + c]);
}

void ModMatrix::add_col(std::size_t dst, std::size_t src, Residue k) {
  k = reduce(k);
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    data_[r * cols_ + dst] = reduce(data_[r * cols_ + dst] + k * data_[r * cols_ + src]);
}

void ModMatrix::combine_rows(std::size_t a, std::size_t b, Residue p, Residue q, Residue r,
                             Residue s) {
  p = reduce(p), q = reduce(q), r = reduce(r), s = reduce(s);
  for (std::size_t c = 0; c < cols_; ++c) {
    const Residue x = data_[a * cols_ + c], y = data_[b * cols_ + c];
    data_[a * cols_ + c] = reduce(p * x + q * y);
    data_[b * cols_ + c] = reduce(r * x + s * y);
  }
}

void ModMatrix::combine_cols(std::size_t a, std::size_t b, Residue p, Residue q, Residue r,
                             Residue s) {
  p = reduce(p), q = reduce(q), r = reduce(r), s = reduce(s);
  for (std::size_t row = 0; row < rows_; ++row) {
    const Residue x = data_[row * cols_ + a], y = data_[row * cols_ + b];
    data_[row * cols_ + a] = reduce(p * x + q * y);
    data_[row * cols_ + b] = reduce(r * x + s * y);
  }
}

bool is_prime(Residue n) {
  if (n < 2) return false;
  for (Residue d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<Residue> unit_inverse(Residue a, Residue n) {
  a %= n;
  if (a < 0) a += n;
  auto [g, s, t] = extended_gcd(a, n);
  if (g != 1) return std::nullopt;
  return ((s % n) + n) % n;
}

ModMatrix rref_mod(const ModMatrix& m) {
  const Residue n = m.modulus();
  if (!is_prime(n))
    throw CompositeModulusError("row reduction needs a prime modulus, got " + std::to_string(n));
  ModMatrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    a.swap_rows(pivot_row, r);
    a.scale_row(pivot_row, *unit_inverse(a(pivot_row, c), n));
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != pivot_row && a(i, c) != 0) a.add_row(i, pivot_row, -a(i, c));
    ++pivot_row;
  }
  return a;
}

std::size_t rank_mod_prime(const ModMatrix& m) {
  const ModMatrix r = rref_mod(m);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    const auto row = r.row(i);
    if (std::any_of(row.begin(), row.end(), [](Residue v) { return v != 0; })) ++rank;
  }
  return rank;
}

namespace {

// Clears entry (i, t) of d against pivot (t, t) with a unimodular row operation.
void clear_below(ModMatrix& d, ModMatrix& u, std::size_t t, std::size_t i) {
  const Residue a = d(t, t), b = d(i, t);
  if (b % a == 0) {
    d.add_row(i, t, -(b / a));
    u.add_row(i, t, -(b / a));
    return;
  }
  auto [g, s, q] = extended_gcd(a, b);
  const Residue a1 = a / g, b1 = b / g;
  d.combine_rows(t, i, s, q, -b1, a1);
  u.combine_rows(t, i, s, q, -b1, a1);
}

void clear_right(ModMatrix& d, ModMatrix& v, std::size_t t, std::size_t j) {
  const Residue a = d(t, t), b = d(t, j);
  if (b % a == 0) {
    d.add_col(j, t, -(b / a));
    v.add_col(j, t, -(b / a));
    return;
  }
  auto [g, s, q] = extended_gcd(a, b);
  const Residue a1 = a / g, b1 = b / g;
  d.combine_cols(t, j, s, q, -b1, a1);
  v.combine_cols(t, j, s, q, -b1, a1);
}

// A unit u with p * u = gcd(p, n) mod n.
Residue normalizing_unit(Residue p, Residue n) {
  const Residue g = std::gcd(p, n);
  const Residue p1 = p / g, n1 = n / g;
  const Residue u0 = n1 == 1 ? 0 : *unit_inverse(p1 % n1, n1);
  for (Residue k = 0; k <= g; ++k) {
    const Residue u = u0 + k * n1;
    if (std::gcd(u, n) == 1) return u;
  }
  return 1;
}

}  // namespace

SmithDecomposition smith_normal_form(const ModMatrix& m) {
  const Residue n = m.modulus();
  ModMatrix d = m;
  ModMatrix u = ModMatrix::identity(m.rows(), n);
  ModMatrix v = ModMatrix::identity(m.cols(), n);
  const std::size_t rows = m.rows(), cols = m.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      Residue best = n + 1;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0) {
            const Residue g = std::gcd(d(i, j), n);
            if (g < best) best = g, pr = i, pc = j;
          }
      if (pr == rows) return {std::move(d), std::move(u), std::move(v)};
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d(i, t) != 0) clear_below(d, u, t, i);
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(t, j) != 0) clear_right(d, v, t, j);
        for (std::size_t i = t + 1; i < rows && !dirty; ++i) dirty = d(i, t) != 0;
      }

      const Residue g = std::gcd(d(t, t), n);
      std::size_t offender = rows;
      for (std::size_t i = t + 1; i < rows && offender == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % g != 0) {
            offender = i;
            break;
          }
      if (offender != rows) {
        d.add_row(t, offender, 1);
        u.add_row(t, offender, 1);
        continue;
      }
      const Residue unit = normalizing_unit(d(t, t), n);
      d.scale_row(t, unit);
      u.scale_row(t, unit);
      break;
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

ModMatrix inverse(const ModMatrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrixError("only square matrices are invertible");
  const Residue n = m.modulus();
  const std::size_t k = m.rows();
  ModMatrix a = m;
  ModMatrix inv = ModMatrix::identity(k, n);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t r = c;
    while (r < k && a(r, c) == 0) ++r;
    if (r == k) throw SingularMatrixError("matrix is not invertible mod " + std::to_string(n));
    a.swap_rows(c, r);
    inv.swap_rows(c, r);
    for (std::size_t i = c + 1; i < k; ++i) {
      while (a(i, c) != 0) {
        if (a(c, c) == 0) {
          a.swap_rows(c, i);
          inv.swap_rows(c, i);
          continue;
        }
        clear_below(a, inv, c, i);
      }
    }
    auto unit = unit_inverse(a(c, c), n);
    if (!unit) throw SingularMatrixError("matrix is not invertible mod " + std::to_string(n));
    a.scale_row(c, *unit);
    inv.scale_row(c, *unit);
    for (std::size_t i = 0; i < k; ++i)
      if (i != c && a(i, c) != 0) {
        const Residue f = -a(i, c);
        a.add_row(i, c, f);
        inv.add_row(i, c, f);
      }
  }
  return inv;
}

SolutionSpace solve(const ModMatrix& m, std::span<const Residue> rhs) {
  if (rhs.size() != m.rows()) throw Error("right-hand side length does not match matrix rows");
  const Residue n = m.modulus();
  const auto snf = smith_normal_form(m);
  const auto c = snf.left.apply(rhs);
  const std::size_t diag = std::min(m.rows(), m.cols());

  SolutionSpace space;
  space.modulus = n;
  space.unknowns = m.cols();
  std::vector<Residue> y(m.cols(), 0);
  bool solvable = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Residue d = i < diag ? snf.diagonal(i, i) : 0;
    const Residue g = d == 0 ? n : std::gcd(d, n);
    if (c[i] % g != 0) {
      solvable = false;
      break;
    }
    if (i < diag && d != 0) y[i] = c[i] / g;
  }

  auto column_scaled = [&](std::size_t j, Residue k) {
    std::vector<Residue> col(m.cols());
    for (std::size_t r = 0; r < m.cols(); ++r) col[r] = snf.right.reduce(snf.right(r, j) * k);
    return col;
  };
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Residue d = j < diag ? snf.diagonal(j, j) : 0;
    const Residue g = d == 0 ? n : std::gcd(d, n);
    if (g == 1) continue;
    space.factor_sizes.push_back(g);
    space.generators.push_back(column_scaled(j, n / g));
  }

  if (!solvable) {
    space.count = 0;
    return space;
  }
  space.particular = snf.right.apply(y);
  space.count = 1;
  for (Residue g : space.factor_sizes) space.count *= g;
  return space;
}

SolutionSpace solve_homogeneous(const ModMatrix& m) {
  const std::vector<Residue> zero(m.rows(), 0);
  return solve(m, zero);
}

std::vector<std::vector<Residue>> enumerate_solutions(const SolutionSpace& space,
                                                      std::uint64_t cap) {
  if (!space.particular) return {};
  if (space.count > cap)
    throw EnumerationCapExceeded("solution count " + space.count.str() + " exceeds cap " +
                                 std::to_string(cap));
  const Residue n = space.modulus;
  std::vector<std::vector<Residue>> out;
  std::vector<Residue> digits(space.factor_sizes.size(), 0);
  for (;;) {
    std::vector<Residue> x = *space.particular;
    for (std::size_t k = 0; k < digits.size(); ++k)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + digits[k] * space.generators[k][i]) % n;
    out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == space.factor_sizes[k]) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

std::uint64_t default_enumeration_cap() {
  constexpr std::uint64_t kDefault = 1'000'000;
  const char* env = std::getenv("PSYQ_ENUM_CAP");
  if (!env || !*env) return kDefault;
  std::uint64_t v = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return kDefault;
  return v;
}

ModMatrix parse_mod_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Residue modulus = 0;
  std::vector<std::vector<Residue>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "mod") {
      if (!(ls >> modulus) || modulus < 2) throw ParseError("bad modulus header", line_no);
      continue;
    }
    if (modulus == 0) throw ParseError("missing 'mod <n>' header", line_no);
    std::vector<Residue> row;
    do {
      Residue v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("non-integer token '" + tok + "'", line_no);
      row.push_back(v);
    } while (ls >> tok);
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("row length mismatch", line_no);
    rows.push_back(std::move(row));
  }
  if (modulus == 0) throw ParseError("missing 'mod <n>' header");
  return ModMatrix(modulus, rows);
}

std::string format_mod_matrix(const ModMatrix& m) {
  std::ostringstream os;
  os << "mod " << m.modulus() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

}  // namespace psyq
