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

// Brute-force reference implementations shared by the test suites. They
// deliberately avoid the library's search, elimination and constraint code.

#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "psyq/algebra.hpp"
#include "psyq/diagram.hpp"
#include "psyq/modlinalg.hpp"
#include "psyq/weights.hpp"

namespace psyq::oracle {

inline std::string data_path(const std::string& name) { return std::string(PSYQ_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Psyquandle load_psyquandle(const std::string& name) {
  return parse_psyquandle_matrix(slurp(data_path(name)));
}

inline WeightPair load_weights(const std::string& name) {
  return parse_weight_pair(slurp(data_path(name)));
}

/// Does `c` satisfy every crossing read directly off the slot picture?
inline bool crossing_ok(const OperationTables& t, const Crossing& x, const std::vector<int>& c) {
  const int ul = c[x.upper_left], ll = c[x.lower_left], ur = c[x.upper_right], lr = c[x.lower_right];
  switch (x.kind) {
    case CrossingKind::PositiveClassical:
      return ur == t.over_tri(ll, ul) && lr == t.under_tri(ul, ll);
    case CrossingKind::Singular:
      return ur == t.over_dot(ll, ul) && lr == t.under_dot(ul, ll);
    case CrossingKind::NegativeClassical:
      return lr == t.over_tri(ul, ll) && ur == t.under_tri(ll, ul);
  }
  return false;
}

/// Counts all n^m assignments that satisfy every crossing.
inline std::uint64_t brute_force_colorings(const DiagramCode& d, const OperationTables& t) {
  const int n = t.order(), m = d.semiarc_count();
  std::vector<int> c(m, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& x : d.crossings())
      if (!crossing_ok(t, x, c)) {
        ok = false;
        break;
      }
    count += ok;
    int k = 0;
    while (k < m && ++c[k] == n) c[k++] = 0;
    if (k == m) break;
  }
  return count;
}

/// Number of x in Z_n^cols with m x = 0, by exhaustion.
inline std::uint64_t brute_force_kernel(const ModMatrix& m) {
  const Residue n = m.modulus();
  const std::size_t k = m.cols();
  std::vector<Residue> x(k, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t r = 0; r < m.rows() && ok; ++r) {
      Residue s = 0;
      for (std::size_t c = 0; c < k; ++c) s += m(r, c) * x[c];
      ok = s % n == 0;
    }
    count += ok;
    std::size_t i = 0;
    while (i < k && ++x[i] == n) x[i++] = 0;
    if (i == k) break;
  }
  return count;
}

inline ModMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, Residue n) {
  std::uniform_int_distribution<Residue> dist(0, n - 1);
  ModMatrix m(rows, cols, n);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  return m;
}

struct WeightFlags {
  bool core = true;
  bool pI = true;
  bool strong = true;
};

/// The Boltzmann weight conditions written out term by term.
inline WeightFlags check_weights(const Psyquandle& x, const std::vector<std::vector<long>>& phi,
                                 const std::vector<std::vector<long>>& psi, long N) {
  const auto& t = x.tables();
  const int n = t.order();
  auto eq = [N](long a, long b) { return ((a - b) % N + N) % N == 0; };
  auto odi = [&](int a, int b) { return x.inv_over_dot(a, b); };
  WeightFlags f;
  for (int a = 0; a < n; ++a) {
    if (!eq(phi[a][a], 0)) f.core = false;
    if (!eq(psi[a][a], 0)) f.pI = false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int p = odi(t.over_tri(b, a), a);
      const int q = odi(t.under_tri(a, b), b);
      if (!eq(phi[a][b] + psi[b][q], phi[p][q] + psi[a][p])) f.core = false;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto ut = [&](int u, int v) { return t.under_tri(u, v); };
        const auto ot = [&](int u, int v) { return t.over_tri(u, v); };
        const auto ud = [&](int u, int v) { return t.under_dot(u, v); };
        const auto od = [&](int u, int v) { return t.over_dot(u, v); };
        if (!eq(phi[a][b] + phi[b][c] + phi[ut(a, b)][ot(c, b)],
                phi[ut(a, c)][ut(b, c)] + phi[a][c] + phi[ot(b, a)][ot(c, a)]))
          f.core = false;
        if (!eq(psi[a][b] + phi[b][c] + phi[ud(a, b)][ot(c, b)],
                psi[ut(a, c)][ut(b, c)] + phi[a][c] + phi[od(b, a)][ot(c, a)]))
          f.core = false;
        if (!eq(psi[c][b] - phi[a][b] - phi[ut(a, b)][ud(c, b)],
                psi[ot(c, a)][ot(b, a)] - phi[a][c] - phi[ut(a, c)][od(b, c)]))
          f.core = false;
        if (!eq(psi[a][b], psi[ut(a, c)][ut(b, c)])) f.strong = false;
        if (!eq(psi[c][b], psi[ot(c, a)][ot(b, a)])) f.strong = false;
      }
  return f;
}

/// Counts weight pairs over Z_N meeting the selected conditions by trying all
/// N^(2 n^2) candidates.
inline std::uint64_t brute_force_weight_count(const Psyquandle& x, long N, bool need_pI,
                                              bool need_strong) {
  const int n = x.order();
  const int cells = 2 * n * n;
  std::vector<long> v(cells, 0);
  std::uint64_t count = 0;
  for (;;) {
    std::vector<std::vector<long>> phi(n, std::vector<long>(n)), psi(n, std::vector<long>(n));
    for (int i = 0; i < n * n; ++i) {
      phi[i / n][i % n] = v[i];
      psi[i / n][i % n] = v[n * n + i];
    }
    const WeightFlags f = check_weights(x, phi, psi, N);
    count += f.core && (!need_pI || f.pI) && (!need_strong || f.strong);
    int k = 0;
    while (k < cells && ++v[k] == N) v[k++] = 0;
    if (k == cells) break;
  }
  return count;
}

/// Order-n dihedral quandle x ▷ y = 2y - x as a psyquandle.
inline Psyquandle dihedral(int n) {
  auto under = OperationTable::from_function(n, [n](Element a, Element b) { return ((2 * b - a) % n + n) % n; });
  auto over = OperationTable::from_function(n, [](Element a, Element) { return a; });
  return promote_biquandle(under, over);
}

}  // namespace psyq::oracle
