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

#include "psyq/weights.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "psyq/errors.hpp"

namespace psyq {

ResidueTable::ResidueTable(int order, Residue modulus)
    : order_(order), modulus_(modulus), entries_(static_cast<std::size_t>(order) * order, 0) {
  if (order < 1) throw TableShapeError("weight table order must be positive");
  if (modulus < 2) throw TableShapeError("weight modulus must be at least 2");
}

ResidueTable::ResidueTable(Residue modulus, const std::vector<std::vector<Residue>>& rows)
    : ResidueTable(static_cast<int>(rows.size()), modulus) {
  for (int x = 0; x < order_; ++x) {
    if (static_cast<int>(rows[x].size()) != order_)
      throw TableShapeError("weight table must be square");
    for (int y = 0; y < order_; ++y) set(x, y, rows[x][y]);
  }
}

void ResidueTable::set(Element x, Element y, Residue v) {
  v %= modulus_;
  entries_[x * order_ + y] = v < 0 ? v + modulus_ : v;
}

std::vector<std::vector<Residue>> ResidueTable::to_rows() const {
  std::vector<std::vector<Residue>> rows(order_);
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y) rows[x].push_back((*this)(x, y));
  return rows;
}

WeightPair::WeightPair(ResidueTable phi_table, ResidueTable psi_table)
    : phi(std::move(phi_table)), psi(std::move(psi_table)) {
  if (phi.order() != psi.order()) throw TableShapeError("phi and psi have different orders");
  if (phi.modulus() != psi.modulus())
    throw TableShapeError("phi and psi have different moduli");
}

WeightPair operator+(const WeightPair& a, const WeightPair& b) {
  if (a.order() != b.order() || a.modulus() != b.modulus())
    throw OrderMismatchError("cannot add weight pairs of different shape");
  WeightPair out = a;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) {
      out.phi.set(x, y, a.phi(x, y) + b.phi(x, y));
      out.psi.set(x, y, a.psi(x, y) + b.psi(x, y));
    }
  return out;
}

WeightPair operator*(Residue k, const WeightPair& w) {
  WeightPair out = w;
  for (int x = 0; x < w.order(); ++x)
    for (int y = 0; y < w.order(); ++y) {
      out.phi.set(x, y, k * w.phi(x, y));
      out.psi.set(x, y, k * w.psi(x, y));
    }
  return out;
}

namespace {

class ConditionLog {
 public:
  void record(const std::string& label, std::vector<Element> witness) {
    for (const auto& v : violations_)
      if (v.condition == label) return;
    violations_.push_back({label, std::move(witness)});
  }
  bool any(std::initializer_list<std::string_view> labels) const {
    for (const auto& v : violations_)
      for (auto l : labels)
        if (v.condition == l) return true;
    return false;
  }
  std::vector<WeightViolation> take() { return std::move(violations_); }

 private:
  std::vector<WeightViolation> violations_;
};

}  // namespace

WeightReport validate_weight_pair(const Psyquandle& X, const WeightPair& w) {
  if (w.order() != X.order())
    throw OrderMismatchError("weight pair has order " + std::to_string(w.order()) +
                             " but the psyquandle has order " + std::to_string(X.order()));
  const int n = X.order();
  const Residue N = w.modulus();
  const auto& phi = w.phi;
  const auto& psi = w.psi;
  auto eq = [N](Residue lhs, Residue rhs) { return ((lhs - rhs) % N + N) % N == 0; };
  auto ut = [&](Element a, Element b) { return X.under_tri(a, b); };
  auto ot = [&](Element a, Element b) { return X.over_tri(a, b); };
  auto ud = [&](Element a, Element b) { return X.under_dot(a, b); };
  auto od = [&](Element a, Element b) { return X.over_dot(a, b); };
  auto odi = [&](Element a, Element b) { return X.inv_over_dot(a, b); };
  ConditionLog log;

  for (Element x = 0; x < n; ++x) {
    if (!eq(phi(x, x), 0)) log.record("i", {x});
    if (!eq(psi(x, x), 0)) log.record("v", {x});
  }

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element p = odi(ot(y, x), x);
      const Element q = odi(ut(x, y), y);
      if (!eq(phi(x, y) + psi(y, q), phi(p, q) + psi(x, p))) log.record("ii", {x, y});
    }

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const std::vector<Element> wit = {x, y, z};
        if (!eq(phi(x, y) + phi(y, z) + phi(ut(x, y), ot(z, y)),
                phi(ut(x, z), ut(y, z)) + phi(x, z) + phi(ot(y, x), ot(z, x))))
          log.record("iii.1", wit);
        if (!eq(psi(x, y) + phi(y, z) + phi(ud(x, y), ot(z, y)),
                psi(ut(x, z), ut(y, z)) + phi(x, z) + phi(od(y, x), ot(z, x))))
          log.record("iii.2", wit);
        if (!eq(psi(z, y) - phi(x, y) - phi(ut(x, y), ud(z, y)),
                psi(ot(z, x), ot(y, x)) - phi(x, z) - phi(ut(x, z), od(y, z))))
          log.record("iii.3", wit);
        if (!eq(psi(x, y), psi(ut(x, z), ut(y, z)))) log.record("vi.1", wit);
        if (!eq(psi(z, y), psi(ot(z, x), ot(y, x)))) log.record("vi.2", wit);
      }

  WeightReport report;
  report.satisfies_core = !log.any({"i", "ii", "iii.1", "iii.2", "iii.3"});
  report.pI_adequate = !log.any({"v"});
  report.strongly_compatible = !log.any({"vi.1", "vi.2"});
  report.violations = log.take();
  return report;
}

CocycleReport check_biquandle_cocycle(const Psyquandle& B, const ResidueTable& phi) {
  if (phi.order() != B.order())
    throw OrderMismatchError("cocycle table order does not match the biquandle");
  const int n = B.order();
  const Residue N = phi.modulus();
  ConditionLog log;
  for (Element x = 0; x < n; ++x)
    if (phi(x, x) % N != 0) log.record("i", {x});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const Residue total = phi(x, y) - phi(B.under_tri(x, z), B.under_tri(y, z)) - phi(x, z) +
                              phi(B.under_tri(x, y), B.over_tri(z, y)) + phi(y, z) -
                              phi(B.over_tri(y, x), B.over_tri(z, x));
        if (total % N != 0) log.record("ii", {x, y, z});
      }
  CocycleReport report;
  report.violations = log.take();
  report.is_cocycle = report.violations.empty();
  return report;
}

namespace {

// Accumulates one linear condition over the 2n^2 unknowns.
class RowBuilder {
 public:
  RowBuilder(int n, Residue modulus) : n_(n), modulus_(modulus), row_(2 * n * n, 0) {}
  RowBuilder& phi(Residue sign, Element x, Element y) { return add(x * n_ + y, sign); }
  RowBuilder& psi(Residue sign, Element x, Element y) { return add(n_ * n_ + x * n_ + y, sign); }
  std::vector<Residue> take() { return std::move(row_); }

 private:
  RowBuilder& add(int index, Residue sign) {
    row_[index] = ((row_[index] + sign) % modulus_ + modulus_) % modulus_;
    return *this;
  }
  int n_;
  Residue modulus_;
  std::vector<Residue> row_;
};

}  // namespace

ModMatrix weight_condition_system(const Psyquandle& X, Residue modulus,
                                  WeightConditions conditions) {
  const int n = X.order();
  std::set<std::vector<Residue>> rows;
  auto emit = [&](RowBuilder& b) {
    auto row = b.take();
    for (Residue v : row)
      if (v != 0) {
        rows.insert(std::move(row));
        return;
      }
  };
  auto fresh = [&] { return RowBuilder(n, modulus); };

  for (Element x = 0; x < n; ++x) {
    auto b = fresh();
    emit(b.phi(1, x, x));
    if (conditions.require_pI) {
      auto c = fresh();
      emit(c.psi(1, x, x));
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element p = X.inv_over_dot(X.over_tri(y, x), x);
      const Element q = X.inv_over_dot(X.under_tri(x, y), y);
      auto b = fresh();
      emit(b.phi(1, x, y).psi(1, y, q).phi(-1, p, q).psi(-1, x, p));
    }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        auto r1 = fresh();
        emit(r1.phi(1, x, y)
                 .phi(1, y, z)
                 .phi(1, X.under_tri(x, y), X.over_tri(z, y))
                 .phi(-1, X.under_tri(x, z), X.under_tri(y, z))
                 .phi(-1, x, z)
                 .phi(-1, X.over_tri(y, x), X.over_tri(z, x)));
        auto r2 = fresh();
        emit(r2.psi(1, x, y)
                 .phi(1, y, z)
                 .phi(1, X.under_dot(x, y), X.over_tri(z, y))
                 .psi(-1, X.under_tri(x, z), X.under_tri(y, z))
                 .phi(-1, x, z)
                 .phi(-1, X.over_dot(y, x), X.over_tri(z, x)));
        auto r3 = fresh();
        emit(r3.psi(1, z, y)
                 .phi(-1, x, y)
                 .phi(-1, X.under_tri(x, y), X.under_dot(z, y))
                 .psi(-1, X.over_tri(z, x), X.over_tri(y, x))
                 .phi(1, x, z)
                 .phi(1, X.under_tri(x, z), X.over_dot(y, z)));
        if (conditions.require_strong) {
          auto s1 = fresh();
          emit(s1.psi(1, x, y).psi(-1, X.under_tri(x, z), X.under_tri(y, z)));
          auto s2 = fresh();
          emit(s2.psi(1, z, y).psi(-1, X.over_tri(z, x), X.over_tri(y, x)));
        }
      }

  const std::size_t unknowns = 2 * static_cast<std::size_t>(n) * n;
  if (rows.empty()) return ModMatrix(1, unknowns, modulus);
  return ModMatrix(modulus, std::vector<std::vector<Residue>>(rows.begin(), rows.end()));
}

std::vector<Residue> flatten(const WeightPair& w) {
  const int n = w.order();
  std::vector<Residue> out;
  out.reserve(2 * static_cast<std::size_t>(n) * n);
  for (const auto* table : {&w.phi, &w.psi})
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) out.push_back((*table)(x, y));
  return out;
}

WeightPair unflatten(int order, Residue modulus, const std::vector<Residue>& values) {
  if (values.size() != 2 * static_cast<std::size_t>(order) * order)
    throw TableShapeError("weight vector has the wrong length");
  ResidueTable phi(order, modulus), psi(order, modulus);
  for (Element x = 0; x < order; ++x)
    for (Element y = 0; y < order; ++y) {
      phi.set(x, y, values[x * order + y]);
      psi.set(x, y, values[order * order + x * order + y]);
    }
  return WeightPair(std::move(phi), std::move(psi));
}

WeightSpace weight_solution_space(const Psyquandle& X, Residue modulus,
                                  WeightConditions conditions) {
  WeightSpace space;
  space.modulus = modulus;
  space.order = X.order();
  space.solutions = solve_homogeneous(weight_condition_system(X, modulus, conditions));
  space.count = space.solutions.count;
  for (const auto& g : space.solutions.generators)
    space.generators.push_back(unflatten(X.order(), modulus, g));
  return space;
}

std::vector<WeightPair> WeightSpace::enumerate(std::uint64_t cap) const {
  std::vector<WeightPair> out;
  for (const auto& v : enumerate_solutions(solutions, cap))
    out.push_back(unflatten(order, modulus, v));
  return out;
}

WeightPair parse_weight_pair(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Residue modulus = 0;
  std::vector<std::vector<std::vector<Residue>>> blocks(1);
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    if (tok == "mod") {
      if (modulus != 0) throw ParseError("duplicate modulus header", line_no);
      if (!(ls >> modulus) || modulus < 2) throw ParseError("bad modulus header", line_no);
      continue;
    }
    if (modulus == 0) throw ParseError("missing 'mod <N>' header", line_no);
    std::vector<Residue> row;
    do {
      Residue v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("non-integer token '" + tok + "'", line_no);
      row.push_back(v);
    } while (ls >> tok);
    blocks.back().push_back(std::move(row));
  }
  if (blocks.back().empty()) blocks.pop_back();
  if (modulus == 0) throw ParseError("missing 'mod <N>' header");

  std::vector<std::vector<Residue>> phi_rows, psi_rows;
  if (blocks.size() == 2) {
    phi_rows = blocks[0];
    psi_rows = blocks[1];
  } else if (blocks.size() == 1 && blocks[0].size() % 2 == 0) {
    const auto& all = blocks[0];
    const auto half = static_cast<std::ptrdiff_t>(all.size() / 2);
    phi_rows.assign(all.begin(), all.begin() + half);
    psi_rows.assign(all.begin() + half, all.end());
  } else {
    throw ParseError("expected two n x n blocks (phi, blank line, psi)");
  }
  if (phi_rows.empty() || phi_rows.size() != psi_rows.size())
    throw ParseError("phi and psi blocks differ in size");
  for (const auto* block : {&phi_rows, &psi_rows})
    for (const auto& row : *block)
      if (row.size() != block->size()) throw ParseError("weight blocks must be square");
  return WeightPair(ResidueTable(modulus, phi_rows), ResidueTable(modulus, psi_rows));
}

std::string serialize_weight_pair(const WeightPair& w) {
  std::ostringstream os;
  os << "mod " << w.modulus() << '\n';
  for (const auto* table : {&w.phi, &w.psi}) {
    if (table == &w.psi) os << '\n';
    for (Element x = 0; x < w.order(); ++x) {
      for (Element y = 0; y < w.order(); ++y) os << (y ? " " : "") << (*table)(x, y);
      os << '\n';
    }
  }
  return os.str();
}

std::string describe(const WeightViolation& v) {
  std::ostringstream os;
  os << "condition (" << v.condition << ") fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i] + 1;
  os << ")";
  return os.str();
}

}  // namespace psyq
