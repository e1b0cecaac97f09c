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

#include <charconv>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "psyq/errors.hpp"

namespace psyq {

OperationTable::OperationTable(int order, std::vector<Element> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ < 1) throw TableShapeError("operation table order must be positive");
  if (entries_.size() != static_cast<std::size_t>(order_) * order_)
    throw TableShapeError("operation table of order " + std::to_string(order_) + " needs " +
                          std::to_string(order_ * order_) + " entries, got " +
                          std::to_string(entries_.size()));
  for (Element e : entries_)
    if (e < 0 || e >= order_)
      throw TableShapeError("operation table entry " + std::to_string(e) + " out of range");
}

OperationTable OperationTable::from_function(
    int order, const std::function<Element(Element, Element)>& op) {
  std::vector<Element> entries;
  entries.reserve(static_cast<std::size_t>(order) * order);
  for (Element x = 0; x < order; ++x)
    for (Element y = 0; y < order; ++y) entries.push_back(op(x, y));
  return OperationTable(order, std::move(entries));
}

bool OperationTable::right_invertible() const { return right_inverse().has_value(); }

std::optional<OperationTable> OperationTable::right_inverse() const {
  std::vector<Element> inv(entries_.size(), -1);
  for (Element y = 0; y < order_; ++y) {
    for (Element x = 0; x < order_; ++x) {
      Element& slot = inv[(*this)(x, y) * order_ + y];
      if (slot != -1) return std::nullopt;
      slot = x;
    }
  }
  return OperationTable(order_, std::move(inv));
}

std::string_view operation_name(Operation op) {
  switch (op) {
    case Operation::UnderTri: return "under_tri";
    case Operation::OverTri: return "over_tri";
    case Operation::UnderDot: return "under_dot";
    case Operation::OverDot: return "over_dot";
  }
  return "?";
}

const OperationTable& OperationTables::get(Operation op) const {
  switch (op) {
    case Operation::UnderTri: return under_tri;
    case Operation::OverTri: return over_tri;
    case Operation::UnderDot: return under_dot;
    case Operation::OverDot: return over_dot;
  }
  return under_tri;
}

namespace {

constexpr std::array<Operation, 4> kOperations = {Operation::UnderTri, Operation::OverTri,
                                                  Operation::UnderDot, Operation::OverDot};

void check_shapes(const OperationTables& t) {
  const int n = t.order();
  if (n < 1) throw TableShapeError("empty operation tables");
  for (Operation op : kOperations)
    if (t.get(op).order() != n)
      throw TableShapeError("table " + std::string(operation_name(op)) + " has order " +
                            std::to_string(t.get(op).order()) + ", expected " +
                            std::to_string(n));
}

// Records the first failure per label; callers iterate witnesses in lex order.
class ViolationLog {
 public:
  void record(const std::string& label, std::vector<Element> witness) {
    for (const auto& v : violations_)
      if (v.axiom == label) return;
    violations_.push_back({label, std::move(witness)});
  }
  std::vector<AxiomViolation> take() { return std::move(violations_); }

 private:
  std::vector<AxiomViolation> violations_;
};

void check_bijective_pairs(int n, const std::function<std::pair<Element, Element>(Element, Element)>& f,
                           const std::string& label, ViolationLog& log) {
  std::vector<int> preimage(static_cast<std::size_t>(n) * n, -1);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto [a, b] = f(x, y);
      int& slot = preimage[a * n + b];
      if (slot != -1) {
        log.record(label, {slot / n, slot % n, x, y});
        return;
      }
      slot = x * n + y;
    }
  }
}

}  // namespace

AxiomReport check_axioms(const OperationTables& t) {
  check_shapes(t);
  const int n = t.order();
  const auto& ut = t.under_tri;
  const auto& ot = t.over_tri;
  const auto& ud = t.under_dot;
  const auto& od = t.over_dot;
  ViolationLog log;

  // (0) right-invertibility
  std::optional<OperationTable> od_inv;
  for (Operation op : kOperations) {
    const auto& table = t.get(op);
    const std::string label = "0:" + std::string(operation_name(op));
    bool injective = true;
    for (Element x = 0; x < n && injective; ++x)
      for (Element x2 = x + 1; x2 < n && injective; ++x2)
        for (Element y = 0; y < n; ++y)
          if (table(x, y) == table(x2, y)) {
            log.record(label, {x, x2, y});
            injective = false;
            break;
          }
    if (!injective) continue;
    auto inv = table.right_inverse();
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if ((*inv)(table(x, y), y) != x || table((*inv)(x, y), y) != x) log.record(label, {x, y});
    if (op == Operation::OverDot) od_inv = std::move(inv);
  }

  // (i)
  for (Element x = 0; x < n; ++x)
    if (ut(x, x) != ot(x, x)) log.record("i", {x});

  // (ii)
  check_bijective_pairs(
      n, [&](Element x, Element y) { return std::pair{ot(y, x), ut(x, y)}; }, "ii:S", log);
  check_bijective_pairs(
      n, [&](Element x, Element y) { return std::pair{od(y, x), ud(x, y)}; }, "ii:S'", log);

  // (iii), (v): ternary identities
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const std::vector<Element> w = {x, y, z};
        if (ut(ut(x, y), ut(z, y)) != ut(ut(x, z), ot(y, z))) log.record("iii.1", w);
        if (ot(ut(x, y), ut(z, y)) != ut(ot(x, z), ot(y, z))) log.record("iii.2", w);
        if (ot(ot(x, y), ot(z, y)) != ot(ot(x, z), ut(y, z))) log.record("iii.3", w);

        if (ot(ot(x, y), od(z, y)) != ot(ot(x, z), ud(y, z))) log.record("v.1", w);
        if (ut(ut(x, y), od(z, y)) != ut(ut(x, z), ud(y, z))) log.record("v.2", w);
        if (od(ot(x, y), ot(z, y)) != ot(od(x, z), ut(y, z))) log.record("v.3", w);
        if (ud(ut(x, y), ut(z, y)) != ut(ud(x, z), ot(y, z))) log.record("v.4", w);
        if (ud(ot(x, y), ot(z, y)) != ot(ud(x, z), ut(y, z))) log.record("v.5", w);
        if (od(ut(x, y), ut(z, y)) != ut(od(x, z), ot(y, z))) log.record("v.6", w);
      }
    }
  }

  // (iv), reformulated; needs •̄^-1
  if (od_inv) {
    const auto& odi = *od_inv;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        const Element p = odi(ot(y, x), x);  // (y ▷̄ x) •̄^-1 x
        const Element q = odi(ut(x, y), y);  // (x ▷̱ y) •̄^-1 y
        if (ud(x, p) != ot(q, p)) log.record("iv.1", {x, y});
        if (ud(y, q) != ut(p, q)) log.record("iv.2", {x, y});
      }
    }
  }

  AxiomReport report;
  report.violations = log.take();
  report.valid = report.violations.empty();
  report.pI_adequate = true;
  for (Element x = 0; x < n; ++x)
    if (ud(x, x) != od(x, x)) report.pI_adequate = false;
  return report;
}

std::string describe(const AxiomViolation& v) {
  std::ostringstream os;
  os << "axiom " << v.axiom << " fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i] + 1;
  os << ")";
  return os.str();
}

Psyquandle::Psyquandle(OperationTables tables) : tables_(std::move(tables)) {
  AxiomReport report = check_axioms(tables_);
  if (!report.valid)
    throw InvalidPsyquandleError("not a psyquandle: " + describe(report.violations.front()));
  pI_adequate_ = report.pI_adequate;
  for (Operation op : kOperations)
    inverses_[static_cast<int>(op)] = *tables_.get(op).right_inverse();

  const int n = order();
  classical_preimage_.assign(static_cast<std::size_t>(n) * n, 0);
  singular_preimage_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto [a, b] = classical_map(x, y);
      classical_preimage_[a * n + b] = x * n + y;
      auto [c, d] = singular_map(x, y);
      singular_preimage_[c * n + d] = x * n + y;
    }
  }
}

std::pair<Element, Element> Psyquandle::classical_map_inverse(Element a, Element b) const {
  const int v = classical_preimage_[a * order() + b];
  return {v / order(), v % order()};
}

std::pair<Element, Element> Psyquandle::singular_map_inverse(Element a, Element b) const {
  const int v = singular_preimage_[a * order() + b];
  return {v / order(), v % order()};
}

Psyquandle promote_biquandle(const OperationTable& under_tri, const OperationTable& over_tri) {
  OperationTables tables{under_tri, over_tri, under_tri, over_tri};
  AxiomReport report = check_axioms(tables);
  if (!report.valid)
    throw NotABiquandleError("tables do not form a biquandle: " +
                             describe(report.violations.front()));
  return Psyquandle(std::move(tables));
}

Psyquandle alexander_psyquandle(const AlexanderParameters& p) {
  const int n = p.modulus;
  if (n < 1) throw ParameterError("modulus must be positive");
  auto norm = [n](long long v) { return static_cast<int>(((v % n) + n) % n); };
  const int t = norm(p.t), s = norm(p.s), a = norm(p.a), b = norm(p.b);
  for (auto [name, v] : {std::pair{"t", t}, {"s", s}, {"a", a}, {"b", b}})
    if (std::gcd(v, n) != 1)
      throw ParameterError(std::string("parameter ") + name + " = " + std::to_string(v) +
                           " is not a unit mod " + std::to_string(n));
  if (norm(static_cast<long long>(t) + s - a - b) != 0)
    throw ParameterError("t + s - a - b must vanish mod " + std::to_string(n));

  auto affine = [&](int alpha, int beta) {
    return OperationTable::from_function(n, [=](Element x, Element y) {
      return norm(static_cast<long long>(alpha) * x + static_cast<long long>(beta) * y);
    });
  };
  return Psyquandle(OperationTables{affine(t, s - t), affine(s, 0), affine(a, s - a),
                                    affine(b, s - b)});
}

std::optional<std::pair<int, int>> linear_form(const OperationTable& table) {
  const int n = table.order();
  if (table(0, 0) != 0) return std::nullopt;
  const int alpha = n > 1 ? table(1, 0) : 0;
  const int beta = n > 1 ? table(0, 1) : 0;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (table(x, y) != (alpha * x + beta * y) % n) return std::nullopt;
  return std::pair{alpha, beta};
}

OperationTables parse_operation_tables(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> row_lines;
  int declared = 0;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line)
      if (c == '|' || c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0] == "n" || tokens[0].rfind("n=", 0) == 0) {
      std::string joined;
      for (const auto& tok : tokens) joined += tok;
      if (!rows.empty() || declared) throw ParseError("misplaced order declaration", line_no);
      const std::string value = joined.substr(joined.find('=') == std::string::npos
                                                  ? joined.size()
                                                  : joined.find('=') + 1);
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), declared);
      if (ec != std::errc{} || ptr != value.data() + value.size() || declared < 1)
        throw ParseError("bad order declaration", line_no);
      continue;
    }
    std::vector<int> row;
    for (const auto& tok : tokens) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("non-integer token '" + tok + "'", line_no);
      row.push_back(v);
    }
    rows.push_back(std::move(row));
    row_lines.push_back(line_no);
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  const int n = declared ? declared : static_cast<int>(rows.size());
  if (static_cast<int>(rows.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " rows, got " +
                     std::to_string(rows.size()));
  std::array<std::vector<Element>, 4> blocks;
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != 4 * n)
      throw ParseError("row has " + std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(4 * n),
                       row_lines[r]);
    for (int c = 0; c < 4 * n; ++c) {
      const int v = rows[r][c];
      if (v < 1 || v > n)
        throw ParseError("entry " + std::to_string(v) + " outside 1.." + std::to_string(n),
                         row_lines[r]);
      blocks[c / n].push_back(v - 1);
    }
  }
  return OperationTables{OperationTable(n, std::move(blocks[0])),
                         OperationTable(n, std::move(blocks[1])),
                         OperationTable(n, std::move(blocks[2])),
                         OperationTable(n, std::move(blocks[3]))};
}

Psyquandle parse_psyquandle_matrix(std::string_view text) {
  return Psyquandle(parse_operation_tables(text));
}

std::string serialize_psyquandle_matrix(const OperationTables& tables) {
  const int n = tables.order();
  std::ostringstream os;
  os << "n = " << n << '\n';
  for (Element x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < kOperations.size(); ++k) {
      if (k) os << " |";
      for (Element y = 0; y < n; ++y) os << (k == 0 && y == 0 ? "" : " ") << tables.get(kOperations[k])(x, y) + 1;
    }
    os << '\n';
  }
  return os.str();
}

std::string fingerprint(const OperationTables& tables) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_psyquandle_matrix(tables)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kHex[h & 0xf];
  return out;
}

}  // namespace psyq
