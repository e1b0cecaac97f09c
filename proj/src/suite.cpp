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

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "psyq/errors.hpp"

namespace psyq {
namespace {

// Column width in code points; the header uses a few two-byte symbols.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width - std::min(width, display_width(s)), ' ') + s;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct PolyLess {
  bool operator()(const WeightPolynomial& a, const WeightPolynomial& b) const {
    return a.terms < b.terms;
  }
};

}  // namespace

std::vector<SuiteRow> evaluate_rows(const std::vector<std::pair<std::string, DiagramCode>>& diagrams,
                                    const Psyquandle& x, const WeightPair& w, PolynomialMode mode) {
  std::vector<SuiteRow> rows;
  rows.reserve(diagrams.size());
  for (const auto& [name, d] : diagrams)
    rows.push_back({name, counting_invariant(d, x), enhanced_polynomial(d, x, w, mode)});
  return rows;
}

std::string format_invariant_table(const std::vector<SuiteRow>& rows) {
  std::map<std::uint64_t, std::map<WeightPolynomial, std::vector<std::string>, PolyLess>> groups;
  for (const auto& r : rows) groups[r.count][r.polynomial].push_back(r.diagram);

  const std::string h0 = "Φ_X^Z", h1 = "Φ_X^{φ,ψ}(L)", h2 = "L";
  std::vector<std::array<std::string, 3>> lines;
  std::vector<bool> rule_before;
  for (const auto& [count, by_poly] : groups) {
    bool first = true;
    for (const auto& [poly, names] : by_poly) {
      std::string joined;
      for (const auto& n : names) joined += (joined.empty() ? "" : ", ") + n;
      lines.push_back({first ? std::to_string(count) : "", polynomial_to_string(poly), joined});
      rule_before.push_back(first);
      first = false;
    }
  }

  std::size_t w0 = display_width(h0), w1 = display_width(h1), w2 = display_width(h2);
  for (const auto& l : lines) {
    w0 = std::max(w0, display_width(l[0]));
    w1 = std::max(w1, display_width(l[1]));
    w2 = std::max(w2, display_width(l[2]));
  }
  const std::string rule = std::string(w0 + 1, '-') + "+" + std::string(w1 + 2, '-') + "+" +
                           std::string(w2 + 1, '-') + "\n";

  std::string out = pad_left(h0, w0) + " | " + pad_right(h1, w1) + " | " + h2 + "\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (rule_before[i]) out += rule;
    out += pad_left(lines[i][0], w0) + " | " + pad_right(lines[i][1], w1) + " | " + lines[i][2] + "\n";
  }
  return out;
}

std::vector<SuiteBlock> run_suite(const std::filesystem::path& dir, bool with_catalog,
                                  PolynomialMode mode) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir.string());

  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<std::pair<std::string, DiagramCode>> diagrams;
  for (const auto& f : files)
    if (f.extension() == ".dgm") {
      try {
        diagrams.emplace_back(f.filename().string(), parse_diagram(read_file(f)));
      } catch (const ParseError& e) {
        throw ParseError(f.filename().string() + ": " + e.what());
      }
    }
  if (with_catalog)
    for (const auto& e : catalog_entries())
      if (e.base.empty()) diagrams.emplace_back(e.name, e.code);

  std::vector<SuiteBlock> blocks;
  for (const auto& f : files) {
    if (f.extension() != ".psy") continue;
    fs::path wgt = f;
    wgt.replace_extension(".wgt");
    if (!fs::exists(wgt)) continue;
    const Psyquandle x = parse_psyquandle_matrix(read_file(f));
    const WeightPair w = parse_weight_pair(read_file(wgt));
    blocks.push_back({f.filename().string(), wgt.filename().string(), w.modulus(),
                      evaluate_rows(diagrams, x, w, mode)});
  }
  return blocks;
}

std::string format_suite(const std::vector<SuiteBlock>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (i > 0) out += "\n";
    out += "# " + b.psyquandle_file + " with " + b.weight_file + " (mod " + std::to_string(b.modulus) + ")\n";
    out += format_invariant_table(b.rows);
  }
  return out;
}

}  // namespace psyq
