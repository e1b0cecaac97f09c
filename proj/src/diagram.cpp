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

#include "psyq/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "psyq/errors.hpp"

namespace psyq {

std::string_view kind_token(CrossingKind kind) {
  switch (kind) {
    case CrossingKind::PositiveClassical: return "X+";
    case CrossingKind::NegativeClassical: return "X-";
    case CrossingKind::Singular: return "S";
  }
  return "?";
}

DiagramCode::DiagramCode(int semiarc_count, std::vector<Crossing> crossings,
                         std::vector<Semiarc> loops)
    : semiarc_count_(semiarc_count), crossings_(std::move(crossings)), loops_(std::move(loops)) {
  if (semiarc_count_ < 1) throw IncidenceError("a diagram needs at least one semiarc");
  const auto m = static_cast<std::size_t>(semiarc_count_);
  auto check_id = [&](Semiarc s) {
    if (s < 0 || s >= semiarc_count_)
      throw IncidenceError("semiarc " + std::to_string(s) + " outside 0.." +
                           std::to_string(semiarc_count_ - 1));
  };

  std::vector<int> entering(m, 0), leaving(m, 0), looped(m, 0);
  successor_.assign(m, -1);
  for (const auto& c : crossings_) {
    for (Semiarc s : {c.upper_left, c.lower_left, c.upper_right, c.lower_right}) check_id(s);
    ++entering[c.upper_left];
    ++entering[c.upper_right];
    ++leaving[c.lower_left];
    ++leaving[c.lower_right];
    successor_[c.upper_left] = c.lower_right;
    successor_[c.upper_right] = c.lower_left;
  }
  for (Semiarc s : loops_) {
    check_id(s);
    ++looped[s];
    successor_[s] = s;
  }
  for (std::size_t s = 0; s < m; ++s) {
    const int uses = entering[s] + leaving[s];
    const std::string name = "semiarc " + std::to_string(s);
    if (looped[s]) {
      if (looped[s] > 1 || uses > 0)
        throw IncidenceError(name + " is declared a loop but is used elsewhere");
      continue;
    }
    if (uses != 2)
      throw IncidenceError(name + " is used " + std::to_string(uses) + " times, expected 2");
    if (entering[s] != 1)
      throw IncidenceError(name + (entering[s] > 1 ? " enters two crossings" : " leaves two crossings"));
  }

  std::vector<bool> seen(m, false);
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<Semiarc> component;
    for (Semiarc s = static_cast<Semiarc>(start); !seen[s]; s = successor_[s]) {
      seen[s] = true;
      component.push_back(s);
    }
    components_.push_back(std::move(component));
  }
}

std::size_t DiagramCode::count(CrossingKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      crossings_.begin(), crossings_.end(), [kind](const Crossing& c) { return c.kind == kind; }));
}

namespace {

int parse_int(const std::string& tok, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("non-integer token '" + tok + "'", line_no);
  return v;
}

}  // namespace

DiagramCode parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int arcs = -1;
  std::vector<Crossing> crossings;
  std::vector<Semiarc> loops;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    if (head == "arcs") {
      if (tokens.size() != 2) throw ParseError("expected 'arcs <m>'", line_no);
      if (arcs != -1) throw ParseError("duplicate 'arcs' line", line_no);
      arcs = parse_int(tokens[1], line_no);
      if (arcs < 1) throw ParseError("semiarc count must be positive", line_no);
    } else if (head == "loop") {
      if (tokens.size() != 2) throw ParseError("expected 'loop <s>'", line_no);
      loops.push_back(parse_int(tokens[1], line_no));
    } else if (head == "X+" || head == "X-" || head == "S") {
      if (tokens.size() != 5) throw ParseError("a crossing needs four semiarcs", line_no);
      Crossing c;
      c.kind = head == "X+"   ? CrossingKind::PositiveClassical
               : head == "X-" ? CrossingKind::NegativeClassical
                              : CrossingKind::Singular;
      c.upper_left = parse_int(tokens[1], line_no);
      c.lower_left = parse_int(tokens[2], line_no);
      c.upper_right = parse_int(tokens[3], line_no);
      c.lower_right = parse_int(tokens[4], line_no);
      crossings.push_back(c);
    } else {
      throw ParseError("unknown directive '" + head + "'", line_no);
    }
  }
  if (arcs == -1) throw ParseError("missing 'arcs <m>' line");
  return DiagramCode(arcs, std::move(crossings), std::move(loops));
}

std::string serialize_diagram(const DiagramCode& d) {
  std::ostringstream os;
  os << "arcs " << d.semiarc_count() << '\n';
  for (Semiarc s : d.loops()) os << "loop " << s << '\n';
  for (const auto& c : d.crossings())
    os << kind_token(c.kind) << ' ' << c.upper_left << ' ' << c.lower_left << ' '
       << c.upper_right << ' ' << c.lower_right << '\n';
  return os.str();
}

std::vector<CrossingRelation> generate_constraints(const DiagramCode& d) {
  std::vector<CrossingRelation> out;
  out.reserve(2 * d.crossings().size());
  for (std::size_t i = 0; i < d.crossings().size(); ++i) {
    const auto& c = d.crossings()[i];
    switch (c.kind) {
      case CrossingKind::PositiveClassical:
        out.push_back({i, c.upper_right, Operation::OverTri, c.lower_left, c.upper_left});
        out.push_back({i, c.lower_right, Operation::UnderTri, c.upper_left, c.lower_left});
        break;
      case CrossingKind::Singular:
        out.push_back({i, c.upper_right, Operation::OverDot, c.lower_left, c.upper_left});
        out.push_back({i, c.lower_right, Operation::UnderDot, c.upper_left, c.lower_left});
        break;
      case CrossingKind::NegativeClassical:
        out.push_back({i, c.lower_right, Operation::OverTri, c.upper_left, c.lower_left});
        out.push_back({i, c.upper_right, Operation::UnderTri, c.lower_left, c.upper_left});
        break;
    }
  }
  return out;
}

std::vector<BraidLetter> parse_braid_word(std::string_view word) {
  std::vector<BraidLetter> out;
  std::istringstream in{std::string(word)};
  for (std::string tok; in >> tok;) {
    if (tok.size() < 2) throw ParseError("bad braid letter '" + tok + "'");
    BraidLetter letter;
    std::string digits = tok.substr(1);
    bool inverse = false;
    if (auto caret = digits.find("^-1"); caret != std::string::npos) {
      inverse = true;
      digits.erase(caret);
    }
    switch (tok[0]) {
      case 's': letter.kind = inverse ? CrossingKind::NegativeClassical : CrossingKind::PositiveClassical; break;
      case 'S': letter.kind = CrossingKind::NegativeClassical; break;
      case 't':
        if (inverse) throw ParseError("singular letters have no inverse: '" + tok + "'");
        letter.kind = CrossingKind::Singular;
        break;
      default: throw ParseError("bad braid letter '" + tok + "'");
    }
    letter.position = parse_int(digits, 0);
    out.push_back(letter);
  }
  return out;
}

DiagramCode braid_closure(int strands, std::span<const BraidLetter> word) {
  if (strands < 1) throw ParseError("a braid needs at least one strand");
  std::vector<Semiarc> current(strands);
  for (int p = 0; p < strands; ++p) current[p] = p;
  Semiarc next = strands;
  std::vector<Crossing> crossings;
  for (const auto& letter : word) {
    if (letter.position < 1 || letter.position >= strands)
      throw ParseError("braid letter position " + std::to_string(letter.position) +
                       " outside 1.." + std::to_string(strands - 1));
    const int a = letter.position - 1, b = letter.position;
    Crossing c{letter.kind, current[a], next, current[b], next + 1};
    next += 2;
    current[a] = c.lower_left;
    current[b] = c.lower_right;
    crossings.push_back(c);
  }

  // Close up: the final semiarc at each position is the initial one.
  std::vector<Semiarc> rename(next);
  for (Semiarc s = 0; s < next; ++s) rename[s] = s;
  for (int p = 0; p < strands; ++p) rename[current[p]] = p;
  std::vector<Semiarc> compact(next, -1);
  Semiarc used = 0;
  for (Semiarc s = 0; s < next; ++s)
    if (rename[s] == s) compact[s] = used++;
  auto relabel = [&](Semiarc s) { return compact[rename[s]]; };
  for (auto& c : crossings) {
    c.upper_left = relabel(c.upper_left);
    c.lower_left = relabel(c.lower_left);
    c.upper_right = relabel(c.upper_right);
    c.lower_right = relabel(c.lower_right);
  }
  std::vector<Semiarc> loops;
  for (int p = 0; p < strands; ++p)
    if (current[p] == p) loops.push_back(relabel(p));
  return DiagramCode(used, std::move(crossings), std::move(loops));
}

namespace {

DiagramCode closure(int strands, std::string_view word) {
  const auto letters = parse_braid_word(word);
  return braid_closure(strands, letters);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto base = [&](std::string name, std::string description, DiagramCode code) {
    out.push_back({std::move(name), std::move(description), std::move(code), "", "", false});
  };
  auto variant = [&](std::string name, std::string of, std::string move, int strands,
                     std::string_view word, bool pseudoknot_only = false) {
    std::string description = move + " variant of " + of + ": closure of " + std::string(word);
    out.push_back({std::move(name), std::move(description), closure(strands, word),
                   std::move(of), std::move(move), pseudoknot_only});
  };

  base("unknot", "crossing-free unknot", DiagramCode(1, {}, {0}));
  base("unlink2", "two-component unlink", DiagramCode(2, {}, {0, 1}));
  base("hopf+", "positive Hopf link: closure of s1 s1", closure(2, "s1 s1"));
  base("hopf-", "negative Hopf link: closure of s1^-1 s1^-1", closure(2, "s1^-1 s1^-1"));
  base("trefoil+", "positive trefoil: closure of s1^3", closure(2, "s1 s1 s1"));
  base("trefoil-", "negative trefoil: closure of s1^-3", closure(2, "s1^-1 s1^-1 s1^-1"));
  base("figure8", "figure-eight knot: closure of s1 s2^-1 s1 s2^-1",
       closure(3, "s1 s2^-1 s1 s2^-1"));
  // Two circles meeting in two singular crossings; semiarcs 0..3 are x1..x4.
  base("K1", "two circles joined at two singular crossings",
       DiagramCode(4, {{CrossingKind::Singular, 0, 1, 3, 2}, {CrossingKind::Singular, 1, 0, 2, 3}}));
  base("K2", "two circles meeting at one singular and one classical crossing",
       DiagramCode(4, {{CrossingKind::Singular, 0, 1, 3, 2},
                       {CrossingKind::PositiveClassical, 1, 0, 2, 3}}));
  base("singular_trefoil", "trefoil with one singular crossing: closure of t1 s1 s1",
       closure(2, "t1 s1 s1"));
  base("singular_figure8", "figure-eight with one singular crossing: closure of t1 s2^-1 s1 s2^-1",
       closure(3, "t1 s2^-1 s1 s2^-1"));
  base("sb3a", "closure of t1 s2 s1 s2", closure(3, "t1 s2 s1 s2"));
  base("sb3b", "closure of s1 s2 t1 s1^-1", closure(3, "s1 s2 t1 s1^-1"));
  base("sb3c", "closure of t1 s2^-1 s1^-1 s2", closure(3, "t1 s2^-1 s1^-1 s2"));

  variant("unknot_r1+", "unknot", "R1", 2, "s1");
  variant("unknot_r1-", "unknot", "R1", 2, "s1^-1");
  variant("unknot_pr1", "unknot", "PR1", 2, "t1", true);
  variant("unlink2_r2", "unlink2", "R2", 2, "s1 s1^-1");
  variant("hopf+_r1", "hopf+", "R1", 3, "s1 s1 s2");
  variant("hopf+_r2", "hopf+", "R2", 2, "s1 s1 s1^-1 s1");
  variant("trefoil+_r1", "trefoil+", "R1", 3, "s1 s1 s1 s2");
  variant("trefoil+_r1-", "trefoil+", "R1", 3, "s1 s1 s1 s2^-1");
  variant("trefoil+_r1l", "trefoil+", "R1", 3, "s2 s2 s2 s1");
  variant("trefoil+_r2", "trefoil+", "R2", 2, "s1 s1^-1 s1 s1 s1");
  variant("trefoil+_r2b", "trefoil+", "R2", 2, "s1^-1 s1 s1 s1 s1");
  variant("trefoil+_t32", "trefoil+", "R1+R2+R3", 3, "s1 s2 s1 s2");
  variant("trefoil+_r3", "trefoil+", "R1+R2+R3", 3, "s2 s1 s2 s2");
  variant("trefoil-_r1", "trefoil-", "R1", 3, "s1^-1 s1^-1 s1^-1 s2^-1");
  variant("figure8_conj", "figure8", "planar", 3, "s2^-1 s1 s2^-1 s1");
  variant("figure8_r2", "figure8", "R2", 3, "s1 s2^-1 s2 s2^-1 s1 s2^-1");
  variant("figure8_r3", "figure8", "R3", 3, "s1 s2^-1 s1 s2^-1 s1 s2 s1 s2^-1 s1^-1 s2^-1");
  variant("K1_r1", "K1", "R1", 3, "t1 t1 s2");
  variant("K1_r1-", "K1", "R1", 3, "t1 t1 s2^-1");
  variant("K1_r2", "K1", "R2", 2, "t1 s1 s1^-1 t1");
  variant("K1_r4", "K1", "R4", 2, "s1 t1 s1^-1 t1");
  variant("K1_pr1", "K1", "PR1", 3, "t1 t1 t2", true);
  variant("K2_r1", "K2", "R1", 3, "t1 s1 s2^-1");
  variant("K2_r2", "K2", "R2", 2, "t1 s1 s1^-1 s1");
  variant("K2_r4", "K2", "R4", 2, "s1 t1");
  variant("K2_r4b", "K2", "R4", 2, "s1^-1 t1 s1 s1");
  variant("singular_trefoil_r1", "singular_trefoil", "R1", 3, "t1 s1 s1 s2");
  variant("singular_trefoil_r4", "singular_trefoil", "R4", 2, "s1 t1 s1");
  variant("singular_figure8_r2", "singular_figure8", "R2", 3, "t1 s2^-1 s1 s1 s1^-1 s2^-1");
  variant("sb3a_r5", "sb3a", "R5", 3, "s2 s1 t2 s2");
  variant("sb3b_r5", "sb3b", "R5", 3, "t2 s1 s2 s1^-1");
  variant("sb3c_r5", "sb3c", "R5", 3, "s2^-1 s1^-1 t2 s2");
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw UnknownDiagramError("no catalog diagram named '" + std::string(name) + "'");
}

DiagramCode catalog(std::string_view name) { return catalog_entry(name).code; }

std::string summarize(const DiagramCode& d) {
  auto plural = [](std::size_t k, const std::string& noun) {
    return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
  };
  std::string out = plural(d.components().size(), "component");
  const std::pair<CrossingKind, const char*> kinds[] = {
      {CrossingKind::PositiveClassical, "positive crossing"},
      {CrossingKind::NegativeClassical, "negative crossing"},
      {CrossingKind::Singular, "singular crossing"}};
  bool any = false;
  for (auto [kind, noun] : kinds)
    if (auto k = d.count(kind)) {
      out += ", " + plural(k, noun);
      any = true;
    }
  if (!any) out += ", no crossings";
  return out;
}

}  // namespace psyq
