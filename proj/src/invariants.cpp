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

#include "psyq/invariants.hpp"

#include <array>

#include "json.hpp"

#include "psyq/errors.hpp"

namespace psyq {

namespace {

// Every crossing in map form: (p, q) -> (r, t) = (q * p, p * q) with
// (over, under) operations chosen by the kind.
struct MapSlots {
  Semiarc p, q, r, t;
  Operation over, under;
  int sign;  // weight sign; the weight is sign * f(p, q)
};

MapSlots map_slots(const Crossing& c) {
  switch (c.kind) {
    case CrossingKind::PositiveClassical:
      return {c.upper_left, c.lower_left, c.upper_right, c.lower_right,
              Operation::OverTri, Operation::UnderTri, 1};
    case CrossingKind::Singular:
      return {c.upper_left, c.lower_left, c.upper_right, c.lower_right,
              Operation::OverDot, Operation::UnderDot, 1};
    case CrossingKind::NegativeClassical:
      return {c.lower_left, c.upper_left, c.lower_right, c.upper_right,
              Operation::OverTri, Operation::UnderTri, -1};
  }
  return {};
}

constexpr Element kUnset = -1;

class Search {
 public:
  Search(const DiagramCode& d, const Psyquandle& x,
         const std::function<void(const Coloring&)>& visit)
      : x_(x), visit_(visit), coloring_(d.semiarc_count(), kUnset) {
    touching_.resize(d.semiarc_count());
    for (const auto& c : d.crossings()) {
      const std::size_t i = slots_.size();
      slots_.push_back(map_slots(c));
      for (Semiarc s : {c.upper_left, c.lower_left, c.upper_right, c.lower_right})
        touching_[s].push_back(i);
    }
    for (const auto& component : d.components())
      for (Semiarc s : component) order_.push_back(s);
  }

  void run() { descend(0); }

 private:
  void descend(std::size_t next) {
    while (next < order_.size() && coloring_[order_[next]] != kUnset) ++next;
    if (next == order_.size()) {
      visit_(coloring_);
      return;
    }
    const Semiarc s = order_[next];
    for (Element v = 0; v < x_.order(); ++v) {
      const std::size_t mark = trail_.size();
      if (assign(s, v) && propagate()) descend(next + 1);
      undo(mark);
    }
  }

  bool assign(Semiarc s, Element v) {
    if (coloring_[s] != kUnset) return coloring_[s] == v;
    coloring_[s] = v;
    trail_.push_back(s);
    for (std::size_t i : touching_[s]) queue_.push_back(i);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      coloring_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
    queue_.clear();
  }

  bool propagate() {
    while (!queue_.empty()) {
      const MapSlots m = slots_[queue_.back()];
      queue_.pop_back();
      Element p = coloring_[m.p], q = coloring_[m.q], r = coloring_[m.r], t = coloring_[m.t];
      if (p != kUnset && q != kUnset) {
        if (!assign(m.r, x_.apply(m.over, q, p)) || !assign(m.t, x_.apply(m.under, p, q)))
          return false;
      } else if (p != kUnset && r != kUnset) {
        q = x_.apply_inverse(m.over, r, p);
        if (!assign(m.q, q) || !assign(m.t, x_.apply(m.under, p, q))) return false;
      } else if (q != kUnset && t != kUnset) {
        p = x_.apply_inverse(m.under, t, q);
        if (!assign(m.p, p) || !assign(m.r, x_.apply(m.over, q, p))) return false;
      } else if (r != kUnset && t != kUnset) {
        auto [pp, qq] = m.over == Operation::OverTri ? x_.classical_map_inverse(r, t)
                                                     : x_.singular_map_inverse(r, t);
        if (!assign(m.p, pp) || !assign(m.q, qq)) return false;
      }
    }
    return true;
  }

  const Psyquandle& x_;
  const std::function<void(const Coloring&)>& visit_;
  Coloring coloring_;
  std::vector<MapSlots> slots_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<Semiarc> order_;
  std::vector<Semiarc> trail_;
  std::vector<std::size_t> queue_;
};

}  // namespace

void for_each_coloring(const DiagramCode& d, const Psyquandle& x,
                       const std::function<void(const Coloring&)>& visit) {
  Search(d, x, visit).run();
}

std::vector<Coloring> enumerate_colorings(const DiagramCode& d, const Psyquandle& x) {
  std::vector<Coloring> out;
  for_each_coloring(d, x, [&](const Coloring& c) { out.push_back(c); });
  return out;
}

std::uint64_t counting_invariant(const DiagramCode& d, const Psyquandle& x) {
  std::uint64_t count = 0;
  for_each_coloring(d, x, [&](const Coloring&) { ++count; });
  return count;
}

bool is_coloring(const DiagramCode& d, const Psyquandle& x, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(d.semiarc_count())) return false;
  for (Element v : c)
    if (v < 0 || v >= x.order()) return false;
  for (const auto& rel : generate_constraints(d))
    if (c[rel.target] != x.apply(rel.op, c[rel.left], c[rel.right])) return false;
  return true;
}

std::optional<ModMatrix> coloring_system(const DiagramCode& d, const Psyquandle& x) {
  std::array<std::pair<int, int>, 4> forms;
  for (Operation op : {Operation::UnderTri, Operation::OverTri, Operation::UnderDot,
                       Operation::OverDot}) {
    auto form = linear_form(x.tables().get(op));
    if (!form) return std::nullopt;
    forms[static_cast<int>(op)] = *form;
  }
  const auto relations = generate_constraints(d);
  ModMatrix m(relations.size(), static_cast<std::size_t>(d.semiarc_count()), x.order());
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& rel = relations[i];
    auto [alpha, beta] = forms[static_cast<int>(rel.op)];
    m.set(i, rel.left, m(i, rel.left) + alpha);
    m.set(i, rel.right, m(i, rel.right) + beta);
    m.set(i, rel.target, m(i, rel.target) - 1);
  }
  return m;
}

BoltzmannWeight boltzmann_weight(const Coloring& c, const WeightPair& w, const DiagramCode& d,
                                 const Psyquandle& x) {
  if (w.order() != x.order())
    throw OrderMismatchError("weight tables have order " + std::to_string(w.order()) +
                             ", psyquandle has order " + std::to_string(x.order()));
  if (!is_coloring(d, x, c)) throw InvalidColoringError("assignment violates a crossing relation");
  const Residue n = w.modulus();
  BoltzmannWeight bw;
  for (const auto& crossing : d.crossings()) {
    const MapSlots m = map_slots(crossing);
    if (crossing.kind == CrossingKind::Singular)
      bw.psi_part += w.psi(c[m.p], c[m.q]);
    else
      bw.phi_part += m.sign * w.phi(c[m.p], c[m.q]);
  }
  bw.phi_part = ((bw.phi_part % n) + n) % n;
  bw.psi_part %= n;
  bw.total = (bw.phi_part + bw.psi_part) % n;
  return bw;
}

std::string_view mode_name(PolynomialMode mode) {
  return mode == PolynomialMode::SingleVariable ? "single" : "two";
}

std::uint64_t WeightPolynomial::coefficient_sum() const {
  std::uint64_t sum = 0;
  for (const auto& [exp, coeff] : terms) sum += coeff;
  return sum;
}

WeightPolynomial enhanced_polynomial(const DiagramCode& d, const Psyquandle& x,
                                     const WeightPair& w, PolynomialMode mode,
                                     Interpretation interpretation) {
  const WeightReport report = validate_weight_pair(x, w);
  if (!report.satisfies_core)
    throw InvalidWeightError("weight pair fails condition " + describe(report.violations.front()));
  if (mode == PolynomialMode::TwoVariable && !report.strongly_compatible)
    throw CompatibilityError("two-variable polynomial needs a strongly compatible weight pair");
  if (interpretation == Interpretation::Pseudoknot) {
    if (!x.pI_adequate())
      throw AdequacyError("pseudoknot invariant needs a pI-adequate psyquandle");
    if (!report.pI_adequate)
      throw AdequacyError("pseudoknot invariant needs psi(x,x) = 0 for all x");
  }

  WeightPolynomial poly;
  poly.modulus = w.modulus();
  poly.mode = mode;
  for_each_coloring(d, x, [&](const Coloring& c) {
    const BoltzmannWeight bw = boltzmann_weight(c, w, d, x);
    const auto key = mode == PolynomialMode::SingleVariable
                         ? std::pair<Residue, Residue>{bw.total, 0}
                         : std::pair<Residue, Residue>{bw.phi_part, bw.psi_part};
    ++poly.terms[key];
  });
  return poly;
}

std::string polynomial_to_string(const WeightPolynomial& p) {
  auto power = [](const char* var, Residue e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? var : std::string(var) + "^" + std::to_string(e);
  };
  std::string out;
  for (const auto& [exp, coeff] : p.terms) {
    const std::string monomial = p.mode == PolynomialMode::SingleVariable
                                     ? power("w", exp.first)
                                     : power("u", exp.first) + power("v", exp.second);
    if (!out.empty()) out += " + ";
    if (monomial.empty() || coeff != 1) out += std::to_string(coeff);
    out += monomial;
  }
  return out.empty() ? "0" : out;
}

std::string to_json(const InvariantResult& r, int indent) {
  nlohmann::ordered_json j;
  j["diagram"] = r.diagram;
  j["psyquandle_hash"] = r.psyquandle_hash;
  j["modulus"] = r.polynomial.modulus;
  j["mode"] = mode_name(r.polynomial.mode);
  j["counting_invariant"] = r.counting_invariant;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [exp, coeff] : r.polynomial.terms) {
    nlohmann::ordered_json t;
    if (r.polynomial.mode == PolynomialMode::SingleVariable)
      t["exp"] = exp.first;
    else
      t["exp"] = {exp.first, exp.second};
    t["coeff"] = coeff;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["rendered"] = polynomial_to_string(r.polynomial);
  return j.dump(indent);
}

InvariantResult parse_invariant_result(std::string_view json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    InvariantResult r;
    r.diagram = j.at("diagram").get<std::string>();
    r.psyquandle_hash = j.at("psyquandle_hash").get<std::string>();
    r.counting_invariant = j.at("counting_invariant").get<std::uint64_t>();
    r.polynomial.modulus = j.at("modulus").get<Residue>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "single")
      r.polynomial.mode = PolynomialMode::SingleVariable;
    else if (mode == "two")
      r.polynomial.mode = PolynomialMode::TwoVariable;
    else
      throw ParseError("unknown mode '" + mode + "'");
    for (const auto& t : j.at("terms")) {
      const auto& e = t.at("exp");
      const auto key = e.is_array() ? std::pair<Residue, Residue>{e.at(0).get<Residue>(),
                                                                  e.at(1).get<Residue>()}
                                    : std::pair<Residue, Residue>{e.get<Residue>(), 0};
      r.polynomial.terms[key] = t.at("coeff").get<std::uint64_t>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad invariant JSON: ") + e.what());
  }
}

}  // namespace psyq
