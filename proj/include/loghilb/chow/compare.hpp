// Checking that a degree-1 assignment of generators defines a ring map
// between two presentations, and comparing graded groups.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "loghilb/chow/presentation.hpp"

namespace loghilb::chow {

struct RelationCheck {
  std::string relation;
  std::string image;
  bool member = false;
};

struct DegreeCheck {
  GradedGroupEntry a;
  GradedGroupEntry b;
  bool equal() const { return a == b; }
};

struct ComparisonReport {
  std::vector<RelationCheck> relations;
  std::vector<DegreeCheck> degrees;
  bool surjective_in_degree_one = false;

  bool relations_ok() const {
    for (const auto& r : relations)
      if (!r.member) return false;
    return true;
  }
  bool groups_equal() const {
    for (const auto& d : degrees)
      if (!d.equal()) return false;
    return true;
  }
  bool ok() const { return relations_ok() && groups_equal() && surjective_in_degree_one; }
};

using GeneratorMap = std::map<std::string, MultiPoly>;

namespace detail {

inline void check_map(const GradedPresentation& a, const GradedPresentation& b, const GeneratorMap& m) {
  const auto deg_a = a.degrees();
  const auto deg_b = b.degrees();
  for (const auto& [name, d] : deg_a) {
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("generator map misses " + name);
    const auto& img = it->second;
    for (const auto& v : img.vars())
      if (!deg_b.count(v)) throw std::invalid_argument("image of " + name + " uses unknown variable " + v);
    if (img.is_zero()) continue;
    if (!img.is_homogeneous(deg_b) || img.degree(deg_b) != d)
      throw std::invalid_argument("image of " + name + " has the wrong degree");
  }
}

// Whether every degree-1 monomial of B lies in the span of the images plus
// B's degree-1 relations.
inline bool surjective_degree_one(const GradedQuotient& qb, const GeneratorMap& m) {
  if (qb.presentation().top_degree < 1) return true;
  LatticeEchelon span = qb.relations_in_degree(1);
  for (const auto& [name, img] : m) {
    if (img.is_zero() || img.degree(qb.presentation().degrees()) != 1) continue;
    span.insert(qb.coordinates(img, 1));
  }
  const auto monos = qb.monomials(1);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    std::vector<Integer> e(monos.size());
    e[i] = 1;
    if (!span.contains(std::move(e))) return false;
  }
  return true;
}

}  // namespace detail

/// Checks every relation of A (base relations included) maps into B's ideal,
/// up to B's top degree, and compares the graded groups degree by degree.
/// Throws std::invalid_argument for a map that is not degree-preserving.
inline ComparisonReport compare_presentations(const GradedPresentation& a, const GradedPresentation& b,
                                              const GeneratorMap& m) {
  detail::check_map(a, b, m);
  const GradedQuotient qa(a);
  const GradedQuotient qb(b);
  ComparisonReport rep;
  for (const auto& rel : a.all_relations()) {
    const auto img = rel.substitute(m);
    rep.relations.push_back({rel.to_string(), img.to_string(), qb.contains(img)});
  }
  const unsigned top = std::max(a.top_degree, b.top_degree);
  for (unsigned k = 0; k <= top; ++k) {
    GradedGroupEntry ga = k <= a.top_degree ? qa.group(k) : GradedGroupEntry{k, 0, {}};
    GradedGroupEntry gb = k <= b.top_degree ? qb.group(k) : GradedGroupEntry{k, 0, {}};
    rep.degrees.push_back({std::move(ga), std::move(gb)});
  }
  rep.surjective_in_degree_one = detail::surjective_degree_one(qb, m);
  return rep;
}

/// Brute-force search for a degree-1 map A -> B passing compare_presentations.
/// Images range over integer combinations, with coefficients in
/// [-bound, bound], of a Z-basis of B in degree 1 chosen among B's
/// generators. All of A's variables must have degree 1.
inline std::optional<GeneratorMap> search_generator_map(const GradedPresentation& a, const GradedPresentation& b,
                                                        long bound) {
  const GradedQuotient qb(b);
  for (const auto& [name, d] : a.degrees())
    if (d != 1) throw std::invalid_argument("search_generator_map: degree-1 variables only");

  // Greedy Z-basis of B^1 among its variables.
  std::vector<MultiPoly> basis;
  {
    LatticeEchelon span = qb.relations_in_degree(1);
    for (const auto& [name, d] : b.degrees()) {
      if (d != 1) continue;
      auto v = MultiPoly::variable(name);
      auto c = qb.coordinates(v, 1);
      if (span.contains(c)) continue;
      span.insert(std::move(c));
      basis.push_back(v);
    }
  }
  std::vector<MultiPoly> candidates;
  {
    std::vector<long> coef(basis.size(), -bound);
    while (true) {
      MultiPoly p;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (coef[i] != 0) p += MultiPoly(coef[i]) * basis[i];
      if (!p.is_zero()) candidates.push_back(std::move(p));
      std::size_t i = 0;
      while (i < coef.size() && coef[i] == bound) coef[i++] = -bound;
      if (i == coef.size()) break;
      ++coef[i];
    }
  }

  const auto relations = a.all_relations();
  // Assign variables greedily so relations become checkable as early as possible.
  std::vector<std::string> names;
  {
    std::set<std::string> pending;
    for (const auto& [name, d] : a.degrees()) pending.insert(name);
    while (!pending.empty()) {
      std::string best = *pending.begin();
      long best_score = -1;
      for (const auto& cand : pending) {
        long score = 0;
        for (const auto& rel : relations) {
          bool uses = false;
          bool complete = true;
          for (const auto& v : rel.vars()) {
            if (v == cand) uses = true;
            else if (pending.count(v)) complete = false;
          }
          if (uses && complete) ++score;
        }
        if (score > best_score) {
          best_score = score;
          best = cand;
        }
      }
      names.push_back(best);
      pending.erase(best);
    }
  }
  // Relations become checkable once all their variables are assigned.
  std::vector<std::vector<std::size_t>> ready(names.size());
  for (std::size_t r = 0; r < relations.size(); ++r) {
    std::size_t last = 0;
    for (const auto& v : relations[r].vars())
      last = std::max(last, static_cast<std::size_t>(std::find(names.begin(), names.end(), v) - names.begin()));
    ready[last].push_back(r);
  }

  GeneratorMap current;
  std::optional<GeneratorMap> found;
  std::function<void(std::size_t)> assign = [&](std::size_t idx) {
    if (found) return;
    if (idx == names.size()) {
      if (compare_presentations(a, b, current).ok()) found = current;
      return;
    }
    for (const auto& cand : candidates) {
      current[names[idx]] = cand;
      bool good = true;
      for (auto r : ready[idx])
        if (!qb.contains(relations[r].substitute(current))) {
          good = false;
          break;
        }
      if (good) assign(idx + 1);
      if (found) return;
    }
    current.erase(names[idx]);
  };
  assign(0);
  return found;
}

}  // namespace loghilb::chow
