// Stanley-Reisner presentations of complete simplicial fans.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "loghilb/chow/presentation.hpp"
#include "loghilb/fan/hilb_fan.hpp"
#include "loghilb/fan/stacky_fan.hpp"

namespace loghilb::chow {

/// Minimal ray subsets that span no cone, each sorted, in lexicographic order.
inline std::vector<fan::Cone> minimal_non_faces(const fan::StackyFan& f) {
  const auto faces = f.all_cones();
  std::set<fan::Cone> out;
  const std::size_t nrays = f.rays().size();
  for (const auto& face : faces) {
    if (face.size() > f.dim()) continue;
    const std::size_t start = face.empty() ? 0 : face.back() + 1;
    for (std::size_t r = start; r < nrays; ++r) {
      fan::Cone s = face;
      s.push_back(r);
      if (faces.count(s)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop + 1 < s.size() && minimal; ++drop) {
        fan::Cone sub;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) sub.push_back(s[k]);
        minimal = faces.count(sub) > 0;
      }
      if (minimal) out.insert(std::move(s));
    }
  }
  return {out.begin(), out.end()};
}

/// Fixes the overall sign so the leading term (in printing order) is positive.
inline MultiPoly canonical_relation(const MultiPoly& p) {
  const std::string s = p.to_string();
  return !s.empty() && s.front() == '-' ? -p : p;
}

/// Generators are the ray labels; relations are the n linear relations
/// followed by one monomial per minimal non-face. Throws std::domain_error
/// when the fan is not complete and simplicial.
inline GradedPresentation sr_presentation(const fan::StackyFan& f) {
  const auto report = fan::validate_fan(f);
  if (!report.ok()) throw std::domain_error("sr_presentation: " + report.problems.front());
  GradedPresentation pres;
  pres.base = BaseRing::integers();
  pres.top_degree = static_cast<unsigned>(f.dim());
  std::vector<MultiPoly> x;
  for (const auto& r : f.rays()) {
    pres.generators.push_back({r.label, 1});
    x.push_back(MultiPoly::variable(r.label));
  }
  for (std::size_t k = 0; k < f.dim(); ++k) {
    MultiPoly lin;
    for (std::size_t r = 0; r < f.rays().size(); ++r)
      if (f.rays()[r].vector[k] != 0) lin += MultiPoly(f.rays()[r].vector[k]) * x[r];
    pres.relations.push_back(canonical_relation(lin));
  }
  for (const auto& s : minimal_non_faces(f)) {
    MultiPoly m(1);
    for (auto r : s) m *= x[r];
    pres.relations.push_back(m);
  }
  return pres;
}

/// Relation families written out directly for Hilb^n(P^1|0)_{<=i}, 1 <= i <= n,
/// in the fan's ray labels.
struct HilbSrFamilies {
  std::vector<MultiPoly> linear;     // sigma_j + sum (k+j-n) rho_k - tau
  std::vector<MultiPoly> monomial;   // sigma_j rho_{n-j}, tau rho_n, sigma_{n-i}...sigma_n
};

inline HilbSrFamilies hilb_sr_families(std::size_t n, std::size_t i) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("hilb_sr_families: need 1 <= i <= n");
  auto sigma = [](std::size_t j) { return MultiPoly::variable("sigma_" + std::to_string(j)); };
  auto rho = [](std::size_t j) { return MultiPoly::variable(fan::zero_label(j)); };
  const auto tau = MultiPoly::variable("tau");
  HilbSrFamilies fam;
  for (std::size_t j = 1; j <= n; ++j) {
    MultiPoly lin = sigma(j) - tau;
    for (std::size_t k = std::max(n - j + 1, i + 1); k <= n; ++k)
      lin += MultiPoly(static_cast<long>(k + j - n)) * rho(k);
    fam.linear.push_back(canonical_relation(lin));
  }
  // sigma_j rho_{n-j} only where rho_{n-j} is a ray of the fan (n - j > i).
  for (std::size_t j = 1; j + i + 1 <= n; ++j) fam.monomial.push_back(sigma(j) * rho(n - j));
  if (i < n) fam.monomial.push_back(tau * rho(n));
  // The sigma_{n-i} ... sigma_n product, reading sigma_0 as tau when i = n.
  MultiPoly top = n == i ? tau : MultiPoly(1);
  for (std::size_t j = std::max<std::size_t>(n - i, 1); j <= n; ++j) top *= sigma(j);
  fam.monomial.push_back(top);
  return fam;
}

}  // namespace loghilb::chow
