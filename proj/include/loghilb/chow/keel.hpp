// Keel's blow-up formula, the Q_{m,h} polynomials, and the resulting
// presentations of the intermediate logarithmic Hilbert stacks.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "loghilb/chow/presentation.hpp"

namespace loghilb::chow {

/// Q_{m,h}(t_m, ..., t_{h+1}, t) with c standing for c_1(L). `args` lists
/// t_m down to t_{h+1} and then t, so it has m - h + 1 entries. Q_{0,h} is
/// zero for every h.
inline MultiPoly q_polynomial(unsigned m, unsigned h, const std::vector<MultiPoly>& args, const MultiPoly& c) {
  if (m == 0) return MultiPoly();
  if (m < h) throw std::invalid_argument("q_polynomial: need m >= h");
  if (args.size() != m - h + 1) throw std::invalid_argument("q_polynomial: expected m - h + 1 arguments");
  const MultiPoly& t = args.back();
  // t_{j+h} sits at position m - (j + h) of args.
  MultiPoly out(1);
  for (unsigned k = 1; k <= h; ++k) {
    MultiPoly factor = MultiPoly(static_cast<long>(k)) * t + c;
    for (unsigned j = 1; j <= m - h; ++j)
      factor -= MultiPoly(static_cast<long>(k + j)) * args[m - (j + h)];
    out *= factor;
  }
  return out;
}

/// Q_{m,h} in the variables t_m, ..., t_{h+1}, t and c.
inline MultiPoly q_polynomial(unsigned m, unsigned h) {
  if (m == 0) return MultiPoly();
  if (m < h) throw std::invalid_argument("q_polynomial: need m >= h");
  std::vector<MultiPoly> args;
  for (unsigned j = m; j > h; --j) args.push_back(MultiPoly::variable("t_" + std::to_string(j)));
  args.push_back(MultiPoly::variable("t"));
  return q_polynomial(m, h, args, MultiPoly::variable("c"));
}

/// One application of Keel's formula: adjoins a degree-1 class t with
/// relations t * ker and Q(t).
inline GradedPresentation keel_step(GradedPresentation pres, const std::vector<MultiPoly>& ker_gens,
                                    const MultiPoly& q, const std::string& new_name) {
  pres.generators.push_back({new_name, 1});
  const auto deg = pres.degrees();
  const auto t = MultiPoly::variable(new_name);
  for (const auto& g : ker_gens) {
    if (!g.is_homogeneous(deg)) throw std::invalid_argument("keel_step: kernel generator is not homogeneous");
    pres.relations.push_back(t * g);
  }
  if (!q.is_homogeneous(deg)) throw std::invalid_argument("keel_step: Q is not homogeneous");
  pres.relations.push_back(q);
  pres.validate();
  return pres;
}

/// How an exceptional class enters the last slot t of a Q polynomial.
/// Keel's generator t restricts to minus the exceptional divisor, so with
/// eps_j = [E_j] the slot receives -eps_j. AsPrinted substitutes eps_j
/// itself, which agrees for n <= 3 only up to a change of sign.
enum class SlotSign { Exceptional, AsPrinted };

/// Name of the exceptional class epsilon_j along marking r (1-based).
inline std::string epsilon_name(unsigned r, unsigned j, unsigned markings) {
  if (markings == 1) return "eps_" + std::to_string(j);
  return "eps" + std::to_string(r) + "_" + std::to_string(j);
}

namespace detail {

inline MultiPoly slot(const MultiPoly& eps, SlotSign sign) { return sign == SlotSign::Exceptional ? -eps : eps; }

inline MultiPoly line_class(const BaseRing& base, unsigned r) {
  if (base.kind == BaseRing::Kind::TruncatedHyperplane) return MultiPoly::variable(BaseRing::kHyperplane);
  return MultiPoly::variable(BaseRing::line_class_name(r));
}

// Generators of ker(s_{m,n}^*) along marking r.
inline std::vector<MultiPoly> kernel_generators(const BaseRing& base, unsigned r, unsigned m, unsigned n) {
  if (base.kind == BaseRing::Kind::TruncatedHyperplane)
    return {MultiPoly::variable(BaseRing::kHyperplane).pow(m + 1)};
  return {MultiPoly::variable(BaseRing::kernel_token_name(r, m, n))};
}

inline void check_base(const BaseRing& base, unsigned n, std::size_t markings) {
  if (base.kind == BaseRing::Kind::Integers)
    throw std::invalid_argument("presentation needs a Sym^n base ring");
  if (base.n != n) throw std::invalid_argument("base ring is for a different n");
  if (base.symbolic() && base.line_classes.size() != markings)
    throw std::invalid_argument("symbolic base ring has the wrong number of markings");
}

// lowest_j is the smallest adjoined index; 1 keeps the literal epsilon_1.
inline GradedPresentation thm_d(unsigned n, const std::vector<unsigned>& lowest_j, const BaseRing& base,
                                SlotSign sign) {
  const auto markings = static_cast<unsigned>(lowest_j.size());
  GradedPresentation pres;
  pres.base = base;
  pres.top_degree = n;
  for (unsigned r = 1; r <= markings; ++r) {
    auto eps = [&](unsigned j) { return MultiPoly::variable(epsilon_name(r, j, markings)); };
    const MultiPoly c = line_class(base, r);
    for (unsigned j = n; j >= lowest_j[r - 1] && j >= 1; --j) {
      pres.generators.push_back({epsilon_name(r, j, markings), 1});
      std::vector<MultiPoly> args;
      for (unsigned k = n; k > j; --k) args.push_back(eps(k));
      args.push_back(slot(eps(j), sign));
      pres.relations.push_back(q_polynomial(n, j, args, c));
      for (const auto& g : kernel_generators(base, r, n - j, n)) pres.relations.push_back(g * eps(j));
      for (unsigned k = n - j; k >= 1; --k) {
        std::vector<MultiPoly> sub;
        for (unsigned a = n; a > j + k; --a) sub.push_back(eps(a));
        sub.push_back(slot(eps(j + k), sign));
        pres.relations.push_back(q_polynomial(n - j, k, sub, c) * eps(j));
      }
    }
  }
  pres.validate();
  return pres;
}

// Single-marking Keel chain over Z[H]/(H^(n+1)) down to index lowest_j.
inline GradedPresentation keel_chain(unsigned n, unsigned lowest_j, SlotSign sign) {
  GradedPresentation pres;
  pres.base = BaseRing::truncated_hyperplane(n);
  pres.top_degree = n;
  const auto h = MultiPoly::variable(BaseRing::kHyperplane);
  for (unsigned j = n; j >= lowest_j && j >= 1; --j) {
    const unsigned m = n - j;
    // The centre is isomorphic to Hilb^m_{<=0}; the kernel of restriction to it is
    // generated by ker(s_{m,n}^*) = (H^(m+1)) and the lifted relations of
    // the smaller Hilbert stack, with eps_{m,k} lifting to eps_{n,j+k}.
    std::vector<MultiPoly> ker{h.pow(m + 1)};
    if (m >= 1) {
      const auto centre = keel_chain(m, 1, sign);
      std::map<std::string, MultiPoly> lift;
      for (unsigned k = 1; k <= m; ++k)
        lift.emplace(epsilon_name(1, k, 1), MultiPoly::variable(epsilon_name(1, j + k, 1)));
      for (const auto& rel : centre.relations) ker.push_back(rel.substitute(lift));
    }
    std::vector<MultiPoly> args;
    for (unsigned k = n; k > j; --k) args.push_back(MultiPoly::variable(epsilon_name(1, k, 1)));
    args.push_back(slot(MultiPoly::variable(epsilon_name(1, j, 1)), sign));
    pres = keel_step(std::move(pres), ker, q_polynomial(n, j, args, h), epsilon_name(1, j, 1));
  }
  return pres;
}

inline std::vector<unsigned> lowest_indices(unsigned n, const std::vector<unsigned>& levels) {
  if (levels.empty()) throw std::invalid_argument("at least one marking is required");
  std::vector<unsigned> out;
  for (auto i : levels) {
    if (i > n) throw std::invalid_argument("level exceeds n");
    // Level 0 coincides with level 1: epsilon_1 is not adjoined.
    out.push_back(std::max(i, 1U) + 1);
  }
  return out;
}

}  // namespace detail

/// Presentation of CH*(Hilb^n(C|p_1 + ... + p_l)_{<=i}) from the three
/// relation families: Q_{n,j}(eps_n..eps_j), ker(s_{n-j,n}^*) * eps_j and
/// Q_{n-j,k}(eps_n..eps_{j+k}) * eps_j for k = n-j..1. The last slot of each
/// Q is filled according to `sign`.
inline GradedPresentation thmD_presentation(unsigned n, const std::vector<unsigned>& levels, const BaseRing& base,
                                            SlotSign sign = SlotSign::Exceptional) {
  if (n < 1) throw std::invalid_argument("thmD_presentation: n must be >= 1");
  detail::check_base(base, n, levels.size());
  return detail::thm_d(n, detail::lowest_indices(n, levels), base, sign);
}

/// Same ring built step by step with keel_step. Single marking over P^1 only.
inline GradedPresentation iterated_keel(unsigned n, const std::vector<unsigned>& levels, const BaseRing& base,
                                        SlotSign sign = SlotSign::Exceptional) {
  if (n < 1) throw std::invalid_argument("iterated_keel: n must be >= 1");
  if (levels.size() != 1) throw std::invalid_argument("iterated_keel: supports a single marking");
  if (base.kind != BaseRing::Kind::TruncatedHyperplane)
    throw std::invalid_argument("iterated_keel: needs the P^1 base ring");
  detail::check_base(base, n, 1);
  return detail::keel_chain(n, detail::lowest_indices(n, levels).front(), sign);
}

}  // namespace loghilb::chow
