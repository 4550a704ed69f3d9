// Fans of the intermediate logarithmic Hilbert stacks of points on P^1
// relative to 0, and relative to 0 + infinity.
//
// Coordinates: e_k is the ray of the hyperplane where the k-th elementary
// symmetric function of the n points vanishes; tau belongs to the 0-th one.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "loghilb/fan/stacky_fan.hpp"

namespace loghilb::fan {

/// Generator of the ray added when j points are allowed to collide at 0:
/// sum_{k=n-j+1}^{n} (k + j - n) e_k, i.e. weights 1..j on e_{n-j+1}..e_n.
inline Vec zero_side_ray(std::size_t n, std::size_t j) {
  if (j < 1 || j > n) throw std::invalid_argument("zero_side_ray: need 1 <= j <= n");
  Vec v(n, 0);
  for (std::size_t k = n - j + 1; k <= n; ++k) v[k - 1] = static_cast<long>(k + j - n);
  return v;
}

/// Lattice involution induced by t -> 1/t on P^1. On Sym^n it swaps the
/// k-th and (n-k)-th elementary symmetric coordinates, so e_k -> e_{n-k}
/// for 1 <= k < n and e_n -> tau = -(e_1 + ... + e_n).
inline IntMatrix boundary_involution(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t k = 1; k < n; ++k) a(n - k - 1, k - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) a(i, n - 1) = -1;
  return a;
}

inline Vec transform(const IntMatrix& a, const Vec& v) {
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j).get_si() * v[j];
  return out;
}

/// Ray for j points colliding at infinity: the image of zero_side_ray under
/// the involution, tau-weight j and weight (j - k) on e_k for k < j.
inline Vec infinity_side_ray(std::size_t n, std::size_t j) {
  return transform(boundary_involution(n), zero_side_ray(n, j));
}

inline std::string zero_label(std::size_t j) { return "rho_" + std::to_string(j); }
inline std::string infinity_label(std::size_t j) { return "rho_inf_" + std::to_string(j); }

/// Fan of Hilb^n(P^1|0)_{<= i}: star subdivisions of the P^n fan at rho_n,
/// rho_{n-1}, ..., rho_{i+1}. rho_1 = e_n is already a ray, so i = 0 and
/// i = 1 give the same fan.
inline StackyFan hilb_fan(std::size_t n, std::size_t i) {
  if (n < 1) throw std::invalid_argument("hilb_fan: n must be >= 1");
  if (i > n) throw std::invalid_argument("hilb_fan: level i exceeds n");
  StackyFan fan = projective_fan(n);
  for (std::size_t j = n; j > i; --j) fan = star_subdivide(fan, zero_side_ray(n, j), zero_label(j));
  return fan;
}

/// One weighted blow-up of the two-marking tower: j points collide at 0
/// (at_infinity == false) or at infinity.
struct BlowupStep {
  bool at_infinity = false;
  std::size_t j = 0;
};

inline StackyFan apply_blowups(StackyFan fan, const std::vector<BlowupStep>& steps) {
  const std::size_t n = fan.dim();
  for (const auto& s : steps) {
    if (s.at_infinity) fan = star_subdivide(fan, infinity_side_ray(n, s.j), infinity_label(s.j));
    else fan = star_subdivide(fan, zero_side_ray(n, s.j), zero_label(s.j));
  }
  return fan;
}

/// Canonical blow-up order for Hilb^n(P^1|0+inf)_{<=(i0, i_inf)}: all
/// zero-side centres from n down, then all infinity-side centres.
inline std::vector<BlowupStep> two_marking_steps(std::size_t n, std::size_t i0, std::size_t i_inf) {
  std::vector<BlowupStep> steps;
  for (std::size_t j = n; j > i0; --j) steps.push_back({false, j});
  for (std::size_t j = n; j > i_inf; --j) steps.push_back({true, j});
  return steps;
}

inline StackyFan hilb_fan_two_markings(std::size_t n, std::size_t i0, std::size_t i_inf) {
  if (n < 1) throw std::invalid_argument("hilb_fan_two_markings: n must be >= 1");
  if (i0 > n || i_inf > n) throw std::invalid_argument("hilb_fan_two_markings: level exceeds n");
  return apply_blowups(projective_fan(n), two_marking_steps(n, i0, i_inf));
}

}  // namespace loghilb::fan
