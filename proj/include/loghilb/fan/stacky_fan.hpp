// Simplicial stacky fans with primitive ray generators, star subdivision and
// the combinatorial invariants used across the toolkit.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loghilb/exact/lattice.hpp"
#include "loghilb/exact/multipoly.hpp"

namespace loghilb::fan {

using Vec = std::vector<long>;
using Cone = std::vector<std::size_t>;  // sorted ray indices

struct Ray {
  std::string label;
  Vec vector;
};

inline bool is_primitive(const Vec& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g == 1;
}

/// A simplicial fan stored through its maximal cones. Every generator is
/// primitive, so the stacky structure is the one sending each ray to its
/// generator and carries no extra data.
class StackyFan {
 public:
  StackyFan() = default;
  StackyFan(std::size_t dim, std::vector<Ray> rays, std::set<Cone> max_cones)
      : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    for (const auto& r : rays_) {
      if (r.vector.size() != dim_) throw std::invalid_argument("StackyFan: ray has wrong dimension");
      if (!is_primitive(r.vector)) throw std::invalid_argument("StackyFan: ray " + r.label + " is not primitive");
    }
    for (const auto& c : max_cones_) {
      if (c.size() != dim_) throw std::invalid_argument("StackyFan: maximal cone of wrong size");
      if (!std::is_sorted(c.begin(), c.end())) throw std::invalid_argument("StackyFan: cone indices unsorted");
      for (auto i : c)
        if (i >= rays_.size()) throw std::invalid_argument("StackyFan: cone index out of range");
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::set<Cone>& max_cones() const { return max_cones_; }

  std::optional<std::size_t> ray_index(const Vec& v) const {
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (rays_[i].vector == v) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> ray_index(const std::string& label) const {
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (rays_[i].label == label) return i;
    return std::nullopt;
  }

  /// Square matrix whose columns are the generators of a maximal cone.
  IntMatrix cone_matrix(const Cone& cone) const {
    IntMatrix m(dim_, cone.size());
    for (std::size_t j = 0; j < cone.size(); ++j)
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = rays_[cone[j]].vector[i];
    return m;
  }

  /// All cones (faces of maximal cones, the origin included), deduplicated.
  std::set<Cone> all_cones() const {
    std::set<Cone> out;
    for (const auto& c : max_cones_) {
      const std::size_t k = c.size();
      for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        Cone face;
        for (std::size_t j = 0; j < k; ++j)
          if (mask & (1UL << j)) face.push_back(c[j]);
        out.insert(std::move(face));
      }
    }
    return out;
  }

  bool is_cone(const Cone& cone) const {
    for (const auto& c : max_cones_)
      if (std::includes(c.begin(), c.end(), cone.begin(), cone.end())) return true;
    return false;
  }

  std::vector<std::string> labels_of(const Cone& cone) const {
    std::vector<std::string> out;
    for (auto i : cone) out.push_back(rays_[i].label);
    return out;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Ray> rays_;
  std::set<Cone> max_cones_;
};

/// Fan of P^n: sigma_k = e_k and tau = -(e_1 + ... + e_n); maximal cones are all n-subsets.
inline StackyFan projective_fan(std::size_t n) {
  if (n < 1) throw std::invalid_argument("projective_fan: dimension must be >= 1");
  std::vector<Ray> rays;
  for (std::size_t k = 1; k <= n; ++k) {
    Vec v(n, 0);
    v[k - 1] = 1;
    rays.push_back({"sigma_" + std::to_string(k), v});
  }
  rays.push_back({"tau", Vec(n, -1)});
  std::set<Cone> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.insert(c);
  }
  return StackyFan(n, std::move(rays), std::move(cones));
}

struct ConeLocation {
  Cone cone;                          // rays of the minimal cone, sorted
  std::vector<Rational> coefficients;  // positive, aligned with `cone`
};

/// The unique cone whose relative interior contains v.
/// Throws std::domain_error when v lies outside the support.
inline ConeLocation minimal_cone(const StackyFan& fan, const Vec& v) {
  if (v.size() != fan.dim()) throw std::invalid_argument("minimal_cone: wrong dimension");
  if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }))
    throw std::invalid_argument("minimal_cone: zero vector");
  std::vector<Rational> rhs(v.begin(), v.end());
  for (const auto& c : fan.max_cones()) {
    auto sol = rational_solve(fan.cone_matrix(c), rhs);
    if (sol.status != SolveStatus::Unique) continue;
    if (std::any_of(sol.x.begin(), sol.x.end(), [](const Rational& x) { return x < 0; })) continue;
    ConeLocation loc;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (sol.x[j] > 0) {
        loc.cone.push_back(c[j]);
        loc.coefficients.push_back(sol.x[j]);
      }
    return loc;
  }
  throw std::domain_error("minimal_cone: vector lies outside the support of the fan");
}

/// Star subdivision at the primitive vector v. A vector that is already a ray
/// leaves the fan unchanged.
inline StackyFan star_subdivide(const StackyFan& fan, const Vec& v, const std::string& label) {
  if (!is_primitive(v)) throw std::invalid_argument("star_subdivide: vector is not primitive");
  if (fan.ray_index(v)) return fan;
  const ConeLocation loc = minimal_cone(fan, v);
  std::vector<Ray> rays = fan.rays();
  const std::size_t fresh = rays.size();
  rays.push_back({label, v});
  std::set<Cone> cones;
  for (const auto& c : fan.max_cones()) {
    if (!std::includes(c.begin(), c.end(), loc.cone.begin(), loc.cone.end())) {
      cones.insert(c);
      continue;
    }
    for (auto dropped : loc.cone) {
      Cone nc;
      for (auto i : c)
        if (i != dropped) nc.push_back(i);
      nc.push_back(fresh);
      std::sort(nc.begin(), nc.end());
      cones.insert(std::move(nc));
    }
  }
  return StackyFan(fan.dim(), std::move(rays), std::move(cones));
}

/// Weighted blow-up along the stratum of `cone_rays`: star subdivision at
/// sum_k w_k v_k. The weighted sum must already be primitive.
inline StackyFan insert_weighted_ray(const StackyFan& fan, const Cone& cone_rays,
                                     const std::vector<long>& weights, const std::string& label) {
  if (cone_rays.size() != weights.size()) throw std::invalid_argument("insert_weighted_ray: weight count mismatch");
  Cone sorted = cone_rays;
  std::sort(sorted.begin(), sorted.end());
  if (!fan.is_cone(sorted)) throw std::invalid_argument("insert_weighted_ray: rays do not span a cone of the fan");
  Vec v(fan.dim(), 0);
  for (std::size_t k = 0; k < cone_rays.size(); ++k) {
    if (weights[k] < 1) throw std::invalid_argument("insert_weighted_ray: weights must be positive");
    const auto& r = fan.rays().at(cone_rays[k]).vector;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += weights[k] * r[i];
  }
  if (!is_primitive(v)) throw std::invalid_argument("insert_weighted_ray: weighted sum is not primitive");
  return star_subdivide(fan, v, label);
}

/// Number of cones in each dimension 0..n.
inline std::vector<std::size_t> cone_census(const StackyFan& fan) {
  std::vector<std::size_t> counts(fan.dim() + 1, 0);
  for (const auto& c : fan.all_cones()) ++counts[c.size()];
  return counts;
}

struct FanReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Checks simpliciality, completeness and the fan property.
///
/// Every maximal cone must have full rank; every facet must be shared by exactly
/// two maximal cones lying on opposite sides of it; and for every cone s and
/// maximal cone C, the sum of the generators of s lies in C exactly when s is a
/// face of C (the intersection-is-a-face test, run over all pairs).
inline FanReport validate_fan(const StackyFan& fan, bool exhaustive = true) {
  FanReport rep;
  const std::size_t n = fan.dim();
  std::map<Cone, IntMatrix> matrices;
  for (const auto& c : fan.max_cones()) {
    IntMatrix m = fan.cone_matrix(c);
    if (determinant(m) == 0) {
      std::ostringstream os;
      os << "cone {";
      for (auto& l : fan.labels_of(c)) os << ' ' << l;
      os << " } is not full-dimensional";
      rep.problems.push_back(os.str());
    }
    matrices.emplace(c, std::move(m));
  }
  if (!rep.ok()) return rep;

  std::map<Cone, std::vector<std::pair<Cone, std::size_t>>> facets;  // facet -> (cone, opposite ray)
  for (const auto& c : fan.max_cones())
    for (std::size_t skip = 0; skip < c.size(); ++skip) {
      Cone f;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (j != skip) f.push_back(c[j]);
      facets[f].emplace_back(c, c[skip]);
    }
  for (const auto& [f, owners] : facets) {
    if (owners.size() != 2) {
      rep.problems.push_back("facet shared by " + std::to_string(owners.size()) + " maximal cones");
      continue;
    }
    // Opposite rays must lie on opposite sides of the facet hyperplane.
    IntMatrix m(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = fan.rays()[f[j]].vector[i];
    auto side = [&](std::size_t ray) {
      for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = fan.rays()[ray].vector[i];
      return sgn(determinant(m));
    };
    if (side(owners[0].second) * side(owners[1].second) >= 0)
      rep.problems.push_back("facet neighbours lie on the same side");
  }
  if (!rep.ok() || !exhaustive) return rep;

  for (const auto& s : fan.all_cones()) {
    if (s.empty()) continue;
    std::vector<Rational> point(n, Rational(0));
    for (auto i : s)
      for (std::size_t k = 0; k < n; ++k) point[k] += fan.rays()[i].vector[k];
    for (const auto& [c, m] : matrices) {
      auto sol = rational_solve(m, point);
      bool inside = std::all_of(sol.x.begin(), sol.x.end(), [](const Rational& x) { return x >= 0; });
      bool face = std::includes(c.begin(), c.end(), s.begin(), s.end());
      if (inside != face) {
        rep.problems.push_back("cones intersect outside a common face");
        return rep;
      }
    }
  }
  return rep;
}

/// Class of the toric stack in the Grothendieck ring: sum over cones of (L - 1)^(n - dim).
inline MultiPoly fan_motive(const StackyFan& fan, const std::string& lefschetz = "L") {
  auto rep = validate_fan(fan, false);
  if (!rep.ok()) throw std::domain_error("fan_motive: fan is not complete: " + rep.problems.front());
  const MultiPoly torus = MultiPoly::variable(lefschetz) - MultiPoly(1);
  std::vector<MultiPoly> powers{MultiPoly(1)};
  while (powers.size() <= fan.dim()) powers.push_back(powers.back() * torus);
  MultiPoly total;
  auto census = cone_census(fan);
  for (std::size_t d = 0; d <= fan.dim(); ++d) total += MultiPoly(static_cast<long>(census[d])) * powers[fan.dim() - d];
  return total;
}

/// Canonical form for comparing fans independent of ray order and labels.
inline std::set<std::set<Vec>> cone_vectors(const StackyFan& fan) {
  std::set<std::set<Vec>> out;
  for (const auto& c : fan.max_cones()) {
    std::set<Vec> s;
    for (auto i : c) s.insert(fan.rays()[i].vector);
    out.insert(std::move(s));
  }
  return out;
}

inline bool same_fan(const StackyFan& a, const StackyFan& b) {
  return a.dim() == b.dim() && cone_vectors(a) == cone_vectors(b);
}

}  // namespace loghilb::fan
