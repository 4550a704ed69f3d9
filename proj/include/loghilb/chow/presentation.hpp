// Graded ring presentations and their integral graded pieces.
//
// Degree-k pieces are computed by listing every degree-k monomial and
// quotienting by every (relation x monomial) product of degree k. This is
// exact over Z and avoids Groebner bases; it is intended for small degrees.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loghilb/exact/lattice.hpp"
#include "loghilb/exact/multipoly.hpp"

namespace loghilb::chow {

/// Coefficient ring of a presentation.
struct BaseRing {
  enum class Kind { Integers, TruncatedHyperplane, SymbolicCurve };

  Kind kind = Kind::Integers;
  unsigned n = 0;  // TruncatedHyperplane: Z[H]/(H^(n+1))
  // SymbolicCurve: opaque degree-1 classes c_1(L_{p_r}) and kernel markers.
  std::vector<std::string> line_classes;
  std::vector<std::string> kernel_tokens;

  static constexpr const char* kHyperplane = "H";

  static BaseRing integers() { return {}; }

  static BaseRing truncated_hyperplane(unsigned n) {
    BaseRing b;
    b.kind = Kind::TruncatedHyperplane;
    b.n = n;
    return b;
  }

  /// Chow ring of Sym^n(C) for a curve of positive genus, kept opaque.
  static BaseRing symbolic_curve(unsigned n, unsigned markings) {
    BaseRing b;
    b.kind = Kind::SymbolicCurve;
    b.n = n;
    for (unsigned r = 1; r <= markings; ++r) {
      b.line_classes.push_back(line_class_name(r));
      for (unsigned m = 0; m < n; ++m) b.kernel_tokens.push_back(kernel_token_name(r, m, n));
    }
    return b;
  }

  static std::string line_class_name(unsigned r) { return "c1L_" + std::to_string(r); }
  /// Marker for the ideal ker(s_{m,n}^*) along the marking p_r.
  static std::string kernel_token_name(unsigned r, unsigned m, unsigned n) {
    return "ker_s" + std::to_string(r) + "_" + std::to_string(m) + "_" + std::to_string(n);
  }

  bool symbolic() const { return kind == Kind::SymbolicCurve; }

  /// Base variables with their degrees. Kernel markers carry degree 0.
  std::vector<std::pair<std::string, int>> variables() const {
    std::vector<std::pair<std::string, int>> out;
    if (kind == Kind::TruncatedHyperplane) out.emplace_back(kHyperplane, 1);
    for (const auto& c : line_classes) out.emplace_back(c, 1);
    for (const auto& k : kernel_tokens) out.emplace_back(k, 0);
    return out;
  }

  std::vector<MultiPoly> relations() const {
    if (kind == Kind::TruncatedHyperplane) return {MultiPoly::variable(kHyperplane).pow(n + 1)};
    return {};
  }

  std::string describe() const {
    switch (kind) {
      case Kind::Integers:
        return "Z";
      case Kind::TruncatedHyperplane:
        return "Z[H]/(H^" + std::to_string(n + 1) + ")";
      case Kind::SymbolicCurve:
        return "CH*(Sym^" + std::to_string(n) + "(C))";
    }
    return "?";
  }
};

struct Generator {
  std::string name;
  int degree = 1;
};

struct GradedPresentation {
  BaseRing base;
  std::vector<Generator> generators;
  std::vector<MultiPoly> relations;
  unsigned top_degree = 0;

  /// Degrees of every base variable and generator.
  std::map<std::string, int> degrees() const {
    std::map<std::string, int> d;
    for (const auto& [name, deg] : base.variables()) d[name] = deg;
    for (const auto& g : generators) d[g.name] = g.degree;
    return d;
  }

  std::vector<std::string> generator_names() const {
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.name);
    return out;
  }

  /// Base relations followed by the presentation's own relations.
  std::vector<MultiPoly> all_relations() const {
    auto out = base.relations();
    out.insert(out.end(), relations.begin(), relations.end());
    return out;
  }

  /// Throws std::invalid_argument on duplicate or clashing names, unknown
  /// variables, or inhomogeneous relations.
  void validate() const {
    std::set<std::string> base_names;
    for (const auto& [name, deg] : base.variables()) base_names.insert(name);
    std::set<std::string> seen;
    for (const auto& g : generators) {
      if (base_names.count(g.name)) throw std::invalid_argument("generator " + g.name + " clashes with a base variable");
      if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator " + g.name);
    }
    const auto deg = degrees();
    for (const auto& r : relations) {
      for (const auto& v : r.vars())
        if (!deg.count(v)) throw std::invalid_argument("relation uses unknown variable " + v);
      if (!r.is_homogeneous(deg)) throw std::invalid_argument("relation is not homogeneous: " + r.to_string());
    }
  }
};

struct GradedGroupEntry {
  unsigned degree = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  friend bool operator==(const GradedGroupEntry& a, const GradedGroupEntry& b) {
    return a.degree == b.degree && a.rank == b.rank && a.torsion == b.torsion;
  }
  std::string to_string() const {
    std::string s = "Z^" + std::to_string(rank);
    for (const auto& t : torsion) s += " + Z/" + t.get_str();
    return s;
  }
};

/// Degree-wise linear algebra for a non-symbolic presentation. Pieces are
/// built on first use and cached.
class GradedQuotient {
 public:
  explicit GradedQuotient(GradedPresentation pres) : pres_(std::move(pres)) {
    if (pres_.base.symbolic())
      throw std::logic_error("graded pieces are not computed for a symbolic base ring");
    pres_.validate();
    for (const auto& [name, deg] : pres_.degrees()) {
      if (deg <= 0) throw std::logic_error("graded pieces need positive variable degrees");
      vars_.push_back(name);
      weights_.push_back(deg);
    }
    for (const auto& r : pres_.all_relations()) relations_.push_back(encode(r));
    pieces_.resize(pres_.top_degree + 1);
  }

  const GradedPresentation& presentation() const { return pres_; }
  const std::vector<std::string>& variables() const { return vars_; }

  GradedGroupEntry group(unsigned k) const {
    const auto& p = piece(k);
    auto [rank, torsion] = p.lattice->quotient_structure();
    return {k, rank, std::move(torsion)};
  }

  std::vector<GradedGroupEntry> groups() const {
    std::vector<GradedGroupEntry> out;
    for (unsigned k = 0; k <= pres_.top_degree; ++k) out.push_back(group(k));
    return out;
  }

  /// Ideal membership, checked on each homogeneous component up to the top
  /// degree. Components above the top degree count as members.
  bool contains(const MultiPoly& f) const {
    std::map<unsigned, std::vector<std::pair<MultiPoly::Exponents, Integer>>> parts;
    for (const auto& [e, c] : encode(f)) parts[degree_of(e)].emplace_back(e, c);
    for (const auto& [k, terms] : parts) {
      if (k > pres_.top_degree) continue;
      const auto& p = piece(k);
      std::vector<Integer> v(p.monomials.size());
      for (const auto& [e, c] : terms) v[p.index.at(e)] += c;
      if (!p.lattice->contains(std::move(v))) return false;
    }
    return true;
  }

  /// Monomials of degree k, in the order used for coordinates.
  std::vector<MultiPoly::Exponents> monomials(unsigned k) const { return piece(k).monomials; }

  /// Coordinates of a degree-k homogeneous polynomial.
  std::vector<Integer> coordinates(const MultiPoly& f, unsigned k) const {
    const auto& p = piece(k);
    std::vector<Integer> v(p.monomials.size());
    for (const auto& [e, c] : encode(f)) {
      if (degree_of(e) != k) throw std::invalid_argument("coordinates: polynomial is not of degree k");
      v[p.index.at(e)] += c;
    }
    return v;
  }

  /// Lattice of relations in degree k.
  const LatticeEchelon& relations_in_degree(unsigned k) const { return *piece(k).lattice; }

 private:
  using Encoded = std::vector<std::pair<MultiPoly::Exponents, Integer>>;

  struct Piece {
    bool built = false;
    std::vector<MultiPoly::Exponents> monomials;
    std::map<MultiPoly::Exponents, std::size_t> index;
    std::unique_ptr<LatticeEchelon> lattice;
  };

  GradedPresentation pres_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  std::vector<Encoded> relations_;
  mutable std::vector<Piece> pieces_;

  Encoded encode(const MultiPoly& f) const {
    std::vector<std::size_t> pos(f.vars().size());
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
      auto it = std::lower_bound(vars_.begin(), vars_.end(), f.vars()[i]);
      if (it == vars_.end() || *it != f.vars()[i])
        throw std::invalid_argument("polynomial uses unknown variable " + f.vars()[i]);
      pos[i] = static_cast<std::size_t>(it - vars_.begin());
    }
    Encoded out;
    for (const auto& [e, c] : f.terms()) {
      MultiPoly::Exponents x(vars_.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) x[pos[i]] = e[i];
      out.emplace_back(std::move(x), c);
    }
    return out;
  }

  unsigned degree_of(const MultiPoly::Exponents& e) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * static_cast<unsigned>(weights_[i]);
    return d;
  }

  void enumerate(unsigned k, std::size_t var, MultiPoly::Exponents& cur,
                 std::vector<MultiPoly::Exponents>& out) const {
    if (var == vars_.size()) {
      if (k == 0) out.push_back(cur);
      return;
    }
    const auto w = static_cast<unsigned>(weights_[var]);
    for (unsigned e = 0; e * w <= k; ++e) {
      cur[var] = e;
      enumerate(k - e * w, var + 1, cur, out);
    }
    cur[var] = 0;
  }

  const Piece& piece(unsigned k) const {
    if (k > pres_.top_degree) throw std::out_of_range("degree above the top degree");
    Piece& p = pieces_[k];
    if (p.built) return p;
    MultiPoly::Exponents cur(vars_.size(), 0);
    enumerate(k, 0, cur, p.monomials);
    std::sort(p.monomials.begin(), p.monomials.end());
    for (std::size_t i = 0; i < p.monomials.size(); ++i) p.index.emplace(p.monomials[i], i);
    p.lattice = std::make_unique<LatticeEchelon>(p.monomials.size());
    for (const auto& rel : relations_) {
      if (rel.empty()) continue;
      const unsigned d = degree_of(rel.front().first);
      if (d > k) continue;
      std::vector<MultiPoly::Exponents> multipliers;
      MultiPoly::Exponents tmp(vars_.size(), 0);
      enumerate(k - d, 0, tmp, multipliers);
      for (const auto& m : multipliers) {
        std::vector<Integer> row(p.monomials.size());
        for (const auto& [e, c] : rel) {
          MultiPoly::Exponents x = e;
          for (std::size_t i = 0; i < x.size(); ++i) x[i] += m[i];
          row[p.index.at(x)] += c;
        }
        p.lattice->insert(std::move(row));
      }
    }
    p.built = true;
    return p;
  }
};

inline GradedGroupEntry graded_group(const GradedPresentation& pres, unsigned k) {
  return GradedQuotient(pres).group(k);
}

inline std::vector<GradedGroupEntry> graded_groups(const GradedPresentation& pres) {
  return GradedQuotient(pres).groups();
}

}  // namespace loghilb::chow
