// Sparse multivariate polynomials with arbitrary-precision integer coefficients.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loghilb/exact/integer.hpp"

namespace loghilb {

/// A polynomial over a named, alphabetically sorted variable list.
///
/// The stored form is canonical: variables that do not occur in any term are
/// dropped, and no stored coefficient is zero. Two polynomials are therefore
/// equal exactly when their variable lists and term maps are equal.
/// Binary operations merge variable lists by name.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Integer>;

  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& c) {                 // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Exponents{}, c);
  }

  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Integer(1));
    return p;
  }

  /// Builds c * prod name^exp from a name -> exponent map.
  static MultiPoly monomial(const Integer& c, const std::map<std::string, unsigned>& powers) {
    MultiPoly p;
    if (c == 0) return p;
    Exponents e;
    for (const auto& [name, exp] : powers) {
      p.vars_.push_back(name);
      e.push_back(exp);
    }
    p.terms_.emplace(std::move(e), c);
    p.normalize();
    return p;
  }

  /// Builds a polynomial from raw parts; vars must be sorted and unique.
  static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms) {
    if (!std::is_sorted(vars.begin(), vars.end()) ||
        std::adjacent_find(vars.begin(), vars.end()) != vars.end())
      throw std::invalid_argument("MultiPoly: variable list must be sorted and unique");
    for (const auto& [e, c] : terms)
      if (e.size() != vars.size())
        throw std::invalid_argument("MultiPoly: exponent length does not match variables");
    MultiPoly p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && vars_.empty());
  }
  Integer constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Weighted total degree; unlisted variables have weight 1. Zero has degree -1.
  int degree(const std::map<std::string, int>& weights = {}) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, term_degree(e, weights));
    return best;
  }

  unsigned degree_in(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) return 0;
    unsigned best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[*idx]);
    return best;
  }

  bool is_homogeneous(const std::map<std::string, int>& weights = {}) const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
      int td = term_degree(e, weights);
      if (d == -2) d = td;
      else if (td != d) return false;
    }
    return true;
  }

  /// Coefficient of the monomial prod name^exp (absent names have exponent 0).
  Integer coefficient(const std::map<std::string, unsigned>& powers) const {
    Exponents e(vars_.size(), 0);
    for (const auto& [name, exp] : powers) {
      auto idx = index_of(name);
      if (!idx) {
        if (exp != 0) return 0;
        continue;
      }
      e[*idx] = exp;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Collects powers of one variable: result[k] is the coefficient of name^k.
  std::vector<MultiPoly> coefficients_in(const std::string& name) const {
    std::vector<MultiPoly> out(degree_in(name) + 1);
    auto idx = index_of(name);
    if (!idx) {
      out[0] = *this;
      return out;
    }
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<long>(*idx));
    std::vector<TermMap> buckets(out.size());
    for (const auto& [e, c] : terms_) {
      Exponents r = e;
      r.erase(r.begin() + static_cast<long>(*idx));
      buckets[e[*idx]].emplace(std::move(r), c);
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = from_terms(rest, std::move(buckets[k]));
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, 1); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, -1); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    auto vars = merged_vars(a.vars_, b.vars_);
    auto ma = a.index_map(vars);
    auto mb = b.index_map(vars);
    TermMap out;
    for (const auto& [ea, ca] : a.terms_) {
      Exponents base(vars.size(), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) base[ma[i]] += ea[i];
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = base;
        for (std::size_t i = 0; i < eb.size(); ++i) e[mb[i]] += eb[i];
        auto [it, inserted] = out.try_emplace(std::move(e), 0);
        it->second += ca * cb;
      }
    }
    MultiPoly r;
    r.vars_ = std::move(vars);
    r.terms_ = std::move(out);
    r.normalize();
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned exp) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (exp != 0) {
      if (exp & 1U) result *= base;
      exp >>= 1U;
      if (exp != 0) base *= base;
    }
    return result;
  }

  /// Substitutes polynomials for variables. Variables without an entry are kept.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& subs) const {
    std::vector<const MultiPoly*> images(vars_.size(), nullptr);
    std::vector<MultiPoly> identity(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = subs.find(vars_[i]);
      if (it != subs.end()) {
        images[i] = &it->second;
      } else {
        identity[i] = variable(vars_[i]);
        images[i] = &identity[i];
      }
    }
    // Cache powers per variable.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
      auto& cache = powers[i];
      if (cache.empty()) cache.emplace_back(1);
      while (cache.size() <= k) cache.push_back(cache.back() * *images[i]);
      return cache[k];
    };
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
      MultiPoly term(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) term *= power_of(i, e[i]);
      out += term;
    }
    return out;
  }

  /// Renames variables; the result is re-canonicalized.
  MultiPoly rename(const std::map<std::string, std::string>& names) const {
    std::map<std::string, MultiPoly> subs;
    for (const auto& [from, to] : names) subs.emplace(from, variable(to));
    return substitute(subs);
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Canonical text form, e.g. "2*t^2 + 3*c*t + c^2". Terms are listed in
  /// descending graded-lex order over the sorted variable list.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
      unsigned dx = std::accumulate(x->first.begin(), x->first.end(), 0U);
      unsigned dy = std::accumulate(y->first.begin(), y->first.end(), 0U);
      if (dx != dy) return dx > dy;
      return x->first > y->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
      const auto& [e, c] = *t;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool wrote = false;
      if (mag != 1) {
        os << mag.get_str();
        wrote = true;
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << '*';
        os << vars_[i];
        if (e[i] > 1) os << '^' << e[i];
        wrote = true;
      }
      if (!wrote) os << '1';
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  int term_degree(const Exponents& e, const std::map<std::string, int>& weights) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = weights.find(vars_[i]);
      d += static_cast<int>(e[i]) * (it == weights.end() ? 1 : it->second);
    }
    return d;
  }

  static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  // Position of each own variable inside a superset list.
  std::vector<std::size_t> index_map(const std::vector<std::string>& superset) const {
    std::vector<std::size_t> m(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      m[i] = static_cast<std::size_t>(
          std::lower_bound(superset.begin(), superset.end(), vars_[i]) - superset.begin());
    return m;
  }

  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, int sign) {
    auto vars = merged_vars(a.vars_, b.vars_);
    auto ma = a.index_map(vars);
    auto mb = b.index_map(vars);
    TermMap out;
    auto add = [&](const MultiPoly& p, const std::vector<std::size_t>& m, int s) {
      for (const auto& [e, c] : p.terms_) {
        Exponents x(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) x[m[i]] = e[i];
        auto [it, inserted] = out.try_emplace(std::move(x), 0);
        if (s > 0) it->second += c;
        else it->second -= c;
      }
    };
    add(a, ma, 1);
    add(b, mb, sign);
    MultiPoly r;
    r.vars_ = std::move(vars);
    r.terms_ = std::move(out);
    r.normalize();
    return r;
  }

  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0) it = terms_.erase(it);
      else ++it;
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) kept.push_back(vars_[i]);
    TermMap reduced;
    for (auto& [e, c] : terms_) {
      Exponents r;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (used[i]) r.push_back(e[i]);
      reduced.emplace(std::move(r), std::move(c));
    }
    vars_ = std::move(kept);
    terms_ = std::move(reduced);
  }
};

}  // namespace loghilb
