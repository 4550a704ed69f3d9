// Dense power series in t truncated at a fixed order, with MultiPoly coefficients.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "loghilb/exact/multipoly.hpp"

namespace loghilb {

class TruncSeries {
 public:
  explicit TruncSeries(unsigned order = 0) : coeffs_(order + 1) {}

  TruncSeries(unsigned order, std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  static TruncSeries constant(const MultiPoly& c, unsigned order) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// Reads a polynomial in `var` as a series, dropping powers above `order`.
  static TruncSeries from_polynomial(const MultiPoly& p, unsigned order,
                                     const std::string& var = "t") {
    auto parts = p.coefficients_in(var);
    if (parts.size() > order + 1) parts.resize(order + 1);
    return TruncSeries(order, std::move(parts));
  }

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  const MultiPoly& operator[](unsigned k) const { return coeffs_.at(k); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    TruncSeries r(a.order());
    for (unsigned k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    TruncSeries r(a.order());
    for (unsigned k = 0; k <= a.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_orders(a, b);
    const unsigned n = a.order();
    TruncSeries r(n);
    for (unsigned i = 0; i <= n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (unsigned j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  /// Multiplicative inverse; the constant coefficient must be +1 or -1.
  TruncSeries inverse() const {
    const MultiPoly& c0 = coeffs_[0];
    if (!c0.is_constant() || (c0.constant_term() != 1 && c0.constant_term() != -1))
      throw std::domain_error("TruncSeries::inverse: constant term is not a unit");
    const MultiPoly unit(c0.constant_term());  // its own inverse
    TruncSeries r(order());
    r.coeffs_[0] = unit;
    for (unsigned k = 1; k <= order(); ++k) {
      MultiPoly acc;
      for (unsigned j = 1; j <= k; ++j)
        if (!coeffs_[j].is_zero()) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -(unit * acc);
    }
    return r;
  }

  /// Integer power; negative exponents invert first.
  TruncSeries pow(int exp) const {
    TruncSeries base = exp < 0 ? inverse() : *this;
    unsigned e = static_cast<unsigned>(exp < 0 ? -exp : exp);
    TruncSeries result = constant(MultiPoly(1), order());
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  TruncSeries map(const std::map<std::string, MultiPoly>& subs) const {
    TruncSeries r(order());
    for (unsigned k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k].substitute(subs);
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<MultiPoly> coeffs_;

  static void check_orders(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("TruncSeries: order mismatch");
  }
};

/// Expands num/den to order N, where num and den are polynomials in `var`.
/// Throws std::domain_error when den(0) is not +1 or -1.
inline TruncSeries series_from_rational(const MultiPoly& num, const MultiPoly& den, unsigned order,
                                        const std::string& var = "t") {
  auto d = TruncSeries::from_polynomial(den, order, var);
  return TruncSeries::from_polynomial(num, order, var) * d.inverse();
}

}  // namespace loghilb
