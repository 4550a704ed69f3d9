// Zeta functions of curves, the generating series of [Hilb^n(C|D)], and the
// stratification sum that recomputes each coefficient independently.
#pragma once

#include <stdexcept>
#include <string>

#include "loghilb/exact/multipoly.hpp"
#include "loghilb/exact/series.hpp"
#include "loghilb/motive/profile.hpp"

namespace loghilb::motive {

struct ZetaMode {
  enum class Kind { MotivicP1, HodgeDeligne, Poincare, Euler };

  Kind kind = Kind::MotivicP1;
  unsigned genus = 0;

  /// Throws std::invalid_argument for MotivicP1 with positive genus.
  static ZetaMode make(Kind kind, unsigned genus) {
    if (kind == Kind::MotivicP1 && genus != 0) throw std::invalid_argument("motivic mode is only available for P^1");
    return {kind, genus};
  }
  static ZetaMode motivic_p1() { return {Kind::MotivicP1, 0}; }
  static ZetaMode hodge_deligne(unsigned g) { return {Kind::HodgeDeligne, g}; }
  static ZetaMode poincare(unsigned g) { return {Kind::Poincare, g}; }
  static ZetaMode euler(unsigned g) { return {Kind::Euler, g}; }

  /// Image of the Lefschetz class: L, uv, x^2 or 1.
  MultiPoly lefschetz() const {
    switch (kind) {
      case Kind::MotivicP1:
        return MultiPoly::variable("L");
      case Kind::HodgeDeligne:
        return MultiPoly::variable("u") * MultiPoly::variable("v");
      case Kind::Poincare:
        return MultiPoly::variable("x").pow(2);
      case Kind::Euler:
        return MultiPoly(1);
    }
    return MultiPoly(1);
  }

  std::string name() const {
    switch (kind) {
      case Kind::MotivicP1:
        return "motivic-p1";
      case Kind::HodgeDeligne:
        return "hodge-deligne";
      case Kind::Poincare:
        return "poincare";
      case Kind::Euler:
        return "euler";
    }
    return "?";
  }
};

/// Sends L to the mode's substitute; the identity on other variables.
inline MultiPoly specialize(const MultiPoly& motivic, const ZetaMode& target) {
  return motivic.substitute({{"L", target.lefschetz()}});
}

/// Z_C(t) to order N in the mode's coefficient ring.
inline TruncSeries zeta_series(const ZetaMode& mode, unsigned order) {
  if (mode.kind == ZetaMode::Kind::MotivicP1 && mode.genus != 0)
    throw std::invalid_argument("motivic mode is only available for P^1");
  const auto t = MultiPoly::variable("t");
  const MultiPoly one(1);
  const unsigned g = mode.genus;
  switch (mode.kind) {
    case ZetaMode::Kind::MotivicP1:
      return series_from_rational(one, (one - t) * (one - mode.lefschetz() * t), order);
    case ZetaMode::Kind::Euler:
      return TruncSeries::from_polynomial(one - t, order).pow(static_cast<int>(2 * g) - 2);
    case ZetaMode::Kind::HodgeDeligne: {
      const auto u = MultiPoly::variable("u");
      const auto v = MultiPoly::variable("v");
      return series_from_rational(((one - u * t) * (one - v * t)).pow(g), (one - t) * (one - u * v * t), order);
    }
    case ZetaMode::Kind::Poincare: {
      const auto x = MultiPoly::variable("x");
      return series_from_rational((one - x * t).pow(2 * g), (one - t) * (one - x * x * t), order);
    }
  }
  throw std::logic_error("unknown zeta mode");
}

/// Z_C(t) * ((1 - Lt)(1 - t) / (1 - (L+1)t))^l with L replaced by the mode's substitute.
inline TruncSeries closed_form(const ZetaMode& mode, unsigned markings, unsigned order) {
  const auto t = MultiPoly::variable("t");
  const MultiPoly one(1);
  const auto lf = mode.lefschetz();
  const auto factor = series_from_rational((one - lf * t) * (one - t), one - (lf + one) * t, order);
  return zeta_series(mode, order) * factor.pow(static_cast<int>(markings));
}

/// [Sym^m(C \ D)] for every m <= N: coefficients of Z_C(t) (1-t)^l.
inline TruncSeries punctured_symmetric_powers(const ZetaMode& mode, unsigned markings, unsigned order) {
  const auto t = MultiPoly::variable("t");
  return zeta_series(mode, order) * TruncSeries::from_polynomial(MultiPoly(1) - t, order).pow(static_cast<int>(markings));
}

/// Class of one stratum: [Sym^m(C \ D)] times L^(nu - 1) per bubble.
/// `punctured` must come from punctured_symmetric_powers for the same mode
/// and number of markings.
inline MultiPoly stratum_class(const StratumProfile& p, const ZetaMode& mode, const TruncSeries& punctured) {
  p.validate();
  if (p.m > punctured.order()) throw std::invalid_argument("stratum_class: series order too small");
  MultiPoly out = punctured[p.m];
  const auto lf = mode.lefschetz();
  for (const auto& c : p.nu)
    for (auto part : c) out *= lf.pow(part - 1);
  return out;
}

inline MultiPoly stratum_class(const StratumProfile& p, const ZetaMode& mode) {
  return stratum_class(p, mode, punctured_symmetric_powers(mode, static_cast<unsigned>(p.markings()), p.m));
}

/// Sum of stratum classes over all profiles for (n, l).
inline MultiPoly strata_sum(unsigned n, unsigned markings, const ZetaMode& mode) {
  const auto punctured = punctured_symmetric_powers(mode, markings, n);
  MultiPoly total;
  for (const auto& p : enumerate_profiles(n, markings)) total += stratum_class(p, mode, punctured);
  return total;
}

}  // namespace loghilb::motive
