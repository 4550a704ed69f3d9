// Cycle classes of boundary strata as monomials in the exceptional classes.
#pragma once

#include <stdexcept>

#include "loghilb/chow/keel.hpp"
#include "loghilb/motive/profile.hpp"

namespace loghilb::chow {

/// Product over markings r and j = 1..k_r of eps^{(r)}_{N_{r,j}}, where
/// N_{r,j} is the sum of the last j entries of nu_r.
inline MultiPoly stratum_cycle_class(const motive::StratumProfile& p, unsigned n) {
  p.validate();
  if (p.total() != n) throw std::invalid_argument("stratum_cycle_class: profile total differs from n");
  const auto markings = static_cast<unsigned>(p.markings());
  MultiPoly out(1);
  for (unsigned r = 1; r <= markings; ++r) {
    const auto& c = p.nu[r - 1];
    unsigned partial = 0;
    for (std::size_t j = c.size(); j-- > 0;) {
      partial += c[j];
      out *= MultiPoly::variable(epsilon_name(r, partial, markings));
    }
  }
  return out;
}

}  // namespace loghilb::chow
