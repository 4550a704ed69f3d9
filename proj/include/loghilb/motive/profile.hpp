// Boundary strata of Hilb^n(C|D): an interior length m and, for each marked
// point, the ordered lengths of support on its chain of bubbles.
#pragma once

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace loghilb::motive {

using Composition = std::vector<unsigned>;

struct StratumProfile {
  unsigned m = 0;
  std::vector<Composition> nu;  // one composition per marking

  std::size_t markings() const { return nu.size(); }

  unsigned total() const {
    unsigned s = m;
    for (const auto& c : nu) s = std::accumulate(c.begin(), c.end(), s);
    return s;
  }

  /// Number of bubbles, which is the codimension of the stratum.
  unsigned codimension() const {
    unsigned k = 0;
    for (const auto& c : nu) k += static_cast<unsigned>(c.size());
    return k;
  }

  void validate() const {
    for (const auto& c : nu)
      for (auto x : c)
        if (x == 0) throw std::invalid_argument("stratum profile: composition entries must be >= 1");
  }

  /// "m;(a,b);();(c)"
  std::string to_string() const {
    std::string s = std::to_string(m);
    for (const auto& c : nu) {
      s += ";(";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
      s += ")";
    }
    return s;
  }

  friend bool operator==(const StratumProfile& a, const StratumProfile& b) { return a.m == b.m && a.nu == b.nu; }
};

/// Parses the "m;(a,b);();(c)" syntax. Whitespace is ignored.
inline StratumProfile parse_profile(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() -> StratumProfile { throw std::invalid_argument("malformed stratum profile: " + text); };
  auto read_uint = [&](const std::string& tok) -> unsigned {
    if (tok.empty() || tok.size() > 9) fail();
    for (char ch : tok)
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    return static_cast<unsigned>(std::stoul(tok));
  };
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find(';', start)) != std::string::npos; start = pos + 1)
    parts.push_back(s.substr(start, pos - start));
  parts.push_back(s.substr(start));

  StratumProfile p;
  p.m = read_uint(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& part = parts[i];
    if (part.size() < 2 || part.front() != '(' || part.back() != ')') return fail();
    const std::string body = part.substr(1, part.size() - 2);
    Composition c;
    if (!body.empty()) {
      std::size_t b = 0;
      for (std::size_t pos; (pos = body.find(',', b)) != std::string::npos; b = pos + 1)
        c.push_back(read_uint(body.substr(b, pos - b)));
      c.push_back(read_uint(body.substr(b)));
    }
    p.nu.push_back(std::move(c));
  }
  p.validate();
  return p;
}

/// Compositions of `total`, shorter ones first and lexicographic within a length.
inline std::vector<Composition> compositions(unsigned total) {
  std::vector<Composition> out;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  for (unsigned len = 1; len <= total; ++len) {
    Composition cur;
    auto rec = [&](auto&& self, unsigned remaining, unsigned slots) -> void {
      if (slots == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
      }
      for (unsigned first = 1; first + (slots - 1) <= remaining; ++first) {
        cur.push_back(first);
        self(self, remaining - first, slots - 1);
        cur.pop_back();
      }
    };
    rec(rec, total, len);
  }
  return out;
}

/// All profiles with m + sum |nu_i| = n. Order: m descending, then per-marking
/// totals in descending lexicographic order, then compositions as above.
inline std::vector<StratumProfile> enumerate_profiles(unsigned n, unsigned markings) {
  if (markings < 1) throw std::invalid_argument("enumerate_profiles: need at least one marking");
  std::vector<std::vector<Composition>> by_total(n + 1);
  for (unsigned s = 0; s <= n; ++s) by_total[s] = compositions(s);

  std::vector<StratumProfile> out;
  for (unsigned m = n + 1; m-- > 0;) {
    std::vector<unsigned> totals(markings, 0);
    auto split = [&](auto&& self, unsigned idx, unsigned remaining) -> void {
      if (idx + 1 == markings) {
        totals[idx] = remaining;
        StratumProfile p{m, std::vector<Composition>(markings)};
        auto fill = [&](auto&& inner, unsigned r) -> void {
          if (r == markings) {
            out.push_back(p);
            return;
          }
          for (const auto& c : by_total[totals[r]]) {
            p.nu[r] = c;
            inner(inner, r + 1);
          }
        };
        fill(fill, 0);
        return;
      }
      for (unsigned t = remaining + 1; t-- > 0;) {
        totals[idx] = t;
        self(self, idx + 1, remaining - t);
      }
    };
    split(split, 0, n - m);
  }
  return out;
}

/// Per-bubble bounds on the cyclic stabilizer orders: the entries of each nu_i.
inline std::vector<unsigned> stabilizer_bounds(const StratumProfile& p) {
  std::vector<unsigned> out;
  for (const auto& c : p.nu) out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace loghilb::motive
