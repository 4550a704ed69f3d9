// Command-line front end: fan, chow {sr|thmD|keel|compare}, motive, strata.
//
// Exit codes: 0 success, 1 internal error, 2 invalid parameters, 3 a check
// run by the command failed.
#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <utility>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loghilb/chow/compare.hpp"
#include "loghilb/chow/cycle_class.hpp"
#include "loghilb/chow/keel.hpp"
#include "loghilb/chow/stanley_reisner.hpp"
#include "loghilb/cli/json_export.hpp"
#include "loghilb/fan/hilb_fan.hpp"
#include "loghilb/motive/series.hpp"

namespace loghilb::cli {

enum ExitCode : int { kOk = 0, kInternalError = 1, kInvalidParams = 2, kCheckFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Size limits on n. LOGHILB_MAX_N replaces all three; --force lifts them.
struct Caps {
  unsigned motive = 12;
  unsigned fan = 6;
  unsigned groups = 4;

  static Caps from_environment() {
    Caps c;
    if (const char* env = std::getenv("LOGHILB_MAX_N")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end == env || *end != '\0') throw UsageError("LOGHILB_MAX_N must be a non-negative integer");
      c.motive = c.fan = c.groups = static_cast<unsigned>(v);
    }
    return c;
  }
};

/// A command's output in every format, plus its exit code.
struct Result {
  io::Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string text;
  int exit_code = kOk;
};

namespace detail {

inline void check_cap(const char* what, unsigned value, unsigned cap, bool force) {
  if (!force && value > cap)
    throw UsageError(std::string(what) + " = " + std::to_string(value) + " exceeds the limit " + std::to_string(cap) +
                     " (use --force or LOGHILB_MAX_N)");
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string render_csv(const Result& r) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\n";
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
  return os.str();
}

inline std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << s << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

inline io::Json check_json(const std::string& name, bool passed, const std::string& detail) {
  return {{"name", name}, {"passed", passed}, {"detail", detail}};
}

inline std::vector<unsigned> parse_levels(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("levels must be a comma-separated list of non-negative integers: " + text);
    out.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  if (out.empty()) throw UsageError("empty level list");
  return out;
}

inline std::string groups_text(const std::vector<chow::GradedGroupEntry>& groups) {
  std::ostringstream os;
  for (const auto& g : groups) os << "  CH^" << g.degree << " = " << g.to_string() << "\n";
  return os.str();
}

inline std::vector<std::string> group_row(const chow::GradedGroupEntry& g) {
  std::vector<std::string> t;
  for (const auto& x : g.torsion) t.push_back(x.get_str());
  return {std::to_string(g.degree), std::to_string(g.rank), join(t, " ")};
}

inline std::string presentation_text(const chow::GradedPresentation& p) {
  std::ostringstream os;
  os << "base: " << p.base.describe() << "\n";
  os << "generators: " << join(p.generator_names(), ", ") << "\n";
  os << "relations:\n";
  for (const auto& r : p.relations) os << "  " << r.to_string() << "\n";
  return os.str();
}

}  // namespace detail

// ---------------------------------------------------------------- fan

struct FanArgs {
  unsigned n = 0;
  unsigned i = 1;
  std::optional<unsigned> i_inf;
  std::string markings = "0";
  bool census_only = false;
};

inline Result cmd_fan(const FanArgs& a, const Caps& caps, bool force) {
  if (a.n < 1) throw UsageError("--n must be >= 1");
  detail::check_cap("n", a.n, caps.fan, force);
  if (a.markings != "0" && a.markings != "0+inf") throw UsageError("--markings must be 0 or 0+inf");
  const unsigned i_inf = a.i_inf.value_or(a.i);
  if (a.i < 1 || a.i > a.n || i_inf < 1 || i_inf > a.n) throw UsageError("levels must satisfy 1 <= i <= n");
  if (a.markings == "0" && a.i_inf) throw UsageError("--i-inf needs --markings 0+inf");

  const bool two = a.markings == "0+inf";
  const auto f = two ? fan::hilb_fan_two_markings(a.n, a.i, i_inf) : fan::hilb_fan(a.n, a.i);
  const auto report = fan::validate_fan(f);
  const auto census = fan::cone_census(f);

  Result r;
  io::Json checks = io::Json::array();
  bool all_ok = report.ok();
  checks.push_back(detail::check_json("fan_valid", report.ok(), report.ok() ? "complete simplicial fan" : report.problems.front()));
  std::string motive = "unavailable";
  if (report.ok()) {
    const auto m = fan::fan_motive(f);
    motive = m.to_string();
    // At the lowest level the fan's motive is the coefficient of the generating series.
    if (a.i == 1 && (!two || i_inf == 1)) {
      const unsigned ell = two ? 2 : 1;
      const auto expected = motive::closed_form(motive::ZetaMode::motivic_p1(), ell, a.n)[a.n];
      const bool ok = m == expected;
      all_ok = all_ok && ok;
      checks.push_back(detail::check_json("motive_matches_series", ok, "expected " + expected.to_string()));
      const auto euler = motive::closed_form(motive::ZetaMode::euler(0), ell, a.n)[a.n];
      const bool ok_euler = euler == MultiPoly(static_cast<long>(census.back()));
      all_ok = all_ok && ok_euler;
      checks.push_back(detail::check_json("max_cones_match_euler_characteristic", ok_euler,
                                          "expected " + euler.to_string() + ", found " + std::to_string(census.back())));
    }
  }

  io::Json levels = two ? io::Json::array({a.i, i_inf}) : io::Json::array({a.i});
  r.json = {{"schema_version", io::kSchemaVersion}, {"command", "fan"},  {"n", a.n},
            {"markings", a.markings},               {"levels", levels},  {"fan", io::fan_json(f)},
            {"motive", motive},                     {"checks", checks}};

  r.header = {"dimension", "cones"};
  for (std::size_t k = 0; k < census.size(); ++k) r.rows.push_back({std::to_string(k), std::to_string(census[k])});

  std::ostringstream os;
  if (!a.census_only) {
    os << "rays:\n";
    for (const auto& ray : f.rays()) {
      std::vector<std::string> coords;
      for (long x : ray.vector) coords.push_back(std::to_string(x));
      os << "  " << ray.label << " = (" << detail::join(coords, ",") << ")\n";
    }
    os << "maximal cones: " << f.max_cones().size() << "\n";
  }
  os << detail::render_table(r.header, r.rows);
  if (!a.census_only) {
    os << "motive: " << motive << "\n";
    for (const auto& c : checks)
      os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ": "
         << c["detail"].get<std::string>() << "\n";
  }
  r.text = os.str();
  r.exit_code = all_ok ? kOk : kCheckFailed;
  return r;
}

// ---------------------------------------------------------------- chow

struct ChowArgs {
  std::string sub;  // sr | thmD | keel | compare
  unsigned n = 0;
  std::string levels = "1";
  std::optional<unsigned> ell;
  std::string curve = "p1";
  std::string markings = "0";
  std::string sign = "exceptional";
  bool groups = false;
  bool compare_sr = false;
  bool search = false;
};

namespace detail {

inline chow::GeneratorMap candidate_map(const chow::GradedPresentation& p) {
  chow::GeneratorMap m;
  m[chow::BaseRing::kHyperplane] = MultiPoly::variable("tau");
  for (const auto& g : p.generators) m[g.name] = MultiPoly::variable(fan::zero_label(std::stoul(g.name.substr(4))));
  return m;
}

// Compares a single-marking P^1 presentation with the SR ring of hilb_fan(n, i).
inline io::Json compare_with_sr(const chow::GradedPresentation& p, unsigned n, unsigned i, bool search, bool& passed) {
  const auto sr = chow::sr_presentation(fan::hilb_fan(n, i));
  const auto map = candidate_map(p);
  const auto rep = chow::compare_presentations(p, sr, map);
  io::Json out = {{"against", "sr"}, {"candidate", io::comparison_json(rep, map)}};
  passed = rep.ok();
  if (!passed && search) {
    const auto found = chow::search_generator_map(p, sr, static_cast<long>(n));
    if (found) {
      const auto rep2 = chow::compare_presentations(p, sr, *found);
      out["search"] = io::comparison_json(rep2, *found);
      passed = rep2.ok();
    } else {
      out["search"] = nullptr;
    }
  }
  out["passed"] = passed;
  return out;
}

}  // namespace detail

inline Result cmd_chow(const ChowArgs& a, const Caps& caps, bool force) {
  if (a.n < 1) throw UsageError("--n must be >= 1");
  if (a.curve != "p1" && a.curve != "symbolic") throw UsageError("--curve must be p1 or symbolic");
  if (a.sign != "exceptional" && a.sign != "as-printed") throw UsageError("--sign must be exceptional or as-printed");
  auto levels = detail::parse_levels(a.levels);
  if (a.ell) {
    if (*a.ell < 1) throw UsageError("--ell must be >= 1");
    if (levels.size() == 1) levels.assign(*a.ell, levels.front());
    else if (levels.size() != *a.ell) throw UsageError("--ell disagrees with the number of levels");
  }
  for (auto i : levels)
    if (i > a.n) throw UsageError("levels must satisfy 0 <= i <= n");
  const bool symbolic = a.curve == "symbolic";
  const auto sign = a.sign == "exceptional" ? chow::SlotSign::Exceptional : chow::SlotSign::AsPrinted;
  const bool wants_groups = a.groups || a.compare_sr || a.sub == "compare" || a.sub == "keel";
  if (symbolic && (a.sub == "sr" || wants_groups))
    throw UsageError("the symbolic curve mode emits relations only");
  if (wants_groups) detail::check_cap("n", a.n, caps.groups, force);
  else detail::check_cap("n", a.n, caps.fan, force);

  Result r;
  r.json = {{"schema_version", io::kSchemaVersion}, {"command", "chow"}, {"subcommand", a.sub}, {"n", a.n},
            {"levels", levels}, {"curve", a.curve}};
  std::ostringstream text;
  bool all_ok = true;
  chow::GradedPresentation pres;

  if (a.sub == "sr") {
    if (a.markings == "0") {
      if (levels.size() != 1) throw UsageError("--markings 0 takes a single level");
      pres = chow::sr_presentation(fan::hilb_fan(a.n, levels.front()));
    } else if (a.markings == "0+inf") {
      if (levels.size() == 1) levels.assign(2, levels.front());
      if (levels.size() != 2) throw UsageError("--markings 0+inf takes two levels");
      pres = chow::sr_presentation(fan::hilb_fan_two_markings(a.n, levels[0], levels[1]));
      r.json["levels"] = levels;
    } else {
      throw UsageError("--markings must be 0 or 0+inf");
    }
    r.json["markings"] = a.markings;
  } else {
    const auto base = symbolic ? chow::BaseRing::symbolic_curve(a.n, static_cast<unsigned>(levels.size()))
                               : chow::BaseRing::truncated_hyperplane(a.n);
    if (a.sub == "thmD") {
      pres = chow::thmD_presentation(a.n, levels, base, sign);
    } else if (a.sub == "keel" || a.sub == "compare") {
      if (levels.size() != 1) throw UsageError(a.sub + " supports a single marking");
      pres = a.sub == "keel" ? chow::iterated_keel(a.n, levels, base, sign)
                             : chow::thmD_presentation(a.n, levels, base, sign);
    } else {
      throw UsageError("unknown chow subcommand " + a.sub);
    }
    r.json["sign"] = a.sign;
  }
  r.json["presentation"] = io::presentation_json(pres);
  text << detail::presentation_text(pres);

  if (a.sub == "keel") {
    // The iterated construction must cut out the same ideal as the closed form.
    const auto closed = chow::thmD_presentation(a.n, levels, chow::BaseRing::truncated_hyperplane(a.n), sign);
    const chow::GradedQuotient qk(pres), qt(closed);
    bool same = true;
    for (const auto& rel : closed.relations) same = same && qk.contains(rel);
    for (const auto& rel : pres.relations) same = same && qt.contains(rel);
    all_ok = all_ok && same;
    r.json["matches_thmD"] = same;
    text << (same ? "PASS" : "FAIL") << " ideal equals the closed-form presentation\n";
  }

  if (a.groups || a.compare_sr || a.sub == "compare") {
    const auto groups = chow::graded_groups(pres);
    r.json["groups"] = io::groups_json(groups);
    text << "groups:\n" << detail::groups_text(groups);
    r.header = {"degree", "rank", "torsion"};
    for (const auto& g : groups) r.rows.push_back(detail::group_row(g));
  }
  if (r.header.empty()) {
    r.header = {"relation"};
    for (const auto& rel : pres.relations) r.rows.push_back({rel.to_string()});
  }

  if (a.sub == "compare" || a.compare_sr) {
    if (a.sub == "sr") throw UsageError("--compare-sr applies to thmD and keel");
    if (levels.size() != 1) throw UsageError("comparison with the toric presentation needs a single marking");
    bool passed = false;
    const unsigned i = std::max(levels.front(), 1U);
    r.json["comparison"] = detail::compare_with_sr(pres, a.n, i, a.search, passed);
    all_ok = all_ok && passed;
    text << (passed ? "PASS" : "FAIL") << " comparison with the Stanley-Reisner presentation\n";
  }

  r.text = text.str();
  r.exit_code = all_ok ? kOk : kCheckFailed;
  return r;
}

// ---------------------------------------------------------------- motive

struct MotiveArgs {
  std::string mode = "motivic-p1";
  unsigned g = 0;
  unsigned ell = 1;
  unsigned order = 6;
};

inline motive::ZetaMode parse_mode(const std::string& name, unsigned g) {
  using K = motive::ZetaMode::Kind;
  K kind;
  if (name == "motivic-p1") kind = K::MotivicP1;
  else if (name == "hodge-deligne") kind = K::HodgeDeligne;
  else if (name == "poincare") kind = K::Poincare;
  else if (name == "euler") kind = K::Euler;
  else throw UsageError("unknown mode " + name);
  try {
    return motive::ZetaMode::make(kind, g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline Result cmd_motive(const MotiveArgs& a, const Caps& caps, bool force) {
  const auto mode = parse_mode(a.mode, a.g);
  if (a.ell < 1) throw UsageError("--ell must be >= 1");
  detail::check_cap("N", a.order, caps.motive, force);
  const auto series = motive::closed_form(mode, a.ell, a.order);
  Result r;
  r.header = {"n", "closed_form", "strata_sum", "verified"};
  io::Json rows = io::Json::array();
  bool all_ok = true;
  for (unsigned n = 0; n <= a.order; ++n) {
    const auto oracle = motive::strata_sum(n, a.ell, mode);
    const bool ok = oracle == series[n];
    all_ok = all_ok && ok;
    rows.push_back({{"n", n}, {"closed_form", series[n].to_string()}, {"strata_sum", oracle.to_string()}, {"verified", ok}});
    r.rows.push_back({std::to_string(n), series[n].to_string(), oracle.to_string(), ok ? "true" : "false"});
  }
  r.json = {{"schema_version", io::kSchemaVersion}, {"command", "motive"}, {"mode", mode.name()},
            {"g", a.g}, {"ell", a.ell}, {"N", a.order}, {"coefficients", rows}, {"verified", all_ok}};
  r.text = detail::render_table(r.header, r.rows);
  r.exit_code = all_ok ? kOk : kCheckFailed;
  return r;
}

// ---------------------------------------------------------------- strata

struct StrataArgs {
  unsigned n = 0;
  unsigned ell = 1;
  std::string profile;
  std::string mode = "motivic-p1";
  unsigned g = 0;
};

inline Result cmd_strata(const StrataArgs& a, const Caps& caps, bool force) {
  const auto mode = parse_mode(a.mode, a.g);
  if (a.ell < 1) throw UsageError("--ell must be >= 1");
  detail::check_cap("n", a.n, caps.motive, force);
  std::vector<motive::StratumProfile> profiles;
  if (!a.profile.empty()) {
    motive::StratumProfile p;
    try {
      p = motive::parse_profile(a.profile);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (p.markings() != a.ell) throw UsageError("profile has " + std::to_string(p.markings()) + " markings, --ell is " + std::to_string(a.ell));
    if (p.total() != a.n) throw UsageError("profile total " + std::to_string(p.total()) + " differs from --n");
    profiles.push_back(std::move(p));
  } else {
    profiles = motive::enumerate_profiles(a.n, a.ell);
  }
  const auto punctured = motive::punctured_symmetric_powers(mode, a.ell, a.n);
  Result r;
  r.header = {"profile", "class", "codimension", "cycle_class", "stabilizer_bounds"};
  io::Json rows = io::Json::array();
  MultiPoly total;
  for (const auto& p : profiles) {
    const auto cls = motive::stratum_class(p, mode, punctured);
    total += cls;
    const auto cycle = chow::stratum_cycle_class(p, a.n);
    const auto bounds = motive::stabilizer_bounds(p);
    std::vector<std::string> b;
    for (auto x : bounds) b.push_back(std::to_string(x));
    rows.push_back({{"profile", p.to_string()},
                    {"class", cls.to_string()},
                    {"codimension", p.codimension()},
                    {"cycle_class", cycle.to_string()},
                    {"stabilizer_bounds", bounds}});
    r.rows.push_back({p.to_string(), cls.to_string(), std::to_string(p.codimension()), cycle.to_string(), detail::join(b, " ")});
  }
  r.json = {{"schema_version", io::kSchemaVersion}, {"command", "strata"}, {"n", a.n}, {"ell", a.ell},
            {"mode", mode.name()}, {"g", a.g}, {"strata", rows}};
  std::ostringstream os;
  os << detail::render_table(r.header, r.rows);
  if (a.profile.empty()) {
    const auto expected = motive::closed_form(mode, a.ell, a.n)[a.n];
    const bool ok = total == expected;
    r.json["total"] = total.to_string();
    r.json["closed_form"] = expected.to_string();
    r.json["verified"] = ok;
    os << "total: " << total.to_string() << (ok ? " (matches the closed form)" : " (differs from the closed form " + expected.to_string() + ")") << "\n";
    r.exit_code = ok ? kOk : kCheckFailed;
  }
  r.text = os.str();
  return r;
}

// ---------------------------------------------------------------- driver

/// Parses `args` (without the program name), runs the command and writes the
/// result to --output or `out`. Diagnostics go to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logarithmic Hilbert schemes of points: fans, Chow rings and motives", "loghilb"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string output;
  bool force = false;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output,-o", output, "write to this file instead of stdout");
  app.add_flag("--force", force, "ignore the size limits on n");

  FanArgs fan_args;
  auto* fan_cmd = app.add_subcommand("fan", "build and check a fan");
  fan_cmd->fallthrough();
  fan_cmd->add_option("--n", fan_args.n, "number of points")->required();
  fan_cmd->add_option("--i", fan_args.i, "level (zero side)");
  fan_cmd->add_option("--i-inf", fan_args.i_inf, "level on the infinity side (defaults to --i)");
  fan_cmd->add_option("--markings", fan_args.markings, "0 or 0+inf");
  fan_cmd->add_flag("--census", fan_args.census_only, "text output shows only the cone census");

  ChowArgs chow_args;
  auto* chow_cmd = app.add_subcommand("chow", "Chow ring presentations");
  chow_cmd->fallthrough();
  chow_cmd->require_subcommand(1);
  const std::pair<const char*, const char*> chow_subs[] = {
      {"sr", "Stanley-Reisner presentation of the toric Chow ring"},
      {"thmD", "closed-form presentation over the base Chow ring"},
      {"keel", "presentation by iterated Keel blow-up formulas"},
      {"compare", "check that the Stanley-Reisner and closed-form rings agree"}};
  for (const auto& [name, about] : chow_subs) {
    auto* sub = chow_cmd->add_subcommand(name, about);
    sub->fallthrough();
    sub->add_option("--n", chow_args.n, "number of points")->required();
    sub->add_option("--i", chow_args.levels, "level, or comma-separated levels per marking");
    sub->add_option("--ell", chow_args.ell, "number of markings");
    sub->add_option("--curve", chow_args.curve, "p1 or symbolic");
    sub->add_option("--markings", chow_args.markings, "0 or 0+inf (sr only)");
    sub->add_option("--sign", chow_args.sign, "exceptional or as-printed");
    sub->add_flag("--groups", chow_args.groups, "compute graded groups");
    sub->add_flag("--compare-sr", chow_args.compare_sr, "compare with the Stanley-Reisner presentation");
    sub->add_flag("--search", chow_args.search, "search for a comparison map if the candidate fails");
    sub->callback([&chow_args, name] { chow_args.sub = name; });
  }

  MotiveArgs motive_args;
  auto* motive_cmd = app.add_subcommand("motive", "generating series and the stratification oracle");
  motive_cmd->fallthrough();
  motive_cmd->add_option("--mode", motive_args.mode, "motivic-p1, hodge-deligne, poincare or euler");
  motive_cmd->add_option("--g", motive_args.g, "genus");
  motive_cmd->add_option("--ell", motive_args.ell, "number of markings");
  motive_cmd->add_option("--N", motive_args.order, "largest n");

  StrataArgs strata_args;
  auto* strata_cmd = app.add_subcommand("strata", "list boundary strata");
  strata_cmd->fallthrough();
  strata_cmd->add_option("--n", strata_args.n, "number of points")->required();
  strata_cmd->add_option("--ell", strata_args.ell, "number of markings");
  strata_cmd->add_option("--profile", strata_args.profile, "single profile, e.g. \"1;(1,2);();(1)\"");
  strata_cmd->add_option("--mode", strata_args.mode, "motivic-p1, hodge-deligne, poincare or euler");
  strata_cmd->add_option("--g", strata_args.g, "genus");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidParams;
  }

  try {
    const Caps caps = Caps::from_environment();
    Result result;
    if (*fan_cmd) result = cmd_fan(fan_args, caps, force);
    else if (*chow_cmd) result = cmd_chow(chow_args, caps, force);
    else if (*motive_cmd) result = cmd_motive(motive_args, caps, force);
    else result = cmd_strata(strata_args, caps, force);

    std::string rendered;
    if (format == "json") rendered = result.json.dump(2) + "\n";
    else if (format == "csv") rendered = detail::render_csv(result);
    else rendered = result.text;

    if (output.empty()) {
      out << rendered;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw UsageError("cannot write " + output);
      file << rendered;
    }
    if (result.exit_code == kCheckFailed) err << "error: a check failed\n";
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParams;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParams;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace loghilb::cli
