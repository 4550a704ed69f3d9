#include <gtest/gtest.h>

#include <set>

#include "loghilb/chow/compare.hpp"
#include "loghilb/chow/cycle_class.hpp"
#include "loghilb/chow/keel.hpp"
#include "loghilb/chow/presentation.hpp"
#include "loghilb/chow/stanley_reisner.hpp"
#include "loghilb/fan/hilb_fan.hpp"

using namespace loghilb;
using namespace loghilb::chow;

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

std::vector<std::size_t> ranks(const std::vector<GradedGroupEntry>& groups) {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.rank);
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

// h-vector of a complete simplicial fan from its face numbers:
// sum_k h_k x^k = sum_j f_j (x - 1)^(n - j), computed with plain integers.
std::vector<long> h_vector(const std::vector<std::size_t>& census) {
  const std::size_t n = census.size() - 1;
  std::vector<long> h(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<long> p{1};
    for (std::size_t e = 0; e < n - j; ++e) {
      std::vector<long> q(p.size() + 1, 0);
      for (std::size_t a = 0; a < p.size(); ++a) {
        q[a + 1] += p[a];
        q[a] -= p[a];
      }
      p = q;
    }
    for (std::size_t a = 0; a < p.size(); ++a) h[a] += static_cast<long>(census[j]) * p[a];
  }
  return h;
}

std::set<std::string> strings(const std::vector<MultiPoly>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.to_string());
  return out;
}

bool same_ideal(const GradedPresentation& a, const GradedPresentation& b) {
  const GradedQuotient qa(a), qb(b);
  for (const auto& r : a.all_relations())
    if (!qb.contains(r)) return false;
  for (const auto& r : b.all_relations())
    if (!qa.contains(r)) return false;
  return true;
}

GeneratorMap candidate(const GradedPresentation& p) {
  GeneratorMap m{{"H", var("tau")}};
  for (const auto& g : p.generators) m[g.name] = var(fan::zero_label(std::stoul(g.name.substr(4))));
  return m;
}

GeneratorMap negated(GeneratorMap m) {
  for (auto& [k, v] : m) v = -v;
  return m;
}

// Writes each image in the SR degree-1 coordinates so maps differing by
// linear relations compare equal.
bool same_map_in(const GradedPresentation& target, const GeneratorMap& a, const GeneratorMap& b) {
  const GradedQuotient q(target);
  for (const auto& [k, v] : a)
    if (!q.contains(v - b.at(k))) return false;
  return a.size() == b.size();
}

}  // namespace

TEST(StanleyReisner, ProjectiveSpaceIsTruncatedPolynomialRing) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto groups = graded_groups(sr_presentation(fan::projective_fan(n)));
    ASSERT_EQ(groups.size(), n + 1);
    for (const auto& g : groups) EXPECT_EQ(g.to_string(), "Z^1");
  }
}

TEST(StanleyReisner, ProjectivePlaneRelations) {
  const auto p = sr_presentation(fan::projective_fan(2));
  EXPECT_EQ(strings(p.relations), (std::set<std::string>{"sigma_1 - tau", "sigma_2 - tau", "sigma_1*sigma_2*tau"}));
}

TEST(StanleyReisner, HilbTwoOneNonFaces) {
  const auto f = fan::hilb_fan(2, 1);
  std::set<std::set<std::string>> got;
  for (const auto& s : minimal_non_faces(f)) {
    auto l = f.labels_of(s);
    got.insert({l.begin(), l.end()});
  }
  EXPECT_EQ(got, (std::set<std::set<std::string>>{{"sigma_1", "sigma_2"}, {"rho_2", "tau"}}));
}

TEST(StanleyReisner, HilbTwoOneRanks) {
  const auto groups = graded_groups(sr_presentation(fan::hilb_fan(2, 1)));
  EXPECT_EQ(ranks(groups), (std::vector<std::size_t>{1, 2, 1}));
  for (const auto& g : groups) EXPECT_TRUE(g.torsion.empty());
}

TEST(StanleyReisner, RelationFamiliesMatchTheFan) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t i = 1; i <= n; ++i) {
      const auto pres = sr_presentation(fan::hilb_fan(n, i));
      const auto fam = hilb_sr_families(n, i);
      const std::vector<MultiPoly> linear(pres.relations.begin(), pres.relations.begin() + n);
      const std::vector<MultiPoly> monomial(pres.relations.begin() + n, pres.relations.end());
      EXPECT_EQ(strings(linear), strings(fam.linear)) << "n=" << n << " i=" << i;
      EXPECT_EQ(strings(monomial), strings(fam.monomial)) << "n=" << n << " i=" << i;
    }
}

TEST(StanleyReisner, LinearFamilyText) {
  const auto fam = hilb_sr_families(3, 1);
  EXPECT_EQ(strings(fam.linear),
            (std::set<std::string>{"rho_3 + sigma_1 - tau", "rho_2 + 2*rho_3 + sigma_2 - tau", "2*rho_2 + 3*rho_3 + sigma_3 - tau"}));
  EXPECT_EQ(strings(fam.monomial),
            (std::set<std::string>{"rho_2*sigma_1", "rho_3*tau", "sigma_2*sigma_3"}));
}

TEST(StanleyReisner, RanksAreTheHVector) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t i = 1; i <= n; ++i) {
      const auto f = fan::hilb_fan(n, i);
      const auto h = h_vector(fan::cone_census(f));
      const auto groups = graded_groups(sr_presentation(f));
      for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(static_cast<long>(groups[k].rank), h[k]) << n << "," << i << "," << k;
      // The motive carries the same numbers.
      const auto motive = fan::fan_motive(f);
      for (std::size_t k = 0; k <= n; ++k)
        EXPECT_EQ(motive.coefficient({{"L", static_cast<unsigned>(n - k)}}), h[k]);
    }
}

TEST(StanleyReisner, MeasuredTorsion) {
  const auto g31 = graded_groups(sr_presentation(fan::hilb_fan(3, 1)));
  EXPECT_EQ(g31[3].torsion, ints({2, 2}));
  const auto g41 = graded_groups(sr_presentation(fan::hilb_fan(4, 1)));
  EXPECT_EQ(g41[3].torsion, ints({2, 2, 2}));
  EXPECT_EQ(g41[4].torsion, ints({2, 2, 2, 2, 2, 6, 6}));
  const auto g42 = graded_groups(sr_presentation(fan::hilb_fan(4, 2)));
  EXPECT_EQ(g42[4].torsion, ints({6, 6}));
  for (const auto* gs : {&g31, &g41, &g42}) EXPECT_EQ((*gs)[0].to_string(), "Z^1");
}

TEST(StanleyReisner, RejectsIncompleteFan) {
  const auto f = fan::hilb_fan(2, 1);
  auto cones = f.max_cones();
  cones.erase(cones.begin());
  EXPECT_THROW(sr_presentation(fan::StackyFan(2, f.rays(), cones)), std::domain_error);
}

TEST(QPolynomial, ZeroM) {
  for (unsigned k = 0; k <= 4; ++k) EXPECT_TRUE(q_polynomial(0, k).is_zero());
}

TEST(QPolynomial, Q22) {
  const auto t = var("t"), c = var("c");
  EXPECT_EQ(q_polynomial(2, 2), MultiPoly(2) * t * t + MultiPoly(3) * c * t + c * c);
}

TEST(QPolynomial, Q21) { EXPECT_EQ(q_polynomial(2, 1), var("t") + var("c") - MultiPoly(2) * var("t_2")); }

TEST(QPolynomial, HomogeneousWithConstantTermCToTheH) {
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned h = 0; h <= m; ++h) {
      const auto q = q_polynomial(m, h);
      EXPECT_TRUE(q.is_homogeneous()) << m << "," << h;
      EXPECT_EQ(q.degree(), static_cast<int>(h));
      std::map<std::string, MultiPoly> zero{{"t", 0}};
      for (unsigned j = h + 1; j <= m; ++j) zero.emplace("t_" + std::to_string(j), 0);
      EXPECT_EQ(q.substitute(zero), var("c").pow(h));
    }
}

TEST(QPolynomial, RejectsMBelowH) { EXPECT_THROW(q_polynomial(1, 2), std::invalid_argument); }

TEST(KeelStep, SingleStepGivesHilbTwoOne) {
  GradedPresentation base{BaseRing::truncated_hyperplane(2), {}, {}, 2};
  const auto e = var("eps_2"), h = var("H");
  const auto p = keel_step(base, {h}, MultiPoly(2) * e * e + MultiPoly(3) * h * e + h * h, "eps_2");
  EXPECT_EQ(graded_groups(p), graded_groups(sr_presentation(fan::hilb_fan(2, 1))));
}

TEST(KeelStep, DegenerateStepIsVerbatim) {
  GradedPresentation base{BaseRing::truncated_hyperplane(2), {}, {}, 2};
  const auto p = keel_step(base, {}, var("t"), "t");
  ASSERT_EQ(p.relations.size(), 1u);
  EXPECT_EQ(p.relations[0], var("t"));
  EXPECT_EQ(graded_groups(p), graded_groups(base));
}

TEST(KeelStep, FiberOnlyWeightedProjectiveBundle) {
  for (unsigned c = 1; c <= 5; ++c) {
    GradedPresentation point{BaseRing::integers(), {}, {}, c - 1};
    const auto p = keel_step(point, {}, var("t").pow(c), "t");
    for (const auto& g : graded_groups(p)) EXPECT_EQ(g.to_string(), "Z^1");
  }
}

TEST(KeelStep, TransverseStepsCommute) {
  const GradedPresentation base{BaseRing::truncated_hyperplane(2), {}, {}, 2};
  const auto h = var("H");
  auto q = [&](const std::string& e) { return q_polynomial(2, 2, {-var(e)}, h); };
  const auto ab = keel_step(keel_step(base, {h}, q("a"), "a"), {h}, q("b"), "b");
  const auto ba = keel_step(keel_step(base, {h}, q("b"), "b"), {h}, q("a"), "a");
  EXPECT_EQ(graded_groups(ab), graded_groups(ba));
  EXPECT_TRUE(same_ideal(ab, ba));
}

TEST(KeelStep, RejectsInhomogeneousInput) {
  const GradedPresentation base{BaseRing::truncated_hyperplane(2), {}, {}, 2};
  EXPECT_THROW(keel_step(base, {var("H") + 1}, var("t"), "t"), std::invalid_argument);
  EXPECT_THROW(keel_step(base, {var("H")}, var("t") * var("t") + var("t"), "t"), std::invalid_argument);
}

TEST(ThmD, ExampleOneStepBelowTop) {
  for (unsigned n = 2; n <= 5; ++n) {
    const auto p = thmD_presentation(n, {n - 1}, BaseRing::truncated_hyperplane(n));
    const auto e = var("eps_" + std::to_string(n));
    ASSERT_EQ(p.generator_names(), std::vector<std::string>{"eps_" + std::to_string(n)});
    EXPECT_EQ(strings(p.relations), strings({q_polynomial(n, n, {-e}, var("H")), var("H") * e}));
    const auto printed = thmD_presentation(n, {n - 1}, BaseRing::truncated_hyperplane(n), SlotSign::AsPrinted);
    EXPECT_EQ(strings(printed.relations), strings({q_polynomial(n, n, {e}, var("H")), var("H") * e}));
  }
}

TEST(ThmD, TopLevelIsTheBaseRing) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto p = thmD_presentation(n, {n}, BaseRing::truncated_hyperplane(n));
    EXPECT_TRUE(p.generators.empty());
    EXPECT_TRUE(p.relations.empty());
    EXPECT_EQ(p.base.describe(), "Z[H]/(H^" + std::to_string(n + 1) + ")");
    for (const auto& g : graded_groups(p)) EXPECT_EQ(g.to_string(), "Z^1");
  }
}

TEST(ThmD, LevelZeroEqualsLevelOne) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto a = thmD_presentation(n, {0}, BaseRing::truncated_hyperplane(n));
    const auto b = thmD_presentation(n, {1}, BaseRing::truncated_hyperplane(n));
    EXPECT_EQ(strings(a.relations), strings(b.relations));
    EXPECT_EQ(a.generator_names(), b.generator_names());
  }
}

TEST(ThmD, ThirdFamilyUsesTheOuterEpsilon) {
  // n = 3, i = 1: eps_2 carries Q_{1,1}(-eps_3) * eps_2.
  const auto p = thmD_presentation(3, {1}, BaseRing::truncated_hyperplane(3));
  const auto expected = q_polynomial(1, 1, {-var("eps_3")}, var("H")) * var("eps_2");
  EXPECT_TRUE(strings(p.relations).count(expected.to_string()));
  EXPECT_TRUE(strings(p.relations).count((var("H").pow(2) * var("eps_2")).to_string()));
}

TEST(ThmD, GroupsMatchStanleyReisnerTwoOne) {
  const auto p = thmD_presentation(2, {1}, BaseRing::truncated_hyperplane(2));
  EXPECT_EQ(graded_groups(p), graded_groups(sr_presentation(fan::hilb_fan(2, 1))));
}

TEST(ThmD, TopDegreeIsNonzero) {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned i = 0; i <= n; ++i) {
      const auto g = graded_group(thmD_presentation(n, {i}, BaseRing::truncated_hyperplane(n)), n);
      EXPECT_TRUE(g.rank > 0 || !g.torsion.empty());
      EXPECT_EQ(graded_group(thmD_presentation(n, {i}, BaseRing::truncated_hyperplane(n)), 0).to_string(), "Z^1");
    }
}

TEST(ThmD, SymbolicTwoMarkings) {
  const auto p = thmD_presentation(3, {0, 0}, BaseRing::symbolic_curve(3, 2));
  EXPECT_EQ(p.generator_names(), (std::vector<std::string>{"eps1_3", "eps1_2", "eps2_3", "eps2_2"}));
  EXPECT_EQ(p.relations.size(), 10u);
  const auto rels = strings(p.relations);
  EXPECT_TRUE(rels.count("eps1_3*ker_s1_0_3"));
  EXPECT_TRUE(rels.count("eps2_2*ker_s2_1_3"));
  EXPECT_TRUE(rels.count("c1L_2*eps2_2 - eps2_2*eps2_3"));
  EXPECT_EQ(p.base.describe(), "CH*(Sym^3(C))");
  EXPECT_THROW(GradedQuotient{p}, std::logic_error);
}

TEST(ThmD, Errors) {
  EXPECT_THROW(thmD_presentation(3, {4}, BaseRing::truncated_hyperplane(3)), std::invalid_argument);
  EXPECT_THROW(thmD_presentation(3, {}, BaseRing::truncated_hyperplane(3)), std::invalid_argument);
  EXPECT_THROW(thmD_presentation(3, {1}, BaseRing::truncated_hyperplane(2)), std::invalid_argument);
  EXPECT_THROW(thmD_presentation(3, {1}, BaseRing::integers()), std::invalid_argument);
  EXPECT_THROW(thmD_presentation(3, {1, 1}, BaseRing::symbolic_curve(3, 1)), std::invalid_argument);
}

TEST(IteratedKeel, SameIdealAsThmD) {
  for (auto sign : {SlotSign::Exceptional, SlotSign::AsPrinted})
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned i = 0; i <= n; ++i) {
        const auto base = BaseRing::truncated_hyperplane(n);
        EXPECT_TRUE(same_ideal(iterated_keel(n, {i}, base, sign), thmD_presentation(n, {i}, base, sign)))
            << "n=" << n << " i=" << i;
      }
}

TEST(IteratedKeel, OneStepMatchesExample) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto base = BaseRing::truncated_hyperplane(n);
    EXPECT_EQ(strings(iterated_keel(n, {n - 1}, base).relations), strings(thmD_presentation(n, {n - 1}, base).relations));
  }
}

TEST(IteratedKeel, ZeroStepsIsTheBaseRing) {
  const auto p = iterated_keel(3, {3}, BaseRing::truncated_hyperplane(3));
  EXPECT_TRUE(p.generators.empty());
  EXPECT_TRUE(p.relations.empty());
}

TEST(IteratedKeel, Errors) {
  EXPECT_THROW(iterated_keel(3, {1, 1}, BaseRing::truncated_hyperplane(3)), std::invalid_argument);
  EXPECT_THROW(iterated_keel(3, {1}, BaseRing::symbolic_curve(3, 1)), std::invalid_argument);
}

TEST(Compare, IdentityMapPasses) {
  const auto p = thmD_presentation(3, {1}, BaseRing::truncated_hyperplane(3));
  GeneratorMap id{{"H", var("H")}};
  for (const auto& g : p.generators) id[g.name] = var(g.name);
  EXPECT_TRUE(compare_presentations(p, p, id).ok());
}

TEST(Compare, CandidateMapMatchesStanleyReisner) {
  for (auto [n, i] : std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {2, 1}, {3, 1}, {3, 2}, {4, 3}}) {
    const auto p = thmD_presentation(n, {i}, BaseRing::truncated_hyperplane(n));
    const auto sr = sr_presentation(fan::hilb_fan(n, std::max(i, 1U)));
    const auto rep = compare_presentations(p, sr, candidate(p));
    EXPECT_TRUE(rep.relations_ok()) << n << "," << i;
    EXPECT_TRUE(rep.groups_equal()) << n << "," << i;
    EXPECT_TRUE(rep.surjective_in_degree_one) << n << "," << i;
  }
}

TEST(Compare, SearchRecoversTheCandidateUpToSign) {
  for (auto [n, i] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 2}}) {
    const auto p = thmD_presentation(n, {i}, BaseRing::truncated_hyperplane(n));
    const auto sr = sr_presentation(fan::hilb_fan(n, i));
    const auto found = search_generator_map(p, sr, n);
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(compare_presentations(p, sr, *found).ok());
    const auto c = candidate(p);
    EXPECT_TRUE(same_map_in(sr, *found, c) || same_map_in(sr, *found, negated(c)));
  }
}

TEST(Compare, RanksAgreeWithStanleyReisner) {
  for (auto [n, i] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {3, 2}, {4, 2}}) {
    const auto a = graded_groups(thmD_presentation(n, {i}, BaseRing::truncated_hyperplane(n)));
    const auto b = graded_groups(sr_presentation(fan::hilb_fan(n, i)));
    EXPECT_EQ(ranks(a), ranks(b));
    EXPECT_EQ(a, b);
  }
}

TEST(Compare, PrintedSignFailsAtFourPoints) {
  const auto p = thmD_presentation(4, {2}, BaseRing::truncated_hyperplane(4), SlotSign::AsPrinted);
  const auto sr = sr_presentation(fan::hilb_fan(4, 2));
  EXPECT_FALSE(compare_presentations(p, sr, candidate(p)).groups_equal());
  EXPECT_FALSE(search_generator_map(p, sr, 4).has_value());
}

TEST(Compare, RejectsDegreeChangingMap) {
  const auto p = thmD_presentation(2, {1}, BaseRing::truncated_hyperplane(2));
  const auto sr = sr_presentation(fan::hilb_fan(2, 1));
  auto m = candidate(p);
  m["eps_2"] = var("rho_2") * var("tau");
  EXPECT_THROW(compare_presentations(p, sr, m), std::invalid_argument);
}

TEST(CycleClass, OpenStratumIsOne) {
  motive::StratumProfile p{4, {{}, {}}};
  EXPECT_EQ(stratum_cycle_class(p, 4), MultiPoly(1));
}

TEST(CycleClass, FigureProfile) {
  const auto p = motive::parse_profile("1;(1,2);();(1)");
  const auto cls = stratum_cycle_class(p, 5);
  EXPECT_EQ(cls, var("eps1_2") * var("eps1_3") * var("eps3_1"));
  EXPECT_EQ(cls.degree(), 3);
  EXPECT_EQ(p.codimension(), 3u);
}

TEST(CycleClass, SingleBubble) {
  for (unsigned n = 1; n <= 5; ++n) {
    motive::StratumProfile p{0, {{n}}};
    EXPECT_EQ(stratum_cycle_class(p, n), var("eps_" + std::to_string(n)));
  }
}

TEST(CycleClass, WrongTotalThrows) {
  EXPECT_THROW(stratum_cycle_class(motive::parse_profile("1;(1,2);();(1)"), 4), std::invalid_argument);
}
