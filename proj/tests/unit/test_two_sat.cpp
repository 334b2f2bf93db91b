#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "geoinsert/consistency.hpp"
#include "geoinsert/decide.hpp"
#include "geoinsert/partners.hpp"
#include "geoinsert/testkit.hpp"

using namespace geoinsert;

namespace {

bool brute_force_sat(int vars, const std::vector<std::pair<Lit, Lit>>& clauses) {
  for (int mask = 0; mask < (1 << vars); ++mask) {
    auto value = [&](Lit l) { return ((mask >> l.var()) & 1) != l.negated(); };
    bool ok = true;
    for (const auto& [a, b] : clauses) ok = ok && (value(a) || value(b));
    if (ok) return true;
  }
  return false;
}

// calls f for small instances whose terminals share a face of G_sp
void for_each_common_face_instance(int count, const std::function<void(const Instance&)>& f) {
  int seen = 0;
  for (std::uint64_t seed = 1; seen < count && seed < 2000; ++seed) {
    const int n = 7 + static_cast<int>(seed % 6);
    const int delta = 3 + static_cast<int>(seed % 5);
    Instance inst;
    try {
      inst = testkit::gen_random_planar(n, delta, seed);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto ed = inst.dual();
    if (!check_common_face(ed, build_gsp(ed)).found) continue;
    f(inst);
    ++seen;
  }
}

}  // namespace

TEST(TwoSatSolver, SmallFormulas) {
  TwoSatSolver s(2);
  s.add_clause(Lit::pos(0), Lit::pos(1));
  s.add_unit(Lit::neg(0));
  const auto a = s.solve();
  ASSERT_TRUE(a.has_value());
  EXPECT_FALSE((*a)[0]);
  EXPECT_TRUE((*a)[1]);

  s.add_unit(Lit::neg(1));
  EXPECT_FALSE(s.solve().has_value());

  TwoSatSolver eq;
  const int x = eq.add_variable();
  const int y = eq.add_variable();
  eq.add_equal(Lit::pos(x), Lit::neg(y));
  eq.add_unit(Lit::pos(y));
  const auto b = eq.solve();
  ASSERT_TRUE(b.has_value());
  EXPECT_FALSE((*b)[x]);
  EXPECT_EQ(eq.clause_count(), 3);
}

TEST(TwoSatSolver, AgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const int vars = 1 + static_cast<int>(rng() % 6);
    const int count = static_cast<int>(rng() % (3 * vars + 1));
    std::vector<std::pair<Lit, Lit>> clauses;
    TwoSatSolver s(vars);
    for (int i = 0; i < count; ++i) {
      const Lit a{static_cast<int>(rng() % (2 * vars))};
      const Lit b{static_cast<int>(rng() % (2 * vars))};
      clauses.emplace_back(a, b);
      s.add_clause(a, b);
    }
    const auto sol = s.solve();
    ASSERT_EQ(sol.has_value(), brute_force_sat(vars, clauses));
    if (!sol) continue;
    for (const auto& [a, b] : clauses) {
      EXPECT_TRUE(((*sol)[a.var()] != a.negated()) || ((*sol)[b.var()] != b.negated()));
    }
  }
}

TEST(CommonFace, SmallFixedInstances) {
  for (const Instance& inst : {testkit::cycle_c4(), testkit::two_triangles(), testkit::wheel_i2()}) {
    const auto ed = inst.dual();
    const auto o = check_common_face(ed, build_gsp(ed));
    EXPECT_TRUE(o.found) << inst.name;
    EXPECT_FALSE(o.upper.empty());
    EXPECT_FALSE(o.lower.empty());
  }
}

TEST(CommonFace, DistanceTwoAlwaysShares) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto ed = testkit::gen_random_planar(10, 5, seed).dual();
    const auto dag = build_gsp(ed);
    if (dag.length != 2) continue;
    EXPECT_TRUE(check_common_face(ed, dag).found);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Decide, CycleIsYesWithPartner) {
  const auto ed = testkit::cycle_c4().dual();
  const Decision d = decide(ed);
  ASSERT_TRUE(d.yes);
  ASSERT_TRUE(d.path && d.partner);
  EXPECT_EQ(d.path->length(), 2);
  EXPECT_TRUE(non_crossing(ed, *d.path, *d.partner));
}

TEST(Decide, DegreeSixFamilyIsNo) {
  for (int m = 1; m <= 2; ++m) {
    const auto ed = testkit::gen_fig2(m).dual();
    if (!check_common_face(ed, build_gsp(ed)).found) continue;
    const Decision d = decide(ed);
    EXPECT_FALSE(d.yes);
    EXPECT_FALSE(d.path.has_value());
    EXPECT_GT(testkit::oracle_shortest_consistent(ed).optimum_length.value_or(1000), d.dist);
  }
}

TEST(Decide, PreconditionWithoutCommonFace) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 400 && checked < 5; ++seed) {
    const auto ed = testkit::gen_random_planar(16, 6, seed).dual();
    if (check_common_face(ed, build_gsp(ed)).found) continue;
    EXPECT_THROW(decide(ed), PreconditionError);
    EXPECT_THROW(decide_via_partners(ed), PreconditionError);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Decide, AgreesWithOracleAndWitnessesValidate) {
  int yes = 0;
  for_each_common_face_instance(120, [&](const Instance& inst) {
    const auto ed = inst.dual();
    const Decision d = decide(ed);
    const auto oracle = testkit::oracle_shortest_consistent(ed, d.dist);
    EXPECT_EQ(d.yes, oracle.optimum_length == d.dist) << inst.name;
    if (d.yes) {
      ++yes;
      ASSERT_TRUE(d.path && d.partner) << inst.name;
      EXPECT_EQ(d.path->length(), d.dist);
      EXPECT_TRUE(is_consistent(ed, *d.path));
      EXPECT_TRUE(non_crossing(ed, *d.path, *d.partner));
    }
  });
  EXPECT_GT(yes, 0);
}

TEST(Decide, PartnerRouteAgrees) {
  for_each_common_face_instance(120, [&](const Instance& inst) {
    const auto ed = inst.dual();
    EXPECT_EQ(decide_via_partners(ed).yes, decide(ed).yes) << inst.name;
  });
}

TEST(Decide, PartnerClausesAreBinaryOverDeclaredVariables) {
  for_each_common_face_instance(40, [&](const Instance& inst) {
    const auto pd = decide_via_partners(inst.dual());
    const int interior = static_cast<int>(pd.system.interior.size());
    EXPECT_EQ(pd.clauses.variables, interior + static_cast<int>(pd.system.exterior.size()));
    for (const auto& [a, b] : pd.clauses.clauses) {
      EXPECT_LT(a.var(), pd.clauses.variables);
      EXPECT_LT(b.var(), pd.clauses.variables);
    }
    for (const ChordImplication& c : pd.system.chords) {
      EXPECT_LT(c.premise, interior);
      EXPECT_LT(c.conclusion, interior);
    }
    EXPECT_EQ(pd.yes, partner_satisfiable(pd.clauses));
  });
}
