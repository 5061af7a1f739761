#include <gtest/gtest.h>

#include <tuple>

#include "kdiff/classes.hpp"
#include "kdiff/curves.hpp"

using namespace kdiff;

namespace {

// Builds a functional straight from a table of (genus, points, value) boundary
// entries and psi values, without the stability filter of the library: a
// genus-0 side with a single point j is read as -psi_j, and a side carrying
// no point at all (a contracted node) is dropped.
CurveFunctional from_table(int g, const std::vector<std::tuple<int, std::vector<int>, int>>& boundary,
                           const std::vector<std::pair<int, int>>& psi) {
  const int n = test_curve_points(g);
  CurveFunctional f(g, n);
  for (const auto& [j, v] : psi) f.add_psi(j, v);
  for (auto [i, S, v] : boundary) {
    std::sort(S.begin(), S.end());
    if (i == g) {
      i = 0;
      S = complement(n, S);
    }
    if (i == 0 && S.size() == 1) {
      f.add_psi(S.front(), -v);
      continue;
    }
    if (i == 0 && S.empty()) continue;
    f.add_boundary(i, S, v);
  }
  return f;
}

CurveFunctional relabel(const CurveFunctional& f, const std::vector<int>& sigma) {
  CurveFunctional out(f.genus(), f.points());
  out.add_lambda(f.lambda()).add_delta0(f.delta0());
  for (int j = 1; j <= f.points(); ++j) out.add_psi(sigma[static_cast<std::size_t>(j - 1)], f.psi(j));
  for (const auto& [index, v] : f.boundary()) {
    std::vector<int> image;
    for (int j : index.points) image.push_back(sigma[static_cast<std::size_t>(j - 1)]);
    out.add_boundary(index.genus, image, v);
  }
  return out;
}

}  // namespace

TEST(CurveA, ValuesAtGenusThree) {
  const CurveFunctional f = curve_A(3, 1, 3);
  EXPECT_EQ(f.boundary(1, {1, 2, 3}), -3);
  EXPECT_EQ(f.psi(4), 1);
  EXPECT_EQ(f.lambda(), 0);
}

TEST(CurveB, ValuesAtGenusThree) {
  const CurveFunctional f = curve_B(3, 1, 0);
  EXPECT_EQ(f.boundary(1, {}), 1);
  EXPECT_EQ(f.psi(1), 1);
}

TEST(CurveB, GenusTwoRangeStopsBeforeTwo) {
  EXPECT_THROW(curve_B(2, 0, 2), InvalidSpec);
  EXPECT_NO_THROW(curve_B(2, 1, 0));
  EXPECT_NO_THROW(curve_B(2, 1, 1));
}

TEST(CurveC, ValuesAtGenusThree) {
  const CurveFunctional f = curve_C(3, 1, 1);
  EXPECT_EQ(f.boundary(0, {2, 3}), 1);
  EXPECT_EQ(f.boundary(1, {1}), -1);
  EXPECT_EQ(f.lambda(), 0);
}

TEST(Specs, UnstableConfigurationsRejected) {
  EXPECT_THROW(curve_A(3, 0, 1), InvalidSpec);
  EXPECT_THROW(curve_C(3, 0, 1), InvalidSpec);
  EXPECT_THROW(curve_B(3, 3, 2), InvalidSpec);
  EXPECT_THROW(curve_A(3, 4, 1), InvalidSpec);
  EXPECT_THROW(curve_A(3, 1, 0), InvalidSpec);
  EXPECT_THROW(oracle_A_dot_Qg(3, 0, 1), InvalidSpec);
}

TEST(Specs, ParseAndPrint) {
  const TestCurveSpec spec = parse_spec(3, "B:2:1");
  EXPECT_EQ(spec, (TestCurveSpec{Family::B, 3, 2, 1}));
  EXPECT_EQ(to_string(spec), "B:2:1");
  EXPECT_THROW(parse_spec(3, "D:1:1"), ParseError);
  EXPECT_THROW(parse_spec(3, "A:1"), ParseError);
  EXPECT_THROW(parse_spec(3, "A:x:1"), ParseError);
  EXPECT_THROW(parse_spec(3, "A:1:1x"), ParseError);
}

TEST(Oracles, PrintedValues) {
  EXPECT_EQ(oracle_A_dot_Qg(3, 1, 1), 32);
  EXPECT_EQ(oracle_A_dot_Qg(3, 1, 4), 144);
  EXPECT_EQ(oracle_A_dot_Qg(3, 2, 4), 0);
  EXPECT_EQ(oracle_B_dot_Qg(3, 1, 0), 0);
  EXPECT_EQ(oracle_B_dot_Qg(3, 2, 1), 32);
  EXPECT_EQ(oracle_B_dot_Qg(2, 1, 1), 4);
  EXPECT_EQ(oracle_C_dot_Qg(3, 1, 1), 0);
  EXPECT_EQ(oracle_C_dot_Qg(3, 1, 0), 16);
  EXPECT_EQ(oracle_C_dot_Qg(3, 1, 2), 8);
}

TEST(Invariants, NoLambdaOrDelta0Values) {
  for (int g = 2; g <= 6; ++g)
    for (const auto& spec : valid_specs(g)) {
      const CurveFunctional f = curve(spec);
      EXPECT_EQ(f.lambda(), 0) << to_string(spec);
      EXPECT_EQ(f.delta0(), 0) << to_string(spec);
    }
}

TEST(Invariants, SelfIntersectionIsBlowUpCount) {
  for (int g = 2; g <= 6; ++g)
    for (const auto& spec : valid_specs(g)) {
      if (spec.family != Family::A) continue;
      const int i = spec.i, s = spec.s;
      const Rational expected = (2 - 2 * (g - i)) - (2 * g - 2 - s);
      EXPECT_EQ(curve(spec).boundary(i, [&] {
        std::vector<int> head;
        for (int j = 1; j <= s; ++j) head.push_back(j);
        return head;
      }()),
                expected)
          << to_string(spec);
    }
}

TEST(Invariants, GenericOracleEvenInSMinusTwoI) {
  for (int g = 2; g <= 8; ++g)
    for (int i = 0; i <= g; ++i)
      for (int s = 1; s <= 2 * g - 3; ++s) {
        const int mirror = 4 * i - s;  // s - 2i -> -(s - 2i)
        if (!is_valid({Family::A, g, i, s}) || !is_valid({Family::A, g, i, mirror}) || mirror == 2 * g - 2) continue;
        EXPECT_EQ(oracle_A_dot_Qg(g, i, s), oracle_A_dot_Qg(g, i, mirror));
      }
}

TEST(Coincidence, DocumentedPairs) {
  const auto c = documented_coincidence({Family::C, 4, 0, 1});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->target, (TestCurveSpec{Family::B, 4, 0, 2}));
  const auto a = documented_coincidence({Family::A, 4, 0, 1});
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->target, (TestCurveSpec{Family::B, 4, 4, 5}));
  EXPECT_EQ(a->relabel.front(), 6);
  EXPECT_EQ(a->relabel.back(), 1);
  EXPECT_FALSE(documented_coincidence({Family::A, 4, 1, 1}).has_value());
}

TEST(Coincidence, COneEqualsBTwoAfterFolding) {
  for (int g = 3; g <= 6; ++g) {
    const int n = test_curve_points(g);
    const int s = 1, i = 0;
    std::vector<int> tail;
    for (int j = s + 3; j <= n; ++j) tail.push_back(j);
    auto tail_plus = tail;
    tail_plus.push_back(s + 1);
    const CurveFunctional c01 =
        from_table(g, {{i, {1}, -1}, {g - i, tail, -1}, {0, {2, 3}, 1}, {i, {1, 2}, 1}, {g - i, tail_plus, 1}},
                   {{2, 1}, {3, 1}});
    EXPECT_EQ(c01, curve_B(g, 0, 2)) << "g=" << g;
    for (const DivisorClass& d : {qg_class(g), lambda_class(g, n), psi_class(g, n, 1)})
      EXPECT_EQ(pair(c01, d), pair(curve_B(g, 0, 2), d));
  }
}

TEST(Coincidence, AOneEqualsRelabelledBAfterFolding) {
  for (int g = 3; g <= 6; ++g) {
    const int n = test_curve_points(g);
    std::vector<std::tuple<int, std::vector<int>, int>> a_rows{{0, {1}, -(4 * g - 5)}};
    std::vector<std::pair<int, int>> a_psi;
    for (int j = 2; j <= n; ++j) {
      a_rows.emplace_back(0, std::vector<int>{1, j}, 1);
      a_psi.emplace_back(j, 1);
    }
    const int s = 2 * g - 3;
    std::vector<int> head, head_plus;
    for (int j = 1; j <= s; ++j) head.push_back(j);
    head_plus = head;
    head_plus.push_back(s + 1);
    std::vector<std::tuple<int, std::vector<int>, int>> b_rows{{g, head, 1}, {g, head_plus, -1}};
    std::vector<std::pair<int, int>> b_psi{{s + 1, 2 * g - 1 + s}};
    for (int j = 1; j <= s; ++j) {
      b_psi.emplace_back(j, 1);
      b_rows.emplace_back(0, std::vector<int>{j, s + 1}, 1);
    }
    const auto link = documented_coincidence({Family::A, g, 0, 1});
    ASSERT_TRUE(link.has_value());
    EXPECT_EQ(from_table(g, a_rows, a_psi), relabel(from_table(g, b_rows, b_psi), link->relabel)) << "g=" << g;
  }
}
