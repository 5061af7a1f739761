#pragma once

// Boundary test curves A_{i:s}, B_{i:s}, C_{i:s} in the moduli space of
// genus-g curves with n = 2g-2 marked points, and the enumerative values of
// their intersection with the quadratic-differential divisor Q_g.
//
//   A: X (genus i; p_1..p_s, x) glued at x to a moving point y of
//      Y (genus g-i; p_{s+1}..p_{2g-2}).
//   B: X (genus i; p_1..p_s, x) glued to Y (genus g-i; p_{s+2}.., y);
//      p_{s+1} moves on X.
//   C: X (genus i; p_1..p_s) and Y (genus g-i; p_{s+3}..) glued to a
//      rational Z carrying p_{s+2}; p_{s+1} moves on Z.

#include <optional>
#include <string>
#include <vector>

#include "kdiff/divisor.hpp"

namespace kdiff {

enum class Family { A, B, C };

char family_letter(Family f);

struct TestCurveSpec {
  Family family = Family::A;
  int g = 2;
  int i = 0;
  int s = 0;

  friend bool operator==(const TestCurveSpec&, const TestCurveSpec&) = default;
};

/// Number of marked points carried by the test curves at genus g.
inline int test_curve_points(int g) { return 2 * g - 2; }

std::string to_string(const TestCurveSpec& spec);

/// Parses "A:1:2" (family, i, s). Throws ParseError.
TestCurveSpec parse_spec(int g, const std::string& text);

/// Parameter ranges of the families restricted to stable configurations:
/// every fixed component carries at least 3 special points (2 for genus 1,
/// 1 for genus >= 2). Family A additionally admits (g-1, 2g-2), whose
/// functional is zero.
bool is_valid(const TestCurveSpec& spec);

/// All valid specs at genus g: family A, then B, then C; i then s ascending.
std::vector<TestCurveSpec> valid_specs(int g);

CurveFunctional curve_A(int g, int i, int s);
CurveFunctional curve_B(int g, int i, int s);
CurveFunctional curve_C(int g, int i, int s);
CurveFunctional curve(const TestCurveSpec& spec);

BigInt oracle_A_dot_Qg(int g, int i, int s);
BigInt oracle_B_dot_Qg(int g, int i, int s);
BigInt oracle_C_dot_Qg(int g, int i, int s);
BigInt oracle_dot_Qg(const TestCurveSpec& spec);

/// A degenerate spec that coincides, after stabilization and relabelling,
/// with another family member: C_{0:1} = B_{0:2} and A_{0:1} = sigma B_{g:2g-3}
/// with sigma swapping labels 1 and 2g-2.
struct CurveCoincidence {
  TestCurveSpec target;
  std::vector<int> relabel;  // relabel[j-1] = image of label j
};

std::optional<CurveCoincidence> documented_coincidence(const TestCurveSpec& spec);

}  // namespace kdiff
