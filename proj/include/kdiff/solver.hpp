#pragma once

// Replays the test-curve argument for Q_g: the class is symmetric in the
// marked points, so each boundary coefficient depends only on the size class
// (i, |S|), and the A-curve intersection numbers become a linear system in
// c_psi and the c_{i:s}.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kdiff/curves.hpp"

namespace kdiff {

/// Unknown of the coefficient system. `psi` is c_psi; otherwise c_{i:s}, held
/// as the representative of (i, s) ~ (g-i, n-s) with the smaller genus (ties:
/// the smaller size).
struct Unknown {
  bool psi = false;
  int i = 0;
  int s = 0;

  static Unknown c_psi() { return {true, 0, 0}; }
  friend auto operator<=>(const Unknown&, const Unknown&) = default;
};

std::string to_string(const Unknown& u);

/// c_{i:s} at genus g with n = 2g-2 points, folded onto its representative.
/// The size class (0,1) is not a boundary divisor; it is returned as-is and
/// rows rewrite it as -c_psi.
Unknown size_class(int g, int i, int s);

/// Every size class that labels a boundary divisor at genus g.
std::vector<Unknown> size_classes(int g);

using LinearRow = std::map<Unknown, Rational>;

/// Whether (i, s) lies in the printed range of family A, which also contains
/// the degenerate A_{0:1}.
bool in_printed_A_range(int g, int i, int s);

/// The A, B, C intersection relations as printed in the Q_g argument:
///   A_{i:s}: (2g-2-s)(c_psi + c_{i:s+1}) - (4g-2i-4-s) c_{i:s}
///   B_{i:s}: (2i+2s-1) c_psi + s c_{0:2} + c_{i:s} - c_{i:s+1}
///   C_{i:s}: 2 c_psi + c_{0:2} + c_{g-i:2g-s-3} - c_{g-i:2g-s-4} + c_{i:s+1} - c_{i:s}
/// with c_{0:1} replaced by -c_psi. Accepts valid specs and A_{0:1}.
LinearRow formula_row(const TestCurveSpec& spec);

/// The same relation read off a curve functional by sending psi_j to c_psi and
/// delta_{i:S} to c_{i:|S|}. Throws InvalidSpec if the functional has lambda
/// or delta_0 values (no symmetric unknown for those).
LinearRow functional_row(const CurveFunctional& f);

/// Right-hand side used by the solver: the oracle value, with A_{0:1} taken
/// from the generic branch of the A formula.
BigInt solver_oracle(const TestCurveSpec& spec);

struct Residual {
  TestCurveSpec spec;
  Rational lhs;    // relation evaluated at the solution
  BigInt oracle;
  Rational residual() const { return lhs - Rational(oracle); }
};

struct QgSolution {
  int g = 0;
  Rational c_psi;
  std::map<Unknown, Rational> c;  // keyed by size_class(); excludes c_psi
  int rank = 0;
  int unknowns = 0;
  std::vector<TestCurveSpec> equations;  // rows actually solved
  std::vector<Residual> residuals;       // every other valid spec

  Rational coefficient(int i, int s) const;
};

/// Solves the A-system. Rows: every printed A_{i:s} with s != 2g-3 and B_{1:0}
/// (the only relation reaching c_{1:0}). The s = 2g-3 rows conflict with the
/// s = 2g-2 branch, so they are kept as cross-checks with the B and C rows.
/// Throws SingularSystem when the rows do not determine every unknown or are
/// inconsistent.
QgSolution solve_qg_coefficients(int g);

}  // namespace kdiff
