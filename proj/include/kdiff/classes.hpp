#pragma once

#include <vector>

#include "kdiff/divisor.hpp"

namespace kdiff {

/// Signature data (d_1..d_n), sum 2g-2, for the quadratic-differential
/// divisors Q^n_{d, 2^{g-1}}.
class QdInput {
 public:
  /// Throws BadSignature unless g >= 2, n >= 1 and sum d_j = 2g-2.
  QdInput(int g, std::vector<int> d);

  int genus() const { return g_; }
  int points() const { return static_cast<int>(d_.size()); }
  const std::vector<int>& d() const { return d_; }
  /// 1-based.
  int d(int j) const { return d_.at(static_cast<std::size_t>(j - 1)); }

  /// Labels j with d_j odd or negative, ascending.
  std::vector<int> odd_or_negative() const;
  bool all_even_nonnegative() const { return odd_or_negative().empty(); }
  int d_sum(const std::vector<int>& labels) const;

 private:
  int g_;
  std::vector<int> d_;
};

/// Pointed Brill-Noether divisor class (d_j >= 0, sum d_j = g).
DivisorClass logan_class(int g, int n, const std::vector<int>& d);

/// Class of Q_g on the moduli space with n = 2g-2 points, as printed: each
/// canonical boundary class with both sides marked counted once.
DivisorClass qg_class(int g);

DivisorClass qd_class(const QdInput& q);

enum class QdCase { CaseA, CaseB, CaseC, None };

const char* to_string(QdCase c);

struct QdCaseResult {
  QdCase label = QdCase::None;
  std::vector<Rational> d_prime;         // (d_S - 2i, d_j for j not in S)
  std::vector<Rational> d_double_prime;  // (1 - i + d_S/2, d_j/2 for j not in S)
};

/// Which pullback relation applies when a genus-i curve carrying the points S
/// is glued on. Throws InvalidIndex for unstable (i, S).
QdCaseResult qd_case_classifier(const QdInput& q, int i, const std::vector<int>& points);

/// 3 psi - lambda - delta_{1:{1}} on the 1-pointed genus-2 space.
DivisorClass weierstrass_class();

/// Pullback along the map gluing point `attach_label` of a genus-g curve to a
/// fixed general genus-h curve carrying the new point `attach_label`.
/// `d` lives on genus g+h; result on genus g.
DivisorClass pullback_attach(const DivisorClass& d, int h, int attach_label = 1);

/// Pullback along the map forgetting the last point (n+1 points -> n points):
/// psi_j -> psi_j - delta_{0:{j,n+1}}, delta_{i:S} -> delta_{i:S} + delta_{i:S+{n+1}}.
DivisorClass forgetful_pullback(const DivisorClass& d);

/// Pullback to the 1-pointed genus-2 space along (X, x) -> X glued at x to a
/// fixed genus-(g-2) curve carrying all marked points. Requires g >= 3.
DivisorClass weierstrass_pullback(const DivisorClass& d);

/// Whether the pullback of Q_g equals 6*4^{g-2} times the Weierstrass class.
bool weierstrass_check(int g);

}  // namespace kdiff
