#pragma once

// Rational Picard group of the moduli space of stable genus-g curves with n
// marked points, in the basis lambda, psi_1..psi_n, delta_0, delta_{i:S}.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdiff/errors.hpp"
#include "kdiff/rational.hpp"

namespace kdiff {

/// Boundary divisor label (i, S): a separating node with a genus-i side
/// carrying exactly the marked points S. Always held in canonical form,
/// see canonicalize_index().
struct BoundaryIndex {
  int genus = 0;
  std::vector<int> points;  // sorted ascending, labels in 1..n

  friend auto operator<=>(const BoundaryIndex&, const BoundaryIndex&) = default;
};

std::vector<int> complement(int n, const std::vector<int>& points);

/// (i, S) is a stable splitting: a genus-0 side needs >= 2 marked points and
/// a genus-g side leaves >= 2 points on the other side.
bool is_valid_index(int g, int n, int i, const std::vector<int>& points);

/// Representative of (i, S) ~ (g-i, S^c): the side with smaller genus, and on
/// genus ties the side containing label 1. Throws InvalidIndex for unstable or
/// malformed labels.
BoundaryIndex canonicalize_index(int g, int n, int i, const std::vector<int>& points);

/// Every distinct canonical boundary class of the (g, n) moduli space, sorted.
std::vector<BoundaryIndex> boundary_indices(int g, int n);

struct DivisorTag {};
struct FunctionalTag {};

/// Sparse coefficient vector over the standard basis. Used both for divisor
/// classes and for the numerical data of test curves (values on each basis
/// element); Tag keeps the two from being mixed up.
template <typename Tag>
class PicardVector {
 public:
  PicardVector(int g, int n) : g_(g), n_(n), psi_(static_cast<std::size_t>(n > 0 ? n : 0)) {
    if (g < 2) throw DimensionMismatch("genus must be >= 2, got " + std::to_string(g));
    if (n < 1) throw DimensionMismatch("need at least one marked point, got " + std::to_string(n));
  }

  int genus() const { return g_; }
  int points() const { return n_; }

  const Rational& lambda() const { return lambda_; }
  const Rational& delta0() const { return delta0_; }
  const std::vector<Rational>& psi() const { return psi_; }
  /// 1-based marked-point label.
  const Rational& psi(int j) const { return psi_.at(check_label(j)); }
  const std::map<BoundaryIndex, Rational>& boundary() const { return boundary_; }

  /// Coefficient of delta_{i:S}; routes through canonicalization.
  Rational boundary(int i, const std::vector<int>& points) const {
    auto it = boundary_.find(canonicalize_index(g_, n_, i, points));
    return it == boundary_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const {
    if (lambda_ != 0 || delta0_ != 0 || !boundary_.empty()) return false;
    for (const auto& c : psi_)
      if (c != 0) return false;
    return true;
  }

  PicardVector& add_lambda(const Rational& c) {
    lambda_ += c;
    return *this;
  }
  PicardVector& add_delta0(const Rational& c) {
    delta0_ += c;
    return *this;
  }
  PicardVector& add_psi(int j, const Rational& c) {
    psi_.at(check_label(j)) += c;
    return *this;
  }
  PicardVector& add_boundary(int i, const std::vector<int>& points, const Rational& c) {
    return add_boundary(canonicalize_index(g_, n_, i, points), c);
  }
  /// `index` must already be canonical for (g, n).
  PicardVector& add_boundary(const BoundaryIndex& index, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = boundary_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) boundary_.erase(it);
    }
    return *this;
  }

  friend bool operator==(const PicardVector&, const PicardVector&) = default;

 private:
  std::size_t check_label(int j) const {
    if (j < 1 || j > n_) throw InvalidIndex("marked point " + std::to_string(j) + " out of range 1.." + std::to_string(n_));
    return static_cast<std::size_t>(j - 1);
  }

  int g_;
  int n_;
  Rational lambda_{0};
  std::vector<Rational> psi_;
  Rational delta0_{0};
  std::map<BoundaryIndex, Rational> boundary_;
};

using DivisorClass = PicardVector<DivisorTag>;
using CurveFunctional = PicardVector<FunctionalTag>;

template <typename Tag>
void require_same_space(const PicardVector<Tag>& a, const PicardVector<Tag>& b) {
  if (a.genus() != b.genus() || a.points() != b.points())
    throw DimensionMismatch("(g,n) = (" + std::to_string(a.genus()) + "," + std::to_string(a.points()) +
                            ") vs (" + std::to_string(b.genus()) + "," + std::to_string(b.points()) + ")");
}

template <typename Tag>
PicardVector<Tag> scale(const PicardVector<Tag>& a, const Rational& r) {
  PicardVector<Tag> out(a.genus(), a.points());
  if (r == 0) return out;
  out.add_lambda(a.lambda() * r).add_delta0(a.delta0() * r);
  for (int j = 1; j <= a.points(); ++j) out.add_psi(j, a.psi(j) * r);
  for (const auto& [index, c] : a.boundary()) out.add_boundary(index, c * r);
  return out;
}

template <typename Tag>
PicardVector<Tag> add(const PicardVector<Tag>& a, const PicardVector<Tag>& b) {
  require_same_space(a, b);
  PicardVector<Tag> out = a;
  out.add_lambda(b.lambda()).add_delta0(b.delta0());
  for (int j = 1; j <= b.points(); ++j) out.add_psi(j, b.psi(j));
  for (const auto& [index, c] : b.boundary()) out.add_boundary(index, c);
  return out;
}

template <typename Tag>
PicardVector<Tag> operator+(const PicardVector<Tag>& a, const PicardVector<Tag>& b) {
  return add(a, b);
}
template <typename Tag>
PicardVector<Tag> operator-(const PicardVector<Tag>& a, const PicardVector<Tag>& b) {
  return add(a, scale(b, Rational(-1)));
}
template <typename Tag>
PicardVector<Tag> operator*(const Rational& r, const PicardVector<Tag>& a) {
  return scale(a, r);
}

/// Intersection number of a test curve with a divisor class.
Rational pair(const CurveFunctional& f, const DivisorClass& d);

/// Genus-2 representative with zero lambda coefficient, using
/// lambda = delta_0/10 + (1/5) * sum of all delta_{1:S}.
DivisorClass g2_normal_form(const DivisorClass& d);

/// Equality in Pic: coefficientwise for g >= 3, modulo the genus-2 relation.
bool equals(const DivisorClass& a, const DivisorClass& b);

// Basis elements, mostly for tests and small constructions.
DivisorClass lambda_class(int g, int n);
DivisorClass psi_class(int g, int n, int j);
DivisorClass delta0_class(int g, int n);
DivisorClass boundary_class(int g, int n, int i, const std::vector<int>& points);

nlohmann::ordered_json to_json(const DivisorClass& d);
nlohmann::ordered_json to_json(const CurveFunctional& f);
/// Throws ParseError on malformed documents and InvalidIndex on unstable labels.
DivisorClass divisor_from_json(const nlohmann::json& j);
CurveFunctional functional_from_json(const nlohmann::json& j);

/// Human-readable linear combination, e.g. "-64/1*lambda + 24/1*psi_1 + ...".
template <typename Tag>
std::string format_terms(const PicardVector<Tag>& v);

}  // namespace kdiff
