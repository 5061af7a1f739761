#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kdiff/errors.hpp"
#include "kdiff/rational.hpp"

namespace kdiff {

/// Signature of a k-differential: orders m_1..m_n summing to k(2g-2).
class Signature {
 public:
  /// Throws BadSignature for k < 1, g < 0 or a wrong sum.
  Signature(int k, int g, std::vector<int> m);

  int k() const { return k_; }
  int genus() const { return g_; }
  int points() const { return static_cast<int>(m_.size()); }
  const std::vector<int>& m() const { return m_; }

  bool holomorphic() const;
  /// Largest pole order, 0 if there are no poles.
  int max_pole_order() const;

 private:
  int k_;
  int g_;
  std::vector<int> m_;
};

int dim_stratum(const Signature& sig);
int codim_P(const Signature& sig);

enum class ComponentKind { FiniteArea, PrimitiveOnly };

const char* to_string(ComponentKind kind);

struct ComponentCount {
  int count = 1;
  ComponentKind kind = ComponentKind::FiniteArea;
  std::string notes;
};

/// Connected components of a stratum of quadratic differentials. Without
/// poles of order >= 2 the count is total; otherwise only primitive
/// components are counted. Throws OutOfCatalog for g < 2, k != 2 or a zero
/// entry.
ComponentCount quad_components(const Signature& sig);

/// g! * prod d_i^2. Throws BadInput on a length mismatch or a zero entry.
BigInt multidegree(int g, const std::vector<int>& d);

struct ExponentialForm {
  std::vector<std::pair<int, int>> distinct_values;  // (value, multiplicity), first-occurrence order
  Rational multiplicity_factor{1};                   // 1 / prod(alpha_r!)
};

ExponentialForm exponential_form(const std::vector<int>& tail);

}  // namespace kdiff
