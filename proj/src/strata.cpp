#include "kdiff/strata.hpp"

#include <algorithm>
#include <numeric>

namespace kdiff {

Signature::Signature(int k, int g, std::vector<int> m) : k_(k), g_(g), m_(std::move(m)) {
  if (k_ < 1) throw BadSignature("k must be positive, got " + std::to_string(k_));
  if (g_ < 0) throw BadSignature("genus must be non-negative, got " + std::to_string(g_));
  const long long sum = std::accumulate(m_.begin(), m_.end(), 0LL);
  const long long expected = static_cast<long long>(k_) * (2LL * g_ - 2);
  if (sum != expected)
    throw BadSignature("orders sum to " + std::to_string(sum) + ", expected k(2g-2) = " + std::to_string(expected));
}

bool Signature::holomorphic() const {
  return std::all_of(m_.begin(), m_.end(), [](int x) { return x >= 0; });
}

int Signature::max_pole_order() const {
  int worst = 0;
  for (int x : m_) worst = std::max(worst, -x);
  return worst;
}

int dim_stratum(const Signature& sig) {
  const int base = 2 * sig.genus() + sig.points();
  return sig.k() == 1 && sig.holomorphic() ? base - 1 : base - 2;
}

int codim_P(const Signature& sig) {
  return sig.k() == 1 && sig.holomorphic() ? sig.genus() - 1 : sig.genus();
}

const char* to_string(ComponentKind kind) {
  return kind == ComponentKind::FiniteArea ? "FiniteArea" : "PrimitiveOnly";
}

namespace {

using Multiset = std::vector<int>;

Multiset sorted(Multiset v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool lanneau_two_components(int g, const Multiset& mu) {
  if (g == 2) return mu == sorted({-1, -1, 6}) || mu == sorted({-1, -1, 3, 3});
  for (int k = 0; k <= g - 2; ++k)
    if (mu == sorted({4 * (g - k) - 6, 4 * k + 2})) return true;
  for (int k = 0; k <= g - 1; ++k)
    if (mu == sorted({2 * (g - k) - 3, 2 * (g - k) - 3, 4 * k + 2})) return true;
  for (int k = -1; k <= g - 2; ++k)
    if (mu == sorted({2 * (g - k) - 3, 2 * (g - k) - 3, 2 * k + 1, 2 * k + 1})) return true;
  return false;
}

bool sporadic(int g, const Multiset& mu) {
  if (g == 3) return mu == sorted({-1, 9}) || mu == sorted({-1, 3, 6}) || mu == sorted({-1, 3, 3, 3});
  if (g == 4) return mu == Multiset{12};
  return false;
}

bool is_odd(int x) { return x % 2 != 0; }

// Shapes with two primitive components, matched as multisets.
bool chen_gendron_two_primitive(const Multiset& mu) {
  if (mu.size() == 2) {
    // (2n, -2)
    return mu[0] == -2 && mu[1] > 0 && mu[1] % 2 == 0;
  }
  if (mu.size() == 3) {
    // (2n, -l, -l), l odd
    if (mu[0] == mu[1] && mu[0] < 0 && is_odd(mu[0]) && mu[2] > 0 && mu[2] % 2 == 0) return true;
    // (n, n, -2l), n odd; (2n, 2n, -2)
    if (mu[1] == mu[2] && mu[0] < 0 && mu[0] % 2 == 0) {
      if (is_odd(mu[1])) return true;
      if (mu[0] == -2 && mu[1] > 0 && mu[1] % 2 == 0) return true;
    }
    return false;
  }
  if (mu.size() == 4) {
    // (n, n, -l, -l), n and l not both even
    if (mu[0] == mu[1] && mu[2] == mu[3] && mu[0] < 0 && mu[2] > 0) return is_odd(mu[0]) || is_odd(mu[2]);
  }
  return false;
}

}  // namespace

ComponentCount quad_components(const Signature& sig) {
  if (sig.k() != 2) throw OutOfCatalog("only quadratic differentials (k=2) are classified");
  if (sig.genus() < 2) throw OutOfCatalog("classification covers g >= 2 only");
  if (std::find(sig.m().begin(), sig.m().end(), 0) != sig.m().end())
    throw OutOfCatalog("orders must be non-zero");

  const int g = sig.genus();
  const Multiset mu = sorted(sig.m());
  ComponentCount out;
  if (sig.max_pole_order() < 2) {
    out.kind = ComponentKind::FiniteArea;
    if (sporadic(g, mu)) {
      out.count = 2;
      out.notes = "sporadic stratum";
    } else if (lanneau_two_components(g, mu)) {
      out.count = 2;
      out.notes = g == 2 ? "exceptional genus-2 stratum" : "hyperelliptic and non-hyperelliptic component";
    } else {
      out.count = 1;
      out.notes = "connected";
    }
    return out;
  }
  out.kind = ComponentKind::PrimitiveOnly;
  out.count = chen_gendron_two_primitive(mu) ? 2 : 1;
  out.notes = "primitive components only; components that are squares of abelian differentials are not counted";
  return out;
}

BigInt multidegree(int g, const std::vector<int>& d) {
  if (g < 1) throw BadInput("genus must be >= 1");
  if (static_cast<int>(d.size()) != g)
    throw BadInput("expected " + std::to_string(g) + " entries, got " + std::to_string(d.size()));
  BigInt value = 1;
  for (int j = 2; j <= g; ++j) value *= j;
  for (int x : d) {
    if (x == 0) throw BadInput("entries must be non-zero");
    value *= BigInt(x) * x;
  }
  return value;
}

ExponentialForm exponential_form(const std::vector<int>& tail) {
  ExponentialForm out;
  for (int x : tail) {
    auto it = std::find_if(out.distinct_values.begin(), out.distinct_values.end(),
                           [x](const auto& entry) { return entry.first == x; });
    if (it == out.distinct_values.end())
      out.distinct_values.emplace_back(x, 1);
    else
      ++it->second;
  }
  BigInt denominator = 1;
  for (const auto& [value, alpha] : out.distinct_values)
    for (int j = 2; j <= alpha; ++j) denominator *= j;
  out.multiplicity_factor = Rational(BigInt(1), denominator);
  return out;
}

}  // namespace kdiff
