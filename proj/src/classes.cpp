#include "kdiff/classes.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace kdiff {

QdInput::QdInput(int g, std::vector<int> d) : g_(g), d_(std::move(d)) {
  if (g_ < 2) throw BadSignature("genus must be >= 2");
  if (d_.empty()) throw BadSignature("need at least one marked point");
  const long long sum = std::accumulate(d_.begin(), d_.end(), 0LL);
  if (sum != 2LL * g_ - 2)
    throw BadSignature("sum of d is " + std::to_string(sum) + ", expected 2g-2 = " + std::to_string(2 * g_ - 2));
}

std::vector<int> QdInput::odd_or_negative() const {
  std::vector<int> out;
  for (int j = 1; j <= points(); ++j)
    if (d(j) < 0 || d(j) % 2 != 0) out.push_back(j);
  return out;
}

int QdInput::d_sum(const std::vector<int>& labels) const {
  int total = 0;
  for (int j : labels) total += d(j);
  return total;
}

namespace {

Rational binom2(long long m) { return Rational(m * (m - 1) / 2); }

bool contains_all(const std::vector<int>& sorted_haystack, const std::vector<int>& needles) {
  return std::includes(sorted_haystack.begin(), sorted_haystack.end(), needles.begin(), needles.end());
}

}  // namespace

DivisorClass logan_class(int g, int n, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != n) throw BadSignature("expected " + std::to_string(n) + " entries in d");
  if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) throw BadSignature("entries of d must be >= 0");
  if (std::accumulate(d.begin(), d.end(), 0) != g) throw BadSignature("entries of d must sum to g");
  DivisorClass out(g, n);
  out.add_lambda(-1);
  for (int j = 1; j <= n; ++j) out.add_psi(j, binom2(d[static_cast<std::size_t>(j - 1)] + 1));
  for (const auto& index : boundary_indices(g, n)) {
    long long dS = 0;
    for (int j : index.points) dS += d[static_cast<std::size_t>(j - 1)];
    out.add_boundary(index, -binom2(std::llabs(dS - index.genus) + 1));
  }
  return out;
}

DivisorClass qg_class(int g) {
  if (g < 2) throw WrongGenus("Q_g needs g >= 2");
  const int n = 2 * g - 2;
  const Rational K = pow2(2 * g - 3);
  DivisorClass out(g, n);
  out.add_lambda(-Rational(pow4(g)));
  out.add_delta0(pow2(2 * g - 4));
  for (int j = 1; j <= n; ++j) out.add_psi(j, 3 * K);
  for (const auto& index : boundary_indices(g, n)) {
    const int size = static_cast<int>(index.points.size());
    if (size == 0 || size == n) continue;
    const int x = size - 2 * index.genus;
    out.add_boundary(index, -K * x * (x + 2));
  }
  for (int i = 1; i <= g; ++i) {
    Rational c = pow2(2 * (g - i) - 1) * (Rational(pow4(i)) * (i - 1) + 2) * i;
    out.add_boundary(i, {}, -c);
  }
  return out;
}

DivisorClass qd_class(const QdInput& q) {
  const int g = q.genus(), n = q.points();
  DivisorClass out(g, n);
  const Rational four_g(pow4(g));
  out.add_delta0(pow2(2 * g - 4));
  const auto N = q.odd_or_negative();

  if (N.empty()) {
    for (int j = 1; j <= n; ++j) out.add_psi(j, (four_g - 1) * (q.d(j) + 2) * q.d(j) / 8);
    out.add_lambda(-(four_g - 1));
    for (const auto& index : boundary_indices(g, n)) {
      // Exactly one of (i,S), (g-i,S^c) has d_S >= 2i when every d_j is even.
      int i = index.genus;
      int x = q.d_sum(index.points) - 2 * i;
      if (x < 0) {
        i = g - i;
        x = -x - 2;
      }
      const Rational c = Rational(x + 2) * (4 * (Rational(pow4(i)) - 1) + x * (four_g - 1)) / 8;
      out.add_boundary(index, -c);
    }
    return out;
  }

  const Rational K = pow2(2 * g - 3);
  for (int j = 1; j <= n; ++j) out.add_psi(j, K * q.d(j) * (q.d(j) + 2));
  out.add_lambda(-four_g);
  for (const auto& index : boundary_indices(g, n)) {
    int i = index.genus;
    std::vector<int> S = index.points;
    if (!contains_all(S, N)) {
      auto Sc = complement(n, S);
      if (contains_all(Sc, N)) {
        i = g - i;
        S = std::move(Sc);
      }
    }
    const int x = q.d_sum(S) - 2 * i;
    Rational c;
    if (contains_all(S, N) && x >= 0)
      c = -Rational(x + 2) * (K * x + pow2(2 * i - 1));
    else
      c = -K * x * (x + 2);
    out.add_boundary(index, c);
  }
  return out;
}

const char* to_string(QdCase c) {
  switch (c) {
    case QdCase::CaseA: return "CaseA";
    case QdCase::CaseB: return "CaseB";
    case QdCase::CaseC: return "CaseC";
    case QdCase::None: return "None";
  }
  return "None";
}

QdCaseResult qd_case_classifier(const QdInput& q, int i, const std::vector<int>& points) {
  const int g = q.genus(), n = q.points();
  // Validates labels and stability; the canonical form itself is not needed.
  (void)canonicalize_index(g, n, i, points);
  std::vector<int> S = points;
  std::sort(S.begin(), S.end());
  const auto rest = complement(n, S);
  const int dS = q.d_sum(S);

  QdCaseResult result;
  result.d_prime.emplace_back(dS - 2 * i);
  result.d_double_prime.emplace_back(Rational(1 - i) + Rational(dS, 2));
  for (int j : rest) {
    result.d_prime.emplace_back(q.d(j));
    result.d_double_prime.emplace_back(q.d(j), 2);
  }
  const bool dpp_ok = std::all_of(result.d_double_prime.begin(), result.d_double_prime.end(),
                                  [](const Rational& r) { return is_integer(r) && r >= 0; });
  const bool d_even = q.all_even_nonnegative();
  const bool odd_in_S = std::any_of(S.begin(), S.end(), [&](int j) { return q.d(j) < 0 || q.d(j) % 2 != 0; });

  if (d_even && dpp_ok)
    result.label = QdCase::CaseA;
  else if (!d_even && dpp_ok)
    result.label = QdCase::CaseB;
  else if (odd_in_S || dS >= 2 * i)
    result.label = QdCase::CaseC;
  return result;
}

DivisorClass weierstrass_class() {
  DivisorClass w(2, 1);
  w.add_psi(1, 3).add_lambda(-1).add_boundary(1, {1}, -1);
  return w;
}

DivisorClass pullback_attach(const DivisorClass& d, int h, int attach_label) {
  const int big_g = d.genus(), n = d.points();
  const int g = big_g - h;
  if (h < 1 || g < 2)
    throw DimensionMismatch("cannot split genus " + std::to_string(big_g) + " as g + h with g >= 2, h = " + std::to_string(h));
  if (attach_label < 1 || attach_label > n) throw DimensionMismatch("attach label out of range");

  DivisorClass out(g, n);
  out.add_lambda(d.lambda()).add_delta0(d.delta0());
  for (int j = 1; j <= n; ++j)
    if (j != attach_label) out.add_psi(j, d.psi(j));
  for (const auto& [index, c] : d.boundary()) {
    int i = index.genus;
    std::vector<int> S = index.points;
    if (!std::binary_search(S.begin(), S.end(), attach_label)) {
      i = big_g - i;
      S = complement(n, S);
    }
    if (i < h) continue;
    if (i == h && S.size() == 1)
      out.add_psi(attach_label, -c);
    else
      out.add_boundary(i - h, S, c);
  }
  return out;
}

DivisorClass forgetful_pullback(const DivisorClass& d) {
  const int g = d.genus(), n = d.points(), added = n + 1;
  DivisorClass out(g, added);
  out.add_lambda(d.lambda()).add_delta0(d.delta0());
  for (int j = 1; j <= n; ++j) {
    out.add_psi(j, d.psi(j));
    out.add_boundary(0, {j, added}, -d.psi(j));
  }
  for (const auto& [index, c] : d.boundary()) {
    out.add_boundary(index.genus, index.points, c);
    auto with_new = index.points;
    with_new.push_back(added);
    out.add_boundary(index.genus, with_new, c);
  }
  return out;
}

DivisorClass weierstrass_pullback(const DivisorClass& d) {
  const int g = d.genus(), n = d.points();
  if (g < 3) throw WrongGenus("the genus-2 tail map needs g >= 3");
  // Marked points sit on the fixed component, so their psi classes pull back
  // to zero. The attaching node is delta_{2:empty}; a genus-1 unmarked tail
  // splitting off the moving genus-2 curve is delta_{1:empty}.
  const BoundaryIndex attach_node = canonicalize_index(g, n, 2, {});
  const BoundaryIndex elliptic_tail = canonicalize_index(g, n, 1, {});
  DivisorClass out(2, 1);
  out.add_lambda(d.lambda()).add_delta0(d.delta0());
  for (const auto& [index, c] : d.boundary()) {
    if (index == attach_node)
      out.add_psi(1, -c);
    else if (index == elliptic_tail)
      out.add_boundary(1, {1}, c);
  }
  return out;
}

bool weierstrass_check(int g) {
  const DivisorClass pulled = weierstrass_pullback(qg_class(g));
  const DivisorClass expected = scale(weierstrass_class(), Rational(6 * pow4(g - 2)));
  return equals(pulled, expected);
}

}  // namespace kdiff
