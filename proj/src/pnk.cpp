#include "kdiff/pnk.hpp"

#include <numbers>
#include <string>

#include "kdiff/errors.hpp"

namespace kdiff {

namespace {

void check_budget(std::size_t n, int k, std::size_t budget) {
  if (k < 1) throw BadInput("k must be positive");
  if (n == 0) throw BadInput("P_{n,k} needs at least one argument");
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < n; ++i) {
    tuples *= static_cast<std::size_t>(k);
    if (tuples > budget)
      throw BudgetExceeded("k^n = " + std::to_string(k) + "^" + std::to_string(n) + " exceeds the budget of " +
                           std::to_string(budget) + " root tuples");
  }
}

}  // namespace

Complex pnk_from_roots(const std::vector<Complex>& roots, int k, std::size_t budget) {
  check_budget(roots.size(), k, budget);
  const std::size_t n = roots.size();
  std::vector<Complex> unity(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) unity[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / k);

  // Odometer over the k^n exponent tuples.
  std::vector<int> exponent(n, 0);
  Complex product = 1.0;
  while (true) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += roots[i] * unity[static_cast<std::size_t>(exponent[i])];
    product *= sum;
    std::size_t i = 0;
    while (i < n && ++exponent[i] == k) exponent[i++] = 0;
    if (i == n) break;
  }
  return product;
}

Complex eval_Pnk(const std::vector<Complex>& R, int k, std::size_t budget) {
  check_budget(R.size(), k, budget);
  std::vector<Complex> roots;
  roots.reserve(R.size());
  for (const auto& r : R) roots.push_back(r == 0.0 ? Complex(0.0) : std::pow(r, 1.0 / k));
  return pnk_from_roots(roots, k, budget);
}

}  // namespace kdiff
