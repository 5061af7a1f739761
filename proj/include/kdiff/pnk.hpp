#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace kdiff {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultPnkBudget = 4096;

/// P_{n,k}(R_1..R_n): product, over every choice of k-th roots r_i of R_i, of
/// r_1 + ... + r_n. Floating point; throws BudgetExceeded when k^n exceeds
/// `budget` and BadInput for k < 1 or an empty argument list.
Complex eval_Pnk(const std::vector<Complex>& R, int k, std::size_t budget = kDefaultPnkBudget);

/// Same product, with root sets generated from the given roots (r_i, r_i*zeta,
/// ..., r_i*zeta^{k-1}). Any root of R_i yields the same value.
Complex pnk_from_roots(const std::vector<Complex>& roots, int k, std::size_t budget = kDefaultPnkBudget);

}  // namespace kdiff
