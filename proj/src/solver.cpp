#include "kdiff/solver.hpp"

#include <algorithm>
#include <set>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

namespace kdiff {

namespace {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

int points(int g) { return test_curve_points(g); }

void accumulate(LinearRow& row, int g, int i, int s, const Rational& c) {
  if (c == 0) return;
  const Unknown u = size_class(g, i, s);
  if (!u.psi && u.i == 0 && u.s == 1)
    row[Unknown::c_psi()] -= c;
  else
    row[u] += c;
}

void accumulate_psi(LinearRow& row, const Rational& c) {
  if (c != 0) row[Unknown::c_psi()] += c;
}

LinearRow prune(LinearRow row) {
  std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  return row;
}

Rational evaluate(const LinearRow& row, const Rational& c_psi, const std::map<Unknown, Rational>& c) {
  Rational total = 0;
  for (const auto& [u, coeff] : row) {
    if (u.psi) {
      total += coeff * c_psi;
      continue;
    }
    auto it = c.find(u);
    if (it == c.end()) throw SingularSystem("unknown " + to_string(u) + " has no solved value");
    total += coeff * it->second;
  }
  return total;
}

// Gauss-Jordan elimination in place; returns pivot columns per row.
std::vector<Eigen::Index> reduce(RationalMatrix& m, Eigen::Index columns) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < columns && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(row).swap(m.row(pivot));
    const Rational lead = m(row, col);
    m.row(row) /= lead;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::string to_string(const Unknown& u) {
  if (u.psi) return "c_psi";
  return "c_{" + std::to_string(u.i) + ":" + std::to_string(u.s) + "}";
}

Unknown size_class(int g, int i, int s) {
  const int n = points(g);
  if (2 * i > g || (2 * i == g && s > n - s)) return {false, g - i, n - s};
  return {false, i, s};
}

std::vector<Unknown> size_classes(int g) {
  const int n = points(g);
  std::set<Unknown> seen;
  for (int i = 0; i <= g; ++i)
    for (int s = 0; s <= n; ++s) {
      if (i == 0 && s < 2) continue;
      if (i == g && s > n - 2) continue;
      seen.insert(size_class(g, i, s));
    }
  return {seen.begin(), seen.end()};
}

bool in_printed_A_range(int g, int i, int s) {
  if (i < 0 || i > g || s < 1 || s > 2 * g - 2) return false;
  if (i == g && s > 2 * g - 5) return false;
  if (i == g - 1 && s > 2 * g - 3) return false;
  return true;
}

LinearRow formula_row(const TestCurveSpec& spec) {
  const int g = spec.g, i = spec.i, s = spec.s, n = points(g);
  const bool degenerate_A = spec.family == Family::A && i == 0 && s == 1 && in_printed_A_range(g, i, s);
  if (!is_valid(spec) && !degenerate_A)
    throw InvalidSpec("no relation for " + to_string(spec) + " at g=" + std::to_string(g));

  LinearRow row;
  switch (spec.family) {
    case Family::A:
      if (n - s > 0) {
        accumulate_psi(row, n - s);
        accumulate(row, g, i, s + 1, n - s);
      }
      accumulate(row, g, i, s, -(4 * g - 2 * i - 4 - s));
      break;
    case Family::B:
      accumulate_psi(row, 2 * i + 2 * s - 1);
      accumulate(row, g, 0, 2, s);
      accumulate(row, g, i, s, 1);
      accumulate(row, g, i, s + 1, -1);
      break;
    case Family::C:
      accumulate_psi(row, 2);
      accumulate(row, g, 0, 2, 1);
      accumulate(row, g, g - i, 2 * g - s - 3, 1);
      accumulate(row, g, g - i, 2 * g - s - 4, -1);
      accumulate(row, g, i, s + 1, 1);
      accumulate(row, g, i, s, -1);
      break;
  }
  return prune(std::move(row));
}

LinearRow functional_row(const CurveFunctional& f) {
  if (f.lambda() != 0 || f.delta0() != 0)
    throw InvalidSpec("functional has lambda or delta_0 values; no symmetric row");
  LinearRow row;
  for (const auto& v : f.psi()) accumulate_psi(row, v);
  for (const auto& [index, v] : f.boundary())
    accumulate(row, f.genus(), index.genus, static_cast<int>(index.points.size()), v);
  return prune(std::move(row));
}

BigInt solver_oracle(const TestCurveSpec& spec) {
  if (spec.family == Family::A && !is_valid(spec) && in_printed_A_range(spec.g, spec.i, spec.s)) {
    const BigInt x = spec.s - 2 * spec.i;
    return pow4(spec.g - 1) * x * x * (spec.g - spec.i);
  }
  return oracle_dot_Qg(spec);
}

Rational QgSolution::coefficient(int i, int s) const {
  const Unknown u = size_class(g, i, s);
  if (!u.psi && u.i == 0 && u.s == 1) return -c_psi;
  auto it = c.find(u);
  if (it == c.end()) throw InvalidIndex("no size class " + to_string(u) + " at g=" + std::to_string(g));
  return it->second;
}

QgSolution solve_qg_coefficients(int g) {
  if (g < 2) throw WrongGenus("solver needs g >= 2");
  QgSolution out;
  out.g = g;

  for (int i = 0; i <= g; ++i)
    for (int s = 1; s <= 2 * g - 2; ++s)
      if (in_printed_A_range(g, i, s) && s != 2 * g - 3) out.equations.push_back({Family::A, g, i, s});
  out.equations.push_back({Family::B, g, 1, 0});

  std::vector<Unknown> columns{Unknown::c_psi()};
  for (const auto& u : size_classes(g)) columns.push_back(u);
  out.unknowns = static_cast<int>(columns.size());
  const auto cols = static_cast<Eigen::Index>(columns.size());

  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(out.equations.size()), cols + 1);
  for (std::size_t r = 0; r < out.equations.size(); ++r) {
    const auto row = formula_row(out.equations[r]);
    for (const auto& [u, coeff] : row) {
      const auto col = std::find(columns.begin(), columns.end(), u) - columns.begin();
      m(static_cast<Eigen::Index>(r), col) = coeff;
    }
    m(static_cast<Eigen::Index>(r), cols) = Rational(solver_oracle(out.equations[r]));
  }

  const auto pivots = reduce(m, cols);
  out.rank = static_cast<int>(pivots.size());
  for (Eigen::Index r = out.rank; r < m.rows(); ++r)
    if (m(r, cols) != 0)
      throw SingularSystem("inconsistent A-system at g=" + std::to_string(g) + " (rank " + std::to_string(out.rank) + ")");
  if (out.rank < out.unknowns)
    throw SingularSystem("A-system at g=" + std::to_string(g) + " has rank " + std::to_string(out.rank) + " for " +
                         std::to_string(out.unknowns) + " unknowns");

  for (int r = 0; r < out.rank; ++r) {
    const Unknown& u = columns[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])];
    if (u.psi)
      out.c_psi = m(r, cols);
    else
      out.c[u] = m(r, cols);
  }

  for (const auto& spec : valid_specs(g)) {
    if (std::find(out.equations.begin(), out.equations.end(), spec) != out.equations.end()) continue;
    out.residuals.push_back({spec, evaluate(formula_row(spec), out.c_psi, out.c), oracle_dot_Qg(spec)});
  }
  return out;
}

}  // namespace kdiff
