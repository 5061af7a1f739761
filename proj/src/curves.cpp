#include "kdiff/curves.hpp"

#include <numeric>
#include <sstream>

namespace kdiff {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
  }
  return '?';
}

std::string to_string(const TestCurveSpec& spec) {
  std::ostringstream os;
  os << family_letter(spec.family) << ":" << spec.i << ":" << spec.s;
  return os.str();
}

TestCurveSpec parse_spec(int g, const std::string& text) {
  std::istringstream is(text);
  std::string fam, i, s;
  if (!std::getline(is, fam, ':') || !std::getline(is, i, ':') || !std::getline(is, s) || fam.size() != 1)
    throw ParseError("curve spec must look like FAM:i:s, got '" + text + "'");
  TestCurveSpec spec;
  switch (fam[0]) {
    case 'A': spec.family = Family::A; break;
    case 'B': spec.family = Family::B; break;
    case 'C': spec.family = Family::C; break;
    default: throw ParseError("unknown curve family '" + fam + "'");
  }
  try {
    std::size_t used_i = 0, used_s = 0;
    spec.i = std::stoi(i, &used_i);
    spec.s = std::stoi(s, &used_s);
    if (used_i != i.size() || used_s != s.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw ParseError("curve spec parameters must be integers, got '" + text + "'");
  }
  spec.g = g;
  return spec;
}

bool is_valid(const TestCurveSpec& spec) {
  const int g = spec.g, i = spec.i, s = spec.s;
  if (g < 2 || i < 0 || i > g) return false;
  switch (spec.family) {
    case Family::A:
      if (s < 1 || s > 2 * g - 2) return false;
      if (i == g && s > 2 * g - 5) return false;
      if (i == g - 1 && s > 2 * g - 3 && s != 2 * g - 2) return false;
      return !(i == 0 && s < 2);
    case Family::B:
      if (s < 0 || s > 2 * g - 3) return false;
      if (i == 0 && s < 2) return false;
      return !(i == g && s > 2 * g - 5);
    case Family::C:
      if (s < 0 || s > 2 * g - 4) return false;
      if (i == 0 && s < 2) return false;
      return !(i == g && s > 2 * g - 6);
  }
  return false;
}

std::vector<TestCurveSpec> valid_specs(int g) {
  std::vector<TestCurveSpec> out;
  for (Family f : {Family::A, Family::B, Family::C})
    for (int i = 0; i <= g; ++i)
      for (int s = 0; s <= 2 * g - 2; ++s) {
        TestCurveSpec spec{f, g, i, s};
        if (is_valid(spec)) out.push_back(spec);
      }
  return out;
}

namespace {

void require_valid(const TestCurveSpec& spec) {
  if (!is_valid(spec))
    throw InvalidSpec("test curve " + to_string(spec) + " is outside its parameter range at g=" + std::to_string(spec.g));
}

std::vector<int> iota_labels(int first, int last) {
  std::vector<int> v;
  for (int j = first; j <= last; ++j) v.push_back(j);
  return v;
}

}  // namespace

CurveFunctional curve_A(int g, int i, int s) {
  require_valid({Family::A, g, i, s});
  const int n = test_curve_points(g);
  CurveFunctional f(g, n);
  const auto head = iota_labels(1, s);
  f.add_boundary(i, head, -(4 * g - 2 * i - 4 - s));
  for (int j = s + 1; j <= n; ++j) {
    auto with_j = head;
    with_j.push_back(j);
    f.add_boundary(i, with_j, 1);
    f.add_psi(j, 1);
  }
  return f;
}

CurveFunctional curve_B(int g, int i, int s) {
  require_valid({Family::B, g, i, s});
  CurveFunctional f(g, test_curve_points(g));
  f.add_boundary(i, iota_labels(1, s), 1);
  f.add_boundary(i, iota_labels(1, s + 1), -1);
  f.add_psi(s + 1, 2 * i - 1 + s);
  for (int j = 1; j <= s; ++j) {
    f.add_psi(j, 1);
    f.add_boundary(0, {j, s + 1}, 1);
  }
  return f;
}

CurveFunctional curve_C(int g, int i, int s) {
  require_valid({Family::C, g, i, s});
  const int n = test_curve_points(g);
  CurveFunctional f(g, n);
  const auto tail = iota_labels(s + 3, n);
  auto tail_with_moving = tail;
  tail_with_moving.push_back(s + 1);
  f.add_boundary(i, iota_labels(1, s), -1);
  f.add_boundary(g - i, tail, -1);
  f.add_psi(s + 1, 1);
  f.add_psi(s + 2, 1);
  f.add_boundary(0, {s + 1, s + 2}, 1);
  f.add_boundary(i, iota_labels(1, s + 1), 1);
  f.add_boundary(g - i, tail_with_moving, 1);
  return f;
}

CurveFunctional curve(const TestCurveSpec& spec) {
  switch (spec.family) {
    case Family::A: return curve_A(spec.g, spec.i, spec.s);
    case Family::B: return curve_B(spec.g, spec.i, spec.s);
    case Family::C: return curve_C(spec.g, spec.i, spec.s);
  }
  throw InvalidSpec("unknown family");
}

BigInt oracle_A_dot_Qg(int g, int i, int s) {
  require_valid({Family::A, g, i, s});
  if (s != 2 * g - 2) {
    const BigInt x = s - 2 * i;
    return pow4(g - 1) * x * x * (g - i);
  }
  // All marked points on X: twisted differentials on Y either not a square
  // (2-torsion twist) or the square of a differential vanishing at a
  // Weierstrass point y.
  const BigInt h = g - i;
  return (pow4(g - i) - 1) * pow4(i) * (h - 1) * (h - 1) * h + pow4(i) * h * (h + 1) * (h - 1);
}

BigInt oracle_B_dot_Qg(int g, int i, int s) {
  require_valid({Family::B, g, i, s});
  BigInt value = pow4(g - 1) * i;
  if (s == 0) value -= pow4(g - i) * i;
  return value;
}

BigInt oracle_C_dot_Qg(int g, int i, int s) {
  require_valid({Family::C, g, i, s});
  if (s == 0) return pow4(g - i) * i;
  if (s == 2 * g - 4) return pow4(i) * (g - i);
  return 0;
}

BigInt oracle_dot_Qg(const TestCurveSpec& spec) {
  switch (spec.family) {
    case Family::A: return oracle_A_dot_Qg(spec.g, spec.i, spec.s);
    case Family::B: return oracle_B_dot_Qg(spec.g, spec.i, spec.s);
    case Family::C: return oracle_C_dot_Qg(spec.g, spec.i, spec.s);
  }
  throw InvalidSpec("unknown family");
}

std::optional<CurveCoincidence> documented_coincidence(const TestCurveSpec& spec) {
  const int n = test_curve_points(spec.g);
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 1);
  if (spec.family == Family::C && spec.i == 0 && spec.s == 1)
    return CurveCoincidence{{Family::B, spec.g, 0, 2}, identity};
  if (spec.family == Family::A && spec.i == 0 && spec.s == 1) {
    auto sigma = identity;
    std::swap(sigma.front(), sigma.back());
    return CurveCoincidence{{Family::B, spec.g, spec.g, 2 * spec.g - 3}, sigma};
  }
  return std::nullopt;
}

}  // namespace kdiff
