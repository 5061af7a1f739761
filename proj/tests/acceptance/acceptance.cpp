// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "kdiff/audit.hpp"
#include "kdiff/classes.hpp"
#include "kdiff/cli.hpp"
#include "kdiff/curves.hpp"
#include "kdiff/level_graph.hpp"
#include "kdiff/pnk.hpp"
#include "kdiff/solver.hpp"
#include "kdiff/strata.hpp"

using namespace kdiff;
using kdiff::gen::uniform;

namespace {

// Collects the first failure; later checks are still counted.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
  }
  bool ok() const { return first_failure_.empty(); }
  std::string summary() const { return ok() ? std::to_string(total_) + " checks" : first_failure_; }

 private:
  int total_ = 0;
  std::string first_failure_;
};

std::string str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Check criterion1() {
  Check c;
  for (int g = 2; g <= 5; ++g) {
    const std::vector<int> ones(static_cast<std::size_t>(2 * g - 2), 1);
    c.expect(equals(qd_class(QdInput(g, ones)), qg_class(g)), "Qd(1,..,1) != Qg at g=" + std::to_string(g));
  }
  return c;
}

Check criterion2() {
  Check c;
  const AuditReport r = audit(3);
  const struct {
    Family f;
    int i, s, value;
  } expected[] = {{Family::A, 1, 1, 32}, {Family::A, 0, 2, 192}, {Family::A, 1, 2, 0}, {Family::A, 2, 2, 64},
                  {Family::A, 1, 4, 144}, {Family::A, 2, 4, 0},  {Family::B, 1, 0, 0}};
  for (const auto& e : expected) {
    const std::string label = to_string(TestCurveSpec{e.f, 3, e.i, e.s});
    const AuditEntry* entry = r.find(e.f, e.i, e.s);
    c.expect(entry != nullptr, label + " missing from the audit");
    if (!entry) continue;
    c.expect(entry->pairing == e.value && entry->oracle == e.value,
             label + ": pairing " + str(entry->pairing) + ", oracle " + str(entry->oracle));
  }
  return c;
}

Check criterion3() {
  Check c;
  const AuditReport r = audit(3);
  c.expect(r.entries.size() == valid_specs(3).size(), "audit does not cover every valid spec");
  for (const auto& spec : valid_specs(3))
    c.expect(r.find(spec.family, spec.i, spec.s) != nullptr, "audit misses " + to_string(spec));
  c.expect(!r.find(Family::A, 1, 3)->match && !r.find(Family::A, 2, 3)->match, "A:1:3 / A:2:3 expected to mismatch");
  std::ostringstream out, err;
  const int code = cli::run({"audit", "--g", "3", "--json"}, out, err);
  c.expect(code == cli::kAuditMismatch, "audit --g 3 exited " + std::to_string(code));
  const auto j = nlohmann::json::parse(out.str());
  for (const auto& e : j["entries"])
    c.expect(e.contains("pairing") && e.contains("oracle"), "report entry without both values");
  c.expect(j["entries"].size() == r.entries.size(), "JSON report size differs");
  return c;
}

Check criterion4() {
  Check c;
  for (int g = 2; g <= 4; ++g) {
    const std::string at = " at g=" + std::to_string(g);
    try {
      const QgSolution sol = solve_qg_coefficients(g);
      c.expect(sol.c_psi == 3 * pow2(2 * g - 3), "c_psi = " + str(sol.c_psi) + at);
      for (int i = 0; 2 * i <= g; ++i)
        for (int s = 1; s <= 2 * g - 3; ++s) {
          bool present = false;
          for (const auto& idx : boundary_indices(g, 2 * g - 2))
            present |= idx.genus == i && static_cast<int>(idx.points.size()) == s;
          if (!present) continue;
          const Rational want = -pow2(2 * g - 3) * (s - 2 * i) * (s - 2 * i + 2);
          c.expect(sol.coefficient(i, s) == want, "c_{" + std::to_string(i) + ":" + std::to_string(s) + "} = " +
                                                      str(sol.coefficient(i, s)) + ", expected " + str(want) + at);
        }
    } catch (const SingularSystem& e) {
      c.expect(false, std::string("SingularSystem") + at + ": " + e.what());
    }
  }
  return c;
}

Check criterion5() {
  Check c;
  for (int g = 3; g <= 5; ++g) {
    c.expect(weierstrass_check(g), "weierstrass_check false at g=" + std::to_string(g));
    const Rational psi = weierstrass_pullback(qg_class(g)).psi(1);
    c.expect(psi == 18 * pow4(g - 2), "pullback psi = " + str(psi) + " at g=" + std::to_string(g));
  }
  return c;
}

Check criterion6() {
  Check c;
  std::mt19937 rng(6);
  auto nonzero = [&] {
    int x = 0;
    while (x == 0) x = uniform(rng, -6, 6);
    return x;
  };
  for (int t = 0; t < 20; ++t) {
    const int h = nonzero(), k = nonzero(), d2 = nonzero(), d3 = nonzero();
    c.expect(multidegree(2, {h, 2 * k}) == BigInt(8) * h * h * k * k, "genus 2 multidegree");
    c.expect(multidegree(3, {d2, d3, 2 * k}) == BigInt(24) * k * k * d2 * d2 * d3 * d3, "genus 3 multidegree");
  }
  return c;
}

int count(int g, std::vector<int> mu) { return quad_components(Signature(2, g, std::move(mu))).count; }

Check criterion7() {
  Check c;
  auto expect_count = [&](int g, const std::vector<int>& mu, int want) {
    std::string label = "g=" + std::to_string(g) + " mu=(";
    for (std::size_t j = 0; j < mu.size(); ++j) label += (j ? "," : "") + std::to_string(mu[j]);
    const int got = count(g, mu);
    c.expect(got == want, label + ") gave " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  expect_count(2, {-1, -1, 6}, 2);
  expect_count(2, {-1, -1, 3, 3}, 2);
  for (int g = 2; g <= 6; ++g) {
    if (g < 3) continue;
    for (int k = 0; k <= g - 2; ++k) expect_count(g, {4 * (g - k) - 6, 4 * k + 2}, 2);
    for (int k = 0; k <= g - 1; ++k) expect_count(g, {2 * (g - k) - 3, 2 * (g - k) - 3, 4 * k + 2}, 2);
    for (int k = -1; k <= g - 2; ++k)
      expect_count(g, {2 * (g - k) - 3, 2 * (g - k) - 3, 2 * k + 1, 2 * k + 1}, 2);
  }
  expect_count(3, {-1, 9}, 2);
  expect_count(3, {-1, 3, 6}, 2);
  expect_count(3, {-1, 3, 3, 3}, 2);
  expect_count(4, {12}, 2);

  // Chen-Gendron: 20 signatures drawn from the four shapes plus near misses.
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    const int g = uniform(rng, 2, 6), total = 4 * g - 4;
    switch (t % 4) {
      case 0: {  // (2n, -l, -l)
        const int l = uniform(rng, 2, 5);
        expect_count(g, {total + 2 * l, -l, -l}, l % 2 ? 2 : 1);
        break;
      }
      case 1: {  // (n, n, -2l)
        const int l = uniform(rng, 1, 3), n = (total + 2 * l) / 2;
        expect_count(g, {n, n, -2 * l}, n % 2 ? 2 : 1);
        break;
      }
      case 2: {  // (n, n, -l, -l)
        const int l = uniform(rng, 2, 5), n = (total + 2 * l) / 2;
        expect_count(g, {n, n, -l, -l}, n % 2 && l % 2 ? 2 : 1);
        break;
      }
      default:  // (2n, -2)
        expect_count(g, {total + 2, -2}, 2);
    }
  }

  for (int g = 2; g <= 6; ++g) {
    const int target = 4 * g - 4 - 2 * (2 * g - 3);
    for (int d1 = -12; d1 <= 12; ++d1)
      for (int d2 = d1; d2 <= 12; ++d2) {
        const int d3 = target - d1 - d2;
        if (d3 < d2 || d1 == 0 || d2 == 0 || d3 == 0) continue;
        if (d1 % 2 == 0 && d2 % 2 == 0 && d3 % 2 == 0) continue;
        std::vector<int> mu{d1, d2, d3};
        mu.insert(mu.end(), static_cast<std::size_t>(2 * g - 3), 2);
        expect_count(g, mu, 1);
      }
  }
  return c;
}

LevelGraphInput load(const std::string& name) {
  const char* dir = std::getenv("KDIFF_TEST_DIR");
  std::ifstream in(std::string(dir ? dir : KDIFF_SOURCE_TEST_DIR) + "/data/" + name);
  if (!in) throw BadInput("cannot open " + name);
  return parse_level_graph_input(nlohmann::json::parse(in));
}

Check criterion8() {
  Check c;
  const auto ex1 = load("example1.json");
  const auto g1 = enumerate_level_graphs(validate_twisted(ex1.graph, ex1.k));
  c.expect(g1.size() == 1, "example 1 gave " + std::to_string(g1.size()) + " level graphs");
  if (!g1.empty()) {
    const GrcResult r = grc_admissible(g1[0], ex1.residues, ex1.k);
    c.expect(r.verdict == Verdict::Admissible, "example 1 not admissible");
    c.expect(r.conditions == std::vector<std::string>{"res^2_{e0}(eta_Y)=0"}, "example 1 condition not recorded");
  }
  const auto ex2 = load("example2.json");
  const auto g2 = enumerate_level_graphs(validate_twisted(ex2.graph, ex2.k));
  c.expect(g2.size() == 3, "example 2 gave " + std::to_string(g2.size()) + " level graphs");
  int admissible = 0;
  for (const auto& lg : g2) {
    const bool ok = grc_admissible(lg, ex2.residues, ex2.k).verdict == Verdict::Admissible;
    admissible += ok;
    // The failing graph is the one with X strictly above Y.
    c.expect(ok == !(lg.level[1] > lg.level[2]), "example 2 verdicts in the wrong graphs");
  }
  c.expect(admissible == 2, "example 2 has " + std::to_string(admissible) + " admissible graphs");
  return c;
}

bool close(Complex a, Complex b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

Check criterion9() {
  Check c;
  c.expect(close(eval_Pnk({Complex(1, 2), Complex(-3, 0.5)}, 1), Complex(-2, 2.5)), "P_{2,1} is not the sum");
  c.expect(close(eval_Pnk({Complex(0.3, -1.7)}, 2), -Complex(0.3, -1.7)), "P_{1,2}(R) != -R");
  c.expect(close(eval_Pnk({1.0, 1.0}, 2), 0.0), "P_{2,2}(1,1) != 0");
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const int n = uniform(rng, 1, 4), k = uniform(rng, 1, 4);
    std::vector<Complex> R;
    for (int j = 0; j < n; ++j) R.emplace_back(u(rng), u(rng));
    auto shuffled = R;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    c.expect(close(eval_Pnk(R, k), eval_Pnk(shuffled, k)), "permutation changed P_{n,k}");
  }
  return c;
}

Check criterion10() {
  Check c;
  const DivisorClass l = logan_class(2, 2, {1, 1});
  c.expect(l.lambda() == -1 && l.psi(1) == 1 && l.psi(2) == 1 && l.delta0() == 0, "Logan lambda/psi/delta0");
  c.expect(l.boundary(0, {1, 2}) == -3, "Logan delta_{0:{1,2}} = " + str(l.boundary(0, {1, 2})));
  for (int g = 2; g <= 4; ++g) {
    const DivisorClass q = qd_class(QdInput(g, {-1, 2 * g - 1}));
    c.expect(q.psi(1) == -pow2(2 * g - 3), "negative psi witness at g=" + std::to_string(g));
    const DivisorClass swapped = qd_class(QdInput(g, {2 * g - 1, -1}));
    c.expect(swapped.psi(2) == -pow2(2 * g - 3), "negative psi witness in slot 2 at g=" + std::to_string(g));
  }
  return c;
}

Check criterion11() {
  Check c;
  constexpr int kCases = 200;
  std::mt19937 rng(11);
  for (int t = 0; t < kCases; ++t) {
    const int g = uniform(rng, 2, 4), n = uniform(rng, 1, 4);
    const auto f = gen::random_functional(rng, g, n);
    const auto d1 = gen::random_divisor(rng, g, n), d2 = gen::random_divisor(rng, g, n);
    const Rational a = gen::random_rational(rng);
    c.expect(pair(f, add(scale(d1, a), d2)) == a * pair(f, d1) + pair(f, d2), "pairing bilinearity");
  }
  for (int t = 0; t < kCases;) {
    const int g = uniform(rng, 1, 5), n = uniform(rng, 0, 6), i = uniform(rng, 0, g);
    const auto S = gen::random_subset(rng, n);
    const auto Sc = complement(n, S);
    if ((i == 0 && S.size() < 2) || (i == g && Sc.size() < 2)) continue;
    const auto idx = canonicalize_index(g, n, i, S);
    c.expect(canonicalize_index(g, n, g - i, Sc) == idx && canonicalize_index(g, n, idx.genus, idx.points) == idx,
             "canonicalization involution");
    ++t;
  }
  const int n2 = test_curve_points(2);
  for (int t = 0; t < kCases; ++t) {
    CurveFunctional f(2, n2);
    for (const auto& spec : valid_specs(2)) f = add(f, scale(curve(spec), Rational(uniform(rng, -3, 3))));
    const auto d = gen::random_divisor(rng, 2, n2);
    c.expect(pair(f, d) == pair(f, g2_normal_form(d)), "g=2 pairing well-definedness");
  }
  for (int t = 0; t < kCases; ++t) {
    const int k = uniform(rng, 1, 3);
    const auto rel = validate_twisted(gen::random_dual_graph(rng, uniform(rng, 1, 5), k), k);
    const auto res = gen::random_residues(rng, rel.graph);
    auto blurred = res;
    for (auto& [key, value] : blurred)
      if (value == ResidueValue::NonZero) value = ResidueValue::Unknown;
    for (const auto& lg : enumerate_level_graphs(rel))
      if (grc_admissible(lg, res, k).verdict != Verdict::Inadmissible)
        c.expect(grc_admissible(lg, blurred, k).verdict != Verdict::Inadmissible, "grc monotonicity");
  }
  for (int t = 0; t < kCases; ++t) {
    const auto d = gen::random_divisor(rng, uniform(rng, 2, 5), uniform(rng, 1, 5));
    c.expect(divisor_from_json(nlohmann::json::parse(to_json(d).dump())) == d, "JSON round-trip");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"Qd(1,...,1) equals Qg for g=2..5", criterion1},
      {"verified audit subset at g=3", criterion2},
      {"full g=3 audit report, exit code 3", criterion3},
      {"coefficient solver for g=2,3,4", criterion4},
      {"Weierstrass pullback for g=3,4,5", criterion5},
      {"multidegree formulas", criterion6},
      {"quadratic stratum classifier", criterion7},
      {"level graphs of examples 1 and 2", criterion8},
      {"P_{n,k} values and symmetry", criterion9},
      {"Logan class and negative psi witness", criterion10},
      {"randomized property suites", criterion11},
  };
  int failures = 0;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    std::string detail;
    bool ok = false;
    try {
      const Check c = criteria[j].second();
      ok = c.ok();
      detail = c.summary();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::printf("%s criterion %zu: %s (%s)\n", ok ? "PASS" : "FAIL", j + 1, criteria[j].first.c_str(), detail.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
