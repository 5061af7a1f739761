#include "kdiff/divisor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kdiff {

std::vector<int> complement(int n, const std::vector<int>& points) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    if (!std::binary_search(points.begin(), points.end(), j)) out.push_back(j);
  return out;
}

namespace {

std::vector<int> sorted_labels(int n, const std::vector<int>& points) {
  std::vector<int> s = points;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw InvalidIndex("repeated marked point in boundary label");
  for (int j : s)
    if (j < 1 || j > n) throw InvalidIndex("marked point " + std::to_string(j) + " out of range 1.." + std::to_string(n));
  return s;
}

std::string describe(int i, const std::vector<int>& s) {
  std::ostringstream os;
  os << "(" << i << ", {";
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
  os << "})";
  return os.str();
}

}  // namespace

bool is_valid_index(int g, int n, int i, const std::vector<int>& points) {
  if (i < 0 || i > g) return false;
  const int size = static_cast<int>(points.size());
  if (i == 0 && size < 2) return false;
  if (i == g && size > n - 2) return false;
  return true;
}

BoundaryIndex canonicalize_index(int g, int n, int i, const std::vector<int>& points) {
  std::vector<int> s = sorted_labels(n, points);
  if (!is_valid_index(g, n, i, s))
    throw InvalidIndex("unstable boundary label " + describe(i, s) + " for g=" + std::to_string(g) +
                       ", n=" + std::to_string(n));
  const bool keep = 2 * i < g || (2 * i == g && !s.empty() && s.front() == 1);
  if (keep) return {i, std::move(s)};
  return {g - i, complement(n, s)};
}

std::vector<BoundaryIndex> boundary_indices(int g, int n) {
  std::set<BoundaryIndex> seen;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) s.push_back(j + 1);
    for (int i = 0; i <= g; ++i)
      if (is_valid_index(g, n, i, s)) seen.insert(canonicalize_index(g, n, i, s));
  }
  return {seen.begin(), seen.end()};
}

Rational pair(const CurveFunctional& f, const DivisorClass& d) {
  if (f.genus() != d.genus() || f.points() != d.points())
    throw DimensionMismatch("functional and class live on different moduli spaces");
  Rational total = f.lambda() * d.lambda() + f.delta0() * d.delta0();
  for (int j = 1; j <= d.points(); ++j) total += f.psi(j) * d.psi(j);
  for (const auto& [index, value] : f.boundary()) {
    auto it = d.boundary().find(index);
    if (it != d.boundary().end()) total += value * it->second;
  }
  return total;
}

DivisorClass g2_normal_form(const DivisorClass& d) {
  if (d.genus() != 2) throw WrongGenus("genus-2 relation applies only to g=2, got g=" + std::to_string(d.genus()));
  DivisorClass out = d;
  const Rational c = d.lambda();
  if (c == 0) return out;
  out.add_lambda(-c).add_delta0(c / 10);
  for (const auto& index : boundary_indices(2, d.points()))
    if (index.genus == 1) out.add_boundary(index, c / 5);
  return out;
}

bool equals(const DivisorClass& a, const DivisorClass& b) {
  require_same_space(a, b);
  if (a.genus() == 2) return g2_normal_form(a) == g2_normal_form(b);
  return a == b;
}

DivisorClass lambda_class(int g, int n) {
  DivisorClass d(g, n);
  d.add_lambda(1);
  return d;
}

DivisorClass psi_class(int g, int n, int j) {
  DivisorClass d(g, n);
  d.add_psi(j, 1);
  return d;
}

DivisorClass delta0_class(int g, int n) {
  DivisorClass d(g, n);
  d.add_delta0(1);
  return d;
}

DivisorClass boundary_class(int g, int n, int i, const std::vector<int>& points) {
  DivisorClass d(g, n);
  d.add_boundary(i, points, 1);
  return d;
}

namespace {

template <typename Tag>
nlohmann::ordered_json encode(const PicardVector<Tag>& v) {
  nlohmann::ordered_json j;
  j["g"] = v.genus();
  j["n"] = v.points();
  j["lambda"] = to_string(v.lambda());
  auto psi = nlohmann::ordered_json::array();
  for (const auto& c : v.psi()) psi.push_back(to_string(c));
  j["psi"] = std::move(psi);
  j["delta0"] = to_string(v.delta0());
  auto boundary = nlohmann::ordered_json::array();
  for (const auto& [index, c] : v.boundary()) {
    nlohmann::ordered_json entry;
    entry["i"] = index.genus;
    entry["S"] = index.points;
    entry["c"] = to_string(c);
    boundary.push_back(std::move(entry));
  }
  j["boundary"] = std::move(boundary);
  return j;
}

Rational read_rational(const nlohmann::json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  const auto& v = j.at(field);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError(std::string("field '") + field + "' must be a \"p/q\" string");
}

int read_int(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer())
    throw ParseError(std::string("missing or non-integer field '") + field + "'");
  return j.at(field).get<int>();
}

template <typename Tag>
PicardVector<Tag> decode(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("class document must be a JSON object");
  PicardVector<Tag> v(read_int(j, "g"), read_int(j, "n"));
  v.add_lambda(read_rational(j, "lambda"));
  v.add_delta0(read_rational(j, "delta0"));
  if (!j.contains("psi") || !j.at("psi").is_array()) throw ParseError("missing array field 'psi'");
  const auto& psi = j.at("psi");
  if (static_cast<int>(psi.size()) != v.points())
    throw ParseError("psi has " + std::to_string(psi.size()) + " entries, expected n=" + std::to_string(v.points()));
  for (int k = 0; k < v.points(); ++k) {
    const auto& entry = psi.at(static_cast<std::size_t>(k));
    if (!entry.is_string()) throw ParseError("psi entries must be \"p/q\" strings");
    v.add_psi(k + 1, parse_rational(entry.get<std::string>()));
  }
  if (j.contains("boundary")) {
    if (!j.at("boundary").is_array()) throw ParseError("'boundary' must be an array");
    for (const auto& entry : j.at("boundary")) {
      if (!entry.contains("S") || !entry.at("S").is_array()) throw ParseError("boundary entry needs an 'S' array");
      std::vector<int> s;
      for (const auto& label : entry.at("S")) {
        if (!label.is_number_integer()) throw ParseError("boundary labels must be integers");
        s.push_back(label.get<int>());
      }
      v.add_boundary(read_int(entry, "i"), s, read_rational(entry, "c"));
    }
  }
  return v;
}

}  // namespace

nlohmann::ordered_json to_json(const DivisorClass& d) { return encode(d); }

nlohmann::ordered_json to_json(const CurveFunctional& f) {
  auto j = encode(f);
  j["functional"] = true;
  return j;
}

DivisorClass divisor_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.value("functional", false)) throw ParseError("document is a curve functional, not a class");
  return decode<DivisorTag>(j);
}

CurveFunctional functional_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.value("functional", false)) throw ParseError("document lacks \"functional\": true");
  return decode<FunctionalTag>(j);
}

template <typename Tag>
std::string format_terms(const PicardVector<Tag>& v) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    os << (first ? "" : " + ") << to_string(c) << "*" << name;
    first = false;
  };
  term(v.lambda(), "lambda");
  for (int j = 1; j <= v.points(); ++j) term(v.psi(j), "psi_" + std::to_string(j));
  term(v.delta0(), "delta_0");
  for (const auto& [index, c] : v.boundary()) {
    std::string name = "delta_{" + std::to_string(index.genus) + ":{";
    for (std::size_t k = 0; k < index.points.size(); ++k)
      name += (k ? "," : "") + std::to_string(index.points[k]);
    term(c, name + "}}");
  }
  return first ? std::string("0") : os.str();
}

template std::string format_terms(const PicardVector<DivisorTag>&);
template std::string format_terms(const PicardVector<FunctionalTag>&);

}  // namespace kdiff
