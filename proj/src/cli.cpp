#include "kdiff/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdiff/audit.hpp"
#include "kdiff/classes.hpp"
#include "kdiff/curves.hpp"
#include "kdiff/level_graph.hpp"
#include "kdiff/pnk.hpp"
#include "kdiff/solver.hpp"
#include "kdiff/strata.hpp"

namespace kdiff::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string class_kind;
  std::optional<int> g, n, k;
  std::string d, mu, curve, class_spec, input, R;
  bool list = false, admissible = false;
  std::size_t budget = kDefaultPnkBudget;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(trim(part));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<int> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const auto& token : split(text, ',')) {
    int value = 0;
    const char* end = token.data() + token.size();
    const char* start = token.data();
    if (!token.empty() && token.front() == '+') ++start;
    auto [ptr, ec] = std::from_chars(start, end, value);
    if (token.empty() || ec != std::errc() || ptr != end)
      throw ParseError(flag + ": '" + token + "' is not an integer");
    out.push_back(value);
  }
  return out;
}

double parse_double(const std::string& flag, const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw ParseError(flag + ": '" + text + "' is not a number");
  return value;
}

// "a", "bi", "a+bi", "a-bi".
Complex parse_complex(const std::string& flag, const std::string& token) {
  if (token.empty()) throw ParseError(flag + ": empty value");
  if (token.back() != 'i') return {parse_double(flag, token), 0.0};
  const std::string body = token.substr(0, token.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t p = body.size(); p-- > 1;)
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split_at = p;
      break;
    }
  auto imag = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(flag, s);
  };
  if (split_at == std::string::npos) return {0.0, imag(body)};
  return {parse_double(flag, body.substr(0, split_at)), imag(body.substr(split_at))};
}

int require(const std::optional<int>& value, const std::string& flag) {
  if (!value) throw ParseError(flag + " is required");
  return *value;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t left = 0, right = 0;
  for (const auto& [a, b] : rows) {
    left = std::max(left, a.size());
    right = std::max(right, b.size());
  }
  for (const auto& [a, b] : rows)
    out << std::left << std::setw(static_cast<int>(left)) << a << "  " << std::right << std::setw(static_cast<int>(right))
        << b << "\n";
}

std::string boundary_name(const BoundaryIndex& index) {
  std::string name = "delta_{" + std::to_string(index.genus) + ":{";
  for (std::size_t t = 0; t < index.points.size(); ++t) name += (t ? "," : "") + std::to_string(index.points[t]);
  return name + "}}";
}

template <typename Tag>
void print_vector(std::ostream& out, const std::string& title, const PicardVector<Tag>& v) {
  out << title << " g=" << v.genus() << " n=" << v.points() << "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("lambda", to_string(v.lambda()));
  for (int j = 1; j <= v.points(); ++j) rows.emplace_back("psi_" + std::to_string(j), to_string(v.psi(j)));
  rows.emplace_back("delta_0", to_string(v.delta0()));
  for (const auto& [index, c] : v.boundary()) rows.emplace_back(boundary_name(index), to_string(c));
  print_rows(out, rows);
}

DivisorClass build_class(const Options& o) {
  const std::string& kind = o.class_kind;
  if (kind == "weierstrass") return weierstrass_class();
  const int g = require(o.g, "--g");
  if (kind == "qg") {
    if (o.n && *o.n != 2 * g - 2) throw ParseError("--n must be 2g-2 = " + std::to_string(2 * g - 2) + " for qg");
    return qg_class(g);
  }
  const auto d = parse_int_list("--d", o.d);
  if (d.empty()) throw ParseError("--d is required for class " + kind);
  if (o.n && *o.n != static_cast<int>(d.size()))
    throw ParseError("--n is " + std::to_string(*o.n) + " but --d has " + std::to_string(d.size()) + " entries");
  if (kind == "qd") return qd_class(QdInput(g, d));
  if (kind == "logan") return logan_class(g, static_cast<int>(d.size()), d);
  throw ParseError("class must be one of qg, qd, logan, weierstrass; got '" + kind + "'");
}

Json read_json_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(flag + ": cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(flag + ": '" + path + "' is not valid JSON (" + e.what() + ")");
  }
}

DivisorClass class_for_pairing(const Options& o, int g) {
  const std::string& spec = o.class_spec;
  if (spec.empty()) throw ParseError("--class is required");
  const int n = test_curve_points(g);
  if (spec == "qg") return qg_class(g);
  if (spec.rfind("qd:", 0) == 0) return qd_class(QdInput(g, parse_int_list("--class", spec.substr(3))));
  if (spec.rfind("logan:", 0) == 0) return logan_class(g, n, parse_int_list("--class", spec.substr(6)));
  try {
    return divisor_from_json(read_json_file("--class", spec));
  } catch (const ParseError& e) {
    throw ParseError("--class: " + std::string(e.what()));
  }
}

int cmd_class(const Options& o, std::ostream& out) {
  const DivisorClass d = build_class(o);
  if (o.json)
    print_json(out, to_json(d));
  else
    print_vector(out, "class " + o.class_kind, d);
  return kOk;
}

int cmd_curve(const Options& o, std::ostream& out) {
  const int g = require(o.g, "--g");
  if (o.curve.empty()) throw ParseError("--curve is required");
  const TestCurveSpec spec = parse_spec(g, o.curve);
  const CurveFunctional f = curve(spec);
  if (o.json)
    print_json(out, to_json(f));
  else
    print_vector(out, "curve " + to_string(spec), f);
  return kOk;
}

int cmd_pair(const Options& o, std::ostream& out) {
  const int g = require(o.g, "--g");
  if (o.curve.empty()) throw ParseError("--curve is required");
  const TestCurveSpec spec = parse_spec(g, o.curve);
  const Rational value = pair(curve(spec), class_for_pairing(o, g));
  if (o.json) {
    Json j;
    j["g"] = g;
    j["curve"] = to_string(spec);
    j["class"] = o.class_spec;
    j["value"] = to_string(value);
    print_json(out, j);
  } else {
    out << to_string(value) << "\n";
  }
  return kOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const AuditReport report = audit(require(o.g, "--g"));
  if (o.json)
    print_json(out, to_json(report));
  else
    out << format_table(report);
  return report.all_match() ? kOk : kAuditMismatch;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const QgSolution sol = solve_qg_coefficients(require(o.g, "--g"));
  if (o.json) {
    Json j;
    j["g"] = sol.g;
    j["rank"] = sol.rank;
    j["unknowns"] = sol.unknowns;
    j["c_psi"] = to_string(sol.c_psi);
    auto coeffs = Json::array();
    for (const auto& [u, c] : sol.c) coeffs.push_back(Json{{"i", u.i}, {"s", u.s}, {"c", to_string(c)}});
    j["coefficients"] = std::move(coeffs);
    auto eqs = Json::array();
    for (const auto& spec : sol.equations) eqs.push_back(to_string(spec));
    j["equations"] = std::move(eqs);
    auto residuals = Json::array();
    for (const auto& r : sol.residuals)
      residuals.push_back(Json{{"curve", to_string(r.spec)},
                               {"lhs", to_string(r.lhs)},
                               {"oracle", to_string(r.oracle)},
                               {"residual", to_string(r.residual())}});
    j["residuals"] = std::move(residuals);
    print_json(out, j);
    return kOk;
  }
  out << "solve g=" << sol.g << "  rank " << sol.rank << "/" << sol.unknowns << "\n";
  std::vector<std::pair<std::string, std::string>> rows{{"c_psi", to_string(sol.c_psi)}};
  for (const auto& [u, c] : sol.c) rows.emplace_back(to_string(u), to_string(c));
  print_rows(out, rows);
  out << "cross-check residuals (relation - oracle):\n";
  rows.clear();
  for (const auto& r : sol.residuals) rows.emplace_back(to_string(r.spec), to_string(r.residual()));
  print_rows(out, rows);
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Signature sig(o.k.value_or(2), require(o.g, "--g"), parse_int_list("--mu", o.mu));
  if (sig.m().empty()) throw ParseError("--mu is required");
  const ComponentCount c = quad_components(sig);
  if (o.json) {
    Json j;
    j["count"] = c.count;
    j["kind"] = to_string(c.kind);
    j["notes"] = c.notes;
    j["dim"] = dim_stratum(sig);
    j["codim_P"] = codim_P(sig);
    print_json(out, j);
  } else {
    print_rows(out, {{"count", std::to_string(c.count)},
                     {"kind", to_string(c.kind)},
                     {"dim", std::to_string(dim_stratum(sig))},
                     {"codim_P", std::to_string(codim_P(sig))}});
    out << "notes: " << c.notes << "\n";
  }
  return kOk;
}

int cmd_multidegree(const Options& o, std::ostream& out) {
  const int g = require(o.g, "--g");
  const auto d = parse_int_list("--d", o.d);
  const BigInt value = multidegree(g, d);
  if (o.json) {
    Json j;
    j["g"] = g;
    j["d"] = d;
    j["multidegree"] = to_string(value);
    print_json(out, j);
  } else {
    out << to_string(value) << "\n";
  }
  return kOk;
}

std::string level_summary(const LevelGraph& lg) {
  std::string s;
  for (int v = 0; v < lg.graph.size(); ++v) {
    const auto& name = lg.graph.vertices[static_cast<std::size_t>(v)].name;
    s += (v ? " " : "") + (name.empty() ? "v" + std::to_string(v) : name) + ":" +
         std::to_string(lg.level[static_cast<std::size_t>(v)]);
  }
  return s;
}

int cmd_levelgraphs(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw ParseError("--input is required");
  if (o.list && o.admissible) throw ParseError("--list and --admissible are exclusive");
  const LevelGraphInput in = parse_level_graph_input(read_json_file("--input", o.input));
  const TwistedOrderRelation rel = validate_twisted(in.graph, in.k);
  const auto graphs = enumerate_level_graphs(rel);

  std::vector<std::optional<GrcResult>> verdicts(graphs.size());
  int admissible = 0;
  if (!o.list)
    for (std::size_t t = 0; t < graphs.size(); ++t) {
      verdicts[t] = grc_admissible(graphs[t], in.residues, in.k);
      admissible += verdicts[t]->verdict == Verdict::Admissible;
    }
  auto shown = [&](std::size_t t) { return !o.admissible || verdicts[t]->verdict == Verdict::Admissible; };

  if (o.json) {
    Json j;
    j["k"] = in.k;
    j["count"] = graphs.size();
    if (!o.list) j["admissible"] = admissible;
    auto arr = Json::array();
    for (std::size_t t = 0; t < graphs.size(); ++t) {
      if (!shown(t)) continue;
      Json entry = to_json(graphs[t]);
      entry["index"] = t;
      if (verdicts[t]) {
        const Json verdict = to_json(*verdicts[t]);
        for (const auto& [key, value] : verdict.items()) entry[key] = value;
      }
      arr.push_back(std::move(entry));
    }
    j["level_graphs"] = std::move(arr);
    print_json(out, j);
    return kOk;
  }
  out << "level graphs: " << graphs.size();
  if (!o.list) out << " (" << admissible << " admissible)";
  out << "\n";
  for (std::size_t t = 0; t < graphs.size(); ++t) {
    if (!shown(t)) continue;
    out << "#" << t << "  " << level_summary(graphs[t]);
    if (verdicts[t]) {
      out << "  " << to_string(verdicts[t]->verdict);
      for (const auto& c : verdicts[t]->conditions) out << "  [" << c << "]";
      if (!verdicts[t]->reason.empty()) out << "  (" << verdicts[t]->reason << ")";
    }
    out << "\n";
  }
  return kOk;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

int cmd_pnk(const Options& o, std::ostream& out) {
  const int k = require(o.k, "--k");
  if (trim(o.R).empty()) throw ParseError("--R is required");
  std::vector<Complex> R;
  for (const auto& token : split(o.R, ',')) R.push_back(parse_complex("--R", token));
  const Complex value = eval_Pnk(R, k, o.budget);
  if (o.json) {
    Json j;
    j["n"] = R.size();
    j["k"] = k;
    j["re"] = format_double(value.real());
    j["im"] = format_double(value.imag());
    print_json(out, j);
  } else {
    out << "P_{" << R.size() << "," << k << "} = " << format_double(value.real()) << " + " << format_double(value.imag())
        << "i\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Divisor classes, test curves and strata of k-differentials", "kdiff"};
  app.require_subcommand(1);

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON"); };

  auto* cls = app.add_subcommand("class", "Print a closed-form divisor class");
  cls->add_option("kind", o.class_kind, "qg | qd | logan | weierstrass")->required();
  cls->add_option("--g", o.g, "Genus");
  cls->add_option("--n", o.n, "Number of marked points");
  cls->add_option("--d", o.d, "Comma-separated integers");
  json_flag(cls);

  auto* crv = app.add_subcommand("curve", "Print the intersection data of a test curve");
  crv->add_option("--g", o.g, "Genus")->required();
  crv->add_option("--curve", o.curve, "FAM:i:s, e.g. A:1:2")->required();
  json_flag(crv);

  auto* pr = app.add_subcommand("pair", "Intersect a test curve with a class");
  pr->add_option("--g", o.g, "Genus")->required();
  pr->add_option("--curve", o.curve, "FAM:i:s")->required();
  pr->add_option("--class", o.class_spec, "qg | qd:d1,.. | logan:d1,.. | path to a class JSON file")->required();
  json_flag(pr);

  auto* aud = app.add_subcommand("audit", "Compare every test-curve pairing with Q_g against its enumerative value");
  aud->add_option("--g", o.g, "Genus")->required();
  json_flag(aud);

  auto* slv = app.add_subcommand("solve", "Solve for the coefficients of Q_g from the test-curve relations");
  slv->add_option("--g", o.g, "Genus")->required();
  json_flag(slv);

  auto* cs = app.add_subcommand("classify-stratum", "Connected components of a stratum of quadratic differentials");
  cs->add_option("--k", o.k, "Order of the differentials (2)");
  cs->add_option("--g", o.g, "Genus")->required();
  cs->add_option("--mu", o.mu, "Comma-separated signature")->required()->allow_extra_args(false);
  json_flag(cs);

  auto* md = app.add_subcommand("multidegree", "Degree of the map from g-tuples of points to Pic");
  md->add_option("--g", o.g, "Genus")->required();
  md->add_option("--d", o.d, "Comma-separated non-zero integers")->required();
  json_flag(md);

  auto* lg = app.add_subcommand("levelgraphs", "Enumerate level graphs and check the global residue condition");
  lg->add_option("--input", o.input, "Dual graph JSON file")->required();
  lg->add_flag("--list", o.list, "Only list the level graphs");
  lg->add_flag("--admissible", o.admissible, "Only show admissible level graphs");
  json_flag(lg);

  auto* pn = app.add_subcommand("pnk", "Evaluate P_{n,k} numerically");
  pn->add_option("--k", o.k, "Order k")->required();
  pn->add_option("--R", o.R, "Comma-separated complex values, e.g. 1,2-3i")->required();
  pn->add_option("--budget", o.budget, "Maximum number of root tuples");
  json_flag(pn);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (cls->parsed()) return cmd_class(o, out);
    if (crv->parsed()) return cmd_curve(o, out);
    if (pr->parsed()) return cmd_pair(o, out);
    if (aud->parsed()) return cmd_audit(o, out);
    if (slv->parsed()) return cmd_solve(o, out);
    if (cs->parsed()) return cmd_classify(o, out);
    if (md->parsed()) return cmd_multidegree(o, out);
    if (lg->parsed()) return cmd_levelgraphs(o, out);
    if (pn->parsed()) return cmd_pnk(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace kdiff::cli
