#include "kdiff/level_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kdiff {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (at(x) != x) x = at(x) = at(at(x));
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    at(std::max(x, y)) = std::min(x, y);
    return true;
  }

 private:
  int& at(int x) { return parent_[static_cast<std::size_t>(x)]; }
  std::vector<int> parent_;
};

enum class EdgeKind { Horizontal, AAbove, BAbove };

EdgeKind kind_of(const Edge& e, int k) {
  if (e.ord_a == -k && e.ord_b == -k) return EdgeKind::Horizontal;
  return e.ord_a > e.ord_b ? EdgeKind::AAbove : EdgeKind::BAbove;
}

// Branch of a vertical edge lying on the lower component.
std::pair<int, char> lower_branch(const Edge& e, int k) {
  return kind_of(e, k) == EdgeKind::AAbove ? std::pair{e.b, 'b'} : std::pair{e.a, 'a'};
}

void check_structure(const DualGraph& dg, int k) {
  if (k < 1) throw BadInput("k must be positive");
  if (dg.vertices.empty()) throw BadInput("dual graph has no vertices");
  UnionFind uf(dg.size());
  for (std::size_t idx = 0; idx < dg.edges.size(); ++idx) {
    const Edge& e = dg.edges[idx];
    if (e.a < 0 || e.a >= dg.size() || e.b < 0 || e.b >= dg.size())
      throw BadInput("edge " + std::to_string(idx) + " has an endpoint outside the vertex list");
    if (e.ord_a + e.ord_b != -2 * k)
      throw BadInput("edge " + std::to_string(idx) + ": orders sum to " + std::to_string(e.ord_a + e.ord_b) +
                     ", expected -2k = " + std::to_string(-2 * k));
    uf.unite(e.a, e.b);
  }
  for (int v = 1; v < dg.size(); ++v)
    if (uf.find(v) != uf.find(0)) throw BadInput("dual graph is not connected");
}

}  // namespace

bool TwistedOrderRelation::horizontal(int edge) const {
  return kind_of(graph.edges.at(static_cast<std::size_t>(edge)), k) == EdgeKind::Horizontal;
}

bool TwistedOrderRelation::strictly_above(int u, int v) const {
  const std::pair<int, int> key{class_of.at(static_cast<std::size_t>(u)), class_of.at(static_cast<std::size_t>(v))};
  return std::binary_search(above.begin(), above.end(), key);
}

TwistedOrderRelation validate_twisted(const DualGraph& dg, int k) {
  check_structure(dg, k);

  std::map<std::pair<int, int>, std::set<EdgeKind>> by_pair;
  for (std::size_t idx = 0; idx < dg.edges.size(); ++idx) {
    const Edge& e = dg.edges[idx];
    EdgeKind kind = kind_of(e, k);
    if (e.a == e.b) {
      if (kind != EdgeKind::Horizontal)
        throw DirectedLoop("self-node at vertex " + std::to_string(e.a) + " has orders " + std::to_string(e.ord_a) +
                           ", " + std::to_string(e.ord_b));
      continue;
    }
    // Orient every relation from the smaller vertex id.
    int u = e.a, v = e.b;
    if (u > v) {
      std::swap(u, v);
      if (kind != EdgeKind::Horizontal) kind = kind == EdgeKind::AAbove ? EdgeKind::BAbove : EdgeKind::AAbove;
    }
    by_pair[{u, v}].insert(kind);
  }

  UnionFind uf(dg.size());
  for (const auto& [uv, kinds] : by_pair) {
    if (kinds.size() > 1)
      throw MixedEdgeOrders("vertices " + std::to_string(uv.first) + " and " + std::to_string(uv.second) +
                            " share nodes with incompatible orders");
    if (*kinds.begin() == EdgeKind::Horizontal) uf.unite(uv.first, uv.second);
  }

  TwistedOrderRelation rel;
  rel.graph = dg;
  rel.k = k;
  std::map<int, int> class_id;
  for (int v = 0; v < dg.size(); ++v) {
    const int root = uf.find(v);
    auto [it, inserted] = class_id.try_emplace(root, static_cast<int>(class_id.size()));
    rel.class_of.push_back(it->second);
  }
  rel.classes = static_cast<int>(class_id.size());

  std::set<std::pair<int, int>> above;
  for (const auto& [uv, kinds] : by_pair) {
    const EdgeKind kind = *kinds.begin();
    if (kind == EdgeKind::Horizontal) continue;
    const int cu = rel.class_of[static_cast<std::size_t>(uv.first)];
    const int cv = rel.class_of[static_cast<std::size_t>(uv.second)];
    if (cu == cv)
      throw DirectedLoop("vertices " + std::to_string(uv.first) + " and " + std::to_string(uv.second) +
                         " are ~-related yet joined by a strict node");
    above.insert(kind == EdgeKind::AAbove ? std::pair{cu, cv} : std::pair{cv, cu});
  }
  rel.above.assign(above.begin(), above.end());

  // Kahn's algorithm on the quotient order.
  std::vector<int> indegree(static_cast<std::size_t>(rel.classes), 0);
  for (const auto& [hi, lo] : rel.above) ++indegree[static_cast<std::size_t>(lo)];
  std::vector<int> ready;
  for (int c = 0; c < rel.classes; ++c)
    if (indegree[static_cast<std::size_t>(c)] == 0) ready.push_back(c);
  int seen = 0;
  while (!ready.empty()) {
    const int c = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& [hi, lo] : rel.above)
      if (hi == c && --indegree[static_cast<std::size_t>(lo)] == 0) ready.push_back(lo);
  }
  if (seen != rel.classes) throw DirectedLoop("the strict relations contain a directed loop");
  return rel;
}

int LevelGraph::depth() const {
  if (level.empty()) return 0;
  return 1 - *std::min_element(level.begin(), level.end());
}

namespace {

// Levels are 0, -1, -2, ..., so a positive value can mark unplaced classes.
constexpr int kUnplaced = 1;

void place_levels(const TwistedOrderRelation& rel, std::vector<int>& class_level, int current, int placed,
                  std::vector<std::vector<int>>& out) {
  if (placed == rel.classes) {
    out.push_back(class_level);
    return;
  }
  std::vector<int> available;
  for (int c = 0; c < rel.classes; ++c) {
    if (class_level[static_cast<std::size_t>(c)] != kUnplaced) continue;
    const bool free = std::all_of(rel.above.begin(), rel.above.end(), [&](const auto& rel_pair) {
      return rel_pair.second != c || class_level[static_cast<std::size_t>(rel_pair.first)] != kUnplaced;
    });
    if (free) available.push_back(c);
  }
  const unsigned subsets = 1u << available.size();
  for (unsigned mask = 1; mask < subsets; ++mask) {
    int count = 0;
    for (std::size_t j = 0; j < available.size(); ++j)
      if (mask & (1u << j)) {
        class_level[static_cast<std::size_t>(available[j])] = current;
        ++count;
      }
    place_levels(rel, class_level, current - 1, placed + count, out);
    for (std::size_t j = 0; j < available.size(); ++j)
      if (mask & (1u << j)) class_level[static_cast<std::size_t>(available[j])] = kUnplaced;
  }
}

}  // namespace

std::vector<LevelGraph> enumerate_level_graphs(const TwistedOrderRelation& rel) {
  std::vector<std::vector<int>> assignments;
  std::vector<int> class_level(static_cast<std::size_t>(rel.classes), kUnplaced);
  place_levels(rel, class_level, 0, 0, assignments);

  std::vector<LevelGraph> out;
  out.reserve(assignments.size());
  for (const auto& levels : assignments) {
    LevelGraph lg{rel.graph, rel.k, {}};
    for (int c : rel.class_of) lg.level.push_back(levels[static_cast<std::size_t>(c)]);
    out.push_back(std::move(lg));
  }
  std::sort(out.begin(), out.end(), [](const LevelGraph& x, const LevelGraph& y) { return x.level < y.level; });
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Admissible: return "Admissible";
    case Verdict::Inadmissible: return "Inadmissible";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* to_string(ResidueValue v) {
  switch (v) {
    case ResidueValue::Zero: return "zero";
    case ResidueValue::NonZero: return "nonzero";
    case ResidueValue::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(KthPower v) {
  switch (v) {
    case KthPower::Yes: return "yes";
    case KthPower::No: return "no";
    case KthPower::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::string vertex_name(const DualGraph& dg, int v) {
  const auto& name = dg.vertices[static_cast<std::size_t>(v)].name;
  return name.empty() ? "v" + std::to_string(v) : name;
}

std::string residue_term(const DualGraph& dg, int edge, int vertex, int k) {
  std::string head = k == 1 ? "res" : "res^" + std::to_string(k);
  return head + "_{e" + std::to_string(edge) + "}(eta_" + vertex_name(dg, vertex) + ")";
}

struct Component {
  std::vector<int> vertices;
  std::vector<int> down_edges;  // edges to the level below, in edge order
};

std::vector<Component> components_above(const LevelGraph& lg, int L) {
  const DualGraph& dg = lg.graph;
  auto level_of = [&](int v) { return lg.level[static_cast<std::size_t>(v)]; };
  UnionFind uf(dg.size());
  for (const auto& e : dg.edges)
    if (level_of(e.a) > L && level_of(e.b) > L) uf.unite(e.a, e.b);
  std::map<int, Component> by_root;
  for (int v = 0; v < dg.size(); ++v)
    if (level_of(v) > L) by_root[uf.find(v)].vertices.push_back(v);
  for (std::size_t idx = 0; idx < dg.edges.size(); ++idx) {
    const Edge& e = dg.edges[idx];
    int upper = -1;
    if (level_of(e.a) > L && level_of(e.b) == L) upper = e.a;
    if (level_of(e.b) > L && level_of(e.a) == L) upper = e.b;
    if (upper >= 0) by_root[uf.find(upper)].down_edges.push_back(static_cast<int>(idx));
  }
  std::vector<Component> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  return out;
}

// Structure in which the criss-cross cases could apply: a horizontal node, or
// a cycle through vertical nodes, inside the component.
bool criss_cross_possible(const LevelGraph& lg, const Component& comp, int k) {
  const DualGraph& dg = lg.graph;
  std::set<int> members(comp.vertices.begin(), comp.vertices.end());
  UnionFind uf(dg.size());
  for (const auto& e : dg.edges) {
    if (!members.count(e.a) || !members.count(e.b)) continue;
    if (kind_of(e, k) == EdgeKind::Horizontal) return true;
    if (!uf.unite(e.a, e.b)) return true;
  }
  return false;
}

}  // namespace

GrcResult grc_admissible(const LevelGraph& lg, const ResidueState& res, int k) {
  const DualGraph& dg = lg.graph;
  if (static_cast<int>(lg.level.size()) != dg.size()) throw BadInput("level vector does not match the vertex count");

  auto state_of = [&](int edge) {
    const auto [vertex, side] = lower_branch(dg.edges[static_cast<std::size_t>(edge)], k);
    auto it = res.find({edge, side});
    if (it == res.end())
      throw MissingResidueState("no residue state for edge " + std::to_string(edge) + " on side " + side + " (vertex " +
                                vertex_name(dg, vertex) + ")");
    return std::pair{vertex, it->second};
  };
  for (std::size_t idx = 0; idx < dg.edges.size(); ++idx)
    if (kind_of(dg.edges[idx], k) != EdgeKind::Horizontal) (void)state_of(static_cast<int>(idx));

  GrcResult result;
  for (std::size_t idx = 0; idx < dg.edges.size(); ++idx) {
    const Edge& e = dg.edges[idx];
    if (kind_of(e, k) != EdgeKind::Horizontal) continue;
    const int edge = static_cast<int>(idx);
    const std::string lhs = residue_term(dg, edge, e.a, k), rhs = residue_term(dg, edge, e.b, k);
    if (k == 1)
      result.conditions.push_back(lhs + " + " + rhs + "=0");
    else
      result.conditions.push_back(lhs + "=" + (k % 2 == 0 ? "" : "-") + rhs);
  }

  std::set<int> levels(lg.level.begin(), lg.level.end());
  bool indeterminate = false;
  std::string indeterminate_reason;
  for (int L : levels) {
    for (const auto& comp : components_above(lg, L)) {
      if (comp.down_edges.empty()) continue;
      auto has = [&](auto pred) {
        return std::any_of(comp.vertices.begin(), comp.vertices.end(),
                           [&](int v) { return pred(dg.vertices[static_cast<std::size_t>(v)]); });
      };
      if (has([](const Vertex& v) { return v.has_marked_pole; })) continue;
      if (k >= 2 && has([](const Vertex& v) { return v.kth_power == KthPower::No; })) continue;

      int nonzero = 0, unknown = 0;
      std::vector<std::string> terms;
      for (int edge : comp.down_edges) {
        const auto [vertex, state] = state_of(edge);
        nonzero += state == ResidueValue::NonZero;
        unknown += state == ResidueValue::Unknown;
        terms.push_back(residue_term(dg, edge, vertex, k));
      }
      const int live = nonzero + unknown;
      if (live == 0) continue;
      if (live >= 2) {
        std::ostringstream os;
        if (k == 1) {
          for (std::size_t t = 0; t < terms.size(); ++t) os << (t ? " + " : "") << terms[t];
        } else {
          os << "P_{" << terms.size() << "," << k << "}(";
          for (std::size_t t = 0; t < terms.size(); ++t) os << (t ? ", " : "") << terms[t];
          os << ")";
        }
        os << "=0";
        result.conditions.push_back(os.str());
        continue;
      }
      if (unknown == 1) {
        for (int edge : comp.down_edges) {
          const auto [vertex, state] = state_of(edge);
          if (state == ResidueValue::Unknown) result.conditions.push_back(residue_term(dg, edge, vertex, k) + "=0");
        }
        continue;
      }

      // Exactly one non-zero residue below the component: the condition fails.
      std::string names;
      for (std::size_t t = 0; t < comp.vertices.size(); ++t) names += (t ? "," : "") + vertex_name(dg, comp.vertices[t]);
      const std::string why = "component {" + names + "} above level " + std::to_string(L) +
                              " has a single non-zero residue on its lower nodes";
      const bool undecided_power = k >= 2 && has([](const Vertex& v) { return v.kth_power == KthPower::Unknown; });
      if (undecided_power || (k >= 2 && criss_cross_possible(lg, comp, k))) {
        if (!indeterminate) indeterminate_reason = why;
        indeterminate = true;
        continue;
      }
      result.verdict = Verdict::Inadmissible;
      result.reason = why;
      result.conditions.clear();
      return result;
    }
  }
  if (indeterminate) {
    result.verdict = Verdict::Indeterminate;
    result.reason = indeterminate_reason + "; only the criss-cross cases could decide";
  }
  return result;
}

namespace {

KthPower parse_kth(const std::string& s) {
  if (s == "yes") return KthPower::Yes;
  if (s == "no") return KthPower::No;
  if (s == "unknown") return KthPower::Unknown;
  throw ParseError("kth_power must be yes, no or unknown, got '" + s + "'");
}

ResidueValue parse_state(const std::string& s) {
  if (s == "zero") return ResidueValue::Zero;
  if (s == "nonzero") return ResidueValue::NonZero;
  if (s == "unknown") return ResidueValue::Unknown;
  throw ParseError("residue state must be zero, nonzero or unknown, got '" + s + "'");
}

template <typename T>
T field(const nlohmann::json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + name + "' has the wrong type");
  }
}

}  // namespace

LevelGraphInput parse_level_graph_input(const nlohmann::json& j) {
  LevelGraphInput in;
  in.k = field<int>(j, "k");
  for (const auto& v : field<nlohmann::json>(j, "vertices")) {
    Vertex vertex;
    vertex.name = v.is_object() && v.contains("name") ? field<std::string>(v, "name") : "";
    vertex.genus = field<int>(v, "genus");
    vertex.marked = v.contains("marked") ? field<std::vector<int>>(v, "marked") : std::vector<int>{};
    vertex.has_marked_pole = v.contains("pole") ? field<bool>(v, "pole") : false;
    vertex.kth_power = v.contains("kth_power") ? parse_kth(field<std::string>(v, "kth_power")) : KthPower::Unknown;
    in.graph.vertices.push_back(std::move(vertex));
  }
  for (const auto& e : field<nlohmann::json>(j, "edges"))
    in.graph.edges.push_back({field<int>(e, "a"), field<int>(e, "b"), field<int>(e, "ord_a"), field<int>(e, "ord_b")});
  if (j.contains("residues")) {
    for (const auto& r : field<nlohmann::json>(j, "residues")) {
      const auto side = field<std::string>(r, "side");
      if (side != "a" && side != "b") throw ParseError("residue side must be \"a\" or \"b\"");
      in.residues[{field<int>(r, "edge"), side[0]}] = parse_state(field<std::string>(r, "state"));
    }
  }
  return in;
}

nlohmann::ordered_json to_json(const LevelGraph& lg) {
  nlohmann::ordered_json j;
  auto levels = nlohmann::ordered_json::array();
  for (int v = 0; v < lg.graph.size(); ++v) {
    nlohmann::ordered_json entry;
    entry["vertex"] = vertex_name(lg.graph, v);
    entry["level"] = lg.level[static_cast<std::size_t>(v)];
    levels.push_back(std::move(entry));
  }
  j["levels"] = std::move(levels);
  return j;
}

nlohmann::ordered_json to_json(const GrcResult& r) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(r.verdict);
  j["conditions"] = r.conditions;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

}  // namespace kdiff
