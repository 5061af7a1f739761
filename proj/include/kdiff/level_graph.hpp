#pragma once

// Twisted k-differentials on nodal curves: order relations between the
// components, compatible level graphs, and the global k-residue condition
// with three-valued residue data.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kdiff/errors.hpp"

namespace kdiff {

enum class KthPower { Yes, No, Unknown };
enum class ResidueValue { Zero, NonZero, Unknown };

struct Vertex {
  std::string name;
  int genus = 0;
  std::vector<int> marked;
  bool has_marked_pole = false;
  KthPower kth_power = KthPower::Unknown;
};

/// Node joining vertices a and b, with the order of the twisted differential
/// on each branch.
struct Edge {
  int a = 0;
  int b = 0;
  int ord_a = 0;
  int ord_b = 0;
};

struct DualGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// Vertices grouped into ~-classes, with the strict relations between classes.
struct TwistedOrderRelation {
  DualGraph graph;
  int k = 1;
  std::vector<int> class_of;                // vertex -> class id
  int classes = 0;
  std::vector<std::pair<int, int>> above;   // (upper class, lower class), deduplicated, sorted

  bool horizontal(int edge) const;
  bool equivalent(int u, int v) const { return class_of.at(static_cast<std::size_t>(u)) == class_of.at(static_cast<std::size_t>(v)); }
  bool strictly_above(int u, int v) const;
};

/// Throws BadInput for malformed graphs (bad endpoints, order sum != -2k,
/// disconnected), MixedEdgeOrders when two vertices share edges of different
/// kinds, DirectedLoop for a strict cycle.
TwistedOrderRelation validate_twisted(const DualGraph& dg, int k);

struct LevelGraph {
  DualGraph graph;
  int k = 1;
  std::vector<int> level;  // per vertex; 0 is the top, lower levels are negative

  int depth() const;
};

/// Every full order compatible with the relation, up to renumbering, sorted
/// lexicographically by level vector.
std::vector<LevelGraph> enumerate_level_graphs(const TwistedOrderRelation& rel);

/// Residue at the lower branch of a node: key (edge index, side 'a' or 'b').
using ResidueState = std::map<std::pair<int, char>, ResidueValue>;

enum class Verdict { Admissible, Inadmissible, Indeterminate };

const char* to_string(Verdict v);
const char* to_string(ResidueValue v);
const char* to_string(KthPower v);

struct GrcResult {
  Verdict verdict = Verdict::Admissible;
  std::vector<std::string> conditions;
  std::string reason;
};

/// The global k-residue condition (the plain residue condition for k = 1)
/// evaluated on one level graph. Throws MissingResidueState if a vertical edge
/// has no state on its lower branch.
GrcResult grc_admissible(const LevelGraph& lg, const ResidueState& res, int k);

struct LevelGraphInput {
  int k = 1;
  DualGraph graph;
  ResidueState residues;
};

/// Reads {"k":..,"vertices":[..],"edges":[..],"residues":[..]}. Throws ParseError.
LevelGraphInput parse_level_graph_input(const nlohmann::json& j);

nlohmann::ordered_json to_json(const LevelGraph& lg);
nlohmann::ordered_json to_json(const GrcResult& r);

}  // namespace kdiff
