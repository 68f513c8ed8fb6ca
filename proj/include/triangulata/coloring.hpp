#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triangulata/embedding.hpp"

namespace triangulata {

// color[v] is a class index; classes are numbered by their smallest vertex.
struct ColorPartition {
  std::vector<int> color;

  static ColorPartition from_colors(const std::vector<int>& raw);
  int class_count() const;
  // Four masks, trailing ones empty when fewer classes are used.
  std::vector<VertexMask> classes() const;
  VertexMask class_mask(int i) const;
  friend bool operator==(const ColorPartition&, const ColorPartition&) = default;
  friend auto operator<=>(const ColorPartition&, const ColorPartition&) = default;
};

bool is_proper_coloring(const PlaneTriangulation& g, const std::vector<int>& color);

struct PartitionSet {
  std::vector<ColorPartition> four;   // exactly four nonempty classes
  std::vector<ColorPartition> three;  // three classes (at most one, for an MPG)
  bool three_chromatic() const { return !three.empty(); }
  std::size_t total() const { return four.size() + three.size(); }
};

PartitionSet enumerate_all_partitions(const PlaneTriangulation& g);
std::vector<ColorPartition> enumerate_partitions(const PlaneTriangulation& g);
std::uint64_t count_labeled_colorings(const PlaneTriangulation& g);

struct Subgraph {
  VertexMask vertices = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, sorted
  int order() const;
  bool has_edge(Vertex u, Vertex v) const;
};

Subgraph induced_subgraph(const PlaneTriangulation& g, VertexMask vertices);
Subgraph bicolored_subgraph(const PlaneTriangulation& g, const ColorPartition& f, int i, int j);
Subgraph subgraph_union(const Subgraph& a, const Subgraph& b);

bool is_acyclic(const Subgraph& h);
bool is_connected(const Subgraph& h);
bool is_bipartite(const Subgraph& h);
bool is_path(const Subgraph& h);
// Vertices of a simple cycle if h is one, in traversal order.
std::optional<std::vector<Vertex>> as_cycle(const Subgraph& h);
std::optional<std::vector<Vertex>> find_cycle(const Subgraph& h);

struct BicoloredCycle {
  int i = 0, j = 0;
  std::vector<Vertex> cycle;
};

struct ColoringClassification {
  enum class Kind { Tree, Cycle } kind = Kind::Tree;
  std::vector<BicoloredCycle> bicolored_cycles;  // one witness per cyclic color pair
};

ColoringClassification classify_coloring(const PlaneTriangulation& g, const ColorPartition& f);

enum class GraphClass { PureTree, PureCycle, Impure, ThreeChromatic, Divisible };
std::string to_string(GraphClass c);

struct GraphCensus {
  GraphClass cls = GraphClass::PureTree;
  int partitions = 0;  // four-class partitions
  int tree_count = 0;
  int cycle_count = 0;
  bool three_chromatic = false;
  bool divisible = false;
};

GraphCensus classify_graph(const PlaneTriangulation& g);

struct FenceReport {
  bool fence = false;
  bool has_cycle = false;
  bool bipartite = false;
  bool connected = false;
  std::optional<int> t;  // empty means infinity
  VertexMask suspending = 0;
  VertexMask weld = 0;
  std::vector<int> face_degrees;  // boundary walks of the inherited embedding
};

FenceReport fence_analyze(const PlaneTriangulation& host, const Subgraph& h);

struct UnionReport {
  Subgraph graph;
  Subgraph first, second;  // G[common, a], G[common, b]
  bool odd_cycle_free = false;
  FenceReport fence;
  bool suspending_touch_only_common = false;
  bool paths_between_others_odd = false;  // every a-b path has an odd vertex count
};

UnionReport union_two_bicolored(const PlaneTriangulation& g, const ColorPartition& f, int common, int a, int b);

struct PathPairCount {
  Vertex u = 0, v = 0;  // an edge of G[2,3]
  int q = 0;            // u-v paths in the union of the other two bicolored graphs
  int odd_cycles = 0;   // cycles through the edge of odd length
  int even_cycles = 0;
};

struct TricoloredReport {
  int fourth = 0;  // class removed as V4
  bool coloring_is_cycle = false;
  bool restricted_has_cycle = false;
  bool restricted_disconnected = false;
  bool classification_agrees = false;
  int triangles_without_fourth = 0;
  int predicted_triangles = 0;  // 2n - 4 - sum of degrees in V4
  bool odd_vertex_paths = false;
  std::vector<PathPairCount> pair_counts;
};

// fourth < 0 picks the largest class (smallest index on ties).
TricoloredReport tricolored_checks(const PlaneTriangulation& g, const ColorPartition& f, int fourth = -1);

// Lexicographically least relabeling of (g, f) over the canonical starts.
std::pair<CanonicalCode, std::vector<int>> colored_canonical_form(const PlaneTriangulation& g, const ColorPartition& f);

std::string to_dot(const PlaneTriangulation& g, const ColorPartition& f);

}  // namespace triangulata
