#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triangulata/coloring.hpp"
#include "triangulata/embedding.hpp"

namespace triangulata {

// One side of a cycle of a plane triangulation, in host ids. Edges that lie
// on the other side (chords included) are dropped.
struct SemiMPG {
  int host_order = 0;
  std::vector<Vertex> boundary;  // traversal order
  VertexMask boundary_mask = 0;
  VertexMask interior = 0;
  std::vector<VertexMask> adj;  // per host id, restricted to this side
  Rotation rotation;            // clockwise, restricted; empty off this side

  VertexMask vertices() const { return boundary_mask | interior; }
  int order() const;
  int size() const;
};

// Throws DomainError unless `cycle` is a simple cycle of g of length >= 4.
std::pair<SemiMPG, SemiMPG> split_on_cycle(const PlaneTriangulation& g, const std::vector<Vertex>& cycle);
// Same split inside a semi-MPG, for a cycle through interior vertices of s.
std::pair<SemiMPG, SemiMPG> split_on_cycle(const SemiMPG& s, const std::vector<Vertex>& cycle);

// Interior vertices with a neighbor on the boundary.
VertexMask gamma(const SemiMPG& s);
// Interior vertices adjacent to an even-indexed and an odd-indexed boundary vertex.
VertexMask gamma_star(const SemiMPG& s);

bool odd_cycle_free(const SemiMPG& s, VertexMask x);
// Vertices of some odd cycle of s[x], empty when there is none.
std::vector<Vertex> find_odd_cycle(const SemiMPG& s, VertexMask x);

enum class BwColor { Black, White, Grey };

struct BwEvent {
  enum class Kind { Layer, Grey, Fixed, Petal, Restricted, Sign, Backtrack, Conflict } kind = Kind::Layer;
  int step = 0;              // layer index, or the step of the operation
  Vertex vertex = -1;        // the deciding vertex, when there is one
  VertexMask vertices = 0;   // vertices colored by this event
  BwColor color = BwColor::Black;
};
std::string to_string(BwEvent::Kind k);

struct BwState {
  VertexMask B = 0, W = 0, A = 0;
  std::vector<BwEvent> trace;
  int layers = 0;               // nonempty layers after the boundary
  bool layered_proper = true;   // before any grey vertex was colored
  bool unique = false;          // nothing grey once the layers ran out
  bool petal_flagged = false;   // a grey vertex failed both colors
  bool proper = false;
  bool success = false;         // improved operation: no grey vertex left, proper
  std::vector<Vertex> sign_vertices;

  BwColor color(Vertex v) const;
};

BwState bw_operation(const SemiMPG& s);
// Odd-cycle check on the black and on the white vertices; grey vertices are ignored.
bool is_proper(const SemiMPG& s, const BwState& state);
BwState improved_bw_operation(const SemiMPG& s);

struct TwoColorability {
  bool colorable = false;
  SemiMPG side1, side2;
  BwState state1, state2;
  std::vector<int> coloring;  // a 4-coloring of the host with the cycle on colors 0, 1; empty if none
};

// Throws DomainError for an odd cycle.
TwoColorability is_2colorable_cycle(const PlaneTriangulation& g, const std::vector<Vertex>& cycle);

bool oracle_2colorable(const PlaneTriangulation& g, const std::vector<Vertex>& cycle);
// Against precomputed partitions (three- and four-class).
bool oracle_2colorable(const PartitionSet& partitions, VertexMask cycle);

struct GeneralPetal {
  Vertex vertex = -1;
  bool cond[4] = {false, false, false, false};
  bool any() const { return cond[0] || cond[1] || cond[2] || cond[3]; }
};

struct PetalDiagnostics {
  // {u, v} in A with an odd cycle through both once they join B (resp. W).
  std::vector<std::pair<Vertex, Vertex>> black_conflicts, white_conflicts;
  std::vector<std::pair<Vertex, Vertex>> petal_pairs;  // either color conflicts
  std::vector<std::pair<Vertex, Vertex>> forced_pairs; // both colors conflict
  std::vector<std::pair<Vertex, Vertex>> petal_edges;  // petal pairs that are edges
  std::vector<VertexMask> petal_sets;                  // maximal, size >= 2
  int max_petal_set = 0;
  VertexMask petal_graph_vertices = 0;
  bool petal_graph_has_cycle = false;
  bool petal_graph_has_odd_cycle = false;
  bool exclusive_petal_graph = false;
  std::vector<std::vector<Vertex>> black_white_paths;
  std::vector<bool> exclusive_paths;  // per black-white path
  std::vector<GeneralPetal> general_petal;  // vertices meeting some condition
  bool petal_syndrome = false;
};

PetalDiagnostics petal_diagnostics(const SemiMPG& s, const BwState& state);

// Simple cycles with min_len <= length <= max_len (max_len <= 0: unbounded),
// each once, starting at its smallest vertex.
std::vector<std::vector<Vertex>> enumerate_cycles(const PlaneTriangulation& g, int min_len, int max_len = 0);

struct CycleCensus {
  int max_len = 0;  // 0 when unbounded
  std::map<int, int> basic_by_length, chord_by_length;
  int basic_cycles = 0, chord_cycles = 0;  // length >= 4
  int even_basic = 0, even_chord = 0;
  int semi_mpgs = 0;  // sides produced by splitting every counted cycle
  bool inequality_holds = false;  // |Cy| <= |Ha| / 2 - |Ch|
  int vertex_neighbor_basic = 0, vertex_neighbor_odd = 0;
  int edge_neighbor_cycles = 0, edge_neighbor_even = 0;
};

// max_len < 0 picks the default: unbounded up to order 10, 12 beyond.
CycleCensus even_cycle_census(const PlaneTriangulation& g, int max_len = -1);

// Boundary walk length of the face of g[h] that holds the rest of the graph.
int boundary_length(const PlaneTriangulation& g, VertexMask h);
// Sum of degrees in g minus sum of degrees in g[h] minus the boundary length.
// Throws DomainError unless h is connected and its neighbor set induces a cycle.
int neighbor_cycle_length(const PlaneTriangulation& g, VertexMask h);
// The induced neighbor cycle of h, if its neighbor set induces one.
std::optional<std::vector<Vertex>> neighbor_set_cycle(const PlaneTriangulation& g, VertexMask h);

enum class ClosedKind { CycleCycle, CycleTree, CycleFence, ClosedOther, NotClosed };
std::string to_string(ClosedKind k);

struct ClosedReport {
  ClosedKind kind = ClosedKind::NotClosed;
  VertexMask gamma_star = 0;
  std::vector<Vertex> inner_cycle;  // cycle-cycle only
  std::optional<bool> reduced;      // cycle-cycle: the inner cycle decided on its far side
  bool direct = false;              // improved operation on s
};

ClosedReport classify_closed(const SemiMPG& s);

// B filled black, W white, A grey; edges of the side only.
std::string to_dot(const SemiMPG& s, const BwState& state);
std::string to_json(const BwState& state);

}  // namespace triangulata
