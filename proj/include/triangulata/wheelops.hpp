#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triangulata/coloring.hpp"
#include "triangulata/embedding.hpp"

namespace triangulata {

struct Path2 {
  Vertex x = 0, u = 0, y = 0;
};

// middle-b1-b2 is a face; the top is another neighbor of the middle.
struct Funnel {
  Vertex top = 0, middle = 0, b1 = 0, b2 = 0;
};

enum class OpKind { Extend2, Contract2, Extend3, Contract3, Extend4, Contract4, Extend5, Contract5 };
std::string to_string(OpKind k);
OpKind op_kind_from_string(std::string_view s);

// Object ids refer to the working graph of a step: in a chain, vertices added
// by earlier steps take the next free ids and removed ids stay reserved until
// the chain ends, when ids are compacted by descending-id swap.
struct WheelOpRecord {
  OpKind kind = OpKind::Extend3;
  std::vector<Vertex> object;  // edge, face, path x-u-y, funnel (t, u, b1, b2) or center
  std::vector<std::pair<Vertex, Vertex>> identified_pairs;  // (kept, merged)
  CanonicalCode result_code;

  std::string to_json() const;
  static WheelOpRecord from_json(std::string_view line);
  friend bool operator==(const WheelOpRecord&, const WheelOpRecord&) = default;
};

// Applies a chain of records (result codes are not consulted). Throws DomainError when a step is illegal or the end state is not
// a simple triangulation.
PlaneTriangulation replay(const PlaneTriangulation& g, const std::vector<WheelOpRecord>& chain, std::vector<Vertex>* id_map = nullptr);

PlaneTriangulation extend3(const PlaneTriangulation& g, const FaceTriple& f);
PlaneTriangulation contract3(const PlaneTriangulation& g, Vertex v);
// A standalone 2-wheel extension always leaves parallel edges; it is only
// offered inside compound extensions.
PlaneTriangulation extend2(const PlaneTriangulation& g, Vertex a, Vertex b);
PlaneTriangulation contract2(const PlaneTriangulation& g, Vertex v);
PlaneTriangulation extend4(const PlaneTriangulation& g, const Path2& p);
PlaneTriangulation contract4(const PlaneTriangulation& g, Vertex v, std::pair<Vertex, Vertex> pair);
PlaneTriangulation extend5(const PlaneTriangulation& g, const Funnel& l);
PlaneTriangulation contract5(const PlaneTriangulation& g, Vertex v, std::pair<Vertex, Vertex> pair);

// Nonadjacent neighbor pairs of a degree-4/5 vertex that may be identified,
// (smaller, larger), sorted.
std::vector<std::pair<Vertex, Vertex>> contraction_pairs(const PlaneTriangulation& g, Vertex v);

// Compound extensions: one or two 2-/3-wheel pre-steps, then extend4/extend5.
// Pre-step objects are an edge (a, b) or a face; the main object uses the
// working ids (first new vertex n, second n + 1).
PlaneTriangulation compound_extend(const PlaneTriangulation& g, const std::vector<WheelOpRecord>& chain);
// Dumbbell: faces f1, f2 sharing u, then extend4 on the two new vertices through u.
PlaneTriangulation dumbbell_extend(const PlaneTriangulation& g, const FaceTriple& f1, Vertex u, const FaceTriple& f2);

struct ContractibleSubgraph {
  std::vector<Vertex> X;       // ids in the source graph, sorted
  std::vector<int> x_degrees;  // degrees in the source graph, same order
  char configuration = '?';    // 'a'..'n' per the fourteen classes, '?' if none
  int t = 0;                   // string length parameter for (k)..(n)
  int r = 0;                   // position of the degree-5 vertex for (l)
};

struct CompoundContraction {
  PlaneTriangulation result;
  ContractibleSubgraph sub;
  std::vector<WheelOpRecord> steps;
  std::vector<Vertex> id_map;
};

class ExhaustionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// contract4/contract5 at seed, then contract2/contract3 (smallest degree, then
// smallest id) while the minimum degree is below 4.
CompoundContraction compound_contract(const PlaneTriangulation& g, Vertex seed, std::optional<std::pair<Vertex, Vertex>> pair = std::nullopt);
std::vector<CompoundContraction> all_compound_contractions(const PlaneTriangulation& g);

ContractibleSubgraph classify_contractible(const PlaneTriangulation& g, std::vector<Vertex> X);

struct ExtensionObject {
  enum class Kind { Path, Funnel, Dumbbell } kind = Kind::Path;
  std::vector<Vertex> rep;  // path (x, u, y); funnel (t, u, b1, b2); dumbbell (u, f1 a b c, f2 a b c)
  int orbit_size = 0;
  bool admissible = false;  // the extension keeps minimum degree >= 4
};

std::vector<ExtensionObject> enumerate_extension_objects(const PlaneTriangulation& g);
PlaneTriangulation apply_extension(const PlaneTriangulation& g, const ExtensionObject& obj);

struct ColoredResult {
  PlaneTriangulation graph;
  ColorPartition partition;
  WheelOpRecord record;         // contraction: object = (v, link in rotation order)
  std::vector<Vertex> id_map;  // source id -> result id (-1 if removed)
  Vertex center_mate = -1;     // contraction: a result vertex colored like the deleted one
};

// Delete v, then identify same-colored vertices on every
// non-triangular face (smallest ids first, backtracking over alternatives).
ColoredResult contract_k_under_coloring(const PlaneTriangulation& g, const ColorPartition& f, Vertex v);

// kind 3: object is a face; 4: path x-u-y; 5: funnel (t, u, b1, b2).
ColoredResult extend_under_coloring(const PlaneTriangulation& g, const ColorPartition& f, const std::vector<Vertex>& object, int kind);

// Inverse of contract_k_under_coloring for k <= 5: the matching extension
// under coloring applied to the contracted graph.
ColoredResult replay_inverse(const ColoredResult& contracted);

}  // namespace triangulata
