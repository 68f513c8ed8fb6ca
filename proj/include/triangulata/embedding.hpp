#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace triangulata {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 62;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rotation = std::vector<std::vector<Vertex>>;

// Boundary order (a, b, c): darts a->b, b->c, c->a lie on one face.
struct FaceTriple {
  Vertex a = 0, b = 0, c = 0;

  std::array<Vertex, 3> sorted() const;
  // Cyclic rotation starting at the smallest vertex.
  FaceTriple normalized() const;
  bool same_vertices(const FaceTriple& o) const { return sorted() == o.sorted(); }
  friend bool operator==(const FaceTriple&, const FaceTriple&) = default;
  friend auto operator<=>(const FaceTriple&, const FaceTriple&) = default;
};

struct Diagnosis {
  bool valid = true;
  std::string reason;
  explicit operator bool() const { return valid; }
};

// Rotation lists are treated as clockwise. The face to the left of dart u->v
// continues with v->w where w follows u in the rotation of v.
class PlaneTriangulation {
 public:
  PlaneTriangulation() = default;
  explicit PlaneTriangulation(Rotation rotation);
  PlaneTriangulation(Rotation rotation, FaceTriple outer);

  int order() const { return static_cast<int>(rot_.size()); }
  int size() const { return edges_; }
  const Rotation& rotations() const { return rot_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  // Index of v in the rotation of u, or -1.
  int position(Vertex u, Vertex v) const { return pos_[u * order() + v]; }
  Vertex next(Vertex u, Vertex v) const;
  Vertex prev(Vertex u, Vertex v) const;
  FaceTriple face_of(Vertex u, Vertex v) const { return {u, v, next(v, u)}; }
  const FaceTriple& outer_face() const { return outer_; }
  bool is_face(const FaceTriple& f) const;
  // Returns the face orbit with the same vertex set, oriented as traced.
  FaceTriple find_face(const FaceTriple& f) const;

  int min_degree() const;
  int max_degree() const;
  std::vector<int> degrees() const;

  friend bool operator==(const PlaneTriangulation& a, const PlaneTriangulation& b) {
    return a.rot_ == b.rot_ && a.outer_ == b.outer_;
  }

 private:
  void build();

  Rotation rot_;
  FaceTriple outer_;
  std::vector<VertexMask> adj_;
  std::vector<std::int16_t> pos_;
  int edges_ = 0;
};

Diagnosis validate_maximal_planar(const Rotation& rotation);
Diagnosis validate_maximal_planar(const PlaneTriangulation& g);

struct Face {
  FaceTriple triple;
  bool outer = false;
};

std::vector<Face> faces(const PlaneTriangulation& g);
std::vector<FaceTriple> face_triples(const PlaneTriangulation& g);

// Ascending degrees, written as digits ("4444455"); degrees >= 10 in parentheses.
std::string degree_sequence(const PlaneTriangulation& g);

struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  static CanonicalCode from_hex(std::string_view s);
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct Automorphism {
  std::vector<Vertex> map;
  bool reflecting = false;
};

struct CanonicalForm {
  CanonicalCode code;
  std::vector<Vertex> labeling;  // old id -> canonical id
  bool reflected = false;        // best start uses the reversed orientation
  std::vector<Automorphism> automorphisms;
};

CanonicalForm canonical_form(const PlaneTriangulation& g);
CanonicalCode canonical_code(const PlaneTriangulation& g);

PlaneTriangulation relabel(const PlaneTriangulation& g, const std::vector<Vertex>& perm);
PlaneTriangulation reflect(const PlaneTriangulation& g);
PlaneTriangulation canonical_relabel(const PlaneTriangulation& g);

enum class SubgraphKind { Edge, Path2, InducedPath2, Triangle, Funnel, InducedFunnel };

// Representatives: edge (u, v) u < v; path (x, u, y) x < y; triangle sorted;
// funnel (top, middle, b1, b2) with b1 < b2 and middle-b1-b2 a face.
struct Orbit {
  std::vector<Vertex> rep;
  int size = 0;
};

std::vector<std::vector<Vertex>> subgraph_occurrences(const PlaneTriangulation& g, SubgraphKind kind);
std::vector<Orbit> automorphism_orbits(const PlaneTriangulation& g, SubgraphKind kind);

PlaneTriangulation reroot_outer_face(const PlaneTriangulation& g, const FaceTriple& f);

enum class NeighborCycleKind { Basic, Chord, Triangle };

struct NeighborCycle {
  NeighborCycleKind kind = NeighborCycleKind::Basic;
  std::vector<Vertex> cycle;  // rotation order
  int chords = 0;
};

NeighborCycle neighbor_cycle(const PlaneTriangulation& g, Vertex v);

std::vector<std::array<Vertex, 3>> separating_triangles(const PlaneTriangulation& g);
inline bool is_divisible(const PlaneTriangulation& g) { return !separating_triangles(g).empty(); }

std::string graph6_encode(const PlaneTriangulation& g);
// Abstract graph from graph6: n and adjacency masks.
std::vector<VertexMask> graph6_adjacency(std::string_view text);
PlaneTriangulation graph6_decode(std::string_view text);
// Embeds an abstract maximal planar graph; throws DomainError with a diagnosis.
PlaneTriangulation embed_maximal_planar(const std::vector<VertexMask>& adjacency);

// vertex_attrs[v], when present, is spliced into the node attribute list.
std::string to_dot(const PlaneTriangulation& g, const std::vector<std::string>& vertex_attrs = {});

PlaneTriangulation make_k3();
PlaneTriangulation make_k4();
PlaneTriangulation make_octahedron();
PlaneTriangulation make_icosahedron();
// C_k plus two hubs, k >= 3.
PlaneTriangulation make_double_wheel(int k);

}  // namespace triangulata
