#pragma once

#include <vector>

#include "triangulata/embedding.hpp"

namespace triangulata::detail {

// Embedded multigraph used while a wheel operation is in flight. Dart d and
// d ^ 1 are the two halves of one edge; darts(v) is the clockwise rotation.
class DartGraph {
 public:
  explicit DartGraph(const PlaneTriangulation& g);

  int vertex_slots() const { return static_cast<int>(rot_.size()); }
  bool alive(Vertex v) const { return alive_[v]; }
  int alive_count() const;
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<int>& darts(Vertex v) const { return rot_[v]; }
  Vertex origin(int d) const { return org_[d]; }
  Vertex head(int d) const { return org_[d ^ 1]; }
  int succ(int d) const;
  int pred(int d) const;
  int face_next(int d) const { return succ(d ^ 1); }
  std::vector<int> face(int d) const;
  std::vector<int> darts_between(Vertex u, Vertex v) const;
  // The k-th dart u->v in rotation order of u, or -1.
  int dart(Vertex u, Vertex v, int k = 0) const;
  bool adjacent(Vertex u, Vertex v) const { return dart(u, v) >= 0; }

  Vertex fill_face(int d);
  Vertex extend2(int d);
  Vertex extend3(int d) { return fill_face(d); }
  // u = origin(dx) keeps the darts from dx clockwise through dy.
  std::pair<Vertex, Vertex> extend4(int dx, int dy);
  // u = origin(dt) keeps dt .. db1; db2 = succ(db1) goes to the new vertex.
  std::pair<Vertex, Vertex> extend5(int dt, int db1);

  void remove_vertex(Vertex v);
  void remove_edge(int d);
  // Merges p into q across a common face; throws if adjacent or no such face.
  void identify(Vertex q, Vertex p);
  void remove_empty_digons();

  bool is_simple() const;
  // old slot -> compacted id (-1 for removed), descending-id swap.
  std::vector<Vertex> compaction() const;
  PlaneTriangulation to_triangulation(std::vector<Vertex>* id_map = nullptr) const;

 private:
  int new_edge(Vertex u, Vertex v);
  void insert_after(int ref, int d);
  void insert_before(int ref, int d);
  void erase_from_rotation(int d);
  int index_of(int d) const;

  std::vector<Vertex> org_;
  std::vector<std::vector<int>> rot_;
  std::vector<char> alive_;
  FaceTriple outer_;
};

}  // namespace triangulata::detail
