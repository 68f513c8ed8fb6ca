#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracle.hpp"
#include "triangulata/embedding.hpp"
#include "triangulata/generator.hpp"

using namespace triangulata;

namespace {

std::vector<Vertex> random_perm(int n, std::mt19937& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// K4 with edge 0-1 removed: the face 0-2-1-3 has length 4.
Rotation k4_minus_edge() { return {{2, 3}, {3, 2}, {0, 1, 3}, {0, 2, 1}}; }

}  // namespace

TEST_CASE("faces count 2n-4") {
  CHECK(faces(make_k4()).size() == 4);
  CHECK(faces(make_octahedron()).size() == 8);
  CHECK(faces(make_icosahedron()).size() == 20);
  int outer = 0;
  for (const auto& f : faces(make_icosahedron())) outer += f.outer;
  CHECK(outer == 1);
}

TEST_CASE("validate_maximal_planar") {
  CHECK(validate_maximal_planar(make_k4()).valid);
  CHECK(validate_maximal_planar(make_icosahedron()).valid);
  const Diagnosis d = validate_maximal_planar(k4_minus_edge());
  CHECK_FALSE(d.valid);
  CHECK_FALSE(d.reason.empty());
}

TEST_CASE("euler counts on triangulations from the oracle") {
  for (int n = 4; n <= 9; ++n)
    for (const auto& r : oracle::all_triangulations(n)) {
      PlaneTriangulation g(r);
      CHECK(g.size() == 3 * n - 6);
      CHECK(faces(g).size() == static_cast<std::size_t>(2 * n - 4));
      CHECK(g.max_degree() <= n - 1);
      CHECK(g.min_degree() <= 5);
    }
}

TEST_CASE("canonical code is invariant under relabel, reflection and reroot") {
  std::mt19937 rng(7);
  for (const auto& g : {make_octahedron(), make_icosahedron(), make_double_wheel(6)}) {
    const CanonicalCode c = canonical_code(g);
    for (int i = 0; i < 5; ++i) {
      const auto p = random_perm(g.order(), rng);
      CHECK(canonical_code(relabel(g, p)) == c);
      CHECK(canonical_code(reflect(relabel(g, p))) == c);
    }
    for (const auto& f : face_triples(g)) CHECK(canonical_code(reroot_outer_face(g, f)) == c);
  }
  CHECK_THROWS_AS(canonical_code(make_k3()), DomainError);
}

TEST_CASE("canonical codes separate exactly the oracle classes") {
  for (int n = 5; n <= 10; ++n) {
    const auto all = oracle::all_triangulations(n);
    std::set<CanonicalCode> codes;
    for (const auto& r : all) codes.insert(canonical_code(PlaneTriangulation(r)));
    CHECK(codes.size() == all.size());
  }
  std::set<CanonicalCode> nine;
  for (const auto& r : oracle::all_delta4(9)) nine.insert(canonical_code(PlaneTriangulation(r)));
  CHECK(nine.size() == 5);
}

TEST_CASE("automorphism orbits") {
  const auto ico = make_icosahedron();
  for (auto kind : {SubgraphKind::Edge, SubgraphKind::InducedPath2, SubgraphKind::Triangle, SubgraphKind::InducedFunnel})
    CHECK(automorphism_orbits(ico, kind).size() == 1);
  CHECK(automorphism_orbits(ico, SubgraphKind::Path2).size() == 2);
  const auto k4tri = automorphism_orbits(make_k4(), SubgraphKind::Triangle);
  REQUIRE(k4tri.size() == 1);
  CHECK(k4tri[0].size == 4);

  const auto seven = oracle::all_delta4(7);
  REQUIRE(seven.size() == 1);
  PlaneTriangulation g7(seven[0]);
  const auto paths = automorphism_orbits(g7, SubgraphKind::Path2);
  // Four degree types; the 454 type splits into two orbits.
  CHECK(paths.size() == 5);
  std::set<std::string> types;
  for (const auto& o : paths) {
    std::string t;
    for (Vertex v : o.rep) t += static_cast<char>('0' + g7.degree(v));
    if (t.front() > t.back()) std::reverse(t.begin(), t.end());
    types.insert(t);
  }
  CHECK(types == std::set<std::string>{"444", "445", "454", "545"});

  for (const auto& g : {ico, g7, make_octahedron()})
    for (auto kind : {SubgraphKind::Edge, SubgraphKind::Path2, SubgraphKind::Triangle, SubgraphKind::Funnel}) {
      int total = 0;
      for (const auto& o : automorphism_orbits(g, kind)) total += o.size;
      CHECK(total == static_cast<int>(subgraph_occurrences(g, kind).size()));
    }
}

TEST_CASE("reroot_outer_face") {
  const auto k4 = make_k4();
  const auto fs = face_triples(k4);
  const auto r = reroot_outer_face(k4, fs[1]);
  CHECK(validate_maximal_planar(r).valid);
  CHECK(r.outer_face().same_vertices(fs[1]));
  CHECK(reroot_outer_face(r, k4.outer_face()) == k4);
  CHECK_THROWS_AS(reroot_outer_face(make_octahedron(), FaceTriple{0, 3, 1}), DomainError);
}

TEST_CASE("neighbor cycles") {
  const auto ico = make_icosahedron();
  for (Vertex v = 0; v < 12; ++v) {
    const auto nc = neighbor_cycle(ico, v);
    CHECK(nc.kind == NeighborCycleKind::Basic);
    CHECK(nc.cycle.size() == 5);
  }
  const auto oct = make_octahedron();
  for (Vertex v = 0; v < 6; ++v) CHECK(neighbor_cycle(oct, v).cycle.size() == 4);
  for (int n = 6; n <= 11; ++n)
    for (const auto& r : oracle::all_delta4(n)) {
      PlaneTriangulation g(r);
      if (is_divisible(g)) continue;
      for (Vertex v = 0; v < n; ++v) {
        const auto nc = neighbor_cycle(g, v);
        CHECK(nc.kind == NeighborCycleKind::Basic);
        CHECK(static_cast<int>(nc.cycle.size()) == g.degree(v));
      }
    }
}

TEST_CASE("separating triangles") {
  CHECK(separating_triangles(make_octahedron()).empty());
  CHECK(separating_triangles(make_icosahedron()).empty());
  // Octahedron with a degree-3 vertex inserted: its face becomes a separating triangle.
  const auto g = extend3(make_octahedron(), make_octahedron().outer_face());
  CHECK(separating_triangles(g).size() == 1);
  // Independent count: non-facial triangles in the oracle enumeration.
  for (const auto& r : oracle::all_triangulations(8)) {
    PlaneTriangulation h(r);
    int triangles = 0;
    for (Vertex a = 0; a < 8; ++a)
      for (Vertex b = a + 1; b < 8; ++b)
        for (Vertex c = b + 1; c < 8; ++c)
          triangles += h.adjacent(a, b) && h.adjacent(b, c) && h.adjacent(a, c);
    CHECK(static_cast<int>(separating_triangles(h).size()) == triangles - 12);
  }
}

TEST_CASE("graph6 interchange") {
  CHECK(graph6_encode(make_k4()) == "C~");
  for (const auto& g : {make_k4(), make_octahedron(), make_icosahedron(), make_double_wheel(7)}) {
    const auto d = graph6_decode(graph6_encode(g));
    CHECK(canonical_code(d) == canonical_code(g));
    CHECK(graph6_encode(graph6_decode(graph6_encode(d))) == graph6_encode(d));
  }
  CHECK_THROWS_AS(graph6_decode("C^"), DomainError);  // K4 minus an edge
  CHECK_THROWS(graph6_decode("D~{"));                 // K5
}

TEST_CASE("dot export lists every edge once") {
  const auto s = to_dot(make_octahedron());
  std::size_t count = 0;
  for (std::size_t p = s.find("--"); p != std::string::npos; p = s.find("--", p + 2)) ++count;
  CHECK(count == 12);
}
