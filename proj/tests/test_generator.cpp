#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "triangulata/catalog_io.hpp"
#include "triangulata/coloring.hpp"
#include "triangulata/generator.hpp"

using namespace triangulata;

namespace {

std::set<CanonicalCode> codes_of(const Catalog& c) {
  std::set<CanonicalCode> s;
  for (const auto& e : c.entries) s.insert(e.code);
  return s;
}

// Strips degree-3 vertices in every possible order.
bool oracle_recursive(const Rotation& r) {
  PlaneTriangulation g(r);
  if (g.order() == 4) return true;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3 && oracle_recursive(contract3(g, v).rotations())) return true;
  return false;
}

int degree3_count(const PlaneTriangulation& g) {
  int k = 0;
  for (Vertex v = 0; v < g.order(); ++v) k += g.degree(v) == 3;
  return k;
}

// Exactly two degree-3 vertices, at distance two.
bool oracle_22(const PlaneTriangulation& g) {
  std::vector<Vertex> t;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3) t.push_back(v);
  return t.size() == 2 && !g.adjacent(t[0], t[1]) && (g.neighbors(t[0]) & g.neighbors(t[1])) != 0;
}

}  // namespace

TEST_CASE("delta4 catalogs agree with the oracle enumeration") {
  const int expected[] = {1, 1, 2, 5, 12, 34};
  CatalogStore store;
  for (int n = 6; n <= 11; ++n) {
    const Catalog& c = store.get(n);
    CHECK(static_cast<int>(c.size()) == expected[n - 6]);
    std::set<CanonicalCode> o;
    for (const auto& r : oracle::all_delta4(n)) o.insert(canonical_code(PlaneTriangulation(r)));
    CHECK(codes_of(c) == o);
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      const auto& e = c.entries[i];
      CHECK(e.graph.min_degree() >= 4);
      CHECK(validate_maximal_planar(e.graph).valid);
      CHECK(canonical_code(e.graph) == e.code);
      if (i) CHECK(c.entries[i - 1].code < e.code);
      if (!e.provenance.empty()) {
        const Catalog& parent = store.get(e.parent_order);
        const CatalogEntry* p = parent.find(e.parent_code);
        REQUIRE(p != nullptr);
        CHECK(canonical_code(replay(p->graph, e.provenance)) == e.code);
      }
    }
  }
}

TEST_CASE("generation is independent of the job count") {
  const Catalog a = generate_delta4(10, 1);
  const Catalog b = generate_delta4(10, 4);
  CHECK(catalog_text(a) == catalog_text(b));
}

TEST_CASE("missing lower catalogs raise a dependency error") {
  CHECK_THROWS_AS(generate_delta4(10, std::map<int, const Catalog*>{}), DependencyError);
}

TEST_CASE("closure of the order-10 catalog") {
  CatalogStore store;
  std::map<int, const Catalog*> lower;
  for (int k = 6; k <= 9; ++k) lower[k] = &store.get(k);
  const auto report = verify_closure(store.get(10), lower);
  CHECK(report.ok);
  CHECK(report.orphans.empty());
  CHECK(report.missing_children.empty());
}

TEST_CASE("parents and children") {
  const auto ico = make_icosahedron();
  CHECK(parents(ico).size() == 1);
  int eight = 0;
  for (const auto& c : children(make_octahedron())) {
    CHECK(c.graph.min_degree() >= 4);
    eight += c.graph.order() == 8;
  }
  CHECK(eight == 1);
  CatalogStore store;
  const Catalog& ten = store.get(10);
  for (const auto& e : store.get(8).entries)
    for (const auto& c : children(e.graph, 0))
      if (c.graph.order() == 10) CHECK(ten.find(c.code) != nullptr);
}

TEST_CASE("recursive graphs") {
  for (int n = 4; n <= 6; ++n) CHECK(generate_recursive(n).size() == 1);
  CHECK(is_recursive(make_k4()));
  CHECK_FALSE(is_recursive(make_octahedron()));
  for (int n = 5; n <= 9; ++n) {
    std::set<CanonicalCode> o;
    for (const auto& r : oracle::all_triangulations(n))
      if (oracle_recursive(r)) o.insert(canonical_code(PlaneTriangulation(r)));
    const Catalog c = generate_recursive(n);
    CHECK(codes_of(c) == o);
    for (const auto& e : c.entries) {
      CHECK(is_recursive(e.graph));
      // At least two degree-3 vertices, pairwise nonadjacent.
      CHECK(degree3_count(e.graph) >= 2);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (e.graph.degree(u) == 3 && e.graph.degree(v) == 3) CHECK_FALSE(e.graph.adjacent(u, v));
      CHECK(enumerate_all_partitions(e.graph).total() == 1);
    }
  }
}

TEST_CASE("no triangulation has exactly two adjacent degree-3 vertices") {
  for (int n = 5; n <= 9; ++n)
    for (const auto& r : oracle::all_triangulations(n)) {
      PlaneTriangulation g(r);
      std::vector<Vertex> t;
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 3) t.push_back(v);
      if (t.size() == 2) CHECK_FALSE(g.adjacent(t[0], t[1]));
    }
}

TEST_CASE("(2,2)-FWF graphs") {
  const int expected[] = {1, 1, 2, 3, 6};
  for (int n = 5; n <= 9; ++n) {
    const Catalog c = generate_22fwf(n);
    CHECK(static_cast<int>(c.size()) == expected[n - 5]);
    for (const auto& e : c.entries) {
      CHECK(is_22fwf(e.graph));
      CHECK(oracle_22(e.graph));
      CHECK(oracle_recursive(e.graph.rotations()));
      if (classify_22fwf(e.graph) == FwfType::Nonadjacent) {
        int big = 0;
        for (Vertex v = 0; v < n; ++v) big += e.graph.degree(v) == n - 1;
        CHECK(big == 1);
      }
      const Path2 p = fwf_center_path(e.graph);
      const auto star = star_extend(e.graph, p);
      CHECK(is_proper_coloring(star.graph, star.natural.color));
      CHECK(enumerate_all_partitions(star.graph).total() >= 2);
    }
  }
  const auto five = generate_22fwf(5).entries.at(0).graph;
  CHECK(canonical_code(five) == canonical_code(make_double_wheel(3)));
  CHECK(to_string(FwfType::Adjacent) != to_string(FwfType::Nonadjacent));
}

TEST_CASE("color sequences") {
  CHECK(canonical_code(color_sequence_decode("ygbr")) == canonical_code(make_k4()));
  const auto g = color_sequence_decode("ygbrybgyg");
  CHECK(g.order() == 9);
  CHECK(is_22fwf(g));
  CHECK_THROWS_AS(color_sequence_decode("ygbb"), DomainError);
  CHECK_THROWS_AS(color_sequence_decode("ygbrx"), DomainError);
  for (int n = 6; n <= 9; ++n) {
    std::set<CanonicalCode> seen;
    for (const auto& s : all_color_sequences(n)) {
      CHECK(s.substr(0, 6) == "ygbryb");
      if (n >= 7) CHECK((s[6] == 'y' || s[6] == 'g'));
      const auto h = color_sequence_decode(s);
      seen.insert(canonical_code(h));
      CHECK(canonical_code(color_sequence_decode(color_sequence_encode(h))) == canonical_code(h));
    }
    CHECK(seen == codes_of(generate_22fwf(n)));
  }
}

TEST_CASE("catalog files round trip") {
  const Catalog c = generate_delta4(9);
  const auto dir = std::filesystem::temp_directory_path() / "triangulata_catalog_test";
  std::filesystem::remove_all(dir);
  write_catalog(dir, c);
  CHECK(std::filesystem::exists(dir / "n=9.g6"));
  const Catalog back = read_catalog(dir, 9);
  CHECK(codes_of(back) == codes_of(c));
  CHECK(catalog_text(back) == catalog_text(c));
  CHECK(catalog_orders(dir) == std::vector<int>{9});
  CHECK_THROWS(read_catalog(dir, 10));
  CHECK_THROWS_AS(parse_catalog(6, "not-a-graph\n"), DomainError);
  std::filesystem::remove_all(dir);
}
