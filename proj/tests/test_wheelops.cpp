#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "triangulata/coloring.hpp"
#include "triangulata/embedding.hpp"
#include "triangulata/generator.hpp"
#include "triangulata/wheelops.hpp"

using namespace triangulata;

namespace {

PlaneTriangulation order7() { return PlaneTriangulation(oracle::all_delta4(7).at(0)); }

std::vector<PlaneTriangulation> delta4_upto(int n) {
  std::vector<PlaneTriangulation> out;
  for (int k = 6; k <= n; ++k)
    for (const auto& r : oracle::all_delta4(k)) out.emplace_back(r);
  return out;
}

}  // namespace

TEST_CASE("extend3 and contract3") {
  const auto k4 = extend3(make_k3(), make_k3().outer_face());
  CHECK(canonical_code(k4) == canonical_code(make_k4()));
  std::set<CanonicalCode> fives;
  for (const auto& f : face_triples(make_k4())) {
    const auto g = extend3(make_k4(), f);
    CHECK(g.order() == 5);
    CHECK(g.degree(4) == 3);
    fives.insert(canonical_code(g));
    CHECK(canonical_code(contract3(g, 4)) == canonical_code(make_k4()));
  }
  CHECK(fives.size() == 1);
  CHECK_THROWS_AS(extend3(make_k4(), FaceTriple{0, 1, 1}), DomainError);
  CHECK_THROWS_AS(contract3(make_octahedron(), 0), DomainError);
}

TEST_CASE("extend2 needs a compound context") {
  CHECK_THROWS_AS(extend2(make_k3(), 0, 1), DomainError);
  CHECK_THROWS_AS(contract2(make_octahedron(), 0), DomainError);
}

TEST_CASE("extend4 from the octahedron") {
  const auto oct = make_octahedron();
  std::set<CanonicalCode> children;
  for (const auto& p : subgraph_occurrences(oct, SubgraphKind::Path2)) {
    const auto g = extend4(oct, {p[0], p[1], p[2]});
    CHECK(g.order() == 8);
    CHECK(validate_maximal_planar(g).valid);
    CHECK(g.degree(p[1]) + g.degree(6) == oct.degree(p[1]) + 4);
    if (g.min_degree() >= 4) {
      CHECK(degree_sequence(g) == "44444466");
      children.insert(canonical_code(g));
    }
  }
  CHECK(children.size() == 1);
  CHECK_THROWS_AS(extend4(oct, {0, 3, 1}), DomainError);
}

TEST_CASE("extend4 on the 545 path of the order-7 graph") {
  const auto g7 = order7();
  std::set<std::string> seqs;
  for (const auto& p : subgraph_occurrences(g7, SubgraphKind::Path2))
    if (g7.degree(p[0]) == 5 && g7.degree(p[2]) == 5 && g7.degree(p[1]) == 4) seqs.insert(degree_sequence(extend4(g7, {p[0], p[1], p[2]})));
  CHECK(seqs.count("444444477") == 1);
}

TEST_CASE("extend5 examples") {
  const auto g7 = order7();
  std::set<std::string> seqs;
  for (const auto& l : subgraph_occurrences(g7, SubgraphKind::Funnel)) {
    const auto g = extend5(g7, {l[0], l[1], l[2], l[3]});
    CHECK(g.order() == 9);
    if (g.min_degree() >= 4) seqs.insert(degree_sequence(g));
  }
  CHECK(seqs.count("444455556") == 1);

  // extend3 on the octahedron, then a 5-wheel on a funnel whose top is the new vertex.
  const auto oct = make_octahedron();
  const auto h = extend3(oct, oct.outer_face());
  std::set<std::string> from_h;
  for (const auto& l : subgraph_occurrences(h, SubgraphKind::Funnel)) {
    if (l[0] != 6) continue;
    const auto g = extend5(h, {l[0], l[1], l[2], l[3]});
    if (g.min_degree() >= 4) from_h.insert(degree_sequence(g));
  }
  CHECK(from_h.count("444555555") == 1);
}

TEST_CASE("compound extension through a 2-wheel gives 444444666") {
  const auto oct = make_octahedron();
  std::set<std::string> seqs;
  for (const auto& e : subgraph_occurrences(oct, SubgraphKind::Edge)) {
    const Vertex a = e[0], b = e[1];
    // The new vertex 6 sits between a and b; extend4 runs on a 2-path through it.
    for (const Vertex x : {a, b}) {
      const Vertex y = x == a ? b : a;
      for (Vertex z = 0; z < 6; ++z) {
        if (z == x || z == y || !oct.adjacent(z, x)) continue;
        WheelOpRecord pre{OpKind::Extend2, {a, b}, {}, {}};
        WheelOpRecord main{OpKind::Extend4, {z, x, 6}, {}, {}};
        try {
          const auto g = compound_extend(oct, {pre, main});
          if (g.min_degree() >= 4) seqs.insert(degree_sequence(g));
        } catch (const DomainError&) {
        }
      }
    }
  }
  CHECK(seqs.count("444444666") == 1);
}

TEST_CASE("contractions invert extensions") {
  for (const auto& g : delta4_upto(9)) {
    const int n = g.order();
    for (const auto& p : subgraph_occurrences(g, SubgraphKind::Path2)) {
      PlaneTriangulation h;
      try {
        h = extend4(g, {p[0], p[1], p[2]});
      } catch (const DomainError&) {
        continue;
      }
      // New center is n + 1, split copy of u is n.
      CHECK(canonical_code(contract4(h, n + 1, {std::min(p[1], n), std::max(p[1], n)})) == canonical_code(g));
    }
    for (const auto& l : subgraph_occurrences(g, SubgraphKind::Funnel)) {
      PlaneTriangulation h;
      try {
        h = extend5(g, {l[0], l[1], l[2], l[3]});
      } catch (const DomainError&) {
        continue;
      }
      bool found = false;
      for (const auto& pr : contraction_pairs(h, n + 1)) {
        try {
          found = found || canonical_code(contract5(h, n + 1, pr)) == canonical_code(g);
        } catch (const DomainError&) {
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("contract4 sizes and the adjacent-pair guard") {
  for (const auto& g : delta4_upto(10))
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 4) continue;
      const auto& r = g.rotation(v);
      for (int i = 0; i < 2; ++i) {
        const std::pair<Vertex, Vertex> ab{std::min(r[i], r[i + 2]), std::max(r[i], r[i + 2])};
        if (g.adjacent(ab.first, ab.second)) {
          CHECK_THROWS_AS(contract4(g, v, ab), DomainError);
          continue;
        }
        try {
          const auto h = contract4(g, v, ab);
          CHECK(h.order() == g.order() - 2);
          CHECK(validate_maximal_planar(h).valid);
        } catch (const DomainError&) {
          // A common neighbor off the wheel leaves parallel edges.
          CHECK(__builtin_popcountll(g.neighbors(ab.first) & g.neighbors(ab.second)) > 3);
        }
      }
    }
}

TEST_CASE("compound contraction invariants") {
  std::set<CanonicalCode> without_short_step;
  for (const auto& g : delta4_upto(11)) {
    if (g.order() < 9) continue;
    bool short_step = false;
    for (const auto& c : all_compound_contractions(g)) {
      CHECK(c.result.min_degree() >= 4);
      CHECK(c.result.order() == g.order() - static_cast<int>(c.sub.X.size()) - 1);
      int fives = 0;
      bool small = true;
      for (int d : c.sub.x_degrees) {
        small = small && (d == 4 || d == 5);
        fives += d == 5;
      }
      if (small && fives <= 2) CHECK(c.sub.configuration != '?');
      if (c.sub.X.size() <= 2) {
        CHECK(small);
        short_step = true;
      }
    }
    if (!short_step) without_short_step.insert(canonical_code(g));
  }
  // Graphs whose every compound contraction removes at least three vertices
  // besides the identified one.
  std::set<CanonicalCode> expected;
  for (const char* s : {"IJNEMdgvW", "JJL]MmDZCL?", "JJL]EmDZEL?", "JJK[EmDZsL_", "JJN]MckXKi?"}) expected.insert(canonical_code(graph6_decode(s)));
  CHECK(without_short_step == expected);
}

TEST_CASE("configurations of small contractions") {
  const auto ico = make_icosahedron();
  const auto sub = classify_contractible(extend4(make_octahedron(), {0, 1, 2}), {7});
  CHECK(sub.configuration == 'a');
  bool seen_d = false;
  for (const auto& g : delta4_upto(10))
    for (const auto& c : all_compound_contractions(g))
      if (c.sub.X.size() == 2 && c.sub.x_degrees[0] + c.sub.x_degrees[1] == 9) seen_d = seen_d || c.sub.configuration == 'd';
  CHECK(seen_d);
  CHECK(!all_compound_contractions(ico).empty());
}

namespace {

// Depth-first search over 3-, 4- and 5-wheel contractions and compound contractions.
bool reaches(const PlaneTriangulation& g, const std::set<CanonicalCode>& targets, std::set<CanonicalCode>& dead) {
  const CanonicalCode c = canonical_code(g);
  if (targets.count(c)) return true;
  if (dead.count(c) || g.order() <= 4) return false;
  if (g.min_degree() >= 4 && g.order() >= 9)
    for (const auto& cc : all_compound_contractions(g))
      if (reaches(cc.result, targets, dead)) return true;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<PlaneTriangulation> next;
    if (g.degree(v) == 3) next.push_back(contract3(g, v));
    for (const auto& pr : contraction_pairs(g, v)) {
      try {
        next.push_back(g.degree(v) == 4 ? contract4(g, v, pr) : contract5(g, v, pr));
      } catch (const DomainError&) {
      }
    }
    for (const auto& h : next)
      if (h.order() >= 4 && reaches(h, targets, dead)) return true;
  }
  dead.insert(c);
  return false;
}

}  // namespace

TEST_CASE("triangulations up to order 9 contract down to K4 or the octahedron") {
  const std::set<CanonicalCode> targets{canonical_code(make_k4()), canonical_code(make_octahedron())};
  std::set<CanonicalCode> dead;
  for (int n = 5; n <= 9; ++n)
    for (const auto& r : oracle::all_triangulations(n)) {
      PlaneTriangulation g(r);
      INFO(graph6_encode(g));
      CHECK(reaches(g, targets, dead));
    }
  CHECK(contract3(make_k4(), 3).order() == 3);
}

TEST_CASE("wheel op records round trip and replay") {
  const auto g7 = order7();
  WheelOpRecord rec{OpKind::Extend4, {0, 1, 2}, {}, {}};
  const auto p = subgraph_occurrences(g7, SubgraphKind::Path2).at(0);
  rec.object = {p[0], p[1], p[2]};
  const auto h = replay(g7, {rec});
  rec.result_code = canonical_code(h);
  CHECK(WheelOpRecord::from_json(rec.to_json()) == rec);
  CHECK(canonical_code(h) == canonical_code(extend4(g7, {p[0], p[1], p[2]})));
  for (auto k : {OpKind::Extend2, OpKind::Contract2, OpKind::Extend3, OpKind::Contract3, OpKind::Extend4, OpKind::Contract4, OpKind::Extend5,
                 OpKind::Contract5})
    CHECK(op_kind_from_string(to_string(k)) == k);
  CHECK_THROWS(WheelOpRecord::from_json("not json"));
}

TEST_CASE("extension objects") {
  const auto ico = make_icosahedron();
  int paths = 0, funnels = 0;
  for (const auto& o : enumerate_extension_objects(ico)) {
    if (!o.admissible) continue;
    paths += o.kind == ExtensionObject::Kind::Path;
    funnels += o.kind == ExtensionObject::Kind::Funnel;
  }
  CHECK(paths >= 1);
  CHECK(funnels >= 1);
  std::set<CanonicalCode> kids;
  for (const auto& o : enumerate_extension_objects(make_octahedron())) {
    const auto g = apply_extension(make_octahedron(), o);
    if (g.order() == 8 && g.min_degree() >= 4) kids.insert(canonical_code(g));
    CHECK(o.admissible == (g.min_degree() >= 4));
  }
  CHECK(kids.size() == 1);
}

TEST_CASE("colored contraction and extension") {
  for (const auto& g : delta4_upto(9))
    for (const auto& f : enumerate_partitions(g))
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 5) continue;
        ColoredResult c;
        try {
          c = contract_k_under_coloring(g, f, v);
        } catch (const DomainError&) {
          continue;
        }
        CHECK(validate_maximal_planar(c.graph).valid);
        CHECK(is_proper_coloring(c.graph, c.partition.color));
        const auto back = replay_inverse(c);
        CHECK(canonical_code(back.graph) == canonical_code(g));
        CHECK(is_proper_coloring(back.graph, back.partition.color));
        CHECK(colored_canonical_form(back.graph, back.partition) == colored_canonical_form(g, f));
      }

  const auto oct = make_octahedron();
  const auto f = enumerate_partitions(oct).at(0);
  const auto e3 = extend_under_coloring(oct, f, {0, 1, 2}, 3);
  CHECK(is_proper_coloring(e3.graph, e3.partition.color));
  CHECK(e3.partition.class_count() == 4);
}
