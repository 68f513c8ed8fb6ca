#include "triangulata/embedding.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace triangulata {

std::array<Vertex, 3> FaceTriple::sorted() const {
  std::array<Vertex, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return s;
}

FaceTriple FaceTriple::normalized() const {
  if (a <= b && a <= c) return *this;
  if (b <= a && b <= c) return {b, c, a};
  return {c, a, b};
}

Diagnosis validate_maximal_planar(const Rotation& rot) {
  const int n = static_cast<int>(rot.size());
  auto fail = [](std::string why) { return Diagnosis{false, std::move(why)}; };
  if (n < 3) return fail("fewer than 3 vertices");
  if (n > kMaxOrder) return fail("more than 62 vertices");
  std::vector<VertexMask> adj(n, 0);
  long darts = 0;
  for (int v = 0; v < n; ++v) {
    for (Vertex u : rot[v]) {
      if (u < 0 || u >= n) return fail("neighbor id out of range at vertex " + std::to_string(v));
      if (u == v) return fail("loop at vertex " + std::to_string(v));
      if (adj[v] & bit(u)) return fail("repeated neighbor at vertex " + std::to_string(v));
      adj[v] |= bit(u);
    }
    darts += static_cast<long>(rot[v].size());
  }
  for (int v = 0; v < n; ++v)
    for (Vertex u : rot[v])
      if (!(adj[u] & bit(v)))
        return fail("asymmetric edge " + std::to_string(v) + "-" + std::to_string(u));
  if (darts != 2L * (3 * n - 6)) return fail("edge count " + std::to_string(darts / 2) + " differs from 3n-6");

  VertexMask seen = 1;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    VertexMask fresh = adj[v] & ~seen;
    seen |= fresh;
    for (; fresh; fresh &= fresh - 1) stack.push_back(std::countr_zero(fresh));
  }
  if (std::popcount(seen) != n) return fail("disconnected");

  auto succ = [&](Vertex u, Vertex v) {
    const auto& r = rot[u];
    auto it = std::find(r.begin(), r.end(), v);
    ++it;
    return it == r.end() ? r.front() : *it;
  };
  std::set<std::pair<Vertex, Vertex>> used;
  int count = 0;
  for (int u = 0; u < n; ++u) {
    for (Vertex v : rot[u]) {
      if (used.count({u, v})) continue;
      int len = 0;
      Vertex a = u, b = v;
      do {
        used.insert({a, b});
        Vertex c = succ(b, a);
        a = b;
        b = c;
        if (++len > 3) return fail("face of degree greater than 3 through dart " + std::to_string(u) + "->" + std::to_string(v));
      } while (a != u || b != v);
      if (len != 3) return fail("face of degree " + std::to_string(len));
      ++count;
    }
  }
  if (count != 2 * n - 4) return fail("face count differs from 2n-4");
  return {};
}

PlaneTriangulation::PlaneTriangulation(Rotation rotation) : rot_(std::move(rotation)) {
  build();
  outer_ = face_of(0, rot_[0][0]);
}

PlaneTriangulation::PlaneTriangulation(Rotation rotation, FaceTriple outer) : rot_(std::move(rotation)) {
  build();
  if (!is_face(outer)) throw DomainError("outer face is not a face of the rotation system");
  outer_ = find_face(outer);
}

void PlaneTriangulation::build() {
  if (auto d = validate_maximal_planar(rot_); !d) throw StructuralError(d.reason);
  const int n = order();
  adj_.assign(n, 0);
  pos_.assign(static_cast<std::size_t>(n) * n, -1);
  edges_ = 0;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < degree(v); ++i) {
      adj_[v] |= bit(rot_[v][i]);
      pos_[v * n + rot_[v][i]] = static_cast<std::int16_t>(i);
    }
    edges_ += degree(v);
  }
  edges_ /= 2;
}

Vertex PlaneTriangulation::next(Vertex u, Vertex v) const {
  int i = position(u, v);
  if (i < 0) throw DomainError("not adjacent");
  return rot_[u][(i + 1) % degree(u)];
}

Vertex PlaneTriangulation::prev(Vertex u, Vertex v) const {
  int i = position(u, v);
  if (i < 0) throw DomainError("not adjacent");
  return rot_[u][(i + degree(u) - 1) % degree(u)];
}

bool PlaneTriangulation::is_face(const FaceTriple& f) const {
  const int n = order();
  for (Vertex x : {f.a, f.b, f.c})
    if (x < 0 || x >= n) return false;
  if (!adjacent(f.a, f.b) || !adjacent(f.b, f.c) || !adjacent(f.a, f.c)) return false;
  return next(f.b, f.a) == f.c || next(f.c, f.a) == f.b;
}

FaceTriple PlaneTriangulation::find_face(const FaceTriple& f) const {
  if (!is_face(f)) throw DomainError("not a face");
  if (next(f.b, f.a) == f.c) return {f.a, f.b, f.c};
  return {f.a, f.c, f.b};
}

int PlaneTriangulation::min_degree() const {
  int d = order();
  for (const auto& r : rot_) d = std::min<int>(d, static_cast<int>(r.size()));
  return d;
}

int PlaneTriangulation::max_degree() const {
  int d = 0;
  for (const auto& r : rot_) d = std::max<int>(d, static_cast<int>(r.size()));
  return d;
}

std::vector<int> PlaneTriangulation::degrees() const {
  std::vector<int> d(order());
  for (int v = 0; v < order(); ++v) d[v] = degree(v);
  return d;
}

Diagnosis validate_maximal_planar(const PlaneTriangulation& g) { return validate_maximal_planar(g.rotations()); }

std::vector<Face> faces(const PlaneTriangulation& g) {
  std::vector<Face> out;
  const FaceTriple outer = g.outer_face().normalized();
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.rotation(u)) {
      FaceTriple f = g.face_of(u, v);
      if (f.normalized() == f) out.push_back({f, f == outer});
    }
  std::stable_partition(out.begin(), out.end(), [](const Face& f) { return f.outer; });
  return out;
}

std::vector<FaceTriple> face_triples(const PlaneTriangulation& g) {
  std::vector<FaceTriple> out;
  for (const auto& f : faces(g)) out.push_back(f.triple);
  return out;
}

std::string degree_sequence(const PlaneTriangulation& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  std::string s;
  for (int x : d) s += x < 10 ? std::to_string(x) : "(" + std::to_string(x) + ")";
  return s;
}

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s += digits[b >> 4];
    s += digits[b & 15];
  }
  return s;
}

CanonicalCode CanonicalCode::from_hex(std::string_view s) {
  if (s.size() % 2) throw DomainError("odd-length hex code");
  CanonicalCode c;
  for (std::size_t i = 0; i < s.size(); i += 2) c.bytes.push_back(static_cast<std::uint8_t>(std::stoi(std::string(s.substr(i, 2)), nullptr, 16)));
  return c;
}

namespace {

struct CodeRun {
  std::vector<std::uint8_t> code;
  std::vector<Vertex> number;  // 1-based canonical numbers
};

// Breadth-first code from dart u->v. Returns -1/0/1 compared to best; stops
// early once the prefix exceeds best.
int run_code(const PlaneTriangulation& g, Vertex u, Vertex v, bool reversed, const std::vector<std::uint8_t>* best, CodeRun& run) {
  const int n = g.order();
  run.code.clear();
  run.number.assign(n, 0);
  std::vector<Vertex> ref(n, -1), queue;
  queue.reserve(n);
  run.number[u] = 1;
  ref[u] = v;
  queue.push_back(u);
  int next_number = 2;
  int cmp = 0;
  auto emit = [&](std::uint8_t b) {
    if (best && cmp == 0) {
      std::uint8_t o = (*best)[run.code.size()];
      if (b != o) cmp = b < o ? -1 : 1;
    }
    run.code.push_back(b);
  };
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex x = queue[qi];
    const auto& r = g.rotation(x);
    const int d = static_cast<int>(r.size());
    const int p = g.position(x, ref[x]);
    for (int k = 0; k < d; ++k) {
      Vertex y = r[reversed ? (p - k + d) % d : (p + k) % d];
      if (!run.number[y]) {
        run.number[y] = next_number++;
        ref[y] = x;
        queue.push_back(y);
      }
      emit(static_cast<std::uint8_t>(run.number[y]));
      if (cmp > 0) return 1;
    }
    emit(0);
    if (cmp > 0) return 1;
  }
  return best ? cmp : -1;
}

}  // namespace

CanonicalForm canonical_form(const PlaneTriangulation& g) {
  const int n = g.order();
  if (n < 4) throw DomainError("canonical code requires n >= 4");

  // Restrict starts to the rarest (deg u, deg v) dart class.
  std::map<std::pair<int, int>, int> classes;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.rotation(u)) ++classes[{g.degree(u), g.degree(v)}];
  std::pair<int, int> chosen{};
  int fewest = -1;
  for (const auto& [key, count] : classes)
    if (fewest < 0 || count < fewest) {
      fewest = count;
      chosen = key;
    }

  struct Start {
    Vertex u, v;
    bool reversed;
    std::vector<Vertex> number;
  };
  std::vector<Start> ties;
  std::vector<std::uint8_t> best;
  CodeRun run;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != chosen.first) continue;
    for (Vertex v : g.rotation(u)) {
      if (g.degree(v) != chosen.second) continue;
      for (bool reversed : {false, true}) {
        int cmp = run_code(g, u, v, reversed, best.empty() ? nullptr : &best, run);
        if (cmp < 0) {
          best = run.code;
          ties.clear();
        }
        if (cmp <= 0) ties.push_back({u, v, reversed, run.number});
      }
    }
  }

  CanonicalForm out;
  out.code.bytes = best;
  const Start& s0 = ties.front();
  out.reflected = s0.reversed;
  out.labeling.resize(n);
  for (Vertex x = 0; x < n; ++x) out.labeling[x] = s0.number[x] - 1;
  for (const Start& s : ties) {
    std::vector<Vertex> inv(n);
    for (Vertex x = 0; x < n; ++x) inv[s.number[x] - 1] = x;
    Automorphism a;
    a.map.resize(n);
    for (Vertex x = 0; x < n; ++x) a.map[x] = inv[out.labeling[x]];
    a.reflecting = s.reversed != s0.reversed;
    out.automorphisms.push_back(std::move(a));
  }
  return out;
}

CanonicalCode canonical_code(const PlaneTriangulation& g) { return canonical_form(g).code; }

PlaneTriangulation relabel(const PlaneTriangulation& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  Rotation r(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.rotation(v)) r[perm[v]].push_back(perm[u]);
  const FaceTriple& f = g.outer_face();
  return PlaneTriangulation(std::move(r), {perm[f.a], perm[f.b], perm[f.c]});
}

PlaneTriangulation reflect(const PlaneTriangulation& g) {
  Rotation r = g.rotations();
  for (auto& x : r) std::reverse(x.begin(), x.end());
  const FaceTriple& f = g.outer_face();
  return PlaneTriangulation(std::move(r), {f.a, f.c, f.b});
}

PlaneTriangulation canonical_relabel(const PlaneTriangulation& g) {
  auto cf = canonical_form(g);
  PlaneTriangulation h = relabel(cf.reflected ? reflect(g) : g, cf.labeling);
  // Root at the face of dart 0 -> first neighbor so the value is label-determined.
  Rotation r = h.rotations();
  const int p = h.position(0, 1);
  std::rotate(r[0].begin(), r[0].begin() + p, r[0].end());
  for (Vertex v = 1; v < h.order(); ++v) {
    auto it = std::min_element(r[v].begin(), r[v].end());
    std::rotate(r[v].begin(), it, r[v].end());
  }
  return PlaneTriangulation(std::move(r));
}

std::vector<std::vector<Vertex>> subgraph_occurrences(const PlaneTriangulation& g, SubgraphKind kind) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  switch (kind) {
    case SubgraphKind::Edge:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.rotation(u))
          if (u < v) out.push_back({u, v});
      break;
    case SubgraphKind::Path2:
    case SubgraphKind::InducedPath2:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex x : g.rotation(u))
          for (Vertex y : g.rotation(u))
            if (x < y && (kind == SubgraphKind::Path2 || !g.adjacent(x, y))) out.push_back({x, u, y});
      break;
    case SubgraphKind::Triangle:
      for (const auto& f : face_triples(g)) {
        auto s = f.sorted();
        out.push_back({s[0], s[1], s[2]});
      }
      break;
    case SubgraphKind::Funnel:
    case SubgraphKind::InducedFunnel:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex b1 : g.rotation(u)) {
          Vertex b2 = g.next(u, b1);
          for (Vertex t : g.rotation(u)) {
            if (t == b1 || t == b2) continue;
            if (kind == SubgraphKind::InducedFunnel && (g.adjacent(t, b1) || g.adjacent(t, b2))) continue;
            out.push_back({t, u, std::min(b1, b2), std::max(b1, b2)});
          }
        }
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<Vertex> apply_to(const std::vector<Vertex>& occ, const std::vector<Vertex>& map, SubgraphKind kind) {
  std::vector<Vertex> r;
  for (Vertex x : occ) r.push_back(map[x]);
  switch (kind) {
    case SubgraphKind::Edge:
    case SubgraphKind::Path2:
    case SubgraphKind::InducedPath2:
      if (r.front() > r.back()) std::swap(r.front(), r.back());
      break;
    case SubgraphKind::Triangle:
      std::sort(r.begin(), r.end());
      break;
    case SubgraphKind::Funnel:
    case SubgraphKind::InducedFunnel:
      if (r[2] > r[3]) std::swap(r[2], r[3]);
      break;
  }
  return r;
}

}  // namespace

std::vector<Orbit> automorphism_orbits(const PlaneTriangulation& g, SubgraphKind kind) {
  auto occ = subgraph_occurrences(g, kind);
  auto autos = canonical_form(g).automorphisms;
  std::vector<char> done(occ.size(), 0);
  std::vector<Orbit> out;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (done[i]) continue;
    std::set<std::vector<Vertex>> orbit;
    for (const auto& a : autos) orbit.insert(apply_to(occ[i], a.map, kind));
    for (const auto& o : orbit) {
      auto it = std::lower_bound(occ.begin(), occ.end(), o);
      if (it == occ.end() || *it != o) throw StructuralError("automorphism image is not an occurrence");
      done[it - occ.begin()] = 1;
    }
    out.push_back({occ[i], static_cast<int>(orbit.size())});
  }
  return out;
}

PlaneTriangulation reroot_outer_face(const PlaneTriangulation& g, const FaceTriple& f) {
  if (!g.is_face(f)) throw DomainError("reroot target is not a face");
  return PlaneTriangulation(g.rotations(), f);
}

NeighborCycle neighbor_cycle(const PlaneTriangulation& g, Vertex v) {
  NeighborCycle nc;
  nc.cycle = g.rotation(v);
  const int d = static_cast<int>(nc.cycle.size());
  int edges = 0;
  bool triangle = false;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      if (!g.adjacent(nc.cycle[i], nc.cycle[j])) continue;
      ++edges;
      for (int k = j + 1; k < d; ++k)
        if (g.adjacent(nc.cycle[i], nc.cycle[k]) && g.adjacent(nc.cycle[j], nc.cycle[k])) triangle = true;
    }
  nc.chords = edges - d;
  if (d == 3) triangle = true;
  nc.kind = triangle ? NeighborCycleKind::Triangle : nc.chords ? NeighborCycleKind::Chord : NeighborCycleKind::Basic;
  return nc;
}

std::vector<std::array<Vertex, 3>> separating_triangles(const PlaneTriangulation& g) {
  std::vector<std::array<Vertex, 3>> out;
  std::set<std::array<Vertex, 3>> facial;
  for (const auto& f : face_triples(g)) facial.insert(f.sorted());
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : g.rotation(a)) {
      if (b <= a) continue;
      VertexMask common = g.neighbors(a) & g.neighbors(b) & ~((bit(b + 1) - 1));
      for (; common; common &= common - 1) {
        std::array<Vertex, 3> t{a, b, std::countr_zero(common)};
        if (!facial.count(t)) out.push_back(t);
      }
    }
  return out;
}

std::string graph6_encode(const PlaneTriangulation& g) {
  const int n = g.order();
  std::string s(1, static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        s += static_cast<char>(acc + 63);
        acc = nbits = 0;
      }
    }
  if (nbits) s += static_cast<char>((acc << (6 - nbits)) + 63);
  return s;
}

std::vector<VertexMask> graph6_adjacency(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw DomainError("empty graph6 record");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw DomainError("invalid graph6 character");
  const int n = text[0] - 63;
  if (n > kMaxOrder) throw DomainError("graph6 long form (n > 62) is not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (text.size() != 1 + (bits + 5) / 6) throw DomainError("graph6 record has wrong length");
  std::vector<VertexMask> adj(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  return adj;
}

PlaneTriangulation embed_maximal_planar(const std::vector<VertexMask>& adjacency) {
  using namespace boost;
  using Graph = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
  const int n = static_cast<int>(adjacency.size());
  if (n < 3) throw DomainError("fewer than 3 vertices");
  Graph bg(n);
  int m = 0;
  for (int u = 0; u < n; ++u)
    for (VertexMask a = adjacency[u]; a; a &= a - 1) {
      int v = std::countr_zero(a);
      if (v == u) throw DomainError("loop");
      if (u < v) add_edge(u, v, m++, bg);
    }
  if (m != 3 * n - 6) throw DomainError("not maximal: edge count " + std::to_string(m) + " differs from 3n-6");
  using Edge = graph_traits<Graph>::edge_descriptor;
  std::vector<std::vector<Edge>> emb(n);
  if (!boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg, boyer_myrvold_params::embedding = &emb[0]))
    throw DomainError("not planar");
  Rotation rot(n);
  for (int v = 0; v < n; ++v)
    for (const Edge& e : emb[v]) {
      int a = static_cast<int>(source(e, bg)), b = static_cast<int>(target(e, bg));
      rot[v].push_back(a == v ? b : a);
    }
  if (auto d = validate_maximal_planar(rot); !d) throw DomainError("not a triangulation: " + d.reason);
  PlaneTriangulation g(std::move(rot));
  if (n >= 4 && canonical_form(g).reflected) g = PlaneTriangulation(reflect(g).rotations());
  return g;
}

PlaneTriangulation graph6_decode(std::string_view text) { return embed_maximal_planar(graph6_adjacency(text)); }

std::string to_dot(const PlaneTriangulation& g, const std::vector<std::string>& vertex_attrs) {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (v < static_cast<Vertex>(vertex_attrs.size()) && !vertex_attrs[v].empty()) os << " [" << vertex_attrs[v] << "]";
    os << ";\n";
  }
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.rotation(u))
      if (u < v) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

PlaneTriangulation from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexMask> adj(n, 0);
  for (auto [u, v] : edges) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return embed_maximal_planar(adj);
}

}  // namespace

PlaneTriangulation make_k3() { return PlaneTriangulation(Rotation{{1, 2}, {2, 0}, {0, 1}}); }

PlaneTriangulation make_k4() { return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

PlaneTriangulation make_octahedron() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) e.push_back({u, v});
  return from_pairs(6, e);
}

PlaneTriangulation make_icosahedron() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    int up = 1 + i, up2 = 1 + (i + 1) % 5, lo = 6 + i, lo2 = 6 + (i + 1) % 5;
    e.push_back({0, up});
    e.push_back({up, up2});
    e.push_back({up, lo});
    e.push_back({up2, lo});
    e.push_back({lo, lo2});
    e.push_back({lo, 11});
  }
  return from_pairs(12, e);
}

PlaneTriangulation make_double_wheel(int k) {
  if (k < 3) throw DomainError("double wheel needs a rim of length >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) {
    e.push_back({i, (i + 1) % k});
    e.push_back({i, k});
    e.push_back({i, k + 1});
  }
  return from_pairs(k + 2, e);
}

}  // namespace triangulata
