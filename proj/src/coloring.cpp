#include "triangulata/coloring.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace triangulata {

ColorPartition ColorPartition::from_colors(const std::vector<int>& raw) {
  ColorPartition p;
  p.color.resize(raw.size());
  std::map<int, int> rename;
  for (std::size_t v = 0; v < raw.size(); ++v) {
    auto [it, fresh] = rename.try_emplace(raw[v], static_cast<int>(rename.size()));
    p.color[v] = it->second;
  }
  return p;
}

int ColorPartition::class_count() const {
  int k = 0;
  for (int c : color) k = std::max(k, c + 1);
  return k;
}

VertexMask ColorPartition::class_mask(int i) const {
  VertexMask m = 0;
  for (std::size_t v = 0; v < color.size(); ++v)
    if (color[v] == i) m |= bit(static_cast<Vertex>(v));
  return m;
}

std::vector<VertexMask> ColorPartition::classes() const {
  std::vector<VertexMask> out(4, 0);
  for (std::size_t v = 0; v < color.size(); ++v) out.at(color[v]) |= bit(static_cast<Vertex>(v));
  return out;
}

bool is_proper_coloring(const PlaneTriangulation& g, const std::vector<int>& color) {
  if (static_cast<int>(color.size()) != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.rotation(u))
      if (color[u] == color[v]) return false;
  return true;
}

namespace {

// Order vertices so each one after the first three touches the colored set.
std::vector<Vertex> search_order(const PlaneTriangulation& g, const std::vector<Vertex>& seed) {
  const int n = g.order();
  std::vector<Vertex> order = seed;
  VertexMask placed = 0;
  for (Vertex v : seed) placed |= bit(v);
  while (static_cast<int>(order.size()) < n) {
    Vertex best = -1;
    int best_score = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed & bit(v)) continue;
      int score = std::popcount(g.neighbors(v) & placed);
      if (score > best_score) best = v, best_score = score;
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

template <class Visit>
void backtrack(const PlaneTriangulation& g, const std::vector<Vertex>& order, std::size_t fixed, std::vector<int>& color, std::vector<VertexMask>& masks, Visit&& visit, std::size_t k) {
  if (k == order.size()) {
    visit(color);
    return;
  }
  const Vertex v = order[k];
  for (int c = 0; c < 4; ++c) {
    if (masks[c] & g.neighbors(v)) continue;
    color[v] = c;
    masks[c] |= bit(v);
    backtrack(g, order, fixed, color, masks, visit, k + 1);
    masks[c] &= ~bit(v);
  }
  color[v] = -1;
}

}  // namespace

PartitionSet enumerate_all_partitions(const PlaneTriangulation& g) {
  const int n = g.order();
  const FaceTriple f = g.outer_face();
  auto order = search_order(g, {f.a, f.b, f.c});
  std::vector<int> color(n, -1);
  std::vector<VertexMask> masks(4, 0);
  color[f.a] = 0, color[f.b] = 1, color[f.c] = 2;
  masks[0] = bit(f.a), masks[1] = bit(f.b), masks[2] = bit(f.c);
  PartitionSet out;
  auto visit = [&](const std::vector<int>& c) {
    ColorPartition p = ColorPartition::from_colors(c);
    (p.class_count() == 4 ? out.four : out.three).push_back(std::move(p));
  };
  std::vector<Vertex> rest(order.begin() + 3, order.end());
  backtrack(g, rest, 0, color, masks, visit, 0);
  std::sort(out.four.begin(), out.four.end());
  std::sort(out.three.begin(), out.three.end());
  return out;
}

std::vector<ColorPartition> enumerate_partitions(const PlaneTriangulation& g) { return enumerate_all_partitions(g).four; }

std::uint64_t count_labeled_colorings(const PlaneTriangulation& g) {
  const int n = g.order();
  auto order = search_order(g, {0});
  std::vector<int> color(n, -1);
  std::vector<VertexMask> masks(4, 0);
  std::uint64_t count = 0;
  backtrack(g, order, 0, color, masks, [&](const std::vector<int>&) { ++count; }, 0);
  return count;
}

int Subgraph::order() const { return std::popcount(vertices); }

bool Subgraph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Subgraph induced_subgraph(const PlaneTriangulation& g, VertexMask vertices) {
  Subgraph h;
  h.vertices = vertices;
  for (VertexMask m = vertices; m; m &= m - 1) {
    Vertex u = std::countr_zero(m);
    for (VertexMask a = g.neighbors(u) & vertices & ~(bit(u + 1) - 1); a; a &= a - 1) h.edges.push_back({u, std::countr_zero(a)});
  }
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

Subgraph bicolored_subgraph(const PlaneTriangulation& g, const ColorPartition& f, int i, int j) {
  return induced_subgraph(g, f.class_mask(i) | f.class_mask(j));
}

Subgraph subgraph_union(const Subgraph& a, const Subgraph& b) {
  Subgraph h;
  h.vertices = a.vertices | b.vertices;
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), std::back_inserter(h.edges));
  return h;
}

namespace {

std::map<Vertex, std::vector<Vertex>> adjacency(const Subgraph& h) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (VertexMask m = h.vertices; m; m &= m - 1) adj[std::countr_zero(m)];
  for (auto [u, v] : h.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

int components(const Subgraph& h) {
  auto adj = adjacency(h);
  std::set<Vertex> seen;
  int count = 0;
  for (auto& [s, _] : adj) {
    if (seen.count(s)) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return count;
}

}  // namespace

bool is_acyclic(const Subgraph& h) { return static_cast<int>(h.edges.size()) == h.order() - components(h); }
bool is_connected(const Subgraph& h) { return components(h) <= 1; }

bool is_bipartite(const Subgraph& h) {
  auto adj = adjacency(h);
  std::map<Vertex, int> side;
  for (auto& [s, _] : adj) {
    if (side.count(s)) continue;
    side[s] = 0;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex y : adj[x]) {
        auto it = side.find(y);
        if (it == side.end()) {
          side[y] = 1 - side[x];
          q.push_back(y);
        } else if (it->second == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_path(const Subgraph& h) {
  if (!is_connected(h) || !is_acyclic(h)) return false;
  for (auto& [v, nb] : adjacency(h))
    if (nb.size() > 2) return false;
  return true;
}

std::optional<std::vector<Vertex>> as_cycle(const Subgraph& h) {
  if (h.order() < 3 || static_cast<int>(h.edges.size()) != h.order() || !is_connected(h)) return std::nullopt;
  auto adj = adjacency(h);
  for (auto& [v, nb] : adj)
    if (nb.size() != 2) return std::nullopt;
  std::vector<Vertex> cyc{adj.begin()->first};
  Vertex prev = -1;
  while (true) {
    Vertex x = cyc.back();
    Vertex y = adj[x][0] == prev ? adj[x][1] : adj[x][0];
    if (y == cyc.front()) break;
    prev = x;
    cyc.push_back(y);
  }
  return cyc;
}

std::optional<std::vector<Vertex>> find_cycle(const Subgraph& h) {
  // Union-find in edge order; the first closing edge yields the witness.
  std::map<Vertex, Vertex> parent;
  std::function<Vertex(Vertex)> find = [&](Vertex x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    return it->second = find(it->second);
  };
  std::map<Vertex, std::vector<Vertex>> forest;
  for (auto [u, v] : h.edges) {
    Vertex ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      forest[u].push_back(v);
      forest[v].push_back(u);
      continue;
    }
    std::map<Vertex, Vertex> from{{u, u}};
    std::deque<Vertex> q{u};
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex y : forest[x])
        if (!from.count(y)) {
          from[y] = x;
          q.push_back(y);
        }
    }
    std::vector<Vertex> cyc;
    for (Vertex x = v; x != u; x = from[x]) cyc.push_back(x);
    cyc.push_back(u);
    return cyc;
  }
  return std::nullopt;
}

ColoringClassification classify_coloring(const PlaneTriangulation& g, const ColorPartition& f) {
  ColoringClassification out;
  const int k = f.class_count();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (auto cyc = find_cycle(bicolored_subgraph(g, f, i, j))) out.bicolored_cycles.push_back({i, j, *cyc});
  out.kind = out.bicolored_cycles.empty() ? ColoringClassification::Kind::Tree : ColoringClassification::Kind::Cycle;
  return out;
}

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::PureTree: return "pure-tree";
    case GraphClass::PureCycle: return "pure-cycle";
    case GraphClass::Impure: return "impure";
    case GraphClass::ThreeChromatic: return "3-chromatic";
    case GraphClass::Divisible: return "divisible";
  }
  return "?";
}

GraphCensus classify_graph(const PlaneTriangulation& g) {
  GraphCensus c;
  auto ps = enumerate_all_partitions(g);
  c.partitions = static_cast<int>(ps.four.size());
  c.three_chromatic = ps.three_chromatic();
  c.divisible = is_divisible(g);
  for (const auto& p : ps.four)
    (classify_coloring(g, p).kind == ColoringClassification::Kind::Tree ? c.tree_count : c.cycle_count)++;
  if (c.three_chromatic) c.cls = GraphClass::ThreeChromatic;
  else if (c.divisible) c.cls = GraphClass::Divisible;
  else if (c.cycle_count == 0) c.cls = GraphClass::PureTree;
  else if (c.tree_count == 0) c.cls = GraphClass::PureCycle;
  else c.cls = GraphClass::Impure;
  return c;
}

FenceReport fence_analyze(const PlaneTriangulation& host, const Subgraph& h) {
  FenceReport r;
  r.bipartite = is_bipartite(h);
  r.connected = is_connected(h);
  r.has_cycle = !is_acyclic(h);

  // Inherited rotation, then boundary walks.
  std::map<Vertex, std::vector<Vertex>> rot;
  for (VertexMask m = h.vertices; m; m &= m - 1) {
    Vertex v = std::countr_zero(m);
    auto& r2 = rot[v];
    for (Vertex u : host.rotation(v))
      if (h.has_edge(u, v)) r2.push_back(u);
  }
  auto succ = [&](Vertex v, Vertex u) {
    const auto& r2 = rot[v];
    auto it = std::find(r2.begin(), r2.end(), u);
    return ++it == r2.end() ? r2.front() : *it;
  };
  std::set<std::pair<Vertex, Vertex>> used;
  for (auto [a, b] : h.edges)
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      if (used.count({u, v})) continue;
      int len = 0;
      Vertex x = u, y = v;
      do {
        used.insert({x, y});
        Vertex z = succ(y, x);
        x = y;
        y = z;
        ++len;
      } while (x != u || y != v);
      r.face_degrees.push_back(len);
    }
  std::sort(r.face_degrees.begin(), r.face_degrees.end());

  // 2-core by peeling; trees hanging off it are suspended.
  std::map<Vertex, int> deg;
  for (auto& [v, nb] : rot) deg[v] = static_cast<int>(nb.size());
  std::set<Vertex> peeled;
  std::deque<Vertex> q;
  for (auto& [v, d] : deg)
    if (d <= 1) q.push_back(v);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    if (!peeled.insert(v).second) continue;
    for (Vertex u : rot[v])
      if (!peeled.count(u) && --deg[u] <= 1) q.push_back(u);
  }
  int t = 0;
  bool infinite = false;
  for (auto& [v, nb] : rot) {
    if (nb.size() > 1 || !peeled.count(v)) continue;
    r.suspending |= bit(v);
    std::map<Vertex, int> dist{{v, 0}};
    std::deque<Vertex> bq{v};
    int found = -1;
    while (!bq.empty() && found < 0) {
      Vertex x = bq.front();
      bq.pop_front();
      if (!peeled.count(x)) {
        found = dist[x];
        r.weld |= bit(x);
        break;
      }
      for (Vertex y : rot[x])
        if (!dist.count(y)) {
          dist[y] = dist[x] + 1;
          bq.push_back(y);
        }
    }
    if (found < 0) infinite = true;
    else t = std::max(t, found);
  }
  if (!infinite) r.t = t;

  Subgraph core;
  for (auto& [v, _] : rot)
    if (!peeled.count(v)) core.vertices |= bit(v);
  for (auto [a, b] : h.edges)
    if (!peeled.count(a) && !peeled.count(b)) core.edges.push_back({a, b});
  bool faces_ok = r.bipartite && r.has_cycle;
  if (faces_ok) {
    FenceReport inner;
    // Walk lengths of the core only.
    std::set<std::pair<Vertex, Vertex>> seen;
    std::map<Vertex, std::vector<Vertex>> crot;
    for (auto& [v, nb] : rot)
      for (Vertex u : nb)
        if (!peeled.count(v) && !peeled.count(u)) crot[v].push_back(u);
    for (auto [a, b] : core.edges)
      for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
        if (seen.count({u, v})) continue;
        int len = 0;
        Vertex x = u, y = v;
        do {
          seen.insert({x, y});
          const auto& r2 = crot[y];
          auto it = std::find(r2.begin(), r2.end(), x);
          Vertex z = ++it == r2.end() ? r2.front() : *it;
          x = y;
          y = z;
          ++len;
        } while (x != u || y != v);
        if (len % 2 || len < 4) faces_ok = false;
      }
  }
  r.fence = faces_ok;
  return r;
}

UnionReport union_two_bicolored(const PlaneTriangulation& g, const ColorPartition& f, int common, int a, int b) {
  UnionReport r;
  r.first = bicolored_subgraph(g, f, common, a);
  r.second = bicolored_subgraph(g, f, common, b);
  r.graph = subgraph_union(r.first, r.second);
  r.odd_cycle_free = is_bipartite(r.graph);
  r.fence = fence_analyze(g, r.graph);
  const VertexMask common_mask = f.class_mask(common);
  r.suspending_touch_only_common = true;
  for (VertexMask m = r.fence.suspending; m; m &= m - 1) {
    Vertex v = std::countr_zero(m);
    for (auto [x, y] : r.graph.edges)
      if ((x == v || y == v) && !(common_mask & bit(x == v ? y : x))) r.suspending_touch_only_common = false;
  }
  // Other-colored vertices must share a side within each component.
  r.paths_between_others_odd = r.odd_cycle_free;
  if (r.odd_cycle_free) {
    auto adj = adjacency(r.graph);
    std::map<Vertex, std::pair<int, int>> place;  // component, side
    int comp = 0;
    for (auto& [s, _] : adj) {
      if (place.count(s)) continue;
      place[s] = {comp, 0};
      std::deque<Vertex> q{s};
      while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : adj[x])
          if (!place.count(y)) {
            place[y] = {comp, 1 - place[x].second};
            q.push_back(y);
          }
      }
      ++comp;
    }
    std::map<int, int> other_side;
    for (auto& [v, ps] : place) {
      if (f.color[v] == common) continue;
      auto [it, fresh] = other_side.try_emplace(ps.first, ps.second);
      if (!fresh && it->second != ps.second) r.paths_between_others_odd = false;
    }
  }
  return r;
}

namespace {

void count_paths(const std::map<Vertex, std::vector<Vertex>>& adj, Vertex x, Vertex target, VertexMask visited, int len, PathPairCount& out) {
  if (x == target) {
    ++out.q;
    // Closing with the single edge adds one to the length.
    ((len + 1) % 2 ? out.odd_cycles : out.even_cycles)++;
    return;
  }
  for (Vertex y : adj.at(x))
    if (!(visited & bit(y))) count_paths(adj, y, target, visited | bit(y), len + 1, out);
}

}  // namespace

TricoloredReport tricolored_checks(const PlaneTriangulation& g, const ColorPartition& f, int fourth) {
  TricoloredReport r;
  const auto cls = f.classes();
  if (fourth < 0) {
    fourth = 0;
    for (int i = 1; i < 4; ++i)
      if (std::popcount(cls[i]) > std::popcount(cls[fourth])) fourth = i;
  }
  r.fourth = fourth;
  std::vector<int> rest;
  for (int i = 0; i < 4; ++i)
    if (i != fourth) rest.push_back(i);

  r.coloring_is_cycle = classify_coloring(g, f).kind == ColoringClassification::Kind::Cycle;
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y) {
      auto h = bicolored_subgraph(g, f, rest[x], rest[y]);
      if (!is_acyclic(h)) r.restricted_has_cycle = true;
      if (!is_connected(h)) r.restricted_disconnected = true;
    }
  r.classification_agrees = r.coloring_is_cycle == (r.restricted_has_cycle || r.restricted_disconnected);

  int deg_sum = 0;
  for (VertexMask m = cls[fourth]; m; m &= m - 1) deg_sum += g.degree(std::countr_zero(m));
  r.predicted_triangles = 2 * g.order() - 4 - deg_sum;
  for (const auto& face : face_triples(g))
    if (!(cls[fourth] & (bit(face.a) | bit(face.b) | bit(face.c)))) ++r.triangles_without_fourth;

  auto u = union_two_bicolored(g, f, rest[0], rest[1], rest[2]);
  r.odd_vertex_paths = u.paths_between_others_odd;
  auto adj = adjacency(u.graph);
  for (auto [a, b] : bicolored_subgraph(g, f, rest[1], rest[2]).edges) {
    PathPairCount pc;
    pc.u = a;
    pc.v = b;
    if (adj.count(a) && adj.count(b)) count_paths(adj, a, b, bit(a), 0, pc);
    r.pair_counts.push_back(pc);
  }
  return r;
}

std::pair<CanonicalCode, std::vector<int>> colored_canonical_form(const PlaneTriangulation& g, const ColorPartition& f) {
  auto cf = canonical_form(g);
  const int n = g.order();
  std::vector<Vertex> inv0(n);
  for (Vertex x = 0; x < n; ++x) inv0[cf.labeling[x]] = x;
  std::vector<int> best;
  for (const auto& a : cf.automorphisms) {
    std::vector<int> c(n);
    for (int k = 0; k < n; ++k) c[k] = f.color[a.map[inv0[k]]];
    auto norm = ColorPartition::from_colors(c).color;
    if (best.empty() || norm < best) best = norm;
  }
  return {cf.code, best};
}

std::string to_dot(const PlaneTriangulation& g, const ColorPartition& f) {
  static const char* shapes[] = {"circle", "box", "triangle", "diamond"};
  std::vector<std::string> attrs(g.order());
  for (Vertex v = 0; v < g.order(); ++v) attrs[v] = std::string("shape=") + shapes[f.color[v] % 4] + ", label=\"" + std::to_string(v) + ":" + std::to_string(f.color[v] + 1) + "\"";
  return to_dot(g, attrs);
}

}  // namespace triangulata
