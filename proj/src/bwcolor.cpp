#include "triangulata/bwcolor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <iterator>

#include "json.hpp"

namespace triangulata {

namespace {

template <class F>
void for_bits(VertexMask m, F&& f) {
  for (; m; m &= m - 1) f(static_cast<Vertex>(std::countr_zero(m)));
}

std::vector<Vertex> bits_of(VertexMask m) {
  std::vector<Vertex> out;
  for_bits(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask mask_of(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

std::pair<SemiMPG, SemiMPG> split_generic(int n, const Rotation& rot, const std::vector<VertexMask>& adj, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 4) throw DomainError("cycle shorter than 4");
  VertexMask cmask = 0;
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || rot[v].empty()) throw DomainError("cycle vertex out of range");
    if (cmask & bit(v)) throw DomainError("cycle repeats a vertex");
    cmask |= bit(v);
  }
  for (int i = 0; i < k; ++i)
    if (!(adj[cycle[i]] & bit(cycle[(i + 1) % k]))) throw DomainError("consecutive cycle vertices are not adjacent");

  std::pair<SemiMPG, SemiMPG> out;
  for (int side = 0; side < 2; ++side) {
    SemiMPG& s = side == 0 ? out.first : out.second;
    s.host_order = n;
    s.boundary = cycle;
    s.boundary_mask = cmask;
    s.adj.assign(n, 0);
    s.rotation.assign(n, {});
    VertexMask seeds = 0;
    for (int i = 0; i < k; ++i) {
      const Vertex c = cycle[i];
      const Vertex nx = cycle[(i + 1) % k], pv = cycle[(i + k - 1) % k];
      const auto& r = rot[c];
      const int d = static_cast<int>(r.size());
      const int start = static_cast<int>(std::find(r.begin(), r.end(), side == 0 ? nx : pv) - r.begin());
      const Vertex stop = side == 0 ? pv : nx;
      std::vector<Vertex> fan{r[start]};
      for (int j = 1; j < d; ++j) {
        const Vertex w = r[(start + j) % d];
        fan.push_back(w);
        if (w == stop) break;
      }
      for (Vertex w : fan) {
        s.adj[c] |= bit(w);
        if (!(cmask & bit(w))) seeds |= bit(w);
      }
      s.rotation[c] = fan;
    }
    VertexMask inside = 0, frontier = seeds;
    while (frontier) {
      const Vertex v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (inside & bit(v)) continue;
      inside |= bit(v);
      frontier |= adj[v] & ~cmask & ~inside;
    }
    s.interior = inside;
    for_bits(inside, [&](Vertex v) {
      s.adj[v] = adj[v];
      s.rotation[v] = rot[v];
    });
  }
  return out;
}

bool bipartite_in(const std::vector<VertexMask>& adj, VertexMask x, std::vector<Vertex>* odd = nullptr) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  VertexMask todo = x;
  while (todo) {
    const Vertex root = std::countr_zero(todo);
    side[root] = 0;
    std::vector<Vertex> queue{root};
    todo &= ~bit(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex u = queue[qi];
      for (VertexMask m = adj[u] & x; m; m &= m - 1) {
        const Vertex w = std::countr_zero(m);
        if (side[w] < 0) {
          side[w] = side[u] ^ 1;
          parent[w] = u;
          depth[w] = depth[u] + 1;
          todo &= ~bit(w);
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          if (odd) {
            std::vector<Vertex> left, right;
            Vertex a = u, b = w;
            while (depth[a] > depth[b]) left.push_back(a), a = parent[a];
            while (depth[b] > depth[a]) right.push_back(b), b = parent[b];
            while (a != b) left.push_back(a), right.push_back(b), a = parent[a], b = parent[b];
            left.push_back(a);
            odd->assign(left.begin(), left.end());
            odd->insert(odd->end(), right.rbegin(), right.rend());
          }
          return false;
        }
      }
    }
  }
  return true;
}

Subgraph subgraph_of(const SemiMPG& s, VertexMask x) {
  Subgraph h;
  h.vertices = x;
  for_bits(x, [&](Vertex u) {
    for_bits(s.adj[u] & x, [&](Vertex w) {
      if (u < w) h.edges.emplace_back(u, w);
    });
  });
  return h;
}

// The boundary with index parity is layer 0; later layers use the parity of
// a breadth-first 2-coloring of each component of the layer.
struct Layer {
  VertexMask mask = 0;
  std::vector<int> comp, parity;
};

Layer boundary_layer(const SemiMPG& s) {
  Layer l;
  l.mask = s.boundary_mask;
  l.comp.assign(s.host_order, -1);
  l.parity.assign(s.host_order, 0);
  for (std::size_t i = 0; i < s.boundary.size(); ++i) {
    l.comp[s.boundary[i]] = 0;
    l.parity[s.boundary[i]] = static_cast<int>(i % 2);
  }
  return l;
}

Layer make_layer(const SemiMPG& s, VertexMask x) {
  Layer l;
  l.mask = x;
  l.comp.assign(s.host_order, -1);
  l.parity.assign(s.host_order, 0);
  int c = 0;
  for_bits(x, [&](Vertex root) {
    if (l.comp[root] >= 0) return;
    std::vector<Vertex> queue{root};
    l.comp[root] = c;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex u = queue[qi];
      for_bits(s.adj[u] & x, [&](Vertex w) {
        if (l.comp[w] >= 0) return;
        l.comp[w] = c;
        l.parity[w] = l.parity[u] ^ 1;
        queue.push_back(w);
      });
    }
    ++c;
  });
  return l;
}

VertexMask next_layer(const SemiMPG& s, const Layer& prev, VertexMask uncolored) {
  VertexMask out = 0;
  for_bits(uncolored, [&](Vertex v) {
    std::vector<std::pair<int, int>> seen;
    for_bits(s.adj[v] & prev.mask, [&](Vertex w) { seen.emplace_back(prev.comp[w], prev.parity[w]); });
    for (auto [c, p] : seen)
      for (auto [c2, p2] : seen)
        if (c == c2 && p != p2) out |= bit(v);
  });
  return out;
}

void run_layers(const SemiMPG& s, BwState& st) {
  st.B = s.boundary_mask;
  st.trace.push_back({BwEvent::Kind::Layer, 0, -1, s.boundary_mask, BwColor::Black});
  VertexMask colored = s.boundary_mask;
  Layer prev = boundary_layer(s);
  for (int i = 1;; ++i) {
    const VertexMask next = next_layer(s, prev, s.interior & ~colored);
    if (!next) break;
    const BwColor c = i % 2 ? BwColor::White : BwColor::Black;
    (c == BwColor::White ? st.W : st.B) |= next;
    colored |= next;
    st.layers = i;
    st.trace.push_back({BwEvent::Kind::Layer, i, -1, next, c});
    prev = make_layer(s, next);
  }
  st.A = s.vertices() & ~colored;
  st.unique = st.A == 0;
  st.layered_proper = odd_cycle_free(s, st.B) && odd_cycle_free(s, st.W);
  if (st.A) st.trace.push_back({BwEvent::Kind::Grey, st.layers, -1, st.A, BwColor::Grey});
}

struct Coloring {
  VertexMask B = 0, W = 0;
};

class Search {
 public:
  explicit Search(const SemiMPG& s) : s_(s) {}

  bool bad(VertexMask x, Vertex v) const { return !odd_cycle_free(s_, x | bit(v)); }
  VertexMask grey(const Coloring& c) const { return s_.vertices() & ~(c.B | c.W); }

  // Colors every vertex that has a single safe color. With `strict`, a vertex
  // with no safe color is a conflict; otherwise it stays grey.
  bool cascade(Coloring& c, bool strict) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v : bits_of(grey(c))) {
        const bool bb = bad(c.B, v), bw = bad(c.W, v);
        if (bb && bw) {
          if (strict) return false;
          continue;
        }
        if (bb) c.W |= bit(v), changed = true;
        else if (bw) c.B |= bit(v), changed = true;
      }
    }
    return true;
  }

  std::optional<Coloring> attempt(Coloring c, Vertex v, BwColor color) const {
    VertexMask& x = color == BwColor::Black ? c.B : c.W;
    if (bad(x, v)) return std::nullopt;
    x |= bit(v);
    if (!cascade(c, true)) return std::nullopt;
    return c;
  }

  // Colors restricted vertices to a fixpoint; false on a vertex with no color left.
  bool propagate(Coloring& c, std::vector<BwEvent>& trace, int layer) const {
    for (bool progress = true; progress;) {
      progress = false;
      for (Vertex u : bits_of(grey(c))) {
        auto black = attempt(c, u, BwColor::Black);
        auto white = attempt(c, u, BwColor::White);
        if (!black && !white) {
          trace.push_back({BwEvent::Kind::Conflict, layer, u, 0, BwColor::Grey});
          return false;
        }
        if (black && white) continue;
        const Coloring next = black ? *black : *white;
        const VertexMask added = (next.B | next.W) & ~(c.B | c.W);
        trace.push_back({BwEvent::Kind::Restricted, layer, u, added, black ? BwColor::Black : BwColor::White});
        c = next;
        progress = true;
        break;
      }
    }
    return true;
  }

 private:
  const SemiMPG& s_;
};

void finish(const SemiMPG& s, BwState& st) {
  st.A = s.vertices() & ~(st.B | st.W);
  st.proper = is_proper(s, st);
}

}  // namespace

int SemiMPG::order() const { return std::popcount(vertices()); }

int SemiMPG::size() const {
  int twice = 0;
  for_bits(vertices(), [&](Vertex v) { twice += std::popcount(adj[v]); });
  return twice / 2;
}

std::pair<SemiMPG, SemiMPG> split_on_cycle(const PlaneTriangulation& g, const std::vector<Vertex>& cycle) {
  std::vector<VertexMask> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return split_generic(g.order(), g.rotations(), adj, cycle);
}

std::pair<SemiMPG, SemiMPG> split_on_cycle(const SemiMPG& s, const std::vector<Vertex>& cycle) {
  for (Vertex v : cycle)
    if (v < 0 || v >= s.host_order || !(s.interior & bit(v))) throw DomainError("cycle leaves the interior");
  return split_generic(s.host_order, s.rotation, s.adj, cycle);
}

VertexMask gamma(const SemiMPG& s) {
  VertexMask out = 0;
  for (Vertex c : s.boundary) out |= s.adj[c];
  return out & s.interior;
}

VertexMask gamma_star(const SemiMPG& s) {
  VertexMask even = 0, odd = 0;
  for (std::size_t i = 0; i < s.boundary.size(); ++i) (i % 2 ? odd : even) |= bit(s.boundary[i]);
  VertexMask out = 0;
  for_bits(s.interior, [&](Vertex v) {
    if ((s.adj[v] & even) && (s.adj[v] & odd)) out |= bit(v);
  });
  return out;
}

bool odd_cycle_free(const SemiMPG& s, VertexMask x) { return bipartite_in(s.adj, x); }

std::vector<Vertex> find_odd_cycle(const SemiMPG& s, VertexMask x) {
  std::vector<Vertex> cyc;
  bipartite_in(s.adj, x, &cyc);
  return cyc;
}

std::string to_string(BwEvent::Kind k) {
  switch (k) {
    case BwEvent::Kind::Layer: return "layer";
    case BwEvent::Kind::Grey: return "grey";
    case BwEvent::Kind::Fixed: return "fixed";
    case BwEvent::Kind::Petal: return "petal";
    case BwEvent::Kind::Restricted: return "restricted";
    case BwEvent::Kind::Sign: return "sign";
    case BwEvent::Kind::Backtrack: return "backtrack";
    case BwEvent::Kind::Conflict: return "conflict";
  }
  return "?";
}

BwColor BwState::color(Vertex v) const {
  if (B & bit(v)) return BwColor::Black;
  if (W & bit(v)) return BwColor::White;
  return BwColor::Grey;
}

BwState bw_operation(const SemiMPG& s) {
  BwState st;
  run_layers(s, st);
  if (st.A && st.layered_proper) {
    const Search search(s);
    const int step = st.layers + 3;
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v : bits_of(s.vertices() & ~(st.B | st.W))) {
        const bool bb = search.bad(st.B, v), bw = search.bad(st.W, v);
        if (bb && bw) {
          st.petal_flagged = true;
          st.B |= bit(v);
          st.trace.push_back({BwEvent::Kind::Petal, step + 1, v, bit(v), BwColor::Black});
          changed = true;
        } else if (bb || bw) {
          (bb ? st.W : st.B) |= bit(v);
          st.trace.push_back({BwEvent::Kind::Fixed, step, v, bit(v), bb ? BwColor::White : BwColor::Black});
          changed = true;
        }
      }
    }
  }
  finish(s, st);
  st.success = st.proper && st.A == 0;
  return st;
}

bool is_proper(const SemiMPG& s, const BwState& state) { return odd_cycle_free(s, state.B) && odd_cycle_free(s, state.W); }

BwState improved_bw_operation(const SemiMPG& s) {
  BwState st;
  run_layers(s, st);
  const int step = st.layers + 2;
  if (!st.layered_proper) {
    auto cyc = find_odd_cycle(s, st.B);
    if (cyc.empty()) cyc = find_odd_cycle(s, st.W);
    Vertex pick = cyc.back();
    for (Vertex v : cyc)
      if (s.interior & bit(v)) pick = v;
    st.B &= ~bit(pick);
    st.W &= ~bit(pick);
    st.trace.push_back({BwEvent::Kind::Conflict, step, pick, bit(pick), BwColor::Grey});
    finish(s, st);
    return st;
  }
  if (!st.A) {
    finish(s, st);
    st.success = st.proper;
    return st;
  }

  const Search search(s);
  Coloring cur{st.B, st.W};
  bool ok = search.propagate(cur, st.trace, step + 1);
  const Coloring root = cur;

  struct Sign {
    Vertex v;
    Coloring before;
    BwColor color;
  };
  std::vector<Sign> stack;
  for (;;) {
    if (ok) {
      const VertexMask grey = search.grey(cur);
      if (!grey) break;
      Vertex best = -1;
      int score = -1;
      for_bits(grey, [&](Vertex v) {
        const int sc = std::popcount(s.adj[v] & (cur.B | cur.W));
        if (sc > score) best = v, score = sc;
      });
      stack.push_back({best, cur, BwColor::Black});
      st.sign_vertices.push_back(best);
      st.trace.push_back({BwEvent::Kind::Sign, step + 4, best, bit(best), BwColor::Black});
      ok = !search.bad(cur.B, best);
      if (ok) {
        cur.B |= bit(best);
        ok = search.propagate(cur, st.trace, step + 5);
      }
      continue;
    }
    while (!stack.empty() && stack.back().color == BwColor::White) stack.pop_back();
    if (stack.empty()) break;
    Sign& top = stack.back();
    top.color = BwColor::White;
    cur = top.before;
    st.trace.push_back({BwEvent::Kind::Backtrack, step + 6, top.v, bit(top.v), BwColor::White});
    ok = !search.bad(cur.W, top.v);
    if (ok) {
      cur.W |= bit(top.v);
      ok = search.propagate(cur, st.trace, step + 5);
    }
  }
  if (!ok) cur = root;
  st.B = cur.B;
  st.W = cur.W;
  finish(s, st);
  st.success = ok && st.A == 0 && st.proper;
  return st;
}

TwoColorability is_2colorable_cycle(const PlaneTriangulation& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() % 2) throw DomainError("odd cycle");
  TwoColorability r;
  std::tie(r.side1, r.side2) = split_on_cycle(g, cycle);
  r.state1 = improved_bw_operation(r.side1);
  r.state2 = improved_bw_operation(r.side2);
  r.colorable = r.state1.success && r.state2.success;
  if (!r.colorable) return r;

  const int n = g.order();
  std::vector<VertexMask> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  const VertexMask black = r.state1.B | r.state2.B, white = r.state1.W | r.state2.W;
  std::vector<int> color(n, -1);
  auto paint = [&](VertexMask x, int base, Vertex first) {
    std::vector<Vertex> roots{first};
    for (Vertex v : bits_of(x)) roots.push_back(v);
    for (Vertex root : roots) {
      if (color[root] >= 0) continue;
      color[root] = base;
      std::vector<Vertex> queue{root};
      for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (Vertex w : bits_of(adj[queue[qi]] & x))
          if (color[w] < 0) color[w] = color[queue[qi]] ^ 1, queue.push_back(w);
    }
  };
  paint(black, 0, cycle.front());
  if (white) paint(white, 2, std::countr_zero(white));
  if (is_proper_coloring(g, color)) r.coloring = color;
  return r;
}

bool oracle_2colorable(const PartitionSet& partitions, VertexMask cycle) {
  auto fits = [&](const ColorPartition& p) {
    const auto cls = p.classes();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!(cycle & ~(cls[i] | cls[j]))) return true;
    return false;
  };
  return std::any_of(partitions.four.begin(), partitions.four.end(), fits) ||
         std::any_of(partitions.three.begin(), partitions.three.end(), fits);
}

bool oracle_2colorable(const PlaneTriangulation& g, const std::vector<Vertex>& cycle) {
  return oracle_2colorable(enumerate_all_partitions(g), mask_of(cycle));
}

namespace {

struct PetalGraph {
  std::vector<std::pair<Vertex, Vertex>> black, white, pairs;
  VertexMask vertices = 0;
  std::vector<VertexMask> adj;
  bool has_cycle = false, has_odd_cycle = false;
};

PetalGraph petal_graph(const SemiMPG& s, VertexMask B, VertexMask W) {
  PetalGraph pg;
  pg.adj.assign(s.host_order, 0);
  const VertexMask A = s.vertices() & ~(B | W);
  auto conflict = [&](VertexMask x, Vertex u, Vertex v) {
    return odd_cycle_free(s, x | bit(u)) && odd_cycle_free(s, x | bit(v)) && !odd_cycle_free(s, x | bit(u) | bit(v));
  };
  const auto grey = bits_of(A);
  int edges = 0;
  for (std::size_t i = 0; i < grey.size(); ++i)
    for (std::size_t j = i + 1; j < grey.size(); ++j) {
      const Vertex u = grey[i], v = grey[j];
      const bool b = conflict(B, u, v), w = conflict(W, u, v);
      if (b) pg.black.emplace_back(u, v);
      if (w) pg.white.emplace_back(u, v);
      if (b || w) {
        pg.pairs.emplace_back(u, v);
        pg.adj[u] |= bit(v);
        pg.adj[v] |= bit(u);
        pg.vertices |= bit(u) | bit(v);
        ++edges;
      }
    }
  int comps = 0;
  VertexMask seen = 0;
  for_bits(pg.vertices, [&](Vertex r) {
    if (seen & bit(r)) return;
    ++comps;
    VertexMask frontier = bit(r);
    while (frontier) {
      const Vertex v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (seen & bit(v)) continue;
      seen |= bit(v);
      frontier |= pg.adj[v] & ~seen;
    }
  });
  pg.has_cycle = edges > std::popcount(pg.vertices) - comps;
  pg.has_odd_cycle = !bipartite_in(pg.adj, pg.vertices);
  return pg;
}

void cliques(const std::vector<VertexMask>& adj, VertexMask r, VertexMask p, VertexMask x, std::vector<VertexMask>& out) {
  if (!p && !x) {
    if (std::popcount(r) >= 2) out.push_back(r);
    return;
  }
  for (Vertex v : bits_of(p)) {
    cliques(adj, r | bit(v), p & adj[v], x & adj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

// Edge-disjoint odd cycles by exhaustion over odd cycles of s[d].
bool two_disjoint_odd_cycles(const SemiMPG& s, VertexMask d) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<int>> index(s.host_order, std::vector<int>(s.host_order, -1));
  for_bits(d, [&](Vertex u) {
    for_bits(s.adj[u] & d, [&](Vertex w) {
      if (u < w) {
        index[u][w] = index[w][u] = static_cast<int>(edges.size());
        edges.emplace_back(u, w);
      }
    });
  });
  if (edges.size() > 60) return false;
  std::vector<std::uint64_t> odd;
  std::vector<Vertex> path;
  std::function<void(Vertex, Vertex, VertexMask, std::uint64_t)> walk = [&](Vertex start, Vertex v, VertexMask used, std::uint64_t em) {
    for_bits(s.adj[v] & d, [&](Vertex w) {
      if (w == start && path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back())
        odd.push_back(em | (std::uint64_t{1} << index[v][w]));
      if (w <= start || (used & bit(w))) return;
      path.push_back(w);
      walk(start, w, used | bit(w), em | (std::uint64_t{1} << index[v][w]));
      path.pop_back();
    });
  };
  for_bits(d, [&](Vertex v) {
    path = {v};
    walk(v, v, bit(v), 0);
  });
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j)
      if (!(odd[i] & odd[j])) return true;
  return false;
}

}  // namespace

PetalDiagnostics petal_diagnostics(const SemiMPG& s, const BwState& state) {
  PetalDiagnostics d;
  const Search search(s);
  const VertexMask B = state.B, W = state.W, A = s.vertices() & ~(B | W);
  const PetalGraph pg = petal_graph(s, B, W);
  d.black_conflicts = pg.black;
  d.white_conflicts = pg.white;
  d.petal_pairs = pg.pairs;
  std::set_intersection(pg.black.begin(), pg.black.end(), pg.white.begin(), pg.white.end(), std::back_inserter(d.forced_pairs));
  for (auto [u, v] : pg.pairs)
    if (s.adj[u] & bit(v)) d.petal_edges.emplace_back(u, v);
  d.petal_graph_vertices = pg.vertices;
  d.petal_graph_has_cycle = pg.has_cycle;
  d.petal_graph_has_odd_cycle = pg.has_odd_cycle;
  cliques(pg.adj, 0, pg.vertices, 0, d.petal_sets);
  std::sort(d.petal_sets.begin(), d.petal_sets.end());
  for (VertexMask c : d.petal_sets) d.max_petal_set = std::max(d.max_petal_set, std::popcount(c));

  if (pg.vertices && !pg.has_odd_cycle) {
    VertexMask X = 0, Y = 0, seen = 0;
    for_bits(pg.vertices, [&](Vertex r) {
      if (seen & bit(r)) return;
      std::vector<std::pair<Vertex, int>> queue{{r, 0}};
      seen |= bit(r);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [v, side] = queue[qi];
        (side ? Y : X) |= bit(v);
        for_bits(pg.adj[v] & ~seen, [&](Vertex w) {
          seen |= bit(w);
          queue.emplace_back(w, side ^ 1);
        });
      }
    });
    auto odd = [&](VertexMask m) { return !odd_cycle_free(s, m); };
    const bool c1 = (odd(B | X) && odd(B | Y)) || (odd(W | X) && odd(W | Y));
    const bool c2 = (odd(B | X) && odd(W | X)) || (odd(B | Y) && odd(W | Y));
    d.exclusive_petal_graph = c1 && c2;
  }

  auto fixed_set = [&](Vertex u, BwColor c) {
    Coloring col{B, W};
    (c == BwColor::Black ? col.B : col.W) |= bit(u);
    search.cascade(col, false);
    return std::pair{col.B & ~B, col.W & ~W};
  };

  auto odd_in = [&](VertexMask x, Vertex a, Vertex b) { return !odd_cycle_free(s, x | bit(a) | bit(b)); };
  std::vector<Vertex> path;
  constexpr std::size_t kMaxPaths = 256;
  std::function<void()> extend = [&]() {
    if (d.black_white_paths.size() >= kMaxPaths) return;
    if (path.size() >= 3) d.black_white_paths.push_back(path);
    const Vertex last = path.back();
    for_bits(s.adj[last] & A, [&](Vertex w) {
      if (std::find(path.begin(), path.end(), w) != path.end()) return;
      if (path.size() >= 2) {
        const Vertex a = path[path.size() - 2];
        if (!odd_in(B, a, last) || !odd_in(W, last, w)) return;
      }
      path.push_back(w);
      extend();
      path.pop_back();
    });
  };
  for_bits(A, [&](Vertex v) {
    path = {v};
    extend();
  });
  for (const auto& p : d.black_white_paths) {
    bool exclusive = false;
    for (std::size_t i = 1; i + 1 < p.size() && !exclusive; ++i) {
      const auto [bb, bw] = fixed_set(p[i], BwColor::Black);
      const auto [wb, ww] = fixed_set(p[i], BwColor::White);
      auto odd = [&](VertexMask m) { return !odd_cycle_free(s, m); };
      const bool c1 = (odd(bb) || odd(bw)) && (odd(wb) || odd(ww));
      const bool c2 = two_disjoint_odd_cycles(s, bb) || two_disjoint_odd_cycles(s, bw);
      const bool c3 = two_disjoint_odd_cycles(s, wb) || two_disjoint_odd_cycles(s, ww);
      exclusive = c1 || c2 || c3;
    }
    d.exclusive_paths.push_back(exclusive);
  }

  for (Vertex u : bits_of(A)) {
    const auto [wb, ww] = fixed_set(u, BwColor::White);
    const auto [bb, bw] = fixed_set(u, BwColor::Black);
    const VertexMask B1 = B | wb, W1 = W | ww, B2 = B | bb, W2 = W | bw;
    const bool bad1 = !odd_cycle_free(s, B1) || !odd_cycle_free(s, W1);
    const bool bad2 = !odd_cycle_free(s, B2) || !odd_cycle_free(s, W2);
    const PetalGraph pg1 = petal_graph(s, B1, W1), pg2 = petal_graph(s, B2, W2);
    GeneralPetal gp;
    gp.vertex = u;
    gp.cond[0] = bad1 && bad2;
    gp.cond[1] = pg1.has_odd_cycle && pg2.has_odd_cycle;
    gp.cond[2] = bad1 && pg2.has_cycle;
    gp.cond[3] = bad2 && pg1.has_cycle;
    if (gp.any()) d.general_petal.push_back(gp);
  }
  d.petal_syndrome = !d.general_petal.empty();
  return d;
}

std::vector<std::vector<Vertex>> enumerate_cycles(const PlaneTriangulation& g, int min_len, int max_len) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::function<void(Vertex, VertexMask)> walk = [&](Vertex start, VertexMask used) {
    const Vertex v = path.back();
    const int len = static_cast<int>(path.size());
    for_bits(g.neighbors(v), [&](Vertex w) {
      if (w == start) {
        if (len >= min_len && len >= 3 && path[1] < path.back()) out.push_back(path);
        return;
      }
      if (w < start || (used & bit(w))) return;
      if (max_len > 0 && len >= max_len) return;
      path.push_back(w);
      walk(start, used | bit(w));
      path.pop_back();
    });
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    walk(s, bit(s));
  }
  return out;
}

std::optional<std::vector<Vertex>> neighbor_set_cycle(const PlaneTriangulation& g, VertexMask h) {
  VertexMask nb = 0;
  for_bits(h, [&](Vertex v) { nb |= g.neighbors(v); });
  nb &= ~h;
  if (std::popcount(nb) < 3) return std::nullopt;
  return as_cycle(induced_subgraph(g, nb));
}

int boundary_length(const PlaneTriangulation& g, VertexMask h) {
  if (std::popcount(h) <= 1) return 0;
  Vertex x = -1, y = -1;
  for_bits(h, [&](Vertex v) {
    if (x < 0 && (g.neighbors(v) & ~h)) x = v, y = std::countr_zero(g.neighbors(v) & ~h);
  });
  if (x < 0) throw DomainError("subgraph covers the graph");
  Vertex a = y;
  do a = g.prev(x, a);
  while (!(h & bit(a)));
  int len = 0;
  Vertex p = a, q = x;
  do {
    Vertex w = p;
    do w = g.next(q, w);
    while (!(h & bit(w)));
    p = q;
    q = w;
    ++len;
  } while (!(p == a && q == x));
  return len;
}

int neighbor_cycle_length(const PlaneTriangulation& g, VertexMask h) {
  if (!h || !is_connected(induced_subgraph(g, h))) throw DomainError("subgraph is not connected");
  if (!neighbor_set_cycle(g, h)) throw DomainError("neighbor set does not induce a cycle");
  int sum = 0;
  for_bits(h, [&](Vertex v) { sum += g.degree(v) - std::popcount(g.neighbors(v) & h); });
  return sum - boundary_length(g, h);
}

CycleCensus even_cycle_census(const PlaneTriangulation& g, int max_len) {
  CycleCensus c;
  if (max_len < 0) max_len = g.order() <= 10 ? 0 : 12;
  c.max_len = max_len;
  for (const auto& cyc : enumerate_cycles(g, 4, max_len)) {
    const int len = static_cast<int>(cyc.size());
    const bool basic = static_cast<int>(induced_subgraph(g, mask_of(cyc)).edges.size()) == len;
    if (basic) {
      ++c.basic_cycles, ++c.basic_by_length[len];
      if (len % 2 == 0) ++c.even_basic;
    } else {
      ++c.chord_cycles, ++c.chord_by_length[len];
      if (len % 2 == 0) ++c.even_chord;
    }
    split_on_cycle(g, cyc);
    c.semi_mpgs += 2;
  }
  c.inequality_holds = 2 * c.basic_cycles <= c.semi_mpgs - 2 * c.chord_cycles;
  for (Vertex v = 0; v < g.order(); ++v)
    if (neighbor_cycle(g, v).kind == NeighborCycleKind::Basic) {
      ++c.vertex_neighbor_basic;
      if (g.degree(v) % 2) ++c.vertex_neighbor_odd;
    }
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.rotation(u)) {
      if (v < u) continue;
      auto cyc = neighbor_set_cycle(g, bit(u) | bit(v));
      if (!cyc) continue;
      ++c.edge_neighbor_cycles;
      if (cyc->size() % 2 == 0) ++c.edge_neighbor_even;
    }
  return c;
}

std::string to_string(ClosedKind k) {
  switch (k) {
    case ClosedKind::CycleCycle: return "cycle-cycle";
    case ClosedKind::CycleTree: return "cycle-tree";
    case ClosedKind::CycleFence: return "cycle-fence";
    case ClosedKind::ClosedOther: return "closed-other";
    case ClosedKind::NotClosed: return "not-closed";
  }
  return "?";
}

ClosedReport classify_closed(const SemiMPG& s) {
  if (s.boundary.size() % 2) throw DomainError("odd boundary");
  ClosedReport r;
  r.gamma_star = gamma_star(s);
  r.direct = improved_bw_operation(s).success;
  if (r.gamma_star != gamma(s)) return r;
  const Subgraph h = subgraph_of(s, r.gamma_star);
  if (!r.gamma_star || is_acyclic(h)) {
    r.kind = ClosedKind::CycleTree;
    return r;
  }
  if (auto cyc = as_cycle(h)) {
    r.kind = ClosedKind::CycleCycle;
    r.inner_cycle = *cyc;
    if (cyc->size() % 2 || cyc->size() < 4) {
      r.reduced = false;
      return r;
    }
    auto [a, b] = split_on_cycle(s, *cyc);
    const SemiMPG& far = (a.vertices() & s.boundary_mask) ? b : a;
    r.reduced = improved_bw_operation(far).success;
    return r;
  }
  r.kind = is_bipartite(h) ? ClosedKind::CycleFence : ClosedKind::ClosedOther;
  return r;
}

std::string to_dot(const SemiMPG& s, const BwState& state) {
  std::string out = "graph G {\n  node [shape=circle, style=filled];\n";
  for (Vertex v : bits_of(s.vertices())) {
    const BwColor c = state.color(v);
    const char* attrs = c == BwColor::Black   ? "fillcolor=black, fontcolor=white"
                        : c == BwColor::White ? "fillcolor=white"
                                              : "fillcolor=grey";
    out += "  " + std::to_string(v) + " [" + attrs + "];\n";
  }
  for (Vertex u : bits_of(s.vertices()))
    for (Vertex w : bits_of(s.adj[u]))
      if (u < w) out += "  " + std::to_string(u) + " -- " + std::to_string(w) + ";\n";
  return out + "}\n";
}

std::string to_json(const BwState& state) {
  auto color_name = [](BwColor c) { return c == BwColor::Black ? "black" : c == BwColor::White ? "white" : "grey"; };
  nlohmann::json j;
  j["B"] = bits_of(state.B);
  j["W"] = bits_of(state.W);
  j["A"] = bits_of(state.A);
  j["layers"] = state.layers;
  j["unique"] = state.unique;
  j["proper"] = state.proper;
  j["success"] = state.success;
  j["petal_flagged"] = state.petal_flagged;
  j["sign_vertices"] = state.sign_vertices;
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& e : state.trace) {
    nlohmann::json ev{{"kind", to_string(e.kind)}, {"step", e.step}, {"vertices", bits_of(e.vertices)}, {"color", color_name(e.color)}};
    if (e.vertex >= 0) ev["vertex"] = e.vertex;
    trace.push_back(ev);
  }
  j["trace"] = trace;
  return j.dump();
}

}  // namespace triangulata
