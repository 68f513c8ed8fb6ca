#include "triangulata/generator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <set>
#include <thread>
#include <unordered_set>

#include "dartgraph.hpp"

namespace triangulata {

using detail::DartGraph;

CatalogEntry catalog_entry(const PlaneTriangulation& g) {
  CatalogEntry e;
  e.graph = canonical_relabel(g);
  e.code = canonical_code(e.graph);
  e.degree_sequence = degree_sequence(e.graph);
  return e;
}

const CatalogEntry* Catalog::find(const CanonicalCode& c) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), c, [](const CatalogEntry& e, const CanonicalCode& k) { return e.code < k; });
  return it != entries.end() && it->code == c ? &*it : nullptr;
}

namespace {

CatalogEntry make_entry(const PlaneTriangulation& g) { return catalog_entry(g); }

struct Candidate {
  CanonicalCode code;
  PlaneTriangulation graph;
  std::vector<WheelOpRecord> chain;
};

WheelOpRecord rec(OpKind k, std::vector<Vertex> object) {
  WheelOpRecord r;
  r.kind = k;
  r.object = std::move(object);
  return r;
}

// One pre-step: extend3 in the face of a dart or extend2 along a dart.
struct PreStep {
  bool is_face;
  int dart;
};

void apply_prestep(DartGraph& dg, const PreStep& p, std::vector<WheelOpRecord>& chain) {
  const Vertex a = dg.origin(p.dart), b = dg.head(p.dart);
  if (p.is_face) {
    const Vertex c = dg.head(dg.face_next(p.dart));
    dg.extend3(p.dart);
    chain.push_back(rec(OpKind::Extend3, {a, b, c}));
  } else {
    dg.extend2(p.dart);
    chain.push_back(rec(OpKind::Extend2, {a, b}));
  }
}

// Each face once (by its smallest dart) and each edge once.
std::vector<PreStep> presteps(const DartGraph& dg) {
  std::vector<PreStep> out;
  for (Vertex v = 0; v < dg.vertex_slots(); ++v)
    for (int d : dg.darts(v)) {
      auto f = dg.face(d);
      if (*std::min_element(f.begin(), f.end()) == d) out.push_back({true, d});
      if ((d & 1) == 0) out.push_back({false, d});
    }
  return out;
}

int deficit(const DartGraph& dg) {
  int s = 0;
  for (Vertex v = 0; v < dg.vertex_slots(); ++v)
    if (dg.alive(v)) s += std::max(0, 4 - dg.degree(v));
  return s;
}

int low_count(const DartGraph& dg) {
  int s = 0;
  for (Vertex v = 0; v < dg.vertex_slots(); ++v)
    if (dg.alive(v) && dg.degree(v) < 4) ++s;
  return s;
}

// Rooted-map code minimized over all roots and both orientations; handles
// parallel edges by recording, for every dart, the head label and the
// position of the reverse dart at the head.
std::vector<int> map_code(const DartGraph& dg) {
  std::vector<int> best;
  const int slots = dg.vertex_slots();
  std::vector<int> label(slots), ref(slots), code;
  std::vector<Vertex> order;
  for (Vertex s = 0; s < slots; ++s) {
    if (!dg.alive(s)) continue;
    for (int root : dg.darts(s))
      for (int mirror = 0; mirror < 2; ++mirror) {
        std::fill(label.begin(), label.end(), -1);
        order.assign(1, s);
        label[s] = 0;
        ref[s] = root;
        code.clear();
        bool worse = false;
        auto step = [&](int d) { return mirror ? dg.pred(d) : dg.succ(d); };
        for (std::size_t i = 0; i < order.size() && !worse; ++i) {
          const Vertex v = order[i];
          int e = ref[v];
          for (int k = 0; k < dg.degree(v); ++k, e = step(e)) {
            const Vertex h = dg.head(e);
            int pos = 0;
            if (label[h] < 0) {
              label[h] = static_cast<int>(order.size());
              order.push_back(h);
              ref[h] = e ^ 1;
            } else {
              for (int f = ref[h]; f != (e ^ 1); f = step(f)) ++pos;
            }
            code.push_back(label[h]);
            code.push_back(pos);
          }
          code.push_back(-1);
          if (!best.empty() && std::lexicographical_compare(best.begin(), best.begin() + std::min(best.size(), code.size()), code.begin(), code.end()) &&
              !std::equal(code.begin(), code.end(), best.begin()))
            worse = true;
        }
        if (!worse && (best.empty() || code < best)) best = code;
      }
  }
  return best;
}

struct State {
  DartGraph graph;
  std::vector<WheelOpRecord> chain;
  int root_order;
  CanonicalCode root_code;
};

// Finishes a state with every extend4/extend5 whose gaining roles cover all
// vertices of degree below 4; results of minimum degree 4 go to `emit`.
void main_steps(const State& st, const std::function<void(Candidate&&)>& emit) {
  const DartGraph& base = st.graph;
  std::vector<Vertex> low;
  for (Vertex v = 0; v < base.vertex_slots(); ++v)
    if (base.alive(v) && base.degree(v) < 4) low.push_back(v);
  if (low.size() > 3) return;
  auto need = [&](Vertex w) { return 4 - base.degree(w); };
  auto finish = [&](DartGraph& dg, WheelOpRecord r) {
    PlaneTriangulation t;
    try {
      t = dg.to_triangulation();
    } catch (const StructuralError&) {
      return;
    }
    if (t.min_degree() < 4) return;
    Candidate c;
    c.code = canonical_code(t);
    c.graph = std::move(t);
    c.chain = st.chain;
    c.chain.push_back(std::move(r));
    emit(std::move(c));
  };
  for (Vertex u = 0; u < base.vertex_slots(); ++u) {
    if (!base.alive(u) || base.degree(u) < 4) continue;
    const auto& ds = base.darts(u);
    for (int dx : ds)
      for (int dy : ds) {
        if (dx == dy) continue;
        const Vertex x = base.head(dx), y = base.head(dy);
        if (x == y) continue;
        bool ok = true;
        for (Vertex w : low) ok = ok && (w == x || w == y) && need(w) <= 2;
        if (ok) {
          DartGraph dg = base;
          dg.extend4(dx, dy);
          finish(dg, rec(OpKind::Extend4, {x, u, y}));
        }
        // Funnel with top x and bottoms y, head(succ(dy)).
        const int db2 = base.succ(dy);
        const Vertex b2 = base.head(db2);
        if (dx == db2 || x == b2) continue;
        ok = true;
        for (Vertex w : low) ok = ok && (w == x ? need(w) <= 2 : (w == y || w == b2) && need(w) <= 1);
        if (ok) {
          DartGraph dg = base;
          dg.extend5(dx, dy);
          finish(dg, rec(OpKind::Extend5, {x, u, y, b2}));
        }
      }
  }
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < std::min<int>(jobs, static_cast<int>(count)); ++j)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) body(i);
    });
  for (auto& t : pool) t.join();
}

Catalog seeded(int n) {
  Catalog c;
  c.n = n;
  if (n == 6) c.entries.push_back(make_entry(make_octahedron()));
  if (n == 7) c.entries.push_back(make_entry(make_double_wheel(5)));
  if (n == 8) {
    // The snub disphenoid has no min-degree-4 ancestor.
    c.entries.push_back(make_entry(make_double_wheel(6)));
    c.entries.push_back(make_entry(graph6_decode("GnM]J[")));
    std::sort(c.entries.begin(), c.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
  }
  return c;
}

}  // namespace

Catalog generate_delta4(int n, const std::map<int, const Catalog*>& lower, int jobs) {
  if (n < 6) throw DomainError("min-degree-4 triangulations need at least 6 vertices");
  if (n > kMaxOrder) throw DomainError("order exceeds the supported maximum");
  if (n <= 8) return seeded(n);

  // Intermediate states of order m, keyed by map code: catalog roots of order
  // m plus every pre-step applied to the states of order m - 1. A main step
  // removes at most 4 from the degree deficit and a pre-step at most 2 net.
  std::map<std::vector<int>, State> states;
  for (int m = 6; m <= n - 2; ++m) {
    auto it = lower.find(m);
    if (it == lower.end() || !it->second) throw DependencyError("catalog of order " + std::to_string(m) + " is required");
    const int budget = 4 + 2 * (n - 2 - m);

    std::vector<const State*> prev;
    for (const auto& [k, st] : states) prev.push_back(&st);
    std::vector<std::vector<std::pair<std::vector<int>, State>>> grown(prev.size());
    parallel_for(prev.size(), jobs, [&](std::size_t i) {
      for (const auto& p : presteps(prev[i]->graph)) {
        State st{prev[i]->graph, prev[i]->chain, prev[i]->root_order, prev[i]->root_code};
        apply_prestep(st.graph, p, st.chain);
        if (deficit(st.graph) > budget || low_count(st.graph) > budget) continue;
        auto key = map_code(st.graph);
        grown[i].emplace_back(std::move(key), std::move(st));
      }
    });

    std::map<std::vector<int>, State> next;
    for (const auto& e : it->second->entries) {
      DartGraph dg(e.graph);
      auto key = map_code(dg);
      next.emplace(std::move(key), State{std::move(dg), {}, m, e.code});
    }
    for (auto& g : grown)
      for (auto& [key, st] : g) next.emplace(std::move(key), std::move(st));
    states = std::move(next);
  }

  std::vector<const State*> finals;
  for (const auto& [k, st] : states) finals.push_back(&st);
  std::vector<std::vector<Candidate>> found(finals.size());
  parallel_for(finals.size(), jobs, [&](std::size_t i) {
    std::set<CanonicalCode> seen;
    main_steps(*finals[i], [&](Candidate&& c) {
      if (seen.insert(c.code).second) found[i].push_back(std::move(c));
    });
  });

  std::map<CanonicalCode, CatalogEntry> merged;
  for (std::size_t i = 0; i < finals.size(); ++i)
    for (auto& c : found[i]) {
      if (merged.count(c.code)) continue;
      CatalogEntry e = make_entry(c.graph);
      e.provenance = std::move(c.chain);
      e.parent_order = finals[i]->root_order;
      e.parent_code = finals[i]->root_code;
      merged.emplace(e.code, std::move(e));
    }
  Catalog out;
  out.n = n;
  for (auto& [code, e] : merged) out.entries.push_back(std::move(e));
  return out;
}

const Catalog& CatalogStore::get(int n) {
  if (auto it = catalogs_.find(n); it != catalogs_.end()) return it->second;
  std::map<int, const Catalog*> lower;
  if (n > 8)
    for (int m = 6; m <= n - 2; ++m) lower[m] = &get(m);
  Catalog c = n < 6 ? Catalog{n, {}} : generate_delta4(n, lower, jobs_);
  return catalogs_.emplace(n, std::move(c)).first->second;
}

void CatalogStore::put(Catalog c) { catalogs_[c.n] = std::move(c); }

Catalog generate_delta4(int n, int jobs) {
  CatalogStore store(jobs);
  return store.get(n);
}

std::vector<Related> parents(const PlaneTriangulation& g) {
  std::vector<Related> out;
  std::set<CanonicalCode> seen;
  for (auto& cc : all_compound_contractions(g)) {
    if (cc.result.min_degree() < 4) continue;
    auto code = canonical_code(cc.result);
    if (!seen.insert(code).second) continue;
    out.push_back({cc.result, code, cc.steps.front(), cc.steps});
  }
  std::sort(out.begin(), out.end(), [](const Related& a, const Related& b) { return a.code < b.code; });
  return out;
}

std::vector<Related> children(const PlaneTriangulation& g, int max_presteps) {
  std::vector<Related> out;
  std::set<CanonicalCode> seen;
  std::vector<State> level{State{DartGraph(g), {}, g.order(), canonical_code(g)}};
  for (int k = 0; k <= max_presteps; ++k) {
    const int budget = 4 + 2 * (max_presteps - k);
    std::map<std::vector<int>, State> next;
    for (const auto& st : level) {
      int created = 0;
      for (const auto& r : st.chain) created += r.kind == OpKind::Extend2 ? 2 : 1;
      if (low_count(st.graph) == k && deficit(st.graph) == created)
        main_steps(st, [&](Candidate&& c) {
          if (!seen.insert(c.code).second) return;
          Related r{c.graph, c.code, c.chain.back(), c.chain};
          r.via.result_code = c.code;
          out.push_back(std::move(r));
        });
      if (k == max_presteps) continue;
      for (const auto& p : presteps(st.graph)) {
        State s2 = st;
        apply_prestep(s2.graph, p, s2.chain);
        if (deficit(s2.graph) > budget) continue;
        next.emplace(map_code(s2.graph), std::move(s2));
      }
    }
    level.clear();
    for (auto& [key, st] : next) level.push_back(std::move(st));
  }
  std::sort(out.begin(), out.end(), [](const Related& a, const Related& b) {
    return a.graph.order() != b.graph.order() ? a.graph.order() < b.graph.order() : a.code < b.code;
  });
  return out;
}

ClosureReport verify_closure(const Catalog& c, const std::map<int, const Catalog*>& lower) {
  ClosureReport rep;
  auto known = [&](const Related& p) {
    auto it = lower.find(p.graph.order());
    return it != lower.end() && it->second && it->second->find(p.code);
  };
  for (const auto& e : c.entries) {
    auto ps = parents(e.graph);
    if (c.n > 8 && std::none_of(ps.begin(), ps.end(), known)) rep.orphans.push_back(e.code);
  }
  if (auto it = lower.find(c.n - 2); it != lower.end() && it->second)
    for (const auto& e : it->second->entries)
      for (const auto& ch : children(e.graph, 0))
        if (!c.find(ch.code)) rep.missing_children.push_back(ch.code);
  std::sort(rep.missing_children.begin(), rep.missing_children.end());
  rep.missing_children.erase(std::unique(rep.missing_children.begin(), rep.missing_children.end()), rep.missing_children.end());
  rep.ok = rep.orphans.empty() && rep.missing_children.empty();
  return rep;
}

Catalog generate_recursive(int n) {
  if (n < 4) throw DomainError("recursive triangulations start at order 4");
  std::map<CanonicalCode, PlaneTriangulation> level{{canonical_code(make_k4()), make_k4()}};
  for (int k = 5; k <= n; ++k) {
    std::map<CanonicalCode, PlaneTriangulation> next;
    for (const auto& [code, g] : level)
      for (const auto& f : face_triples(g)) {
        auto h = extend3(g, f);
        next.emplace(canonical_code(h), std::move(h));
      }
    level = std::move(next);
  }
  Catalog c;
  c.n = n;
  for (const auto& [code, g] : level) c.entries.push_back(make_entry(g));
  return c;
}

namespace {

bool recursive_memo(const PlaneTriangulation& g, std::map<CanonicalCode, bool>& memo) {
  if (g.order() == 4) return true;
  if (g.order() < 4) return false;
  auto code = canonical_code(g);
  if (auto it = memo.find(code); it != memo.end()) return it->second;
  bool result = false;
  for (Vertex v = 0; v < g.order() && !result; ++v)
    if (g.degree(v) == 3) result = recursive_memo(contract3(g, v), memo);
  memo[code] = result;
  return result;
}

std::vector<Vertex> degree3_vertices(const PlaneTriangulation& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3) out.push_back(v);
  return out;
}

int color_index(char c) {
  switch (c) {
    case 'y': return 0;
    case 'g': return 1;
    case 'b': return 2;
    case 'r': return 3;
  }
  throw DomainError(std::string("color symbol must be one of y, g, b, r, got ") + c);
}

}  // namespace

bool is_recursive(const PlaneTriangulation& g) {
  std::map<CanonicalCode, bool> memo;
  return recursive_memo(g, memo);
}

bool is_22fwf(const PlaneTriangulation& g) {
  auto d3 = degree3_vertices(g);
  if (d3.size() != 2 || g.adjacent(d3[0], d3[1])) return false;
  if ((g.neighbors(d3[0]) & g.neighbors(d3[1])) == 0) return false;
  return is_recursive(g);
}

std::string to_string(FwfType t) { return t == FwfType::Adjacent ? "adjacent" : "nonadjacent"; }

FwfType classify_22fwf(const PlaneTriangulation& g) {
  if (!is_22fwf(g)) throw DomainError("graph is not a (2,2)-FWF graph");
  auto d3 = degree3_vertices(g);
  return std::popcount(g.neighbors(d3[0]) & g.neighbors(d3[1])) >= 2 ? FwfType::Adjacent : FwfType::Nonadjacent;
}

PlaneTriangulation color_sequence_decode(std::string_view s) {
  static constexpr std::string_view kPrefix = "ygbryb";
  if (s.size() < 4) throw DomainError("color sequence needs at least 4 symbols");
  for (std::size_t i = 0; i < s.size(); ++i) {
    color_index(s[i]);
    if (i < kPrefix.size() && s[i] != kPrefix[i]) throw DomainError("color sequence must start with ygbryb");
  }
  if (s.size() >= 7 && s[6] != 'y' && s[6] != 'g') throw DomainError("seventh color must be y or g");
  PlaneTriangulation g = make_k4();
  std::vector<int> color{0, 1, 2, 3};
  constexpr Vertex center = 3;
  for (std::size_t k = 4; k < s.size(); ++k) {
    const int c = color_index(s[k]);
    const Vertex prev = static_cast<Vertex>(k - 1);
    std::optional<FaceTriple> pick;
    for (const auto& f : face_triples(g)) {
      const std::array<Vertex, 3> vs{f.a, f.b, f.c};
      auto has = [&](Vertex x) { return std::find(vs.begin(), vs.end(), x) != vs.end(); };
      if (!has(center) || !has(prev)) continue;
      if (color[f.a] == c || color[f.b] == c || color[f.c] == c) continue;
      if (pick) throw DomainError("color sequence is ambiguous at position " + std::to_string(k + 1));
      pick = f;
    }
    if (!pick) throw DomainError("no face consistent with color at position " + std::to_string(k + 1));
    g = extend3(g, *pick);
    color.push_back(c);
  }
  return g;
}

std::vector<std::string> all_color_sequences(int n) {
  if (n < 4) return {};
  if (n <= 6) return {std::string("ygbryb").substr(0, n)};
  std::vector<std::string> level{"ygbryb"};
  for (int k = 7; k <= n; ++k) {
    std::vector<std::string> next;
    for (const auto& s : level)
      for (char c : std::string("ygb"))
        if (c != s.back()) next.push_back(s + c);
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::string color_sequence_encode(const PlaneTriangulation& g) {
  const auto code = canonical_code(g);
  for (const auto& s : all_color_sequences(g.order()))
    if (canonical_code(color_sequence_decode(s)) == code) return s;
  throw DomainError("graph has no color sequence under the region agreement");
}

Catalog generate_22fwf(int n) {
  if (n < 5) throw DomainError("(2,2)-FWF graphs start at order 5");
  std::map<CanonicalCode, PlaneTriangulation> found;
  for (const auto& s : all_color_sequences(n)) {
    auto g = color_sequence_decode(s);
    found.emplace(canonical_code(g), std::move(g));
  }
  Catalog c;
  c.n = n;
  for (const auto& [code, g] : found) c.entries.push_back(make_entry(g));
  return c;
}

StarExtension star_extend(const PlaneTriangulation& g, const Path2& p) {
  auto parts = enumerate_all_partitions(g);
  if (parts.total() == 0) throw StructuralError("triangulation without a 4-coloring");
  const ColorPartition& f = parts.four.empty() ? parts.three.front() : parts.four.front();
  auto r = extend_under_coloring(g, f, {p.x, p.u, p.y}, 4);
  return {std::move(r.graph), std::move(r.partition)};
}

Path2 fwf_center_path(const PlaneTriangulation& g) {
  auto d3 = degree3_vertices(g);
  if (d3.size() != 2) throw DomainError("expected exactly two vertices of degree 3");
  const VertexMask common = g.neighbors(d3[0]) & g.neighbors(d3[1]);
  if (!common) throw DomainError("degree-3 vertices are not at distance 2");
  Vertex best = -1;
  for (Vertex v = 0; v < g.order(); ++v)
    if ((common & bit(v)) && (best < 0 || g.degree(v) > g.degree(best))) best = v;
  return {d3[0], best, d3[1]};
}

}  // namespace triangulata
