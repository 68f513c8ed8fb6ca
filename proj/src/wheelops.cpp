#include "triangulata/wheelops.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "dartgraph.hpp"

namespace triangulata {

using detail::DartGraph;

namespace {

constexpr const char* kOpNames[] = {"extend2", "contract2", "extend3", "contract3", "extend4", "contract4", "extend5", "contract5"};

int face_dart(const DartGraph& dg, Vertex a, Vertex b, Vertex c) {
  for (auto [x, y, z] : {std::array{a, b, c}, std::array{a, c, b}})
    for (int d : dg.darts_between(x, y))
      if (dg.face(d).size() == 3 && dg.head(dg.face_next(d)) == z) return d;
  throw DomainError("object is not a face");
}

int single_dart(const DartGraph& dg, Vertex u, Vertex v) {
  auto ds = dg.darts_between(u, v);
  if (ds.empty()) throw DomainError("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  return ds.front();
}

int corner_dart(const DartGraph& dg, Vertex u, Vertex b1, Vertex b2) {
  for (auto [p, q] : {std::pair{b1, b2}, std::pair{b2, b1}})
    for (int d : dg.darts_between(u, p))
      if (dg.head(dg.succ(d)) == q && dg.face(d ^ 1).size() == 3) return d;
  throw DomainError("funnel bottoms do not form a face with the middle");
}

void check_vertex(const DartGraph& dg, Vertex v) {
  if (v < 0 || v >= dg.vertex_slots() || !dg.alive(v)) throw DomainError("no vertex " + std::to_string(v));
}

void apply_step(DartGraph& dg, const WheelOpRecord& r) {
  const auto& o = r.object;
  for (Vertex v : o) check_vertex(dg, v);
  auto need = [&](std::size_t k) {
    if (o.size() != k) throw DomainError(to_string(r.kind) + " expects " + std::to_string(k) + " object vertices");
  };
  switch (r.kind) {
    case OpKind::Extend2:
      need(2);
      dg.extend2(single_dart(dg, o[0], o[1]));
      break;
    case OpKind::Extend3:
      need(3);
      dg.extend3(face_dart(dg, o[0], o[1], o[2]));
      break;
    case OpKind::Extend4:
      need(3);
      if (o[0] == o[2]) throw DomainError("path ends coincide");
      dg.extend4(single_dart(dg, o[1], o[0]), single_dart(dg, o[1], o[2]));
      break;
    case OpKind::Extend5: {
      need(4);
      const int db1 = corner_dart(dg, o[1], o[2], o[3]);
      const Vertex t = o[0];
      if (t == o[2] || t == o[3]) throw DomainError("funnel top coincides with a bottom");
      dg.extend5(single_dart(dg, o[1], t), db1);
      break;
    }
    case OpKind::Contract2:
    case OpKind::Contract3:
    case OpKind::Contract4:
    case OpKind::Contract5: {
      need(1);
      const int k = r.kind == OpKind::Contract2 ? 2 : r.kind == OpKind::Contract3 ? 3 : r.kind == OpKind::Contract4 ? 4 : 5;
      if (dg.degree(o[0]) != k) throw DomainError(to_string(r.kind) + " needs a vertex of degree " + std::to_string(k));
      if (k >= 4 && r.identified_pairs.empty()) throw DomainError("contraction needs an identified pair");
      dg.remove_vertex(o[0]);
      for (auto [q, p] : r.identified_pairs) {
        check_vertex(dg, q);
        check_vertex(dg, p);
        dg.identify(q, p);
      }
      dg.remove_empty_digons();
      break;
    }
  }
}

PlaneTriangulation finish(const DartGraph& dg, std::vector<Vertex>* id_map) {
  try {
    return dg.to_triangulation(id_map);
  } catch (const StructuralError& e) {
    throw DomainError(std::string("result is not a simple triangulation: ") + e.what());
  }
}

WheelOpRecord make(OpKind k, std::vector<Vertex> object, std::vector<std::pair<Vertex, Vertex>> pairs = {}) {
  WheelOpRecord r;
  r.kind = k;
  r.object = std::move(object);
  r.identified_pairs = std::move(pairs);
  return r;
}

}  // namespace

std::string to_string(OpKind k) { return kOpNames[static_cast<int>(k)]; }

OpKind op_kind_from_string(std::string_view s) {
  for (int i = 0; i < 8; ++i)
    if (s == kOpNames[i]) return static_cast<OpKind>(i);
  throw DomainError("unknown operation kind " + std::string(s));
}

std::string WheelOpRecord::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["object"] = object;
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : identified_pairs) pairs.push_back({a, b});
  j["identified_pairs"] = pairs;
  j["result_code"] = result_code.hex();
  return j.dump();
}

WheelOpRecord WheelOpRecord::from_json(std::string_view line) {
  auto j = nlohmann::json::parse(line);
  WheelOpRecord r;
  r.kind = op_kind_from_string(j.at("kind").get<std::string>());
  r.object = j.at("object").get<std::vector<Vertex>>();
  for (const auto& p : j.value("identified_pairs", nlohmann::json::array())) r.identified_pairs.push_back({p.at(0).get<Vertex>(), p.at(1).get<Vertex>()});
  r.result_code = CanonicalCode::from_hex(j.value("result_code", std::string()));
  return r;
}

PlaneTriangulation replay(const PlaneTriangulation& g, const std::vector<WheelOpRecord>& chain, std::vector<Vertex>* id_map) {
  DartGraph dg(g);
  for (const auto& r : chain) apply_step(dg, r);
  return finish(dg, id_map);
}

PlaneTriangulation extend3(const PlaneTriangulation& g, const FaceTriple& f) {
  if (!g.is_face(f)) throw DomainError("extend3 object is not a face");
  return replay(g, {make(OpKind::Extend3, {f.a, f.b, f.c})});
}

PlaneTriangulation contract3(const PlaneTriangulation& g, Vertex v) {
  if (v < 0 || v >= g.order() || g.degree(v) != 3) throw DomainError("contract3 needs a vertex of degree 3");
  if (g.order() < 4) throw DomainError("contract3 needs at least 4 vertices");
  return replay(g, {make(OpKind::Contract3, {v})});
}

PlaneTriangulation extend2(const PlaneTriangulation& g, Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b)) throw DomainError("extend2 object is not an edge");
  throw DomainError("extend2 alone leaves a 2-cycle; use a compound 2+4 or 2+5 extension");
}

PlaneTriangulation contract2(const PlaneTriangulation& g, Vertex v) {
  if (v < 0 || v >= g.order() || g.degree(v) != 2) throw DomainError("contract2 needs a vertex of degree 2");
  return replay(g, {make(OpKind::Contract2, {v})});
}

PlaneTriangulation extend4(const PlaneTriangulation& g, const Path2& p) {
  if (p.x == p.y || !g.adjacent(p.x, p.u) || !g.adjacent(p.u, p.y)) throw DomainError("extend4 object is not a 2-path");
  return replay(g, {make(OpKind::Extend4, {p.x, p.u, p.y})});
}

std::vector<std::pair<Vertex, Vertex>> contraction_pairs(const PlaneTriangulation& g, Vertex v) {
  const int d = g.degree(v);
  std::vector<std::pair<Vertex, Vertex>> out;
  if (d != 4 && d != 5) return out;
  const auto& r = g.rotation(v);
  for (int i = 0; i < (d == 4 ? 2 : 5); ++i) {
    Vertex a = r[i], b = r[(i + 2) % d];
    if (!g.adjacent(a, b)) out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_pair(const PlaneTriangulation& g, Vertex v, std::pair<Vertex, Vertex> pair, int k) {
  if (v < 0 || v >= g.order() || g.degree(v) != k) throw DomainError("contract" + std::to_string(k) + " needs a vertex of degree " + std::to_string(k));
  const int i = g.position(v, pair.first), j = g.position(v, pair.second);
  if (i < 0 || j < 0) throw DomainError("identified pair must be neighbors of the center");
  const int gap = (j - i + k) % k;
  if (gap != 2 && gap != k - 2) throw DomainError("identified pair must be at distance 2 on the neighbor cycle");
  if (g.adjacent(pair.first, pair.second)) throw DomainError("identified pair is adjacent; use the other pair");
}

}  // namespace

PlaneTriangulation contract4(const PlaneTriangulation& g, Vertex v, std::pair<Vertex, Vertex> pair) {
  check_pair(g, v, pair, 4);
  return replay(g, {make(OpKind::Contract4, {v}, {pair})});
}

PlaneTriangulation extend5(const PlaneTriangulation& g, const Funnel& l) {
  return replay(g, {make(OpKind::Extend5, {l.top, l.middle, l.b1, l.b2})});
}

PlaneTriangulation contract5(const PlaneTriangulation& g, Vertex v, std::pair<Vertex, Vertex> pair) {
  check_pair(g, v, pair, 5);
  return replay(g, {make(OpKind::Contract5, {v}, {pair})});
}

PlaneTriangulation compound_extend(const PlaneTriangulation& g, const std::vector<WheelOpRecord>& chain) { return replay(g, chain); }

PlaneTriangulation dumbbell_extend(const PlaneTriangulation& g, const FaceTriple& f1, Vertex u, const FaceTriple& f2) {
  auto has = [](const FaceTriple& f, Vertex x) { return f.a == x || f.b == x || f.c == x; };
  if (!has(f1, u) || !has(f2, u) || f1.same_vertices(f2)) throw DomainError("dumbbell needs two faces sharing the middle vertex");
  const Vertex w1 = g.order(), w2 = g.order() + 1;
  return replay(g, {make(OpKind::Extend3, {f1.a, f1.b, f1.c}), make(OpKind::Extend3, {f2.a, f2.b, f2.c}), make(OpKind::Extend4, {w1, u, w2})});
}

ContractibleSubgraph classify_contractible(const PlaneTriangulation& g, std::vector<Vertex> X) {
  std::sort(X.begin(), X.end());
  ContractibleSubgraph s;
  s.X = X;
  int fives = 0;
  bool degrees_ok = true;
  for (Vertex x : X) {
    s.x_degrees.push_back(g.degree(x));
    if (g.degree(x) == 5) ++fives;
    else if (g.degree(x) != 4) degrees_ok = false;
  }
  if (!degrees_ok || fives > 2 || X.empty()) return s;
  const int k = static_cast<int>(X.size());
  if (k == 1) {
    s.configuration = fives ? 'b' : 'a';
    return s;
  }
  if (k == 2) {
    s.configuration = "cde"[fives];
    return s;
  }
  if (k == 3) {
    for (int m = 0; m < 3; ++m) {
      Vertex mid = X[m], e1 = X[(m + 1) % 3], e2 = X[(m + 2) % 3];
      if (!g.adjacent(mid, e1) || !g.adjacent(mid, e2)) continue;
      const int dm = g.degree(mid), ends5 = (g.degree(e1) == 5) + (g.degree(e2) == 5);
      if (dm == 4 && ends5 == 0) s.configuration = 'f';
      else if (dm == 4 && ends5 == 1) s.configuration = 'g';
      else if (dm == 5 && ends5 == 0) s.configuration = 'h';
      else if (dm == 5 && ends5 == 1) s.configuration = 'i';
      else if (dm == 4 && ends5 == 2) s.configuration = 'j';
      if (s.configuration != '?') return s;
    }
    return s;
  }
  s.t = k;
  if (fives == 0) {
    s.configuration = 'k';
  } else if (fives == 1) {
    s.configuration = 'l';
    for (int i = 0; i < k; ++i)
      if (s.x_degrees[i] == 5) s.r = i + 1;
  } else {
    Vertex a = -1, b = -1;
    for (Vertex x : X)
      if (g.degree(x) == 5) (a < 0 ? a : b) = x;
    s.configuration = g.adjacent(a, b) ? 'm' : 'n';
  }
  return s;
}

CompoundContraction compound_contract(const PlaneTriangulation& g, Vertex seed, std::optional<std::pair<Vertex, Vertex>> pair) {
  if (g.min_degree() < 4) throw DomainError("compound contraction needs minimum degree >= 4");
  const int k = g.degree(seed);
  if (k != 4 && k != 5) throw DomainError("seed must have degree 4 or 5");
  if (!pair) {
    auto pairs = contraction_pairs(g, seed);
    if (pairs.empty()) throw DomainError("no legal pair at the seed");
    pair = pairs.front();
  }
  check_pair(g, seed, *pair, k);

  DartGraph dg(g);
  CompoundContraction out;
  std::vector<Vertex> X{seed};
  WheelOpRecord first = make(k == 4 ? OpKind::Contract4 : OpKind::Contract5, {seed}, {*pair});
  apply_step(dg, first);
  out.steps.push_back(first);
  while (true) {
    if (dg.alive_count() < 6) throw ExhaustionError("cascade fell below 6 vertices");
    Vertex low = -1;
    for (Vertex v = 0; v < dg.vertex_slots(); ++v)
      if (dg.alive(v) && dg.degree(v) < 4 && (low < 0 || dg.degree(v) < dg.degree(low))) low = v;
    if (low < 0) break;
    if (dg.degree(low) < 2) throw DomainError("cascade produced a vertex of degree below 2");
    WheelOpRecord step = make(dg.degree(low) == 2 ? OpKind::Contract2 : OpKind::Contract3, {low});
    apply_step(dg, step);
    out.steps.push_back(step);
    X.push_back(low);
  }
  out.result = finish(dg, &out.id_map);
  out.steps.back().result_code = canonical_code(out.result);
  out.sub = classify_contractible(g, X);
  return out;
}

std::vector<CompoundContraction> all_compound_contractions(const PlaneTriangulation& g) {
  std::vector<CompoundContraction> out;
  for (Vertex v = 0; v < g.order(); ++v)
    for (auto pair : contraction_pairs(g, v)) {
      try {
        out.push_back(compound_contract(g, v, pair));
      } catch (const DomainError&) {
      }
    }
  return out;
}

namespace {

struct DumbbellKey {
  Vertex u;
  std::array<Vertex, 3> f1, f2;
  auto operator<=>(const DumbbellKey&) const = default;
};

DumbbellKey dumbbell_key(Vertex u, std::array<Vertex, 3> f1, std::array<Vertex, 3> f2) {
  std::sort(f1.begin(), f1.end());
  std::sort(f2.begin(), f2.end());
  if (f2 < f1) std::swap(f1, f2);
  return {u, f1, f2};
}

bool admissible(const PlaneTriangulation& g, const std::vector<WheelOpRecord>& chain) {
  try {
    return replay(g, chain).min_degree() >= 4;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

PlaneTriangulation apply_extension(const PlaneTriangulation& g, const ExtensionObject& obj) {
  const auto& r = obj.rep;
  switch (obj.kind) {
    case ExtensionObject::Kind::Path: return extend4(g, {r[0], r[1], r[2]});
    case ExtensionObject::Kind::Funnel: return extend5(g, {r[0], r[1], r[2], r[3]});
    case ExtensionObject::Kind::Dumbbell: return dumbbell_extend(g, {r[1], r[2], r[3]}, r[0], {r[4], r[5], r[6]});
  }
  throw DomainError("unknown extension object");
}

std::vector<ExtensionObject> enumerate_extension_objects(const PlaneTriangulation& g) {
  std::vector<ExtensionObject> out;
  for (const auto& o : automorphism_orbits(g, SubgraphKind::Path2)) {
    ExtensionObject e{ExtensionObject::Kind::Path, o.rep, o.size, false};
    e.admissible = admissible(g, {make(OpKind::Extend4, o.rep)});
    out.push_back(e);
  }
  for (const auto& o : automorphism_orbits(g, SubgraphKind::Funnel)) {
    ExtensionObject e{ExtensionObject::Kind::Funnel, o.rep, o.size, false};
    e.admissible = admissible(g, {make(OpKind::Extend5, o.rep)});
    out.push_back(e);
  }

  auto autos = canonical_form(g).automorphisms;
  std::set<DumbbellKey> all;
  auto fs = face_triples(g);
  for (Vertex u = 0; u < g.order(); ++u)
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        auto a = fs[i].sorted(), b = fs[j].sorted();
        auto in = [u](const std::array<Vertex, 3>& f) { return f[0] == u || f[1] == u || f[2] == u; };
        if (in(a) && in(b)) all.insert(dumbbell_key(u, a, b));
      }
  std::set<DumbbellKey> done;
  for (const auto& key : all) {
    if (done.count(key)) continue;
    std::set<DumbbellKey> orbit;
    for (const auto& au : autos) {
      auto m = [&](std::array<Vertex, 3> f) {
        for (auto& x : f) x = au.map[x];
        return f;
      };
      orbit.insert(dumbbell_key(au.map[key.u], m(key.f1), m(key.f2)));
    }
    done.insert(orbit.begin(), orbit.end());
    ExtensionObject e;
    e.kind = ExtensionObject::Kind::Dumbbell;
    e.rep = {key.u, key.f1[0], key.f1[1], key.f1[2], key.f2[0], key.f2[1], key.f2[2]};
    e.orbit_size = static_cast<int>(orbit.size());
    e.admissible = admissible(g, {make(OpKind::Extend3, {key.f1[0], key.f1[1], key.f1[2]}), make(OpKind::Extend3, {key.f2[0], key.f2[1], key.f2[2]}), make(OpKind::Extend4, {g.order(), key.u, g.order() + 1})});
    out.push_back(e);
  }
  return out;
}

ColoredResult contract_k_under_coloring(const PlaneTriangulation& g, const ColorPartition& f, Vertex v) {
  if (!is_proper_coloring(g, f.color)) throw DomainError("coloring is not proper");
  if (v < 0 || v >= g.order()) throw DomainError("no such vertex");
  const int k = g.degree(v);
  std::vector<Vertex> link = g.rotation(v);

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::function<bool(DartGraph&)> solve = [&](DartGraph& dg) -> bool {
    // First face of length >= 4, scanning vertices in id order.
    std::vector<int> big;
    for (Vertex x = 0; x < dg.vertex_slots() && big.empty(); ++x)
      for (int d : dg.darts(x))
        if (auto fc = dg.face(d); fc.size() >= 4) {
          big = fc;
          break;
        }
    if (big.empty()) return dg.is_simple();
    std::vector<Vertex> on;
    for (int d : big) on.push_back(dg.origin(d));
    std::vector<std::pair<Vertex, Vertex>> cands;
    for (Vertex a : on)
      for (Vertex b : on)
        if (a < b && f.color[a] == f.color[b] && !dg.adjacent(a, b)) cands.push_back({a, b});
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (auto [a, b] : cands) {
      DartGraph next = dg;
      try {
        next.identify(a, b);
      } catch (const DomainError&) {
        continue;
      }
      next.remove_empty_digons();
      if (!next.is_simple()) continue;
      pairs.push_back({a, b});
      if (solve(next)) {
        dg = next;
        return true;
      }
      pairs.pop_back();
    }
    return false;
  };

  DartGraph dg(g);
  dg.remove_vertex(v);
  if (!solve(dg)) throw DomainError("contraction under coloring is inapplicable at this vertex");
  ColoredResult out;
  out.graph = finish(dg, &out.id_map);
  std::vector<Vertex> merged_into(g.order());
  for (Vertex x = 0; x < g.order(); ++x) merged_into[x] = x;
  for (auto [a, b] : pairs) {
    for (auto& m : merged_into)
      if (m == b) m = a;
  }
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != v && out.id_map[x] < 0) out.id_map[x] = out.id_map[merged_into[x]];
  std::vector<int> colors(out.graph.order());
  for (Vertex x = 0; x < g.order(); ++x)
    if (out.id_map[x] >= 0) colors[out.id_map[x]] = f.color[x];
  out.partition = ColorPartition::from_colors(colors);
  for (Vertex x = 0; x < g.order() && out.center_mate < 0; ++x)
    if (x != v && f.color[x] == f.color[v]) out.center_mate = out.id_map[x];
  OpKind kind = k == 2 ? OpKind::Contract2 : k == 3 ? OpKind::Contract3 : k == 4 ? OpKind::Contract4 : OpKind::Contract5;
  out.record = make(kind, {v}, pairs);
  out.record.object.insert(out.record.object.end(), link.begin(), link.end());
  out.record.result_code = canonical_code(out.graph);
  return out;
}

ColoredResult extend_under_coloring(const PlaneTriangulation& g, const ColorPartition& f, const std::vector<Vertex>& object, int kind) {
  if (!is_proper_coloring(g, f.color)) throw DomainError("coloring is not proper");
  WheelOpRecord r;
  std::set<int> used;
  for (Vertex x : object) {
    if (x < 0 || x >= g.order()) throw DomainError("object vertex out of range");
    used.insert(f.color[x]);
  }
  switch (kind) {
    case 3: r = make(OpKind::Extend3, object); break;
    case 4: r = make(OpKind::Extend4, object); break;
    case 5:
      r = make(OpKind::Extend5, object);
      if (object.size() == 4 && f.color[object[0]] != f.color[object[2]] && f.color[object[0]] != f.color[object[3]])
        throw DomainError("funnel top must share a color with a bottom");
      break;
    default: throw DomainError("extension under coloring supports 3-, 4- and 5-wheels");
  }
  ColoredResult out;
  out.graph = replay(g, {r}, &out.id_map);
  int fresh = 0;
  while (used.count(fresh)) ++fresh;
  if (fresh > 3) throw DomainError("no color left for the new center");
  std::vector<int> colors(out.graph.order(), -1);
  for (Vertex x = 0; x < g.order(); ++x) colors[out.id_map[x]] = f.color[x];
  if (kind == 3) {
    colors[g.order()] = fresh;
  } else {
    colors[g.order()] = f.color[object[1]];  // u' inherits the color of u
    colors[g.order() + 1] = fresh;
  }
  out.partition = ColorPartition::from_colors(colors);
  out.record = r;
  out.record.result_code = canonical_code(out.graph);
  if (!is_proper_coloring(out.graph, out.partition.color)) throw StructuralError("extension produced an improper coloring");
  return out;
}

namespace {

ColoredResult replay_inverse_plain(const ColoredResult& c) {
  const auto& o = c.record.object;
  const Vertex v = o.at(0);
  std::vector<Vertex> link(o.begin() + 1, o.end());
  const int k = static_cast<int>(link.size());
  auto map = [&](Vertex x) { return c.id_map.at(x); };
  if (k == 3) return extend_under_coloring(c.graph, c.partition, {map(link[0]), map(link[1]), map(link[2])}, 3);
  if (k != 4 && k != 5) throw DomainError("inverse replay supports 3-, 4- and 5-wheels");
  if (c.record.identified_pairs.size() != 1) throw DomainError("expected a single identification");
  auto [q, p] = c.record.identified_pairs.front();
  const int iq = static_cast<int>(std::find(link.begin(), link.end(), q) - link.begin());
  const int ip = static_cast<int>(std::find(link.begin(), link.end(), p) - link.begin());
  (void)v;
  if (k == 4) return extend_under_coloring(c.graph, c.partition, {map(link[(iq + 1) % 4]), map(q), map(link[(iq + 3) % 4])}, 4);
  // The vertex between q and p on the 5-cycle is the funnel top.
  const int top = (ip - iq + 5) % 5 == 2 ? (iq + 1) % 5 : (iq + 4) % 5;
  std::vector<Vertex> bottoms;
  for (int i = 0; i < 5; ++i)
    if (i != iq && i != ip && i != top) bottoms.push_back(map(link[i]));
  return extend_under_coloring(c.graph, c.partition, {map(link[top]), map(q), bottoms[0], bottoms[1]}, 5);
}

}  // namespace

ColoredResult replay_inverse(const ColoredResult& c) {
  ColoredResult out = replay_inverse_plain(c);
  const int k = static_cast<int>(c.record.object.size()) - 1;
  const Vertex center = c.graph.order() + (k == 3 ? 0 : 1);
  std::vector<int> colors = out.partition.color;
  if (c.center_mate >= 0) {
    colors[center] = colors[out.id_map[c.center_mate]];
  } else {
    // The deleted vertex was alone in its class.
    colors[center] = 4;
  }
  if (is_proper_coloring(out.graph, colors)) out.partition = ColorPartition::from_colors(colors);
  return out;
}

}  // namespace triangulata
