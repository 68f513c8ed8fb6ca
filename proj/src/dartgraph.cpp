#include "dartgraph.hpp"

#include <algorithm>
#include <set>

namespace triangulata::detail {

DartGraph::DartGraph(const PlaneTriangulation& g) : rot_(g.order()), alive_(g.order(), 1), outer_(g.outer_face()) {
  const int n = g.order();
  std::vector<int> edge_id(static_cast<std::size_t>(n) * n, -1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.rotation(u)) {
      int d;
      if (u < v) {
        d = new_edge(u, v);
        edge_id[u * n + v] = d;
      } else {
        d = edge_id[v * n + u] ^ 1;
      }
      rot_[u].push_back(d);
    }
}

int DartGraph::new_edge(Vertex u, Vertex v) {
  int d = static_cast<int>(org_.size());
  org_.push_back(u);
  org_.push_back(v);
  return d;
}

int DartGraph::alive_count() const { return static_cast<int>(std::count(alive_.begin(), alive_.end(), 1)); }

int DartGraph::index_of(int d) const {
  const auto& r = rot_[org_[d]];
  auto it = std::find(r.begin(), r.end(), d);
  if (it == r.end()) throw StructuralError("dart missing from rotation");
  return static_cast<int>(it - r.begin());
}

int DartGraph::succ(int d) const {
  const auto& r = rot_[org_[d]];
  return r[(index_of(d) + 1) % r.size()];
}

int DartGraph::pred(int d) const {
  const auto& r = rot_[org_[d]];
  return r[(index_of(d) + r.size() - 1) % r.size()];
}

std::vector<int> DartGraph::face(int d) const {
  std::vector<int> f{d};
  for (int e = face_next(d); e != d; e = face_next(e)) {
    f.push_back(e);
    if (f.size() > org_.size()) throw StructuralError("face tracing does not close");
  }
  return f;
}

std::vector<int> DartGraph::darts_between(Vertex u, Vertex v) const {
  std::vector<int> out;
  for (int d : rot_[u])
    if (head(d) == v) out.push_back(d);
  return out;
}

int DartGraph::dart(Vertex u, Vertex v, int k) const {
  for (int d : rot_[u])
    if (head(d) == v && k-- == 0) return d;
  return -1;
}

void DartGraph::insert_after(int ref, int d) {
  auto& r = rot_[org_[ref]];
  r.insert(r.begin() + index_of(ref) + 1, d);
}

void DartGraph::insert_before(int ref, int d) {
  auto& r = rot_[org_[ref]];
  r.insert(r.begin() + index_of(ref), d);
}

void DartGraph::erase_from_rotation(int d) {
  auto& r = rot_[org_[d]];
  r.erase(r.begin() + index_of(d));
}

Vertex DartGraph::fill_face(int d0) {
  const std::vector<int> f = face(d0);
  const Vertex w = static_cast<Vertex>(rot_.size());
  rot_.emplace_back();
  alive_.push_back(1);
  std::vector<int> to_w(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int e = f[i];
    const int d = new_edge(head(e), w);
    insert_after(e ^ 1, d);
    to_w[i] = d;
  }
  // w sees v0, v_{k-1}, ..., v1; dart to v_{i+1} is to_w[i] ^ 1.
  const std::size_t k = f.size();
  rot_[w].push_back(to_w[k - 1] ^ 1);
  for (std::size_t i = k - 1; i-- > 0;) rot_[w].push_back(to_w[i] ^ 1);
  return w;
}

Vertex DartGraph::extend2(int d) {
  const int e = new_edge(origin(d), head(d));
  insert_after(d, e);
  insert_before(d ^ 1, e ^ 1);
  return fill_face(e);
}

std::pair<Vertex, Vertex> DartGraph::extend4(int dx, int dy) {
  const Vertex u = origin(dx);
  if (origin(dy) != u || dx == dy) throw DomainError("extend4 needs two distinct darts at one vertex");
  if (head(dx) == head(dy)) throw DomainError("extend4 path ends coincide");
  const Vertex u2 = static_cast<Vertex>(rot_.size());
  rot_.emplace_back();
  alive_.push_back(1);
  std::vector<int> moved;
  for (int d = succ(dy); d != dx; d = succ(d)) moved.push_back(d);
  for (int d : moved) erase_from_rotation(d);
  const int g = new_edge(u2, head(dx));
  const int h = new_edge(u2, head(dy));
  rot_[u2].push_back(h);
  for (int d : moved) {
    org_[d] = u2;
    rot_[u2].push_back(d);
  }
  rot_[u2].push_back(g);
  insert_after(dx ^ 1, g ^ 1);
  insert_before(dy ^ 1, h ^ 1);
  const Vertex v = fill_face(dy ^ 1);
  return {u2, v};
}

std::pair<Vertex, Vertex> DartGraph::extend5(int dt, int db1) {
  const Vertex u = origin(dt);
  const int db2 = succ(db1);
  if (origin(db1) != u || dt == db1 || dt == db2) throw DomainError("extend5 needs a top distinct from the bottoms");
  const Vertex u2 = static_cast<Vertex>(rot_.size());
  rot_.emplace_back();
  alive_.push_back(1);
  std::vector<int> moved;
  for (int d = db2; d != dt; d = succ(d)) moved.push_back(d);
  for (int d : moved) erase_from_rotation(d);
  const int g = new_edge(u2, head(dt));
  for (int d : moved) {
    org_[d] = u2;
    rot_[u2].push_back(d);
  }
  rot_[u2].push_back(g);
  insert_after(dt ^ 1, g ^ 1);
  const Vertex v = fill_face(db1 ^ 1);
  return {u2, v};
}

void DartGraph::remove_edge(int d) {
  erase_from_rotation(d);
  erase_from_rotation(d ^ 1);
}

void DartGraph::remove_vertex(Vertex v) {
  for (int d : rot_[v]) erase_from_rotation(d ^ 1);
  rot_[v].clear();
  alive_[v] = 0;
}

void DartGraph::identify(Vertex q, Vertex p) {
  if (q == p) throw DomainError("cannot identify a vertex with itself");
  if (adjacent(q, p)) throw DomainError("identified vertices are adjacent");
  for (int start : rot_[q]) {
    std::vector<int> f = face(start);
    int dq = -1, dp = -1, nq = 0, np = 0;
    for (int e : f) {
      if (origin(e) == q) dq = e, ++nq;
      if (origin(e) == p) dp = e, ++np;
    }
    if (np == 0) continue;
    if (nq != 1 || np != 1) throw DomainError("identified vertices occur repeatedly on their common face");
    // q keeps dq .. pred(dq); p contributes dp .. pred(dp).
    std::vector<int> merged;
    const auto& rq = rot_[q];
    const auto& rp = rot_[p];
    const int iq = index_of(dq), ip = index_of(dp);
    for (std::size_t k = 0; k < rq.size(); ++k) merged.push_back(rq[(iq + k) % rq.size()]);
    for (std::size_t k = 0; k < rp.size(); ++k) merged.push_back(rp[(ip + k) % rp.size()]);
    for (int d : rp) org_[d] = q;
    rot_[q] = std::move(merged);
    rot_[p].clear();
    alive_[p] = 0;
    return;
  }
  throw DomainError("identified vertices share no face");
}

void DartGraph::remove_empty_digons() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < vertex_slots() && !changed; ++v)
      for (int d : rot_[v])
        if (face_next(face_next(d)) == d) {
          remove_edge(face_next(d));
          changed = true;
          break;
        }
  }
}

bool DartGraph::is_simple() const {
  for (Vertex v = 0; v < vertex_slots(); ++v) {
    std::set<Vertex> seen;
    for (int d : rot_[v])
      if (head(d) == v || !seen.insert(head(d)).second) return false;
  }
  return true;
}

std::vector<Vertex> DartGraph::compaction() const {
  const int slots = vertex_slots();
  const int n = alive_count();
  std::vector<Vertex> map(slots);
  for (Vertex v = 0; v < slots; ++v) map[v] = alive_[v] ? v : -1;
  // Live ids >= n move into the holes below n, largest into largest.
  Vertex top = slots - 1;
  for (Vertex hole = n - 1; hole >= 0; --hole) {
    if (alive_[hole]) continue;
    while (!alive_[top]) --top;
    map[top] = hole;
    --top;
  }
  return map;
}

PlaneTriangulation DartGraph::to_triangulation(std::vector<Vertex>* id_map) const {
  if (!is_simple()) throw StructuralError("multigraph is not simple");
  std::vector<Vertex> map = compaction();
  const int n = alive_count();
  Rotation r(n);
  for (Vertex v = 0; v < vertex_slots(); ++v) {
    if (!alive_[v]) continue;
    for (int d : rot_[v]) r[map[v]].push_back(map[head(d)]);
  }
  if (auto diag = validate_maximal_planar(r); !diag) throw StructuralError(diag.reason);
  if (id_map) *id_map = map;
  FaceTriple outer{map[outer_.a], map[outer_.b], map[outer_.c]};
  PlaneTriangulation probe(r);
  if (outer.a >= 0 && outer.b >= 0 && outer.c >= 0 && probe.is_face(outer)) return PlaneTriangulation(std::move(r), outer);
  return probe;
}

}  // namespace triangulata::detail
