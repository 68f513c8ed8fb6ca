#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "triangulata/embedding.hpp"

namespace oracle {

using triangulata::PlaneTriangulation;
using triangulata::Rotation;
using triangulata::Vertex;

// Splits u along its neighbors at rotation positions 0 and k: u keeps r0..rk,
// the new vertex takes rk..r(d-1), r0.
inline Rotation split_vertex(const Rotation& rot, Vertex u, int k) {
  Rotation r = rot;
  const auto& ru = rot[u];
  const int d = static_cast<int>(ru.size());
  const Vertex w = static_cast<Vertex>(r.size());
  const Vertex x = ru[0], y = ru[k];
  std::vector<Vertex> keep(ru.begin(), ru.begin() + k + 1);
  keep.push_back(w);
  std::vector<Vertex> give{y};
  for (int i = k + 1; i < d; ++i) give.push_back(ru[i]);
  give.push_back(x);
  give.push_back(u);
  r[u] = keep;
  r.push_back(give);
  for (int i = k + 1; i < d; ++i)
    for (auto& z : r[ru[i]])
      if (z == u) z = w;
  auto& rx = r[x];
  rx.insert(std::find(rx.begin(), rx.end(), u) + 1, w);
  auto& ry = r[y];
  ry.insert(std::find(ry.begin(), ry.end(), u), w);
  return r;
}

// Graph-level isomorphism key independent of the library's canonical code:
// minimum adjacency bitstring over all vertex permutations reachable from a BFS
// order starting at each directed edge and each orientation.
inline std::vector<std::uint8_t> key(const Rotation& rot) {
  const int n = static_cast<int>(rot.size());
  std::vector<std::uint8_t> best;
  for (int mirror = 0; mirror < 2; ++mirror)
    for (Vertex s = 0; s < n; ++s)
      for (std::size_t j = 0; j < rot[s].size(); ++j) {
        std::vector<int> label(n, -1), order;
        std::vector<std::size_t> start(n, 0);
        label[s] = 0;
        order.push_back(s);
        start[s] = j;
        for (std::size_t h = 0; h < order.size(); ++h) {
          const Vertex v = order[h];
          const auto& rv = rot[v];
          const std::size_t d = rv.size();
          for (std::size_t t = 0; t < d; ++t) {
            const std::size_t idx = mirror ? (start[v] + d - t) % d : (start[v] + t) % d;
            const Vertex z = rv[idx];
            if (label[z] < 0) {
              label[z] = static_cast<int>(order.size());
              order.push_back(z);
              const auto& rz = rot[z];
              start[z] = static_cast<std::size_t>(std::find(rz.begin(), rz.end(), v) - rz.begin());
            }
          }
        }
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
        for (Vertex v = 0; v < n; ++v)
          for (Vertex z : rot[v]) bits[label[v] * n + label[z]] = 1;
        if (best.empty() || bits < best) best = bits;
      }
  return best;
}

// All triangulations of order n (n >= 4) up to isomorphism, by vertex splitting from K4.
inline std::vector<Rotation> all_triangulations(int n) {
  std::map<std::vector<std::uint8_t>, Rotation> level;
  Rotation k4 = triangulata::make_k4().rotations();
  level.emplace(key(k4), k4);
  for (int m = 5; m <= n; ++m) {
    std::map<std::vector<std::uint8_t>, Rotation> next;
    for (const auto& [k, r] : level)
      for (Vertex u = 0; u < static_cast<Vertex>(r.size()); ++u) {
        const int d = static_cast<int>(r[u].size());
        for (int s = 0; s < d; ++s) {
          Rotation rs = r;
          std::rotate(rs[u].begin(), rs[u].begin() + s, rs[u].end());
          for (int k = 1; k < d; ++k) {
            Rotation t = split_vertex(rs, u, k);
            auto kk = key(t);
            if (!next.count(kk)) next.emplace(std::move(kk), std::move(t));
          }
        }
      }
    level = std::move(next);
  }
  std::vector<Rotation> out;
  for (auto& [k, r] : level) out.push_back(r);
  return out;
}

inline int min_degree(const Rotation& r) {
  int m = 1 << 20;
  for (const auto& x : r) m = std::min<int>(m, static_cast<int>(x.size()));
  return m;
}

inline std::vector<Rotation> all_delta4(int n) {
  std::vector<Rotation> out;
  for (auto& r : all_triangulations(n))
    if (min_degree(r) >= 4) out.push_back(r);
  return out;
}

}  // namespace oracle
