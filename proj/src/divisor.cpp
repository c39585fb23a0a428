#include "tropgon/divisor.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tropgon {

namespace {

// Multiplicity matrix with loops dropped (a loop returns every chip it
// sends, so it never affects firing).
std::vector<std::vector<long long>> multiplicities(const MultiGraph& g) {
  std::vector<std::vector<long long>> m(g.n, std::vector<long long>(g.n, 0));
  for (const auto& [a, b] : g.edges) {
    if (a == b) continue;
    ++m[a][b];
    ++m[b][a];
  }
  return m;
}

std::vector<int> bfs_dist(const std::vector<std::vector<long long>>& m, int q) {
  int n = (int)m.size();
  std::vector<int> dist(n, -1);
  std::queue<int> work;
  dist[q] = 0;
  work.push(q);
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    for (int w = 0; w < n; ++w)
      if (m[v][w] > 0 && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        work.push(w);
      }
  }
  return dist;
}

}  // namespace

Divisor reduce_divisor(const MultiGraph& g, Divisor d, int q) {
  if (q < 0 || q >= g.n) throw std::invalid_argument("reduce_divisor: bad q");
  if ((int)d.chips.size() != g.n)
    throw std::invalid_argument("reduce_divisor: divisor size mismatch");
  auto m = multiplicities(g);
  auto dist = bfs_dist(m, q);
  for (int v = 0; v < g.n; ++v)
    if (dist[v] < 0)
      throw std::invalid_argument("reduce_divisor: graph is disconnected");

  int maxd = *std::max_element(dist.begin(), dist.end());

  // Stage 1: clear debt outside q, outermost layer first. Firing the ball
  // of radius k-1 only moves chips outward, so settled layers stay settled.
  for (int k = maxd; k >= 1; --k) {
    for (int v = 0; v < g.n; ++v) {
      if (dist[v] != k) continue;
      while (d.chips[v] < 0) {
        for (int u = 0; u < g.n; ++u) {
          if (dist[u] >= k) continue;
          for (int w = 0; w < g.n; ++w) {
            if (dist[w] < k || m[u][w] == 0) continue;
            d.chips[u] -= m[u][w];
            d.chips[w] += m[u][w];
          }
        }
      }
    }
  }

  // Stage 2: Dhar's burning from q; fire the unburnt set until all burns.
  for (;;) {
    std::vector<bool> burnt(g.n, false);
    burnt[q] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int v = 0; v < g.n; ++v) {
        if (burnt[v]) continue;
        long long incoming = 0;
        for (int w = 0; w < g.n; ++w)
          if (burnt[w]) incoming += m[v][w];
        if (d.chips[v] < incoming) {
          burnt[v] = true;
          grew = true;
        }
      }
    }
    bool all = std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; });
    if (all) return d;
    for (int v = 0; v < g.n; ++v) {
      if (burnt[v]) continue;
      for (int w = 0; w < g.n; ++w) {
        if (!burnt[w] || m[v][w] == 0) continue;
        d.chips[v] -= m[v][w];
        d.chips[w] += m[v][w];
      }
    }
  }
}

bool has_positive_rank(const MultiGraph& g, const Divisor& d) {
  if (d.degree() < 0) return false;
  for (int q = 0; q < g.n; ++q) {
    auto r = reduce_divisor(g, d, q);
    if (r.chips[q] < 1) return false;
  }
  return true;
}

long long gonality(const MultiGraph& g, int vertex_cap) {
  if (!g.connected())
    throw std::invalid_argument("gonality: graph is disconnected");
  MultiGraph model = loopless_model(g);
  if (model.n > vertex_cap)
    throw std::runtime_error("gonality: vertex cap exceeded");

  int n = model.n;
  for (long long k = 1; k <= n; ++k) {
    // Multisets of size k over n vertices.
    std::vector<int> pick(k, 0);
    for (;;) {
      Divisor d;
      d.chips.assign(n, 0);
      for (int v : pick) ++d.chips[v];
      if (has_positive_rank(model, d)) return k;
      int i = (int)k - 1;
      while (i >= 0 && pick[i] == n - 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < (int)k; ++j) pick[j] = pick[i];
    }
  }
  throw std::logic_error("gonality: exhaustion failed");
}

}  // namespace tropgon
