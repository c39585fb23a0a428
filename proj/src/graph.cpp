#include "tropgon/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tropgon {

long long MultiGraph::degree(int v) const {
  long long d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

bool MultiGraph::connected() const {
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) { seen[w] = true; stack.push_back(w); }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

long long MultiGraph::betti() const {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int comps = n;
  for (const auto& [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) { parent[ra] = rb; --comps; }
  }
  return (long long)edges.size() - n + comps;
}

bool MultiGraph::trivalent() const {
  for (int v = 0; v < n; ++v)
    if (degree(v) != 3) return false;
  return true;
}

MultiGraph dual_graph(const Subdivision& t) {
  if (!is_unimodular(t))
    throw std::invalid_argument("dual_graph: unimodular triangulation required");
  std::map<std::pair<int, int>, std::vector<int>> side_cells;
  for (int c = 0; c < (int)t.cells.size(); ++c) {
    const auto& cell = t.cells[c];
    for (size_t i = 0; i < cell.size(); ++i) {
      int a = cell[i], b = cell[(i + 1) % cell.size()];
      side_cells[{std::min(a, b), std::max(a, b)}].push_back(c);
    }
  }
  MultiGraph g;
  g.n = (int)t.cells.size();
  for (const auto& [side, cs] : side_cells) {
    if (cs.size() == 1) continue;  // boundary edge; rays never materialize
    if (cs.size() != 2)
      throw std::logic_error("dual_graph: edge shared by more than two cells");
    g.edges.push_back({cs[0], cs[1]});
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (!g.connected())
    throw std::logic_error("dual_graph: disconnected dual");
  return g;
}

namespace {

MultiGraph compacted(int n, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<bool>& alive) {
  std::vector<int> remap(n, -1);
  int k = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) remap[v] = k++;
  MultiGraph out;
  out.n = k;
  for (const auto& [a, b] : edges) out.edges.push_back({remap[a], remap[b]});
  for (auto& [a, b] : out.edges)
    if (a > b) std::swap(a, b);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace

MultiGraph skeleton(const MultiGraph& g) {
  int n = g.n;
  std::vector<bool> alive(n, true);
  // Edge list with alive flags; loops kept as (v, v).
  std::vector<std::pair<int, int>> es = g.edges;
  std::vector<bool> elive(es.size(), true);

  auto degree = [&](int v) {
    long long d = 0;
    for (size_t i = 0; i < es.size(); ++i) {
      if (!elive[i]) continue;
      if (es[i].first == v) ++d;
      if (es[i].second == v) ++d;
    }
    return d;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // Prune leaves and isolated vertices.
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      long long d = degree(v);
      if (d == 0 && std::count(alive.begin(), alive.end(), true) > 1) {
        alive[v] = false;
        changed = true;
      } else if (d == 1) {
        for (size_t i = 0; i < es.size(); ++i)
          if (elive[i] && (es[i].first == v || es[i].second == v))
            elive[i] = false;
        alive[v] = false;
        changed = true;
      }
    }
    if (changed) continue;
    // Suppress one 2-valent vertex (unless its two ends are a single loop).
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || degree(v) != 2) continue;
      std::vector<size_t> inc;
      for (size_t i = 0; i < es.size(); ++i)
        if (elive[i] && (es[i].first == v || es[i].second == v)) inc.push_back(i);
      if (inc.size() == 1) continue;  // the loop-on-one-vertex normal form
      int a = es[inc[0]].first == v ? es[inc[0]].second : es[inc[0]].first;
      int b = es[inc[1]].first == v ? es[inc[1]].second : es[inc[1]].first;
      elive[inc[0]] = elive[inc[1]] = false;
      alive[v] = false;
      es.push_back({a, b});
      elive.push_back(true);
      changed = true;
      break;
    }
  }

  std::vector<std::pair<int, int>> kept;
  for (size_t i = 0; i < es.size(); ++i)
    if (elive[i]) kept.push_back(es[i]);
  return compacted(n, kept, alive);
}

MultiGraph loopless_model(const MultiGraph& g) {
  MultiGraph out;
  out.n = g.n;
  for (const auto& [a, b] : g.edges) {
    if (a != b) {
      out.edges.push_back({a, b});
    } else {
      int mid = out.n++;
      out.edges.push_back({a, mid});
      out.edges.push_back({a, mid});
    }
  }
  return out;
}

MultiGraph cube_graph() {
  MultiGraph g;
  g.n = 8;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4}) {
      int w = v ^ bit;
      if (v < w) g.edges.push_back({v, w});
    }
  return g;
}

MultiGraph cycle_graph(int n) {
  MultiGraph g;
  g.n = n;
  if (n == 1) {
    g.edges.push_back({0, 0});
    return g;
  }
  for (int v = 0; v < n; ++v) g.edges.push_back({v, (v + 1) % n});
  return g;
}

MultiGraph path_graph(int n) {
  MultiGraph g;
  g.n = n;
  for (int v = 0; v + 1 < n; ++v) g.edges.push_back({v, v + 1});
  return g;
}

bool graphs_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  int n = a.n;
  if (n > 10) throw std::invalid_argument("graphs_isomorphic: graph too large");
  auto key = [n](const MultiGraph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges) {
      int pu = perm[u], pv = perm[v];
      es.push_back({std::min(pu, pv), std::max(pu, pv)});
    }
    std::sort(es.begin(), es.end());
    return es;
  };
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  auto target = key(b, id);
  std::vector<int> perm = id;
  do {
    if (key(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace tropgon
