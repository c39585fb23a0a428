#include "tropgon/scramble.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace tropgon {

namespace {

bool egg_connected(const MultiGraph& g, const std::vector<int>& egg) {
  if (egg.empty()) return false;
  std::set<int> in(egg.begin(), egg.end());
  std::set<int> seen{egg[0]};
  std::queue<int> work;
  work.push(egg[0]);
  while (!work.empty()) {
    int v = work.front();
    work.pop();
    for (const auto& [a, b] : g.edges) {
      int w = -1;
      if (a == v) w = b;
      else if (b == v) w = a;
      else continue;
      if (in.count(w) && !seen.count(w)) {
        seen.insert(w);
        work.push(w);
      }
    }
  }
  return seen.size() == in.size();
}

// Exact minimum hitting set over the eggs by branch and bound.
void hitting_search(const std::vector<std::set<int>>& eggs,
                    std::set<int>& chosen, size_t next, long long& best) {
  if ((long long)chosen.size() >= best) return;
  // Find the first egg not hit.
  for (size_t i = next; i < eggs.size(); ++i) {
    bool hit = false;
    for (int v : eggs[i])
      if (chosen.count(v)) { hit = true; break; }
    if (hit) continue;
    for (int v : eggs[i]) {
      chosen.insert(v);
      hitting_search(eggs, chosen, i + 1, best);
      chosen.erase(v);
    }
    return;
  }
  best = (long long)chosen.size();
}

}  // namespace

long long min_edge_cut(const MultiGraph& g, const std::vector<int>& a,
                       const std::vector<int>& b) {
  // Contract a -> source, b -> sink; Edmonds-Karp on the capacity matrix.
  std::vector<int> label(g.n, -1);
  for (int v : a) label[v] = 0;
  for (int v : b) {
    if (label[v] == 0)
      throw std::invalid_argument("min_edge_cut: sets intersect");
    label[v] = 1;
  }
  int next = 2;
  for (int v = 0; v < g.n; ++v)
    if (label[v] < 0) label[v] = next++;
  std::vector<std::vector<long long>> cap(next, std::vector<long long>(next, 0));
  for (const auto& [u, v] : g.edges) {
    int lu = label[u], lv = label[v];
    if (lu == lv) continue;
    cap[lu][lv] += 1;
    cap[lv][lu] += 1;
  }
  long long flow = 0;
  for (;;) {
    std::vector<int> prev(next, -1);
    std::queue<int> work;
    work.push(0);
    prev[0] = 0;
    while (!work.empty() && prev[1] < 0) {
      int v = work.front();
      work.pop();
      for (int w = 0; w < next; ++w)
        if (prev[w] < 0 && cap[v][w] > 0) {
          prev[w] = v;
          work.push(w);
        }
    }
    if (prev[1] < 0) return flow;
    long long push = -1;
    for (int v = 1; v != 0; v = prev[v]) {
      long long c = cap[prev[v]][v];
      push = push < 0 ? c : std::min(push, c);
    }
    for (int v = 1; v != 0; v = prev[v]) {
      cap[prev[v]][v] -= push;
      cap[v][prev[v]] += push;
    }
    flow += push;
  }
}

ScrambleOrder scramble_order(const MultiGraph& g, const Scramble& s) {
  if (s.eggs.empty()) throw std::invalid_argument("scramble_order: no eggs");
  std::vector<std::set<int>> eggs;
  for (const auto& e : s.eggs) {
    if (!egg_connected(g, e))
      throw std::invalid_argument("scramble_order: egg not connected");
    eggs.emplace_back(e.begin(), e.end());
  }

  ScrambleOrder out;
  long long best = (long long)g.n + 1;
  std::set<int> chosen;
  hitting_search(eggs, chosen, 0, best);
  out.hitting = best;

  for (size_t i = 0; i < s.eggs.size(); ++i) {
    for (size_t j = i + 1; j < s.eggs.size(); ++j) {
      bool disjoint = true;
      for (int v : s.eggs[j])
        if (eggs[i].count(v)) { disjoint = false; break; }
      if (!disjoint) continue;
      long long cut = min_edge_cut(g, s.eggs[i], s.eggs[j]);
      if (!out.egg_cut || cut < *out.egg_cut) out.egg_cut = cut;
    }
  }
  out.order = out.egg_cut ? std::min(out.hitting, *out.egg_cut) : out.hitting;
  return out;
}

std::optional<long long> egg_cut_bruteforce(const MultiGraph& g,
                                            const Scramble& s) {
  if (g.n > 20) throw std::invalid_argument("egg_cut_bruteforce: too large");
  std::optional<long long> best;
  for (unsigned long mask = 1; mask + 1 < (1ul << g.n); ++mask) {
    auto contains = [&](const std::vector<int>& egg, bool side) {
      for (int v : egg)
        if (((mask >> v) & 1ul) != (side ? 1ul : 0ul)) return false;
      return true;
    };
    bool has_in = false, has_out = false;
    for (const auto& e : s.eggs) {
      if (contains(e, true)) has_in = true;
      if (contains(e, false)) has_out = true;
    }
    if (!has_in || !has_out) continue;
    long long cut = 0;
    for (const auto& [a, b] : g.edges)
      if (((mask >> a) & 1ul) != ((mask >> b) & 1ul)) ++cut;
    if (!best || cut < *best) best = cut;
  }
  return best;
}

namespace {

void connected_sets_grow(const MultiGraph& g, std::vector<int>& cur,
                         std::set<int>& forbidden, int max_size,
                         std::set<std::vector<int>>& out) {
  out.insert(cur);
  if ((int)cur.size() >= max_size) return;
  std::set<int> in(cur.begin(), cur.end());
  std::set<int> frontier;
  for (const auto& [a, b] : g.edges) {
    if (in.count(a) && !in.count(b) && !forbidden.count(b)) frontier.insert(b);
    if (in.count(b) && !in.count(a) && !forbidden.count(a)) frontier.insert(a);
  }
  for (int w : frontier) {
    cur.push_back(w);
    std::sort(cur.begin(), cur.end());
    auto saved = cur;
    forbidden.insert(w);
    connected_sets_grow(g, cur, forbidden, max_size, out);
    cur = saved;
    cur.erase(std::find(cur.begin(), cur.end(), w));
  }
}

std::vector<std::vector<int>> connected_sets(const MultiGraph& g,
                                             int max_size) {
  std::set<std::vector<int>> out;
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> cur{v};
    std::set<int> forbidden;
    for (int w = 0; w < v; ++w) forbidden.insert(w);  // canonical root = min
    connected_sets_grow(g, cur, forbidden, max_size, out);
  }
  return {out.begin(), out.end()};
}

bool disjoint_family_search(const MultiGraph& g,
                            const std::vector<std::vector<int>>& cands,
                            long long target, size_t start,
                            std::vector<int>& used,
                            std::vector<std::vector<int>>& family) {
  if ((long long)family.size() == target) {
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t j = i + 1; j < family.size(); ++j)
        if (min_edge_cut(g, family[i], family[j]) < target) return false;
    return true;
  }
  for (size_t c = start; c < cands.size(); ++c) {
    bool free = true;
    for (int v : cands[c])
      if (used[v]) { free = false; break; }
    if (!free) continue;
    for (int v : cands[c]) used[v] = 1;
    family.push_back(cands[c]);
    if (disjoint_family_search(g, cands, target, c + 1, used, family))
      return true;
    family.pop_back();
    for (int v : cands[c]) used[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<Scramble> search_scramble(const MultiGraph& g, long long target,
                                        int max_egg_size, int vertex_cap) {
  if (g.n > vertex_cap)
    throw std::runtime_error("search_scramble: vertex cap exceeded");
  auto cands = connected_sets(g, max_egg_size);

  // Disjoint families first: hitting number equals the family size, so a
  // family of `target` eggs with pairwise cuts >= target suffices.
  std::vector<int> used(g.n, 0);
  std::vector<std::vector<int>> family;
  if (disjoint_family_search(g, cands, target, 0, used, family))
    return Scramble{family};

  // Small candidate sets: exhaust every family of bounded-size eggs.
  if (cands.size() <= 15) {
    for (unsigned long mask = 1; mask < (1ul << cands.size()); ++mask) {
      Scramble s;
      for (size_t i = 0; i < cands.size(); ++i)
        if ((mask >> i) & 1ul) s.eggs.push_back(cands[i]);
      if (scramble_order(g, s).order >= target) return s;
    }
  }
  return std::nullopt;
}

CrystalScramble crystal_scramble(const Subdivision& t, long long x0,
                                 long long d) {
  const auto& pts = t.ps.points;
  auto cell_pts = [&](int c) {
    std::array<Point, 3> tri;
    for (int k = 0; k < 3; ++k) tri[k] = pts[t.cells[c][k]];
    return tri;
  };

  // Dual restricted to the vertical strip [x0, x0 + d].
  std::vector<int> strip_cells;
  for (int c = 0; c < (int)t.cells.size(); ++c) {
    auto tri = cell_pts(c);
    bool inside = true;
    for (const auto& pt : tri)
      if (pt.x < x0 || pt.x > x0 + d) inside = false;
    if (inside) strip_cells.push_back(c);
  }
  std::map<int, int> dual_id;
  for (int i = 0; i < (int)strip_cells.size(); ++i) dual_id[strip_cells[i]] = i;

  MultiGraph dual;
  dual.n = (int)strip_cells.size();
  std::map<std::pair<int, int>, std::vector<int>> side_cells;
  for (int c : strip_cells) {
    const auto& cell = t.cells[c];
    for (int k = 0; k < 3; ++k) {
      int a = cell[k], b = cell[(k + 1) % 3];
      side_cells[{std::min(a, b), std::max(a, b)}].push_back(c);
    }
  }
  for (const auto& [side, cs] : side_cells)
    if (cs.size() == 2)
      dual.edges.push_back({dual_id[cs[0]], dual_id[cs[1]]});
  std::sort(dual.edges.begin(), dual.edges.end());

  // One egg per column: triangles inside [x_{i-1}, x_i] x [1, d-1] plus the
  // neighbors just above and below that band.
  Scramble s;
  for (long long i = 1; i <= d; ++i) {
    long long xl = x0 + i - 1, xr = x0 + i;
    std::vector<int> egg;
    for (int c : strip_cells) {
      auto tri = cell_pts(c);
      bool in_band = true;
      bool above = false, below = false;
      int on_top = 0, on_bottom = 0;
      for (const auto& pt : tri) {
        if (pt.x < xl || pt.x > xr || pt.y < 1 || pt.y > d - 1) in_band = false;
        if (pt.y == d - 1 && pt.x >= xl && pt.x <= xr) ++on_top;
        if (pt.y > d - 1) above = true;
        if (pt.y == 1 && pt.x >= xl && pt.x <= xr) ++on_bottom;
        if (pt.y < 1) below = true;
      }
      if (in_band || (on_top == 2 && above) || (on_bottom == 2 && below))
        egg.push_back(dual_id[c]);
    }
    if (egg.empty())
      throw std::invalid_argument("crystal_scramble: crystal absent");
    s.eggs.push_back(egg);
  }

  // The eggs must be pairwise disjoint and connected.
  std::set<int> seen;
  for (const auto& e : s.eggs) {
    for (int v : e)
      if (!seen.insert(v).second)
        throw std::logic_error("crystal_scramble: overlapping eggs");
    if (!egg_connected(dual, e))
      throw std::logic_error("crystal_scramble: egg not connected");
  }

  CrystalScramble out;
  out.strip_dual = dual;
  out.scramble = s;
  out.strip_cells = strip_cells;
  return out;
}

}  // namespace tropgon
