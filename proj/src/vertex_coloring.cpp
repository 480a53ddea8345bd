#include "cyclic/vertex_coloring.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

namespace {

using VertexSet = std::bitset<kMaxExactVertices>;

void require_size(const CyclicAdjacencyGraph& h) {
  if (h.n > kMaxExactVertices)
    throw guard_exceeded("exact search limited to " + std::to_string(kMaxExactVertices) + " vertices");
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const CyclicAdjacencyGraph& h) : n_(h.n), nb_(h.n) {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (h.adj[u][v]) nb_[u].set(v);
  }

  std::vector<int> run() {
    VertexSet all;
    for (int v = 0; v < n_; ++v) all.set(v);
    std::vector<int> current;
    expand(all, current);
    return best_;
  }

 private:
  // Greedy color classes over `p` give an upper bound for each prefix.
  void expand(VertexSet p, std::vector<int>& current) {
    std::vector<int> order, bound;
    VertexSet uncolored = p;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      VertexSet candidates = uncolored;
      while (candidates.any()) {
        int v = static_cast<int>(candidates._Find_first());
        candidates.reset(v);
        candidates &= ~nb_[v];
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + bound[i] <= best_.size()) return;
      const int v = order[i];
      current.push_back(v);
      const VertexSet next = p & nb_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      p.reset(v);
    }
  }

  int n_;
  std::vector<VertexSet> nb_;
  std::vector<int> best_;
};

class DsaturSearch {
 public:
  DsaturSearch(const CyclicAdjacencyGraph& h, int lower_bound)
      : h_(h),
        n_(h.n),
        lower_(lower_bound),
        color_(h.n, -1),
        seen_(h.n, std::vector<int>(h.n + 1, 0)),
        saturation_(h.n, 0),
        degree_(h.n) {
    for (int v = 0; v < n_; ++v) degree_[v] = h.degree(v);
  }

  VertexColoringResult run() {
    VertexColoringResult out;
    if (n_ == 0) return out;

    best_ = greedy_coloring(h_);
    upper_ = 1 + *std::max_element(best_.begin(), best_.end());

    const auto clique = maximum_clique(h_);
    lower_ = std::max<int>(lower_, static_cast<int>(clique.size()));

    if (upper_ > lower_) {
      int k = 0;
      for (int v : clique) assign(v, k++);
      expand(static_cast<int>(clique.size()), k);
    }
    out.colors = upper_;
    out.color = best_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void assign(int v, int c) {
    color_[v] = c;
    for (int w = 0; w < n_; ++w)
      if (h_.adj[v][w] && seen_[w][c]++ == 0) ++saturation_[w];
  }

  void unassign(int v) {
    const int c = color_[v];
    color_[v] = -1;
    for (int w = 0; w < n_; ++w)
      if (h_.adj[v][w] && --seen_[w][c] == 0) --saturation_[w];
  }

  int pick() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] != -1) continue;
      if (best == -1 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && degree_[v] > degree_[best]))
        best = v;
    }
    return best;
  }

  void expand(int colored, int used) {
    ++nodes_;
    if (colored == n_) {
      if (used < upper_) {
        upper_ = used;
        best_ = color_;
      }
      return;
    }
    const int v = pick();
    for (int c = 0; c < used && upper_ > lower_; ++c) {
      if (seen_[v][c]) continue;
      assign(v, c);
      expand(colored + 1, used);
      unassign(v);
    }
    if (upper_ > lower_ && used + 1 < upper_) {
      assign(v, used);
      expand(colored + 1, used + 1);
      unassign(v);
    }
  }

  const CyclicAdjacencyGraph& h_;
  int n_;
  int lower_;
  int upper_ = 0;
  long long nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> best_;
  std::vector<std::vector<int>> seen_;
  std::vector<int> saturation_;
  std::vector<int> degree_;
};

}  // namespace

std::vector<int> greedy_coloring(const CyclicAdjacencyGraph& h) {
  std::vector<int> order(h.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> color(h.n, -1);
  std::vector<char> taken(h.n + 1);
  for (int v : order) {
    std::fill(taken.begin(), taken.end(), 0);
    for (int w = 0; w < h.n; ++w)
      if (h.adj[v][w] && color[w] >= 0) taken[color[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
  }
  return color;
}

std::vector<int> maximum_clique(const CyclicAdjacencyGraph& h) {
  require_size(h);
  auto clique = CliqueSearch(h).run();
  std::sort(clique.begin(), clique.end());
  return clique;
}

VertexColoringResult exact_vertex_coloring(const CyclicAdjacencyGraph& h, int lower_bound) {
  require_size(h);
  return DsaturSearch(h, lower_bound).run();
}

}  // namespace cyclic
