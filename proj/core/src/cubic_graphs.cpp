#include <algorithm>
#include <map>

#include "qexcess/error.hpp"
#include "qexcess/graphdual.hpp"

namespace qexcess {

namespace {

// Graphs are generated with a breadth-first labeling: vertices are processed
// in label order, and a processed vertex may only connect to vertices with a
// larger label, the next unused label being allocated on demand. Every
// connected cubic graph admits such a labeling.
class CubicGenerator {
 public:
  explicit CubicGenerator(int n) : n_(n), adj_(n, std::vector<bool>(n, false)), deg_(n, 0) {}

  template <class Sink>
  void run(Sink&& sink) {
    next_ = 1;
    process(0, std::forward<Sink>(sink));
  }

 private:
  template <class Sink>
  void process(int v, Sink&& sink) {
    if (v == n_) {
      if (next_ == n_) sink(adj_);
      return;
    }
    if (v >= next_) return;  // unreachable vertex: disconnected
    fill(v, v + 1, sink);
  }

  template <class Sink>
  void fill(int v, int from, Sink&& sink) {
    if (deg_[v] == 3) {
      process(v + 1, sink);
      return;
    }
    const int limit = std::min(next_, n_ - 1);
    for (int u = from; u <= limit; ++u) {
      if (deg_[u] == 3 || adj_[v][u]) continue;
      const bool fresh = u == next_;
      if (fresh) ++next_;
      connect(v, u, true);
      fill(v, u + 1, sink);
      connect(v, u, false);
      if (fresh) --next_;
    }
  }

  void connect(int a, int b, bool on) {
    adj_[a][b] = adj_[b][a] = on;
    deg_[a] += on ? 1 : -1;
    deg_[b] += on ? 1 : -1;
  }

  int n_;
  int next_ = 1;
  std::vector<std::vector<bool>> adj_;
  std::vector<int> deg_;
};

using Profile = std::vector<std::vector<int>>;

Profile distance_profile(const IndexMatrix& dist) {
  const int n = static_cast<int>(dist.rows());
  const int diameter = dist.maxCoeff();
  Profile profile(n, std::vector<int>(diameter + 1, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) ++profile[x][dist(x, y)];
  return profile;
}

bool extend(const IndexMatrix& da, const IndexMatrix& db, const Profile& pa, const Profile& pb,
            const std::vector<int>& order, std::size_t depth, std::vector<int>& map, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  const int n = static_cast<int>(da.rows());
  for (int w = 0; w < n; ++w) {
    if (used[w] || pa[v] != pb[w]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) ok = da(v, order[i]) == db(w, map[order[i]]);
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend(da, db, pa, pb, order, depth + 1, map, used)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edges().size() != b.edges().size()) return false;
  if (a.connected() != b.connected()) return false;
  const IndexMatrix da = distance_matrix(a);
  const IndexMatrix db = distance_matrix(b);
  // Unreachable pairs are -1; shift so profiles index from zero.
  const IndexMatrix sa = da.array() + 1, sb = db.array() + 1;
  const Profile pa = distance_profile(sa), pb = distance_profile(sb);
  auto sorted = [](Profile p) {
    std::sort(p.begin(), p.end());
    return p;
  };
  if (sorted(pa) != sorted(pb)) return false;

  // Breadth-first order of a keeps each new vertex adjacent to a mapped one.
  std::vector<int> order;
  std::vector<bool> placed(a.n(), false);
  for (int root = 0; root < a.n(); ++root) {
    if (placed[root]) continue;
    placed[root] = true;
    order.push_back(root);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (int y : a.neighbors()[order[h]])
        if (!placed[y]) {
          placed[y] = true;
          order.push_back(y);
        }
  }
  std::vector<int> map(a.n(), -1);
  std::vector<bool> used(a.n(), false);
  return extend(sa, sb, pa, pb, order, 0, map, used);
}

std::vector<Graph> connected_cubic_graphs(int n) {
  if (n < 4 || n % 2 != 0) return {};
  std::map<Profile, std::vector<Graph>> buckets;
  std::vector<Graph> out;
  CubicGenerator gen(n);
  gen.run([&](const std::vector<std::vector<bool>>& adj) {
    IndexMatrix m = IndexMatrix::Zero(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) m(x, y) = adj[x][y] ? 1 : 0;
    Graph g = Graph::from_adjacency(m);
    Profile key = distance_profile(distance_matrix(g));
    std::sort(key.begin(), key.end());
    auto& bucket = buckets[key];
    for (const auto& h : bucket)
      if (isomorphic(g, h)) return;
    bucket.push_back(g);
    out.push_back(std::move(g));
  });
  return out;
}

}  // namespace qexcess
