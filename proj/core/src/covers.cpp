#include "bicover/covers.hpp"

#include <algorithm>

namespace bicover {

BipartiteGraph::BipartiteGraph(std::vector<int> a, std::vector<int> b)
    : a_(std::move(a)), b_(std::move(b)) {
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
  if (a_.empty() || b_.empty()) {
    throw Error(Errc::BadArgument, "bipartite graph sides must be nonempty");
  }
  if (a_.front() < 1 || b_.front() < 1) {
    throw Error(Errc::VertexOutOfRange, "vertices are 1-based");
  }
  if (std::adjacent_find(a_.begin(), a_.end()) != a_.end() ||
      std::adjacent_find(b_.begin(), b_.end()) != b_.end()) {
    throw Error(Errc::BadArgument, "repeated vertex in a class");
  }
  std::vector<int> inter;
  std::set_intersection(a_.begin(), a_.end(), b_.begin(), b_.end(), std::back_inserter(inter));
  if (!inter.empty()) throw Error(Errc::BadArgument, "classes must be disjoint");
  if (b_.front() < a_.front()) std::swap(a_, b_);
}

int BipartiteGraph::max_vertex() const { return std::max(a_.back(), b_.back()); }

bool BipartiteGraph::covers(int u, int v) const {
  const bool ua = std::binary_search(a_.begin(), a_.end(), u);
  const bool ub = std::binary_search(b_.begin(), b_.end(), u);
  const bool va = std::binary_search(a_.begin(), a_.end(), v);
  const bool vb = std::binary_search(b_.begin(), b_.end(), v);
  return (ua && vb) || (ub && va);
}

CoverMode CoverMode::one_mod_p(std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw Error(Errc::PEven, "p must be an odd number >= 3");
  return {Kind::OneModP, p};
}

bool CoverMode::satisfied(long long count) const {
  switch (kind) {
    case Kind::ExactOnce: return count == 1;
    case Kind::Odd: return count % 2 == 1;
    case Kind::OneModP: return count % p == 1;
  }
  return false;
}

std::string CoverMode::str() const {
  switch (kind) {
    case Kind::ExactOnce: return "exact-once";
    case Kind::Odd: return "odd";
    case Kind::OneModP: return "one-mod-" + std::to_string(p);
  }
  return "?";
}

std::size_t edge_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  // edges (u, u+1..n) start after those of all smaller u
  const std::size_t before = static_cast<std::size_t>(u - 1) * n -
                             static_cast<std::size_t>(u) * (u - 1) / 2;
  return before + static_cast<std::size_t>(v - u - 1);
}

std::size_t edge_count_total(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

long long MultiplicityReport::count(int u, int v) const {
  return edge_counts[edge_index(u, v, n)];
}

Cover pairs_construction(const SignMatrix& m) {
  const int n = m.order();
  Cover c;
  c.n = 2 * n;
  for (int j = 0; j < n; ++j) {
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) {
      const int lo = 2 * i + 1, hi = 2 * i + 2;
      switch (m.at(i, j)) {
        case 0: break;
        case 1:
          b.push_back(hi);
          a.push_back(lo);
          break;
        case -1:
          a.push_back(hi);
          b.push_back(lo);
          break;
      }
    }
    if (a.empty() || b.empty()) {
      // an all-zero column covers nothing and has no graph
      continue;
    }
    c.graphs.emplace_back(std::move(a), std::move(b));
  }
  return c;
}

Cover star_decomposition(int n) {
  if (n < 2) throw Error(Errc::NTooSmall, "need at least 2 vertices");
  Cover c;
  c.n = n;
  for (int i = 1; i < n; ++i) {
    std::vector<int> rest;
    for (int j = i + 1; j <= n; ++j) rest.push_back(j);
    c.graphs.emplace_back(std::vector<int>{i}, std::move(rest));
  }
  return c;
}

Cover delete_vertex(const Cover& c, int v) {
  if (v < 1 || v > c.n) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  Cover out;
  out.n = c.n - 1;
  auto relabel = [v](std::vector<int> side) {
    std::vector<int> r;
    for (int x : side) {
      if (x == v) continue;
      r.push_back(x > v ? x - 1 : x);
    }
    return r;
  };
  for (const auto& g : c.graphs) {
    std::vector<int> a = relabel(g.a());
    std::vector<int> b = relabel(g.b());
    if (a.empty() || b.empty()) continue;
    out.graphs.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

MultiplicityReport verify_cover(const Cover& c, int n, CoverMode mode) {
  if (n < 2) throw Error(Errc::NTooSmall, "need at least 2 vertices");
  MultiplicityReport rep;
  rep.mode = mode;
  rep.n = n;
  rep.edge_counts.assign(edge_count_total(n), 0);
  std::vector<int> side(static_cast<std::size_t>(n) + 1);
  for (const auto& g : c.graphs) {
    if (g.max_vertex() > n) {
      throw Error(Errc::VertexOutOfRange, "cover uses vertices beyond n");
    }
    std::fill(side.begin(), side.end(), 0);
    for (int x : g.a()) side[static_cast<std::size_t>(x)] = 1;
    for (int x : g.b()) side[static_cast<std::size_t>(x)] = 2;
    for (int u = 1; u <= n; ++u) {
      if (side[static_cast<std::size_t>(u)] == 0) continue;
      for (int v = u + 1; v <= n; ++v) {
        const int sv = side[static_cast<std::size_t>(v)];
        if (sv != 0 && sv != side[static_cast<std::size_t>(u)]) {
          ++rep.edge_counts[edge_index(u, v, n)];
        }
      }
    }
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!mode.satisfied(rep.edge_counts[edge_index(u, v, n)])) {
        rep.violations.push_back({u, v});
      }
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace bicover
