#pragma once

#include <string>
#include <vector>

#include "bicover/matrices.hpp"

namespace bicover {

// Complete bipartite graph on two disjoint nonempty vertex sets, vertices
// 1-based. Unordered: {A,B} == {B,A}; storage is canonical with the side
// containing the smallest vertex first.
class BipartiteGraph {
 public:
  BipartiteGraph(std::vector<int> a, std::vector<int> b);

  const std::vector<int>& a() const { return a_; }
  const std::vector<int>& b() const { return b_; }
  int max_vertex() const;
  bool covers(int u, int v) const;  // u and v on opposite sides

  bool operator==(const BipartiteGraph& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const BipartiteGraph& o) const { return !(*this == o); }
  bool operator<(const BipartiteGraph& o) const {
    return a_ != o.a_ ? a_ < o.a_ : b_ < o.b_;
  }

 private:
  std::vector<int> a_, b_;
};

// Multiset of bipartite graphs over the vertex set [n].
struct Cover {
  int n = 0;
  std::vector<BipartiteGraph> graphs;
};

struct CoverMode {
  enum class Kind { ExactOnce, Odd, OneModP };
  Kind kind = Kind::ExactOnce;
  std::int64_t p = 0;

  static CoverMode exact_once() { return {Kind::ExactOnce, 0}; }
  static CoverMode odd() { return {Kind::Odd, 0}; }
  static CoverMode one_mod_p(std::int64_t p);

  bool satisfied(long long count) const;
  std::string str() const;
};

struct Edge {
  int u, v;  // u < v
  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
};

struct MultiplicityReport {
  CoverMode mode;
  int n = 0;
  bool ok = false;
  std::vector<long long> edge_counts;  // indexed via edge_index(u, v, n)
  std::vector<Edge> violations;

  long long count(int u, int v) const;
};

// Dense index of the unordered edge {u, v} of K_n, edges ordered (1,2),
// (1,3), ..., (1,n), (2,3), ...
std::size_t edge_index(int u, int v, int n);
std::size_t edge_count_total(int n);

// One bipartite graph per matrix column over the vertex pairs (2i-1, 2i):
// entry 0 leaves the pair out, +1 puts 2i in class B, -1 puts 2i in class A
// (with 2i-1 on the opposite side).
Cover pairs_construction(const SignMatrix& m);

// Stars ({i}, {i+1..n}) for i < n: the trivial exact decomposition.
Cover star_decomposition(int n);

// Removes a vertex, drops graphs with an emptied side, compacts labels.
Cover delete_vertex(const Cover& c, int v);

MultiplicityReport verify_cover(const Cover& c, int n, CoverMode mode);

}  // namespace bicover
