#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "bicover/analysis.hpp"

namespace bicover {

SearchGuards SearchGuards::from_env() {
  SearchGuards g;
  const char* raw = std::getenv("BICOVER_GUARD_OVERRIDE");
  if (raw == nullptr || *raw == '\0') return g;
  std::string spec(raw);
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::BadArgument, "BICOVER_GUARD_OVERRIDE entry '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const long long value = std::stoll(item.substr(eq + 1));
    if (key == "vanishing_bits") {
      g.vanishing_max_bits = static_cast<int>(value);
    } else if (key == "equidistant_space") {
      g.equidistant_max_space = value;
    } else if (key == "min_cover_n") {
      g.min_cover_max_n = static_cast<int>(value);
    } else if (key == "min_circuit_n_inhom") {
      g.min_circuit_max_n_inhom = static_cast<int>(value);
    } else if (key == "min_circuit_n_hom") {
      g.min_circuit_max_n_hom = static_cast<int>(value);
    } else if (key == "min_circuit_r") {
      g.min_circuit_max_r = static_cast<int>(value);
    } else {
      throw Error(Errc::BadArgument, "unknown guard key '" + key + "'");
    }
  }
  return g;
}

namespace {

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

constexpr std::uint64_t kNoHit = ~std::uint64_t{0};

// Scans [0, space) cut into blocks, ascending within each block, and returns
// the least accepted counter. Blocks listed in control.completed are skipped;
// control.on_block fires (serialized) as blocks finish.
std::optional<std::uint64_t> least_hit_scan(
    std::uint64_t space, const SearchControl& control,
    const std::function<std::optional<std::uint64_t>(std::uint64_t, std::uint64_t,
                                                     const std::atomic<std::uint64_t>&)>& scan_range) {
  if (space == 0) return std::nullopt;
  std::uint64_t nblocks = control.block_count;
  if (nblocks == 0) nblocks = std::min<std::uint64_t>(space, 256);
  nblocks = std::min(nblocks, space);
  const std::uint64_t chunk = (space + nblocks - 1) / nblocks;

  std::atomic<std::uint64_t> best{control.known_best.value_or(kNoHit)};
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;

  auto worker = [&]() {
    while (true) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      if (control.completed != nullptr && control.completed->count(b) != 0) continue;
      const std::uint64_t lo = b * chunk;
      const std::uint64_t hi = std::min(space, lo + chunk);
      if (lo < hi && lo <= best.load()) {
        if (auto hit = scan_range(lo, hi, best)) atomic_min(best, *hit);
      }
      if (control.on_block) {
        const std::uint64_t cur = best.load();
        std::lock_guard<std::mutex> lock(mu);
        control.on_block(b, cur == kNoHit ? std::nullopt : std::optional<std::uint64_t>(cur));
      }
    }
  };

  const int workers = std::max(1, control.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  const std::uint64_t found = best.load();
  if (found == kNoHit) return std::nullopt;
  return found;
}

}  // namespace

// --- vanishing substitutions over GF(2) ---

HomSubstitution vanishing_candidate_gf2(int n, int r, std::uint64_t counter) {
  const int m = n - r;
  const int bits = r * m;
  const FieldPtr F = Field::prime(2);
  HomSubstitution s;
  s.field = F;
  s.n = n;
  s.r = r;
  const FieldElem zero = F->zero();
  const FieldElem one = F->one();
  for (int i = 0; i < r; ++i) {
    std::vector<FieldElem> row;
    row.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      const int pos = bits - 1 - (i * m + j);  // entry (0,0) is most significant
      row.push_back((counter >> pos) & 1 ? one : zero);
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

std::optional<HomSubstitution> search_vanishing_gf2(int n, int r, const SearchControl& control,
                                                    const SearchGuards& guards) {
  if (r < 1 || r >= n) throw Error(Errc::BadArgument, "need 1 <= r < n");
  const int m = n - r;
  const int bits = r * m;
  if (bits > guards.vanishing_max_bits) {
    throw GuardError(Errc::SearchSpaceTooLarge,
                     "r(n-r) = " + std::to_string(bits) + " exceeds the guard of " +
                         std::to_string(guards.vanishing_max_bits) + " bits");
  }

  // A candidate vanishes iff every column weight is 0 or 3 mod 4 and every
  // pair has dot parity (1+|y_i|)(1+|y_j|) mod 2; checked on bitmasks.
  auto test = [n, r, m, bits](std::uint64_t counter) {
    std::uint32_t col[64];
    int w[64];
    (void)n;
    for (int j = 0; j < m; ++j) {
      std::uint32_t mask = 0;
      for (int i = 0; i < r; ++i) {
        const int pos = bits - 1 - (i * m + j);
        mask |= static_cast<std::uint32_t>((counter >> pos) & 1) << i;
      }
      col[j] = mask;
      w[j] = __builtin_popcount(mask);
      if (w[j] % 4 != 0 && w[j] % 4 != 3) return false;
    }
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const int parity = __builtin_popcount(col[i] & col[j]) & 1;
        const int expected = ((w[i] + 1) & 1) & ((w[j] + 1) & 1);
        if (parity != expected) return false;
      }
    }
    return true;
  };

  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi,
                        const std::atomic<std::uint64_t>& best) -> std::optional<std::uint64_t> {
    for (std::uint64_t c = lo; c < hi; ++c) {
      if (c >= best.load(std::memory_order_relaxed)) return std::nullopt;
      if (test(c)) return c;
    }
    return std::nullopt;
  };

  auto hit = least_hit_scan(std::uint64_t{1} << bits, control, scan_range);
  if (!hit) return std::nullopt;
  HomSubstitution s = vanishing_candidate_gf2(n, r, *hit);
  if (!substitution_vanishes(s)) {
    throw Error(Errc::InternalInconsistency, "bitmask test and expansion disagree");
  }
  return s;
}

// --- minimum covers ---

namespace {

struct CoverSearch {
  int n = 0;
  CoverMode mode = CoverMode::exact_once();
  int ne = 0;
  std::vector<BipartiteGraph> graphs;
  std::vector<std::uint32_t> gmask;
  std::vector<std::vector<int>> edge_graphs;
  std::vector<int> count;
  std::vector<int> threshold;
  std::vector<int> chosen;
  bool enumerate_all = false;
  std::optional<std::vector<int>> best;

  void init(int n_in, CoverMode mode_in) {
    n = n_in;
    mode = mode_in;
    ne = static_cast<int>(edge_count_total(n));
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t a = 1; a <= full; ++a) {
      const std::uint32_t rest = ~a & full;
      for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
        const std::uint32_t both = a | b;
        const std::uint32_t lowest = both & (~both + 1);
        if ((a & lowest) == 0) continue;  // canonical: overall least vertex in A
        std::vector<int> av, bv;
        for (int v = 0; v < n; ++v) {
          if (a & (std::uint32_t{1} << v)) av.push_back(v + 1);
          if (b & (std::uint32_t{1} << v)) bv.push_back(v + 1);
        }
        graphs.emplace_back(std::move(av), std::move(bv));
      }
    }
    std::sort(graphs.begin(), graphs.end());
    gmask.resize(graphs.size());
    edge_graphs.assign(static_cast<std::size_t>(ne), {});
    for (std::size_t g = 0; g < graphs.size(); ++g) {
      std::uint32_t mask = 0;
      for (int u : graphs[g].a()) {
        for (int v : graphs[g].b()) {
          mask |= std::uint32_t{1} << edge_index(u, v, n);
        }
      }
      gmask[g] = mask;
      for (int e = 0; e < ne; ++e) {
        if (mask & (std::uint32_t{1} << e)) edge_graphs[static_cast<std::size_t>(e)].push_back(static_cast<int>(g));
      }
    }
    count.assign(static_cast<std::size_t>(ne), 0);
    threshold.assign(static_cast<std::size_t>(ne), 0);
  }

  // Covers still needed on edge e; INT_MAX marks a dead overshoot.
  int needed(int e) const {
    const int c = count[static_cast<std::size_t>(e)];
    switch (mode.kind) {
      case CoverMode::Kind::ExactOnce:
        return c == 0 ? 1 : (c == 1 ? 0 : INT_MAX);
      case CoverMode::Kind::Odd:
        return c % 2 == 0 ? 1 : 0;
      case CoverMode::Kind::OneModP:
        return static_cast<int>(((1 - c) % mode.p + mode.p) % mode.p);
    }
    return 0;
  }

  bool allowed(int g) const {
    const std::uint32_t mask = gmask[static_cast<std::size_t>(g)];
    for (int e = 0; e < ne; ++e) {
      if ((mask & (std::uint32_t{1} << e)) && g < threshold[static_cast<std::size_t>(e)]) return false;
    }
    return true;
  }

  void apply(int g, int delta) {
    const std::uint32_t mask = gmask[static_cast<std::size_t>(g)];
    for (int e = 0; e < ne; ++e) {
      if (mask & (std::uint32_t{1} << e)) count[static_cast<std::size_t>(e)] += delta;
    }
  }

  // Branches on the first edge with unsatisfied residual multiplicity; the
  // chosen graph becomes the per-edge floor, which makes every multiset
  // reachable exactly once.
  bool dfs(int budget) {
    int branch_edge = -1;
    int worst = 0;
    for (int e = 0; e < ne; ++e) {
      const int need = needed(e);
      if (need == INT_MAX) return false;
      if (need > 0 && branch_edge < 0) branch_edge = e;
      worst = std::max(worst, need);
    }
    if (branch_edge < 0) {
      std::vector<int> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      if (!enumerate_all) {
        best = std::move(sorted);
        return true;
      }
      if (!best || sorted < *best) best = std::move(sorted);
      return false;
    }
    if (worst > budget) return false;
    const int saved = threshold[static_cast<std::size_t>(branch_edge)];
    for (int g : edge_graphs[static_cast<std::size_t>(branch_edge)]) {
      if (g < saved) continue;
      if (!allowed(g)) continue;
      if (mode.kind == CoverMode::Kind::ExactOnce) {
        bool overshoot = false;
        const std::uint32_t mask = gmask[static_cast<std::size_t>(g)];
        for (int e = 0; e < ne && !overshoot; ++e) {
          if ((mask & (std::uint32_t{1} << e)) && count[static_cast<std::size_t>(e)] >= 1) overshoot = true;
        }
        if (overshoot) continue;
      }
      threshold[static_cast<std::size_t>(branch_edge)] = g;
      apply(g, +1);
      chosen.push_back(g);
      const bool done = dfs(budget - 1);
      chosen.pop_back();
      apply(g, -1);
      if (done) {
        threshold[static_cast<std::size_t>(branch_edge)] = saved;
        return true;
      }
    }
    threshold[static_cast<std::size_t>(branch_edge)] = saved;
    return false;
  }
};

}  // namespace

std::optional<MinCoverResult> search_min_cover(int n, CoverMode mode, int r_max,
                                               const SearchGuards& guards) {
  if (n < 2) throw Error(Errc::NTooSmall, "need at least 2 vertices");
  if (n > guards.min_cover_max_n) {
    throw GuardError(Errc::SearchSpaceTooLarge,
                     "n = " + std::to_string(n) + " exceeds the minimum-cover guard of " +
                         std::to_string(guards.min_cover_max_n));
  }
  if (r_max < 0) throw Error(Errc::BadArgument, "r_max must be >= 0");

  CoverSearch cs;
  cs.init(n, mode);
  for (int r = 0; r <= r_max; ++r) {
    cs.enumerate_all = false;
    cs.best.reset();
    if (!cs.dfs(r)) continue;
    // exact minimum found; rerun collecting the lexicographically least witness
    cs.enumerate_all = true;
    cs.best.reset();
    cs.dfs(r);
    Cover witness;
    witness.n = n;
    for (int g : *cs.best) witness.graphs.push_back(cs.graphs[static_cast<std::size_t>(g)]);
    return MinCoverResult{r, std::move(witness)};
  }
  return std::nullopt;
}

// --- minimum GF(2) circuits ---

namespace {

struct CircuitSearch {
  int n = 0;
  bool homogeneous = false;
  int nm = 0;
  std::vector<std::uint32_t> pairprod;          // product polynomial per form pair
  std::vector<std::array<int, 2>> pair_forms;   // (f, g) masks per pair
  std::vector<std::vector<int>> mono_pairs;     // pairs hitting each monomial
  std::unordered_map<std::uint32_t, std::vector<int>> by_product;
  std::vector<int> threshold;
  std::vector<int> chosen;

  int mono_const() const { return 0; }
  int mono_lin(int i) const { return 1 + i; }
  int mono_sq(int i) const { return 1 + n + i; }
  int mono_cross(int i, int j) const {  // i < j
    return 1 + 2 * n + static_cast<int>(edge_index(i + 1, j + 1, n));
  }

  std::uint32_t product(std::uint32_t f, std::uint32_t g) const {
    std::uint32_t poly = 0;
    const std::uint32_t fc = homogeneous ? 0 : (f >> n) & 1;
    const std::uint32_t gc = homogeneous ? 0 : (g >> n) & 1;
    if (fc & gc) poly ^= std::uint32_t{1} << mono_const();
    for (int i = 0; i < n; ++i) {
      const std::uint32_t fi = (f >> i) & 1, gi = (g >> i) & 1;
      if ((fc & gi) ^ (gc & fi)) poly ^= std::uint32_t{1} << mono_lin(i);
      if (fi & gi) poly ^= std::uint32_t{1} << mono_sq(i);
      for (int j = i + 1; j < n; ++j) {
        const std::uint32_t fj = (f >> j) & 1, gj = (g >> j) & 1;
        if ((fi & gj) ^ (fj & gi)) poly ^= std::uint32_t{1} << mono_cross(i, j);
      }
    }
    return poly;
  }

  void init(int n_in, bool hom) {
    n = n_in;
    homogeneous = hom;
    nm = 1 + 2 * n + n * (n - 1) / 2;
    const std::uint32_t forms = std::uint32_t{1} << (n + (hom ? 0 : 1));
    for (std::uint32_t f = 1; f < forms; ++f) {
      for (std::uint32_t g = f; g < forms; ++g) {
        const std::uint32_t poly = product(f, g);
        if (poly == 0) continue;  // contributes nothing to any circuit
        const int idx = static_cast<int>(pairprod.size());
        pairprod.push_back(poly);
        pair_forms.push_back({static_cast<int>(f), static_cast<int>(g)});
        by_product[poly].push_back(idx);
      }
    }
    mono_pairs.assign(static_cast<std::size_t>(nm), {});
    for (std::size_t i = 0; i < pairprod.size(); ++i) {
      for (int m = 0; m < nm; ++m) {
        if (pairprod[i] & (std::uint32_t{1} << m)) mono_pairs[static_cast<std::size_t>(m)].push_back(static_cast<int>(i));
      }
    }
    threshold.assign(static_cast<std::size_t>(nm), 0);
  }

  bool pair_allowed(int idx) const {
    const std::uint32_t poly = pairprod[static_cast<std::size_t>(idx)];
    for (int m = 0; m < nm; ++m) {
      if ((poly & (std::uint32_t{1} << m)) && idx < threshold[static_cast<std::size_t>(m)]) return false;
    }
    return true;
  }

  bool dfs(std::uint32_t residual, int budget) {
    if (residual == 0) return true;
    if (budget == 0) return false;
    if (budget == 1) {
      auto it = by_product.find(residual);
      if (it == by_product.end()) return false;
      for (int idx : it->second) {
        if (pair_allowed(idx)) {
          chosen.push_back(idx);
          return true;
        }
      }
      return false;
    }
    const int m = __builtin_ctz(residual);
    const int saved = threshold[static_cast<std::size_t>(m)];
    for (int idx : mono_pairs[static_cast<std::size_t>(m)]) {
      if (idx < saved) continue;
      if (!pair_allowed(idx)) continue;
      threshold[static_cast<std::size_t>(m)] = idx;
      chosen.push_back(idx);
      if (dfs(residual ^ pairprod[static_cast<std::size_t>(idx)], budget - 1)) {
        threshold[static_cast<std::size_t>(m)] = saved;
        return true;
      }
      chosen.pop_back();
      threshold[static_cast<std::size_t>(m)] = saved;
    }
    return false;
  }
};

}  // namespace

std::optional<MinCircuitResult> search_min_circuit_gf2(int n, int r_max, bool homogeneous_only,
                                                       const SearchGuards& guards) {
  if (n < 0) throw Error(Errc::BadArgument, "n must be >= 0");
  const int n_cap = homogeneous_only ? guards.min_circuit_max_n_hom : guards.min_circuit_max_n_inhom;
  if (n > n_cap) {
    throw GuardError(Errc::SearchSpaceTooLarge,
                     "n = " + std::to_string(n) + " exceeds the circuit-search guard of " +
                         std::to_string(n_cap));
  }
  if (r_max > guards.min_circuit_max_r) {
    throw GuardError(Errc::SearchSpaceTooLarge,
                     "r_max = " + std::to_string(r_max) + " exceeds the circuit-search guard of " +
                         std::to_string(guards.min_circuit_max_r));
  }

  const FieldPtr F = Field::prime(2);
  CircuitSearch cs;
  cs.init(n, homogeneous_only);
  std::uint32_t target = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) target |= std::uint32_t{1} << cs.mono_cross(i, j);
  }

  for (int r = 0; r <= r_max; ++r) {
    cs.chosen.clear();
    if (!cs.dfs(target, r)) continue;
    Circuit witness;
    witness.field = F;
    witness.n = n;
    const FieldElem one = F->one();
    for (int idx : cs.chosen) {
      std::vector<LinearForm> gate;
      for (int fm : cs.pair_forms[static_cast<std::size_t>(idx)]) {
        LinearForm form(F, n);
        for (int i = 0; i < n; ++i) {
          if (fm & (1 << i)) form = form.with_coeff(i, one);
        }
        if (!homogeneous_only && (fm & (1 << n))) form = form.with_constant(one);
        gate.push_back(std::move(form));
      }
      witness.gates.push_back(std::move(gate));
    }
    return MinCircuitResult{r, std::move(witness)};
  }
  return std::nullopt;
}

// --- equidistant point systems ---

namespace {

struct EquidistantSpace {
  FieldPtr F;
  int k = 0;
  int dim = 0;
  int points = 0;  // k + 1
  std::uint64_t singles = 0;

  std::vector<FieldElem> decode(std::uint64_t idx) const {
    std::vector<FieldElem> v;
    v.reserve(static_cast<std::size_t>(dim));
    std::uint64_t power = 1;
    for (int i = 1; i < dim; ++i) power *= static_cast<std::uint64_t>(F->order());
    for (int i = 0; i < dim; ++i) {
      v.push_back(F->element_at(static_cast<std::int64_t>(idx / power)));
      idx %= power;
      power /= static_cast<std::uint64_t>(F->order());
    }
    return v;
  }
};

EquidistantSpace make_space(int k, const FieldPtr& F, EquidistantVariant variant,
                            const SearchGuards& guards) {
  if (!F->finite()) throw Error(Errc::BadArgument, "equidistant search needs a finite field");
  if (k < 1) throw Error(Errc::BadArgument, "k must be >= 1");
  EquidistantSpace sp;
  sp.F = F;
  sp.k = k;
  sp.dim = variant == EquidistantVariant::Even ? k - 1 : k;
  sp.points = k + 1;
  const std::uint64_t q = static_cast<std::uint64_t>(F->order());
  std::uint64_t singles = 1;
  std::uint64_t total = 1;
  for (int i = 0; i < sp.dim; ++i) singles *= q;
  for (int j = 0; j < sp.points; ++j) {
    for (int i = 0; i < sp.dim; ++i) {
      total *= q;
      if (total > static_cast<std::uint64_t>(guards.equidistant_max_space)) {
        throw GuardError(Errc::SearchSpaceTooLarge,
                         "q^(dim*(k+1)) exceeds the guard of " +
                             std::to_string(guards.equidistant_max_space));
      }
    }
  }
  sp.singles = singles;
  return sp;
}

}  // namespace

std::uint64_t equidistant_space_size(int k, const FieldPtr& F, EquidistantVariant variant,
                                     const SearchGuards& guards) {
  const EquidistantSpace sp = make_space(k, F, variant, guards);
  std::uint64_t total = 1;
  for (int j = 0; j < sp.points; ++j) total *= sp.singles;
  return total;
}

EquidistantSolution equidistant_candidate(int k, const FieldPtr& F, EquidistantVariant variant,
                                          std::uint64_t counter) {
  SearchGuards relaxed;
  relaxed.equidistant_max_space = std::int64_t{1} << 62;
  const EquidistantSpace sp = make_space(k, F, variant, relaxed);
  std::uint64_t power = 1;
  for (int j = 1; j < sp.points; ++j) power *= sp.singles;
  EquidistantSolution sol;
  for (int j = 0; j < sp.points; ++j) {
    sol.ys.push_back(sp.decode(counter / power));
    counter %= power;
    power /= sp.singles;
  }
  return sol;
}

std::optional<EquidistantSolution> search_equidistant_system(int k, const FieldPtr& F,
                                                             EquidistantVariant variant,
                                                             const SearchControl& control,
                                                             const SearchGuards& guards) {
  const EquidistantSpace sp = make_space(k, F, variant, guards);
  const FieldElem zero = F->zero();
  const FieldElem one = F->one();
  const FieldElem two = F->from_integer(2);

  // Precompute per-vector data; the diagonal equation filters singles.
  struct Single {
    std::vector<FieldElem> v;
    FieldElem sum;
    bool diag_ok;
  };
  std::vector<Single> singles;
  singles.reserve(static_cast<std::size_t>(sp.singles));
  auto bilinear = [&](const std::vector<FieldElem>& a, const FieldElem& asum,
                      const std::vector<FieldElem>& b, const FieldElem& bsum) {
    // v^T (J - I) w = (sum v)(sum w) - v.w
    FieldElem dot = zero;
    for (int i = 0; i < sp.dim; ++i) {
      dot = dot + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    }
    return asum * bsum - dot;
  };
  for (std::uint64_t idx = 0; idx < sp.singles; ++idx) {
    Single s{sp.decode(idx), zero, false};
    for (const auto& c : s.v) s.sum = s.sum + c;
    s.diag_ok = (bilinear(s.v, s.sum, s.v, s.sum) + two * s.sum).is_zero();
    singles.push_back(std::move(s));
  }

  // DFS over tuples in ascending flat order; cross equations check each new
  // vector against the prefix.
  std::uint64_t tail_power = 1;
  for (int j = 1; j < sp.points; ++j) tail_power *= sp.singles;

  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi,
                        const std::atomic<std::uint64_t>& best) -> std::optional<std::uint64_t> {
    // Blocks partition the first vector's index range; witnesses are compared
    // by their flat tuple counter.
    std::vector<std::uint64_t> prefix;
    std::optional<std::uint64_t> found;
    auto cross_ok = [&](std::uint64_t a, std::uint64_t b) {
      const Single& x = singles[static_cast<std::size_t>(a)];
      const Single& y = singles[static_cast<std::size_t>(b)];
      return (bilinear(x.v, x.sum, y.v, y.sum) + x.sum + y.sum + one).is_zero();
    };
    std::vector<std::uint64_t> powers(static_cast<std::size_t>(sp.points));
    powers[0] = tail_power;
    for (int j = 1; j < sp.points; ++j) powers[static_cast<std::size_t>(j)] = powers[static_cast<std::size_t>(j - 1)] / sp.singles;

    std::function<bool(int, std::uint64_t)> go = [&](int depth, std::uint64_t base) -> bool {
      if (depth == sp.points) {
        found = base;
        return true;
      }
      const std::uint64_t from = depth == 0 ? lo : 0;
      const std::uint64_t to = depth == 0 ? hi : sp.singles;
      for (std::uint64_t idx = from; idx < to; ++idx) {
        if (!singles[static_cast<std::size_t>(idx)].diag_ok) continue;
        const std::uint64_t floor = base + idx * powers[static_cast<std::size_t>(depth)];
        if (floor > best.load(std::memory_order_relaxed)) return false;
        bool ok = true;
        for (std::uint64_t prev : prefix) {
          if (!cross_ok(prev, idx)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        prefix.push_back(idx);
        if (go(depth + 1, floor)) return true;
        prefix.pop_back();
      }
      return false;
    };
    go(0, 0);
    return found;
  };

  auto hit = least_hit_scan(sp.singles, control, scan_range);
  if (!hit) return std::nullopt;
  EquidistantSolution sol = equidistant_candidate(k, F, variant, *hit);
  return sol;
}

const char* bound_model_name(BoundModel m) {
  switch (m) {
    case BoundModel::Graph: return "graph";
    case BoundModel::Homogeneous: return "homogeneous";
    case BoundModel::Inhomogeneous: return "inhomogeneous";
  }
  return "?";
}

}  // namespace bicover
