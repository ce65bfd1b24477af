#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>

#include "bicover/circuits.hpp"

namespace bicover {

// Homogeneous forms l_1..l_r in the free variables X_1..X_{n-r}; substituting
// them for the last r variables of S_n^2 is the object under study.
struct HomSubstitution {
  FieldPtr field;
  int n = 0;
  int r = 0;
  std::vector<std::vector<FieldElem>> rows;  // r rows of n-r coefficients

  int free_vars() const { return n - r; }
  std::vector<FieldElem> column(int j) const;  // y_j, 0-based
};

// Expands S_n^2(X_1..X_{n-r}, l_1..l_r) exactly and tests for zero.
bool substitution_vanishes(const HomSubstitution& s);

// The per-column and per-pair coefficient equations equivalent to vanishing:
// diagonal 1^T y_j + y_j^T U y_j = 0, cross 1 + 1^T y_i + 1^T y_j +
// y_i^T (J - I) y_j = 0, plus the doubled diagonal variant when char != 2.
struct EquationReport {
  std::vector<bool> diag_ok;
  std::vector<std::array<int, 2>> pairs;  // (i, j), i < j, 0-based
  std::vector<bool> cross_ok;
  std::vector<bool> diag_alt_ok;  // empty in characteristic 2
  bool ok = false;
};

EquationReport column_equations(const HomSubstitution& s);

// From a circuit computing S_n^2 with r < n gates, extracts a vanishing
// substitution by zeroing a maximal consistent set of forms, one per gate,
// and reading the bound variables off the solution space.
HomSubstitution extract_vanishing_substitution(const Circuit& c);

// Integer-lift diagnostics of a vanishing GF(2) substitution: column weights
// mod 4, pairwise dot parities, the odd/even weight partition and the GF(2)
// dependency structure.
struct Gf2Diagnostics {
  std::vector<int> weights_mod4;
  std::vector<bool> weight_ok;  // weight is 0 or 3 mod 4
  std::vector<std::array<int, 2>> pairs;
  std::vector<int> cross_parity;
  std::vector<bool> cross_ok;  // y_i . y_j = (1+|y_i|)(1+|y_j|) mod 2
  int odd_count = 0;           // s
  int even_count = 0;          // t

  enum class Dependency { Independent, EvenSumOnly, Other };
  Dependency dependency = Dependency::Independent;
  std::vector<int> alpha;  // dependency coefficients on odd-weight columns
  std::vector<int> beta;   // dependency coefficients on even-weight columns
  bool claim_ok = false;   // dependency is absent or exactly sum-of-evens with t odd
  bool ok = false;
};

Gf2Diagnostics gf2_diagnostics(const HomSubstitution& s);

// Dimension of the span of all first-order partial derivatives.
long long partial_derivative_span_dim(const SparsePoly& p);

// Explicit search budgets. Exceeding one raises GuardError, never truncates.
struct SearchGuards {
  int vanishing_max_bits = 30;  // r * (n-r)
  std::int64_t equidistant_max_space = std::int64_t{1} << 26;
  int min_cover_max_n = 8;
  int min_circuit_max_n_inhom = 5;
  int min_circuit_max_n_hom = 6;
  int min_circuit_max_r = 3;

  // Applies BICOVER_GUARD_OVERRIDE ("key=value,key=value" with keys
  // vanishing_bits, equidistant_space, min_cover_n, min_circuit_n_inhom,
  // min_circuit_n_hom, min_circuit_r).
  static SearchGuards from_env();
};

// Worker partitioning and checkpoint plumbing for the flat enumerations.
// The enumeration space is cut into block_count contiguous blocks; workers
// pick blocks in order and results are aggregated by least witness, so the
// outcome does not depend on the worker count.
struct SearchControl {
  int workers = 1;
  std::uint64_t block_count = 0;  // 0 = automatic
  const std::set<std::uint64_t>* completed = nullptr;            // blocks to skip on resume
  std::optional<std::uint64_t> known_best;                        // resume bound
  std::function<void(std::uint64_t, std::optional<std::uint64_t>)> on_block;
};

// Exhaustive scan of all r x (n-r) GF(2) matrices in lexicographic order
// (row-major, first entry most significant); returns the first vanishing
// substitution or nothing.
std::optional<HomSubstitution> search_vanishing_gf2(int n, int r,
                                                    const SearchControl& control = {},
                                                    const SearchGuards& guards = {});
// Decodes an enumeration counter into its candidate matrix.
HomSubstitution vanishing_candidate_gf2(int n, int r, std::uint64_t counter);

struct MinCoverResult {
  int size;
  Cover witness;
};

// Exact minimum number of bipartite graphs covering K_n in the given mode,
// over covers of at most r_max graphs; the witness is the lexicographically
// smallest cover of minimum size. Returns nothing if r_max is too small.
std::optional<MinCoverResult> search_min_cover(int n, CoverMode mode, int r_max,
                                               const SearchGuards& guards = {});

struct MinCircuitResult {
  int gates;
  Circuit witness;
};

// Exact minimum number of two-form gates of a GF(2) circuit for S_n^2,
// searching products of pairs of linear forms up to r_max gates.
std::optional<MinCircuitResult> search_min_circuit_gf2(int n, int r_max, bool homogeneous_only,
                                                       const SearchGuards& guards = {});

// The two equidistant-point systems behind the characteristic-not-2 lower
// bounds, with the bilinear form v^T (J - I) w: Even places k+1 vectors in
// F^{k-1}, Odd places k+1 vectors in F^k.
enum class EquidistantVariant { Even, Odd };

struct EquidistantSolution {
  std::vector<std::vector<FieldElem>> ys;
};

std::optional<EquidistantSolution> search_equidistant_system(int k, const FieldPtr& F,
                                                             EquidistantVariant variant,
                                                             const SearchControl& control = {},
                                                             const SearchGuards& guards = {});
std::uint64_t equidistant_space_size(int k, const FieldPtr& F, EquidistantVariant variant,
                                     const SearchGuards& guards = {});
EquidistantSolution equidistant_candidate(int k, const FieldPtr& F, EquidistantVariant variant,
                                          std::uint64_t counter);

// --- predicted bounds ---

enum class FieldFamily { Gf2, GfOddPrimePower, RationalReal, Complex };

struct FamilySpec {
  FieldFamily family;
  std::int64_t p = 0;  // GfOddPrimePower only
  int r = 0;
};

enum class BoundModel { Graph, Homogeneous, Inhomogeneous };

struct BoundSide {
  long long value;
  BoundModel model;
  bool for_all_n;  // false = holds for infinitely many n only
};

struct BoundsEntry {
  std::string family;
  long long n;
  BoundSide lower;                     // guaranteed for every n
  std::optional<BoundSide> lower_io;   // stronger bound for infinitely many n
  BoundSide upper;                     // best bound valid for every n
  std::optional<BoundSide> upper_io;   // stronger bound for infinitely many n
  BoundSide fallback_upper;            // n - 1 from the star decomposition
  std::string citation;
};

BoundsEntry predicted_bounds(const FamilySpec& family, long long n);

const char* bound_model_name(BoundModel m);

}  // namespace bicover
