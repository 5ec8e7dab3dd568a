#pragma once

#include <optional>
#include <span>
#include <stop_token>
#include <string_view>
#include <vector>

#include "alphafactor/graph.hpp"

namespace alphafactor {

enum class Existence { yes, no, unknown };
enum class FactorMethod { cycle_space, naive, yan_kano_implied };

std::string_view to_string(Existence e);
std::string_view to_string(FactorMethod m);

/**
 * Outcome of an even-factor search. A `yes` carries a witness edge set except
 * when it was inferred from the odd-component condition (yan_kano_implied).
 */
struct FactorVerdict {
  Existence exists = Existence::unknown;
  std::optional<std::vector<Edge>> witness;
  FactorMethod method = FactorMethod::cycle_space;
  /// Largest cycle-space dimension over the components searched, -1 if none was searched.
  int dimension = -1;
};

/// True iff every vertex has nonzero even degree in `f`. Throws DomainError if f has a non-edge of g.
bool verify_even_factor(const Graph& g, std::span<const Edge> f);

inline constexpr int kDefaultDimBudget = 24;

/**
 * Exact search over the GF(2) cycle space of each component: fundamental
 * cycles of a BFS spanning forest, combined in Gray-code order so each step
 * toggles one cycle. Components are independent; the graph has an even factor
 * iff every component has one. A component whose dimension m - n + 1 exceeds
 * `dim_budget`, or a stop request, yields `unknown` unless another component
 * already decided `no`.
 */
FactorVerdict find_even_factor(const Graph& g, int dim_budget = kDefaultDimBudget, std::stop_token stop = {});

inline constexpr int kNaiveMaxEdges = 20;

/// Brute force over all 2^m edge subsets; m <= 20 or SizeError.
FactorVerdict naive_even_factor(const Graph& g);

struct YanKanoResult {
  enum class Status { holds, violated, unknown };
  Status status = Status::unknown;
  /// Lexicographically first S (as a sorted vertex list) with |S| >= 2 and o(G-S) >= |S|.
  std::optional<VertexSubset> violator;
};

std::string_view to_string(YanKanoResult::Status s);

inline constexpr int kDefaultSubsetBudget = 20;

/**
 * Tests o(G-S) < |S| for every S with |S| >= 2, in lexicographic order of the
 * sorted member list. Returns `unknown` when n exceeds `subset_budget`.
 * For even n, `holds` implies an even factor exists.
 */
YanKanoResult yan_kano_check(const Graph& g, int subset_budget = kDefaultSubsetBudget);

/**
 * Cheapest-first decision: a vertex of degree < 2 means no; for even n a
 * holding odd-component condition means yes; otherwise the cycle-space search.
 */
FactorVerdict decide_even_factor(const Graph& g, int dim_budget = kDefaultDimBudget,
                                 int subset_budget = kDefaultSubsetBudget, std::stop_token stop = {});

}  // namespace alphafactor
