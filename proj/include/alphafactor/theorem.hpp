#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alphafactor/factor.hpp"
#include "alphafactor/graph.hpp"
#include "alphafactor/spectral.hpp"

namespace alphafactor {

/**
 * Smallest even order covered by the spectral even-factor condition:
 * 7d-7 for alpha in [0,1/2], 8d-8 for alpha in (1/2,2/3], (3d-3)/(1-alpha)
 * for alpha in (2/3,1). Throws DomainError for alpha = 1 or delta < 2.
 */
double min_order(Alpha a, int delta);

/// Smallest even integer n with n >= min_order(a, delta).
int min_even_order(Alpha a, int delta);

/// G*(n, delta) = K_delta v (K_{n-2delta+1} u (delta-1)K_1); n even, delta >= 2, n >= 2 delta.
struct ExtremalSpec {
  int n = 0;
  int delta = 0;

  static ExtremalSpec make(int n, int delta);
  JoinUnionSpec join_union() const;
  friend bool operator==(const ExtremalSpec&, const ExtremalSpec&) = default;
};

Graph build_extremal(const ExtremalSpec& spec);

/// rho_alpha(G*) as the largest root of its quotient cubic, bracketed by n.
double rho_star(const ExtremalSpec& spec, Alpha a);

/**
 * Returns (n, delta) iff g is isomorphic to G*(n, delta): with delta = min
 * degree, exactly delta vertices are universal and removing them leaves one
 * clique on n-2delta+1 vertices plus delta-1 isolated vertices.
 */
std::optional<ExtremalSpec> recognize_extremal(const Graph& g);

struct ClassifyOptions {
  double eps = 1e-9;
  double tol = kDefaultSpectralTol;
  int dim_budget = kDefaultDimBudget;
  int subset_budget = kDefaultSubsetBudget;
};

/// Outcome of checking one graph against the spectral even-factor condition at one alpha.
struct VerdictRecord {
  std::string id;
  int n = 0;
  int delta = 0;
  double alpha = 0.0;
  bool applicable = false;
  std::string skip_reason;  // set when !applicable
  double rho_g = 0.0;
  double rho_star = 0.0;
  bool meets_bound = false;
  bool is_extremal = false;
  FactorVerdict factor;
  /// meets_bound && !is_extremal && factor.exists == no.
  bool counterexample = false;
};

VerdictRecord classify(const Graph& g, Alpha a, const ClassifyOptions& opts = {}, std::string id = {});

/// classify() at several alphas, sharing one even-factor decision across them.
std::vector<VerdictRecord> classify_alphas(const Graph& g, std::span<const Alpha> alphas,
                                           const ClassifyOptions& opts = {}, const std::string& id = {});

/// The auxiliary quadratic f(x) with phi_{B2}(x) - phi_{B*}(x) = (s - delta) f(x).
double f_case1(int n, int delta, int s, Alpha a, double x);

struct SubcaseViolation {
  double alpha = 0.0;
  int delta = 0;
  int n = 0;
  int s = 0;
  double value = 0.0;
};

struct SubcaseScanReport {
  std::size_t points = 0;
  std::vector<SubcaseViolation> violations;
};

/// A point passes when f(n - delta) > kPositivityMargin * n^2 (rounding-safe strict positivity).
inline constexpr double kPositivityMargin = 1e-12;

/**
 * For each alpha, delta in [delta_min, delta_max], even n in
 * [min_order, min_order + margin_n] and s in [delta+1, n/2], checks
 * f_case1(n, delta, s, alpha, n - delta) > 0.
 */
SubcaseScanReport subcase_positivity_scan(std::span<const Alpha> alphas, int delta_min, int delta_max, int margin_n);

/**
 * G3 = K_s v (K_m u (s-1)K_{delta+1-s}), m = n - s - (delta+1-s)(s-1), laid
 * out as join block, big clique w_1..w_m, then the small cliques; G4 = G3 plus
 * E_added minus E_removed.
 */
struct Case3Surgery {
  Graph g3;
  Graph g4;
  int inner = 0;  // m
  std::vector<Edge> removed;
  std::vector<Edge> added;
  std::int64_t edge_delta_formula = 0;      // (2s-3)C(delta+1-s,2) + (m-delta+s-1)(s-2)(delta-s)
  std::int64_t edge_delta_constructed = 0;  // |added| - |removed|
};

Case3Surgery case3_surgery(int n, int delta, int s);

struct Case3Gap {
  double rho_g3 = 0.0;
  double rho_g4 = 0.0;
  double gap = 0.0;                // rho_g4 - rho_g3
  double quadratic_delta = 0.0;    // X^T(A(G4) - A(G3))X at the Perron vector X of G3
};

Case3Gap case3_radius_gap(int n, int delta, int s, Alpha a);

struct MergeBound {
  double rho_spec = 0.0;
  double rho_merged = 0.0;
  bool canonical = false;  // spec already equals the merged shape
  JoinUnionSpec merged;
};

/**
 * rho of K_s v (K_{n_1} u ... u K_{n_t}) against K_s v (K_{n-s-p(t-1)} u (t-1)K_p).
 * Requires every part >= p >= 1.
 */
MergeBound merge_bound_check(const JoinUnionSpec& spec, int p, Alpha a);

}  // namespace alphafactor
