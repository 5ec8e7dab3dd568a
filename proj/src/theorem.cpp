#include "alphafactor/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "alphafactor/errors.hpp"
#include "alphafactor/quotient.hpp"
#include "alphafactor/report.hpp"

namespace alphafactor {

double min_order(Alpha a, int delta) {
  a.require_below_one();
  if (delta < 2) throw DomainError("minimum degree must be at least 2");
  const double al = a.value();
  if (al <= 0.5) return 7.0 * delta - 7.0;
  if (al <= 2.0 / 3.0) return 8.0 * delta - 8.0;
  return (3.0 * delta - 3.0) / (1.0 - al);
}

int min_even_order(Alpha a, int delta) {
  // Tolerate representation error in (3d-3)/(1-alpha) landing just above an integer.
  int n = static_cast<int>(std::ceil(min_order(a, delta) - 1e-9));
  return n % 2 == 0 ? n : n + 1;
}

ExtremalSpec ExtremalSpec::make(int n, int delta) {
  if (delta < 2) throw DomainError("extremal spec needs delta >= 2");
  if (n % 2 != 0) throw DomainError("extremal spec needs even n");
  if (n < 2 * delta) throw DomainError("extremal spec needs n >= 2 delta");
  return {n, delta};
}

JoinUnionSpec ExtremalSpec::join_union() const {
  std::vector<int> parts{n - 2 * delta + 1};
  parts.insert(parts.end(), static_cast<std::size_t>(delta - 1), 1);
  return JoinUnionSpec(delta, std::move(parts));
}

Graph build_extremal(const ExtremalSpec& spec) {
  return build_join_union(ExtremalSpec::make(spec.n, spec.delta).join_union());
}

double rho_star(const ExtremalSpec& spec, Alpha a) {
  a.require_below_one();
  const ExtremalSpec checked = ExtremalSpec::make(spec.n, spec.delta);
  return largest_real_root(charpoly_join(checked.n, checked.delta, a), checked.n);
}

std::optional<ExtremalSpec> recognize_extremal(const Graph& g) {
  const int n = g.order();
  const int delta = g.min_degree();
  if (n == 0 || n % 2 != 0 || delta < 2 || n < 2 * delta) return std::nullopt;

  std::vector<Vertex> rest;
  int universal = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) ++universal;
    else rest.push_back(v);
  }
  if (universal != delta) return std::nullopt;

  // Within G - S every vertex keeps degree(v) - delta; components must be
  // one clique of order n-2delta+1 and delta-1 isolated vertices.
  int clique_vertices = 0;
  int isolated = 0;
  for (Vertex v : rest) {
    const int inner = g.degree(v) - delta;
    if (inner == 0) ++isolated;
    else if (inner == n - 2 * delta) ++clique_vertices;
    else return std::nullopt;
  }
  if (n - 2 * delta + 1 == 1) {
    // K_delta v delta K_1: the single-vertex clique is isolated too.
    if (isolated != delta || clique_vertices != 0) return std::nullopt;
    return ExtremalSpec{n, delta};
  }
  if (isolated != delta - 1 || clique_vertices != n - 2 * delta + 1) return std::nullopt;
  for (Vertex u : rest)
    for (Vertex v : rest)
      if (u < v && g.degree(u) > delta && g.degree(v) > delta && !g.has_edge(u, v)) return std::nullopt;
  return ExtremalSpec{n, delta};
}

std::vector<VerdictRecord> classify_alphas(const Graph& g, std::span<const Alpha> alphas, const ClassifyOptions& opts,
                                           const std::string& id) {
  const int n = g.order();
  const int delta = g.min_degree();
  std::string shared_skip;
  if (n == 0) shared_skip = "empty graph";
  else if (!g.is_connected()) shared_skip = "graph is disconnected";
  else if (delta < 2) shared_skip = "minimum degree below 2";
  else if (n % 2 != 0) shared_skip = "odd order";

  std::optional<FactorVerdict> factor;
  std::optional<bool> extremal;
  std::vector<VerdictRecord> out;
  for (const Alpha& a : alphas) {
    VerdictRecord rec;
    rec.id = id;
    rec.n = n;
    rec.delta = delta;
    rec.alpha = a.value();
    rec.skip_reason = shared_skip;
    if (rec.skip_reason.empty() && !(a.value() < 1.0)) rec.skip_reason = "alpha must be below 1";
    if (rec.skip_reason.empty()) {
      const double threshold = min_order(a, delta);
      if (n < threshold - 1e-9) rec.skip_reason = "order below threshold " + format_number(threshold);
    }
    if (!rec.skip_reason.empty()) {
      out.push_back(std::move(rec));
      continue;
    }
    rec.applicable = true;
    rec.rho_g = perron_pair(g, a, opts.tol).radius;
    rec.rho_star = rho_star(ExtremalSpec{n, delta}, a);
    rec.meets_bound = rec.rho_g >= rec.rho_star - opts.eps;
    if (!extremal) {
      const auto spec = recognize_extremal(g);
      extremal = spec && spec->n == n && spec->delta == delta;
    }
    rec.is_extremal = *extremal;
    if (!factor) factor = decide_even_factor(g, opts.dim_budget, opts.subset_budget);
    rec.factor = *factor;
    rec.counterexample = rec.meets_bound && !rec.is_extremal && rec.factor.exists == Existence::no;
    out.push_back(std::move(rec));
  }
  return out;
}

VerdictRecord classify(const Graph& g, Alpha a, const ClassifyOptions& opts, std::string id) {
  const Alpha alphas[] = {a};
  return std::move(classify_alphas(g, alphas, opts, id).front());
}

double f_case1(int n, int delta, int s, Alpha a, double x) {
  const double al = a.value();
  const double a2 = al * al;
  const double nn = n;
  const double d = delta;
  const double ss = s;
  const double k1 = 2.0 * a2 - 2.0 * al + 1.0;
  const double k2 = a2 - 3.0 * al + 1.0;
  const double k3 = 3.0 * a2 - 5.0 * al + 2.0;
  const double k4 = 3.0 * a2 - 6.0 * al + 2.0;
  return (1.0 - al) * x * x + (a2 * nn - ss - d + 2.0 * (1.0 - al)) * x - a2 * nn * nn + k1 * ss * nn + k1 * d * nn -
         k2 * nn - k3 * ss * ss - k3 * ss * d + k4 * ss - k3 * d * d + k4 * d;
}

SubcaseScanReport subcase_positivity_scan(std::span<const Alpha> alphas, int delta_min, int delta_max, int margin_n) {
  if (delta_min < 2 || delta_max < delta_min) throw DomainError("delta range must satisfy 2 <= min <= max");
  if (margin_n < 0) throw DomainError("order margin must be nonnegative");
  SubcaseScanReport report;
  for (const Alpha& a : alphas) {
    for (int delta = delta_min; delta <= delta_max; ++delta) {
      const double lo = min_order(a, delta);
      for (int n = min_even_order(a, delta); n <= lo + margin_n + 1e-9; n += 2) {
        for (int s = delta + 1; s <= n / 2; ++s) {
          ++report.points;
          const double value = f_case1(n, delta, s, a, n - delta);
          if (!(value > kPositivityMargin * n * n)) report.violations.push_back({a.value(), delta, n, s, value});
        }
      }
    }
  }
  return report;
}

Case3Surgery case3_surgery(int n, int delta, int s) {
  if (!(s >= 2 && s <= delta - 1)) throw DomainError("case-3 surgery needs 2 <= s <= delta - 1");
  if (n % 2 != 0) throw DomainError("case-3 surgery needs even n");
  const int k = delta + 1 - s;
  const int m = n - s - k * (s - 1);
  if (m < k) throw DomainError("case-3 surgery needs the large clique to be at least delta + 1 - s");

  Case3Surgery out;
  out.inner = m;
  std::vector<int> parts{m};
  parts.insert(parts.end(), static_cast<std::size_t>(s - 1), k);
  out.g3 = build_join_union(JoinUnionSpec(s, std::move(parts)));

  // 1-based indices as in the construction.
  auto w = [&](int r) { return s + r - 1; };
  auto v = [&](int i, int j) { return s + m + (i - 1) * k + (j - 1); };

  for (int j = 1; j <= k; ++j)
    for (int jj = j + 1; jj <= k; ++jj) out.removed.push_back(Edge::of(v(1, j), v(1, jj)));
  for (int i = 2; i <= s - 1; ++i)
    for (int j = 2; j <= k; ++j) out.removed.push_back(Edge::of(v(i, 1), v(i, j)));

  for (int i = 1; i <= s - 1; ++i)
    for (int j = 1; j <= k; ++j)
      for (int r = 1; r <= delta - s; ++r) out.added.push_back(Edge::of(v(i, j), w(r)));
  for (int i = 2; i <= s - 1; ++i)
    for (int j = 2; j <= k; ++j)
      for (int r = delta - s + 1; r <= m; ++r) out.added.push_back(Edge::of(v(i, j), w(r)));

  out.g4 = out.g3;
  for (const Edge& e : out.added) {
    if (out.g3.has_edge(e.u, e.v)) throw PropertyViolation("added edge already present in G3");
    out.g4.add_edge(e.u, e.v);
  }
  for (const Edge& e : out.removed) {
    if (!out.g3.has_edge(e.u, e.v)) throw PropertyViolation("removed edge missing from G3");
    out.g4.remove_edge(e.u, e.v);
  }

  const std::int64_t pairs = static_cast<std::int64_t>(k) * (k - 1) / 2;
  out.edge_delta_formula = (2 * s - 3) * pairs + static_cast<std::int64_t>(m - delta + s - 1) * (s - 2) * (delta - s);
  out.edge_delta_constructed = static_cast<std::int64_t>(out.g4.size()) - static_cast<std::int64_t>(out.g3.size());
  return out;
}

Case3Gap case3_radius_gap(int n, int delta, int s, Alpha a) {
  a.require_below_one();
  const Case3Surgery surgery = case3_surgery(n, delta, s);
  const SpectralResult r3 = perron_pair(surgery.g3, a);
  const SpectralResult r4 = perron_pair(surgery.g4, a);
  Case3Gap out;
  out.rho_g3 = r3.radius;
  out.rho_g4 = r4.radius;
  out.gap = r4.radius - r3.radius;
  out.quadratic_delta = quadratic_form_delta(surgery.g4, surgery.g3, r3.perron, a);
  return out;
}

MergeBound merge_bound_check(const JoinUnionSpec& spec, int p, Alpha a) {
  a.require_below_one();
  if (p < 1) throw DomainError("minimum part size p must be at least 1");
  const auto& parts = spec.parts();
  if (parts.empty()) throw DomainError("merge check needs at least one part");
  if (parts.back() < p) throw DomainError("every part must be at least p");
  const int t = spec.part_count();
  const int first = spec.order() - spec.join_size() - p * (t - 1);

  std::vector<int> merged_parts{first};
  merged_parts.insert(merged_parts.end(), static_cast<std::size_t>(t - 1), p);
  MergeBound out;
  out.merged = JoinUnionSpec(spec.join_size(), std::move(merged_parts));
  out.canonical = out.merged == spec;
  out.rho_spec = perron_pair(build_join_union(spec), a).radius;
  out.rho_merged = out.canonical ? out.rho_spec : perron_pair(build_join_union(out.merged), a).radius;
  return out;
}

}  // namespace alphafactor
