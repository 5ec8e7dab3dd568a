#include "alphafactor/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "alphafactor/corpus.hpp"
#include "alphafactor/errors.hpp"
#include "alphafactor/factor.hpp"
#include "alphafactor/graph6.hpp"
#include "alphafactor/quotient.hpp"
#include "alphafactor/report.hpp"
#include "alphafactor/spectral.hpp"
#include "alphafactor/theorem.hpp"

namespace alphafactor::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text) {
  std::size_t pos = 0;
  const double v = std::stod(text, &pos);
  if (pos != text.size()) throw std::invalid_argument(text);
  return v;
}

/// Accepts decimals and exact fractions such as "2/3".
double parse_alpha_text(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_real(text);
    const double num = parse_real(text.substr(0, slash));
    const double den = parse_real(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument(text);
    return num / den;
  } catch (const std::exception&) {
    throw UsageError("invalid alpha '" + text + "'");
  }
}

std::vector<Alpha> parse_alphas(const std::vector<std::string>& texts, bool below_one) {
  std::vector<Alpha> out;
  for (const auto& t : texts) {
    const double v = parse_alpha_text(t);
    if (!(v >= 0.0 && (below_one ? v < 1.0 : v <= 1.0)))
      throw UsageError("alpha " + t + (below_one ? " outside [0,1)" : " outside [0,1]"));
    out.emplace_back(v);
  }
  return out;
}

struct GraphInput {
  std::string graph6;
  std::string path;
};

void add_graph_input(CLI::App* sub, GraphInput& in) {
  auto* g = sub->add_option("--graph6", in.graph6, "Graph as one graph6 record (order <= 62)");
  auto* f = sub->add_option("--input", in.path,
                            "File of graph6 records, one per LF-terminated line; a leading '>>graph6<<' is skipped");
  g->excludes(f);
}

std::vector<CorpusItem> load_graphs(const GraphInput& in) {
  if (!in.graph6.empty()) {
    try {
      return {{in.graph6, parse_graph6(in.graph6)}};
    } catch (const ParseError& e) {
      throw InputError(std::string("--graph6: ") + e.what());
    }
  }
  if (in.path.empty()) throw UsageError("one of --graph6 or --input is required");
  std::ifstream file(in.path);
  if (!file) throw InputError("cannot open " + in.path);
  std::vector<CorpusItem> items;
  for (auto& rec : read_graph6(file)) {
    if (!rec.graph) throw InputError(in.path + ":" + std::to_string(rec.line) + ": " + rec.error);
    items.push_back({rec.text, std::move(*rec.graph)});
  }
  return items;
}

JoinUnionSpec parse_join_union(const std::string& text) {
  // "s:n1,n2,..."
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--join-union expects s:n1,n2,...");
  try {
    const int s = std::stoi(text.substr(0, colon));
    std::vector<int> parts;
    std::stringstream ss(text.substr(colon + 1));
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) parts.push_back(std::stoi(item));
    return JoinUnionSpec(s, std::move(parts));
  } catch (const DomainError& e) {
    throw UsageError(std::string("--join-union: ") + e.what());
  } catch (const std::exception&) {
    throw UsageError("--join-union expects s:n1,n2,...");
  }
}

VertexPartition parse_cells(const std::string& text) {
  // "0,1;2,3,4;5"
  std::vector<std::vector<Vertex>> cells;
  std::stringstream ss(text);
  try {
    for (std::string cell; std::getline(ss, cell, ';');) {
      std::vector<Vertex> members;
      std::stringstream cs(cell);
      for (std::string item; std::getline(cs, item, ',');)
        if (!item.empty()) members.push_back(std::stoi(item));
      cells.push_back(std::move(members));
    }
    return VertexPartition(std::move(cells));
  } catch (const DomainError& e) {
    throw UsageError(std::string("--cells: ") + e.what());
  } catch (const std::exception&) {
    throw UsageError("--cells expects groups like 0,1;2,3,4;5");
  }
}

std::string join_numbers(const std::vector<double>& xs) {
  std::string line;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) line += ' ';
    line += format_number(xs[i]);
  }
  return line;
}

std::string describe_edges(const std::vector<Edge>& edges) {
  std::string s;
  for (const Edge& e : edges) s += ' ' + std::to_string(e.u) + '-' + std::to_string(e.v);
  return s;
}

unsigned default_jobs() { return 1; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral even-factor toolkit: A_alpha spectral radii, quotient cubics, even-factor oracles, "
               "and corpus verification of the spectral even-factor condition."};
  app.name("alphafactor");
  app.require_subcommand(1);
  app.footer("Numbers are printed with 12 significant digits. Alphas accept decimals or fractions (2/3).\n"
             "Exit codes: 0 ok, 1 counterexample or violated property, 2 usage error, 3 input error.");

  GraphInput gin;
  std::vector<std::string> alpha_texts{"0"};
  double tol = kDefaultSpectralTol;
  int dim_budget = kDefaultDimBudget;
  int subset_budget = kDefaultSubsetBudget;
  double eps = 1e-9;

  auto add_alphas = [&](CLI::App* sub, const std::string& range) {
    sub->add_option("--alpha", alpha_texts, "Alpha value in " + range + "; repeatable")->capture_default_str();
  };

  auto* radius = app.add_subcommand("radius", "Print rho_alpha(G), one line per (graph, alpha)");
  add_graph_input(radius, gin);
  add_alphas(radius, "[0,1]");
  radius->add_option("--tol", tol, "Eigen-residual tolerance of the power iteration")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Print all A_alpha eigenvalues (nonincreasing), one line per (graph, alpha)");
  add_graph_input(spectrum, gin);
  add_alphas(spectrum, "[0,1]");
  spectrum->add_option("--tol", tol, "Off-diagonal Frobenius tolerance of the Jacobi solver")->capture_default_str();

  std::string join_union_text;
  std::string cells_text;
  auto* quotient = app.add_subcommand("quotient", "Print the A_alpha quotient matrix of a vertex partition");
  add_graph_input(quotient, gin);
  quotient->add_option("--join-union", join_union_text, "Build K_s v (K_n1 u ... u K_nt) from 's:n1,n2,...' "
                                                        "and use its natural partition");
  quotient->add_option("--cells", cells_text, "Partition as ';'-separated cells of ','-separated vertices, "
                                              "e.g. 0,1;2,3,4;5 (required with --graph6/--input)");
  add_alphas(quotient, "[0,1]");

  int n_param = 0;
  int s_param = 0;
  int delta_param = 0;
  auto* charpoly = app.add_subcommand("charpoly", "Coefficients c2 c1 c0 of the quotient cubic of "
                                                  "K_s v (K_{n-2s+1} u (s-1)K_1) and its largest root");
  charpoly->add_option("--n", n_param, "Order n (n >= 2s)")->required();
  charpoly->add_option("--s", s_param, "Join size s (s >= 2)")->required();
  add_alphas(charpoly, "[0,1]");

  bool use_naive = false;
  auto* evenfactor = app.add_subcommand("evenfactor", "Decide even-factor existence: '<yes|no|unknown> <method> [edges]'");
  add_graph_input(evenfactor, gin);
  evenfactor->add_option("--budget", dim_budget, "Largest cycle-space dimension searched")->capture_default_str();
  evenfactor->add_flag("--naive", use_naive, "Use brute force over all edge subsets (m <= 20)");

  auto* yankano = app.add_subcommand("yankano", "Check o(G-S) < |S| for all |S| >= 2: 'holds', 'violated <S>' or 'unknown'");
  add_graph_input(yankano, gin);
  yankano->add_option("--budget", subset_budget, "Largest order scanned exhaustively")->capture_default_str();

  bool emit_graph6 = false;
  std::vector<std::string> extremal_alphas;
  auto* extremal = app.add_subcommand("extremal", "Build K_delta v (K_{n-2delta+1} u (delta-1)K_1)");
  extremal->add_option("--n", n_param, "Even order n >= 2 delta")->required();
  extremal->add_option("--delta", delta_param, "Minimum degree delta >= 2")->required();
  extremal->add_flag("--emit-graph6", emit_graph6, "Print the graph6 record");
  extremal->add_option("--alpha", extremal_alphas, "Also print rho_alpha of the graph, alpha in [0,1); repeatable");

  auto* classify_cmd = app.add_subcommand("classify", "Classify graphs against the spectral even-factor condition; "
                                                      "JSON lines on stdout");
  add_graph_input(classify_cmd, gin);
  add_alphas(classify_cmd, "[0,1)");
  classify_cmd->add_option("--eps", eps, "Tolerance of the rho comparison")->capture_default_str();
  classify_cmd->add_option("--budget", dim_budget, "Largest cycle-space dimension searched")->capture_default_str();

  std::string out_path;
  std::string summary_path;
  unsigned jobs = default_jobs();
  auto* verify = app.add_subcommand("verify", "Classify a graph6 corpus; CSV summary "
                                              "(alpha,applicable,meets_bound,extremal,no_factor,counterexamples,unknown)");
  verify->add_option("--input", gin.path, "Corpus file of graph6 records")->required();
  add_alphas(verify, "[0,1)");
  verify->add_option("--eps", eps, "Tolerance of the rho comparison")->capture_default_str();
  verify->add_option("--budget", dim_budget, "Largest cycle-space dimension searched")->capture_default_str();
  verify->add_option("--out", out_path, "Write one JSON verdict per line to this file");
  verify->add_option("--summary", summary_path, "Write the CSV summary here instead of stdout");
  verify->add_option("--jobs", jobs, "Worker threads")->envname("ALPHAFACTOR_JOBS")->capture_default_str();

  std::vector<std::string> scan_alphas{"0", "0.25", "0.5", "0.6", "2/3", "0.75", "0.9"};
  int delta_min = 2;
  int delta_max = 6;
  int margin = 10;
  auto* scan = app.add_subcommand("scan-subcases", "Check f(n-delta) > 0 for s in [delta+1, n/2] over a grid");
  scan->add_option("--alpha", scan_alphas, "Alpha values in [0,1); repeatable")->capture_default_str();
  scan->add_option("--delta-min", delta_min, "Smallest delta")->capture_default_str();
  scan->add_option("--delta-max", delta_max, "Largest delta")->capture_default_str();
  scan->add_option("--margin", margin, "Even n scanned from the threshold up to threshold + margin")->capture_default_str();

  auto* case3 = app.add_subcommand("case3", "Build G3/G4 for s <= delta-1 and compare their A_alpha radii");
  case3->add_option("--n", n_param, "Even order n")->required();
  case3->add_option("--delta", delta_param, "Minimum degree delta")->required();
  case3->add_option("--s", s_param, "Cut size s, 2 <= s <= delta-1")->required();
  add_alphas(case3, "[0,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (radius->parsed()) {
      const auto alphas = parse_alphas(alpha_texts, false);
      for (const auto& item : load_graphs(gin))
        for (const Alpha& a : alphas) out << format_number(perron_pair(item.graph, a, tol).radius) << '\n';
      return kExitOk;
    }
    if (spectrum->parsed()) {
      const auto alphas = parse_alphas(alpha_texts, false);
      for (const auto& item : load_graphs(gin))
        for (const Alpha& a : alphas) out << join_numbers(full_spectrum(alpha_matrix(item.graph, a), tol)) << '\n';
      return kExitOk;
    }
    if (quotient->parsed()) {
      const auto alphas = parse_alphas(alpha_texts, false);
      Graph g;
      VertexPartition part;
      if (!join_union_text.empty()) {
        if (!gin.graph6.empty() || !gin.path.empty()) throw UsageError("--join-union excludes --graph6/--input");
        const JoinUnionSpec spec = parse_join_union(join_union_text);
        g = build_join_union(spec);
        part = cells_text.empty() ? natural_partition(spec) : parse_cells(cells_text);
      } else {
        const auto items = load_graphs(gin);
        if (items.size() != 1) throw UsageError("quotient takes exactly one graph");
        if (cells_text.empty()) throw UsageError("--cells is required with --graph6/--input");
        g = items.front().graph;
        part = parse_cells(cells_text);
      }
      try {
        part.require_covers(g.order());
      } catch (const DomainError& e) {
        throw UsageError(std::string("--cells: ") + e.what());
      }
      for (const Alpha& a : alphas) {
        const QuotientMatrix q = quotient_matrix(g, a, part);
        for (int i = 0; i < q.order; ++i) {
          std::vector<double> row;
          for (int j = 0; j < q.order; ++j) row.push_back(q(i, j));
          out << join_numbers(row) << '\n';
        }
        out << "equitable " << (q.equitable ? "true" : "false") << '\n';
        if (q.equitable) out << "largest " << format_number(quotient_spectrum(q).front()) << '\n';
      }
      return kExitOk;
    }
    if (charpoly->parsed()) {
      const auto alphas = parse_alphas(alpha_texts, false);
      for (const Alpha& a : alphas) {
        CubicPoly p;
        try {
          p = charpoly_join(n_param, s_param, a);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
        out << "c2 " << format_number(p.c2) << "\nc1 " << format_number(p.c1) << "\nc0 " << format_number(p.c0)
            << "\nlargest_root " << format_number(largest_real_root(p, n_param)) << '\n';
      }
      return kExitOk;
    }
    if (evenfactor->parsed()) {
      for (const auto& item : load_graphs(gin)) {
        const FactorVerdict v = use_naive ? naive_even_factor(item.graph) : find_even_factor(item.graph, dim_budget);
        out << to_string(v.exists) << ' ' << to_string(v.method);
        if (v.witness) out << describe_edges(*v.witness);
        out << '\n';
      }
      return kExitOk;
    }
    if (yankano->parsed()) {
      for (const auto& item : load_graphs(gin)) {
        const YanKanoResult r = yan_kano_check(item.graph, subset_budget);
        out << to_string(r.status);
        if (r.violator)
          for (Vertex v : r.violator->members()) out << ' ' << v;
        out << '\n';
      }
      return kExitOk;
    }
    if (extremal->parsed()) {
      const auto alphas = parse_alphas(extremal_alphas, true);
      ExtremalSpec spec;
      try {
        spec = ExtremalSpec::make(n_param, delta_param);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      const Graph g = build_extremal(spec);
      if (emit_graph6) out << write_graph6(g) << '\n';
      if (!emit_graph6 && alphas.empty())
        out << "n " << spec.n << "\ndelta " << spec.delta << "\nedges " << g.size() << '\n';
      for (const Alpha& a : alphas) out << "rho_star " << format_number(rho_star(spec, a)) << '\n';
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      const auto alphas = parse_alphas(alpha_texts, true);
      ClassifyOptions opts;
      opts.eps = eps;
      opts.dim_budget = dim_budget;
      bool found = false;
      for (const auto& item : load_graphs(gin)) {
        for (const auto& rec : classify_alphas(item.graph, alphas, opts, item.id)) {
          out << verdict_json(rec) << '\n';
          found = found || rec.counterexample;
        }
      }
      return found ? kExitCounterexample : kExitOk;
    }
    if (verify->parsed()) {
      const auto alphas = parse_alphas(alpha_texts, true);
      std::ifstream file(gin.path);
      if (!file) throw InputError("cannot open " + gin.path);
      std::vector<CorpusItem> items;
      std::vector<CorpusError> errors;
      load_graph6_corpus(read_graph6(file), items, errors);
      for (const auto& e : errors) err << gin.path << ':' << e.line << ": " << e.message << '\n';
      ClassifyOptions opts;
      opts.eps = eps;
      opts.dim_budget = dim_budget;
      CorpusReport report = verify_corpus(items, alphas, opts, jobs == 0 ? std::thread::hardware_concurrency() : jobs);
      report.errors = std::move(errors);
      if (!out_path.empty()) {
        std::ofstream jsonl(out_path);
        if (!jsonl) throw InputError("cannot write " + out_path);
        write_jsonl(jsonl, report.records);
      }
      if (!summary_path.empty()) {
        std::ofstream csv(summary_path);
        if (!csv) throw InputError("cannot write " + summary_path);
        write_summary_csv(csv, report.summary);
      } else {
        write_summary_csv(out, report.summary);
      }
      return report.counterexamples() > 0 ? kExitCounterexample : kExitOk;
    }
    if (scan->parsed()) {
      const auto alphas = parse_alphas(scan_alphas, true);
      SubcaseScanReport report;
      try {
        report = subcase_positivity_scan(alphas, delta_min, delta_max, margin);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      out << "points " << report.points << "\nviolations " << report.violations.size() << '\n';
      for (const auto& v : report.violations)
        out << "violation alpha=" << format_number(v.alpha) << " delta=" << v.delta << " n=" << v.n << " s=" << v.s
            << " f=" << format_number(v.value) << '\n';
      return report.violations.empty() ? kExitOk : kExitCounterexample;
    }
    if (case3->parsed()) {
      const auto alphas = parse_alphas(alpha_texts, true);
      Case3Surgery surgery;
      try {
        surgery = case3_surgery(n_param, delta_param, s_param);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      bool ok = surgery.edge_delta_formula == surgery.edge_delta_constructed;
      out << "inner " << surgery.inner << "\nremoved " << surgery.removed.size() << "\nadded " << surgery.added.size()
          << "\nedge_delta_formula " << surgery.edge_delta_formula << "\nedge_delta_constructed "
          << surgery.edge_delta_constructed << '\n';
      for (const Alpha& a : alphas) {
        const Case3Gap gap = case3_radius_gap(n_param, delta_param, s_param, a);
        out << "alpha " << format_number(a.value()) << " rho_g3 " << format_number(gap.rho_g3) << " rho_g4 "
            << format_number(gap.rho_g4) << " gap " << format_number(gap.gap) << " quadratic_delta "
            << format_number(gap.quadratic_delta) << '\n';
        ok = ok && gap.gap > 0.0 && gap.quadratic_delta > 0.0;
      }
      return ok ? kExitOk : kExitCounterexample;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SizeError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace alphafactor::cli
