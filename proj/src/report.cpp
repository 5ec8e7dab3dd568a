#include "alphafactor/report.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace alphafactor {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string verdict_json(const VerdictRecord& rec) {
  nlohmann::ordered_json j;
  j["id"] = rec.id;
  j["n"] = rec.n;
  j["delta"] = rec.delta;
  j["alpha"] = rec.alpha;
  j["applicable"] = rec.applicable;
  j["skip_reason"] = rec.skip_reason;
  j["rho_g"] = rec.rho_g;
  j["rho_star"] = rec.rho_star;
  j["meets_bound"] = rec.meets_bound;
  j["is_extremal"] = rec.is_extremal;
  nlohmann::ordered_json f;
  f["exists"] = to_string(rec.factor.exists);
  f["method"] = to_string(rec.factor.method);
  f["dimension"] = rec.factor.dimension;
  if (rec.factor.witness) {
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : *rec.factor.witness) edges.push_back({e.u, e.v});
    f["witness"] = std::move(edges);
  } else {
    f["witness"] = nullptr;
  }
  j["factor"] = std::move(f);
  j["counterexample"] = rec.counterexample;
  return j.dump();
}

void write_jsonl(std::ostream& out, std::span<const VerdictRecord> records) {
  for (const auto& rec : records) out << verdict_json(rec) << '\n';
}

void write_summary_csv(std::ostream& out, std::span<const AlphaSummary> summary) {
  out << "alpha,applicable,meets_bound,extremal,no_factor,counterexamples,unknown\n";
  for (const auto& s : summary) {
    out << format_number(s.alpha) << ',' << s.applicable << ',' << s.meets_bound << ',' << s.extremal << ','
        << s.no_factor << ',' << s.counterexamples << ',' << s.unknown << '\n';
  }
}

}  // namespace alphafactor
