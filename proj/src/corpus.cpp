#include "alphafactor/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace alphafactor {

std::size_t CorpusReport::counterexamples() const {
  std::size_t total = 0;
  for (const auto& s : summary) total += s.counterexamples;
  return total;
}

void load_graph6_corpus(const std::vector<Graph6Record>& records, std::vector<CorpusItem>& items,
                        std::vector<CorpusError>& errors) {
  for (const auto& rec : records) {
    if (rec.graph) items.push_back({rec.text, *rec.graph});
    else errors.push_back({rec.line, rec.error});
  }
}

CorpusReport verify_corpus(std::span<const CorpusItem> items, std::span<const Alpha> alphas,
                           const ClassifyOptions& opts, unsigned jobs) {
  std::vector<std::vector<VerdictRecord>> per_item(items.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < items.size(); i = cursor++)
      per_item[i] = classify_alphas(items[i].graph, alphas, opts, items[i].id);
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  CorpusReport report;
  for (const Alpha& a : alphas) report.summary.push_back({.alpha = a.value()});
  for (auto& recs : per_item) {
    for (std::size_t k = 0; k < recs.size(); ++k) {
      AlphaSummary& s = report.summary[k];
      const VerdictRecord& r = recs[k];
      ++s.records;
      if (r.applicable) {
        ++s.applicable;
        s.meets_bound += r.meets_bound;
        s.extremal += r.is_extremal;
        s.no_factor += r.factor.exists == Existence::no;
        s.unknown += r.factor.exists == Existence::unknown;
        s.counterexamples += r.counterexample;
      }
      report.records.push_back(std::move(recs[k]));
    }
  }
  return report;
}

}  // namespace alphafactor
