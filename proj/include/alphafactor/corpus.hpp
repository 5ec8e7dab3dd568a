#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "alphafactor/graph.hpp"
#include "alphafactor/graph6.hpp"
#include "alphafactor/theorem.hpp"

namespace alphafactor {

struct CorpusItem {
  std::string id;
  Graph graph;
};

/// An unreadable corpus entry, kept for reporting.
struct CorpusError {
  std::size_t line = 0;
  std::string message;
};

/// Per-alpha tallies over applicable records.
struct AlphaSummary {
  double alpha = 0.0;
  std::size_t records = 0;
  std::size_t applicable = 0;
  std::size_t meets_bound = 0;
  std::size_t extremal = 0;
  std::size_t no_factor = 0;
  std::size_t counterexamples = 0;
  std::size_t unknown = 0;
};

struct CorpusReport {
  std::vector<VerdictRecord> records;  // input order, alpha-minor
  std::vector<AlphaSummary> summary;   // one per requested alpha
  std::vector<CorpusError> errors;

  std::size_t counterexamples() const;
};

/// Splits graph6 records into corpus items (id = graph6 text) and line-numbered errors.
void load_graph6_corpus(const std::vector<Graph6Record>& records, std::vector<CorpusItem>& items,
                        std::vector<CorpusError>& errors);

/**
 * Classifies every item at every alpha. With jobs > 1 items are processed in
 * parallel; records are still emitted in input order, so the output does not
 * depend on scheduling.
 */
CorpusReport verify_corpus(std::span<const CorpusItem> items, std::span<const Alpha> alphas,
                           const ClassifyOptions& opts = {}, unsigned jobs = 1);

}  // namespace alphafactor
