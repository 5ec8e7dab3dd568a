#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "alphafactor/corpus.hpp"
#include "alphafactor/theorem.hpp"

namespace alphafactor {

/// printf("%.12g"), with negative zero printed as 0.
std::string format_number(double x);

/**
 * One JSON object per record with the stable keys
 * id, n, delta, alpha, applicable, skip_reason, rho_g, rho_star, meets_bound,
 * is_extremal, factor {exists, method, dimension, witness}, counterexample.
 */
std::string verdict_json(const VerdictRecord& rec);

void write_jsonl(std::ostream& out, std::span<const VerdictRecord> records);

/// Columns: alpha,applicable,meets_bound,extremal,no_factor,counterexamples,unknown.
void write_summary_csv(std::ostream& out, std::span<const AlphaSummary> summary);

}  // namespace alphafactor
