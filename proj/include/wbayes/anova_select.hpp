#pragma once

#include <span>
#include <string>
#include <vector>

#include "wbayes/measure.hpp"

namespace wbayes {

struct GroupedScores {
  std::vector<double> scores;
  std::vector<std::string> groups;
};

struct SsDecomposition {
  double ss_between = 0.0;
  double ss_within = 0.0;
  double ss_total = 0.0;
  double ratio = 0.0;  // ss_between / ss_total
};

/// One-way ANOVA sum-of-squares split. Needs at least two distinct groups;
/// throws DataError when the total variance is zero.
SsDecomposition ss_decomposition(const GroupedScores& data);

struct CandidateResult {
  std::string candidate;
  SsDecomposition ss;
  std::size_t input_order = 0;
  bool winner = false;
};

/// For each candidate reference: change reference, run wsfpca, split the PC1
/// scores by group. Sorted by descending ratio; ties keep the input order.
std::vector<CandidateResult> select_reference(std::span<const Density> lambda_sample,
                                              std::span<const std::string> groups,
                                              std::span<const ReferenceSpec> candidates);

}  // namespace wbayes
