#include "wbayes/anova_select.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wbayes/errors.hpp"
#include "wbayes/sfpca.hpp"

namespace wbayes {

SsDecomposition ss_decomposition(const GroupedScores& data) {
  const std::size_t n = data.scores.size();
  if (n != data.groups.size()) throw std::invalid_argument("scores and groups differ in length");
  std::map<std::string, std::pair<double, std::size_t>> by_group;
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& [sum, count] = by_group[data.groups[i]];
    sum += data.scores[i];
    ++count;
    grand += data.scores[i];
  }
  if (by_group.size() < 2) throw std::invalid_argument("ANOVA needs at least two groups");
  grand /= static_cast<double>(n);

  SsDecomposition out;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = data.scores[i] - grand;
    out.ss_total += d * d;
  }
  for (const auto& [name, acc] : by_group) {
    const double d = acc.first / static_cast<double>(acc.second) - grand;
    out.ss_between += static_cast<double>(acc.second) * d * d;
  }
  if (!(out.ss_total > 0.0)) throw DataError("ANOVA ratio undefined: scores have zero total variance");
  out.ss_within = out.ss_total - out.ss_between;
  out.ratio = std::clamp(out.ss_between / out.ss_total, 0.0, 1.0);
  return out;
}

std::vector<CandidateResult> select_reference(std::span<const Density> lambda_sample,
                                              std::span<const std::string> groups,
                                              std::span<const ReferenceSpec> candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidate reference measures");
  if (lambda_sample.size() != groups.size()) throw std::invalid_argument("one group label per density required");
  if (lambda_sample.empty()) throw std::invalid_argument("empty sample");
  const Grid& grid = lambda_sample.front().grid();

  std::vector<CandidateResult> out(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto ref = resolve_reference(candidates[c], grid, lambda_sample);
    std::vector<Density> weighted;
    weighted.reserve(lambda_sample.size());
    for (const auto& f : lambda_sample) weighted.push_back(change_reference(f, ref));
    const auto fpca = wsfpca(weighted, 1);
    GroupedScores gs{{}, {groups.begin(), groups.end()}};
    for (Eigen::Index i = 0; i < fpca.scores.rows(); ++i) gs.scores.push_back(fpca.scores(i, 0));
    out[c] = {candidates[c].text, ss_decomposition(gs), c, false};
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CandidateResult& x, const CandidateResult& y) { return x.ss.ratio > y.ss.ratio; });
  out.front().winner = true;
  return out;
}

}  // namespace wbayes
