#pragma once

#include <span>

#include "fivestar/dataset.hpp"
#include "fivestar/model.hpp"

namespace fivestar {

struct RankingMetrics {
    double mrr = 0.0;
    double hits1 = 0.0;
    double hits3 = 0.0;
    double hits10 = 0.0;
    std::size_t query_count = 0;
};

/// Filtered rank of the gold entity under pessimistic tie handling:
/// 1 + |{ j ∉ filter_out ∪ {gold} : scores[j] >= scores[gold] }|.
/// filter_out must be sorted, unique, and must not contain gold.
std::size_t filtered_rank(std::span<const double> scores, std::uint32_t gold,
                          std::span<const std::uint32_t> filter_out);

struct EvalOptions {
    bool raw = false; // skip filtering (gold handling unchanged)
};

/// Every triple of the split contributes a tail query (h, r, ?) and a head
/// query through the reciprocal relation (t, r + n_relations_base, ?).
/// Requires reciprocals_added.
RankingMetrics evaluate_split(const ModelParams& p, const SplitDataset& ds, Split split,
                              const FilterIndex& index, const EvalOptions& opts = {});

} // namespace fivestar
