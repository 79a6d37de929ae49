#include "fivestar/evaluation.hpp"

#include <algorithm>

#include "fivestar/parallel.hpp"

namespace fivestar {

std::size_t filtered_rank(std::span<const double> scores, std::uint32_t gold,
                          std::span<const std::uint32_t> filter_out) {
    if (std::binary_search(filter_out.begin(), filter_out.end(), gold)) {
        throw GoldFiltered("filtered_rank: gold entity is in the filter set");
    }
    const double gold_score = scores[gold];
    std::size_t rank = 1;
    for (std::uint32_t j = 0; j < scores.size(); ++j) {
        if (j == gold) continue;
        if (scores[j] < gold_score) continue;
        if (std::binary_search(filter_out.begin(), filter_out.end(), j)) continue;
        ++rank;
    }
    return rank;
}

namespace {

// Filter with the gold entity removed; reuses the index's storage when gold
// is absent from it.
std::vector<std::uint32_t> filter_minus_gold(std::span<const std::uint32_t> tails, std::uint32_t gold) {
    std::vector<std::uint32_t> out;
    out.reserve(tails.size());
    for (std::uint32_t t : tails) {
        if (t != gold) out.push_back(t);
    }
    return out;
}

} // namespace

RankingMetrics evaluate_split(const ModelParams& p, const SplitDataset& ds, Split split,
                              const FilterIndex& index, const EvalOptions& opts) {
    if (!ds.reciprocals_added) throw Error("evaluate_split: reciprocals must be added first");
    const auto triples = split_of(ds, split);
    const auto base = static_cast<std::uint32_t>(ds.vocab.n_relations_base());
    const std::size_t n_queries = 2 * triples.size();

    std::vector<std::size_t> ranks(n_queries, 0);
    parallel_for(
        n_queries,
        [&](std::size_t begin, std::size_t end, int) {
            std::vector<double> scores(p.n_entities);
            for (std::size_t q = begin; q < end; ++q) {
                const Triple& t = triples[q / 2];
                const bool tail_query = (q % 2) == 0;
                const std::uint32_t qh = tail_query ? t.head : t.tail;
                const std::uint32_t qr = tail_query ? t.relation : t.relation + base;
                const std::uint32_t gold = tail_query ? t.tail : t.head;
                score_all(p, qh, qr, scores);
                std::vector<std::uint32_t> filter;
                if (!opts.raw) filter = filter_minus_gold(index.tails(qh, qr), gold);
                ranks[q] = filtered_rank(scores, gold, filter);
            }
        },
        64);

    RankingMetrics m;
    m.query_count = n_queries;
    if (n_queries == 0) return m;
    double mrr = 0.0;
    std::size_t h1 = 0, h3 = 0, h10 = 0;
    for (std::size_t r : ranks) {
        mrr += 1.0 / static_cast<double>(r);
        h1 += r <= 1;
        h3 += r <= 3;
        h10 += r <= 10;
    }
    m.mrr = mrr / static_cast<double>(n_queries);
    m.hits1 = static_cast<double>(h1) / static_cast<double>(n_queries);
    m.hits3 = static_cast<double>(h3) / static_cast<double>(n_queries);
    m.hits10 = static_cast<double>(h10) / static_cast<double>(n_queries);
    return m;
}

} // namespace fivestar
