#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "sbd/counts.hpp"
#include "sbd/params.hpp"

namespace sbd {

struct TrainConfig {
    double abbrev_threshold = 0.3;
    double colloc_threshold = 7.88;
    double starter_threshold = 30.0;
};

namespace detail {
inline double clamp_prob(double p) {
    return std::clamp(p, 1e-12, 1.0 - 1e-12);
}
}  // namespace detail

// Binomial log likelihood: k successes out of n at probability p.
inline double log_likelihood(std::int64_t k, std::int64_t n, double p) {
    if (k < 0 || n < 0 || k > n)
        throw std::invalid_argument("log_likelihood requires 0 <= k <= n");
    p = detail::clamp_prob(p);
    const auto kd = static_cast<double>(k);
    const auto nd = static_cast<double>(n);
    return kd * std::log(p) + (nd - kd) * std::log1p(-p);
}

// Dunning's two-hypothesis ratio for a pair: does seeing the first element
// change the probability of the second?
inline double pair_llr(std::int64_t c1, std::int64_t c2, std::int64_t c12,
                       std::int64_t n) {
    if (n <= 0 || c12 > c1 || c12 > c2 || c1 > n || c2 > n || c12 < 0 ||
        c2 - c12 > n - c1)
        throw std::invalid_argument("pair_llr count preconditions violated");
    const double p = static_cast<double>(c2) / static_cast<double>(n);
    const double p1 = c1 > 0 ? static_cast<double>(c12) / static_cast<double>(c1) : 0.0;
    const double p2 = n > c1 ? static_cast<double>(c2 - c12) / static_cast<double>(n - c1) : 0.0;
    return 2.0 * (log_likelihood(c12, c1, p1) + log_likelihood(c2 - c12, n - c1, p2) -
                  log_likelihood(c12, c1, p) - log_likelihood(c2 - c12, n - c1, p));
}

// Abbreviation score for a period-stripped key: a binomial ratio comparing
// "almost always period-final" against the corpus-wide period rate, scaled
// by internal periods, a length decay, and a penalty for occurrences seen
// without a period.
inline double abbrev_score(const TypeKey& stripped, const CountTable& counts) {
    auto it = counts.with_period.find(stripped + ".");
    if (it == counts.with_period.end() || it->second < 1)
        throw std::invalid_argument("abbrev_score requires an observed period-final form");
    const std::int64_t kp = it->second;
    std::int64_t without = 0;
    if (auto w = counts.without_period.find(stripped); w != counts.without_period.end())
        without = w->second;
    const std::int64_t n = kp + without;
    const double p0 = detail::clamp_prob(
        static_cast<double>(counts.period_tokens) / static_cast<double>(counts.total_tokens));

    const double llr = 2.0 * (log_likelihood(kp, n, 0.99) - log_likelihood(kp, n, p0));

    std::int64_t internal_periods = 0;
    std::size_t length = 0;  // code points, periods excluded
    {
        std::size_t i = 0;
        while (i < stripped.size()) {
            if (decode_utf8_at(stripped, i) == U'.')
                ++internal_periods;
            else
                ++length;
        }
    }
    const double f_periods = static_cast<double>(internal_periods) + 1.0;
    const double f_length = std::exp(-static_cast<double>(length));
    const double f_penalty =
        std::pow(static_cast<double>(length), -static_cast<double>(without));
    return llr * f_periods * f_length * f_penalty;
}

// Period-stripped keys whose score clears the threshold. The number class
// and letterless keys never qualify.
inline std::set<TypeKey> detect_abbreviations(const CountTable& counts,
                                              double threshold = 0.3) {
    std::set<TypeKey> out;
    for (const auto& [key, count] : counts.with_period) {
        if (count < 1) continue;
        const TypeKey stripped = strip_final_period(key);
        if (stripped.empty() || stripped == kNumberKey) continue;
        if (!contains_letter(stripped)) continue;
        if (abbrev_score(stripped, counts) >= threshold) out.insert(stripped);
    }
    return out;
}

// Pairs across a potential abbreviation period whose co-occurrence is far
// above chance; evidence against a boundary between them.
inline std::set<std::pair<TypeKey, TypeKey>> detect_collocations(
    const CountTable& counts, const std::set<TypeKey>& abbrev_candidates,
    double threshold = 7.88) {
    std::set<std::pair<TypeKey, TypeKey>> out;
    for (const auto& [pair, c12] : counts.bigrams) {
        const auto& [a, b] = pair;
        if (!counts.with_period.contains(a + ".")) continue;
        if (a != kNumberKey && !abbrev_candidates.contains(a)) continue;
        const std::int64_t c1 = counts.count_of(a);
        const std::int64_t c2 = counts.count_of(b);
        const std::int64_t n = counts.total_tokens;
        if (c1 <= 0 || c2 <= 0 || n <= 0) continue;
        const double p = static_cast<double>(c2) / static_cast<double>(n);
        const double p1 = static_cast<double>(c12) / static_cast<double>(c1);
        if (!(p1 > p)) continue;
        if (pair_llr(c1, c2, c12, n) >= threshold) out.insert(pair);
    }
    return out;
}

// Types disproportionately found immediately after provisional boundaries.
inline std::set<TypeKey> detect_sentence_starters(const CountTable& counts,
                                                  double threshold = 30.0) {
    std::set<TypeKey> out;
    const std::int64_t n_starts = counts.boundary_count;
    const std::int64_t n = counts.total_tokens;
    if (n_starts <= 0 || n <= 0) return out;
    for (const auto& [key, start_count] : counts.starts) {
        const std::int64_t c = counts.count_of_full(key);
        if (c <= 0) continue;
        const double rate_after = static_cast<double>(start_count) / static_cast<double>(n_starts);
        const double rate_overall = static_cast<double>(c) / static_cast<double>(n);
        if (!(rate_after > rate_overall)) continue;
        if (pair_llr(n_starts, c, start_count, n) >= threshold) out.insert(key);
    }
    return out;
}

// Two-pass unsupervised training: learn abbreviations from period behavior,
// re-derive provisional boundaries with them, then learn collocations and
// frequent sentence starters relative to those boundaries.
inline Parameters train(const std::vector<TokenizedDocument>& docs,
                        const TrainConfig& config = {}) {
    const CountTable pass1 = collect_counts(docs);
    if (pass1.total_tokens == 0) throw std::invalid_argument("cannot train on an empty corpus");

    Parameters p;
    p.abbrev_types = detect_abbreviations(pass1, config.abbrev_threshold);
    const CountTable pass2 = collect_counts(docs, p.abbrev_types);
    p.collocations =
        detect_collocations(pass2, p.abbrev_types, config.colloc_threshold);
    p.sentence_starters = detect_sentence_starters(pass2, config.starter_threshold);
    return p;
}

}  // namespace sbd
