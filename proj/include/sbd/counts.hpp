#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sbd/corpus.hpp"
#include "sbd/tokenizer.hpp"

namespace sbd {

// One document as token lines.
using TokenizedDocument = std::vector<std::vector<Token>>;

// Frequency statistics over a tokenized corpus. Merging is pointwise
// addition, so per-document tables form a commutative monoid.
struct CountTable {
    std::int64_t total_tokens = 0;
    std::int64_t period_tokens = 0;
    std::int64_t boundary_count = 0;  // provisional boundaries with a successor
    std::map<TypeKey, std::int64_t> with_period;     // keyed with trailing '.'
    std::map<TypeKey, std::int64_t> without_period;  // keyed period-stripped
    std::map<std::pair<TypeKey, TypeKey>, std::int64_t> bigrams;  // stripped keys
    std::map<TypeKey, std::int64_t> starts;  // full keys, after a boundary

    friend bool operator==(const CountTable&, const CountTable&) = default;

    // Total occurrences of a period-stripped type, with or without period.
    std::int64_t count_of(const TypeKey& stripped) const {
        std::int64_t n = 0;
        if (auto it = with_period.find(stripped + "."); it != with_period.end())
            n += it->second;
        if (auto it = without_period.find(stripped); it != without_period.end())
            n += it->second;
        return n;
    }

    // Occurrences of an exact (full) type key.
    std::int64_t count_of_full(const TypeKey& key) const {
        const auto& m = (!key.empty() && key.back() == '.') ? with_period : without_period;
        auto it = m.find(key);
        return it == m.end() ? 0 : it->second;
    }
};

inline CountTable merge(const CountTable& a, const CountTable& b) {
    CountTable out = a;
    out.total_tokens += b.total_tokens;
    out.period_tokens += b.period_tokens;
    out.boundary_count += b.boundary_count;
    for (const auto& [k, v] : b.with_period) out.with_period[k] += v;
    for (const auto& [k, v] : b.without_period) out.without_period[k] += v;
    for (const auto& [k, v] : b.bigrams) out.bigrams[k] += v;
    for (const auto& [k, v] : b.starts) out.starts[k] += v;
    return out;
}

// Accumulates counts for one document. Provisional boundaries are line ends,
// unambiguous enders, and period-final tokens whose stripped key is not in
// `abbrevs` (empty on the first training pass). The document start counts as
// a boundary for the `starts` statistics.
inline void collect_counts_into(CountTable& table, const TokenizedDocument& doc,
                                const std::set<TypeKey>& abbrevs = {}) {
    bool after_boundary = true;  // document start
    for (const auto& line : doc) {
        TypeKey prev_stripped;
        bool have_prev = false;
        for (const Token& tok : line) {
            const TypeKey key = type_of(tok);
            const TypeKey stripped = strip_final_period(key);

            ++table.total_tokens;
            if (tok.has(kPeriodFinal)) {
                ++table.period_tokens;
                ++table.with_period[key];
            } else {
                ++table.without_period[key];
            }
            if (have_prev) ++table.bigrams[{prev_stripped, stripped}];
            prev_stripped = stripped;
            have_prev = true;

            if (after_boundary) {
                ++table.starts[key];
                ++table.boundary_count;
            }
            after_boundary =
                tok.has(kUnambiguousEnder) || tok.has(kLineEnd) ||
                (tok.has(kPeriodFinal) && !abbrevs.contains(stripped));
        }
    }
}

inline CountTable collect_counts(const std::vector<TokenizedDocument>& docs,
                                 const std::set<TypeKey>& abbrevs = {}) {
    CountTable table;
    for (const auto& doc : docs) collect_counts_into(table, doc, abbrevs);
    return table;
}

inline TokenizedDocument tokenize_document(const Document& doc) {
    TokenizedDocument out;
    out.reserve(doc.lines.size());
    for (const auto& line : doc.lines) out.push_back(tokenize_text(line.text));
    return out;
}

}  // namespace sbd
