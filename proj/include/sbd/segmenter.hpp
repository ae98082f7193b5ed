#pragma once

#include <string>
#include <vector>

#include "sbd/corpus.hpp"
#include "sbd/params.hpp"
#include "sbd/tokenizer.hpp"

namespace sbd {

enum class DecisionKind {
    None,
    SentenceBreak,
    Abbreviation,
    AbbreviationAndBreak,
    Ellipsis,
};

struct BoundaryDecision {
    std::size_t token_index = 0;
    DecisionKind kind = DecisionKind::None;
    std::string reason;  // machine-readable code, e.g. "line_end"

    bool ends_sentence() const {
        return kind == DecisionKind::SentenceBreak ||
               kind == DecisionKind::AbbreviationAndBreak;
    }
    friend bool operator==(const BoundaryDecision&, const BoundaryDecision&) = default;
};

struct SegmenterOptions {
    bool ellipsis_breaks = false;  // when set, ellipsis tokens end sentences
};

// Rule-table pass over one line's tokens. The line's last token always ends
// a sentence (line rule), even when it is an abbreviation.
inline std::vector<BoundaryDecision> first_pass(const std::vector<Token>& tokens,
                                                const Parameters& params,
                                                const SegmenterOptions& opts = {}) {
    std::vector<BoundaryDecision> decisions;
    decisions.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        BoundaryDecision d{i, DecisionKind::None, ""};
        if (t.has(kUnambiguousEnder)) {
            d = {i, DecisionKind::SentenceBreak, "unambiguous_ender"};
        } else if (t.has(kEllipsis)) {
            if (opts.ellipsis_breaks)
                d = {i, DecisionKind::SentenceBreak, "ellipsis_break"};
            else
                d = {i, DecisionKind::Ellipsis, "ellipsis"};
        } else if (t.has(kPeriodFinal)) {
            const TypeKey stripped = strip_final_period(type_of(t));
            if (params.forced_abbrevs.contains(stripped))
                d = {i, DecisionKind::Abbreviation, "forced_abbrev"};
            else if (params.abbrev_types.contains(stripped))
                d = {i, DecisionKind::Abbreviation, "abbrev"};
            else
                d = {i, DecisionKind::SentenceBreak, "plain_period"};
        }
        decisions.push_back(std::move(d));
    }
    if (!decisions.empty() && !decisions.back().ends_sentence()) {
        auto& last = decisions.back();
        last.kind = last.kind == DecisionKind::Abbreviation
                        ? DecisionKind::AbbreviationAndBreak
                        : DecisionKind::SentenceBreak;
        last.reason = "line_end";
    }
    return decisions;
}

// Token-context refinements at period-final tokens with a successor:
// a frequent sentence starter after an abbreviation or ellipsis re-installs
// the break; a learned collocation across the period suppresses it.
// Line-end breaks are never downgraded.
inline std::vector<BoundaryDecision> second_pass(const std::vector<Token>& tokens,
                                                 std::vector<BoundaryDecision> decisions,
                                                 const Parameters& params) {
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (!t.has(kPeriodFinal)) continue;
        auto& d = decisions[i];
        const TypeKey next_key = type_of(tokens[i + 1]);
        const TypeKey next_stripped = strip_final_period(next_key);

        if ((d.kind == DecisionKind::Abbreviation || d.kind == DecisionKind::Ellipsis) &&
            params.sentence_starters.contains(next_key)) {
            d.kind = DecisionKind::AbbreviationAndBreak;
            d.reason = "starter_break";
            continue;
        }
        if (d.kind == DecisionKind::SentenceBreak && d.reason == "plain_period") {
            const TypeKey stripped = strip_final_period(type_of(t));
            if (params.collocations.contains({stripped, next_stripped}) ||
                (t.has(kNumber) &&
                 params.collocations.contains({TypeKey(kNumberKey), next_stripped}))) {
                d.kind = DecisionKind::Abbreviation;
                d.reason = "collocation_suppress";
            }
        }
    }
    return decisions;
}

struct Sentence {
    std::string text;
    std::vector<Token> tokens;  // spans relative to the source line
    friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct SegmentedDocument {
    std::string id;
    std::vector<Sentence> sentences;
    friend bool operator==(const SegmentedDocument&, const SegmentedDocument&) = default;
};

inline SegmentedDocument segment_document(const Document& doc, const Parameters& params,
                                          const SegmenterOptions& opts = {}) {
    SegmentedDocument out;
    out.id = doc.id;
    for (const Line& line : doc.lines) {
        const std::vector<Token> tokens = tokenize_text(line.text);
        if (tokens.empty()) continue;
        const auto decisions =
            second_pass(tokens, first_pass(tokens, params, opts), params);
        std::size_t first = 0;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (!decisions[i].ends_sentence()) continue;
            Sentence s;
            s.text = line.text.substr(tokens[first].span.begin,
                                      tokens[i].span.end - tokens[first].span.begin);
            s.tokens.assign(tokens.begin() + first, tokens.begin() + i + 1);
            out.sentences.push_back(std::move(s));
            first = i + 1;
        }
    }
    return out;
}

// The bundled forced-abbreviation list: Dr., professor, S.W, teacher, A.D.
// Keys are period-stripped; the last entry contains zero-width non-joiners.
inline std::set<TypeKey> forced_abbrev_list_default() {
    return {
        "\u062F",                    // Dr.
        "\u067E",                    // professor
        "\u062F.\u062E",            // S.W
        "\u0645",                    // teacher
        "\u067E\u200C.\u200C\u0632",  // A.D (with zero-width non-joiners)
    };
}

}  // namespace sbd
