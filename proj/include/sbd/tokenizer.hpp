#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sbd/unicode.hpp"

namespace sbd {

enum TokenFlag : unsigned {
    kPeriodFinal = 1u << 0,
    kEllipsis = 1u << 1,
    kNumber = 1u << 2,
    kUnambiguousEnder = 1u << 3,
    kLineStart = 1u << 4,
    kLineEnd = 1u << 5,
};

struct Token {
    std::string text;
    Span span;  // byte offsets within the line
    unsigned flags = 0;

    bool has(TokenFlag f) const { return (flags & f) != 0; }
    friend bool operator==(const Token&, const Token&) = default;
};

// Normalized form used by all statistics. Numbers collapse into one class so
// evidence accumulates across distinct numerals.
using TypeKey = std::string;

inline constexpr std::string_view kNumberKey = "##number##";

namespace detail {

inline bool is_ws(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == 0x0B || cp == 0x0C || cp == 0xA0;
}

// Characters that always form standalone single-character tokens.
inline bool is_standalone_punct(char32_t cp) {
    switch (cp) {
        case U'?':
        case U'!':
        case 0x061F:  // ؟
        case 0x060C:  // ،
        case 0x061B:  // ؛
        case U':':
        case U'(':
        case U')':
        case 0x00AB:  // «
        case 0x00BB:  // »
        case U'"':
        case U'\'':
        case 0x2014:  // —
        case 0x2013:  // –
        case U'_':
        case U'-':
            return true;
        default:
            return false;
    }
}

inline bool is_word_char(char32_t cp) {
    return !is_ws(cp) && !is_standalone_punct(cp) && cp != U'.';
}

inline bool is_decimal_separator(char32_t cp) {
    return cp == U'.' || cp == 0x066B;  // ٫
}

// True when text minus an optional final '.' is digits with at most one
// internal decimal separator.
inline bool is_number_text(const std::u32string& cps) {
    std::size_t n = cps.size();
    if (n > 1 && cps[n - 1] == U'.') --n;
    if (n == 0) return false;
    bool seen_sep = false, seen_digit = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_corpus_digit(cps[i])) {
            seen_digit = true;
        } else if (is_decimal_separator(cps[i]) && !seen_sep && i > 0 && i + 1 < n) {
            seen_sep = true;
        } else {
            return false;
        }
    }
    return seen_digit;
}

inline unsigned classify(const std::u32string& cps) {
    unsigned flags = 0;
    if (cps.size() == 1 &&
        (cps[0] == U'?' || cps[0] == U'!' || cps[0] == 0x061F))
        flags |= kUnambiguousEnder;
    if ((cps.size() == 1 && cps[0] == U'.') ||
        (cps.size() > 1 && cps.back() == U'.'))
        flags |= kPeriodFinal;
    if (is_number_text(cps)) flags |= kNumber;
    return flags;
}

}  // namespace detail

struct Line;  // corpus.hpp

// Splits one line of text into tokens. Whitespace separates tokens; listed
// punctuation characters stand alone; a '.' run following a word character
// attaches to the word (runs of 3+ mark an ellipsis); a detached '.' run is
// its own token.
inline std::vector<Token> tokenize_text(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t size = text.size();
    while (i < size) {
        std::size_t start = i;
        char32_t cp = decode_utf8_at(text, i);
        if (detail::is_ws(cp)) continue;

        std::u32string cps;
        bool ellipsis = false;
        if (detail::is_standalone_punct(cp)) {
            cps.push_back(cp);
        } else if (cp == U'.') {
            // detached period run
            std::size_t run = 1;
            while (i < size) {
                std::size_t j = i;
                if (decode_utf8_at(text, j) != U'.') break;
                i = j;
                ++run;
            }
            cps.assign(run, U'.');
            if (run >= 3) ellipsis = true;
        } else {
            cps.push_back(cp);
            while (i < size) {
                std::size_t j = i;
                char32_t next = decode_utf8_at(text, j);
                if (detail::is_word_char(next)) {
                    cps.push_back(next);
                    i = j;
                } else if (next == U'.') {
                    // attach the period run; continue if a word char follows
                    std::size_t run = 0;
                    while (i < size) {
                        std::size_t k = i;
                        if (decode_utf8_at(text, k) != U'.') break;
                        i = k;
                        ++run;
                    }
                    cps.append(run, U'.');
                    if (run >= 3) ellipsis = true;
                    if (i < size) {
                        std::size_t k = i;
                        if (!detail::is_word_char(decode_utf8_at(text, k))) break;
                    } else {
                        break;
                    }
                } else {
                    break;
                }
            }
        }

        Token t;
        t.text = encode_utf8(cps);
        t.span = {start, i};
        t.flags = detail::classify(cps);
        if (ellipsis) t.flags |= kEllipsis;
        tokens.push_back(std::move(t));
    }
    if (!tokens.empty()) {
        tokens.front().flags |= kLineStart;
        tokens.back().flags |= kLineEnd;
    }
    return tokens;
}

// Normalized type key: NFC, Latin case-folded, numbers mapped to the number
// class; a period-final token keeps exactly one trailing '.'.
inline TypeKey type_of(const Token& t) {
    std::string key;
    if (t.has(kNumber)) {
        key = kNumberKey;
    } else {
        key = fold_case(nfc(t.text));
        while (key.size() > 1 && key.back() == '.') key.pop_back();
        if (key == ".") return key;
        if (key.back() == '.') key.pop_back();
    }
    if (t.has(kPeriodFinal)) key.push_back('.');
    return key;
}

// Removes exactly one trailing '.', if present.
inline TypeKey strip_final_period(TypeKey key) {
    if (!key.empty() && key.back() == '.') key.pop_back();
    return key;
}

}  // namespace sbd
