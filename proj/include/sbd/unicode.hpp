#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "sbd/errors.hpp"

namespace sbd {

// UTF-8 helpers and the normalization applied at ingest: NFC, with strict
// decoding so bad input is reported by byte offset instead of silently
// replaced.

inline constexpr char32_t kZwnj = 0x200C;  // zero-width non-joiner

// Byte-offset pair, end exclusive.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    friend bool operator==(const Span&, const Span&) = default;
};

// Decodes one code point starting at byte offset `i`; advances `i`.
// Throws FormatError naming the byte offset on invalid UTF-8.
inline char32_t decode_utf8_at(std::string_view s, std::size_t& i) {
    auto fail = [&](std::size_t at) -> char32_t {
        throw FormatError("invalid UTF-8 at byte offset " + std::to_string(at));
    };
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return fail(i);
    }
    if (i + len > s.size()) return fail(i);
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) return fail(i + k);
        cp = (cp << 6) | (b & 0x3F);
    }
    // Overlong forms and surrogates are invalid.
    static constexpr char32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
        return fail(i);
    i += len;
    return cp;
}

inline std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) out.push_back(decode_utf8_at(s, i));
    return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string encode_utf8(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

// Number of code points in a UTF-8 string (input must be valid UTF-8).
inline std::size_t codepoint_count(std::string_view s) {
    std::size_t n = 0;
    for (char c : s)
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    return n;
}

inline std::string nfc(std::string_view s) {
    UErrorCode err = U_ZERO_ERROR;
    const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(err);
    if (U_FAILURE(err)) throw std::runtime_error("ICU NFC instance unavailable");
    icu::UnicodeString u =
        icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
    icu::UnicodeString out;
    norm->normalize(u, out, err);
    if (U_FAILURE(err)) throw FormatError("NFC normalization failed");
    std::string res;
    out.toUTF8String(res);
    return res;
}

inline bool is_letter(char32_t cp) { return u_isalpha(static_cast<UChar32>(cp)); }

inline bool contains_letter(std::string_view utf8) {
    std::size_t i = 0;
    while (i < utf8.size())
        if (is_letter(decode_utf8_at(utf8, i))) return true;
    return false;
}

// ASCII digits plus the two Arabic-script digit blocks.
inline bool is_corpus_digit(char32_t cp) {
    return (cp >= U'0' && cp <= U'9') || (cp >= U'٠' && cp <= U'٩') ||
           (cp >= U'۰' && cp <= U'۹');
}

// Simple per-code-point lowercasing; the target script is caseless, so this
// only affects embedded Latin.
inline std::string fold_case(std::string_view utf8) {
    std::u32string cps = decode_utf8(utf8);
    for (auto& cp : cps) cp = static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
    return encode_utf8(cps);
}

// Ingest normalization: strip BOM, NFC, CRLF/CR -> LF.
inline std::string normalize_text(std::string_view raw) {
    std::string_view s = raw;
    if (s.size() >= 3 && s.substr(0, 3) == "\xEF\xBB\xBF") s.remove_prefix(3);
    decode_utf8(s);  // validates, reporting the byte offset
    std::string n = nfc(s);
    std::string out;
    out.reserve(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == '\r') {
            out.push_back('\n');
            if (i + 1 < n.size() && n[i + 1] == '\n') ++i;
        } else {
            out.push_back(n[i]);
        }
    }
    return out;
}

}  // namespace sbd
