#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sbd/sbd.hpp"

// Hand-rolled generators over Sorani and ASCII text; each suite runs at
// least 1,000 cases from a fixed seed.

using namespace sbd;

namespace {

constexpr int kCases = 1000;

struct Gen {
    std::mt19937 rng{20260823};

    int pick(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    }

    char32_t codepoint() {
        switch (pick(0, 9)) {
            case 0: return static_cast<char32_t>(pick('a', 'z'));
            case 1: return static_cast<char32_t>(pick('A', 'Z'));
            case 2: return static_cast<char32_t>(pick('0', '9'));
            case 3: return static_cast<char32_t>(pick(0x06F0, 0x06F9));  // ۰-۹
            case 4: return U'.';
            case 5: {
                static const char32_t punct[] = {U'?', U'!', 0x061F, 0x060C, 0x061B,
                                                 U':', U'(', U')', 0x00AB, 0x00BB,
                                                 U'-', U'_', 0x2013, 0x2014};
                return punct[pick(0, 13)];
            }
            case 6: return kZwnj;
            default: {
                static const char32_t sorani[] = {0x0626, 0x0627, 0x0628, 0x067E, 0x062A,
                                                  0x062C, 0x0686, 0x062D, 0x062E, 0x062F,
                                                  0x0631, 0x0695, 0x0632, 0x0698, 0x0633,
                                                  0x0634, 0x0639, 0x063A, 0x0641, 0x06A4,
                                                  0x0642, 0x06A9, 0x06AF, 0x0644, 0x06B5,
                                                  0x0645, 0x0646, 0x0647, 0x06D5, 0x0648,
                                                  0x06C6, 0x06CC, 0x06CE};
                return sorani[pick(0, 32)];
            }
        }
    }

    std::string line(int max_len = 40) {
        std::u32string cps;
        const int n = pick(0, max_len);
        for (int i = 0; i < n; ++i) cps.push_back(chance(0.18) ? U' ' : codepoint());
        return encode_utf8(cps);
    }

    std::string word(int max_len = 6) {
        std::u32string cps;
        const int n = pick(1, max_len);
        for (int i = 0; i < n; ++i) {
            char32_t cp = codepoint();
            while (detail::is_ws(cp)) cp = codepoint();
            cps.push_back(cp);
        }
        return encode_utf8(cps);
    }

    Document document() {
        Document doc;
        doc.id = "gen";
        doc.strata_key = "gen";
        const int n_lines = pick(0, 6);
        std::string text;
        for (int i = 0; i < n_lines; ++i) text += line() + "\n";
        return document_from_text("gen", "gen", text);
    }

    Parameters params_from(const Document& doc) {
        Parameters p;
        std::vector<TypeKey> keys;
        for (const auto& l : doc.lines)
            for (const auto& t : tokenize_text(l.text)) keys.push_back(type_of(t));
        for (const auto& k : keys) {
            const auto stripped = strip_final_period(k);
            if (chance(0.2) && !stripped.empty()) p.abbrev_types.insert(stripped);
            if (chance(0.1)) p.sentence_starters.insert(k);
            if (chance(0.1) && keys.size() > 1)
                p.collocations.insert({stripped, strip_final_period(keys[pick(0, keys.size() - 1)])});
        }
        return p;
    }
};

std::vector<std::string> all_token_texts(const SegmentedDocument& d) {
    std::vector<std::string> out;
    for (const auto& s : d.sentences)
        for (const auto& t : s.tokens) out.push_back(t.text);
    return out;
}

}  // namespace

TEST_CASE("tokenizer reconstruction: spans interleave back to the line") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        const std::string line = gen.line();
        const auto tokens = tokenize_text(line);
        std::string rebuilt;
        std::size_t pos = 0;
        for (const auto& t : tokens) {
            REQUIRE(t.span.begin >= pos);
            rebuilt += line.substr(pos, t.span.begin - pos);
            REQUIRE(t.text == line.substr(t.span.begin, t.span.end - t.span.begin));
            rebuilt += t.text;
            pos = t.span.end;
        }
        rebuilt += line.substr(pos);
        REQUIRE(rebuilt == line);
    }
}

TEST_CASE("tokenizer flag soundness on random text") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        for (const auto& t : tokenize_text(gen.line())) {
            for (char ch : t.text) REQUIRE(ch != ' ');
            if (t.has(kPeriodFinal)) REQUIRE(t.text.back() == '.');
            if (t.has(kNumber)) {
                const auto cps = decode_utf8(t.text);
                bool any_digit = false;
                for (char32_t cp : cps) any_digit |= is_corpus_digit(cp);
                REQUIRE(any_digit);
            }
        }
    }
}

TEST_CASE("type normalization is idempotent") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        for (const auto& t : tokenize_text(gen.line())) {
            const TypeKey key = type_of(t);
            Token round;
            round.text = key;
            round.flags = t.flags & (kPeriodFinal | kNumber);
            REQUIRE(type_of(round) == key);
            REQUIRE(strip_final_period(strip_final_period(key)) == strip_final_period(key));
        }
    }
}

TEST_CASE("segmenter conserves tokens and respects the line rule") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        const Document doc = gen.document();
        const Parameters params = gen.params_from(doc);
        const auto seg = segment_document(doc, params);

        std::vector<std::string> expected;
        std::size_t nonempty_lines = 0;
        for (const auto& l : doc.lines) {
            const auto tokens = tokenize_text(l.text);
            if (!tokens.empty()) ++nonempty_lines;
            for (const auto& t : tokens) expected.push_back(t.text);
        }
        REQUIRE(all_token_texts(seg) == expected);
        REQUIRE(seg.sentences.size() >= nonempty_lines);
        for (const auto& s : seg.sentences) REQUIRE_FALSE(s.tokens.empty());
    }
}

TEST_CASE("forced abbreviations only change decisions at their own type") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        const Document doc = gen.document();
        Parameters base = gen.params_from(doc);
        base.forced_abbrevs.clear();

        std::vector<TypeKey> keys;
        for (const auto& l : doc.lines)
            for (const auto& t : tokenize_text(l.text))
                keys.push_back(strip_final_period(type_of(t)));
        if (keys.empty()) continue;
        const TypeKey added = keys[gen.pick(0, keys.size() - 1)];

        Parameters forced = base;
        forced.forced_abbrevs.insert(added);

        for (const auto& l : doc.lines) {
            const auto tokens = tokenize_text(l.text);
            const auto d1 = second_pass(tokens, first_pass(tokens, base), base);
            const auto d2 = second_pass(tokens, first_pass(tokens, forced), forced);
            REQUIRE(d1.size() == d2.size());
            for (std::size_t i = 0; i < d1.size(); ++i) {
                if (strip_final_period(type_of(tokens[i])) == added) continue;
                REQUIRE(d1[i] == d2[i]);
            }
        }
    }
}

TEST_CASE("with no starters, forced abbreviations never add sentences") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        const Document doc = gen.document();
        Parameters base = gen.params_from(doc);
        base.sentence_starters.clear();
        base.forced_abbrevs.clear();
        Parameters forced = base;
        for (int k = 0; k < 3; ++k) forced.forced_abbrevs.insert(gen.word());

        REQUIRE(segment_document(doc, forced).sentences.size() <=
                segment_document(doc, base).sentences.size());
    }
}

TEST_CASE("count tables merge homomorphically over corpus partitions") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        std::vector<TokenizedDocument> docs;
        const int n = gen.pick(0, 5);
        for (int i = 0; i < n; ++i) docs.push_back(tokenize_document(gen.document()));
        const int cut = docs.empty() ? 0 : gen.pick(0, n);
        const std::vector<TokenizedDocument> left(docs.begin(), docs.begin() + cut);
        const std::vector<TokenizedDocument> right(docs.begin() + cut, docs.end());
        REQUIRE(collect_counts(docs) == merge(collect_counts(left), collect_counts(right)));
    }
}

TEST_CASE("xml round-trips arbitrary sentences and judgments") {
    Gen gen;
    static const Judgment all[] = {Judgment::tp, Judgment::tn, Judgment::fp, Judgment::fn};
    for (int c = 0; c < kCases; ++c) {
        SegmentedDocument doc;
        doc.id = gen.word();
        std::map<std::size_t, Judgment> judgments;
        const int n = gen.pick(0, 5);
        for (int i = 0; i < n; ++i) {
            Sentence s;
            s.text = gen.word() + " " + gen.word();
            Token t;
            t.text = s.text;
            s.tokens.push_back(t);
            doc.sentences.push_back(s);
            if (gen.chance(0.5)) judgments[i] = all[gen.pick(0, 3)];
        }
        const auto parsed = parse_annotated_doc(emit_xml(doc, judgments));
        REQUIRE(parsed.id == doc.id);
        REQUIRE(parsed.sentences.size() == doc.sentences.size());
        for (std::size_t i = 0; i < parsed.sentences.size(); ++i) {
            REQUIRE(parsed.sentences[i].text == doc.sentences[i].text);
            if (auto it = judgments.find(i); it != judgments.end())
                REQUIRE(parsed.sentences[i].judgment == it->second);
            else
                REQUIRE_FALSE(parsed.sentences[i].judgment.has_value());
        }
    }
}

TEST_CASE("model files round-trip arbitrary parameters") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        Parameters p;
        const int n = gen.pick(0, 6);
        for (int i = 0; i < n; ++i) {
            p.abbrev_types.insert(nfc(gen.word()));
            if (gen.chance(0.6)) p.collocations.insert({nfc(gen.word()), nfc(gen.word())});
            if (gen.chance(0.4)) p.sentence_starters.insert(nfc(gen.word()));
            if (gen.chance(0.3)) p.forced_abbrevs.insert(nfc(gen.word()));
        }
        REQUIRE(load_params(save_params(p)) == p);
    }
}

TEST_CASE("metrics are scale-invariant and satisfy ER = 1 - P when fn = tn = 0") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        ConfusionCounts counts{gen.pick(1, 200), gen.pick(0, 200), gen.pick(0, 200),
                               gen.pick(0, 200)};
        const int scale = gen.pick(2, 9);
        const ConfusionCounts scaled{counts.tp * scale, counts.tn * scale,
                                     counts.fp * scale, counts.fn * scale};
        const auto m1 = metrics(counts);
        const auto m2 = metrics(scaled);
        REQUIRE_THAT(m2.precision, Catch::Matchers::WithinAbs(m1.precision, 1e-12));
        REQUIRE_THAT(m2.recall, Catch::Matchers::WithinAbs(m1.recall, 1e-12));
        REQUIRE_THAT(m2.f1, Catch::Matchers::WithinAbs(m1.f1, 1e-12));
        REQUIRE_THAT(m2.error_rate, Catch::Matchers::WithinAbs(m1.error_rate, 1e-12));
        REQUIRE(m1.precision >= 0.0);
        REQUIRE(m1.f1 <= std::max(m1.precision, m1.recall) + 1e-12);
        REQUIRE(m1.f1 >= std::min(m1.precision, m1.recall) - 1e-12);

        const ConfusionCounts no_neg{counts.tp, 0, counts.fp, 0};
        const auto m3 = metrics(no_neg);
        REQUIRE_THAT(m3.error_rate, Catch::Matchers::WithinAbs(1.0 - m3.precision, 1e-12));
    }
}

TEST_CASE("pair_llr is non-negative and scales with corpus replication") {
    Gen gen;
    for (int c = 0; c < kCases; ++c) {
        const std::int64_t n = gen.pick(10, 5000);
        const std::int64_t c1 = gen.pick(1, static_cast<int>(n / 2));
        const std::int64_t c2 = gen.pick(1, static_cast<int>(n / 2));
        const std::int64_t c12 = gen.pick(0, static_cast<int>(std::min(c1, c2)));
        const double v = pair_llr(c1, c2, c12, n);
        REQUIRE(v >= -1e-6);
        REQUIRE_THAT(pair_llr(2 * c1, 2 * c2, 2 * c12, 2 * n),
                     Catch::Matchers::WithinAbs(2.0 * v, 1e-6 + 2e-9 * std::abs(v)));
    }
}
