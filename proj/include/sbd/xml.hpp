#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbd/errors.hpp"
#include "sbd/segmenter.hpp"

namespace sbd {

enum class Judgment { tp, tn, fp, fn };

inline std::string_view to_string(Judgment j) {
    switch (j) {
        case Judgment::tp: return "tp";
        case Judgment::tn: return "tn";
        case Judgment::fp: return "fp";
        case Judgment::fn: return "fn";
    }
    return "";
}

inline std::optional<Judgment> judgment_from_string(std::string_view s) {
    if (s == "tp") return Judgment::tp;
    if (s == "tn") return Judgment::tn;
    if (s == "fp") return Judgment::fp;
    if (s == "fn") return Judgment::fn;
    return std::nullopt;
}

struct AnnotatedSentence {
    std::string text;
    std::optional<Judgment> judgment;
    friend bool operator==(const AnnotatedSentence&, const AnnotatedSentence&) = default;
};

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace detail

// Serializes a segmented document: one <s> element per sentence, with an
// optional judgment attribute.
inline std::string emit_xml(const SegmentedDocument& doc,
                            const std::map<std::size_t, Judgment>& judgments = {}) {
    for (const auto& [idx, j] : judgments)
        if (idx >= doc.sentences.size())
            throw std::invalid_argument("judgment index out of range: " + std::to_string(idx));
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (doc.sentences.empty()) {
        out += "<doc id=\"" + detail::xml_escape(doc.id) + "\"/>\n";
        return out;
    }
    out += "<doc id=\"" + detail::xml_escape(doc.id) + "\">\n";
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        out += "  <s";
        if (auto it = judgments.find(i); it != judgments.end()) {
            out += " type=\"";
            out += to_string(it->second);
            out += "\"";
        }
        out += ">";
        out += detail::xml_escape(doc.sentences[i].text);
        out += "</s>\n";
    }
    out += "</doc>\n";
    return out;
}

namespace detail {

// Minimal cursor-based reader for the document format above, tracking
// line/column for error messages.
class XmlCursor {
  public:
    explicit XmlCursor(std::string_view s) : s_(s) {}

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    char next() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
            next();
    }

    bool try_consume(std::string_view lit) {
        if (s_.substr(pos_, lit.size()) != lit) return false;
        for (std::size_t i = 0; i < lit.size(); ++i) next();
        return true;
    }

    void expect(std::string_view lit, std::string_view what) {
        if (!try_consume(lit)) fail(std::string("expected ") + std::string(what));
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw FormatError("malformed XML at line " + std::to_string(line_) + ", column " +
                          std::to_string(col_) + ": " + msg);
    }

    std::string read_until(char stop, std::string_view what) {
        std::string out;
        while (true) {
            if (eof()) fail("unterminated " + std::string(what));
            if (peek() == stop) return out;
            out.push_back(next());
        }
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

inline std::string xml_unescape(const std::string& s, XmlCursor& cur) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '&') {
            out.push_back(s[i]);
            continue;
        }
        auto rest = std::string_view(s).substr(i);
        if (rest.starts_with("&amp;")) out.push_back('&'), i += 4;
        else if (rest.starts_with("&lt;")) out.push_back('<'), i += 3;
        else if (rest.starts_with("&gt;")) out.push_back('>'), i += 3;
        else if (rest.starts_with("&quot;")) out.push_back('"'), i += 5;
        else if (rest.starts_with("&apos;")) out.push_back('\''), i += 5;
        else cur.fail("unknown XML entity");
    }
    return out;
}

}  // namespace detail

struct ParsedAnnotatedDoc {
    std::string id;
    std::vector<AnnotatedSentence> sentences;
};

inline ParsedAnnotatedDoc parse_annotated_doc(std::string_view bytes) {
    detail::XmlCursor cur(bytes);
    cur.skip_ws();
    if (cur.try_consume("<?xml")) {
        cur.read_until('>', "XML declaration");
        cur.expect(">", "'>'");
    }
    cur.skip_ws();
    cur.expect("<doc", "<doc> element");
    cur.skip_ws();
    ParsedAnnotatedDoc doc;
    if (cur.try_consume("id=\"")) {
        doc.id = detail::xml_unescape(cur.read_until('"', "id attribute"), cur);
        cur.expect("\"", "closing quote");
    }
    cur.skip_ws();
    if (cur.try_consume("/>")) return doc;
    cur.expect(">", "'>' closing <doc>");

    while (true) {
        cur.skip_ws();
        if (cur.try_consume("</doc>")) break;
        cur.expect("<s", "<s> element");
        AnnotatedSentence sentence;
        cur.skip_ws();
        if (cur.try_consume("type=\"")) {
            const std::string value = cur.read_until('"', "type attribute");
            cur.expect("\"", "closing quote");
            auto j = judgment_from_string(value);
            if (!j) throw FormatError("unknown judgment " + value);
            sentence.judgment = j;
            cur.skip_ws();
        }
        cur.expect(">", "'>' closing <s>");
        sentence.text = detail::xml_unescape(cur.read_until('<', "sentence text"), cur);
        cur.expect("</s>", "</s> closing tag");
        doc.sentences.push_back(std::move(sentence));
    }
    return doc;
}

inline std::vector<AnnotatedSentence> parse_annotated_xml(std::string_view bytes) {
    return parse_annotated_doc(bytes).sentences;
}

}  // namespace sbd
