#pragma once

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sbd/errors.hpp"
#include "sbd/tokenizer.hpp"
#include "sbd/unicode.hpp"

namespace sbd {

// The trained model. Abbreviation keys are stored period-stripped.
struct Parameters {
    std::set<TypeKey> abbrev_types;
    std::set<std::pair<TypeKey, TypeKey>> collocations;
    std::set<TypeKey> sentence_starters;
    std::set<TypeKey> forced_abbrevs;

    friend bool operator==(const Parameters&, const Parameters&) = default;

    bool is_abbrev(const TypeKey& stripped) const {
        return abbrev_types.contains(stripped) || forced_abbrevs.contains(stripped);
    }
};

inline constexpr std::string_view kParamsHeader = "PUNKTPARAMS v1";

inline std::string save_params(const Parameters& p) {
    std::ostringstream out;
    out << kParamsHeader << "\n";
    out << "[abbreviations]\n";
    for (const auto& a : p.abbrev_types) out << a << "\n";
    out << "[collocations]\n";
    for (const auto& [a, b] : p.collocations) out << a << "\t" << b << "\n";
    out << "[sentence_starters]\n";
    for (const auto& s : p.sentence_starters) out << s << "\n";
    out << "[forced_abbreviations]\n";
    for (const auto& f : p.forced_abbrevs) out << f << "\n";
    return out.str();
}

inline Parameters load_params(std::string_view bytes,
                              std::vector<std::string>* warnings = nullptr) {
    std::istringstream in{std::string(bytes)};
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty model file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kParamsHeader)
        throw FormatError("unsupported model version header: " + line);

    Parameters p;
    std::string section;
    auto warn_dup = [&](const std::string& entry) {
        if (warnings) warnings->push_back("duplicate entry ignored: " + entry);
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '[') {
            section = line;
            if (section != "[abbreviations]" && section != "[collocations]" &&
                section != "[sentence_starters]" && section != "[forced_abbreviations]")
                throw FormatError("unknown model section: " + section);
            continue;
        }
        if (section == "[collocations]") {
            auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw FormatError("collocation entry is not tab-separated: " + line);
            auto pair = std::make_pair(nfc(line.substr(0, tab)), nfc(line.substr(tab + 1)));
            if (!p.collocations.insert(pair).second) warn_dup(line);
        } else if (section == "[abbreviations]") {
            if (!p.abbrev_types.insert(nfc(line)).second) warn_dup(line);
        } else if (section == "[sentence_starters]") {
            if (!p.sentence_starters.insert(nfc(line)).second) warn_dup(line);
        } else if (section == "[forced_abbreviations]") {
            if (!p.forced_abbrevs.insert(nfc(line)).second) warn_dup(line);
        } else {
            throw FormatError("entry before any section: " + line);
        }
    }
    return p;
}

}  // namespace sbd
