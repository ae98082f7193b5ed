#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sbd/errors.hpp"
#include "sbd/unicode.hpp"

namespace sbd {

struct Line {
    std::string text;  // no line terminators
    Span source_span;  // byte offsets into the normalized document
    friend bool operator==(const Line&, const Line&) = default;
};

struct Document {
    std::string id;          // relative path within the corpus root
    std::string strata_key;  // first directory component + file stem
    std::vector<Line> lines;
    friend bool operator==(const Document&, const Document&) = default;
};

struct CorpusSplit {
    std::vector<Document> dev;
    std::vector<Document> test;
    double ratio = 0.0;
    std::vector<std::string> warnings;
};

inline Document document_from_text(std::string id, std::string strata_key,
                                   std::string_view raw) {
    Document doc;
    doc.id = std::move(id);
    doc.strata_key = std::move(strata_key);
    const std::string norm = normalize_text(raw);
    std::size_t pos = 0;
    while (pos < norm.size()) {
        std::size_t nl = norm.find('\n', pos);
        std::size_t end = (nl == std::string::npos) ? norm.size() : nl;
        doc.lines.push_back({norm.substr(pos, end - pos), {pos, end}});
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return doc;
}

inline std::string strata_key_for(const std::filesystem::path& rel) {
    std::string stem = rel.stem().string();
    auto it = rel.begin();
    if (std::distance(rel.begin(), rel.end()) > 1) return it->string() + "/" + stem;
    return stem;
}

// Loads every matching file under `root` as one Document, in path order.
inline std::vector<Document> load_corpus(const std::filesystem::path& root,
                                         std::string_view extension = ".txt") {
    namespace fs = std::filesystem;
    if (!fs::exists(root) || !fs::is_directory(root))
        throw IoError("corpus root does not exist: " + root.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root))
        if (entry.is_regular_file() && entry.path().extension() == extension)
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<Document> docs;
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot read file: " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        const fs::path rel = fs::relative(path, root);
        try {
            docs.push_back(document_from_text(rel.generic_string(),
                                              strata_key_for(rel), buf.str()));
        } catch (const FormatError& e) {
            throw FormatError(path.string() + ": " + e.what());
        }
    }
    return docs;
}

// Deterministic stratified split: within each stratum documents are ordered
// by id and the first ceil(ratio * n_lines) lines of each document go to dev.
inline CorpusSplit split_corpus(const std::vector<Document>& docs, double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("split ratio must be in (0,1)");
    if (docs.empty()) throw std::invalid_argument("cannot split an empty corpus");

    std::map<std::string, std::vector<const Document*>> strata;
    for (const auto& d : docs) strata[d.strata_key].push_back(&d);
    for (auto& [key, group] : strata)
        std::sort(group.begin(), group.end(),
                  [](const Document* a, const Document* b) { return a->id < b->id; });

    CorpusSplit split;
    split.ratio = ratio;
    for (const auto& [key, group] : strata) {
        for (const Document* d : group) {
            const std::size_t n = d->lines.size();
            if (n == 0) {
                split.warnings.push_back("document has no lines, placed in dev: " + d->id);
                split.dev.push_back({d->id + "#dev", d->strata_key, {}});
                continue;
            }
            // small tolerance keeps ceil(0.9 * 10) at 9 despite binary rounding
            const auto dev_n = std::min<std::size_t>(
                n, static_cast<std::size_t>(
                       std::ceil(ratio * static_cast<double>(n) - 1e-9)));
            Document dev{d->id + "#dev", d->strata_key,
                         {d->lines.begin(), d->lines.begin() + dev_n}};
            split.dev.push_back(std::move(dev));
            if (dev_n < n) {
                Document test{d->id + "#test", d->strata_key,
                              {d->lines.begin() + dev_n, d->lines.end()}};
                split.test.push_back(std::move(test));
            }
        }
    }
    return split;
}

}  // namespace sbd
