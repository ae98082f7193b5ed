#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbd/segmenter.hpp"
#include "sbd/xml.hpp"

namespace sbd {

struct ConfusionCounts {
    std::int64_t tp = 0, tn = 0, fp = 0, fn = 0;

    std::int64_t total() const { return tp + tn + fp + fn; }
    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
    ConfusionCounts& operator+=(const ConfusionCounts& o) {
        tp += o.tp;
        tn += o.tn;
        fp += o.fp;
        fn += o.fn;
        return *this;
    }
};

struct Metrics {
    double precision = 0.0, recall = 0.0, f1 = 0.0, error_rate = 0.0;
};

struct MetricError : std::runtime_error {
    explicit MetricError(const std::string& metric)
        : std::runtime_error("undefined metric: " + metric) {}
};

inline ConfusionCounts confusion_from_annotations(
    const std::vector<AnnotatedSentence>& sentences) {
    ConfusionCounts c;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (!sentences[i].judgment)
            throw std::invalid_argument("sentence " + std::to_string(i) +
                                        " has no judgment");
        switch (*sentences[i].judgment) {
            case Judgment::tp: ++c.tp; break;
            case Judgment::tn: ++c.tn; break;
            case Judgment::fp: ++c.fp; break;
            case Judgment::fn: ++c.fn; break;
        }
    }
    return c;
}

// Token-level boundary comparison: a boundary is a token that ends a
// sentence. Requires identical token streams.
inline ConfusionCounts boundary_confusion(const SegmentedDocument& pred,
                                          const SegmentedDocument& gold) {
    auto stream = [](const SegmentedDocument& d) {
        std::vector<std::string> tokens;
        std::set<std::size_t> boundaries;
        for (const auto& s : d.sentences) {
            for (const auto& t : s.tokens) tokens.push_back(t.text);
            boundaries.insert(tokens.size() - 1);
        }
        return std::make_pair(tokens, boundaries);
    };
    const auto [pred_tokens, pred_bounds] = stream(pred);
    const auto [gold_tokens, gold_bounds] = stream(gold);
    if (pred_tokens != gold_tokens)
        throw std::invalid_argument("documents not comparable: token streams differ");

    ConfusionCounts c;
    for (std::size_t b : pred_bounds)
        gold_bounds.contains(b) ? ++c.tp : ++c.fp;
    for (std::size_t b : gold_bounds)
        if (!pred_bounds.contains(b)) ++c.fn;
    c.tn = static_cast<std::int64_t>(pred_tokens.size()) - c.tp - c.fp - c.fn;
    return c;
}

inline Metrics metrics(const ConfusionCounts& c) {
    if (c.total() < 1) throw MetricError("all (no counts)");
    if (c.tp + c.fp < 1) throw MetricError("precision");
    if (c.tp + c.fn < 1) throw MetricError("recall");
    Metrics m;
    m.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    m.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    m.f1 = (m.precision + m.recall) > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    m.error_rate = static_cast<double>(c.fp + c.fn) / static_cast<double>(c.total());
    return m;
}

// Percentage rounded half-up to two decimals, matching reported figures.
inline double round_percent(double fraction) {
    return std::floor(fraction * 10000.0 + 0.5) / 100.0;
}

inline std::string format_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", round_percent(fraction));
    return buf;
}

// Machine-readable report block.
inline std::string format_report(const ConfusionCounts& c, const Metrics& m) {
    std::ostringstream out;
    out << "tp=" << c.tp << "\n"
        << "tn=" << c.tn << "\n"
        << "fp=" << c.fp << "\n"
        << "fn=" << c.fn << "\n"
        << "precision=" << format_percent(m.precision) << "%\n"
        << "recall=" << format_percent(m.recall) << "%\n"
        << "f1=" << format_percent(m.f1) << "%\n"
        << "error_rate=" << format_percent(m.error_rate) << "%\n";
    return out.str();
}

}  // namespace sbd
