#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbd/sbd.hpp"

namespace fs = std::filesystem;

namespace {

int log_level() {
    const char* env = std::getenv("SBD_LOG");
    if (!env) return 1;
    const std::string v = env;
    if (v == "debug") return 0;
    if (v == "warn") return 2;
    if (v == "error") return 3;
    return 1;
}

void log_info(const std::string& msg) {
    if (log_level() <= 1) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() <= 0) std::cerr << "[debug] " << msg << "\n";
}

void log_warn(const std::string& msg) {
    if (log_level() <= 2) std::cerr << "[warn] " << msg << "\n";
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sbd::IoError("cannot read file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Atomic write: temp file in the target directory, then rename.
void write_file(const fs::path& path, const std::string& bytes) {
    fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw sbd::IoError("cannot write file: " + tmp.string());
        out << bytes;
        if (!out) throw sbd::IoError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

// Flat output naming: document id with '/' replaced, plus ".xml".
std::string xml_name_for(const std::string& doc_id) {
    std::string name = doc_id;
    std::size_t pos = 0;
    while ((pos = name.find('/', pos)) != std::string::npos) name.replace(pos, 1, "__");
    return name + ".xml";
}

std::set<sbd::TypeKey> load_abbrev_file(const fs::path& path) {
    std::istringstream in(read_file(path));
    std::set<sbd::TypeKey> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.insert(sbd::strip_final_period(sbd::nfc(line)));
    }
    return out;
}

std::string document_text(const sbd::Document& doc) {
    std::string out;
    for (const auto& line : doc.lines) {
        out += line.text;
        out += "\n";
    }
    return out;
}

// Rebuilds a comparable document from gold sentences by retokenizing them.
sbd::SegmentedDocument segmented_from_sentences(
    const std::string& id, const std::vector<sbd::AnnotatedSentence>& sentences) {
    sbd::SegmentedDocument doc;
    doc.id = id;
    for (const auto& s : sentences) {
        sbd::Sentence sent;
        sent.text = s.text;
        sent.tokens = sbd::tokenize_text(s.text);
        if (sent.tokens.empty()) continue;
        doc.sentences.push_back(std::move(sent));
    }
    return doc;
}

int cmd_split(const std::string& in_dir, const std::string& out_dir, double ratio) {
    const auto docs = sbd::load_corpus(in_dir);
    if (docs.empty()) {
        log_info("no input documents");
        return 0;
    }
    const auto split = sbd::split_corpus(docs, ratio);
    for (const auto& w : split.warnings) log_warn(w);
    auto write_side = [&](const std::vector<sbd::Document>& side, const std::string& name) {
        for (const auto& doc : side) {
            std::string rel = doc.id.substr(0, doc.id.rfind('#'));
            write_file(fs::path(out_dir) / name / rel, document_text(doc));
        }
    };
    write_side(split.dev, "dev");
    write_side(split.test, "test");
    log_info("wrote " + std::to_string(split.dev.size()) + " dev and " +
             std::to_string(split.test.size()) + " test documents");
    return 0;
}

int cmd_train(const std::string& in_dir, const std::string& model_path,
              const sbd::TrainConfig& config) {
    const auto docs = sbd::load_corpus(in_dir);
    std::vector<sbd::TokenizedDocument> tokenized;
    tokenized.reserve(docs.size());
    for (const auto& d : docs) tokenized.push_back(sbd::tokenize_document(d));
    const auto params = sbd::train(tokenized, config);
    log_info("learned " + std::to_string(params.abbrev_types.size()) + " abbreviations, " +
             std::to_string(params.collocations.size()) + " collocations, " +
             std::to_string(params.sentence_starters.size()) + " sentence starters");
    if (log_level() <= 0) {
        const auto counts = sbd::collect_counts(tokenized);
        for (const auto& a : params.abbrev_types) {
            std::ostringstream os;
            os.precision(10);
            os << "abbrev " << a << " score=" << sbd::abbrev_score(a, counts);
            log_debug(os.str());
        }
    }
    write_file(model_path, sbd::save_params(params));
    return 0;
}

int cmd_segment(const std::string& in_dir, const std::string& model_path,
                const std::string& abbrev_path, const std::string& out_dir,
                const sbd::SegmenterOptions& opts) {
    auto params = sbd::load_params(read_file(model_path));
    if (!abbrev_path.empty()) params.forced_abbrevs = load_abbrev_file(abbrev_path);
    const auto docs = sbd::load_corpus(in_dir);
    for (const auto& doc : docs) {
        const auto segmented = sbd::segment_document(doc, params, opts);
        write_file(fs::path(out_dir) / xml_name_for(doc.id), sbd::emit_xml(segmented));
    }
    log_info("segmented " + std::to_string(docs.size()) + " documents");
    return 0;
}

std::vector<fs::path> xml_files(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw sbd::IoError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".xml")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

sbd::ConfusionCounts eval_pred_gold(const fs::path& pred_dir, const fs::path& gold_dir) {
    sbd::ConfusionCounts total;
    for (const auto& pred_path : xml_files(pred_dir)) {
        const fs::path gold_path = gold_dir / pred_path.filename();
        if (!fs::exists(gold_path))
            throw sbd::IoError("no gold file for " + pred_path.filename().string());
        const auto pred = sbd::parse_annotated_doc(read_file(pred_path));
        const auto gold = sbd::parse_annotated_doc(read_file(gold_path));
        total += sbd::boundary_confusion(segmented_from_sentences(pred.id, pred.sentences),
                                         segmented_from_sentences(gold.id, gold.sentences));
    }
    return total;
}

int cmd_eval(const std::string& pred_dir, const std::string& gold_dir,
             const std::string& annotated_dir) {
    sbd::ConfusionCounts total;
    if (!annotated_dir.empty()) {
        for (const auto& path : xml_files(annotated_dir))
            total += sbd::confusion_from_annotations(sbd::parse_annotated_xml(read_file(path)));
    } else {
        total = eval_pred_gold(pred_dir, gold_dir);
    }
    std::cout << sbd::format_report(total, sbd::metrics(total));
    return 0;
}

int cmd_reproduce(const std::string& corpus_dir, const std::string& gold_dir,
                  const std::string& out_dir, const sbd::TrainConfig& config) {
    const auto docs = sbd::load_corpus(corpus_dir);
    if (docs.empty()) throw sbd::IoError("reproduce corpus is empty: " + corpus_dir);
    const auto split = sbd::split_corpus(docs, 0.9);
    for (const auto& w : split.warnings) log_warn(w);

    std::vector<sbd::TokenizedDocument> dev_tokens;
    for (const auto& d : split.dev) dev_tokens.push_back(sbd::tokenize_document(d));
    const auto trained = sbd::train(dev_tokens, config);
    write_file(fs::path(out_dir) / "model.txt", sbd::save_params(trained));
    log_info("trained on " + std::to_string(split.dev.size()) + " dev documents");

    struct Run {
        std::string name;
        sbd::Parameters params;
        sbd::ConfusionCounts counts;
    };
    std::vector<Run> runs(2);
    runs[0].name = "with_abbrevs";
    runs[0].params = trained;
    runs[0].params.forced_abbrevs = sbd::forced_abbrev_list_default();
    runs[1].name = "without_abbrevs";
    runs[1].params = trained;

    for (auto& run : runs) {
        for (const auto& doc : split.test) {
            const auto segmented = sbd::segment_document(doc, run.params);
            const std::string name = xml_name_for(doc.id);
            write_file(fs::path(out_dir) / run.name / name, sbd::emit_xml(segmented));
            const fs::path gold_path = fs::path(gold_dir) / name;
            if (!fs::exists(gold_path))
                throw sbd::IoError("no gold file for " + name);
            const auto gold = sbd::parse_annotated_doc(read_file(gold_path));
            run.counts += sbd::boundary_confusion(
                segmented, segmented_from_sentences(gold.id, gold.sentences));
        }
    }

    // side-by-side metric blocks
    std::vector<std::string> left, right;
    for (const auto& run : runs) {
        std::istringstream block(run.name + "\n" +
                                 sbd::format_report(run.counts, sbd::metrics(run.counts)));
        auto& col = (&run == &runs[0]) ? left : right;
        std::string line;
        while (std::getline(block, line)) col.push_back(line);
    }
    for (std::size_t i = 0; i < std::max(left.size(), right.size()); ++i) {
        std::string l = i < left.size() ? left[i] : "";
        l.resize(28, ' ');
        std::cout << l << (i < right.size() ? right[i] : "") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unsupervised sentence boundary detection for Sorani Kurdish text"};
    app.require_subcommand(1);

    sbd::TrainConfig config;
    auto add_thresholds = [&](CLI::App* cmd) {
        cmd->add_option("--abbrev-threshold", config.abbrev_threshold,
                        "abbreviation score threshold");
        cmd->add_option("--colloc-threshold", config.colloc_threshold,
                        "collocation log-likelihood threshold");
        cmd->add_option("--starter-threshold", config.starter_threshold,
                        "sentence-starter log-likelihood threshold");
    };

    std::string in_dir, out_dir, model_path, abbrev_path, pred_dir, gold_dir, annotated_dir,
        corpus_dir;
    double ratio = 0.9;
    sbd::SegmenterOptions seg_opts;

    auto* split = app.add_subcommand("split", "stratified dev/test split of a corpus");
    split->add_option("--in", in_dir, "corpus root directory")->required()->check(CLI::ExistingDirectory);
    split->add_option("--out", out_dir, "output directory (dev/ and test/ trees)")->required();
    split->add_option("--ratio", ratio, "dev fraction in (0,1)");

    auto* train = app.add_subcommand("train", "train a segmentation model");
    train->add_option("--in", in_dir, "dev corpus directory")->required()->check(CLI::ExistingDirectory);
    train->add_option("--model", model_path, "output model file")->required();
    add_thresholds(train);

    auto* segment = app.add_subcommand("segment", "segment a corpus into XML sentence files");
    segment->add_option("--in", in_dir, "input corpus directory")->required()->check(CLI::ExistingDirectory);
    segment->add_option("--model", model_path, "model file")->required()->check(CLI::ExistingFile);
    segment->add_option("--abbrev", abbrev_path, "forced abbreviations, one per line")
        ->check(CLI::ExistingFile);
    segment->add_option("--out", out_dir, "output directory")->required();
    segment->add_flag("--ellipsis-breaks", seg_opts.ellipsis_breaks,
                      "treat ellipses as sentence breaks");

    auto* eval = app.add_subcommand("eval", "compute precision/recall/F1/error rate");
    eval->add_option("--pred", pred_dir, "predicted XML directory");
    eval->add_option("--gold", gold_dir, "gold XML directory");
    eval->add_option("--annotated", annotated_dir, "manually annotated XML directory");

    auto* reproduce =
        app.add_subcommand("reproduce", "split, train, then segment with and without the "
                                        "bundled forced abbreviations and compare");
    reproduce->add_option("--corpus", corpus_dir, "corpus root")->required()->check(CLI::ExistingDirectory);
    reproduce->add_option("--gold", gold_dir, "gold XML directory")->required()->check(CLI::ExistingDirectory);
    reproduce->add_option("--out", out_dir, "output directory")->required();
    add_thresholds(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage failures exit 1
    }

    try {
        if (split->parsed()) return cmd_split(in_dir, out_dir, ratio);
        if (train->parsed()) return cmd_train(in_dir, model_path, config);
        if (segment->parsed())
            return cmd_segment(in_dir, model_path, abbrev_path, out_dir, seg_opts);
        if (eval->parsed()) {
            if (annotated_dir.empty() && (pred_dir.empty() || gold_dir.empty())) {
                std::cerr << "eval requires --annotated or both --pred and --gold\n";
                return 1;
            }
            return cmd_eval(pred_dir, gold_dir, annotated_dir);
        }
        if (reproduce->parsed()) return cmd_reproduce(corpus_dir, gold_dir, out_dir, config);
    } catch (const sbd::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sbd::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
