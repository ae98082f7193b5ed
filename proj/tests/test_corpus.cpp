#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "sbd/corpus.hpp"

using namespace sbd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("sbd_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    void write(const std::string& rel, const std::string& bytes) const {
        const fs::path p = path / rel;
        fs::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        out << bytes;
    }
};

Document make_doc(const std::string& id, int n_lines) {
    std::string text;
    for (int i = 0; i < n_lines; ++i) text += "دێر " + std::to_string(i) + "\n";
    return document_from_text(id, id, text);
}

}  // namespace

TEST_CASE("ingest normalization handles CRLF, CR and BOM") {
    const auto doc = document_from_text("d", "d", "ا\r\nب");
    REQUIRE(doc.lines.size() == 2);
    CHECK(doc.lines[0].text == "ا");
    CHECK(doc.lines[1].text == "ب");

    const auto cr = document_from_text("d", "d", "ا\rب");
    REQUIRE(cr.lines.size() == 2);

    const auto bom = document_from_text("d", "d", "\xEF\xBB\xBFا");
    REQUIRE(bom.lines.size() == 1);
    CHECK(bom.lines[0].text == "ا");
}

TEST_CASE("line spans are ascending and rebuild the normalized text") {
    const auto doc = document_from_text("d", "d", "یەک\nدوو\n\nسێ");
    REQUIRE(doc.lines.size() == 4);
    std::size_t prev_end = 0;
    for (std::size_t i = 0; i < doc.lines.size(); ++i) {
        const auto& l = doc.lines[i];
        if (i > 0) CHECK(l.source_span.begin == prev_end + 1);
        CHECK(l.source_span.end - l.source_span.begin == l.text.size());
        prev_end = l.source_span.end;
    }
    CHECK(doc.lines[2].text.empty());
}

TEST_CASE("invalid UTF-8 is reported with a byte offset") {
    CHECK_THROWS_WITH(document_from_text("d", "d", std::string("ab\xFFцد")),
                      Catch::Matchers::ContainsSubstring("byte offset 2"));
}

TEST_CASE("load_corpus on an empty directory returns an empty list") {
    TempDir dir;
    CHECK(load_corpus(dir.path).empty());
}

TEST_CASE("load_corpus derives ids and strata keys from paths") {
    TempDir dir;
    dir.write("math/grade7.txt", "ا\n");
    dir.write("math/grade8.txt", "ب\n");
    dir.write("math/notes.md", "ignored\n");
    const auto docs = load_corpus(dir.path);
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].id == "math/grade7.txt");
    CHECK(docs[0].strata_key == "math/grade7");
    CHECK(docs[1].strata_key == "math/grade8");
}

TEST_CASE("load_corpus rejects a missing root") {
    CHECK_THROWS_AS(load_corpus("/nonexistent/sbd/corpus"), IoError);
}

TEST_CASE("load_corpus names the file on bad UTF-8") {
    TempDir dir;
    dir.write("a/bad.txt", std::string("\xC3("));
    CHECK_THROWS_WITH(load_corpus(dir.path),
                      Catch::Matchers::ContainsSubstring("bad.txt"));
}

TEST_CASE("split allocates the first ceil(ratio*n) lines to dev") {
    const auto split = split_corpus({make_doc("a", 10)}, 0.9);
    REQUIRE(split.dev.size() == 1);
    REQUIRE(split.test.size() == 1);
    CHECK(split.dev[0].id == "a#dev");
    CHECK(split.dev[0].lines.size() == 9);
    CHECK(split.test[0].id == "a#test");
    REQUIRE(split.test[0].lines.size() == 1);
    CHECK(split.test[0].lines[0] == make_doc("a", 10).lines[9]);
}

TEST_CASE("a single-line document goes wholly to dev") {
    const auto split = split_corpus({make_doc("a", 1)}, 0.9);
    CHECK(split.dev[0].lines.size() == 1);
    CHECK(split.test.empty());
}

TEST_CASE("every stratum contributes to both sides") {
    std::vector<Document> docs;
    for (const char* id : {"wane/a", "zanist/b"}) {
        auto d = make_doc(id, 20);
        d.strata_key = std::string(id).substr(0, std::string(id).find('/'));
        docs.push_back(d);
    }
    const auto split = split_corpus(docs, 0.9);
    REQUIRE(split.dev.size() == 2);
    REQUIRE(split.test.size() == 2);
    for (const auto& d : split.dev) CHECK(d.lines.size() == 18);
    for (const auto& d : split.test) CHECK(d.lines.size() == 2);
}

TEST_CASE("split rejects bad inputs, warns on empty documents") {
    CHECK_THROWS_AS(split_corpus({make_doc("a", 3)}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(split_corpus({make_doc("a", 3)}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(split_corpus({}, 0.9), std::invalid_argument);

    const auto split = split_corpus({make_doc("a", 0), make_doc("b", 4)}, 0.5);
    REQUIRE(split.warnings.size() == 1);
    CHECK(split.dev.size() == 2);
}

TEST_CASE("split partitions lines without reordering") {
    const auto doc = make_doc("a", 7);
    const auto split = split_corpus({doc}, 0.4);
    std::vector<Line> joined = split.dev[0].lines;
    joined.insert(joined.end(), split.test[0].lines.begin(), split.test[0].lines.end());
    CHECK(joined == doc.lines);
}

TEST_CASE("split is deterministic") {
    const std::vector<Document> docs{make_doc("b", 13), make_doc("a", 5)};
    const auto s1 = split_corpus(docs, 0.9);
    const auto s2 = split_corpus(docs, 0.9);
    CHECK(s1.dev == s2.dev);
    CHECK(s1.test == s2.test);
}
