#include "doctest.h"

#include <string>

#include "qstree/qstree.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { qst_string_free(p); }
    std::string view() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("parse errors surface with line numbers") {
    qst_spec* s = nullptr;
    CHECK(qst_spec_parse("qst 1\ndegree 3\nbogus\n", &s) == QST_ERR_PARSE);
    CHECK(std::string(qst_last_error()).find("line 3") != std::string::npos);
    CHECK(s == nullptr);
}

TEST_CASE("example output re-parses and re-validates") {
    for (const char* id : {"ex-basic(3)", "ex-nonray", "ex-n0eq1", "ex-loops-n0eq1", "ex-cycleG",
                           "ex-n0-ne-n1", "mono(3)", "word(4)"}) {
        Str text;
        REQUIRE(qst_example_text(id, &text.p) == QST_OK);
        qst_spec* s = nullptr;
        CHECK(qst_spec_parse(text.p, &s) == QST_OK);
        Str again;
        CHECK(qst_spec_serialize(s, &again.p) == QST_OK);
        qst_spec_free(s);
    }
    Str text;
    CHECK(qst_example_text("no-such-fixture", &text.p) == QST_ERR_PARSE);
}

TEST_CASE("complexity table through the shared surface") {
    qst_spec* s = nullptr;
    REQUIRE(qst_spec_example("ex-basic(3)", &s) == QST_OK);
    qst_analysis* a = nullptr;
    REQUIRE(qst_analysis_create(s, 6, &a) == QST_OK);
    Str csv;
    REQUIRE(qst_complexity_csv(a, &csv.p) == QST_OK);
    CHECK(csv.view().rfind("n,b,specials,increment\n0,3,1,1\n1,4,1,1\n", 0) == 0);
    Str balls;
    CHECK(qst_balls_text(a, 3, 1, &balls.p) == QST_OK);
    CHECK(balls.view().find("radius 3: 6 classes") != std::string::npos);
    CHECK(qst_balls_text(a, 40, 0, &balls.p) == QST_ERR_LIMIT);
    qst_analysis_free(a);
    qst_spec_free(s);
}

TEST_CASE("structure and tail quotient through the shared surface") {
    qst_spec* s = nullptr;
    REQUIRE(qst_spec_example("ex-n0-ne-n1", &s) == QST_OK);
    qst_analysis* a = nullptr;
    REQUIRE(qst_analysis_create(s, 8, &a) == QST_OK);
    Str text;
    REQUIRE(qst_structure_text(a, &text.p) == QST_OK);
    CHECK(text.view().find("N0=0\n") != std::string::npos);
    CHECK(text.view().find("N1=1\n") != std::string::npos);
    CHECK(text.view().find("Z=cycle(4)\n") != std::string::npos);
    Str zdoc;
    REQUIRE(qst_tail_quotient_qst(a, &zdoc.p) == QST_OK);
    qst_spec* z = nullptr;
    CHECK(qst_spec_parse(zdoc.p, &z) == QST_OK);
    qst_spec_free(z);
    qst_analysis_free(a);
    qst_spec_free(s);
}

TEST_CASE("full invariant suite on the constant coloring") {
    qst_spec* s = nullptr;
    REQUIRE(qst_spec_example("mono(3)", &s) == QST_OK);
    qst_analysis* a = nullptr;
    REQUIRE(qst_analysis_create(s, 6, &a) == QST_OK);
    Str report;
    int exit_code = -1;
    REQUIRE(qst_check_report(a, &report.p, &exit_code) == QST_OK);
    CHECK(exit_code == 0);
    CHECK(report.view().find("[ok]") != std::string::npos);
    CHECK(report.view().find("[FAIL]") == std::string::npos);
    qst_analysis_free(a);
    qst_spec_free(s);
}

TEST_CASE("word surface") {
    Str report;
    REQUIRE(qst_word_report(8, 7, &report.p) == QST_OK);
    CHECK(report.view().find("X2=baaabab") != std::string::npos);
    int exit_code = -1;
    Str check;
    REQUIRE(qst_word_check(10, &check.p, &exit_code) == QST_OK);
    CHECK(exit_code == 0);
}
