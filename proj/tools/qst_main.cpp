// qst: command-line frontend for the qstree shared library.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qstree/qstree.h"

namespace {

int fail_with(int rc) {
    std::cerr << "error: " << qst_last_error() << "\n";
    return rc == QST_OK ? 1 : rc;
}

// <spec> arguments accept a file path or an embedded fixture id like
// ex-basic(3), ex-n0eq1, mono(3), word(4).
int load_spec(const std::string& arg, qst_spec** out) {
    std::ifstream in(arg);
    if (in.good()) {
        std::stringstream ss;
        ss << in.rdbuf();
        return qst_spec_parse(ss.str().c_str(), out);
    }
    return qst_spec_example(arg.c_str(), out);
}

bool is_word_fixture(const std::string& arg, int* k) {
    if (arg.rfind("word", 0) != 0) return false;
    *k = 4;
    auto p = arg.find_first_of("(:");
    if (p != std::string::npos) *k = std::atoi(arg.c_str() + p + 1);
    return true;
}

int emit(const char* text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

struct SpecHandle {
    qst_spec* s = nullptr;
    ~SpecHandle() { qst_spec_free(s); }
};
struct AnalysisHandle {
    qst_analysis* a = nullptr;
    ~AnalysisHandle() { qst_analysis_free(a); }
};
struct Str {
    char* p = nullptr;
    ~Str() { qst_string_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analyses of colorings of regular trees given as edge-indexed quotient graphs"};
    app.set_version_flag("--version", qst_version());
    app.footer(
        "spec arguments accept a qst file path or a fixture id:\n"
        "  ex-basic(c) ex-nonray ex-n0eq1 ex-loops-n0eq1 ex-cycleG ex-n0-ne-n1 mono(d) word(k)\n"
        "Environment: QSTREE_HORIZON_SLACK widens expansion horizons.\n"
        "Exit codes: 0 ok, 1 parse/validation, 2 invariant inconsistency, 3 window/cap limit.");

    std::string spec_arg, out_path;
    int max_n = 8, ball_n = 0, from_n = 1, to_n = 8;
    bool with_codes = false, with_predict = false;

    auto* validate = app.add_subcommand("validate", "parse and validate a description");
    validate->add_option("spec", spec_arg)->required();

    auto* example = app.add_subcommand("example", "print an embedded fixture as qst text");
    example->add_option("fixture", spec_arg)->required();

    auto* complexity = app.add_subcommand("complexity", "ball class counts per radius (CSV)");
    complexity->add_option("spec", spec_arg)->required();
    complexity->add_option("--max-n", max_n, "largest radius")->capture_default_str();
    complexity->add_option("--csv", out_path, "write CSV here instead of stdout");

    auto* balls = app.add_subcommand("balls", "ball classes at one radius");
    balls->add_option("spec", spec_arg)->required();
    balls->add_option("-n", ball_n, "radius")->required();
    balls->add_flag("--codes", with_codes, "include canonical strings");

    auto* fgraph = app.add_subcommand("factor-graph", "adjacency graph of ball classes (DOT)");
    fgraph->add_option("spec", spec_arg)->required();
    fgraph->add_option("-n", ball_n, "radius")->required();
    fgraph->add_option("--dot", out_path, "write DOT here instead of stdout");

    auto* evolve = app.add_subcommand("evolve", "case labels of the class graphs over a window");
    evolve->add_option("spec", spec_arg)->required();
    evolve->add_option("--from", from_n)->capture_default_str();
    evolve->add_option("--to", to_n)->capture_default_str();

    std::string z_path;
    auto* structure = app.add_subcommand("structure", "finite part, shape and tail-side quotient");
    structure->add_option("spec", spec_arg)->required();
    structure->add_option("--max-n", max_n, "analysis window")->capture_default_str();
    structure->add_option("--z", z_path, "also write the tail-side quotient as qst here");

    auto* recurrence = app.add_subcommand("recurrence", "ball recurrence table (CSV)");
    recurrence->add_option("spec", spec_arg)->required();
    recurrence->add_option("--max-n", max_n, "largest radius")->capture_default_str();
    recurrence->add_flag("--predict", with_predict, "include closed-form predictions");
    recurrence->add_option("--csv", out_path, "write CSV here instead of stdout");

    auto* check = app.add_subcommand("check", "run the full invariant suite");
    check->add_option("spec", spec_arg)->required();
    check->add_option("--max-n", max_n, "analysis window")->capture_default_str();

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    if (example->parsed()) {
        Str text;
        int rc = qst_example_text(spec_arg.c_str(), &text.p);
        if (rc != QST_OK) return fail_with(rc);
        std::cout << text.p;
        return 0;
    }

    int word_k = 0;
    bool word = is_word_fixture(spec_arg, &word_k);

    if (validate->parsed()) {
        if (word) word_k = std::max(word_k, 3);
        SpecHandle spec;
        int rc = load_spec(spec_arg, &spec.s);
        if (rc != QST_OK) return fail_with(rc);
        std::cout << "ok\n";
        return 0;
    }

    if (word && (complexity->parsed() || recurrence->parsed() || check->parsed())) {
        // the limit-word tables, not the periodic approximation
        Str text;
        int rc, exit_code = 0;
        int k = std::max(word_k, 3);
        if (check->parsed())
            rc = qst_word_check(std::max(k, 10), &text.p, &exit_code);
        else
            rc = qst_word_report(std::max(k + 6, 10), max_n, &text.p);
        if (rc != QST_OK) return fail_with(rc);
        int e = emit(text.p, out_path);
        return e ? e : exit_code;
    }

    SpecHandle spec;
    int rc = load_spec(spec_arg, &spec.s);
    if (rc != QST_OK) return fail_with(rc);

    int window = max_n;
    if (balls->parsed() || fgraph->parsed()) window = std::max(window, ball_n);
    if (evolve->parsed()) window = std::max(window, to_n);
    AnalysisHandle a;
    rc = qst_analysis_create(spec.s, window, &a.a);
    if (rc != QST_OK) return fail_with(rc);

    Str text;
    if (complexity->parsed()) rc = qst_complexity_csv(a.a, &text.p);
    if (balls->parsed()) rc = qst_balls_text(a.a, ball_n, with_codes ? 1 : 0, &text.p);
    if (fgraph->parsed()) rc = qst_factor_graph_dot(a.a, ball_n, &text.p);
    if (evolve->parsed()) rc = qst_evolution_csv(a.a, from_n, to_n, &text.p);
    if (structure->parsed()) {
        rc = qst_structure_text(a.a, &text.p);
        if (rc == QST_OK && !z_path.empty()) {
            Str zdoc;
            rc = qst_tail_quotient_qst(a.a, &zdoc.p);
            if (rc == QST_OK) {
                int e = emit(zdoc.p, z_path);
                if (e) return e;
            }
        }
    }
    if (recurrence->parsed()) rc = qst_recurrence_csv(a.a, with_predict ? 1 : 0, &text.p);
    if (check->parsed()) {
        int exit_code = 0;
        rc = qst_check_report(a.a, &text.p, &exit_code);
        if (rc != QST_OK) return fail_with(rc);
        std::cout << text.p;
        return exit_code;
    }
    if (rc != QST_OK) return fail_with(rc);
    return emit(text.p, out_path);
}
