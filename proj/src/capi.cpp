// extern-C surface over the qst core; opaque handles and error codes only.

#include "qstree/qstree.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <memory>
#include <string>

#include "qst/fixtures.hpp"
#include "qst/report.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int wrap(const std::function<void()>& f) {
    try {
        f();
        return QST_OK;
    } catch (const qst::ParseError& e) {
        g_last_error = e.what();
        return QST_ERR_PARSE;
    } catch (const qst::LimitError& e) {
        g_last_error = e.what();
        return QST_ERR_LIMIT;
    } catch (const qst::Inconsistency& e) {
        g_last_error = e.what();
        return QST_ERR_INCONSISTENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QST_ERR_INCONSISTENT;
    }
}

}  // namespace

struct qst_spec {
    qst::QuotientSpec spec;
};

struct qst_analysis {
    qst::QuotientSpec spec;
    int max_n = 8;
    std::unique_ptr<qst::BallCensus> census;  // window max_n

    qst::BallCensus& window() {
        if (!census) census = qst::BallCensus::build(spec, max_n);
        return *census;
    }
};

extern "C" {

const char* qst_version(void) { return "qstree 1.0"; }

const char* qst_last_error(void) { return g_last_error.c_str(); }

void qst_string_free(char* s) { std::free(s); }

int qst_spec_parse(const char* text, qst_spec** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return QST_ERR_ARG;
    }
    return wrap([&] {
        auto h = std::make_unique<qst_spec>();
        h->spec = qst::parse_spec(text);
        *out = h.release();
    });
}

int qst_spec_example(const char* fixture_id, qst_spec** out) {
    if (!fixture_id || !out) {
        g_last_error = "null argument";
        return QST_ERR_ARG;
    }
    return wrap([&] {
        auto h = std::make_unique<qst_spec>();
        h->spec = qst::fixture_spec(fixture_id);
        *out = h.release();
    });
}

int qst_example_text(const char* fixture_id, char** out) {
    if (!fixture_id || !out) {
        g_last_error = "null argument";
        return QST_ERR_ARG;
    }
    return wrap([&] { *out = dup_string(qst::fixture_qst(fixture_id)); });
}

int qst_spec_serialize(const qst_spec* spec, char** out) {
    if (!spec || !out) {
        g_last_error = "null argument";
        return QST_ERR_ARG;
    }
    return wrap([&] { *out = dup_string(qst::serialize_spec(spec->spec)); });
}

void qst_spec_free(qst_spec* spec) { delete spec; }

int qst_analysis_create(const qst_spec* spec, int max_n, qst_analysis** out) {
    if (!spec || !out || max_n < 0) {
        g_last_error = "null argument or negative window";
        return QST_ERR_ARG;
    }
    return wrap([&] {
        auto h = std::make_unique<qst_analysis>();
        h->spec = spec->spec;
        h->max_n = max_n;
        h->window();  // validate the window eagerly
        *out = h.release();
    });
}

void qst_analysis_free(qst_analysis* a) { delete a; }

int qst_complexity_csv(qst_analysis* a, char** out) {
    if (!a || !out) {
        g_last_error = "null argument";
        return QST_ERR_ARG;
    }
    return wrap([&] { *out = dup_string(qst::complexity_csv(a->window())); });
}

int qst_balls_text(qst_analysis* a, int n, int with_codes, char** out) {
    if (!a || !out || n < 0) {
        g_last_error = "null argument or negative radius";
        return QST_ERR_ARG;
    }
    return wrap([&] {
        if (n > a->max_n) throw qst::LimitError("radius beyond the analysis window");
        *out = dup_string(qst::balls_text(a->window(), n, with_codes != 0));
    });
}

int qst_factor_graph_dot(qst_analysis* a, int n, char** out) {
    if (!a || !out || n < 0) {
        g_last_error = "null argument or negative radius";
        return QST_ERR_ARG;
    }
    return wrap([&] {
        if (n > a->max_n) throw qst::LimitError("radius beyond the analysis window");
        *out = dup_string(qst::factor_graph_dot(a->window(), n));
    });
}

int qst_evolution_csv(qst_analysis* a, int n_lo, int n_hi, char** out) {
    if (!a || !out || n_lo < 0 || n_hi < n_lo) {
        g_last_error = "bad window";
        return QST_ERR_ARG;
    }
    return wrap([&] {
        auto census = qst::BallCensus::build(a->spec, n_hi + 2);
        auto profile = qst::complexity_profile(*census);
        if (!profile.N0) throw qst::Inconsistency("no quasi-Sturmian window; no evolution trace");
        qst::StructureBasics sb = qst::structure_basics(*census);
        auto cyc = qst::detect_cyclic(*census, *profile.N0, n_hi);
        if (cyc.verdict == qst::CyclicVerdict::Cyclic)
            throw qst::Inconsistency("cyclic coloring: case labels are not defined");
        qst::MarkerChains ch = qst::build_marker_chains(*census, *profile.N0);
        int lo = std::max(n_lo, *profile.N0 + 1);
        qst::EvolutionTrace tr = qst::evolve(*census, ch, lo, n_hi, &sb.in_G);
        if (!tr.violations.empty())
            throw qst::Inconsistency("evolution pattern violation: " + tr.violations.front());
        *out = dup_string(qst::evolution_csv(*census, tr));
    });
}

int qst_structure_text(qst_analysis* a, char** out) {
    if (!a || !out) {
        g_last_error = "null argument";
        return QST_ERR_ARG;
    }
    return wrap([&] { *out = dup_string(qst::structure_text(a->spec, a->max_n)); });
}

int qst_tail_quotient_qst(qst_analysis* a, char** out) {
    if (!a || !out) {
        g_last_error = "null argument";
        return QST_ERR_ARG;
    }
    return wrap([&] {
        auto census = qst::BallCensus::build(a->spec, a->max_n + 2);
        qst::StructureBasics sb = qst::structure_basics(*census);
        qst::ZGraph z = qst::derive_Z(*census, sb);
        *out = dup_string(qst::serialize_spec(qst::extension_spec(z)));
    });
}

int qst_recurrence_csv(qst_analysis* a, int with_predictions, char** out) {
    if (!a || !out) {
        g_last_error = "null argument";
        return QST_ERR_ARG;
    }
    return wrap(
        [&] { *out = dup_string(qst::recurrence_csv(a->spec, a->max_n, with_predictions != 0)); });
}

int qst_check_report(qst_analysis* a, char** out, int* exit_code) {
    if (!a || !out || !exit_code) {
        g_last_error = "null argument";
        return QST_ERR_ARG;
    }
    return wrap([&] {
        qst::CheckOutcome oc = qst::run_check(a->spec, a->max_n);
        *out = dup_string(oc.report);
        *exit_code = oc.exit_code();
    });
}

int qst_word_report(int k_max, int max_n, char** out) {
    if (!out || k_max < 3 || max_n < 1) {
        g_last_error = "bad argument";
        return QST_ERR_ARG;
    }
    return wrap([&] { *out = dup_string(qst::word_report(k_max, max_n)); });
}

int qst_word_check(int k_max, char** out, int* exit_code) {
    if (!out || !exit_code || k_max < 3) {
        g_last_error = "bad argument";
        return QST_ERR_ARG;
    }
    return wrap([&] {
        qst::CheckOutcome oc = qst::run_word_check(k_max);
        *out = dup_string(oc.report);
        *exit_code = oc.exit_code();
    });
}

}  // extern "C"
