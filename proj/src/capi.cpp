#include "gitstab.h"

#include <cstring>
#include <string>

#include "gitstab/jsonio.hpp"
#include "gitstab/parse.hpp"

struct gitstab_map {
    gitstab::ProjMap impl;
};

struct gitstab_henon {
    gitstab::HenonSpec impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return GITSTAB_OK;
    } catch (const gitstab::ParseError& e) {
        g_last_error = e.what();
        return GITSTAB_ERR_PARSE;
    } catch (const gitstab::UndecidedOverQ& e) {
        g_last_error = e.what();
        return GITSTAB_ERR_UNDECIDED;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return GITSTAB_ERR_INVALID;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return GITSTAB_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GITSTAB_ERR_INTERNAL;
    }
}

int require(bool cond) {
    if (cond) return GITSTAB_OK;
    g_last_error = "null argument";
    return GITSTAB_ERR_NULL;
}

int emit_json(const nlohmann::json& j, char** json_out) {
    *json_out = dup_string(j.dump());
    return GITSTAB_OK;
}

}  // namespace

extern "C" {

const char* gitstab_version(void) { return "1.0.0"; }

const char* gitstab_last_error(void) { return g_last_error.c_str(); }

void gitstab_free_string(char* s) { std::free(s); }

int gitstab_map_parse(const char* text, gitstab_map** out) {
    if (int rc = require(text && out)) return rc;
    return guarded([&] { *out = new gitstab_map{gitstab::parse_map(text)}; });
}

int gitstab_map_format(const gitstab_map* m, char** text_out) {
    if (int rc = require(m && text_out)) return rc;
    return guarded([&] { *text_out = dup_string(gitstab::format_map(m->impl)); });
}

int gitstab_map_info(const gitstab_map* m, int* dim_out, int* degree_out) {
    if (int rc = require(m && dim_out && degree_out)) return rc;
    *dim_out = m->impl.dim();
    *degree_out = m->impl.degree();
    return GITSTAB_OK;
}

void gitstab_map_free(gitstab_map* m) { delete m; }

int gitstab_henon_parse(const char* text, gitstab_henon** out) {
    if (int rc = require(text && out)) return rc;
    return guarded([&] { *out = new gitstab_henon{gitstab::parse_henon(text)}; });
}

int gitstab_henon_format(const gitstab_henon* h, char** text_out) {
    if (int rc = require(h && text_out)) return rc;
    return guarded([&] { *text_out = dup_string(gitstab::format_henon(h->impl)); });
}

int gitstab_henon_to_map(const gitstab_henon* h, gitstab_map** out) {
    if (int rc = require(h && out)) return rc;
    return guarded([&] { *out = new gitstab_map{gitstab::homogenize_map(h->impl)}; });
}

void gitstab_henon_free(gitstab_henon* h) { delete h; }

int gitstab_mu(const gitstab_map* m, const long long* weights, int len, char** json_out) {
    if (int rc = require(m && weights && json_out)) return rc;
    return guarded([&] {
        gitstab::WeightVector w(std::vector<long long>(weights, weights + len));
        emit_json(gitstab::jsonio::mu_report(m->impl, w), json_out);
    });
}

int gitstab_destab(const gitstab_map* m, int strict, char** json_out) {
    if (int rc = require(m && json_out)) return rc;
    return guarded(
        [&] { emit_json(gitstab::jsonio::destab_report(m->impl, strict != 0), json_out); });
}

int gitstab_verify(const gitstab_map* m, const long long* weights, int len, int expect_positive,
                   char** json_out) {
    if (int rc = require(m && weights && json_out)) return rc;
    return guarded([&] {
        gitstab::WeightVector w(std::vector<long long>(weights, weights + len));
        gitstab::MuSign expect =
            expect_positive ? gitstab::MuSign::positive : gitstab::MuSign::non_negative;
        emit_json(gitstab::jsonio::verify_report(m->impl, w, expect), json_out);
    });
}

int gitstab_iterate(const gitstab_map* m, int n, char** json_out) {
    if (int rc = require(m && json_out)) return rc;
    return guarded([&] { emit_json(gitstab::jsonio::iterate_report(m->impl, n), json_out); });
}

int gitstab_classify22(const gitstab_map* m, char** json_out) {
    if (int rc = require(m && json_out)) return rc;
    return guarded([&] { emit_json(gitstab::jsonio::classify22_report(m->impl), json_out); });
}

int gitstab_line_image(const gitstab_map* m, const char* line_text, char** json_out) {
    if (int rc = require(m && line_text && json_out)) return rc;
    return guarded([&] {
        gitstab::LineP2 line = gitstab::parse_line(line_text);
        emit_json(gitstab::jsonio::line_image_report(m->impl, line), json_out);
    });
}

int gitstab_henon_build(const gitstab_henon* h, char** json_out) {
    if (int rc = require(h && json_out)) return rc;
    return guarded([&] { emit_json(gitstab::jsonio::henon_build_report(h->impl), json_out); });
}

int gitstab_table(int N, int k, int d, char** json_out) {
    if (int rc = require(json_out)) return rc;
    return guarded([&] { emit_json(gitstab::jsonio::table_report(N, k, d), json_out); });
}

int gitstab_audit_henon22(const gitstab_henon* h, unsigned long long seed, int per_class,
                          char** json_out) {
    if (int rc = require(h && json_out)) return rc;
    return guarded(
        [&] { emit_json(gitstab::jsonio::audit_report(h->impl, seed, per_class), json_out); });
}

}  // extern "C"
