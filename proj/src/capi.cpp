#include "helpzc.h"

#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

#include "helpzc/report.hpp"
#include "helpzc/solver.hpp"
#include "helpzc/tables.hpp"

struct helpzc_group {
    helpzc::GroupData data;
};

struct helpzc_report {
    helpzc::Report report;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

helpzc_status set_error(helpzc_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

helpzc_status guard(const std::function<void()>& body) {
    try {
        body();
        g_last_error.clear();
        return HELPZC_OK;
    } catch (const std::invalid_argument& e) {
        return set_error(HELPZC_ERR_PARSE, e.what());
    } catch (const std::runtime_error& e) {
        return set_error(HELPZC_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return set_error(HELPZC_ERR_INTERNAL, e.what());
    }
}

helpzc::SolverOptions convert(const helpzc_solve_options* opts) {
    helpzc::SolverOptions out;
    if (opts) {
        out.use_brauer = opts->use_brauer != 0;
        if (opts->fallback_bound >= 0) out.fallback_bound = opts->fallback_bound;
    }
    return out;
}

}  // namespace

extern "C" {

void helpzc_solve_options_init(helpzc_solve_options* opts) {
    if (!opts) return;
    opts->use_brauer = 1;
    opts->fallback_bound = -1;
}

helpzc_status helpzc_group_load_file(const char* path, helpzc_group** out) {
    if (!path || !out) return set_error(HELPZC_ERR_INVALID, "null argument");
    *out = nullptr;
    return guard([&] { *out = new helpzc_group{helpzc::load_group_data(path)}; });
}

helpzc_status helpzc_group_parse(const char* json_text, helpzc_group** out) {
    if (!json_text || !out) return set_error(HELPZC_ERR_INVALID, "null argument");
    *out = nullptr;
    return guard([&] { *out = new helpzc_group{helpzc::parse_group_data(json_text)}; });
}

void helpzc_group_free(helpzc_group* g) {
    delete g;
}

const char* helpzc_group_name(const helpzc_group* g) {
    return g ? g->data.name.c_str() : "";
}

unsigned long helpzc_group_exponent(const helpzc_group* g) {
    return g ? g->data.exponent : 0;
}

helpzc_status helpzc_group_validate(const helpzc_group* g, char** violations) {
    if (!g || !violations) return set_error(HELPZC_ERR_INVALID, "null argument");
    *violations = nullptr;
    return guard([&] {
        const auto v = g->data.validate_orthogonality();
        if (!v.empty()) {
            std::ostringstream os;
            for (std::size_t i = 0; i < v.size(); ++i) os << v[i] << "\n";
            *violations = dup_string(os.str());
        }
    });
}

helpzc_status helpzc_solve_all(const helpzc_group* g, const helpzc_solve_options* opts,
                               helpzc_report** out) {
    if (!g || !out) return set_error(HELPZC_ERR_INVALID, "null argument");
    *out = nullptr;
    return guard([&] {
        helpzc::Solver solver(g->data, convert(opts));
        *out = new helpzc_report{solver.full_report()};
    });
}

helpzc_status helpzc_solve_order(const helpzc_group* g, unsigned long n,
                                 const helpzc_solve_options* opts, helpzc_report** out) {
    if (!g || !out) return set_error(HELPZC_ERR_INVALID, "null argument");
    *out = nullptr;
    return guard([&] {
        helpzc::Solver solver(g->data, convert(opts));
        *out = new helpzc_report{solver.single_order_report(n)};
    });
}

void helpzc_report_free(helpzc_report* r) {
    delete r;
}

int helpzc_report_verified(const helpzc_report* r) {
    return r && r->report.verified ? 1 : 0;
}

unsigned long helpzc_report_exceptional_count(const helpzc_report* r) {
    return r ? r->report.exceptional_count : 0;
}

helpzc_status helpzc_report_render_text(const helpzc_report* r, char** out) {
    if (!r || !out) return set_error(HELPZC_ERR_INVALID, "null argument");
    return guard([&] { *out = dup_string(helpzc::render_text(r->report)); });
}

helpzc_status helpzc_report_render_json(const helpzc_report* r, char** out) {
    if (!r || !out) return set_error(HELPZC_ERR_INVALID, "null argument");
    return guard([&] { *out = dup_string(helpzc::render_json(r->report)); });
}

void helpzc_string_free(char* s) {
    std::free(s);
}

const char* helpzc_last_error(void) {
    return g_last_error.c_str();
}

}  // extern "C"
