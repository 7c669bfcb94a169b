// CLI driver: ingestion -> solver -> report, via the C API.
//
// Exit codes: 0 = ZC1 verified for all checked orders, 2 = exceptional
// solutions found (open verdict, not an error), 1 = input/usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "helpzc.h"

namespace {

int fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 1;
}

int write_output(const char* text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return fail("cannot write " + out_path);
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HeLP solver: partial-augmentation constraints for torsion units in ZG"};
    app.require_subcommand(1);

    std::string group_file, format = "text", out_path;
    unsigned long order = 0;
    bool all_orders = false, no_brauer = false;
    long fallback_bound = -1;

    auto* check = app.add_subcommand("check", "solve admissible partial augmentations");
    check->add_option("--group", group_file, "group data JSON file")->required();
    auto* opt_order = check->add_option("--order", order, "single torsion-unit order to check");
    check->add_flag("--all", all_orders, "check every order dividing the exponent");
    check->add_flag("--no-brauer", no_brauer, "use the ordinary character table only");
    check->add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("--out", out_path, "write the report to a file instead of stdout");
    check->add_option("--fallback-bound", fallback_bound,
                      "enumeration half-width if the system is unbounded (default: fail)");

    auto* validate = app.add_subcommand("validate", "parse and cross-check a group file");
    std::string validate_file;
    validate->add_option("--group", validate_file, "group data JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) {
        helpzc_group* g = nullptr;
        if (helpzc_group_load_file(validate_file.c_str(), &g) != HELPZC_OK)
            return fail(helpzc_last_error());
        char* violations = nullptr;
        if (helpzc_group_validate(g, &violations) != HELPZC_OK) {
            helpzc_group_free(g);
            return fail(helpzc_last_error());
        }
        int rc = 0;
        if (violations) {
            std::cerr << violations;
            helpzc_string_free(violations);
            rc = 1;
        } else {
            std::cout << helpzc_group_name(g) << ": table data consistent\n";
        }
        helpzc_group_free(g);
        return rc;
    }

    if (all_orders == (opt_order->count() > 0))
        return fail("check needs exactly one of --order N or --all");

    helpzc_group* g = nullptr;
    if (helpzc_group_load_file(group_file.c_str(), &g) != HELPZC_OK)
        return fail(helpzc_last_error());

    helpzc_solve_options opts;
    helpzc_solve_options_init(&opts);
    opts.use_brauer = no_brauer ? 0 : 1;
    opts.fallback_bound = fallback_bound;

    helpzc_report* report = nullptr;
    helpzc_status st = all_orders ? helpzc_solve_all(g, &opts, &report)
                                  : helpzc_solve_order(g, order, &opts, &report);
    if (st != HELPZC_OK) {
        std::string msg = helpzc_last_error();
        helpzc_group_free(g);
        return fail(msg);
    }

    char* text = nullptr;
    st = format == "json" ? helpzc_report_render_json(report, &text)
                          : helpzc_report_render_text(report, &text);
    int rc;
    if (st != HELPZC_OK) {
        rc = fail(helpzc_last_error());
    } else {
        rc = write_output(text, out_path);
        if (rc == 0 && !helpzc_report_verified(report)) rc = 2;
        helpzc_string_free(text);
    }
    helpzc_report_free(report);
    helpzc_group_free(g);
    return rc;
}
