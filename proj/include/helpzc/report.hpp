#pragma once

#include <map>
#include <string>
#include <vector>

namespace helpzc {

enum class OrderStatus { NoSolutions, TrivialOnly, Exceptional };

struct ReportSolution {
    std::map<std::string, long> tuple;
    std::string classification;  // "trivial:<class>" or "exceptional"
    std::map<unsigned long, std::map<std::string, long>> powers;  // d -> tuple of u^d

    auto operator<=>(const ReportSolution&) const = default;
};

struct ReportOrder {
    unsigned long n = 1;
    OrderStatus status = OrderStatus::NoSolutions;
    std::vector<ReportSolution> solutions;
    unsigned long rows = 0;        // constraint rows built (all power data)
    unsigned long box_points = 0;  // lattice points scanned

    auto operator<=>(const ReportOrder&) const = default;
};

struct Report {
    std::string group;
    std::vector<std::string> classes;  // table order, for stable rendering
    bool ordinary_used = true;
    std::vector<unsigned long> brauer_primes;
    std::vector<ReportOrder> orders;  // ascending n
    bool verified = true;
    unsigned long exceptional_count = 0;

    auto operator<=>(const Report&) const = default;
};

// Stable, diff-friendly plain text.
std::string render_text(const Report& r);

// Byte-stable JSON certificate (sorted keys, fixed indentation).
std::string render_json(const Report& r);

// Inverse of render_json.
Report parse_report_json(const std::string& text);

}  // namespace helpzc
