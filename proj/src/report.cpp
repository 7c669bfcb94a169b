#include "helpzc/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace helpzc {

using nlohmann::json;

namespace {

const char* status_string(OrderStatus s) {
    switch (s) {
        case OrderStatus::NoSolutions: return "no_solutions";
        case OrderStatus::TrivialOnly: return "trivial_only";
        case OrderStatus::Exceptional: return "exceptional";
    }
    return "?";
}

OrderStatus status_from_string(const std::string& s) {
    if (s == "no_solutions") return OrderStatus::NoSolutions;
    if (s == "trivial_only") return OrderStatus::TrivialOnly;
    if (s == "exceptional") return OrderStatus::Exceptional;
    throw std::invalid_argument("unknown order status: " + s);
}

// "(2a:-2, 3a:2, 3b:1)" in table class order.
std::string tuple_string(const std::map<std::string, long>& tuple,
                         const std::vector<std::string>& class_order) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    auto emit = [&](const std::string& cls, long v) {
        if (!first) os << ", ";
        os << cls << ":" << v;
        first = false;
    };
    for (const auto& cls : class_order) {
        auto it = tuple.find(cls);
        if (it != tuple.end()) emit(cls, it->second);
    }
    for (const auto& [cls, v] : tuple)  // classes absent from the order list
        if (std::find(class_order.begin(), class_order.end(), cls) == class_order.end())
            emit(cls, v);
    os << ")";
    return os.str();
}

}  // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "group: " << r.group << "\n";
    os << "tables: ordinary";
    for (unsigned long p : r.brauer_primes) os << ", mod-" << p << " Brauer";
    os << "\n";
    if (r.orders.empty()) {
        os << "no nontrivial orders\n";
    } else {
        for (const auto& ord : r.orders) {
            os << "order " << ord.n << ": ";
            switch (ord.status) {
                case OrderStatus::NoSolutions:
                    os << "no solutions\n";
                    break;
                case OrderStatus::TrivialOnly:
                    os << "trivial only (" << ord.solutions.size() << " solution"
                       << (ord.solutions.size() == 1 ? "" : "s") << ")\n";
                    break;
                case OrderStatus::Exceptional:
                    os << "EXCEPTIONAL (" << ord.solutions.size() << " solution"
                       << (ord.solutions.size() == 1 ? "" : "s") << ")\n";
                    break;
            }
            for (const auto& sol : ord.solutions) {
                os << "  " << sol.classification << " "
                   << tuple_string(sol.tuple, r.classes);
                if (!sol.powers.empty()) {
                    os << " [";
                    bool first = true;
                    for (const auto& [d, t] : sol.powers) {
                        if (!first) os << ", ";
                        os << "u^" << d << " -> " << tuple_string(t, r.classes);
                        first = false;
                    }
                    os << "]";
                }
                os << "\n";
            }
        }
    }
    if (r.verified)
        os << "status: VERIFIED (ZC1 holds for all checked orders)\n";
    else
        os << "status: OPEN (" << r.exceptional_count << " exceptional solution"
           << (r.exceptional_count == 1 ? "" : "s") << ")\n";
    return os.str();
}

std::string render_json(const Report& r) {
    json j;
    j["group"] = r.group;
    j["classes"] = r.classes;
    j["status"] = r.verified ? "verified" : "open";
    j["exceptional_count"] = r.exceptional_count;
    j["tables"] = {{"ordinary", r.ordinary_used}, {"brauer_primes", r.brauer_primes}};
    j["orders"] = json::array();
    for (const auto& ord : r.orders) {
        json jo;
        jo["n"] = ord.n;
        jo["status"] = status_string(ord.status);
        jo["rows"] = ord.rows;
        jo["box_points"] = ord.box_points;
        jo["solutions"] = json::array();
        for (const auto& sol : ord.solutions) {
            json js;
            js["tuple"] = sol.tuple;
            js["classification"] = sol.classification;
            js["powers"] = json::object();
            for (const auto& [d, t] : sol.powers) js["powers"][std::to_string(d)] = t;
            jo["solutions"].push_back(std::move(js));
        }
        j["orders"].push_back(std::move(jo));
    }
    return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
    json j = json::parse(text);
    Report r;
    r.group = j.at("group").get<std::string>();
    r.classes = j.at("classes").get<std::vector<std::string>>();
    r.verified = j.at("status").get<std::string>() == "verified";
    r.exceptional_count = j.at("exceptional_count").get<unsigned long>();
    r.ordinary_used = j.at("tables").at("ordinary").get<bool>();
    r.brauer_primes = j.at("tables").at("brauer_primes").get<std::vector<unsigned long>>();
    for (const auto& jo : j.at("orders")) {
        ReportOrder ord;
        ord.n = jo.at("n").get<unsigned long>();
        ord.status = status_from_string(jo.at("status").get<std::string>());
        ord.rows = jo.at("rows").get<unsigned long>();
        ord.box_points = jo.at("box_points").get<unsigned long>();
        for (const auto& js : jo.at("solutions")) {
            ReportSolution sol;
            sol.tuple = js.at("tuple").get<std::map<std::string, long>>();
            sol.classification = js.at("classification").get<std::string>();
            for (const auto& [ds, t] : js.at("powers").items())
                sol.powers[std::stoul(ds)] = t.get<std::map<std::string, long>>();
            ord.solutions.push_back(std::move(sol));
        }
        r.orders.push_back(std::move(ord));
    }
    return r;
}

}  // namespace helpzc
