#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpzc/solver.hpp"
#include "oracle.hpp"

using namespace helpzc;

namespace {

GroupData a6() {
    return load_group_data(HELPZC_DATA_DIR "/a6.json");
}

std::set<std::pair<oracle::Tuple, oracle::Powers>> solution_set(const OrderResult& res) {
    std::set<std::pair<oracle::Tuple, oracle::Powers>> out;
    for (const auto& rec : res.solutions) {
        oracle::Powers powers;
        for (const auto& [d, t] : rec.power_tuples) powers[d] = t.eps;
        out.emplace(rec.tuple.eps, std::move(powers));
    }
    return out;
}

}  // namespace

TEST_CASE("bound boxes") {
    const GroupData g = a6();

    SUBCASE("order 2: single variable pinned to 1") {
        const auto rows = build_rows(g, 2, PowerDatum{2, {}});
        const Box box = bound_box(rows, variable_space(g, 2));
        REQUIRE(box.feasible);
        REQUIRE(box.range.size() == 1);
        CHECK(box.range[0].first == 1);
        CHECK(box.range[0].second == 1);
    }

    SUBCASE("order 3: box contains the trivial tuples, excludes |eps| > 4") {
        const auto rows = build_rows(g, 3, PowerDatum{3, {}});
        const Box box = bound_box(rows, variable_space(g, 3));
        REQUIRE(box.feasible);
        REQUIRE(box.range.size() == 2);
        for (const auto& [lo, hi] : box.range) {
            CHECK(lo <= 0);
            CHECK(hi >= 1);
            CHECK(lo >= -4);
            CHECK(hi <= 4);
        }
    }

    SUBCASE("degenerate single-row system 0 <= eps <= 5") {
        ConstraintRow row;
        row.psi = "x";
        row.coeffs = {{"c", Rational(1)}, {"d", Rational(0)}};
        row.constant = 0;
        row.bound = 5;
        VariableSpace vs{5, {"c", "d"}};
        const Box box = bound_box({row}, vs);
        REQUIRE(box.feasible);
        CHECK(box.range[0].first == 0);
        CHECK(box.range[0].second == 5);
        // the companion variable is boxed only through sum eps = 1
        CHECK(box.range[1].first == -4);
        CHECK(box.range[1].second == 1);
    }

    SUBCASE("unbounded system fails, fallback bound substitutes") {
        VariableSpace vs{6, {"a", "b"}};
        CHECK_THROWS_AS(bound_box({}, vs), std::runtime_error);
        const Box box = bound_box({}, vs, 8);
        REQUIRE(box.feasible);
        CHECK(box.range[0].first == -8);
        CHECK(box.range[0].second == 8);
    }
}

TEST_CASE("power data enumeration") {
    const GroupData g = a6();
    Solver solver(g);
    CHECK(solver.enumerate_power_data(6).size() == 2);   // u^2 -> 3a or 3b
    CHECK(solver.enumerate_power_data(4).size() == 1);   // u^2 -> 2a
    CHECK(solver.enumerate_power_data(20).empty());      // order 10 has no solutions
    CHECK(solver.enumerate_power_data(30).empty());
    CHECK(solver.enumerate_power_data(60).empty());
}

TEST_CASE("per-order verdicts for A6") {
    const GroupData g = a6();
    Solver solver(g);

    const auto trivial_classes = [&](unsigned long n) {
        std::set<std::string> out;
        for (const auto& rec : solver.solve_order(n).solutions) {
            REQUIRE(rec.trivial);
            out.insert(rec.trivial_class);
        }
        return out;
    };

    CHECK(solver.solve_order(2).status == OrderStatus::TrivialOnly);
    CHECK(trivial_classes(2) == std::set<std::string>{"2a"});
    CHECK(solver.solve_order(3).status == OrderStatus::TrivialOnly);
    CHECK(trivial_classes(3) == std::set<std::string>{"3a", "3b"});
    CHECK(solver.solve_order(4).status == OrderStatus::TrivialOnly);
    CHECK(trivial_classes(4) == std::set<std::string>{"4a"});
    CHECK(solver.solve_order(5).status == OrderStatus::TrivialOnly);
    CHECK(trivial_classes(5) == std::set<std::string>{"5a", "5b"});

    CHECK(solver.solve_order(10).status == OrderStatus::NoSolutions);
    CHECK(solver.solve_order(15).status == OrderStatus::NoSolutions);
    CHECK(solver.solve_order(20).status == OrderStatus::NoSolutions);
    CHECK(solver.solve_order(30).status == OrderStatus::NoSolutions);
    CHECK(solver.solve_order(60).status == OrderStatus::NoSolutions);

    CHECK_THROWS_AS(solver.solve_order(7), std::invalid_argument);
    CHECK_THROWS_AS(solver.solve_order(1), std::invalid_argument);
}

TEST_CASE("order 6 is exceptional with exactly the two known tuples") {
    const GroupData g = a6();
    Solver solver(g);
    const OrderResult& res = solver.solve_order(6);
    CHECK(res.status == OrderStatus::Exceptional);
    REQUIRE(res.solutions.size() == 2);

    for (const auto& rec : res.solutions) {
        CHECK(!rec.trivial);
        CHECK(rec.tuple.at("2a") == -2);
        CHECK(rec.power_tuples.at(3) == trivial_tuple("2a"));
        if (rec.power_tuples.at(2) == trivial_tuple("3a")) {
            CHECK(rec.tuple.at("3a") == 1);
            CHECK(rec.tuple.at("3b") == 2);
        } else {
            CHECK(rec.power_tuples.at(2) == trivial_tuple("3b"));
            CHECK(rec.tuple.at("3a") == 2);
            CHECK(rec.tuple.at("3b") == 1);
        }
    }
}

TEST_CASE("soundness: every emitted record passes the independent oracle") {
    const GroupData g = a6();
    Solver solver(g);
    for (unsigned long n : divisors(g.exponent)) {
        if (n < 2) continue;
        for (const auto& [tuple, powers] : solution_set(solver.solve_order(n)))
            CHECK(oracle::admissible(g, n, tuple, powers, true));
    }
}

TEST_CASE("trivial solutions exist for every genuine class") {
    const GroupData g = a6();
    Solver solver(g);
    for (const auto& c : g.classes) {
        if (c.element_order == 1) continue;
        oracle::Powers powers;
        for (const auto& [d, t] : genuine_datum(g, c.name).powers) powers[d] = t.eps;
        const oracle::Tuple tuple{{c.name, 1}};
        const auto set = solution_set(solver.solve_order(c.element_order));
        CHECK(set.count({tuple, powers}) == 1);
    }
}

TEST_CASE("oracle equivalence for orders up to 6") {
    const GroupData g = a6();
    Solver solver(g);
    std::map<unsigned long, std::vector<oracle::Solution>> memo;
    for (unsigned long n : {2ul, 3ul, 4ul, 5ul, 6ul}) {
        std::set<std::pair<oracle::Tuple, oracle::Powers>> expected;
        for (const auto& sol : oracle::solve(g, n, 8, true, &memo))
            expected.emplace(sol.tuple, sol.powers);
        CHECK(solution_set(solver.solve_order(n)) == expected);
    }
}

TEST_CASE("power coherence of emitted records") {
    const GroupData g = a6();
    Solver solver(g);
    for (unsigned long n : divisors(g.exponent)) {
        if (n < 2) continue;
        for (const auto& rec : solver.solve_order(n).solutions) {
            for (const auto& [d, t] : rec.power_tuples) {
                // the stored tuple at d satisfies the order-n/d system
                const auto& sub = solver.solve_order(n / d);
                bool found = false;
                for (const auto& subrec : sub.solutions)
                    if (subrec.tuple == t) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("Brauer tables only ever shrink solution sets") {
    const GroupData g = a6();
    Solver with(g, {.use_brauer = true});
    Solver without(g, {.use_brauer = false});
    for (unsigned long n : divisors(g.exponent)) {
        if (n < 2) continue;
        const auto strong = solution_set(with.solve_order(n));
        const auto weak = solution_set(without.solve_order(n));
        CHECK(std::includes(weak.begin(), weak.end(), strong.begin(), strong.end()));
    }
}

TEST_CASE("full report for A6") {
    const GroupData g = a6();
    Solver solver(g);
    const Report r = solver.full_report();
    REQUIRE(r.orders.size() == 11);  // divisors of 60 greater than 1
    CHECK(!r.verified);
    CHECK(r.exceptional_count == 2);

    std::map<unsigned long, OrderStatus> status;
    for (const auto& ord : r.orders) status[ord.n] = ord.status;
    CHECK(status.at(2) == OrderStatus::TrivialOnly);
    CHECK(status.at(3) == OrderStatus::TrivialOnly);
    CHECK(status.at(4) == OrderStatus::TrivialOnly);
    CHECK(status.at(5) == OrderStatus::TrivialOnly);
    CHECK(status.at(6) == OrderStatus::Exceptional);
    CHECK(status.at(10) == OrderStatus::NoSolutions);
    CHECK(status.at(15) == OrderStatus::NoSolutions);
    CHECK(status.at(20) == OrderStatus::NoSolutions);
    CHECK(status.at(30) == OrderStatus::NoSolutions);
    CHECK(status.at(60) == OrderStatus::NoSolutions);
    CHECK(status.count(12) == 1);  // deterministic; exact verdict cross-checked elsewhere
}

TEST_CASE("trivial group report") {
    const GroupData g = parse_group_data(R"({
        "name": "triv", "group_order": 1,
        "classes": [{"name": "1a", "element_order": 1, "centralizer_order": 1,
                     "powermap": {}}],
        "ordinary": [{"name": "chi_1a", "values": {"1a": 1}}]
    })");
    Solver solver(g);
    const Report r = solver.full_report();
    CHECK(r.orders.empty());
    CHECK(r.verified);
}
