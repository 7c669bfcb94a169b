#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "helpzc/constraints.hpp"
#include "helpzc/report.hpp"
#include "helpzc/tables.hpp"

namespace helpzc {

struct SolutionRecord {
    unsigned long order = 1;
    AugmentationTuple tuple;
    // Full power map: divisor d of order with 1 < d < order -> tuple of u^d.
    std::map<unsigned long, AugmentationTuple> power_tuples;
    bool trivial = false;
    std::string trivial_class;

    // Tuple of u^d for any divisor d of order (d = order gives the identity).
    AugmentationTuple tuple_at(unsigned long d, const GroupData& g) const;
};

struct OrderResult {
    unsigned long n = 1;
    OrderStatus status = OrderStatus::NoSolutions;
    std::vector<SolutionRecord> solutions;
    unsigned long rows_built = 0;
    unsigned long lattice_points = 0;
    unsigned long data_count = 0;
};

struct SolverOptions {
    bool use_brauer = true;
    // Half-width substitute when Fourier-Motzkin reports an unbounded
    // variable; unset means fail with a diagnostic instead.
    std::optional<long> fallback_bound;
};

// Per-variable integer bounds for the region {0 <= row <= bound} + {sum eps = 1},
// by exact Fourier-Motzkin elimination.
struct Box {
    bool feasible = true;
    std::vector<std::pair<Integer, Integer>> range;  // per variable, inclusive
};

Box bound_box(const std::vector<ConstraintRow>& rows, const VariableSpace& vs,
              std::optional<long> fallback_bound = std::nullopt);

class Solver {
public:
    Solver(const GroupData& g, SolverOptions opts = {}) : g_(g), opts_(opts) {}

    // Verdict for one order (memoized; proper divisor orders solved first).
    const OrderResult& solve_order(unsigned long n);

    // Every coherent combination of solutions for the proper power orders.
    std::vector<PowerDatum> enumerate_power_data(unsigned long n);

    // All divisors of the exponent greater than 1, in divisibility order.
    Report full_report();
    Report single_order_report(unsigned long n);

private:
    Report report_for(const std::vector<unsigned long>& orders);

    const GroupData& g_;
    SolverOptions opts_;
    std::map<unsigned long, OrderResult> memo_;
};

}  // namespace helpzc
