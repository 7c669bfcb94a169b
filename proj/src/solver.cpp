#include "helpzc/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "helpzc/numtheory.hpp"

namespace helpzc {

AugmentationTuple SolutionRecord::tuple_at(unsigned long d, const GroupData& g) const {
    if (order % d != 0) throw std::logic_error("tuple_at: d does not divide the order");
    if (d == 1) return tuple;
    if (d == order) return trivial_tuple(g.identity_class().name);
    return power_tuples.at(d);
}

namespace {

// c + sum a_i x_i >= 0, stored as [c, a_0, ..., a_{k-1}].
using Ineq = std::vector<Rational>;

// Scale by a positive factor so the first nonzero coefficient has absolute
// value 1 (canonical form for deduplication).
void normalize(Ineq& q) {
    for (std::size_t i = 1; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        Rational s = abs(q[i]);
        for (auto& c : q) {
            c /= s;
            c.canonicalize();
        }
        return;
    }
}

// Dedup by coefficient vector, keeping the tightest (smallest) constant.
// Returns false if a contradictory constant-only inequality shows up.
bool compress(std::vector<Ineq>& ineqs) {
    std::map<std::vector<Rational>, Rational> best;
    for (auto& q : ineqs) {
        normalize(q);
        bool all_zero = true;
        for (std::size_t i = 1; i < q.size(); ++i)
            if (q[i] != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            if (q[0] < 0) return false;
            continue;
        }
        std::vector<Rational> key(q.begin() + 1, q.end());
        auto [it, inserted] = best.emplace(std::move(key), q[0]);
        if (!inserted && q[0] < it->second) it->second = q[0];
    }
    ineqs.clear();
    for (auto& [key, c] : best) {
        Ineq q;
        q.reserve(key.size() + 1);
        q.push_back(c);
        q.insert(q.end(), key.begin(), key.end());
        ineqs.push_back(std::move(q));
    }
    return true;
}

// Fourier-Motzkin elimination of variable idx (0-based among variables).
bool eliminate(std::vector<Ineq>& ineqs, std::size_t idx) {
    std::vector<Ineq> pos, neg, out;
    for (auto& q : ineqs) {
        const Rational& a = q[idx + 1];
        if (a > 0)
            pos.push_back(std::move(q));
        else if (a < 0)
            neg.push_back(std::move(q));
        else
            out.push_back(std::move(q));
    }
    for (const auto& p : pos) {
        for (const auto& m : neg) {
            Ineq q(p.size(), Rational(0));
            const Rational ap = p[idx + 1];
            const Rational am = -m[idx + 1];
            for (std::size_t i = 0; i < q.size(); ++i) {
                q[i] = am * p[i] + ap * m[i];
                q[i].canonicalize();
            }
            q[idx + 1] = 0;
            out.push_back(std::move(q));
        }
    }
    ineqs = std::move(out);
    return compress(ineqs);
}

Integer rational_floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Integer rational_ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace

Box bound_box(const std::vector<ConstraintRow>& rows, const VariableSpace& vs,
              std::optional<long> fallback_bound) {
    const std::size_t k = vs.classes.size();
    Box box;
    if (k == 0) return box;

    std::vector<Ineq> base;
    for (const auto& row : rows) {
        Ineq lo(k + 1, Rational(0)), hi(k + 1, Rational(0));
        lo[0] = row.constant;          // row >= 0
        hi[0] = row.bound - row.constant;  // row <= bound
        for (std::size_t i = 0; i < k; ++i) {
            lo[i + 1] = row.coeffs[i].second;
            hi[i + 1] = -row.coeffs[i].second;
        }
        base.push_back(std::move(lo));
        base.push_back(std::move(hi));
    }
    {   // sum eps = 1 as a pair of inequalities
        Ineq lo(k + 1, Rational(-1)), hi(k + 1, Rational(1));
        for (std::size_t i = 0; i < k; ++i) {
            lo[i + 1] = 1;
            hi[i + 1] = -1;
        }
        base.push_back(std::move(lo));
        base.push_back(std::move(hi));
    }
    if (!compress(base)) {
        box.feasible = false;
        return box;
    }

    // Elimination order: variables occurring in the fewest inequalities first.
    std::vector<std::size_t> occurrence(k, 0);
    for (const auto& q : base)
        for (std::size_t i = 0; i < k; ++i)
            if (q[i + 1] != 0) ++occurrence[i];

    box.range.resize(k);
    for (std::size_t target = 0; target < k; ++target) {
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < k; ++i)
            if (i != target) order.push_back(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return occurrence[a] < occurrence[b]; });

        std::vector<Ineq> sys = base;
        for (std::size_t idx : order) {
            if (!eliminate(sys, idx)) {
                box.feasible = false;
                return box;
            }
        }

        bool have_lo = false, have_hi = false;
        Rational lo, hi;
        for (const auto& q : sys) {
            const Rational& a = q[target + 1];
            if (a == 0) continue;
            Rational b = -q[0] / a;
            b.canonicalize();
            if (a > 0) {  // x >= -c/a
                if (!have_lo || b > lo) lo = b;
                have_lo = true;
            } else {  // x <= -c/a
                if (!have_hi || b < hi) hi = b;
                have_hi = true;
            }
        }
        if (!have_lo || !have_hi) {
            if (!fallback_bound)
                throw std::runtime_error(
                    "constraint system does not bound the solution region (variable " +
                    vs.classes[target] + ")");
            if (!have_lo) lo = Rational(-*fallback_bound);
            if (!have_hi) hi = Rational(*fallback_bound);
        }
        Integer ilo = rational_ceil(lo), ihi = rational_floor(hi);
        if (ilo > ihi) {
            box.feasible = false;
            return box;
        }
        box.range[target] = {ilo, ihi};
    }
    return box;
}

namespace {

// The single class carrying the whole augmentation, or "" if the tuple is
// spread over several classes (entries are zero-free, so a lone entry of a
// sum-one tuple is necessarily 1).
std::string concentrated_class(const AugmentationTuple& t) {
    std::string carrier;
    for (const auto& [cls, e] : t.eps) {
        if (e == 0) continue;
        if (e != 1 || !carrier.empty()) return {};
        carrier = cls;
    }
    return carrier;
}

void classify(SolutionRecord& rec, const GroupData& g) {
    rec.trivial = false;
    rec.trivial_class.clear();
    const std::string carrier = concentrated_class(rec.tuple);
    if (carrier.empty()) return;
    if (g.class_by_name(carrier).element_order != rec.order) return;
    for (const auto& [d, tuple] : rec.power_tuples)
        if (tuple != trivial_tuple(g.power_class(carrier, d))) return;
    rec.trivial = true;
    rec.trivial_class = carrier;
}

// A unit all of whose powers have all but one partial augmentation zero is
// rationally conjugate to an actual group element, and rational conjugacy
// preserves the order and the power classes. A record whose whole chain is
// concentrated but which failed the trivial test therefore describes no
// unit at all and must be discarded rather than reported as exceptional.
bool contradicts_rational_conjugacy(const SolutionRecord& rec) {
    if (rec.trivial) return false;
    if (concentrated_class(rec.tuple).empty()) return false;
    for (const auto& [d, tuple] : rec.power_tuples)
        if (concentrated_class(tuple).empty()) return false;
    return true;
}

}  // namespace

std::vector<PowerDatum> Solver::enumerate_power_data(unsigned long n) {
    const auto primes = prime_divisors(n);
    if (primes.size() == 1 && primes[0] == n) return {PowerDatum{n, {}}};

    std::vector<const std::vector<SolutionRecord>*> options;
    for (unsigned long q : primes) {
        const OrderResult& sub = solve_order(n / q);
        if (sub.solutions.empty()) return {};
        options.push_back(&sub.solutions);
    }

    std::vector<PowerDatum> data;
    std::vector<std::size_t> pick(primes.size(), 0);
    while (true) {
        std::vector<const SolutionRecord*> combo;
        for (std::size_t i = 0; i < primes.size(); ++i)
            combo.push_back(&(*options[i])[pick[i]]);

        // Merge into a full divisor -> tuple map; all primes dividing a
        // divisor must agree on its tuple.
        PowerDatum datum;
        datum.order = n;
        bool coherent = true;
        for (unsigned long d : divisors(n)) {
            if (d <= 1 || d >= n) continue;
            bool first = true;
            AugmentationTuple merged;
            for (std::size_t i = 0; i < primes.size() && coherent; ++i) {
                if (d % primes[i] != 0) continue;
                AugmentationTuple t = combo[i]->tuple_at(d / primes[i], g_);
                if (first) {
                    merged = std::move(t);
                    first = false;
                } else if (t != merged) {
                    coherent = false;
                }
            }
            if (!coherent) break;
            datum.powers.emplace(d, std::move(merged));
        }
        if (coherent) data.push_back(std::move(datum));

        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < options[i]->size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return data;
}

const OrderResult& Solver::solve_order(unsigned long n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    if (n < 2 || g_.exponent % n != 0)
        throw std::invalid_argument(std::to_string(n) + " does not divide exponent " +
                                    std::to_string(g_.exponent));
    for (unsigned long e : divisors(n))
        if (e > 1 && e < n) solve_order(e);

    OrderResult res;
    res.n = n;
    const VariableSpace vs = variable_space(g_, n);
    const auto data = enumerate_power_data(n);
    res.data_count = data.size();

    for (const auto& datum : data) {
        const auto rows = build_rows(g_, n, datum, opts_.use_brauer);
        res.rows_built += rows.size();
        if (vs.classes.empty()) continue;  // sum eps = 1 is unsatisfiable

        const Box box = bound_box(rows, vs, opts_.fallback_bound);
        if (!box.feasible) continue;

        const std::size_t k = vs.classes.size();
        std::vector<Integer> cur(k);
        for (std::size_t i = 0; i + 1 < k; ++i) cur[i] = box.range[i].first;

        // Scan the box; the last coordinate is pinned by sum eps = 1.
        bool done = false;
        while (!done) {
            ++res.lattice_points;
            Integer last = 1;
            for (std::size_t i = 0; i + 1 < k; ++i) last -= cur[i];
            cur[k - 1] = last;
            if (k == 1) done = true;  // single candidate, checked below

            bool ok = last >= box.range[k - 1].first && last <= box.range[k - 1].second;
            if (ok) {
                AugmentationTuple tuple;
                for (std::size_t i = 0; i < k; ++i) {
                    if (!cur[i].fits_slong_p())
                        throw std::runtime_error("partial augmentation out of range");
                    if (cur[i] != 0) tuple.eps[vs.classes[i]] = cur[i].get_si();
                }
                bool admissible = true;
                for (const auto& row : rows) {
                    Rational v = row.eval(tuple);
                    if (!is_integer(v) || v < 0 || v > row.bound) {
                        admissible = false;
                        break;
                    }
                }
                if (admissible) {
                    SolutionRecord rec;
                    rec.order = n;
                    rec.tuple = std::move(tuple);
                    rec.power_tuples = datum.powers;
                    classify(rec, g_);
                    if (!contradicts_rational_conjugacy(rec))
                        res.solutions.push_back(std::move(rec));
                }
            }
            if (k == 1) break;
            std::size_t i = 0;
            for (; i + 1 < k; ++i) {
                if (++cur[i] <= box.range[i].second) break;
                cur[i] = box.range[i].first;
            }
            if (i + 1 == k) done = true;
        }
    }

    bool any = !res.solutions.empty();
    bool all_trivial = true;
    for (const auto& rec : res.solutions)
        if (!rec.trivial) all_trivial = false;
    res.status = !any ? OrderStatus::NoSolutions
                      : (all_trivial ? OrderStatus::TrivialOnly : OrderStatus::Exceptional);

    return memo_.emplace(n, std::move(res)).first->second;
}

Report Solver::report_for(const std::vector<unsigned long>& orders) {
    Report r;
    r.group = g_.name;
    for (const auto& c : g_.classes) r.classes.push_back(c.name);
    if (opts_.use_brauer)
        for (const auto& bt : g_.brauer) r.brauer_primes.push_back(bt.prime);

    for (unsigned long n : orders) {
        const OrderResult& res = solve_order(n);
        ReportOrder ord;
        ord.n = n;
        ord.status = res.status;
        ord.rows = res.rows_built;
        ord.box_points = res.lattice_points;
        for (const auto& rec : res.solutions) {
            ReportSolution sol;
            sol.tuple = rec.tuple.eps;
            sol.classification = rec.trivial ? "trivial:" + rec.trivial_class : "exceptional";
            for (const auto& [d, t] : rec.power_tuples) sol.powers[d] = t.eps;
            if (!rec.trivial) ++r.exceptional_count;
            ord.solutions.push_back(std::move(sol));
        }
        if (res.status == OrderStatus::Exceptional) r.verified = false;
        r.orders.push_back(std::move(ord));
    }
    return r;
}

Report Solver::full_report() {
    std::vector<unsigned long> orders;
    for (unsigned long n : divisors(g_.exponent))
        if (n > 1) orders.push_back(n);
    return report_for(orders);
}

Report Solver::single_order_report(unsigned long n) {
    return report_for({n});
}

}  // namespace helpzc
