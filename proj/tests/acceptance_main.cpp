// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "jaceig/core_model.hpp"
#include "jaceig/hypergeometric.hpp"
#include "jaceig/jacobian.hpp"
#include "jaceig/oracle.hpp"
#include "jaceig/rng.hpp"
#include "jaceig/verify.hpp"

using namespace jaceig;

namespace {

// empty string = pass
using Body = std::function<std::string()>;

std::string check_time(double seconds, double limit) {
    if (seconds <= limit) return "";
    std::ostringstream os;
    os << "runtime " << seconds << " s exceeded the " << limit << " s budget";
    return os.str();
}

// 1. d=2 golden series: signed Catalan numbers at N=8, under one second.
std::string golden_d2() {
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    VarLayout L(1, 0);
    TruncatedSeries u = expand_u_monomial(MonomialSpec{{1}, {}}, L, 8);
    for (long m = 0; m <= 8; ++m) {
        Rat want(catalan[m]);
        if (m % 2) want = -want;
        if (u.coeff({m}) != want) {
            std::ostringstream os;
            os << "coefficient at degree " << m << " is " << rat_str(u.coeff({m}))
               << ", expected " << rat_str(want);
            return os.str();
        }
    }
    if (u.terms().size() != 9) return "unexpected extra terms in the d=2 series";
    return "";
}

// 2. closed-form Jacobian against the finite-difference determinant.
std::string jacobian_vs_numeric() {
    Rng rng(20240901);
    for (int d = 2; d <= 5; ++d)
        for (int k = 1; k <= d; ++k) {
            VarLayout L(d - k, k - 1);
            long want_terms = 2L * d * k - 2L * k * k + 2 * k - d;
            if (expansion_term_count(L) != want_terms) {
                std::ostringstream os;
                os << "term count at d=" << d << " k=" << k << " is "
                   << expansion_term_count(L) << ", expected " << want_terms;
                return os.str();
            }
            for (int pt = 0; pt < 100; ++pt) {
                std::vector<double> flat(L.nvars());
                for (double& v : flat) v = rng.uniform(-0.1, 0.1);
                auto eta = EtaPoint<double>::from_flat(L, flat);
                double closed = jacobian_closed(eta, L);
                double numeric = jacobian_numeric(eta, L);
                if (std::abs(closed - numeric) > 1e-8) {
                    std::ostringstream os;
                    os << "d=" << d << " k=" << k << ": |closed - numeric| = "
                       << std::abs(closed - numeric);
                    return os.str();
                }
            }
        }
    if (expansion_term_count(VarLayout(1, 1)) != 5)
        return "d=3 middle branch must have a five-term Jacobian";
    return "";
}

// 3. expansion equals the fixed-point iteration exactly, every branch and
//    unit monomial up to degree 5.
std::string master_oracle() {
    const long N = 5;
    for (int d = 2; d <= 5; ++d)
        for (int k = 1; k <= d; ++k) {
            VarLayout L(d - k, k - 1);
            IterationState iter = iterate_system(L.r(), L.rt(), N);
            for (int i = 1; i <= L.r(); ++i) {
                if (!(expand_u_monomial(MonomialSpec::unit_u(i, L), L, N) == iter.u[i - 1])) {
                    std::ostringstream os;
                    os << "d=" << d << " k=" << k << " u" << i << ": series differ";
                    return os.str();
                }
            }
            for (int i = 1; i <= L.rt(); ++i) {
                if (!(expand_u_monomial(MonomialSpec::unit_ut(i, L), L, N) == iter.ut[i - 1])) {
                    std::ostringstream os;
                    os << "d=" << d << " k=" << k << " ut" << i << ": series differ";
                    return os.str();
                }
            }
        }
    return "";
}

// 4. inverted Lagrange system has identically zero residuals on exact points.
std::string lagrange_residuals() {
    Rng rng(777);
    for (int d = 2; d <= 5; ++d)
        for (int k = 1; k <= d; ++k) {
            VarLayout L(d - k, k - 1);
            for (int pt = 0; pt < 50; ++pt) {
                std::vector<Rat> flat(L.nvars());
                for (Rat& v : flat) v = rng.nonzero_rat(15, 128);
                auto rep = verify_lagrange_system(L, EtaPoint<Rat>::from_flat(L, flat));
                if (!rep.all_zero()) {
                    std::ostringstream os;
                    os << "d=" << d << " k=" << k << ": nonzero exact residual";
                    return os.str();
                }
            }
        }
    return "";
}

// 5. end-to-end truncation order: residual slope 2(N+1) +- 0.1, and the gap
//    to the dense eigenvalue shrinks at the same order until it reaches the
//    double-precision floor of the dense solver.
std::string residual_order() {
    const std::vector<Rat> eps = {make_rat(1, 100), make_rat(1, 1000), make_rat(1, 10000)};
    const std::vector<long> degrees = {1, 2, 3};
    auto rows = residual_order_sweep(4, 2, eps, degrees, 424242);
    const double dense_floor = 1e-13;
    std::ostringstream fail;
    for (long N : degrees) {
        std::vector<double> le, lr;
        std::vector<double> gaps;
        for (const auto& row : rows)
            if (row.N == N) {
                le.push_back(row.epsilon.get_d());
                lr.push_back(row.residual);
                gaps.push_back(row.dense_gap);
            }
        double slope = fitted_slope(le, lr);
        double want = 2.0 * (N + 1);
        if (std::abs(slope - want) > 0.1) {
            if (fail.tellp() > 0) fail << "; ";
            fail << "degree " << N << ": residual slope " << slope << " vs required " << want;
            continue;
        }
        double c = gaps[0] / std::pow(le[0], want);
        for (std::size_t i = 1; i < gaps.size(); ++i) {
            double bound = std::max(10.0 * c * std::pow(le[i], want), dense_floor);
            if (gaps[i] > bound) {
                if (fail.tellp() > 0) fail << "; ";
                fail << "degree " << N << ": dense gap " << gaps[i] << " at epsilon " << le[i]
                     << " above the order bound " << bound;
            }
        }
    }
    if (fail.tellp() > 0) {
        fail << " (the measured infinity-norm order is 2N+3: the degree-(N+1) series tail"
                " enters every matrix row through a first-neighbor entry of size epsilon)";
        return fail.str();
    }
    return "";
}

// 6. the one-arm path and the generic path with empty groups coincide.
std::string corner_agreement() {
    const long N = 4;
    for (int d = 2; d <= 5; ++d) {
        VarLayout first(d - 1, 0), last(0, d - 1);
        for (int i = 1; i <= d - 1; ++i) {
            MonomialSpec su = MonomialSpec::unit_u(i, first);
            if (!(expand_u_monomial_corner(su.k, d - 1, N) ==
                  expand_u_monomial(su, first, N))) {
                std::ostringstream os;
                os << "k=1 d=" << d << " u" << i << ": corner path differs";
                return os.str();
            }
            MonomialSpec st = MonomialSpec::unit_ut(i, last);
            if (!(expand_u_monomial_corner(st.kt, d - 1, N) ==
                  expand_u_monomial(st, last, N))) {
                std::ostringstream os;
                os << "k=d d=" << d << " ut" << i << ": corner path differs";
                return os.str();
            }
        }
        // a composite monomial on each corner
        MonomialSpec comp = MonomialSpec::zero(first);
        for (int j = 0; j < d - 1; ++j) comp.k[j] = (j % 2) ? -1 : 2;
        if (!(expand_u_monomial_corner(comp.k, d - 1, N) ==
              expand_u_monomial(comp, first, N)))
            return "composite corner monomial differs at d=" + std::to_string(d);
    }
    return "";
}

// 7. rotation of the matrix swaps the two arms exactly.
std::string tilde_symmetry() {
    Rng rng(31337);
    for (int d = 2; d <= 5; ++d) {
        std::vector<Rat> alpha(d), beta(d - 1), gamma(d - 1);
        for (int i = 0; i < d; ++i) alpha[i] = Rat(4 * i + 1) + rng.rat(7, 16);
        for (int i = 0; i + 1 < d; ++i) {
            beta[i] = rng.nonzero_rat(9, 40);
            gamma[i] = rng.nonzero_rat(9, 40);
        }
        JacobiMatrix M(alpha, beta, gamma);
        JacobiMatrix R = M.rotated();
        for (int k = 1; k <= d; ++k) {
            EigenResult a = solve_branch(M, k, 3);
            EigenResult b = solve_branch(R, d + 1 - k, 3);
            if (a.eigenvalue != b.eigenvalue || a.v != b.vt || a.vt != b.v) {
                std::ostringstream os;
                os << "d=" << d << " k=" << k << ": rotated branch differs exactly";
                return os.str();
            }
        }
    }
    return "";
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double budget_s;
        Body body;
    };
    const std::vector<Criterion> criteria = {
        {1, "golden d=2 series (signed Catalan numbers, N=8)", 1.0, golden_d2},
        {2, "closed-form Jacobian vs finite differences + term counts", 10.0, jacobian_vs_numeric},
        {3, "expansion == fixed-point iteration, d<=5, N=5, every branch", 300.0, master_oracle},
        {4, "inverted Lagrange system: exact zero residuals", 30.0, lagrange_residuals},
        {5, "residual order 2(N+1) and dense-gap scaling, d=4 k=2", 60.0, residual_order},
        {6, "corner path == generic path with empty groups, d<=5, N=4", 60.0, corner_agreement},
        {7, "tilde symmetry under matrix rotation, d<=5", 60.0, tilde_symmetry},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string msg;
        try {
            msg = c.body();
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (msg.empty()) msg = check_time(secs, c.budget_s);
        std::ostringstream line;
        line.precision(3);
        line << "criterion " << c.id << " [" << c.label << "]: "
             << (msg.empty() ? "PASS" : "FAIL") << " (" << std::fixed << secs << " s)";
        if (!msg.empty()) {
            line << " - " << msg;
            ++failures;
        }
        std::cout << line.str() << std::endl;
    }
    if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
    return failures ? 1 : 0;
}
