#include "jaceig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "jaceig/errors.hpp"
#include "jaceig/hypergeometric.hpp"

namespace jaceig {

namespace {

TruncatedSeries var_monomial(const VarLayout& L, long cap, int flat_index) {
    TruncatedSeries::ExpVec e(L.nvars(), 0);
    e[flat_index] = 1;
    return TruncatedSeries::monomial(L.nvars(), cap, e, Rat(1));
}

} // namespace

IterationState iterate_system(int r, int rt, long N) {
    const VarLayout L(r, rt);
    const int D = L.nvars();
    const TruncatedSeries one = TruncatedSeries::constant(D, N, Rat(1));

    IterationState st;
    st.u.assign(r, one);
    st.ut.assign(rt, one);

    auto sweep = [&]() {
        bool changed = false;
        // u_i = u_{i-1} - x_{i-1} u_1 u_i - y_{i-1} ut_1 u_i + z_{i-1} u_{i+1}
        for (int i = 1; i <= r; ++i) {
            TruncatedSeries rhs = (i == 1) ? one : st.u[i - 2];
            rhs -= var_monomial(L, N, L.x_off() + i - 1) * st.u[0] * st.u[i - 1];
            if (L.ny() > 0)
                rhs -= var_monomial(L, N, L.y_off() + i - 1) * st.ut[0] * st.u[i - 1];
            if (i <= r - 1)
                rhs += var_monomial(L, N, L.z_off() + i - 1) * st.u[i];
            if (!(rhs == st.u[i - 1])) {
                st.u[i - 1] = rhs;
                changed = true;
            }
        }
        for (int i = 1; i <= rt; ++i) {
            TruncatedSeries rhs = (i == 1) ? one : st.ut[i - 2];
            rhs -= var_monomial(L, N, L.xt_off() + i - 1) * st.ut[0] * st.ut[i - 1];
            if (L.nyt() > 0)
                rhs -= var_monomial(L, N, L.yt_off() + i - 1) * st.u[0] * st.ut[i - 1];
            if (i <= rt - 1)
                rhs += var_monomial(L, N, L.zt_off() + i - 1) * st.ut[i];
            if (!(rhs == st.ut[i - 1])) {
                st.ut[i - 1] = rhs;
                changed = true;
            }
        }
        return changed;
    };

    for (long pass = 0; pass <= N + 2; ++pass) {
        if (!sweep()) {
            st.degree_converged = N;
            return st;
        }
    }
    throw Error("iteration did not reach a fixed point within the degree bound");
}

// ---------------------------------------------------------------------------
// dense numeric eigensolver

namespace {

using cdouble = std::complex<double>;

// det(M - z) and its z-derivative through the leading-minor recurrence.
void charpoly_eval(const std::vector<double>& alpha, const std::vector<double>& bg,
                   cdouble z, cdouble& p, cdouble& dp) {
    const int d = static_cast<int>(alpha.size());
    cdouble pm2(1, 0), pm1 = alpha[0] - z;
    cdouble dm2(0, 0), dm1(-1, 0);
    for (int j = 1; j < d; ++j) {
        cdouble pj = (alpha[j] - z) * pm1 - bg[j - 1] * pm2;
        cdouble dj = -pm1 + (alpha[j] - z) * dm1 - bg[j - 1] * dm2;
        pm2 = pm1;
        pm1 = pj;
        dm2 = dm1;
        dm1 = dj;
    }
    p = pm1;
    dp = dm1;
}

std::vector<cdouble> aberth_roots(const std::vector<double>& alpha,
                                  const std::vector<double>& bg, double scale) {
    const int d = static_cast<int>(alpha.size());
    std::vector<cdouble> z(d);
    for (int i = 0; i < d; ++i) {
        double theta = 2.0 * M_PI * (i + 0.3) / d;
        z[i] = cdouble(alpha[i], 0) +
               0.01 * scale * cdouble(std::cos(theta), std::sin(theta));
    }
    for (int pass = 0; pass < 400; ++pass) {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            cdouble p, dp;
            charpoly_eval(alpha, bg, z[i], p, dp);
            if (p == cdouble(0, 0)) continue;
            if (dp == cdouble(0, 0)) {
                z[i] += 1e-8 * scale;
                worst = 1;
                continue;
            }
            cdouble newton = p / dp;
            cdouble rep(0, 0);
            for (int j = 0; j < d; ++j)
                if (j != i) rep += cdouble(1, 0) / (z[i] - z[j]);
            cdouble corr = newton / (cdouble(1, 0) - newton * rep);
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

// Solve (T - lambda) x = b for tridiagonal T with partial pivoting.
std::vector<double> shifted_tridiag_solve(const std::vector<double>& alpha,
                                          const std::vector<double>& beta,
                                          const std::vector<double>& gamma,
                                          double lambda, std::vector<double> b) {
    const int d = static_cast<int>(alpha.size());
    std::vector<double> u0(d), u1(std::max(d - 1, 0)), u2(std::max(d - 2, 0), 0.0);
    std::vector<double> l(std::max(d - 1, 0));
    for (int i = 0; i < d; ++i) u0[i] = alpha[i] - lambda;
    for (int i = 0; i < d - 1; ++i) {
        u1[i] = beta[i];
        l[i] = gamma[i];
    }
    for (int i = 0; i < d - 1; ++i) {
        if (std::abs(u0[i]) >= std::abs(l[i])) {
            if (u0[i] == 0.0) u0[i] = 1e-300;
            double m = l[i] / u0[i];
            u0[i + 1] -= m * u1[i];
            if (i + 2 < d) u1[i + 1] -= m * u2[i];
            b[i + 1] -= m * b[i];
        } else {
            double m = u0[i] / l[i];
            double r0 = u0[i], r1 = u1[i], r2 = (i + 2 < d) ? u2[i] : 0.0;
            u0[i] = l[i];
            u1[i] = u0[i + 1];
            if (i + 2 < d) u2[i] = u1[i + 1];
            u0[i + 1] = r1 - m * u1[i];
            if (i + 2 < d) u1[i + 1] = r2 - m * u2[i];
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= m * b[i];
        }
    }
    if (u0[d - 1] == 0.0) u0[d - 1] = 1e-300;
    std::vector<double> x(d);
    for (int i = d - 1; i >= 0; --i) {
        double s = b[i];
        if (i + 1 < d) s -= u1[i] * x[i + 1];
        if (i + 2 < d) s -= u2[i] * x[i + 2];
        x[i] = s / u0[i];
    }
    return x;
}

std::vector<double> matvec(const std::vector<double>& alpha, const std::vector<double>& beta,
                           const std::vector<double>& gamma, const std::vector<double>& v) {
    const int d = static_cast<int>(alpha.size());
    std::vector<double> out(d);
    for (int i = 0; i < d; ++i) {
        double s = alpha[i] * v[i];
        if (i > 0) s += gamma[i - 1] * v[i - 1];
        if (i + 1 < d) s += beta[i] * v[i + 1];
        out[i] = s;
    }
    return out;
}

void normalize_inf(std::vector<double>& v) {
    double best = 0;
    int arg = 0;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (std::abs(v[i]) > best) {
            best = std::abs(v[i]);
            arg = i;
        }
    if (best == 0) return;
    double piv = v[arg];
    for (double& c : v) c /= piv;
}

} // namespace

std::vector<DenseEigenpair> dense_eigensolve(const JacobiMatrix& M) {
    const int d = M.d;
    const std::vector<double> alpha = M.alpha_d(), beta = M.beta_d(), gamma = M.gamma_d();
    std::vector<double> bg(std::max(d - 1, 0));
    for (int i = 0; i < d - 1; ++i) bg[i] = beta[i] * gamma[i];

    const double norm = M.inf_norm();
    const double scale = std::max(norm, 1e-30);
    const double target = 1e-12 * scale;

    std::vector<cdouble> roots = aberth_roots(alpha, bg, scale);
    std::vector<double> vals(d);
    for (int i = 0; i < d; ++i) {
        if (std::abs(roots[i].imag()) > 1e-8 * (1.0 + std::abs(roots[i].real())))
            throw ConvergenceFailure("characteristic root with significant imaginary part: " +
                                     std::to_string(roots[i].real()) + " + " +
                                     std::to_string(roots[i].imag()) + "i");
        vals[i] = roots[i].real();
    }
    std::sort(vals.begin(), vals.end());

    std::vector<DenseEigenpair> out(d);
    for (int i = 0; i < d; ++i) {
        double lambda = vals[i];
        // polish on the real axis
        for (int it = 0; it < 4; ++it) {
            cdouble p, dp;
            charpoly_eval(alpha, bg, cdouble(lambda, 0), p, dp);
            if (dp == cdouble(0, 0)) break;
            double step = (p / dp).real();
            lambda -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(lambda))) break;
        }

        std::vector<double> v(d, 1.0);
        double res = 0;
        bool ok = false;
        for (int round = 0; round < 4 && !ok; ++round) {
            for (int it = 0; it < 3; ++it) {
                v = shifted_tridiag_solve(alpha, beta, gamma, lambda, v);
                normalize_inf(v);
            }
            std::vector<double> mv = matvec(alpha, beta, gamma, v);
            // update lambda from the dominant component, then re-check
            res = 0;
            for (int j = 0; j < d; ++j) res = std::max(res, std::abs(mv[j] - lambda * v[j]));
            if (res <= target) {
                ok = true;
            } else {
                int arg = 0;
                for (int j = 0; j < d; ++j)
                    if (std::abs(v[j]) > std::abs(v[arg])) arg = j;
                if (v[arg] != 0) lambda = mv[arg] / v[arg];
            }
        }
        if (!ok)
            throw ConvergenceFailure("eigenpair residual " + std::to_string(res) +
                                     " above target " + std::to_string(target));
        out[i] = DenseEigenpair{lambda, std::move(v), res};
    }
    return out;
}

// ---------------------------------------------------------------------------
// cross validation

CrossValidationReport cross_validate(const JacobiMatrix& M, int k, long N) {
    const BranchConfig cfg = relabel(M, k);
    const VarLayout L = cfg.layout();

    IterationState iter = iterate_system(cfg.r, cfg.rt, N);

    std::vector<TruncatedSeries> u_exp, ut_exp;
    for (int i = 1; i <= cfg.r; ++i)
        u_exp.push_back(expand_u_monomial(MonomialSpec::unit_u(i, L), L, N));
    for (int i = 1; i <= cfg.rt; ++i)
        ut_exp.push_back(expand_u_monomial(MonomialSpec::unit_ut(i, L), L, N));

    CrossValidationReport rep;
    auto diff_series = [&](const std::string& name, const TruncatedSeries& a,
                           const TruncatedSeries& b) {
        for (const auto& [e, c] : a.terms())
            if (b.coeff(e) != c) rep.diffs.push_back({name, e, c, b.coeff(e)});
        for (const auto& [e, c] : b.terms())
            if (a.coeff(e) == 0 && c != 0 && a.coeff(e) != c)
                rep.diffs.push_back({name, e, a.coeff(e), c});
    };
    for (int i = 0; i < cfg.r; ++i)
        diff_series("u" + std::to_string(i + 1), iter.u[i], u_exp[i]);
    for (int i = 0; i < cfg.rt; ++i)
        diff_series("ut" + std::to_string(i + 1), iter.ut[i], ut_exp[i]);

    const ExpansionPoint point = expansion_variables(cfg);
    EigenResult eig = assemble_eigenpair(cfg, u_exp, ut_exp, point, N);
    eig.residual = residual_inf_norm(M, eig.eigenvalue, eig.full_vector(cfg));

    std::vector<DenseEigenpair> dense = dense_eigensolve(M);
    const double center = cfg.shift.get_d();
    int best = 0, second = -1;
    for (int i = 1; i < M.d; ++i) {
        if (std::abs(dense[i].value - center) < std::abs(dense[best].value - center)) {
            second = best;
            best = i;
        } else if (second < 0 || std::abs(dense[i].value - center) <
                                     std::abs(dense[second].value - center)) {
            second = i;
        }
    }
    if (second >= 0) {
        double d1 = std::abs(dense[best].value - center);
        double d2 = std::abs(dense[second].value - center);
        if (d2 - d1 <= 1e-12 * (1.0 + std::abs(center)))
            throw BranchAmbiguity("two dense eigenvalues equidistant from alpha_k");
    }

    rep.lambda_series = eig.eigenvalue;
    rep.lambda_dense = dense[best].value;
    rep.lambda_gap = std::abs(eig.eigenvalue.get_d() - dense[best].value);
    rep.residual = eig.residual;
    return rep;
}

} // namespace jaceig
