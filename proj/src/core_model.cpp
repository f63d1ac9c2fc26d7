#include "jaceig/core_model.hpp"

#include <algorithm>
#include <cmath>

#include "jaceig/errors.hpp"

namespace jaceig {

JacobiMatrix::JacobiMatrix(std::vector<Rat> alpha_, std::vector<Rat> beta_,
                           std::vector<Rat> gamma_)
    : d(static_cast<int>(alpha_.size())),
      alpha(std::move(alpha_)),
      beta(std::move(beta_)),
      gamma(std::move(gamma_)) {
    validate();
}

void JacobiMatrix::validate() const {
    if (d < 2) throw BadIndex("matrix order must be at least 2, got " + std::to_string(d));
    if (static_cast<int>(alpha.size()) != d ||
        static_cast<int>(beta.size()) != d - 1 ||
        static_cast<int>(gamma.size()) != d - 1)
        throw DimensionMismatch("diagonal lengths inconsistent with d = " + std::to_string(d));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (alpha[i] == alpha[j])
                throw DuplicateDiagonal("alpha[" + std::to_string(i + 1) + "] == alpha[" +
                                        std::to_string(j + 1) + "] == " + rat_str(alpha[i]));
}

JacobiMatrix JacobiMatrix::rotated() const {
    JacobiMatrix R;
    R.d = d;
    R.alpha.assign(alpha.rbegin(), alpha.rend());
    R.beta.assign(gamma.rbegin(), gamma.rend());
    R.gamma.assign(beta.rbegin(), beta.rend());
    return R;
}

double JacobiMatrix::inf_norm() const {
    double best = 0;
    for (int i = 0; i < d; ++i) {
        double row = std::abs(alpha[i].get_d());
        if (i > 0) row += std::abs(gamma[i - 1].get_d());
        if (i + 1 < d) row += std::abs(beta[i].get_d());
        best = std::max(best, row);
    }
    return best;
}

static std::vector<double> to_double(const std::vector<Rat>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
    return out;
}

std::vector<double> JacobiMatrix::alpha_d() const { return to_double(alpha); }
std::vector<double> JacobiMatrix::beta_d() const { return to_double(beta); }
std::vector<double> JacobiMatrix::gamma_d() const { return to_double(gamma); }

BranchConfig relabel(const JacobiMatrix& M, int k) {
    M.validate();
    if (k < 1 || k > M.d)
        throw BadIndex("branch index " + std::to_string(k) + " outside 1.." + std::to_string(M.d));

    BranchConfig cfg;
    cfg.k = k;
    cfg.r = M.d - k;
    cfg.rt = k - 1;
    cfg.shift = M.alpha[k - 1];

    cfg.a.resize(cfg.r + 1);
    for (int i = 0; i <= cfg.r; ++i) cfg.a[i] = M.alpha[k - 1 + i] - cfg.shift;
    cfg.at.resize(cfg.rt + 1);
    for (int i = 0; i <= cfg.rt; ++i) cfg.at[i] = M.alpha[k - 1 - i] - cfg.shift;

    cfg.b.resize(cfg.r);
    cfg.c.resize(cfg.r);
    for (int i = 0; i < cfg.r; ++i) {
        cfg.b[i] = M.beta[k - 1 + i];
        cfg.c[i] = M.gamma[k - 1 + i];
    }
    cfg.bt.resize(cfg.rt);
    cfg.ct.resize(cfg.rt);
    for (int i = 0; i < cfg.rt; ++i) {
        cfg.bt[i] = M.beta[k - 2 - i];
        cfg.ct[i] = M.gamma[k - 2 - i];
    }
    return cfg;
}

ExpansionPoint expansion_variables(const BranchConfig& cfg) {
    const int r = cfg.r, rt = cfg.rt;
    ExpansionPoint p;

    Rat bc0, btct0;
    if (r >= 1) bc0 = cfg.b[0] * cfg.c[0];
    if (rt >= 1) btct0 = cfg.bt[0] * cfg.ct[0];

    if (r >= 1) {
        p.x.resize(r);
        for (int i = 0; i < r; ++i) p.x[i] = bc0 / (cfg.a[1] * cfg.a[i + 1]);
        p.z.resize(r - 1);
        for (int i = 0; i + 1 < r; ++i)
            p.z[i] = cfg.b[i + 1] * cfg.c[i + 1] / (cfg.a[i + 1] * cfg.a[i + 2]);
    }
    if (rt >= 1) {
        p.xt.resize(rt);
        for (int i = 0; i < rt; ++i) p.xt[i] = btct0 / (cfg.at[1] * cfg.at[i + 1]);
        p.zt.resize(rt - 1);
        for (int i = 0; i + 1 < rt; ++i)
            p.zt[i] = cfg.bt[i + 1] * cfg.ct[i + 1] / (cfg.at[i + 1] * cfg.at[i + 2]);
    }
    if (r >= 1 && rt >= 1) {
        p.y.resize(r);
        for (int i = 0; i < r; ++i) p.y[i] = btct0 / (cfg.at[1] * cfg.a[i + 1]);
        p.yt.resize(rt);
        for (int i = 0; i < rt; ++i) p.yt[i] = bc0 / (cfg.a[1] * cfg.at[i + 1]);
    }
    return p;
}

std::vector<Rat> ExpansionPoint::flatten() const {
    std::vector<Rat> flat;
    flat.reserve(x.size() + y.size() + z.size() + xt.size() + yt.size() + zt.size());
    for (const auto* g : {&x, &y, &z, &xt, &yt, &zt})
        flat.insert(flat.end(), g->begin(), g->end());
    return flat;
}

std::vector<double> ExpansionPoint::flatten_double() const { return to_double(flatten()); }

std::vector<Rat> EigenResult::full_vector(const BranchConfig& cfg) const {
    std::vector<Rat> V(cfg.r + cfg.rt + 1);
    for (int i = 0; i <= cfg.rt; ++i) V[cfg.rt - i] = vt[i];
    for (int i = 0; i <= cfg.r; ++i) V[cfg.rt + i] = v[i];
    return V;
}

std::vector<Rat> residual_vector(const JacobiMatrix& M, const Rat& lambda,
                                 const std::vector<Rat>& V) {
    std::vector<Rat> res(M.d);
    for (int j = 0; j < M.d; ++j) {
        Rat mv = M.alpha[j] * V[j];
        if (j > 0) mv += M.gamma[j - 1] * V[j - 1];
        if (j + 1 < M.d) mv += M.beta[j] * V[j + 1];
        res[j] = mv - lambda * V[j];
    }
    return res;
}

double residual_inf_norm(const JacobiMatrix& M, const Rat& lambda,
                         const std::vector<Rat>& V) {
    double best = 0;
    for (const Rat& ri : residual_vector(M, lambda, V))
        best = std::max(best, std::abs(ri.get_d()));
    return best;
}

EigenResult assemble_eigenpair(const BranchConfig& cfg,
                               const std::vector<TruncatedSeries>& u_series,
                               const std::vector<TruncatedSeries>& ut_series,
                               const ExpansionPoint& point, long N) {
    const int r = cfg.r, rt = cfg.rt;
    if (static_cast<int>(u_series.size()) != r || static_cast<int>(ut_series.size()) != rt)
        throw DimensionMismatch("need series for u_1..u_r and ut_1..ut_rt");
    for (const auto* side : {&u_series, &ut_series})
        for (const auto& s : *side)
            if (s.cap() != N)
                throw DegreeMismatch("series cap " + std::to_string(s.cap()) +
                                     " differs from requested degree " + std::to_string(N));

    const std::vector<Rat> xi = point.flatten();
    const VarLayout L = cfg.layout();
    if (!u_series.empty() && u_series[0].nvars() != L.nvars())
        throw DimensionMismatch("series variable count does not match the branch layout");
    if (!ut_series.empty() && ut_series[0].nvars() != L.nvars())
        throw DimensionMismatch("series variable count does not match the branch layout");

    EigenResult out;
    out.v.assign(r + 1, Rat(0));
    out.vt.assign(rt + 1, Rat(0));
    out.v[0] = 1;
    out.vt[0] = 1;

    // v_i = (-1)^i (c_0...c_{i-1})/(a_1...a_i) u_i, mirrored with bt/at.
    Rat pref(1);
    for (int i = 1; i <= r; ++i) {
        pref *= -cfg.c[i - 1] / cfg.a[i];
        out.v[i] = pref * u_series[i - 1].eval(xi);
    }
    pref = 1;
    for (int i = 1; i <= rt; ++i) {
        pref *= -cfg.bt[i - 1] / cfg.at[i];
        out.vt[i] = pref * ut_series[i - 1].eval(xi);
    }

    // lambda = ct_0 vt_1 + b_0 v_1, with the absent side dropped.
    out.lambda_series = TruncatedSeries::zero(L.nvars(), N);
    Rat lam(0);
    if (r >= 1) {
        Rat cv = -cfg.b[0] * cfg.c[0] / cfg.a[1];
        out.lambda_series += u_series[0] * cv;
        lam += cfg.b[0] * out.v[1];
    }
    if (rt >= 1) {
        Rat cv = -cfg.bt[0] * cfg.ct[0] / cfg.at[1];
        out.lambda_series += ut_series[0] * cv;
        lam += cfg.ct[0] * out.vt[1];
    }
    out.eigenvalue = cfg.shift + lam;
    return out;
}

} // namespace jaceig
