#include "jaceig/jacobian.hpp"

#include <cmath>

namespace jaceig {

double jacobian_numeric(const EtaPoint<double>& eta, const VarLayout& L, double step) {
    const int D = L.nvars();
    const std::vector<double> eta0 = eta.flatten();
    const std::vector<double> phi0 = phi_maps(eta, L).flatten();

    // A[j][k] = delta_jk - (eta_k / phi_j) * dphi_j/deta_k
    std::vector<std::vector<double>> A(D, std::vector<double>(D, 0.0));
    for (int k = 0; k < D; ++k) {
        std::vector<double> plus = eta0, minus = eta0;
        plus[k] += step;
        minus[k] -= step;
        const std::vector<double> phi_p =
            phi_maps(EtaPoint<double>::from_flat(L, plus), L).flatten();
        const std::vector<double> phi_m =
            phi_maps(EtaPoint<double>::from_flat(L, minus), L).flatten();
        for (int j = 0; j < D; ++j) {
            double deriv = (phi_p[j] - phi_m[j]) / (2 * step);
            A[j][k] = (j == k ? 1.0 : 0.0) - eta0[k] / phi0[j] * deriv;
        }
    }

    // determinant by elimination with partial pivoting
    double det = 1.0;
    for (int col = 0; col < D; ++col) {
        int piv = col;
        for (int row = col + 1; row < D; ++row)
            if (std::abs(A[row][col]) > std::abs(A[piv][col])) piv = row;
        if (A[piv][col] == 0.0)
            throw SingularElimination("zero pivot in numeric Jacobian determinant");
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = -det;
        }
        det *= A[col][col];
        for (int row = col + 1; row < D; ++row) {
            double m = A[row][col] / A[col][col];
            for (int c = col; c < D; ++c) A[row][c] -= m * A[col][c];
        }
    }
    return det;
}

LagrangeReport verify_lagrange_system(const VarLayout& L, const EtaPoint<Rat>& eta) {
    const int r = L.r(), rt = L.rt();
    LagrangeReport rep;

    // eta = 0 corresponds to xi = 0 and the zeroth approximation u == 1,
    // where nothing needs dividing.
    if (eta.all_zero()) {
        rep.residuals.assign(r + rt, Rat(0));
        return rep;
    }

    const PhiMaps<Rat> maps = phi_maps(eta, L);

    auto ratio = [](const Rat& num, const Rat& den, const char* what) {
        if (den == 0) throw DivisionByZero(std::string("undefined ratio: ") + what);
        return num / den;
    };

    // xi_i = eta_i / phi_i, groupwise
    std::vector<Rat> x(r), y(L.ny()), z(std::max(r - 1, 0));
    std::vector<Rat> xt(rt), yt(L.nyt()), zt(std::max(rt - 1, 0));
    for (int i = 0; i < r; ++i) x[i] = ratio(eta.s[i], maps.f[i], "s_i / f_i");
    for (int i = 0; i < L.ny(); ++i) y[i] = ratio(eta.t[i], maps.g[i], "t_i / g_i");
    for (int i = 0; i + 1 < r; ++i) z[i] = ratio(eta.w[i], maps.h[i], "w_i / h_i");
    for (int i = 0; i < rt; ++i) xt[i] = ratio(eta.st[i], maps.ft[i], "st_i / ft_i");
    for (int i = 0; i < L.nyt(); ++i) yt[i] = ratio(eta.tt[i], maps.gt[i], "tt_i / gt_i");
    for (int i = 0; i + 1 < rt; ++i) zt[i] = ratio(eta.wt[i], maps.ht[i], "wt_i / ht_i");

    // u_1 = s_0/x_0, u_{2j} = w_{2j-2}...w_0 / z_{2j-2}...z_0,
    // u_{2j+1} = w_{2j-1}...w_1 s_0 / z_{2j-1}...z_1 x_0, mirrored on the
    // left arm.
    auto rebuild = [&](int len, const std::vector<Rat>& s_, const std::vector<Rat>& w_,
                       const std::vector<Rat>& x_, const std::vector<Rat>& z_) {
        std::vector<Rat> u(len + 1);
        u[0] = 1;
        if (len >= 1) u[1] = ratio(s_[0], x_[0], "s_0 / x_0");
        for (int i = 2; i <= len; ++i) {
            Rat num(1), den(1);
            for (int j = i - 2; j >= 0; j -= 2) {
                num *= w_[j];
                den *= z_[j];
            }
            if (i % 2 == 1) {
                num *= s_[0];
                den *= x_[0];
            }
            u[i] = ratio(num, den, "u_i from the w/z chain");
        }
        return u;
    };

    const std::vector<Rat> u = rebuild(r, eta.s, eta.w, x, z);
    const std::vector<Rat> ut = rebuild(rt, eta.st, eta.wt, xt, zt);

    // residuals of the quadratic system
    for (int i = 1; i <= r; ++i) {
        Rat res = u[i - 1] - x[i - 1] * u[1] * u[i] - u[i];
        if (L.ny() > 0) res -= y[i - 1] * ut[1] * u[i];
        if (i <= r - 1) res += z[i - 1] * u[i + 1];
        rep.residuals.push_back(res);
    }
    for (int i = 1; i <= rt; ++i) {
        Rat res = ut[i - 1] - xt[i - 1] * ut[1] * ut[i] - ut[i];
        if (L.nyt() > 0) res -= yt[i - 1] * u[1] * ut[i];
        if (i <= rt - 1) res += zt[i - 1] * ut[i + 1];
        rep.residuals.push_back(res);
    }
    return rep;
}

} // namespace jaceig
