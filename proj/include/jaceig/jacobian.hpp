#ifndef JACEIG_JACOBIAN_HPP
#define JACEIG_JACOBIAN_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "jaceig/combinatorics.hpp"
#include "jaceig/errors.hpp"
#include "jaceig/layout.hpp"
#include "jaceig/rational.hpp"

namespace jaceig {

// A point in the slow variables (s, t, w, st, tt, wt), grouped like the
// layout.  w[r-1] and wt[rt-1] read as 0 when referenced.
template <class T>
struct EtaPoint {
    std::vector<T> s, t, w, st, tt, wt;

    static EtaPoint zeros(const VarLayout& L) {
        EtaPoint p;
        p.s.assign(L.nx(), T(0));
        p.t.assign(L.ny(), T(0));
        p.w.assign(L.nz(), T(0));
        p.st.assign(L.nxt(), T(0));
        p.tt.assign(L.nyt(), T(0));
        p.wt.assign(L.nzt(), T(0));
        return p;
    }

    static EtaPoint from_flat(const VarLayout& L, const std::vector<T>& flat) {
        if (static_cast<int>(flat.size()) != L.nvars())
            throw DimensionMismatch("flat eta vector does not match layout");
        EtaPoint p;
        auto take = [&](int off, int n) {
            return std::vector<T>(flat.begin() + off, flat.begin() + off + n);
        };
        p.s = take(L.x_off(), L.nx());
        p.t = take(L.y_off(), L.ny());
        p.w = take(L.z_off(), L.nz());
        p.st = take(L.xt_off(), L.nxt());
        p.tt = take(L.yt_off(), L.nyt());
        p.wt = take(L.zt_off(), L.nzt());
        return p;
    }

    std::vector<T> flatten() const {
        std::vector<T> flat;
        flat.reserve(s.size() + t.size() + w.size() + st.size() + tt.size() + wt.size());
        for (const auto* g : {&s, &t, &w, &st, &tt, &wt})
            flat.insert(flat.end(), g->begin(), g->end());
        return flat;
    }

    // Entries beyond the stored range (and of absent groups) read as 0.
    T s_at(long j) const { return at(s, j); }
    T t_at(long j) const { return at(t, j); }
    T w_at(long j) const { return at(w, j); }
    T st_at(long j) const { return at(st, j); }
    T tt_at(long j) const { return at(tt, j); }
    T wt_at(long j) const { return at(wt, j); }

    bool all_zero() const {
        for (const auto* g : {&s, &t, &w, &st, &tt, &wt})
            for (const T& v : *g)
                if (!(v == T(0))) return false;
        return true;
    }

private:
    static T at(const std::vector<T>& v, long j) {
        if (j < 0 || j >= static_cast<long>(v.size())) return T(0);
        return v[static_cast<std::size_t>(j)];
    }
};

// Values of the inversion maps (f, g, h, ft, gt, ht), one per slow variable,
// flattened in layout order by flatten().
template <class T>
struct PhiMaps {
    std::vector<T> f, g, h, ft, gt, ht;

    std::vector<T> flatten() const {
        std::vector<T> flat;
        for (const auto* g_ : {&f, &g, &h, &ft, &gt, &ht})
            flat.insert(flat.end(), g_->begin(), g_->end());
        return flat;
    }
};

namespace detail {

template <class T>
T checked_div(const T& num, const T& den) {
    if (den == T(0)) throw DenominatorZero("inversion map denominator vanished");
    return num / den;
}

// base^e for e in {0, 1}; 0^0 == 1 by convention.
template <class T>
T pow01(const T& base, int e) {
    return e == 0 ? T(1) : base;
}

} // namespace detail

// The map values of the Lagrange-form system at a point.  f and g are
// constant along their group; the one-arm branch drops g/gt (and the t
// entries are simply absent).
template <class T>
PhiMaps<T> phi_maps(const EtaPoint<T>& eta, const VarLayout& L) {
    using detail::checked_div;
    const int r = L.r(), rt = L.rt();
    PhiMaps<T> maps;

    auto denom = [&](long j) -> T { return T(1) + eta.s_at(j) + eta.t_at(j); };
    auto denomt = [&](long j) -> T { return T(1) + eta.st_at(j) + eta.tt_at(j); };

    if (r >= 1) {
        T f0 = checked_div<T>(T(1) + eta.w_at(0), denom(0));
        maps.f.assign(L.nx(), f0);
        maps.h.resize(L.nz());
        for (int i = 0; i + 1 < r; ++i)
            maps.h[i] = checked_div<T>((T(1) + eta.w_at(i)) * (T(1) + eta.w_at(i + 1)),
                                    denom(i) * denom(i + 1));
    }
    if (rt >= 1) {
        T ft0 = checked_div<T>(T(1) + eta.wt_at(0), denomt(0));
        maps.ft.assign(L.nxt(), ft0);
        maps.ht.resize(L.nzt());
        for (int i = 0; i + 1 < rt; ++i)
            maps.ht[i] = checked_div<T>((T(1) + eta.wt_at(i)) * (T(1) + eta.wt_at(i + 1)),
                                     denomt(i) * denomt(i + 1));
    }
    if (L.ny() > 0) {
        // g mirrors ft, gt mirrors f
        maps.g.assign(L.ny(), maps.ft[0]);
        maps.gt.assign(L.nyt(), maps.f[0]);
    }
    return maps;
}

// J = S St - T Tt through the sigma-rewritten product form shared with the
// coefficient formulas; the one-arm case degenerates to J = S.
template <class T>
T jacobian_closed(const EtaPoint<T>& eta, const VarLayout& L) {
    using detail::checked_div;
    using detail::pow01;

    auto arm = [&](int len, bool tilded, bool s_slot, T& sum, long from_i) {
        sum = T(0);
        for (long i = from_i; i <= len - 1; ++i) {
            T term(1);
            for (long j = 0; j < len; ++j) {
                const T wj = tilded ? eta.wt_at(j) : eta.w_at(j);
                const T sj = tilded ? eta.st_at(j) : eta.s_at(j);
                const T tj = tilded ? eta.tt_at(j) : eta.t_at(j);
                const int d = (i == j) ? 1 : 0;
                term = term * pow01(wj, sigma(i, j)) * pow01(s_slot ? sj : tj, d);
                if (d == 0)
                    term = checked_div<T>(term, T(1) + wj);
                else
                    term = checked_div<T>(term, T(1) + sj + tj);
            }
            sum += term;
        }
    };

    // An empty arm leaves S = 1 (the single i = -1 term with an empty
    // product) and T = 0, so the one-arm case gives J = S without a branch.
    T S(0), St(0), Tm(0), Tt(0);
    arm(L.r(), false, true, S, -1);
    arm(L.rt(), true, true, St, -1);
    arm(L.r(), false, false, Tm, 0);
    arm(L.rt(), true, false, Tt, 0);
    return S * St - Tm * Tt;
}

// det(delta_jk - (eta_k/phi_j) dphi_j/deta_k) with central finite
// differences and partial-pivot elimination; the numeric cross-check of the
// closed form.
double jacobian_numeric(const EtaPoint<double>& eta, const VarLayout& L,
                        double step = 1e-6);

// Exact residuals of the branch system at the point reconstructed from eta
// through the inversion maps.  All residuals are zero identically; anything
// else falsifies the system equivalence.
struct LagrangeReport {
    std::vector<Rat> residuals;  // r + rt entries: right arm then left arm
    bool all_zero() const {
        return std::all_of(residuals.begin(), residuals.end(),
                           [](const Rat& q) { return q == 0; });
    }
};

LagrangeReport verify_lagrange_system(const VarLayout& L, const EtaPoint<Rat>& eta);

} // namespace jaceig

#endif
