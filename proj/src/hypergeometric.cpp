#include "jaceig/hypergeometric.hpp"

#include <functional>

#include "jaceig/errors.hpp"

namespace jaceig {

namespace {

void check_param_sizes(const PhiParams& params, const VarLayout& L) {
    if (static_cast<int>(params.mu.size()) != L.r() ||
        static_cast<int>(params.mut.size()) != L.rt())
        throw DimensionMismatch("Phi parameter vectors must have lengths r and rt");
}

// All flat exponent vectors e >= 0 with total degree <= N.
template <class F>
void for_each_index(int D, long N, F&& fn) {
    std::vector<long> e(D, 0);
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == D) {
            fn(e);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
        e[pos] = 0;
    };
    if (N >= 0) rec(0, N);
}

long vec_sum(const std::vector<long>& v) {
    long s = 0;
    for (long x : v) s += x;
    return s;
}

// Exponent vector of the prefix monomial x_i z_0...z_{i-1} (i = -1 gives 1).
void add_f_prefix(std::vector<long>& e, int i, int x_off, int z_off) {
    if (i < 0) return;
    e[x_off + i] += 1;
    for (int j = 0; j < i; ++j) e[z_off + j] += 1;
}

struct PrefixedPhi {
    std::vector<long> prefix;  // flat exponents
    PhiParams params;
    int sign;  // +1 for the f-sum, -1 for the g-sum
};

// The finite list of prefixed Phi series of the expansion, shared by the
// u-monomial and the eta-monomial paths.
std::vector<PrefixedPhi> expansion_terms(const std::vector<long>& pi,
                                         const std::vector<long>& pit,
                                         const VarLayout& L) {
    const int r = L.r(), rt = L.rt();
    std::vector<PrefixedPhi> out;

    auto params_for = [&](int i, int it) {
        PhiParams p;
        p.mu.resize(r);
        for (int j = 0; j < r; ++j) p.mu[j] = pi[j] + 2 * sigma(i, j - 1);
        p.mut.resize(rt);
        for (int j = 0; j < rt; ++j) p.mut[j] = pit[j] + 2 * sigma(it, j - 1);
        return p;
    };

    for (int i = -1; i <= r - 1; ++i)
        for (int it = -1; it <= rt - 1; ++it) {
            PrefixedPhi t;
            t.prefix.assign(L.nvars(), 0);
            add_f_prefix(t.prefix, i, L.x_off(), L.z_off());
            add_f_prefix(t.prefix, it, L.xt_off(), L.zt_off());
            t.params = params_for(i, it);
            t.sign = +1;
            out.push_back(std::move(t));
        }
    for (int i = 0; i <= r - 1; ++i)
        for (int it = 0; it <= rt - 1; ++it) {
            PrefixedPhi t;
            t.prefix.assign(L.nvars(), 0);
            add_f_prefix(t.prefix, i, L.y_off(), L.z_off());
            add_f_prefix(t.prefix, it, L.yt_off(), L.zt_off());
            t.params = params_for(i, it);
            t.sign = -1;
            out.push_back(std::move(t));
        }
    return out;
}

TruncatedSeries sum_prefixed(const std::vector<PrefixedPhi>& terms,
                             const std::vector<long>& base, const VarLayout& L, long N) {
    long base_lb = 0;
    for (long e : base) base_lb = std::min(base_lb, e);
    TruncatedSeries acc(L.nvars(), N, base_lb);
    std::vector<long> shift(L.nvars());
    for (const PrefixedPhi& t : terms) {
        for (int i = 0; i < L.nvars(); ++i) shift[i] = base[i] + t.prefix[i];
        long cap = N - vec_sum(shift);
        if (cap < 0) continue;
        TruncatedSeries phi = phi_series(t.params, L, cap);
        if (t.sign > 0)
            acc += phi.shifted(shift, N);
        else
            acc -= phi.shifted(shift, N);
    }
    return acc;
}

} // namespace

Int phi_coefficient(const MultiIndex& q, const PhiParams& params) {
    if (!q.nonnegative()) throw NegativeIndex("Phi coefficient requires q >= 0");
    const int r = static_cast<int>(params.mu.size());
    const int rt = static_cast<int>(params.mut.size());
    if (static_cast<int>(q.m.size()) != r || static_cast<int>(q.mt.size()) != rt)
        throw DimensionMismatch("multi-index does not match Phi parameters");

    Int acc(1);
    for (int j = 0; j < r; ++j) {
        long mj = q.m_at(j), nj = q.n_at(j), pj = q.p_ext(j);
        acc *= quadrinom(params.mu[j] + mj + nj + q.p_ext(j - 1) + pj - 1, mj, nj, pj);
        if (acc == 0) return acc;
    }
    for (int j = 0; j < rt; ++j) {
        long mj = q.mt_at(j), nj = q.nt_at(j), pj = q.pt_ext(j);
        acc *= quadrinom(params.mut[j] + mj + nj + q.pt_ext(j - 1) + pj - 1, mj, nj, pj);
        if (acc == 0) return acc;
    }
    if ((q.abs_m() + q.abs_n() + q.abs_mt() + q.abs_nt()) % 2 != 0) acc = -acc;
    return acc;
}

TruncatedSeries phi_series(const PhiParams& params, const VarLayout& L, long N) {
    check_param_sizes(params, L);
    TruncatedSeries out(L.nvars(), N);
    for_each_index(L.nvars(), N, [&](const std::vector<long>& e) {
        Int c = phi_coefficient(MultiIndex::from_flat(L, e), params);
        if (c != 0) out.set_coeff(e, Rat(c));
    });
    return out;
}

Int corner_phi_coefficient(const std::vector<long>& m, const std::vector<long>& p,
                           const std::vector<long>& mu) {
    const int r = static_cast<int>(mu.size());
    if (static_cast<int>(m.size()) != r || static_cast<int>(p.size()) != std::max(r - 1, 0))
        throw DimensionMismatch("corner index lengths must be r and r-1");
    for (long e : m)
        if (e < 0) throw NegativeIndex("corner Phi coefficient requires m >= 0");
    for (long e : p)
        if (e < 0) throw NegativeIndex("corner Phi coefficient requires p >= 0");

    long abs_m = vec_sum(m);
    auto p_ext = [&](long j) -> long {
        if (j < 0) return abs_m;
        if (j >= static_cast<long>(p.size())) return 0;
        return p[static_cast<std::size_t>(j)];
    };
    Int acc(1);
    for (int j = 0; j < r; ++j) {
        acc *= trinom(mu[j] + m[j] + p_ext(j - 1) + p_ext(j) - 1, m[j], p_ext(j));
        if (acc == 0) return acc;
    }
    if (abs_m % 2 != 0) acc = -acc;
    return acc;
}

Int eta_coefficient(const MultiIndex& qprime, const MultiIndex& q, const VarLayout& L) {
    const int r = L.r(), rt = L.rt();

    // product over one arm for the F-style (delta on the first trinomial
    // slot) or G-style (delta on the second) factor at offset i
    auto arm_factor = [](int len, int i, bool on_first, const MultiIndex& qp,
                         const MultiIndex& qq, bool tilded) {
        Int acc(1);
        for (int j = 0; j < len && acc != 0; ++j) {
            long d = (i == j) ? 1 : 0;
            long sg = sigma(i, j);
            long pjm1 = tilded ? qq.pt_ext(j - 1) : qq.p_ext(j - 1);
            long pj = tilded ? qq.pt_ext(j) : qq.p_ext(j);
            long mj = (tilded ? qq.mt_at(j) : qq.m_at(j)) - (tilded ? qp.mt_at(j) : qp.m_at(j));
            long nj = (tilded ? qq.nt_at(j) : qq.n_at(j)) - (tilded ? qp.nt_at(j) : qp.n_at(j));
            long pdiff = (tilded ? qq.pt_ext(j) - qp.pt_ext(j) : qq.p_ext(j) - qp.p_ext(j));
            acc *= trinom(-pjm1 - pj - d, mj - (on_first ? d : 0), nj - (on_first ? 0 : d));
            acc *= binom(pjm1 + pj + d - 1, pdiff - sg);
        }
        return acc;
    };

    Int total(0);
    for (int i = -1; i <= r - 1; ++i) {
        Int fi = arm_factor(r, i, true, qprime, q, false);
        if (fi == 0) continue;
        for (int it = -1; it <= rt - 1; ++it)
            total += fi * arm_factor(rt, it, true, qprime, q, true);
    }
    for (int i = 0; i <= r - 1; ++i) {
        Int gi = arm_factor(r, i, false, qprime, q, false);
        if (gi == 0) continue;
        for (int it = 0; it <= rt - 1; ++it)
            total -= gi * arm_factor(rt, it, false, qprime, q, true);
    }
    return total;
}

std::vector<long> monomial_pi(const std::vector<long>& k) {
    std::vector<long> pi(k.size(), 0);
    long acc = 0;
    for (int j = static_cast<int>(k.size()) - 1; j >= 0; --j) {
        acc += k[static_cast<std::size_t>(j)];
        pi[static_cast<std::size_t>(j)] = acc;
    }
    return pi;
}

std::pair<std::vector<long>, std::vector<long>> theorem_pi(const MultiIndex& qprime) {
    std::vector<long> pi(qprime.m.size()), pit(qprime.mt.size());
    for (std::size_t j = 0; j < pi.size(); ++j)
        pi[j] = qprime.p_ext(static_cast<long>(j) - 1) + qprime.p_ext(static_cast<long>(j));
    for (std::size_t j = 0; j < pit.size(); ++j)
        pit[j] = qprime.pt_ext(static_cast<long>(j) - 1) + qprime.pt_ext(static_cast<long>(j));
    return {pi, pit};
}

MultiIndex u_monomial_eta_exponents(const MonomialSpec& spec, const VarLayout& L) {
    MultiIndex q = MultiIndex::zeros(L);
    auto fill = [](const std::vector<long>& k, std::vector<long>& m, std::vector<long>& p) {
        const int r = static_cast<int>(k.size());
        if (r == 0) return;
        for (int idx = 0; idx < r; idx += 2) m[0] += k[idx];
        for (int i = 0; i + 1 < r; ++i)
            for (int idx = i + 1; idx < r; idx += 2) p[i] += k[idx];
    };
    fill(spec.k, q.m, q.p);
    fill(spec.kt, q.mt, q.pt);
    return q;
}

long expansion_term_count(const VarLayout& L) {
    long count = 0;
    for (int i = -1; i <= L.r() - 1; ++i)
        for (int it = -1; it <= L.rt() - 1; ++it) ++count;
    for (int i = 0; i <= L.r() - 1; ++i)
        for (int it = 0; it <= L.rt() - 1; ++it) ++count;
    return count;
}

TruncatedSeries expand_eta_monomial(const MultiIndex& qprime, const VarLayout& L, long N) {
    auto [pi, pit] = theorem_pi(qprime);
    return sum_prefixed(expansion_terms(pi, pit, L), qprime.to_flat(), L, N);
}

TruncatedSeries expand_u_monomial(const MonomialSpec& spec, const VarLayout& L, long N) {
    if (static_cast<int>(spec.k.size()) != L.r() ||
        static_cast<int>(spec.kt.size()) != L.rt())
        throw DimensionMismatch("monomial exponent lengths must be r and rt");
    std::vector<long> base(L.nvars(), 0);
    return sum_prefixed(expansion_terms(monomial_pi(spec.k), monomial_pi(spec.kt), L),
                        base, L, N);
}

TruncatedSeries expand_u_monomial_corner(const std::vector<long>& karm, int r, long N) {
    if (static_cast<int>(karm.size()) != r)
        throw DimensionMismatch("corner exponent vector must have length r");
    const int D = 2 * r - 1;
    const std::vector<long> pi = monomial_pi(karm);

    TruncatedSeries acc(D, N);
    for (int i = -1; i <= r - 1; ++i) {
        std::vector<long> prefix(D, 0);
        add_f_prefix(prefix, i, 0, r);
        long cap = N - vec_sum(prefix);
        if (cap < 0) continue;

        std::vector<long> mu(r);
        for (int j = 0; j < r; ++j) mu[j] = pi[j] + 2 * sigma(i, j - 1);

        TruncatedSeries phi(D, cap);
        for_each_index(D, cap, [&](const std::vector<long>& e) {
            std::vector<long> m(e.begin(), e.begin() + r);
            std::vector<long> p(e.begin() + r, e.end());
            Int c = corner_phi_coefficient(m, p, mu);
            if (c != 0) phi.set_coeff(e, Rat(c));
        });
        acc += phi.shifted(prefix, N);
    }
    return acc;
}

} // namespace jaceig
