#ifndef JACEIG_COMBINATORICS_HPP
#define JACEIG_COMBINATORICS_HPP

#include <vector>

#include "jaceig/layout.hpp"
#include "jaceig/rational.hpp"

namespace jaceig {

// Coefficient of x^m in (1+x)^a, any integer a.  Zero for m < 0.
Int binom(long a, long m);

// Coefficient of x^m y^n in (1+x+y)^a.  Zero if m < 0 or n < 0.
Int trinom(long a, long m, long n);

// Coefficient of x^m y^n z^p in (1+x+y+z)^a.
Int quadrinom(long a, long m, long n, long p);

// a(a+1)...(a+m-1); 1 for m = 0.  Requires m >= 0.
Int pochhammer(long a, long m);

// Step function: 0 for i <= j, 1 for i > j.
inline int sigma(long i, long j) { return i > j ? 1 : 0; }

// Exponent vector over the expansion variables of one branch, stored by
// group: (m, n, p, mt, nt, pt) matching the x, y, z, xt, yt, zt layout.
// The boundary values p[-1] = |m|+|nt|, pt[-1] = |mt|+|n| and
// p[r-1] = pt[rt-1] = 0 are derived, never stored.
struct MultiIndex {
    std::vector<long> m, n, p, mt, nt, pt;

    static MultiIndex zeros(const VarLayout& L) {
        MultiIndex q;
        q.m.assign(L.nx(), 0);
        q.n.assign(L.ny(), 0);
        q.p.assign(L.nz(), 0);
        q.mt.assign(L.nxt(), 0);
        q.nt.assign(L.nyt(), 0);
        q.pt.assign(L.nzt(), 0);
        return q;
    }

    static MultiIndex from_flat(const VarLayout& L, const std::vector<long>& flat);
    std::vector<long> to_flat() const;

    long abs_m() const { return sum(m); }
    long abs_n() const { return sum(n); }
    long abs_mt() const { return sum(mt); }
    long abs_nt() const { return sum(nt); }

    // p_j for j in [-1, r-1]: the j = -1 and j = r-1 conventions included.
    long p_ext(long j) const {
        if (j < 0) return abs_m() + abs_nt();
        if (j >= static_cast<long>(p.size())) return 0;
        return p[static_cast<std::size_t>(j)];
    }
    long pt_ext(long j) const {
        if (j < 0) return abs_mt() + abs_n();
        if (j >= static_cast<long>(pt.size())) return 0;
        return pt[static_cast<std::size_t>(j)];
    }

    long m_at(long j) const { return at(m, j); }
    long n_at(long j) const { return at(n, j); }
    long mt_at(long j) const { return at(mt, j); }
    long nt_at(long j) const { return at(nt, j); }

    long total_degree() const {
        return sum(m) + sum(n) + sum(p) + sum(mt) + sum(nt) + sum(pt);
    }

    bool nonnegative() const;
    bool operator==(const MultiIndex& o) const = default;

private:
    static long sum(const std::vector<long>& v) {
        long s = 0;
        for (long e : v) s += e;
        return s;
    }
    // Entries of an absent group read as 0.
    static long at(const std::vector<long>& v, long j) {
        if (j < 0 || j >= static_cast<long>(v.size())) return 0;
        return v[static_cast<std::size_t>(j)];
    }
};

} // namespace jaceig

#endif
