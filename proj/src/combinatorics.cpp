#include "jaceig/combinatorics.hpp"

namespace jaceig {

namespace {

// a(a-1)...(a-len+1) / (divisors of the lower factorials are applied by the
// callers).  len >= 0.
Int falling(long a, long len) {
    Int acc(1);
    for (long i = 0; i < len; ++i) acc *= Int(a - i);
    return acc;
}

Int factorial(long m) {
    Int acc(1);
    for (long i = 2; i <= m; ++i) acc *= i;
    return acc;
}

} // namespace

Int binom(long a, long m) {
    if (m < 0) return Int(0);
    Int num = falling(a, m);
    return num / factorial(m);
}

Int trinom(long a, long m, long n) {
    if (m < 0 || n < 0) return Int(0);
    Int num = falling(a, m + n);
    return num / (factorial(m) * factorial(n));
}

Int quadrinom(long a, long m, long n, long p) {
    if (m < 0 || n < 0 || p < 0) return Int(0);
    Int num = falling(a, m + n + p);
    return num / (factorial(m) * factorial(n) * factorial(p));
}

Int pochhammer(long a, long m) {
    if (m < 0) throw NegativeIndex("pochhammer requires m >= 0");
    Int acc(1);
    for (long i = 0; i < m; ++i) acc *= Int(a + i);
    return acc;
}

MultiIndex MultiIndex::from_flat(const VarLayout& L, const std::vector<long>& flat) {
    if (static_cast<int>(flat.size()) != L.nvars())
        throw DimensionMismatch("flat exponent vector does not match layout");
    MultiIndex q;
    auto take = [&](int off, int n) {
        return std::vector<long>(flat.begin() + off, flat.begin() + off + n);
    };
    q.m = take(L.x_off(), L.nx());
    q.n = take(L.y_off(), L.ny());
    q.p = take(L.z_off(), L.nz());
    q.mt = take(L.xt_off(), L.nxt());
    q.nt = take(L.yt_off(), L.nyt());
    q.pt = take(L.zt_off(), L.nzt());
    return q;
}

std::vector<long> MultiIndex::to_flat() const {
    std::vector<long> flat;
    flat.reserve(m.size() + n.size() + p.size() + mt.size() + nt.size() + pt.size());
    for (const auto* g : {&m, &n, &p, &mt, &nt, &pt})
        flat.insert(flat.end(), g->begin(), g->end());
    return flat;
}

bool MultiIndex::nonnegative() const {
    for (const auto* g : {&m, &n, &p, &mt, &nt, &pt})
        for (long e : *g)
            if (e < 0) return false;
    return true;
}

} // namespace jaceig
