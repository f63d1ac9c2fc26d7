#ifndef JACEIG_HYPERGEOMETRIC_HPP
#define JACEIG_HYPERGEOMETRIC_HPP

#include <utility>
#include <vector>

#include "jaceig/combinatorics.hpp"
#include "jaceig/layout.hpp"
#include "jaceig/series.hpp"

namespace jaceig {

// Integer parameter vectors of the universal Horn-type series: mu for the
// right arm (length r) and mut for the left arm (length rt, possibly empty).
struct PhiParams {
    std::vector<long> mu, mut;
};

// Exponents of a Laurent monomial in the rescaled eigenvector components:
// u_1^{k[0]} ... u_r^{k[r-1]} ut_1^{kt[0]} ... ut_rt^{kt[rt-1]}.
struct MonomialSpec {
    std::vector<long> k, kt;

    static MonomialSpec zero(const VarLayout& L) {
        return {std::vector<long>(L.r(), 0), std::vector<long>(L.rt(), 0)};
    }
    static MonomialSpec unit_u(int i, const VarLayout& L) {
        MonomialSpec s = zero(L);
        s.k.at(i - 1) = 1;
        return s;
    }
    static MonomialSpec unit_ut(int i, const VarLayout& L) {
        MonomialSpec s = zero(L);
        s.kt.at(i - 1) = 1;
        return s;
    }
};

// Single coefficient of the Phi series at multi-index q >= 0:
// (-1)^{|m|+|n|+|mt|+|nt|} times a product of one quadrinomial per arm slot,
// with the boundary conventions p[-1] = |m|+|nt|, pt[-1] = |mt|+|n| and
// p[r-1] = pt[rt-1] = 0.
Int phi_coefficient(const MultiIndex& q, const PhiParams& params);

// Phi truncated at total degree N over the layout's variables.
TruncatedSeries phi_series(const PhiParams& params, const VarLayout& L, long N);

// One-arm specialization of the Phi coefficient (no y-type variables):
// (-1)^{|m|} prod_j trinom(mu_j + m_j + p_{j-1} + p_j - 1; m_j, p_j) with
// p[-1] = |m|, p[r-1] = 0.
Int corner_phi_coefficient(const std::vector<long>& m, const std::vector<long>& p,
                           const std::vector<long>& mu);

// Exact coefficient of xi^q in the expansion of the slow-variable monomial
// eta^{qprime}; qprime may have negative entries.  Zero unless
// q >= qprime componentwise.
Int eta_coefficient(const MultiIndex& qprime, const MultiIndex& q, const VarLayout& L);

// Full expansion of eta^{qprime} as a (Laurent) series truncated at N.
TruncatedSeries expand_eta_monomial(const MultiIndex& qprime, const VarLayout& L, long N);

// Expansion of u^k ut^kt as a finite signed sum of prefixed Phi series,
// truncated at total degree N.  Negative exponents are allowed.
TruncatedSeries expand_u_monomial(const MonomialSpec& spec, const VarLayout& L, long N);

// One-arm expansion path built on corner_phi_coefficient only; `karm` holds
// the exponents along the single arm of length r.  The flat variable order
// is x0..x_{r-1} z0..z_{r-2}, which coincides with the corner layouts.
TruncatedSeries expand_u_monomial_corner(const std::vector<long>& karm, int r, long N);

// Parameter plumbing, exposed for direct testing.
// Suffix sums of the u-exponents: pi_j = k_{j+1} + ... + k_r.
std::vector<long> monomial_pi(const std::vector<long>& k);
// pi_j = p'_{j-1} + p'_j with p'_{-1} = |m'| + |nt'| for a general monomial.
std::pair<std::vector<long>, std::vector<long>> theorem_pi(const MultiIndex& qprime);
// The slow-variable exponents q' with u^k ut^kt = xi^{-(m',p',...)} eta^{q'}.
MultiIndex u_monomial_eta_exponents(const MonomialSpec& spec, const VarLayout& L);
// Number of prefixed Phi series in the expansion: (r+1)(rt+1) + r*rt.
long expansion_term_count(const VarLayout& L);

} // namespace jaceig

#endif
