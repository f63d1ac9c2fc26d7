#include <future>

#include "jaceig/core_model.hpp"
#include "jaceig/hypergeometric.hpp"

namespace jaceig {

EigenResult solve_branch(const JacobiMatrix& M, int k, long N) {
    const BranchConfig cfg = relabel(M, k);
    const VarLayout L = cfg.layout();

    std::vector<TruncatedSeries> u, ut;
    u.reserve(cfg.r);
    ut.reserve(cfg.rt);
    for (int i = 1; i <= cfg.r; ++i)
        u.push_back(expand_u_monomial(MonomialSpec::unit_u(i, L), L, N));
    for (int i = 1; i <= cfg.rt; ++i)
        ut.push_back(expand_u_monomial(MonomialSpec::unit_ut(i, L), L, N));

    EigenResult out = assemble_eigenpair(cfg, u, ut, expansion_variables(cfg), N);
    out.residual = residual_inf_norm(M, out.eigenvalue, out.full_vector(cfg));
    return out;
}

std::vector<EigenResult> solve_all(const JacobiMatrix& M, long N, bool parallel) {
    std::vector<EigenResult> out(M.d);
    if (parallel && M.d > 1) {
        std::vector<std::future<EigenResult>> jobs;
        jobs.reserve(M.d);
        for (int k = 1; k <= M.d; ++k)
            jobs.push_back(std::async(std::launch::async,
                                      [&M, k, N] { return solve_branch(M, k, N); }));
        for (int k = 1; k <= M.d; ++k) out[k - 1] = jobs[k - 1].get();
    } else {
        for (int k = 1; k <= M.d; ++k) out[k - 1] = solve_branch(M, k, N);
    }
    return out;
}

} // namespace jaceig
