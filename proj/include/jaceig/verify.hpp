#ifndef JACEIG_VERIFY_HPP
#define JACEIG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jaceig/core_model.hpp"
#include "jaceig/rational.hpp"

namespace jaceig {

struct SuiteResult {
    std::string name;
    bool passed = false;
    long cases = 0;
    std::string first_failure;  // empty when passed; smallest (d, degree) case
};

struct VerifyConfig {
    int max_d = 5;
    long degree = 3;          // series truncation for the exact suites
    int points = 25;          // random points per (d, k) case
    std::uint64_t seed = 12345;
    std::string inject_fault; // "coeff_h" perturbs one compared coefficient (test hook)
};

// Suite names: oracle-equality, jacobian, lagrange, tilde-symmetry,
// residual-order.  An empty filter runs all of them.  Cases run in
// ascending (d, k) order so the first failure is minimal.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& which,
                                    const VerifyConfig& cfg);

const std::vector<std::string>& suite_names();

// One measurement of the end-to-end truncation-error scaling: the matrix has
// alpha_j = j and off-diagonals epsilon * (deterministic +-1); residual and
// the gap to the dense eigenvalue are evaluated exactly and as double.
struct ResidualSweepRow {
    long N = 0;
    Rat epsilon;
    double residual = 0;
    double dense_gap = 0;
};

std::vector<ResidualSweepRow> residual_order_sweep(int d, int k,
                                                   const std::vector<Rat>& epsilons,
                                                   const std::vector<long>& degrees,
                                                   std::uint64_t seed);

// Least-squares slope of log10(res) against log10(eps).
double fitted_slope(const std::vector<double>& eps, const std::vector<double>& res);

} // namespace jaceig

#endif
