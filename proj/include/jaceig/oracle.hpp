#ifndef JACEIG_ORACLE_HPP
#define JACEIG_ORACLE_HPP

#include <string>
#include <vector>

#include "jaceig/core_model.hpp"
#include "jaceig/layout.hpp"
#include "jaceig/series.hpp"

namespace jaceig {

// Result of iterating the branch system as formal series: u[i-1] holds the
// series for u_i, likewise ut.  Every constant term is 1.
struct IterationState {
    std::vector<TruncatedSeries> u, ut;
    long degree_converged = 0;
};

// Fixed-point iteration of the quadratic branch system in the symbolic
// expansion variables, exact to total degree N.  Sweeps run ascending over
// the right arm then the left arm, in place; the sweep count is bounded by
// N+2 since every sweep is exact to at least one more degree.
IterationState iterate_system(int r, int rt, long N);

struct DenseEigenpair {
    double value = 0;
    std::vector<double> vec;  // normalized to unit infinity norm
    double residual = 0;      // ||M v - value v||_inf
};

// All d eigenpairs of the tridiagonal matrix in double precision, sorted by
// eigenvalue.  Roots of the characteristic polynomial (evaluated through the
// three-term minor recurrence) are found by the Aberth simultaneous
// iteration, then each eigenvector by inverse iteration with a partially
// pivoted tridiagonal solve.  Every returned pair is certified to
// ||M v - lambda v||_inf <= 1e-12 * ||M||_inf; ConvergenceFailure otherwise,
// and also when the spectrum is not real.
std::vector<DenseEigenpair> dense_eigensolve(const JacobiMatrix& M);

// One exact coefficient disagreement between the two series routes.
struct CoefficientDiff {
    std::string component;       // "u1", "ut2", ...
    std::vector<long> exponents;
    Rat iterated, expanded;
};

struct CrossValidationReport {
    std::vector<CoefficientDiff> diffs;  // empty when the routes agree
    Rat lambda_series;                   // shift + evaluated series eigenvalue
    double lambda_dense = 0;
    double lambda_gap = 0;               // |series - dense|
    double residual = 0;                 // series eigenpair residual
    bool coefficients_match() const { return diffs.empty(); }
};

// Compare the closed-form expansion path against the iteration oracle
// coefficient-for-coefficient, then the evaluated eigenvalue against the
// dense solver.  Branch matching is nearest-alpha; BranchAmbiguity when two
// dense eigenvalues tie.
CrossValidationReport cross_validate(const JacobiMatrix& M, int k, long N);

} // namespace jaceig

#endif
