#ifndef JACEIG_CORE_MODEL_HPP
#define JACEIG_CORE_MODEL_HPP

#include <vector>

#include "jaceig/layout.hpp"
#include "jaceig/rational.hpp"
#include "jaceig/series.hpp"

namespace jaceig {

// Tridiagonal matrix of order d: diagonal alpha[0..d-1], superdiagonal
// beta[0..d-2], subdiagonal gamma[0..d-2] (0-based storage of the 1-based
// entries alpha_1..alpha_d etc.).
struct JacobiMatrix {
    int d = 0;
    std::vector<Rat> alpha, beta, gamma;

    JacobiMatrix() = default;
    JacobiMatrix(std::vector<Rat> alpha_, std::vector<Rat> beta_, std::vector<Rat> gamma_);

    // d >= 2, array lengths consistent, alpha entries pairwise distinct.
    void validate() const;

    // 180-degree rotation about the center: reverses both diagonals and
    // swaps the super- and subdiagonal.
    JacobiMatrix rotated() const;

    // Infinity norm (max absolute row sum), as a double.
    double inf_norm() const;

    std::vector<double> alpha_d() const;
    std::vector<double> beta_d() const;
    std::vector<double> gamma_d() const;
};

// The branch-k problem recentred at alpha_k: right arm a/b/c of length r,
// left arm at/bt/ct of length rt, diagonal shifted so a[0] = at[0] = 0.
struct BranchConfig {
    int k = 1;   // 1-based branch index
    int r = 0;   // d - k
    int rt = 0;  // k - 1
    std::vector<Rat> a, b, c;     // a[0..r], b[0..r-1], c[0..r-1]
    std::vector<Rat> at, bt, ct;  // at[0..rt], bt[0..rt-1], ct[0..rt-1]
    Rat shift;                    // original alpha_k

    VarLayout layout() const { return VarLayout(r, rt); }
};

// Values of the expansion variables for one branch, grouped as the layout.
struct ExpansionPoint {
    std::vector<Rat> x, y, z, xt, yt, zt;

    std::vector<Rat> flatten() const;
    std::vector<double> flatten_double() const;
};

// One computed eigenpair.  v[0] = vt[0] = 1 always; residual is the
// infinity norm of M V - Lambda V at the evaluated point.
struct EigenResult {
    TruncatedSeries lambda_series{0, 0};
    Rat eigenvalue;
    std::vector<Rat> v, vt;
    double residual = 0.0;

    // Assembled global eigenvector V[0..d-1] with component k-1 equal to 1.
    std::vector<Rat> full_vector(const BranchConfig& cfg) const;
};

// Recentre the eigenproblem at branch k (1-based).
BranchConfig relabel(const JacobiMatrix& M, int k);

// The bilinear small parameters x, y, z (and mirrored) of the branch.
ExpansionPoint expansion_variables(const BranchConfig& cfg);

// Rescale the u-series into eigenvector components, evaluate at the
// branch point and form lambda from the central row.
EigenResult assemble_eigenpair(const BranchConfig& cfg,
                               const std::vector<TruncatedSeries>& u_series,
                               const std::vector<TruncatedSeries>& ut_series,
                               const ExpansionPoint& point, long N);

// Exact residual vector M V - Lambda V.
std::vector<Rat> residual_vector(const JacobiMatrix& M, const Rat& lambda,
                                 const std::vector<Rat>& V);
double residual_inf_norm(const JacobiMatrix& M, const Rat& lambda,
                         const std::vector<Rat>& V);

// Full pipeline for one branch: recentre, expand every u component as an
// explicit series, assemble.  Declared here, defined with the series
// machinery in solver.cpp.
EigenResult solve_branch(const JacobiMatrix& M, int k, long N);

// All branches, processed independently (in parallel when asked).
std::vector<EigenResult> solve_all(const JacobiMatrix& M, long N, bool parallel = true);

} // namespace jaceig

#endif
