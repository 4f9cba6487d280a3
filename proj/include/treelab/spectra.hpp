#pragma once

#include <utility>
#include <vector>

#include "treelab/tree.hpp"

namespace treelab {

/// Top-k adjacency eigenvalues with certified per-value error bounds.
struct SpectralResult {
    std::vector<double> eigenvalues;   // descending
    std::vector<double> error_bounds;  // |reported - true| <= bound, certified
    int lanczos_steps = 0;
    int inertia_evaluations = 0;
};

/// Number of adjacency eigenvalues strictly below x, by the O(n) congruence
/// diagonalization of A - xI along the tree (Sylvester inertia). Exact-zero
/// pivots are handled by the standard pair trick, so the count stays an exact
/// inertia count.
int eigenvalue_count_below(const LabeledTree& tree, double x);

/// Tie-aware variant: inertia counts at x - nudge and x + nudge
/// (nudge = 1e-12), bracketing multiplicities at x.
std::pair<int, int> eigenvalue_count_below_both(const LabeledTree& tree, double x);

/// Certified top-k eigenvalues: Lanczos supplies estimates, bisection on the
/// inertia count pins each value to within tol. Throws CertificationError if
/// the bisection budget is exhausted (it is sized generously).
SpectralResult top_eigenvalues(const LabeledTree& tree, int k, double tol);

/// k-th largest eigenvalue only (1-based), certified to tol.
double kth_eigenvalue(const LabeledTree& tree, int k, double tol);

/// Full spectrum by Householder tridiagonalization + implicit QL; test oracle,
/// guarded at n <= 512. Descending.
std::vector<double> dense_spectrum(const LabeledTree& tree);

/// The localized vector witnessing lambda_1 >= sqrt(deg(v)).
struct WitnessVector {
    int center;
    std::vector<std::pair<int, double>> entries; // (vertex, value), sparse
    double rayleigh_quotient;
};
WitnessVector sqrt_delta_witness(const LabeledTree& tree, int v);

/// lambda_k(T) >= sqrt(d_{2k} - 1) where d_{2k} is the 2k-th largest degree;
/// optionally materializes the k orthogonal witness vectors.
struct LambdaKBound {
    double bound;                        // sqrt(d_{2k} - 1)
    int d2k;                             // the 2k-th largest degree
    std::vector<WitnessVector> witnesses; // empty unless requested
};
LambdaKBound lambda_k_lower_bound(const LabeledTree& tree, int k, int root,
                                  bool with_witnesses = false);

} // namespace treelab
