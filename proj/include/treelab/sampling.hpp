#pragma once

#include <optional>
#include <vector>

#include "treelab/rng.hpp"
#include "treelab/tree.hpp"

namespace treelab {

/// Queue-length bookkeeping for the breadth-first construction:
/// S_0 = 0, S_k = sum_{i<k} (X_i - 1), absorbed when S hits -1.
struct BfsQueueProcess {
    std::vector<long long> steps; // S_0 .. S_sigma (or the full replay)
    long long sigma = -1;         // absorption time, -1 if never absorbed

    static BfsQueueProcess replay(const std::vector<int>& child_counts);
};

/// Uniform tree on [n] via iid-uniform Pruefer entries; n >= 2.
LabeledTree sample_uniform_tree(int n, Rng& rng);

/// Poisson(lambda) branching-process family tree, built breadth-first.
/// Returns nullopt when the node count would exceed node_cap.
std::optional<RootedPlaneTree> sample_bienayme(double lambda, Rng& rng,
                                               long long node_cap = 10'000'000);

/// Child counts (X_1..X_n) iid Poisson(1) conditioned on sum n-1 (realized as
/// a multinomial placement), before rotation. Exposed for tests.
std::vector<int> conditioned_child_counts(int n, Rng& rng);

/// Index r such that the rotation (X_r, X_{r+1}, ...) of the cyclic sequence
/// keeps the queue process alive until absorbing exactly at step n. Exactly
/// one rotation works for any sequence summing to n-1.
int feasible_rotation(const std::vector<int>& child_counts);

/// Exact Poisson(1) Bienayme tree conditioned to have n vertices, via
/// multinomial child counts plus the cycle-lemma rotation. O(n).
RootedPlaneTree sample_conditioned_bienayme(int n, Rng& rng);

struct Estimate {
    double value = 0;
    double std_error = 0;
};

/// Monte Carlo estimate of P(|T| = n) for the unconditioned Poisson(1) tree.
Estimate size_probability_estimate(int n, long long reps, Rng& rng);

/// D_{>=k} counts of children per vertex, max degree, and a*(n).
struct DegreeStats {
    std::vector<long long> d_ge; // d_ge[k] = #vertices with >= k children (k <= max)
    int max_degree = 0;
    int a_star = 0;

    long long ge(int k) const {
        return k < int(d_ge.size()) ? d_ge[std::size_t(k)] : 0;
    }
};

/// Largest m with m! <= n.
int a_star(long long n);

/// Stats for a labeled tree rooted at `root` (children = neighbours away from
/// the root). Uniform labeled trees rooted at 1 carry the uniformly-rooted law.
DegreeStats degree_stats(const LabeledTree& tree, int root = 1);
DegreeStats degree_stats(const RootedPlaneTree& tree);

/// Sample median of the max degree over reps uniform trees; reports the lower
/// and upper medians (they can differ for even reps).
struct MedianMaxDegree {
    int lower = 0;
    int upper = 0;
};
MedianMaxDegree empirical_median_max_degree(int n, int reps, const SeededRng& seeds);

} // namespace treelab
