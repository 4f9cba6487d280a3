#include "treelab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace treelab {

BfsQueueProcess BfsQueueProcess::replay(const std::vector<int>& child_counts) {
    BfsQueueProcess p;
    p.steps.reserve(child_counts.size() + 1);
    long long s = 0;
    p.steps.push_back(s);
    for (std::size_t i = 0; i < child_counts.size(); ++i) {
        s += child_counts[i] - 1;
        p.steps.push_back(s);
        if (s == -1) {
            p.sigma = static_cast<long long>(i) + 1;
            break;
        }
    }
    return p;
}

LabeledTree sample_uniform_tree(int n, Rng& rng) {
    if (n < 2) throw ValidationError("sample_uniform_tree needs n >= 2");
    std::vector<int> seq(std::size_t(std::max(0, n - 2)));
    for (auto& x : seq) x = int(rng.uniform_int(1, n));
    return prufer_decode(seq);
}

std::optional<RootedPlaneTree> sample_bienayme(double lambda, Rng& rng, long long node_cap) {
    if (!(lambda > 0)) throw ValidationError("lambda must be positive");
    if (node_cap < 1) throw ValidationError("node_cap must be >= 1");
    std::vector<int> counts;
    long long queue = 1; // unexplored nodes
    long long produced = 1;
    while (queue > 0) {
        const int c = rng.poisson(lambda);
        counts.push_back(c);
        produced += c;
        queue += c - 1;
        if (produced > node_cap) return std::nullopt;
    }
    return RootedPlaneTree::from_bfs_child_counts(counts);
}

std::vector<int> conditioned_child_counts(int n, Rng& rng) {
    if (n < 1) throw ValidationError("n must be >= 1");
    // Poisson(1) conditioned on sum n-1 == n-1 balls dropped uniformly in n boxes
    std::vector<int> counts(std::size_t(n), 0);
    for (int b = 0; b < n - 1; ++b) ++counts[std::size_t(rng.uniform_int(0, n - 1))];
    return counts;
}

int feasible_rotation(const std::vector<int>& child_counts) {
    const int n = int(child_counts.size());
    long long sum = 0;
    for (int c : child_counts) sum += c;
    if (sum != n - 1) throw ValidationError("child counts must sum to n-1");
    // first attainment of the running minimum of S_m = sum_{i<m} (X_i - 1);
    // the rotation starting right after it is the unique feasible one
    long long s = 0, min_s = 0;
    int argmin = 0; // number of leading entries consumed at the first minimum
    for (int i = 0; i < n; ++i) {
        s += child_counts[std::size_t(i)] - 1;
        if (s < min_s) {
            min_s = s;
            argmin = i + 1;
        }
    }
    return argmin % n;
}

RootedPlaneTree sample_conditioned_bienayme(int n, Rng& rng) {
    auto counts = conditioned_child_counts(n, rng);
    const int r = feasible_rotation(counts);
    std::rotate(counts.begin(), counts.begin() + r, counts.end());
    return RootedPlaneTree::from_bfs_child_counts(counts);
}

Estimate size_probability_estimate(int n, long long reps, Rng& rng) {
    if (n < 1 || reps < 1) throw ValidationError("need n >= 1 and reps >= 1");
    long long hits = 0;
    for (long long r = 0; r < reps; ++r) {
        long long s = 0;
        int steps = 0;
        while (steps < n) {
            s += rng.poisson(1.0) - 1;
            ++steps;
            if (s == -1) break;
        }
        if (s == -1 && steps == n) ++hits;
    }
    Estimate e;
    e.value = double(hits) / double(reps);
    e.std_error = std::sqrt(e.value * (1.0 - e.value) / double(reps));
    return e;
}

int a_star(long long n) {
    if (n < 1) throw ValidationError("a_star needs n >= 1");
    int m = 1;
    long long fact = 1;
    while (fact * (m + 1) <= n) {
        ++m;
        fact *= m;
    }
    return m;
}

namespace {

DegreeStats stats_from_child_counts(const std::vector<int>& children, int max_degree, long long n) {
    DegreeStats s;
    s.max_degree = max_degree;
    s.a_star = a_star(n);
    int max_children = 0;
    for (int c : children) max_children = std::max(max_children, c);
    s.d_ge.assign(std::size_t(max_children) + 2, 0);
    for (int c : children) ++s.d_ge[std::size_t(c)];
    // suffix-sum so d_ge[k] counts vertices with >= k children
    for (int k = max_children - 1; k >= 0; --k) s.d_ge[std::size_t(k)] += s.d_ge[std::size_t(k) + 1];
    s.d_ge.resize(std::size_t(max_children) + 1);
    return s;
}

} // namespace

DegreeStats degree_stats(const LabeledTree& tree, int root) {
    if (root < 1 || root > tree.n()) throw ValidationError("root out of range");
    std::vector<int> children;
    children.reserve(std::size_t(tree.n()));
    for (int v = 1; v <= tree.n(); ++v)
        children.push_back(v == root ? tree.degree(v) : tree.degree(v) - 1);
    return stats_from_child_counts(children, tree.max_degree(), tree.n());
}

DegreeStats degree_stats(const RootedPlaneTree& tree) {
    std::vector<int> children;
    children.reserve(std::size_t(tree.size()));
    int maxdeg = 0;
    for (int i = 0; i < tree.size(); ++i) {
        const auto& nd = tree.node(i);
        children.push_back(int(nd.children.size()));
        const int deg = int(nd.children.size()) + (nd.parent >= 0 ? 1 : 0);
        maxdeg = std::max(maxdeg, deg);
    }
    return stats_from_child_counts(children, maxdeg, tree.size());
}

MedianMaxDegree empirical_median_max_degree(int n, int reps, const SeededRng& seeds) {
    if (reps < 30) throw ValidationError("need reps >= 30 for a stable median");
    std::vector<int> deltas(std::size_t(reps));
    for (int r = 0; r < reps; ++r) {
        Rng rng = seeds.substream(std::uint64_t(r));
        deltas[std::size_t(r)] = sample_uniform_tree(n, rng).max_degree();
    }
    std::sort(deltas.begin(), deltas.end());
    MedianMaxDegree m;
    m.lower = deltas[std::size_t((reps - 1) / 2)];
    m.upper = deltas[std::size_t(reps / 2)];
    return m;
}

} // namespace treelab
