#include "treelab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "treelab/errors.hpp"
#include "treelab/rng.hpp"

namespace treelab {

std::vector<double> tql_eigenvalues(std::vector<double> d, std::vector<double> e);

namespace {

// Post-order traversal rooted at 1, reused across inertia evaluations.
struct TreeOrder {
    std::vector<int> order;  // post-order: children before parents
    std::vector<int> parent; // parent[v], 0 at the root

    explicit TreeOrder(const LabeledTree& tree) {
        const int n = tree.n();
        parent.assign(std::size_t(n) + 1, 0);
        order.reserve(std::size_t(n));
        std::vector<int> stack{1};
        std::vector<char> seen(std::size_t(n) + 1, 0);
        seen[1] = 1;
        std::vector<int> pre;
        pre.reserve(std::size_t(n));
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            pre.push_back(u);
            for (int w : tree.neighbors(u))
                if (!seen[std::size_t(w)]) {
                    seen[std::size_t(w)] = 1;
                    parent[std::size_t(w)] = u;
                    stack.push_back(w);
                }
        }
        order.assign(pre.rbegin(), pre.rend());
    }
};

struct Inertia {
    int below = 0, zero = 0, above = 0;
};

Inertia tree_inertia(const LabeledTree& tree, const TreeOrder& to, double x) {
    const int n = tree.n();
    std::vector<double> d(std::size_t(n) + 1, 0.0);
    std::vector<char> cut(std::size_t(n) + 1, 0); // edge to parent removed by the zero-pivot trick
    Inertia res;
    for (int v : to.order) {
        double dv = -x;
        int zero_child = 0;
        for (int w : tree.neighbors(v)) {
            if (w == to.parent[std::size_t(v)]) continue;
            if (cut[std::size_t(w)]) continue;
            if (d[std::size_t(w)] == 0.0) {
                zero_child = w;
                break;
            }
            dv -= 1.0 / d[std::size_t(w)];
        }
        if (zero_child != 0) {
            // a 2x2 block with an exact zero pivot contributes one positive
            // and one negative eigenvalue; detach v from its parent
            d[std::size_t(zero_child)] = 2.0;
            d[std::size_t(v)] = -0.5;
            cut[std::size_t(v)] = 1;
        } else {
            d[std::size_t(v)] = dv;
        }
    }
    for (int v = 1; v <= n; ++v) {
        if (d[std::size_t(v)] < 0)
            ++res.below;
        else if (d[std::size_t(v)] > 0)
            ++res.above;
        else
            ++res.zero;
    }
    return res;
}

// Lanczos with full reorthogonalization; returns Ritz values (descending).
std::vector<double> lanczos_ritz(const LabeledTree& tree, int steps, int* performed) {
    const int n = tree.n();
    steps = std::min(steps, n);
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;
    std::vector<double> v(std::size_t(n) + 1), w(std::size_t(n) + 1);
    Rng rng(0x5eedf00dULL);
    double norm = 0;
    for (int i = 1; i <= n; ++i) {
        v[std::size_t(i)] = rng.uniform01() - 0.5;
        norm += v[std::size_t(i)] * v[std::size_t(i)];
    }
    norm = std::sqrt(norm);
    for (int i = 1; i <= n; ++i) v[std::size_t(i)] /= norm;

    for (int it = 0; it < steps; ++it) {
        basis.push_back(v);
        // w = A v
        std::fill(w.begin(), w.end(), 0.0);
        for (int u = 1; u <= n; ++u)
            for (int t : tree.neighbors(u)) w[std::size_t(u)] += v[std::size_t(t)];
        double a = 0;
        for (int i = 1; i <= n; ++i) a += w[std::size_t(i)] * v[std::size_t(i)];
        alpha.push_back(a);
        // full reorthogonalization
        for (const auto& b : basis) {
            double proj = 0;
            for (int i = 1; i <= n; ++i) proj += w[std::size_t(i)] * b[std::size_t(i)];
            for (int i = 1; i <= n; ++i) w[std::size_t(i)] -= proj * b[std::size_t(i)];
        }
        double bnorm = 0;
        for (int i = 1; i <= n; ++i) bnorm += w[std::size_t(i)] * w[std::size_t(i)];
        bnorm = std::sqrt(bnorm);
        if (bnorm < 1e-13) break;
        beta.push_back(bnorm);
        for (int i = 1; i <= n; ++i) v[std::size_t(i)] = w[std::size_t(i)] / bnorm;
    }
    if (performed) *performed = int(alpha.size());
    // eigenvalues of the tridiagonal via the same QL routine as the dense path
    std::vector<double> d = alpha;
    std::vector<double> e(alpha.size(), 0.0);
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i) e[i + 1] = beta[i];
    auto vals = tql_eigenvalues(std::move(d), std::move(e));
    std::sort(vals.rbegin(), vals.rend());
    return vals;
}

} // namespace

// Implicit-shift QL on a symmetric tridiagonal (diagonal d, subdiagonal e with
// e[0] unused). Classic EISPACK tql1 structure.
std::vector<double> tql_eigenvalues(std::vector<double> d, std::vector<double> e) {
    const int n = int(d.size());
    if (n == 0) return {};
    for (int i = 1; i < n; ++i) e[std::size_t(i - 1)] = e[std::size_t(i)];
    e[std::size_t(n - 1)] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[std::size_t(m)]) + std::abs(d[std::size_t(m + 1)]);
                if (std::abs(e[std::size_t(m)]) <=
                    std::numeric_limits<double>::epsilon() * dd + std::numeric_limits<double>::min())
                    break;
            }
            if (m != l) {
                if (++iter > 80) throw CertificationError("QL iteration did not converge");
                double g = (d[std::size_t(l + 1)] - d[std::size_t(l)]) / (2.0 * e[std::size_t(l)]);
                double r = std::hypot(g, 1.0);
                g = d[std::size_t(m)] - d[std::size_t(l)] +
                    e[std::size_t(l)] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[std::size_t(i)];
                    double b = c * e[std::size_t(i)];
                    r = std::hypot(f, g);
                    e[std::size_t(i + 1)] = r;
                    if (r == 0.0) {
                        d[std::size_t(i + 1)] -= p;
                        e[std::size_t(m)] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[std::size_t(i + 1)] - p;
                    r = (d[std::size_t(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[std::size_t(i + 1)] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[std::size_t(l)] -= p;
                e[std::size_t(l)] = g;
                e[std::size_t(m)] = 0.0;
            }
        } while (m != l);
    }
    return d;
}

int eigenvalue_count_below(const LabeledTree& tree, double x) {
    TreeOrder to(tree);
    return tree_inertia(tree, to, x).below;
}

std::pair<int, int> eigenvalue_count_below_both(const LabeledTree& tree, double x) {
    const double nudge = 1e-12;
    TreeOrder to(tree);
    return {tree_inertia(tree, to, x - nudge).below, tree_inertia(tree, to, x + nudge).below};
}

namespace {

// certified bisection for the i-th largest eigenvalue (1-based): the unique x*
// with count_below(x) >= n-i+1 iff x > x*
double bisect_eigenvalue(const LabeledTree& tree, const TreeOrder& to, int i, double lo, double hi,
                         double tol, int* evals, double* err_out) {
    const int n = tree.n();
    const int want = n - i + 1; // count_below(hi) must reach this
    auto count = [&](double x) {
        ++*evals;
        return tree_inertia(tree, to, x).below;
    };
    // validate / expand the bracket
    double span = hi - lo;
    int guard = 0;
    while (count(hi) < want) {
        hi += std::max(span, 1.0);
        if (++guard > 64) throw CertificationError("bisection bracket expansion failed (upper)");
    }
    guard = 0;
    while (count(lo) >= want) {
        lo -= std::max(span, 1.0);
        if (++guard > 64) throw CertificationError("bisection bracket expansion failed (lower)");
    }
    int iter = 0;
    while (hi - lo > tol) {
        if (++iter > 400) throw CertificationError("bisection budget exhausted");
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // double precision floor
        if (count(mid) >= want)
            hi = mid;
        else
            lo = mid;
    }
    if (err_out) *err_out = 0.5 * (hi - lo);
    return 0.5 * (lo + hi);
}

} // namespace

SpectralResult top_eigenvalues(const LabeledTree& tree, int k, double tol) {
    const int n = tree.n();
    if (k < 1 || k > n) throw ValidationError("top_eigenvalues needs 1 <= k <= n");
    if (!(tol > 0)) throw ValidationError("tolerance must be positive");
    SpectralResult res;
    if (n == 1) {
        res.eigenvalues.assign(1, 0.0);
        res.error_bounds.assign(1, 0.0);
        return res;
    }
    TreeOrder to(tree);
    const double radius = 2.0 * std::sqrt(double(std::max(1, tree.max_degree() - 1))) + 1.0;
    int steps = std::min(n, std::max(2 * k + 20, 40));
    auto ritz = lanczos_ritz(tree, steps, &res.lanczos_steps);

    for (int i = 1; i <= k; ++i) {
        double lo = -radius, hi = radius;
        if (i <= int(ritz.size())) {
            // Ritz values approximate extreme eigenvalues well; seed a snug
            // bracket and let the expansion loop fix it if it is wrong
            lo = ritz[std::size_t(i - 1)] - 0.1;
            hi = ritz[std::size_t(i - 1)] + 0.1;
        }
        double err = 0;
        double val = bisect_eigenvalue(tree, to, i, lo, hi, tol, &res.inertia_evaluations, &err);
        res.eigenvalues.push_back(val);
        res.error_bounds.push_back(err);
    }
    return res;
}

double kth_eigenvalue(const LabeledTree& tree, int k, double tol) {
    const int n = tree.n();
    if (k < 1 || k > n) throw ValidationError("kth_eigenvalue needs 1 <= k <= n");
    if (n == 1) return 0.0;
    TreeOrder to(tree);
    const double radius = 2.0 * std::sqrt(double(std::max(1, tree.max_degree() - 1))) + 1.0;
    int evals = 0;
    return bisect_eigenvalue(tree, to, k, -radius, radius, tol, &evals, nullptr);
}

std::vector<double> dense_spectrum(const LabeledTree& tree) {
    const int n = tree.n();
    if (n > 512) throw ValidationError("dense_spectrum is an oracle for n <= 512");
    if (n == 1) return {0.0};
    // dense symmetric matrix, 0-based
    std::vector<std::vector<double>> a(std::size_t(n), std::vector<double>(std::size_t(n), 0.0));
    for (auto [u, v] : tree.edges()) {
        a[std::size_t(u - 1)][std::size_t(v - 1)] = 1.0;
        a[std::size_t(v - 1)][std::size_t(u - 1)] = 1.0;
    }
    // Householder reduction to tridiagonal (EISPACK tred1 structure)
    std::vector<double> d(std::size_t(n)), e(std::size_t(n), 0.0);
    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a[std::size_t(i)][std::size_t(k)]);
            if (scale == 0.0) {
                e[std::size_t(i)] = a[std::size_t(i)][std::size_t(l)];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[std::size_t(i)][std::size_t(k)] /= scale;
                    h += a[std::size_t(i)][std::size_t(k)] * a[std::size_t(i)][std::size_t(k)];
                }
                double f = a[std::size_t(i)][std::size_t(l)];
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[std::size_t(i)] = scale * g;
                h -= f * g;
                a[std::size_t(i)][std::size_t(l)] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k)
                        g += a[std::size_t(j)][std::size_t(k)] * a[std::size_t(i)][std::size_t(k)];
                    for (int k = j + 1; k <= l; ++k)
                        g += a[std::size_t(k)][std::size_t(j)] * a[std::size_t(i)][std::size_t(k)];
                    e[std::size_t(j)] = g / h;
                    f += e[std::size_t(j)] * a[std::size_t(i)][std::size_t(j)];
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[std::size_t(i)][std::size_t(j)];
                    e[std::size_t(j)] = g = e[std::size_t(j)] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        a[std::size_t(j)][std::size_t(k)] -=
                            f * e[std::size_t(k)] + g * a[std::size_t(i)][std::size_t(k)];
                }
            }
        } else {
            e[std::size_t(i)] = a[std::size_t(i)][std::size_t(l)];
        }
        d[std::size_t(i)] = h;
    }
    for (int i = 0; i < n; ++i) d[std::size_t(i)] = a[std::size_t(i)][std::size_t(i)];
    auto vals = tql_eigenvalues(d, e);
    std::sort(vals.rbegin(), vals.rend());
    return vals;
}

WitnessVector sqrt_delta_witness(const LabeledTree& tree, int v) {
    if (v < 1 || v > tree.n()) throw ValidationError("vertex out of range");
    WitnessVector w;
    w.center = v;
    const double deg = double(tree.degree(v));
    w.entries.emplace_back(v, std::sqrt(deg));
    for (int u : tree.neighbors(v)) w.entries.emplace_back(u, 1.0);
    // <x,Ax> = 2 deg sqrt(deg) plus neighbour-neighbour terms (none in a tree)
    const double num = 2.0 * deg * std::sqrt(deg);
    const double den = deg + deg; // |x|^2 = deg + deg*1
    w.rayleigh_quotient = (den > 0) ? num / den : 0.0;
    return w;
}

LambdaKBound lambda_k_lower_bound(const LabeledTree& tree, int k, int root, bool with_witnesses) {
    const int n = tree.n();
    if (k < 1 || 2 * k > n) throw ValidationError("lambda_k_lower_bound needs k <= n/2");
    if (root < 1 || root > n) throw ValidationError("root out of range");
    std::vector<int> by_degree(std::size_t(n));
    std::iota(by_degree.begin(), by_degree.end(), 1);
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        if (tree.degree(a) != tree.degree(b)) return tree.degree(a) > tree.degree(b);
        return a < b;
    });
    LambdaKBound out;
    out.d2k = tree.degree(by_degree[std::size_t(2 * k - 1)]);
    out.bound = std::sqrt(double(std::max(0, out.d2k - 1)));
    if (!with_witnesses) return out;

    // bipartition by parity of distance to root, then the side holding more of
    // the top-2k degree vertices; ties break toward side 0
    auto dist = distances_from(tree, root);
    int side_count[2] = {0, 0};
    for (int i = 0; i < 2 * k; ++i) ++side_count[dist[std::size_t(by_degree[std::size_t(i)])] % 2];
    const int side = side_count[1] > side_count[0] ? 1 : 0;
    std::vector<int> chosen;
    for (int i = 0; i < 2 * k && int(chosen.size()) < k; ++i) {
        int v = by_degree[std::size_t(i)];
        if (dist[std::size_t(v)] % 2 == side) chosen.push_back(v);
    }
    for (int v : chosen) {
        WitnessVector w;
        w.center = v;
        std::vector<int> children;
        for (int u : tree.neighbors(v))
            if (dist[std::size_t(u)] == dist[std::size_t(v)] + 1) children.push_back(u);
        const double c = double(children.size());
        w.entries.emplace_back(v, std::sqrt(c));
        for (int u : children) w.entries.emplace_back(u, 1.0);
        w.rayleigh_quotient = (c > 0) ? std::sqrt(c) : 0.0;
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

} // namespace treelab
