#include "treelab/tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace treelab {

TreeBuilder::TreeBuilder(int n) : n_(n), adj_(std::size_t(n) + 1) {
    if (n < 1) throw ValidationError("tree must have at least one vertex");
}

void TreeBuilder::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop");
    adj_[std::size_t(u)].push_back(v);
    adj_[std::size_t(v)].push_back(u);
    ++edges_;
}

LabeledTree TreeBuilder::take() {
    if (edges_ != n_ - 1) throw ValidationError("a tree on n vertices needs exactly n-1 edges");
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw ValidationError("parallel edge");
    }
    // connectivity
    std::vector<char> seen(std::size_t(n_) + 1, 0);
    std::deque<int> q{1};
    seen[1] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : adj_[std::size_t(u)])
            if (!seen[std::size_t(w)]) {
                seen[std::size_t(w)] = 1;
                ++reached;
                q.push_back(w);
            }
    }
    if (reached != n_) throw ValidationError("edge list is not connected");
    LabeledTree t;
    t.n_ = n_;
    t.adj_ = std::move(adj_);
    return t;
}

LabeledTree LabeledTree::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    TreeBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.take();
}

LabeledTree LabeledTree::single() {
    TreeBuilder b(1);
    return b.take();
}

int LabeledTree::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

int LabeledTree::leaf_count() const {
    int c = 0;
    for (int v = 1; v <= n_; ++v) c += (degree(v) == 1);
    return c;
}

std::vector<std::pair<int, int>> LabeledTree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(std::size_t(std::max(0, n_ - 1)));
    for (int v = 1; v <= n_; ++v)
        for (int w : neighbors(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

bool LabeledTree::has_edge(int u, int v) const {
    const auto& a = adj_[std::size_t(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> LabeledTree::degrees() const {
    std::vector<int> d(std::size_t(n_) + 1, 0);
    for (int v = 1; v <= n_; ++v) d[std::size_t(v)] = degree(v);
    return d;
}

LabeledTree prufer_decode(const std::vector<int>& seq) {
    const int n = int(seq.size()) + 2;
    for (int x : seq)
        if (x < 1 || x > n) throw ValidationError("Pruefer entry out of range");

    std::vector<int> deg(std::size_t(n) + 1, 1);
    for (int x : seq) ++deg[std::size_t(x)];

    TreeBuilder b(n);
    // classic linear scan with a moving leaf pointer
    int ptr = 1;
    while (deg[std::size_t(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        b.add_edge(leaf, x);
        if (--deg[std::size_t(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[std::size_t(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    b.add_edge(leaf, n);
    return b.take();
}

std::vector<int> prufer_encode(const LabeledTree& tree) {
    const int n = tree.n();
    if (n < 2) throw ValidationError("Pruefer code requires n >= 2");
    std::vector<int> deg = tree.degrees();
    std::vector<int> parent(std::size_t(n) + 1, 0);
    // orient toward n so removal order is well defined
    {
        std::vector<int> stack{n};
        std::vector<char> seen(std::size_t(n) + 1, 0);
        seen[std::size_t(n)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : tree.neighbors(u))
                if (!seen[std::size_t(w)]) {
                    seen[std::size_t(w)] = 1;
                    parent[std::size_t(w)] = u;
                    stack.push_back(w);
                }
        }
    }
    std::vector<int> out;
    out.reserve(std::size_t(n - 2));
    int ptr = 1;
    while (deg[std::size_t(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < n - 2; ++i) {
        int p = parent[std::size_t(leaf)];
        out.push_back(p);
        if (--deg[std::size_t(p)] == 1 && p < ptr) {
            leaf = p;
        } else {
            ++ptr;
            while (deg[std::size_t(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    return out;
}

std::vector<int> distances_from(const LabeledTree& tree, int v) {
    if (v < 1 || v > tree.n()) throw ValidationError("vertex out of range");
    std::vector<int> dist(std::size_t(tree.n()) + 1, -1);
    std::deque<int> q{v};
    dist[std::size_t(v)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : tree.neighbors(u))
            if (dist[std::size_t(w)] < 0) {
                dist[std::size_t(w)] = dist[std::size_t(u)] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

NeighborhoodProfile neighborhood_profile(const LabeledTree& tree, int r_max) {
    if (r_max < 1) throw ValidationError("r_max must be >= 1");
    NeighborhoodProfile p;
    p.r_max = r_max;
    p.counts.assign(std::size_t(tree.n()) + 1, std::vector<int>(std::size_t(r_max) + 1, 0));
    p.delta.assign(std::size_t(r_max) + 1, 0);
    for (int v = 1; v <= tree.n(); ++v) {
        auto dist = distances_from(tree, v);
        for (int u = 1; u <= tree.n(); ++u) {
            int d = dist[std::size_t(u)];
            if (d <= r_max) ++p.counts[std::size_t(v)][std::size_t(d)];
        }
        for (int r = 0; r <= r_max; ++r)
            p.delta[std::size_t(r)] = std::max(p.delta[std::size_t(r)], p.counts[std::size_t(v)][std::size_t(r)]);
    }
    return p;
}

std::vector<long long> neighborhood_sizes_at(const LabeledTree& tree, int r) {
    const int n = tree.n();
    if (r < 0) throw ValidationError("radius must be >= 0");
    std::vector<long long> out(std::size_t(n) + 1, 0);
    if (r == 0) {
        std::fill(out.begin() + 1, out.end(), 1);
        return out;
    }
    if (r == 1) {
        for (int v = 1; v <= n; ++v) out[std::size_t(v)] = tree.degree(v);
        return out;
    }
    if (r == 2) {
        // distinct second neighbours in a tree: one per (u ~ v, w ~ u, w != v)
        for (int v = 1; v <= n; ++v) {
            long long s = 0;
            for (int u : tree.neighbors(v)) s += tree.degree(u) - 1;
            out[std::size_t(v)] = s;
        }
        return out;
    }
    if (r == 3) {
        std::vector<long long> star2(std::size_t(n) + 1, 0); // sum of (deg-1) over neighbours
        for (int v = 1; v <= n; ++v) {
            long long s = 0;
            for (int u : tree.neighbors(v)) s += tree.degree(u) - 1;
            star2[std::size_t(v)] = s;
        }
        for (int v = 1; v <= n; ++v) {
            long long s = 0;
            for (int u : tree.neighbors(v)) s += star2[std::size_t(u)] - (tree.degree(v) - 1);
            out[std::size_t(v)] = s;
        }
        return out;
    }
    for (int v = 1; v <= n; ++v) {
        auto dist = distances_from(tree, v);
        long long s = 0;
        for (int u = 1; u <= n; ++u) s += (dist[std::size_t(u)] == r);
        out[std::size_t(v)] = s;
    }
    return out;
}

std::vector<int> cluster(const LabeledTree& tree, int v, double threshold) {
    if (v < 1 || v > tree.n()) throw ValidationError("vertex out of range");
    if (!(threshold > 0)) throw ValidationError("threshold must be positive");
    auto low = [&](int u) { return double(tree.degree(u)) < threshold; };
    std::vector<char> in(std::size_t(tree.n()) + 1, 0);
    std::deque<int> q{v};
    in[std::size_t(v)] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : tree.neighbors(u)) {
            if (in[std::size_t(w)]) continue;
            if (low(u) && low(w)) continue; // two consecutive low-degree vertices
            in[std::size_t(w)] = 1;
            q.push_back(w);
        }
    }
    std::vector<int> out;
    for (int u = 1; u <= tree.n(); ++u)
        if (in[std::size_t(u)]) out.push_back(u);
    return out;
}

std::vector<int> cluster_partition(const LabeledTree& tree, double threshold) {
    const int n = tree.n();
    auto low = [&](int u) { return double(tree.degree(u)) < threshold; };
    std::vector<int> id(std::size_t(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        if (id[std::size_t(v)] != 0) continue;
        id[std::size_t(v)] = v;
        std::deque<int> q{v};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : tree.neighbors(u)) {
                if (id[std::size_t(w)] != 0) continue;
                if (low(u) && low(w)) continue;
                id[std::size_t(w)] = v;
                q.push_back(w);
            }
        }
    }
    return id;
}

RootedPlaneTree plane_embedding(const LabeledTree& tree, int root) {
    if (root < 1 || root > tree.n()) throw ValidationError("root out of range");
    std::vector<RootedPlaneTree::Node> nodes;
    nodes.reserve(std::size_t(tree.n()));
    // BFS so node indices are breadth-first; children inherit label order
    // because adjacency lists are sorted.
    std::vector<int> node_of(std::size_t(tree.n()) + 1, -1);
    nodes.push_back({-1, {}, root});
    node_of[std::size_t(root)] = 0;
    std::deque<int> q{root};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        int ui = node_of[std::size_t(u)];
        for (int w : tree.neighbors(u)) {
            if (node_of[std::size_t(w)] >= 0) continue; // parent
            int wi = int(nodes.size());
            nodes.push_back({ui, {}, w});
            nodes[std::size_t(ui)].children.push_back(wi);
            node_of[std::size_t(w)] = wi;
            q.push_back(w);
        }
    }
    return RootedPlaneTree(std::move(nodes));
}

std::string RootedPlaneTree::address(int i) const {
    if (i < 0 || i >= size()) throw ValidationError("node index out of range");
    std::vector<int> path;
    while (nodes_[std::size_t(i)].parent >= 0) {
        int p = nodes_[std::size_t(i)].parent;
        const auto& ch = nodes_[std::size_t(p)].children;
        int pos = int(std::find(ch.begin(), ch.end(), i) - ch.begin()) + 1;
        path.push_back(pos);
        i = p;
    }
    std::ostringstream os;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (it != path.rbegin()) os << '.';
        os << *it;
    }
    return os.str();
}

std::vector<int> RootedPlaneTree::bfs_child_counts() const {
    std::vector<int> out;
    out.reserve(nodes_.size());
    std::deque<int> q{0};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        out.push_back(int(nodes_[std::size_t(u)].children.size()));
        for (int c : nodes_[std::size_t(u)].children) q.push_back(c);
    }
    return out;
}

std::string RootedPlaneTree::shape_key() const {
    auto cc = bfs_child_counts();
    std::ostringstream os;
    for (std::size_t i = 0; i < cc.size(); ++i) {
        if (i) os << ',';
        os << cc[i];
    }
    return os.str();
}

int RootedPlaneTree::height() const {
    std::vector<int> depth(nodes_.size(), 0);
    int h = 0;
    std::deque<int> q{0};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        h = std::max(h, depth[std::size_t(u)]);
        for (int c : nodes_[std::size_t(u)].children) {
            depth[std::size_t(c)] = depth[std::size_t(u)] + 1;
            q.push_back(c);
        }
    }
    return h;
}

RootedPlaneTree RootedPlaneTree::from_bfs_child_counts(const std::vector<int>& counts) {
    if (counts.empty()) throw ValidationError("empty child-count sequence");
    long long alive = 1;
    for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
        alive += counts[i] - 1;
        if (alive <= 0) throw ValidationError("child-count sequence absorbs early");
    }
    alive += counts.back() - 1;
    if (alive != 0) throw ValidationError("child-count sequence does not absorb at its end");

    std::vector<Node> nodes(counts.size());
    std::size_t next = 1;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        for (int c = 0; c < counts[i]; ++c) {
            nodes[next].parent = int(i);
            nodes[i].children.push_back(int(next));
            ++next;
        }
    }
    return RootedPlaneTree(std::move(nodes));
}

Walk contour_walk(const RootedPlaneTree& tree) {
    const bool labeled = tree.node(0).label != 0;
    auto name = [&](int i) { return labeled ? tree.node(i).label : i; };
    Walk w;
    w.vertices.reserve(2 * std::size_t(tree.size()) - 1);
    // iterative DFS over ordered children
    struct Frame {
        int node;
        std::size_t next_child;
    };
    std::vector<Frame> stack{{0, 0}};
    w.vertices.push_back(name(0));
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& ch = tree.node(f.node).children;
        if (f.next_child < ch.size()) {
            int c = ch[f.next_child++];
            w.vertices.push_back(name(c));
            stack.push_back({c, 0});
        } else {
            stack.pop_back();
            if (!stack.empty()) w.vertices.push_back(name(stack.back().node));
        }
    }
    return w;
}

} // namespace treelab
