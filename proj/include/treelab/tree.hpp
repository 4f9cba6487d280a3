#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treelab/errors.hpp"

namespace treelab {

/// Undirected tree on vertices 1..n, adjacency lists kept sorted.
/// Immutable after construction; all operations build new values.
class LabeledTree {
  public:
    LabeledTree() : n_(0) {}

    /// Builds from an edge list and validates tree-ness (n-1 edges, connected,
    /// simple). Throws ValidationError otherwise.
    static LabeledTree from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Single-vertex tree (legal everywhere except the Pruefer codec).
    static LabeledTree single();

    int n() const { return n_; }
    int degree(int v) const { return int(adj_[std::size_t(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[std::size_t(v)]; }
    int max_degree() const;
    int leaf_count() const;
    std::vector<std::pair<int, int>> edges() const;
    bool has_edge(int u, int v) const;

    /// degrees()[v] for v in 1..n; index 0 unused
    std::vector<int> degrees() const;

    bool operator==(const LabeledTree& other) const { return adj_ == other.adj_; }

  private:
    int n_;
    std::vector<std::vector<int>> adj_; // adj_[0] unused

    friend LabeledTree prufer_decode(const std::vector<int>& seq);
    friend class TreeBuilder;
};

// Internal helper for constructing validated trees without re-checking.
class TreeBuilder {
  public:
    explicit TreeBuilder(int n);
    void add_edge(int u, int v);
    LabeledTree take(); // sorts adjacency, checks edge count + connectivity
  private:
    int n_;
    int edges_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Ordered rooted tree. Node 0 is the root; children are ordered. When built
/// from a labeled tree the original labels are retained in label(); trees from
/// branching-process samplers carry label() == 0.
class RootedPlaneTree {
  public:
    struct Node {
        int parent = -1;
        std::vector<int> children;
        int label = 0;
    };

    RootedPlaneTree() { nodes_.push_back(Node{}); }
    explicit RootedPlaneTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

    int size() const { return int(nodes_.size()); }
    const Node& node(int i) const { return nodes_[std::size_t(i)]; }
    const std::vector<Node>& nodes() const { return nodes_; }

    /// Child-index address of a node: root is "", first child of root "1",
    /// its second child "1.2", ...
    std::string address(int i) const;

    /// Number of children per node, in BFS order. Uniquely identifies the
    /// plane shape.
    std::vector<int> bfs_child_counts() const;

    /// Canonical shape key (labels ignored), e.g. "2,0,1,0" for a cherry with
    /// a grandchild.
    std::string shape_key() const;

    int height() const;

    /// Builds a plane tree from a BFS child-count sequence; the sequence must
    /// absorb exactly (sum d_i = len-1 with all strict prefixes alive).
    static RootedPlaneTree from_bfs_child_counts(const std::vector<int>& counts);

  private:
    std::vector<Node> nodes_;
};

/// A walk in a host tree: a vertex sequence with consecutive vertices adjacent.
struct Walk {
    std::vector<int> vertices;
    int length() const { return int(vertices.size()) - 1; }
};

/// Per-vertex r'th-neighbourhood sizes plus the global maxima Delta^(r).
struct NeighborhoodProfile {
    int r_max = 0;
    std::vector<std::vector<int>> counts; // counts[v][r], v in 1..n, r in 0..r_max
    std::vector<int> delta;               // delta[r] = max_v counts[v][r], r in 0..r_max
};

// ---- operations ----

/// Decodes a Pruefer sequence of length n-2 (entries in 1..n) into its tree.
LabeledTree prufer_decode(const std::vector<int>& seq);

/// Inverse of prufer_decode; requires n >= 2.
std::vector<int> prufer_encode(const LabeledTree& tree);

/// BFS distances from v; result[0] unused.
std::vector<int> distances_from(const LabeledTree& tree, int v);

NeighborhoodProfile neighborhood_profile(const LabeledTree& tree, int r_max);

/// |Gamma_r(v)| for every v. O(n + m) for r <= 3 via tree identities
/// (e.g. |Gamma_2(v)| = sum over neighbours u of deg(u)-1); BFS beyond that.
std::vector<long long> neighborhood_sizes_at(const LabeledTree& tree, int r);

/// The cluster of v: all w whose tree path from v has no two consecutive
/// vertices of degree < threshold. Sorted.
std::vector<int> cluster(const LabeledTree& tree, int v, double threshold);

/// Cluster id per vertex (ids are the smallest member), computed in O(n).
/// Clusters are the components left after deleting edges whose two endpoints
/// both have degree < threshold.
std::vector<int> cluster_partition(const LabeledTree& tree, double threshold);

/// Plane embedding rooted at `root`: children ordered by original label.
RootedPlaneTree plane_embedding(const LabeledTree& tree, int root);

/// Depth-first contour of a plane tree; traverses each edge twice. The walk is
/// reported in original labels when present, else in node indices.
Walk contour_walk(const RootedPlaneTree& tree);

} // namespace treelab
