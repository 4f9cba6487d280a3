#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treelab/dyck.hpp"
#include "treelab/partition.hpp"
#include "treelab/tree.hpp"

namespace treelab {

enum class VType : unsigned char { Low = 0, Mod = 1, High = 2 };

char vtype_char(VType t);

/// A tree with its vertices split into high / moderate / low classes.
struct MHTree {
    LabeledTree tree;
    std::vector<VType> type; // type[v], index 0 unused
    double moderate_lo = 0;  // degree threshold entering M
    double high_lo = 0;      // degree threshold entering H

    bool in_mh(int v) const { return type[std::size_t(v)] != VType::Low; }
    VType type_of(int v) const { return type[std::size_t(v)]; }
    std::vector<int> high_vertices() const;
    bool has_adjacent_high_pair() const;
};

/// H = deg >= high_frac * Delta, M = kappa <= deg < high_frac * Delta.
MHTree classify(const LabeledTree& tree, double kappa, double high_frac = 0.95);

/// Absolute thresholds: H = deg >= high_lo, M = moderate_lo <= deg < high_lo.
/// classify_two_level(t, x, x) gives the two-class split (no moderate band).
MHTree classify_with_thresholds(const LabeledTree& tree, double moderate_lo, double high_lo);

/// One entry of an encoding path: (distance to the walk start, vertex type).
struct MHSym {
    int value = 0;
    VType type = VType::Low;
    bool operator==(const MHSym& o) const { return value == o.value && type == o.type; }
};

/// The encoding path of a walk; first coordinates form a meander when the
/// sequence is realizable.
struct MHMeander {
    std::vector<MHSym> syms;

    int len() const { return int(syms.size()) - 1; }
    int final_value() const { return syms.back().value; }
    bool is_excursion() const { return final_value() == 0; }
    Meander untyped() const;
    std::string str() const; // e.g. "(0,h)(1,l)(2,m)"
};

/// A set of typed meanders intended to prefix-cover all (M,H)-excursions.
struct MHCode {
    std::string name;
    std::vector<MHMeander> words;
    std::vector<int> family_sizes; // how the wildcard families expanded

    std::size_t size() const { return words.size(); }
    std::vector<int> lens() const;
    std::vector<int> finals() const;
};

/// Built-in (M,H)-codes: "trivial9" (9 words), "simple11" (11 words),
/// "analysis50" (50 words, families of sizes 1+6+3+12+6+18+4).
/// Wildcards expand in the order l < m < h, leftmost slot slowest.
MHCode builtin_code(const std::string& name);

/// (distance, type) pairs along a walk. Defined for every walk, whether or
/// not it is doubly-nonbacktracking.
MHMeander encoding_path(const MHTree& mh, const Walk& walk);

/// True when the walk contains no simple or double backtracking step.
bool is_mh_walk(const MHTree& mh, const Walk& walk);

/// Removes backtracking steps until none remain (the result does not depend
/// on the removal order; verified by tests).
struct ReducedWalk {
    Walk reduced;
    enum class Kind : unsigned char { Simple, Double };
    struct Removal {
        int position; // start index of the removed subwalk, in the walk as it was then
        Kind kind;
    };
    std::vector<Removal> removed;
};
ReducedWalk reduce_walk(const MHTree& mh, const Walk& walk);

struct MHCodeValidation {
    bool ok = true;
    std::string reason;
    std::optional<MHMeander> counterexample;
};

/// Checks the unique-prefix property over realizable (M,H)-excursions: typed
/// sequences whose down-steps revisit the stacked types and which avoid both
/// backtracking patterns. Exhaustive to the code's word depth, which settles
/// all lengths.
MHCodeValidation validate_mh_code(const MHCode& code);

/// True iff e is the encoding path of some (M,H)-walk in some (M,H)-tree.
bool is_realizable_excursion(const MHMeander& e);

/// Same recursion as the untyped decompose, matching on (value, type) pairs.
/// Throws MalformedCodeError (with witness) when no word covers a piece.
PartitionedPath mh_decompose(const MHCode& code, const MHMeander& excursion);

/// Number of (M,H)-walks from v whose encoding path equals c.
long long deg_mh(const MHTree& mh, int v, const MHMeander& c);

/// max_v deg_mh(v, c)
long long delta_of_mh_meander(const MHTree& mh, const MHMeander& c);

/// eps(C,T) = (2a)^2 max_b Delta_T(c^(b))^{2/(len_b+f_b)} / Delta_T, plus the
/// per-word ratios without the (2a)^2 prefactor.
struct EpsilonReport {
    double epsilon = 0;
    std::vector<double> per_word;
    std::vector<long long> word_deltas;
    int argmax_word = -1;
};
EpsilonReport epsilon(const MHCode& code, const MHTree& mh);

/// Exact count of closed (M,H)-walks of length 2k from v (DFS with a visit
/// cap; throws ValidationError when the cap trips).
long long count_mh_bruteforce(const MHTree& mh, int v, int k, long long cap = 200'000'000);

/// 2^a (eps Delta)^k
double bound_mh_profile_log(std::size_t word_count, long long k, double eps, double delta);

/// 2^a (a^2 eps Delta)^k
double bound_mh_length_log(std::size_t word_count, long long k, double eps, double delta);

/// Exact evaluation of the decorated-walk generating sum
/// F(tau_max) = sum_{s_h+s_m+2d=k-j} C(2j+s_h+s_m+d, d) C(j+s_h, s_h)
///              C(j-1+s_m, s_m) Delta^{s_h} (0.95 Delta)^{s_m} Delta2^d,
/// with C(-1+s_m, s_m) read as [s_m = 0] when j = 0.
double f_tau_max(int j, int k, double delta, double delta2);

/// (k+1)^2 (1 + Delta2/Delta^2)^{2k} C(k,j) e^{20 j} Delta^{k-j}
double bound_Z_log(int j, int k, double delta, double delta2);

/// 2^a (k+1)^2 Delta^k (1+Delta2/Delta^2)^{2k} (1 + e^20 a^2 eps)^k.
/// Requires no adjacent high-degree pair; throws ValidationError otherwise.
double bound_Nk_log(const MHTree& mh, const MHCode& code, int k);

/// sqrt(Delta) (1 + Delta2/Delta^2) sqrt(1 + e^20 a^2 eps), same hypothesis.
double bound_lambda1_mh(const MHTree& mh, const MHCode& code);

} // namespace treelab
