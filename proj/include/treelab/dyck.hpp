#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treelab/numeric.hpp"
#include "treelab/partition.hpp"
#include "treelab/tree.hpp"

namespace treelab {

/// Nonnegative +-1 lattice path from 0. A Dyck path is the even-length,
/// final-value-0 case.
struct Meander {
    std::vector<int> values; // c_0 = 0, ..., c_len

    Meander() : values{0} {}
    explicit Meander(std::vector<int> v);

    int len() const { return int(values.size()) - 1; }
    int final_value() const { return values.back(); }
    bool is_dyck() const { return final_value() == 0; }
    std::string str() const; // "0121..." for single digits, comma-joined otherwise

    /// Parses "0,1,2,1", a digit-values string like "0121", or an up-down
    /// string like "UUDD".
    static Meander parse(const std::string& text);

    bool operator==(const Meander& o) const { return values == o.values; }
};

struct PrefixCode {
    std::vector<Meander> words;

    std::vector<int> lens() const;
    std::vector<int> finals() const;
    std::size_t size() const { return words.size(); }
};

/// Built-in codes: "trivial" = {01}, "depth2" = {010, 012},
/// "depth3" = {010, 0121, 0123}.
PrefixCode builtin_prefix_code(const std::string& name);

struct CodeValidation {
    bool ok = true;
    std::string reason;
    std::optional<Meander> counterexample; // an uncovered or doubly-covered Dyck path
};

/// Checks the unique-prefix property over all Dyck paths: no word is a prefix
/// of another, and every live path prefix is resolved within the max word
/// length (which extends the guarantee to all lengths).
CodeValidation validate_prefix_code(const std::vector<Meander>& words);

/// Distance-to-start profile of a walk; a Dyck path iff the walk is closed.
Meander dyck_of_walk(const LabeledTree& tree, const Walk& walk);

PartitionedPath decompose(const PrefixCode& code, const Meander& dyck);
CodeProfile profile(const PartitionedPath& p, const PrefixCode& code);
CompressedPath compress(const PartitionedPath& p, const PrefixCode& code);

/// Inverse of compress(decompose(.)); throws DecodeError when no Dyck path
/// realizes the input.
Meander reconstruct(const PrefixCode& code, const CompressedPath& compressed);

/// Enumerates all Dyck paths of length 2k (Catalan(k) of them), lexicographic.
std::vector<Meander> all_dyck_paths(int k);

/// Walks with steps {-1,+f} from 0 to 0 staying >= 0, with t up-steps:
/// (1/(t(1+f)+1)) * C(t(1+f)+1, t), exact.
BigInt ballot_count(long long t, long long f);

/// Number of closed walks of length 2k from v, i.e. (A^{2k})_{vv}, exact.
BigInt count_closed_walks(const LabeledTree& tree, int v, int k);

/// Number of walks from v whose distance profile equals c, exact.
BigInt count_walks_with_profile(const LabeledTree& tree, int v, const Meander& c);

/// max_v count_walks_with_profile(v, c)
BigInt delta_of_meander(const LabeledTree& tree, const Meander& c);

/// Closed walks from v whose decomposition profile equals t.
BigInt count_by_profile(const LabeledTree& tree, int v, const PrefixCode& code,
                        const std::vector<long long>& t);

/// All profiles t with k(t) == k for the given code.
std::vector<std::vector<long long>> profiles_with_k(const PrefixCode& code, int k);

struct TrivialBound {
    double value;      // Catalan(k) * Delta^k
    double crude;      // (4 Delta)^k
    double log_value;
    double log_crude;
};
TrivialBound bound_trivial(int k, int max_degree);

/// Exact per-profile walk bound:
/// multinomial(q; t_b(1+f_b)) * prod_b ballot(t_b,f_b) * Delta(c_b)^{t_b}.
BigInt bound_exact_code_int(const PrefixCode& code, const std::vector<long long>& t,
                            const std::vector<BigInt>& deltas);
double bound_exact_code_log(const PrefixCode& code, const std::vector<long long>& t,
                            const std::vector<double>& deltas);

/// Kullback-Leibler-style smoothing of the exact bound:
/// e sqrt(q) Delta^k (sum_b g_b)^q with
/// g_b = ((1 v 2e f_b) Delta(c_b) / Delta^{(len_b+f_b)/2})^{1/(1+f_b)}.
/// Returns 1 for the empty profile (q = 0).
double bound_kl_log(const PrefixCode& code, const std::vector<long long>& t, double delta,
                    const std::vector<double>& deltas);
double bound_kl(const PrefixCode& code, const std::vector<long long>& t, double delta,
                const std::vector<double>& deltas);

/// sqrt(Delta) * (1 + sqrt(2e Delta2/Delta^2) + (6e Delta3/Delta^3)^{1/4})
double bound_simple_lambda1(double delta, double delta2, double delta3);

} // namespace treelab
