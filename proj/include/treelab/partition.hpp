#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "treelab/errors.hpp"

namespace treelab {

/// One part of the recursive decomposition of a (possibly typed) Dyck path:
/// the step indices it owns (1-based, ascending) and the codeword it used.
struct Part {
    std::vector<int> indices;
    int word_id = 0; // 0-based index into the code's word list
};

struct PartitionedPath {
    std::vector<Part> parts; // sorted by smallest index
    int length = 0;          // number of steps partitioned (2k)
};

/// Per-codeword usage counts t_b plus the derived walk-length and block-size
/// functionals.
struct CodeProfile {
    std::vector<long long> t;

    // needs the code's per-word (len, f); provided by the code classes
    long long two_k(const std::vector<int>& len, const std::vector<int>& fin) const {
        long long s = 0;
        for (std::size_t b = 0; b < t.size(); ++b) s += t[b] * (len[b] + fin[b]);
        return s;
    }
    long long q(const std::vector<int>& fin) const {
        long long s = 0;
        for (std::size_t b = 0; b < t.size(); ++b) s += t[b] * (1 + fin[b]);
        return s;
    }
};

/// The gap-compressed view: per part, the rank set pi_hat and its codeword;
/// blocks[b] is the union of the pi_hat over parts using word b.
struct CompressedPath {
    struct CPart {
        std::vector<int> pi_hat;
        int word_id = 0;
    };
    std::vector<CPart> parts;                // same order as the partition
    std::vector<std::vector<int>> pi_prime;  // the uncompressed reduced sets
    std::vector<std::vector<int>> blocks;    // blocks[b], ascending
};

namespace detail {

// Shared recursive partition of an excursion by a prefix code, generic over
// the symbol type (plain integers for Dyck paths, (value,type) pairs for the
// typed machinery). Requirements on Sym: sym_value(Sym) -> int,
// sym_shift(Sym, int) -> Sym (add to the value), operator==, sym_str(Sym).
inline int sym_value(int s) { return s; }
inline int sym_shift(int s, int d) { return s + d; }
inline std::string sym_str(int s) { return std::to_string(s); }

template <class Sym>
std::string seq_str(const std::vector<Sym>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ' ';
        os << sym_str(xs[i]);
    }
    return os.str();
}

template <class Sym>
class Decomposer {
  public:
    Decomposer(const std::vector<std::vector<Sym>>& words, const std::vector<Sym>& path)
        : words_(words), path_(path) {
        max_len_ = 0;
        for (const auto& w : words_) max_len_ = std::max(max_len_, w.size() - 1);
    }

    PartitionedPath run() {
        PartitionedPath out;
        out.length = int(path_.size()) - 1;
        parts_ = &out.parts;
        if (out.length > 0) rec(0, int(path_.size()) - 1);
        std::sort(out.parts.begin(), out.parts.end(),
                  [](const Part& a, const Part& b) { return a.indices.front() < b.indices.front(); });
        return out;
    }

  private:
    int value(int i) const { return sym_value(path_[std::size_t(i)]); }

    // matches words against path entries lo..lo+m, values shifted down by
    // value(lo); returns (word id, m) for the minimal-length match
    std::pair<int, int> match_word(int lo, int hi) const {
        const int base = value(lo);
        for (std::size_t m = 1; m <= max_len_ && lo + int(m) <= hi; ++m) {
            for (std::size_t b = 0; b < words_.size(); ++b) {
                const auto& w = words_[b];
                if (w.size() != m + 1) continue;
                bool ok = true;
                for (std::size_t t = 0; t <= m; ++t) {
                    if (!(sym_shift(path_[std::size_t(lo) + t], -base) == w[t])) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return {int(b), int(m)};
            }
        }
        std::vector<Sym> witness(path_.begin() + lo, path_.begin() + std::min<std::size_t>(path_.size(), std::size_t(lo) + max_len_ + 1));
        for (auto& s : witness) s = sym_shift(s, -base);
        throw MalformedCodeError("no codeword covers this excursion prefix", seq_str(witness));
    }

    // entries lo..hi form an excursion relative to value(lo); partitions step
    // indices lo+1..hi
    void rec(int lo, int hi) {
        if (hi - lo <= 0) return;
        const int base = value(lo);
        for (int i = lo + 1; i < hi; ++i) {
            if (value(i) == base) {
                rec(lo, i);
                rec(i, hi);
                return;
            }
        }
        auto [b, m] = match_word(lo, hi);
        const int h = value(lo + m) - base;
        Part part;
        part.word_id = b;
        for (int i = lo + 1; i <= lo + m; ++i) part.indices.push_back(i);
        if (h == 0) {
            // the word is the whole excursion (no interior return to base)
            parts_->push_back(std::move(part));
            return;
        }
        std::vector<int> sigma(std::size_t(h) + 1);
        sigma[0] = lo + m;
        for (int i = 1; i <= h; ++i) {
            int idx = sigma[std::size_t(i - 1)] + 1;
            while (idx <= hi && value(idx) != base + h - i) ++idx;
            if (idx > hi) throw DecodeError("excursion never returns to its base level");
            sigma[std::size_t(i)] = idx;
            part.indices.push_back(idx);
        }
        parts_->push_back(std::move(part));
        for (int i = 0; i < h; ++i)
            if (sigma[std::size_t(i + 1)] > sigma[std::size_t(i)] + 1)
                rec(sigma[std::size_t(i)], sigma[std::size_t(i + 1)] - 1);
    }

    const std::vector<std::vector<Sym>>& words_;
    const std::vector<Sym>& path_;
    std::size_t max_len_;
    std::vector<Part>* parts_ = nullptr;
};

} // namespace detail

/// Usage counts per word.
inline CodeProfile profile_of(const PartitionedPath& p, std::size_t word_count) {
    CodeProfile prof;
    prof.t.assign(word_count, 0);
    for (const auto& part : p.parts) ++prof.t[std::size_t(part.word_id)];
    return prof;
}

/// Gap compression: drop the forced run after each part's minimum, then
/// re-rank the surviving indices into 1..q.
CompressedPath compress_partition(const PartitionedPath& p, const std::vector<int>& word_len,
                                  std::size_t word_count);

} // namespace treelab
