#include "treelab/dyck.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace treelab {

Meander::Meander(std::vector<int> v) : values(std::move(v)) {
    if (values.empty() || values[0] != 0) throw ValidationError("meander must start at 0");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < 0) throw ValidationError("meander went negative");
        if (std::abs(values[i] - values[i - 1]) != 1) throw ValidationError("meander steps must be +-1");
    }
}

std::string Meander::str() const {
    bool single = true;
    for (int v : values)
        if (v > 9) single = false;
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i && !single) os << ',';
        os << values[i];
    }
    return os.str();
}

Meander Meander::parse(const std::string& text) {
    if (text.empty()) throw ValidationError("empty path string");
    std::string body = text;
    bool force_values = false, force_updown = false;
    if (body.rfind("v:", 0) == 0) {
        force_values = true;
        body = body.substr(2);
    } else if (body.rfind("ud:", 0) == 0) {
        force_updown = true;
        body = body.substr(3);
    }
    if (!force_updown && body.find(',') != std::string::npos) {
        std::vector<int> vals;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
        return Meander(std::move(vals));
    }
    bool digits = !body.empty();
    for (char c : body)
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    if (digits && !force_updown) {
        std::vector<int> vals;
        vals.reserve(body.size());
        for (char c : body) vals.push_back(c - '0');
        try {
            return Meander(std::move(vals));
        } catch (const ValidationError&) {
            if (force_values) throw;
            // fall through to the up-down reading ("1100" etc.)
        }
    }
    std::vector<int> vals{0};
    for (char c : body) {
        int step;
        switch (std::toupper(static_cast<unsigned char>(c))) {
            case 'U':
            case '1':
            case '+': step = 1; break;
            case 'D':
            case '0':
            case '-': step = -1; break;
            default: throw ValidationError(std::string("bad path character '") + c + "'");
        }
        vals.push_back(vals.back() + step);
    }
    return Meander(std::move(vals));
}

std::vector<int> PrefixCode::lens() const {
    std::vector<int> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(w.len());
    return out;
}

std::vector<int> PrefixCode::finals() const {
    std::vector<int> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(w.final_value());
    return out;
}

PrefixCode builtin_prefix_code(const std::string& name) {
    auto mk = [](std::initializer_list<std::initializer_list<int>> ws) {
        PrefixCode c;
        for (auto& w : ws) c.words.emplace_back(std::vector<int>(w));
        return c;
    };
    if (name == "trivial") return mk({{0, 1}});
    if (name == "depth2") return mk({{0, 1, 0}, {0, 1, 2}});
    if (name == "depth3") return mk({{0, 1, 0}, {0, 1, 2, 1}, {0, 1, 2, 3}});
    throw ValidationError("unknown built-in code '" + name + "' (try trivial, depth2, depth3)");
}

namespace {

bool is_prefix(const std::vector<int>& short_v, const std::vector<int>& long_v) {
    if (short_v.size() > long_v.size()) return false;
    return std::equal(short_v.begin(), short_v.end(), long_v.begin());
}

Meander extend_to_dyck(std::vector<int> vals) {
    while (vals.back() > 0) vals.push_back(vals.back() - 1);
    return Meander(std::move(vals));
}

} // namespace

CodeValidation validate_prefix_code(const std::vector<Meander>& words) {
    CodeValidation res;
    if (words.empty()) {
        res.ok = false;
        res.reason = "empty word list";
        return res;
    }
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = 0; b < words.size(); ++b) {
            if (a == b) continue;
            if (is_prefix(words[a].values, words[b].values)) {
                res.ok = false;
                res.reason = "word " + words[a].str() + " is a prefix of word " + words[b].str();
                res.counterexample = extend_to_dyck(words[b].values);
                return res;
            }
        }
    std::size_t max_len = 0;
    for (const auto& w : words) max_len = std::max(max_len, w.values.size());

    // explore live meander prefixes; a live prefix is a proper prefix of some
    // word, so exploration stops within max_len
    std::deque<std::vector<int>> frontier{{0}};
    while (!frontier.empty()) {
        auto m = frontier.front();
        frontier.pop_front();
        for (int step : {+1, -1}) {
            std::vector<int> next = m;
            if (next.back() + step < 0) continue;
            next.push_back(next.back() + step);
            bool covered = false, live = false;
            for (const auto& w : words) {
                if (is_prefix(w.values, next)) covered = true;
                else if (is_prefix(next, w.values)) live = true;
            }
            if (covered) continue;
            if (live) {
                frontier.push_back(std::move(next));
                continue;
            }
            res.ok = false;
            res.counterexample = extend_to_dyck(next);
            res.reason = "Dyck path " + res.counterexample->str() + " has no codeword prefix";
            return res;
        }
    }
    return res;
}

Meander dyck_of_walk(const LabeledTree& tree, const Walk& walk) {
    if (walk.vertices.empty()) throw ValidationError("empty walk");
    for (int v : walk.vertices)
        if (v < 1 || v > tree.n()) throw ValidationError("walk vertex out of range");
    for (std::size_t i = 1; i < walk.vertices.size(); ++i)
        if (!tree.has_edge(walk.vertices[i - 1], walk.vertices[i]))
            throw ValidationError("walk uses a non-edge");
    auto dist = distances_from(tree, walk.vertices.front());
    std::vector<int> vals;
    vals.reserve(walk.vertices.size());
    for (int v : walk.vertices) vals.push_back(dist[std::size_t(v)]);
    return Meander(std::move(vals));
}

PartitionedPath decompose(const PrefixCode& code, const Meander& dyck) {
    if (!dyck.is_dyck() || dyck.len() % 2 != 0) throw ValidationError("decompose needs a Dyck path");
    std::vector<std::vector<int>> words;
    words.reserve(code.words.size());
    for (const auto& w : code.words) words.push_back(w.values);
    detail::Decomposer<int> d(words, dyck.values);
    return d.run();
}

CodeProfile profile(const PartitionedPath& p, const PrefixCode& code) {
    return profile_of(p, code.size());
}

CompressedPath compress_partition(const PartitionedPath& p, const std::vector<int>& word_len,
                                  std::size_t word_count) {
    CompressedPath out;
    out.blocks.assign(word_count, {});
    std::vector<int> all;
    for (const auto& part : p.parts) {
        const int len = word_len[std::size_t(part.word_id)];
        const int mn = part.indices.front();
        std::vector<int> pp;
        for (int k : part.indices)
            if (!(k > mn && k < mn + len)) pp.push_back(k);
        all.insert(all.end(), pp.begin(), pp.end());
        out.pi_prime.push_back(std::move(pp));
    }
    std::sort(all.begin(), all.end());
    auto rank = [&](int k) { return int(std::lower_bound(all.begin(), all.end(), k) - all.begin()) + 1; };
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        CompressedPath::CPart cp;
        cp.word_id = p.parts[i].word_id;
        for (int k : out.pi_prime[i]) cp.pi_hat.push_back(rank(k));
        for (int r : cp.pi_hat) out.blocks[std::size_t(cp.word_id)].push_back(r);
        out.parts.push_back(std::move(cp));
    }
    for (auto& b : out.blocks) std::sort(b.begin(), b.end());
    return out;
}

CompressedPath compress(const PartitionedPath& p, const PrefixCode& code) {
    return compress_partition(p, code.lens(), code.size());
}

Meander reconstruct(const PrefixCode& code, const CompressedPath& compressed) {
    const auto lens = code.lens();
    const auto fins = code.finals();

    // undo rank compression: k -> k + sum over parts whose pi_hat minimum is < k
    struct PartInfo {
        int hat_min;
        int len;
    };
    std::vector<PartInfo> infos;
    for (const auto& cp : compressed.parts) {
        if (cp.pi_hat.empty()) throw DecodeError("empty compressed part");
        if (cp.word_id < 0 || cp.word_id >= int(code.size())) throw DecodeError("bad word id");
        if (int(cp.pi_hat.size()) != 1 + fins[std::size_t(cp.word_id)])
            throw DecodeError("compressed part has wrong size for its codeword");
        infos.push_back({*std::min_element(cp.pi_hat.begin(), cp.pi_hat.end()), lens[std::size_t(cp.word_id)]});
    }
    auto expand_index = [&](int k) {
        int kp = k;
        for (const auto& info : infos)
            if (info.hat_min < k) kp += info.len - 1;
        return kp;
    };

    long long two_k = 0;
    for (const auto& cp : compressed.parts)
        two_k += lens[std::size_t(cp.word_id)] + fins[std::size_t(cp.word_id)];
    if (two_k <= 0) return Meander();

    std::vector<Part> parts;
    for (const auto& cp : compressed.parts) {
        Part part;
        part.word_id = cp.word_id;
        std::vector<int> pp;
        for (int k : cp.pi_hat) pp.push_back(expand_index(k));
        std::sort(pp.begin(), pp.end());
        const int mn = pp.front();
        part.indices.push_back(mn);
        for (int j = 1; j < lens[std::size_t(cp.word_id)]; ++j) part.indices.push_back(mn + j);
        part.indices.insert(part.indices.end(), pp.begin() + 1, pp.end());
        std::sort(part.indices.begin(), part.indices.end());
        if (std::adjacent_find(part.indices.begin(), part.indices.end()) != part.indices.end())
            throw DecodeError("part indices collide after expansion");
        parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end(),
              [](const Part& a, const Part& b) { return a.indices.front() < b.indices.front(); });

    std::vector<int> vals(std::size_t(two_k) + 1, INT_MIN);
    vals[0] = 0;
    std::vector<char> owned(std::size_t(two_k) + 1, 0);
    for (const auto& part : parts) {
        const auto& w = code.words[std::size_t(part.word_id)].values;
        const int len = lens[std::size_t(part.word_id)];
        const int fin = fins[std::size_t(part.word_id)];
        const int mn = part.indices.front();
        if (mn - 1 < 0 || mn - 1 > two_k || vals[std::size_t(mn - 1)] == INT_MIN)
            throw DecodeError("part base value undefined; parts are not consistently nested");
        const int base = vals[std::size_t(mn - 1)];
        for (std::size_t j = 0; j < part.indices.size(); ++j) {
            const int idx = part.indices[j];
            if (idx < 1 || idx > two_k) throw DecodeError("part index out of range");
            if (owned[std::size_t(idx)]) throw DecodeError("overlapping parts");
            owned[std::size_t(idx)] = 1;
            const int value = (int(j) < len) ? base + w[j + 1] : base + fin - (int(j) - len + 1);
            vals[std::size_t(idx)] = value;
        }
    }
    for (long long i = 0; i <= two_k; ++i)
        if (vals[std::size_t(i)] == INT_MIN) throw DecodeError("parts do not cover every step");
    try {
        Meander m(std::move(vals));
        if (!m.is_dyck()) throw DecodeError("reconstructed path does not end at 0");
        return m;
    } catch (const ValidationError& e) {
        throw DecodeError(std::string("no Dyck path realizes this data: ") + e.what());
    }
}

std::vector<Meander> all_dyck_paths(int k) {
    std::vector<Meander> out;
    std::vector<int> cur{0};
    // DFS with up-steps first; prune branches that cannot return to 0
    auto rec = [&](auto&& self) -> void {
        const int len = int(cur.size()) - 1;
        const int v = cur.back();
        if (len == 2 * k) {
            out.emplace_back(cur);
            return;
        }
        const int remaining = 2 * k - len;
        if (v + 1 <= remaining - 1) {
            cur.push_back(v + 1);
            self(self);
            cur.pop_back();
        }
        if (v - 1 >= 0) {
            cur.push_back(v - 1);
            self(self);
            cur.pop_back();
        }
    };
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    rec(rec);
    return out;
}

BigInt ballot_count(long long t, long long f) {
    if (t < 0 || f < 0) throw ValidationError("ballot_count needs t, f >= 0");
    const long long N = t * (1 + f) + 1;
    BigInt num = binomial_exact(N, t);
    BigInt q = num / N;
    if (q * N != num) throw std::logic_error("ballot count was not integral");
    return q;
}

BigInt count_closed_walks(const LabeledTree& tree, int v, int k) {
    if (v < 1 || v > tree.n()) throw ValidationError("vertex out of range");
    if (k < 0) throw ValidationError("k must be >= 0");
    std::vector<BigInt> x(std::size_t(tree.n()) + 1, 0), y(std::size_t(tree.n()) + 1, 0);
    x[std::size_t(v)] = 1;
    for (int step = 0; step < 2 * k; ++step) {
        for (int u = 1; u <= tree.n(); ++u) {
            if (x[std::size_t(u)] == 0) continue;
            for (int w : tree.neighbors(u)) y[std::size_t(w)] += x[std::size_t(u)];
        }
        std::swap(x, y);
        std::fill(y.begin(), y.end(), 0);
    }
    return x[std::size_t(v)];
}

namespace {

// DFS over embeddings of a +-1 value profile, keeping the current root-path on
// a stack so no global distances are needed.
BigInt embed_count(const LabeledTree& tree, int start, const std::vector<int>& vals) {
    std::vector<int> stack{start};
    BigInt total = 0;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos + 1 == vals.size()) {
            total += 1;
            return;
        }
        const int cur = stack.back();
        if (vals[pos + 1] > vals[pos]) {
            const int parent = stack.size() >= 2 ? stack[stack.size() - 2] : 0;
            for (int w : tree.neighbors(cur)) {
                if (w == parent) continue;
                stack.push_back(w);
                self(self, pos + 1);
                stack.pop_back();
            }
        } else {
            if (stack.size() < 2) return; // cannot step below the start
            stack.pop_back();             // a down step revisits the previous level
            self(self, pos + 1);
            stack.push_back(cur);
        }
    };
    rec(rec, 0);
    return total;
}

} // namespace

BigInt count_walks_with_profile(const LabeledTree& tree, int v, const Meander& c) {
    if (v < 1 || v > tree.n()) throw ValidationError("vertex out of range");
    return embed_count(tree, v, c.values);
}

BigInt delta_of_meander(const LabeledTree& tree, const Meander& c) {
    BigInt best = 0;
    for (int v = 1; v <= tree.n(); ++v) best = std::max(best, count_walks_with_profile(tree, v, c));
    return best;
}

BigInt count_by_profile(const LabeledTree& tree, int v, const PrefixCode& code,
                        const std::vector<long long>& t) {
    if (t.size() != code.size()) throw ValidationError("profile size does not match code");
    const auto lens = code.lens();
    const auto fins = code.finals();
    long long two_k = 0;
    for (std::size_t b = 0; b < t.size(); ++b) two_k += t[b] * (lens[b] + fins[b]);
    if (two_k % 2 != 0) throw ValidationError("profile length is odd");
    const int k = int(two_k / 2);
    BigInt total = 0;
    for (const auto& d : all_dyck_paths(k)) {
        auto p = decompose(code, d);
        auto prof = profile_of(p, code.size());
        bool match = true;
        for (std::size_t b = 0; b < t.size(); ++b)
            if (prof.t[b] != t[b]) {
                match = false;
                break;
            }
        if (match) total += count_walks_with_profile(tree, v, d);
    }
    return total;
}

std::vector<std::vector<long long>> profiles_with_k(const PrefixCode& code, int k) {
    const auto lens = code.lens();
    const auto fins = code.finals();
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(code.size(), 0);
    auto rec = [&](auto&& self, std::size_t b, long long remaining) -> void {
        if (b + 1 == code.size()) {
            const long long unit = lens[b] + fins[b];
            if (remaining % unit == 0) {
                cur[b] = remaining / unit;
                out.push_back(cur);
            }
            return;
        }
        const long long unit = lens[b] + fins[b];
        for (long long c = 0; c * unit <= remaining; ++c) {
            cur[b] = c;
            self(self, b + 1, remaining - c * unit);
        }
    };
    rec(rec, 0, 2LL * k);
    return out;
}

TrivialBound bound_trivial(int k, int max_degree) {
    if (k < 0 || max_degree < 1) throw ValidationError("bound_trivial needs k >= 0, Delta >= 1");
    BigInt catalan = binomial_exact(2LL * k, k) / (k + 1);
    const double logc = log_of_bigint(catalan);
    TrivialBound b{};
    b.log_value = logc + double(k) * std::log(double(max_degree));
    b.log_crude = double(k) * std::log(4.0 * max_degree);
    b.value = std::exp(b.log_value);
    b.crude = std::exp(b.log_crude);
    return b;
}

BigInt bound_exact_code_int(const PrefixCode& code, const std::vector<long long>& t,
                            const std::vector<BigInt>& deltas) {
    if (t.size() != code.size() || deltas.size() != code.size())
        throw ValidationError("profile/delta size does not match code");
    const auto fins = code.finals();
    long long q = 0;
    for (std::size_t b = 0; b < t.size(); ++b) q += t[b] * (1 + fins[b]);
    // multinomial(q; t_b (1+f_b))
    BigInt result = 1;
    {
        long long used = 0;
        for (std::size_t b = 0; b < t.size(); ++b) {
            const long long part = t[b] * (1 + fins[b]);
            result *= binomial_exact(used + part, part);
            used += part;
        }
    }
    for (std::size_t b = 0; b < t.size(); ++b) {
        if (t[b] == 0) continue;
        result *= ballot_count(t[b], fins[b]);
        BigInt d = deltas[b];
        for (long long i = 0; i < t[b]; ++i) result *= d;
    }
    return result;
}

double bound_exact_code_log(const PrefixCode& code, const std::vector<long long>& t,
                            const std::vector<double>& deltas) {
    if (t.size() != code.size() || deltas.size() != code.size())
        throw ValidationError("profile/delta size does not match code");
    const auto fins = code.finals();
    std::vector<double> parts;
    for (std::size_t b = 0; b < t.size(); ++b) parts.push_back(double(t[b] * (1 + fins[b])));
    double r = log_multinomial(parts);
    for (std::size_t b = 0; b < t.size(); ++b) {
        if (t[b] == 0) continue;
        const double N = double(t[b] * (1 + fins[b]) + 1);
        r += log_binomial(N, double(t[b])) - std::log(N);
        if (deltas[b] <= 0) return -std::numeric_limits<double>::infinity();
        r += double(t[b]) * std::log(deltas[b]);
    }
    return r;
}

double bound_kl_log(const PrefixCode& code, const std::vector<long long>& t, double delta,
                    const std::vector<double>& deltas) {
    if (t.size() != code.size() || deltas.size() != code.size())
        throw ValidationError("profile/delta size does not match code");
    if (!(delta > 0)) throw ValidationError("bound_kl needs Delta > 0");
    const auto lens = code.lens();
    const auto fins = code.finals();
    long long q = 0;
    double k = 0;
    for (std::size_t b = 0; b < t.size(); ++b) {
        q += t[b] * (1 + fins[b]);
        k += double(t[b]) * (lens[b] + fins[b]) / 2.0;
    }
    if (q == 0) return 0.0; // empty walk; bound 1
    double gsum = 0;
    for (std::size_t b = 0; b < code.size(); ++b) {
        const double factor = std::max(1.0, 2.0 * std::exp(1.0) * fins[b]);
        const double denom = std::pow(delta, (lens[b] + fins[b]) / 2.0);
        const double base = factor * deltas[b] / denom;
        gsum += std::pow(base, 1.0 / (1.0 + fins[b]));
    }
    return 1.0 + 0.5 * std::log(double(q)) + k * std::log(delta) + double(q) * std::log(gsum);
}

double bound_kl(const PrefixCode& code, const std::vector<long long>& t, double delta,
                const std::vector<double>& deltas) {
    return std::exp(bound_kl_log(code, t, delta, deltas));
}

double bound_simple_lambda1(double delta, double delta2, double delta3) {
    if (!(delta >= 1)) throw ValidationError("Delta must be >= 1");
    if (delta2 < 0 || delta3 < 0) throw ValidationError("neighbourhood sizes must be >= 0");
    const double e = std::exp(1.0);
    return std::sqrt(delta) *
           (1.0 + std::sqrt(2.0 * e * delta2 / (delta * delta)) +
            std::pow(6.0 * e * delta3 / (delta * delta * delta), 0.25));
}

} // namespace treelab
