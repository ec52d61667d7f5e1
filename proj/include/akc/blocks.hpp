#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "akc/abacus.hpp"
#include "akc/partition.hpp"
#include "akc/quiver.hpp"

namespace akc {

/// A block of H_n is identified by its residue content alpha: two Specht
/// labels lie in the same block exactly when their contents agree.
struct BlockKey {
    Content alpha;

    long long n() const { return alpha.size(); }
    auto operator<=>(const BlockKey&) const = default;
};

inline BlockKey block_key(const Multipartition& mp, const QuiverData& q) {
    return BlockKey{content(mp, q)};
}

/// w = sum_j c_{kappa_j mod e} - (1/2) sum_i (c_i - c_{i+1})^2.  Defined as 0
/// when e = 0 (every block is core there).
inline long long weight_of(const Content& alpha, const QuiverData& q) {
    if (q.e() == 0) return 0;
    long long e = q.e();
    long long linear = 0;
    for (long long k : q.kappa()) linear += alpha.at(q.reduce(k));
    long long squares = 0;
    for (long long i = 0; i < e; ++i) {
        long long d = alpha.at(i) - alpha.at(q.reduce(i + 1));
        squares += d * d;
    }
    if (squares % 2 != 0)
        throw internal_error("weight formula parity violation");
    return linear - squares / 2;
}

/// Hub via the Cartan pairing: delta_i = -(<Lambda, alpha_i^vee> - sum_j c_j a_{ij}).
/// Returned as a finitely supported map; residues outside it have delta = 0.
inline std::map<long long, long long> hub_of(const Content& alpha, const QuiverData& q) {
    std::vector<long long> support;
    if (q.e() >= 2) {
        for (long long i = 0; i < q.e(); ++i) support.push_back(i);
    } else {
        std::map<long long, bool> seen;
        for (long long k : q.kappa()) seen[k] = true;
        for (const auto& [i, c] : alpha.counts())
            for (long long d = -1; d <= 1; ++d) seen[i + d] = true;
        for (const auto& [i, b] : seen) support.push_back(i);
    }
    std::map<long long, long long> hub;
    for (long long i : support) {
        long long pairing = q.lambda_mult(i);
        for (const auto& [j, c] : alpha.counts()) pairing -= c * q.cartan(i, j);
        if (pairing != 0) hub[i] = -pairing;
    }
    return hub;
}

/// Hub via node counts: delta_i = #removable i-nodes - #addable i-nodes.
inline std::map<long long, long long> hub_of(const Multipartition& mp, const QuiverData& q) {
    std::map<long long, long long> hub;
    for (const Node& n : removable_nodes(mp, q)) hub[residue(n, q)] += 1;
    for (const Node& n : addable_nodes(mp, q)) hub[residue(n, q)] -= 1;
    for (auto it = hub.begin(); it != hub.end();)
        it = it->second == 0 ? hub.erase(it) : std::next(it);
    return hub;
}

inline long long hub_at(const std::map<long long, long long>& hub, long long i) {
    auto it = hub.find(i);
    return it == hub.end() ? 0 : it->second;
}

namespace detail {

inline std::string content_tag(const Content& c) {
    std::ostringstream os;
    for (const auto& [i, n] : c.counts()) os << i << ':' << n << ';';
    return os.str();
}

/// Pruned existence search: is there a level-ell multipartition with the
/// given residue content?  Rows are extended cell by cell so that a missing
/// residue cuts the whole branch.
class BlockSearch {
public:
    explicit BlockSearch(const QuiverData& q) : q_(q) {}

    bool exists(const Content& alpha) { return go(1, 1, alpha.size(), alpha); }

private:
    bool go(int j, long long b, long long cap, const Content& rem) {
        if (rem.size() == 0) return true;
        if (j > q_.level()) return false;
        auto key = std::make_tuple(j, b, cap, content_tag(rem));
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool ok = false;
        // Finish component j here and move on.
        if (go(j + 1, 1, rem.size(), rem)) ok = true;
        Content cur = rem;
        for (long long len = 1; len <= cap && !ok; ++len) {
            long long r = residue(Node{b, len, j}, q_);
            if (cur.at(r) == 0) break;
            cur.add(r, -1);
            if (go(j, b + 1, len, cur)) ok = true;
        }
        memo_[key] = ok;
        return ok;
    }

    const QuiverData& q_;
    std::map<std::tuple<int, long long, long long, std::string>, bool> memo_;
};

/// Construct one member of the block, if any.
inline std::optional<Multipartition> find_member_rec(const QuiverData& q, int j, long long b,
                                                     long long cap, Content rem,
                                                     std::vector<std::vector<long long>>& rows) {
    if (rem.size() == 0 && j > q.level()) {
        std::vector<Partition> comps;
        for (const auto& r : rows) comps.emplace_back(r);
        while (static_cast<int>(comps.size()) < q.level()) comps.emplace_back();
        return Multipartition(comps);
    }
    if (j > q.level()) return std::nullopt;
    // Option: close component j.
    if (auto r = find_member_rec(q, j + 1, 1, rem.size(), rem, rows)) return r;
    Content cur = rem;
    for (long long len = 1; len <= cap; ++len) {
        long long res = residue(Node{b, len, j}, q);
        if (cur.at(res) == 0) break;
        cur.add(res, -1);
        rows[static_cast<size_t>(j - 1)].push_back(len);
        if (auto r = find_member_rec(q, j, b + 1, len, cur, rows)) return r;
        rows[static_cast<size_t>(j - 1)].pop_back();
    }
    return std::nullopt;
}

inline std::optional<Multipartition> find_member(const Content& alpha, const QuiverData& q) {
    std::vector<std::vector<long long>> rows(static_cast<size_t>(q.level()));
    return find_member_rec(q, 1, 1, alpha.size(), alpha, rows);
}

} // namespace detail

/// True iff no multipartition realizes the content.
inline bool is_empty_block(const BlockKey& key, const QuiverData& q) {
    detail::BlockSearch s(q);
    return !s.exists(key.alpha);
}

/// All multipartitions in the block, by brute enumeration.
inline std::vector<Multipartition> enumerate_block(const BlockKey& key, const QuiverData& q,
                                                   const Bounds& bounds = Bounds{}) {
    std::vector<Multipartition> out;
    for_each_multipartition(key.n(), q, [&](const Multipartition& mp) {
        if (content(mp, q) == key.alpha) out.push_back(mp);
    }, bounds);
    return out;
}

struct BlockInvariants {
    long long weight = 0;
    std::map<long long, long long> hub;
};

inline BlockInvariants block_invariants(const BlockKey& key, const QuiverData& q) {
    return BlockInvariants{weight_of(key.alpha, q), hub_of(key.alpha, q)};
}

/// Null-root descent: repeatedly subtract the all-ones content while the
/// result is still realized by some multipartition.  Returns the core block
/// key and the number of subtractions m (so w(B) - w(core) = m * level).
inline std::pair<BlockKey, long long> core_block_of(const BlockKey& key, const QuiverData& q) {
    if (q.e() < 2) throw std::invalid_argument("core block descent requires e >= 2");
    if (is_empty_block(key, q)) throw std::invalid_argument("core_block_of: empty block");
    Content alpha = key.alpha;
    long long m = 0;
    for (;;) {
        std::optional<Content> next = alpha;
        for (long long i = 0; i < q.e() && next; ++i) next = next->shifted(i, -1);
        if (!next || is_empty_block(BlockKey{*next}, q)) break;
        alpha = *next;
        ++m;
    }
    return {BlockKey{alpha}, m};
}

inline bool is_core_block(const BlockKey& key, const QuiverData& q) {
    if (q.e() == 0) return true;
    return core_block_of(key, q).second == 0;
}

/// Base tuple and the derived constants K_i of a core block.
struct CoreBlockData {
    BlockKey core;
    std::vector<long long> shifts;      // s_j with a_j = kappa_j + e * s_j
    std::vector<long long> charge;      // the chosen multicharge a
    std::vector<long long> base;        // (b_0, ..., b_{e-1})
    std::vector<long long> K;           // K_i per residue
};

inline CoreBlockData base_tuple(const BlockKey& core_key, const QuiverData& q) {
    if (q.e() < 2) throw std::invalid_argument("base tuples require e >= 2");
    if (!is_core_block(core_key, q))
        throw std::invalid_argument("base_tuple: not a core block");
    auto member = detail::find_member(core_key.alpha, q);
    if (!member) throw std::invalid_argument("base_tuple: empty block");

    long long e = q.e();
    int level = q.level();
    auto levels = runner_levels(*member, q); // levels[i][j-1]
    long long lo = levels[0][0], hi = levels[0][0];
    for (const auto& row : levels)
        for (long long v : row) { lo = std::min(lo, v); hi = std::max(hi, v); }
    long long limit = hi - lo + 1;

    // Lexicographically smallest nonnegative shifts putting every runner's
    // levels inside a window of size two.
    std::vector<long long> shifts(static_cast<size_t>(level), 0);
    std::vector<long long> base(static_cast<size_t>(e));
    auto valid = [&]() {
        for (long long i = 0; i < e; ++i) {
            long long mn = levels[static_cast<size_t>(i)][0] + shifts[0];
            long long mx = mn;
            for (int j = 1; j < level; ++j) {
                long long v = levels[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                              shifts[static_cast<size_t>(j)];
                mn = std::min(mn, v);
                mx = std::max(mx, v);
            }
            if (mx - mn > 1) return false;
            base[static_cast<size_t>(i)] = (mx == mn) ? mn : mx - 1;
        }
        return true;
    };
    bool found = false;
    std::function<bool(int)> search = [&](int j) {
        if (j == level) return valid();
        for (long long s = 0; s <= limit; ++s) {
            shifts[static_cast<size_t>(j)] = s;
            if (search(j + 1)) return true;
        }
        return false;
    };
    found = search(0);
    if (!found)
        throw internal_error("base tuple search failed on a certified core block");

    CoreBlockData out;
    out.core = core_key;
    out.shifts = shifts;
    for (int j = 0; j < level; ++j)
        out.charge.push_back(q.kappa()[static_cast<size_t>(j)] +
                             e * shifts[static_cast<size_t>(j)]);
    out.base = base;
    out.K.resize(static_cast<size_t>(e));
    out.K[0] = base[0] - base[static_cast<size_t>(e - 1)] - 2;
    for (long long i = 1; i < e; ++i)
        out.K[static_cast<size_t>(i)] = base[static_cast<size_t>(i)] -
                                        base[static_cast<size_t>(i - 1)] - 1;
    return out;
}

} // namespace akc
