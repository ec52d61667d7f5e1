#pragma once

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "akc/blocks.hpp"
#include "akc/partition.hpp"
#include "akc/quiver.hpp"

namespace akc {

/// i-signature of a multipartition: addable/removable i-nodes in
/// "above"-first order, with R-above-A pairs cancelled.  The reduced word
/// has shape A...A R...R.
struct SignatureWord {
    enum class Tag { Addable, Removable };
    struct Entry {
        Node node;
        Tag tag;
    };

    std::vector<Entry> raw;
    std::vector<Entry> reduced;

    long long phi() const {
        long long n = 0;
        for (const auto& e : reduced)
            if (e.tag == Tag::Addable) ++n;
        return n;
    }
    long long eps() const { return static_cast<long long>(reduced.size()) - phi(); }

    /// Last surviving A (the lowest), target of f-tilde.
    std::optional<Node> good_addable() const {
        std::optional<Node> best;
        for (const auto& e : reduced)
            if (e.tag == Tag::Addable) best = e.node;
        return best;
    }
    /// First surviving R (the highest), target of e-tilde.
    std::optional<Node> good_removable() const {
        for (const auto& e : reduced)
            if (e.tag == Tag::Removable) return e.node;
        return std::nullopt;
    }
};

inline SignatureWord i_signature(const Multipartition& mp, const QuiverData& q, long long i) {
    SignatureWord w;
    auto add = addable_nodes(mp, q, i);
    auto rem = removable_nodes(mp, q, i);
    size_t a = 0, r = 0;
    while (a < add.size() || r < rem.size()) {
        if (r == rem.size() || (a < add.size() && above(add[a], rem[r])))
            w.raw.push_back({add[a++], SignatureWord::Tag::Addable});
        else
            w.raw.push_back({rem[r++], SignatureWord::Tag::Removable});
    }
    // Cancel each R that sits above a later A (stack scan).
    std::vector<SignatureWord::Entry> stack;
    for (const auto& e : w.raw) {
        if (e.tag == SignatureWord::Tag::Removable) {
            stack.push_back(e);
        } else if (!stack.empty() && stack.back().tag == SignatureWord::Tag::Removable) {
            stack.pop_back();
        } else {
            stack.push_back(e);
        }
    }
    w.reduced = std::move(stack);
    return w;
}

inline long long eps_i(const Multipartition& mp, const QuiverData& q, long long i) {
    return i_signature(mp, q, i).eps();
}
inline long long phi_i(const Multipartition& mp, const QuiverData& q, long long i) {
    return i_signature(mp, q, i).phi();
}

/// f-tilde: add the good addable i-node; nullopt when phi_i = 0.
inline std::optional<Multipartition> f_tilde(const Multipartition& mp, const QuiverData& q,
                                             long long i) {
    auto node = i_signature(mp, q, i).good_addable();
    if (!node) return std::nullopt;
    return add_node(mp, *node);
}

/// e-tilde: remove the good removable i-node; nullopt when eps_i = 0.
inline std::optional<Multipartition> e_tilde(const Multipartition& mp, const QuiverData& q,
                                             long long i) {
    auto node = i_signature(mp, q, i).good_removable();
    if (!node) return std::nullopt;
    return remove_node(mp, *node);
}

/// The weight nu = Lambda - alpha(lambda), carried as the content alpha.
struct WeightVector {
    Content alpha;

    auto operator<=>(const WeightVector&) const = default;
};

inline WeightVector wt(const Multipartition& mp, const QuiverData& q) {
    return WeightVector{content(mp, q)};
}

/// <Lambda - alpha, alpha_i^vee>.
inline long long pairing(const WeightVector& nu, long long i, const QuiverData& q) {
    long long v = q.lambda_mult(i);
    for (const auto& [j, c] : nu.alpha.counts()) v -= c * q.cartan(i, j);
    return v;
}

/// The highest-weight crystal generated from the empty multipartition,
/// truncated at size n_max.
struct CrystalGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        long long i = 0;
    };

    int n_max = 0;
    std::vector<Multipartition> vertices; // sorted by (size, structural order)
    std::map<Multipartition, int> index;
    std::vector<Edge> edges; // sorted by (from, i)

    std::vector<const Multipartition*> at_size(long long n) const {
        std::vector<const Multipartition*> out;
        for (const auto& v : vertices)
            if (v.size() == n) out.push_back(&v);
        return out;
    }
};

inline CrystalGraph build_crystal(const QuiverData& q, long long n_max,
                                  const Bounds& bounds = Bounds{}) {
    if (q.e() < 2) throw std::invalid_argument("crystal generation requires e >= 2");
    bounds.check(n_max, q.level());
    CrystalGraph g;
    g.n_max = static_cast<int>(n_max);
    std::vector<std::vector<Multipartition>> by_size(static_cast<size_t>(n_max) + 1);
    by_size[0].push_back(Multipartition::empty(q.level()));
    for (long long n = 0; n < n_max; ++n) {
        std::map<Multipartition, bool> next;
        for (const auto& v : by_size[static_cast<size_t>(n)])
            for (long long i = 0; i < q.e(); ++i)
                if (auto w = f_tilde(v, q, i)) next[*w] = true;
        for (const auto& [w, b] : next) by_size[static_cast<size_t>(n + 1)].push_back(w);
    }
    for (const auto& level : by_size)
        for (const auto& v : level) {
            g.index[v] = static_cast<int>(g.vertices.size());
            g.vertices.push_back(v);
        }
    for (const auto& v : g.vertices) {
        if (v.size() == n_max) continue;
        for (long long i = 0; i < q.e(); ++i)
            if (auto w = f_tilde(v, q, i))
                g.edges.push_back({g.index.at(v), g.index.at(*w), i});
    }
    return g;
}

/// The maximal i-string through a vertex, top (e-tilde kills) to bottom
/// (f-tilde kills).
struct RootString {
    std::vector<Multipartition> chain;
    size_t position = 0; // index of the query vertex within chain
};

inline RootString root_string(const Multipartition& mp, const QuiverData& q, long long i) {
    std::deque<Multipartition> chain{mp};
    for (auto up = e_tilde(mp, q, i); up; up = e_tilde(*up, q, i)) chain.push_front(*up);
    for (auto down = f_tilde(mp, q, i); down; down = f_tilde(*down, q, i)) chain.push_back(*down);
    RootString s;
    s.chain.assign(chain.begin(), chain.end());
    for (size_t k = 0; k < s.chain.size(); ++k)
        if (s.chain[k] == mp) s.position = k;
    return s;
}

/// The crystal reflection: f-tilde^k, identity, or e-tilde^{|k|} according
/// to the sign of k = <wt, alpha_i^vee>.
inline Multipartition sigma_i(const Multipartition& mp, const QuiverData& q, long long i) {
    long long k = pairing(wt(mp, q), i, q);
    Multipartition cur = mp;
    for (long long step = 0; step < k; ++step) {
        auto next = f_tilde(cur, q, i);
        if (!next) throw internal_error("sigma_i ran out of f-tilde steps");
        cur = *next;
    }
    for (long long step = 0; step < -k; ++step) {
        auto next = e_tilde(cur, q, i);
        if (!next) throw internal_error("sigma_i ran out of e-tilde steps");
        cur = *next;
    }
    return cur;
}

} // namespace akc
