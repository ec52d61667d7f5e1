#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "akc/abacus.hpp"
#include "akc/blocks.hpp"
#include "akc/crystal.hpp"
#include "akc/partition.hpp"
#include "akc/quiver.hpp"

namespace akc {

enum class Direction { FSide, ESide, Identity };

inline const char* to_string(Direction d) {
    switch (d) {
        case Direction::FSide: return "F";
        case Direction::ESide: return "E";
        default: return "identity";
    }
}

/// Webster's criterion: with k = <Lambda - alpha, alpha_i^vee>, the divided
/// power F_i^{(k)} (k > 0) or E_i^{(|k|)} (k < 0) is a Morita equivalence iff
/// the adjacent weight space vanishes.  k = 0 holds trivially (identity).
struct WebsterResult {
    bool holds = false;
    long long k = 0;
    Direction direction = Direction::Identity;
    Content target; // content of Phi_i(B); equals source when k = 0
};

/// Content of the block Phi_i(B): c_i changes by -delta_i = k.
inline Content phi_content(const Content& alpha, const QuiverData& q, long long i) {
    long long delta = hub_at(hub_of(alpha, q), i);
    auto shifted = alpha.shifted(q.reduce(i), -delta);
    if (!shifted) throw internal_error("phi target content went negative");
    return *shifted;
}

inline WebsterResult webster_condition(const BlockKey& key, const QuiverData& q, long long i) {
    if (q.e() < 2) throw std::invalid_argument("webster_condition requires e >= 2");
    if (is_empty_block(key, q)) throw std::invalid_argument("webster_condition: empty block");
    WebsterResult out;
    out.k = pairing(WeightVector{key.alpha}, i, q);
    if (out.k == 0) {
        out.direction = Direction::Identity;
        out.holds = true;
        out.target = key.alpha;
        return out;
    }
    long long probe_shift = out.k > 0 ? -1 : +1;
    out.direction = out.k > 0 ? Direction::FSide : Direction::ESide;
    auto probe = key.alpha.shifted(q.reduce(i), probe_shift);
    out.holds = !probe || is_empty_block(BlockKey{*probe}, q);
    out.target = phi_content(key.alpha, q, i);
    return out;
}

/// The abacus sufficiency criterion for divided powers: delta_i(B) >= 0 and
/// w(B) <= w(C) + K_i * level, i.e. m <= K_i along the null-root descent.
struct AliceResult {
    bool holds = false;
    long long delta = 0;
    long long weight = 0;
    BlockKey core;
    long long m = 0;
    long long K_i = 0;
    CoreBlockData core_data;
};

inline AliceResult alice_condition(const BlockKey& key, const QuiverData& q, long long i) {
    if (q.e() < 2) throw std::invalid_argument("alice_condition requires e >= 2");
    AliceResult out;
    out.delta = hub_at(hub_of(key.alpha, q), i);
    out.weight = weight_of(key.alpha, q);
    auto [core, m] = core_block_of(key, q);
    out.core = core;
    out.m = m;
    out.core_data = base_tuple(core, q);
    out.K_i = out.core_data.K.at(static_cast<size_t>(q.reduce(i)));
    out.holds = out.delta >= 0 && out.m <= out.K_i;
    return out;
}

/// A certified Scopes move between two blocks, with the member bijection.
struct EquivalenceWitness {
    Content source;
    Content target;
    long long i = 0;
    long long k = 0;
    Direction direction = Direction::Identity;
    bool webster = false;
    bool alice = false;
    std::vector<std::pair<Multipartition, Multipartition>> pairs;
    /// Metadata assertion carried by the certification, not computed here:
    /// certified witnesses identify the graded decomposition matrices.
    bool same_graded_decomposition_matrix = false;
};

inline EquivalenceWitness phi_block_map(const BlockKey& key, const QuiverData& q, long long i,
                                        const Bounds& bounds = Bounds{}) {
    if (q.e() < 2) throw std::invalid_argument("phi_block_map requires e >= 2");
    EquivalenceWitness w;
    w.source = key.alpha;
    w.i = q.reduce(i);
    WebsterResult web = webster_condition(key, q, i);
    w.k = web.k;
    w.direction = web.direction;
    w.webster = web.holds;
    w.alice = hub_at(hub_of(key.alpha, q), i) >= 0 && alice_condition(key, q, i).holds;
    w.target = web.target;
    w.same_graded_decomposition_matrix = w.webster;

    auto members = enumerate_block(key, q, bounds);
    std::set<Multipartition> image;
    long long src_weight = weight_of(key.alpha, q);
    for (const auto& mp : members) {
        Multipartition out = phi_map(mp, q, i);
        w.pairs.emplace_back(mp, out);
        image.insert(out);
    }
    auto target_members = enumerate_block(BlockKey{w.target}, q, bounds);
    std::set<Multipartition> expected(target_members.begin(), target_members.end());
    if (image != expected)
        throw internal_error("phi_block_map: image is not the member set of the target block");
    if (src_weight != weight_of(w.target, q))
        throw internal_error("phi_block_map: weight not preserved");
    return w;
}

struct MoritaClass {
    Content representative; // minimal (n, content) member
    std::vector<Content> members;
    std::vector<EquivalenceWitness> witnesses; // spanning set
    bool open_at_boundary = false;
};

namespace detail {

class UnionFind {
public:
    int find(int x) {
        while (parent_.size() <= static_cast<size_t>(x)) {
            parent_.push_back(static_cast<int>(parent_.size()));
        }
        return parent_[static_cast<size_t>(x)] == x
                   ? x
                   : parent_[static_cast<size_t>(x)] = find(parent_[static_cast<size_t>(x)]);
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[static_cast<size_t>(b)] = a; // smaller index wins: deterministic
        return true;
    }

private:
    std::vector<int> parent_;
};

} // namespace detail

/// Partition all nonempty blocks of sizes 0..n_max into Scopes classes,
/// merging along webster-certified witnesses whose endpoints both fit in the
/// range.  Classes touching a certified witness that leaves the range are
/// flagged open-at-boundary.
inline std::vector<MoritaClass> morita_classes(const QuiverData& q, long long n_max,
                                               const Bounds& bounds = Bounds{},
                                               int jobs = 1) {
    if (q.e() < 2) throw std::invalid_argument("morita_classes requires e >= 2");
    bounds.check(n_max, q.level());

    std::vector<Content> blocks; // all nonempty blocks, sorted by (n, content)
    for (long long n = 0; n <= n_max; ++n) {
        std::set<Content> seen;
        for_each_multipartition(n, q, [&](const Multipartition& mp) {
            seen.insert(content(mp, q));
        }, bounds);
        blocks.insert(blocks.end(), seen.begin(), seen.end());
    }
    std::map<Content, int> id;
    for (size_t b = 0; b < blocks.size(); ++b) id[blocks[b]] = static_cast<int>(b);

    struct Probe {
        int source = 0;
        long long i = 0;
        WebsterResult web;
    };
    auto scan = [&](size_t begin, size_t end) {
        std::vector<Probe> out;
        for (size_t b = begin; b < end; ++b)
            for (long long i = 0; i < q.e(); ++i) {
                WebsterResult web = webster_condition(BlockKey{blocks[b]}, q, i);
                if (web.holds && web.k != 0)
                    out.push_back({static_cast<int>(b), i, web});
            }
        return out;
    };
    std::vector<Probe> probes;
    if (jobs <= 1) {
        probes = scan(0, blocks.size());
    } else {
        size_t chunk = (blocks.size() + static_cast<size_t>(jobs) - 1) /
                       static_cast<size_t>(jobs);
        std::vector<std::future<std::vector<Probe>>> futs;
        for (size_t lo = 0; lo < blocks.size(); lo += chunk)
            futs.push_back(std::async(std::launch::async, scan, lo,
                                      std::min(lo + chunk, blocks.size())));
        for (auto& f : futs) {
            auto part = f.get();
            probes.insert(probes.end(), part.begin(), part.end());
        }
        std::sort(probes.begin(), probes.end(), [](const Probe& a, const Probe& b) {
            return std::tie(a.source, a.i) < std::tie(b.source, b.i);
        });
    }

    detail::UnionFind uf;
    std::vector<bool> open(blocks.size(), false);
    std::vector<std::vector<EquivalenceWitness>> span(blocks.size());
    for (const Probe& p : probes) {
        auto it = id.find(p.web.target);
        if (it == id.end()) {
            open[static_cast<size_t>(p.source)] = true; // target beyond n_max
            continue;
        }
        if (uf.unite(p.source, it->second)) {
            EquivalenceWitness w = phi_block_map(BlockKey{blocks[static_cast<size_t>(p.source)]},
                                                 q, p.i, bounds);
            span[static_cast<size_t>(uf.find(p.source))].push_back(w);
        }
    }
    // Pull everything to the final roots.
    std::map<int, MoritaClass> classes;
    for (size_t b = 0; b < blocks.size(); ++b) {
        int root = uf.find(static_cast<int>(b));
        auto& cls = classes[root];
        cls.members.push_back(blocks[b]);
        cls.open_at_boundary = cls.open_at_boundary || open[b];
        for (auto& w : span[b]) cls.witnesses.push_back(std::move(w));
        span[b].clear();
    }
    std::vector<MoritaClass> out;
    for (auto& [root, cls] : classes) {
        cls.representative = blocks[static_cast<size_t>(root)];
        out.push_back(std::move(cls));
    }
    return out;
}

/// Agreement table between the two criteria over every (block, i) with
/// delta_i >= 0.  An anomaly is alice-true / webster-false.
struct ConsistencyReport {
    struct Entry {
        Content block;
        long long i = 0;
        AliceResult alice;
        WebsterResult webster;
    };
    long long checked = 0;
    long long alice_true = 0;
    long long webster_true = 0;
    std::vector<Entry> anomalies;
};

inline ConsistencyReport consistency_report(const QuiverData& q, long long n_max,
                                            const Bounds& bounds = Bounds{}) {
    if (q.e() < 2) throw std::invalid_argument("consistency_report requires e >= 2");
    bounds.check(n_max, q.level());
    ConsistencyReport rep;
    for (long long n = 0; n <= n_max; ++n) {
        std::set<Content> seen;
        for_each_multipartition(n, q, [&](const Multipartition& mp) {
            seen.insert(content(mp, q));
        }, bounds);
        for (const Content& alpha : seen) {
            auto hub = hub_of(alpha, q);
            for (long long i = 0; i < q.e(); ++i) {
                if (hub_at(hub, i) < 0) continue;
                AliceResult alice = alice_condition(BlockKey{alpha}, q, i);
                WebsterResult web = webster_condition(BlockKey{alpha}, q, i);
                ++rep.checked;
                if (alice.holds) ++rep.alice_true;
                if (web.holds) ++rep.webster_true;
                if (alice.holds && !web.holds)
                    rep.anomalies.push_back({alpha, i, alice, web});
            }
        }
    }
    return rep;
}

} // namespace akc
