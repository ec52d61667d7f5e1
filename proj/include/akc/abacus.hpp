#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "akc/partition.hpp"
#include "akc/quiver.hpp"

namespace akc {

inline long long floordiv(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Cofinite beta-set of one component: every integer below full_below is
/// present, plus the listed exceptional values (strictly descending, all
/// >= full_below).
struct ComponentBeta {
    std::vector<long long> exceptional;
    long long full_below = 0;

    void normalize() {
        std::sort(exceptional.begin(), exceptional.end(), std::greater<>());
        exceptional.erase(std::unique(exceptional.begin(), exceptional.end()),
                          exceptional.end());
        for (auto b : exceptional)
            if (b < full_below)
                throw std::invalid_argument("exceptional beta-number below the full region");
        while (!exceptional.empty() && exceptional.back() == full_below) {
            exceptional.pop_back();
            ++full_below;
        }
    }

    bool contains(long long x) const {
        if (x < full_below) return true;
        return std::find(exceptional.begin(), exceptional.end(), x) != exceptional.end();
    }

    bool operator==(const ComponentBeta&) const = default;
};

struct BetaNumbers {
    std::vector<ComponentBeta> components;

    bool operator==(const BetaNumbers&) const = default;
};

/// beta^j_i = lambda^{(j)}_i + kappa_j - i.
inline BetaNumbers beta_numbers(const Multipartition& mp, const QuiverData& q) {
    mp.require_compatible(q);
    BetaNumbers out;
    for (int j = 1; j <= mp.level(); ++j) {
        const Partition& p = mp.component(j);
        long long kappa = q.kappa()[static_cast<size_t>(j - 1)];
        ComponentBeta cb;
        cb.full_below = kappa - p.rows();
        for (long long i = 1; i <= p.rows(); ++i)
            cb.exceptional.push_back(p.part(i) + kappa - i);
        cb.normalize();
        out.components.push_back(std::move(cb));
    }
    return out;
}

/// Inverse of beta_numbers.  Rejects a component whose charge (threshold
/// plus exceptional count) does not match kappa_j.
inline Multipartition multipartition_from_beta(const BetaNumbers& b, const QuiverData& q) {
    if (static_cast<int>(b.components.size()) != q.level())
        throw std::invalid_argument("component count does not match multicharge length");
    std::vector<Partition> comps;
    for (int j = 1; j <= q.level(); ++j) {
        ComponentBeta cb = b.components[static_cast<size_t>(j - 1)];
        cb.normalize();
        long long kappa = q.kappa()[static_cast<size_t>(j - 1)];
        long long charge = cb.full_below + static_cast<long long>(cb.exceptional.size());
        if (charge != kappa)
            throw std::invalid_argument("beta-set of component " + std::to_string(j) +
                                        " has charge " + std::to_string(charge) +
                                        ", expected " + std::to_string(kappa));
        std::vector<long long> parts;
        long long m = 1;
        for (long long beta : cb.exceptional) {
            long long part = beta + m - kappa;
            if (part < 0)
                throw std::invalid_argument("beta-set of component " + std::to_string(j) +
                                            " is not charge-consistent");
            if (part > 0) parts.push_back(part);
            ++m;
        }
        comps.emplace_back(parts);
    }
    return Multipartition(comps);
}

/// Level matrix: levels[i][j-1] is the level of the lowest bead (largest
/// beta-number) on runner i of component j.  Requires e >= 2.
inline std::vector<std::vector<long long>> runner_levels(const BetaNumbers& b,
                                                         const QuiverData& q) {
    if (q.e() < 2)
        throw std::invalid_argument("runner levels require e >= 2");
    long long e = q.e();
    std::vector<std::vector<long long>> levels(static_cast<size_t>(e));
    for (long long i = 0; i < e; ++i) {
        for (const ComponentBeta& cb : b.components) {
            long long best;
            bool found = false;
            for (long long beta : cb.exceptional)
                if (q.reduce(beta) == i) { best = beta; found = true; break; }
            if (!found) {
                long long t = cb.full_below - 1;
                best = t - q.reduce(t - i);
            }
            levels[static_cast<size_t>(i)].push_back(floordiv(best - i, e));
        }
    }
    return levels;
}

inline std::vector<std::vector<long long>> runner_levels(const Multipartition& mp,
                                                         const QuiverData& q) {
    return runner_levels(beta_numbers(mp, q), q);
}

/// The involution of Z swapping the residue classes i-1 and i.
inline long long phi_int(long long x, long long i, const QuiverData& q) {
    if (q.e() < 2) throw std::invalid_argument("phi requires e >= 2");
    if (q.reduce(x) == q.reduce(i - 1)) return x + 1;
    if (q.reduce(x) == q.reduce(i)) return x - 1;
    return x;
}

namespace detail {

/// Route 1: apply phi_int to every beta-number.
inline Multipartition phi_map_beta_route(const Multipartition& mp, const QuiverData& q,
                                         long long i) {
    BetaNumbers b = beta_numbers(mp, q);
    BetaNumbers mapped;
    for (const ComponentBeta& cb : b.components) {
        // Pick a cutoff s not congruent to i, so phi fixes the region below s.
        long long s = cb.full_below;
        while (q.reduce(s) == q.reduce(i)) --s;
        std::vector<long long> expl;
        for (long long x = s; x < cb.full_below; ++x) expl.push_back(phi_int(x, i, q));
        for (long long x : cb.exceptional) expl.push_back(phi_int(x, i, q));
        ComponentBeta nb{std::move(expl), s};
        nb.normalize();
        mapped.components.push_back(std::move(nb));
    }
    return multipartition_from_beta(mapped, q);
}

/// Route 2: simultaneously remove all removable and add all addable i-nodes.
inline Multipartition phi_map_node_route(const Multipartition& mp, const QuiverData& q,
                                         long long i) {
    std::vector<Partition> comps;
    for (int j = 1; j <= mp.level(); ++j) {
        const Partition& p = mp.component(j);
        std::vector<long long> parts;
        for (long long b = 1; b <= p.rows() + 1; ++b) {
            long long len = p.part(b);
            bool removable = b <= p.rows() && len > p.part(b + 1) &&
                             residue(Node{b, len, j}, q) == q.reduce(i);
            bool addable = (b == 1 || p.part(b - 1) > len) &&
                           residue(Node{b, len + 1, j}, q) == q.reduce(i);
            long long nlen = len + (addable ? 1 : 0) - (removable ? 1 : 0);
            if (nlen > 0) parts.push_back(nlen);
        }
        try {
            comps.emplace_back(parts);
        } catch (const std::invalid_argument&) {
            throw internal_error("node-toggle route produced an invalid partition");
        }
    }
    return Multipartition(comps);
}

/// Route 3: swap runners i-1 and i of the abacus display (with the level
/// wrap rule when i = 0).
inline Multipartition phi_map_runner_route(const Multipartition& mp, const QuiverData& q,
                                           long long i) {
    long long e = q.e();
    long long ri = q.reduce(i);
    BetaNumbers b = beta_numbers(mp, q);
    BetaNumbers mapped;
    for (const ComponentBeta& cb : b.components) {
        long long X = floordiv(cb.full_below, e) - 1;
        // Per-runner explicit level lists for levels >= X; every runner is
        // full below level X.
        std::vector<std::vector<long long>> lv(static_cast<size_t>(e));
        for (long long r = 0; r < e; ++r)
            for (long long x = X;; ++x) {
                long long pos = x * e + r;
                if (pos < cb.full_below) { lv[static_cast<size_t>(r)].push_back(x); continue; }
                break;
            }
        for (long long beta : cb.exceptional)
            lv[static_cast<size_t>(q.reduce(beta))].push_back(floordiv(beta - q.reduce(beta), e));
        std::vector<std::vector<long long>> nlv = lv;
        // Per-runner full thresholds: runner r is full below level F[r].
        std::vector<long long> F(static_cast<size_t>(e), X);
        if (ri != 0) {
            std::swap(nlv[static_cast<size_t>(ri - 1)], nlv[static_cast<size_t>(ri)]);
        } else {
            nlv[0].clear();
            for (long long x : lv[static_cast<size_t>(e - 1)]) nlv[0].push_back(x + 1);
            nlv[static_cast<size_t>(e - 1)].clear();
            for (long long x : lv[0]) nlv[static_cast<size_t>(e - 1)].push_back(x - 1);
            F[0] = X + 1;
            F[static_cast<size_t>(e - 1)] = X - 1;
        }
        long long minF = *std::min_element(F.begin(), F.end());
        ComponentBeta nb;
        nb.full_below = minF * e;
        for (long long r = 0; r < e; ++r) {
            for (long long x = minF; x < F[static_cast<size_t>(r)]; ++x)
                nb.exceptional.push_back(x * e + r);
            for (long long x : nlv[static_cast<size_t>(r)]) {
                long long pos = x * e + r;
                if (pos >= nb.full_below) nb.exceptional.push_back(pos);
            }
        }
        nb.normalize();
        mapped.components.push_back(std::move(nb));
    }
    return multipartition_from_beta(mapped, q);
}

} // namespace detail

/// Phi_i: toggle all addable/removable i-nodes at once.  Computed by all
/// three equivalent routes with an internal agreement assertion; the
/// node-toggle route is the arbiter.
inline Multipartition phi_map(const Multipartition& mp, const QuiverData& q, long long i) {
    if (q.e() < 2) throw std::invalid_argument("phi requires e >= 2");
    mp.require_compatible(q);
    Multipartition by_nodes = detail::phi_map_node_route(mp, q, i);
    Multipartition by_beta = detail::phi_map_beta_route(mp, q, i);
    Multipartition by_runners = detail::phi_map_runner_route(mp, q, i);
    if (by_beta != by_nodes || by_runners != by_nodes)
        throw internal_error("phi_map routes disagree on " + to_string(mp));
    return by_nodes;
}

/// Text rendering of the abacus display for levels lo..hi, one column block
/// per component.
inline std::string render_abacus(const Multipartition& mp, const QuiverData& q,
                                 long long lo, long long hi) {
    if (q.e() < 2) throw std::invalid_argument("abacus rendering requires e >= 2");
    if (lo > hi) throw std::invalid_argument("empty level window");
    long long e = q.e();
    BetaNumbers b = beta_numbers(mp, q);
    bool any_bead = false;
    for (const ComponentBeta& cb : b.components)
        for (long long x = lo; x <= hi; ++x)
            for (long long r = 0; r < e; ++r)
                if (cb.contains(x * e + r)) any_bead = true;
    if (!any_bead) throw std::invalid_argument("level window contains no beads");

    auto cell_row = [&](const ComponentBeta& cb, long long x) {
        std::string row;
        for (long long r = 0; r < e; ++r) {
            if (r) row += ' ';
            row += cb.contains(x * e + r) ? 'O' : '.';
        }
        return row;
    };
    std::string header;
    for (long long r = 0; r < e; ++r) {
        if (r) header += ' ';
        header += std::to_string(r);
    }
    std::ostringstream os;
    std::string sep = "   ";
    for (int j = 0; j < q.level(); ++j) {
        if (j) os << sep;
        os << header;
    }
    os << '\n';
    for (long long x = lo; x <= hi; ++x) {
        for (int j = 0; j < q.level(); ++j) {
            if (j) os << sep;
            os << cell_row(b.components[static_cast<size_t>(j)], x);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace akc
