#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "akc/quiver.hpp"

namespace akc {

/// A partition: weakly decreasing positive parts, trailing zeros never stored.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<long long>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based row length; 0 beyond the last row.
    long long part(long long b) const {
        if (b < 1 || b > rows()) return 0;
        return parts_[static_cast<size_t>(b - 1)];
    }

    long long size() const {
        long long n = 0;
        for (long long p : parts_) n += p;
        return n;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<long long> parts_;
};

/// An ell-tuple of partitions.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components)
        : components_(std::move(components)) {}

    /// Empty multipartition with the given number of components.
    static Multipartition empty(int level) {
        return Multipartition(std::vector<Partition>(static_cast<size_t>(level)));
    }

    const std::vector<Partition>& components() const { return components_; }
    int level() const { return static_cast<int>(components_.size()); }

    /// 1-based component access.
    const Partition& component(int j) const {
        return components_.at(static_cast<size_t>(j - 1));
    }

    long long size() const {
        long long n = 0;
        for (const auto& c : components_) n += c.size();
        return n;
    }

    bool compatible_with(const QuiverData& q) const { return level() == q.level(); }

    void require_compatible(const QuiverData& q) const {
        if (!compatible_with(q))
            throw std::invalid_argument("multipartition level does not match multicharge length");
    }

    auto operator<=>(const Multipartition&) const = default;

private:
    std::vector<Partition> components_;
};

/// A node (row, column, component), all 1-based.
struct Node {
    long long row = 1;
    long long col = 1;
    int component = 1;

    auto operator<=>(const Node&) const = default;
};

/// The strict "above" order: (b,c,j) is above (b',c',j') iff j < j', or
/// j = j' and b < b'.
inline bool above(const Node& a, const Node& b) {
    return a.component < b.component ||
           (a.component == b.component && a.row < b.row);
}

/// Residue content: finitely supported counts per residue.  Keys are reduced
/// residues (arbitrary integers when e = 0).
class Content {
public:
    Content() = default;

    long long at(long long i) const {
        auto it = counts_.find(i);
        return it == counts_.end() ? 0 : it->second;
    }

    void add(long long i, long long d) {
        long long v = at(i) + d;
        if (v < 0) throw std::invalid_argument("content count went negative");
        if (v == 0) counts_.erase(i);
        else counts_[i] = v;
    }

    /// Content shifted by d at residue i, or nullopt if a count would go
    /// negative.
    std::optional<Content> shifted(long long i, long long d) const {
        if (at(i) + d < 0) return std::nullopt;
        Content c = *this;
        c.add(i, d);
        return c;
    }

    long long size() const {
        long long n = 0;
        for (const auto& [i, c] : counts_) n += c;
        return n;
    }

    const std::map<long long, long long>& counts() const { return counts_; }
    auto operator<=>(const Content&) const = default;

private:
    std::map<long long, long long> counts_;
};

/// res(b,c,j) = kappa_j + c - b, reduced mod e when e >= 2.
inline long long residue(const Node& n, const QuiverData& q) {
    return q.reduce(q.kappa().at(static_cast<size_t>(n.component - 1)) + n.col - n.row);
}

inline Content content(const Multipartition& mp, const QuiverData& q) {
    mp.require_compatible(q);
    Content c;
    for (int j = 1; j <= mp.level(); ++j) {
        const Partition& p = mp.component(j);
        for (long long b = 1; b <= p.rows(); ++b)
            for (long long col = 1; col <= p.part(b); ++col)
                c.add(residue(Node{b, col, j}, q), 1);
    }
    return c;
}

/// Addable nodes in "above"-first order, optionally filtered by residue.
inline std::vector<Node> addable_nodes(const Multipartition& mp, const QuiverData& q,
                                       std::optional<long long> res = std::nullopt) {
    mp.require_compatible(q);
    std::vector<Node> out;
    for (int j = 1; j <= mp.level(); ++j) {
        const Partition& p = mp.component(j);
        for (long long b = 1; b <= p.rows() + 1; ++b) {
            long long len = p.part(b);
            if (b > 1 && p.part(b - 1) == len) continue; // would break monotonicity
            Node n{b, len + 1, j};
            if (!res || residue(n, q) == q.reduce(*res)) out.push_back(n);
        }
    }
    return out;
}

/// Removable nodes in "above"-first order, optionally filtered by residue.
inline std::vector<Node> removable_nodes(const Multipartition& mp, const QuiverData& q,
                                         std::optional<long long> res = std::nullopt) {
    mp.require_compatible(q);
    std::vector<Node> out;
    for (int j = 1; j <= mp.level(); ++j) {
        const Partition& p = mp.component(j);
        for (long long b = 1; b <= p.rows(); ++b) {
            if (p.part(b) == p.part(b + 1)) continue;
            Node n{b, p.part(b), j};
            if (!res || residue(n, q) == q.reduce(*res)) out.push_back(n);
        }
    }
    return out;
}

/// Add an addable node (validates addability).
inline Multipartition add_node(const Multipartition& mp, const Node& n) {
    auto comps = mp.components();
    auto& p = comps.at(static_cast<size_t>(n.component - 1));
    std::vector<long long> parts = p.parts();
    if (n.row == static_cast<long long>(parts.size()) + 1) {
        if (n.col != 1) throw std::invalid_argument("node is not addable");
        parts.push_back(1);
    } else if (n.row >= 1 && n.row <= static_cast<long long>(parts.size()) &&
               n.col == parts[static_cast<size_t>(n.row - 1)] + 1 &&
               (n.row == 1 || parts[static_cast<size_t>(n.row - 2)] >= n.col)) {
        parts[static_cast<size_t>(n.row - 1)] += 1;
    } else {
        throw std::invalid_argument("node is not addable");
    }
    p = Partition(parts);
    return Multipartition(comps);
}

/// Remove a removable node (validates removability).
inline Multipartition remove_node(const Multipartition& mp, const Node& n) {
    auto comps = mp.components();
    auto& p = comps.at(static_cast<size_t>(n.component - 1));
    std::vector<long long> parts = p.parts();
    if (n.row < 1 || n.row > static_cast<long long>(parts.size()) ||
        n.col != parts[static_cast<size_t>(n.row - 1)] ||
        parts[static_cast<size_t>(n.row - 1)] == p.part(n.row + 1))
        throw std::invalid_argument("node is not removable");
    parts[static_cast<size_t>(n.row - 1)] -= 1;
    p = Partition(parts);
    return Multipartition(comps);
}

namespace detail {

/// Partitions of n with parts <= cap, in descending lexicographic order.
inline void partitions_of(long long n, long long cap,
                          std::vector<long long>& acc,
                          const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition(acc));
        return;
    }
    for (long long first = std::min(n, cap); first >= 1; --first) {
        acc.push_back(first);
        partitions_of(n - first, first, acc, fn);
        acc.pop_back();
    }
}

inline void multipartitions_rec(long long n, int level,
                                std::vector<Partition>& comps,
                                const std::function<void(const Multipartition&)>& fn) {
    if (level == 1) {
        std::vector<long long> acc;
        partitions_of(n, n == 0 ? 1 : n, acc, [&](const Partition& p) {
            comps.push_back(p);
            fn(Multipartition(comps));
            comps.pop_back();
        });
        return;
    }
    for (long long k = 0; k <= n; ++k) {
        std::vector<long long> acc;
        partitions_of(k, k == 0 ? 1 : k, acc, [&](const Partition& p) {
            comps.push_back(p);
            multipartitions_rec(n - k, level - 1, comps, fn);
            comps.pop_back();
        });
    }
}

} // namespace detail

/// Visit every level-ell multipartition of n exactly once.  Order:
/// component sizes in ascending lexicographic order, then parts of each
/// component in descending lexicographic order.
inline void for_each_multipartition(long long n, const QuiverData& q,
                                    const std::function<void(const Multipartition&)>& fn,
                                    const Bounds& bounds = Bounds{}) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    bounds.check(n, q.level());
    std::vector<Partition> comps;
    detail::multipartitions_rec(n, q.level(), comps, fn);
}

inline std::vector<Multipartition> enumerate_multipartitions(long long n, const QuiverData& q,
                                                             const Bounds& bounds = Bounds{}) {
    std::vector<Multipartition> out;
    for_each_multipartition(n, q, [&](const Multipartition& mp) { out.push_back(mp); }, bounds);
    return out;
}

/// Row-difference bound lambda_b - lambda_{b+1} < e in every component.
inline bool is_e_restricted(const Multipartition& mp, const QuiverData& q) {
    if (q.e() == 0) throw std::invalid_argument("e-restriction requires e >= 2");
    mp.require_compatible(q);
    for (const Partition& p : mp.components())
        for (long long b = 1; b <= p.rows(); ++b)
            if (p.part(b) - p.part(b + 1) >= q.e()) return false;
    return true;
}

/// Residue diagram: one string per row per component (digits concatenated
/// when residues are single characters, space-separated otherwise).
inline std::vector<std::vector<std::string>> residue_diagram(const Multipartition& mp,
                                                             const QuiverData& q) {
    mp.require_compatible(q);
    bool compact = q.e() >= 2 && q.e() <= 10;
    std::vector<std::vector<std::string>> out;
    for (int j = 1; j <= mp.level(); ++j) {
        const Partition& p = mp.component(j);
        std::vector<std::string> rows;
        for (long long b = 1; b <= p.rows(); ++b) {
            std::string row;
            for (long long c = 1; c <= p.part(b); ++c) {
                if (!row.empty() && !compact) row += ' ';
                row += std::to_string(residue(Node{b, c, j}, q));
            }
            rows.push_back(row);
        }
        out.push_back(rows);
    }
    return out;
}

/// Compact text form, e.g. "((2,1),())".
inline std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) os << ',';
        os << p.parts()[i];
    }
    os << ')';
    return os.str();
}

inline std::string to_string(const Multipartition& mp) {
    if (mp.level() == 1) return to_string(mp.component(1));
    std::ostringstream os;
    os << '(';
    for (int j = 1; j <= mp.level(); ++j) {
        if (j > 1) os << ',';
        os << to_string(mp.component(j));
    }
    os << ')';
    return os.str();
}

} // namespace akc
