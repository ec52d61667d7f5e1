#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "akc/partition.hpp"
#include "akc/quiver.hpp"
#include "akc/scopes.hpp"

namespace akc {

/// Laurent polynomial in v with non-negative integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly one() { return monomial(0, 1); }

    static LaurentPoly monomial(long long exponent, long long coeff = 1) {
        LaurentPoly p;
        if (coeff < 0) throw std::invalid_argument("coefficients must be non-negative");
        if (coeff > 0) p.coeff_[exponent] = coeff;
        return p;
    }

    long long coeff(long long exponent) const {
        auto it = coeff_.find(exponent);
        return it == coeff_.end() ? 0 : it->second;
    }

    const std::map<long long, long long>& terms() const { return coeff_; }
    bool zero() const { return coeff_.empty(); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [d, c] : o.coeff_) coeff_[d] += c;
        return *this;
    }
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly p = *this;
        p += o;
        return p;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly p;
        for (const auto& [d1, c1] : coeff_)
            for (const auto& [d2, c2] : o.coeff_) p.coeff_[d1 + d2] += c1 * c2;
        return p;
    }

    /// Multiplication by v^d (the shift <d>).
    LaurentPoly shifted(long long d) const {
        LaurentPoly p;
        for (const auto& [e, c] : coeff_) p.coeff_[e + d] = c;
        return p;
    }

    long long eval_at_one() const {
        long long s = 0;
        for (const auto& [d, c] : coeff_) s += c;
        return s;
    }

    /// Invariance under v <-> v^{-1}.
    bool palindromic() const {
        for (const auto& [d, c] : coeff_)
            if (coeff(-d) != c) return false;
        return true;
    }

    bool operator==(const LaurentPoly&) const = default;

    /// "v^{3} + 2v + 2v^{-1} + v^{-3}"; "0" for the zero polynomial.
    std::string str() const {
        if (coeff_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
            auto [d, c] = *it;
            if (!first) os << " + ";
            first = false;
            if (c != 1 || d == 0) os << c;
            if (d == 1) os << "v";
            else if (d != 0) os << "v^{" << d << "}";
        }
        return os.str();
    }

private:
    std::map<long long, long long> coeff_;
};

/// Formal sum of v-shifted Specht labels: the Grothendieck shadow of a
/// graded filtration.
class GradedSum {
public:
    GradedSum() = default;

    void add(const Multipartition& mp, const LaurentPoly& p) {
        if (p.zero()) return;
        terms_[mp] += p;
    }

    GradedSum& operator+=(const GradedSum& o) {
        for (const auto& [mp, p] : o.terms_) terms_[mp] += p;
        return *this;
    }

    const std::map<Multipartition, LaurentPoly>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    long long mass() const {
        long long s = 0;
        for (const auto& [mp, p] : terms_) s += p.eval_at_one();
        return s;
    }

    bool operator==(const GradedSum&) const = default;

    /// "S^(2) + v^{-1} S^(1,1)", terms in descending label order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            for (auto t = it->second.terms().rbegin(); t != it->second.terms().rend(); ++t) {
                auto [d, c] = *t;
                if (!first) os << " + ";
                first = false;
                if (c != 1) os << c << " ";
                if (d == 1) os << "v ";
                else if (d != 0) os << "v^{" << d << "} ";
                os << "S^" << to_string(it->first);
            }
        }
        return os.str();
    }

private:
    std::map<Multipartition, LaurentPoly> terms_;
};

/// N^A: same-residue addable-minus-removable count strictly above A.
inline long long degree_above(const Multipartition& mp, const Node& a, const QuiverData& q) {
    auto add = addable_nodes(mp, q);
    if (std::find(add.begin(), add.end(), a) == add.end())
        throw std::invalid_argument("degree_above: node is not addable");
    long long i = residue(a, q);
    long long n = 0;
    for (const Node& x : addable_nodes(mp, q, i))
        if (above(x, a)) ++n;
    for (const Node& x : removable_nodes(mp, q, i))
        if (above(x, a)) --n;
    return n;
}

/// N_R: same-residue addable-minus-removable count strictly below R.
inline long long degree_below(const Multipartition& mp, const Node& r, const QuiverData& q) {
    auto rem = removable_nodes(mp, q);
    if (std::find(rem.begin(), rem.end(), r) == rem.end())
        throw std::invalid_argument("degree_below: node is not removable");
    long long i = residue(r, q);
    long long n = 0;
    for (const Node& x : addable_nodes(mp, q, i))
        if (above(r, x)) ++n;
    for (const Node& x : removable_nodes(mp, q, i))
        if (above(r, x)) --n;
    return n;
}

/// Graded shadow of i-Ind S^lambda: one factor per addable i-node.
inline GradedSum i_induce_specht(const Multipartition& mp, const QuiverData& q, long long i) {
    GradedSum out;
    for (const Node& a : addable_nodes(mp, q, i))
        out.add(add_node(mp, a), LaurentPoly::monomial(degree_above(mp, a, q)));
    return out;
}

/// Graded shadow of i-Res S^lambda: one factor per removable i-node.
inline GradedSum i_restrict_specht(const Multipartition& mp, const QuiverData& q, long long i) {
    GradedSum out;
    for (const Node& r : removable_nodes(mp, q, i))
        out.add(remove_node(mp, r), LaurentPoly::monomial(degree_below(mp, r, q)));
    return out;
}

inline GradedSum induce_specht(const Multipartition& mp, const QuiverData& q) {
    GradedSum out;
    for (const Node& a : addable_nodes(mp, q))
        out.add(add_node(mp, a), LaurentPoly::monomial(degree_above(mp, a, q)));
    return out;
}

inline GradedSum restrict_specht(const Multipartition& mp, const QuiverData& q) {
    GradedSum out;
    for (const Node& r : removable_nodes(mp, q))
        out.add(remove_node(mp, r), LaurentPoly::monomial(degree_below(mp, r, q)));
    return out;
}

/// Inversion counts |S_delta^k| for k = 0..delta(delta-1)/2, via the product
/// of q-integers [1][2]...[delta].
inline std::vector<long long> mahonian(long long delta) {
    if (delta < 0) throw std::invalid_argument("mahonian: delta must be >= 0");
    std::vector<long long> coeffs{1};
    for (long long j = 2; j <= delta; ++j) {
        std::vector<long long> next(coeffs.size() + static_cast<size_t>(j) - 1, 0);
        for (size_t k = 0; k < coeffs.size(); ++k)
            for (long long t = 0; t < j; ++t)
                next[k + static_cast<size_t>(t)] += coeffs[k];
        coeffs = std::move(next);
    }
    return coeffs;
}

/// Sum_k |S_delta^k| v^{r - 2k} with r = delta(delta-1)/2.
inline LaurentPoly divided_power_poly(long long delta) {
    auto counts = mahonian(delta);
    long long r = delta * (delta - 1) / 2;
    LaurentPoly p;
    for (size_t k = 0; k < counts.size(); ++k)
        p += LaurentPoly::monomial(r - 2 * static_cast<long long>(k), counts[k]);
    return p;
}

/// The divided-power image (i-Res)^{(delta)} D^lambda ~ Phi_i(lambda) with
/// the Mahonian multiplicity polynomial.  Refuses to compute unless the
/// abacus criterion certifies the block.
inline std::pair<Multipartition, LaurentPoly> divided_power_image(const Multipartition& mp,
                                                                  const QuiverData& q,
                                                                  long long i) {
    BlockKey key = block_key(mp, q);
    long long delta = hub_at(hub_of(key.alpha, q), i);
    if (delta < 0 || !alice_condition(key, q, i).holds)
        throw std::invalid_argument(
            "divided_power_image: the divided-power hypotheses are not certified "
            "for this block");
    if (delta == 0) return {mp, LaurentPoly::one()};
    return {phi_map(mp, q, i), divided_power_poly(delta)};
}

} // namespace akc
