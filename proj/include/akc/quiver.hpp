#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace akc {

/// Raised when a request exceeds the configured enumeration bounds.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal cross-check fails (two routes to the same value
/// disagree, a certified search comes back empty, ...).
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Enumeration guards.  n is the total size of a multipartition, level the
/// number of components.
struct Bounds {
    long long max_n = 16;
    int max_level = 6;

    void check(long long n, int level) const {
        if (n > max_n)
            throw resource_limit_error("size " + std::to_string(n) +
                                       " exceeds bound " + std::to_string(max_n));
        if (level > max_level)
            throw resource_limit_error("level " + std::to_string(level) +
                                       " exceeds bound " + std::to_string(max_level));
    }
};

/// Root datum of the quiver of type A_infinity (e = 0) or A^{(1)}_{e-1}
/// (e >= 2), together with a multicharge.  The dominant weight Lambda is
/// recovered from the multicharge: <Lambda, alpha_i> counts the entries of
/// kappa congruent to i mod e.
class QuiverData {
public:
    QuiverData(int e, std::vector<long long> kappa)
        : e_(e), kappa_(std::move(kappa)) {
        if (e_ != 0 && e_ < 2)
            throw std::invalid_argument("quantum characteristic must be 0 or >= 2");
        if (kappa_.empty())
            throw std::invalid_argument("multicharge must be nonempty");
    }

    int e() const { return e_; }
    int level() const { return static_cast<int>(kappa_.size()); }
    const std::vector<long long>& kappa() const { return kappa_; }

    /// Reduce an integer into the residue set I (identity when e = 0,
    /// representative in [0, e) when e >= 2).
    long long reduce(long long x) const {
        if (e_ == 0) return x;
        long long r = x % e_;
        return r < 0 ? r + e_ : r;
    }

    /// <Lambda, alpha_i^vee> = #{s : kappa_s = i mod e}.
    long long lambda_mult(long long i) const {
        long long ri = reduce(i);
        long long count = 0;
        for (long long k : kappa_)
            if (reduce(k) == ri) ++count;
        return count;
    }

    /// Cartan entry a_{ij}.  For e = 2 the two off-diagonal entries are -2;
    /// otherwise adjacent vertices pair to -1.
    long long cartan(long long i, long long j) const {
        long long ri = reduce(i), rj = reduce(j);
        if (ri == rj) return 2;
        if (e_ == 0) return (ri - rj == 1 || rj - ri == 1) ? -1 : 0;
        if (e_ == 2) return -2;
        if (reduce(ri + 1) == rj || reduce(rj + 1) == ri) return -1;
        return 0;
    }

    bool operator==(const QuiverData& o) const {
        return e_ == o.e_ && kappa_ == o.kappa_;
    }

private:
    int e_;
    std::vector<long long> kappa_;
};

} // namespace akc
