#ifndef BERNID_SPECIAL_HPP
#define BERNID_SPECIAL_HPP

#include <deque>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include "bernid/arith.hpp"
#include "bernid/polyalg.hpp"

namespace bernid {

/// Thrown when two independent constructions of the same object disagree.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Append-only table of Bernoulli numbers (B_1 = -1/2), grown on demand with
/// sum_{k=0}^{n} C(n+1, k) B_k = 0. Safe for concurrent use; each entry is
/// computed once and never changes afterwards.
class BernoulliCache {
   public:
    BernoulliCache();

    Rat get(long n);
    /// Makes sure B_0..B_n are present.
    void ensure(long n);
    long highest() const;
    std::vector<Rat> snapshot() const;

    /// Index of the first entry of `values` that violates the recurrence
    /// (or B_0 != 1), or -1 when all entries are consistent.
    static long first_invalid(std::span<const Rat> values);

    /// Adopts validated values. Entries already present must agree.
    /// Throws std::invalid_argument when validation fails.
    void seed(std::span<const Rat> values);

   private:
    void extend_locked(long n);

    mutable std::shared_mutex mutex_;
    std::deque<Rat> table_;
};

/// Process-wide cache used by the free functions below.
BernoulliCache& bernoulli_cache();

Rat bernoulli_number(long n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}. Memoized; the reference stays valid for
/// the life of the process.
const Poly1& bernoulli_poly(long n);

/// E_n(x), memoized. Built from both euler_poly_via_bernoulli and
/// euler_poly_via_recurrence; throws ConsistencyError if they differ.
const Poly1& euler_poly(long n);
/// 2/(n+1) (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)).
Poly1 euler_poly_via_bernoulli(long n);
/// Solves E(x+1) + E(x) = 2x^n from the leading coefficient down.
Poly1 euler_poly_via_recurrence(long n);

Rat harmonic(long n);
/// (2^{1-k} - 1) B_k, which equals B_k(1/2).
Rat bbar(long k);
/// Closed form 2 (1 - 2^{l+1}) B_{l+1} / (l+1).
Rat euler_at_zero(long l);

/// sum_{k=1}^{n-1} beta(k+q, p+1). For p >= 1 the closed form
/// beta(p, q+1) - beta(p, n+q) is checked as well.
Rat h_pq(long n, long p, long q);
/// beta(p, q+1) - beta(p, n+q); requires p >= 1.
Rat h_pq_closed(long n, long p, long q);

}  // namespace bernid

#endif  // BERNID_SPECIAL_HPP
