#include "bernid/special.hpp"

#include <mutex>
#include <string>

namespace bernid {

namespace {

void require_nonnegative(long n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": index must be nonnegative");
}

// Memo table for polynomial sequences. std::deque keeps references stable
// while new entries are appended.
class PolyTable {
   public:
    template <class Build>
    const Poly1& get(long n, Build&& build) {
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<long>(table_.size())) return table_[static_cast<std::size_t>(n)];
        }
        std::unique_lock lock(mutex_);
        while (static_cast<long>(table_.size()) <= n) table_.push_back(build(static_cast<long>(table_.size())));
        return table_[static_cast<std::size_t>(n)];
    }

   private:
    std::shared_mutex mutex_;
    std::deque<Poly1> table_;
};

PolyTable& bernoulli_table() {
    static PolyTable t;
    return t;
}

PolyTable& euler_table() {
    static PolyTable t;
    return t;
}

}  // namespace

// ---------------------------------------------------------------- BernoulliCache

BernoulliCache::BernoulliCache() { table_.emplace_back(1); }

void BernoulliCache::extend_locked(long n) {
    while (static_cast<long>(table_.size()) <= n) {
        const long m = static_cast<long>(table_.size());
        if (m >= 3 && m % 2 == 1) {
            table_.emplace_back(0);
            continue;
        }
        Rat sum;
        for (long k = 0; k < m; ++k) {
            const Rat& bk = table_[static_cast<std::size_t>(k)];
            if (!bk.is_zero()) sum += binomial(m + 1, k) * bk;
        }
        table_.push_back(-sum / Rat(m + 1));
    }
}

void BernoulliCache::ensure(long n) {
    {
        std::shared_lock lock(mutex_);
        if (n < static_cast<long>(table_.size())) return;
    }
    std::unique_lock lock(mutex_);
    extend_locked(n);
}

Rat BernoulliCache::get(long n) {
    require_nonnegative(n, "bernoulli_number");
    ensure(n);
    std::shared_lock lock(mutex_);
    return table_[static_cast<std::size_t>(n)];
}

long BernoulliCache::highest() const {
    std::shared_lock lock(mutex_);
    return static_cast<long>(table_.size()) - 1;
}

std::vector<Rat> BernoulliCache::snapshot() const {
    std::shared_lock lock(mutex_);
    return {table_.begin(), table_.end()};
}

long BernoulliCache::first_invalid(std::span<const Rat> values) {
    if (values.empty()) return -1;
    if (values[0] != Rat(1)) return 0;
    for (std::size_t n = 1; n < values.size(); ++n) {
        Rat sum;
        for (std::size_t k = 0; k <= n; ++k)
            if (!values[k].is_zero()) sum += binomial(static_cast<long>(n) + 1, static_cast<long>(k)) * values[k];
        if (!sum.is_zero()) return static_cast<long>(n);
    }
    return -1;
}

void BernoulliCache::seed(std::span<const Rat> values) {
    if (long bad = first_invalid(values); bad >= 0)
        throw std::invalid_argument("Bernoulli cache entry " + std::to_string(bad) + " fails the recurrence");
    std::unique_lock lock(mutex_);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i < table_.size()) {
            if (table_[i] != values[i])
                throw std::invalid_argument("Bernoulli cache entry " + std::to_string(i) + " disagrees with computed value");
        } else {
            table_.push_back(values[i]);
        }
    }
}

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

// ---------------------------------------------------------------- sequences

Rat bernoulli_number(long n) { return bernoulli_cache().get(n); }

const Poly1& bernoulli_poly(long n) {
    require_nonnegative(n, "bernoulli_poly");
    return bernoulli_table().get(n, [](long m) {
        bernoulli_cache().ensure(m);
        std::vector<Rat> c(static_cast<std::size_t>(m) + 1);
        for (long k = 0; k <= m; ++k) c[static_cast<std::size_t>(m - k)] = binomial(m, k) * bernoulli_number(k);
        return Poly1(std::move(c));
    });
}

Poly1 euler_poly_via_bernoulli(long n) {
    require_nonnegative(n, "euler_poly");
    const Poly1& b = bernoulli_poly(n + 1);
    Poly1 half = compose_affine(b, Rat(1, 2), Rat(0));
    return (b - pow(Rat(2), n + 1) * half) * Rat(2, n + 1);
}

Poly1 euler_poly_via_recurrence(long n) {
    require_nonnegative(n, "euler_poly");
    // Coefficient of x^m in E(x+1) + E(x) is 2 e_m + sum_{i>m} C(i,m) e_i.
    std::vector<Rat> e(static_cast<std::size_t>(n) + 1);
    e[static_cast<std::size_t>(n)] = Rat(1);
    for (long m = n - 1; m >= 0; --m) {
        Rat sum;
        for (long i = m + 1; i <= n; ++i) {
            const Rat& ei = e[static_cast<std::size_t>(i)];
            if (!ei.is_zero()) sum += binomial(i, m) * ei;
        }
        e[static_cast<std::size_t>(m)] = -sum / Rat(2);
    }
    return Poly1(std::move(e));
}

const Poly1& euler_poly(long n) {
    require_nonnegative(n, "euler_poly");
    return euler_table().get(n, [](long m) {
        Poly1 a = euler_poly_via_bernoulli(m);
        Poly1 b = euler_poly_via_recurrence(m);
        if (a != b) throw ConsistencyError("euler_poly: constructions disagree at n = " + std::to_string(m));
        return a;
    });
}

Rat harmonic(long n) {
    require_nonnegative(n, "harmonic");
    Rat h;
    for (long k = 1; k <= n; ++k) h += Rat(1, k);
    return h;
}

Rat bbar(long k) {
    require_nonnegative(k, "bbar");
    return (pow(Rat(2), 1 - k) - Rat(1)) * bernoulli_number(k);
}

Rat euler_at_zero(long l) {
    require_nonnegative(l, "euler_at_zero");
    return Rat(2) * (Rat(1) - pow(Rat(2), l + 1)) * bernoulli_number(l + 1) / Rat(l + 1);
}

Rat h_pq_closed(long n, long p, long q) {
    if (p < 1) throw std::invalid_argument("h_pq_closed: requires p >= 1");
    return beta_int(p, q + 1) - beta_int(p, n + q);
}

Rat h_pq(long n, long p, long q) {
    if (n < 2) throw std::invalid_argument("h_pq: requires n >= 2");
    if (p < 0 || q < 0) throw std::invalid_argument("h_pq: requires p, q >= 0");
    Rat sum;
    for (long k = 1; k <= n - 1; ++k) sum += beta_int(k + q, p + 1);
    if (p >= 1 && sum != h_pq_closed(n, p, q))
        throw ConsistencyError("h_pq: defining sum and closed form disagree");
    return sum;
}

}  // namespace bernid
