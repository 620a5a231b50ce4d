// Test-only generators and oracles. Nothing here calls into the code paths
// it is used to check.
#ifndef BERNID_TESTS_SUPPORT_HPP
#define BERNID_TESTS_SUPPORT_HPP

#include <gmpxx.h>

#include <random>
#include <vector>

#include "bernid/arith.hpp"
#include "bernid/polyalg.hpp"

namespace bernid::testing {

inline Rat random_rat(std::mt19937_64& rng, long span = 20, long max_den = 12) {
    std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
    return Rat(num(rng), den(rng));
}

inline Poly1 random_poly1(std::mt19937_64& rng, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<Rat> c(deg(rng) + 1);
    for (auto& v : c) v = random_rat(rng);
    return Poly1(std::move(c));
}

inline Poly2 random_poly2(std::mt19937_64& rng, std::size_t max_dx, std::size_t max_dy) {
    std::uniform_int_distribution<std::size_t> dx(0, max_dx), dy(0, max_dy);
    std::size_t r = dx(rng) + 1, c = dy(rng) + 1;
    std::vector<Rat> d(r * c);
    for (auto& v : d) v = random_rat(rng, 6, 5);
    return Poly2(r, c, std::move(d));
}

/// Akiyama-Tanigawa; yields B_1 = +1/2, so the sign of index 1 is flipped
/// to match the z/(e^z - 1) convention.
inline std::vector<mpq_class> oracle_bernoulli_numbers(long n_max) {
    std::vector<mpq_class> out;
    std::vector<mpq_class> a(static_cast<std::size_t>(n_max) + 1);
    for (long m = 0; m <= n_max; ++m) {
        a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
        for (long j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
            a[static_cast<std::size_t>(j - 1)].canonicalize();
        }
        out.push_back(a[0]);
    }
    if (n_max >= 1) out[1] = -out[1];
    return out;
}

/// E_n(x) from the generating function identity (e^z + 1) sum E_n(x) z^n/n! = 2 e^{xz}:
/// E_n(x) = x^n - 1/2 sum_{k<n} C(n,k) E_k(x). Dense coefficient vectors over mpq.
inline std::vector<std::vector<mpq_class>> oracle_euler_polys(long n_max) {
    std::vector<std::vector<mpq_class>> e;
    for (long n = 0; n <= n_max; ++n) {
        std::vector<mpq_class> cur(static_cast<std::size_t>(n) + 1);
        cur[static_cast<std::size_t>(n)] = 1;
        for (long k = 0; k < n; ++k) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            for (std::size_t i = 0; i < e[static_cast<std::size_t>(k)].size(); ++i)
                cur[i] -= mpq_class(c) * e[static_cast<std::size_t>(k)][i] / 2;
        }
        e.push_back(std::move(cur));
    }
    return e;
}

inline Poly1 to_poly1(const std::vector<mpq_class>& c) {
    std::vector<Rat> v;
    for (const auto& q : c) v.emplace_back(q);
    return Poly1(std::move(v));
}

}  // namespace bernid::testing

#endif  // BERNID_TESTS_SUPPORT_HPP
