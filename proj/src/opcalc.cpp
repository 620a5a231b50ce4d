#include "bernid/opcalc.hpp"

#include <stdexcept>

#include "bernid/special.hpp"

namespace bernid {

Poly1 DiffOperator::operator()(const Poly1& p) const {
    Poly1 shifted = shift(p, Rat(1));
    return kind == DiffKind::delta ? shifted - p : shifted + p;
}

Poly2 DiffOperator::operator()(const Poly2& P) const {
    const Poly2 var = axis == Axis::x ? Poly2::x() : Poly2::y();
    Poly2 shifted = subst(P, axis, var + Poly2(1));
    return kind == DiffKind::delta ? shifted - P : shifted + P;
}

bool check_product_rules(const Poly1& P, const Poly1& Q) {
    const Poly1 PQ = P * Q;
    const Poly1 dP = delta(P), dQ = delta(Q);
    const Poly1 sP = delta_star(P), sQ = delta_star(Q);
    const Poly1 dPQ = delta(PQ);
    return dPQ == P * dQ + Q * dP + dP * dQ &&  //
           dPQ == sP * sQ - P * sQ - Q * sP &&  //
           delta_star(PQ) == dP * sQ + P * sQ - Q * dP;
}

namespace {

void require_positive(long n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": requires n >= 1");
}

IdentitySides bernoulli_sum(long n, bool with_binomial) {
    const Poly2 x = Poly2::x();
    const Poly2 xpy = x + Poly2::y();
    IdentitySides s;
    for (long k = 1; k <= n; ++k)
        s.lhs += compose(bernoulli_poly(k), xpy) * Poly2::monomial(static_cast<std::size_t>(n - k), 0, Rat(1, k));
    for (long l = 1; l <= n; ++l) {
        Rat c = with_binomial ? binomial(n, l) / Rat(l) : Rat(1, l);
        s.rhs += to_poly2(bernoulli_poly(l), Axis::y) * Poly2::monomial(static_cast<std::size_t>(n - l), 0, c);
    }
    s.rhs += Poly2::monomial(static_cast<std::size_t>(n), 0, harmonic(n));
    return s;
}

}  // namespace

IdentitySides lemma22_bernoulli_sum(long n) {
    require_positive(n, "lemma22_bernoulli_sum");
    return bernoulli_sum(n, true);
}

IdentitySides lemma22_bernoulli_sum_as_printed(long n) {
    require_positive(n, "lemma22_bernoulli_sum_as_printed");
    return bernoulli_sum(n, false);
}

IdentitySides lemma22_euler_sum(long n) {
    if (n < 0) throw std::invalid_argument("lemma22_euler_sum: requires n >= 0");
    const Poly2 xpy = Poly2::x() + Poly2::y();
    IdentitySides s;
    for (long k = 0; k <= n; ++k)
        s.lhs += compose(euler_poly(k), xpy) * Poly2::monomial(static_cast<std::size_t>(n - k), 0);
    for (long l = 0; l <= n; ++l)
        s.rhs += to_poly2(euler_poly(l), Axis::y) *
                 Poly2::monomial(static_cast<std::size_t>(n - l), 0, binomial(n + 1, l + 1));
    return s;
}

bool chu_identity(long n, long l) {
    if (l < 1 || l > n) throw std::invalid_argument("chu_identity: requires 1 <= l <= n");
    Rat sum;
    for (long k = l; k <= n; ++k) sum += binomial(k - 1, l - 1);
    return sum == binomial(n, l);
}

}  // namespace bernid
