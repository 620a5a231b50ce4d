#ifndef BERNID_OPCALC_HPP
#define BERNID_OPCALC_HPP

#include "bernid/polyalg.hpp"

namespace bernid {

enum class DiffKind {
    delta,       // f(t+1) - f(t)
    delta_star,  // f(t+1) + f(t)
};

/// Unit-step difference operator along one indeterminate; the other one is a
/// fixed parameter.
struct DiffOperator {
    DiffKind kind = DiffKind::delta;
    Axis axis = Axis::x;

    Poly1 operator()(const Poly1& p) const;
    Poly2 operator()(const Poly2& P) const;
};

inline constexpr DiffOperator delta{DiffKind::delta, Axis::x};
inline constexpr DiffOperator delta_star{DiffKind::delta_star, Axis::x};

inline Poly1 apply(const DiffOperator& op, const Poly1& p) { return op(p); }
inline Poly2 apply(const DiffOperator& op, const Poly2& P) { return op(P); }

/// Checks the three product rules
///   D(PQ)  = P D(Q) + Q D(P) + D(P) D(Q)
///   D(PQ)  = D*(P) D*(Q) - P D*(Q) - Q D*(P)
///   D*(PQ) = D(P) D*(Q) + P D*(Q) - Q D(P)
/// exactly for the given pair.
bool check_product_rules(const Poly1& P, const Poly1& Q);

struct IdentitySides {
    Poly2 lhs;
    Poly2 rhs;
};

/// sum_{k=1}^n B_k(x+y)/k x^{n-k}  vs  sum_{l=1}^n C(n,l) B_l(y)/l x^{n-l} + H_n x^n.
IdentitySides lemma22_bernoulli_sum(long n);
/// Same, with the C(n,l) factor dropped. Fails from n = 2 on.
IdentitySides lemma22_bernoulli_sum_as_printed(long n);
/// sum_{k=0}^n E_k(x+y) x^{n-k}  vs  sum_{l=0}^n C(n+1,l+1) E_l(y) x^{n-l}.
IdentitySides lemma22_euler_sum(long n);

/// sum_{k=l}^{n} C(k-1, l-1) == C(n, l). Requires 1 <= l <= n.
bool chu_identity(long n, long l);

}  // namespace bernid

#endif  // BERNID_OPCALC_HPP
