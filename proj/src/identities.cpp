#include "bernid/identities.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "bernid/opcalc.hpp"
#include "bernid/special.hpp"

namespace bernid {

// ---------------------------------------------------------------- residuals

bool is_zero(const Residual& r) {
    return std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::vector<Rat>>)
                return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c.is_zero(); });
            else
                return v.is_zero();
        },
        r);
}

std::string to_string(const Residual& r) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rat>) {
                return v.str();
            } else if constexpr (std::is_same_v<T, std::vector<Rat>>) {
                std::string s = "[";
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
                return s + "]";
            } else {
                return bernid::to_string(v);
            }
        },
        r);
}

std::string_view to_string(Arity a) {
    switch (a) {
        case Arity::scalar: return "scalar";
        case Arity::univariate: return "univariate";
        case Arity::bivariate: return "bivariate";
    }
    return "?";
}

bool ParamDomain::contains(const Params& prm) const {
    if (prm.n < min_n) return false;
    if (uses_p ? prm.p < 0 : prm.p != 0) return false;
    if (uses_q ? prm.q < min_q : prm.q != 0) return false;
    return true;
}

std::string ParamDomain::describe() const {
    std::string s = "n >= " + std::to_string(min_n);
    if (uses_p) s += ", p >= 0";
    if (uses_q) s += ", q >= " + std::to_string(min_q);
    return s;
}

namespace {

// ---------------------------------------------------------------- term memo

enum class Arg { x, y, x_minus_y, y_minus_x, x_plus_y, minus_y };

// B_k and E_k evaluated at the linear arguments that occur in the bivariate
// identities, memoized for the duration of one residual build.
class Terms {
   public:
    const Poly2& B(Arg a, long k) { return get('B', a, k); }
    const Poly2& E(Arg a, long k) { return get('E', a, k); }

   private:
    const Poly2& get(char family, Arg a, long k) {
        auto key = std::make_tuple(family, a, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const Poly1& p = family == 'B' ? bernoulli_poly(k) : euler_poly(k);
        return memo_.emplace(key, evaluate(p, a)).first->second;
    }

    static Poly2 evaluate(const Poly1& p, Arg a) {
        switch (a) {
            case Arg::x: return to_poly2(p, Axis::x);
            case Arg::y: return to_poly2(p, Axis::y);
            case Arg::minus_y: return to_poly2(compose_affine(p, Rat(-1), Rat(0)), Axis::y);
            case Arg::x_minus_y: return compose(p, Poly2::x() - Poly2::y());
            case Arg::y_minus_x: return compose(p, Poly2::y() - Poly2::x());
            case Arg::x_plus_y: return compose(p, Poly2::x() + Poly2::y());
        }
        throw std::logic_error("unreachable");
    }

    std::map<std::tuple<char, Arg, long>, Poly2> memo_;
};

const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();
const Poly2 XmY = X - Y;

Rat inv(long v) { return Rat(1, v); }

// ---------------------------------------------------------------- scalar

// Miki: conv - binomial conv of B_k B_{n-k}/(k(n-k)) = (2/n) H_n B_n.
Residual miki(const Params& prm) {
    const long n = prm.n;
    Rat lhs;
    for (long k = 2; k <= n - 2; ++k) {
        Rat t = bernoulli_number(k) * bernoulli_number(n - k) / Rat(k * (n - k));
        lhs += t - binomial(n, k) * t;
    }
    return lhs - Rat(2, n) * harmonic(n) * bernoulli_number(n);
}

Residual matiyasevich_harmonic(const Params& prm) {
    const long n = prm.n;
    Rat lhs;
    for (long k = 2; k <= n - 2; ++k) {
        Rat t = bernoulli_number(k) / Rat(k) * bernoulli_number(n - k);
        lhs += t - binomial(n, k) * t;
    }
    return lhs - harmonic(n) * bernoulli_number(n);
}

Residual matiyasevich_quadratic(const Params& prm) {
    const long n = prm.n;
    Rat conv, bconv;
    for (long k = 2; k <= n - 2; ++k) {
        Rat t = bernoulli_number(k) * bernoulli_number(n - k);
        conv += t;
        bconv += binomial(n + 2, k) * t;
    }
    return Rat(n + 2) * conv - Rat(2) * bconv - Rat(n * (n + 1)) * bernoulli_number(n);
}

// Three expressions in the midpoint values bbar; residual is (first - second, first - third).
Residual faber_pandharipande(const Params& prm) {
    const long n = prm.n;
    Rat first, conv;
    for (long k = 2; k <= n - 2; ++k) {
        first += bbar(k) / Rat(k) * bbar(n - k);
        conv += bbar(k) * bbar(n - k) / Rat(k * (n - k));
    }
    Rat second = Rat(n, 2) * conv;
    Rat third = harmonic(n - 1) * bbar(n);
    for (long k = 2; k <= n; ++k) third += binomial(n, k) * bernoulli_number(k) / Rat(k) * bbar(n - k);
    return std::vector<Rat>{first - second, first - third};
}

// ---------------------------------------------------------------- bivariate, Bernoulli

// Pole (x-y).
Residual bivariate_harmonic(const Params& prm) {
    const long n = prm.n;
    Terms t;
    Poly2 body;
    for (long k = 1; k <= n - 1; ++k) body += t.B(Arg::x, k) * t.B(Arg::y, n - k) * inv(k * (n - k));
    for (long l = 1; l <= n; ++l)
        body -= (t.B(Arg::x_minus_y, l) * t.B(Arg::y, n - l) + t.B(Arg::y_minus_x, l) * t.B(Arg::x, n - l)) *
                (binomial(n - 1, l - 1) / Rat(l * l));
    body -= (t.B(Arg::x, n) + t.B(Arg::y, n)) * (harmonic(n - 1) / Rat(n));
    return XmY * body - (t.B(Arg::x, n) - t.B(Arg::y, n)) * inv(n);
}

// n times entry 1.4, with n/(k(n-k)) = 1/k + 1/(n-k) split into the two
// orientations of the convolution. When `literal` is set the convolution is
// written 2 sum B_k(x)/k B_{n-k}(y) instead, which only agrees on x = y.
// Pole (x-y).
Residual rescaled_bivariate_miki(const Params& prm, bool literal) {
    const long n = prm.n;
    Terms t;
    Poly2 body;
    for (long k = 1; k <= n - 1; ++k) {
        if (literal)
            body += t.B(Arg::x, k) * t.B(Arg::y, n - k) * Rat(2, k);
        else
            body += (t.B(Arg::x, k) * t.B(Arg::y, n - k) + t.B(Arg::y, k) * t.B(Arg::x, n - k)) * inv(k);
    }
    body -= (t.B(Arg::x, n) + t.B(Arg::y, n)) * harmonic(n - 1);
    for (long l = 1; l <= n; ++l)
        body -= (t.B(Arg::x_minus_y, l) * t.B(Arg::y, n - l) + t.B(Arg::y_minus_x, l) * t.B(Arg::x, n - l)) *
                (binomial(n, l) / Rat(l));
    return XmY * body - (t.B(Arg::x, n) - t.B(Arg::y, n));
}

Residual bivariate_harmonic_rescaled(const Params& prm) { return rescaled_bivariate_miki(prm, false); }
Residual bivariate_harmonic_rescaled_printed(const Params& prm) { return rescaled_bivariate_miki(prm, true); }

// Pole (n+2)(x-y)^3.
Residual bivariate_quadratic(const Params& prm) {
    const long n = prm.n;
    Terms t;
    Poly2 body;
    for (long k = 0; k <= n; ++k) body += t.B(Arg::x, k) * t.B(Arg::y, n - k);
    for (long l = 0; l <= n; ++l)
        body -= (t.B(Arg::x_minus_y, l) * t.B(Arg::y, n - l) + t.B(Arg::y_minus_x, l) * t.B(Arg::x, n - l)) *
                (binomial(n + 1, l + 1) / Rat(l + 2));
    const Poly2 d3 = XmY * XmY * XmY;
    return Rat(n + 2) * (d3 * body) - Rat(n + 2) * (XmY * (t.B(Arg::x, n + 1) + t.B(Arg::y, n + 1))) +
           Rat(2) * (t.B(Arg::x, n + 2) - t.B(Arg::y, n + 2));
}

// Entry 1.4 with y replaced by x + y. Pole y.
Residual bivariate_harmonic_shifted(const Params& prm) {
    const long n = prm.n;
    Terms t;
    Poly2 body;
    for (long k = 1; k <= n - 1; ++k) body += t.B(Arg::x_plus_y, k) * t.B(Arg::x, n - k) * inv(k * (n - k));
    for (long l = 1; l <= n; ++l)
        body -= (t.B(Arg::y, l) * t.B(Arg::x, n - l) + t.B(Arg::minus_y, l) * t.B(Arg::x_plus_y, n - l)) *
                (binomial(n - 1, l - 1) / Rat(l * l));
    body -= (t.B(Arg::x_plus_y, n) + t.B(Arg::x, n)) * (harmonic(n - 1) / Rat(n));
    return Y * body - (t.B(Arg::x_plus_y, n) - t.B(Arg::x, n)) * inv(n);
}

// ---------------------------------------------------------------- bivariate, Euler

// Pole (x-y).
Residual bivariate_euler_square(const Params& prm) {
    const long n = prm.n;
    Terms t;
    Poly2 body;
    for (long k = 0; k <= n; ++k) body += t.E(Arg::x, k) * t.E(Arg::y, n - k);
    for (long l = 0; l <= n + 1; ++l)
        body += (t.E(Arg::x_minus_y, l) * t.B(Arg::y, n + 1 - l) + t.E(Arg::y_minus_x, l) * t.B(Arg::x, n + 1 - l)) *
                (Rat(2) * binomial(n + 1, l) / Rat(l + 1));
    return XmY * body - (t.B(Arg::x, n + 2) - t.B(Arg::y, n + 2)) * Rat(4, n + 2);
}

// Pole (x-y).
Residual bivariate_mixed_harmonic(const Params& prm) {
    const long n = prm.n;
    Terms t;
    Poly2 body;
    for (long k = 1; k <= n; ++k) body += t.B(Arg::x, k) * t.E(Arg::y, n - k) * inv(k);
    body -= t.E(Arg::y, n) * harmonic(n);
    for (long l = 1; l <= n; ++l)
        body -= (t.B(Arg::x_minus_y, l) * t.E(Arg::y, n - l) * inv(l) -
                 t.E(Arg::y_minus_x, l - 1) * t.E(Arg::x, n - l) * Rat(1, 2)) *
                binomial(n, l);
    return XmY * body - (t.E(Arg::x, n) - t.E(Arg::y, n));
}

// Pole (x-y)^2.
Residual bivariate_mixed(const Params& prm) {
    const long n = prm.n;
    Terms t;
    Poly2 body;
    for (long k = 0; k <= n; ++k) body += t.B(Arg::x, k) * t.E(Arg::y, n - k);
    for (long l = 1; l <= n; ++l)
        body -= (t.B(Arg::x_minus_y, l) * t.E(Arg::y, n - l) -
                 t.E(Arg::y_minus_x, l - 1) * t.E(Arg::x, n - l) * Rat(1, 2)) *
                binomial(n + 1, l + 1);
    body -= t.E(Arg::y, n) * Rat(n + 1);
    return XmY * XmY * body - XmY * t.E(Arg::x, n) * Rat(n + 1) + (t.E(Arg::x, n + 1) - t.E(Arg::y, n + 1));
}

// Entry 1.8 with y replaced by x + y. Pole y.
Residual bivariate_euler_square_shifted(const Params& prm) {
    const long n = prm.n;
    Terms t;
    Poly2 body;
    for (long k = 0; k <= n; ++k) body += t.E(Arg::x_plus_y, k) * t.E(Arg::x, n - k);
    for (long l = 0; l <= n + 1; ++l)
        body += (t.E(Arg::y, l) * t.B(Arg::x, n + 1 - l) + t.E(Arg::minus_y, l) * t.B(Arg::x_plus_y, n + 1 - l)) *
                (Rat(2) * binomial(n + 1, l) / Rat(l + 1));
    return Y * body - (t.B(Arg::x_plus_y, n + 2) - t.B(Arg::x, n + 2)) * Rat(4, n + 2);
}

// Entry 1.9 with x -> x + y, y -> x. Pole y.
Residual bivariate_mixed_harmonic_shifted(const Params& prm) {
    const long n = prm.n;
    Terms t;
    Poly2 body;
    for (long k = 1; k <= n; ++k) body += t.B(Arg::x_plus_y, k) * t.E(Arg::x, n - k) * inv(k);
    body -= t.E(Arg::x, n) * harmonic(n);
    for (long l = 1; l <= n; ++l)
        body -= (t.B(Arg::y, l) * t.E(Arg::x, n - l) * inv(l) -
                 t.E(Arg::minus_y, l - 1) * t.E(Arg::x_plus_y, n - l) * Rat(1, 2)) *
                binomial(n, l);
    return Y * body - (t.E(Arg::x_plus_y, n) - t.E(Arg::x, n));
}

// ---------------------------------------------------------------- univariate

Residual univariate_harmonic(const Params& prm) {
    const long n = prm.n;
    Poly1 r;
    for (long k = 1; k <= n - 1; ++k) r += bernoulli_poly(k) * bernoulli_poly(n - k) * inv(k * (n - k));
    for (long l = 2; l <= n; ++l)
        r -= bernoulli_poly(n - l) * (Rat(2) * binomial(n - 1, l - 1) * bernoulli_number(l) / Rat(l * l));
    r -= bernoulli_poly(n) * (Rat(2, n) * harmonic(n - 1));
    return r;
}

Residual univariate_quadratic(const Params& prm) {
    const long n = prm.n;
    Poly1 r;
    for (long k = 0; k <= n; ++k) r += bernoulli_poly(k) * bernoulli_poly(n - k);
    for (long l = 2; l <= n; ++l)
        r -= bernoulli_poly(n - l) * (Rat(2) * binomial(n + 1, l + 1) * bernoulli_number(l) / Rat(l + 2));
    r -= bernoulli_poly(n) * Rat(n + 1);
    return r;
}

Residual univariate_euler_square(const Params& prm) {
    const long n = prm.n;
    Poly1 conv;
    for (long k = 0; k <= n; ++k) conv += euler_poly(k) * euler_poly(n - k);
    Poly1 rhs;
    for (long l = 2; l <= n + 2; ++l)
        rhs += bernoulli_poly(n + 2 - l) *
               (binomial(n + 2, l) * (pow(Rat(2), l) - Rat(1)) * bernoulli_number(l) / Rat(l));
    return conv * Rat(n + 2) - rhs * Rat(8);
}

Residual univariate_mixed_harmonic(const Params& prm) {
    const long n = prm.n;
    Poly1 r;
    for (long k = 1; k <= n; ++k) r += bernoulli_poly(k) * euler_poly(n - k) * inv(k);
    for (long l = 2; l <= n; ++l)
        r -= euler_poly(n - l) * (binomial(n, l) * pow(Rat(2), l) * bernoulli_number(l) / Rat(l));
    r -= euler_poly(n) * harmonic(n);
    return r;
}

Residual univariate_mixed(const Params& prm) {
    const long n = prm.n;
    Poly1 r;
    for (long k = 0; k <= n; ++k) r += bernoulli_poly(k) * euler_poly(n - k);
    for (long l = 2; l <= n; ++l)
        r -= euler_poly(n - l) *
             (binomial(n + 1, l + 1) * (pow(Rat(2), l) + Rat(l - 1)) * bernoulli_number(l) / Rat(l));
    r -= euler_poly(n) * Rat(n + 1);
    return r;
}

// ---------------------------------------------------------------- lemmas

Residual bernoulli_sum(const Params& prm) {
    auto s = lemma22_bernoulli_sum(prm.n);
    return s.lhs - s.rhs;
}

Residual bernoulli_sum_printed(const Params& prm) {
    auto s = lemma22_bernoulli_sum_as_printed(prm.n);
    return s.lhs - s.rhs;
}

Residual euler_sum(const Params& prm) {
    auto s = lemma22_euler_sum(prm.n);
    return s.lhs - s.rhs;
}

// One component per l in [1, n]: sum_{k=l}^n C(k-1, l-1) - C(n, l).
Residual chu(const Params& prm) {
    std::vector<Rat> out;
    for (long l = 1; l <= prm.n; ++l) {
        Rat sum;
        for (long k = l; k <= prm.n; ++k) sum += binomial(k - 1, l - 1);
        out.push_back(sum - binomial(prm.n, l));
    }
    return out;
}

// ---------------------------------------------------------------- Gamma-weighted

Residual gamma_weighted(const Params& prm) {
    const long n = prm.n, p = prm.p, q = prm.q;
    Poly1 lhs;
    for (long k = 1; k <= n - 1; ++k) {
        // Gamma(k+p)/k! = gamma_ratio(k, p)/k
        Rat w = gamma_ratio(k, p) / Rat(k) * gamma_ratio(n - k, q) / Rat(n - k);
        lhs += bernoulli_poly(k) * bernoulli_poly(n - k) * w;
    }
    lhs *= Rat(1) / gamma_ratio(n, p + q);

    Poly1 rhs;
    for (long l = 2; l <= n; ++l) {
        // Gamma(l+p) Gamma(q+1) / Gamma(l+p+q+1) = q! / gamma_ratio(l+p, q+1)
        Rat g = factorial(q) / gamma_ratio(l + p, q + 1) + factorial(p) / gamma_ratio(l + q, p + 1);
        rhs += bernoulli_poly(n - l) * (binomial(n - 1, l - 1) * bernoulli_number(l) / Rat(l) * g);
    }
    rhs += bernoulli_poly(n) * ((h_pq(n, p, q) + h_pq(n, q, p)) / Rat(n));
    return lhs - rhs;
}

Residual beta_hockey_stick(const Params& prm) {
    std::vector<Rat> out;
    for (long l = 1; l <= prm.n; ++l) out.push_back(beta_hockey_stick_residual(prm.n, l, prm.p, prm.q));
    return out;
}

Residual dunne_schubert(const Params& prm) { return dunne_schubert_residual(prm.n, prm.p); }

// ---------------------------------------------------------------- table

std::vector<IdentitySpec> make_catalog() {
    using A = Arity;
    auto dom = [](long min_n, bool p = false, bool q = false, long min_q = 0) {
        return ParamDomain{min_n, p, q, min_q};
    };
    std::vector<IdentitySpec> c;
    c.push_back({"1.1", A::scalar, "Miki: convolutions of B_k B_{n-k}/(k(n-k))", "1", dom(4), miki});
    c.push_back({"1.2", A::scalar, "Matiyasevich: convolutions of B_k/k B_{n-k}", "1", dom(4), matiyasevich_harmonic});
    c.push_back({"1.3", A::scalar, "Matiyasevich: (n+2) conv - 2 binomial conv", "1", dom(4), matiyasevich_quadratic});
    c.push_back({"1.4", A::bivariate, "bivariate Miki", "(x-y)", dom(2), bivariate_harmonic});
    c.push_back({"1.4prime", A::bivariate, "bivariate Miki, rescaled form", "(x-y)", dom(2), bivariate_harmonic_rescaled});
    IdentitySpec rescaled_printed{"1.4prime-as-printed", A::bivariate,
                                  "bivariate Miki, rescaled form with 2 sum B_k(x)/k B_{n-k}(y)", "(x-y)", dom(2),
                                  bivariate_harmonic_rescaled_printed};
    rescaled_printed.negative_control = true;
    c.push_back(std::move(rescaled_printed));
    c.push_back({"1.5", A::bivariate, "bivariate Matiyasevich", "(n+2)(x-y)^3", dom(2), bivariate_quadratic});
    c.push_back({"1.6", A::univariate, "Miki for B_n(x)", "1", dom(2), univariate_harmonic});
    c.push_back({"1.7", A::univariate, "Matiyasevich for B_n(x)", "1", dom(2), univariate_quadratic});
    c.push_back({"cor1.2", A::scalar, "Faber-Pandharipande form at x = 1/2", "1", dom(4), faber_pandharipande});
    c.push_back({"1.8", A::bivariate, "convolution of E_k(x) E_{n-k}(y)", "(x-y)", dom(1), bivariate_euler_square});
    c.push_back({"1.9", A::bivariate, "mixed B/E convolution with H_n", "(x-y)", dom(1), bivariate_mixed_harmonic});
    c.push_back({"1.10", A::bivariate, "mixed B/E convolution", "(x-y)^2", dom(1), bivariate_mixed});
    c.push_back({"1.11", A::univariate, "convolution of E_k(x) E_{n-k}(x)", "1", dom(0), univariate_euler_square});
    c.push_back({"1.12", A::univariate, "mixed B/E convolution with H_n, one variable", "1", dom(0), univariate_mixed_harmonic});
    c.push_back({"1.13", A::univariate, "mixed B/E convolution, one variable", "1", dom(0), univariate_mixed});
    c.push_back({"2.1", A::bivariate, "sum B_k(x+y)/k x^{n-k}", "1", dom(1), bernoulli_sum});
    IdentitySpec printed{"2.1-as-printed", A::bivariate, "sum B_k(x+y)/k x^{n-k} without C(n,l)", "1", dom(1),
                         bernoulli_sum_printed};
    printed.negative_control = true;
    c.push_back(std::move(printed));
    c.push_back({"2.2", A::bivariate, "sum E_k(x+y) x^{n-k}", "1", dom(0), euler_sum});
    c.push_back({"2.3", A::bivariate, "bivariate Miki, shifted", "y", dom(2), bivariate_harmonic_shifted});
    c.push_back({"2.4", A::bivariate, "Euler convolution, shifted", "y", dom(1), bivariate_euler_square_shifted});
    c.push_back({"2.5", A::bivariate, "mixed B/E convolution with H_n, shifted", "y", dom(1), bivariate_mixed_harmonic_shifted});
    c.push_back({"chu", A::scalar, "hockey stick sum, all 1 <= l <= n", "1", dom(1), chu});
    c.push_back({"3.1", A::univariate, "Gamma-weighted convolution of B_k(x)", "1", dom(2, true, true), gamma_weighted});
    c.push_back({"3.2", A::scalar, "beta-weighted hockey stick, all 1 <= l <= n", "1", dom(1, true, true, 1), beta_hockey_stick});
    c.push_back({"ds", A::scalar, "even-index Gamma-weighted identity (p = q, x = 0)", "1", dom(2, true), dunne_schubert});
    return c;
}

}  // namespace

// ---------------------------------------------------------------- public API

Rat beta_hockey_stick_residual(long n, long l, long p, long q) {
    if (l < 1 || l > n) throw DomainError("beta_hockey_stick_residual: requires 1 <= l <= n");
    if (p < 0 || q < 1) throw DomainError("beta_hockey_stick_residual: requires p >= 0, q >= 1");
    Rat sum;
    for (long k = l; k <= n; ++k) sum += binomial(n - l, k - l) * beta_int(k + p, n - k + q);
    return sum - beta_int(l + p, q);
}

Rat dunne_schubert_residual(long n, long p) {
    if (n < 2 || p < 0) throw DomainError("dunne_schubert_residual: requires n >= 2, p >= 0");
    Rat lhs;
    for (long k = 1; k <= n - 1; ++k)
        lhs += bernoulli_number(2 * k) * bernoulli_number(2 * n - 2 * k) / Rat(8 * k * (n - k)) *
               gamma_ratio(2 * k, p) * gamma_ratio(2 * n - 2 * k, p);
    lhs /= factorial(2 * n + 2 * p - 1);

    Rat rhs;
    for (long k = 1; k <= n; ++k)
        rhs += bernoulli_number(2 * k) * bernoulli_number(2 * n - 2 * k) /
               (factorial(2 * k) * factorial(2 * n - 2 * k) * gamma_ratio(2 * k + p, p + 1));
    rhs *= factorial(p);
    Rat betas;
    for (long l = 1; l <= 2 * n - 1; ++l) betas += beta_int(l + p, p + 1);
    rhs += bernoulli_number(2 * n) / factorial(2 * n) * betas;
    return lhs - rhs;
}

const std::vector<IdentitySpec>& catalog() {
    static const std::vector<IdentitySpec> c = make_catalog();
    return c;
}

std::vector<std::string> catalog_ids(bool include_negative_controls) {
    std::vector<std::string> ids;
    for (const auto& s : catalog())
        if (include_negative_controls || !s.negative_control) ids.push_back(s.id);
    return ids;
}

const IdentitySpec& find_identity(std::string_view id) {
    for (const auto& s : catalog())
        if (s.id == id) return s;
    std::string known;
    for (const auto& s : catalog()) known += (known.empty() ? "" : ", ") + s.id;
    throw UnknownIdentityError("unknown identity '" + std::string(id) + "'; known: " + known);
}

Residual build_residual(std::string_view id, const Params& prm) {
    const IdentitySpec& spec = find_identity(id);
    if (!spec.domain.contains(prm)) {
        std::ostringstream os;
        os << "identity " << spec.id << " is stated for " << spec.domain.describe() << "; got n=" << prm.n
           << " p=" << prm.p << " q=" << prm.q;
        throw DomainError(os.str());
    }
    return spec.builder(prm);
}

VerifyReport verify(std::string_view id, const Params& prm) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport r;
    r.id = std::string(id);
    r.params = prm;
    r.residual = build_residual(id, prm);
    r.outcome = is_zero(r.residual) ? Outcome::holds : Outcome::fails;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

std::vector<VerifyReport> verify_sweep(const std::vector<std::string>& ids, Range n, Range p, Range q,
                                       unsigned threads) {
    struct Item {
        const IdentitySpec* spec;
        Params prm;
    };
    std::vector<Item> items;
    for (const auto& id : ids) {
        const IdentitySpec& spec = find_identity(id);
        for (long nn = n.lo; nn <= n.hi; ++nn)
            for (long pp = p.lo; pp <= p.hi; ++pp)
                for (long qq = q.lo; qq <= q.hi; ++qq) items.push_back({&spec, {nn, pp, qq}});
    }

    std::vector<VerifyReport> out(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            const auto& it = items[i];
            try {
                if (it.spec->domain.contains(it.prm)) {
                    out[i] = verify(it.spec->id, it.prm);
                } else {
                    out[i].id = it.spec->id;
                    out[i].params = it.prm;
                    out[i].outcome = Outcome::skipped;
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(items.size(), 1)));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace bernid
