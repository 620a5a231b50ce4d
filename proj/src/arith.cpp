#include "bernid/arith.hpp"

#include <ostream>
#include <stdexcept>

namespace bernid {

Rat::Rat(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    value_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    value_ /= o.value_;
    return *this;
}

Rat Rat::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rat::parse: empty integer in '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("Rat::parse: bad integer '" + std::string(s) + "'");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("Rat::parse: bad integer '" + std::string(s) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return mpz_class(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("Rat::parse: denominator must be positive in '" + std::string(text) + "'");
    return Rat(parse_int(text.substr(0, slash)), den);
}

std::string Rat::str() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, long e) {
    if (e < 0) return Rat(1) / pow(base, -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(num, den);
}

Rat binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return Rat(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(out);
}

Rat gamma_ratio(long a, long m) {
    if (a < 1) throw std::invalid_argument("gamma_ratio: a must be a positive integer");
    if (m < 0) throw std::invalid_argument("gamma_ratio: m must be nonnegative");
    mpz_class out = 1;
    for (long i = 0; i < m; ++i) out *= a + i;
    return Rat(out);
}

Rat factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(out);
}

Rat beta_int(long a, long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("beta_int: arguments must be positive integers");
    return factorial(a - 1) * factorial(b - 1) / factorial(a + b - 1);
}

}  // namespace bernid
