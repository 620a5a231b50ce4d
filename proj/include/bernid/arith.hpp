#ifndef BERNID_ARITH_HPP
#define BERNID_ARITH_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bernid {

/// Exact rational number. Always stored reduced with a positive denominator,
/// so equality is structural.
class Rat {
   public:
    Rat() = default;
    Rat(long v) : value_(v) {}                                // NOLINT(google-explicit-constructor)
    Rat(int v) : value_(static_cast<long>(v)) {}              // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& v) : value_(v) {}                    // NOLINT(google-explicit-constructor)
    Rat(const mpz_class& num, const mpz_class& den);
    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}
    explicit Rat(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Parses "a" or "a/b" (optional sign on a). Throws std::invalid_argument.
    static Rat parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string str() const;

    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

   private:
    mpq_class value_;
};

Rat abs(const Rat& r);
/// base^e for e >= 0, or the reciprocal power for e < 0.
Rat pow(const Rat& base, long e);

/// C(n, k); zero when k is outside [0, n].
Rat binomial(long n, long k);

/// Rising factorial a (a+1) ... (a+m-1) = Gamma(a+m)/Gamma(a). Requires a >= 1.
Rat gamma_ratio(long a, long m);

/// (a-1)! (b-1)! / (a+b-1)!. Only positive integer arguments are supported.
Rat beta_int(long a, long b);

/// n! for n >= 0.
Rat factorial(long n);

}  // namespace bernid

#endif  // BERNID_ARITH_HPP
