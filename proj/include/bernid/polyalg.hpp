#ifndef BERNID_POLYALG_HPP
#define BERNID_POLYALG_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "bernid/arith.hpp"

namespace bernid {

enum class Axis { x, y };

/// Raised by div_xminusy when the dividend does not vanish on x = y.
class NotDivisibleError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Rat; coeffs()[i] is the coefficient of x^i.
/// Trailing zeros are trimmed after every operation, the zero polynomial has no
/// coefficients.
class Poly1 {
   public:
    Poly1() = default;
    Poly1(Rat c);  // NOLINT(google-explicit-constructor)
    Poly1(int c) : Poly1(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly1(std::vector<Rat> coeffs);
    Poly1(std::initializer_list<Rat> coeffs) : Poly1(std::vector<Rat>(coeffs)) {}

    static Poly1 x() { return Poly1({Rat(0), Rat(1)}); }
    static Poly1 monomial(std::size_t degree, const Rat& c = Rat(1));

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    Rat operator()(const Rat& at) const;

    Poly1& operator+=(const Poly1& o);
    Poly1& operator-=(const Poly1& o);
    Poly1& operator*=(const Rat& c);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator-(Poly1 a) { return a *= Rat(-1); }
    friend Poly1 operator*(Poly1 a, const Rat& c) { return a *= c; }
    friend Poly1 operator*(const Rat& c, Poly1 a) { return a *= c; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    friend bool operator==(const Poly1&, const Poly1&) = default;

   private:
    void trim();
    std::vector<Rat> c_;
};

/// Dense bivariate polynomial over Rat, stored as a rectangle of
/// (deg_x + 1) x (deg_y + 1) coefficients; coeff(i, j) multiplies x^i y^j.
/// Zero rows/columns on the high fringe are trimmed after every operation.
class Poly2 {
   public:
    Poly2() = default;
    Poly2(Rat c);  // NOLINT(google-explicit-constructor)
    Poly2(int c) : Poly2(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    Poly2(std::size_t rows, std::size_t cols, std::vector<Rat> data);

    static Poly2 x() { return monomial(1, 0); }
    static Poly2 y() { return monomial(0, 1); }
    static Poly2 monomial(std::size_t i, std::size_t j, const Rat& c = Rat(1));

    long deg_x() const { return static_cast<long>(rows_) - 1; }
    long deg_y() const { return static_cast<long>(cols_) - 1; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_zero() const { return rows_ == 0; }
    Rat coeff(std::size_t i, std::size_t j) const {
        return (i < rows_ && j < cols_) ? data_[i * cols_ + j] : Rat(0);
    }

    Rat operator()(const Rat& at_x, const Rat& at_y) const;

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(const Rat& c);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator-(Poly2 a) { return a *= Rat(-1); }
    friend Poly2 operator*(Poly2 a, const Rat& c) { return a *= c; }
    friend Poly2 operator*(const Rat& c, Poly2 a) { return a *= c; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2&, const Poly2&) = default;

    /// Coefficient of x^i as a polynomial in y.
    Poly1 row(std::size_t i) const;
    /// Coefficient of y^j as a polynomial in x.
    Poly1 column(std::size_t j) const;

   private:
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    void resize_to_cover(std::size_t rows, std::size_t cols);
    void trim();

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

Poly1 derivative(const Poly1& p);
/// p(a*x + b), expanded.
Poly1 compose_affine(const Poly1& p, const Rat& a, const Rat& b);
/// p(x + b).
inline Poly1 shift(const Poly1& p, const Rat& b) { return compose_affine(p, Rat(1), b); }

/// Embeds p as a polynomial in the chosen indeterminate.
Poly2 to_poly2(const Poly1& p, Axis which);
/// p(arg) with arg bivariate, by Horner's rule.
Poly2 compose(const Poly1& p, const Poly2& arg);

Poly2 partial(const Poly2& P, Axis which);
/// Replaces the `target` indeterminate with `value` and expands.
Poly2 subst(const Poly2& P, Axis target, const Poly2& value);
/// P(x, x).
Poly1 subst_y_eq_x(const Poly2& P);
/// P(x, y) with y fixed to a number, as a polynomial in x.
Poly1 eval_y(const Poly2& P, const Rat& at_y);
Poly2 swap_xy(const Poly2& P);

/// Exact quotient P / (x - y). Throws NotDivisibleError when P(x, x) != 0.
Poly2 div_xminusy(const Poly2& P);

/// Descending powers with reduced fractions, e.g. "x^2 - x + 1/6".
std::string to_string(const Poly1& p, char var = 'x');
/// Terms ordered by descending x power then descending y power.
std::string to_string(const Poly2& P);

}  // namespace bernid

#endif  // BERNID_POLYALG_HPP
