#include "bernid/polyalg.hpp"

#include <algorithm>
#include <sstream>

namespace bernid {

// ---------------------------------------------------------------- Poly1

Poly1::Poly1(Rat c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly1::Poly1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1 Poly1::monomial(std::size_t degree, const Rat& c) {
    if (c.is_zero()) return {};
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly1(std::move(v));
}

void Poly1::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly1::operator()(const Rat& at) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly1& Poly1::operator+=(const Poly1& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly1& Poly1::operator*=(const Rat& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
    mpq_class tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            mpq_mul(tmp.get_mpq_t(), a.c_[i].raw().get_mpq_t(), b.c_[j].raw().get_mpq_t());
            out[i + j] += tmp;
        }
    }
    std::vector<Rat> res;
    res.reserve(out.size());
    for (auto& v : out) res.emplace_back(v);
    return Poly1(std::move(res));
}

Poly1 derivative(const Poly1& p) {
    if (p.degree() < 1) return {};
    std::vector<Rat> out(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * Rat(static_cast<long>(i));
    return Poly1(std::move(out));
}

Poly1 compose_affine(const Poly1& p, const Rat& a, const Rat& b) {
    // Horner in the linear form a*x + b.
    const Poly1 lin({b, a});
    Poly1 acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * lin + Poly1(*it);
    return acc;
}

// ---------------------------------------------------------------- Poly2

Poly2::Poly2(Rat c) {
    if (!c.is_zero()) {
        rows_ = cols_ = 1;
        data_.push_back(std::move(c));
    }
}

Poly2::Poly2(std::size_t rows, std::size_t cols, std::vector<Rat> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("Poly2: data size does not match rows*cols");
    if (rows_ == 0 || cols_ == 0) {
        rows_ = cols_ = 0;
        data_.clear();
    }
    trim();
}

Poly2 Poly2::monomial(std::size_t i, std::size_t j, const Rat& c) {
    if (c.is_zero()) return {};
    std::vector<Rat> d((i + 1) * (j + 1));
    d[i * (j + 1) + j] = c;
    return Poly2(i + 1, j + 1, std::move(d));
}

void Poly2::resize_to_cover(std::size_t rows, std::size_t cols) {
    if (rows <= rows_ && cols <= cols_) return;
    std::size_t nr = std::max(rows, rows_), nc = std::max(cols, cols_);
    std::vector<Rat> d(nr * nc);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) d[i * nc + j] = std::move(data_[i * cols_ + j]);
    rows_ = nr;
    cols_ = nc;
    data_ = std::move(d);
}

void Poly2::trim() {
    std::size_t nr = 0, nc = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!data_[i * cols_ + j].is_zero()) {
                nr = std::max(nr, i + 1);
                nc = std::max(nc, j + 1);
            }
    if (nr == rows_ && nc == cols_) return;
    std::vector<Rat> d(nr * nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) d[i * nc + j] = std::move(data_[i * cols_ + j]);
    rows_ = nr;
    cols_ = nc;
    data_ = std::move(d);
}

Rat Poly2::operator()(const Rat& at_x, const Rat& at_y) const {
    Rat acc;
    for (std::size_t i = rows_; i-- > 0;) {
        acc *= at_x;
        acc += row(i)(at_y);
    }
    return acc;
}

Poly1 Poly2::row(std::size_t i) const {
    if (i >= rows_) return {};
    return Poly1(std::vector<Rat>(data_.begin() + static_cast<long>(i * cols_),
                                  data_.begin() + static_cast<long>((i + 1) * cols_)));
}

Poly1 Poly2::column(std::size_t j) const {
    if (j >= cols_) return {};
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = data_[i * cols_ + j];
    return Poly1(std::move(v));
}

Poly2& Poly2::operator+=(const Poly2& o) {
    resize_to_cover(o.rows_, o.cols_);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) at(i, j) += o.data_[i * o.cols_ + j];
    trim();
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    resize_to_cover(o.rows_, o.cols_);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) at(i, j) -= o.data_[i * o.cols_ + j];
    trim();
    return *this;
}

Poly2& Poly2::operator*=(const Rat& c) {
    if (c.is_zero()) {
        *this = Poly2();
        return *this;
    }
    for (auto& v : data_)
        if (!v.is_zero()) v *= c;
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t nr = a.rows_ + b.rows_ - 1, nc = a.cols_ + b.cols_ - 1;
    std::vector<mpq_class> out(nr * nc);
    mpq_class tmp;
    for (std::size_t i1 = 0; i1 < a.rows_; ++i1)
        for (std::size_t j1 = 0; j1 < a.cols_; ++j1) {
            const Rat& ca = a.data_[i1 * a.cols_ + j1];
            if (ca.is_zero()) continue;
            for (std::size_t i2 = 0; i2 < b.rows_; ++i2)
                for (std::size_t j2 = 0; j2 < b.cols_; ++j2) {
                    const Rat& cb = b.data_[i2 * b.cols_ + j2];
                    if (cb.is_zero()) continue;
                    mpq_mul(tmp.get_mpq_t(), ca.raw().get_mpq_t(), cb.raw().get_mpq_t());
                    out[(i1 + i2) * nc + (j1 + j2)] += tmp;
                }
        }
    std::vector<Rat> d;
    d.reserve(out.size());
    for (auto& v : out) d.emplace_back(v);
    return Poly2(nr, nc, std::move(d));
}

Poly2 to_poly2(const Poly1& p, Axis which) {
    const auto& c = p.coeffs();
    if (c.empty()) return {};
    if (which == Axis::x) return Poly2(c.size(), 1, c);
    return Poly2(1, c.size(), c);
}

Poly2 compose(const Poly1& p, const Poly2& arg) {
    Poly2 acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * arg;
        acc += Poly2(*it);
    }
    return acc;
}

Poly2 partial(const Poly2& P, Axis which) {
    if (P.is_zero()) return {};
    const std::size_t r = P.rows(), c = P.cols();
    if (which == Axis::x) {
        if (r < 2) return {};
        std::vector<Rat> d((r - 1) * c);
        for (std::size_t i = 1; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) d[(i - 1) * c + j] = P.coeff(i, j) * Rat(static_cast<long>(i));
        return Poly2(r - 1, c, std::move(d));
    }
    if (c < 2) return {};
    std::vector<Rat> d(r * (c - 1));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 1; j < c; ++j) d[i * (c - 1) + j - 1] = P.coeff(i, j) * Rat(static_cast<long>(j));
    return Poly2(r, c - 1, std::move(d));
}

Poly2 subst(const Poly2& P, Axis target, const Poly2& value) {
    // Horner over powers of the target indeterminate; each coefficient lives in the other one.
    Poly2 acc;
    const Axis other = target == Axis::x ? Axis::y : Axis::x;
    const std::size_t n = target == Axis::x ? P.rows() : P.cols();
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * value;
        acc += to_poly2(target == Axis::x ? P.row(k) : P.column(k), other);
    }
    return acc;
}

Poly1 subst_y_eq_x(const Poly2& P) {
    if (P.is_zero()) return {};
    std::vector<Rat> v(P.rows() + P.cols() - 1);
    for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j) v[i + j] += P.coeff(i, j);
    return Poly1(std::move(v));
}

Poly1 eval_y(const Poly2& P, const Rat& at_y) {
    std::vector<Rat> v(P.rows());
    for (std::size_t i = 0; i < P.rows(); ++i) v[i] = P.row(i)(at_y);
    return Poly1(std::move(v));
}

Poly2 swap_xy(const Poly2& P) {
    std::vector<Rat> d(P.rows() * P.cols());
    for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j) d[j * P.rows() + i] = P.coeff(i, j);
    return Poly2(P.cols(), P.rows(), std::move(d));
}

Poly2 div_xminusy(const Poly2& P) {
    // Synthetic division of sum_i a_i(y) x^i by (x - y):
    // b_{d-1} = a_d, b_{i-1} = a_i + y b_i, remainder a_0 + y b_0.
    if (P.is_zero()) return {};
    const std::size_t d = P.rows() - 1;
    const Poly1 ypoly = Poly1::x();
    std::vector<Poly1> b(d);
    Poly1 carry;
    for (std::size_t i = d; i >= 1; --i) {
        carry = P.row(i) + ypoly * carry;
        b[i - 1] = carry;
    }
    Poly1 remainder = P.row(0) + ypoly * carry;
    if (!remainder.is_zero())
        throw NotDivisibleError("div_xminusy: polynomial does not vanish on x = y (remainder " +
                                to_string(remainder, 'y') + ")");
    Poly2 out;
    for (std::size_t i = 0; i < d; ++i) out += Poly2::monomial(i, 0) * to_poly2(b[i], Axis::y);
    return out;
}

// ---------------------------------------------------------------- rendering

namespace {

// Appends " + c*mono" / " - c*mono" (or the leading form) to os.
void append_term(std::ostringstream& os, bool first, const Rat& c, const std::string& mono) {
    Rat mag = abs(c);
    if (first) {
        if (c.sign() < 0) os << '-';
    } else {
        os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
        os << mag.str();
    } else if (mag == Rat(1)) {
        os << mono;
    } else {
        os << mag.str() << '*' << mono;
    }
}

std::string power(char var, std::size_t e) {
    if (e == 0) return {};
    if (e == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const Poly1& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        if (p.coeffs()[i].is_zero()) continue;
        append_term(os, first, p.coeffs()[i], power(var, i));
        first = false;
    }
    return os.str();
}

std::string to_string(const Poly2& P) {
    if (P.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = P.rows(); i-- > 0;)
        for (std::size_t j = P.cols(); j-- > 0;) {
            Rat c = P.coeff(i, j);
            if (c.is_zero()) continue;
            std::string mono = power('x', i);
            std::string ym = power('y', j);
            if (!ym.empty()) mono = mono.empty() ? ym : mono + "*" + ym;
            append_term(os, first, c, mono);
            first = false;
        }
    return os.str();
}

}  // namespace bernid
