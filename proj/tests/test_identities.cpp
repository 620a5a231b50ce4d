#include <doctest.h>

#include <set>

#include "bernid/identities.hpp"
#include "bernid/special.hpp"
#include "support.hpp"

using namespace bernid;

namespace {

template <class T>
T as(const Residual& r) {
    REQUIRE(std::holds_alternative<T>(r));
    return std::get<T>(r);
}

Poly2 res2(const char* id, long n) { return as<Poly2>(build_residual(id, {n, 0, 0})); }
Poly1 res1(const char* id, long n, long p = 0, long q = 0) { return as<Poly1>(build_residual(id, {n, p, q})); }

// Bernoulli numbers and harmonic numbers from test-side sources only.
struct Oracle {
    std::vector<Rat> B;
    explicit Oracle(long n_max) {
        for (const auto& q : testing::oracle_bernoulli_numbers(n_max)) B.emplace_back(q);
    }
    static Rat H(long n) {
        Rat s;
        for (long k = 1; k <= n; ++k) s += Rat(1, k);
        return s;
    }
    static Rat C(long n, long k) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rat(c);
    }
    Rat bbar(long k) const { return (pow(Rat(2), 1 - k) - Rat(1)) * B[static_cast<std::size_t>(k)]; }
};

const Oracle oracle(80);

}  // namespace

TEST_CASE("catalog lists every entry once") {
    auto ids = catalog_ids();
    std::set<std::string> unique(ids.begin(), ids.end());
    CHECK(unique.size() == ids.size());
    for (const char* id : {"1.1", "1.2", "1.3", "1.4", "1.4prime", "1.5", "1.6", "1.7", "cor1.2", "1.8", "1.9", "1.10",
                           "1.11", "1.12", "1.13", "2.1", "2.1-as-printed", "2.2", "2.3", "2.4", "2.5", "chu", "3.1",
                           "3.2", "ds"})
        CHECK(unique.count(id) == 1);
    auto plain = catalog_ids(false);
    CHECK(std::find(plain.begin(), plain.end(), "2.1-as-printed") == plain.end());
    CHECK(std::find(plain.begin(), plain.end(), "1.4prime-as-printed") == plain.end());
}

TEST_CASE("errors for unknown ids and out-of-domain parameters") {
    CHECK_THROWS_AS(build_residual("9.9", {4, 0, 0}), UnknownIdentityError);
    CHECK_THROWS_AS(build_residual("1.1", {3, 0, 0}), DomainError);
    CHECK_THROWS_AS(build_residual("1.1", {4, 1, 0}), DomainError);
    CHECK_THROWS_AS(build_residual("1.4", {1, 0, 0}), DomainError);
    CHECK_THROWS_AS(build_residual("3.1", {1, 0, 0}), DomainError);
    CHECK_THROWS_AS(build_residual("3.1", {4, -1, 0}), DomainError);
    CHECK_THROWS_AS(build_residual("3.2", {3, 0, 0}), DomainError);
    CHECK_THROWS_AS(verify("1.6", {1, 0, 0}), DomainError);
    CHECK_THROWS_AS(beta_hockey_stick_residual(3, 4, 0, 1), DomainError);
    CHECK_THROWS_AS(dunne_schubert_residual(1, 0), DomainError);
}

TEST_CASE("scalar spot values from the oracle") {
    const auto& B = oracle.B;
    // n = 4: only k = 2 contributes
    Rat t = B[2] * B[2] / Rat(4);
    Rat miki_lhs = t - Oracle::C(4, 2) * t;
    Rat miki_rhs = Rat(2, 4) * Oracle::H(4) * B[4];
    CHECK(miki_lhs == Rat(-5, 144));
    CHECK(miki_rhs == Rat(-5, 144));
    CHECK(as<Rat>(build_residual("1.1", {4, 0, 0})).is_zero());

    Rat mat_lhs = Rat(6) * B[2] * B[2] - Rat(2) * Oracle::C(6, 2) * B[2] * B[2];
    Rat mat_rhs = Rat(4 * 5) * B[4];
    CHECK(mat_lhs == Rat(-2, 3));
    CHECK(mat_rhs == Rat(-2, 3));
    CHECK(as<Rat>(build_residual("1.3", {4, 0, 0})).is_zero());

    // All three midpoint expressions at n = 4.
    Rat b2 = oracle.bbar(2), b4 = oracle.bbar(4);
    CHECK(b2 == Rat(-1, 12));
    CHECK(b4 == Rat(7, 240));
    Rat first = b2 / Rat(2) * b2;
    Rat second = Rat(4, 2) * b2 * b2 / Rat(4);
    Rat third = Oracle::H(3) * b4 + Oracle::C(4, 2) * B[2] / Rat(2) * b2 + Oracle::C(4, 4) * B[4] / Rat(4) * oracle.bbar(0);
    CHECK(first == Rat(1, 288));
    CHECK(second == Rat(1, 288));
    CHECK(third == Rat(1, 288));
    CHECK(is_zero(build_residual("cor1.2", {4, 0, 0})));
}

TEST_CASE("univariate spot values") {
    // n = 2: both sides of the quadratic form are 3x^2 - 3x + 1/2
    Poly1 b1 = Poly1::x() - Poly1(Rat(1, 2));
    Poly1 b2({Rat(1, 6), Rat(-1), Rat(1)});
    Poly1 lhs = Rat(2) * b2 + b1 * b1 - Poly1(Rat(2) * oracle.B[2] / Rat(4));
    CHECK(lhs == Poly1({Rat(1, 2), Rat(-3), Rat(3)}));
    CHECK(Rat(3) * b2 == lhs);
    CHECK(res1("1.7", 2).is_zero());

    Poly1 lhs16 = b1 * b1 - Poly1(Rat(2, 4) * oracle.B[2]);
    CHECK(lhs16 == Oracle::H(1) * b2);
    CHECK(res1("1.6", 2).is_zero());
}

TEST_CASE("gamma-weighted and beta sum examples") {
    // l = 1, p = 0, q = 1, n = 3: 1/3 + 1/3 + 1/3 = beta(1, 1)
    CHECK(beta_hockey_stick_residual(3, 1, 0, 1).is_zero());
    CHECK(verify("3.2", {3, 0, 1}).holds());
    CHECK(res1("3.1", 2, 0, 0) == res1("1.6", 2));
}

TEST_CASE("equivalence chains") {
    for (long n = 4; n <= 30; ++n) {
        Rat r1 = as<Rat>(build_residual("1.1", {n, 0, 0}));
        Rat r2 = as<Rat>(build_residual("1.2", {n, 0, 0}));
        CHECK(r1 == Rat(2, n) * r2);
        CHECK(r1.is_zero());
    }
    for (long n = 2; n <= 14; ++n) {
        Poly2 r14 = res2("1.4", n);
        CHECK(res2("1.4prime", n) == Rat(n) * r14);
        CHECK(res2("2.3", n) == -subst(r14, Axis::y, Poly2::x() + Poly2::y()));
        CHECK(r14.is_zero());
    }
    for (long n = 1; n <= 14; ++n) {
        CHECK(res2("2.4", n) == -subst(res2("1.8", n), Axis::y, Poly2::x() + Poly2::y()));
        CHECK(res2("2.5", n) == subst(swap_xy(res2("1.9", n)), Axis::y, Poly2::x() + Poly2::y()));
    }
}

TEST_CASE("symmetry under exchanging x and y") {
    for (long n = 2; n <= 14; ++n) {
        Poly2 r4 = res2("1.4", n), r5 = res2("1.5", n);
        CHECK(swap_xy(r4) == r4);
        CHECK(swap_xy(r5) == r5);
    }
}

TEST_CASE("specializations of the univariate forms") {
    const auto& B = oracle.B;
    for (long n = 4; n <= 30; ++n) {
        // x = 0 in the harmonic form, rearranged to the scalar convolution statement.
        Rat at0;
        for (long k = 1; k <= n - 1; ++k) at0 += B[k] * B[n - k] / Rat(k * (n - k));
        for (long l = 2; l <= n; ++l) at0 -= Rat(2) * Oracle::C(n - 1, l - 1) * B[l] * B[n - l] / Rat(l * l);
        at0 -= Rat(2, n) * Oracle::H(n - 1) * B[n];
        CHECK(res1("1.6", n)(Rat(0)) == at0);
        CHECK(at0.is_zero());

        // x = 0 in the quadratic form.
        Rat q0;
        for (long k = 0; k <= n; ++k) q0 += B[k] * B[n - k];
        for (long l = 2; l <= n; ++l) q0 -= Rat(2) * Oracle::C(n + 1, l + 1) * B[l] * B[n - l] / Rat(l + 2);
        q0 -= Rat(n + 1) * B[n];
        CHECK(res1("1.7", n)(Rat(0)) == q0);
        CHECK(q0.is_zero());
        CHECK(as<Rat>(build_residual("1.3", {n, 0, 0})).is_zero());

        // x = 1/2 uses the midpoint values.
        Rat half;
        for (long k = 1; k <= n - 1; ++k) half += oracle.bbar(k) * oracle.bbar(n - k) / Rat(k * (n - k));
        for (long l = 2; l <= n; ++l) half -= Rat(2) * Oracle::C(n - 1, l - 1) * B[l] * oracle.bbar(n - l) / Rat(l * l);
        half -= Rat(2, n) * Oracle::H(n - 1) * oracle.bbar(n);
        CHECK(res1("1.6", n)(Rat(1, 2)) == half);
        CHECK(is_zero(build_residual("cor1.2", {n, 0, 0})));
    }
}

TEST_CASE("gamma-weighted slices") {
    for (long n = 2; n <= 16; ++n) {
        CHECK(res1("3.1", n, 0, 0) == res1("1.6", n));
        CHECK(res1("3.1", n, 1, 1) * Rat(n * (n + 1)) == res1("1.7", n));
    }
    for (long n = 2; n <= 8; ++n)
        for (long p = 0; p <= 3; ++p) {
            Rat ds = dunne_schubert_residual(n, p);
            CHECK(ds * Rat(2) * factorial(2 * n - 1) == res1("3.1", 2 * n, p, p)(Rat(0)));
            CHECK(ds.is_zero());
        }
}

TEST_CASE("negative controls fail and the correct forms hold") {
    auto printed = verify("2.1-as-printed", {2, 0, 0});
    CHECK_FALSE(printed.holds());
    CHECK_FALSE(is_zero(printed.residual));
    CHECK(verify("2.1-as-printed", {1, 0, 0}).holds());
    CHECK(verify("2.1", {2, 0, 0}).holds());

    // The literal rescaled form matches on the diagonal only.
    CHECK(verify("1.4prime-as-printed", {2, 0, 0}).holds());
    for (long n = 3; n <= 10; ++n) {
        Poly2 r = res2("1.4prime-as-printed", n);
        CHECK_FALSE(r.is_zero());
        CHECK(subst_y_eq_x(r).is_zero());
    }
}

TEST_CASE("verify report fields") {
    auto r = verify("1.4", {5, 0, 0});
    CHECK(r.id == "1.4");
    CHECK(r.params == Params{5, 0, 0});
    CHECK(r.holds());
    CHECK(r.elapsed.count() >= 0.0);
    CHECK(to_string(r.residual) == "0");
}

TEST_CASE("verify_sweep order and skipping are deterministic") {
    std::vector<std::string> ids = {"3.1", "1.1", "ds", "2.1-as-printed"};
    auto serial = verify_sweep(ids, {0, 6}, {0, 2}, {0, 2}, 1);
    auto parallel = verify_sweep(ids, {0, 6}, {0, 2}, {0, 2}, 4);
    REQUIRE(serial.size() == ids.size() * 7 * 3 * 3);
    REQUIRE(parallel.size() == serial.size());
    std::size_t i = 0;
    for (const auto& id : ids)
        for (long n = 0; n <= 6; ++n)
            for (long p = 0; p <= 2; ++p)
                for (long q = 0; q <= 2; ++q, ++i) {
                    CHECK(serial[i].id == id);
                    CHECK(serial[i].params == Params{n, p, q});
                    CHECK(parallel[i].id == id);
                    CHECK(parallel[i].params == Params{n, p, q});
                    CHECK(parallel[i].outcome == serial[i].outcome);
                    CHECK(serial[i].skipped() == !find_identity(id).domain.contains({n, p, q}));
                }
    std::size_t fails = 0;
    for (const auto& r : serial)
        if (r.outcome == Outcome::fails) {
            ++fails;
            CHECK(r.id == "2.1-as-printed");
        }
    CHECK(fails > 0);
}
