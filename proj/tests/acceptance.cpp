// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bernid/identities.hpp"
#include "bernid/opcalc.hpp"
#include "bernid/special.hpp"
#include "support.hpp"

#ifndef BERNID_CLI_PATH
#error "BERNID_CLI_PATH must point at the bernid executable"
#endif

using namespace bernid;
using Clock = std::chrono::steady_clock;

namespace {

// Collects the first few problems of a criterion for the report.
struct Log {
    std::vector<std::string> problems;
    void fail(const std::string& what) {
        if (problems.size() < 5) problems.push_back(what);
        else if (problems.size() == 5) problems.push_back("...");
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    bool ok() const { return problems.empty(); }
};

std::string tag(std::string_view id, long n, long p = 0, long q = 0) {
    std::ostringstream os;
    os << id << " n=" << n << " p=" << p << " q=" << q;
    return os.str();
}

void expect_holds(Log& log, std::string_view id, long n, long p = 0, long q = 0) {
    auto r = verify(id, {n, p, q});
    log.expect(r.holds(), tag(id, n, p, q) + " residual=" + to_string(r.residual));
}

void scalar_sweep(Log& log) {
    for (const char* id : {"1.1", "1.2", "1.3"})
        for (long n = 4; n <= 60; ++n) expect_holds(log, id, n);
    auto B = testing::oracle_bernoulli_numbers(4);
    mpq_class t = B[2] * B[2] / 4;
    mpq_class miki_lhs = t - 6 * t, miki_rhs = mpq_class(1, 2) * mpq_class(25, 12) * B[4];
    log.expect(miki_lhs == mpq_class(-5, 144) && miki_rhs == mpq_class(-5, 144), "1.1 spot value at n=4");
    mpq_class mat_lhs = 6 * B[2] * B[2] - 2 * 15 * B[2] * B[2], mat_rhs = 20 * B[4];
    log.expect(mat_lhs == mpq_class(-2, 3) && mat_rhs == mpq_class(-2, 3), "1.3 spot value at n=4");
}

void bivariate_sweep(Log& log) {
    for (const char* id : {"1.4", "1.4prime", "1.5", "1.8", "1.9", "1.10", "2.3", "2.4", "2.5"}) {
        const auto& spec = find_identity(id);
        for (long n = spec.domain.min_n; n <= 25; ++n) expect_holds(log, id, n);
    }
}

void univariate_sweep(Log& log) {
    for (const char* id : {"1.6", "1.7", "1.11", "1.12", "1.13", "cor1.2"}) {
        const auto& spec = find_identity(id);
        for (long n = spec.domain.min_n; n <= 60; ++n) expect_holds(log, id, n);
    }
    // midpoint values from the oracle numbers at n = 4
    auto B = testing::oracle_bernoulli_numbers(4);
    mpq_class b0 = B[0], b2 = -B[2] / 2, b4 = -7 * B[4] / 8;
    mpq_class first = b2 / 2 * b2;
    mpq_class second = mpq_class(4, 2) * b2 * b2 / 4;
    mpq_class third = mpq_class(11, 6) * b4 + 6 * B[2] / 2 * b2 + B[4] / 4 * b0;
    log.expect(first == mpq_class(1, 288) && second == mpq_class(1, 288) && third == mpq_class(1, 288),
               "cor1.2 spot value at n=4");
}

void lemma_suite(Log& log) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        Poly1 P = testing::random_poly1(rng, 8), Q = testing::random_poly1(rng, 8);
        log.expect(check_product_rules(P, Q), "product rules on random pair " + std::to_string(i));
    }
    for (long n = 1; n <= 25; ++n) expect_holds(log, "2.1", n);
    for (long n = 0; n <= 25; ++n) expect_holds(log, "2.2", n);
    log.expect(!verify("2.1-as-printed", {2, 0, 0}).holds(), "2.1-as-printed unexpectedly holds at n=2");
    for (long n = 1; n <= 30; ++n)
        for (long l = 1; l <= n; ++l) log.expect(chu_identity(n, l), "chu n=" + std::to_string(n) + " l=" + std::to_string(l));
    expect_holds(log, "chu", 30);
}

void gamma_weighted_suite(Log& log) {
    for (long n = 2; n <= 20; ++n)
        for (long p = 0; p <= 3; ++p)
            for (long q = 0; q <= 3; ++q) expect_holds(log, "3.1", n, p, q);
    for (long n = 2; n <= 20; ++n) {
        auto r00 = std::get<Poly1>(build_residual("3.1", {n, 0, 0}));
        auto r11 = std::get<Poly1>(build_residual("3.1", {n, 1, 1}));
        log.expect(r00 == std::get<Poly1>(build_residual("1.6", {n, 0, 0})), "3.1 (0,0) slice vs 1.6 at n=" + std::to_string(n));
        log.expect(r11 * Rat(n * (n + 1)) == std::get<Poly1>(build_residual("1.7", {n, 0, 0})),
                   "3.1 (1,1) slice vs 1.7 at n=" + std::to_string(n));
    }
    for (long n = 1; n <= 12; ++n)
        for (long l = 1; l <= n; ++l)
            for (long p = 0; p <= 4; ++p)
                for (long q = 1; q <= 4; ++q)
                    log.expect(beta_hockey_stick_residual(n, l, p, q).is_zero(),
                               "beta sum n=" + std::to_string(n) + " l=" + std::to_string(l) + " p=" + std::to_string(p) +
                                   " q=" + std::to_string(q));
    for (long n = 2; n <= 10; ++n)
        for (long p = 0; p <= 4; ++p) {
            expect_holds(log, "ds", n, p);
            Rat at0 = std::get<Poly1>(build_residual("3.1", {2 * n, p, p}))(Rat(0));
            log.expect(dunne_schubert_residual(n, p) * Rat(2) * factorial(2 * n - 1) == at0,
                       "ds vs 3.1 at x=0, n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
}

void consistency_suite(Log& log) {
    auto eul = testing::oracle_euler_polys(40);
    const Poly2 xy = Poly2::x() + Poly2::y();
    for (long n = 0; n <= 40; ++n) {
        const std::string at = " at n=" + std::to_string(n);
        log.expect(euler_poly_via_bernoulli(n) == euler_poly_via_recurrence(n), "euler dual construction" + at);
        log.expect(euler_poly(n) == testing::to_poly1(eul[static_cast<std::size_t>(n)]), "euler vs oracle" + at);
        log.expect(bernoulli_poly(n)(Rat(1, 2)) == bbar(n), "B_n(1/2)" + at);
        log.expect(euler_poly(n)(Rat(0)) == euler_at_zero(n), "E_n(0)" + at);
        log.expect(delta_star(euler_poly(n)) == Poly1::monomial(static_cast<std::size_t>(n), Rat(2)), "forward sum of E_n" + at);
        if (n >= 1) {
            log.expect(delta(bernoulli_poly(n)) == Poly1::monomial(static_cast<std::size_t>(n - 1), Rat(n)),
                       "forward difference of B_n" + at);
            log.expect(derivative(bernoulli_poly(n)) == Rat(n) * bernoulli_poly(n - 1), "B_n'" + at);
            log.expect(derivative(euler_poly(n)) == Rat(n) * euler_poly(n - 1), "E_n'" + at);
        }
        if (n <= 25) {
            Poly2 bsum, esum;
            for (long k = 0; k <= n; ++k) {
                Poly2 ypow = Poly2::monomial(0, static_cast<std::size_t>(n - k), binomial(n, k));
                bsum += to_poly2(bernoulli_poly(k), Axis::x) * ypow;
                esum += to_poly2(euler_poly(k), Axis::x) * ypow;
            }
            log.expect(compose(bernoulli_poly(n), xy) == bsum, "B_n addition theorem" + at);
            log.expect(compose(euler_poly(n), xy) == esum, "E_n addition theorem" + at);
        }
    }
    auto B = testing::oracle_bernoulli_numbers(40);
    for (long n = 0; n <= 40; ++n)
        log.expect(bernoulli_number(n) == Rat(B[static_cast<std::size_t>(n)]), "B_n vs oracle at n=" + std::to_string(n));
}

void performance_smoke(Log& log) {
    auto t0 = Clock::now();
    BernoulliCache fresh;
    fresh.ensure(200);
    expect_holds(log, "1.6", 100);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    log.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
}

int shell(const std::string& cmd) {
    int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
}

void cli_contract(Log& log) {
    const std::string exe = std::string("\"") + BERNID_CLI_PATH + "\"";
    int rc = shell(exe + " verify-all --n-max 12");
    log.expect(rc == 0, "verify-all --n-max 12 exited " + std::to_string(rc));
    rc = shell(exe + " verify-all --n-max 12 --id 2.1-as-printed");
    log.expect(rc == 1, "verify-all with the negative control exited " + std::to_string(rc));

    auto path = std::filesystem::temp_directory_path() / "bernid_acceptance_cache.tsv";
    std::filesystem::remove(path);
    const std::string cache = " --cache \"" + path.string() + "\"";
    rc = shell(exe + " cache save --n-max 40" + cache);
    log.expect(rc == 0, "cache save exited " + std::to_string(rc));
    rc = shell(exe + " cache load" + cache);
    log.expect(rc == 0, "cache load exited " + std::to_string(rc));
    rc = shell(exe + " verify --id 1.6 --n 30" + cache);
    log.expect(rc == 0, "verify with a loaded cache exited " + std::to_string(rc));

    std::vector<std::string> lines;
    {
        std::ifstream in(path);
        for (std::string line; std::getline(in, line);) lines.push_back(line);
    }
    log.expect(lines.size() == 42, "saved cache has " + std::to_string(lines.size()) + " lines");
    if (lines.size() > 13) {
        lines[13] = "12\t-691/2731";
        std::ofstream out(path, std::ios::trunc);
        for (const auto& l : lines) out << l << '\n';
    }
    rc = shell(exe + " cache load" + cache);
    log.expect(rc == 1, "tampered cache load exited " + std::to_string(rc));
    std::filesystem::remove(path);
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Log&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"scalar sweep", scalar_sweep},
        {"bivariate sweep", bivariate_sweep},
        {"univariate sweep", univariate_sweep},
        {"lemma suite", lemma_suite},
        {"gamma-weighted suite", gamma_weighted_suite},
        {"consistency suite", consistency_suite},
        {"performance smoke", performance_smoke},
        {"CLI contract", cli_contract},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Log log;
        auto t0 = Clock::now();
        try {
            c.run(log);
        } catch (const std::exception& e) {
            log.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("%s  %-21s (%.2f s)\n", log.ok() ? "PASS" : "FAIL", c.name, secs);
        for (const auto& p : log.problems) std::printf("      %s\n", p.c_str());
        if (!log.ok()) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
