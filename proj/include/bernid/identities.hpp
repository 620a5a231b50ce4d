#ifndef BERNID_IDENTITIES_HPP
#define BERNID_IDENTITIES_HPP

#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bernid/arith.hpp"
#include "bernid/polyalg.hpp"

namespace bernid {

/// LHS - RHS of one identity instance after clearing denominators. Entries
/// that bundle several equalities (or a whole inner index range) produce one
/// Rat per component.
using Residual = std::variant<Rat, Poly1, Poly2, std::vector<Rat>>;

bool is_zero(const Residual& r);
std::string to_string(const Residual& r);

enum class Arity { scalar, univariate, bivariate };
std::string_view to_string(Arity a);

struct Params {
    long n = 0;
    long p = 0;
    long q = 0;
    friend bool operator==(const Params&, const Params&) = default;
};

/// Which parameter tuples an identity is stated for. Parameters the entry
/// does not use must be zero.
struct ParamDomain {
    long min_n = 0;
    bool uses_p = false;
    bool uses_q = false;
    long min_q = 0;

    bool contains(const Params& prm) const;
    std::string describe() const;
};

struct IdentitySpec {
    std::string id;
    Arity arity;
    std::string summary;
    /// Factor multiplied into both sides before comparing, "1" when none.
    std::string pole;
    ParamDomain domain;
    std::function<Residual(const Params&)> builder;
    /// Deliberately wrong statement; expected to fail.
    bool negative_control = false;
};

class UnknownIdentityError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<IdentitySpec>& catalog();
/// Throws UnknownIdentityError listing the known ids.
const IdentitySpec& find_identity(std::string_view id);
std::vector<std::string> catalog_ids(bool include_negative_controls = true);

/// Throws UnknownIdentityError or DomainError.
Residual build_residual(std::string_view id, const Params& prm);

enum class Outcome { holds, fails, skipped };

struct VerifyReport {
    std::string id;
    Params params;
    Outcome outcome = Outcome::skipped;
    Residual residual = Rat(0);
    std::chrono::duration<double, std::milli> elapsed{0};

    bool holds() const { return outcome == Outcome::holds; }
    bool skipped() const { return outcome == Outcome::skipped; }
};

VerifyReport verify(std::string_view id, const Params& prm);

/// Inclusive integer range.
struct Range {
    long lo = 0;
    long hi = 0;
};

/// Cartesian sweep ordered by id, then n, then p, then q. Out-of-domain
/// tuples come back as skipped reports. `threads` == 0 picks the hardware
/// concurrency; the result order does not depend on it.
std::vector<VerifyReport> verify_sweep(const std::vector<std::string>& ids, Range n, Range p, Range q,
                                       unsigned threads = 0);

// Standalone pieces of the catalog, exposed for direct use.

/// sum_{k=l}^{n} C(n-l, k-l) beta(k+p, n-k+q) - beta(l+p, q).
Rat beta_hockey_stick_residual(long n, long l, long p, long q);
/// The even-index Gamma-weighted convolution identity at (n, p), LHS - RHS.
Rat dunne_schubert_residual(long n, long p);

}  // namespace bernid

#endif  // BERNID_IDENTITIES_HPP
