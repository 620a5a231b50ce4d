#include "bernid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bernid/cache_file.hpp"
#include "bernid/special.hpp"

namespace bernid::cli {

namespace {

long parse_long(std::string_view s, std::string_view whole) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad range '" + std::string(whole) + "'");
    return v;
}

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> ids;
    std::string n;
    std::string p = "0";
    std::string q = "0";
    std::string all_p = "0..3";
    std::string all_q = "0..3";
    long all_n_max = 0;
    long bench_n_max = 100;
    long cache_n_max = 0;
    bool json = false;
    std::string cache_path;
    unsigned threads = 0;
    std::string what;
    long index = 0;
    std::string action;
};

void load_cache_if_present(const Options& o, std::ostream& err) {
    if (o.cache_path.empty() || !std::filesystem::exists(o.cache_path)) return;
    std::size_t n = load_bernoulli_cache(o.cache_path, bernoulli_cache());
    err << "loaded " << n << " cached Bernoulli numbers from " << o.cache_path << '\n';
}

void save_cache_if_requested(const Options& o) {
    if (!o.cache_path.empty()) save_bernoulli_cache(o.cache_path, bernoulli_cache());
}

int cmd_compute(const Options& o, std::ostream& out) {
    const long n = o.index;
    if (o.what == "bernoulli-number") out << bernoulli_number(n) << '\n';
    else if (o.what == "bernoulli-poly") out << to_string(bernoulli_poly(n)) << '\n';
    else if (o.what == "euler-poly") out << to_string(euler_poly(n)) << '\n';
    else if (o.what == "harmonic") out << harmonic(n) << '\n';
    else if (o.what == "bbar") out << bbar(n) << '\n';
    else throw UsageError("unknown sequence '" + o.what + "'");
    return kSuccess;
}

int stream_reports(const std::vector<VerifyReport>& reports, bool json, std::ostream& out, std::ostream& err) {
    std::size_t checked = 0, failed = 0, skipped = 0;
    for (const auto& r : reports) {
        if (r.skipped()) {
            ++skipped;
            continue;
        }
        ++checked;
        if (!r.holds()) ++failed;
        out << (json ? format_json(r) : format_text(r)) << '\n';
    }
    out.flush();
    err << checked << " checks, " << failed << " failed, " << skipped << " out-of-domain combinations skipped\n";
    return failed == 0 ? kSuccess : kVerificationFailed;
}

void check_ids(const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
        try {
            find_identity(id);
        } catch (const UnknownIdentityError& e) {
            throw UsageError(e.what());
        }
    }
}

Range range_or_usage(const std::string& text, const char* flag) {
    try {
        return parse_range(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    check_ids(o.ids);
    auto reports = verify_sweep(o.ids, range_or_usage(o.n, "--n"), range_or_usage(o.p, "--p"),
                                range_or_usage(o.q, "--q"), o.threads);
    // Asking for nothing but out-of-domain tuples is a usage error, not an empty success.
    if (std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.skipped(); })) {
        std::string msg = "no requested parameters lie in the domain of";
        for (const auto& id : o.ids) msg += " " + id + " (" + find_identity(id).domain.describe() + ")";
        throw UsageError(msg);
    }
    return stream_reports(reports, o.json, out, err);
}

int cmd_verify_all(const Options& o, std::ostream& out, std::ostream& err) {
    check_ids(o.ids);
    std::vector<std::string> ids = catalog_ids(false);
    for (const auto& id : o.ids)
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    auto reports = verify_sweep(ids, Range{0, o.all_n_max}, range_or_usage(o.all_p, "--p"),
                                range_or_usage(o.all_q, "--q"), o.threads);
    return stream_reports(reports, o.json, out, err);
}

int cmd_cache(const Options& o, std::ostream& out) {
    if (o.action == "save") {
        bernoulli_cache().ensure(o.cache_n_max);
        save_bernoulli_cache(o.cache_path, bernoulli_cache());
        out << "saved " << bernoulli_cache().highest() + 1 << " entries to " << o.cache_path << '\n';
    } else if (o.action == "load") {
        std::size_t n = load_bernoulli_cache(o.cache_path, bernoulli_cache());
        out << "loaded " << n << " entries from " << o.cache_path << '\n';
    } else if (o.action == "info") {
        BernoulliCache scratch;
        std::size_t n = load_bernoulli_cache(o.cache_path, scratch);
        out << "highest cached index: " << static_cast<long>(n) - 1 << '\n';
    } else {
        throw UsageError("unknown cache action '" + o.action + "'");
    }
    return kSuccess;
}

int cmd_bench(const Options& o, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
    const long n = o.bench_n_max;

    auto t0 = clock::now();
    BernoulliCache fresh;
    fresh.ensure(n);
    const Rat bn = fresh.get(n);
    auto t1 = clock::now();
    const Poly1& poly = bernoulli_poly(n);
    auto t2 = clock::now();
    const long m = std::max(n, 2L);
    VerifyReport rep = verify("1.6", Params{m, 0, 0});
    auto t3 = clock::now();

    out << std::left << std::setw(28) << "task" << std::setw(14) << "elapsed_ms" << "result\n";
    auto row = [&](const std::string& task, double t, const std::string& result) {
        std::ostringstream ts;
        ts << std::fixed << std::setprecision(3) << t;
        out << std::left << std::setw(28) << task << std::setw(14) << ts.str() << result << '\n';
    };
    row("bernoulli_numbers 0.." + std::to_string(n), ms(t1 - t0), "den(B_n)=" + bn.denominator().get_str());
    row("bernoulli_poly " + std::to_string(n), ms(t2 - t1), "degree=" + std::to_string(poly.degree()));
    row("verify 1.6 n=" + std::to_string(m), ms(t3 - t2), rep.holds() ? "holds" : "FAILS");
    return kSuccess;
}

}  // namespace

Range parse_range(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        long v = parse_long(text, text);
        return {v, v};
    }
    Range r{parse_long(text.substr(0, dots), text), parse_long(text.substr(dots + 2), text)};
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return r;
}

std::string format_text(const VerifyReport& r) {
    std::ostringstream os;
    os << r.id << " n=" << r.params.n << " p=" << r.params.p << " q=" << r.params.q << ' '
       << (r.holds() ? "holds" : "FAILS") << " residual=" << to_string(r.residual) << " elapsed_ms=" << std::fixed
       << std::setprecision(3) << r.elapsed.count();
    return os.str();
}

std::string format_json(const VerifyReport& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["n"] = r.params.n;
    j["p"] = r.params.p;
    j["q"] = r.params.q;
    j["holds"] = r.holds();
    j["residual"] = to_string(r.residual);
    j["elapsed_ms"] = r.elapsed.count();
    return j.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Bernoulli/Euler polynomial identity verifier", "bernid"};
    app.require_subcommand(1);
    Options o;

    auto* compute = app.add_subcommand("compute", "Print an exact sequence value");
    compute->add_option("what", o.what, "bernoulli-number | bernoulli-poly | euler-poly | harmonic | bbar")
        ->required()
        ->check(CLI::IsMember({"bernoulli-number", "bernoulli-poly", "euler-poly", "harmonic", "bbar"}));
    compute->add_option("n", o.index, "Index")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--cache", o.cache_path, "Bernoulli cache file to load and update");

    auto* verify_cmd = app.add_subcommand("verify", "Verify identities over a parameter sweep");
    verify_cmd->add_option("--id", o.ids, "Catalog id (repeatable)")->required();
    verify_cmd->add_option("--n", o.n, "n or a..b")->required();
    verify_cmd->add_option("--p", o.p, "p or a..b")->capture_default_str();
    verify_cmd->add_option("--q", o.q, "q or a..b")->capture_default_str();
    verify_cmd->add_flag("--json", o.json, "One JSON object per line");
    verify_cmd->add_option("--cache", o.cache_path, "Bernoulli cache file to load and update");
    verify_cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)");

    auto* verify_all = app.add_subcommand("verify-all", "Verify the whole catalog up to --n-max");
    verify_all->add_option("--n-max", o.all_n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
    verify_all->add_option("--id", o.ids, "Extra ids to include (e.g. negative controls)");
    verify_all->add_option("--p", o.all_p, "p or a..b")->capture_default_str();
    verify_all->add_option("--q", o.all_q, "q or a..b")->capture_default_str();
    verify_all->add_flag("--json", o.json, "One JSON object per line");
    verify_all->add_option("--cache", o.cache_path, "Bernoulli cache file to load and update");
    verify_all->add_option("--threads", o.threads, "Worker threads (0 = hardware)");

    auto* bench = app.add_subcommand("bench", "Time the arithmetic kernels");
    bench->add_option("--n-max", o.bench_n_max, "Largest index")->capture_default_str()->check(CLI::PositiveNumber);

    auto* cache = app.add_subcommand("cache", "Manage the Bernoulli number cache file");
    cache->add_option("action", o.action, "save | load | info")
        ->required()
        ->check(CLI::IsMember({"save", "load", "info"}));
    cache->add_option("--cache", o.cache_path, "Cache file")->required();
    cache->add_option("--n-max", o.cache_n_max, "save: compute B_0..B_{n-max} first")->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        int status = kSuccess;
        if (*compute) {
            load_cache_if_present(o, err);
            status = cmd_compute(o, out);
            save_cache_if_requested(o);
        } else if (*verify_cmd) {
            load_cache_if_present(o, err);
            status = cmd_verify(o, out, err);
            save_cache_if_requested(o);
        } else if (*verify_all) {
            load_cache_if_present(o, err);
            status = cmd_verify_all(o, out, err);
            save_cache_if_requested(o);
        } else if (*bench) {
            status = cmd_bench(o, out);
        } else if (*cache) {
            status = cmd_cache(o, out);
        }
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CacheFileError& e) {
        err << "cache error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
}

}  // namespace bernid::cli
