#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artin/census.hpp"
#include "artin/density.hpp"
#include "artin/lenstra.hpp"
#include "artin/report.hpp"
#include "artin/shift.hpp"

namespace {

using namespace artin;

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

u64 as_count(double v, const char* what) {
    if (!(v >= 0) || v > 9.0e18 || std::floor(v) != v)
        throw std::invalid_argument(std::string(what) + " must be a nonnegative integer");
    return static_cast<u64>(v);
}

struct OutputOptions {
    bool json = false;
    bool csv = false;
};

void emit(const std::vector<ReportRecord>& records, const OutputOptions& opt) {
    if (opt.json)
        std::cout << to_json_string(records) << '\n';
    else
        std::cout << to_table(records);
}

std::string default_cache_path(i64 g, u64 x, u64 m) {
    const char* env = std::getenv("ARTIN_CACHE_DIR");
    std::filesystem::path dir = env != nullptr ? env : "artin-cache";
    std::filesystem::create_directories(dir);
    return (dir / ("census-g" + std::to_string(g) + "-x" + std::to_string(x) +
                   "-m" + std::to_string(m) + ".csv"))
        .string();
}

IntervalReal artin_enclosure(u64 tail_bound) {
    return tail_bound == 0 ? artin_constant_tight() : artin_constant(tail_bound);
}

int cmd_density(i64 g, u64 m, u64 a, u64 tail_bound, const OutputOptions& opt) {
    ArtinMultiple d = density(a, m, g);
    IntervalReal value = density_value(d, artin_enclosure(tail_bound));
    ReportRecord r;
    r.kind = "density";
    r.g = g;
    r.m = m;
    r.a = a;
    if (tail_bound) r.bound = tail_bound;
    r.q = to_fraction_string(d.q);
    r.lo = value.lo;
    r.hi = value.hi;
    r.predicted = value.mid();
    ReportRecord rn = r;
    rn.kind = "density_natural";
    Rational nq = delta_natural(a, m, g);
    rn.q = to_fraction_string(nq);
    rn.lo.reset();
    rn.hi.reset();
    rn.predicted = nq.get_d();
    emit({r, rn}, opt);
    return 0;
}

int cmd_series(i64 g, u64 m, u64 a, u64 max_k, const OutputOptions& opt) {
    IntervalReal series = delta_series(a, m, g, max_k);
    ArtinMultiple d = density(a, m, g);
    IntervalReal closed = density_value(d, artin_constant_tight());
    ReportRecord r;
    r.kind = "series";
    r.g = g;
    r.m = m;
    r.a = a;
    r.bound = max_k;
    r.q = to_fraction_string(d.q);
    r.lo = series.lo;
    r.hi = series.hi;
    r.predicted = closed.mid();
    r.overlap = series.overlaps(closed);
    emit({r}, opt);
    return 0;
}

int cmd_census(i64 g, u64 x, u64 m, int threads, bool use_cache,
               std::string cache_path, const OutputOptions& opt) {
    CensusConfig cfg;
    cfg.g = g;
    cfg.x_limit = x;
    cfg.m = m;
    cfg.thread_count = threads;

    CensusResult result;
    if (use_cache && cache_path.empty()) cache_path = default_cache_path(g, x, m);
    if (use_cache && std::filesystem::exists(cache_path)) {
        result = load_census_csv(cache_path);
        if (result.g != g || result.x_limit != x || result.m != m)
            throw IoError("cache file does not match the requested census");
    } else {
        result = run_census(cfg);
        if (use_cache) save_census_csv(result, cache_path);
    }

    if (opt.csv) {
        std::cout << "g,x,m,a,count\n";
        for (const auto& [c, n] : result.counts)
            std::cout << g << ',' << x << ',' << m << ',' << c << ',' << n << '\n';
        std::cout << g << ',' << x << ',' << m << ",_total," << result.total_primroot << '\n';
        return 0;
    }

    std::vector<ReportRecord> records;
    double lx = std::log(static_cast<double>(x));
    IntervalReal artin_enc = artin_constant_tight();
    for (const auto& [c, n] : result.counts) {
        ReportRecord r;
        r.kind = "census";
        r.g = g;
        r.m = m;
        r.x = x;
        r.a = c;
        r.observed = n;
        if (std::gcd(c, m) == 1) {
            u64 cls = c == 0 ? 1 : c; // m = 1 keys the single class as 0
            ArtinMultiple d = density(cls, m, g);
            r.q = to_fraction_string(d.q);
            r.predicted = density_value(d, artin_enc).mid() * static_cast<double>(x) / lx;
            r.normalized_error = error_diagnostic(x, m, cls, g, result);
        }
        records.push_back(r);
    }
    ReportRecord total;
    total.kind = "census_total";
    total.g = g;
    total.m = m;
    total.x = x;
    total.observed = result.total_primroot;
    ArtinMultiple d1 = density(1, 1, g);
    total.q = to_fraction_string(d1.q);
    total.predicted = density_value(d1, artin_enc).mid() * static_cast<double>(x) / lx;
    total.ratio = static_cast<double>(result.total_primroot) /
                  static_cast<double>(result.total_primes);
    records.push_back(total);
    emit(records, opt);
    return 0;
}

int cmd_shift(i64 g, u64 a, i64 b, u64 prime_bound, double x_opt, int threads,
              const OutputOptions& opt) {
    ShiftContext ctx = shift_context(a, b, g);
    IntervalReal constant = shift_leading_constant(ctx, prime_bound, threads);
    ReportRecord r;
    r.kind = "shift";
    r.g = g;
    r.m = 1;
    r.a = a;
    r.b = b;
    r.bound = prime_bound;
    r.q = to_fraction_string(residue_sum(ctx).q);
    r.lo = constant.lo;
    r.hi = constant.hi;
    r.predicted = constant.mid();
    if (x_opt > 0) {
        u64 x = as_count(x_opt, "--x");
        u64 observed = squarefree_shift_count(x, a, b, g, threads);
        r.x = x;
        r.observed = observed;
        double lx = std::log(static_cast<double>(x));
        r.ratio = static_cast<double>(observed) * lx / static_cast<double>(x) /
                  constant.mid();
    }
    emit({r}, opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Densities of primes with a prescribed primitive root in arithmetic "
                 "progressions: exact closed forms, a series oracle, a prime census, "
                 "and squarefree-shift constants"};
    app.require_subcommand(1);

    OutputOptions opt;
    i64 g = 2;
    double x = 0, max_k = 100000, prime_bound = 100000, tail_bound = 0;
    u64 m = 1, a = 1;
    i64 b = 1;
    i64 a_signed = 1;
    int threads = 0;
    bool use_cache = false;
    std::string cache_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "emit a single JSON document");
        return cmd;
    };

    CLI::App* density_cmd = add_common(app.add_subcommand("density", "closed-form density"));
    density_cmd->add_option("--g", g, "the prospective primitive root")->required();
    density_cmd->add_option("--m", m, "modulus of the progression");
    density_cmd->add_option("--a", a, "residue class");
    density_cmd->add_option("--tail-bound", tail_bound,
                            "prime bound for the direct Artin product (default: tight enclosure)");

    CLI::App* series_cmd = add_common(app.add_subcommand("series", "series oracle vs closed form"));
    series_cmd->add_option("--g", g)->required();
    series_cmd->add_option("--m", m);
    series_cmd->add_option("--a", a);
    series_cmd->add_option("--max-k", max_k, "series truncation point");

    CLI::App* census_cmd = add_common(app.add_subcommand("census", "empirical prime census"));
    census_cmd->add_option("--g", g)->required();
    census_cmd->add_option("--x", x, "count primes up to x")->required();
    census_cmd->add_option("--m", m);
    census_cmd->add_option("--threads", threads);
    census_cmd->add_flag("--cache", use_cache, "read/write the CSV census cache");
    census_cmd->add_option("--cache-path", cache_path, "explicit cache file");
    census_cmd->add_flag("--csv", opt.csv, "emit census rows as CSV");

    CLI::App* shift_cmd = add_common(app.add_subcommand("shift", "squarefree-shift constant"));
    shift_cmd->add_option("--g", g)->required();
    shift_cmd->add_option("--a", a_signed, "shift multiplier (positive)")->required();
    shift_cmd->add_option("--b", b, "shift offset (nonzero)")->required();
    shift_cmd->add_option("--prime-bound", prime_bound, "Euler product truncation");
    shift_cmd->add_option("--x", x, "also count primes up to x");
    shift_cmd->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (app.got_subcommand(density_cmd))
            return cmd_density(g, m, a, as_count(tail_bound, "--tail-bound"), opt);
        if (app.got_subcommand(series_cmd))
            return cmd_series(g, m, a, as_count(max_k, "--max-k"), opt);
        if (app.got_subcommand(census_cmd))
            return cmd_census(g, as_count(x, "--x"), m, threads, use_cache, cache_path, opt);
        if (app.got_subcommand(shift_cmd)) {
            if (a_signed <= 0) throw std::invalid_argument("--a must be positive");
            return cmd_shift(g, static_cast<u64>(a_signed), b,
                             as_count(prime_bound, "--prime-bound"), x, threads, opt);
        }
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
