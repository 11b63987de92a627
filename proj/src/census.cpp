#include "artin/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "artin/lenstra.hpp"

namespace artin {

namespace {

constexpr u64 kMaxCensusX = u64{1} << 40;
constexpr u64 kMaxSpfLimit = 250'000'000; // 4 bytes/entry: ~1 GB

inline u64 mulmod_u(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 modpow_u(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u(r, base, m);
        base = mulmod_u(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline u64 reduce_mod(i64 g, u64 p) {
    i64 r = g % static_cast<i64>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
}

// Odd-number bitmap helpers: bit i stands for lo + 2i.
inline bool test_bit(const std::vector<u64>& bits, u64 i) {
    return (bits[i >> 6] >> (i & 63)) & 1;
}
inline void set_bit(std::vector<u64>& bits, u64 i) {
    bits[i >> 6] |= u64{1} << (i & 63);
}

// Marks composites among the odd numbers of [lo, lo + 2*slots).
void sieve_segment(u64 lo, u64 slots, const std::vector<u64>& base,
                   std::vector<u64>& bits) {
    bits.assign((slots + 63) / 64, 0);
    u64 hi = lo + 2 * slots;
    for (u64 q : base) {
        if (q == 2) continue;
        if (q * q >= hi) break;
        u64 start = std::max(q * q, ((lo + q - 1) / q) * q);
        if (start % 2 == 0) start += q;
        for (u64 n = start; n < hi; n += 2 * q) set_bit(bits, (n - lo) / 2);
    }
}

// Per-thread storage for factoring p-1 across one segment.
struct FactorScratch {
    static constexpr int kSlots = 12;
    std::vector<u64> residual;
    std::vector<std::uint32_t> factors;
    std::vector<std::uint8_t> count;

    void reset(u64 slots) {
        residual.assign(slots, 0);
        factors.resize(slots * kSlots);
        count.assign(slots, 0);
    }
};

// Fills the distinct odd prime factors of p-1 for every prime slot of the
// segment [lo, lo + 2*slots): the base primes are sieved over the shifted
// (even) values, the power of two is stripped up front, and whatever remains
// in residual is either 1 or a single prime > sqrt(x).
void factor_shifted(u64 lo, u64 slots, u64 x, const std::vector<u64>& base,
                    const std::vector<u64>& bits, FactorScratch& fs) {
    fs.reset(slots);
    for (u64 i = 0; i < slots; ++i) {
        if (test_bit(bits, i)) continue;
        u64 p = lo + 2 * i;
        if (p > x) break;
        u64 n = p - 1;
        fs.residual[i] = n >> std::countr_zero(n);
    }
    u64 shifted_lo = lo - 1;
    u64 shifted_hi = lo - 1 + 2 * slots;
    for (u64 q : base) {
        if (q == 2) continue;
        u64 step = 2 * q;
        u64 n = ((shifted_lo + step - 1) / step) * step;
        for (; n < shifted_hi; n += step) {
            u64 i = (n - shifted_lo) / 2;
            if (test_bit(bits, i) || fs.residual[i] == 0) continue;
            u64 r = fs.residual[i];
            do { r /= q; } while (r % q == 0);
            fs.residual[i] = r;
            fs.factors[i * FactorScratch::kSlots + fs.count[i]++] = static_cast<std::uint32_t>(q);
        }
    }
}

// True iff g (nonzero mod p) generates the full group, given the factor data
// for p-1 at slot i.
bool primroot_from_factors(u64 gm, u64 p, u64 i, const FactorScratch& fs) {
    u64 n = p - 1;
    if (modpow_u(gm, n / 2, p) == 1) return false;
    const std::uint32_t* f = &fs.factors[i * FactorScratch::kSlots];
    for (int j = 0; j < fs.count[i]; ++j)
        if (modpow_u(gm, n / f[j], p) == 1) return false;
    u64 r = fs.residual[i];
    if (r > 1 && modpow_u(gm, n / r, p) == 1) return false;
    return true;
}

struct SegmentPlan {
    u64 slots_per_segment;
    u64 segment_count;
    u64 lo(u64 idx) const { return 3 + 2 * slots_per_segment * idx; }
    // number of odd slots actually below the limit for this segment
    u64 slots(u64 idx, u64 x) const {
        u64 first = lo(idx);
        if (first > x) return 0;
        return std::min(slots_per_segment, (x - first) / 2 + 1);
    }
};

SegmentPlan plan_segments(u64 x, u64 segment_size) {
    u64 slots = std::max<u64>(segment_size, u64{1} << 16) / 2;
    u64 total = x >= 3 ? (x - 3) / 2 + 1 : 0;
    u64 count = total == 0 ? 0 : (total + slots - 1) / slots;
    return {slots, count};
}

void validate_census_config(const CensusConfig& cfg) {
    g_invariants(cfg.g); // throws InvalidG
    if (cfg.x_limit < 2 || cfg.x_limit > kMaxCensusX)
        throw std::invalid_argument("census: x_limit out of range");
    if (cfg.m == 0 || cfg.m > 10'000'000)
        throw std::invalid_argument("census: m must be in [1, 1e7]");
    if (cfg.segment_size < (u64{1} << 16))
        throw std::invalid_argument("census: segment_size must be >= 2^16");
}

int resolve_threads(int requested) {
    return requested > 0 ? requested : omp_get_max_threads();
}

} // namespace

SpfTable::SpfTable(u64 limit) : limit_(std::max<u64>(limit, 2)) {
    if (limit_ > kMaxSpfLimit)
        throw std::invalid_argument("SpfTable: limit too large for an in-memory table");
    table_.assign(limit_ + 1, 0);
    for (u64 i = 2; i <= limit_; ++i) {
        if (table_[i] != 0) continue;
        for (u64 j = i; j <= limit_; j += i)
            if (table_[j] == 0) table_[j] = static_cast<std::uint32_t>(i);
    }
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    primes.push_back(2);
    u64 slots = limit >= 3 ? (limit - 3) / 2 + 1 : 0;
    std::vector<u64> bits((slots + 63) / 64, 0);
    for (u64 i = 0; i < slots; ++i) {
        if (test_bit(bits, i)) continue;
        u64 p = 3 + 2 * i;
        primes.push_back(p);
        for (u64 j = p * p; j <= limit; j += 2 * p) bits[((j - 3) / 2) >> 6] |= u64{1} << (((j - 3) / 2) & 63);
    }
    return primes;
}

void for_each_prime(u64 limit, u64 segment_size, const std::function<void(u64)>& fn) {
    if (limit < 2) return;
    fn(2);
    auto base = primes_up_to(isqrt(limit));
    SegmentPlan plan = plan_segments(limit, segment_size);
    std::vector<u64> bits;
    for (u64 idx = 0; idx < plan.segment_count; ++idx) {
        u64 lo = plan.lo(idx);
        u64 slots = plan.slots(idx, limit);
        sieve_segment(lo, slots, base, bits);
        for (u64 i = 0; i < slots; ++i)
            if (!test_bit(bits, i)) fn(lo + 2 * i);
    }
}

u64 count_primes(u64 limit, int thread_count) {
    if (limit < 2) return 0;
    auto base = primes_up_to(isqrt(limit));
    SegmentPlan plan = plan_segments(limit, u64{1} << 20);
    u64 total = 1; // p = 2
    int nt = resolve_threads(thread_count);
#pragma omp parallel num_threads(nt)
    {
        std::vector<u64> bits;
        u64 local = 0;
#pragma omp for schedule(dynamic)
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(plan.segment_count); ++idx) {
            u64 lo = plan.lo(idx);
            u64 slots = plan.slots(idx, limit);
            sieve_segment(lo, slots, base, bits);
            for (u64 i = 0; i < slots; ++i)
                if (!test_bit(bits, i)) ++local;
        }
#pragma omp atomic
        total += local;
    }
    return total;
}

bool is_primitive_root(i64 g, u64 p, const SpfTable& spf) {
    if (p < 3 || p - 1 > spf.limit())
        throw std::invalid_argument("is_primitive_root: p out of table range");
    u64 gm = reduce_mod(g, p);
    if (gm == 0) return false;
    u64 n = p - 1;
    u64 rest = n;
    while (rest > 1) {
        u64 q = spf.spf(rest);
        if (modpow_u(gm, n / q, p) == 1) return false;
        while (rest % q == 0) rest /= q;
    }
    return true;
}

CensusResult run_census(const CensusConfig& cfg) {
    validate_census_config(cfg);
    const u64 x = cfg.x_limit;
    const u64 m = cfg.m;
    CensusResult out;
    out.g = cfg.g;
    out.x_limit = x;
    out.m = m;

    auto base = primes_up_to(isqrt(x));
    SegmentPlan plan = plan_segments(x, cfg.segment_size);
    std::vector<u64> counts(m, 0);
    u64 total_primes = 0, total_root = 0;
    int nt = resolve_threads(cfg.thread_count);

#pragma omp parallel num_threads(nt)
    {
        std::vector<u64> bits;
        FactorScratch fs;
        std::vector<u64> lcounts(m, 0);
        u64 lprimes = 0, lroot = 0;
#pragma omp for schedule(dynamic)
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(plan.segment_count); ++idx) {
            u64 lo = plan.lo(idx);
            u64 slots = plan.slots(idx, x);
            sieve_segment(lo, slots, base, bits);
            factor_shifted(lo, slots, x, base, bits, fs);
            for (u64 i = 0; i < slots; ++i) {
                if (test_bit(bits, i)) continue;
                u64 p = lo + 2 * i;
                ++lprimes;
                u64 gm = reduce_mod(cfg.g, p);
                if (gm == 0) continue;
                if (primroot_from_factors(gm, p, i, fs)) {
                    ++lroot;
                    ++lcounts[p % m];
                }
            }
        }
#pragma omp critical
        {
            total_primes += lprimes;
            total_root += lroot;
            for (u64 c = 0; c < m; ++c) counts[c] += lcounts[c];
        }
    }

    // p = 2: the unit group mod 2 is trivial, so any odd g generates it.
    if (x >= 2) {
        ++total_primes;
        if (cfg.g % 2 != 0) {
            ++total_root;
            ++counts[2 % m];
        }
    }

    out.total_primes = total_primes;
    out.total_primroot = total_root;
    for (u64 c = 0; c < m; ++c)
        if (counts[c] > 0 || std::gcd(c, m) == 1) out.counts[c] = counts[c];
    return out;
}

CensusResult run_census_reference(const CensusConfig& cfg) {
    validate_census_config(cfg);
    const u64 x = cfg.x_limit;
    if (x > 100'000'000)
        throw std::invalid_argument("reference census: x too large");
    const u64 m = cfg.m;
    CensusResult out;
    out.g = cfg.g;
    out.x_limit = x;
    out.m = m;

    std::vector<std::uint8_t> composite(x + 1, 0);
    std::vector<u64> counts(m, 0);
    for (u64 p = 3; p <= x; p += 2) {
        if (composite[p]) continue;
        for (u64 j = p * p; j <= x; j += 2 * p) composite[j] = 1;
        ++out.total_primes;
        u64 gm = reduce_mod(cfg.g, p);
        if (gm == 0) continue;
        u64 n = p - 1;
        u64 rest = n;
        bool ok = true;
        for (u64 q = 2; q * q <= rest && ok; ++q) {
            if (rest % q != 0) continue;
            while (rest % q == 0) rest /= q;
            if (modpow_u(gm, n / q, p) == 1) ok = false;
        }
        if (ok && rest > 1 && modpow_u(gm, n / rest, p) == 1) ok = false;
        if (ok) {
            ++out.total_primroot;
            ++counts[p % m];
        }
    }
    if (x >= 2) {
        ++out.total_primes;
        if (cfg.g % 2 != 0) {
            ++out.total_primroot;
            ++counts[2 % m];
        }
    }
    for (u64 c = 0; c < m; ++c)
        if (counts[c] > 0 || std::gcd(c, m) == 1) out.counts[c] = counts[c];
    return out;
}

CensusResult fold_census(const CensusResult& r, u64 new_m) {
    if (new_m == 0 || r.m % new_m != 0)
        throw std::invalid_argument("fold_census: new modulus must divide the old one");
    CensusResult out;
    out.g = r.g;
    out.x_limit = r.x_limit;
    out.m = new_m;
    out.total_primes = r.total_primes;
    out.total_primroot = r.total_primroot;
    for (u64 c = 0; c < new_m; ++c)
        if (std::gcd(c, new_m) == 1) out.counts[c] = 0;
    for (const auto& [c, n] : r.counts) out.counts[c % new_m] += n;
    return out;
}

u64 p_k_count(u64 x, u64 m, u64 a, u64 k, i64 g) {
    if (k == 0 || !is_squarefree(k)) throw NotSquarefree("p_k_count: k must be squarefree");
    if (m == 0) throw std::invalid_argument("p_k_count: m must be positive");
    if (std::gcd(a, m) != 1) throw NotCoprime("p_k_count: gcd(a, m) > 1");
    if (x < 2) return 0;
    const u64 am = a % m;
    auto base = primes_up_to(isqrt(x));
    SegmentPlan plan = plan_segments(x, u64{1} << 20);
    u64 total = (2 % m == am && k == 1) ? 1 : 0; // p = 2 only meets k = 1
#pragma omp parallel
    {
        std::vector<u64> bits;
        u64 local = 0;
#pragma omp for schedule(dynamic)
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(plan.segment_count); ++idx) {
            u64 lo = plan.lo(idx);
            u64 slots = plan.slots(idx, x);
            sieve_segment(lo, slots, base, bits);
            for (u64 i = 0; i < slots; ++i) {
                if (test_bit(bits, i)) continue;
                u64 p = lo + 2 * i;
                if (p % m != am) continue;
                if (k == 1) {
                    ++local;
                    continue;
                }
                if ((p - 1) % k != 0) continue;
                u64 gm = reduce_mod(g, p);
                if (modpow_u(gm, (p - 1) / k, p) == 1) ++local;
            }
        }
#pragma omp atomic
        total += local;
    }
    return total;
}

ChebotarevReport chebotarev_check(u64 x, u64 m, u64 a, u64 k, i64 g) {
    DensityContext ctx = density_context(a, m, g);
    double predicted = 0.0;
    if (splitting_compatible(ctx.a, m, k, ctx.ginv, ctx.gamma))
        predicted = li(static_cast<double>(x)) /
                    static_cast<double>(field_degree(m, k, ctx.ginv));
    u64 observed = p_k_count(x, m, a, k, g);
    double ratio;
    if (predicted > 0.0)
        ratio = static_cast<double>(observed) / predicted;
    else
        ratio = observed == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    return {observed, predicted, ratio};
}

u64 squarefree_shift_count(u64 x, u64 a, i64 b, i64 g, int thread_count) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("squarefree_shift_count: need a > 0 and b != 0");
    if (gcd_abs(b, a) != 1) throw NotCoprime("squarefree_shift_count: gcd(a, b) > 1");
    g_invariants(g);
    if (x < 2) return 0;
    u64 ab_abs = b < 0 ? static_cast<u64>(-b) : static_cast<u64>(b);
    if (a > (kMaxCensusX * 4) / x)
        throw std::invalid_argument("squarefree_shift_count: a*x out of range");

    // Residues p = u0(d) mod d^2 carry d^2 | ap+b; the count keeps the
    // unmarked primes. d runs over primes not dividing a (d | a never marks:
    // gcd(a,b) = 1 keeps d^2 away from ap+b).
    u64 dmax = isqrt(a * x + ab_abs);
    struct Mark {
        u64 dd;
        u64 u0;
    };
    std::vector<Mark> marks;
    for (u64 d : primes_up_to(dmax)) {
        if (a % d == 0) continue;
        marks.push_back({d * d, shift_residue(a, b, d)});
    }

    auto base = primes_up_to(isqrt(x));
    SegmentPlan plan = plan_segments(x, u64{1} << 19);
    u64 total = 0;
    int nt = resolve_threads(thread_count);

#pragma omp parallel num_threads(nt)
    {
        std::vector<u64> bits, sf;
        FactorScratch fs;
        u64 local = 0;
#pragma omp for schedule(dynamic)
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(plan.segment_count); ++idx) {
            u64 lo = plan.lo(idx);
            u64 slots = plan.slots(idx, x);
            u64 hi = lo + 2 * slots;
            sieve_segment(lo, slots, base, bits);
            sf.assign((slots + 63) / 64, 0);
            for (const Mark& mk : marks) {
                u64 first;
                if (mk.u0 >= lo)
                    first = mk.u0 - (mk.u0 - lo) / mk.dd * mk.dd; // careful: smallest >= lo
                else
                    first = mk.u0 + (lo - mk.u0 + mk.dd - 1) / mk.dd * mk.dd;
                u64 step = mk.dd;
                if (step % 2 == 0) {
                    if (first % 2 == 0) continue; // marks only even positions
                } else {
                    if (first % 2 == 0) first += step;
                    step *= 2;
                }
                for (u64 p = first; p < hi; p += step) set_bit(sf, (p - lo) / 2);
            }
            factor_shifted(lo, slots, x, base, bits, fs);
            for (u64 i = 0; i < slots; ++i) {
                if (test_bit(bits, i) || test_bit(sf, i)) continue;
                u64 p = lo + 2 * i;
                u64 gm = reduce_mod(g, p);
                if (gm == 0) continue;
                if (primroot_from_factors(gm, p, i, fs)) ++local;
            }
        }
#pragma omp atomic
        total += local;
    }

    if (g % 2 != 0) { // p = 2
        i64 v = 2 * static_cast<i64>(a) + b;
        u64 av = v < 0 ? static_cast<u64>(-v) : static_cast<u64>(v);
        if (av >= 1 && is_squarefree(av)) ++total;
    }
    return total;
}

double li(double x) {
    if (x <= 2.0) return 0.0;
    struct Simpson {
        static double f(double t) { return 1.0 / std::log(t); }
        static double area(double a, double b) {
            return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
        }
        static double refine(double a, double b, double whole, double tol, int depth) {
            double mid = 0.5 * (a + b);
            double left = area(a, mid), right = area(mid, b);
            if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return refine(a, mid, left, 0.5 * tol, depth - 1) +
                   refine(mid, b, right, 0.5 * tol, depth - 1);
        }
    };
    double rough = Simpson::area(2.0, x);
    double tol = std::max(1e-11 * std::abs(rough), 1e-13);
    return Simpson::refine(2.0, x, rough, tol, 48);
}

double error_diagnostic(u64 x, u64 m, u64 a, i64 g, const CensusResult& census) {
    if (census.x_limit != x || census.m != m || census.g != g)
        throw std::invalid_argument("error_diagnostic: census does not cover (g, x, m)");
    auto it = census.counts.find(a % m);
    double observed = it == census.counts.end() ? 0.0 : static_cast<double>(it->second);
    ArtinMultiple d = density(a, m, g);
    double delta_mid = density_value(d, artin_constant_tight()).mid();
    double lx = std::log(static_cast<double>(x));
    double main_term = delta_mid * static_cast<double>(x) / lx;
    double g_abs = std::abs(static_cast<double>(g));
    double scale = static_cast<double>(euler_phi(m)) * lx * lx /
                   (static_cast<double>(x) * std::log(std::max(g_abs, 2.0)) *
                    std::max(std::log(2.0 * static_cast<double>(m)), std::log(lx)));
    return std::abs(observed - main_term) * scale;
}

void save_census_csv(const CensusResult& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open census cache for writing: " + path);
    out << "g,x,m,a,count\n";
    for (const auto& [a, n] : r.counts)
        out << r.g << ',' << r.x_limit << ',' << r.m << ',' << a << ',' << n << '\n';
    out << r.g << ',' << r.x_limit << ',' << r.m << ",_total," << r.total_primroot << '\n';
    if (!out.good()) throw IoError("failed writing census cache: " + path);
}

CensusResult load_census_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open census cache: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "g,x,m,a,count")
        throw IoError("bad census cache header in " + path);
    CensusResult r;
    bool have_total = false, have_any = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field[5];
        for (int i = 0; i < 5; ++i)
            if (!std::getline(row, field[i], ','))
                throw IoError("bad census cache row in " + path);
        try {
            i64 g = std::stoll(field[0]);
            u64 x = std::stoull(field[1]);
            u64 m = std::stoull(field[2]);
            if (!have_any) {
                r.g = g;
                r.x_limit = x;
                r.m = m;
                have_any = true;
            } else if (g != r.g || x != r.x_limit || m != r.m) {
                throw IoError("inconsistent census cache keys in " + path);
            }
            u64 n = std::stoull(field[4]);
            if (field[3] == "_total") {
                r.total_primroot = n;
                have_total = true;
            } else {
                r.counts[std::stoull(field[3])] = n;
            }
        } catch (const std::invalid_argument&) {
            throw IoError("unparsable census cache row in " + path);
        } catch (const std::out_of_range&) {
            throw IoError("unparsable census cache row in " + path);
        }
    }
    if (!have_any || !have_total) throw IoError("incomplete census cache: " + path);
    r.total_primes = count_primes(r.x_limit);
    return r;
}

} // namespace artin
