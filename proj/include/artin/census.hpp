#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "artin/arith.hpp"

namespace artin {

/// Smallest-prime-factor table: spf(n) is the least prime dividing n, for
/// 2 <= n <= limit. Built once, then shared read-only between threads.
class SpfTable {
  public:
    explicit SpfTable(u64 limit);
    u64 limit() const { return limit_; }
    u64 spf(u64 n) const { return table_[n]; }

  private:
    u64 limit_;
    std::vector<std::uint32_t> table_;
};

/// Streams the primes <= limit in increasing order to `fn`, sieving one
/// segment at a time so memory stays O(segment_size + sqrt(limit)).
void for_each_prime(u64 limit, u64 segment_size, const std::function<void(u64)>& fn);

std::vector<u64> primes_up_to(u64 limit);

/// pi(limit), segmented and OpenMP-parallel.
u64 count_primes(u64 limit, int thread_count = 0);

/// Lifts the generator test: true iff g generates the multiplicative group
/// mod p. p must be an odd prime; returns false when p | g. p-1 is factored
/// through the table, so p <= spf.limit() + 1 is required.
bool is_primitive_root(i64 g, u64 p, const SpfTable& spf);

struct CensusConfig {
    i64 g = 2;
    u64 x_limit = 100;      // >= 100, <= 2^40
    u64 m = 1;
    u64 segment_size = u64{1} << 18; // >= 2^16
    int thread_count = 0;   // 0 = OpenMP default
};

/// Counts of primes p <= x_limit by residue class mod m, restricted to p
/// with primitive root g. total_primes is pi(x); total_primroot is pi_g(x).
/// Classes are keyed by p mod m; classes not coprime to m appear only for
/// the finitely many primes dividing m.
struct CensusResult {
    i64 g = 0;
    u64 x_limit = 0;
    u64 m = 1;
    std::map<u64, u64> counts;
    u64 total_primes = 0;
    u64 total_primroot = 0;
    bool operator==(const CensusResult&) const = default;
};

/// OpenMP-parallel census. Each worker owns its segment's sieve and factor
/// arrays and a partial result; partials merge by componentwise addition.
/// p = 2 is counted as having primitive root g iff g is odd; primes dividing
/// g are never counted.
CensusResult run_census(const CensusConfig& cfg);

/// Serial reference implementation: monolithic sieve plus trial-division
/// factoring of p-1. Kept deliberately independent of the segmented kernel;
/// used by the tests and the benchmark.
CensusResult run_census_reference(const CensusConfig& cfg);

/// Re-buckets a census mod m into new_m, which must divide m.
CensusResult fold_census(const CensusResult& r, u64 new_m);

/// Number of primes p <= x with p = a mod m, k | p-1 and g^((p-1)/k) = 1
/// mod p (k squarefree). k = 1 places no condition beyond the progression.
u64 p_k_count(u64 x, u64 m, u64 a, u64 k, i64 g);

struct ChebotarevReport {
    u64 observed = 0;
    double predicted = 0.0;
    double ratio = 0.0; // observed/predicted; 1 when both vanish
};

/// Compares p_k_count against its Chebotarev-type main term
/// eps(m,k)/(k1 phi([m,k])) * li(x), or 0 when the class is empty.
ChebotarevReport chebotarev_check(u64 x, u64 m, u64 a, u64 k, i64 g);

/// Number of primes p <= x with primitive root g such that ap+b is
/// squarefree (of |ap+b|; values 1 count, 0 does not). Sieves the residues
/// p = u0(d) mod d^2 over primes d <= sqrt(ax+|b|).
u64 squarefree_shift_count(u64 x, u64 a, i64 b, i64 g, int thread_count = 0);

/// Offset logarithmic integral: adaptive quadrature of dt/log t over [2, x],
/// relative error <= 1e-10.
double li(double x);

/// Normalized deviation |observed - delta*x/log x| * phi(m) * (log x)^2 /
/// (x * log max(|g|,2) * max(log 2m, log log x)) -- an estimate of the
/// implied constant in the census error term. The census must have been run
/// at exactly (g, x, m), and gcd(a, m) = 1.
double error_diagnostic(u64 x, u64 m, u64 a, i64 g, const CensusResult& census);

/// Cache format: header "g,x,m,a,count", one row per residue class in
/// ascending a, then a "_total" row carrying pi_g(x). Throws IoError.
void save_census_csv(const CensusResult& r, const std::string& path);

/// Loads a cache file; pi(x) is not stored in the format and is re-counted
/// with a plain prime sieve (cheap next to the census itself).
CensusResult load_census_csv(const std::string& path);

} // namespace artin
