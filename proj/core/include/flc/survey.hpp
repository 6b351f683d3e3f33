#pragma once

// Bounded scans over odd primes: minimal witness per k (zeta), the first
// members of the k-PL set (theta), cumulative counts (omega) and the quadratic
// reference curves used to compare against zeta.
//
// A missing zeta entry means "no witness <= bound". It never asserts that k
// is outside the Pisano set of the pair.

#include "flc/numtheory.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace flc {

/// Memo for classifications keyed by (a, b, p). Implementations must be safe
/// to call from several scan workers at once.
class RecordStore {
public:
    virtual ~RecordStore() = default;
    virtual std::optional<PLRecord> find(const InitialPair& pair, std::uint64_t p) = 0;
    virtual void store(const PLRecord& record) = 0;
};

struct ScanOptions {
    unsigned workers = 1;
    RecordStore* cache = nullptr; ///< nullptr: recompute everything
};

struct ZetaEntry {
    std::int64_t k;
    std::uint64_t prime;
    std::uint64_t bound;

    friend bool operator==(const ZetaEntry&, const ZetaEntry&) = default;
};

struct SurveyCounts {
    InitialPair pair;
    std::int64_t k;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> series; ///< (n, count)
};

struct ReferencePoint {
    std::int64_t k;
    double g;
};

/// Ascending odd primes <= bound (sieve of Eratosthenes). Empty for bound < 3.
std::vector<std::uint64_t> odd_primes_upto(std::uint64_t bound);

/// Classifies every prime in `primes`, in the same order. Work is sharded
/// over options.workers threads; the result does not depend on the count.
std::vector<PLRecord> classify_all(const InitialPair& pair, std::span<const std::uint64_t> primes,
                                   const ScanOptions& options = {});

std::optional<ZetaEntry> zeta(const InitialPair& pair, std::int64_t k, std::uint64_t bound,
                              const ScanOptions& options = {});

/// One entry per k in [k_min, k_max] that has a witness <= bound, ascending k.
std::vector<ZetaEntry> zeta_table(const InitialPair& pair, std::int64_t k_min, std::int64_t k_max,
                                  std::uint64_t bound, const ScanOptions& options = {});

/// Minimal witness for every k observed among primes <= bound, ascending k.
std::vector<ZetaEntry> zeta_scatter(const InitialPair& pair, std::uint64_t bound, const ScanOptions& options = {});

/// First `count` k-PL primes <= bound (fewer if the bound runs out).
std::vector<std::uint64_t> theta_prefix(const InitialPair& pair, std::int64_t k, std::size_t count,
                                        std::uint64_t bound, const ScanOptions& options = {});

/// Cumulative number of k-PL primes <= n for n = step, 2*step, ..., and n_max
/// itself when it is not a multiple of step.
SurveyCounts omega_series(const InitialPair& pair, std::int64_t k, std::uint64_t n_max, std::uint64_t step,
                          const ScanOptions& options = {});

/// (k, c*k^2) for each k. Throws std::invalid_argument unless 0 < c < 1.
std::vector<ReferencePoint> reference_curve(double c, std::span<const std::int64_t> k_values);

/// True when entry.prime > c * k^2.
bool above_reference(const ZetaEntry& entry, double c);

inline constexpr std::uint64_t kDefaultSurveyBound = 20000;

} // namespace flc
