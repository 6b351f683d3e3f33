#include "flc/survey.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace flc {

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t bound)
{
    std::vector<std::uint64_t> primes;
    if (bound < 3) {
        return primes;
    }
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 3; i * i <= bound; i += 2) {
        if (!composite[i]) {
            for (std::uint64_t j = i * i; j <= bound; j += 2 * i) {
                composite[j] = true;
            }
        }
    }
    for (std::uint64_t i = 3; i <= bound; i += 2) {
        if (!composite[i]) {
            primes.push_back(i);
        }
    }
    return primes;
}

namespace {

PLRecord classify_cached(const InitialPair& pair, std::uint64_t p, RecordStore* cache)
{
    if (cache != nullptr) {
        if (auto hit = cache->find(pair, p)) {
            return *hit;
        }
    }
    PLRecord record = classify(p, pair);
    if (cache != nullptr) {
        cache->store(record);
    }
    return record;
}

// Primes in one batch are classified together; scans that stop early stop
// at a batch boundary.
constexpr std::size_t kBatch = 256;

} // namespace

std::vector<PLRecord> classify_all(const InitialPair& pair, std::span<const std::uint64_t> primes,
                                   const ScanOptions& options)
{
    std::vector<std::optional<PLRecord>> slots(primes.size());
    const unsigned workers = std::max(1U, options.workers);
    if (workers == 1 || primes.size() < 2) {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            slots[i] = classify_cached(pair, primes[i], options.cache);
        }
    } else {
        // Interleaved chunks balance the cost, which grows with p.
        std::atomic<std::size_t> next{0};
        constexpr std::size_t chunk = 16;
        auto run = [&] {
            for (std::size_t start = next.fetch_add(chunk); start < primes.size(); start = next.fetch_add(chunk)) {
                const std::size_t stop = std::min(primes.size(), start + chunk);
                for (std::size_t i = start; i < stop; ++i) {
                    slots[i] = classify_cached(pair, primes[i], options.cache);
                }
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run);
        }
    }
    std::vector<PLRecord> records;
    records.reserve(slots.size());
    for (auto& slot : slots) {
        records.push_back(std::move(*slot));
    }
    return records;
}

namespace {

// Visits classified primes in ascending order until visit returns false.
template <class Visitor>
void scan_ascending(const InitialPair& pair, std::uint64_t bound, const ScanOptions& options, Visitor&& visit)
{
    const std::vector<std::uint64_t> primes = odd_primes_upto(bound);
    for (std::size_t start = 0; start < primes.size(); start += kBatch) {
        const std::size_t stop = std::min(primes.size(), start + kBatch);
        const auto batch = classify_all(pair, std::span(primes).subspan(start, stop - start), options);
        for (const PLRecord& record : batch) {
            if (!visit(record)) {
                return;
            }
        }
    }
}

} // namespace

std::optional<ZetaEntry> zeta(const InitialPair& pair, std::int64_t k, std::uint64_t bound,
                              const ScanOptions& options)
{
    std::optional<ZetaEntry> entry;
    scan_ascending(pair, bound, options, [&](const PLRecord& record) {
        if (record.k == k) {
            entry = ZetaEntry{k, record.prime, bound};
            return false;
        }
        return true;
    });
    return entry;
}

std::vector<ZetaEntry> zeta_scatter(const InitialPair& pair, std::uint64_t bound, const ScanOptions& options)
{
    std::map<std::int64_t, std::uint64_t> first;
    for (const PLRecord& record : classify_all(pair, odd_primes_upto(bound), options)) {
        first.emplace(record.k, record.prime);
    }
    std::vector<ZetaEntry> entries;
    for (const auto& [k, prime] : first) {
        entries.push_back({k, prime, bound});
    }
    return entries;
}

std::vector<ZetaEntry> zeta_table(const InitialPair& pair, std::int64_t k_min, std::int64_t k_max,
                                  std::uint64_t bound, const ScanOptions& options)
{
    if (k_min > k_max) {
        return {};
    }
    std::map<std::int64_t, std::uint64_t> first;
    const auto wanted = static_cast<std::size_t>(k_max - k_min + 1);
    scan_ascending(pair, bound, options, [&](const PLRecord& record) {
        if (record.k >= k_min && record.k <= k_max) {
            first.emplace(record.k, record.prime);
        }
        return first.size() < wanted;
    });
    std::vector<ZetaEntry> entries;
    for (const auto& [k, prime] : first) {
        entries.push_back({k, prime, bound});
    }
    return entries;
}

std::vector<std::uint64_t> theta_prefix(const InitialPair& pair, std::int64_t k, std::size_t count,
                                        std::uint64_t bound, const ScanOptions& options)
{
    std::vector<std::uint64_t> members;
    if (count == 0) {
        return members;
    }
    scan_ascending(pair, bound, options, [&](const PLRecord& record) {
        if (record.k == k) {
            members.push_back(record.prime);
        }
        return members.size() < count;
    });
    return members;
}

SurveyCounts omega_series(const InitialPair& pair, std::int64_t k, std::uint64_t n_max, std::uint64_t step,
                          const ScanOptions& options)
{
    if (step == 0) {
        throw std::invalid_argument("omega step must be positive");
    }
    SurveyCounts counts{pair, k, {}};
    const std::vector<std::uint64_t> primes = odd_primes_upto(n_max);
    const std::vector<PLRecord> records = classify_all(pair, primes, options);

    std::vector<std::uint64_t> marks;
    for (std::uint64_t n = step; n <= n_max; n += step) {
        marks.push_back(n);
    }
    if (marks.empty() || marks.back() != n_max) {
        marks.push_back(n_max);
    }
    std::size_t index = 0;
    std::uint64_t running = 0;
    for (const std::uint64_t n : marks) {
        while (index < records.size() && records[index].prime <= n) {
            if (records[index].k == k) {
                ++running;
            }
            ++index;
        }
        counts.series.emplace_back(n, running);
    }
    return counts;
}

std::vector<ReferencePoint> reference_curve(double c, std::span<const std::int64_t> k_values)
{
    if (!(c > 0.0 && c < 1.0)) {
        throw std::invalid_argument("reference constant must lie in (0, 1)");
    }
    std::vector<ReferencePoint> points;
    points.reserve(k_values.size());
    for (const std::int64_t k : k_values) {
        const auto kd = static_cast<double>(k);
        points.push_back({k, c * kd * kd});
    }
    return points;
}

bool above_reference(const ZetaEntry& entry, double c)
{
    const auto kd = static_cast<double>(entry.k);
    return static_cast<double>(entry.prime) > c * kd * kd;
}

} // namespace flc
