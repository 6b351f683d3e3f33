#include "flc/numtheory.hpp"

#include <array>
#include <stdexcept>

namespace flc {

namespace {
__extension__ typedef unsigned __int128 uint128;
} // namespace

InitialPair::InitialPair(std::int64_t a, std::int64_t b) : a_(a), b_(b)
{
    if (a == 0 && b == 0) {
        throw std::invalid_argument("initial pair (0,0) is not allowed");
    }
}

std::string to_string(const InitialPair& pair)
{
    return "(" + std::to_string(pair.a()) + "," + std::to_string(pair.b()) + ")";
}

std::uint64_t reduce(std::int64_t value, std::uint64_t m)
{
    if (m == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    if (value >= 0) {
        return static_cast<std::uint64_t>(value) % m;
    }
    // -(value + 1) avoids overflow on INT64_MIN.
    const std::uint64_t magnitude = static_cast<std::uint64_t>(-(value + 1)) + 1;
    const std::uint64_t r = magnitude % m;
    return r == 0 ? 0 : m - r;
}

namespace {

void check_modulus(std::uint64_t m)
{
    if (m < 2) {
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(m));
    }
    if (m > kMaxModulus) {
        throw std::invalid_argument("modulus exceeds 2^62");
    }
}

} // namespace

ResiduePair::ResiduePair(const InitialPair& seeds, std::uint64_t m)
    : ResiduePair(reduce(seeds.a(), m == 0 ? 1 : m), reduce(seeds.b(), m == 0 ? 1 : m), m)
{
}

ResiduePair::ResiduePair(std::uint64_t x, std::uint64_t y, std::uint64_t m) : x_(x), y_(y), m_(m)
{
    check_modulus(m);
    if (x >= m || y >= m) {
        throw std::invalid_argument("residue pair out of range");
    }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    if (m <= (std::uint64_t{1} << 32)) {
        return (a % m) * (b % m) % m;
    }
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

bool is_prime(std::int64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    const auto u = static_cast<std::uint64_t>(n);
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (const std::uint64_t small : bases) {
        if (u % small == 0) {
            return u == small;
        }
    }
    std::uint64_t d = u - 1;
    unsigned shifts = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++shifts;
    }
    for (const std::uint64_t a : bases) {
        std::uint64_t x = pow_mod(a, d, u);
        if (x == 1 || x == u - 1) {
            continue;
        }
        bool witness = true;
        for (unsigned r = 1; r < shifts; ++r) {
            x = mul_mod(x, x, u);
            if (x == u - 1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

void require_odd_prime(std::uint64_t p)
{
    if (p < 3 || p > static_cast<std::uint64_t>(INT64_MAX) || !is_prime(static_cast<std::int64_t>(p))) {
        throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
    }
}

int legendre_symbol(std::int64_t a, std::uint64_t p)
{
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("legendre_symbol: p must be an odd prime, got " + std::to_string(p));
    }
    const std::uint64_t r = reduce(a, p);
    if (r == 0) {
        return 0;
    }
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t fib_mod(std::uint64_t n, const InitialPair& pair, std::uint64_t m)
{
    ResiduePair state(pair, m);
    for (std::uint64_t i = 0; i < n; ++i) {
        state.advance();
    }
    return state.x();
}

std::uint64_t pisano_period(const InitialPair& pair, std::uint64_t m)
{
    return for_each_in_period(pair, m, [](std::uint64_t, std::uint64_t) {});
}

PeriodTable::PeriodTable(const InitialPair& pair, std::uint64_t m) : m_(m)
{
    for_each_in_period(pair, m, [this](std::uint64_t, std::uint64_t r) { residues_.push_back(r); });
}

namespace {

// Residue r < p, so the legendre call never reduces a negative value.
int legendre_of_residue(std::uint64_t r, std::uint64_t p)
{
    return legendre_symbol(static_cast<std::int64_t>(r), p);
}

} // namespace

LambdaPartition lambda_partition(std::uint64_t p, const InitialPair& pair)
{
    require_odd_prime(p);
    LambdaPartition partition{p, pair, 0, {}, {}, {}};
    partition.period = for_each_in_period(pair, p, [&](std::uint64_t i, std::uint64_t r) {
        switch (legendre_of_residue(r, p)) {
        case -1: partition.members_minus.push_back(i); break;
        case 0: partition.members_zero.push_back(i); break;
        default: partition.members_plus.push_back(i); break;
        }
    });
    return partition;
}

LambdaCounts lambda_counts(std::uint64_t p, const InitialPair& pair, std::uint64_t* period)
{
    require_odd_prime(p);
    LambdaCounts counts;
    const std::uint64_t length = for_each_in_period(pair, p, [&](std::uint64_t, std::uint64_t r) {
        switch (legendre_of_residue(r, p)) {
        case -1: ++counts.minus; break;
        case 0: ++counts.zero; break;
        default: ++counts.plus; break;
        }
    });
    if (period != nullptr) {
        *period = length;
    }
    return counts;
}

bool PLRecord::consistent() const noexcept
{
    const auto pi = static_cast<std::int64_t>(period);
    return lambda.total() == period && lambda.k() == k &&
           2 * static_cast<std::int64_t>(lambda.plus) == pi + k && ((pi - k) % 2 == 0);
}

PLRecord classify(std::uint64_t p, const InitialPair& pair)
{
    std::uint64_t period = 0;
    const LambdaCounts counts = lambda_counts(p, pair, &period);
    return PLRecord{p, pair, period, counts, counts.k()};
}

std::uint64_t order_of_apparition(std::uint64_t p)
{
    require_odd_prime(p);
    ResiduePair state(0, 1, p);
    std::uint64_t n = 0;
    do {
        state.advance();
        ++n;
    } while (state.x() != 0);
    return n;
}

} // namespace flc
