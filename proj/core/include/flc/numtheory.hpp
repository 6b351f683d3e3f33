#pragma once

// Modular (a,b)-Fibonacci sequences, Pisano periods, Legendre symbols and the
// classification of odd primes by the Legendre values over one period.
//
// All arithmetic is done on residues. Raw Fibonacci values are never formed,
// so moduli up to 2^62 are supported without big integers.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flc {

/// Seeds F_0 = a, F_1 = b of an (a,b)-Fibonacci sequence. Either seed may be
/// negative; (0,0) is rejected.
class InitialPair {
public:
    InitialPair(std::int64_t a, std::int64_t b);

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }

    friend bool operator==(const InitialPair&, const InitialPair&) = default;
    friend auto operator<=>(const InitialPair&, const InitialPair&) = default;

private:
    std::int64_t a_;
    std::int64_t b_;
};

std::string to_string(const InitialPair& pair);

/// Largest modulus accepted by the residue routines.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/// Maps any integer into [0, m).
std::uint64_t reduce(std::int64_t value, std::uint64_t m);

/// One state (F_n, F_{n+1}) mod m of the recurrence.
class ResiduePair {
public:
    ResiduePair(const InitialPair& seeds, std::uint64_t m);
    ResiduePair(std::uint64_t x, std::uint64_t y, std::uint64_t m);

    std::uint64_t x() const noexcept { return x_; }
    std::uint64_t y() const noexcept { return y_; }
    std::uint64_t modulus() const noexcept { return m_; }

    /// (x, y) -> (y, x + y) mod m.
    void advance() noexcept
    {
        const std::uint64_t next = x_ + y_;
        x_ = y_;
        y_ = next >= m_ ? next - m_ : next;
    }

    friend bool operator==(const ResiduePair&, const ResiduePair&) = default;

private:
    std::uint64_t x_;
    std::uint64_t y_;
    std::uint64_t m_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Deterministic for the whole 64-bit range (strong-pseudoprime test with a
/// base set that has no composite counterexample below 2^64).
bool is_prime(std::int64_t n) noexcept;

/// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(std::uint64_t p);

/// Legendre symbol (a/p) by Euler's criterion. p must be odd and >= 3;
/// primality is not re-checked here (see require_odd_prime).
int legendre_symbol(std::int64_t a, std::uint64_t p);

/// F_n mod m by forward iteration.
std::uint64_t fib_mod(std::uint64_t n, const InitialPair& pair, std::uint64_t m);

/// Calls visit(index, F_index mod m) for index = 0 .. period-1 and returns the
/// period. Nothing is stored, so this is the streaming form of fib_mod.
template <class Visitor>
std::uint64_t for_each_in_period(const InitialPair& pair, std::uint64_t m, Visitor&& visit);

/// Smallest pi >= 1 with F_{n+pi} = F_n (mod m) for all n.
std::uint64_t pisano_period(const InitialPair& pair, std::uint64_t m);

/// One full period of F_i mod m, indexable by any n >= 0.
class PeriodTable {
public:
    PeriodTable(const InitialPair& pair, std::uint64_t m);

    std::uint64_t period() const noexcept { return residues_.size(); }
    std::uint64_t modulus() const noexcept { return m_; }
    std::uint64_t at(std::uint64_t n) const noexcept { return residues_[n % residues_.size()]; }
    const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }

private:
    std::uint64_t m_;
    std::vector<std::uint64_t> residues_;
};

struct LambdaCounts {
    std::uint64_t minus = 0; ///< |Lambda_{-1}|
    std::uint64_t zero = 0;  ///< |Lambda_0|
    std::uint64_t plus = 0;  ///< |Lambda_1|

    std::uint64_t total() const noexcept { return minus + zero + plus; }
    std::int64_t k() const noexcept
    {
        return static_cast<std::int64_t>(plus) - static_cast<std::int64_t>(minus) -
               static_cast<std::int64_t>(zero);
    }

    friend bool operator==(const LambdaCounts&, const LambdaCounts&) = default;
};

/// Indices 0 .. period-1 of one period, split by the Legendre value of F_i mod p.
struct LambdaPartition {
    std::uint64_t prime;
    InitialPair pair;
    std::uint64_t period;
    std::vector<std::uint64_t> members_minus;
    std::vector<std::uint64_t> members_zero;
    std::vector<std::uint64_t> members_plus;

    LambdaCounts counts() const noexcept
    {
        return {members_minus.size(), members_zero.size(), members_plus.size()};
    }
};

LambdaPartition lambda_partition(std::uint64_t p, const InitialPair& pair);

/// Counts only; does not materialize the member sets.
LambdaCounts lambda_counts(std::uint64_t p, const InitialPair& pair, std::uint64_t* period = nullptr);

/// A classified odd prime: p is a k-PL prime relative to pair.
struct PLRecord {
    std::uint64_t prime;
    InitialPair pair;
    std::uint64_t period;
    LambdaCounts lambda;
    std::int64_t k;

    /// Checks sum, k definition, 2|L1| = period + k and parity.
    bool consistent() const noexcept;

    friend bool operator==(const PLRecord&, const PLRecord&) = default;
};

PLRecord classify(std::uint64_t p, const InitialPair& pair);

/// Least n >= 1 with F_n = 0 (mod p) for the classical (0,1) sequence.
std::uint64_t order_of_apparition(std::uint64_t p);

// -----------------------------------------------------------------------------

template <class Visitor>
std::uint64_t for_each_in_period(const InitialPair& pair, std::uint64_t m, Visitor&& visit)
{
    const ResiduePair start(pair, m);
    ResiduePair state = start;
    // The state map is invertible mod m, so the orbit of `start` is a pure
    // cycle of length at most m^2.
    const std::uint64_t cap = m >= (std::uint64_t{1} << 32) ? ~std::uint64_t{0} : m * m;
    std::uint64_t index = 0;
    do {
        if (index >= cap) {
            throw std::logic_error("pisano orbit exceeded m^2 states");
        }
        visit(index, state.x());
        state.advance();
        ++index;
    } while (!(state == start));
    return index;
}

} // namespace flc
