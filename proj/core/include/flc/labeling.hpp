#pragma once

// (a,b)-Fibonacci-Legendre cordial (FLC) labelings.
//
// A labeling f is a bijection V(G) -> {0..n-1}. Each edge uv gets
//   f*(uv) = (1 + ((F_f(u) + F_f(v)) / p)) / 2   if the sum is nonzero mod p
//   f*(uv) = 0                                    otherwise
// and f is cordial when the counts e0, e1 of the two edge labels differ by at
// most one. Fibonacci values are always taken mod p.

#include "flc/graph.hpp"
#include "flc/numtheory.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace flc {

class VertexLabeling {
public:
    /// Throws std::invalid_argument unless `assignment` is a bijection onto
    /// {0, ..., order-1}.
    VertexLabeling(Graph graph, std::vector<std::uint64_t> assignment);

    static VertexLabeling identity(Graph graph);

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<std::uint64_t>& assignment() const noexcept { return assignment_; }
    std::uint64_t operator[](Vertex v) const { return assignment_.at(v); }

    friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

private:
    Graph graph_;
    std::vector<std::uint64_t> assignment_;
};

struct EdgeLabelSummary {
    std::uint64_t e0 = 0;
    std::uint64_t e1 = 0;

    std::int64_t difference() const noexcept
    {
        return static_cast<std::int64_t>(e0) - static_cast<std::int64_t>(e1);
    }
    bool cordial() const noexcept { return difference() >= -1 && difference() <= 1; }

    friend bool operator==(const EdgeLabelSummary&, const EdgeLabelSummary&) = default;
};

/// Precomputed F_i mod p for one period, for evaluating many labelings.
class EdgeLabeler {
public:
    EdgeLabeler(std::uint64_t p, const InitialPair& pair);

    std::uint64_t prime() const noexcept { return table_.modulus(); }
    std::uint64_t period() const noexcept { return table_.period(); }

    /// Edge label for vertex labels x and y.
    int label(std::uint64_t x, std::uint64_t y) const;

private:
    PeriodTable table_;
};

/// Throws std::invalid_argument when uv is not an edge of f's graph.
int induced_edge_label(const VertexLabeling& f, Vertex u, Vertex v, std::uint64_t p, const InitialPair& pair);

EdgeLabelSummary evaluate(const VertexLabeling& f, std::uint64_t p, const InitialPair& pair);
EdgeLabelSummary evaluate(const VertexLabeling& f, const EdgeLabeler& labeler);

// Constructive labelings ------------------------------------------------------

/// Raised when a constructor's hypotheses fail. The message names the
/// violated condition with the actual values.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Checking {
    strict,    ///< verify every hypothesis before building
    unchecked, ///< build whenever the labeling is well defined
};

/// A constructed labeling together with the counts the construction predicts.
struct Construction {
    VertexLabeling labeling;
    PLRecord record;
    EdgeLabelSummary predicted;
    /// e0 - e1 of the prediction; for the corona/join families this is the
    /// epsilon inferred from g's size.
    std::int64_t epsilon = 0;
};

/// P_{q*pi + 1} with f(v_i) = i. Requires p to be 0-PL relative to pair.
Construction label_path(std::uint64_t p, const InitialPair& pair, std::uint64_t q,
                        Checking checking = Checking::strict);

/// S_{q*pi + 1}, centre labeled 0. Requires pair = (0, b), 0-PL.
Construction label_star(std::uint64_t p, const InitialPair& pair, std::uint64_t q,
                        Checking checking = Checking::strict);

/// W_{q*pi + 1}, hub labeled 0, rim 1..q*pi. Requires pair = (0, b), 0-PL.
Construction label_wheel(std::uint64_t p, const InitialPair& pair, std::uint64_t q,
                         Checking checking = Checking::strict);

/// C_{q*pi} (op) g with f((u_j, v_i)) = j + i*q*pi. Requires 0-PL, g
/// connected and, except for the tensor product, p = +-1 (mod 8).
Construction label_cycle_product(std::uint64_t p, const InitialPair& pair, std::uint64_t q, const Graph& g,
                                 ProductKind op, Checking checking = Checking::strict);

/// g o P_{pi-1} for pair (0, b), k >= 1, (F_1/p) = (F_2/p) = 1 and
/// |E(g)| = n(2k - 1) + eps with eps in {-1, 0, 1}.
Construction label_corona_path(std::uint64_t p, const InitialPair& pair, const Graph& g,
                               Checking checking = Checking::strict);

/// g + (hs[0] u ... u hs[pi-2]) for pair (0, b), k >= -1. Every hs[j] has
/// order pi-1 and a common size m; g has order pi-1 and size
/// (k+1)(m + (pi-1)^2) + eps. p = +-1 (mod 8) unless m = 0.
Construction label_join(std::uint64_t p, const InitialPair& pair, const Graph& g, const std::vector<Graph>& hs,
                        Checking checking = Checking::strict);

/// g o h for pair (0, b), k >= -1, h of order pi-1 and size m, g connected of
/// order pi-1 and size (k+1)(m + pi - 1) + eps. p = +-1 (mod 8) unless m = 0.
Construction label_corona(std::uint64_t p, const InitialPair& pair, const Graph& g, const Graph& h,
                          Checking checking = Checking::strict);

// Exhaustive search -----------------------------------------------------------

inline constexpr std::size_t kDefaultSearchCap = 9;

/// First cordial labeling in lexicographic order of assignment vectors, or
/// nullopt if none exists. Throws std::invalid_argument if the order exceeds
/// cap. With workers > 1 the first label value is partitioned across threads;
/// the result is the same as the sequential search.
std::optional<VertexLabeling> brute_force_flc_search(const Graph& g, std::uint64_t p, const InitialPair& pair,
                                                     std::size_t cap = kDefaultSearchCap, unsigned workers = 1);

} // namespace flc
