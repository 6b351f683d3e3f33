#include "flc/labeling.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

namespace flc {

VertexLabeling::VertexLabeling(Graph graph, std::vector<std::uint64_t> assignment)
    : graph_(std::move(graph)), assignment_(std::move(assignment))
{
    if (assignment_.size() != graph_.order()) {
        throw std::invalid_argument("labeling has " + std::to_string(assignment_.size()) +
                                    " entries for a graph of order " + std::to_string(graph_.order()));
    }
    std::vector<bool> used(assignment_.size(), false);
    for (const std::uint64_t label : assignment_) {
        if (label >= used.size() || used[label]) {
            throw std::invalid_argument("labeling is not a bijection onto {0.." +
                                        std::to_string(graph_.order()) + "-1} (label " + std::to_string(label) +
                                        ")");
        }
        used[label] = true;
    }
}

VertexLabeling VertexLabeling::identity(Graph graph)
{
    std::vector<std::uint64_t> assignment(graph.order());
    std::iota(assignment.begin(), assignment.end(), std::uint64_t{0});
    return VertexLabeling(std::move(graph), std::move(assignment));
}

namespace {

PeriodTable checked_table(std::uint64_t p, const InitialPair& pair)
{
    require_odd_prime(p);
    return PeriodTable(pair, p);
}

} // namespace

EdgeLabeler::EdgeLabeler(std::uint64_t p, const InitialPair& pair) : table_(checked_table(p, pair)) {}

int EdgeLabeler::label(std::uint64_t x, std::uint64_t y) const
{
    const std::uint64_t p = table_.modulus();
    std::uint64_t sum = table_.at(x) + table_.at(y);
    if (sum >= p) {
        sum -= p;
    }
    if (sum == 0) {
        return 0;
    }
    return legendre_symbol(static_cast<std::int64_t>(sum), p) == 1 ? 1 : 0;
}

int induced_edge_label(const VertexLabeling& f, Vertex u, Vertex v, std::uint64_t p, const InitialPair& pair)
{
    if (!f.graph().has_edge(u, v)) {
        throw std::invalid_argument(std::to_string(u) + "-" + std::to_string(v) + " is not an edge of the graph");
    }
    require_odd_prime(p);
    const std::uint64_t sum = (fib_mod(f[u], pair, p) + fib_mod(f[v], pair, p)) % p;
    if (sum == 0) {
        return 0;
    }
    return (1 + legendre_symbol(static_cast<std::int64_t>(sum), p)) / 2;
}

EdgeLabelSummary evaluate(const VertexLabeling& f, const EdgeLabeler& labeler)
{
    EdgeLabelSummary summary;
    for (const auto& [u, v] : f.graph().edges()) {
        if (labeler.label(f[u], f[v]) == 1) {
            ++summary.e1;
        } else {
            ++summary.e0;
        }
    }
    return summary;
}

EdgeLabelSummary evaluate(const VertexLabeling& f, std::uint64_t p, const InitialPair& pair)
{
    return evaluate(f, EdgeLabeler(p, pair));
}

// Constructive labelings ------------------------------------------------------

namespace {

std::string k_text(std::int64_t k) { return k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k); }

void require_zero_pl(const PLRecord& record)
{
    if (record.k != 0) {
        throw PreconditionError("p = " + std::to_string(record.prime) + " is " + k_text(record.k) +
                                "-PL relative to " + to_string(record.pair) + ", requires 0-PL");
    }
}

void require_zero_seed(const InitialPair& pair)
{
    if (pair.a() != 0) {
        throw PreconditionError("construction requires a pair (0,b), got " + to_string(pair));
    }
}

bool plus_minus_one_mod_8(std::uint64_t p) { return p % 8 == 1 || p % 8 == 7; }

void require_plus_minus_one_mod_8(std::uint64_t p, const std::string& why)
{
    if (!plus_minus_one_mod_8(p)) {
        throw PreconditionError("p = " + std::to_string(p) + " is " + std::to_string(p % 8) + " mod 8; " + why +
                                " requires p = +-1 (mod 8)");
    }
}

void require_q(std::uint64_t q)
{
    if (q == 0) {
        throw std::invalid_argument("q must be at least 1");
    }
}

EdgeLabelSummary scaled(std::uint64_t factor, const LambdaCounts& counts)
{
    return {factor * (counts.minus + counts.zero), factor * counts.plus};
}

Construction finish(VertexLabeling labeling, const PLRecord& record, EdgeLabelSummary predicted)
{
    const std::int64_t eps = predicted.difference();
    return Construction{std::move(labeling), record, predicted, eps};
}

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Size window [centre - 1, centre + 1] for g, shared by the corona and join
// constructions. Rejects windows that no simple graph of this order can meet.
std::int64_t check_size_window(std::int64_t centre, const Graph& g, const std::string& formula)
{
    const std::int64_t lo = centre - 1;
    const std::int64_t hi = centre + 1;
    const auto cap = as_signed(max_edges(g.order()));
    if (hi < 0 || lo > cap) {
        throw PreconditionError("size window infeasible for simple graphs: " + formula + " puts |E(G)| in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "], but a graph of order " +
                                std::to_string(g.order()) + " has at most " + std::to_string(cap) + " edges");
    }
    const std::int64_t eps = as_signed(g.size()) - centre;
    if (eps < -1 || eps > 1) {
        throw PreconditionError("|E(G)| = " + std::to_string(g.size()) + " is outside the window [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "] given by " + formula);
    }
    return eps;
}

} // namespace

Construction label_path(std::uint64_t p, const InitialPair& pair, std::uint64_t q, Checking checking)
{
    require_q(q);
    const PLRecord record = classify(p, pair);
    if (checking == Checking::strict) {
        require_zero_pl(record);
    }
    auto labeling = VertexLabeling::identity(path(q * record.period + 1));
    return finish(std::move(labeling), record, scaled(q, record.lambda));
}

Construction label_star(std::uint64_t p, const InitialPair& pair, std::uint64_t q, Checking checking)
{
    require_q(q);
    if (checking == Checking::strict) {
        require_zero_seed(pair);
    }
    const PLRecord record = classify(p, pair);
    if (checking == Checking::strict) {
        require_zero_pl(record);
    }
    auto labeling = VertexLabeling::identity(star(q * record.period + 1));
    return finish(std::move(labeling), record, scaled(q, record.lambda));
}

Construction label_wheel(std::uint64_t p, const InitialPair& pair, std::uint64_t q, Checking checking)
{
    require_q(q);
    if (checking == Checking::strict) {
        require_zero_seed(pair);
    }
    const PLRecord record = classify(p, pair);
    if (checking == Checking::strict) {
        require_zero_pl(record);
    }
    if (q * record.period + 1 < 4) {
        throw PreconditionError("wheel W_" + std::to_string(q * record.period + 1) + " needs q*pi >= 3");
    }
    auto labeling = VertexLabeling::identity(wheel(q * record.period + 1));
    return finish(std::move(labeling), record, scaled(2 * q, record.lambda));
}

Construction label_cycle_product(std::uint64_t p, const InitialPair& pair, std::uint64_t q, const Graph& g,
                                 ProductKind op, Checking checking)
{
    require_q(q);
    const PLRecord record = classify(p, pair);
    if (checking == Checking::strict) {
        require_zero_pl(record);
        if (op != ProductKind::tensor) {
            require_plus_minus_one_mod_8(p, "the " + to_string(op) + " product");
        }
        if (!g.is_connected()) {
            throw PreconditionError("G must be connected");
        }
    }
    const std::uint64_t length = q * record.period;
    if (length < 3) {
        throw PreconditionError("cycle C_" + std::to_string(length) + " needs q*pi >= 3");
    }
    // Product identities are j + i * length, exactly the labeling j + (i-1)q*pi
    // with zero-based i, so the labeling is the identity map.
    auto labeling = VertexLabeling::identity(product(op, cycle(length), g));

    const std::uint64_t n = g.order();
    const std::uint64_t m = g.size();
    std::uint64_t factor = 0;
    switch (op) {
    case ProductKind::lexicographic: factor = m * q + n * n * q; break;
    case ProductKind::cartesian: factor = m * q + n * q; break;
    case ProductKind::tensor: factor = 2 * m * q; break;
    case ProductKind::strong: factor = 3 * m * q + n * q; break;
    }
    return finish(std::move(labeling), record, scaled(factor, record.lambda));
}

Construction label_corona_path(std::uint64_t p, const InitialPair& pair, const Graph& g, Checking checking)
{
    if (checking == Checking::strict) {
        require_zero_seed(pair);
    }
    const PLRecord record = classify(p, pair);
    const std::uint64_t pi = record.period;
    const std::int64_t k = record.k;
    const std::uint64_t n = g.order();
    if (checking == Checking::strict) {
        if (k < 1) {
            throw PreconditionError("p = " + std::to_string(p) + " is " + k_text(k) + "-PL relative to " +
                                    to_string(pair) + ", requires k >= 1");
        }
        const int l1 = legendre_symbol(pair.b(), p);
        const int l2 = legendre_symbol(static_cast<std::int64_t>(fib_mod(2, pair, p)), p);
        if (l1 != 1 || l2 != 1) {
            throw PreconditionError("requires (F_1/p) = (F_2/p) = 1, got (F_1/p) = " + std::to_string(l1) +
                                    " and (F_2/p) = " + std::to_string(l2));
        }
        if (!g.is_connected()) {
            throw PreconditionError("G must be connected");
        }
        check_size_window(as_signed(n) * (2 * k - 1), g, "n(2k-1) = " + std::to_string(n) + "*" +
                                                             std::to_string(2 * k - 1));
    }
    if (pi < 2 || n == 0) {
        throw PreconditionError("corona with P_{pi-1} needs pi >= 2 and a non-empty G");
    }

    const Graph graph = corona(g, path(pi - 1));
    std::vector<std::uint64_t> assignment(graph.order());
    for (std::uint64_t j = 0; j < n; ++j) {
        assignment[j] = j * pi;
        for (std::uint64_t t = 0; t + 1 < pi; ++t) {
            assignment[n + j * (pi - 1) + t] = (t + 1) + j * pi;
        }
    }
    const LambdaCounts& c = record.lambda;
    const EdgeLabelSummary predicted{g.size() + n * (2 * (c.minus + c.zero) - 1), n * (2 * c.plus - 2)};
    return finish(VertexLabeling(graph, std::move(assignment)), record, predicted);
}

namespace {

// Shared labeling of the join and corona constructions: base vertex j gets
// j*pi, vertex t of the j-th attached graph gets (j+1) + t*pi.
std::vector<std::uint64_t> attached_copies_assignment(std::uint64_t pi)
{
    const std::uint64_t n = pi - 1;
    std::vector<std::uint64_t> assignment(n + n * n);
    for (std::uint64_t j = 0; j < n; ++j) {
        assignment[j] = j * pi;
        for (std::uint64_t t = 0; t < n; ++t) {
            assignment[n + j * n + t] = (j + 1) + t * pi;
        }
    }
    return assignment;
}

void require_order(const Graph& g, std::uint64_t expected, const std::string& what)
{
    if (g.order() != expected) {
        throw PreconditionError(what + " must have order pi-1 = " + std::to_string(expected) + ", got " +
                                std::to_string(g.order()));
    }
}

void require_degenerate_free(const PLRecord& record)
{
    if (record.period < 2) {
        throw PreconditionError("degenerate input: pi = " + std::to_string(record.period) + " for p = " +
                                std::to_string(record.prime) + " and " + to_string(record.pair) +
                                " leaves graphs of order pi-1 = 0");
    }
}

void require_k_at_least_minus_one(const PLRecord& record)
{
    if (record.k < -1) {
        throw PreconditionError("p = " + std::to_string(record.prime) + " is " + k_text(record.k) +
                                "-PL relative to " + to_string(record.pair) + ", requires k >= -1");
    }
}

} // namespace

Construction label_join(std::uint64_t p, const InitialPair& pair, const Graph& g, const std::vector<Graph>& hs,
                        Checking checking)
{
    if (checking == Checking::strict) {
        require_zero_seed(pair);
    }
    const PLRecord record = classify(p, pair);
    require_degenerate_free(record);
    const std::uint64_t pi = record.period;
    const std::uint64_t n = pi - 1;
    if (checking == Checking::strict) {
        require_k_at_least_minus_one(record);
    }
    if (hs.size() != n) {
        throw PreconditionError("H must consist of pi-1 = " + std::to_string(n) + " graphs, got " +
                                std::to_string(hs.size()));
    }
    for (const Graph& h : hs) {
        require_order(h, n, "every graph of H");
    }
    require_order(g, n, "G");
    const std::uint64_t m = hs.front().size();
    if (checking == Checking::strict) {
        for (const Graph& h : hs) {
            if (h.size() != m) {
                throw PreconditionError("graphs of H must share one size, got " + std::to_string(m) + " and " +
                                        std::to_string(h.size()));
            }
        }
        const std::int64_t centre = (record.k + 1) * as_signed(m + n * n);
        check_size_window(centre, g, "(k+1)(m+(pi-1)^2) = " + std::to_string(record.k + 1) + "*" +
                                         std::to_string(m + n * n));
        if (m != 0) {
            require_plus_minus_one_mod_8(p, "H with m > 0");
        }
    }
    const Graph graph = join(g, graph_union(hs));
    const LambdaCounts& c = record.lambda;
    const std::uint64_t weight = m + n * n;
    const EdgeLabelSummary predicted{g.size() + weight * (c.minus + c.zero - 1), weight * c.plus};
    return finish(VertexLabeling(graph, attached_copies_assignment(pi)), record, predicted);
}

Construction label_corona(std::uint64_t p, const InitialPair& pair, const Graph& g, const Graph& h,
                          Checking checking)
{
    if (checking == Checking::strict) {
        require_zero_seed(pair);
    }
    const PLRecord record = classify(p, pair);
    require_degenerate_free(record);
    const std::uint64_t pi = record.period;
    const std::uint64_t n = pi - 1;
    require_order(h, n, "H");
    require_order(g, n, "G");
    const std::uint64_t m = h.size();
    if (checking == Checking::strict) {
        require_k_at_least_minus_one(record);
        if (!g.is_connected()) {
            throw PreconditionError("G must be connected");
        }
        const std::int64_t centre = (record.k + 1) * as_signed(m + n);
        check_size_window(centre, g, "(k+1)(m+pi-1) = " + std::to_string(record.k + 1) + "*" +
                                         std::to_string(m + n));
        if (m != 0) {
            require_plus_minus_one_mod_8(p, "H with m > 0");
        }
    }
    const Graph graph = corona(g, h);
    const LambdaCounts& c = record.lambda;
    const std::uint64_t weight = m + n;
    const EdgeLabelSummary predicted{g.size() + weight * (c.minus + c.zero - 1), weight * c.plus};
    return finish(VertexLabeling(graph, attached_copies_assignment(pi)), record, predicted);
}

// Exhaustive search -----------------------------------------------------------

namespace {

struct SearchContext {
    const Graph& graph;
    std::size_t n;
    std::vector<std::uint8_t> pair_label; // n x n table of edge labels by vertex label
};

bool is_cordial(const SearchContext& ctx, const std::vector<std::uint64_t>& assignment)
{
    std::int64_t balance = 0;
    for (const auto& [u, v] : ctx.graph.edges()) {
        balance += ctx.pair_label[assignment[u] * ctx.n + assignment[v]] ? 1 : -1;
    }
    return balance >= -1 && balance <= 1;
}

// Searches the block of assignments whose first entry is `first`.
std::optional<std::vector<std::uint64_t>> search_block(const SearchContext& ctx, std::uint64_t first)
{
    std::vector<std::uint64_t> assignment;
    assignment.reserve(ctx.n);
    assignment.push_back(first);
    for (std::uint64_t x = 0; x < ctx.n; ++x) {
        if (x != first) {
            assignment.push_back(x);
        }
    }
    do {
        if (is_cordial(ctx, assignment)) {
            return assignment;
        }
    } while (std::next_permutation(assignment.begin() + 1, assignment.end()));
    return std::nullopt;
}

} // namespace

std::optional<VertexLabeling> brute_force_flc_search(const Graph& g, std::uint64_t p, const InitialPair& pair,
                                                     std::size_t cap, unsigned workers)
{
    if (g.order() > cap) {
        throw std::invalid_argument("brute-force search limited to order " + std::to_string(cap) + ", got " +
                                    std::to_string(g.order()));
    }
    const EdgeLabeler labeler(p, pair);
    const std::size_t n = g.order();
    if (n == 0) {
        return VertexLabeling(g, {});
    }
    SearchContext ctx{g, n, std::vector<std::uint8_t>(n * n)};
    for (std::uint64_t x = 0; x < n; ++x) {
        for (std::uint64_t y = 0; y < n; ++y) {
            ctx.pair_label[x * n + y] = static_cast<std::uint8_t>(labeler.label(x, y));
        }
    }

    std::vector<std::optional<std::vector<std::uint64_t>>> found(n);
    if (workers <= 1) {
        for (std::uint64_t first = 0; first < n; ++first) {
            if ((found[first] = search_block(ctx, first))) {
                break;
            }
        }
    } else {
        // Blocks are handed out in increasing order; a block above the best
        // success so far cannot hold the lexicographic minimum and is skipped.
        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> best{n};
        auto run = [&] {
            for (std::uint64_t first = next++; first < n; first = next++) {
                if (first > best.load()) {
                    continue;
                }
                if ((found[first] = search_block(ctx, first))) {
                    std::uint64_t current = best.load();
                    while (first < current && !best.compare_exchange_weak(current, first)) {
                    }
                }
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < std::min<std::uint64_t>(workers, n); ++w) {
            pool.emplace_back(run);
        }
    }
    for (auto& block : found) {
        if (block) {
            return VertexLabeling(g, std::move(*block));
        }
    }
    return std::nullopt;
}

} // namespace flc
