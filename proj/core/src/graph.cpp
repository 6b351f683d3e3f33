#include "flc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace flc {

std::string to_string(const VertexName& name)
{
    struct Visitor {
        std::string operator()(std::size_t index) const { return std::to_string(index); }
        std::string operator()(const ProductCoord& c) const
        {
            return "(" + std::to_string(c.outer) + "," + std::to_string(c.inner) + ")";
        }
        std::string operator()(const CopyCoord& c) const
        {
            return std::to_string(c.position) + "^" + std::to_string(c.copy);
        }
    };
    return std::visit(Visitor{}, name);
}

Graph::Graph(std::size_t order, std::vector<Edge> edges, std::vector<VertexName> names)
    : order_(order), edges_(std::move(edges)), names_(std::move(names))
{
    for (auto& [u, v] : edges_) {
        if (u >= order_ || v >= order_) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                        std::to_string(v));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (const auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw std::invalid_argument("parallel edge " + std::to_string(dup->first) + "-" +
                                    std::to_string(dup->second));
    }

    if (names_.empty()) {
        names_.reserve(order_);
        for (std::size_t i = 0; i < order_; ++i) {
            names_.emplace_back(i);
        }
    } else {
        if (names_.size() != order_) {
            throw std::invalid_argument("name list length does not match order");
        }
        std::vector<VertexName> sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("duplicate vertex names");
        }
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept
{
    if (u > v) {
        std::swap(u, v);
    }
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::size_t Graph::degree(Vertex v) const
{
    if (v >= order_) {
        throw std::out_of_range("vertex out of range");
    }
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
        return e.first == v || e.second == v;
    }));
}

bool Graph::is_connected() const
{
    if (order_ == 0) {
        return true;
    }
    // Union-find over the edge list.
    std::vector<std::size_t> parent(order_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = order_;
    for (const auto& [u, v] : edges_) {
        const std::size_t ru = find(u);
        const std::size_t rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return components == 1;
}

// Families --------------------------------------------------------------------

namespace {

void require_order(const char* family, std::size_t n, std::size_t minimum)
{
    if (n < minimum) {
        throw std::invalid_argument(std::string(family) + " requires order >= " + std::to_string(minimum) +
                                    ", got " + std::to_string(n));
    }
}

} // namespace

Graph path(std::size_t n)
{
    require_order("path", n, 1);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n)
{
    require_order("cycle", n, 3);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph star(std::size_t n)
{
    require_order("star", n, 2);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        edges.emplace_back(0, i);
    }
    return Graph(n, std::move(edges));
}

Graph wheel(std::size_t n)
{
    require_order("wheel", n, 4);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i + 1 < n ? i + 1 : 1);
    }
    return Graph(n, std::move(edges));
}

Graph complete(std::size_t n)
{
    require_order("complete graph", n, 1);
    std::vector<Graph::Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph empty_graph(std::size_t n) { return Graph(n, {}); }

// Operations ------------------------------------------------------------------

Graph graph_union(std::span<const Graph> graphs)
{
    if (graphs.empty()) {
        throw std::invalid_argument("union of an empty list of graphs");
    }
    std::vector<Graph::Edge> edges;
    std::vector<VertexName> names;
    std::size_t offset = 0;
    for (std::size_t j = 0; j < graphs.size(); ++j) {
        const Graph& g = graphs[j];
        for (const auto& [u, v] : g.edges()) {
            edges.emplace_back(u + offset, v + offset);
        }
        for (std::size_t i = 0; i < g.order(); ++i) {
            names.emplace_back(CopyCoord{j, i});
        }
        offset += g.order();
    }
    return Graph(offset, std::move(edges), std::move(names));
}

Graph join(const Graph& g1, const Graph& g2)
{
    const std::size_t n1 = g1.order();
    const std::size_t n2 = g2.order();
    std::vector<Graph::Edge> edges(g1.edges().begin(), g1.edges().end());
    for (const auto& [u, v] : g2.edges()) {
        edges.emplace_back(u + n1, v + n1);
    }
    for (std::size_t u = 0; u < n1; ++u) {
        for (std::size_t v = 0; v < n2; ++v) {
            edges.emplace_back(u, n1 + v);
        }
    }
    std::vector<VertexName> names;
    for (std::size_t i = 0; i < n1; ++i) {
        names.emplace_back(CopyCoord{0, i});
    }
    for (std::size_t i = 0; i < n2; ++i) {
        names.emplace_back(CopyCoord{1, i});
    }
    return Graph(n1 + n2, std::move(edges), std::move(names));
}

Graph corona(const Graph& g1, const Graph& g2)
{
    const std::size_t n1 = g1.order();
    const std::size_t n2 = g2.order();
    std::vector<Graph::Edge> edges(g1.edges().begin(), g1.edges().end());
    std::vector<VertexName> names;
    for (std::size_t j = 0; j < n1; ++j) {
        names.emplace_back(CopyCoord{j, 0});
    }
    for (std::size_t j = 0; j < n1; ++j) {
        const std::size_t base = n1 + j * n2;
        for (const auto& [u, v] : g2.edges()) {
            edges.emplace_back(base + u, base + v);
        }
        for (std::size_t t = 0; t < n2; ++t) {
            edges.emplace_back(j, base + t);
            names.emplace_back(CopyCoord{j, t + 1});
        }
    }
    return Graph(n1 * (1 + n2), std::move(edges), std::move(names));
}

std::string to_string(ProductKind kind)
{
    switch (kind) {
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::tensor: return "tensor";
    case ProductKind::strong: return "strong";
    }
    return "unknown";
}

ProductKind parse_product_kind(const std::string& text)
{
    if (text == "lexicographic" || text == "lex") {
        return ProductKind::lexicographic;
    }
    if (text == "cartesian" || text == "cart") {
        return ProductKind::cartesian;
    }
    if (text == "tensor") {
        return ProductKind::tensor;
    }
    if (text == "strong") {
        return ProductKind::strong;
    }
    throw std::invalid_argument("unknown product '" + text + "'");
}

namespace {

std::vector<VertexName> product_names(std::size_t n1, std::size_t n2)
{
    std::vector<VertexName> names;
    names.reserve(n1 * n2);
    for (std::size_t y = 0; y < n2; ++y) {
        for (std::size_t x = 0; x < n1; ++x) {
            names.emplace_back(ProductCoord{x, y});
        }
    }
    return names;
}

// Edges (x, c)(x, d) for every x in g1 and cd in E(g2).
void add_fibre_edges(const Graph& g1, const Graph& g2, std::vector<Graph::Edge>& edges)
{
    const std::size_t n1 = g1.order();
    for (std::size_t x = 0; x < n1; ++x) {
        for (const auto& [c, d] : g2.edges()) {
            edges.emplace_back(product_vertex(x, c, n1), product_vertex(x, d, n1));
        }
    }
}

// Edges (a, y)(b, y) for every ab in E(g1) and y in g2.
void add_layer_edges(const Graph& g1, const Graph& g2, std::vector<Graph::Edge>& edges)
{
    const std::size_t n1 = g1.order();
    for (const auto& [a, b] : g1.edges()) {
        for (std::size_t y = 0; y < g2.order(); ++y) {
            edges.emplace_back(product_vertex(a, y, n1), product_vertex(b, y, n1));
        }
    }
}

void add_tensor_edges(const Graph& g1, const Graph& g2, std::vector<Graph::Edge>& edges)
{
    const std::size_t n1 = g1.order();
    for (const auto& [a, b] : g1.edges()) {
        for (const auto& [c, d] : g2.edges()) {
            edges.emplace_back(product_vertex(a, c, n1), product_vertex(b, d, n1));
            edges.emplace_back(product_vertex(a, d, n1), product_vertex(b, c, n1));
        }
    }
}

} // namespace

Graph lexicographic(const Graph& g1, const Graph& g2)
{
    const std::size_t n1 = g1.order();
    std::vector<Graph::Edge> edges;
    for (const auto& [a, b] : g1.edges()) {
        for (std::size_t y1 = 0; y1 < g2.order(); ++y1) {
            for (std::size_t y2 = 0; y2 < g2.order(); ++y2) {
                edges.emplace_back(product_vertex(a, y1, n1), product_vertex(b, y2, n1));
            }
        }
    }
    add_fibre_edges(g1, g2, edges);
    return Graph(n1 * g2.order(), std::move(edges), product_names(n1, g2.order()));
}

Graph cartesian(const Graph& g1, const Graph& g2)
{
    std::vector<Graph::Edge> edges;
    add_fibre_edges(g1, g2, edges);
    add_layer_edges(g1, g2, edges);
    return Graph(g1.order() * g2.order(), std::move(edges), product_names(g1.order(), g2.order()));
}

Graph tensor(const Graph& g1, const Graph& g2)
{
    std::vector<Graph::Edge> edges;
    add_tensor_edges(g1, g2, edges);
    return Graph(g1.order() * g2.order(), std::move(edges), product_names(g1.order(), g2.order()));
}

Graph strong(const Graph& g1, const Graph& g2)
{
    std::vector<Graph::Edge> edges;
    add_fibre_edges(g1, g2, edges);
    add_layer_edges(g1, g2, edges);
    add_tensor_edges(g1, g2, edges);
    return Graph(g1.order() * g2.order(), std::move(edges), product_names(g1.order(), g2.order()));
}

Graph product(ProductKind kind, const Graph& g1, const Graph& g2)
{
    switch (kind) {
    case ProductKind::lexicographic: return lexicographic(g1, g2);
    case ProductKind::cartesian: return cartesian(g1, g2);
    case ProductKind::tensor: return tensor(g1, g2);
    case ProductKind::strong: return strong(g1, g2);
    }
    throw std::invalid_argument("unknown product kind");
}

namespace {

// Uniform draw in [0, bound) by rejection; unlike std::uniform_int_distribution
// the sequence is identical across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace

Graph connected_graph(std::size_t n, std::size_t m, std::uint64_t seed)
{
    if (n == 0) {
        throw std::invalid_argument("connected_graph requires at least one vertex");
    }
    if (m + 1 < n || m > max_edges(n)) {
        throw std::invalid_argument("no simple connected graph has order " + std::to_string(n) + " and size " +
                                    std::to_string(m) + " (need " + std::to_string(n - 1) + " <= m <= " +
                                    std::to_string(max_edges(n)) + ")");
    }
    std::mt19937_64 rng(seed);

    // Random recursive tree over a shuffled vertex order.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(order[i - 1], order[draw_below(rng, i)]);
    }
    std::set<Graph::Edge> chosen;
    for (std::size_t i = 1; i < n; ++i) {
        const Vertex parent = order[draw_below(rng, i)];
        const Vertex child = order[i];
        chosen.emplace(std::min(parent, child), std::max(parent, child));
    }

    const std::size_t extra = m - (n - 1);
    const std::uint64_t available = max_edges(n) - (n - 1);
    if (extra * 2 <= available) {
        while (chosen.size() < m) {
            const Vertex u = draw_below(rng, n);
            const Vertex v = draw_below(rng, n);
            if (u != v) {
                chosen.emplace(std::min(u, v), std::max(u, v));
            }
        }
    } else {
        std::vector<Graph::Edge> candidates;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (!chosen.contains({u, v})) {
                    candidates.emplace_back(u, v);
                }
            }
        }
        for (std::size_t i = 0; i < extra; ++i) {
            std::swap(candidates[i], candidates[i + draw_below(rng, candidates.size() - i)]);
            chosen.insert(candidates[i]);
        }
    }
    return Graph(n, std::vector<Graph::Edge>(chosen.begin(), chosen.end()));
}

} // namespace flc
