#pragma once

// Simple undirected graphs, the standard families and the graph operations
// (union, join, corona and the four products).
//
// Vertices are identities 0 .. order-1. Each vertex may carry a structured
// name recording where it came from:
//   - products:   ProductCoord{outer, inner}, identity = outer + inner * n1
//   - corona:     CopyCoord{j, 0} is base vertex j, CopyCoord{j, t + 1} is
//                 vertex t of the j-th copy
//   - union/join: CopyCoord{operand, vertex-within-operand}
// All indices are zero-based.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace flc {

using Vertex = std::size_t;

struct ProductCoord {
    std::size_t outer;
    std::size_t inner;
    friend auto operator<=>(const ProductCoord&, const ProductCoord&) = default;
};

struct CopyCoord {
    std::size_t copy;
    std::size_t position;
    friend auto operator<=>(const CopyCoord&, const CopyCoord&) = default;
};

using VertexName = std::variant<std::size_t, ProductCoord, CopyCoord>;

std::string to_string(const VertexName& name);

/// Immutable simple graph. Edges are stored as (u, v) with u < v, sorted.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph() = default;

    /// Throws std::invalid_argument on self-loops, parallel edges, endpoints
    /// out of range or a name list of the wrong length / with duplicates.
    /// An empty name list gives plain index names.
    Graph(std::size_t order, std::vector<Edge> edges, std::vector<VertexName> names = {});

    std::size_t order() const noexcept { return order_; }
    std::size_t size() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const VertexName& name(Vertex v) const { return names_.at(v); }
    const std::vector<VertexName>& names() const noexcept { return names_; }

    bool has_edge(Vertex u, Vertex v) const noexcept;
    std::size_t degree(Vertex v) const;
    bool is_connected() const;

    /// Structural equality: same order and edge set (names ignored).
    bool same_structure(const Graph& other) const noexcept
    {
        return order_ == other.order_ && edges_ == other.edges_;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexName> names_;
};

inline std::uint64_t max_edges(std::uint64_t order) noexcept
{
    return order < 2 ? 0 : order * (order - 1) / 2;
}

// Families --------------------------------------------------------------------

Graph path(std::size_t n);     ///< P_n, n >= 1, edges i(i+1)
Graph cycle(std::size_t n);    ///< C_n, n >= 3
Graph star(std::size_t n);     ///< S_n, n >= 2, centre is vertex 0
Graph wheel(std::size_t n);    ///< W_n, n >= 4, hub 0, rim 1..n-1 in cycle order
Graph complete(std::size_t n); ///< K_n, n >= 1
Graph empty_graph(std::size_t n);

// Operations ------------------------------------------------------------------

Graph graph_union(std::span<const Graph> graphs);
Graph join(const Graph& g1, const Graph& g2);
Graph corona(const Graph& g1, const Graph& g2);

enum class ProductKind { lexicographic, cartesian, tensor, strong };

std::string to_string(ProductKind kind);
ProductKind parse_product_kind(const std::string& text);

Graph lexicographic(const Graph& g1, const Graph& g2);
Graph cartesian(const Graph& g1, const Graph& g2);
Graph tensor(const Graph& g1, const Graph& g2);
Graph strong(const Graph& g1, const Graph& g2);
Graph product(ProductKind kind, const Graph& g1, const Graph& g2);

/// Identity of (x, y) in any product of g1 and g2.
inline Vertex product_vertex(Vertex x, Vertex y, std::size_t n1) noexcept { return x + y * n1; }

/// Deterministic pseudo-random connected graph with n vertices and m edges:
/// a random spanning tree plus m - (n - 1) distinct extra edges. Requires
/// n >= 1 and n - 1 <= m <= n(n-1)/2.
Graph connected_graph(std::size_t n, std::size_t m, std::uint64_t seed);

} // namespace flc
