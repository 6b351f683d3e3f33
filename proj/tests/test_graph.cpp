#include "oracles.hpp"

#include "flc/graph.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace flc;

TEST_CASE("graph validation and canonical edges")
{
    const Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.edges()[0] == Graph::Edge{0, 2});
    CHECK(g.edges()[1] == Graph::Edge{1, 2});
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.degree(2) == 2);
    CHECK(g == Graph(3, {{1, 2}, {0, 2}}));
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {}, {VertexName{std::size_t{0}}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {}, {VertexName{std::size_t{0}}, VertexName{std::size_t{0}}}), std::invalid_argument);
}

TEST_CASE("families")
{
    CHECK(path(3).order() == 3);
    CHECK(path(3).size() == 2);
    CHECK(path(1).size() == 0);
    CHECK(cycle(5).size() == 5);
    CHECK(cycle(5).has_edge(0, 4));
    const Graph s = star(4);
    CHECK(s.order() == 4);
    CHECK(s.size() == 3);
    CHECK(s.degree(0) == 3);
    const Graph w = wheel(4);
    CHECK(w.order() == 4);
    CHECK(w.size() == 6);
    CHECK(w.degree(0) == 3);
    CHECK(wheel(11).has_edge(1, 10));
    CHECK(complete(5).size() == 10);
    CHECK(empty_graph(4).size() == 0);
    CHECK_THROWS(path(0));
    CHECK_THROWS(cycle(2));
    CHECK_THROWS(star(1));
    CHECK_THROWS(wheel(3));
}

TEST_CASE("union")
{
    const std::vector<Graph> parts{cycle(3), path(3)};
    const Graph u = graph_union(parts);
    CHECK(u.order() == 6);
    CHECK(u.size() == 5);
    CHECK(u.has_edge(3, 4));
    CHECK(u.name(4) == VertexName{CopyCoord{1, 1}});
    const std::vector<Graph> one{path(4)};
    CHECK(graph_union(one).same_structure(path(4)));
    const std::vector<Graph> three(3, path(2));
    CHECK(graph_union(three).order() == 6);
    CHECK(graph_union(three).size() == 3);
    CHECK_THROWS(graph_union(std::vector<Graph>{}));
}

TEST_CASE("join")
{
    const Graph j = join(cycle(3), path(3));
    CHECK(j.order() == 6);
    CHECK(j.size() == 14);
    CHECK(join(complete(1), complete(1)).size() == 1);
    CHECK(join(complete(1), cycle(3)).same_structure(wheel(4)));
}

TEST_CASE("corona")
{
    const Graph c = corona(cycle(3), path(3));
    CHECK(c.order() == 12);
    CHECK(c.size() == 18);
    CHECK(corona(complete(1), empty_graph(5)).same_structure(star(6)));
    const Graph p = corona(path(2), complete(1));
    CHECK(p.order() == 4);
    CHECK(p.size() == 3);
    CHECK(oracle::edge_set(p) == oracle::EdgeSet{{0, 1}, {0, 2}, {1, 3}});
    // copy j's vertex t sits at n1 + j*n2 + t and is joined to base vertex j
    CHECK(c.has_edge(1, 3 + 1 * 3 + 2));
    CHECK_FALSE(c.has_edge(0, 3 + 1 * 3 + 2));
}

TEST_CASE("products: examples")
{
    const Graph c3 = cycle(3);
    const Graph p3 = path(3);
    CHECK(lexicographic(c3, p3).order() == 9);
    CHECK(lexicographic(c3, p3).size() == 33);
    CHECK(cartesian(c3, p3).size() == 15);
    CHECK(tensor(c3, p3).size() == 12);
    CHECK(strong(c3, p3).size() == 27);
    CHECK(tensor(c3, complete(1)).size() == 0);
    CHECK(tensor(c3, complete(1)).order() == 3);
    CHECK(product(parse_product_kind("cart"), c3, p3) == cartesian(c3, p3));
    CHECK(parse_product_kind("strong") == ProductKind::strong);
    CHECK_THROWS(parse_product_kind("box"));
    CHECK(cartesian(c3, p3).name(product_vertex(2, 1, 3)) == VertexName{ProductCoord{2, 1}});
}

TEST_CASE("products agree with the literal edge rules on random small graphs")
{
    std::mt19937_64 rng(20240611);
    const std::pair<oracle::Rule, ProductKind> kinds[] = {
        {oracle::Rule::lexicographic, ProductKind::lexicographic},
        {oracle::Rule::cartesian, ProductKind::cartesian},
        {oracle::Rule::tensor, ProductKind::tensor},
        {oracle::Rule::strong, ProductKind::strong},
    };
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n1 = 1 + rng() % 8;
        const std::size_t n2 = 1 + rng() % 8;
        const std::size_t m1 = n1 < 2 ? 0 : (n1 - 1) + rng() % (max_edges(n1) - (n1 - 1) + 1);
        const std::size_t m2 = n2 < 2 ? 0 : (n2 - 1) + rng() % (max_edges(n2) - (n2 - 1) + 1);
        const Graph g1 = connected_graph(n1, m1, rng());
        const Graph g2 = connected_graph(n2, m2, rng());
        for (const auto& [rule, kind] : kinds) {
            const Graph g = product(kind, g1, g2);
            CHECK(g.order() == n1 * n2);
            CHECK(oracle::edge_set(g) == oracle::product_edges(g1, g2, rule));
        }
        CHECK(lexicographic(g1, g2).size() == n2 * n2 * m1 + n1 * m2);
        CHECK(cartesian(g1, g2).size() == n2 * m1 + n1 * m2);
        CHECK(tensor(g1, g2).size() == 2 * m1 * m2);
        CHECK(strong(g1, g2).size() == cartesian(g1, g2).size() + tensor(g1, g2).size());
        CHECK(tensor(g2, g1).size() == tensor(g1, g2).size());
        CHECK(strong(g2, g1).size() == strong(g1, g2).size());
        CHECK(cartesian(g2, g1).size() == cartesian(g1, g2).size());

        // strong = cartesian disjoint-union tensor
        auto strong_edges = oracle::edge_set(strong(g1, g2));
        const auto cart_edges = oracle::edge_set(cartesian(g1, g2));
        const auto tensor_edges = oracle::edge_set(tensor(g1, g2));
        for (const auto& e : cart_edges) {
            CHECK(tensor_edges.count(e) == 0);
            CHECK(strong_edges.erase(e) == 1);
        }
        for (const auto& e : tensor_edges) {
            CHECK(strong_edges.erase(e) == 1);
        }
        CHECK(strong_edges.empty());

        const std::vector<Graph> both{g1, g2};
        CHECK(graph_union(both).order() == n1 + n2);
        CHECK(graph_union(both).size() == m1 + m2);
        CHECK(join(g1, g2).size() == m1 + m2 + n1 * n2);
        CHECK(corona(g1, g2).order() == n1 * (1 + n2));
        CHECK(corona(g1, g2).size() == m1 + n1 * m2 + n1 * n2);
    }
}

TEST_CASE("connected_graph")
{
    const Graph tree = connected_graph(4, 3, 7);
    CHECK(tree.size() == 3);
    CHECK(tree.is_connected());
    const Graph unicyclic = connected_graph(9, 9, 7);
    CHECK(unicyclic.size() == 9);
    CHECK(unicyclic.is_connected());
    CHECK_THROWS_AS(connected_graph(4, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(connected_graph(4, 2, 1), std::invalid_argument);
    CHECK(connected_graph(32, 480, 3) == connected_graph(32, 480, 3));
    CHECK(connected_graph(32, 480, 3) != connected_graph(32, 480, 4));
    CHECK(connected_graph(1, 0, 5).order() == 1);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        for (std::size_t m = 11; m <= 66; m += 11) {
            const Graph g = connected_graph(12, m, seed);
            CHECK(g.size() == m);
            CHECK(g.is_connected());
        }
    }
}

TEST_CASE("connectivity")
{
    CHECK(path(5).is_connected());
    CHECK_FALSE(empty_graph(2).is_connected());
    CHECK(empty_graph(1).is_connected());
    CHECK_FALSE(graph_union(std::vector<Graph>{path(2), path(2)}).is_connected());
}
