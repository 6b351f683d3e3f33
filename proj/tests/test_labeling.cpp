#include "oracles.hpp"

#include "flc/labeling.hpp"
#include "flc/serialize.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace flc;

namespace {

const InitialPair kClassical(0, 1);
const InitialPair kWorked(7, 4);

std::string precondition_message(auto&& build)
{
    try {
        build();
    } catch (const PreconditionError& e) {
        return e.what();
    }
    return {};
}

void check_construction(const Construction& c, std::uint64_t p, const InitialPair& pair)
{
    const EdgeLabelSummary actual = evaluate(c.labeling, p, pair);
    CHECK(actual == c.predicted);
    CHECK(actual.cordial());
    CHECK(actual.e0 + actual.e1 == c.labeling.graph().size());
    CHECK(c.epsilon == actual.difference());
}

} // namespace

TEST_CASE("vertex labeling must be a bijection")
{
    CHECK_NOTHROW(VertexLabeling(path(3), {2, 0, 1}));
    CHECK_THROWS_AS(VertexLabeling(path(3), {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(VertexLabeling(path(3), {0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(VertexLabeling(path(3), {0, 1}), std::invalid_argument);
    CHECK(VertexLabeling::identity(path(4)).assignment() == std::vector<std::uint64_t>{0, 1, 2, 3});
}

TEST_CASE("worked example on C3")
{
    const VertexLabeling f = VertexLabeling::identity(cycle(3));
    CHECK(induced_edge_label(f, 0, 1, 5, kWorked) == 1);
    CHECK(induced_edge_label(f, 1, 2, 5, kWorked) == 0);
    CHECK(induced_edge_label(f, 0, 2, 5, kWorked) == 0);
    const EdgeLabelSummary s = evaluate(f, 5, kWorked);
    CHECK(s.e0 == 2);
    CHECK(s.e1 == 1);
    CHECK(s.cordial());
    CHECK_THROWS_AS(induced_edge_label(VertexLabeling::identity(path(3)), 0, 2, 5, kWorked), std::invalid_argument);
}

TEST_CASE("evaluate examples")
{
    const EdgeLabelSummary empty = evaluate(VertexLabeling::identity(empty_graph(4)), 3, kClassical);
    CHECK(empty.e0 == 0);
    CHECK(empty.e1 == 0);
    CHECK(empty.cordial());
    const EdgeLabelSummary p9 = evaluate(VertexLabeling::identity(path(9)), 3, kClassical);
    CHECK(p9.e0 == 5);
    CHECK(p9.e1 == 3);
    CHECK_FALSE(p9.cordial());
}

TEST_CASE("edge labels match the definition; symmetric; invariant under +pi")
{
    for (const std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        for (const InitialPair& pair : {kClassical, kWorked, InitialPair(-3, -7)}) {
            const EdgeLabeler labeler(p, pair);
            const std::uint64_t pi = labeler.period();
            for (std::uint64_t x = 0; x < 2 * pi; ++x) {
                for (std::uint64_t y = 0; y < 2 * pi; ++y) {
                    const int label = labeler.label(x, y);
                    CHECK(label == labeler.label(y, x));
                    CHECK(label == labeler.label(x + pi, y));
                    if (x < 24 && y < 24) {
                        CHECK(label == oracle::edge_label(pair.a(), pair.b(), static_cast<std::int64_t>(p), x, y));
                    }
                }
            }
        }
    }
}

TEST_CASE("shifting one vertex label by pi keeps every incident edge label")
{
    const Construction c = label_path(11, kClassical, 2);
    const VertexLabeling& f = c.labeling;
    const std::uint64_t pi = c.record.period;
    for (Vertex v = 0; v < f.graph().order(); ++v) {
        const std::uint64_t x = f[v];
        if (x + pi >= f.graph().order()) {
            continue;
        }
        // swap x and x+pi so the map stays a bijection; edges at v see x+pi
        std::vector<std::uint64_t> shifted = f.assignment();
        const auto other = static_cast<Vertex>(std::find(shifted.begin(), shifted.end(), x + pi) - shifted.begin());
        std::swap(shifted[v], shifted[other]);
        const VertexLabeling g(f.graph(), shifted);
        for (const auto& [a, b] : f.graph().edges()) {
            if ((a == v || b == v) && a != other && b != other) {
                CHECK(induced_edge_label(f, a, b, 11, kClassical) == induced_edge_label(g, a, b, 11, kClassical));
            }
        }
    }
}

TEST_CASE("path")
{
    const Construction q1 = label_path(11, kClassical, 1);
    CHECK(q1.labeling.graph().order() == 11);
    CHECK(q1.predicted == EdgeLabelSummary{5, 5});
    check_construction(q1, 11, kClassical);
    const Construction q2 = label_path(11, kClassical, 2);
    CHECK(q2.labeling.graph().order() == 21);
    CHECK(q2.predicted == EdgeLabelSummary{10, 10});
    check_construction(q2, 11, kClassical);
    CHECK(precondition_message([] { label_path(3, kClassical, 1); }) ==
          "p = 3 is (-2)-PL relative to (0,1), requires 0-PL");
    CHECK_THROWS_AS(label_path(11, kClassical, 0), std::invalid_argument);
}

TEST_CASE("star and wheel")
{
    for (const std::uint64_t q : {1ULL, 2ULL}) {
        const Construction s = label_star(11, kClassical, q);
        CHECK(s.predicted == EdgeLabelSummary{5 * q, 5 * q});
        CHECK(s.labeling.graph().same_structure(star(10 * q + 1)));
        check_construction(s, 11, kClassical);
        const Construction w = label_wheel(11, kClassical, q);
        CHECK(w.predicted == EdgeLabelSummary{10 * q, 10 * q});
        CHECK(w.labeling.graph().same_structure(wheel(10 * q + 1)));
        check_construction(w, 11, kClassical);
    }
    CHECK_THROWS_AS(label_star(11, kWorked, 1), PreconditionError);
    CHECK_THROWS_AS(label_wheel(5, kClassical, 1), PreconditionError);
}

TEST_CASE("cycle products")
{
    const Construction t = label_cycle_product(11, kClassical, 1, path(2), ProductKind::tensor);
    CHECK(t.predicted == EdgeLabelSummary{10, 10});
    check_construction(t, 11, kClassical);
    const Construction c = label_cycle_product(31, kClassical, 1, path(2), ProductKind::cartesian);
    CHECK(c.predicted == EdgeLabelSummary{45, 45});
    check_construction(c, 31, kClassical);
    CHECK(c.labeling.graph() == cartesian(cycle(30), path(2)));
    CHECK(c.labeling == VertexLabeling::identity(c.labeling.graph()));
    CHECK_THROWS_AS(label_cycle_product(11, kClassical, 1, path(2), ProductKind::cartesian), PreconditionError);
    CHECK_THROWS_AS(label_cycle_product(31, kClassical, 1, empty_graph(2), ProductKind::strong), PreconditionError);
    for (const ProductKind kind :
         {ProductKind::lexicographic, ProductKind::cartesian, ProductKind::tensor, ProductKind::strong}) {
        check_construction(label_cycle_product(31, kClassical, 2, cycle(3), kind), 31, kClassical);
    }
}

TEST_CASE("corona with a path")
{
    const Construction even = label_corona_path(41, kClassical, connected_graph(32, 480, 5));
    check_construction(even, 41, kClassical);
    CHECK(even.epsilon == 0);
    const Construction up = label_corona_path(41, kClassical, connected_graph(32, 481, 5));
    check_construction(up, 41, kClassical);
    CHECK(up.epsilon == 1);
    const Construction down = label_corona_path(41, kClassical, connected_graph(32, 479, 5));
    CHECK(down.epsilon == -1);
    CHECK_THROWS_AS(label_corona_path(41, kClassical, connected_graph(32, 482, 5)), PreconditionError);
    CHECK_THROWS_AS(label_corona_path(11, kClassical, cycle(9)), PreconditionError);
    CHECK(down.labeling.graph().same_structure(corona(connected_graph(32, 479, 5), path(39))));
}

TEST_CASE("join is infeasible for p = 11")
{
    const std::vector<Graph> hs(9, empty_graph(9));
    const std::string message = precondition_message([&] { label_join(11, kClassical, complete(9), hs); });
    CHECK(message.find("size window infeasible for simple graphs") != std::string::npos);
    const std::vector<Graph> short_hs(8, empty_graph(9));
    CHECK_THROWS_AS(label_join(11, kClassical, complete(9), short_hs), PreconditionError);
    CHECK_THROWS_AS(label_join(5, InitialPair(0, 5), Graph(), {}), PreconditionError);
    const Construction unchecked = label_join(11, kClassical, complete(9), hs, Checking::unchecked);
    CHECK(evaluate(unchecked.labeling, 11, kClassical) == unchecked.predicted);
}

TEST_CASE("corona")
{
    const Construction c9 = label_corona(11, kClassical, cycle(9), empty_graph(9));
    check_construction(c9, 11, kClassical);
    CHECK(c9.epsilon == 0);
    const Construction plus = label_corona(11, kClassical, connected_graph(9, 10, 2), empty_graph(9));
    check_construction(plus, 11, kClassical);
    CHECK(plus.epsilon == 1);
    const Construction dense = label_corona(31, kClassical, connected_graph(29, 58, 2), cycle(29));
    check_construction(dense, 31, kClassical);
    CHECK(dense.epsilon == 0);
    CHECK_THROWS_AS(label_corona(11, kClassical, cycle(9), path(9)), PreconditionError); // 11 = 3 mod 8
    CHECK_THROWS_AS(label_corona(11, kClassical, cycle(8), empty_graph(9)), PreconditionError);
}

TEST_CASE("brute force search")
{
    const auto c3 = brute_force_flc_search(cycle(3), 5, kWorked);
    REQUIRE(c3);
    CHECK(evaluate(*c3, 5, kWorked).cordial());
    const auto p3 = brute_force_flc_search(path(3), 3, kClassical);
    REQUIRE(p3);
    CHECK(evaluate(*p3, 3, kClassical) == EdgeLabelSummary{1, 1});
    CHECK(p3->assignment() == std::vector<std::uint64_t>{0, 1, 2});
    const auto k1 = brute_force_flc_search(complete(1), 3, kClassical);
    REQUIRE(k1);
    CHECK(k1->assignment() == std::vector<std::uint64_t>{0});
    CHECK_THROWS_AS(brute_force_flc_search(path(10), 3, kClassical), std::invalid_argument);
    CHECK_NOTHROW(brute_force_flc_search(path(10), 3, kClassical, 10));

    // parallel search returns the same first labeling
    for (const Graph& g : {complete(5), wheel(7), connected_graph(8, 14, 3)}) {
        const auto one = brute_force_flc_search(g, 7, kWorked, 9, 1);
        const auto many = brute_force_flc_search(g, 7, kWorked, 9, 4);
        CHECK(one.has_value() == many.has_value());
        if (one && many) {
            CHECK(one->assignment() == many->assignment());
        }
    }
}

TEST_CASE("serialization round trip")
{
    const Graph g = corona(cycle(3), path(2));
    CHECK(graph_from_json(graph_to_json(g)) == g);
    const Graph product_graph = strong(cycle(3), path(2));
    CHECK(graph_from_json(graph_to_json(product_graph)) == product_graph);

    const Construction c = label_wheel(11, kClassical, 1);
    const Json doc = labeling_to_json(c.labeling, 11, kClassical);
    CHECK(doc.at("cordial").get<bool>());
    const LabelingDocument back = labeling_from_json(doc);
    CHECK(back.labeling == c.labeling);
    CHECK(back.p == 11);
    CHECK(back.pair == kClassical);
    CHECK(back.summary == evaluate(c.labeling, 11, kClassical));

    Json bad = doc;
    bad["assignment"][0] = 1;
    CHECK_THROWS_AS(labeling_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"order": 2, "edges": [[0, 0]]})")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), std::invalid_argument);
}
