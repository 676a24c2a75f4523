#include "../src/surface.hpp"

#include <algorithm>
#include <set>

#include "../src/curvesys.hpp"
#include "harness.hpp"

using namespace mcg;

static void check_surface_invariants(const surface& S) {
    // every interior edge glues two sides with opposite directions
    for (int e = 0; e < S.n_edges; e++) {
        if (S.boundary_edge[e]) {
            EXPECT(S.edge_side[e][0].valid());
            EXPECT(!S.edge_side[e][1].valid());
            EXPECT(S.edge_boundary_circle[e] >= 0);
        } else {
            EXPECT(S.edge_side[e][1].valid());
            EXPECT(S.orient_of(S.edge_side[e][0]) * S.orient_of(S.edge_side[e][1]) == -1);
            EXPECT(S.edge_boundary_circle[e] == -1);
        }
    }

    // Euler characteristic from the cell structure
    int chi = S.n_vertices - S.n_edges + S.n_tris();
    EXPECT(chi == S.euler());

    // boundary circles partition the boundary edges
    std::set<int> seen;
    for (const auto& c : S.boundary_circles)
        for (int e : c) {
            EXPECT(S.boundary_edge[e]);
            EXPECT(seen.insert(e).second);
        }
    int nb = 0;
    for (int e = 0; e < S.n_edges; e++) nb += S.boundary_edge[e];
    EXPECT((int)seen.size() == nb);

    // vertex fans: each edge end appears in exactly one fan exactly once,
    // except that a boundary fan repeats its two clamping boundary ends
    std::vector<int> end_count(2 * S.n_edges, 0);
    for (int v = 0; v < S.n_vertices; v++) {
        auto fan = S.vertex_fan(v);
        EXPECT(!fan.empty());
        if (S.vertex_on_boundary[v]) {
            EXPECT(S.boundary_edge[fan.front().edge]);
            EXPECT(S.boundary_edge[fan.back().edge]);
        }
        for (const auto& ee : fan) {
            EXPECT(S.edge_end_vertex(ee.edge, ee.end) == v);
            end_count[2 * ee.edge + ee.end]++;
        }
    }
    for (int e = 0; e < S.n_edges; e++)
        for (int end = 0; end < 2; end++)
            EXPECT_MSG(end_count[2 * e + end] == 1,
                       "edge " << e << " end " << end << " count "
                               << end_count[2 * e + end] << " != 1");
}

static void test_standard_surfaces() {
    struct want { int g, b, V; };
    const want cases[] = {
        {1, 1, 2}, {0, 4, 5}, {1, 2, 3}, {2, 0, 1}, {1, 0, 1}, {0, 5, 6}, {2, 1, 2},
    };
    for (const auto& c : cases) {
        surface S = make_surface(c.g, c.b);
        EXPECT(S.genus == c.g);
        EXPECT(S.n_boundary == c.b);
        EXPECT(S.n_vertices == c.V);
        EXPECT(S.n_tris() == 4 * c.g + 3 * c.b - 2 || (c.g == 1 && c.b == 0));
        check_surface_invariants(S);

        // every boundary circle of the standard model is a single loop edge
        for (const auto& circ : S.boundary_circles) EXPECT((int)circ.size() == 1);
    }

    // torus model is the two-triangle square
    surface T = make_surface(1, 0);
    EXPECT(T.n_tris() == 2 && T.n_edges == 3 && T.n_vertices == 1);
}

static void test_rejected_surfaces() {
    EXPECT_ERROR(errkind::invalid_input, make_surface(0, 3));  // pair of pants
    EXPECT_ERROR(errkind::invalid_input, make_surface(0, 2));
    EXPECT_ERROR(errkind::invalid_input, make_surface(0, 1));
    EXPECT_ERROR(errkind::invalid_input, make_surface(1, -1));
}

static void test_named_lookup() {
    surface S = make_named_surface("sigma_1_2");
    EXPECT(S.genus == 1 && S.n_boundary == 2);
    EXPECT_ERROR(errkind::invalid_input, make_named_surface("sigma_1"));
    EXPECT_ERROR(errkind::invalid_input, make_named_surface("torus"));
    EXPECT_ERROR(errkind::invalid_input, make_named_surface("sigma_x_y"));
}

static void test_bad_triangulations() {
    // same edge three times
    EXPECT_ERROR(errkind::invalid_input, surface("x", 0, 0, {{1, 1, 1}}, {}));
    // interior edge traversed twice in the same direction (Klein-like gluing)
    EXPECT_ERROR(errkind::invalid_input,
                 surface("x", 1, 0, {{1, 2, 3}, {-1, -2, 3}}, {}));
    // declared topology off by one
    EXPECT_ERROR(errkind::invalid_input,
                 surface("x", 2, 0, {{1, 2, -3}, {3, 4, 5}, {-5, -1, 6},
                                     {-6, -2, -4}}, {}));
}

static void test_admissibility() {
    surface S = make_surface(1, 1);
    weights w = zero_weights(S);
    EXPECT(admissible(S, w));

    // odd total around a triangle
    w[0] = 1;
    EXPECT(!admissible(S, w));

    weights bad_len(3, 0);
    EXPECT(!admissible(S, bad_len));

    weights neg = zero_weights(S);
    neg[1] = -2;
    EXPECT(!admissible(S, neg));
}

static void test_corner_counts() {
    surface T = make_surface(1, 0);
    // on the square torus, weights (1,1,0)-style systems are single curves
    for (int drop = 0; drop < 3; drop++) {
        weights w(3, 1);
        w[drop] = 0;
        std::string why;
        EXPECT_MSG(admissible(T, w, &why), why);
        for (int t = 0; t < T.n_tris(); t++) {
            auto x = corner_counts(T, w, t);
            EXPECT(x[0] + x[1] + x[2] == 1);
        }
    }
    // weights (1,1,1) would force a chord meeting a corner: inadmissible parity
    EXPECT(!admissible(T, weights(3, 1)));
    EXPECT(admissible(T, weights(3, 2)));
}

int main() {
    test_standard_surfaces();
    test_rejected_surfaces();
    test_named_lookup();
    test_bad_triangulations();
    test_admissibility();
    test_corner_counts();
    return testing::finish("test_surface");
}
