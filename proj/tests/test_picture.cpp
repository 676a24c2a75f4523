#include "../src/picture.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "../src/curvesys.hpp"
#include "../src/picture_detail.hpp"
#include "../src/surface.hpp"
#include "harness.hpp"

using namespace mcg;

// ----------------------------------------------------------------------------
// Helpers.

// every nonzero admissible weight vector with entries up to cap
static std::vector<weights> all_admissible(const surface& S, int cap) {
    std::vector<weights> out;
    weights w = zero_weights(S);
    for (;;) {
        if (total_weight(w) > 0 && admissible(S, w)) out.push_back(w);
        int k = 0;
        while (k < S.n_edges && w[k] == cap) w[k++] = 0;
        if (k == S.n_edges) break;
        ++w[k];
    }
    return out;
}

// one crossing per edge germ at v: the link of an interior vertex (a null
// curve) or the corner arc of a boundary vertex (a trivial arc)
static weights vertex_star(const surface& S, int v) {
    weights w = zero_weights(S);
    for (int e = 0; e < S.n_edges; ++e)
        for (int end = 0; end < 2; ++end)
            if (S.edge_end_vertex(e, end) == v) ++w[e];
    return w;
}

// push-off of one boundary circle: crosses each interior edge once per end
// lying on a vertex of that circle
static weights circle_pushoff(const surface& S, int circle) {
    std::set<int> vs;
    for (int be : S.boundary_circles[circle])
        for (int end = 0; end < 2; ++end) vs.insert(S.edge_end_vertex(be, end));
    weights w = zero_weights(S);
    for (int e = 0; e < S.n_edges; ++e) {
        if (S.boundary_edge[e]) continue;
        for (int end = 0; end < 2; ++end)
            if (vs.count(S.edge_end_vertex(e, end))) ++w[e];
    }
    return w;
}

// the (p,q) curve on the two-triangle torus: edge 0 is crossed |q| times,
// edge 1 |p| times, and the diagonal |p-q| times
static weights torus_slope(int p, int q) {
    return {std::abs(q), std::abs(p), std::abs(p - q)};
}

static weights scale(const weights& w, int k) {
    weights r = w;
    for (int& x : r) x *= k;
    return r;
}

static int open_strands(const picture& P) {
    int n = 0;
    for (const auto& st : P.strands)
        if (st.alive && !st.closed) ++n;
    return n;
}

static int region_chi_sum(const face_structure& F) {
    int c = 0;
    for (const auto& R : F.regions) c += R.chi;
    return c;
}

// ----------------------------------------------------------------------------
// Tracing and face structure over a swept range of weights.

static void test_trace_enumerated(const surface& S, int cap) {
    int tested = 0;
    for (const weights& w : all_admissible(S, cap)) {
        picture P = trace(S, w);
        P.validate();
        REQUIRE_MSG(P.alive_points() == (int)total_weight(w), S.name);
        REQUIRE_MSG(extract_weights(P, 0) == w, S.name);

        long long bsum = 0;
        for (int e = 0; e < S.n_edges; ++e)
            if (S.boundary_edge[e]) bsum += w[e];
        int arcs = open_strands(P);
        REQUIRE_MSG(2 * arcs == bsum, S.name);

        // traces have no doubled-back chords
        REQUIRE(remove_returns(P) == 0);
        REQUIRE(extract_weights(P, 0) == w);

        // cutting along the system: each arc raises the total by one
        face_structure F = compute_regions(P, nullptr);
        REQUIRE_MSG(region_chi_sum(F) == S.euler() + arcs, S.name);

        std::vector<weights> comps = split_components(S, w);
        weights sum = zero_weights(S);
        for (const weights& c : comps) {
            REQUIRE(admissible(S, c));
            sum = add(sum, c);
        }
        REQUIRE_MSG(sum == w, S.name);
        ++tested;
    }
    EXPECT_MSG(tested > 0, S.name);
}

static void test_empty_pictures() {
    surface T = make_surface(1, 0);
    picture P = trace(T, zero_weights(T));
    REQUIRE(P.alive_points() == 0);
    face_structure F = compute_regions(P, nullptr);
    REQUIRE(F.regions.size() == 1);
    EXPECT(F.regions[0].chi == 0);
    EXPECT(F.regions[0].walks.empty());
    EXPECT(!F.regions[0].touches_boundary);

    surface S = make_surface(1, 1);
    picture Q = trace(S, zero_weights(S));
    face_structure G = compute_regions(Q, nullptr);
    REQUIRE(G.regions.size() == 1);
    EXPECT(G.regions[0].chi == -1);
    EXPECT(G.regions[0].touches_boundary);
    REQUIRE(G.regions[0].walks.size() == 1);
    for (const auto& it : G.regions[0].walks[0])
        EXPECT(it.kind == walk_item::surface_boundary);
}

// ----------------------------------------------------------------------------
// Stripping: vertex links are null, corner arcs trivial, push-offs peripheral.

static void test_star_components() {
    for (auto [g, b] : {std::pair{1, 0}, {1, 1}, {0, 4}}) {
        surface S = make_surface(g, b);
        for (int v = 0; v < S.n_vertices; ++v) {
            weights w = vertex_star(S, v);
            strip_result r = strip_inessential(S, w);
            EXPECT_MSG(r.kept == zero_weights(S), S.name << " vertex " << v);
            if (S.vertex_on_boundary[v]) {
                EXPECT_MSG(r.trivial_arcs == 1 && r.null_curves == 0 && r.peripheral_curves == 0,
                           S.name << " vertex " << v);
            } else {
                EXPECT_MSG(r.null_curves == 1 && r.trivial_arcs == 0 && r.peripheral_curves == 0,
                           S.name << " vertex " << v);
            }
        }
        weights all = zero_weights(S);
        for (int c = 0; c < S.n_boundary; ++c) {
            weights w = circle_pushoff(S, c);
            strip_result r = strip_inessential(S, w);
            EXPECT_MSG(r.peripheral_curves == 1 && r.null_curves == 0 && r.trivial_arcs == 0,
                       S.name << " circle " << c);
            EXPECT(r.kept == zero_weights(S));
            all = add(all, w);
        }
        if (S.n_boundary > 1) {
            strip_result r = strip_inessential(S, all);
            EXPECT_MSG(r.peripheral_curves == S.n_boundary, S.name);
            EXPECT(r.kept == zero_weights(S));
        }
    }
}

// ----------------------------------------------------------------------------
// Intersection numbers on the torus against the determinant rule.

static void test_torus_intersections() {
    surface T = make_surface(1, 0);
    std::vector<std::pair<int, int>> slopes;
    for (int p = 0; p <= 3; ++p)
        for (int q = -3; q <= 3; ++q) {
            if (p == 0 && q <= 0) continue;
            if (p > 0 && q == 0 && p != 1) continue;
            if (std::gcd(p, std::abs(q)) != 1) continue;
            slopes.push_back({p, q});
        }
    REQUIRE(slopes.size() >= 12);
    for (auto [p, q] : slopes)
        for (auto [r, s] : slopes) {
            long long want = std::llabs((long long)p * s - (long long)q * r);
            long long free = intersection_number_raw(T, torus_slope(p, q), torus_slope(r, s));
            REQUIRE_MSG(free == want, "slopes (" << p << "," << q << ") (" << r << "," << s
                                                 << "): got " << free << " want " << want);
            // no boundary, so pinning changes nothing
            long long pinned =
                intersection_number_raw(T, torus_slope(p, q), torus_slope(r, s), true);
            REQUIRE_MSG(pinned == want, "pinned (" << p << "," << q << ") (" << r << "," << s
                                                   << ")");
        }

    // multiple copies scale multiplicatively
    EXPECT(intersection_number_raw(T, scale(torus_slope(1, 0), 2), scale(torus_slope(0, 1), 3)) ==
           6);
    EXPECT(intersection_number_raw(T, scale(torus_slope(1, 2), 2), scale(torus_slope(2, 1), 3)) ==
           6 * 3);
}

static void test_minimize_small() {
    surface T = make_surface(1, 0);

    // proportional interleaving keeps parallel systems disjoint from the start
    {
        picture P = overlay(T, torus_slope(1, 0), torus_slope(1, 0));
        P.validate();
        EXPECT(compute_crossings(P).alive_count == 0);
    }
    {
        picture P = overlay(T, scale(torus_slope(2, 3), 2), scale(torus_slope(2, 3), 3));
        EXPECT(compute_crossings(P).alive_count == 0);
    }

    // one crossing survives for dual slopes, leaving a single square region
    {
        picture P = overlay(T, torus_slope(1, 0), torus_slope(0, 1));
        crossings X = compute_crossings(P);
        minimize_position(P, X);
        P.validate();
        EXPECT(X.alive_count == 1);
        face_structure F = compute_regions(P, &X);
        EXPECT(region_chi_sum(F) == T.euler() + 1);
        EXPECT(F.regions.size() == 1);
    }
}

// ----------------------------------------------------------------------------
// Hand-built pictures exercising return removal directly.

static void test_handbuilt_returns() {
    surface T = make_surface(1, 0);
    side_ref f0 = T.edge_side[0][0], f1 = T.edge_side[0][1];

    // a two-point closed strand doubling back across edge 0 bounds a disk
    {
        picture P;
        P.S = &T;
        P.n_systems = 1;
        P.edge_pts.assign(T.n_edges, {});
        int a = detail::insert_point(P, 0, 0, 0);
        int b = detail::insert_point(P, 0, 1, 0);
        picture::strand_t st;
        st.sys = 0;
        st.closed = true;
        st.p = {a, b};
        st.tri = {f0.tri, f1.tri};
        P.pts[a].strand = 0;
        P.pts[a].pos = 0;
        P.pts[a].side_next = f0.side;
        P.pts[a].side_prev = f1.side;
        P.pts[b].strand = 0;
        P.pts[b].pos = 1;
        P.pts[b].side_prev = f0.side;
        P.pts[b].side_next = f1.side;
        P.strands.push_back(st);
        P.validate();
        REQUIRE(remove_returns(P) == 1);
        EXPECT(P.alive_points() == 0);
        EXPECT(!P.strands[0].alive);
        EXPECT(live_strand_count(P, 0) == 0);
    }

    // a (1,0) curve with a finger poked across edge 0: the doubled-back pair
    // straightens and the trace of the slope remains
    {
        picture P;
        P.S = &T;
        P.n_systems = 1;
        P.edge_pts.assign(T.n_edges, {});
        int y = detail::insert_point(P, 0, 0, 0);
        int x = detail::insert_point(P, 0, 1, 0);
        int B = detail::insert_point(P, 1, 0, 0);
        int D = detail::insert_point(P, 2, 0, 0);
        picture::strand_t st;
        st.sys = 0;
        st.closed = true;
        st.p = {B, x, y, D};
        st.tri = {0, 1, 0, 1};
        auto set = [&](int id, int pos, int sp, int sn) {
            P.pts[id].strand = 0;
            P.pts[id].pos = pos;
            P.pts[id].side_prev = sp;
            P.pts[id].side_next = sn;
        };
        set(B, 0, 2, 1);
        set(x, 1, 0, 1);
        set(y, 2, 1, 0);
        set(D, 3, 2, 0);
        P.strands.push_back(st);
        P.validate();
        REQUIRE(remove_returns(P) == 0);
        P.validate();
        EXPECT(extract_weights(P, 0) == torus_slope(1, 0));
        EXPECT((int)P.strands[0].p.size() == 2);
    }

    // an arc folded onto one boundary edge cannot be straightened in place
    {
        surface S = make_surface(1, 1);
        int r = -1;
        for (int e = 0; e < S.n_edges; ++e)
            if (S.boundary_edge[e]) r = e;
        REQUIRE(r >= 0);
        side_ref fr = S.edge_side[r][0];
        picture P;
        P.S = &S;
        P.n_systems = 1;
        P.edge_pts.assign(S.n_edges, {});
        int a = detail::insert_point(P, r, 0, 0);
        int b = detail::insert_point(P, r, 1, 0);
        picture::strand_t st;
        st.sys = 0;
        st.closed = false;
        st.p = {a, b};
        st.tri = {fr.tri};
        P.pts[a].strand = 0;
        P.pts[a].pos = 0;
        P.pts[a].side_prev = -1;
        P.pts[a].side_next = fr.side;
        P.pts[b].strand = 0;
        P.pts[b].pos = 1;
        P.pts[b].side_prev = fr.side;
        P.pts[b].side_next = -1;
        P.strands.push_back(st);
        P.validate();
        EXPECT_ERROR(errkind::internal, remove_returns(P));
    }
}

// ----------------------------------------------------------------------------
// Isotopy neighbors preserve the class.

static void check_neighbors(const surface& S, const weights& w,
                            const std::vector<weights>& probes, bool expect_some) {
    std::vector<weights> nb = isotopy_neighbors(S, w);
    EXPECT(isotopy_neighbors(S, w) == nb);
    if (expect_some) EXPECT_MSG(!nb.empty(), S.name);
    picture P = trace(S, w);
    int strands = live_strand_count(P, 0);
    int opens = open_strands(P);
    for (const weights& nw : nb) {
        REQUIRE(admissible(S, nw));
        REQUIRE(nw != w);
        picture Pn = trace(S, nw);
        Pn.validate();
        EXPECT(live_strand_count(Pn, 0) == strands);
        EXPECT(open_strands(Pn) == opens);
        EXPECT_MSG(!strip_inessential(S, nw).changed(), S.name);
        // representatives of one class are disjoinable
        EXPECT_MSG(intersection_number_raw(S, w, nw) == 0, S.name);
        for (const weights& pr : probes)
            EXPECT_MSG(intersection_number_raw(S, nw, pr) == intersection_number_raw(S, w, pr),
                       S.name);
    }
}

static void test_neighbors_torus() {
    surface T = make_surface(1, 0);
    std::vector<weights> probes = {torus_slope(0, 1), torus_slope(1, 1), torus_slope(1, -1)};
    check_neighbors(T, torus_slope(1, 0), probes, false);
    check_neighbors(T, torus_slope(2, 3), probes, false);
}

static void test_sigma11_arcs_and_curves() {
    surface S = make_surface(1, 1);
    weights ess_arc, ess_arc2, ess_curve, cross_curve;
    std::vector<weights> arc_pool;
    for (const weights& w : all_admissible(S, 2)) {
        picture P = trace(S, w);
        if (live_strand_count(P, 0) != 1) continue;
        if (strip_inessential(S, w).changed()) continue;
        if (open_strands(P) == 1) {
            if (arc_pool.size() < 6) arc_pool.push_back(w);
            if (ess_arc.empty()) ess_arc = w;
            else if (ess_arc2.empty() && intersection_number_raw(S, ess_arc, w) > 0) ess_arc2 = w;
        } else {
            if (ess_curve.empty()) ess_curve = w;
            if (cross_curve.empty() && !ess_arc.empty() &&
                intersection_number_raw(S, ess_arc, w) > 0)
                cross_curve = w;
        }
        if (!ess_arc2.empty() && !cross_curve.empty() && arc_pool.size() == 6) break;
    }
    REQUIRE(!ess_arc.empty());
    REQUIRE(!ess_arc2.empty());
    REQUIRE(!ess_curve.empty());
    REQUIRE(!cross_curve.empty());

    weights po = circle_pushoff(S, 0);

    // an essential arc must cross the collar once per end and its endpoints
    // may not leave the boundary, so even free isotopy leaves two crossings;
    // closed curves and trivial arcs shed the push-off entirely
    EXPECT(intersection_number_raw(S, ess_arc, po) == 2);
    EXPECT(intersection_number_raw(S, ess_arc, po, true) == 2);
    EXPECT(intersection_number_raw(S, ess_curve, po) == 0);
    EXPECT(intersection_number_raw(S, ess_curve, po, true) == 0);
    int u = -1;
    for (int v = 0; v < S.n_vertices; ++v)
        if (S.vertex_on_boundary[v]) u = v;
    REQUIRE(u >= 0);
    weights corner = vertex_star(S, u);
    EXPECT(intersection_number_raw(S, corner, po) == 0);
    EXPECT(intersection_number_raw(S, corner, po, true) == 0);

    // pinning endpoints can only raise the count, and some arc pairs are
    // separated exactly by a half-bigon, so the gap is realized
    REQUIRE(arc_pool.size() == 6);
    bool saw_gap = false, saw_crossing = false;
    for (size_t i = 0; i < arc_pool.size(); ++i)
        for (size_t j = i + 1; j < arc_pool.size(); ++j) {
            long long f = intersection_number_raw(S, arc_pool[i], arc_pool[j]);
            long long p = intersection_number_raw(S, arc_pool[i], arc_pool[j], true);
            EXPECT(intersection_number_raw(S, arc_pool[j], arc_pool[i]) == f);
            EXPECT(p >= f);
            if (f == 0 && p > 0) saw_gap = true;
            if (f > 0) saw_crossing = true;
        }
    EXPECT(saw_gap);
    EXPECT(saw_crossing);

    // region totals after minimizing an arc against a curve it crosses
    {
        picture P = overlay(S, ess_arc, cross_curve);
        crossings X = compute_crossings(P);
        minimize_position(P, X);
        P.validate();
        long long i = intersection_number_raw(S, ess_arc, cross_curve);
        EXPECT(i > 0);
        EXPECT(X.alive_count == i);
        face_structure F = compute_regions(P, &X);
        EXPECT(region_chi_sum(F) == S.euler() + 1 + (int)X.alive_count);
    }

    check_neighbors(S, ess_arc, {ess_arc2, cross_curve}, true);
    check_neighbors(S, ess_curve, {ess_arc, ess_arc2}, false);
}

static void test_bad_inputs() {
    surface T = make_surface(1, 0);
    EXPECT_ERROR(errkind::invalid_input, trace(T, {1, 0, 0}));
    EXPECT_ERROR(errkind::invalid_input, trace(T, {1, 1, 1}));
}

int main() {
    test_trace_enumerated(make_surface(1, 0), 4);
    test_trace_enumerated(make_surface(1, 1), 2);
    test_empty_pictures();
    test_star_components();
    test_torus_intersections();
    test_minimize_small();
    test_handbuilt_returns();
    test_neighbors_torus();
    test_sigma11_arcs_and_curves();
    test_bad_inputs();
    return testing::finish("test_picture");
}
