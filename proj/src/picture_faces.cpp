// Complement regions of a picture.
//
// Each triangle is cut by its chords (split at crossings) into local planar
// faces, read off from rotation systems around corner, point-visit, and
// crossing nodes.  Local faces are then glued across interior edges interval
// by interval, and each union is a region of the complement.  The Euler
// characteristic comes from counting glued polygon corners, edges, and faces;
// the tagged boundary walks record which strand sides, boundary intervals,
// endpoint germs, and crossings a region touches.

#include <algorithm>
#include <numeric>

#include "picture.hpp"
#include "picture_detail.hpp"

namespace mcg {

namespace {

struct dsu {
    std::vector<int> up;
    explicit dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int a) {
        while (up[a] != a) a = up[a] = up[up[a]];
        return a;
    }
    void join(int a, int b) { up[find(a)] = find(b); }
};

struct uedge {
    char kind = 0;  // 'i' interval, 's' chord segment
    int u = -1, v = -1;
    int tri = -1;
    int side = -1, idx = -1, edge = -1;  // intervals
    int strand = -1, gap = -1;           // segments
};

}  // namespace

face_structure compute_regions(const picture& P, const crossings* X) {
    const surface& S = *P.S;
    const int T = S.n_tris();
    const int NP = (int)P.pts.size();
    const int n_nodes = 3 * T + 2 * NP + (X ? (int)X->xs.size() : 0);

    auto corner_node = [&](int t, int c) { return 3 * t + c; };
    auto visit_node = [&](int pt, int inc) { return 3 * T + 2 * pt + inc; };
    auto cross_node = [&](int x) { return 3 * T + 2 * NP + x; };
    auto incidence_of = [&](int pt, int t, int s) {
        int e = P.pts[pt].edge;
        for (int k = 0; k < (S.boundary_edge[e] ? 1 : 2); ++k)
            if (S.edge_side[e][k].tri == t && S.edge_side[e][k].side == s) return k;
        fail(errkind::internal, "point incidence not found in its triangle");
    };

    std::vector<uedge> edges;
    std::vector<std::vector<std::pair<long long, int>>> rot_items(n_nodes);

    // side intervals, with node lists in side order
    std::vector<std::array<std::vector<int>, 3>> iv(T);  // interval edge ids per (t,s)
    for (int t = 0; t < T; ++t) {
        for (int s = 0; s < 3; ++s) {
            int e = S.tris[t].edge[s];
            const auto& on_edge = P.edge_pts[e];
            int w = (int)on_edge.size();
            std::vector<int> nodes;
            nodes.push_back(corner_node(t, s));
            for (int q = 0; q < w; ++q) {
                int pt = S.tris[t].orient[s] > 0 ? on_edge[q] : on_edge[w - 1 - q];
                nodes.push_back(visit_node(pt, incidence_of(pt, t, s)));
            }
            nodes.push_back(corner_node(t, (s + 1) % 3));
            for (int j = 0; j <= w; ++j) {
                uedge ue;
                ue.kind = 'i';
                ue.u = nodes[j];
                ue.v = nodes[j + 1];
                ue.tri = t;
                ue.side = s;
                ue.idx = j;
                ue.edge = e;
                iv[t][s].push_back((int)edges.size());
                edges.push_back(ue);
            }
            // rotation entries for the visit nodes along this side
            int circ = detail::boundary_circumference(P, t);
            for (int q = 1; q <= w; ++q) {
                int node = nodes[q];
                long long k0 = detail::boundary_key(P, t, s, q - 1);
                long long knext = (q == w) ? detail::corner_key(P, t, (s + 1) % 3)
                                           : detail::boundary_key(P, t, s, q);
                long long kprev =
                    (q == 1) ? detail::corner_key(P, t, s) : detail::boundary_key(P, t, s, q - 2);
                long long dn = (knext - k0 + circ) % circ;
                long long dp = (kprev - k0 + circ) % circ;
                rot_items[node].push_back({2 * dn - 1, 2 * iv[t][s][q] + 0});
                rot_items[node].push_back({2 * dp + 1, 2 * iv[t][s][q - 1] + 1});
            }
        }
        for (int c = 0; c < 3; ++c) {
            int node = corner_node(t, c);
            rot_items[node].push_back({0, 2 * iv[t][c][0] + 0});
            rot_items[node].push_back({1, 2 * iv[t][(c + 2) % 3].back() + 1});
        }
    }

    // chord segments, split at crossings
    static const std::vector<int> no_crossings;
    for (int s = 0; s < (int)P.strands.size(); ++s) {
        if (!P.strands[s].alive) continue;
        for (int g = 0; g < P.n_gaps(s); ++g) {
            int t = P.strands[s].tri[g];
            int a = P.gap_from(s, g), b = P.gap_to(s, g);
            int sa = P.pts[a].side_next, sb = P.pts[b].side_prev;
            long long ka = detail::endpoint_key(P, a, t, sa);
            long long kb = detail::endpoint_key(P, b, t, sb);
            const auto& xl = X ? X->gap_list(s, g) : no_crossings;

            std::vector<int> nodes;
            nodes.push_back(visit_node(a, incidence_of(a, t, sa)));
            for (int x : xl) nodes.push_back(cross_node(x));
            nodes.push_back(visit_node(b, incidence_of(b, t, sb)));

            int circ = detail::boundary_circumference(P, t);
            std::vector<int> seg_ids;
            for (int i = 0; i + 1 < (int)nodes.size(); ++i) {
                uedge ue;
                ue.kind = 's';
                ue.u = nodes[i];
                ue.v = nodes[i + 1];
                ue.tri = t;
                ue.strand = s;
                ue.gap = g;
                seg_ids.push_back((int)edges.size());
                edges.push_back(ue);
            }
            // rotation entries: at the from/to visits the chord sorts by the
            // cyclic distance to its far endpoint; at crossing nodes the four
            // germs sort by the raw keys of the chords' endpoints
            long long da = (kb - ka + circ) % circ;
            long long db = (ka - kb + circ) % circ;
            rot_items[nodes.front()].push_back({2 * da, 2 * seg_ids.front() + 0});
            rot_items[nodes.back()].push_back({2 * db, 2 * seg_ids.back() + 1});
            for (int i = 0; i < (int)xl.size(); ++i) {
                int node = nodes[i + 1];
                rot_items[node].push_back({ka, 2 * seg_ids[i] + 1});
                rot_items[node].push_back({kb, 2 * seg_ids[i + 1] + 0});
            }
        }
    }

    const int n_dedges = 2 * (int)edges.size();
    auto head = [&](int d) { return (d & 1) ? edges[d >> 1].u : edges[d >> 1].v; };

    // rotations and the position of every outgoing dedge in its rotation
    std::vector<std::vector<int>> rot(n_nodes);
    std::vector<int> rot_pos(n_dedges, -1);
    for (int n = 0; n < n_nodes; ++n) {
        auto& items = rot_items[n];
        std::sort(items.begin(), items.end());
        for (int i = 0; i + 1 < (int)items.size(); ++i)
            check(items[i].first != items[i + 1].first, "ambiguous rotation at a node");
        auto& r = rot[n];
        r.reserve(items.size());
        for (auto& [k, d] : items) {
            rot_pos[d] = (int)r.size();
            r.push_back(d);
        }
    }

    // faces: next(d) turns as sharply left as the rotation allows
    auto next_dedge = [&](int d) {
        int v = head(d);
        const auto& r = rot[v];
        int i = rot_pos[d ^ 1];
        check(i >= 0, "dedge missing from its rotation");
        return r[(i + (int)r.size() - 1) % r.size()];
    };

    std::vector<int> face_of(n_dedges, -1), next_in(n_dedges, -1), prev_in(n_dedges, -1);
    std::vector<char> face_outer;
    int n_faces = 0;
    for (int d0 = 0; d0 < n_dedges; ++d0) {
        if (face_of[d0] >= 0) continue;
        int f = n_faces++;
        bool outer = false;
        int d = d0;
        do {
            face_of[d] = f;
            int nd = next_dedge(d);
            next_in[d] = nd;
            prev_in[nd] = d;
            if (edges[d >> 1].kind == 'i' && (d & 1)) outer = true;
            d = nd;
        } while (d != d0);
        face_outer.push_back(outer ? 1 : 0);
    }

    std::vector<int> cell_of_face(n_faces, -1);
    int n_cells = 0;
    for (int f = 0; f < n_faces; ++f)
        if (!face_outer[f]) cell_of_face[f] = n_cells++;

    // glue interior edges interval by interval
    dsu cells(n_cells), corners(n_dedges);
    std::vector<char> glued(edges.size(), 0);
    for (int e = 0; e < S.n_edges; ++e) {
        if (S.boundary_edge[e]) continue;
        auto a = S.edge_side[e][0], b = S.edge_side[e][1];
        int w = (int)P.edge_pts[e].size();
        for (int j = 0; j <= w; ++j) {
            int ia = iv[a.tri][a.side][j], ib = iv[b.tri][b.side][w - j];
            glued[ia] = glued[ib] = 1;
            int da = 2 * ia, db = 2 * ib;
            check(!face_outer[face_of[da]] && !face_outer[face_of[db]],
                  "forward side interval landed on an outer face");
            cells.join(cell_of_face[face_of[da]], cell_of_face[face_of[db]]);
            corners.join(da, prev_in[db]);
            corners.join(db, prev_in[da]);
        }
    }

    // region indices ordered by least cell id
    std::vector<int> region_of_cell(n_cells, -1);
    int n_regions = 0;
    for (int c = 0; c < n_cells; ++c) {
        int r = cells.find(c);
        if (region_of_cell[r] < 0) region_of_cell[r] = n_regions++;
    }
    for (int c = 0; c < n_cells; ++c) region_of_cell[c] = region_of_cell[cells.find(c)];

    face_structure FS;
    FS.cell_region = region_of_cell;
    FS.regions.assign(n_regions, {});
    for (int c = 0; c < n_cells; ++c) FS.regions[region_of_cell[c]].cells.push_back(c);

    auto region_of_dedge = [&](int d) {
        int f = face_of[d];
        check(!face_outer[f], "walk entered an outer face");
        return region_of_cell[cell_of_face[f]];
    };

    // Euler characteristic: V from corner classes, E from glued intervals and
    // free dedge copies, F from cells
    std::vector<int> V(n_regions, 0), E(n_regions, 0), F(n_regions, 0);
    for (int c = 0; c < n_cells; ++c) ++F[region_of_cell[c]];
    std::vector<char> corner_seen(n_dedges, 0);
    for (int d = 0; d < n_dedges; ++d) {
        if (face_outer[face_of[d]]) continue;
        int r = corners.find(d);
        if (!corner_seen[r]) {
            corner_seen[r] = 1;
            ++V[region_of_dedge(d)];
        }
    }
    for (int i = 0; i < (int)edges.size(); ++i) {
        const auto& ue = edges[i];
        if (ue.kind == 'i' && glued[i]) {
            // each glued pair counts once; count it from side 0's copy
            const auto& a = S.edge_side[ue.edge][0];
            if (a.tri == ue.tri && a.side == ue.side) ++E[region_of_dedge(2 * i)];
        } else if (ue.kind == 'i') {
            ++E[region_of_dedge(2 * i)];
        } else {
            ++E[region_of_dedge(2 * i)];
            ++E[region_of_dedge(2 * i + 1)];
        }
    }
    for (int r = 0; r < n_regions; ++r) FS.regions[r].chi = V[r] - E[r] + F[r];

    // glued partner of a forward interval dedge, for boundary walks
    std::vector<int> partner(n_dedges, -1);
    for (int e = 0; e < S.n_edges; ++e) {
        if (S.boundary_edge[e]) continue;
        auto a = S.edge_side[e][0], b = S.edge_side[e][1];
        int w = (int)P.edge_pts[e].size();
        for (int j = 0; j <= w; ++j) {
            int da = 2 * iv[a.tri][a.side][j], db = 2 * iv[b.tri][b.side][w - j];
            partner[da] = db;
            partner[db] = da;
        }
    }

    auto is_free = [&](int d) {
        const auto& ue = edges[d >> 1];
        if (ue.kind == 's') return true;
        return !(d & 1) && S.boundary_edge[ue.edge] != 0;
    };

    std::vector<char> walked(n_dedges, 0);
    for (int d0 = 0; d0 < n_dedges; ++d0) {
        if (!is_free(d0) || walked[d0]) continue;
        int reg = region_of_dedge(d0);
        std::vector<walk_item> walk;
        std::vector<int> hops;
        int d = d0;
        do {
            check(!walked[d], "boundary walk revisited a dedge");
            walked[d] = 1;
            const auto& ue = edges[d >> 1];
            walk_item it;
            if (ue.kind == 's') {
                it.kind = walk_item::strand_side;
                it.sys = P.strands[ue.strand].sys;
                it.strand = ue.strand;
                it.gap = ue.gap;
                it.left = !(d & 1);
            } else {
                it.kind = walk_item::surface_boundary;
                it.edge = ue.edge;
                it.interval = ue.idx;
                FS.regions[reg].touches_boundary = true;
            }
            walk.push_back(it);

            int pivot = head(d);
            int e = next_in[d];
            int guard = 0;
            while (!is_free(e)) {
                check(partner[e] >= 0, "boundary walk stuck on an unglued dedge");
                hops.push_back(edges[e >> 1].edge);
                e = next_in[partner[e]];
                check(++guard <= n_dedges, "boundary walk pivot failed to terminate");
            }
            check(region_of_dedge(e) == reg, "boundary walk crossed regions");
            if (pivot >= 3 * T + 2 * NP) {
                walk_item m;
                m.kind = walk_item::crossing_mark;
                m.crossing = pivot - 3 * T - 2 * NP;
                walk.push_back(m);
                ++FS.regions[reg].crossing_corners;
            } else if (pivot >= 3 * T) {
                int pt = (pivot - 3 * T) / 2;
                if (S.boundary_edge[P.pts[pt].edge]) {
                    walk_item m;
                    m.kind = walk_item::endpoint_mark;
                    m.point = pt;
                    walk.push_back(m);
                }
            }
            d = e;
        } while (d != d0);
        FS.regions[reg].walks.push_back(std::move(walk));
        FS.regions[reg].walk_hops.push_back(std::move(hops));
    }

    // region adjacent to each edge interval
    FS.interval_region.resize(S.n_edges);
    for (int e = 0; e < S.n_edges; ++e) {
        int w = (int)P.edge_pts[e].size();
        FS.interval_region[e].assign(w + 1, -1);
        const auto& a = S.edge_side[e][0];
        for (int j = 0; j <= w; ++j) {
            // interval j along the edge direction is interval j of a side that
            // runs with the edge, and interval w - j of one that runs against
            int ja = S.tris[a.tri].orient[a.side] > 0 ? j : w - j;
            FS.interval_region[e][j] = region_of_dedge(2 * iv[a.tri][a.side][ja]);
        }
    }
    return FS;
}

int face_structure::region_below(const picture& P, int pt) const {
    return interval_region[P.pts[pt].edge][P.edge_index_of(pt)];
}

int face_structure::region_above(const picture& P, int pt) const {
    return interval_region[P.pts[pt].edge][P.edge_index_of(pt) + 1];
}

}  // namespace mcg
