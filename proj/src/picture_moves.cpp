// Single-system isotopy moves.
//
// A traced system is one normal representative of its isotopy class; the
// moves here walk between neighboring representatives without changing the
// class.  Three kinds of surgery:
//
//   * return removal: a chord entering and leaving one edge at adjacent
//     positions bounds an empty half disk, so the doubled-back piece
//     straightens across the edge.  Removing one return can expose another
//     (nested returns resolve innermost first), so the scan repeats until
//     clean.  A two-point closed strand doubling back on one edge is a null
//     curve and vanishes outright.
//
//   * vertex push: a strand segment hugging an interior vertex at depth zero
//     through a stretch of its fan is rerouted around the other side of the
//     vertex, again at depth zero.  The reroute is an isotopy exactly when
//     both anchor chords enter their fan triangles through the side facing
//     away from the vertex; an anchor sitting on a fan spoke would be crossed
//     by the new route, so those candidates are skipped.
//
//   * endpoint slide: an arc endpoint innermost at one end of its boundary
//     edge slides around the boundary vertex there onto the adjacent boundary
//     edge, crossing each interior spoke of the vertex fan at depth zero.
//     Sliding needs no legality test: wherever the old route already hugged
//     the vertex, the new route runs parallel to it and the doubled pieces
//     telescope away as returns.
//
// Neighbor enumeration applies every legal push and slide to a fresh copy,
// normalizes by return removal, and collects the distinct weight vectors.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "picture.hpp"
#include "picture_detail.hpp"

namespace mcg {

namespace {

int strand_next(const picture& P, int s, int pt) {
    const auto& st = P.strands[s];
    int k = P.pts[pt].pos + 1;
    if (k < (int)st.p.size()) return st.p[k];
    return st.closed ? st.p[0] : -1;
}

int strand_prev(const picture& P, int s, int pt) {
    const auto& st = P.strands[s];
    int k = P.pts[pt].pos - 1;
    if (k >= 0) return st.p[k];
    return st.closed ? st.p.back() : -1;
}

// reverse an open strand's traversal direction in place
void reverse_strand(picture& P, int s) {
    auto& st = P.strands[s];
    check(!st.closed, "only open strands are reversed");
    std::reverse(st.p.begin(), st.p.end());
    std::reverse(st.tri.begin(), st.tri.end());
    for (int k = 0; k < (int)st.p.size(); ++k) {
        auto& q = P.pts[st.p[k]];
        q.pos = k;
        std::swap(q.side_prev, q.side_next);
    }
}

// ----------------------------------------------------------------------------
// Vertex fans.
//
// Walking corner to corner around a vertex: from corner c of a triangle,
// crossing the side that starts at c lands at corner (s+1)%3 of the far
// triangle, where s is the shared edge's side there.  Around an interior
// vertex the walk is a cycle; corner[j] is entered by crossing spoke j-1 and
// left by crossing spoke j, so the triangle between spokes j and j+1 is
// corner[j+1].tri, carrying spoke j on side (c+2)%3 and spoke j+1 on side c
// with the vertex at corner c.

struct corner_ref {
    int tri = -1;
    int c = -1;
};

struct fan_t {
    int d = 0;
    std::vector<corner_ref> corner;
    std::vector<int> spoke_edge;
    std::vector<int> spoke_end;  // which end of the spoke sits at the vertex

    int at(int j) const { return ((j % d) + d) % d; }
    int tri_between(int j) const { return corner[at(j + 1)].tri; }
    int side_lo(int j) const { return (corner[at(j + 1)].c + 2) % 3; }  // spoke j
    int side_hi(int j) const { return corner[at(j + 1)].c; }           // spoke j+1
    int outer_side(int j) const { return 3 - side_lo(j) - side_hi(j); }
};

fan_t interior_fan(const surface& S, int v) {
    corner_ref start;
    for (int t = 0; t < S.n_tris() && start.tri < 0; ++t)
        for (int c = 0; c < 3; ++c)
            if (S.vertex_at_corner(t, c) == v) {
                start = {t, c};
                break;
            }
    check(start.tri >= 0, "vertex has no corners");
    fan_t F;
    corner_ref k = start;
    do {
        F.corner.push_back(k);
        F.spoke_edge.push_back(S.edge_of({k.tri, k.c}));
        F.spoke_end.push_back(S.orient_of({k.tri, k.c}) == 1 ? 0 : 1);
        side_ref o = S.other_side(k.tri, k.c);
        check(o.valid(), "interior fan reached a boundary edge");
        k = {o.tri, (o.side + 1) % 3};
        check((int)F.corner.size() <= 3 * S.n_tris(), "fan walk does not close");
    } while (!(k.tri == start.tri && k.c == start.c));
    F.d = (int)F.corner.size();
    return F;
}

// clamped fan of a boundary vertex: corners from the corner whose ending side
// is a boundary edge to the corner whose starting side is one; spokes are the
// interior edges crossed in between
struct bfan_t {
    int m = 0;
    std::vector<corner_ref> corner;  // m+1 corners
    std::vector<int> spoke_edge;     // spoke j stored at index j-1, j = 1..m
    std::vector<int> spoke_end;
    int b_start_edge = -1, b_start_end = -1;
    int b_end_edge = -1, b_end_end = -1;
};

bfan_t boundary_fan(const surface& S, int v) {
    corner_ref start;
    int found = 0;
    for (int t = 0; t < S.n_tris(); ++t)
        for (int c = 0; c < 3; ++c) {
            if (S.vertex_at_corner(t, c) != v) continue;
            if (S.boundary_edge[S.edge_of({t, (c + 2) % 3})]) {
                start = {t, c};
                ++found;
            }
        }
    check(found == 1, "boundary vertex fan start is not unique");
    bfan_t F;
    corner_ref k = start;
    for (;;) {
        F.corner.push_back(k);
        int e = S.edge_of({k.tri, k.c});
        if (S.boundary_edge[e]) break;
        F.spoke_edge.push_back(e);
        F.spoke_end.push_back(S.orient_of({k.tri, k.c}) == 1 ? 0 : 1);
        side_ref o = S.other_side(k.tri, k.c);
        k = {o.tri, (o.side + 1) % 3};
        check((int)F.corner.size() <= 3 * S.n_tris(), "fan walk does not terminate");
    }
    F.m = (int)F.spoke_edge.size();
    corner_ref k0 = F.corner.front(), km = F.corner.back();
    int s2 = (k0.c + 2) % 3;
    F.b_start_edge = S.edge_of({k0.tri, s2});
    F.b_start_end = S.orient_of({k0.tri, s2}) == 1 ? 1 : 0;  // the side ends at the corner
    F.b_end_edge = S.edge_of({km.tri, km.c});
    F.b_end_end = S.orient_of({km.tri, km.c}) == 1 ? 0 : 1;
    return F;
}

// innermost live point at the given end of an edge, or -1
int innermost_point(const picture& P, int e, int end) {
    const auto& ord = P.edge_pts[e];
    if (ord.empty()) return -1;
    return end == 0 ? ord.front() : ord.back();
}

// whether the innermost points of spokes i and i+1 are joined by a chord
// cutting the fan corner between them
bool spokes_hugged(const picture& P, const fan_t& F, const std::vector<int>& dp, int i) {
    int a = dp[i], b = dp[F.at(i + 1)];
    if (a < 0 || b < 0 || a == b) return false;
    if (P.pts[a].strand != P.pts[b].strand) return false;
    int s = P.pts[a].strand;
    const auto& st = P.strands[s];
    int n = (int)st.p.size();
    int pa = P.pts[a].pos, pb = P.pts[b].pos;
    // a two point closed strand joins the pair through both of its gaps, so
    // every candidate gap is tried
    std::vector<int> gs;
    if (st.closed) {
        if ((pa + 1) % n == pb) gs.push_back(pa);
        if ((pb + 1) % n == pa) gs.push_back(pb);
    } else {
        if (pb - pa == 1) gs.push_back(pa);
        else if (pa - pb == 1) gs.push_back(pb);
    }
    corner_ref K = F.corner[F.at(i + 1)];
    for (int g : gs) {
        if (st.tri[g] != K.tri) continue;
        // the chord endpoint on spoke i must sit on that spoke's side of the
        // corner, the other endpoint on the other side
        if (P.side_in_gap(a, s, g) != (K.c + 2) % 3) continue;
        if (P.side_in_gap(b, s, g) == K.c) return true;
    }
    return false;
}

// ----------------------------------------------------------------------------
// Applying one vertex push: the run of points on spokes i..i+L is deleted and
// the complementary route through spokes i-1, i-2, ..., i+L+1 inserted.

struct push_plan {
    int s = -1;
    int sdir = +1;  // +1 when strand order runs up the spoke indices
    int i = 0, L = 0;
    int wfirst = -1, wlast = -1;  // run ends in walk (ascending-spoke) order
};

bool plan_push(const picture& P, const fan_t& F, const std::vector<int>& dp, int i, int L,
               push_plan& plan) {
    int q0 = dp[i], qL = dp[F.at(i + L)];
    int s = P.pts[q0].strand;
    const auto& st = P.strands[s];
    int n = (int)st.p.size();
    if (st.closed && n == L + 1) return false;  // run is the whole strand, anchors inside
    int sdir;
    if (L > 0) {
        sdir = strand_next(P, s, q0) == dp[F.at(i + 1)] ? +1 : -1;
    } else {
        // a lone point's incoming germ decides which way the walk runs
        int pos = P.pts[q0].pos;
        int gprev = st.closed ? (pos - 1 + n) % n : pos - 1;
        check(gprev >= 0, "fan point has no incoming chord");
        bool from_below = st.tri[gprev] == F.tri_between(i - 1) &&
                          P.pts[q0].side_prev == F.side_hi(i - 1);
        if (!from_below)
            check(st.tri[gprev] == F.tri_between(i) && P.pts[q0].side_prev == F.side_lo(i),
                  "fan point germ off its spoke triangles");
        sdir = from_below ? +1 : -1;
    }
    int u = sdir == +1 ? strand_prev(P, s, q0) : strand_next(P, s, q0);
    int z = sdir == +1 ? strand_next(P, s, qL) : strand_prev(P, s, qL);
    check(u >= 0 && z >= 0, "fan run touches a strand end");
    auto chord_to = [&](int q, bool incoming) {
        int pos = P.pts[q].pos;
        int g = incoming ? pos - 1 : pos;
        return st.closed ? (g + n) % n : g;
    };
    int gu = chord_to(q0, sdir == +1);
    int gz = chord_to(qL, sdir != +1);
    check(st.tri[gu] == F.tri_between(i - 1), "anchor chord off its fan triangle");
    check(st.tri[gz] == F.tri_between(i + L), "anchor chord off its fan triangle");
    if (P.side_in_gap(u, s, gu) != F.outer_side(i - 1)) return false;
    if (P.side_in_gap(z, s, gz) != F.outer_side(i + L)) return false;
    plan = {s, sdir, i, L, q0, qL};
    return true;
}

void apply_push(picture& Q, const fan_t& F, const std::vector<int>& dp, const push_plan& plan) {
    int s = plan.s, i = plan.i, L = plan.L, sdir = plan.sdir;
    auto& st = Q.strands[s];
    if (st.closed) {
        // strand order enters the run at wfirst or wlast depending on sdir
        int before = strand_prev(Q, s, sdir == +1 ? plan.wfirst : plan.wlast);
        detail::rotate_strand(Q, s, Q.pts[before].pos);
    }
    int lo = Q.pts[sdir == +1 ? plan.wfirst : plan.wlast].pos;
    int hi = lo + L;
    int n = (int)st.p.size();
    check(lo >= 1 && hi <= n - (st.closed ? 1 : 2), "fan run span out of place");
    for (int k = 0; k <= L; ++k) detail::delete_point(Q, dp[F.at(i + k)]);
    int m = F.d - L - 1;
    std::vector<int> repl, blk;
    repl.reserve(m);
    blk.reserve(m + 1);
    for (int k = 1; k <= m; ++k) {
        int j = F.at(i - k);
        int e = F.spoke_edge[j], end = F.spoke_end[j];
        int id = detail::insert_point(Q, e, end == 0 ? 0 : (int)Q.edge_pts[e].size(), 0);
        Q.pts[id].strand = s;
        int wprev = F.side_lo(j), wnext = F.side_hi(j - 1);
        Q.pts[id].side_prev = sdir == +1 ? wprev : wnext;
        Q.pts[id].side_next = sdir == +1 ? wnext : wprev;
        repl.push_back(id);
    }
    for (int k = 0; k <= m; ++k) blk.push_back(F.tri_between(i - 1 - k));
    if (sdir == -1) {
        std::reverse(repl.begin(), repl.end());
        std::reverse(blk.begin(), blk.end());
    }
    detail::splice_strand(Q, s, lo, hi, repl, blk);
}

// ----------------------------------------------------------------------------
// Sweeping a whole closed strand across the vertex.  When every point of a
// closed strand forms one innermost run on spokes i..i+L, the strand is a hug
// path closed by a single non-hug chord, and validity at the run ends forces
// that chord into the triangle the corners before and after the run share.
// The swept strand crosses the complementary spokes instead and closes up
// through that same triangle.

void apply_full_sweep(picture& Q, const fan_t& F, const std::vector<int>& dp, int i, int L) {
    int s = Q.pts[dp[i]].strand;
    int m = F.d - L - 1;
    int T = F.tri_between(i - 1);
    check(F.tri_between(i + L) == T, "fan run closes through two different triangles");
    for (int k = 0; k <= L; ++k) detail::delete_point(Q, dp[F.at(i + k)]);
    std::vector<int> repl, blk;
    repl.reserve(m);
    blk.reserve(m);
    for (int k = 1; k <= m; ++k) {
        int j = F.at(i - k);
        int e = F.spoke_edge[j], end = F.spoke_end[j];
        int id = detail::insert_point(Q, e, end == 0 ? 0 : (int)Q.edge_pts[e].size(), 0);
        Q.pts[id].strand = s;
        Q.pts[id].pos = k - 1;
        Q.pts[id].side_prev = F.side_lo(j);
        Q.pts[id].side_next = F.side_hi(j - 1);
        repl.push_back(id);
        blk.push_back(k < m ? F.tri_between(i - 1 - k) : T);
    }
    auto& st = Q.strands[s];
    st.p = std::move(repl);
    st.tri = std::move(blk);
}

// ----------------------------------------------------------------------------
// Applying one endpoint slide.  The strand is normalized so the moving
// endpoint is its front; forward means the endpoint leaves the fan's ending
// boundary edge and lands on its starting one.

void apply_slide(picture& Q, int s, const bfan_t& F, bool forward) {
    auto& st = Q.strands[s];
    int p0 = st.p.front();
    check(st.tri.front() == (forward ? F.corner.back().tri : F.corner.front().tri),
          "endpoint chord off its fan triangle");
    detail::delete_point(Q, p0);
    std::vector<int> repl, blk;
    repl.reserve(F.m + 1);
    blk.reserve(F.m + 1);
    auto place = [&](int e, int end) {
        int id = detail::insert_point(Q, e, end == 0 ? 0 : (int)Q.edge_pts[e].size(), 0);
        Q.pts[id].strand = s;
        repl.push_back(id);
        return id;
    };
    if (forward) {
        int pp = place(F.b_start_edge, F.b_start_end);
        Q.pts[pp].side_prev = -1;
        Q.pts[pp].side_next = (F.corner.front().c + 2) % 3;
        for (int j = 1; j <= F.m; ++j) {
            int id = place(F.spoke_edge[j - 1], F.spoke_end[j - 1]);
            Q.pts[id].side_prev = F.corner[j - 1].c;
            Q.pts[id].side_next = (F.corner[j].c + 2) % 3;
        }
        for (int j = 0; j <= F.m; ++j) blk.push_back(F.corner[j].tri);
    } else {
        int pp = place(F.b_end_edge, F.b_end_end);
        Q.pts[pp].side_prev = -1;
        Q.pts[pp].side_next = F.corner.back().c;
        for (int j = F.m; j >= 1; --j) {
            int id = place(F.spoke_edge[j - 1], F.spoke_end[j - 1]);
            Q.pts[id].side_prev = (F.corner[j].c + 2) % 3;
            Q.pts[id].side_next = F.corner[j - 1].c;
        }
        for (int j = F.m; j >= 0; --j) blk.push_back(F.corner[j].tri);
    }
    detail::splice_strand(Q, s, 0, 0, repl, blk);
}

}  // namespace

// ----------------------------------------------------------------------------
// Return removal.

int remove_returns(picture& P) {
    int nulls = 0;
    for (bool again = true; again;) {
        again = false;
        for (int e = 0; e < (int)P.edge_pts.size() && !again; ++e) {
            const auto& ord = P.edge_pts[e];
            for (int idx = 0; idx + 1 < (int)ord.size() && !again; ++idx) {
                int a = ord[idx], b = ord[idx + 1];
                if (P.pts[a].strand != P.pts[b].strand) continue;
                int s = P.pts[a].strand;
                auto& st = P.strands[s];
                int n = (int)st.p.size();
                int g = -1;
                {
                    int pa = P.pts[a].pos, pb = P.pts[b].pos;
                    if (pa > pb) std::swap(pa, pb);
                    if (pb - pa == 1) g = pa;
                    else if (st.closed && pb - pa == n - 1) g = n - 1;
                }
                if (g < 0) continue;
                again = true;
                if (st.closed && n == 2) {
                    // both chords join the same pair; the component bounds a disk
                    detail::delete_point(P, st.p[0]);
                    detail::delete_point(P, st.p[1]);
                    st.p.clear();
                    st.tri.clear();
                    st.alive = false;
                    ++nulls;
                } else if (!st.closed && (g == 0 || g == n - 2)) {
                    // a return chord next to an arc endpoint would put an
                    // interior strand point on a boundary edge
                    fail(errkind::internal, "return chord at an arc endpoint");
                } else if (st.closed) {
                    // both neighbor chords run through the one triangle on the
                    // other side of the edge; they merge into a single chord
                    int t1 = st.tri[(g - 1 + n) % n];
                    check(t1 == st.tri[(g + 1) % n], "return neighbors in different triangles");
                    detail::rotate_strand(P, s, (P.pts[P.gap_from(s, g)].pos - 1 + n) % n);
                    detail::delete_point(P, st.p[1]);
                    detail::delete_point(P, st.p[2]);
                    detail::splice_strand(P, s, 1, 2, {}, {t1});
                } else {
                    int t1 = st.tri[g - 1];
                    check(t1 == st.tri[g + 1], "return neighbors in different triangles");
                    detail::delete_point(P, st.p[g]);
                    detail::delete_point(P, st.p[g + 1]);
                    detail::splice_strand(P, s, g, g + 1, {}, {t1});
                }
            }
        }
    }
    return nulls;
}

// ----------------------------------------------------------------------------
// Stripping inessential components.

strip_result strip_inessential(const surface& S, const weights& w) {
    strip_result res;
    res.kept = zero_weights(S);
    for (const weights& comp : split_components(S, w)) {
        picture Q = trace(S, comp);
        int sidx = -1;
        for (int s = 0; s < (int)Q.strands.size(); ++s)
            if (Q.strands[s].alive) {
                check(sidx < 0, "component traced to several strands");
                sidx = s;
            }
        check(sidx >= 0, "component traced to nothing");
        face_structure F = compute_regions(Q, nullptr);
        auto pure = [](const std::vector<walk_item>& wk, walk_item::kind_t kind) {
            for (const auto& it : wk)
                if (it.kind != kind) return false;
            return true;
        };
        bool drop = false;
        if (Q.strands[sidx].closed) {
            for (const auto& R : F.regions)
                if (R.chi == 1 && !R.touches_boundary) {
                    ++res.null_curves;
                    drop = true;
                    break;
                }
            if (!drop) {
                // an annulus with the curve on one side and a full boundary
                // circle on the other marks the curve as boundary parallel
                for (const auto& R : F.regions) {
                    if (R.chi != 0 || R.walks.size() != 2) continue;
                    bool a0 = pure(R.walks[0], walk_item::surface_boundary) &&
                              pure(R.walks[1], walk_item::strand_side);
                    bool a1 = pure(R.walks[1], walk_item::surface_boundary) &&
                              pure(R.walks[0], walk_item::strand_side);
                    if (a0 || a1) {
                        ++res.peripheral_curves;
                        drop = true;
                        break;
                    }
                }
            }
        } else {
            // a disk bounded by the arc and a piece of the surface boundary
            // means the arc can be pushed into the boundary
            for (const auto& R : F.regions) {
                if (R.chi != 1 || R.walks.size() != 1) continue;
                bool has_strand = false, has_bdry = false;
                for (const auto& it : R.walks[0]) {
                    has_strand = has_strand || it.kind == walk_item::strand_side;
                    has_bdry = has_bdry || it.kind == walk_item::surface_boundary;
                }
                if (has_strand && has_bdry) {
                    ++res.trivial_arcs;
                    drop = true;
                    break;
                }
            }
        }
        if (!drop) res.kept = add(res.kept, comp);
    }
    return res;
}

// ----------------------------------------------------------------------------
// Neighbor enumeration.

std::vector<weights> isotopy_neighbors(const surface& S, const weights& w) {
    require_admissible(S, w);
    picture P0 = trace(S, w);
    std::set<weights> seen;
    auto emit = [&](picture&& Q) {
        int dropped = remove_returns(Q);
        check(dropped == 0, "isotopy move collapsed a component");
        Q.validate();
        weights nw = extract_weights(Q, 0);
        if (nw != w) seen.insert(std::move(nw));
    };

    for (int v = 0; v < S.n_vertices; ++v) {
        if (S.vertex_on_boundary[v]) continue;
        fan_t F = interior_fan(S, v);
        int d = F.d;
        std::vector<int> dp(d);
        for (int i = 0; i < d; ++i)
            dp[i] = innermost_point(P0, F.spoke_edge[i], F.spoke_end[i]);
        std::vector<char> adj(d);
        bool link = true;
        for (int i = 0; i < d; ++i) {
            adj[i] = spokes_hugged(P0, F, dp, i);
            link = link && adj[i];
        }
        if (link) continue;  // the strand is the vertex link, nothing to push past
        for (int i = 0; i < d; ++i) {
            if (dp[i] < 0 || adj[F.at(i - 1)]) continue;
            int L = 0;
            while (adj[F.at(i + L)]) ++L;
            const auto& rst = P0.strands[P0.pts[dp[i]].strand];
            if (rst.closed && (int)rst.p.size() == L + 1) {
                picture Q = P0;
                apply_full_sweep(Q, F, dp, i, L);
                emit(std::move(Q));
                continue;
            }
            push_plan plan;
            if (!plan_push(P0, F, dp, i, L, plan)) continue;
            picture Q = P0;
            apply_push(Q, F, dp, plan);
            emit(std::move(Q));
        }
    }

    for (int s = 0; s < (int)P0.strands.size(); ++s) {
        const auto& st = P0.strands[s];
        if (!st.alive || st.closed) continue;
        int n = (int)st.p.size();
        for (int endsel = 0; endsel < 2; ++endsel) {
            int p0 = endsel == 0 ? st.p.front() : st.p.back();
            int r = P0.pts[p0].edge;
            int idx = P0.edge_index_of(p0);
            for (int uend = 0; uend < 2; ++uend) {
                bool innermost = uend == 0 ? idx == 0 : idx == (int)P0.edge_pts[r].size() - 1;
                if (!innermost) continue;
                bfan_t F = boundary_fan(S, S.edge_end_vertex(r, uend));
                bool forward;
                if (r == F.b_end_edge && uend == F.b_end_end) {
                    forward = true;
                } else {
                    check(r == F.b_start_edge && uend == F.b_start_end,
                          "endpoint edge missing from its vertex fan");
                    forward = false;
                }
                // sliding the endpoint of a two point arc onto the far edge
                // would fold the arc onto one edge; such arcs are not moved
                int z = endsel == 0 ? st.p[1] : st.p[n - 2];
                int rp = forward ? F.b_start_edge : F.b_end_edge;
                if (n == 2 && P0.pts[z].edge == rp) continue;
                picture Q = P0;
                if (endsel == 1) reverse_strand(Q, s);
                apply_slide(Q, s, F, forward);
                emit(std::move(Q));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace mcg
