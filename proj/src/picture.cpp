#include "picture.hpp"

#include <algorithm>

#include "picture_detail.hpp"

namespace mcg {

namespace detail {

int side_position(const picture& P, int pt, int tri, int side) {
    const surface& S = *P.S;
    int e = S.tris[tri].edge[side];
    check(P.pts[pt].edge == e, "chord endpoint is not on its side's edge");
    int idx = P.edge_index_of(pt);
    int w = (int)P.edge_pts[e].size();
    return S.tris[tri].orient[side] > 0 ? idx : w - 1 - idx;
}

int boundary_key(const picture& P, int tri, int side, int side_pos) {
    const surface& S = *P.S;
    int key = 1 + side_pos;
    for (int s = 0; s < side; ++s)
        key += 1 + (int)P.edge_pts[S.tris[tri].edge[s]].size();
    return key;
}

int corner_key(const picture& P, int tri, int corner) {
    const surface& S = *P.S;
    int key = 0;
    for (int s = 0; s < corner; ++s)
        key += 1 + (int)P.edge_pts[S.tris[tri].edge[s]].size();
    return key;
}

int boundary_circumference(const picture& P, int tri) {
    const surface& S = *P.S;
    int c = 3;
    for (int s = 0; s < 3; ++s) c += (int)P.edge_pts[S.tris[tri].edge[s]].size();
    return c;
}

bool chords_interleave(int a0, int a1, int b0, int b1, int circ) {
    auto nu = [&](int x) { return ((x - a0) % circ + circ) % circ; };
    int cut = nu(a1);
    int in0 = nu(b0) > 0 && nu(b0) < cut;
    int in1 = nu(b1) > 0 && nu(b1) < cut;
    return in0 + in1 == 1;
}

}  // namespace detail

int picture::edge_index_of(int pt) const {
    const auto& order = edge_pts[pts[pt].edge];
    for (int i = 0; i < (int)order.size(); ++i)
        if (order[i] == pt) return i;
    fail(errkind::internal, "point missing from its edge order");
}

int picture::alive_points() const {
    int n = 0;
    for (const auto& p : pts) n += p.alive ? 1 : 0;
    return n;
}

void picture::validate() const {
    check(S != nullptr, "picture has no surface");
    int listed = 0;
    for (int e = 0; e < S->n_edges; ++e) {
        for (int id : edge_pts[e]) {
            check(id >= 0 && id < (int)pts.size() && pts[id].alive, "edge order lists a dead point");
            check(pts[id].edge == e, "edge order lists a point of another edge");
            ++listed;
        }
    }
    check(listed == alive_points(), "edge orders and live points disagree");

    for (int si = 0; si < (int)strands.size(); ++si) {
        const auto& st = strands[si];
        if (!st.alive) continue;
        check(st.closed ? !st.p.empty() : st.p.size() >= 2, "strand is too short");
        check((int)st.tri.size() == n_gaps(si), "strand chord count mismatch");
        for (int k = 0; k < (int)st.p.size(); ++k) {
            const auto& pp = pts[st.p[k]];
            check(pp.alive && pp.sys == st.sys && pp.strand == si && pp.pos == k,
                  "strand point bookkeeping mismatch");
            bool endpoint = !st.closed && (k == 0 || k + 1 == (int)st.p.size());
            if (endpoint)
                check(S->boundary_edge[pp.edge], "arc endpoint not on a boundary edge");
            else
                check(!S->boundary_edge[pp.edge], "interior strand point on a boundary edge");
        }
        for (int g = 0; g < n_gaps(si); ++g) {
            int t = st.tri[g];
            check(t >= 0 && t < S->n_tris(), "chord triangle out of range");
            int a = gap_from(si, g), b = gap_to(si, g);
            int sa = pts[a].side_next, sb = pts[b].side_prev;
            check(sa >= 0 && sa < 3 && sb >= 0 && sb < 3, "chord side missing");
            check(S->tris[t].edge[sa] == pts[a].edge, "chord start side edge mismatch");
            check(S->tris[t].edge[sb] == pts[b].edge, "chord end side edge mismatch");
        }
        if (!st.closed)
            check(pts[st.p.front()].side_prev == -1 && pts[st.p.back()].side_next == -1,
                  "open strand has chord sides past its ends");
    }

    // same-system chords never cross: verify by interleaving within each triangle
    std::vector<std::vector<std::pair<int, int>>> by_tri(S->n_tris());
    for (int si = 0; si < (int)strands.size(); ++si) {
        if (!strands[si].alive) continue;
        for (int g = 0; g < n_gaps(si); ++g) by_tri[strands[si].tri[g]].push_back({si, g});
    }
    for (int t = 0; t < S->n_tris(); ++t) {
        const auto& cs = by_tri[t];
        int circ = detail::boundary_circumference(*this, t);
        std::vector<std::pair<int, int>> keys(cs.size());
        for (size_t i = 0; i < cs.size(); ++i) {
            auto [si, g] = cs[i];
            int a = gap_from(si, g), b = gap_to(si, g);
            keys[i] = {detail::endpoint_key(*this, a, t, pts[a].side_next),
                       detail::endpoint_key(*this, b, t, pts[b].side_prev)};
        }
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = i + 1; j < cs.size(); ++j) {
                if (strands[cs[i].first].sys != strands[cs[j].first].sys) continue;
                check(!detail::chords_interleave(keys[i].first, keys[i].second, keys[j].first,
                                                 keys[j].second, circ),
                      "same-system chords cross");
            }
    }
}

// ----------------------------------------------------------------------------
// Tracing.

namespace {

struct chord_link {
    int partner = -1;
    int tri = -1;
    int my_side = -1;
    int partner_side = -1;
};

// per-point chord links determined by the corner counts: in each triangle the
// j-th point from a corner on one of its sides joins the j-th point from the
// same corner on the other side
std::vector<std::vector<chord_link>> build_links(const surface& S,
                                                 const std::vector<std::vector<int>>& order) {
    int n_pts = 0;
    for (const auto& v : order) n_pts += (int)v.size();
    std::vector<std::vector<chord_link>> links(n_pts);
    auto point_at = [&](int tri, int side, int side_pos) {
        int e = S.tris[tri].edge[side];
        int w = (int)order[e].size();
        int idx = S.tris[tri].orient[side] > 0 ? side_pos : w - 1 - side_pos;
        return order[e][idx];
    };
    for (int t = 0; t < S.n_tris(); ++t) {
        std::array<int, 3> ws;
        for (int s = 0; s < 3; ++s) ws[s] = (int)order[S.tris[t].edge[s]].size();
        for (int c = 0; c < 3; ++c) {
            int other = (c + 2) % 3;
            int x = (ws[c] + ws[other] - ws[(c + 1) % 3]) / 2;
            for (int j = 0; j < x; ++j) {
                int pa = point_at(t, c, j);
                int pb = point_at(t, other, ws[other] - 1 - j);
                links[pa].push_back({pb, t, c, other});
                links[pb].push_back({pa, t, other, c});
            }
        }
    }
    return links;
}

// index within links[to] of the link that is the reverse of stepping from
// `from` along L
int arrival_index(const std::vector<std::vector<chord_link>>& links, int from,
                  const chord_link& L, int to) {
    for (int i = 0; i < (int)links[to].size(); ++i) {
        const chord_link& R = links[to][i];
        if (R.partner == from && R.tri == L.tri && R.my_side == L.partner_side &&
            R.partner_side == L.my_side)
            return i;
    }
    fail(errkind::internal, "chord link has no reverse");
}

void walk_strand(picture& P, const std::vector<std::vector<chord_link>>& links,
                 std::vector<char>& seen, int start, bool closed, int sys) {
    picture::strand_t st;
    st.sys = sys;
    st.closed = closed;
    int cur = start;
    int arrive = -1;  // index in links[cur] of the link we came by
    for (;;) {
        seen[cur] = 1;
        st.p.push_back(cur);
        if (!closed && arrive != -1 && links[cur].size() == 1) break;
        int depart = arrive == -1 ? 0 : 1 - arrive;
        const chord_link& L = links[cur][depart];
        P.pts[cur].side_next = L.my_side;
        st.tri.push_back(L.tri);
        int nxt = L.partner;
        P.pts[nxt].side_prev = L.partner_side;
        if (closed && nxt == start) break;
        arrive = arrival_index(links, cur, L, nxt);
        cur = nxt;
    }
    int id = (int)P.strands.size();
    for (int k = 0; k < (int)st.p.size(); ++k) {
        P.pts[st.p[k]].strand = id;
        P.pts[st.p[k]].pos = k;
    }
    if (!closed) {
        P.pts[st.p.front()].side_prev = -1;
        P.pts[st.p.back()].side_next = -1;
    }
    P.strands.push_back(std::move(st));
}

void assemble_strands(picture& P, const surface& S, int sys_of_all) {
    auto links = build_links(S, P.edge_pts);
    std::vector<char> seen(P.pts.size(), 0);
    // arcs first, each from its lowest endpoint
    for (int e = 0; e < S.n_edges; ++e) {
        if (!S.boundary_edge[e]) continue;
        for (int id : P.edge_pts[e]) {
            if (seen[id]) continue;
            check(links[id].size() == 1, "boundary edge point with interior linkage");
            walk_strand(P, links, seen, id, false, sys_of_all);
        }
    }
    // remaining points lie on closed strands
    for (int e = 0; e < S.n_edges; ++e) {
        for (int id : P.edge_pts[e]) {
            if (seen[id]) continue;
            check(links[id].size() == 2, "interior point without two chords");
            walk_strand(P, links, seen, id, true, sys_of_all);
        }
    }
}

void add_points(picture& P, const surface& S, const weights& w, int sys) {
    for (int e = 0; e < S.n_edges; ++e) {
        for (int k = 0; k < w[e]; ++k) {
            int id = (int)P.pts.size();
            picture::point pp;
            pp.edge = e;
            pp.sys = sys;
            pp.alive = true;
            P.pts.push_back(pp);
            P.edge_pts[e].push_back(id);
        }
    }
}

}  // namespace

picture trace(const surface& S, const weights& w) {
    require_admissible(S, w);
    picture P;
    P.S = &S;
    P.n_systems = 1;
    P.edge_pts.resize(S.n_edges);
    add_points(P, S, w, 0);
    assemble_strands(P, S, 0);
    return P;
}

picture overlay(const surface& S, const weights& a, const weights& b) {
    picture A = trace(S, a);
    picture B = trace(S, b);
    picture P;
    P.S = &S;
    P.n_systems = 2;
    P.edge_pts.resize(S.n_edges);
    int off = (int)A.pts.size();

    P.pts = std::move(A.pts);
    for (auto pp : B.pts) {
        pp.sys = 1;
        pp.strand += (int)A.strands.size();
        P.pts.push_back(pp);
    }
    P.strands = std::move(A.strands);
    for (auto st : B.strands) {
        st.sys = 1;
        for (int& id : st.p) id += off;
        P.strands.push_back(std::move(st));
    }

    // proportional interleaving: point i of wa points and point j of wb points
    // compare by (i + 1/2)/wa vs (j + 1/2)/wb, system 0 first on ties
    for (int e = 0; e < S.n_edges; ++e) {
        int wa = a[e], wb = b[e];
        int i = 0, j = 0;
        auto& out = P.edge_pts[e];
        while (i < wa || j < wb) {
            bool take_a;
            if (i == wa)
                take_a = false;
            else if (j == wb)
                take_a = true;
            else
                take_a = (long long)(2 * i + 1) * wb <= (long long)(2 * j + 1) * wa;
            if (take_a)
                out.push_back(A.edge_pts[e][i++]);
            else
                out.push_back(B.edge_pts[e][j++] + off);
        }
    }
    return P;
}

weights extract_weights(const picture& P, int sys) {
    weights w(P.S->n_edges, 0);
    for (const auto& pp : P.pts)
        if (pp.alive && pp.sys == sys) ++w[pp.edge];
    return w;
}

int live_strand_count(const picture& P, int sys) {
    int n = 0;
    for (const auto& st : P.strands) n += (st.alive && st.sys == sys) ? 1 : 0;
    return n;
}

std::vector<weights> split_components(const surface& S, const weights& w) {
    picture P = trace(S, w);
    std::vector<weights> out;
    for (const auto& st : P.strands) {
        if (!st.alive) continue;
        weights cw(S.n_edges, 0);
        for (int id : st.p) ++cw[P.pts[id].edge];
        out.push_back(std::move(cw));
    }
    return out;
}

// ----------------------------------------------------------------------------
// Low-level edits.

namespace detail {

int insert_point(picture& P, int e, int at_index, int sys) {
    auto& order = P.edge_pts[e];
    check(at_index >= 0 && at_index <= (int)order.size(), "point insertion out of range");
    int id = (int)P.pts.size();
    picture::point pp;
    pp.edge = e;
    pp.sys = sys;
    pp.alive = true;
    P.pts.push_back(pp);
    order.insert(order.begin() + at_index, id);
    return id;
}

void delete_point(picture& P, int pt) {
    auto& pp = P.pts[pt];
    check(pp.alive, "deleting a dead point");
    pp.alive = false;
    auto& order = P.edge_pts[pp.edge];
    auto it = std::find(order.begin(), order.end(), pt);
    check(it != order.end(), "dead point missing from its edge order");
    order.erase(it);
}

void splice_strand(picture& P, int s, int lo, int hi, const std::vector<int>& repl,
                   const std::vector<int>& tri_block) {
    auto& st = P.strands[s];
    int n = (int)st.p.size();
    check(lo >= 0 && hi >= lo - 1 && hi < n, "bad splice span");
    bool at_front = (lo == 0);
    bool at_back = (hi == n - 1);
    if (st.closed) {
        // position 0 anchors the cut; the block may absorb the wrap chord
        check(!at_front, "closed strand splice must leave position 0 anchored");
        check((int)tri_block.size() == (int)repl.size() + 1,
              "splice triangle block has the wrong length");
    } else {
        check((int)tri_block.size() ==
                  (int)repl.size() + 1 - (at_front ? 1 : 0) - (at_back ? 1 : 0),
              "splice triangle block has the wrong length");
    }

    std::vector<int> np, nt;
    np.reserve(n - (hi - lo + 1) + repl.size());
    for (int i = 0; i < lo; ++i) np.push_back(st.p[i]);
    for (int id : repl) np.push_back(id);
    for (int i = hi + 1; i < n; ++i) np.push_back(st.p[i]);

    for (int i = 0; i + 1 < lo; ++i) nt.push_back(st.tri[i]);
    for (int t : tri_block) nt.push_back(t);
    for (int i = hi + 1; i + 1 < n; ++i) nt.push_back(st.tri[i]);
    if (st.closed && hi + 1 < n) nt.push_back(st.tri[n - 1]);

    check((int)nt.size() == (int)np.size() - (st.closed ? 0 : 1), "splice produced a bad gap count");
    st.p = std::move(np);
    st.tri = std::move(nt);
    for (int i = 0; i < (int)st.p.size(); ++i) {
        P.pts[st.p[i]].strand = s;
        P.pts[st.p[i]].pos = i;
    }
}

void rotate_strand(picture& P, int s, int r) {
    auto& st = P.strands[s];
    check(st.closed, "rotating an open strand");
    int n = (int)st.p.size();
    if (n == 0 || r % n == 0) return;
    r %= n;
    std::rotate(st.p.begin(), st.p.begin() + r, st.p.end());
    std::rotate(st.tri.begin(), st.tri.begin() + r, st.tri.end());
    for (int i = 0; i < n; ++i) P.pts[st.p[i]].pos = i;
}

}  // namespace detail

}  // namespace mcg
