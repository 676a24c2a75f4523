// Minimal position for two-system pictures.
//
// A disk bounded by one piece of each system (a bigon), or half such a disk
// resting on the surface boundary (a half bigon), can be emptied by rerouting
// one of the two pieces along the other.  Removing them all realizes the
// geometric intersection number.  Two layers share the work:
//
//   * a cheap scan finds parallel strips: pairs of crossings consecutive
//     along both strands whose connecting subpaths run through identical
//     edge and side sequences;
//   * the face structure finds the rest: a disk region with exactly two
//     crossing corners, or with one crossing corner and a boundary stretch,
//     names a removable configuration directly.  A boundary stretch that
//     carries endpoint germs of the moving system blocks that side (the
//     cyclic order of a system's own endpoints on a boundary circle never
//     changes under isotopy); when both sides are blocked the face stays.
//
// Rerouting deletes the moving side's points and inserts one new point
// hugging each fixed-side point, so the crossing registry is patched rather
// than rebuilt: the two dead crossings leave their chords, survivors keep
// their order, and gap indices shift by the length difference.

#include <algorithm>
#include <array>
#include <deque>
#include <utility>
#include <vector>

#include "base.hpp"
#include "picture_detail.hpp"

namespace mcg {

namespace {

int list_pos(const std::vector<int>& v, int id) {
    auto it = std::find(v.begin(), v.end(), id);
    check(it != v.end(), "crossing missing from its chord list");
    return (int)(it - v.begin());
}

int chord_gap_on(const crossings::rec& r, int s) {
    if (r.s0 == s) return r.g0;
    check(r.s1 == s, "crossing does not touch this strand");
    return r.g1;
}

// cyclic position of crossing id along chord (s, g), measured from the
// chord's from-end by the near endpoint of the other chord
long long cross_param(const picture& P, const crossings& X, int id, int s, int g) {
    const auto& r = X.xs[id];
    int os, og;
    if (r.s0 == s && r.g0 == g) {
        os = r.s1;
        og = r.g1;
    } else {
        check(r.s1 == s && r.g1 == g, "crossing not on this chord");
        os = r.s0;
        og = r.g0;
    }
    int t = r.tri;
    int a = P.gap_from(s, g), b = P.gap_to(s, g);
    int from = detail::endpoint_key(P, a, t, P.side_in_gap(a, s, g));
    int to = detail::endpoint_key(P, b, t, P.side_in_gap(b, s, g));
    int oa = P.gap_from(os, og), ob = P.gap_to(os, og);
    int ka = detail::endpoint_key(P, oa, t, P.side_in_gap(oa, os, og));
    int kb = detail::endpoint_key(P, ob, t, P.side_in_gap(ob, os, og));
    int circ = detail::boundary_circumference(P, t);
    auto nu = [&](int k) { return ((k - from) % circ + circ) % circ; };
    int nto = nu(to), na = nu(ka), nb = nu(kb);
    bool ain = na > 0 && na < nto, bin = nb > 0 && nb < nto;
    check(ain != bin, "crossing chords do not interleave");
    return ain ? na : nb;
}

// one step from crossing x along strand s in the given direction: the next
// crossing (with its gap), or the strand endpoint when the walk runs off the
// open end.  wrapped marks the full-circle return onto x's own chord.
struct step_t {
    int crossing = -1;
    int gap = -1;
    int endpoint = -1;
    bool wrapped = false;
};

step_t next_crossing(const picture& P, const crossings& X, int s, int g, int x, int dir) {
    const auto& lst = X.on_gap[s][g];
    int pos = list_pos(lst, x);
    if (dir == +1 && pos + 1 < (int)lst.size()) return {lst[pos + 1], g, -1, false};
    if (dir == -1 && pos > 0) return {lst[pos - 1], g, -1, false};
    const auto& st = P.strands[s];
    int n = P.n_gaps(s);
    if (!st.closed) {
        for (int gg = g + dir; gg >= 0 && gg < n; gg += dir)
            if (!X.on_gap[s][gg].empty())
                return {dir == +1 ? X.on_gap[s][gg].front() : X.on_gap[s][gg].back(), gg, -1,
                        false};
        return {-1, -1, dir == +1 ? st.p.back() : st.p.front(), false};
    }
    for (int k = 1; k < n; ++k) {
        int gg = ((g + dir * k) % n + n) % n;
        if (!X.on_gap[s][gg].empty())
            return {dir == +1 ? X.on_gap[s][gg].front() : X.on_gap[s][gg].back(), gg, -1, false};
    }
    return {dir == +1 ? lst.front() : lst.back(), g, -1, true};
}

// one side of a strip: the subpath of strand s from crossing x onward, as the
// gap sequence plus the points passed (walk order; half strips include the
// final endpoint)
struct sub_t {
    int s = -1;
    int dir = 0;
    std::vector<int> gaps;
    std::vector<int> pts;
};

sub_t walk_sub(const picture& P, int s, int g, int dir, int g_end, bool wrapped) {
    sub_t r;
    r.s = s;
    r.dir = dir;
    r.gaps.push_back(g);
    if (g == g_end && !wrapped) return r;
    int n = P.n_gaps(s);
    bool closed = P.strands[s].closed;
    int gg = g;
    for (int guard = 0;; ++guard) {
        check(guard <= n, "runaway strip walk");
        r.pts.push_back(dir == +1 ? P.gap_to(s, gg) : P.gap_from(s, gg));
        int ng = gg + dir;
        if (closed) ng = ((ng % n) + n) % n;
        check(ng >= 0 && ng < n, "strip walk left the strand");
        gg = ng;
        r.gaps.push_back(gg);
        if (gg == g_end) break;
    }
    return r;
}

sub_t walk_sub_to_end(const picture& P, int s, int g, int dir) {
    sub_t r;
    r.s = s;
    r.dir = dir;
    int n = P.n_gaps(s);
    for (int gg = g;; gg += dir) {
        r.gaps.push_back(gg);
        r.pts.push_back(dir == +1 ? P.gap_to(s, gg) : P.gap_from(s, gg));
        if (gg + dir < 0 || gg + dir >= n) break;
    }
    return r;
}

// parallel strips cross the same edges with the same side pair at every step;
// half strips additionally end at adjacent points of one boundary edge
bool parallel_subs(const picture& P, const sub_t& a, const sub_t& b, bool half) {
    int k = (int)a.pts.size();
    if ((int)b.pts.size() != k) return false;
    int interior = half ? k - 1 : k;
    for (int i = 0; i < interior; ++i) {
        const auto& pa = P.pts[a.pts[i]];
        const auto& pb = P.pts[b.pts[i]];
        if (pa.edge != pb.edge) return false;
        int wpa = a.dir == +1 ? pa.side_prev : pa.side_next;
        int wna = a.dir == +1 ? pa.side_next : pa.side_prev;
        int wpb = b.dir == +1 ? pb.side_prev : pb.side_next;
        int wnb = b.dir == +1 ? pb.side_next : pb.side_prev;
        if (wpa != wpb || wna != wnb) return false;
    }
    if (half) {
        const auto& pa = P.pts[a.pts[k - 1]];
        const auto& pb = P.pts[b.pts[k - 1]];
        if (pa.edge != pb.edge) return false;
        if (!P.S->boundary_edge[pa.edge]) return false;
        int wpa = a.dir == +1 ? pa.side_prev : pa.side_next;
        int wpb = b.dir == +1 ? pb.side_prev : pb.side_next;
        if (wpa != wpb) return false;
        int da = P.edge_index_of(a.pts[k - 1]);
        int db = P.edge_index_of(b.pts[k - 1]);
        if (da - db != 1 && db - da != 1) return false;
    }
    return true;
}

// a planned removal: the moving subpath is deleted and replaced by one hug
// point per fixed subpath point, inserted just above (ins_after) or below it
// in the edge order; new_tris lists the new chords' triangles in walk order
struct plan_t {
    bool half = false;
    int x = -1, y = -1;
    sub_t mov, fix;
    std::vector<char> ins_after;
    std::vector<int> new_tris;
};

void fill_new_tris(const picture& P, const crossings& X, plan_t& out) {
    out.new_tris.clear();
    int tx = X.xs[out.x].tri;
    if (!out.half && out.fix.pts.empty()) {
        check(X.xs[out.y].tri == tx, "adjacent crossings in different triangles");
        out.new_tris.push_back(tx);
        return;
    }
    out.new_tris.push_back(tx);
    const auto& fg = out.fix.gaps;
    int last = (int)fg.size() - (out.half ? 0 : 1);
    for (int i = 1; i < last; ++i) out.new_tris.push_back(P.strands[out.fix.s].tri[fg[i]]);
    if (!out.half) out.new_tris.push_back(X.xs[out.y].tri);
}

void build_plan_parallel(const picture& P, const crossings& X, int x, int y, bool half,
                         const sub_t& mov, const sub_t& fix, plan_t& out) {
    out = {};
    out.half = half;
    out.x = x;
    out.y = y;
    out.mov = mov;
    out.fix = fix;
    int m = (int)fix.pts.size();
    out.ins_after.resize(m);
    for (int i = 0; i < m; ++i)
        out.ins_after[i] =
            P.edge_index_of(mov.pts[i]) < P.edge_index_of(fix.pts[i]) ? 1 : 0;
    fill_new_tris(P, X, out);
}

bool tier_a_try(const picture& P, const crossings& X, int x, bool pinned, plan_t& out) {
    const auto& r = X.xs[x];
    static const int dirs[4][2] = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
    for (const auto& d : dirs) {
        step_t a = next_crossing(P, X, r.s0, r.g0, x, d[0]);
        step_t b = next_crossing(P, X, r.s1, r.g1, x, d[1]);
        if (a.crossing >= 0 && a.crossing == b.crossing && a.crossing != x) {
            sub_t s0 = walk_sub(P, r.s0, r.g0, d[0], a.gap, a.wrapped);
            sub_t s1 = walk_sub(P, r.s1, r.g1, d[1], b.gap, b.wrapped);
            check(!s0.pts.empty() || !s1.pts.empty(), "chord pair crossing twice");
            if (!parallel_subs(P, s0, s1, false)) continue;
            build_plan_parallel(P, X, x, a.crossing, false, s0, s1, out);
            return true;
        }
        if (!pinned && a.endpoint >= 0 && b.endpoint >= 0) {
            sub_t s0 = walk_sub_to_end(P, r.s0, r.g0, d[0]);
            sub_t s1 = walk_sub_to_end(P, r.s1, r.g1, d[1]);
            if (!parallel_subs(P, s0, s1, true)) continue;
            build_plan_parallel(P, X, x, -1, true, s0, s1, out);
            return true;
        }
    }
    return false;
}

// carries out one removal; seeds receives crossing ids whose neighborhood
// changed (candidates for the next strip scan)
void apply_plan(picture& P, crossings& X, const plan_t& pl, std::vector<int>& seeds) {
    const int x = pl.x, y = pl.y;
    const int ms = pl.mov.s, fs = pl.fix.s;
    const int mdir = pl.mov.dir, fdir = pl.fix.dir;
    int mg = pl.mov.gaps.front(), mg_end = pl.mov.gaps.back();
    const int fg = pl.fix.gaps.front(), fg_end = pl.fix.gaps.back();
    auto& mst = P.strands[ms];
    const int m = (int)pl.fix.pts.size();
    const int k = (int)pl.mov.pts.size();
    const bool full_wrap = mst.closed && k == (int)mst.p.size();
    const int sysm = mst.sys;
    check((int)pl.new_tris.size() == (pl.half ? m : m + 1), "planned chord block length");

    auto seed_list = [&](int s, int g) {
        for (int id : X.on_gap[s][g])
            if (id != x && id != y) seeds.push_back(id);
    };
    auto seed_scan = [&](int s, int g, int dir) {
        int n = P.n_gaps(s);
        if (P.strands[s].closed) {
            for (int t = 1; t < n; ++t) {
                int gg = ((g + dir * t) % n + n) % n;
                if (!X.on_gap[s][gg].empty()) {
                    seed_list(s, gg);
                    return;
                }
            }
        } else {
            for (int gg = g + dir; gg >= 0 && gg < n; gg += dir)
                if (!X.on_gap[s][gg].empty()) {
                    seed_list(s, gg);
                    return;
                }
        }
    };
    seed_list(ms, mg);
    seed_scan(ms, mg, -mdir);
    seed_list(fs, fg);
    seed_scan(fs, fg, -fdir);
    if (!pl.half) {
        seed_list(ms, mg_end);
        seed_scan(ms, mg_end, mdir);
        seed_list(fs, fg_end);
        seed_scan(fs, fg_end, fdir);
    }

    // the strip side of each end chord must be bare before the crossings leave
    auto expect_end = [&](int s, int g, int id, bool at_back) {
        const auto& lst = X.on_gap[s][g];
        check(!lst.empty() && (at_back ? lst.back() : lst.front()) == id,
              "crossing not extremal on its chord");
    };
    if (pl.half || mg != mg_end) {
        expect_end(ms, mg, x, mdir == +1);
        if (!pl.half) expect_end(ms, mg_end, y, mdir == -1);
    } else if (full_wrap) {
        expect_end(ms, mg, x, mdir == +1);
        expect_end(ms, mg, y, mdir == -1);
    } else {
        const auto& lst = X.on_gap[ms][mg];
        check(list_pos(lst, y) - list_pos(lst, x) == mdir,
              "strip crossings not adjacent on their chord");
    }
    const bool fixed_wrap = !pl.half && fg == fg_end && m > 0;
    if (pl.half || fg != fg_end) {
        expect_end(fs, fg, x, fdir == +1);
        if (!pl.half) expect_end(fs, fg_end, y, fdir == -1);
    } else if (fixed_wrap) {
        expect_end(fs, fg, x, fdir == +1);
        expect_end(fs, fg, y, fdir == -1);
    } else {
        const auto& lst = X.on_gap[fs][fg];
        check(list_pos(lst, y) - list_pos(lst, x) == fdir,
              "strip crossings not adjacent on their chord");
    }

    // survivors of a single moving chord split across the two new end chords
    std::vector<int> split_lo, split_hi;
    if (!pl.half && mg == mg_end && !full_wrap) {
        const auto& lst = X.on_gap[ms][mg];
        int px = list_pos(lst, x), py = list_pos(lst, y);
        int plo = std::min(px, py), phi = std::max(px, py);
        split_lo.assign(lst.begin(), lst.begin() + plo);
        split_hi.assign(lst.begin() + phi + 1, lst.end());
    }

    auto erase_id = [&](int s, int g, int id) {
        auto& lst = X.on_gap[s][g];
        auto it = std::find(lst.begin(), lst.end(), id);
        check(it != lst.end(), "crossing missing from its chord list");
        lst.erase(it);
    };
    erase_id(ms, mg, x);
    erase_id(fs, fg, x);
    X.xs[x].alive = false;
    --X.alive_count;
    if (!pl.half) {
        erase_id(ms, mg_end, y);
        erase_id(fs, fg_end, y);
        X.xs[y].alive = false;
        --X.alive_count;
    }

    if (full_wrap) {
        // the whole strand reroutes: it becomes a closed hug of the fixed
        // subpath, closed up through the old chord's triangle
        check(!pl.half, "open strand cannot wrap");
        check(m > 0, "closed strand strip with nothing to hug");
        std::vector<int> mids = X.on_gap[ms][mg];
        for (int g2 = 0; g2 < P.n_gaps(ms); ++g2)
            if (g2 != mg)
                check(X.on_gap[ms][g2].empty(), "stray crossings on a fully rerouted strand");
        if (mdir == -1) std::reverse(mids.begin(), mids.end());
        for (int pt : pl.mov.pts) detail::delete_point(P, pt);
        std::vector<int> np(m);
        for (int i = 0; i < m; ++i) {
            int q = pl.fix.pts[i];
            const auto qp = P.pts[q];
            int at = P.edge_index_of(q) + (pl.ins_after[i] ? 1 : 0);
            int id = detail::insert_point(P, qp.edge, at, sysm);
            P.pts[id].side_prev = fdir == +1 ? qp.side_prev : qp.side_next;
            P.pts[id].side_next = fdir == +1 ? qp.side_next : qp.side_prev;
            P.pts[id].strand = ms;
            P.pts[id].pos = i;
            np[i] = id;
        }
        mst.p = np;
        mst.tri.assign(pl.new_tris.begin() + 1, pl.new_tris.end());
        X.on_gap[ms].assign(m, {});
        X.on_gap[ms][m - 1] = mids;
        for (int id : mids) {
            auto& r2 = X.xs[id];
            if (r2.s0 == ms)
                r2.g0 = m - 1;
            else {
                check(r2.s1 == ms, "survivor left its strand");
                r2.g1 = m - 1;
            }
        }
        return;
    }

    // closed strands rotate so the span sits in [1, k] with the anchor at 0
    if (mst.closed) {
        int anchor = (mdir == +1) ? P.gap_from(ms, mg) : P.gap_from(ms, mg_end);
        int rot = P.pts[anchor].pos;
        if (rot != 0) {
            detail::rotate_strand(P, ms, rot);
            int n = P.n_gaps(ms);
            std::vector<std::vector<int>> ng(n);
            for (int g2 = 0; g2 < n; ++g2)
                ng[((g2 - rot) % n + n) % n] = std::move(X.on_gap[ms][g2]);
            X.on_gap[ms] = std::move(ng);
            for (auto& r2 : X.xs) {
                if (!r2.alive) continue;
                if (r2.s0 == ms) r2.g0 = ((r2.g0 - rot) % n + n) % n;
                if (r2.s1 == ms) r2.g1 = ((r2.g1 - rot) % n + n) % n;
            }
            mg = ((mg - rot) % n + n) % n;
            mg_end = ((mg_end - rot) % n + n) % n;
        }
    }

    const int n_old = (int)mst.p.size();
    int wlo, whi, lo, hi;
    if (pl.half) {
        if (mdir == +1) {
            wlo = mg;
            whi = n_old - 2;
            lo = mg + 1;
            hi = n_old - 1;
        } else {
            wlo = 0;
            whi = mg;
            lo = 0;
            hi = mg;
        }
    } else if (mst.closed) {
        check((mdir == +1 ? mg : mg_end) == 0, "rotation misplaced the strip");
        wlo = 0;
        whi = k;
        lo = 1;
        hi = k;
    } else {
        wlo = mdir == +1 ? mg : mg_end;
        whi = mdir == +1 ? mg_end : mg;
        check(whi == wlo + k, "strip span mismatch");
        lo = wlo + 1;
        hi = wlo + k;
    }
    if (k > 0) {
        int first = pl.mov.pts.front();
        check(P.pts[first].pos == (mdir == +1 ? lo : hi), "strip points out of place");
    }

    // interior chords of the strip carry no crossings
    {
        int from = wlo + (pl.half && mdir == -1 ? 0 : 1);
        int to = whi - (pl.half && mdir == +1 ? 0 : 1);
        for (int g2 = from; g2 <= to; ++g2)
            check(X.on_gap[ms][g2].empty(), "crossings inside a strip");
    }

    for (int pt : pl.mov.pts) detail::delete_point(P, pt);

    std::vector<int> repl(m);
    for (int i = 0; i < m; ++i) {
        int q = pl.fix.pts[i];
        const auto qp = P.pts[q];
        int wp = fdir == +1 ? qp.side_prev : qp.side_next;
        int wn = fdir == +1 ? qp.side_next : qp.side_prev;
        int at = P.edge_index_of(q) + (pl.ins_after[i] ? 1 : 0);
        int id = detail::insert_point(P, qp.edge, at, sysm);
        P.pts[id].side_prev = mdir == +1 ? wp : wn;
        P.pts[id].side_next = mdir == +1 ? wn : wp;
        repl[i] = id;
    }
    std::vector<int> tris = pl.new_tris;
    if (mdir == -1) {
        std::reverse(repl.begin(), repl.end());
        std::reverse(tris.begin(), tris.end());
    }
    detail::splice_strand(P, ms, lo, hi, repl, tris);

    // remap the strand's chord registry around the replaced window
    const int nnew = pl.half ? m : m + 1;
    const int delta = wlo + nnew - 1 - whi;
    const int x_old_chord = mdir == +1 ? wlo : whi;
    const int y_old_chord = mdir == +1 ? whi : wlo;
    const int x_new_chord = mdir == +1 ? wlo : wlo + nnew - 1;
    const int y_new_chord = mdir == +1 ? wlo + nnew - 1 : wlo;
    std::vector<std::vector<int>> old = std::move(X.on_gap[ms]);
    std::vector<std::vector<int>> fresh(P.n_gaps(ms));
    auto put = [&](int ng2, const std::vector<int>& ids) {
        for (int id : ids) {
            auto& r2 = X.xs[id];
            if (r2.s0 == ms)
                r2.g0 = ng2;
            else {
                check(r2.s1 == ms, "survivor left its strand");
                r2.g1 = ng2;
            }
            fresh[ng2].push_back(id);
        }
    };
    for (int og = 0; og < (int)old.size(); ++og) {
        if (old[og].empty()) continue;
        if (og < wlo)
            put(og, old[og]);
        else if (og > whi)
            put(og + delta, old[og]);
        else if (!pl.half && wlo == whi) {
            put(wlo, split_lo);
            put(wlo + nnew - 1, split_hi);
        } else if (og == x_old_chord)
            put(x_new_chord, old[og]);
        else if (!pl.half && og == y_old_chord)
            put(y_new_chord, old[og]);
        else
            check(false, "crossings on a removed chord");
    }
    X.on_gap[ms] = std::move(fresh);
}

void tier_a_pass(picture& P, crossings& X, bool pinned, minimize_stats& st) {
    std::deque<int> work;
    for (int i = 0; i < (int)X.xs.size(); ++i)
        if (X.xs[i].alive) work.push_back(i);
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        if (!X.xs[x].alive) continue;
        plan_t pl;
        if (!tier_a_try(P, X, x, pinned, pl)) continue;
        std::vector<int> seeds;
        apply_plan(P, X, pl, seeds);
        (pl.half ? st.removed_half_bigons : st.removed_bigons)++;
        for (int id : seeds)
            if (X.xs[id].alive) work.push_back(id);
    }
}

// ----------------------------------------------------------------------------
// Face-guided removals.

struct face_run {
    int s = -1;
    std::vector<int> gaps;
};

bool push_run_item(const walk_item& it, face_run& run) {
    if (it.kind != walk_item::strand_side) return false;
    if (run.s < 0)
        run.s = it.strand;
    else
        check(run.s == it.strand, "run switches strand without a mark");
    check(run.gaps.empty() || run.gaps.back() != it.gap, "run repeats a chord");
    run.gaps.push_back(it.gap);
    return true;
}

// orient a rim run away from crossing x; the far end is crossing y or, for
// half strips, the recorded endpoint
sub_t orient_sub(const picture& P, const crossings& X, int x, const face_run& run, int y,
                 int endpoint) {
    sub_t s;
    s.s = run.s;
    s.gaps = run.gaps;
    check(!s.gaps.empty(), "empty rim run");
    int gx = chord_gap_on(X.xs[x], run.s);
    check(s.gaps.front() == gx, "rim run does not start at its crossing");
    int n = P.n_gaps(run.s);
    bool closed = P.strands[run.s].closed;
    if ((int)s.gaps.size() >= 2) {
        int a = s.gaps[0], b = s.gaps[1];
        if (b == a + 1 || (closed && b == (a + 1) % n))
            s.dir = +1;
        else if (b == a - 1 || (closed && b == (a - 1 + n) % n))
            s.dir = -1;
        else
            check(false, "rim run gaps are not consecutive");
    } else if (y >= 0) {
        const auto& lst = X.on_gap[run.s][gx];
        s.dir = list_pos(lst, y) > list_pos(lst, x) ? +1 : -1;
    } else if (endpoint == P.strands[run.s].p.back()) {
        s.dir = +1;
    } else {
        check(endpoint == P.strands[run.s].p.front(), "rim run misses its endpoint");
        s.dir = -1;
    }
    int upto = (int)s.gaps.size() - (y >= 0 ? 1 : 0);
    for (int i = 0; i < upto; ++i)
        s.pts.push_back(s.dir == +1 ? P.gap_to(run.s, s.gaps[i]) : P.gap_from(run.s, s.gaps[i]));
    if (y >= 0)
        check(s.gaps.back() == chord_gap_on(X.xs[y], run.s), "rim run does not end at its crossing");
    else
        check(s.pts.back() == endpoint, "rim run does not end at its endpoint");
    return s;
}

void fill_ins_after_region(const picture& P, const face_structure& F, int ri, plan_t& out) {
    out.ins_after.clear();
    for (int q : out.fix.pts) {
        int e = P.pts[q].edge;
        int idx = P.edge_index_of(q);
        bool below = F.interval_region[e][idx] == ri;
        if (!below)
            check(F.interval_region[e][idx + 1] == ri, "region not adjacent to its rim point");
        out.ins_after.push_back(below ? 1 : 0);
    }
}

bool find_face_plan(const picture& P, const crossings& X, const face_structure& F, bool pinned,
                    plan_t& out) {
    for (int ri = 0; ri < (int)F.regions.size(); ++ri) {
        const auto& R = F.regions[ri];
        if (R.chi != 1 || R.walks.size() != 1) continue;
        const auto& w = R.walks[0];
        int W = (int)w.size();

        if (R.crossing_corners == 2 && !R.touches_boundary) {
            int i1 = -1, i2 = -1;
            for (int i = 0; i < W; ++i)
                if (w[i].kind == walk_item::crossing_mark) (i1 < 0 ? i1 : i2) = i;
            check(i2 >= 0, "mark count mismatch");
            int x = w[i1].crossing, y = w[i2].crossing;
            if (x == y) continue;  // disk pinched at a single crossing
            face_run A, B;
            bool ok = true;
            for (int i = i1 + 1; i < i2; ++i) ok = ok && push_run_item(w[i], A);
            for (int i = (i1 - 1 + W) % W; i != i2; i = (i - 1 + W) % W)
                ok = ok && push_run_item(w[i], B);
            check(ok && A.s >= 0 && B.s >= 0, "strip region rim is not two plain runs");
            check(P.strands[A.s].sys != P.strands[B.s].sys,
                  "strip region between strands of one system");
            sub_t sa = orient_sub(P, X, x, A, y, -1);
            sub_t sb = orient_sub(P, X, x, B, y, -1);
            bool mova = sa.pts.size() != sb.pts.size()
                            ? sa.pts.size() < sb.pts.size()
                            : P.strands[sa.s].sys < P.strands[sb.s].sys;
            out = {};
            out.half = false;
            out.x = x;
            out.y = y;
            out.mov = mova ? sa : sb;
            out.fix = mova ? sb : sa;
            fill_ins_after_region(P, F, ri, out);
            fill_new_tris(P, X, out);
            return true;
        }

        if (R.crossing_corners == 1 && R.touches_boundary && !pinned) {
            int i0 = -1;
            for (int i = 0; i < W && i0 < 0; ++i)
                if (w[i].kind == walk_item::crossing_mark) i0 = i;
            check(i0 >= 0, "mark count mismatch");
            int x = w[i0].crossing;
            face_run A, B;
            int ja = (i0 + 1) % W;
            while (w[ja].kind == walk_item::strand_side) {
                check(push_run_item(w[ja], A), "half strip rim is not a plain run");
                ja = (ja + 1) % W;
                check(ja != i0, "rim never reaches the boundary");
            }
            if (w[ja].kind != walk_item::endpoint_mark) continue;
            int pa = w[ja].point;
            int jb = (i0 - 1 + W) % W;
            while (w[jb].kind == walk_item::strand_side) {
                check(push_run_item(w[jb], B), "half strip rim is not a plain run");
                jb = (jb - 1 + W) % W;
                check(jb != i0, "rim never reaches the boundary");
            }
            if (w[jb].kind != walk_item::endpoint_mark) continue;
            int pb = w[jb].point;
            check(A.s >= 0 && B.s >= 0, "half strip rim is missing a run");
            int sys_a = P.strands[A.s].sys, sys_b = P.strands[B.s].sys;
            check(sys_a != sys_b, "half strip between strands of one system");
            bool germ_a = false, germ_b = false;
            for (int i = (ja + 1) % W; i != jb; i = (i + 1) % W)
                if (w[i].kind == walk_item::endpoint_mark) {
                    int sp = P.pts[w[i].point].sys;
                    germ_a = germ_a || sp == sys_a;
                    germ_b = germ_b || sp == sys_b;
                }
            bool can_a = !germ_a, can_b = !germ_b;
            if (!can_a && !can_b) continue;  // either slide would reorder a system's endpoints
            sub_t sa = orient_sub(P, X, x, A, -1, pa);
            sub_t sb = orient_sub(P, X, x, B, -1, pb);
            bool mova;
            if (can_a != can_b)
                mova = can_a;
            else if (sa.pts.size() != sb.pts.size())
                mova = sa.pts.size() < sb.pts.size();
            else
                mova = sys_a < sys_b;
            out = {};
            out.half = true;
            out.x = x;
            out.y = -1;
            out.mov = mova ? sa : sb;
            out.fix = mova ? sb : sa;
            fill_ins_after_region(P, F, ri, out);
            fill_new_tris(P, X, out);
            return true;
        }
    }
    return false;
}

}  // namespace

// ----------------------------------------------------------------------------
// Crossings.

crossings compute_crossings(const picture& P) {
    const surface& S = *P.S;
    crossings X;
    X.on_gap.resize(P.strands.size());
    for (int s = 0; s < (int)P.strands.size(); ++s)
        X.on_gap[s].assign(P.strands[s].alive ? P.n_gaps(s) : 0, {});

    std::vector<std::vector<std::array<int, 4>>> by_tri(S.n_tris());
    for (int s = 0; s < (int)P.strands.size(); ++s) {
        if (!P.strands[s].alive) continue;
        for (int g = 0; g < P.n_gaps(s); ++g) {
            int t = P.strands[s].tri[g];
            int a = P.gap_from(s, g), b = P.gap_to(s, g);
            int ka = detail::endpoint_key(P, a, t, P.side_in_gap(a, s, g));
            int kb = detail::endpoint_key(P, b, t, P.side_in_gap(b, s, g));
            by_tri[t].push_back({s, g, ka, kb});
        }
    }
    for (int t = 0; t < S.n_tris(); ++t) {
        const auto& v = by_tri[t];
        if (v.size() < 2) continue;
        int circ = detail::boundary_circumference(P, t);
        for (int i = 0; i < (int)v.size(); ++i)
            for (int j = i + 1; j < (int)v.size(); ++j) {
                int si = v[i][0], sj = v[j][0];
                if (P.strands[si].sys == P.strands[sj].sys) continue;
                if (!detail::chords_interleave(v[i][2], v[i][3], v[j][2], v[j][3], circ))
                    continue;
                crossings::rec r;
                r.tri = t;
                r.alive = true;
                if (P.strands[si].sys < P.strands[sj].sys) {
                    r.s0 = si;
                    r.g0 = v[i][1];
                    r.s1 = sj;
                    r.g1 = v[j][1];
                } else {
                    r.s0 = sj;
                    r.g0 = v[j][1];
                    r.s1 = si;
                    r.g1 = v[i][1];
                }
                int id = (int)X.xs.size();
                X.xs.push_back(r);
                X.on_gap[r.s0][r.g0].push_back(id);
                X.on_gap[r.s1][r.g1].push_back(id);
            }
    }
    for (int s = 0; s < (int)P.strands.size(); ++s)
        for (int g = 0; g < (int)X.on_gap[s].size(); ++g) {
            auto& lst = X.on_gap[s][g];
            if (lst.size() < 2) continue;
            std::vector<std::pair<long long, int>> tmp;
            tmp.reserve(lst.size());
            for (int id : lst) tmp.push_back({cross_param(P, X, id, s, g), id});
            std::sort(tmp.begin(), tmp.end());
            for (int i = 0; i < (int)lst.size(); ++i) lst[i] = tmp[i].second;
        }
    X.alive_count = (long long)X.xs.size();
    return X;
}

// ----------------------------------------------------------------------------
// Driver.

minimize_stats minimize_position(picture& P, crossings& X, bool pinned) {
    minimize_stats st;
    // With no open strands the strip scan is already complete: an innermost
    // bigon face has its two crossings adjacent along both strands (anything
    // strictly between would pierce the empty disk), which is exactly a
    // parallel strip, and half bigons need endpoints.  Face passes then only
    // serve pictures containing arcs.
    bool has_open = false;
    for (const auto& s : P.strands) has_open = has_open || (s.alive && !s.closed);
    for (;;) {
        tier_a_pass(P, X, pinned, st);
        if (X.alive_count == 0 || !has_open) break;
        face_structure F = compute_regions(P, &X);
        ++st.face_passes;
        plan_t pl;
        if (!find_face_plan(P, X, F, pinned, pl)) break;
        std::vector<int> seeds;
        apply_plan(P, X, pl, seeds);
        (pl.half ? st.removed_half_bigons : st.removed_bigons)++;
    }
    return st;
}

long long intersection_number_raw(const surface& S, const weights& a, const weights& b,
                                  bool pinned) {
    picture P = overlay(S, a, b);
    crossings X = compute_crossings(P);
    minimize_position(P, X, pinned);
    return X.alive_count;
}

}  // namespace mcg
