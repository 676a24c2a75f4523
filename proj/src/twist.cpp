// Twists by annulus surgery.
//
// To twist a system b about a curve a, both are overlaid in minimal position
// and every strand of b is rerouted where it crosses a: instead of cutting
// straight across the annulus around a, it spirals |power| times around,
// hugging the points of a.  All spirals are parallel copies of one another,
// so their relative radial order in the annulus is forced: a copy's depth is
// how far along the spiral it has travelled, measured from the side of a
// where the strand entered.  Tracking that depth exactly (an integer number
// of points of a plus an exact fractional position within one chord gap)
// fixes the order of the new points on every edge, and the rest of the
// twisted picture copies the sides and triangles of a's own chords.  The
// result is validated, cleaned of returns, and canonicalized.

#include <algorithm>
#include <tuple>

#include "kernel.hpp"
#include "picture_detail.hpp"

namespace mcg {

namespace {

struct cross_info {
    int gap = -1;           // chord gap of the twisting curve carrying the crossing
    int rank = 0, of = 1;   // position along that chord, rank of `of` crossings
    bool entry_left = false;  // the crossed strand arrives from a's left side
    bool forward = false;     // its spiral follows a's own direction
};

// radial depth of one spiral copy: whole points of a travelled plus an exact
// fraction inside the starting gap; smaller keys sit closer to a's left side
struct slot_t {
    int depth;
    int num, den;
    int xid, sigma;
};

bool slot_less(const slot_t& a, const slot_t& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    long long l = (long long)a.num * b.den, r = (long long)b.num * a.den;
    if (l != r) return l < r;
    if (a.xid != b.xid) return a.xid < b.xid;  // distinct crossings never tie
    return a.sigma < b.sigma;
}

weights twist_surgery(const surface& S, const weights& ac, int n, const weights& bc,
                      const canonical_options& opt) {
    picture P = overlay(S, bc, ac);
    crossings X = compute_crossings(P);
    minimize_position(P, X);
    if (X.alive_count == 0) return bc;

    int sa = -1;
    for (int s = 0; s < (int)P.strands.size(); ++s) {
        if (!P.strands[s].alive || P.strands[s].sys != 1) continue;
        check(sa < 0, "twisting curve traced to more than one strand");
        sa = s;
    }
    check(sa >= 0 && P.strands[sa].closed, "twisting curve lost its closed strand");
    const auto& A = P.strands[sa].p;
    const auto& tri_a = P.strands[sa].tri;
    const int m = (int)A.size();
    const int N = n > 0 ? n : -n;
    require((long long)N * m * X.alive_count <= 4'000'000, errkind::cap_exceeded,
            "twisted picture would exceed the size budget");
    const int L = N * m;

    // position of every live crossing along the twisting curve
    std::vector<cross_info> info(X.xs.size());
    std::vector<int> live;
    for (int g = 0; g < m; ++g) {
        std::vector<int> here;
        for (int x : X.gap_list(sa, g))
            if (X.xs[x].alive) here.push_back(x);
        for (int r = 0; r < (int)here.size(); ++r) {
            cross_info& ci = info[here[r]];
            ci.gap = g;
            ci.rank = r;
            ci.of = (int)here.size();
            live.push_back(here[r]);
        }
    }

    // entry sides: left of the directed chord from -> to is the key interval
    // walked counterclockwise from its head back to its tail.  A strand
    // entering from the left spirals along a's direction under a positive
    // twist and against it under a negative one
    for (int x : live) {
        const auto& rec = X.xs[x];
        check(rec.s1 == sa, "crossing not anchored on the twisting curve");
        int pa0 = P.gap_from(sa, rec.g1), pa1 = P.gap_to(sa, rec.g1);
        int ka0 = detail::endpoint_key(P, pa0, rec.tri, P.side_in_gap(pa0, sa, rec.g1));
        int ka1 = detail::endpoint_key(P, pa1, rec.tri, P.side_in_gap(pa1, sa, rec.g1));
        int pb0 = P.gap_from(rec.s0, rec.g0);
        int kb = detail::endpoint_key(P, pb0, rec.tri, P.side_in_gap(pb0, rec.s0, rec.g0));
        int circ = detail::boundary_circumference(P, rec.tri);
        info[x].entry_left = (kb - ka1 + circ) % circ < (ka0 - ka1 + circ) % circ;
        info[x].forward = info[x].entry_left == (n > 0);
    }

    // spiral copy landing on point index v of a at step sigma, with its radial
    // depth from a's left side: a copy's distance from the entry side grows
    // with sigma whichever way the spiral runs along a
    auto landing = [&](const cross_info& ci, int sigma) {
        int v = ci.forward ? (ci.gap + 1 + sigma) % m : ((ci.gap - sigma) % m + m) % m;
        int depth = ci.entry_left ? sigma : L - 1 - sigma;
        return std::pair<int, int>(v, depth);
    };

    std::vector<std::vector<slot_t>> slots(m);
    for (int x : live) {
        const cross_info& ci = info[x];
        for (int sigma = 0; sigma < L; ++sigma) {
            auto [v, depth] = landing(ci, sigma);
            int num = n > 0 ? ci.of - ci.rank : ci.rank + 1;
            slots[v].push_back({depth, num, ci.of + 1, x, sigma});
        }
    }
    for (auto& sl : slots) std::sort(sl.begin(), sl.end(), slot_less);

    // whether a's left side lies toward higher edge indices at each point: the
    // slot one step counterclockwise past the incoming chord's head is on the
    // left, and counterclockwise along a side is the side's own direction
    std::vector<int> left_dir(m);
    for (int v = 0; v < m; ++v) {
        int t_in = tri_a[(v - 1 + m) % m];
        int s_in = P.pts[A[v]].side_prev;
        left_dir[v] = S.tris[t_in].orient[s_in];
    }

    // assemble the twisted picture: kept points of b in their old order, each
    // point of a replaced by its block of spiral copies
    picture Q;
    Q.S = &S;
    Q.n_systems = 1;
    Q.edge_pts.resize(S.n_edges);
    std::vector<int> new_of_pt(P.pts.size(), -1);
    std::vector<std::vector<int>> new_of_hug(X.xs.size());
    for (int x : live) new_of_hug[x].assign(L, -1);

    for (int e = 0; e < S.n_edges; ++e) {
        // (old index, index within a block, kind, crossing or point, sigma)
        std::vector<std::tuple<int, int, int, int, int>> ds;
        const auto& on_edge = P.edge_pts[e];
        for (int idx = 0; idx < (int)on_edge.size(); ++idx) {
            int pt = on_edge[idx];
            if (!P.pts[pt].alive) continue;
            if (P.pts[pt].sys == 0) {
                ds.push_back({idx, 0, 0, pt, 0});
                continue;
            }
            int v = P.pts[pt].pos;
            const auto& sl = slots[v];
            int K = (int)sl.size();
            for (int j = 0; j < K; ++j) {
                int sub = left_dir[v] > 0 ? K - 1 - j : j;
                ds.push_back({idx, sub, 1, sl[j].xid, sl[j].sigma});
            }
        }
        std::sort(ds.begin(), ds.end());
        for (const auto& [idx, sub, kind, payload, sigma] : ds) {
            picture::point np;
            np.edge = e;
            np.sys = 0;
            np.alive = true;
            if (kind == 0) {
                np.side_prev = P.pts[payload].side_prev;
                np.side_next = P.pts[payload].side_next;
                new_of_pt[payload] = (int)Q.pts.size();
            } else {
                const cross_info& ci = info[payload];
                const auto& ap = P.pts[A[landing(ci, sigma).first]];
                np.side_prev = ci.forward ? ap.side_prev : ap.side_next;
                np.side_next = ci.forward ? ap.side_next : ap.side_prev;
                new_of_hug[payload][sigma] = (int)Q.pts.size();
            }
            Q.edge_pts[e].push_back((int)Q.pts.size());
            Q.pts.push_back(np);
        }
    }

    for (int s = 0; s < (int)P.strands.size(); ++s) {
        const auto& os = P.strands[s];
        if (!os.alive || os.sys != 0) continue;
        picture::strand_t ns;
        ns.sys = 0;
        ns.closed = os.closed;
        int sid = (int)Q.strands.size();
        auto push_pt = [&](int qid) {
            Q.pts[qid].strand = sid;
            Q.pts[qid].pos = (int)ns.p.size();
            ns.p.push_back(qid);
        };
        for (int k = 0; k < (int)os.p.size(); ++k) {
            push_pt(new_of_pt[os.p[k]]);
            if (k >= P.n_gaps(s)) continue;
            int t = os.tri[k];
            std::vector<int> here;
            for (int x : X.gap_list(s, k))
                if (X.xs[x].alive) here.push_back(x);
            if (here.empty()) {
                ns.tri.push_back(t);
                continue;
            }
            for (int x : here) {
                ns.tri.push_back(t);  // connector into this spiral
                const cross_info& ci = info[x];
                for (int sigma = 0; sigma < L; ++sigma) {
                    push_pt(new_of_hug[x][sigma]);
                    if (sigma + 1 == L) continue;
                    ns.tri.push_back(ci.forward ? tri_a[(ci.gap + 1 + sigma) % m]
                                                : tri_a[((ci.gap - sigma - 1) % m + m) % m]);
                }
            }
            ns.tri.push_back(t);  // connector back to b's own route
        }
        Q.strands.push_back(std::move(ns));
    }

    Q.validate();
    remove_returns(Q);
    return canonical_form(S, extract_weights(Q, 0), opt);
}

// canonical twisting curve: one essential closed curve
weights twisting_curve(const surface& S, const weights& about, const canonical_options& opt) {
    weights ac = canonical_form(S, about, opt);
    require(total_weight(ac) > 0, errkind::invalid_input, "twisting curve is inessential");
    for (int e = 0; e < S.n_edges; ++e)
        require(!S.boundary_edge[e] || ac[e] == 0, errkind::invalid_input,
                "twisting class contains an arc");
    picture T = trace(S, ac);
    require(live_strand_count(T, 0) == 1, errkind::invalid_input,
            "twisting class must be a single curve");
    return ac;
}

bool two_holed_disk_side(const surface& S, const weights& ac) {
    picture P = trace(S, ac);
    face_structure F = compute_regions(P, nullptr);
    for (const region_t& R : F.regions) {
        if (R.chi != -1 || !R.touches_boundary || R.walks.size() != 3) continue;
        int pure_boundary = 0, pure_curve = 0;
        for (const auto& walk : R.walks) {
            bool strand = false, bdry = false;
            for (const auto& it : walk) {
                strand = strand || it.kind == walk_item::strand_side;
                bdry = bdry || it.kind == walk_item::surface_boundary;
            }
            pure_boundary += bdry && !strand;
            pure_curve += strand && !bdry;
        }
        if (pure_boundary == 2 && pure_curve == 1) return true;
    }
    return false;
}

}  // namespace

bool half_twist_applicable(const surface& S, const weights& about, const canonical_options& opt) {
    return two_holed_disk_side(S, twisting_curve(S, about, opt));
}

weights apply_mapping_class(const surface& S, const mapping_generator& g, const weights& sys,
                            const canonical_options& opt) {
    weights bc = canonical_form(S, sys, opt);
    weights ac = twisting_curve(S, g.about, opt);
    int n = g.power;
    if (g.kind == mapping_generator::half_twist) {
        require(two_holed_disk_side(S, ac), errkind::inapplicable,
                "half twist needs a curve cutting off a disk with two boundary circles");
        require(n % 2 == 0, errkind::inapplicable,
                "odd half twist powers act on annular marking coordinates only");
        n /= 2;
    }
    if (n == 0 || total_weight(bc) == 0) return bc;
    return twist_surgery(S, ac, n, bc, opt);
}

weights apply_mapping_class(const surface& S, const mapping_word& word, const weights& sys,
                            const canonical_options& opt) {
    weights w = canonical_form(S, sys, opt);
    for (const mapping_generator& g : word) w = apply_mapping_class(S, g, w, opt);
    return w;
}

}  // namespace mcg
