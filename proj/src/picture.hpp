// Pictures: explicit arrangements of one or two systems on a triangulated
// surface.
//
// A picture stores every transverse intersection point of the systems with the
// triangulation edges (in order along each edge) and every strand as the
// sequence of its points, with the triangle each chord runs through.  Chords
// of the same system never cross; chords of different systems may.  All
// positional reasoning is combinatorial: a point's location is its index in
// the edge order, and crossings and face structure are derived from cyclic
// interleaving around triangle boundaries, never from numeric coordinates.
//
// The main operations:
//   * trace        weights -> the unique normal picture with those weights
//   * overlay      two systems traced onto shared edge orders
//   * minimize_position   remove bigons and half bigons until the two systems
//                         are in minimal position (intersection numbers)
//   * compute_regions     complement components with Euler characteristics
//                         and tagged boundary walks
//   * single-system moves: return removal, inessential-component stripping,
//     vertex pushes and endpoint slides (the isotopy moves used to search for
//     canonical forms)

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "curvesys.hpp"
#include "surface.hpp"

namespace mcg {

struct picture {
    const surface* S = nullptr;

    struct point {
        int edge = -1;
        int sys = -1;
        int strand = -1;
        int pos = -1;       // index in the strand's point list
        int side_prev = -1;  // side of this point's edge in the incoming chord's triangle
        int side_next = -1;  // same for the outgoing chord
        bool alive = false;
    };

    struct strand_t {
        int sys = 0;
        bool closed = false;
        bool alive = true;
        std::vector<int> p;    // point ids in traversal order
        std::vector<int> tri;  // tri[k] carries chord (p[k], p[k+1]); closed strands wrap
    };

    std::vector<point> pts;
    std::vector<strand_t> strands;
    std::vector<std::vector<int>> edge_pts;  // per edge, point ids in order along the edge
    int n_systems = 0;

    int n_gaps(int s) const {
        const auto& st = strands[s];
        return st.closed ? (int)st.p.size() : (int)st.p.size() - 1;
    }
    int gap_from(int s, int g) const { return strands[s].p[g]; }
    int gap_to(int s, int g) const {
        const auto& st = strands[s];
        return st.p[(g + 1) % st.p.size()];
    }
    // side index of the given chord endpoint's edge within the chord's triangle
    int side_in_gap(int pt, int s, int g) const {
        return pt == gap_from(s, g) ? pts[pt].side_next : pts[pt].side_prev;
    }
    int edge_index_of(int pt) const;  // position of a live point in its edge order

    int alive_points() const;
    void validate() const;  // structural invariants; throws internal on breakage
};

picture trace(const surface& S, const weights& w);

// both systems traced onto shared edges; per edge the two point sets are
// interleaved proportionally (system 0 first on ties), which keeps parallel
// systems crossing-free and starts slope-like pairs near minimal position
picture overlay(const surface& S, const weights& a, const weights& b);

weights extract_weights(const picture& P, int sys);
int live_strand_count(const picture& P, int sys);

// ----------------------------------------------------------------------------
// Crossings between the two systems of an overlay.

struct crossings {
    struct rec {
        int tri = -1;
        int s0 = -1, g0 = -1;  // chord of the lower-system strand
        int s1 = -1, g1 = -1;
        bool alive = false;
    };
    std::vector<rec> xs;
    // per strand and gap, crossing ids ordered along the chord's direction
    std::vector<std::vector<std::vector<int>>> on_gap;
    long long alive_count = 0;

    const std::vector<int>& gap_list(int s, int g) const { return on_gap[s][g]; }
};

crossings compute_crossings(const picture& P);

// ----------------------------------------------------------------------------
// Complement regions.

struct walk_item {
    enum kind_t { strand_side, surface_boundary, endpoint_mark, crossing_mark };
    kind_t kind;
    // strand_side: one side of one chord segment
    int sys = -1, strand = -1, gap = -1;
    bool left = false;  // region lies to the left of the chord's direction
    // surface_boundary: one interval of a boundary edge
    int edge = -1, interval = -1;
    // crossing_mark / endpoint_mark
    int crossing = -1;
    int point = -1;
};

struct region_t {
    int chi = 0;
    std::vector<std::vector<walk_item>> walks;
    // per walk, the interior edges its corner pivots hop across, in traversal
    // order; a closed curve running parallel to the walk just inside the
    // region crosses exactly these edges
    std::vector<std::vector<int>> walk_hops;
    std::vector<int> cells;
    bool touches_boundary = false;
    int crossing_corners = 0;  // total crossing marks over all walks
};

struct face_structure {
    std::vector<region_t> regions;
    std::vector<int> cell_region;  // cell id -> region index
    // region on each side of a live point along its edge: the region adjacent
    // to the edge interval just below (toward index 0) and just above it
    int region_below(const picture& P, int pt) const;
    int region_above(const picture& P, int pt) const;

    // internal lookup filled during construction: per edge, per interval
    // (0..count), the region adjacent to that piece of the edge; interior
    // edges have one well-defined region per interval, boundary edges too
    std::vector<std::vector<int>> interval_region;
};

// X may be null when the picture has at most one system or crossings are
// known to be absent
face_structure compute_regions(const picture& P, const crossings* X);

// ----------------------------------------------------------------------------
// Minimal position.

struct minimize_stats {
    long long removed_bigons = 0;
    long long removed_half_bigons = 0;
    int face_passes = 0;
};

// removes bigons (and, unless pinned, half bigons at the surface boundary)
// until none remain; afterwards X.alive_count is the geometric intersection
// number of the two systems (rel boundary when pinned)
minimize_stats minimize_position(picture& P, crossings& X, bool pinned = false);

long long intersection_number_raw(const surface& S, const weights& a, const weights& b,
                                  bool pinned = false);

// ----------------------------------------------------------------------------
// Single-system operations.

// removes U-turn chords innermost-first; returns the number of closed
// components that collapsed to nothing (each was null-homotopic)
int remove_returns(picture& P);

struct strip_result {
    weights kept;
    int null_curves = 0;
    int peripheral_curves = 0;
    int trivial_arcs = 0;
    bool changed() const { return null_curves + peripheral_curves + trivial_arcs > 0; }
};

// drops every inessential component (tested in isolation) and returns the
// weights of what remains
strip_result strip_inessential(const surface& S, const weights& w);

// all weight vectors reachable by one vertex push or one endpoint slide,
// each normalized by return removal; deterministic order, deduplicated
std::vector<weights> isotopy_neighbors(const surface& S, const weights& w);

// per-component weights of a traced system, in deterministic strand order
std::vector<weights> split_components(const surface& S, const weights& w);

}  // namespace mcg
