#include "surface.hpp"

#include <algorithm>
#include <numeric>

namespace mcg {

// ----------------------------------------------------------------------------
// Construction and validation.

surface::surface(std::string name_, int genus_, int boundary_,
                 const std::vector<std::array<int, 3>>& signed_tris,
                 const std::vector<int>& boundary_edges_)
    : name(std::move(name_)) {
    require(!signed_tris.empty(), errkind::invalid_input, "surface has no triangles");

    int max_id = 0;
    for (const auto& st : signed_tris)
        for (int s : st) {
            require(s != 0, errkind::invalid_input, "edge ids are signed and 1-based");
            max_id = std::max(max_id, std::abs(s));
        }
    n_edges = max_id;

    tris.reserve(signed_tris.size());
    for (const auto& st : signed_tris) {
        triangle t;
        for (int i = 0; i < 3; i++) {
            t.edge[i] = std::abs(st[i]) - 1;
            t.orient[i] = st[i] > 0 ? 1 : -1;
        }
        tris.push_back(t);
    }

    // collect incidences; interior edges must be traversed once in each
    // direction, which is what makes the triangle orientations consistent
    edge_side.assign(n_edges, {side_ref{}, side_ref{}});
    std::vector<int> uses(n_edges, 0);
    for (int t = 0; t < n_tris(); t++)
        for (int i = 0; i < 3; i++) {
            int e = tris[t].edge[i];
            require(uses[e] < 2, errkind::invalid_input, "edge used more than twice");
            edge_side[e][uses[e]++] = side_ref{t, i};
        }

    boundary_edge.assign(n_edges, 0);
    for (int e : boundary_edges_) {
        require(e >= 0 && e < n_edges, errkind::invalid_input, "boundary edge id out of range");
        boundary_edge[e] = 1;
    }
    for (int e = 0; e < n_edges; e++) {
        require(uses[e] >= 1, errkind::invalid_input, "unused edge id");
        if (boundary_edge[e]) {
            require(uses[e] == 1, errkind::invalid_input, "boundary edge glued to two sides");
        } else {
            require(uses[e] == 2, errkind::invalid_input, "interior edge with only one side");
            int o1 = orient_of(edge_side[e][0]), o2 = orient_of(edge_side[e][1]);
            require(o1 * o2 == -1, errkind::invalid_input,
                    "interior edge traversed twice in the same direction");
        }
    }

    derive_topology(genus_, boundary_);
}

side_ref surface::other_side(int t, int side) const {
    int e = tris[t].edge[side];
    check(!boundary_edge[e], "crossing a boundary side");
    const auto& inc = edge_side[e];
    return (inc[0].tri == t && inc[0].side == side) ? inc[1] : inc[0];
}

int surface::edge_end_vertex(int e, int end) const {
    side_ref s = edge_side[e][0];
    int corner;
    if (orient_of(s) == 1)
        corner = end == 0 ? s.side : (s.side + 1) % 3;
    else
        corner = end == 0 ? (s.side + 1) % 3 : s.side;
    return vertex_at_corner(s.tri, corner);
}

std::vector<surface::edge_end> surface::vertex_fan(int v) const { return fans_[v]; }

// ----------------------------------------------------------------------------
// Derived topology: vertices as corner classes, boundary circles, genus.

namespace {
struct dsu {
    std::vector<int> p;
    explicit dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { while (p[x] != x) x = p[x] = p[p[x]]; return x; }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

void surface::derive_topology(int declared_genus, int declared_boundary) {
    const int nc = 3 * n_tris();

    // gluing side i of t to side j of t2 reverses direction, so the start of
    // side i meets the end of side j and vice versa
    dsu corners(nc);
    for (int e = 0; e < n_edges; e++) {
        if (boundary_edge[e]) continue;
        side_ref a = edge_side[e][0], b = edge_side[e][1];
        corners.unite(3 * a.tri + a.side, 3 * b.tri + (b.side + 1) % 3);
        corners.unite(3 * b.tri + b.side, 3 * a.tri + (a.side + 1) % 3);
    }
    corner_vertex.assign(nc, -1);
    n_vertices = 0;
    for (int c = 0; c < nc; c++)
        if (corners.find(c) == c) corner_vertex[c] = n_vertices++;
    for (int c = 0; c < nc; c++) corner_vertex[c] = corner_vertex[corners.find(c)];

    vertex_on_boundary.assign(n_vertices, 0);
    for (int t = 0; t < n_tris(); t++)
        for (int i = 0; i < 3; i++)
            if (boundary_edge[tris[t].edge[i]]) {
                vertex_on_boundary[vertex_at_corner(t, i)] = 1;
                vertex_on_boundary[vertex_at_corner(t, (i + 1) % 3)] = 1;
            }

    // walk each boundary circle in the side direction (surface on the left);
    // from the end corner of a boundary side, rotate across interior sides
    // until the next boundary side shows up
    boundary_circles.clear();
    edge_boundary_circle.assign(n_edges, -1);
    for (int e0 = 0; e0 < n_edges; e0++) {
        if (!boundary_edge[e0] || edge_boundary_circle[e0] != -1) continue;
        std::vector<int> circle;
        side_ref s = edge_side[e0][0];
        while (true) {
            int e = edge_of(s);
            require(edge_boundary_circle[e] == -1, errkind::invalid_input,
                    "boundary walk revisits an edge; surface is pinched");
            edge_boundary_circle[e] = (int)boundary_circles.size();
            circle.push_back(e);
            int t = s.tri, c = (s.side + 1) % 3;
            int guard = 0;
            while (!boundary_edge[tris[t].edge[c]]) {
                side_ref n = other_side(t, c);
                t = n.tri;
                c = (n.side + 1) % 3;
                require(++guard <= nc, errkind::invalid_input, "boundary walk does not close");
            }
            side_ref next{t, c};
            if (next == edge_side[e0][0]) break;
            s = next;
        }
        boundary_circles.push_back(std::move(circle));
    }
    n_boundary = (int)boundary_circles.size();

    int chi = n_vertices - n_edges + n_tris();
    int twog = 2 - n_boundary - chi;
    require(twog >= 0 && twog % 2 == 0, errkind::invalid_input, "triangulation is not a surface");
    genus = twog / 2;
    require(genus == declared_genus && n_boundary == declared_boundary, errkind::invalid_input,
            "declared genus/boundary do not match the triangulation");
    require(xi() >= 1 || (genus == 1 && n_boundary == 0), errkind::invalid_input,
            "surface too simple: need 3g+b-3 >= 1, or the closed torus");

    // edge-end fans around every vertex, in rotation order; a boundary fan is
    // clamped between its incoming and outgoing boundary sides
    fans_.assign(n_vertices, {});
    auto outgoing_end = [&](int t, int c) {
        int e = tris[t].edge[c];
        return edge_end{e, tris[t].orient[c] == 1 ? 0 : 1};
    };
    std::vector<char> seen(n_vertices, 0);
    for (int t0 = 0; t0 < n_tris(); t0++)
        for (int c0 = 0; c0 < 3; c0++) {
            int v = vertex_at_corner(t0, c0);
            if (seen[v]) continue;
            int t = t0, c = c0;
            if (vertex_on_boundary[v]) {
                // rewind to the corner whose incoming side is on the boundary
                int guard = 0;
                while (!boundary_edge[tris[t].edge[(c + 2) % 3]]) {
                    side_ref p = edge_side[tris[t].edge[(c + 2) % 3]][0];
                    if (p.tri == t && p.side == (c + 2) % 3) p = edge_side[tris[t].edge[(c + 2) % 3]][1];
                    t = p.tri;
                    c = p.side;
                    require(++guard <= nc, errkind::invalid_input, "vertex link does not close");
                }
                int e_in = tris[t].edge[(c + 2) % 3];
                fans_[v].push_back({e_in, tris[t].orient[(c + 2) % 3] == 1 ? 1 : 0});
            }
            int start_t = t, start_c = c, guard = 0;
            while (true) {
                fans_[v].push_back(outgoing_end(t, c));
                if (boundary_edge[tris[t].edge[c]]) break;
                side_ref n = other_side(t, c);
                t = n.tri;
                c = (n.side + 1) % 3;
                if (!vertex_on_boundary[v] && t == start_t && c == start_c) break;
                require(++guard <= nc, errkind::invalid_input, "vertex link does not close");
            }
            seen[v] = 1;
        }
}

// ----------------------------------------------------------------------------
// Standard surfaces from the one-relator polygon.  The polygon word is
//   a_1 b_1 a_1' b_1' ... a_g b_g a_g' b_g'  d_1 r_1 d_1' ... d_b r_b d_b'
// (primes are reversed traversals, each r_j a free boundary side), and the
// polygon is fan-triangulated from its first vertex.

surface make_surface(int g, int b) {
    require(g >= 0 && b >= 0, errkind::invalid_input, "negative genus or boundary count");
    const int N = 4 * g + 3 * b;
    require(N >= 3, errkind::invalid_input, "polygon needs at least three sides");

    std::vector<int> side_edge(N), side_dir(N);
    std::vector<int> boundary_edges;
    int next_edge = 0;
    int pos = 0;
    for (int i = 0; i < g; i++) {
        int a = next_edge++, bb = next_edge++;
        side_edge[pos] = a;      side_dir[pos++] = 1;
        side_edge[pos] = bb;     side_dir[pos++] = 1;
        side_edge[pos] = a;      side_dir[pos++] = -1;
        side_edge[pos] = bb;     side_dir[pos++] = -1;
    }
    for (int j = 0; j < b; j++) {
        int d = next_edge++, r = next_edge++;
        boundary_edges.push_back(r);
        side_edge[pos] = d;      side_dir[pos++] = 1;
        side_edge[pos] = r;      side_dir[pos++] = 1;
        side_edge[pos] = d;      side_dir[pos++] = -1;
    }

    // diagonals from polygon vertex 0 to vertices 2..N-2
    std::vector<int> diag(N, -1);
    for (int k = 2; k <= N - 2; k++) diag[k] = next_edge++;

    auto signed_id = [](int e, int dir) { return dir * (e + 1); };
    std::vector<std::array<int, 3>> st;
    if (N == 3) {
        st.push_back({signed_id(side_edge[0], side_dir[0]), signed_id(side_edge[1], side_dir[1]),
                      signed_id(side_edge[2], side_dir[2])});
    } else {
        st.push_back({signed_id(side_edge[0], side_dir[0]), signed_id(side_edge[1], side_dir[1]),
                      signed_id(diag[2], -1)});
        for (int k = 2; k <= N - 3; k++)
            st.push_back({signed_id(diag[k], 1), signed_id(side_edge[k], side_dir[k]),
                          signed_id(diag[k + 1], -1)});
        st.push_back({signed_id(diag[N - 2], 1), signed_id(side_edge[N - 2], side_dir[N - 2]),
                      signed_id(side_edge[N - 1], side_dir[N - 1])});
    }

    return surface("sigma_" + std::to_string(g) + "_" + std::to_string(b), g, b, st,
                   boundary_edges);
}

surface make_named_surface(const std::string& name) {
    int g = -1, bb = -1;
    if (name.rfind("sigma_", 0) == 0) {
        const std::string rest = name.substr(6);
        size_t us = rest.find('_');
        if (us != std::string::npos) {
            try {
                size_t p1 = 0, p2 = 0;
                int gg = std::stoi(rest.substr(0, us), &p1);
                int bv = std::stoi(rest.substr(us + 1), &p2);
                if (p1 == us && p2 == rest.size() - us - 1) { g = gg; bb = bv; }
            } catch (const std::exception&) {}
        }
    }
    require(g >= 0 && bb >= 0, errkind::invalid_input,
            "unknown surface name (expected sigma_<genus>_<boundary>): " + name);
    return make_surface(g, bb);
}

}  // namespace mcg
