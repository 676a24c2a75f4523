// Triangulated compact oriented surfaces.
//
// A surface is a list of triangles, each side referring to an oriented edge;
// interior edges appear in exactly two sides (with opposite directions, so the
// triangles are consistently counterclockwise), boundary edges in one.  All
// derived data (vertices, boundary circles, genus) is computed and validated
// at construction.  Conventions used throughout:
//
//   * side i of a triangle runs from corner i to corner (i+1)%3;
//   * corner i is the start of side i and the end of side (i+2)%3;
//   * crossing side i away from corner i lands at corner (j+1)%3 of the
//     neighbor, where j is the neighbor's side index.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "base.hpp"

namespace mcg {

struct side_ref {
    int tri = -1;
    int side = -1;
    bool valid() const { return tri >= 0; }
    bool operator==(const side_ref& o) const { return tri == o.tri && side == o.side; }
};

class surface {
  public:
    struct triangle {
        std::array<int, 3> edge;    // edge id per side
        std::array<int, 3> orient;  // +1 if side direction equals edge direction
    };

    std::string name;
    std::vector<triangle> tris;
    int n_edges = 0;
    std::vector<char> boundary_edge;               // per edge
    std::vector<std::array<side_ref, 2>> edge_side;  // [1] invalid for boundary edges

    // derived
    int genus = 0;
    int n_boundary = 0;
    std::vector<int> corner_vertex;      // 3*tri + corner  ->  vertex id
    int n_vertices = 0;
    std::vector<char> vertex_on_boundary;
    std::vector<std::vector<int>> boundary_circles;  // boundary edge ids in cyclic order
    std::vector<int> edge_boundary_circle;           // -1 for interior edges

    // triangles given as signed 1-based edge ids (sign = direction);
    // declared genus/boundary are cross-checked against the computed topology
    surface(std::string name_, int genus_, int boundary_,
            const std::vector<std::array<int, 3>>& signed_tris,
            const std::vector<int>& boundary_edges_);

    int n_tris() const { return (int)tris.size(); }
    int xi() const { return 3 * genus + n_boundary - 3; }
    int euler() const { return 2 - 2 * genus - n_boundary; }

    // maximal number of disjoint pairwise non-isotopic essential arcs/curves
    int max_system_size() const {
        return n_boundary > 0 ? 6 * genus + 3 * n_boundary - 6 : 3 * genus - 3;
    }

    int vertex_at_corner(int tri, int corner) const { return corner_vertex[3 * tri + corner]; }
    side_ref other_side(int tri, int side) const;   // invalid for boundary sides
    int edge_of(side_ref s) const { return tris[s.tri].edge[s.side]; }
    int orient_of(side_ref s) const { return tris[s.tri].orient[s.side]; }

    // vertex at the given end of an edge (end 0 = edge start in its direction)
    int edge_end_vertex(int e, int end) const;

    // edge ends incident to a vertex, in rotation order around it; for a
    // boundary vertex the fan starts and ends at boundary edges
    struct edge_end { int edge; int end; };
    std::vector<edge_end> vertex_fan(int v) const;

    bool vertex_fans_computed() const { return !fans_.empty(); }

  private:
    void derive_topology(int declared_genus, int declared_boundary);
    std::vector<std::vector<edge_end>> fans_;
};

// standard surface of genus g with b boundary components, built from the
// usual one-relator polygon (handles a b a' b', then d r d' per boundary hole)
surface make_surface(int g, int b);

// registry lookup: "sigma_g_b" -> make_surface(g, b)
surface make_named_surface(const std::string& name);

}  // namespace mcg
