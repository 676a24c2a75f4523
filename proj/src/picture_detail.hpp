// Shared internals for the picture engine: cyclic boundary coordinates of
// chord endpoints within a triangle and the interleaving test.  Keys are
// snapshots of the current edge orders; they are recomputed after any edit.

#pragma once

#include "picture.hpp"

namespace mcg::detail {

// position of a chord endpoint along its side, counted from the side's start
// corner; derived from the point's index in the edge order and the side's
// direction relative to the edge
int side_position(const picture& P, int pt, int tri, int side);

// cyclic key of a boundary node within the triangle: corners and points in
// counterclockwise order starting at corner 0
int boundary_key(const picture& P, int tri, int side, int side_pos);
int corner_key(const picture& P, int tri, int corner);
int boundary_circumference(const picture& P, int tri);

// key of a chord endpoint within the chord's triangle
inline int endpoint_key(const picture& P, int pt, int tri, int side) {
    return boundary_key(P, tri, side, side_position(P, pt, tri, side));
}

// whether chords with distinct boundary keys a0,a1 and b0,b1 cross inside the
// triangle
bool chords_interleave(int a0, int a1, int b0, int b1, int circ);

// ----------------------------------------------------------------------------
// Low-level edits.  These keep the point pool and edge orders consistent;
// strand bookkeeping is the caller's job except where noted.

// allocate a live point on edge e at the given position in the edge order;
// strand fields are left unset
int insert_point(picture& P, int e, int at_index, int sys);

// remove a live point from its edge order and mark it dead
void delete_point(picture& P, int pt);

// replace positions [lo, hi] of strand s (an empty span when lo == hi + 1) by
// the given points; tri_block lists the chord triangles spanning from the
// point before the block to the point after it.  For open strands its length
// is |repl| + 1 - (block at the front) - (block at the back).  A closed
// strand must keep position 0 outside the span (rotate first); the block may
// absorb the wrap chord, so tri_block always has length |repl| + 1 and ends
// with the chord back to position 0 when hi is the last position.
// pos fields are updated
void splice_strand(picture& P, int s, int lo, int hi, const std::vector<int>& repl,
                   const std::vector<int>& tri_block);

// rotate a closed strand's stored basepoint so old position r becomes 0
void rotate_strand(picture& P, int s, int r);

}  // namespace mcg::detail
