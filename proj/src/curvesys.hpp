// Normal coordinates for systems of disjoint arcs and closed curves.
//
// A system is a vector of transverse point counts, one per edge.  Inside every
// triangle the points join up into disjoint chords, each cutting off one
// corner; this forces the per-triangle parity and triangle-inequality
// conditions below.  Points on boundary edges are endpoints of arcs.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "surface.hpp"

namespace mcg {

using weights = std::vector<int>;

// chords cutting corner i of a triangle run between sides i and (i+2)%3;
// throws invalid_input if the triangle's weights are inadmissible
std::array<int, 3> corner_counts(const surface& S, const weights& w, int tri);

bool admissible(const surface& S, const weights& w, std::string* why = nullptr);
void require_admissible(const surface& S, const weights& w);

long long total_weight(const weights& w);

inline weights zero_weights(const surface& S) { return weights((size_t)S.n_edges, 0); }

weights add(const weights& a, const weights& b);

}  // namespace mcg
