// Isotopy classes of arc-and-curve systems, represented by canonical weights.
//
// The canonical form of a system is the lexicographically least weight vector
// among representatives of minimal total weight, found by best-first search
// over single isotopy moves after inessential components are stripped.  Two
// systems are isotopic exactly when their canonical forms agree, and all
// class-level operations (intersection numbers, twisting, neighborhood
// boundaries, enumeration) speak canonical weights.

#pragma once

#include <vector>

#include "curvesys.hpp"
#include "picture.hpp"
#include "surface.hpp"

namespace mcg {

// ----------------------------------------------------------------------------
// Canonical forms.

struct canonical_options {
    // search may climb this far above the best total weight seen so far
    int slack = 2;
    // expanded-node budget; exceeding it is an error, never a silent answer
    int max_nodes = 20000;
};

struct canonical_result {
    weights w;  // canonical form of the essential part; all-zero if none left
    int null_curves = 0;        // stripped components, by kind
    int peripheral_curves = 0;
    int trivial_arcs = 0;
    int searched = 0;           // nodes expanded by the minimization search
};

canonical_result canonicalize(const surface& S, const weights& w,
                              const canonical_options& opt = {});

// canonical weights only, inessential components dropped silently
weights canonical_form(const surface& S, const weights& w, const canonical_options& opt = {});

bool isotopic(const surface& S, const weights& a, const weights& b,
              const canonical_options& opt = {});

// geometric intersection number of the two classes (free isotopy; arcs may
// slide along the boundary); accepts any admissible representatives
long long intersection_number(const surface& S, const weights& a, const weights& b);

// ----------------------------------------------------------------------------
// Component structure of a canonical system.

struct component_info {
    std::vector<weights> arcs;    // canonical form of each arc component
    std::vector<weights> curves;  // same for closed components
    int size() const { return (int)(arcs.size() + curves.size()); }
};

component_info components(const surface& S, const weights& w,
                          const canonical_options& opt = {});

// ----------------------------------------------------------------------------
// Enumeration of classes by weight budget.

struct enumerate_options {
    long long max_total = 6;
    bool arcs = true;    // allow arc components
    bool curves = true;  // allow curve components
    bool connected_only = false;
    canonical_options canon;
};

// every nonempty essential system class with a representative of total weight
// at most max_total, as canonical weights, sorted by (total weight, lex)
std::vector<weights> enumerate_systems(const surface& S, const enumerate_options& opt);

// ----------------------------------------------------------------------------
// Regular neighborhood boundary.

// essential non-peripheral boundary components of a regular neighborhood of
// the system together with the whole surface boundary, as one multicurve of
// pairwise distinct classes; empty when every boundary circle is inessential
weights regular_neighborhood_boundary(const surface& S, const weights& a,
                                      const canonical_options& opt = {});

// ----------------------------------------------------------------------------
// Mapping classes.

struct mapping_generator {
    enum kind_t { dehn_twist, half_twist };
    kind_t kind = dehn_twist;
    weights about;  // one essential closed curve
    int power = 1;
};

using mapping_word = std::vector<mapping_generator>;

// image of the system class under the generator (or the word, applied left to
// right); twists follow one fixed handedness convention for positive powers.
// Half twists require the twisting curve to cut off a disk with exactly two
// boundary circles of the surface; odd powers act only on annular marking
// coordinates, so at system level they are rejected as inapplicable.
weights apply_mapping_class(const surface& S, const mapping_generator& g, const weights& sys,
                            const canonical_options& opt = {});
weights apply_mapping_class(const surface& S, const mapping_word& word, const weights& sys,
                            const canonical_options& opt = {});

// true when the curve cuts off a disk with exactly two boundary circles of
// the surface (on either side), the configuration a half twist swaps
bool half_twist_applicable(const surface& S, const weights& about,
                           const canonical_options& opt = {});

}  // namespace mcg
