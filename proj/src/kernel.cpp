// Canonical forms and class-level operations.

#include "kernel.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "base.hpp"

namespace mcg {

namespace {

bool weight_key_less(const weights& x, const weights& y) {
    long long tx = total_weight(x), ty = total_weight(y);
    if (tx != ty) return tx < ty;
    return x < y;
}

}  // namespace

// ----------------------------------------------------------------------------
// Canonical forms.

canonical_result canonicalize(const surface& S, const weights& w, const canonical_options& opt) {
    require_admissible(S, w);
    canonical_result res;
    strip_result sr = strip_inessential(S, w);
    res.null_curves = sr.null_curves;
    res.peripheral_curves = sr.peripheral_curves;
    res.trivial_arcs = sr.trivial_arcs;
    res.w = zero_weights(S);
    if (total_weight(sr.kept) == 0) return res;

    // best-first search over single isotopy moves, keeping every representative
    // whose total weight stays within `slack` of the best seen; the canonical
    // form is the least (total weight, lex) vector the search visits.  The
    // frontier is popped in key order, so once its least entry leaves the
    // band no remaining entry can return to it
    std::set<weights, bool (*)(const weights&, const weights&)> frontier(weight_key_less);
    std::unordered_set<weights, veckey_hash> seen;
    frontier.insert(sr.kept);
    seen.insert(sr.kept);
    weights best = sr.kept;
    long long best_total = total_weight(best);
    while (!frontier.empty()) {
        weights cur = *frontier.begin();
        frontier.erase(frontier.begin());
        if (total_weight(cur) > best_total + opt.slack) break;
        require(++res.searched <= opt.max_nodes, errkind::cap_exceeded,
                "canonical form search exceeded its node budget on " + S.name);
        for (weights& nb : isotopy_neighbors(S, cur)) {
            if (!seen.insert(nb).second) continue;
            if (weight_key_less(nb, best)) {
                best = nb;
                best_total = total_weight(nb);
            }
            if (total_weight(nb) <= best_total + opt.slack) frontier.insert(std::move(nb));
        }
    }
    res.w = best;
    return res;
}

weights canonical_form(const surface& S, const weights& w, const canonical_options& opt) {
    return canonicalize(S, w, opt).w;
}

bool isotopic(const surface& S, const weights& a, const weights& b, const canonical_options& opt) {
    return canonical_form(S, a, opt) == canonical_form(S, b, opt);
}

long long intersection_number(const surface& S, const weights& a, const weights& b) {
    return intersection_number_raw(S, a, b, false);
}

// ----------------------------------------------------------------------------
// Components.

component_info components(const surface& S, const weights& w, const canonical_options& opt) {
    weights cw = canonical_form(S, w, opt);
    component_info info;
    if (total_weight(cw) == 0) return info;
    for (const weights& part : split_components(S, cw)) {
        long long ends = 0;
        for (int e = 0; e < S.n_edges; ++e)
            if (S.boundary_edge[e]) ends += part[e];
        weights cp = canonical_form(S, part, opt);
        (ends > 0 ? info.arcs : info.curves).push_back(std::move(cp));
    }
    std::sort(info.arcs.begin(), info.arcs.end(), weight_key_less);
    std::sort(info.curves.begin(), info.curves.end(), weight_key_less);
    return info;
}

// ----------------------------------------------------------------------------
// Enumeration.

std::vector<weights> enumerate_systems(const surface& S, const enumerate_options& opt) {
    require(opt.max_total >= 0, errkind::invalid_input, "enumeration budget must be nonnegative");
    require(opt.arcs || opt.curves, errkind::invalid_input,
            "enumeration must allow at least one component kind");

    // walk every weight vector within the budget, keeping the admissible ones
    std::set<weights> classes, rejected;
    weights w = zero_weights(S);
    long long used = 0;
    auto consider = [&]() {
        if (used == 0 || !admissible(S, w)) return;
        weights cw = canonical_form(S, w, opt.canon);
        if (total_weight(cw) == 0 || classes.count(cw) || rejected.count(cw)) return;
        component_info info = components(S, cw, opt.canon);
        bool keep = (opt.arcs || info.arcs.empty()) && (opt.curves || info.curves.empty()) &&
                    (!opt.connected_only || info.size() == 1);
        (keep ? classes : rejected).insert(std::move(cw));
    };
    // odometer over weight vectors with a running total
    for (;;) {
        consider();
        int e = 0;
        while (e < S.n_edges) {
            if (used < opt.max_total) {
                ++w[e];
                ++used;
                break;
            }
            used -= w[e];
            w[e] = 0;
            ++e;
        }
        if (e == S.n_edges) break;
    }

    std::vector<weights> out(classes.begin(), classes.end());
    std::sort(out.begin(), out.end(), weight_key_less);
    return out;
}

// ----------------------------------------------------------------------------
// Regular neighborhood boundary.

weights regular_neighborhood_boundary(const surface& S, const weights& a,
                                      const canonical_options& opt) {
    weights ac = canonical_form(S, a, opt);
    if (total_weight(ac) == 0) return ac;

    picture P = trace(S, ac);
    face_structure F = compute_regions(P, nullptr);

    // one boundary circle of the neighborhood per region walk, pushed into the
    // region.  The interior edges the walk's pivots hop across are the circle's
    // crossing sequence; two consecutive crossings of the same edge bound a
    // half disk inside one triangle, so cancelling adjacent equal edges in the
    // cyclic sequence until none remain leaves the circle's normal coordinates
    std::set<weights> classes;
    for (const region_t& R : F.regions) {
        for (const auto& hops : R.walk_hops) {
            std::vector<int> seq;
            for (int e : hops) {
                if (!seq.empty() && seq.back() == e) seq.pop_back();
                else seq.push_back(e);
            }
            while (seq.size() >= 2 && seq.front() == seq.back()) {
                seq.erase(seq.begin());
                seq.pop_back();
            }
            if (seq.empty()) continue;
            weights cw = zero_weights(S);
            for (int e : seq) ++cw[e];
            check(admissible(S, cw), "neighborhood boundary walk is not a normal curve");
            weights cc = canonical_form(S, cw, opt);
            if (total_weight(cc) > 0) classes.insert(std::move(cc));
        }
    }
    if (classes.empty()) return zero_weights(S);

    // the classes are realized disjointly by construction, so their canonical
    // forms must still be disjoint and their normal sum is the union
    weights sum = zero_weights(S);
    for (const weights& c : classes) {
        for (const weights& d : classes) {
            if (&c == &d) break;
            check(intersection_number(S, c, d) == 0,
                  "neighborhood boundary components fail to stay disjoint");
        }
        sum = add(sum, c);
    }
    return canonical_form(S, sum, opt);
}

}  // namespace mcg
