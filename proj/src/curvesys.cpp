#include "curvesys.hpp"

namespace mcg {

std::array<int, 3> corner_counts(const surface& S, const weights& w, int tri) {
    const auto& t = S.tris[tri];
    long long ws[3] = {w[t.edge[0]], w[t.edge[1]], w[t.edge[2]]};
    long long sum = ws[0] + ws[1] + ws[2];
    require(sum % 2 == 0, errkind::invalid_input,
            "inadmissible weights: odd point count around triangle " + std::to_string(tri));
    std::array<int, 3> x{};
    for (int i = 0; i < 3; i++) {
        long long xi = (ws[i] + ws[(i + 2) % 3] - ws[(i + 1) % 3]) / 2;
        require(xi >= 0, errkind::invalid_input,
                "inadmissible weights: triangle inequality fails in triangle " +
                    std::to_string(tri));
        x[i] = (int)xi;
    }
    return x;
}

bool admissible(const surface& S, const weights& w, std::string* why) {
    if ((int)w.size() != S.n_edges) {
        if (why) *why = "weight vector length does not match edge count";
        return false;
    }
    for (int e = 0; e < S.n_edges; e++)
        if (w[e] < 0) {
            if (why) *why = "negative weight on edge " + std::to_string(e);
            return false;
        }
    for (int t = 0; t < S.n_tris(); t++) {
        try {
            corner_counts(S, w, t);
        } catch (const error& e) {
            if (why) *why = e.what();
            return false;
        }
    }
    return true;
}

void require_admissible(const surface& S, const weights& w) {
    std::string why;
    require(admissible(S, w, &why), errkind::invalid_input, why);
}

long long total_weight(const weights& w) {
    long long s = 0;
    for (int x : w) s += x;
    return s;
}

weights add(const weights& a, const weights& b) {
    check(a.size() == b.size(), "adding weights of different lengths");
    weights r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
    return r;
}

}  // namespace mcg
