// Shared small utilities: structured errors, exact fractions, hashing,
// deterministic parallel mapping.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mcg {

// ----------------------------------------------------------------------------
// Errors.  Every failure the library reports is one of these kinds, so callers
// (and the CLI) can tell bad input from a search cap from an inapplicable move.

enum class errkind {
    invalid_input,   // malformed or inadmissible data
    cap_exceeded,    // a configured search/enumeration bound was hit
    inapplicable,    // operation not defined for this input (e.g. half twist)
    internal,        // broken invariant; always a bug
};

struct error : std::runtime_error {
    errkind kind;
    error(errkind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(errkind k, const std::string& msg) { throw error(k, msg); }

inline void require(bool cond, errkind k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

// internal invariant check; cheap enough to keep on in release builds
inline void check(bool cond, const char* msg) {
    if (!cond) fail(errkind::internal, std::string("invariant violated: ") + msg);
}

// ----------------------------------------------------------------------------
// Exact fractions over __int128.  Coordinates inside a triangle are tiny
// rationals (slot positions, chord intersections), so 128 bits is ample;
// every constructor normalizes sign and gcd to keep magnitudes small.

using i128 = __int128;

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i128 t = a % b; a = b; b = t; }
    return a;
}

struct frac {
    i128 num = 0, den = 1;

    frac() = default;
    frac(long long n) : num(n), den(1) {}
    frac(i128 n, i128 d) : num(n), den(d) {
        if (den < 0) { num = -num; den = -den; }
        i128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    frac operator+(const frac& o) const { return frac(num * o.den + o.num * den, den * o.den); }
    frac operator-(const frac& o) const { return frac(num * o.den - o.num * den, den * o.den); }
    frac operator*(const frac& o) const { return frac(num * o.num, den * o.den); }
    frac operator/(const frac& o) const { return frac(num * o.den, den * o.num); }
    frac operator-() const { frac r; r.num = -num; r.den = den; return r; }

    bool operator==(const frac& o) const { return num == o.num && den == o.den; }
    bool operator!=(const frac& o) const { return !(*this == o); }
    bool operator<(const frac& o) const { return num * o.den < o.num * den; }
    bool operator<=(const frac& o) const { return num * o.den <= o.num * den; }
    bool operator>(const frac& o) const { return o < *this; }
    bool operator>=(const frac& o) const { return o <= *this; }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
};

// ----------------------------------------------------------------------------
// Hashing for small integer vectors (canonical weight vectors as map keys).

struct veckey_hash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= (size_t)(uint32_t)x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// ----------------------------------------------------------------------------
// Deterministic parallel map.  Results land in input order no matter how many
// workers run, so output bytes never depend on MCG_THREADS.

int worker_count();  // from MCG_THREADS; 0 or unset means sequential

template <typename Out>
std::vector<Out> parallel_map(size_t n, const std::function<Out(size_t)>& f) {
    std::vector<Out> out(n);
    int nw = worker_count();
    if (nw <= 1 || n <= 1) {
        for (size_t i = 0; i < n; i++) out[i] = f(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::string> errs((size_t)nw);
    for (int w = 0; w < nw; w++) {
        pool.emplace_back([&, w]() {
            try {
                for (size_t i = (size_t)w; i < n; i += (size_t)nw) out[i] = f(i);
            } catch (const std::exception& e) {
                errs[(size_t)w] = e.what();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (!e.empty()) fail(errkind::internal, "worker failed: " + e);
    return out;
}

}  // namespace mcg
