// Minimal test harness: REQUIRE aborts the binary, EXPECT records a failure
// and keeps going; main() returns nonzero if anything failed.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

namespace testing {

inline int failures = 0;
inline int checks = 0;

#define REQUIRE(cond)                                                          \
    do {                                                                       \
        ++testing::checks;                                                     \
        if (!(cond)) {                                                         \
            std::fprintf(stderr, "[FAIL] %s:%d REQUIRE(%s)\n", __FILE__,       \
                         __LINE__, #cond);                                     \
            std::exit(1);                                                      \
        }                                                                      \
    } while (0)

#define REQUIRE_MSG(cond, msg)                                                 \
    do {                                                                       \
        ++testing::checks;                                                     \
        if (!(cond)) {                                                         \
            std::ostringstream os_;                                            \
            os_ << msg;                                                        \
            std::fprintf(stderr, "[FAIL] %s:%d REQUIRE(%s): %s\n", __FILE__,   \
                         __LINE__, #cond, os_.str().c_str());                  \
            std::exit(1);                                                      \
        }                                                                      \
    } while (0)

#define EXPECT(cond)                                                           \
    do {                                                                       \
        ++testing::checks;                                                     \
        if (!(cond)) {                                                         \
            std::fprintf(stderr, "[FAIL] %s:%d EXPECT(%s)\n", __FILE__,        \
                         __LINE__, #cond);                                     \
            ++testing::failures;                                               \
        }                                                                      \
    } while (0)

#define EXPECT_MSG(cond, msg)                                                  \
    do {                                                                       \
        ++testing::checks;                                                     \
        if (!(cond)) {                                                         \
            std::ostringstream os_;                                            \
            os_ << msg;                                                        \
            std::fprintf(stderr, "[FAIL] %s:%d EXPECT(%s): %s\n", __FILE__,    \
                         __LINE__, #cond, os_.str().c_str());                  \
            ++testing::failures;                                               \
        }                                                                      \
    } while (0)

// call at the end of main
inline int finish(const char* name) {
    if (testing::failures == 0) {
        std::printf("%s: %d checks passed\n", name, testing::checks);
        return 0;
    }
    std::fprintf(stderr, "%s: %d of %d checks FAILED\n", name, testing::failures,
                 testing::checks);
    return 1;
}

// expect that a callable throws an mcg::error of the given kind
#define EXPECT_ERROR(kind_, ...)                                               \
    do {                                                                       \
        ++testing::checks;                                                     \
        bool caught_ = false;                                                  \
        try {                                                                  \
            __VA_ARGS__;                                                       \
        } catch (const mcg::error& e_) {                                       \
            caught_ = (e_.kind == (kind_));                                    \
        }                                                                      \
        if (!caught_) {                                                        \
            std::fprintf(stderr, "[FAIL] %s:%d expected error kind %s from %s\n", \
                         __FILE__, __LINE__, #kind_, #__VA_ARGS__);            \
            ++testing::failures;                                               \
        }                                                                      \
    } while (0)

}  // namespace testing
