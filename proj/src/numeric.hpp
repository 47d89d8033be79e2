#ifndef SPINGIBBS_NUMERIC_HPP
#define SPINGIBBS_NUMERIC_HPP

#include <cstddef>
#include <cstdint>

namespace spingibbs {

// Compensated accumulator.  Reductions over large enumerations use this in a
// fixed index order so results are bit-reproducible.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

inline int popcount32(std::uint32_t x) {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_popcount(x);
#else
    int c = 0;
    while (x) { x &= x - 1; ++c; }
    return c;
#endif
}

inline std::uint32_t reverse_bits(std::uint32_t code, int nbits) {
    std::uint32_t r = 0;
    for (int i = 0; i < nbits; ++i) {
        r = (r << 1) | ((code >> i) & 1u);
    }
    return r;
}

}  // namespace spingibbs

#endif
