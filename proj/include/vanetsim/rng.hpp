#pragma once

#include <random>

namespace vanetsim {

// 53-bit uniform in [0, 1). Distributions in this project are built on this
// instead of <random>'s distribution classes, whose algorithms (and draw
// counts) are implementation-defined; results must replay bit-identically.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace vanetsim
