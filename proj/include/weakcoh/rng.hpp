// rng.hpp — Deterministic, cross-platform random stream.
//
// All randomness in the toolkit flows from explicit 64-bit seeds through
// splitmix64. Per-trial seeds are derived as mix_seed(seed, trial_index),
// so any trial of a seeded run can be reproduced in isolation (and in any
// language that has 64-bit integers).

#pragma once

#include "weakcoh/types.hpp"

#include <cstdint>

namespace weakcoh {

// splitmix64 state advance + finalizer (Vigna's constants).
std::uint64_t splitmix64_next(std::uint64_t& state);

// Stateless seed derivation for trial streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Small self-contained generator: splitmix64 stream, Box-Muller normals.
// No libc or libstdc++ distributions are involved, so identical seeds give
// identical bytes on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform();

    // Uniform on [lo, hi).
    double uniform(double lo, double hi);

    // Standard normal via Box-Muller (pairs cached).
    double normal();

    // Standard complex normal: (normal() + i*normal()) / sqrt(2).
    Complex complex_normal();

    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n);

    // Matrix of iid standard complex normals (row-major fill order).
    Matrix ginibre(int rows, int cols);

    // Haar-random unitary: QR of a Ginibre matrix with the R-diagonal
    // phases absorbed into Q.
    Matrix haar_unitary(int dim);

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace weakcoh
