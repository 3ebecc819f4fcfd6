#pragma once

#include <vector>

namespace sdelab {

// A time-indexed sequence of state vectors: network layers Y_0..Y_L or SDE
// grid points X_0..X_K. All states share one dimension.
struct Path {
    std::vector<std::vector<double>> states;

    // Smallest index with phi(state) exactly zero, -1 when none. Once the
    // post-activations vanish every later state is bit-identical.
    int first_collapse_index = -1;

    // Set when the stopped-process radius was exceeded (locally Lipschitz
    // activations only); the path is frozen from stop_index on and the
    // sample is excluded from statistics, never resampled.
    bool stopped = false;
    int stop_index = -1;

    bool collapsed() const { return first_collapse_index >= 0; }
    const std::vector<double>& back() const { return states.back(); }
};

} // namespace sdelab
