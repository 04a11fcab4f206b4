#pragma once

#include <random>

#include "hopfd2/linalg.hpp"

namespace hopfd2::testing {

inline Scalar small_scalar(std::mt19937_64& rng, long lo = -3, long hi = 3) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Scalar(d(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, double density = 0.6) {
    std::bernoulli_distribution keep(density);
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            if (keep(rng)) m.set(i, j, small_scalar(rng));
    return m;
}

inline SVec random_vector(std::mt19937_64& rng, int n) {
    std::vector<Scalar> d;
    for (int i = 0; i < n; ++i) d.push_back(small_scalar(rng));
    return sv::from_dense(d);
}

}  // namespace hopfd2::testing
