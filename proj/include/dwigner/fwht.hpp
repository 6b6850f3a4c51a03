#pragma once

#include <cstddef>
#include <span>

namespace dwigner {

// In-place unnormalized Walsh-Hadamard transform over 2^k entries:
// out[u] = sum_v (-1)^(u.v) in[v]. Works for any type with +/-
// (int64, GaussInt, complex<double>).
template <class T>
void fwht_inplace(std::span<T> data) {
    std::size_t n = data.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                T a = data[j];
                T b = data[j + h];
                data[j] = a + b;
                data[j + h] = a - b;
            }
        }
    }
}

}  // namespace dwigner
