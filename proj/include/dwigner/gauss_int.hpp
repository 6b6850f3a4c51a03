#pragma once

#include <complex>
#include <cstdint>

namespace dwigner {

// Gaussian integer a + b*i. All net phases are powers of i, so interference
// sums and scaled Wigner values stay exact in this type.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}

    constexpr GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    constexpr GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    constexpr GaussInt operator-() const { return {-re, -im}; }

    GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussInt& operator-=(const GaussInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    constexpr bool operator==(const GaussInt& o) const = default;

    constexpr bool is_zero() const { return re == 0 && im == 0; }

    // this * i^k
    constexpr GaussInt times_i_pow(unsigned k) const {
        switch (k & 3u) {
            case 0: return *this;
            case 1: return {-im, re};
            case 2: return {-re, -im};
            default: return {im, -re};
        }
    }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

// i^k as a Gaussian integer unit.
constexpr GaussInt i_pow(unsigned k) {
    return GaussInt{1, 0}.times_i_pow(k);
}

}  // namespace dwigner
