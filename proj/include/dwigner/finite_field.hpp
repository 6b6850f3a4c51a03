#pragma once

#include <cstdint>
#include <vector>

#include "dwigner/errors.hpp"

namespace dwigner {

// Binary n-tuple packed into a word; component j (1-based) lives in bit j-1.
using tuple_t = std::uint32_t;

constexpr int kMaxQubits = 12;

// Element of GF(2^n) as a coefficient vector over the polynomial basis
// {1, x, ..., x^(n-1)}; bit i is the coefficient of x^i.
struct FieldElement {
    std::uint32_t bits = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t b) : bits(b) {}

    constexpr bool operator==(const FieldElement&) const = default;
    constexpr auto operator<=>(const FieldElement&) const = default;
    constexpr bool is_zero() const { return bits == 0; }
};

inline constexpr FieldElement kZero{0};
inline constexpr FieldElement kOne{1};

// GF(2^n) with a fixed primitive polynomial. Construction verifies that x
// generates the full multiplicative group, then freezes exp/log tables.
class FieldSpec {
  public:
    FieldSpec(int n, std::uint32_t poly);

    // The per-n default primitive polynomials.
    static std::uint32_t default_poly(int n);
    static FieldSpec with_default_poly(int n);

    int n() const { return n_; }
    int d() const { return d_; }
    std::uint32_t poly() const { return poly_; }
    FieldElement generator() const { return gen_; }

    FieldElement add(FieldElement a, FieldElement b) const { return FieldElement{a.bits ^ b.bits}; }
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, int k) const;

    // omega^j for j in [0, d-2].
    FieldElement element_from_power(int j) const { return exp_[mod_order(j)]; }
    // log_omega(a) in [0, d-2]; a must be nonzero.
    int power_of(FieldElement a) const;

    // Elements in field-power order: index 0 -> 0, index 1+j -> omega^j.
    FieldElement element_at(int order_index) const;
    int order_index_of(FieldElement a) const;

    bool operator==(const FieldSpec& o) const { return n_ == o.n_ && poly_ == o.poly_; }

  private:
    int mod_order(int j) const {
        int m = d_ - 1;
        return ((j % m) + m) % m;
    }

    int n_;
    int d_;
    std::uint32_t poly_;
    FieldElement gen_;
    std::vector<FieldElement> exp_;  // exp_[j] = omega^j, j in [0, d-2]
    std::vector<int> log_;           // log_[bits] for nonzero bits
};

// Raw polynomial product of bit-coefficient vectors reduced mod poly.
std::uint32_t gf2_mul_reduce(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int n);

// n x n matrix over F_2; rows packed as n-bit masks. Vectors act from the
// left: (v * M)_j = sum_i v_i M_ij.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(int n) : n_(n), rows_(n, 0) {}

    static BinaryMatrix identity(int n);
    // Companion matrix of the spec's polynomial: v * M = coefficients of
    // (v(x) * x) mod poly.
    static BinaryMatrix companion(const FieldSpec& spec);

    int n() const { return n_; }
    std::uint32_t row(int i) const { return rows_[i]; }
    void set_row(int i, std::uint32_t bits) { rows_[i] = bits; }
    bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }

    BinaryMatrix transpose() const;
    BinaryMatrix mul(const BinaryMatrix& o) const;
    BinaryMatrix pow(long long k) const;
    tuple_t apply(tuple_t v) const;  // v * M

    bool is_identity() const;
    int rank() const;

    bool operator==(const BinaryMatrix&) const = default;

  private:
    int n_ = 0;
    std::vector<std::uint32_t> rows_;
};

// Bijective tables between field elements and phase-space n-tuples:
// omega^j -> q0 * M^j on the position side, p0 * M~^j on the momentum side,
// zero -> zero on both.
class CoordinateMap {
  public:
    CoordinateMap(const FieldSpec& spec, tuple_t q0, tuple_t p0);

    static CoordinateMap standard(const FieldSpec& spec) { return {spec, 1u, 1u}; }

    const FieldSpec& spec() const { return spec_; }
    tuple_t q0() const { return q0_; }
    tuple_t p0() const { return p0_; }

    tuple_t q_tuple(FieldElement e) const { return q_tuple_[e.bits]; }
    tuple_t p_tuple(FieldElement e) const { return p_tuple_[e.bits]; }
    FieldElement q_elem(tuple_t t) const { return q_elem_[t]; }
    FieldElement p_elem(tuple_t t) const { return p_elem_[t]; }

  private:
    FieldSpec spec_;
    tuple_t q0_, p0_;
    std::vector<tuple_t> q_tuple_, p_tuple_;
    std::vector<FieldElement> q_elem_, p_elem_;
};

}  // namespace dwigner
