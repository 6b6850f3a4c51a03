#pragma once

#include <bit>
#include <cstdint>

#include "dwigner/finite_field.hpp"

namespace dwigner {

inline int dot_parity(tuple_t a, tuple_t b) {
    return std::popcount(a & b) & 1;
}

// Phase-tracked generalized Pauli: the operator i^phase_exp * X^qbits Z^pbits.
// The canonical translation T(q,p) carries phase_exp = popcount(q&p) mod 4,
// which makes it Hermitian and an involution.
struct PauliElement {
    int n = 0;
    std::uint8_t phase_exp = 0;  // exponent of i, mod 4
    tuple_t qbits = 0;
    tuple_t pbits = 0;

    bool operator==(const PauliElement&) const = default;

    bool is_identity() const { return phase_exp == 0 && qbits == 0 && pbits == 0; }
    // True when the phase matches the canonical Hermitian convention.
    bool is_canonical() const {
        return phase_exp == (std::popcount(qbits & pbits) & 3);
    }
};

// Canonical Hermitian translation operator T(q, p) = i^(q.p) X^q Z^p.
inline PauliElement translation_op(int n, tuple_t q, tuple_t p) {
    return {n, static_cast<std::uint8_t>(std::popcount(q & p) & 3), q, p};
}

// Operator product. The only sign source is the reorder rule
// Z^p X^q = (-1)^(p.q) X^q Z^p.
inline PauliElement pauli_mul(const PauliElement& a, const PauliElement& b) {
    std::uint8_t ph =
        static_cast<std::uint8_t>((a.phase_exp + b.phase_exp + 2 * dot_parity(a.pbits, b.qbits)) & 3);
    return {a.n, ph, static_cast<tuple_t>(a.qbits ^ b.qbits), static_cast<tuple_t>(a.pbits ^ b.pbits)};
}

// alpha ^ beta = q_a.p_b + q_b.p_a (mod 2); the commutator sign of the two
// translations is (-1)^result.
inline int symplectic_product(tuple_t qa, tuple_t pa, tuple_t qb, tuple_t pb) {
    return dot_parity(qa, pb) ^ dot_parity(qb, pa);
}

inline int symplectic_product(const PauliElement& a, const PauliElement& b) {
    return symplectic_product(a.qbits, a.pbits, b.qbits, b.pbits);
}

}  // namespace dwigner
