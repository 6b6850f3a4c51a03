#pragma once

#include <vector>

#include "dwigner/pauli.hpp"

namespace dwigner {

// A translation basis: 2n phase-tracked Paulis X'_j, Z'_j with the canonical
// commutation pattern (X'_j and Z'_j anticommute, everything else commutes).
// realize() turns a phase-space tuple pair into the concrete operator
// T'(q, p) = X'^q Z'^p i^(q.p). The standard frame reproduces translation_op
// exactly; the five-qubit code substitutes its stabilizers for the X'_j.
class TranslationFrame {
  public:
    TranslationFrame() = default;  // empty; assign before use
    static TranslationFrame standard(int n);
    TranslationFrame(std::vector<PauliElement> x_gens, std::vector<PauliElement> z_gens);

    int n() const { return n_; }
    bool is_standard() const { return standard_; }

    const std::vector<PauliElement>& x_gens() const { return x_gens_; }
    const std::vector<PauliElement>& z_gens() const { return z_gens_; }

    PauliElement realize(tuple_t q, tuple_t p) const;

  private:
    int n_ = 0;
    bool standard_ = true;
    std::vector<PauliElement> x_gens_, z_gens_;
};

}  // namespace dwigner
