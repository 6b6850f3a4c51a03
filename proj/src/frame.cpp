#include "dwigner/frame.hpp"

#include <stdexcept>

namespace dwigner {

TranslationFrame TranslationFrame::standard(int n) {
    TranslationFrame f;
    f.n_ = n;
    f.standard_ = true;
    for (int j = 0; j < n; ++j) {
        f.x_gens_.push_back(translation_op(n, 1u << j, 0));
        f.z_gens_.push_back(translation_op(n, 0, 1u << j));
    }
    return f;
}

TranslationFrame::TranslationFrame(std::vector<PauliElement> x_gens,
                                   std::vector<PauliElement> z_gens)
    : n_(static_cast<int>(x_gens.size())), standard_(false), x_gens_(std::move(x_gens)),
      z_gens_(std::move(z_gens)) {
    if (z_gens_.size() != x_gens_.size())
        throw std::invalid_argument("frame needs equally many X' and Z' generators");
    for (int j = 0; j < n_; ++j) {
        if (!x_gens_[j].is_canonical() || !z_gens_[j].is_canonical())
            throw std::invalid_argument("frame generators must be canonical Hermitian Paulis");
        for (int k = 0; k < n_; ++k) {
            if (symplectic_product(x_gens_[j], x_gens_[k]) != 0 ||
                symplectic_product(z_gens_[j], z_gens_[k]) != 0 ||
                symplectic_product(x_gens_[j], z_gens_[k]) != (j == k ? 1 : 0))
                throw std::invalid_argument("frame generators violate the canonical commutation pattern");
        }
    }

    standard_ = true;
    for (int j = 0; j < n_; ++j)
        if (x_gens_[j] != translation_op(n_, 1u << j, 0) ||
            z_gens_[j] != translation_op(n_, 0, 1u << j))
            standard_ = false;
}

PauliElement TranslationFrame::realize(tuple_t q, tuple_t p) const {
    if (standard_) return translation_op(n_, q, p);

    PauliElement acc{n_, 0, 0, 0};
    for (int j = 0; j < n_; ++j)
        if (q >> j & 1u) acc = pauli_mul(acc, x_gens_[j]);
    for (int j = 0; j < n_; ++j)
        if (p >> j & 1u) acc = pauli_mul(acc, z_gens_[j]);
    acc.phase_exp = static_cast<std::uint8_t>((acc.phase_exp + std::popcount(q & p)) & 3);
    return acc;
}

}  // namespace dwigner
