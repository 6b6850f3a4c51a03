#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dwigner/dense.hpp"
#include "dwigner/frame.hpp"
#include "dwigner/phase_space.hpp"

namespace dwigner {

// Immutable per-field context shared by every net: the ray structure, the
// designated generators T(q0 M^j, p0 M~^(j+k)) for j = 1..n, and the tables
// needed to decompose an arbitrary ray point over its generators.
class RaySystem {
  public:
    RaySystem(const FieldSpec& spec, const CoordinateMap& cmap, const TranslationFrame& frame);

    static std::shared_ptr<const RaySystem> make_standard(int n);
    static std::shared_ptr<const RaySystem> make(const FieldSpec& spec, const CoordinateMap& cmap,
                                                 const TranslationFrame& frame);

    const FieldSpec& spec() const { return spec_; }
    const CoordinateMap& cmap() const { return cmap_; }
    const TranslationFrame& frame() const { return frame_; }
    const PhaseSpaceGeometry& geometry() const { return geom_; }

    int n() const { return spec_.n(); }
    int d() const { return spec_.d(); }
    int ray_count() const { return spec_.d() + 1; }

    // Tuple coordinates of a point.
    tuple_t q_tuple(PhasePoint a) const { return cmap_.q_tuple(a.q); }
    tuple_t p_tuple(PhasePoint a) const { return cmap_.p_tuple(a.p); }
    PhasePoint point_from_tuples(tuple_t qt, tuple_t pt) const {
        return {cmap_.q_elem(qt), cmap_.p_elem(pt)};
    }

    // Striation index of the ray through a nonzero point.
    int ray_index_of(PhasePoint a) const;

    // The concrete (frame-realized) translation associated with a point.
    PauliElement realize_point(PhasePoint a) const {
        return frame_.realize(q_tuple(a), p_tuple(a));
    }

    const std::vector<PauliElement>& ray_generators(int ray) const {
        return rays_[ray].realized_gens;
    }
    const std::vector<PhasePoint>& ray_generator_points(int ray) const {
        return rays_[ray].gen_points;
    }

    // All d elements of the ray subgroup (identity first, then the nonzero
    // ray points in field-power order), as canonical frame-realized Paulis.
    std::vector<PauliElement> ray_subgroup(int ray) const;

    struct Decomposition {
        std::uint32_t cmask;  // generator selector: point = sum of chosen generators
        int sigma;            // product of chosen generators = i^sigma * realized point
    };
    Decomposition decompose(int ray, PhasePoint a) const;

  private:
    struct RayData {
        std::vector<PhasePoint> gen_points;       // n designated generator points
        std::vector<PauliElement> realized_gens;  // frame-realized
        std::vector<tuple_t> solve_cols;          // columns of G^-1 for the key side
        bool key_is_p = false;                    // vertical ray solves on p tuples
    };

    tuple_t key_tuple(int ray, PhasePoint a) const {
        return rays_[ray].key_is_p ? p_tuple(a) : q_tuple(a);
    }

    FieldSpec spec_;
    CoordinateMap cmap_;
    TranslationFrame frame_;
    PhaseSpaceGeometry geom_;
    std::vector<RayData> rays_;
};

// A quantum net: one sign in {+1,-1} per designated ray generator. Every
// other eigenvalue f_beta follows from the group structure, so inconsistent
// sign systems are unrepresentable.
class QuantumNet {
  public:
    QuantumNet(std::shared_ptr<const RaySystem> sys, std::vector<std::uint16_t> sign_masks);

    const RaySystem& sys() const { return *sys_; }
    std::shared_ptr<const RaySystem> sys_ptr() const { return sys_; }
    int n() const { return sys_->n(); }
    int d() const { return sys_->d(); }

    // Sign of generator j of the given ray.
    int generator_sign(int ray, int j) const {
        return (sign_masks_[ray] >> j & 1u) ? -1 : +1;
    }
    std::uint16_t sign_mask(int ray) const { return sign_masks_[ray]; }

    // The eigenvalue f_beta = Tr(P(ray line) T(beta)) in {+1,-1}; +1 at the
    // origin.
    int f_of(PhasePoint beta) const;
    int f_of_tuples(tuple_t qt, tuple_t pt) const;

    std::vector<std::vector<int>> gen_signs() const;

    std::string to_json() const;
    static QuantumNet from_json(const std::string& text);

    bool operator==(const QuantumNet& o) const { return sign_masks_ == o.sign_masks_; }

  private:
    std::shared_ptr<const RaySystem> sys_;
    std::vector<std::uint16_t> sign_masks_;  // bit j set <=> generator j carries -1
};

QuantumNet all_plus_net(std::shared_ptr<const RaySystem> sys);

// Each of the n(d+1) generator signs drawn independently; deterministic for
// a given seed.
QuantumNet random_net(std::shared_ptr<const RaySystem> sys, std::uint64_t seed);

// Lexicographic enumeration of sign assignments over a ray subset (all rays
// by default); signs outside the subset are +1. The first enumerated sign is
// the most significant digit and 0 means +1, so index 0 is the all-plus net.
class NetEnumerator {
  public:
    NetEnumerator(std::shared_ptr<const RaySystem> sys,
                  std::optional<std::vector<int>> restrict_to_rays = std::nullopt);

    std::uint64_t count() const { return std::uint64_t{1} << total_signs_; }
    int total_signs() const { return total_signs_; }
    QuantumNet at(std::uint64_t index) const;

  private:
    std::shared_ptr<const RaySystem> sys_;
    std::vector<int> rays_;
    int total_signs_;
};

// Rank-one projector P(lambda): the common eigenprojector of the ray
// subgroup for rays, carried onto parallel lines by the anchor translation.
DenseOperator line_projector(const QuantumNet& net, const Line& l);

// The d+1 ordered bases (striation-major, intercepts in field-power order).
std::vector<std::vector<DenseOperator>> mub_bases(const QuantumNet& net);

}  // namespace dwigner
