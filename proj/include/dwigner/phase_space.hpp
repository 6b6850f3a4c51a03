#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dwigner/finite_field.hpp"

namespace dwigner {

// Point alpha = (q, p) of the d x d grid.
struct PhasePoint {
    FieldElement q;
    FieldElement p;

    constexpr bool operator==(const PhasePoint&) const = default;
    constexpr bool is_origin() const { return q.is_zero() && p.is_zero(); }
};

inline PhasePoint point_add(PhasePoint a, PhasePoint b) {
    return {FieldElement{a.q.bits ^ b.q.bits}, FieldElement{a.p.bits ^ b.p.bits}};
}

// One of the d+1 striations: q = c, p = c, or omega^k q + p = c.
struct Striation {
    enum class Kind { Vertical, Horizontal, Oblique };

    Kind kind = Kind::Vertical;
    int k = -1;  // only for oblique, in [0, d-2]

    static Striation vertical() { return {Kind::Vertical, -1}; }
    static Striation horizontal() { return {Kind::Horizontal, -1}; }
    static Striation oblique(int k) { return {Kind::Oblique, k}; }

    // Fixed enumeration order: 0 = vertical, 1 = horizontal, 2+k = oblique k.
    static Striation from_index(int idx);
    int index() const;

    bool operator==(const Striation&) const = default;
    std::string label() const;  // "V", "H", "k0", "k1", ...
};

// Canonical line form (striation, intercept); the raw aq+bp=c triple is
// scale-ambiguous, this form is not.
struct Line {
    Striation striation;
    FieldElement intercept;

    bool operator==(const Line&) const = default;
    bool is_ray() const { return intercept.is_zero(); }
};

// Incidence geometry of the grid for one field. Immutable once built.
class PhaseSpaceGeometry {
  public:
    explicit PhaseSpaceGeometry(const FieldSpec& spec) : spec_(spec) {}

    const FieldSpec& spec() const { return spec_; }
    int d() const { return spec_.d(); }
    int striation_count() const { return spec_.d() + 1; }
    int line_count() const { return spec_.d() * (spec_.d() + 1); }

    // The d points of a line, ordered by (power index of q, power index of p).
    std::vector<PhasePoint> points_of_line(const Line& l) const;

    bool line_contains(const Line& l, PhasePoint a) const;

    // The unique line joining two distinct points.
    Line line_through(PhasePoint a, PhasePoint b) const;

    // The unique line of the given striation through a.
    Line line_in_striation_through(Striation s, PhasePoint a) const;

    Line translate_line(const Line& l, PhasePoint offset) const;

    Line ray_of(Striation s) const { return {s, kZero}; }

    // Lexicographically smallest point (field-power order on (q, p)); used
    // as the deterministic translation anchor carrying the ray onto l.
    PhasePoint anchor_of(const Line& l) const;

    // All d^2 points in field-power order, q-major.
    std::vector<PhasePoint> all_points() const;
    // All d(d+1) lines, striation-major, intercepts in field-power order.
    std::vector<Line> all_lines() const;

  private:
    FieldSpec spec_;
};

}  // namespace dwigner
