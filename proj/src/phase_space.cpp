#include "dwigner/phase_space.hpp"

#include <stdexcept>

namespace dwigner {

Striation Striation::from_index(int idx) {
    if (idx == 0) return vertical();
    if (idx == 1) return horizontal();
    return oblique(idx - 2);
}

int Striation::index() const {
    switch (kind) {
        case Kind::Vertical: return 0;
        case Kind::Horizontal: return 1;
        case Kind::Oblique: return 2 + k;
    }
    return -1;
}

std::string Striation::label() const {
    switch (kind) {
        case Kind::Vertical: return "V";
        case Kind::Horizontal: return "H";
        case Kind::Oblique: return "k" + std::to_string(k);
    }
    return "?";
}

std::vector<PhasePoint> PhaseSpaceGeometry::points_of_line(const Line& l) const {
    int d = spec_.d();
    std::vector<PhasePoint> pts;
    pts.reserve(d);
    switch (l.striation.kind) {
        case Striation::Kind::Vertical:
            for (int i = 0; i < d; ++i) pts.push_back({l.intercept, spec_.element_at(i)});
            break;
        case Striation::Kind::Horizontal:
            for (int i = 0; i < d; ++i) pts.push_back({spec_.element_at(i), l.intercept});
            break;
        case Striation::Kind::Oblique: {
            FieldElement wk = spec_.element_from_power(l.striation.k);
            for (int i = 0; i < d; ++i) {
                FieldElement q = spec_.element_at(i);
                // omega^k q + p = c  =>  p = omega^k q + c
                FieldElement p = spec_.add(spec_.mul(wk, q), l.intercept);
                pts.push_back({q, p});
            }
            break;
        }
    }
    return pts;
}

bool PhaseSpaceGeometry::line_contains(const Line& l, PhasePoint a) const {
    switch (l.striation.kind) {
        case Striation::Kind::Vertical: return a.q == l.intercept;
        case Striation::Kind::Horizontal: return a.p == l.intercept;
        case Striation::Kind::Oblique: {
            FieldElement wk = spec_.element_from_power(l.striation.k);
            return spec_.add(spec_.mul(wk, a.q), a.p) == l.intercept;
        }
    }
    return false;
}

Line PhaseSpaceGeometry::line_through(PhasePoint a, PhasePoint b) const {
    if (a == b) throw std::invalid_argument("line_through requires two distinct points");
    if (a.q == b.q) return {Striation::vertical(), a.q};
    if (a.p == b.p) return {Striation::horizontal(), a.p};
    // omega^k = (p_a + p_b) / (q_a + q_b)
    FieldElement dq = spec_.add(a.q, b.q);
    FieldElement dp = spec_.add(a.p, b.p);
    FieldElement wk = spec_.mul(dp, spec_.inv(dq));
    int k = spec_.power_of(wk);
    return {Striation::oblique(k), spec_.add(spec_.mul(wk, a.q), a.p)};
}

Line PhaseSpaceGeometry::line_in_striation_through(Striation s, PhasePoint a) const {
    switch (s.kind) {
        case Striation::Kind::Vertical: return {s, a.q};
        case Striation::Kind::Horizontal: return {s, a.p};
        case Striation::Kind::Oblique: {
            FieldElement wk = spec_.element_from_power(s.k);
            return {s, spec_.add(spec_.mul(wk, a.q), a.p)};
        }
    }
    throw std::invalid_argument("bad striation");
}

Line PhaseSpaceGeometry::translate_line(const Line& l, PhasePoint offset) const {
    switch (l.striation.kind) {
        case Striation::Kind::Vertical:
            return {l.striation, spec_.add(l.intercept, offset.q)};
        case Striation::Kind::Horizontal:
            return {l.striation, spec_.add(l.intercept, offset.p)};
        case Striation::Kind::Oblique: {
            FieldElement wk = spec_.element_from_power(l.striation.k);
            return {l.striation,
                    spec_.add(l.intercept, spec_.add(spec_.mul(wk, offset.q), offset.p))};
        }
    }
    throw std::invalid_argument("bad striation");
}

PhasePoint PhaseSpaceGeometry::anchor_of(const Line& l) const {
    // points_of_line already orders by (power(q), power(p)).
    return points_of_line(l).front();
}

std::vector<PhasePoint> PhaseSpaceGeometry::all_points() const {
    int d = spec_.d();
    std::vector<PhasePoint> pts;
    pts.reserve(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) pts.push_back({spec_.element_at(i), spec_.element_at(j)});
    return pts;
}

std::vector<Line> PhaseSpaceGeometry::all_lines() const {
    int d = spec_.d();
    std::vector<Line> lines;
    lines.reserve(line_count());
    for (int s = 0; s < striation_count(); ++s)
        for (int i = 0; i < d; ++i)
            lines.push_back({Striation::from_index(s), spec_.element_at(i)});
    return lines;
}

}  // namespace dwigner
