#include "dwigner/code5.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "dwigner/interference.hpp"

namespace dwigner {

namespace {

constexpr int kSites = 5;

int cyc(int j) {  // 1-based cyclic site index
    return ((j - 1) % kSites + kSites) % kSites + 1;
}

tuple_t site_bit(int j) {
    return 1u << (cyc(j) - 1);
}

char kind_letter(PauliKind k) {
    switch (k) {
        case PauliKind::X: return 'X';
        case PauliKind::Y: return 'Y';
        case PauliKind::Z: return 'Z';
    }
    return '?';
}

PauliElement single_qubit_error(PauliKind kind, int site) {
    tuple_t q = 0, p = 0;
    switch (kind) {
        case PauliKind::X: q = site_bit(site); break;
        case PauliKind::Z: p = site_bit(site); break;
        case PauliKind::Y: q = site_bit(site); p = site_bit(site); break;
    }
    return translation_op(CodeFrame::n, q, p);
}

}  // namespace

CodeFrame build_code_frame() {
    CodeFrame cf;

    std::vector<PauliElement> x_gens, z_gens;
    for (int j = 1; j <= kSites; ++j) {
        cf.stabilizers[j - 1] =
            translation_op(CodeFrame::n, site_bit(j), site_bit(j - 1) | site_bit(j + 1));
        x_gens.push_back(cf.stabilizers[j - 1]);
        z_gens.push_back(translation_op(CodeFrame::n, 0, site_bit(j)));
    }

    cf.logical_z = PauliElement{CodeFrame::n, 0, 0, 0};
    for (const PauliElement& s : cf.stabilizers) cf.logical_z = pauli_mul(cf.logical_z, s);
    cf.logical_x = translation_op(CodeFrame::n, 0, 0b11111);

    // |0>_L: project |00000> onto the joint +1 eigenspace of the S_j.
    int d = CodeFrame::d;
    StateAmplitudes psi = StateAmplitudes::Zero(d);
    psi(0) = 1.0;
    for (const PauliElement& s : cf.stabilizers) psi = 0.5 * (psi + apply_pauli(s, psi));
    psi.normalize();
    // Deterministic global phase: first nonzero amplitude real positive.
    for (int i = 0; i < d; ++i) {
        if (std::abs(psi(i)) > 1e-9) {
            psi *= std::abs(psi(i)) / psi(i);
            break;
        }
    }
    cf.logical_zero = psi;
    cf.logical_one = apply_pauli(cf.logical_x, psi);

    cf.frame = TranslationFrame(x_gens, z_gens);
    FieldSpec spec = FieldSpec::with_default_poly(CodeFrame::n);
    cf.rays = RaySystem::make(spec, CoordinateMap::standard(spec), cf.frame);
    return cf;
}

PauliElement code_translation(tuple_t q, tuple_t p, const CodeFrame& frame) {
    return frame.frame.realize(q, p);
}

QuantumNet code_net_for(tuple_t p_I, const CodeFrame& frame) {
    const auto& sys = frame.rays;
    constexpr tuple_t m = 0b11111;
    int d = CodeFrame::d;

    // f'_(x, m) = (-1)^(x.p_I) i^(x.m)         for x.m even,
    //           = -i (-1)^(x.p_I) i^(x.m)      for x.m odd;
    // both branches are real signs since m has odd weight.
    std::vector<std::uint16_t> masks(sys->ray_count(), 0);
    for (tuple_t x = 1; x < static_cast<tuple_t>(d); ++x) {
        int xm = std::popcount(x & m) & 3;
        GaussInt target_g = i_pow(static_cast<unsigned>(xm));
        if (xm & 1) target_g = target_g.times_i_pow(3);  // multiply by -i
        if (target_g.im != 0) throw std::logic_error("code net target is not a sign");
        int target = target_g.re > 0 ? 1 : -1;
        if (dot_parity(x, p_I)) target = -target;

        PhasePoint beta = sys->point_from_tuples(x, m);
        int ray = sys->ray_index_of(beta);
        RaySystem::Decomposition dec = sys->decompose(ray, beta);
        int f_all_plus = (dec.sigma == 2) ? -1 : 1;
        if (f_all_plus != target)
            masks[ray] |= static_cast<std::uint16_t>(dec.cmask & (~dec.cmask + 1));
    }
    // x = 0 fixes the vertical-ray point (0, m) to f = +1, which all-plus
    // vertical signs already satisfy.
    {
        PhasePoint beta = sys->point_from_tuples(0, m);
        RaySystem::Decomposition dec = sys->decompose(0, beta);
        if (dec.sigma != 0) throw std::logic_error("vertical ray point (0,m) must carry f=+1");
    }
    return QuantumNet(sys, std::move(masks));
}

tuple_t error_p_offset(PauliKind kind, int site) {
    if (site < 1 || site > kSites) throw std::invalid_argument("site must be in 1..5");
    switch (kind) {
        case PauliKind::Z: return site_bit(site);
        case PauliKind::X: return site_bit(site - 1) | site_bit(site + 1);
        case PauliKind::Y: return site_bit(site - 1) | site_bit(site) | site_bit(site + 1);
    }
    throw std::invalid_argument("bad error kind");
}

SyndromeReport syndrome_analysis(const CodeFrame& frame) {
    constexpr tuple_t m = 0b11111;
    SyndromeReport rep;

    for (PauliKind kind : {PauliKind::X, PauliKind::Y, PauliKind::Z})
        for (int site = 1; site <= kSites; ++site) {
            ErrorCase ec;
            ec.kind = kind;
            ec.site = site;
            ec.p_offset = error_p_offset(kind, site);
            ec.label = std::string(1, kind_letter(kind)) + std::to_string(site);
            rep.errors.push_back(ec);
        }

    rep.offsets_distinct = true;
    rep.offsets_avoid_logical_lines = true;
    rep.offset_differences_avoid_logical = true;
    for (std::size_t i = 0; i < rep.errors.size(); ++i) {
        tuple_t oi = rep.errors[i].p_offset;
        if (oi == 0 || oi == m) rep.offsets_avoid_logical_lines = false;
        for (std::size_t j = i + 1; j < rep.errors.size(); ++j) {
            tuple_t diff = oi ^ rep.errors[j].p_offset;
            if (diff == 0) rep.offsets_distinct = false;
            if (diff == 0 || diff == m) rep.offset_differences_avoid_logical = false;
        }
    }

    // Dense check: an encoded state and its 15 error images form an
    // orthonormal family, and the images have no overlap with the code space.
    StateAmplitudes encoded = (frame.logical_zero + frame.logical_one) / std::sqrt(2.0);
    std::vector<StateAmplitudes> family;
    family.push_back(encoded);
    for (const ErrorCase& ec : rep.errors)
        family.push_back(apply_pauli(single_qubit_error(ec.kind, ec.site), encoded));

    for (std::size_t i = 0; i < family.size(); ++i) {
        rep.gram_max_diag_dev =
            std::max(rep.gram_max_diag_dev, std::abs(family[i].squaredNorm() - 1.0));
        for (std::size_t j = i + 1; j < family.size(); ++j)
            rep.gram_max_offdiag =
                std::max(rep.gram_max_offdiag, std::abs(family[i].dot(family[j])));
    }
    for (std::size_t i = 1; i < family.size(); ++i) {
        rep.code_space_overlap =
            std::max(rep.code_space_overlap, std::abs(frame.logical_zero.dot(family[i])));
        rep.code_space_overlap =
            std::max(rep.code_space_overlap, std::abs(frame.logical_one.dot(family[i])));
    }

    // The known two-qubit degeneracy: Z_(j-1) Z_(j+1) is indistinguishable
    // from X_(j).
    for (int j = 1; j <= kSites; ++j) {
        tuple_t zz = site_bit(j - 1) | site_bit(j + 1);
        if (zz == error_p_offset(PauliKind::X, j))
            rep.degeneracy_pairs.emplace_back("Z" + std::to_string(cyc(j - 1)) + "Z" +
                                                  std::to_string(cyc(j + 1)),
                                              "X" + std::to_string(j));
    }

    rep.passed = rep.offsets_distinct && rep.offsets_avoid_logical_lines &&
                 rep.offset_differences_avoid_logical && rep.gram_max_offdiag <= 1e-10 &&
                 rep.gram_max_diag_dev <= 1e-10 && rep.code_space_overlap <= 1e-10 &&
                 rep.degeneracy_pairs.size() == kSites;
    return rep;
}

std::string SyndromeReport::to_json() const {
    nlohmann::json j;
    j["errors"] = nlohmann::json::array();
    for (const ErrorCase& ec : errors)
        j["errors"].push_back({{"label", ec.label}, {"p_offset", tuple_bits(ec.p_offset, 5)}});
    j["offsets_distinct"] = offsets_distinct;
    j["offsets_avoid_logical_lines"] = offsets_avoid_logical_lines;
    j["offset_differences_avoid_logical"] = offset_differences_avoid_logical;
    j["gram_max_offdiag"] = gram_max_offdiag;
    j["gram_max_diag_dev"] = gram_max_diag_dev;
    j["code_space_overlap"] = code_space_overlap;
    j["degeneracy_pairs"] = degeneracy_pairs;
    j["passed"] = passed;
    return j.dump(2);
}

std::string code5_report_json(const CodeFrame& frame, tuple_t p_I) {
    QuantumNet net = code_net_for(p_I, frame);
    SyndromeReport rep = syndrome_analysis(frame);

    WignerTable w0 = wigner_of_state(net, QuantumState::from_vector(frame.logical_zero));
    WignerTable w1 = wigner_of_state(net, QuantumState::from_vector(frame.logical_one));
    StateAmplitudes plus = (frame.logical_zero + frame.logical_one) / std::sqrt(2.0);
    WignerTable wp = wigner_of_state(net, QuantumState::from_vector(plus));

    nlohmann::json j;
    j["p_I"] = tuple_bits(p_I, 5);
    j["p_I_overlaps_logical_lines"] = (p_I == 0 || p_I == 0b11111);
    j["net"] = nlohmann::json::parse(net.to_json());
    j["logical_zero_table"] = nlohmann::json::parse(w0.to_json());
    j["logical_one_table"] = nlohmann::json::parse(w1.to_json());
    j["plus_table"] = nlohmann::json::parse(wp.to_json());
    j["syndrome"] = nlohmann::json::parse(rep.to_json());
    return j.dump(2);
}

}  // namespace dwigner
