#include "dwigner/quantum_net.hpp"

#include <random>
#include <stdexcept>

#include <json.hpp>

namespace dwigner {

namespace {

// Invert an n x n bit matrix given as rows; returns the inverse's columns as
// masks so that solving c * G = t reduces to parities c_j = <t, col_j>.
std::vector<tuple_t> invert_columns(const std::vector<tuple_t>& rows, int n) {
    std::vector<std::uint64_t> work(n);
    for (int i = 0; i < n; ++i)
        work[i] = static_cast<std::uint64_t>(rows[i]) | (std::uint64_t{1} << (n + i));
    // Gauss-Jordan on [G | I].
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (work[i] >> col & 1u) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::logic_error("ray generator tuples are not independent");
        std::swap(work[col], work[pivot]);
        for (int i = 0; i < n; ++i)
            if (i != col && (work[i] >> col & 1u)) work[i] ^= work[col];
    }
    // work[i] now holds row i of G^-1 in its high half; re-slice into columns.
    std::vector<tuple_t> cols(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (work[i] >> (n + j) & 1u) cols[j] |= 1u << i;
    return cols;
}

}  // namespace

RaySystem::RaySystem(const FieldSpec& spec, const CoordinateMap& cmap,
                     const TranslationFrame& frame)
    : spec_(spec), cmap_(cmap), frame_(frame), geom_(spec) {
    if (frame.n() != spec.n()) throw std::invalid_argument("frame/field qubit count mismatch");
    int n = spec_.n();
    rays_.resize(ray_count());

    for (int ridx = 0; ridx < ray_count(); ++ridx) {
        Striation s = Striation::from_index(ridx);
        RayData& ray = rays_[ridx];
        ray.key_is_p = (s.kind == Striation::Kind::Vertical);

        for (int j = 1; j <= n; ++j) {
            FieldElement wj = spec_.element_from_power(j);
            PhasePoint pt;
            switch (s.kind) {
                case Striation::Kind::Vertical: pt = {kZero, wj}; break;
                case Striation::Kind::Horizontal: pt = {wj, kZero}; break;
                case Striation::Kind::Oblique:
                    pt = {wj, spec_.element_from_power(j + s.k)};
                    break;
            }
            ray.gen_points.push_back(pt);
            ray.realized_gens.push_back(realize_point(pt));
        }

        std::vector<tuple_t> key_rows;
        for (const PhasePoint& pt : ray.gen_points) key_rows.push_back(key_tuple(ridx, pt));
        ray.solve_cols = invert_columns(key_rows, n);
    }
}

std::shared_ptr<const RaySystem> RaySystem::make_standard(int n) {
    FieldSpec spec = FieldSpec::with_default_poly(n);
    return std::make_shared<const RaySystem>(spec, CoordinateMap::standard(spec),
                                             TranslationFrame::standard(n));
}

std::shared_ptr<const RaySystem> RaySystem::make(const FieldSpec& spec, const CoordinateMap& cmap,
                                                 const TranslationFrame& frame) {
    return std::make_shared<const RaySystem>(spec, cmap, frame);
}

int RaySystem::ray_index_of(PhasePoint a) const {
    if (a.is_origin()) throw std::invalid_argument("the origin lies on every ray");
    if (a.q.is_zero()) return 0;
    if (a.p.is_zero()) return 1;
    int k = spec_.power_of(a.p) - spec_.power_of(a.q);
    int m = spec_.d() - 1;
    return 2 + ((k % m) + m) % m;
}

std::vector<PauliElement> RaySystem::ray_subgroup(int ray) const {
    Striation s = Striation::from_index(ray);
    std::vector<PauliElement> elems;
    elems.push_back(PauliElement{n(), 0, 0, 0});
    for (const PhasePoint& pt : geom_.points_of_line(geom_.ray_of(s)))
        if (!pt.is_origin()) elems.push_back(realize_point(pt));
    return elems;
}

RaySystem::Decomposition RaySystem::decompose(int ray, PhasePoint a) const {
    const RayData& rd = rays_[ray];
    tuple_t key = key_tuple(ray, a);

    std::uint32_t cmask = 0;
    for (int j = 0; j < n(); ++j)
        if (dot_parity(key, rd.solve_cols[j])) cmask |= 1u << j;

    PauliElement prod{n(), 0, 0, 0};
    for (int j = 0; j < n(); ++j)
        if (cmask >> j & 1u) prod = pauli_mul(prod, rd.realized_gens[j]);

    PauliElement target = realize_point(a);
    if (prod.qbits != target.qbits || prod.pbits != target.pbits)
        throw std::logic_error("ray decomposition does not reproduce the point");
    int sigma = (prod.phase_exp - target.phase_exp + 4) & 3;
    if (sigma & 1) throw std::logic_error("odd relative phase between commuting Hermitian products");
    return {cmask, sigma};
}

QuantumNet::QuantumNet(std::shared_ptr<const RaySystem> sys, std::vector<std::uint16_t> sign_masks)
    : sys_(std::move(sys)), sign_masks_(std::move(sign_masks)) {
    if (static_cast<int>(sign_masks_.size()) != sys_->ray_count())
        throw std::invalid_argument("need one sign mask per ray");
    std::uint16_t valid = static_cast<std::uint16_t>((1u << sys_->n()) - 1);
    for (std::uint16_t m : sign_masks_)
        if (m & ~valid) throw std::invalid_argument("sign mask exceeds generator count");
}

int QuantumNet::f_of(PhasePoint beta) const {
    if (beta.is_origin()) return +1;
    int ray = sys_->ray_index_of(beta);
    RaySystem::Decomposition dec = sys_->decompose(ray, beta);
    int sign = dot_parity(dec.cmask, sign_masks_[ray]) ? -1 : +1;
    // f = i^(-sigma) * product of generator signs, sigma in {0, 2}.
    return dec.sigma == 2 ? -sign : sign;
}

int QuantumNet::f_of_tuples(tuple_t qt, tuple_t pt) const {
    return f_of(sys_->point_from_tuples(qt, pt));
}

std::vector<std::vector<int>> QuantumNet::gen_signs() const {
    std::vector<std::vector<int>> out;
    for (int r = 0; r < sys_->ray_count(); ++r) {
        std::vector<int> row;
        for (int j = 0; j < sys_->n(); ++j) row.push_back(generator_sign(r, j));
        out.push_back(std::move(row));
    }
    return out;
}

std::string QuantumNet::to_json() const {
    nlohmann::json j;
    j["n"] = n();
    j["poly"] = sys_->spec().poly();
    j["gen_signs"] = gen_signs();
    return j.dump();
}

QuantumNet QuantumNet::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::uint32_t poly = j.at("poly").get<std::uint32_t>();
    FieldSpec spec(n, poly);
    auto sys = RaySystem::make(spec, CoordinateMap::standard(spec), TranslationFrame::standard(n));

    auto signs = j.at("gen_signs").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(signs.size()) != sys->ray_count())
        throw std::invalid_argument("gen_signs must list every ray");
    std::vector<std::uint16_t> masks;
    for (const auto& row : signs) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("gen_signs rows must have n entries");
        std::uint16_t m = 0;
        for (int jx = 0; jx < n; ++jx) {
            if (row[jx] != 1 && row[jx] != -1)
                throw std::invalid_argument("signs must be +1 or -1");
            if (row[jx] == -1) m |= 1u << jx;
        }
        masks.push_back(m);
    }
    return QuantumNet(std::move(sys), std::move(masks));
}

QuantumNet all_plus_net(std::shared_ptr<const RaySystem> sys) {
    std::vector<std::uint16_t> masks(sys->ray_count(), 0);
    return QuantumNet(std::move(sys), std::move(masks));
}

QuantumNet random_net(std::shared_ptr<const RaySystem> sys, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint16_t> masks(sys->ray_count(), 0);
    for (auto& m : masks)
        for (int j = 0; j < sys->n(); ++j)
            if (rng() >> 63) m |= 1u << j;
    return QuantumNet(std::move(sys), std::move(masks));
}

NetEnumerator::NetEnumerator(std::shared_ptr<const RaySystem> sys,
                             std::optional<std::vector<int>> restrict_to_rays)
    : sys_(std::move(sys)) {
    if (restrict_to_rays) {
        rays_ = *restrict_to_rays;
    } else {
        for (int r = 0; r < sys_->ray_count(); ++r) rays_.push_back(r);
    }
    total_signs_ = static_cast<int>(rays_.size()) * sys_->n();
    if (total_signs_ > 24)
        throw capability_error("net enumeration capped at 24 signs (2^24 assignments)");
}

QuantumNet NetEnumerator::at(std::uint64_t index) const {
    if (index >= count()) throw std::out_of_range("net index out of range");
    std::vector<std::uint16_t> masks(sys_->ray_count(), 0);
    int t = 0;
    for (int r : rays_)
        for (int j = 0; j < sys_->n(); ++j, ++t)
            if (index >> (total_signs_ - 1 - t) & 1u) masks[r] |= 1u << j;
    return QuantumNet(sys_, std::move(masks));
}

DenseOperator line_projector(const QuantumNet& net, const Line& l) {
    const RaySystem& sys = net.sys();
    require_dense(sys.n(), "line_projector");
    int d = sys.d();
    const PhaseSpaceGeometry& geom = sys.geometry();

    Line ray = geom.ray_of(l.striation);
    DenseOperator p = DenseOperator::Zero(d, d);
    for (const PhasePoint& beta : geom.points_of_line(ray)) {
        if (beta.is_origin()) {
            p += DenseOperator::Identity(d, d);
        } else {
            p += static_cast<double>(net.f_of(beta)) * dense_matrix(sys.realize_point(beta));
        }
    }
    p /= static_cast<double>(d);

    if (l.is_ray()) return p;
    DenseOperator u = dense_matrix(sys.realize_point(geom.anchor_of(l)));
    return u * p * u.adjoint();
}

std::vector<std::vector<DenseOperator>> mub_bases(const QuantumNet& net) {
    const RaySystem& sys = net.sys();
    require_dense(sys.n(), "mub_bases");
    const PhaseSpaceGeometry& geom = sys.geometry();
    std::vector<std::vector<DenseOperator>> bases;
    for (int s = 0; s < geom.striation_count(); ++s) {
        std::vector<DenseOperator> basis;
        for (int i = 0; i < sys.d(); ++i)
            basis.push_back(line_projector(net, {Striation::from_index(s), sys.spec().element_at(i)}));
        bases.push_back(std::move(basis));
    }
    return bases;
}

}  // namespace dwigner
