#include "dwigner/finite_field.hpp"

#include <bit>

namespace dwigner {

std::uint32_t gf2_mul_reduce(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int n) {
    // Carry-less multiply, then reduce mod poly from the top down.
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1u) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int bit = 2 * n - 2; bit >= n; --bit) {
        if (acc >> bit & 1u) acc ^= static_cast<std::uint64_t>(poly) << (bit - n);
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t FieldSpec::default_poly(int n) {
    // Standard primitive polynomials, one per n. n=1 degenerates to GF(2)
    // with poly x+1.
    static constexpr std::uint32_t polys[kMaxQubits + 1] = {
        0,
        0b11,                // x + 1
        0b111,               // x^2 + x + 1
        0b1011,              // x^3 + x + 1
        0b10011,             // x^4 + x + 1
        0b100101,            // x^5 + x^2 + 1
        0b1000011,           // x^6 + x + 1
        0b10000011,          // x^7 + x + 1
        0b100011101,         // x^8 + x^4 + x^3 + x^2 + 1
        0b1000010001,        // x^9 + x^4 + 1
        0b10000001001,       // x^10 + x^3 + 1
        0b100000000101,      // x^11 + x^2 + 1
        0b1000001010011,     // x^12 + x^6 + x^4 + x + 1
    };
    if (n < 1 || n > kMaxQubits) throw capability_error("field size: n must be in 1..12");
    return polys[n];
}

FieldSpec FieldSpec::with_default_poly(int n) {
    return FieldSpec(n, default_poly(n));
}

FieldSpec::FieldSpec(int n, std::uint32_t poly) : n_(n), poly_(poly) {
    if (n < 1 || n > kMaxQubits) throw capability_error("field size: n must be in 1..12");
    if (poly >> n != 1u) throw std::invalid_argument("poly must have degree exactly n");
    d_ = 1 << n;

    // x mod poly (for n=1 this reduces x to 1).
    std::uint32_t g = (n == 1) ? (poly & 1u ? 1u : 0u) : 0b10u;
    gen_ = FieldElement{g};

    // Walk the powers of the generator; primitivity means the first d-1
    // powers are distinct and nonzero.
    exp_.assign(d_ - 1, kZero);
    log_.assign(d_, -1);
    std::uint32_t acc = 1;
    for (int j = 0; j < d_ - 1; ++j) {
        if (acc == 0 || log_[acc] != -1)
            throw std::invalid_argument("poly is not primitive: x does not generate GF(2^n)*");
        exp_[j] = FieldElement{acc};
        log_[acc] = j;
        acc = gf2_mul_reduce(acc, g, poly, n);
    }
    if (acc != 1u) throw std::invalid_argument("poly is not primitive: x^(d-1) != 1");
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return kZero;
    return exp_[(log_[a.bits] + log_[b.bits]) % (d_ - 1)];
}

FieldElement FieldSpec::inv(FieldElement a) const {
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
    return exp_[(d_ - 1 - log_[a.bits]) % (d_ - 1)];
}

FieldElement FieldSpec::pow(FieldElement a, int k) const {
    if (a.is_zero()) {
        if (k == 0) return kOne;
        if (k < 0) throw std::domain_error("negative power of zero");
        return kZero;
    }
    long long e = static_cast<long long>(log_[a.bits]) * k;
    long long m = d_ - 1;
    return exp_[static_cast<int>(((e % m) + m) % m)];
}

int FieldSpec::power_of(FieldElement a) const {
    if (a.is_zero()) throw std::domain_error("zero is not a power of the generator");
    return log_[a.bits];
}

FieldElement FieldSpec::element_at(int order_index) const {
    if (order_index == 0) return kZero;
    return exp_[order_index - 1];
}

int FieldSpec::order_index_of(FieldElement a) const {
    if (a.is_zero()) return 0;
    return 1 + log_[a.bits];
}

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m(n);
    for (int i = 0; i < n; ++i) m.rows_[i] = 1u << i;
    return m;
}

BinaryMatrix BinaryMatrix::companion(const FieldSpec& spec) {
    int n = spec.n();
    BinaryMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) m.rows_[i] = 1u << (i + 1);
    // x^n folds back to the low-order coefficients of poly.
    m.rows_[n - 1] = spec.poly() & ((1u << n) - 1);
    return m;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (get(i, j)) t.rows_[j] |= 1u << i;
    return t;
}

BinaryMatrix BinaryMatrix::mul(const BinaryMatrix& o) const {
    BinaryMatrix r(n_);
    for (int i = 0; i < n_; ++i) r.rows_[i] = o.apply(rows_[i]);
    return r;
}

BinaryMatrix BinaryMatrix::pow(long long k) const {
    BinaryMatrix r = identity(n_);
    BinaryMatrix base = *this;
    while (k > 0) {
        if (k & 1) r = r.mul(base);
        base = base.mul(base);
        k >>= 1;
    }
    return r;
}

tuple_t BinaryMatrix::apply(tuple_t v) const {
    std::uint32_t r = 0;
    std::uint32_t rest = v;
    while (rest) {
        int i = std::countr_zero(rest);
        r ^= rows_[i];
        rest &= rest - 1;
    }
    return r;
}

bool BinaryMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (rows_[i] != (1u << i)) return false;
    return true;
}

int BinaryMatrix::rank() const {
    std::vector<std::uint32_t> rows = rows_;
    int rank = 0;
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int i = rank; i < n_; ++i)
            if (rows[i] >> col & 1u) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < n_; ++i)
            if (i != rank && (rows[i] >> col & 1u)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

CoordinateMap::CoordinateMap(const FieldSpec& spec, tuple_t q0, tuple_t p0)
    : spec_(spec), q0_(q0), p0_(p0) {
    if (q0 == 0 || p0 == 0) throw std::invalid_argument("base tuples q0, p0 must be nonzero");
    int d = spec_.d();
    std::uint32_t mask = static_cast<std::uint32_t>(d - 1);
    if ((q0 & ~mask) || (p0 & ~mask))
        throw std::invalid_argument("base tuples exceed n bits");

    BinaryMatrix m = BinaryMatrix::companion(spec_);
    BinaryMatrix mt = m.transpose();

    q_tuple_.assign(d, 0);
    p_tuple_.assign(d, 0);
    q_elem_.assign(d, kZero);
    p_elem_.assign(d, kZero);
    std::vector<bool> seen_q(d, false), seen_p(d, false);
    seen_q[0] = seen_p[0] = true;

    tuple_t vq = q0, vp = p0;
    for (int j = 0; j < d - 1; ++j) {
        FieldElement e = spec_.element_from_power(j);
        q_tuple_[e.bits] = vq;
        p_tuple_[e.bits] = vp;
        if (seen_q[vq] || seen_p[vp])
            throw std::invalid_argument("coordinate table is not a bijection");
        seen_q[vq] = seen_p[vp] = true;
        q_elem_[vq] = e;
        p_elem_[vp] = e;
        vq = m.apply(vq);
        vp = mt.apply(vp);
    }
}

}  // namespace dwigner
