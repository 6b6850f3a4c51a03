#include <doctest.h>

#include <set>

#include "dwigner/quantum_net.hpp"

using namespace dwigner;

namespace {

// f for the point with the given component-first tuple labels, e.g.
// f("10","01") is f_(10,01) in the two-qubit ray relations.
int f_label(const QuantumNet& net, const char* q, const char* p) {
    tuple_t qt = 0, pt = 0;
    for (int j = 0; q[j]; ++j)
        if (q[j] == '1') qt |= 1u << j;
    for (int j = 0; p[j]; ++j)
        if (p[j] == '1') pt |= 1u << j;
    return net.f_of_tuples(qt, pt);
}

}  // namespace

TEST_SUITE("quantum_net") {

TEST_CASE("f at the origin is +1 for every net") {
    auto sys = RaySystem::make_standard(2);
    for (std::uint64_t seed : {1ull, 7ull, 99ull})
        CHECK(random_net(sys, seed).f_of({kZero, kZero}) == 1);
}

TEST_CASE("f reproduces the two-qubit ray sign relations for all 1024 nets") {
    auto sys = RaySystem::make_standard(2);
    NetEnumerator en(sys);
    CHECK(en.count() == 1024);

    int case1_hits = 0, case2_hits = 0;
    for (std::uint64_t i = 0; i < en.count(); ++i) {
        QuantumNet net = en.at(i);
        CHECK(f_label(net, "11", "10") == -f_label(net, "10", "01") * f_label(net, "01", "11"));
        CHECK(f_label(net, "11", "01") == -f_label(net, "10", "11") * f_label(net, "01", "10"));
        CHECK(f_label(net, "11", "11") == f_label(net, "10", "10") * f_label(net, "01", "01"));

        if (f_label(net, "10", "01") == 1 && f_label(net, "01", "11") == 1) {
            CHECK(f_label(net, "11", "10") == -1);
            ++case1_hits;
        }
        if (f_label(net, "10", "10") == 1 && f_label(net, "01", "01") == 1) {
            CHECK(f_label(net, "11", "11") == 1);
            ++case2_hits;
        }
    }
    CHECK(case1_hits == 256);
    CHECK(case2_hits == 256);
}

TEST_CASE("f equals the dense trace Tr(P(ray) T(beta)) for sampled nets") {
    for (int n : {1, 2, 3}) {
        auto sys = RaySystem::make_standard(n);
        const PhaseSpaceGeometry& geom = sys->geometry();
        for (std::uint64_t seed : {3ull, 12345ull}) {
            QuantumNet net = random_net(sys, seed);
            for (const PhasePoint& beta : geom.all_points()) {
                if (beta.is_origin()) continue;
                Striation s = Striation::from_index(sys->ray_index_of(beta));
                DenseOperator proj = line_projector(net, geom.ray_of(s));
                std::complex<double> tr =
                    (proj * dense_matrix(sys->realize_point(beta))).trace();
                CHECK(std::abs(tr.imag()) < 1e-12);
                CHECK(tr.real() == doctest::Approx(net.f_of(beta)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("random nets are deterministic in the seed and free in n(d+1) signs") {
    auto sys = RaySystem::make_standard(2);
    CHECK(random_net(sys, 42) == random_net(sys, 42));

    int sign_slots = sys->ray_count() * sys->n();
    CHECK(sign_slots == 10);

    // with 68 free signs at n=4, 100 seeds collide with negligible probability
    auto sys4 = RaySystem::make_standard(4);
    std::set<std::string> distinct;
    for (int i = 0; i < 100; ++i) distinct.insert(random_net(sys4, 1000 + i).to_json());
    CHECK(distinct.size() == 100);
}

TEST_CASE("enumeration counts and lexicographic order") {
    auto sys = RaySystem::make_standard(2);
    CHECK(NetEnumerator(sys).count() == 1024);  // 2^(n(d+1))

    // non-vertical rays with the horizontal gauge fixed: 3 oblique rays
    NetEnumerator restricted(sys, std::vector<int>{2, 3, 4});
    CHECK(restricted.count() == 64);
    CHECK(restricted.at(0) == all_plus_net(sys));
    // last index flips every enumerated sign
    QuantumNet last = restricted.at(63);
    for (int r : {2, 3, 4})
        for (int j = 0; j < 2; ++j) CHECK(last.generator_sign(r, j) == -1);
    CHECK(last.sign_mask(0) == 0);
    CHECK(last.sign_mask(1) == 0);

    auto sys3 = RaySystem::make_standard(3);
    NetEnumerator obl3(sys3, std::vector<int>{2, 3, 4, 5, 6, 7, 8});
    CHECK(obl3.count() == 2097152);  // 2^21

    CHECK_THROWS_AS(NetEnumerator(RaySystem::make_standard(3)), capability_error);
}

TEST_CASE("line projectors are rank-one eigenprojectors") {
    // n=1 horizontal ray, all-plus: |+><+|
    auto sys1 = RaySystem::make_standard(1);
    QuantumNet plus1 = all_plus_net(sys1);
    DenseOperator p = line_projector(plus1, {Striation::horizontal(), kZero});
    DenseOperator expect(2, 2);
    expect << 0.5, 0.5, 0.5, 0.5;
    CHECK((p - expect).cwiseAbs().maxCoeff() < 1e-12);

    // vertical ray, all-plus: |0...0><0...0|
    auto sys2 = RaySystem::make_standard(2);
    QuantumNet plus2 = all_plus_net(sys2);
    DenseOperator pv = line_projector(plus2, {Striation::vertical(), kZero});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(pv(i, j) - ((i == 0 && j == 0) ? 1.0 : 0.0)) < 1e-12);

    // oblique ray: trace 1, idempotent, eigenvector of both generators with
    // the chosen signs
    QuantumNet net = random_net(sys2, 77);
    DenseOperator po = line_projector(net, {Striation::oblique(0), kZero});
    CHECK(std::abs(po.trace().real() - 1.0) < 1e-12);
    CHECK((po * po - po).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((po - po.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    int ray = 2;
    for (int j = 0; j < 2; ++j) {
        DenseOperator g = dense_matrix(sys2->ray_generators(ray)[j]);
        double s = net.generator_sign(ray, j);
        CHECK((g * po - s * po).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("projector covariance and anchor independence") {
    auto sys = RaySystem::make_standard(2);
    QuantumNet net = random_net(sys, 5);
    const PhaseSpaceGeometry& geom = sys->geometry();

    for (const Line& l : geom.all_lines()) {
        DenseOperator p = line_projector(net, l);
        // any point of the line works as a translation anchor
        DenseOperator pray = line_projector(net, geom.ray_of(l.striation));
        for (const PhasePoint& delta : geom.points_of_line(l)) {
            DenseOperator u = dense_matrix(sys->realize_point(delta));
            CHECK((u * pray * u.adjoint() - p).cwiseAbs().maxCoeff() < 1e-12);
        }
        // covariance: P(l + delta) = T(delta) P(l) T(delta)^dag
        for (const PhasePoint& delta :
             {PhasePoint{kOne, kZero}, PhasePoint{sys->spec().generator(), kOne}}) {
            DenseOperator lhs = line_projector(net, geom.translate_line(l, delta));
            DenseOperator u = dense_matrix(sys->realize_point(delta));
            CHECK((lhs - u * p * u.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("the d+1 bases are mutually unbiased") {
    auto sys = RaySystem::make_standard(2);
    QuantumNet net = random_net(sys, 11);
    auto bases = mub_bases(net);
    REQUIRE(bases.size() == 5);

    for (std::size_t s1 = 0; s1 < bases.size(); ++s1)
        for (std::size_t s2 = 0; s2 < bases.size(); ++s2)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    double overlap = (bases[s1][i] * bases[s2][j]).trace().real();
                    double expect = s1 == s2 ? (i == j ? 1.0 : 0.0) : 0.25;
                    CHECK(overlap == doctest::Approx(expect).epsilon(1e-10));
                }

    // vertical striation is the computational basis (indexed in intercept
    // order): every projector is diagonal with a single unit entry
    for (int i = 0; i < 4; ++i) {
        int ones = 0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                std::complex<double> v = bases[0][i](r, c);
                if (r != c) {
                    CHECK(std::abs(v) < 1e-12);
                } else if (std::abs(v - 1.0) < 1e-12) {
                    ++ones;
                } else {
                    CHECK(std::abs(v) < 1e-12);
                }
            }
        CHECK(ones == 1);
    }
}

TEST_CASE("json round-trip is exact") {
    auto sys = RaySystem::make_standard(3);
    QuantumNet net = random_net(sys, 2024);
    QuantumNet back = QuantumNet::from_json(net.to_json());
    CHECK(back == net);
    CHECK(back.to_json() == net.to_json());

    auto signs = net.gen_signs();
    CHECK(signs.size() == 9);
    for (const auto& row : signs) CHECK(row.size() == 3);
}

}  // TEST_SUITE
