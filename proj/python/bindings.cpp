#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dwigner/code5.hpp"
#include "dwigner/interference.hpp"
#include "dwigner/wigner.hpp"

namespace py = pybind11;
using namespace dwigner;

namespace {

// Nets keep their ray system alive through this wrapper pair.
struct PyNet {
    QuantumNet net;
};

PyNet make_random_net(int n, std::uint64_t seed) {
    return {random_net(RaySystem::make_standard(n), seed)};
}

PyNet make_all_plus_net(int n) {
    return {all_plus_net(RaySystem::make_standard(n))};
}

PyNet make_localized_net(int n, tuple_t m, tuple_t q_I) {
    return {localized_net_for(RaySystem::make_standard(n), m, q_I)};
}

Eigen::MatrixXd table_as_matrix(const WignerTable& w) {
    Eigen::MatrixXd m(w.d, w.d);
    for (int q = 0; q < w.d; ++q)
        for (int p = 0; p < w.d; ++p) m(q, p) = w.at(q, p);
    return m;
}

QuantumState state_from_object(int n, const py::object& state) {
    if (py::isinstance<py::str>(state)) {
        std::string s = state.cast<std::string>();
        if (s == "bell") return QuantumState::bell_phi_plus();
        if (s == "mixed") return QuantumState::maximally_mixed(n);
        if (s.rfind("comp:", 0) == 0) {
            tuple_t t = 0;
            std::string bits = s.substr(5);
            for (std::size_t j = 0; j < bits.size(); ++j)
                if (bits[j] == '1') t |= 1u << j;
            return QuantumState::computational(n, t);
        }
        throw std::invalid_argument("unknown state spec: " + s);
    }
    return QuantumState::from_vector(state.cast<StateAmplitudes>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "discrete Wigner functions over GF(2^n) phase space";

    py::register_exception<capability_error>(m, "CapabilityError");

    py::class_<PyNet>(m, "QuantumNet")
        .def_property_readonly("n", [](const PyNet& p) { return p.net.n(); })
        .def_property_readonly("d", [](const PyNet& p) { return p.net.d(); })
        .def("f_of", [](const PyNet& p, tuple_t q, tuple_t p_) { return p.net.f_of_tuples(q, p_); },
             py::arg("q_tuple"), py::arg("p_tuple"),
             "eigenvalue f at the phase-space point with these tuples")
        .def("gen_signs", [](const PyNet& p) { return p.net.gen_signs(); })
        .def("to_json", [](const PyNet& p) { return p.net.to_json(); })
        .def_static("from_json", [](const std::string& s) { return PyNet{QuantumNet::from_json(s)}; });

    m.def("random_net", &make_random_net, py::arg("n"), py::arg("seed"));
    m.def("all_plus_net", &make_all_plus_net, py::arg("n"));
    m.def("localized_net_for", &make_localized_net, py::arg("n"), py::arg("m"), py::arg("q_I"));

    m.def("default_poly", &FieldSpec::default_poly, py::arg("n"));
    m.def("gf_mul", [](int n, std::uint32_t a, std::uint32_t b) {
        FieldSpec spec = FieldSpec::with_default_poly(n);
        return spec.mul(FieldElement{a}, FieldElement{b}).bits;
    });
    m.def("gf_inv", [](int n, std::uint32_t a) {
        FieldSpec spec = FieldSpec::with_default_poly(n);
        return spec.inv(FieldElement{a}).bits;
    });

    m.def("geometry_counts", [](int n) {
        PhaseSpaceGeometry geom((FieldSpec::with_default_poly(n)));
        return py::make_tuple(geom.striation_count(), geom.line_count());
    });

    m.def(
        "wigner_table",
        [](const PyNet& net, const py::object& state) {
            return table_as_matrix(wigner_of_state(net.net, state_from_object(net.net.n(), state)));
        },
        py::arg("net"), py::arg("state"),
        "W(q,p) in field-power order; state is a vector, 'bell', 'mixed' or 'comp:<bits>'");

    m.def("bell_table_exact", [](const PyNet& net) {
        WignerTable w = wigner_of_two_term(net.net, 0b11, 0);
        return py::make_tuple(w.num, w.den);
    });

    m.def(
        "interference_profile",
        [](const PyNet& net, tuple_t m) {
            InterferenceProfile prof = interference_profile(net.net, m);
            return py::dict(py::arg("F") = prof.F, py::arg("maxR") = prof.maxR,
                            py::arg("maxI") = prof.maxI,
                            py::arg("entropyR") = prof.entropyR,
                            py::arg("entropyI") = prof.entropyI);
        },
        py::arg("net"), py::arg("m"));

    m.def("normalized_entropy", [](const std::vector<double>& v) {
        return normalized_entropy(v);
    });

    m.def(
        "overlap_search",
        [](int n, int threads) {
            OverlapSearchResult r = overlap_search(n, threads);
            py::dict d;
            d["n"] = r.n;
            d["total_assignments"] = r.total_assignments;
            d["satisfying"] = r.satisfying;
            d["per_m_satisfying"] = r.per_m_satisfying;
            if (r.full_net_total) {
                d["full_net_total"] = *r.full_net_total;
                d["full_net_satisfying"] = *r.full_net_satisfying;
            }
            return d;
        },
        py::arg("n"), py::arg("threads") = 1);

    m.def(
        "overlap_search_randomized",
        [](int n, std::uint64_t samples, std::uint64_t seed, int threads) {
            OverlapSearchResult r = overlap_search_randomized(n, samples, seed, threads);
            return py::dict(py::arg("n") = r.n, py::arg("sampled") = r.total_assignments,
                            py::arg("satisfying") = r.satisfying);
        },
        py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 1);

    m.def(
        "run_average_experiment",
        [](int n_min, int n_max, int nets, std::uint64_t seed, int threads) {
            ExperimentResult res = run_average_experiment(n_min, n_max, nets, seed, threads);
            py::list rows;
            for (const AggregateRow& row : res.aggregates)
                rows.append(py::dict(py::arg("n") = row.n, py::arg("mean_ratio") = row.mean_ratio,
                                     py::arg("mean_dev_ratio") = row.mean_dev_ratio,
                                     py::arg("mean_entropy") = row.mean_entropy,
                                     py::arg("mean_dev_entropy") = row.mean_dev_entropy));
            return py::make_tuple(records_to_csv(res.records), rows);
        },
        py::arg("n_min"), py::arg("n_max"), py::arg("nets_per_n"), py::arg("master_seed"),
        py::arg("threads") = 1);

    m.def("fit_exponential", [](const std::vector<std::pair<int, double>>& pts) {
        FitResult f = fit_exponential(pts);
        return py::dict(py::arg("slope") = f.slope, py::arg("intercept") = f.intercept,
                        py::arg("r_squared") = f.r_squared);
    });

    m.def("code5_report", [](tuple_t p_I) {
        CodeFrame cf = build_code_frame();
        return code5_report_json(cf, p_I);
    }, py::arg("p_I") = 0b00001u);

    m.def("code5_logical_states", []() {
        CodeFrame cf = build_code_frame();
        return py::make_tuple(cf.logical_zero, cf.logical_one);
    });

    m.attr("__version__") = "0.1.0";
}
