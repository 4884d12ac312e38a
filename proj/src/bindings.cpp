#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rhcodec/bench.hpp"
#include "rhcodec/decode.hpp"
#include "rhcodec/density.hpp"
#include "rhcodec/errors.hpp"
#include "rhcodec/experiment.hpp"
#include "rhcodec/io.hpp"
#include "rhcodec/version.hpp"
#include "rhcodec/window_code.hpp"

namespace py = pybind11;
using namespace rhcodec;

namespace {

std::vector<Vec> mat_to_rows(const Mat& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

SymbolSeq make_seq(std::vector<Vec> y, std::vector<Vec> u) {
    SymbolSeq s;
    s.y = std::move(y);
    s.u = std::move(u);
    if (s.y.size() != s.u.size()) throw dimension_error("y and u need the same length");
    return s;
}

py::dict decode_result_dict(const DecodeResult& r) {
    py::dict d;
    d["u"] = r.u;
    d["y"] = r.codeword.y;
    d["codeword_u"] = r.codeword.u;
    d["cost"] = r.cost;
    d["horizon_cost"] = r.horizon_cost;
    d["tau"] = r.tau;
    d["step_costs"] = r.step_costs;
    py::list ties;
    for (const TieEvent& e : r.tie_events) ties.append(py::make_tuple(e.t, e.tie_count));
    d["tie_events"] = ties;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-field convolutional codes with receding-horizon decoding";
    m.attr("__version__") = RHCODEC_VERSION;

    // Translators run newest-first, so the subclasses must be registered
    // after the base to be matched before it.
    auto& base_exc = py::register_exception<rhcodec::error>(m, "RhcodecError");
    py::register_exception<budget_exceeded>(m, "BudgetExceeded", base_exc.ptr());
    py::register_exception<invariant_violation>(m, "InvariantViolation", base_exc.ptr());

    py::class_<ConvCode>(m, "ConvCode")
        .def(py::init([](std::uint32_t p, std::vector<Vec> A, std::vector<Vec> B,
                         std::vector<Vec> C, std::vector<Vec> D) {
                 Field f(p);
                 std::size_t delta = A.size();
                 std::size_t k = D.empty() ? 0 : D[0].size();
                 std::size_t nk = D.size();
                 return ConvCode(f, Mat::from_rows(f, A, delta), Mat::from_rows(f, B, k),
                                 Mat::from_rows(f, C, delta), Mat::from_rows(f, D, k));
             }),
             py::arg("p"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"))
        .def_property_readonly("p", [](const ConvCode& c) { return c.field().p(); })
        .def_property_readonly("n", &ConvCode::n)
        .def_property_readonly("k", &ConvCode::k)
        .def_property_readonly("delta", &ConvCode::delta)
        .def_property_readonly("kappa", [](const ConvCode& c) { return c.kappa(); })
        .def("encode",
             [](const ConvCode& c, const std::vector<Vec>& inputs) {
                 ConvCode::Encoded e = c.encode(inputs);
                 py::dict d;
                 d["y"] = e.seq.y;
                 d["u"] = e.seq.u;
                 d["final_state"] = e.final_state;
                 return d;
             })
        .def("zero_return_extension",
             [](const ConvCode& c, const Vec& x) { return c.zero_return_extension(x); })
        .def("is_codeword", [](const ConvCode& c, std::vector<Vec> y, std::vector<Vec> u) {
            return c.is_codeword(make_seq(std::move(y), std::move(u)));
        });

    py::class_<WindowCode>(m, "WindowCode")
        .def(py::init([](const ConvCode& code, std::size_t N, std::uint64_t budget) {
                 return WindowCode(code, N, Budget{budget});
             }),
             py::arg("code"), py::arg("N"), py::arg("budget") = Budget{}.max_enumeration,
             py::keep_alive<1, 2>())
        .def_property_readonly("window", &WindowCode::window)
        .def_property_readonly("block_length", &WindowCode::block_length)
        .def_property_readonly("dim", &WindowCode::dim)
        .def_property_readonly("min_distance", &WindowCode::min_distance)
        .def_property_readonly("covering_radius", &WindowCode::covering_radius)
        .def("generator", [](const WindowCode& w) { return mat_to_rows(w.generator()); })
        .def("check", [](const WindowCode& w) { return mat_to_rows(w.check()); })
        .def("ml_decode",
             [](const WindowCode& w, const Vec& z) {
                 MLDecodeResult r = w.ml_decode(z);
                 py::dict d;
                 d["codeword"] = r.codeword;
                 d["error"] = r.error;
                 d["error_weight"] = r.error_weight;
                 d["tie_count"] = r.tie_count;
                 return d;
             })
        .def("nearest_codewords", &WindowCode::nearest_codewords)
        .def("admissible_capability", [](const WindowCode& w, std::size_t L) {
            AdmissibleCapability c = admissible_capability(w, L);
            py::dict d;
            d["protected_indices"] = c.protected_indices;
            d["d_prime"] = c.d_prime;
            d["meets_distance_condition"] = c.meets_distance_condition;
            return d;
        });

    m.def("load_code", [](const std::string& path) {
        CodeSpec spec = load_code_spec(path);
        return spec.code;
    });
    m.def("parse_code", [](const std::string& text) {
        CodeSpec spec = parse_code_spec(text);
        return spec.code;
    });

    m.def(
        "receding_horizon_decode",
        [](const ConvCode& code, std::vector<Vec> y, std::vector<Vec> u, std::size_t N,
           std::size_t L, std::uint64_t budget) {
            return decode_result_dict(receding_horizon_decode(
                code, make_seq(std::move(y), std::move(u)), HorizonParams{N, L}, Budget{budget}));
        },
        py::arg("code"), py::arg("y"), py::arg("u"), py::arg("N"), py::arg("L") = 1,
        py::arg("budget") = Budget{}.max_enumeration);

    m.def(
        "exact_decode",
        [](const ConvCode& code, std::vector<Vec> y, std::vector<Vec> u, std::uint64_t budget) {
            return decode_result_dict(
                exact_decode(code, make_seq(std::move(y), std::move(u)), Budget{budget}));
        },
        py::arg("code"), py::arg("y"), py::arg("u"), py::arg("budget") = Budget{}.max_enumeration);

    m.def(
        "multiplicity_bound",
        [](const ConvCode& code, std::size_t N, std::size_t Delta, std::size_t M,
           std::uint64_t budget) {
            Rational r = multiplicity_bound(code, N, Delta, M, Budget{budget});
            return py::make_tuple(rational_str(r), rational_double(r));
        },
        py::arg("code"), py::arg("N"), py::arg("Delta"), py::arg("M"),
        py::arg("budget") = Budget{}.max_enumeration);

    m.def(
        "density",
        [](std::size_t n, std::size_t k, long d, std::uint32_t p) {
            DensityStats s = density_stats(n, k, d, Field(p));
            return py::make_tuple(rational_str(s.density), rational_double(s.density));
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("p"));
}
