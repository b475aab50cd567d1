#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibdens/enumeration.hpp"
#include "fibdens/fib_core.hpp"
#include "fibdens/sampler.hpp"
#include "fibdens/statistics.hpp"

namespace py = pybind11;
using namespace fibdens;

namespace {

// Python ints cross the boundary as decimal text so their size is unbounded.
py::int_ to_py(const BigInt& v)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v)
{
    return BigInt(py::str(v).cast<std::string>(), 10);
}

py::tuple to_py(const Rational& r)
{
    return py::make_tuple(to_py(r.numerator()), to_py(r.denominator()));
}

py::tuple to_py(const PairCounts& c)
{
    return py::make_tuple(to_py(c.n00), to_py(c.n01), to_py(c.n10), to_py(c.n11));
}

py::dict to_py(const CorrelationResult& r)
{
    py::dict d;
    d["exact"] = to_py(r.exact);
    d["approx"] = r.approx;
    d["counts"] = to_py(r.counts);
    return d;
}

}  // namespace

PYBIND11_MODULE(_fibdens, m)
{
    m.doc() = "Exact densities and pair correlations of binary strings without adjacent ones";

    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::enum_<Topology>(m, "Topology")
        .value("LINEAR", Topology::Linear)
        .value("CIRCULAR", Topology::Circular);

    m.def("fib", [](std::int64_t n) { return to_py(fib(n)); }, py::arg("n"));
    m.def("lucas", [](std::int64_t n) { return to_py(lucas(n)); }, py::arg("n"));
    m.def("fib_float", &fib_float, py::arg("n"));
    m.def("lucas_float", &lucas_float, py::arg("n"));

    m.def("count_states", [](std::int64_t n, Topology t) { return to_py(count_states(DeviceSpec(n, t))); },
          py::arg("n"), py::arg("topology"));
    m.def(
        "enumerate_states",
        [](std::int64_t n, Topology t) {
            std::vector<std::string> out;
            for (const auto& s : enumerate_states(DeviceSpec(n, t))) {
                out.push_back(s.to_string());
            }
            return out;
        },
        py::arg("n"), py::arg("topology"));
    m.def(
        "unrank_state",
        [](std::int64_t n, Topology t, const py::int_& index) {
            return unrank_state(DeviceSpec(n, t), from_py(index)).to_string();
        },
        py::arg("n"), py::arg("topology"), py::arg("index"));
    m.def(
        "rank_state",
        [](Topology t, const std::string& bits) {
            const auto s = StateWord::from_string(bits);
            return to_py(rank_state(DeviceSpec(static_cast<std::int64_t>(s.length()), t), s));
        },
        py::arg("topology"), py::arg("state"));
    m.def(
        "brute_density", [](std::int64_t n, Topology t, std::int64_t i) { return to_py(brute_density(DeviceSpec(n, t), i)); },
        py::arg("n"), py::arg("topology"), py::arg("i"));
    m.def(
        "brute_pair_counts",
        [](std::int64_t n, Topology t, std::int64_t k, std::int64_t l) {
            return to_py(brute_pair_counts(DeviceSpec(n, t), k, l));
        },
        py::arg("n"), py::arg("topology"), py::arg("k"), py::arg("l"));
    m.def(
        "brute_correlation",
        [](std::int64_t n, Topology t, std::int64_t k, std::int64_t l) {
            return to_py(brute_correlation(DeviceSpec(n, t), k, l));
        },
        py::arg("n"), py::arg("topology"), py::arg("k"), py::arg("l"));

    m.def("density_fib", [](std::int64_t n, std::int64_t i) { return to_py(density_fib(n, i)); }, py::arg("n"),
          py::arg("i"));
    m.def("density_fib_float", &density_fib_float, py::arg("n"), py::arg("i"));
    m.def("limit_density_cell", &limit_density_cell, py::arg("i"));
    m.def("bulk_limit_density", &bulk_limit_density);
    m.def("density_lucas", [](std::int64_t n) { return to_py(density_lucas(n)); }, py::arg("n"));
    m.def("density_lucas_float", &density_lucas_float, py::arg("n"));

    m.def("fib_pair_counts", [](std::int64_t n, std::int64_t k, std::int64_t l) { return to_py(fib_pair_counts(n, k, l)); },
          py::arg("n"), py::arg("k"), py::arg("l"));
    m.def("corr_fib", [](std::int64_t n, std::int64_t k, std::int64_t l) { return to_py(corr_fib(n, k, l)); },
          py::arg("n"), py::arg("k"), py::arg("l"));
    m.def("corr_fib_adjacent", [](std::int64_t n, std::int64_t k) { return to_py(corr_fib_adjacent(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("corr_fib_reflect", [](std::int64_t n, std::int64_t k, std::int64_t l) { return to_py(corr_fib_reflect(n, k, l)); },
          py::arg("n"), py::arg("k"), py::arg("l"));
    m.def("lucas_pair_counts", [](std::int64_t n, std::int64_t k) { return to_py(lucas_pair_counts(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("corr_lucas", [](std::int64_t n, std::int64_t k) { return to_py(corr_lucas(n, k)); }, py::arg("n"),
          py::arg("k"));
    m.def("corr_lucas_nn", [](std::int64_t n) { return to_py(corr_lucas_nn(n)); }, py::arg("n"));
    m.def("corr_lucas_nnn", [](std::int64_t n) { return to_py(corr_lucas_nnn(n)); }, py::arg("n"));
    m.def(
        "density_profile",
        [](std::int64_t n, Topology t) {
            py::list rows;
            for (const auto& r : density_profile(n, t).rows) {
                rows.append(py::make_tuple(r.cell, to_py(r.exact), r.approx));
            }
            return rows;
        },
        py::arg("n"), py::arg("topology"));

    m.def(
        "sample_state",
        [](std::int64_t n, Topology t, std::uint64_t seed, std::uint64_t draw) {
            return sample_state(SampleConfig{DeviceSpec(n, t), 1, seed}, draw).to_string();
        },
        py::arg("n"), py::arg("topology"), py::arg("seed"), py::arg("draw"));
    m.def(
        "estimate_density",
        [](std::int64_t n, Topology t, std::int64_t i, std::uint64_t count, std::uint64_t seed) {
            py::gil_scoped_release release;
            return estimate_density(SampleConfig{DeviceSpec(n, t), count, seed}, i);
        },
        py::arg("n"), py::arg("topology"), py::arg("i"), py::arg("count"), py::arg("seed"));
    m.def(
        "estimate_correlation",
        [](std::int64_t n, Topology t, std::int64_t k, std::int64_t l, std::uint64_t count, std::uint64_t seed) {
            py::gil_scoped_release release;
            return estimate_correlation(SampleConfig{DeviceSpec(n, t), count, seed}, k, l);
        },
        py::arg("n"), py::arg("topology"), py::arg("k"), py::arg("l"), py::arg("count"), py::arg("seed"));

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("mean", &Estimate::mean)
        .def_readonly("std_error", &Estimate::std_error)
        .def_readonly("sample_count", &Estimate::sample_count)
        .def("__repr__", [](const Estimate& e) {
            return "Estimate(mean=" + std::to_string(e.mean) + ", std_error=" + std::to_string(e.std_error) +
                   ", sample_count=" + std::to_string(e.sample_count) + ")";
        });
}
