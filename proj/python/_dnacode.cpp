#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dnacode/app.hpp"
#include "dnacode/dup.hpp"
#include "dnacode/error.hpp"
#include "dnacode/multidel.hpp"
#include "dnacode/sliced.hpp"
#include "dnacode/vt.hpp"

namespace py = pybind11;
using namespace dnacode;

namespace {

Seq bits(const std::string& s) { return Seq::binary(s); }

Seq parse(const std::string& s, const std::string& alphabet)
{
    return Seq::parse(s, alphabet.empty() ? alphabets::detect(s) : alphabets::by_name(alphabet));
}

py::object big(const boost::multiprecision::cpp_int& v)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::vector<std::string> strs(const std::vector<Seq>& v)
{
    std::vector<std::string> out;
    for (const auto& s : v)
        out.push_back(s.str());
    return out;
}

} // namespace

PYBIND11_MODULE(_dnacode, m)
{
    m.doc() = "Codes for DNA storage channels";

    py::exception<Error>(m, "DnacodeError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            // instances carry the library's stable error code
            py::object type = py::module_::import("dnacode._dnacode").attr("DnacodeError");
            py::object exc = type(e.what());
            exc.attr("code") = e.code();
            PyErr_SetObject(type.ptr(), exc.ptr());
        }
    });

    // single deletion
    m.def("vt_encode", [](const std::string& data, std::size_t n, std::size_t a) { return vt::vt_encode(bits(data), n, a).str(); },
          py::arg("data"), py::arg("n"), py::arg("a") = 0);
    m.def("vt_decode", [](const std::string& y, std::size_t n, std::size_t a) { return vt::vt_decode(bits(y), {n, a}).str(); },
          py::arg("y"), py::arg("n"), py::arg("a") = 0);
    m.def("vt_syndrome", [](const std::string& c) { return vt::vt_syndrome(bits(c), {c.size(), 0}); }, py::arg("c"));
    m.def("vt_data_length", &vt::vt_data_length, py::arg("n"));

    // multiple deletions
    m.def(
        "weighted_sums",
        [](const std::string& c, std::size_t t) {
            const auto s = multidel::weighted_sums(bits(c), t);
            py::list residues, moduli;
            for (std::size_t i = 0; i < s.residues.size(); ++i) {
                residues.append(big(s.residues[i]));
                moduli.append(big(s.moduli[i]));
            }
            return py::make_tuple(residues, moduli);
        },
        py::arg("c"), py::arg("t") = 2);
    m.def("t_del_encode", [](const std::string& d, std::size_t t) { return multidel::encode_t_del(bits(d), t).str(); },
          py::arg("data"), py::arg("t") = 2);
    m.def("t_del_decode",
          [](const std::string& y, std::size_t t, std::size_t n) { return multidel::decode_t_del(bits(y), t, n).str(); },
          py::arg("y"), py::arg("t"), py::arg("n"));
    m.def("t_del_redundancy", [](std::size_t n, std::size_t t) { return multidel::t_del_layout(n, t).redundancy(); },
          py::arg("n"), py::arg("t") = 2);

    // sets of strands
    m.def("set_redundancy", &sliced::set_redundancy, py::arg("code_size_log2"), py::arg("M"), py::arg("L"));
    m.def(
        "data_indexed_layout",
        [](std::size_t M, std::size_t L, std::size_t t) {
            const auto lay = sliced::data_indexed_layout(M, L, t);
            py::dict d;
            d["p"] = lay.p;
            d["index_bits"] = lay.index_bits;
            d["payload_bits"] = lay.payload_bits;
            d["parity_bits"] = lay.parity_bits;
            d["data_bits"] = lay.data_bits;
            d["redundancy"] = lay.redundancy();
            return d;
        },
        py::arg("M"), py::arg("L"), py::arg("t") = 1);
    m.def(
        "sliced_encode",
        [](const std::string& data, std::size_t M, std::size_t L, std::size_t t) {
            return strs(sliced::encode_data_indexed(bits(data), M, L, t).sequences);
        },
        py::arg("data"), py::arg("M"), py::arg("L"), py::arg("t") = 1);
    m.def(
        "sliced_decode",
        [](const std::vector<std::string>& reads, std::size_t M, std::size_t L, std::size_t t) {
            sliced::SlicedRead r;
            for (const auto& s : reads)
                r.reads.push_back(bits(s));
            return sliced::decode_data_indexed(r, M, L, t).str();
        },
        py::arg("reads"), py::arg("M"), py::arg("L"), py::arg("t") = 1);

    // duplications
    m.def("tandem_root",
          [](const std::string& x, std::size_t k, const std::string& alphabet) {
              return dup::tandem_root_fixed_k(parse(x, alphabet), k).str();
          },
          py::arg("x"), py::arg("k"), py::arg("alphabet") = "");
    m.def(
        "tandem_roots",
        [](const std::string& x, const std::string& alphabet) {
            const auto rep = dup::roots_unbounded_tandem(parse(x, alphabet));
            std::vector<std::string> roots;
            for (const auto& r : rep.roots)
                roots.push_back(r.str());
            return py::make_tuple(roots, rep.min_steps);
        },
        py::arg("x"), py::arg("alphabet") = "");
    m.def(
        "polya_exact_dist",
        [](const std::string& x, const std::string& rule, std::size_t k, std::size_t steps) {
            const auto fraction = py::module_::import("fractions").attr("Fraction");
            py::dict out;
            for (const auto& [w, p] : dup::polya_exact_dist({parse(x, ""), {dup::dup_kind_from_string(rule), k}, steps, 0}))
                out[py::str(w.str())] = fraction(p.str());
            return out;
        },
        py::arg("x"), py::arg("rule"), py::arg("k"), py::arg("steps"));
    m.def("irreducible_count",
          [](std::size_t n, std::size_t q, std::size_t k) { return big(dup::irreducible_count(n, q, k)); },
          py::arg("n"), py::arg("q"), py::arg("k"));
    m.def("distance_to_root_table", &dup::distance_to_root_table, py::arg("n_max"));

    // dispatcher
    m.def(
        "_run",
        [](const std::string& module, const std::string& operation, const std::string& parameters,
           std::uint64_t seed, const std::string& format, const std::string& alphabet, const std::string& input) {
            app::ExperimentSpec spec;
            spec.module = module;
            spec.operation = operation;
            spec.parameters = app::json::parse(parameters);
            spec.seed = seed;
            spec.format = app::format_from_string(format);
            spec.alphabet = alphabet;
            return app::run(spec, input);
        },
        py::arg("module"), py::arg("operation"), py::arg("parameters"), py::arg("seed"), py::arg("format"),
        py::arg("alphabet"), py::arg("input"));
    m.def("reproduce", [] {
        py::list rows;
        for (const auto& r : app::reproduce_examples()) {
            py::dict d;
            d["group"] = r.group;
            d["name"] = r.name;
            d["expected"] = r.expected;
            d["computed"] = r.computed;
            d["pass"] = r.pass;
            rows.append(d);
        }
        return rows;
    });
}
