#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scldpc/alist.hpp"
#include "scldpc/coupled_code.hpp"
#include "scldpc/cycle_check.hpp"
#include "scldpc/exponent_matrix.hpp"
#include "scldpc/good_sequence.hpp"
#include "scldpc/lifting.hpp"
#include "scldpc/simulator.hpp"

namespace py = pybind11;
using namespace scldpc;

namespace {

std::vector<std::pair<int, int>> matrix_ones(const BinaryMatrix& m) {
    std::vector<std::pair<int, int>> out;
    out.reserve(m.ones_count());
    for (int r = 0; r < m.rows(); ++r) {
        for (std::int32_t c : m.row(r)) {
            out.emplace_back(r, c);
        }
    }
    return out;
}

std::vector<std::vector<int>> matrix_rows(const ExponentMatrix& e) {
    std::vector<std::vector<int>> rows(e.p(), std::vector<int>(e.q()));
    for (int i = 1; i <= e.p(); ++i) {
        for (int j = 1; j <= e.q(); ++j) {
            rows[i - 1][j - 1] = e.entry(i, j);
        }
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "4-cycle free spatially coupled LDPC code construction and simulation";

    py::class_<BinaryMatrix>(m, "BinaryMatrix")
        .def(py::init<int, int>(), py::arg("rows"), py::arg("cols"))
        .def_static("from_ones", &BinaryMatrix::from_ones, py::arg("rows"), py::arg("cols"),
                    py::arg("ones"))
        .def_property_readonly("rows", &BinaryMatrix::rows)
        .def_property_readonly("cols", &BinaryMatrix::cols)
        .def("ones_count", &BinaryMatrix::ones_count)
        .def("at", &BinaryMatrix::at, py::arg("row"), py::arg("col"))
        .def("set", &BinaryMatrix::set, py::arg("row"), py::arg("col"))
        .def("ones", &matrix_ones)
        .def("__eq__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a == b; })
        .def("__repr__", [](const BinaryMatrix& m) {
            return "BinaryMatrix(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                   ", ones=" + std::to_string(m.ones_count()) + ")";
        });

    py::class_<ExponentMatrix>(m, "ExponentMatrix")
        .def(py::init([](const std::vector<std::vector<int>>& rows) {
                 return ExponentMatrix::from_rows(rows);
             }),
             py::arg("rows"))
        .def_property_readonly("p", &ExponentMatrix::p)
        .def_property_readonly("q", &ExponentMatrix::q)
        .def("entry", &ExponentMatrix::entry, py::arg("i"), py::arg("j"),
             "1-based entry access")
        .def("max_entry", &ExponentMatrix::max_entry)
        .def("to_rows", &matrix_rows)
        .def("__eq__",
             [](const ExponentMatrix& a, const ExponentMatrix& b) { return a == b; })
        .def("__repr__", [](const ExponentMatrix& e) {
            return "ExponentMatrix(" + std::to_string(e.p()) + "x" + std::to_string(e.q()) + ")";
        });

    py::class_<GoodSequence>(m, "GoodSequence")
        .def_static("make", &GoodSequence::make, py::arg("values"), py::arg("p"), py::arg("q"))
        .def_readonly("values", &GoodSequence::values)
        .def_readonly("p", &GoodSequence::p)
        .def_readonly("q", &GoodSequence::q)
        .def("moe", &GoodSequence::moe);

    m.def("is_good_sequence", &is_good_sequence, py::arg("values"), py::arg("p"), py::arg("q"));
    m.def("moe", &moe, py::arg("values"));
    m.def("generate_good_sequence", &generate_good_sequence, py::arg("p"), py::arg("q"),
          py::arg("w"));
    m.def(
        "find_min_moe",
        [](int p, int q, int w_cap) -> std::optional<std::pair<int, std::vector<int>>> {
            if (auto found = find_min_moe(p, q, w_cap)) {
                return std::make_pair(found->w, found->sequence);
            }
            return std::nullopt;
        },
        py::arg("p"), py::arg("q"), py::arg("w_cap"), "returns (w, sequence) or None");

    m.def("matrix_from_sequence",
          py::overload_cast<const std::vector<int>&, int, int>(&matrix_from_sequence),
          py::arg("values"), py::arg("p"), py::arg("q"));
    m.def("is_four_cycle_free", &is_four_cycle_free, py::arg("e"));
    m.def("soe", &soe, py::arg("e"));
    m.def("incidence_matrix", &incidence_matrix, py::arg("e"), py::arg("value"));
    m.def("prime_after", &prime_after, py::arg("q"));
    m.def("karimi_matrix", &karimi_matrix, py::arg("p"), py::arg("q"));
    m.def("to_text", &to_text, py::arg("e"));
    m.def("parse_matrix_text", &parse_matrix_text, py::arg("text"));

    py::class_<IndexSet>(m, "IndexSet")
        .def_static("of", &IndexSet::of, py::arg("indices"))
        .def_property_readonly("indices", &IndexSet::indices)
        .def_property_readonly("width", &IndexSet::width)
        .def("__repr__", [](const IndexSet& s) {
            std::string out = "IndexSet([";
            for (std::size_t k = 0; k < s.indices().size(); ++k) {
                out += (k ? "," : "") + std::to_string(s.indices()[k]);
            }
            return out + "])";
        });

    py::class_<CoupledCode>(m, "CoupledCode")
        .def_readonly("exponents", &CoupledCode::exponents)
        .def_readonly("index_set", &CoupledCode::index_set)
        .def_readonly("components", &CoupledCode::components)
        .def_property_readonly("p", &CoupledCode::p)
        .def_property_readonly("q", &CoupledCode::q)
        .def_property_readonly("w", &CoupledCode::w);

    m.def("build_coupled_code", &build_coupled_code, py::arg("e"), py::arg("index_set"));
    m.def("terminated_pcm", &terminated_pcm, py::arg("code"), py::arg("coupling_length"));
    m.def("representative_block", &representative_block, py::arg("code"));
    m.def("rep_index_matrix", &rep_index_matrix, py::arg("index_set"));
    m.def("h_is_four_cycle_free", &h_is_four_cycle_free, py::arg("e"), py::arg("index_set"));

    py::class_<Rational>(m, "Rational")
        .def_readonly("num", &Rational::num)
        .def_readonly("den", &Rational::den)
        .def("to_double", &Rational::to_double)
        .def("to_decimal", &Rational::to_decimal, py::arg("places") = 6)
        .def("__repr__", [](const Rational& r) { return r.to_string(); })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; });

    m.def("design_rate", &design_rate, py::arg("p"), py::arg("q"), py::arg("coupling_length"),
          py::arg("w"));
    m.def("design_rate_limit", &design_rate_limit, py::arg("p"), py::arg("q"));
    m.def("constraint_length", &constraint_length, py::arg("p"), py::arg("w"));

    m.def("has_four_cycle", &has_four_cycle, py::arg("m"));

    py::class_<GirthResult>(m, "GirthResult")
        .def_property_readonly("exact",
                               [](const GirthResult& g) {
                                   return g.kind == GirthResult::Kind::Exact;
                               })
        .def_property_readonly("infinite",
                               [](const GirthResult& g) {
                                   return g.kind == GirthResult::Kind::Infinite;
                               })
        .def_readonly("value", &GirthResult::value)
        .def("is_at_least", &GirthResult::is_at_least, py::arg("g"))
        .def("__repr__", [](const GirthResult& g) {
            if (g.kind == GirthResult::Kind::Infinite) {
                return std::string("inf");
            }
            if (g.kind == GirthResult::Kind::AtLeast) {
                return ">= " + std::to_string(g.value);
            }
            return std::to_string(g.value);
        });

    m.def("girth", &girth, py::arg("m"), py::arg("bound") = 12);
    m.def("qc_exponent_girth6", &qc_exponent_girth6, py::arg("e"), py::arg("n"));

    py::class_<APMSpec>(m, "APMSpec")
        .def(py::init([](int s, int a, int m_) {
                 APMSpec spec{s, a, m_};
                 spec.validate();
                 return spec;
             }),
             py::arg("s"), py::arg("a"), py::arg("m"))
        .def_readonly("s", &APMSpec::s)
        .def_readonly("a", &APMSpec::a)
        .def_readonly("m", &APMSpec::m);

    py::class_<LiftedCode>(m, "LiftedCode")
        .def_readonly("base", &LiftedCode::base)
        .def_readonly("m", &LiftedCode::m)
        .def_readonly("specs", &LiftedCode::specs);

    m.def("apm_matrix", &apm_matrix, py::arg("spec"));
    m.def("cpm_lift", &cpm_lift, py::arg("e"), py::arg("n"));
    m.def("lift", &lift, py::arg("code"));
    m.def("random_apm_assignment", &random_apm_assignment, py::arg("base"), py::arg("m"),
          py::arg("seed"), py::arg("max_tries"));

    m.def("export_alist", &export_alist, py::arg("m"));
    m.def("import_alist", &import_alist, py::arg("text"));

    py::class_<BlockStructure>(m, "BlockStructure")
        .def(py::init([](int p, int q, int L, int w, int mm) {
                 return BlockStructure{p, q, L, w, mm};
             }),
             py::arg("p"), py::arg("q"), py::arg("L"), py::arg("w"), py::arg("m") = 1)
        .def_readonly("p", &BlockStructure::p)
        .def_readonly("q", &BlockStructure::q)
        .def_readonly("L", &BlockStructure::L)
        .def_readonly("w", &BlockStructure::w)
        .def_readonly("m", &BlockStructure::m);

    py::enum_<DecoderKind>(m, "DecoderKind")
        .value("Flooding", DecoderKind::Flooding)
        .value("SlidingWindow", DecoderKind::SlidingWindow);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("code", &SimConfig::code)
        .def_readwrite("blocks", &SimConfig::blocks)
        .def_readwrite("ebn0_grid", &SimConfig::ebn0_grid)
        .def_readwrite("decoder", &SimConfig::decoder)
        .def_readwrite("window", &SimConfig::window)
        .def_readwrite("max_iter", &SimConfig::max_iter)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("max_frames", &SimConfig::max_frames)
        .def_readwrite("target_bit_errors", &SimConfig::target_bit_errors)
        .def("rate", &SimConfig::rate);

    py::class_<BerRecord>(m, "BerRecord")
        .def_readonly("ebn0_db", &BerRecord::ebn0_db)
        .def_readonly("frames", &BerRecord::frames)
        .def_readonly("bit_errors", &BerRecord::bit_errors)
        .def_readonly("frame_errors", &BerRecord::frame_errors)
        .def_readonly("ber", &BerRecord::ber)
        .def_readonly("fer", &BerRecord::fer)
        .def_readonly("avg_iterations", &BerRecord::avg_iterations);

    py::class_<DecodeResult>(m, "DecodeResult")
        .def_readonly("bits", &DecodeResult::bits)
        .def_readonly("iterations", &DecodeResult::iterations)
        .def_readonly("syndrome_ok", &DecodeResult::syndrome_ok);

    py::class_<WindowDecodeResult>(m, "WindowDecodeResult")
        .def_readonly("bits", &WindowDecodeResult::bits)
        .def_readonly("window_iterations", &WindowDecodeResult::window_iterations)
        .def_readonly("syndrome_ok", &WindowDecodeResult::syndrome_ok);

    m.def("awgn_llr", &awgn_llr, py::arg("n"), py::arg("ebn0_db"), py::arg("rate"),
          py::arg("seed"), py::arg("frame_index"));
    m.def(
        "bp_flooding",
        [](const BinaryMatrix& h, const std::vector<double>& llr, int max_iter) {
            return bp_flooding(h, llr, max_iter);
        },
        py::arg("h"), py::arg("llr"), py::arg("max_iter") = 100);
    m.def(
        "sliding_window_decode",
        [](const SimConfig& config, const std::vector<double>& llr) {
            return sliding_window_decode(config, llr);
        },
        py::arg("config"), py::arg("llr"));
    m.def("ber_sweep", &ber_sweep, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("ber_csv", &ber_csv, py::arg("records"));
}
