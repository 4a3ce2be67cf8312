#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latmix/errors.hpp"
#include "latmix/io.hpp"

namespace py = pybind11;

namespace {

using namespace latmix;

Int int_from_py(const py::handle& obj) {
    return Int(py::str(obj).cast<std::string>());
}

py::object int_to_py(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

SupportCollection collection_from_py(std::size_t ambient_dim, const py::sequence& supports) {
    std::vector<std::vector<std::vector<Int>>> pts;
    for (const auto& support : supports) {
        std::vector<std::vector<Int>> sp;
        for (const auto& point : support.cast<py::sequence>()) {
            std::vector<Int> v;
            for (const auto& coord : point.cast<py::sequence>()) v.push_back(int_from_py(coord));
            sp.push_back(std::move(v));
        }
        pts.push_back(std::move(sp));
    }
    return SupportCollection::create(ambient_dim, pts);
}

std::vector<std::vector<Int>> points_from_py(const py::sequence& points) {
    std::vector<std::vector<Int>> out;
    for (const auto& point : points) {
        std::vector<Int> v;
        for (const auto& coord : point.cast<py::sequence>()) v.push_back(int_from_py(coord));
        out.push_back(std::move(v));
    }
    return out;
}

IntMat matrix_from_py(const py::sequence& rows) {
    auto pts = points_from_py(rows);
    std::size_t cols = pts.empty() ? 0 : pts[0].size();
    IntMat m(pts.size(), cols);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() != cols) throw py::value_error("ragged matrix");
        m.set_row(i, pts[i]);
    }
    return m;
}

py::list matrix_to_py(const IntMat& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows; ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols; ++j) row.append(int_to_py(m(i, j)));
        rows.append(std::move(row));
    }
    return rows;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

void register_exceptions(py::module_& m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact analysis of Laurent-system support collections";
    register_exceptions(m);

    m.def(
        "analyze",
        [](std::size_t ambient_dim, const py::sequence& supports) {
            auto a = collection_from_py(ambient_dim, supports);
            return json_to_py(defect_report_to_json(build_defect_report(a), a.size()));
        },
        py::arg("ambient_dim"), py::arg("supports"),
        "Defect report: minimal defect, essential subcollection, consistency.");

    m.def(
        "invariants",
        [](std::size_t ambient_dim, const py::sequence& supports) {
            auto a = collection_from_py(ambient_dim, supports);
            return json_to_py(invariant_report_to_json(full_report(a)));
        },
        py::arg("ambient_dim"), py::arg("supports"));

    m.def(
        "structure",
        [](std::size_t ambient_dim, const py::sequence& supports) {
            auto a = collection_from_py(ambient_dim, supports);
            return json_to_py(structure_to_json(zero_set_structure(a)));
        },
        py::arg("ambient_dim"), py::arg("supports"));

    m.def(
        "root_count",
        [](std::size_t ambient_dim, const py::sequence& supports) {
            return int_to_py(root_count(collection_from_py(ambient_dim, supports)));
        },
        py::arg("ambient_dim"), py::arg("supports"));

    m.def(
        "euler_characteristic",
        [](std::size_t ambient_dim, const py::sequence& supports) {
            return int_to_py(euler_characteristic(collection_from_py(ambient_dim, supports)));
        },
        py::arg("ambient_dim"), py::arg("supports"));

    m.def(
        "geometric_genus",
        [](std::size_t ambient_dim, const py::sequence& supports) {
            return int_to_py(geometric_genus(collection_from_py(ambient_dim, supports)));
        },
        py::arg("ambient_dim"), py::arg("supports"));

    m.def(
        "bkk_number",
        [](const py::sequence& supports) {
            std::vector<LatticePolytope> polys;
            std::size_t mdim = py::len(supports);
            for (const auto& s : supports)
                polys.push_back(convex_hull_int(points_from_py(s.cast<py::sequence>()), mdim));
            return int_to_py(bkk_number(polys));
        },
        py::arg("supports"),
        "m! times the mixed volume of the hulls of m point sets in dimension m.");

    m.def(
        "lattice_volume",
        [](std::size_t ambient_dim, const py::sequence& points) {
            return rational_to_string(
                lattice_volume(convex_hull_int(points_from_py(points), ambient_dim)));
        },
        py::arg("ambient_dim"), py::arg("points"));

    m.def(
        "hermite_normal_form",
        [](const py::sequence& rows) {
            auto r = hermite_normal_form(matrix_from_py(rows));
            return py::make_tuple(matrix_to_py(r.H), matrix_to_py(r.U));
        },
        py::arg("matrix"));

    m.def(
        "smith_normal_form",
        [](const py::sequence& rows) {
            auto r = smith_normal_form(matrix_from_py(rows));
            return py::make_tuple(matrix_to_py(r.D), matrix_to_py(r.U), matrix_to_py(r.V));
        },
        py::arg("matrix"));

    m.def(
        "saturation",
        [](std::size_t ambient_dim, const py::sequence& generators) {
            auto g = sublattice_from_generators(ambient_dim, matrix_from_py(generators));
            return matrix_to_py(saturation(g).basis);
        },
        py::arg("ambient_dim"), py::arg("generators"));

    m.def(
        "lattice_index",
        [](std::size_t ambient_dim, const py::sequence& sub, const py::sequence& super) {
            auto g = sublattice_from_generators(ambient_dim, matrix_from_py(sub));
            auto l = sublattice_from_generators(ambient_dim, matrix_from_py(super));
            return int_to_py(lattice_index(g, l));
        },
        py::arg("ambient_dim"), py::arg("sublattice"), py::arg("superlattice"));

    m.def(
        "quotient_map",
        [](std::size_t ambient_dim, const py::sequence& generators) {
            auto lam = saturation(sublattice_from_generators(ambient_dim, matrix_from_py(generators)));
            return matrix_to_py(quotient_map(lam).matrix);
        },
        py::arg("ambient_dim"), py::arg("generators"),
        "Projection matrix with kernel the saturation of the given generators.");

    m.def(
        "parse_collection",
        [](const std::string& text) { return json_to_py(collection_to_json(parse_collection(text))); },
        py::arg("text"));

    m.attr("__version__") = kToolVersion;
}
