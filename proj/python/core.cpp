#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lacalc/calculus.hpp"
#include "lacalc/homology.hpp"
#include "lacalc/io.hpp"
#include "lacalc/metric.hpp"
#include "lacalc/modular.hpp"
#include "lacalc/parser.hpp"
#include "lacalc/poisson.hpp"

namespace py = pybind11;
using namespace lacalc;

namespace {

/// String-in, string-out view of a definition file.
class PyAlgebroid {
public:
    explicit PyAlgebroid(AlgebroidFile f) : file_(std::move(f)) {}

    static PyAlgebroid fromJson(const std::string& text) { return PyAlgebroid(parseAlgebroid(text)); }
    static PyAlgebroid load(const std::string& path) {
        const std::string text = readFile(path);
        if (isBivectorText(text)) return PyAlgebroid(AlgebroidFile{cotangentAlgebroid(parseBivector(text)), std::nullopt});
        return PyAlgebroid(parseAlgebroid(text));
    }

    const LieAlgebroid& e() const { return file_.algebroid; }

    std::string toJson() const { return serializeAlgebroid(file_); }

    py::dict validate() const {
        const ValidationReport r = validateAlgebroid(e());
        py::dict out;
        out["jacobi"] = r.jacobiOk();
        out["anchor"] = r.anchorOk();
        py::list jr, ar;
        for (const auto& x : r.jacobi)
            jr.append(py::make_tuple(x.i + 1, x.j + 1, x.k + 1, e().frameNames()[x.target], show(x.value)));
        for (const auto& x : r.anchor)
            ar.append(py::make_tuple(x.i + 1, x.j + 1, e().coordNames()[x.coord], show(x.value)));
        out["jacobi_residuals"] = jr;
        out["anchor_residuals"] = ar;
        return out;
    }

    std::string bracket(const std::string& a, const std::string& b) const {
        return show(schouten(e(), multivector(a), multivector(b)));
    }

    std::string d(const std::string& w, const std::optional<std::string>& phi) const {
        const Form omega = form(w);
        return show(phi ? wittenDifferential(e(), form(*phi), omega) : deRham(e(), omega));
    }

    std::string lie(const std::string& a, const std::string& w) const {
        return show(lieDerivativeForm(e(), multivector(a), form(w)));
    }

    std::vector<std::string> divergence(const std::string& volume) const {
        return shows(divergenceFromOddVolume(e(), OddVolume(parseExpr(volume, e().coordNames()))).values);
    }

    std::string genop(const std::string& a, const std::string& volume, const std::optional<std::string>& phi) const {
        const OddVolume mu(parseExpr(volume, e().coordNames()));
        if (phi) return show(deformedGenerating(e(), mu, form(*phi), multivector(a)));
        return show(generatingFromOddVolume(e(), mu, multivector(a)));
    }

    py::dict modular(unsigned degreeBound) const {
        const RouteReport routes = modularRoutes(e());
        const ClassReport cls = classTriviality(e(), routes.fromStructure, degreeBound);
        py::dict out;
        out["representative"] = show(routes.fromStructure);
        out["from_divergences"] = show(routes.fromDivergences);
        out["from_lie_derivatives"] = show(routes.fromLieDerivatives);
        out["routes_agree"] = routes.agree();
        out["closed"] = deRham(e(), routes.fromStructure).isZero();
        out["class"] = statusName(cls.status);
        if (cls.primitive) out["primitive"] = show(*cls.primitive);
        return out;
    }

    py::dict betti(bool deformed) const {
        std::optional<Form> phi;
        if (deformed) phi = modularRepresentative(e());
        const DualityReport r = dualityCheck(e(), OddVolume::coordinate(e().m()), phi);
        py::dict out;
        out["cohomology"] = r.cohomology;
        out["homology"] = r.homology;
        out["duality"] = r.duality;
        return out;
    }

    py::dict leviCivita() const {
        if (!file_.metric) throw SchemaError("$.metric", "no metric in this definition");
        const FiberMetric& g = *file_.metric;
        const Connection nabla = lacalc::leviCivita(e(), g);
        const CurvatureIdentityReport lemma = curvatureIdentityCheck(e(), nabla);
        py::dict out;
        out["torsion_free"] = torsionResidual(e(), nabla).empty();
        out["metric"] = metricityResidual(e(), nabla, g).empty();
        out["divergence_connection"] = shows(divergenceFromConnection(e(), nabla).values);
        out["divergence_volume"] = shows(divergenceFromMetricVolume(e(), g).values);
        out["operator_identity"] = lemma.operatorIdentity;
        out["ricci_symmetric"] = lemma.ricciSymmetric;
        out["bianchi"] = lemma.bianchi;
        return out;
    }

    std::size_t rank() const { return e().n(); }
    std::size_t dimension() const { return e().m(); }
    std::vector<std::string> coordinates() const { return e().coordNames(); }
    std::vector<std::string> frame() const { return e().frameNames(); }
    std::vector<std::string> coframe() const { return e().coframeNames(); }
    bool hasMetric() const { return file_.metric.has_value(); }

private:
    Multivector multivector(const std::string& s) const { return parseMultivector(s, e().coordNames(), e().frameNames()); }
    Form form(const std::string& s) const { return parseForm(s, e().coordNames(), e().coframeNames()); }
    std::string show(const Coeff& c) const { return c.str(e().coordNames()); }
    std::string show(const Multivector& a) const { return a.str(e().frameNames(), e().coordNames()); }
    std::string show(const Form& w) const { return w.str(e().coframeNames(), e().coordNames()); }
    std::vector<std::string> shows(const std::vector<Coeff>& v) const {
        std::vector<std::string> out;
        for (const auto& c : v) out.push_back(show(c));
        return out;
    }

    AlgebroidFile file_;
};

class PyBivector {
public:
    explicit PyBivector(PoissonBivector p) : p_(std::move(p)) {}
    static PyBivector fromJson(const std::string& text) { return PyBivector(parseBivector(text)); }
    static PyBivector load(const std::string& path) { return PyBivector(loadBivector(path)); }

    std::string toJson() const { return serializeBivector(p_); }
    std::string jacobiResidual() const {
        const LieAlgebroid tm = tangentAlgebroid(p_.coordNames());
        return lacalc::jacobiResidual(p_).str(tm.frameNames(), tm.coordNames());
    }
    bool isPoisson() const { return lacalc::jacobiResidual(p_).isZero(); }
    std::string modularForm() const {
        const LieAlgebroid e = cotangentAlgebroid(p_);
        return poissonModularForm(p_).str(e.coframeNames(), e.coordNames());
    }
    PyAlgebroid cotangent() const { return PyAlgebroid(AlgebroidFile{cotangentAlgebroid(p_), std::nullopt}); }

private:
    PoissonBivector p_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Cartan calculus, homology and modular classes of Lie algebroids";

    auto base = py::register_exception<Error>(m, "LacalcError");
    py::register_exception<SyntaxError>(m, "ExpressionSyntaxError", base.ptr());
    py::register_exception<UnknownVariable>(m, "UnknownVariable", base.ptr());
    py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
    py::register_exception<SingularMetric>(m, "SingularMetric", base.ptr());
    py::register_exception<NotClosed>(m, "NotClosed", base.ptr());
    py::register_exception<NotFiniteDimensional>(m, "NotFiniteDimensional", base.ptr());
    py::register_exception<JacobiViolation>(m, "JacobiViolation", base.ptr());
    py::register_exception<NonInvertibleVolume>(m, "NonInvertibleVolume", base.ptr());
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base.ptr());
    py::register_exception<RankMismatch>(m, "RankMismatch", base.ptr());
    py::register_exception<ChartMismatch>(m, "ChartMismatch", base.ptr());

    py::class_<PyAlgebroid>(m, "Algebroid")
        .def_static("from_json", &PyAlgebroid::fromJson, py::arg("text"))
        .def_static("load", &PyAlgebroid::load, py::arg("path"))
        .def("to_json", &PyAlgebroid::toJson)
        .def_property_readonly("rank", &PyAlgebroid::rank)
        .def_property_readonly("dimension", &PyAlgebroid::dimension)
        .def_property_readonly("coordinates", &PyAlgebroid::coordinates)
        .def_property_readonly("frame", &PyAlgebroid::frame)
        .def_property_readonly("coframe", &PyAlgebroid::coframe)
        .def_property_readonly("has_metric", &PyAlgebroid::hasMetric)
        .def("validate", &PyAlgebroid::validate)
        .def("bracket", &PyAlgebroid::bracket, py::arg("a"), py::arg("b"))
        .def("d", &PyAlgebroid::d, py::arg("form"), py::arg("phi") = py::none())
        .def("lie", &PyAlgebroid::lie, py::arg("multivector"), py::arg("form"))
        .def("divergence", &PyAlgebroid::divergence, py::arg("volume") = "1")
        .def("genop", &PyAlgebroid::genop, py::arg("multivector"), py::arg("volume") = "1", py::arg("phi") = py::none())
        .def("modular", &PyAlgebroid::modular, py::arg("degree_bound") = 4)
        .def("betti", &PyAlgebroid::betti, py::arg("deformed") = false)
        .def("levi_civita", &PyAlgebroid::leviCivita);

    py::class_<PyBivector>(m, "Bivector")
        .def_static("from_json", &PyBivector::fromJson, py::arg("text"))
        .def_static("load", &PyBivector::load, py::arg("path"))
        .def("to_json", &PyBivector::toJson)
        .def("jacobi_residual", &PyBivector::jacobiResidual)
        .def("is_poisson", &PyBivector::isPoisson)
        .def("modular_form", &PyBivector::modularForm)
        .def("cotangent", &PyBivector::cotangent);
}
