#include "cli.hpp"

#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "lacalc/calculus.hpp"
#include "lacalc/errors.hpp"
#include "lacalc/homology.hpp"
#include "lacalc/io.hpp"
#include "lacalc/metric.hpp"
#include "lacalc/modular.hpp"
#include "lacalc/parser.hpp"
#include "lacalc/poisson.hpp"
#include "lacalc/random.hpp"

namespace lacalc::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240917;

struct Config {
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    unsigned count = 100;
    unsigned degreeBound = 4;
};

/// Failure of a mathematical check; the report has already been printed.
struct CheckFailed {};

struct Input {
    AlgebroidFile file;
    std::optional<PoissonBivector> bivector;

    const LieAlgebroid& e() const { return file.algebroid; }
};

Input loadInput(const std::string& path) {
    const std::string text = readFile(path);
    if (isBivectorText(text)) {
        PoissonBivector p = parseBivector(text);
        return Input{AlgebroidFile{cotangentAlgebroid(p), std::nullopt}, p};
    }
    return Input{parseAlgebroid(text), std::nullopt};
}

std::string show(const LieAlgebroid& e, const Coeff& c) { return c.str(e.coordNames()); }
std::string show(const LieAlgebroid& e, const Multivector& a) { return a.str(e.frameNames(), e.coordNames()); }
std::string show(const LieAlgebroid& e, const Form& w) { return w.str(e.coframeNames(), e.coordNames()); }

ordered_json values(const LieAlgebroid& e, const std::vector<Coeff>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& c : v) out.push_back(show(e, c));
    return out;
}

ordered_json sizes(const std::vector<std::size_t>& v) {
    ordered_json out = ordered_json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

std::string joinSizes(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

OddVolume volumeOf(const LieAlgebroid& e, const std::string& src) {
    if (src.empty()) return OddVolume::coordinate(e.m());
    return OddVolume(parseExpr(src, e.coordNames()));
}

Multivector multivectorOf(const LieAlgebroid& e, const std::string& src) {
    return parseMultivector(src, e.coordNames(), e.frameNames());
}

Form formOf(const LieAlgebroid& e, const std::string& src) { return parseForm(src, e.coordNames(), e.coframeNames()); }

const FiberMetric& requireMetric(const Input& in) {
    if (!in.file.metric) throw SchemaError("$.metric", "this command needs a metric");
    return *in.file.metric;
}

/// Errors that mean the input is well formed but a mathematical condition fails.
bool isMathFailure(const Error& e) {
    return dynamic_cast<const SingularMetric*>(&e) || dynamic_cast<const NotClosed*>(&e) ||
           dynamic_cast<const NotFiniteDimensional*>(&e) || dynamic_cast<const JacobiViolation*>(&e) ||
           dynamic_cast<const NonInvertibleVolume*>(&e);
}

class Commands {
public:
    Commands(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    void validate(const std::string& path) {
        const Input in = loadInput(path);
        const LieAlgebroid& e = in.e();
        const ValidationReport r = validateAlgebroid(e);
        // d² = 0 on seeded random forms.
        RandomSource rnd(cfg_.seed);
        std::size_t d2Failures = 0;
        for (unsigned t = 0; t < cfg_.count; ++t) {
            const Form w = rnd.form(e, rnd.integer(0, static_cast<int>(e.n())));
            if (!deRham(e, deRham(e, w)).isZero()) ++d2Failures;
        }
        if (cfg_.json) {
            ordered_json j;
            j["jacobi"] = r.jacobiOk();
            j["anchor"] = r.anchorOk();
            ordered_json jr = ordered_json::array();
            for (const auto& x : r.jacobi)
                jr.push_back({{"triple", {x.i + 1, x.j + 1, x.k + 1}}, {"component", e.frameNames()[x.target]},
                              {"value", show(e, x.value)}});
            j["jacobiResiduals"] = jr;
            ordered_json ar = ordered_json::array();
            for (const auto& x : r.anchor)
                ar.push_back({{"pair", {x.i + 1, x.j + 1}}, {"component", e.coordNames()[x.coord]}, {"value", show(e, x.value)}});
            j["anchorResiduals"] = ar;
            j["d2Samples"] = cfg_.count;
            j["d2Failures"] = d2Failures;
            out_ << j.dump() << "\n";
        } else {
            out_ << "Jacobi: " << (r.jacobiOk() ? "OK" : "FAIL") << ", anchor: " << (r.anchorOk() ? "OK" : "FAIL") << "\n";
            for (const auto& x : r.jacobi)
                out_ << "  Jacobi residual (" << x.i + 1 << "," << x.j + 1 << "," << x.k + 1 << ") on "
                     << e.frameNames()[x.target] << ": " << show(e, x.value) << "\n";
            for (const auto& x : r.anchor)
                out_ << "  anchor residual (" << x.i + 1 << "," << x.j + 1 << ") on d/d" << e.coordNames()[x.coord]
                     << ": " << show(e, x.value) << "\n";
            out_ << "d^2 = 0 on " << cfg_.count - d2Failures << "/" << cfg_.count << " random forms\n";
        }
        if (!r.passes() || d2Failures) throw CheckFailed{};
    }

    void bracket(const std::string& path, const std::string& a, const std::string& b) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        const Multivector r = schouten(e, multivectorOf(e, a), multivectorOf(e, b));
        emit("bracket", show(e, r));
    }

    void d(const std::string& path, const std::string& w, const std::string& phi) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        const Form omega = formOf(e, w);
        const Form r = phi.empty() ? deRham(e, omega) : wittenDifferential(e, formOf(e, phi), omega);
        emit("d", show(e, r));
    }

    void lie(const std::string& path, const std::string& a, const std::string& w) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        emit("lie", show(e, lieDerivativeForm(e, multivectorOf(e, a), formOf(e, w))));
    }

    void div(const std::string& path, const std::string& volume, bool metric) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        const Divergence d = metric ? divergenceFromMetricVolume(e, requireMetric(in))
                                    : divergenceFromOddVolume(e, volumeOf(e, volume));
        if (cfg_.json) {
            ordered_json j;
            j["divergence"] = values(e, d.values);
            j["cocycle"] = d.cocycleVerified;
            out_ << j.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < e.n(); ++i) out_ << "div(" << e.frameNames()[i] << ") = " << show(e, d.values[i]) << "\n";
            out_ << "cocycle: " << (d.cocycleVerified ? "OK" : "FAIL") << "\n";
        }
        if (!d.cocycleVerified) throw CheckFailed{};
    }

    void genop(const std::string& path, const std::string& a, const std::string& volume, const std::string& phi) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        const OddVolume mu = volumeOf(e, volume);
        const Multivector x = multivectorOf(e, a);
        Multivector viaVolume = generatingFromOddVolume(e, mu, x);
        Multivector viaDivergence = generatingFromDivergence(e, divergenceFromOddVolume(e, mu), x);
        if (!phi.empty()) {
            const Form f = formOf(e, phi);
            viaVolume = deformedGenerating(e, mu, f, x);
            viaDivergence -= contractMulti(f, x);
        }
        const bool agree = viaVolume == viaDivergence;
        if (cfg_.json) {
            ordered_json j;
            j["genop"] = show(e, viaVolume);
            j["routesAgree"] = agree;
            out_ << j.dump() << "\n";
        } else {
            out_ << show(e, viaVolume) << "\n";
            out_ << "routes agree: " << (agree ? "yes" : "no") << "\n";
        }
        if (!agree) throw CheckFailed{};
    }

    void modular(const std::string& path) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        const RouteReport routes = modularRoutes(e);
        const Form closedness = deRham(e, routes.fromStructure);
        const ClassReport cls = classTriviality(e, routes.fromStructure, cfg_.degreeBound);
        if (cfg_.json) {
            ordered_json j;
            j["representative"] = show(e, routes.fromStructure);
            j["fromDivergences"] = show(e, routes.fromDivergences);
            j["fromLieDerivatives"] = show(e, routes.fromLieDerivatives);
            j["routesAgree"] = routes.agree();
            j["closednessResidual"] = show(e, closedness);
            j["class"] = statusName(cls.status);
            if (cls.primitive) j["primitive"] = show(e, *cls.primitive);
            out_ << j.dump() << "\n";
        } else {
            out_ << "representative: " << show(e, routes.fromStructure) << "\n";
            out_ << "routes agree: " << (routes.agree() ? "yes" : "no") << "\n";
            out_ << "d(representative): " << show(e, closedness) << "\n";
            out_ << "class: " << statusName(cls.status);
            if (cls.primitive && !cls.primitive->isZero()) out_ << " (primitive " << show(e, *cls.primitive) << ")";
            out_ << "\n";
        }
        if (!routes.agree() || !closedness.isZero()) throw CheckFailed{};
    }

    void morphism(const std::string& path, const std::string& kind) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        Morphism k = kind == "identity" ? identityMorphism(e) : kind == "anchor" ? anchorMorphism(e) : zeroMorphism(e, e);
        const MorphismReport r = validateMorphism(k);
        if (!r.passes()) {
            // The composition identity only makes sense for genuine morphisms.
            if (cfg_.json) {
                ordered_json j;
                j["morphism"] = kind;
                j["valid"] = false;
                j["anchorResiduals"] = r.anchor.size();
                j["bracketResiduals"] = r.bracket.size();
                out_ << j.dump() << "\n";
            } else {
                out_ << kind << " morphism: INVALID (" << r.anchor.size() << " anchor and " << r.bracket.size()
                     << " bracket residuals)\n";
            }
            throw CheckFailed{};
        }
        const OddVolume muE = OddVolume::coordinate(e.m());
        const CompositionReport comp = compositionCheck(k, muE, OddVolume::coordinate(k.target.m()), muE);
        if (cfg_.json) {
            ordered_json j;
            j["morphism"] = kind;
            j["valid"] = true;
            j["modular"] = show(e, comp.etaKappa);
            j["composition"] = comp.holds();
            out_ << j.dump() << "\n";
        } else {
            out_ << kind << " morphism: valid\n";
            out_ << "Mod(kappa) representative: " << show(e, comp.etaKappa) << "\n";
            out_ << "composition identity: " << (comp.holds() ? "OK" : "FAIL") << "\n";
        }
        if (!comp.holds()) throw CheckFailed{};
    }

    void betti(const std::string& path, bool deformed, bool table) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        std::optional<Form> phi;
        if (deformed) phi = modularRepresentative(e);
        const DualityReport r = dualityCheck(e, OddVolume::coordinate(e.m()), phi);
        if (table && !cfg_.json) {
            out_ << "degree     ";
            for (std::size_t k = 0; k <= e.n(); ++k) out_ << " " << k;
            out_ << "\ncohomology ";
            for (auto x : r.cohomology) out_ << " " << x;
            out_ << "\nhomology   ";
            for (auto x : r.homology) out_ << " " << x;
            out_ << "\nduality: " << (r.duality ? "yes" : "no") << "\n";
        } else {
            ordered_json j;
            j["cohomology"] = sizes(r.cohomology);
            j["homology"] = sizes(r.homology);
            j["duality"] = r.duality;
            out_ << j.dump() << "\n";
        }
        if (!r.duality) throw CheckFailed{};
    }

    void duality(const std::string& path, const std::string& phiSrc, bool useModular) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        std::optional<Form> phi;
        if (useModular) phi = modularRepresentative(e);
        if (!phiSrc.empty()) phi = formOf(e, phiSrc);
        const DualityReport r = dualityCheck(e, OddVolume::coordinate(e.m()), phi);
        if (cfg_.json) {
            ordered_json j;
            j["phi"] = phi ? show(e, *phi) : "0";
            j["cohomology"] = sizes(r.cohomology);
            j["homology"] = sizes(r.homology);
            j["duality"] = r.duality;
            out_ << j.dump() << "\n";
        } else {
            out_ << "H^k: " << joinSizes(r.cohomology) << "\n";
            out_ << "H_k: " << joinSizes(r.homology) << "\n";
            out_ << "dim H^k = dim H_{n-k}: " << (r.duality ? "yes" : "no") << "\n";
        }
        if (!r.duality) throw CheckFailed{};
    }

    void levicivita(const std::string& path) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        const FiberMetric& g = requireMetric(in);
        const Connection nabla = leviCivita(e, g);
        const auto torsion = torsionResidual(e, nabla);
        const auto metricity = metricityResidual(e, nabla, g);
        const Divergence viaConnection = divergenceFromConnection(e, nabla);
        const Divergence viaVolume = divergenceFromMetricVolume(e, g);
        const bool equal = viaConnection.values == viaVolume.values;
        const std::size_t n = e.n();
        if (cfg_.json) {
            ordered_json j;
            ordered_json gamma = ordered_json::object();
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t l = 0; l < n; ++l)
                        if (!nabla.gamma(k, i, l).isZero())
                            gamma[std::to_string(k + 1) + "," + std::to_string(i + 1) + "," + std::to_string(l + 1)] =
                                show(e, nabla.gamma(k, i, l));
            j["christoffel"] = gamma;
            j["torsionFree"] = torsion.empty();
            j["metric"] = metricity.empty();
            j["divergenceConnection"] = values(e, viaConnection.values);
            j["divergenceVolume"] = values(e, viaVolume.values);
            j["divergencesEqual"] = equal;
            out_ << j.dump() << "\n";
        } else {
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t l = 0; l < n; ++l)
                        if (!nabla.gamma(k, i, l).isZero())
                            out_ << "Gamma^" << k + 1 << "_" << i + 1 << l + 1 << " = " << show(e, nabla.gamma(k, i, l)) << "\n";
            out_ << "torsion: " << (torsion.empty() ? "0" : "NONZERO") << ", metricity: " << (metricity.empty() ? "0" : "NONZERO")
                 << "\n";
            for (std::size_t i = 0; i < n; ++i)
                out_ << "div(" << e.frameNames()[i] << ") = " << show(e, viaConnection.values[i]) << "\n";
            out_ << "connection and metric-volume divergences: " << (equal ? "equal" : "DIFFER") << "\n";
        }
        if (!torsion.empty() || !metricity.empty() || !equal) throw CheckFailed{};
    }

    void curvcheck(const std::string& path) {
        const Input in = loadInput(path);
        const auto& e = in.e();
        const Connection nabla = leviCivita(e, requireMetric(in));
        const CurvatureIdentityReport r = curvatureIdentityCheck(e, nabla);
        const bool ok = r.equivalence() && (!r.torsionFree || (r.operatorIdentity && r.ricciSymmetric && r.bianchi));
        if (cfg_.json) {
            ordered_json j;
            j["operatorIdentity"] = r.operatorIdentity;
            j["ricciSymmetric"] = r.ricciSymmetric;
            j["bianchi"] = r.bianchi;
            j["torsionFree"] = r.torsionFree;
            j["equivalence"] = r.equivalence();
            out_ << j.dump() << "\n";
        } else {
            auto yes = [](bool b) { return b ? "yes" : "no"; };
            out_ << "operator identity: " << yes(r.operatorIdentity) << ", Ricci symmetric: " << yes(r.ricciSymmetric)
                 << ", Bianchi: " << yes(r.bianchi) << "\n";
            out_ << "equivalence: " << (r.equivalence() ? "holds" : "FAILS") << "\n";
        }
        if (!ok) throw CheckFailed{};
    }

    void poisson(const std::string& path) {
        const PoissonBivector p = loadBivector(path);
        const LieAlgebroid e = cotangentAlgebroid(p);
        const Form phi = poissonModularForm(p);
        const RouteReport routes = modularRoutes(e);
        if (cfg_.json) {
            ordered_json j;
            j["modular"] = show(e, phi);
            j["routesAgree"] = routes.agree();
            j["closed"] = deRham(e, phi).isZero();
            out_ << j.dump() << "\n";
        } else {
            out_ << "modular form: " << show(e, phi) << "\n";
            out_ << "routes agree: " << (routes.agree() ? "yes" : "no") << "\n";
        }
        if (!routes.agree()) throw CheckFailed{};
    }

    void jacobi(const std::string& path) {
        const PoissonBivector p = loadBivector(path);
        const Multivector r = jacobiResidual(p);
        const bool validates = validateAlgebroid(cotangentAlgebroid(p)).passes();
        const LieAlgebroid tm = tangentAlgebroid(p.coordNames());
        const bool agree = r.isZero() == validates;
        if (cfg_.json) {
            ordered_json j;
            j["residual"] = show(tm, r);
            j["validates"] = validates;
            j["agree"] = agree;
            out_ << j.dump() << "\n";
        } else {
            out_ << "[P,P]/2 = " << show(tm, r) << "\n";
            out_ << "cotangent algebroid validates: " << (validates ? "yes" : "no") << "\n";
        }
        if (!r.isZero() || !agree) throw CheckFailed{};
    }

    void format(const std::string& path) {
        const std::string text = readFile(path);
        if (isBivectorText(text)) out_ << serializeBivector(parseBivector(text));
        else out_ << serializeAlgebroid(parseAlgebroid(text));
    }

private:
    void emit(const std::string& key, const std::string& value) {
        if (cfg_.json) {
            ordered_json j;
            j[key] = value;
            out_ << j.dump() << "\n";
        } else {
            out_ << value << "\n";
        }
    }

    const Config& cfg_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cartan calculus, homology and modular classes of Lie algebroids", "lacalc"};
    app.require_subcommand(1);
    Config cfg;
    app.add_flag("--json", cfg.json, "Machine-readable output");
    app.add_option("--seed", cfg.seed, "Seed for randomized checks");
    app.add_option("--count", cfg.count, "Number of random samples")->check(CLI::PositiveNumber);
    app.add_option("--degree-bound", cfg.degreeBound, "Degree bound for the exactness search")->check(CLI::NonNegativeNumber);

    std::string file, a, b, volume, phi, kind = "anchor";
    bool useMetric = false, deformed = false, table = false, useModular = false;
    std::function<void(Commands&)> action;

    auto sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("file", file, "Definition file")->required();
        return s;
    };
    sub("validate", "Check the algebroid axioms and d^2 = 0")->callback([&] { action = [&](Commands& c) { c.validate(file); }; });
    {
        auto* s = sub("bracket", "Schouten bracket of two multivectors");
        s->add_option("a", a)->required();
        s->add_option("b", b)->required();
        s->callback([&] { action = [&](Commands& c) { c.bracket(file, a, b); }; });
    }
    {
        auto* s = sub("d", "de Rham differential of a form");
        s->add_option("form", a)->required();
        s->add_option("--phi", phi, "Witten deformation 1-form");
        s->callback([&] { action = [&](Commands& c) { c.d(file, a, phi); }; });
    }
    {
        auto* s = sub("lie", "Lie derivative of a form along a multivector");
        s->add_option("multivector", a)->required();
        s->add_option("form", b)->required();
        s->callback([&] { action = [&](Commands& c) { c.lie(file, a, b); }; });
    }
    {
        auto* s = sub("div", "Divergence of an odd volume or of the metric volume");
        s->add_option("--volume", volume, "Volume coefficient s (default 1)");
        s->add_flag("--metric", useMetric, "Use the metric volume");
        s->callback([&] { action = [&](Commands& c) { c.div(file, volume, useMetric); }; });
    }
    {
        auto* s = sub("genop", "Generating operator of an odd volume");
        s->add_option("multivector", a)->required();
        s->add_option("--volume", volume, "Volume coefficient s (default 1)");
        s->add_option("--phi", phi, "Deformation 1-form");
        s->callback([&] { action = [&](Commands& c) { c.genop(file, a, volume, phi); }; });
    }
    sub("modular", "Modular class representative")->callback([&] { action = [&](Commands& c) { c.modular(file); }; });
    {
        auto* s = sub("morphism", "Modular class of a morphism");
        s->add_option("--kind", kind, "identity, anchor or zero")->check(CLI::IsMember({"identity", "anchor", "zero"}));
        s->callback([&] { action = [&](Commands& c) { c.morphism(file, kind); }; });
    }
    {
        auto* s = sub("betti", "Betti numbers of a Lie algebra");
        s->add_flag("--deformed", deformed, "Deform by the modular representative");
        s->add_flag("--table", table, "Aligned text table");
        s->callback([&] { action = [&](Commands& c) { c.betti(file, deformed, table); }; });
    }
    {
        auto* s = sub("duality", "Poincare duality check");
        s->add_option("--phi", phi, "Closed deformation 1-form");
        s->add_flag("--modular", useModular, "Deform by the modular representative");
        s->callback([&] { action = [&](Commands& c) { c.duality(file, phi, useModular); }; });
    }
    sub("levicivita", "Levi-Civita connection of the file's metric")->callback([&] {
        action = [&](Commands& c) { c.levicivita(file); };
    });
    sub("curvcheck", "Curvature identities of the Levi-Civita connection")->callback([&] {
        action = [&](Commands& c) { c.curvcheck(file); };
    });
    sub("poisson", "Modular form of a Poisson bivector")->callback([&] { action = [&](Commands& c) { c.poisson(file); }; });
    sub("jacobi", "Jacobi residual of a bivector")->callback([&] { action = [&](Commands& c) { c.jacobi(file); }; });
    sub("format", "Canonical re-serialization of a definition file")->callback([&] {
        action = [&](Commands& c) { c.format(file); };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Commands commands(cfg, out);
    try {
        action(commands);
    } catch (const CheckFailed&) {
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return isMathFailure(e) ? 1 : 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace lacalc::cli
