#include "lacalc/metric.hpp"

#include "lacalc/errors.hpp"

namespace lacalc {

FiberMetric::FiberMetric(CoeffMatrix values) : g(std::move(values)) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].size() != g.size()) throw RankMismatch("metric matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (g[i][j] != g[j][i]) throw Error("metric matrix is not symmetric");
    }
}

Coeff FiberMetric::determinant() const { return lacalc::determinant(g); }

Connection::Connection(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars), gamma_(n * n * n, Coeff(nvars)) {}

Section Connection::covariant(const LieAlgebroid& e, const Section& x, const Section& y) const {
    Section out = e.zeroSection();
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].isZero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].isZero()) continue;
            out[j] += x[i] * e.anchorFrame(i, y[j]);
            const Coeff fg = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k)
                if (!gamma(k, i, j).isZero()) out[k] += fg * gamma(k, i, j);
        }
    }
    return out;
}

Multivector Connection::covariant(const LieAlgebroid& e, std::size_t k, const Multivector& a) const {
    Multivector out(n_, nvars_);
    for (const auto& [mask, c] : a.terms()) {
        out.addTerm(mask, e.anchorFrame(k, c));
        int position = 0;
        for (int it : indicesOf(mask)) {
            const Mask rest = mask & ~bit(it);
            for (std::size_t l = 0; l < n_; ++l) {
                const Coeff& g = gamma(l, k, static_cast<std::size_t>(it));
                if (g.isZero()) continue;
                // Replace X_{i_t} in place by X_l: move X_l to the front, then back past t−1 generators.
                const int s = wedgeSign(bit(static_cast<int>(l)), rest);
                if (s == 0) continue;
                Coeff v = c * g;
                if ((s < 0) != (position % 2 != 0)) v = -v;
                out.addTerm(rest | bit(static_cast<int>(l)), v);
            }
            ++position;
        }
    }
    return out;
}

Curvature::Curvature(std::size_t n, std::size_t nvars) : n_(n), r_(n * n * n * n, Coeff(nvars)) {}

bool Curvature::isZero() const {
    for (const auto& c : r_)
        if (!c.isZero()) return false;
    return true;
}

Connection leviCivita(const LieAlgebroid& e, const FiberMetric& metric) {
    const std::size_t n = e.n();
    if (metric.rank() != n) throw RankMismatch("metric rank differs from the fiber rank");
    const auto& g = metric.g;
    if (n > 0 && metric.determinant().isZero()) throw SingularMetric("metric is singular");
    const auto ginv = inverse(g);
    if (!ginv) throw SingularMetric("metric is singular");
    // g([X_a, X_b], X_c)
    auto gb = [&](std::size_t a, std::size_t b, std::size_t c) {
        Coeff v = e.zero();
        for (std::size_t l = 0; l < n; ++l) {
            const Coeff s = e.structure(l, a, b);
            if (!s.isZero()) v += s * g[l][c];
        }
        return v;
    };
    Connection nabla(n, e.m());
    std::vector<Coeff> koszul(n * n * n, e.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                koszul[(i * n + j) * n + k] = e.anchorFrame(i, g[j][k]) + e.anchorFrame(j, g[i][k]) -
                                              e.anchorFrame(k, g[i][j]) + gb(i, j, k) - gb(i, k, j) - gb(j, k, i);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Coeff v = e.zero();
                for (std::size_t k = 0; k < n; ++k)
                    if (!(*ginv)[l][k].isZero()) v += (*ginv)[l][k] * koszul[(i * n + j) * n + k];
                nabla.setGamma(l, i, j, Rational(1, 2) * v);
            }
    return nabla;
}

std::vector<Coeff> torsionResidual(const LieAlgebroid& e, const Connection& nabla) {
    std::vector<Coeff> out;
    for (std::size_t i = 0; i < e.n(); ++i)
        for (std::size_t j = i + 1; j < e.n(); ++j)
            for (std::size_t k = 0; k < e.n(); ++k) {
                Coeff v = nabla.gamma(k, i, j) - nabla.gamma(k, j, i) - e.structure(k, i, j);
                if (!v.isZero()) out.push_back(std::move(v));
            }
    return out;
}

std::vector<Coeff> metricityResidual(const LieAlgebroid& e, const Connection& nabla, const FiberMetric& metric) {
    const auto& g = metric.g;
    std::vector<Coeff> out;
    for (std::size_t i = 0; i < e.n(); ++i)
        for (std::size_t j = 0; j < e.n(); ++j)
            for (std::size_t k = 0; k < e.n(); ++k) {
                Coeff v = e.anchorFrame(i, g[j][k]);
                for (std::size_t l = 0; l < e.n(); ++l) v -= nabla.gamma(l, i, j) * g[l][k] + nabla.gamma(l, i, k) * g[j][l];
                if (!v.isZero()) out.push_back(std::move(v));
            }
    return out;
}

Curvature curvature(const LieAlgebroid& e, const Connection& nabla) {
    const std::size_t n = e.n();
    Curvature r(n, e.m());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    Coeff v = e.anchorFrame(i, nabla.gamma(p, j, k)) - e.anchorFrame(j, nabla.gamma(p, i, k));
                    for (std::size_t l = 0; l < n; ++l) {
                        v += nabla.gamma(l, j, k) * nabla.gamma(p, i, l);
                        v -= nabla.gamma(l, i, k) * nabla.gamma(p, j, l);
                        const Coeff c = e.structure(l, i, j);
                        if (!c.isZero()) v -= c * nabla.gamma(p, l, k);
                    }
                    r.at(p, k, j, i) = -v;
                    r.at(p, k, i, j) = std::move(v);
                }
    return r;
}

namespace {

/// R(X_j,X_k)^* on forms: the derivation with α^i ↦ Σ_s R^i_{jks} α^s.
Form dualCurvature(const LieAlgebroid& e, const Curvature& r, std::size_t j, std::size_t k, const Form& omega) {
    Form out(e.n(), e.m());
    for (const auto& [mask, c] : omega.terms()) {
        int position = 0;
        for (int it : indicesOf(mask)) {
            const Mask rest = mask & ~bit(it);
            for (std::size_t s = 0; s < e.n(); ++s) {
                const Coeff& v = r.at(static_cast<std::size_t>(it), s, j, k);
                if (v.isZero()) continue;
                const int sg = wedgeSign(bit(static_cast<int>(s)), rest);
                if (sg == 0) continue;
                Coeff t = c * v;
                if ((sg < 0) != (position % 2 != 0)) t = -t;
                out.addTerm(rest | bit(static_cast<int>(s)), t);
            }
            ++position;
        }
    }
    return out;
}

}  // namespace

CurvatureIdentityReport curvatureIdentityCheck(const LieAlgebroid& e, const Connection& nabla) {
    const std::size_t n = e.n();
    const Curvature r = curvature(e, nabla);
    CurvatureIdentityReport report;
    report.torsionFree = torsionResidual(e, nabla).empty();

    report.operatorIdentity = true;
    for (std::size_t deg = 0; deg + 2 <= n && report.operatorIdentity; ++deg)
        for (Mask w : basisOfDegree(n, deg)) {
            Form total(n, e.m());
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (j == k) continue;
                    const Form arg = wedge(wedge(Form::generator(n, e.m(), static_cast<int>(k)),
                                                 Form::generator(n, e.m(), static_cast<int>(j))),
                                           Form::basis(n, e.m(), w));
                    if (!arg.isZero()) total += dualCurvature(e, r, j, k, arg);
                }
            if (!total.isZero()) {
                report.operatorIdentity = false;
                break;
            }
        }

    // R^i_{jks} is r.at(i, s, j, k).
    report.ricciSymmetric = true;
    for (std::size_t j = 0; j < n && report.ricciSymmetric; ++j)
        for (std::size_t s = j + 1; s < n; ++s) {
            Coeff a = e.zero(), b = e.zero();
            for (std::size_t k = 0; k < n; ++k) {
                a += r.at(k, s, j, k);
                b += r.at(k, j, s, k);
            }
            if (a != b) {
                report.ricciSymmetric = false;
                break;
            }
        }

    report.bianchi = true;
    for (std::size_t i = 0; i < n && report.bianchi; ++i)
        for (std::size_t j = 0; j < n && report.bianchi; ++j)
            for (std::size_t k = j + 1; k < n && report.bianchi; ++k)
                for (std::size_t s = k + 1; s < n; ++s) {
                    const Coeff v = r.at(i, s, j, k) + r.at(i, j, k, s) + r.at(i, k, s, j);
                    if (!v.isZero()) {
                        report.bianchi = false;
                        break;
                    }
                }
    return report;
}

Divergence divergenceFromConnection(const LieAlgebroid& e, const Connection& nabla) {
    Divergence div;
    for (std::size_t i = 0; i < e.n(); ++i) {
        Coeff v = e.zero();
        for (std::size_t k = 0; k < e.n(); ++k) v += nabla.gamma(k, k, i);
        div.values.push_back(std::move(v));
    }
    div.cocycleVerified = checkCocycle(e, div).passes();
    return div;
}

Multivector generatingFromConnection(const LieAlgebroid& e, const Connection& nabla, const Multivector& a) {
    Multivector out(e.n(), e.m());
    for (std::size_t k = 0; k < e.n(); ++k)
        out -= contractMulti(Form::generator(e.n(), e.m(), static_cast<int>(k)), nabla.covariant(e, k, a));
    return out;
}

Divergence divergenceFromMetricVolume(const LieAlgebroid& e, const FiberMetric& g) {
    if (g.rank() != e.n()) throw RankMismatch("metric rank differs from the fiber rank");
    const Coeff det = e.n() == 0 ? e.one() : g.determinant();
    if (det.isZero()) throw SingularMetric("metric is singular");
    return divergenceFromOddVolume(e, OddVolume(e.one(), det));
}

}  // namespace lacalc
