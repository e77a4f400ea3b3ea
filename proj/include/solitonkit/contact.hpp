#pragma once

// Almost contact metric structures (phi, xi, eta, g), the (alpha, beta) fit of
//   (nabla_X phi)Y = alpha[g(phi X, Y)xi - eta(Y)phi X] + beta[g(X, Y)xi - eta(Y)X]
// and the identities that follow from it.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "solitonkit/geometry.hpp"
#include "solitonkit/report.hpp"
#include "solitonkit/tensor.hpp"

namespace solitonkit {

inline constexpr const char* kStructureGroup = "structure";

struct AlmostContactStructure {
    TensorField phi;  ///< (1,1)
    TensorField xi;   ///< vector field
    TensorField eta;  ///< 1-form
    MetricField g;
    int n = 0;        ///< dim = 2n + 1
    std::optional<Expr> alpha;  ///< declared, if any
    std::optional<Expr> beta;

    AlmostContactStructure() = default;

    AlmostContactStructure(TensorField phi_, TensorField xi_, TensorField eta_, MetricField g_,
                           std::optional<Expr> alpha_ = {}, std::optional<Expr> beta_ = {})
        : phi(std::move(phi_)), xi(std::move(xi_)), eta(std::move(eta_)), g(std::move(g_)), alpha(std::move(alpha_)),
          beta(std::move(beta_)) {
        const int m = g.dim();
        if (m % 2 == 0) throw ShapeError("almost contact structures need odd dimension, got " + std::to_string(m));
        if (phi.signature() != Signature{Contra, Co} || phi.dim() != m) throw ShapeError("phi must be a (1,1) field");
        if (xi.signature() != Signature{Contra} || xi.dim() != m) throw ShapeError("xi must be a vector field");
        if (eta.signature() != Signature{Co} || eta.dim() != m) throw ShapeError("eta must be a 1-form");
        n = (m - 1) / 2;
    }

    int dim() const { return g.dim(); }

    /// X -> eta(X) xi, as a (1,1) field.
    TensorField eta_xi() const { return permute(tensor_product(eta, xi), {1, 0}); }
    TensorField eta_eta() const { return tensor_product(eta, eta); }
    TensorField phi_squared() const { return compose(phi, phi); }
};

/// (nabla V) reordered as the (1,1) field X -> nabla_X V.
inline TensorField nabla_as_endomorphism(const TensorField& v, const Connection& conn) {
    return permute(covariant_derivative(v, conn), {1, 0});
}

/// Axiom residuals, one report each.
inline std::vector<CheckReport> validate_structure(const AlmostContactStructure& s, const Checker& checker) {
    const int m = s.dim();
    const TensorField& g = s.g.tensor();
    const Checker c = checker;
    std::vector<CheckReport> out;

    out.push_back(c.equal("phi^2 = -Id + eta(x)xi", kStructureGroup, "phi^2 = -(Id - eta (x) xi)", s.phi_squared(),
                          s.eta_xi() - identity(m)));
    out.push_back(c.equal("eta(xi) = 1", kStructureGroup, "eta(xi) = 1", pair(s.eta, s.xi), constant(1.0)));
    out.push_back(c.zero("phi xi = 0", kStructureGroup, "phi xi = 0", apply(s.phi, s.xi), {s.xi}));

    TensorField eta_phi(m, {Co});
    for (int b = 0; b < m; ++b) {
        std::vector<Expr> t;
        for (int a = 0; a < m; ++a) t.push_back(s.eta.at({a}) * s.phi.at({a, b}));
        eta_phi.at({b}) = sum(std::move(t));
    }
    out.push_back(c.zero("eta o phi = 0", kStructureGroup, "eta o phi = 0", eta_phi, {s.eta}));

    out.push_back(c.equal("i_xi g = eta", kStructureGroup, "g(xi, .) = eta", raise_lower(s.xi, 0, s.g), s.eta));

    TensorField gpp(m, {Co, Co});
    TensorField gpx(m, {Co, Co});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<Expr> t1, t2;
            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) t1.push_back(g.at({a, b}) * s.phi.at({a, i}) * s.phi.at({b, j}));
                t2.push_back(g.at({a, j}) * s.phi.at({a, i}));
            }
            gpp.at({i, j}) = sum(std::move(t1));
            gpx.at({i, j}) = sum(std::move(t2));
        }
    out.push_back(c.equal("g(phi., phi.) = g - eta(x)eta", kStructureGroup, "g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y)",
                          gpp, g - s.eta_eta()));
    out.push_back(c.equal("g(phi., .) = -g(., phi.)", kStructureGroup, "g(phi X, Y) = -g(X, phi Y)", gpx,
                          -permute(gpx, {1, 0})));
    return out;
}

/// The two tensors multiplying alpha and beta in the defining condition,
/// with slot order (X, a, Y) matching nabla phi.
struct AlphaBetaBasis {
    TensorField alpha_part;  ///< g(phi X, Y) xi - eta(Y) phi X
    TensorField beta_part;   ///< g(X, Y) xi - eta(Y) X
};

inline AlphaBetaBasis alpha_beta_basis(const AlmostContactStructure& s) {
    const int m = s.dim();
    const TensorField& g = s.g.tensor();
    AlphaBetaBasis b{TensorField(m, {Co, Contra, Co}), TensorField(m, {Co, Contra, Co})};
    for_each_index(m, 3, [&](const std::vector<int>& ix) {
        const int x = ix[0], a = ix[1], y = ix[2];
        std::vector<Expr> gphi;
        for (int c = 0; c < m; ++c) gphi.push_back(g.at({c, y}) * s.phi.at({c, x}));
        b.alpha_part.at(ix) = sum(std::move(gphi)) * s.xi.at({a}) - s.eta.at({y}) * s.phi.at({a, x});
        b.beta_part.at(ix) = g.at({x, y}) * s.xi.at({a}) - s.eta.at({y}) * (a == x ? constant(1.0) : constant(0.0));
    });
    return b;
}

struct AlphaBetaProfile {
    std::vector<double> alpha;  ///< per sample point, NaN where the fit was skipped
    std::vector<double> beta;
    CheckReport fit;
    std::optional<CheckReport> declared_match;
    std::string classification;
    bool alpha_zero = false, beta_zero = false, alpha_constant = false, beta_constant = false;
    double alpha_mean = 0.0, beta_mean = 0.0;
    /// Declared expression, else the fitted constant, else empty.
    std::optional<Expr> alpha_expr, beta_expr;

    bool passed() const { return fit.passed() && (!declared_match || declared_match->passed()); }
};

namespace detail {

struct SampleStats {
    bool constant = false;
    bool zero = false;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// "constant": (max - min) <= 1e-8 (1 + |mean|); "zero": max |v| <= 1e-8.
inline SampleStats sample_stats(const std::vector<double>& v) {
    SampleStats s;
    std::size_t count = 0;
    double lo = INFINITY, hi = -INFINITY, total = 0.0, big = 0.0;
    for (double x : v) {
        if (std::isnan(x)) continue;
        ++count;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        total += x;
        big = std::max(big, std::abs(x));
    }
    if (count == 0) return s;
    s.mean = total / static_cast<double>(count);
    s.min = lo;
    s.max = hi;
    s.constant = (hi - lo) <= 1e-8 * (1.0 + std::abs(s.mean));
    s.zero = big <= 1e-8;
    return s;
}

}  // namespace detail

inline std::string classify_alpha_beta(const AlphaBetaProfile& p) {
    if (!p.fit.passed()) return "not-alpha-beta";
    if (p.alpha_zero && p.beta_zero) return "cosymplectic";
    if (p.alpha_zero && p.beta_constant) return std::abs(p.beta_mean - 1.0) <= 1e-8 ? "Sasakian" : "beta-Sasakian";
    if (p.beta_zero && p.alpha_constant) return std::abs(p.alpha_mean - 1.0) <= 1e-8 ? "Kenmotsu" : "alpha-Kenmotsu";
    return "trans-Sasakian-general";
}

/// Least-squares (alpha, beta) at each point over all frame components of
/// the defining condition; classifies the structure from the samples.
inline AlphaBetaProfile fit_alpha_beta(const AlmostContactStructure& s, const Connection& conn, const Checker& checker) {
    const TensorField nabla_phi = covariant_derivative(s.phi, conn);
    const AlphaBetaBasis basis = alpha_beta_basis(s);
    AlphaBetaProfile p;
    p.alpha.assign(checker.points().size(), NAN);
    p.beta.assign(checker.points().size(), NAN);
    p.fit = checker.run("(alpha,beta) fit", kStructureGroup,
                        "(nabla_X phi)Y = alpha[g(phi X,Y)xi - eta(Y)phi X] + beta[g(X,Y)xi - eta(Y)X]",
                        [&](PointContext& c) {
                            const PointTensor lhs = c.eval(nabla_phi);
                            const PointTensor a = c.eval(basis.alpha_part);
                            const PointTensor b = c.eval(basis.beta_part);
                            const PointTensor fl = c.project(lhs), fa = c.project(a), fb = c.project(b);
                            const auto rows = static_cast<Eigen::Index>(fl.values.size());
                            Eigen::MatrixXd mat(rows, 2);
                            Eigen::VectorXd rhs(rows);
                            for (Eigen::Index r = 0; r < rows; ++r) {
                                mat(r, 0) = fa.values[static_cast<std::size_t>(r)];
                                mat(r, 1) = fb.values[static_cast<std::size_t>(r)];
                                rhs(r) = fl.values[static_cast<std::size_t>(r)];
                            }
                            Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(mat);
                            qr.setThreshold(1e-10);
                            if (qr.rank() < 2) throw EvalError("rank-deficient (alpha, beta) system");
                            const Eigen::Vector2d ab = qr.solve(rhs);
                            p.alpha[c.index] = ab(0);
                            p.beta[c.index] = ab(1);
                            PointTensor fit = a;
                            for (std::size_t i = 0; i < fit.values.size(); ++i)
                                fit.values[i] = ab(0) * a.values[i] + ab(1) * b.values[i];
                            return PointSample{lhs - fit, {lhs}};
                        });
    const auto as = detail::sample_stats(p.alpha);
    const auto bs = detail::sample_stats(p.beta);
    p.alpha_zero = as.zero;
    p.beta_zero = bs.zero;
    p.alpha_constant = as.constant;
    p.beta_constant = bs.constant;
    p.alpha_mean = as.mean;
    p.beta_mean = bs.mean;
    p.fit.values = {{"alpha_min", as.min}, {"alpha_max", as.max}, {"beta_min", bs.min}, {"beta_max", bs.max}};

    if (s.alpha || s.beta) {
        const Expr da = s.alpha.value_or(constant(0.0));
        const Expr db = s.beta.value_or(constant(0.0));
        CheckReport r = checker.with_tolerance(1e-8).run(
            "declared (alpha,beta) match fit", kStructureGroup, "fitted (alpha, beta) = declared (alpha, beta)",
            [&](PointContext& c) {
                const double fa = p.alpha[c.index], fb = p.beta[c.index];
                if (std::isnan(fa)) throw EvalError("no fitted value at this point");
                const double ea = s.alpha ? c.scalar(da) : fa;
                const double eb = s.beta ? c.scalar(db) : fb;
                const int m = s.dim();
                return PointSample{point_scalar(m, std::max(std::abs(fa - ea), std::abs(fb - eb))),
                                   {point_scalar(m, std::max(std::abs(ea), std::abs(eb)))}};
            });
        p.declared_match = std::move(r);
    }
    p.classification = classify_alpha_beta(p);
    p.alpha_expr = s.alpha ? s.alpha : (as.constant ? std::optional<Expr>(constant(as.zero ? 0.0 : as.mean)) : std::nullopt);
    p.beta_expr = s.beta ? s.beta : (bs.constant ? std::optional<Expr>(constant(bs.zero ? 0.0 : bs.mean)) : std::nullopt);
    return p;
}

/// Identities of F = alpha phi + beta Id together with
/// nabla xi = -alpha phi^2 - beta phi, L_xi g = 2 alpha (g - eta(x)eta), div xi = 2n alpha.
inline std::vector<CheckReport> f_operator_checks(const AlmostContactStructure& s, const AlphaBetaProfile& profile,
                                                  const Connection& conn, const Checker& checker) {
    const char* names[] = {"(nabla_X phi)Y via F", "nabla_X xi = -F(phi X)", "(nabla_X F)Y", "nabla xi = -alpha phi^2 - beta phi",
                           "L_xi g = 2 alpha (g - eta(x)eta)", "div xi = 2n alpha"};
    const char* statements[] = {
        "(nabla_X phi)Y = g(F X, Y)xi - eta(Y)F X, F = alpha phi + beta Id",
        "nabla_X xi = -F(phi X)",
        "(nabla_X F)Y = alpha (nabla_X phi)Y + F_{X(alpha), X(beta)} Y",
        "nabla xi = -alpha phi^2 - beta phi",
        "L_xi g = 2 alpha (g - eta (x) eta)",
        "div(xi) = 2n alpha",
    };
    std::vector<CheckReport> out;
    if (!profile.alpha_expr || !profile.beta_expr) {
        for (int i = 0; i < 6; ++i)
            out.push_back(skipped(names[i], kStructureGroup, statements[i],
                                  "alpha or beta is neither declared nor constant; derivatives unavailable"));
        return out;
    }
    const int m = s.dim();
    const Expr& alpha = *profile.alpha_expr;
    const Expr& beta = *profile.beta_expr;
    const TensorField& g = s.g.tensor();
    const TensorField id = identity(m);
    const TensorField f = alpha * s.phi + beta * id;
    const TensorField nabla_phi = covariant_derivative(s.phi, conn);  // slots (X, a, Y)

    // g(F X, Y) xi - eta(Y) F X, slots (X, a, Y)
    TensorField via_f(m, {Co, Contra, Co});
    for_each_index(m, 3, [&](const std::vector<int>& ix) {
        const int x = ix[0], a = ix[1], y = ix[2];
        std::vector<Expr> gf;
        for (int c = 0; c < m; ++c) gf.push_back(g.at({c, y}) * f.at({c, x}));
        via_f.at(ix) = sum(std::move(gf)) * s.xi.at({a}) - s.eta.at({y}) * f.at({a, x});
    });
    out.push_back(checker.equal(names[0], kStructureGroup, statements[0], nabla_phi, via_f));

    const TensorField nabla_xi = nabla_as_endomorphism(s.xi, conn);
    out.push_back(checker.equal(names[1], kStructureGroup, statements[1], nabla_xi, -compose(f, s.phi)));

    const TensorField nabla_f = covariant_derivative(f, conn);
    const TensorField dalpha = differential(alpha, m);
    const TensorField dbeta = differential(beta, m);
    TensorField rhs(m, {Co, Contra, Co});
    for_each_index(m, 3, [&](const std::vector<int>& ix) {
        const int x = ix[0], a = ix[1], y = ix[2];
        rhs.at(ix) = alpha * nabla_phi.at(ix) + dalpha.at({x}) * s.phi.at({a, y}) + dbeta.at({x}) * id.at({a, y});
    });
    out.push_back(checker.equal(names[2], kStructureGroup, statements[2], nabla_f, rhs));

    const TensorField phi2 = s.phi_squared();
    out.push_back(checker.equal(names[3], kStructureGroup, statements[3], nabla_xi, -(alpha * phi2) - beta * s.phi));
    out.push_back(checker.equal(names[4], kStructureGroup, statements[4], lie_derivative(s.xi, g),
                                (constant(2.0) * alpha) * (g - s.eta_eta())));
    out.push_back(checker.equal(names[5], kStructureGroup, statements[5], divergence(s.xi, conn),
                                constant(2.0 * s.n) * alpha));
    return out;
}

/// Ric(xi, xi) = 2n[beta^2 - alpha^2 - xi(alpha)].
inline CheckReport ricci_xi_xi_check(const AlmostContactStructure& s, const AlphaBetaProfile& profile,
                                     const CurvatureBundle& b, const Checker& checker) {
    const char* name = "Ric(xi,xi) = 2n[beta^2 - alpha^2 - xi(alpha)]";
    if (!profile.alpha_expr || !profile.beta_expr)
        return skipped(name, kStructureGroup, name, "alpha or beta unavailable as an expression");
    const Expr& a = *profile.alpha_expr;
    const Expr& bt = *profile.beta_expr;
    std::vector<Expr> terms;
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) terms.push_back(b.ricci.at({i, j}) * s.xi.at({i}) * s.xi.at({j}));
    const Expr lhs = sum(std::move(terms));
    const Expr rhs = constant(2.0 * s.n) * (bt * bt - a * a - directional(a, s.xi));
    CheckReport r = checker.equal(name, kStructureGroup, name, lhs, rhs);
    return r;
}

}  // namespace solitonkit
