#pragma once

// Almost Riemann, Ricci and Yamabe solitons and the identities derived from them.
//
//   Riemann: 1/2 (L_V g).g + R = lambda 1/2 g.g      (. is the Kulkarni-Nomizu product)
//   Ricci:   1/2 L_V g + Ric = lambda g
//   Yamabe:  L_V g = (lambda - scal) g
//
// Every equation is written as lhs - lambda * unit = 0.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solitonkit/contact.hpp"
#include "solitonkit/geometry.hpp"
#include "solitonkit/report.hpp"
#include "solitonkit/tensor.hpp"

namespace solitonkit {

enum class SolitonKind { Riemann, Ricci, Yamabe };

inline const char* to_string(SolitonKind k) {
    switch (k) {
    case SolitonKind::Riemann: return "riemann";
    case SolitonKind::Ricci: return "ricci";
    case SolitonKind::Yamabe: return "yamabe";
    }
    return "?";
}

inline SolitonKind parse_soliton_kind(std::string_view s) {
    if (s == "riemann" || s == "Riemann") return SolitonKind::Riemann;
    if (s == "ricci" || s == "Ricci") return SolitonKind::Ricci;
    if (s == "yamabe" || s == "Yamabe") return SolitonKind::Yamabe;
    throw Error("unknown soliton kind '" + std::string(s) + "' (expected riemann, ricci or yamabe)");
}

struct SolitonCandidate {
    std::string name;
    SolitonKind kind = SolitonKind::Riemann;
    TensorField v;
    Expr lambda;
    bool collinear = false;    ///< asserts V = eta(V) xi
    bool expect_pass = true;   ///< negative controls set this to false
    std::string note;
};

/// Everything the checks read; the structure parts are optional.
struct SolitonGeometry {
    const Connection* conn = nullptr;
    const CurvatureBundle* curvature = nullptr;
    const AlmostContactStructure* structure = nullptr;
    const AlphaBetaProfile* profile = nullptr;

    const MetricField& metric() const { return conn->metric(); }
    int dim() const { return conn->dim(); }
    int n() const { return (dim() - 1) / 2; }
    bool has_alpha_beta() const { return structure && profile && profile->alpha_expr && profile->beta_expr; }
    const Expr& alpha() const { return *profile->alpha_expr; }
    const Expr& beta() const { return *profile->beta_expr; }
};

inline constexpr const char* kSolitonGroup = "soliton";
inline constexpr const char* kLemmaGroup = "collinear lemma";
inline constexpr const char* kContractedGroup = "contracted identities";
inline constexpr const char* kTransferGroup = "transfer";
inline constexpr const char* kQuasiEinsteinGroup = "quasi-Einstein";
inline constexpr const char* kSymmetryGroup = "symmetry conditions";
inline constexpr const char* kXiSolitonGroup = "xi solitons";
inline constexpr const char* kMultiGroup = "multi-soliton";

// ---------------------------------------------------------------------------
// Residuals

struct SolitonTerms {
    TensorField lhs;
    TensorField unit;
};

inline SolitonTerms soliton_terms(SolitonKind kind, const TensorField& v, const SolitonGeometry& geo) {
    const MetricField& g = geo.metric();
    const TensorField lie = lie_derivative(v, g.tensor());
    const CurvatureBundle& b = *geo.curvature;
    switch (kind) {
    case SolitonKind::Riemann:
        return {constant(0.5) * kulkarni_nomizu(lie, g.tensor()) + b.riemann,
                constant(0.5) * kulkarni_nomizu(g.tensor(), g.tensor())};
    case SolitonKind::Ricci: return {constant(0.5) * lie + b.ricci, g.tensor()};
    case SolitonKind::Yamabe: return {lie + b.scalar * g.tensor(), g.tensor()};
    }
    throw Error("unknown soliton kind");
}

inline const char* soliton_statement(SolitonKind kind) {
    switch (kind) {
    case SolitonKind::Riemann: return "1/2 (L_V g).g + R = lambda 1/2 g.g";
    case SolitonKind::Ricci: return "1/2 L_V g + Ric = lambda g";
    case SolitonKind::Yamabe: return "L_V g = (lambda - scal) g";
    }
    return "";
}

inline std::string soliton_check_name(SolitonKind kind) { return std::string(to_string(kind)) + " soliton equation"; }

/// Residual of the candidate's own soliton equation.
inline CheckReport soliton_residual(const SolitonCandidate& c, const SolitonGeometry& geo, const Checker& checker) {
    const SolitonTerms t = soliton_terms(c.kind, c.v, geo);
    const TensorField rhs = c.lambda * t.unit;
    CheckReport r = checker.equal(soliton_check_name(c.kind), kSolitonGroup, soliton_statement(c.kind), t.lhs, rhs);
    r.note = c.name;
    return r;
}

namespace detail {
inline void require_kind(const SolitonCandidate& c, SolitonKind k) {
    if (c.kind != k)
        throw Error("candidate '" + c.name + "' has kind " + to_string(c.kind) + ", expected " + to_string(k));
}
}  // namespace detail

inline CheckReport riemann_soliton_residual(const SolitonCandidate& c, const SolitonGeometry& geo, const Checker& checker) {
    detail::require_kind(c, SolitonKind::Riemann);
    return soliton_residual(c, geo, checker);
}

inline CheckReport ricci_soliton_residual(const SolitonCandidate& c, const SolitonGeometry& geo, const Checker& checker) {
    detail::require_kind(c, SolitonKind::Ricci);
    return soliton_residual(c, geo, checker);
}

inline CheckReport yamabe_soliton_residual(const SolitonCandidate& c, const SolitonGeometry& geo, const Checker& checker) {
    detail::require_kind(c, SolitonKind::Yamabe);
    return soliton_residual(c, geo, checker);
}

// ---------------------------------------------------------------------------
// Pointwise lambda

struct LambdaFit {
    std::vector<double> lambda;  ///< NaN where the point was skipped
    CheckReport irreducible;     ///< residual left with the best lambda
};

/// Least-squares lambda at each point over the frame components of lhs - lambda * unit.
inline LambdaFit solve_lambda_pointwise(SolitonKind kind, const TensorField& v, const SolitonGeometry& geo,
                                        const Checker& checker) {
    const SolitonTerms t = soliton_terms(kind, v, geo);
    LambdaFit fit;
    fit.lambda.assign(checker.points().size(), NAN);
    fit.irreducible = checker.run(
        std::string("irreducible ") + to_string(kind) + " residual", kSolitonGroup,
        std::string("min over lambda of |") + soliton_statement(kind) + "|", [&](PointContext& c) {
            const PointTensor a = c.eval(t.lhs);
            const PointTensor b = c.eval(t.unit);
            const PointTensor fa = c.project(a), fb = c.project(b);
            double ab = 0.0, bb = 0.0;
            for (std::size_t i = 0; i < fa.values.size(); ++i) {
                ab += fa.values[i] * fb.values[i];
                bb += fb.values[i] * fb.values[i];
            }
            if (!(bb > 0.0)) throw EvalError("degenerate normal equation: lambda coefficient vanishes");
            const double lam = ab / bb;
            fit.lambda[c.index] = lam;
            PointTensor lb = b;
            for (double& x : lb.values) x *= lam;
            return PointSample{a - lb, {a, lb}};
        });
    return fit;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace detail {

/// X -> omega(X) Y as a (1,1) field.
inline TensorField rank_one(const TensorField& y, const TensorField& omega) { return tensor_product(y, omega); }

/// omega o A for a 1-form and a (1,1) field.
inline TensorField form_compose(const TensorField& omega, const TensorField& a) {
    const int m = omega.dim();
    TensorField r(m, {Co});
    for (int x = 0; x < m; ++x) {
        std::vector<Expr> t;
        for (int k = 0; k < m; ++k) t.push_back(omega.at({k}) * a.at({k, x}));
        r.at({x}) = sum(std::move(t));
    }
    return r;
}

inline Expr ric_xi_xi(const CurvatureBundle& b, const TensorField& xi) {
    const int m = xi.dim();
    std::vector<Expr> t;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t.push_back(b.ricci.at({i, j}) * xi.at({i}) * xi.at({j}));
    return sum(std::move(t));
}

/// beta^2 - alpha^2 - xi(alpha)
inline Expr ric_xi_xi_coefficient(const SolitonGeometry& geo) {
    return geo.beta() * geo.beta() - geo.alpha() * geo.alpha() - directional(geo.alpha(), geo.structure->xi);
}

}  // namespace detail

/// Merges conclusion reports under hypotheses; not-applicable when a hypothesis fails.
inline CheckReport implication(std::string name, std::string group, std::string statement,
                               const std::vector<const CheckReport*>& hypotheses, std::vector<CheckReport> conclusions) {
    for (const CheckReport* h : hypotheses) {
        if (!h->passed()) {
            return not_applicable(std::move(name), std::move(group), std::move(statement),
                                  "hypothesis '" + h->name + "' does not hold (" + to_string(h->verdict) +
                                      ", max residual " + format_number(h->max_residual) + ")");
        }
    }
    CheckReport r;
    r.name = std::move(name);
    r.group = std::move(group);
    r.statement = std::move(statement);
    r.verdict = Verdict::Pass;
    r.evaluated = conclusions.empty() ? 0 : SIZE_MAX;
    std::string parts;
    const CheckReport* worst = nullptr;
    for (const CheckReport& c : conclusions) {
        if (c.verdict == Verdict::Fail) r.verdict = Verdict::Fail;
        if (c.verdict == Verdict::Skipped && r.verdict == Verdict::Pass) r.verdict = Verdict::Skipped;
        r.max_residual = std::max(r.max_residual, c.max_residual);
        r.max_normalized = std::max(r.max_normalized, c.max_normalized);
        r.tolerance = std::max(r.tolerance, c.tolerance);
        r.evaluated = std::min(r.evaluated, c.evaluated);
        r.failed = std::max(r.failed, c.failed);
        r.values[c.name] = c.max_residual;
        if (!parts.empty()) parts += "; ";
        parts += c.name + ": " + to_string(c.verdict);
        if (!worst || c.max_normalized > worst->max_normalized) worst = &c;
    }
    if (worst) {
        r.points = worst->points;
        r.mean_residual = worst->mean_residual;
    }
    r.note = "hypotheses hold; " + parts;
    return r;
}

/// A scalar expression that should be constant over the samples:
/// |v - mean| <= tol (1 + |mean|) at each point.
inline CheckReport constancy_check(std::string name, std::string group, std::string statement, const Expr& e,
                                   const Checker& checker, double tol = 1e-8) {
    double total = 0.0;
    std::size_t count = 0;
    checker.for_each_point([&](PointContext& c) {
        try {
            total += c.scalar(e);
            ++count;
        } catch (const EvalError&) {
        }
    });
    const double mean = count ? total / static_cast<double>(count) : 0.0;
    CheckReport r = checker.with_tolerance(tol).run(std::move(name), std::move(group), std::move(statement),
                                                    [&](PointContext& c) {
                                                        const double v = c.scalar(e);
                                                        const int m = checker.metric().dim();
                                                        return PointSample{point_scalar(m, v - mean),
                                                                           {point_scalar(m, mean)}};
                                                    });
    r.values["mean"] = mean;
    return r;
}

// ---------------------------------------------------------------------------
// Collinear potential fields V = f xi, f = eta(V)

struct CollinearData {
    Expr f;
    TensorField df;
    TensorField grad_f;
    Expr xi_f;
};

inline CollinearData collinear_data(const TensorField& v, const SolitonGeometry& geo) {
    const AlmostContactStructure& s = *geo.structure;
    CollinearData d;
    d.f = pair(s.eta, v);
    d.df = differential(d.f, geo.dim());
    d.grad_f = gradient(d.f, geo.metric());
    d.xi_f = directional(d.f, s.xi);
    return d;
}

/// nabla V, L_V g and div V against their closed forms for V = f xi.
inline std::vector<CheckReport> collinear_lemma_checks(const SolitonCandidate& c, const SolitonGeometry& geo,
                                                       const Checker& checker) {
    if (!c.collinear) throw Error("candidate '" + c.name + "' is not flagged as collinear with xi");
    const char* names[] = {"V collinear with xi", "nabla V (collinear form)", "L_V g (collinear form)",
                           "div V (collinear form)"};
    const char* statements[] = {
        "V = eta(V) xi",
        "nabla V = [d(eta(V)) - alpha eta(V) eta] (x) xi + eta(V)(alpha Id - beta phi)",
        "L_V g = d(eta(V)) (x) eta + eta (x) d(eta(V)) + 2 alpha eta(V)(g - eta (x) eta)",
        "div V = 2n alpha eta(V) + xi(eta(V))",
    };
    std::vector<CheckReport> out;
    if (!geo.structure) {
        for (int i = 0; i < 4; ++i)
            out.push_back(not_applicable(names[i], kLemmaGroup, statements[i], "no almost contact structure"));
        return out;
    }
    const AlmostContactStructure& s = *geo.structure;
    const CollinearData d = collinear_data(c.v, geo);
    out.push_back(checker.with_tolerance(1e-10).equal(names[0], kLemmaGroup, statements[0], c.v, d.f * s.xi));
    if (!geo.has_alpha_beta()) {
        for (int i = 1; i < 4; ++i)
            out.push_back(skipped(names[i], kLemmaGroup, statements[i], "alpha or beta unavailable as an expression"));
        return out;
    }
    const Expr& a = geo.alpha();
    const Expr& b = geo.beta();
    const int m = geo.dim();
    const TensorField nabla_v = nabla_as_endomorphism(c.v, *geo.conn);
    const TensorField ee = detail::rank_one(s.xi, d.df - (a * d.f) * s.eta) + d.f * (a * identity(m) - b * s.phi);
    out.push_back(checker.equal(names[1], kLemmaGroup, statements[1], nabla_v, ee));

    const TensorField& g = geo.metric().tensor();
    const TensorField pp = tensor_product(d.df, s.eta) + tensor_product(s.eta, d.df) +
                           (constant(2.0) * a * d.f) * (g - s.eta_eta());
    out.push_back(checker.equal(names[2], kLemmaGroup, statements[2], lie_derivative(c.v, g), pp));
    out.push_back(checker.equal(names[3], kLemmaGroup, statements[3], divergence(c.v, *geo.conn),
                                constant(2.0 * geo.n()) * a * d.f + d.xi_f));
    for (auto& r : out) r.note = c.name;
    return out;
}

// ---------------------------------------------------------------------------
// Contracted identities

/// Residual tensor of the once-contracted Riemann soliton equation:
/// 1/2 L_V g + Ric/(2n-1) - (2n lambda - div V)/(2n-1) g, with 2n = m - 1.
inline TensorField riemann_contracted_residual(const TensorField& v, const Expr& lambda, const SolitonGeometry& geo) {
    const MetricField& g = geo.metric();
    const double m = geo.dim();
    const Expr div = divergence(v, *geo.conn);
    return constant(0.5) * lie_derivative(v, g.tensor()) + constant(1.0 / (m - 2.0)) * geo.curvature->ricci -
           ((constant(m - 1.0) * lambda - div) / constant(m - 2.0)) * g.tensor();
}

/// scal - 2n[(2n+1) lambda - 2 div V]
inline Expr riemann_scalar_residual(const TensorField& v, const Expr& lambda, const SolitonGeometry& geo) {
    const double m = geo.dim();
    return geo.curvature->scalar -
           constant(m - 1.0) * (constant(m) * lambda - constant(2.0) * divergence(v, *geo.conn));
}

/// Contracting the Riemann residual over slots (1,4) gives (2n-1) times the
/// contracted residual, and its trace gives the scalar residual. Holds for any (V, lambda).
inline std::vector<CheckReport> contraction_coherence(const TensorField& v, const Expr& lambda, const SolitonGeometry& geo,
                                                      const Checker& checker) {
    const MetricField& g = geo.metric();
    const double m = geo.dim();
    const SolitonTerms t = soliton_terms(SolitonKind::Riemann, v, geo);
    const TensorField rho = t.lhs - lambda * t.unit;
    const TensorField e4 = riemann_contracted_residual(v, lambda, geo);
    const TensorField traced = contract(rho, 0, 3, &g);
    std::vector<CheckReport> out;
    out.push_back(checker.equal("contraction coherence", kContractedGroup,
                                "trace_(1,4) of the Riemann residual = (2n-1) x contracted residual", traced,
                                constant(m - 2.0) * e4));
    out.push_back(checker.equal("trace coherence", kContractedGroup, "trace of the contracted residual = scalar residual",
                                constant(m - 2.0) * contract(e4, 0, 1, &g)[0],
                                riemann_scalar_residual(v, lambda, geo)));
    return out;
}

/// Identities that follow from a passing soliton equation. `hypothesis` is the
/// candidate's own residual report; when it fails every identity is skipped.
inline std::vector<CheckReport> contracted_identity_checks(const SolitonCandidate& c, const SolitonGeometry& geo,
                                                           const Checker& checker, const CheckReport& hypothesis) {
    struct Item {
        std::string name, statement;
        bool needs_collinear;
    };
    std::vector<Item> items;
    if (c.kind == SolitonKind::Riemann) {
        items = {{"contracted Riemann equation", "1/2 L_V g + Ric/(2n-1) = (2n lambda - div V)/(2n-1) g", false},
                 {"scalar curvature (Riemann)", "scal = 2n[(2n+1) lambda - 2 div V]", false},
                 {"Weyl vanishes", "W = 0", false},
                 {"Ric (Riemann, collinear V)",
                  "Ric = -(2n-1)/2 [df (x) eta + eta (x) df - 2 alpha f eta (x) eta] + [2n lambda - (4n-1) alpha f - xi(f)] g",
                  true},
                 {"Q (Riemann, collinear V)",
                  "Q = -(2n-1)/2 {[df - 2 alpha f eta] (x) xi + eta (x) grad f} + [2n lambda - (4n-1) alpha f - xi(f)] Id",
                  true},
                 {"scal (Riemann, collinear V)", "scal = 2n[(2n+1) lambda - 4n alpha f - 2 xi(f)]", true}};
    } else if (c.kind == SolitonKind::Ricci) {
        items = {{"scalar curvature (Ricci)", "scal = (2n+1) lambda - div V", false},
                 {"Ric (Ricci, collinear V)",
                  "Ric = -1/2 [df (x) eta + eta (x) df] + (lambda - alpha f) g + alpha f eta (x) eta", true},
                 {"Q (Ricci, collinear V)",
                  "Q = -1/2 {[df - 2 alpha f eta] (x) xi + eta (x) grad f} + (lambda - alpha f) Id", true},
                 {"scal (Ricci, collinear V)", "scal = (2n+1) lambda - 2n alpha f - xi(f)", true}};
    } else {
        return {not_applicable("contracted identities", kContractedGroup, "", "no contracted identities for Yamabe kind")};
    }

    std::vector<CheckReport> out;
    if (!hypothesis.passed()) {
        for (const auto& it : items)
            out.push_back(skipped(it.name, kContractedGroup, it.statement,
                                  "hypothesis fails: " + hypothesis.name + " max residual " +
                                      format_number(hypothesis.max_residual)));
        for (auto& r : out) r.note = c.name + ": " + r.note;
        return out;
    }

    const MetricField& g = geo.metric();
    const CurvatureBundle& b = *geo.curvature;
    const int m = geo.dim();
    const double nn = geo.n();
    const bool collinear_ok = c.collinear && geo.has_alpha_beta();
    const char* collinear_why = !c.collinear ? "V is not flagged as collinear with xi"
                                             : "alpha or beta unavailable as an expression";
    std::optional<CollinearData> d;
    if (collinear_ok) d = collinear_data(c.v, geo);

    for (const auto& it : items) {
        if (it.needs_collinear && !collinear_ok) {
            out.push_back(not_applicable(it.name, kContractedGroup, it.statement, collinear_why));
            continue;
        }
        const std::string& nm = it.name;
        if (nm == "contracted Riemann equation") {
            out.push_back(checker.zero(nm, kContractedGroup, it.statement, riemann_contracted_residual(c.v, c.lambda, geo),
                                       {b.ricci, c.lambda * g.tensor()}));
        } else if (nm == "scalar curvature (Riemann)") {
            out.push_back(checker.equal(nm, kContractedGroup, it.statement, b.scalar,
                                        b.scalar - riemann_scalar_residual(c.v, c.lambda, geo)));
        } else if (nm == "Weyl vanishes") {
            if (m < 3)
                out.push_back(not_applicable(nm, kContractedGroup, it.statement, "dimension below 3"));
            else
                out.push_back(checker.zero(nm, kContractedGroup, it.statement, b.weyl, {b.riemann}));
        } else if (nm == "scalar curvature (Ricci)") {
            out.push_back(checker.equal(nm, kContractedGroup, it.statement, b.scalar,
                                        constant(m) * c.lambda - divergence(c.v, *geo.conn)));
        } else {
            const AlmostContactStructure& s = *geo.structure;
            const Expr& a = geo.alpha();
            const Expr af = a * d->f;
            const TensorField sym = tensor_product(d->df, s.eta) + tensor_product(s.eta, d->df);
            const TensorField q_rank = detail::rank_one(s.xi, d->df - (constant(2.0) * af) * s.eta) +
                                       detail::rank_one(d->grad_f, s.eta);
            if (nm == "Ric (Riemann, collinear V)") {
                const Expr coef = constant(2.0 * nn) * c.lambda - constant(4.0 * nn - 1.0) * af - d->xi_f;
                const TensorField rhs = constant(-(2.0 * nn - 1.0) / 2.0) * (sym - (constant(2.0) * af) * s.eta_eta()) +
                                        coef * g.tensor();
                out.push_back(checker.equal(nm, kContractedGroup, it.statement, b.ricci, rhs));
            } else if (nm == "Q (Riemann, collinear V)") {
                const Expr coef = constant(2.0 * nn) * c.lambda - constant(4.0 * nn - 1.0) * af - d->xi_f;
                const TensorField rhs = constant(-(2.0 * nn - 1.0) / 2.0) * q_rank + coef * identity(m);
                out.push_back(checker.equal(nm, kContractedGroup, it.statement, b.ricci_operator, rhs));
            } else if (nm == "scal (Riemann, collinear V)") {
                const Expr rhs = constant(2.0 * nn) * (constant(2.0 * nn + 1.0) * c.lambda - constant(4.0 * nn) * af -
                                                       constant(2.0) * d->xi_f);
                out.push_back(checker.equal(nm, kContractedGroup, it.statement, b.scalar, rhs));
            } else if (nm == "Ric (Ricci, collinear V)") {
                const TensorField rhs = constant(-0.5) * sym + (c.lambda - af) * g.tensor() + af * s.eta_eta();
                out.push_back(checker.equal(nm, kContractedGroup, it.statement, b.ricci, rhs));
            } else if (nm == "Q (Ricci, collinear V)") {
                const TensorField rhs = constant(-0.5) * q_rank + (c.lambda - af) * identity(m);
                out.push_back(checker.equal(nm, kContractedGroup, it.statement, b.ricci_operator, rhs));
            } else if (nm == "scal (Ricci, collinear V)") {
                const Expr rhs = constant(2.0 * nn + 1.0) * c.lambda - constant(2.0 * nn) * af - d->xi_f;
                out.push_back(checker.equal(nm, kContractedGroup, it.statement, b.scalar, rhs));
            }
        }
    }
    for (auto& r : out) r.note = c.name + (r.note.empty() ? "" : ": " + r.note);
    return out;
}

// ---------------------------------------------------------------------------
// Riemann -> Ricci transfer

struct TransferResult {
    std::optional<SolitonCandidate> derived;  ///< (V', lambda') when the hypothesis holds
    std::vector<CheckReport> reports;
};

/// V' = (m-2) V, lambda' = (m-1) lambda - div V; with m = 2n+1 these are
/// (2n-1) V and 2n lambda - div V. Closed forms are added for collinear V.
inline TransferResult transfer_riemann_to_ricci(const SolitonCandidate& c, const SolitonGeometry& geo,
                                                const Checker& checker, const CheckReport& hypothesis) {
    detail::require_kind(c, SolitonKind::Riemann);
    const char* stmt = "(V', lambda') = ((2n-1) V, 2n lambda - div V) is an almost Ricci soliton";
    const char* lam_stmt = "lambda = xi(f) + alpha f + beta^2 - alpha^2 - xi(alpha), f = eta(V)";
    const char* bar_stmt = "lambda' = (2n-1) xi(f) + 2n[beta^2 - alpha^2 - xi(alpha)], f = eta(V)";
    TransferResult out;
    if (!hypothesis.passed()) {
        const std::string why = "hypothesis fails: " + hypothesis.name + " max residual " +
                                format_number(hypothesis.max_residual);
        out.reports.push_back(skipped("transferred Ricci soliton", kTransferGroup, stmt, why));
        out.reports.push_back(skipped("transfer closed form for lambda", kTransferGroup, lam_stmt, why));
        out.reports.push_back(skipped("transfer closed form for lambda'", kTransferGroup, bar_stmt, why));
        for (auto& r : out.reports) r.note = c.name + ": " + r.note;
        return out;
    }
    const double m = geo.dim();
    SolitonCandidate d;
    d.name = c.name + "-transferred";
    d.kind = SolitonKind::Ricci;
    d.v = constant(m - 2.0) * c.v;
    d.lambda = constant(m - 1.0) * c.lambda - divergence(c.v, *geo.conn);
    d.collinear = c.collinear;
    CheckReport r = soliton_residual(d, geo, checker);
    r.name = "transferred Ricci soliton";
    r.group = kTransferGroup;
    r.statement = stmt;
    r.note = c.name;
    out.reports.push_back(std::move(r));

    if (!c.collinear || !geo.has_alpha_beta()) {
        const char* why = !c.collinear ? "V is not flagged as collinear with xi" : "alpha or beta unavailable";
        out.reports.push_back(not_applicable("transfer closed form for lambda", kTransferGroup, lam_stmt, why));
        out.reports.push_back(not_applicable("transfer closed form for lambda'", kTransferGroup, bar_stmt, why));
    } else {
        const CollinearData cd = collinear_data(c.v, geo);
        const Expr k = detail::ric_xi_xi_coefficient(geo);
        const double nn = geo.n();
        out.reports.push_back(checker.equal("transfer closed form for lambda", kTransferGroup, lam_stmt, c.lambda,
                                            cd.xi_f + geo.alpha() * cd.f + k));
        out.reports.push_back(checker.equal("transfer closed form for lambda'", kTransferGroup, bar_stmt, d.lambda,
                                            constant(2.0 * nn - 1.0) * cd.xi_f + constant(2.0 * nn) * k));
        for (std::size_t i = 1; i < out.reports.size(); ++i) out.reports[i].note = c.name;
    }
    out.derived = std::move(d);
    return out;
}

// ---------------------------------------------------------------------------
// Quasi-Einstein form Ric = a g + b eta (x) eta

struct QuasiEinsteinFit {
    std::vector<double> a, b;
    CheckReport residual;
    bool einstein = false;  ///< b vanishes at every sample
};

inline QuasiEinsteinFit quasi_einstein_decompose(const SolitonGeometry& geo, const Checker& checker) {
    if (!geo.structure) throw Error("quasi-Einstein decomposition needs an almost contact structure");
    const MetricField& g = geo.metric();
    const TensorField ee = geo.structure->eta_eta();
    const TensorField& ric = geo.curvature->ricci;
    QuasiEinsteinFit fit;
    fit.a.assign(checker.points().size(), NAN);
    fit.b.assign(checker.points().size(), NAN);
    fit.residual = checker.run("quasi-Einstein fit", kQuasiEinsteinGroup, "Ric = a g + b eta (x) eta", [&](PointContext& c) {
        const PointTensor r = c.eval(ric), pg = c.eval(g.tensor()), pe = c.eval(ee);
        const PointTensor fr = c.project(r), fg = c.project(pg), fe = c.project(pe);
        const auto rows = static_cast<Eigen::Index>(fr.values.size());
        Eigen::MatrixXd mat(rows, 2);
        Eigen::VectorXd rhs(rows);
        for (Eigen::Index i = 0; i < rows; ++i) {
            mat(i, 0) = fg.values[static_cast<std::size_t>(i)];
            mat(i, 1) = fe.values[static_cast<std::size_t>(i)];
            rhs(i) = fr.values[static_cast<std::size_t>(i)];
        }
        const Eigen::Vector2d ab = mat.colPivHouseholderQr().solve(rhs);
        fit.a[c.index] = ab(0);
        fit.b[c.index] = ab(1);
        PointTensor model = pg;
        for (std::size_t i = 0; i < model.values.size(); ++i) model.values[i] = ab(0) * pg.values[i] + ab(1) * pe.values[i];
        return PointSample{r - model, {r}};
    });
    const auto as = detail::sample_stats(fit.a);
    const auto bs = detail::sample_stats(fit.b);
    fit.einstein = fit.residual.passed() && bs.zero;
    fit.residual.values = {{"a_min", as.min}, {"a_max", as.max}, {"b_min", bs.min}, {"b_max", bs.max}};
    return fit;
}

// ---------------------------------------------------------------------------
// Symmetry conditions

/// Residual fields whose vanishing the propositions relate; all informational.
/// Commutation equivalents are added for collinear candidates.
inline std::vector<CheckReport> symmetry_condition_residuals(const SolitonGeometry& geo, const Checker& checker,
                                                             const SolitonCandidate* collinear = nullptr) {
    if (!geo.structure) throw Error("symmetry conditions need an almost contact structure");
    const AlmostContactStructure& s = *geo.structure;
    const CurvatureBundle& b = *geo.curvature;
    const TensorField& q = b.ricci_operator;
    const TensorField phi2 = s.phi_squared();
    std::vector<CheckReport> out;
    out.push_back(checker.equal("phi Q = Q phi", kSymmetryGroup, "phi o Q = Q o phi", compose(s.phi, q), compose(q, s.phi)));
    out.push_back(checker.equal("phi^2 Q = Q phi^2", kSymmetryGroup, "phi^2 o Q = Q o phi^2", compose(phi2, q),
                                compose(q, phi2)));
    if (collinear) {
        const CollinearData d = collinear_data(collinear->v, geo);
        CheckReport e1 = checker.equal("commutation equivalent (i)", kSymmetryGroup,
                                       "eta (x) phi(grad f) = [df o phi] (x) xi, f = eta(V)",
                                       detail::rank_one(apply(s.phi, d.grad_f), s.eta),
                                       detail::rank_one(s.xi, detail::form_compose(d.df, s.phi)));
        CheckReport e2 = checker.equal("commutation equivalent (ii)", kSymmetryGroup,
                                       "eta (x) grad f = df (x) xi, f = eta(V)", detail::rank_one(d.grad_f, s.eta),
                                       detail::rank_one(s.xi, d.df));
        e1.note = e2.note = collinear->name;
        out.push_back(std::move(e1));
        out.push_back(std::move(e2));
    }
    const TensorField nabla_ric = covariant_derivative(b.ricci, *geo.conn);
    const TensorField nabla_q = covariant_derivative(q, *geo.conn);  // slots (X, a, b)
    const int m = geo.dim();
    TensorField phi2_nq(m, {Co, Contra, Co});
    for_each_index(m, 3, [&](const std::vector<int>& ix) {
        std::vector<Expr> t;
        for (int k = 0; k < m; ++k) t.push_back(phi2.at({ix[1], k}) * nabla_q.at({ix[0], k, ix[2]}));
        phi2_nq.at(ix) = sum(std::move(t));
    });
    out.push_back(checker.zero("nabla Ric = 0", kSymmetryGroup, "nabla Ric = 0", nabla_ric, {b.ricci}));
    out.push_back(checker.zero("nabla Q = 0", kSymmetryGroup, "nabla Q = 0", nabla_q, {q}));
    out.push_back(checker.zero("phi^2 nabla Q = 0", kSymmetryGroup, "phi^2 o nabla Q = 0", phi2_nq, {q}));
    out.push_back(checker.zero("R(xi,.).Ric = 0", kSymmetryGroup, "Ric(R(xi,X)Y, Z) + Ric(Y, R(xi,X)Z) = 0",
                               curvature_action_on_ric(b, s.xi), {b.ricci}));
    for (auto& r : out) r.informational = true;
    return out;
}

/// For a passing collinear candidate: phi Q = Q phi iff (i), phi^2 Q = Q phi^2 iff (ii).
inline std::vector<CheckReport> commutation_iff_checks(const SolitonCandidate& c, const SolitonGeometry& geo,
                                                       const Checker& checker, const CheckReport& hypothesis) {
    const char* s1 = "phi o Q = Q o phi  <=>  eta (x) phi(grad f) = [df o phi] (x) xi";
    const char* s2 = "phi^2 o Q = Q o phi^2  <=>  eta (x) grad f = df (x) xi";
    std::vector<CheckReport> out;
    std::string why;
    if (c.kind == SolitonKind::Yamabe) why = "stated for Riemann and Ricci solitons only";
    else if (!c.collinear) why = "V is not flagged as collinear with xi";
    else if (!geo.structure) why = "no almost contact structure";
    if (!why.empty()) {
        out.push_back(not_applicable("commutation iff (i)", kSymmetryGroup, s1, why));
        out.push_back(not_applicable("commutation iff (ii)", kSymmetryGroup, s2, why));
        return out;
    }
    if (!hypothesis.passed()) {
        why = "hypothesis fails: " + hypothesis.name;
        out.push_back(not_applicable("commutation iff (i)", kSymmetryGroup, s1, why));
        out.push_back(not_applicable("commutation iff (ii)", kSymmetryGroup, s2, why));
        return out;
    }
    const auto rs = symmetry_condition_residuals(geo, checker, &c);
    auto iff = [&](const char* name, const char* stmt, const CheckReport& lhs, const CheckReport& rhs) {
        CheckReport r;
        r.name = name;
        r.group = kSymmetryGroup;
        r.statement = stmt;
        r.tolerance = checker.tolerance();
        r.evaluated = std::min(lhs.evaluated, rhs.evaluated);
        r.verdict = lhs.passed() == rhs.passed() ? Verdict::Pass : Verdict::Fail;
        r.values = {{"lhs_max_residual", lhs.max_residual}, {"rhs_max_residual", rhs.max_residual}};
        r.note = c.name + ": left side " + to_string(lhs.verdict) + ", right side " + to_string(rhs.verdict);
        return r;
    };
    out.push_back(iff("commutation iff (i)", s1, rs[0], rs[2]));
    out.push_back(iff("commutation iff (ii)", s2, rs[1], rs[3]));
    return out;
}

// ---------------------------------------------------------------------------
// Propositions for solitons with potential field xi

/// R(xi,Y)Z - (lambda - alpha)[g(Y,Z) xi - eta(Z) Y] for any (1,3) field in
/// (l, i, j, k) slot order.
inline TensorField xi_curvature_residual(const TensorField& riemann_up, const Expr& lambda, const Expr& alpha,
                                         const AlmostContactStructure& s) {
    const int m = s.dim();
    const TensorField& g = s.g.tensor();
    TensorField r(m, {Contra, Co, Co});
    for_each_index(m, 3, [&](const std::vector<int>& ix) {
        const int l = ix[0], y = ix[1], z = ix[2];
        std::vector<Expr> t;
        for (int i = 0; i < m; ++i) t.push_back(s.xi.at({i}) * riemann_up.at({l, i, y, z}));
        const Expr model = (lambda - alpha) * (g.at({y, z}) * s.xi.at({l}) - (l == y ? s.eta.at({z}) : constant(0.0)));
        r.at(ix) = sum(std::move(t)) - model;
    });
    return r;
}

/// The curvature an almost Riemann soliton forces: R = lambda/2 g.g - 1/2 (L_V g).g, as (1,3).
inline TensorField soliton_implied_curvature(const TensorField& v, const Expr& lambda, const MetricField& g) {
    const TensorField low = constant(0.5) * (lambda * kulkarni_nomizu(g.tensor(), g.tensor()) -
                                             kulkarni_nomizu(lie_derivative(v, g.tensor()), g.tensor()));
    return permute(raise_lower(low, 3, g), {3, 0, 1, 2});
}

/// Whether V equals xi at every sample (1e-10).
inline bool is_xi(const TensorField& v, const AlmostContactStructure& s, const Checker& checker) {
    return checker.with_tolerance(1e-10).equal("V = xi", kXiSolitonGroup, "V = xi", v, s.xi).passed();
}

/// Consequences of a passing (xi, lambda) Riemann or Ricci soliton.
inline std::vector<CheckReport> xi_soliton_checks(const SolitonCandidate& c, const SolitonGeometry& geo,
                                                  const Checker& checker, const CheckReport& hypothesis) {
    std::vector<CheckReport> out;
    if (c.kind == SolitonKind::Yamabe || !geo.structure)
        return {not_applicable("xi soliton propositions", kXiSolitonGroup, "",
                               !geo.structure ? "no almost contact structure" : "stated for Riemann and Ricci solitons")};
    const AlmostContactStructure& s = *geo.structure;
    if (!is_xi(c.v, s, checker))
        return {not_applicable("xi soliton propositions", kXiSolitonGroup, "", "V is not xi")};
    if (!hypothesis.passed())
        return {not_applicable("xi soliton propositions", kXiSolitonGroup, "",
                               "hypothesis fails: " + hypothesis.name + " max residual " +
                                   format_number(hypothesis.max_residual))};
    if (!geo.has_alpha_beta())
        return {skipped("xi soliton propositions", kXiSolitonGroup, "", "alpha or beta unavailable as an expression")};

    const bool riemann = c.kind == SolitonKind::Riemann;
    const MetricField& g = geo.metric();
    const CurvatureBundle& b = *geo.curvature;
    const int m = geo.dim();
    const double nn = geo.n();
    const Expr& a = geo.alpha();
    const Expr& lam = c.lambda;
    const TensorField ee = s.eta_eta();

    // Quasi-Einstein form and scalar curvature.
    const Expr qa = riemann ? constant(2.0 * nn) * lam - constant(4.0 * nn - 1.0) * a : lam - a;
    const Expr qb = riemann ? constant(2.0 * nn - 1.0) * a : a;
    out.push_back(checker.equal("quasi-Einstein form", kXiSolitonGroup,
                                riemann ? "Ric = [2n lambda - (4n-1) alpha] g + (2n-1) alpha eta (x) eta"
                                        : "Ric = (lambda - alpha) g + alpha eta (x) eta",
                                b.ricci, qa * g.tensor() + qb * ee));
    const Expr scal_rhs = riemann ? constant(2.0 * nn) * (constant(2.0 * nn + 1.0) * lam - constant(4.0 * nn) * a)
                                  : constant(2.0 * nn + 1.0) * lam - constant(2.0 * nn) * a;
    out.push_back(checker.equal("scalar curvature (xi soliton)", kXiSolitonGroup,
                                riemann ? "scal = 2n[(2n+1) lambda - 4n alpha]" : "scal = (2n+1) lambda - 2n alpha",
                                b.scalar, scal_rhs));

    const std::string& cls = geo.profile->classification;
    const bool beta_sasakian = cls == "beta-Sasakian" || cls == "Sasakian" || cls == "cosymplectic";
    if (beta_sasakian) {
        const Expr einstein_lambda = riemann ? b.scalar / constant(2.0 * nn * (2.0 * nn + 1.0)) : b.scalar / constant(m);
        std::vector<CheckReport> concl;
        concl.push_back(checker.equal("Einstein", kXiSolitonGroup, "Ric = scal/(2n+1) g", b.ricci,
                                      (b.scalar / constant(m)) * g.tensor()));
        concl.push_back(checker.equal("lambda from scal", kXiSolitonGroup,
                                      riemann ? "lambda = scal/(2n(2n+1))" : "lambda = scal/(2n+1)", lam, einstein_lambda));
        out.push_back(implication("beta-Sasakian is Einstein", kXiSolitonGroup,
                                  "beta-Sasakian with a (xi, lambda) soliton => Einstein", {&hypothesis}, std::move(concl)));
    } else {
        out.push_back(not_applicable("beta-Sasakian is Einstein", kXiSolitonGroup,
                                     "beta-Sasakian with a (xi, lambda) soliton => Einstein", "structure is " + cls));
    }
    if (cls == "Sasakian") {
        out.push_back(constancy_check("Sasakian scalar curvature constant", kXiSolitonGroup, "scal is constant", b.scalar,
                                      checker));
    } else {
        out.push_back(not_applicable("Sasakian scalar curvature constant", kXiSolitonGroup, "scal is constant",
                                     "structure is " + cls));
    }

    // Curvature along xi and the R(xi,.).Ric = 0 hypothesis (alpha-Kenmotsu, Riemann kind).
    const bool alpha_kenmotsu = geo.profile->beta_zero;
    if (riemann && alpha_kenmotsu) {
        out.push_back(checker.zero("curvature along xi", kXiSolitonGroup,
                                   "R(xi,Y)Z = (lambda - alpha)[g(Y,Z) xi - eta(Z) Y]",
                                   xi_curvature_residual(b.riemann_up, lam, a, s), {b.riemann_up}));
        const CheckReport d = checker.zero("R(xi,.).Ric = 0", kXiSolitonGroup, "Ric(R(xi,X)Y, Z) + Ric(Y, R(xi,X)Z) = 0",
                                           curvature_action_on_ric(b, s.xi), {b.ricci});
        std::vector<CheckReport> concl;
        concl.push_back(checker.equal("lambda = alpha", kXiSolitonGroup, "lambda = alpha", lam, a));
        concl.push_back(checker.equal("scal = -2n(2n-1) alpha", kXiSolitonGroup, "scal = -2n(2n-1) alpha", b.scalar,
                                      constant(-2.0 * nn * (2.0 * nn - 1.0)) * a));
        out.push_back(implication("alpha-Kenmotsu with R(xi,.).Ric = 0", kXiSolitonGroup,
                                  "R(xi,.).Ric = 0 => lambda = alpha and scal = -2n(2n-1) alpha", {&hypothesis, &d},
                                  std::move(concl)));
    } else {
        const char* why = riemann ? "structure is not alpha-Kenmotsu" : "stated for Riemann solitons";
        out.push_back(not_applicable("curvature along xi", kXiSolitonGroup,
                                     "R(xi,Y)Z = (lambda - alpha)[g(Y,Z) xi - eta(Z) Y]", why));
        out.push_back(not_applicable("alpha-Kenmotsu with R(xi,.).Ric = 0", kXiSolitonGroup,
                                     "R(xi,.).Ric = 0 => lambda = alpha and scal = -2n(2n-1) alpha", why));
    }

    // Covariant derivative of Ric.
    const TensorField dl = differential(lam, m);
    const TensorField da = differential(a, m);
    const TensorField neta = covariant_derivative(s.eta, *geo.conn);  // (X, Y)
    const double k1 = riemann ? 2.0 * nn - 1.0 : 1.0;
    TensorField o(m, {Co, Co, Co});
    for_each_index(m, 3, [&](const std::vector<int>& ix) {
        const int x = ix[0], y = ix[1], z = ix[2];
        const Expr lead = riemann ? constant(2.0 * nn) * dl.at({x}) - constant(4.0 * nn - 1.0) * da.at({x})
                                  : dl.at({x}) - da.at({x});
        o.at(ix) = lead * g(y, z) + constant(k1) * da.at({x}) * s.eta.at({y}) * s.eta.at({z}) +
                   constant(k1) * a * (neta.at({x, y}) * s.eta.at({z}) + neta.at({x, z}) * s.eta.at({y}));
    });
    const TensorField nabla_ric = covariant_derivative(b.ricci, *geo.conn);
    out.push_back(checker.equal("nabla Ric (xi soliton)", kXiSolitonGroup,
                                riemann ? "(nabla_X Ric)(Y,Z) = [2n X(lambda) - (4n-1) X(alpha)] g(Y,Z) + (2n-1) X(alpha) "
                                          "eta(Y)eta(Z) + (2n-1) alpha[(nabla_X eta)Y eta(Z) + (nabla_X eta)Z eta(Y)]"
                                        : "(nabla_X Ric)(Y,Z) = [X(lambda) - X(alpha)] g(Y,Z) + X(alpha) eta(Y)eta(Z) + "
                                          "alpha[(nabla_X eta)Y eta(Z) + (nabla_X eta)Z eta(Y)]",
                                nabla_ric, o));

    const CheckReport par_ric = checker.zero("nabla Ric = 0", kXiSolitonGroup, "nabla Ric = 0", nabla_ric, {b.ricci});
    {
        std::vector<CheckReport> concl;
        if (riemann)
            concl.push_back(checker.zero("d lambda = d alpha", kXiSolitonGroup, "d lambda = d alpha", dl - da, {dl}));
        else
            concl.push_back(checker.zero("d lambda = 0", kXiSolitonGroup, "d lambda = 0", dl, {}));
        out.push_back(implication("parallel Ric", kXiSolitonGroup,
                                  riemann ? "nabla Ric = 0 => d lambda = d alpha" : "nabla Ric = 0 => lambda constant",
                                  {&hypothesis, &par_ric}, std::move(concl)));
    }

    const TensorField& q = b.ricci_operator;
    const TensorField nabla_q = covariant_derivative(q, *geo.conn);
    const Expr scal_const = riemann ? constant(2.0 * nn * (2.0 * nn + 1.0)) * lam : constant(m) * lam;
    const char* scal_stmt = riemann ? "scal = 2n(2n+1) lambda" : "scal = (2n+1) lambda";
    {
        const CheckReport par_q = checker.zero("nabla Q = 0", kXiSolitonGroup, "nabla Q = 0", nabla_q, {q});
        std::vector<CheckReport> concl;
        concl.push_back(checker.equal("alpha = 0", kXiSolitonGroup, "alpha = 0", a, constant(0.0)));
        concl.push_back(checker.equal("scal formula", kXiSolitonGroup, scal_stmt, b.scalar, scal_const));
        concl.push_back(constancy_check("scal constant", kXiSolitonGroup, "scal is constant", b.scalar, checker));
        out.push_back(implication("parallel Q", kXiSolitonGroup,
                                  std::string("nabla Q = 0 => alpha = 0 and ") + scal_stmt + " constant",
                                  {&hypothesis, &par_q}, std::move(concl)));
    }
    {
        const TensorField phi2 = s.phi_squared();
        TensorField phi2_nq(m, {Co, Contra, Co});
        for_each_index(m, 3, [&](const std::vector<int>& ix) {
            std::vector<Expr> t;
            for (int k = 0; k < m; ++k) t.push_back(phi2.at({ix[1], k}) * nabla_q.at({ix[0], k, ix[2]}));
            phi2_nq.at(ix) = sum(std::move(t));
        });
        const CheckReport h = checker.zero("phi^2 nabla Q = 0", kXiSolitonGroup, "phi^2 o nabla Q = 0", phi2_nq, {q});
        std::vector<CheckReport> concl;
        concl.push_back(checker.equal("alpha = 0", kXiSolitonGroup, "alpha = 0", a, constant(0.0)));
        if (!(cls == "cosymplectic")) {
            concl.push_back(constancy_check("lambda constant", kXiSolitonGroup, "lambda is constant", lam, checker));
            concl.push_back(checker.equal("scal formula", kXiSolitonGroup, scal_stmt, b.scalar, scal_const));
        }
        out.push_back(implication("phi^2 nabla Q = 0", kXiSolitonGroup,
                                  std::string("phi^2 o nabla Q = 0 => cosymplectic, or alpha = 0, beta != 0, lambda "
                                              "constant and ") + scal_stmt,
                                  {&hypothesis, &h}, std::move(concl)));
    }
    for (auto& r : out) r.note = c.name + (r.note.empty() ? "" : ": " + r.note);
    return out;
}

// ---------------------------------------------------------------------------
// Several solitons on one manifold

namespace detail {

inline bool passes_mostly(const CheckReport& r) { return r.evaluated > 0 && r.pass_fraction() >= 0.95; }

inline bool same_values(const Checker& checker, const Expr& a, const Expr& b) {
    return checker.with_tolerance(1e-10).equal("same", kMultiGroup, "", a, b).passed();
}

inline bool same_field(const Checker& checker, const TensorField& a, const TensorField& b) {
    return checker.with_tolerance(1e-10).equal("same", kMultiGroup, "", a, b).passed();
}

}  // namespace detail

/// residuals[i] is the soliton residual of candidates[i]. A candidate counts
/// as passing when at least 95% of its evaluated points pass.
inline std::vector<CheckReport> multi_soliton_consistency(const std::vector<SolitonCandidate>& candidates,
                                                          const std::vector<CheckReport>& residuals,
                                                          const SolitonGeometry& geo, const Checker& checker) {
    if (candidates.size() != residuals.size()) throw Error("multi_soliton_consistency: one residual per candidate");
    std::vector<CheckReport> out;
    std::vector<std::size_t> passing;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (detail::passes_mostly(residuals[i])) passing.push_back(i);

    auto annotate = [&](CheckReport& r, const std::vector<std::size_t>& idx) {
        std::string names;
        for (std::size_t i : idx) {
            if (!names.empty()) names += ", ";
            names += candidates[i].name;
            if (residuals[i].failed > 0)
                names += " (" + std::to_string(residuals[i].failed) + " failing points)";
        }
        r.note = names + (r.note.empty() ? "" : "; " + r.note);
    };

    // (xi, lambda) passing two distinct kinds.
    if (geo.structure) {
        const AlmostContactStructure& s = *geo.structure;
        std::vector<bool> used(candidates.size(), false);
        for (std::size_t ii = 0; ii < passing.size(); ++ii) {
            const std::size_t i = passing[ii];
            if (used[i] || !is_xi(candidates[i].v, s, checker)) continue;
            std::vector<std::size_t> group{i};
            for (std::size_t jj = ii + 1; jj < passing.size(); ++jj) {
                const std::size_t j = passing[jj];
                if (used[j] || candidates[j].kind == candidates[i].kind) continue;
                bool kind_seen = false;
                for (std::size_t k : group) kind_seen |= candidates[k].kind == candidates[j].kind;
                if (kind_seen || !is_xi(candidates[j].v, s, checker)) continue;
                if (!detail::same_values(checker, candidates[i].lambda, candidates[j].lambda)) continue;
                group.push_back(j);
            }
            if (group.size() < 2) continue;
            for (std::size_t k : group) used[k] = true;
            const char* stmt = "(xi, lambda) solves two soliton kinds => alpha = beta = lambda = 0 and Ric = 0";
            CheckReport r;
            if (!geo.profile) {
                r = skipped("Ricci-flat cosymplectic", kMultiGroup, stmt, "no (alpha, beta) profile");
            } else {
                const Checker c = checker;
                std::vector<CheckReport> concl;
                const int m = geo.dim();
                concl.push_back(c.run("alpha = 0 and beta = 0", kMultiGroup, "alpha = beta = 0", [&](PointContext& ctx) {
                    const double a = geo.profile->alpha[ctx.index], bt = geo.profile->beta[ctx.index];
                    if (std::isnan(a)) throw EvalError("no fitted (alpha, beta) at this point");
                    return PointSample{point_scalar(m, std::max(std::abs(a), std::abs(bt))), {}};
                }));
                concl.push_back(c.equal("lambda = 0", kMultiGroup, "lambda = 0", candidates[i].lambda, constant(0.0)));
                concl.push_back(c.zero("Ric = 0", kMultiGroup, "Ric = 0", geo.curvature->ricci, {}));
                r = implication("Ricci-flat cosymplectic", kMultiGroup, stmt, {}, std::move(concl));
            }
            annotate(r, group);
            out.push_back(std::move(r));
        }
    }

    // (V, lambda) Riemann and (V, lambda') Ricci with the same V.
    for (std::size_t i : passing) {
        if (candidates[i].kind != SolitonKind::Riemann) continue;
        for (std::size_t j : passing) {
            if (candidates[j].kind != SolitonKind::Ricci) continue;
            if (!detail::same_field(checker, candidates[i].v, candidates[j].v)) continue;
            const char* stmt = "Riemann (V, lambda) and Ricci (V, lambda'), n > 1 => Ric = 2n/(4n-1)(2 lambda' - lambda) g "
                               "and lambda' = xi(eta(V)) + 2n[beta^2 - alpha^2 - xi(alpha)]";
            CheckReport r;
            if (geo.n() <= 1) {
                r = not_applicable("Einstein relation", kMultiGroup, stmt, "stated for n > 1 only; here n = 1");
            } else if (!geo.has_alpha_beta()) {
                r = skipped("Einstein relation", kMultiGroup, stmt, "alpha or beta unavailable as an expression");
            } else {
                const double nn = geo.n();
                const AlmostContactStructure& s = *geo.structure;
                const Expr& lam = candidates[i].lambda;
                const Expr& bar = candidates[j].lambda;
                const Expr f = pair(s.eta, candidates[i].v);
                const Expr xi_f = directional(f, s.xi);
                const Expr k = detail::ric_xi_xi_coefficient(geo);
                std::vector<CheckReport> concl;
                concl.push_back(checker.equal("Einstein relation", kMultiGroup, "Ric = 2n/(4n-1)(2 lambda' - lambda) g",
                                              geo.curvature->ricci,
                                              (constant(2.0 * nn / (4.0 * nn - 1.0)) * (constant(2.0) * bar - lam)) *
                                                  geo.metric().tensor()));
                concl.push_back(checker.equal("lambda' closed form", kMultiGroup,
                                              "lambda' = xi(eta(V)) + 2n[beta^2 - alpha^2 - xi(alpha)]", bar,
                                              xi_f + constant(2.0 * nn) * k));
                if (candidates[i].collinear)
                    concl.push_back(checker.equal("lambda closed form", kMultiGroup,
                                                  "lambda = 2 xi(eta(V)) + beta^2 - alpha^2 - xi(alpha)", lam,
                                                  constant(2.0) * xi_f + k));
                r = implication("Einstein relation", kMultiGroup, stmt, {}, std::move(concl));
            }
            annotate(r, {i, j});
            out.push_back(std::move(r));
        }
    }

    if (out.empty())
        out.push_back(not_applicable("multi-soliton consistency", kMultiGroup, "",
                                     passing.size() < 2 ? "fewer than two passing candidates"
                                                        : "no two passing candidates share a potential field"));
    return out;
}

}  // namespace solitonkit
