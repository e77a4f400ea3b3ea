#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include <gtest/gtest.h>

#include "solitonkit/soliton.hpp"
#include "support/fixtures.hpp"
#include "support/random_expr.hpp"

namespace solitonkit {
namespace {

using testing::E;
using testing::exprs;

// Owns everything a SolitonGeometry points at.
struct Bench {
    AlmostContactStructure s;
    std::unique_ptr<Connection> conn;
    std::unique_ptr<CurvatureBundle> curv;
    std::unique_ptr<AlphaBetaProfile> profile;
    std::unique_ptr<Checker> checker;
    std::vector<std::string> coords;

    Bench(AlmostContactStructure st, std::vector<Point> pts, std::vector<std::string> names = testing::xyz())
        : s(std::move(st)), coords(std::move(names)) {
        conn = std::make_unique<Connection>(s.g);
        curv = std::make_unique<CurvatureBundle>(riemann(*conn));
        checker = std::make_unique<Checker>(s.g, std::nullopt, std::move(pts), 1e-9);
        profile = std::make_unique<AlphaBetaProfile>(fit_alpha_beta(s, *conn, *checker));
    }

    SolitonGeometry geo() const { return {conn.get(), curv.get(), &s, profile.get()}; }
    const Checker& chk() const { return *checker; }

    SolitonCandidate cand(SolitonKind kind, std::vector<std::string> v, const std::string& lambda,
                          bool collinear = false) const {
        SolitonCandidate c;
        c.name = "probe";
        c.kind = kind;
        c.v = vector_field(exprs(v, coords));
        c.lambda = E(lambda, coords);
        c.collinear = collinear;
        return c;
    }
};

Bench kenmotsu() { return Bench(testing::kenmotsu_structure(), testing::sample_points(42, 20)); }
Bench flat() { return Bench(testing::flat_cosymplectic_structure(), testing::sample_points(42, 20, -1.0, 1.0)); }

/// g = e^{2z} sum dx_i^2 + dz^2 in dimension 5, phi pairing (x1,x2) and (x3,x4).
Bench kenmotsu5() {
    const std::vector<std::string> c{"a", "b", "u", "w", "z"};
    TensorField g(5, {Co, Co}), phi(5, {Contra, Co});
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            g.at({i, j}) = constant(0.0);
            phi.at({i, j}) = constant(0.0);
        }
    for (int i = 0; i < 4; ++i) g.at({i, i}) = E("exp(2*z)", c);
    g.at({4, 4}) = constant(1.0);
    phi.at({1, 0}) = constant(1.0);
    phi.at({0, 1}) = constant(-1.0);
    phi.at({3, 2}) = constant(1.0);
    phi.at({2, 3}) = constant(-1.0);
    AlmostContactStructure s(phi, vector_field(exprs({"0", "0", "0", "0", "1"}, c)),
                             one_form(exprs({"0", "0", "0", "0", "1"}, c)), MetricField(g), constant(1.0), constant(0.0));
    std::vector<Point> pts;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1, 1), w(1.1, 2.0);
    for (int k = 0; k < 12; ++k) pts.push_back({u(rng), u(rng), u(rng), u(rng), w(rng)});
    return Bench(std::move(s), std::move(pts), c);
}

const CheckReport& by_name(const std::vector<CheckReport>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.name == name) return r;
    throw std::runtime_error("no report " + name);
}

// ---------------------------------------------------------------------------

TEST(Riemann, ExampleCandidatePasses) {
    const Bench k = kenmotsu();
    const CheckReport r = riemann_soliton_residual(k.cand(SolitonKind::Riemann, {"0", "0", "exp(z)"}, "2*exp(z) - 1"),
                                                   k.geo(), k.chk());
    EXPECT_TRUE(r.passed());
    EXPECT_LT(r.max_residual, 1e-9);
    EXPECT_EQ(r.evaluated, 20u);
}

TEST(Riemann, PerturbedLambdaFailsByOneInFrame) {
    // Raising lambda by 1 leaves -1/2 g.g, whose frame component (1,2,2,1) is -1.
    const Bench k = kenmotsu();
    const CheckReport r =
        riemann_soliton_residual(k.cand(SolitonKind::Riemann, {"0", "0", "exp(z)"}, "2*exp(z)"), k.geo(), k.chk());
    EXPECT_EQ(r.verdict, Verdict::Fail);
    EXPECT_NEAR(r.max_residual, 1.0, 1e-9);
    for (const auto& p : r.points) {
        ASSERT_EQ(p.worst_index.size(), 4u);
        EXPECT_NE(p.worst_index[0], p.worst_index[1]);
    }
}

TEST(Riemann, FlatZeroCandidate) {
    const Bench f = flat();
    const CheckReport r = riemann_soliton_residual(f.cand(SolitonKind::Riemann, {"0", "0", "0"}, "0"), f.geo(), f.chk());
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.max_residual, 0.0);
}

TEST(Riemann, WrongKindRejected) {
    const Bench f = flat();
    EXPECT_THROW(riemann_soliton_residual(f.cand(SolitonKind::Ricci, {"0", "0", "0"}, "0"), f.geo(), f.chk()), Error);
}

TEST(Ricci, ExampleCandidatePasses) {
    const Bench k = kenmotsu();
    const CheckReport r =
        ricci_soliton_residual(k.cand(SolitonKind::Ricci, {"0", "0", "exp(z)"}, "exp(z) - 2"), k.geo(), k.chk());
    EXPECT_TRUE(r.passed());
    EXPECT_LT(r.max_residual, 1e-9);
}

TEST(Ricci, XiCannotBeAPotential) {
    // 1/2 L_xi g + Ric = diag(-1,-1,-2) in the frame; best lambda -4/3 leaves 2/3.
    const Bench k = kenmotsu();
    const auto fit = solve_lambda_pointwise(SolitonKind::Ricci, k.s.xi, k.geo(), k.chk());
    EXPECT_EQ(fit.irreducible.verdict, Verdict::Fail);
    EXPECT_NEAR(fit.irreducible.max_residual, 2.0 / 3.0, 1e-12);
    for (double l : fit.lambda) EXPECT_NEAR(l, -4.0 / 3.0, 1e-12);
    const CheckReport r = ricci_soliton_residual(k.cand(SolitonKind::Ricci, {"0", "0", "1"}, "z"), k.geo(), k.chk());
    EXPECT_EQ(r.verdict, Verdict::Fail);
}

TEST(Yamabe, ExampleCandidateAndXiControl) {
    const Bench k = kenmotsu();
    EXPECT_TRUE(yamabe_soliton_residual(k.cand(SolitonKind::Yamabe, {"0", "0", "exp(z)"}, "2*exp(z) - 6"), k.geo(), k.chk())
                    .passed());
    // L_xi g + scal g = diag(-4,-4,-6); best lambda -14/3 leaves 4/3.
    const auto fit = solve_lambda_pointwise(SolitonKind::Yamabe, k.s.xi, k.geo(), k.chk());
    EXPECT_NEAR(fit.irreducible.max_residual, 4.0 / 3.0, 1e-12);
    for (double l : fit.lambda) EXPECT_NEAR(l, -14.0 / 3.0, 1e-12);
    const Bench f = flat();
    EXPECT_TRUE(yamabe_soliton_residual(f.cand(SolitonKind::Yamabe, {"0", "0", "0"}, "0"), f.geo(), f.chk()).passed());
}

TEST(SolveLambda, RecoversExampleFunctions) {
    const Bench k = kenmotsu();
    const TensorField v = vector_field(exprs({"0", "0", "exp(z)"}));
    const auto riem = solve_lambda_pointwise(SolitonKind::Riemann, v, k.geo(), k.chk());
    const auto ric = solve_lambda_pointwise(SolitonKind::Ricci, v, k.geo(), k.chk());
    EXPECT_TRUE(riem.irreducible.passed());
    EXPECT_LT(riem.irreducible.max_residual, 1e-9);
    for (std::size_t i = 0; i < k.chk().points().size(); ++i) {
        const double z = k.chk().points()[i][2];
        EXPECT_NEAR(riem.lambda[i], 2 * std::exp(z) - 1, 1e-10);
        EXPECT_NEAR(ric.lambda[i], std::exp(z) - 2, 1e-10);
    }
    const Bench f = flat();
    const auto zero = solve_lambda_pointwise(SolitonKind::Ricci, vector_field(exprs({"0", "0", "0"})), f.geo(), f.chk());
    for (double l : zero.lambda) EXPECT_EQ(l, 0.0);
}

TEST(SolveLambda, XiRiemannHasIrreducibleResidual) {
    // Frame values of 1/2 L_xi g.g + R on (12,13,23) planes: 1, 0, 0 against unit 1.
    const Bench k = kenmotsu();
    const auto fit = solve_lambda_pointwise(SolitonKind::Riemann, k.s.xi, k.geo(), k.chk());
    EXPECT_EQ(fit.irreducible.verdict, Verdict::Fail);
    EXPECT_NEAR(fit.irreducible.max_residual, 2.0 / 3.0, 1e-12);
    for (double l : fit.lambda) EXPECT_NEAR(l, 1.0 / 3.0, 1e-12);
}

// Property: re-evaluating with the recovered lambda reproduces the irreducible residual.
TEST(Properties, LambdaScalingCoherence) {
    const Bench k = kenmotsu();
    testing::RandomExpr gen(testing::xyz(), 8);
    for (SolitonKind kind : {SolitonKind::Riemann, SolitonKind::Ricci, SolitonKind::Yamabe}) {
        const TensorField v = vector_field({gen(2), gen(2), gen(2)});
        const auto fit = solve_lambda_pointwise(kind, v, k.geo(), k.chk());
        const SolitonTerms t = soliton_terms(kind, v, k.geo());
        for (std::size_t i = 0; i < k.chk().points().size(); ++i) {
            if (!fit.irreducible.points[i].evaluated) continue;
            const Checker one = k.chk().with_points({k.chk().points()[i]});
            SolitonCandidate c;
            c.kind = kind;
            c.v = v;
            c.lambda = constant(fit.lambda[i]);
            const CheckReport r = soliton_residual(c, k.geo(), one);
            EXPECT_NEAR(r.points[0].residual, fit.irreducible.points[i].residual,
                        1e-12 * (1 + fit.irreducible.points[i].scale));
        }
    }
}

TEST(Lemma, ExampleCollinearField) {
    const Bench k = kenmotsu();
    const auto rs = collinear_lemma_checks(k.cand(SolitonKind::Riemann, {"0", "0", "exp(z)"}, "2*exp(z) - 1", true),
                                           k.geo(), k.chk());
    ASSERT_EQ(rs.size(), 4u);
    for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.name << " " << r.max_residual;
}

TEST(Lemma, FlatCosymplecticFunctionMultiple) {
    const Bench f = flat();
    const auto rs = collinear_lemma_checks(f.cand(SolitonKind::Ricci, {"0", "0", "z^2 + sin(z)"}, "0", true), f.geo(), f.chk());
    for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.name;
}

TEST(Lemma, XiReducesToStructureFormula) {
    const Bench k = kenmotsu();
    const auto rs = collinear_lemma_checks(k.cand(SolitonKind::Ricci, {"0", "0", "1"}, "0", true), k.geo(), k.chk());
    for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.name;
}

TEST(Lemma, RequiresCollinearFlagAndDetectsViolation) {
    const Bench k = kenmotsu();
    EXPECT_THROW(collinear_lemma_checks(k.cand(SolitonKind::Ricci, {"0", "0", "1"}, "0"), k.geo(), k.chk()), Error);
    const auto rs = collinear_lemma_checks(k.cand(SolitonKind::Ricci, {"1", "0", "1"}, "0", true), k.geo(), k.chk());
    EXPECT_FALSE(by_name(rs, "V collinear with xi").passed());
}

TEST(Contracted, ExampleRiemannCandidate) {
    const Bench k = kenmotsu();
    const auto c = k.cand(SolitonKind::Riemann, {"0", "0", "exp(z)"}, "2*exp(z) - 1", true);
    const CheckReport h = soliton_residual(c, k.geo(), k.chk());
    const auto rs = contracted_identity_checks(c, k.geo(), k.chk(), h);
    ASSERT_EQ(rs.size(), 6u);
    for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.name << " " << r.max_residual;
}

TEST(Contracted, ExampleRicciCandidate) {
    const Bench k = kenmotsu();
    const auto c = k.cand(SolitonKind::Ricci, {"0", "0", "exp(z)"}, "exp(z) - 2", true);
    const auto rs = contracted_identity_checks(c, k.geo(), k.chk(), soliton_residual(c, k.geo(), k.chk()));
    ASSERT_EQ(rs.size(), 4u);
    for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.name << " " << r.max_residual;
}

TEST(Contracted, FailingHypothesisSkips) {
    const Bench k = kenmotsu();
    const auto c = k.cand(SolitonKind::Riemann, {"0", "0", "exp(z)"}, "2*exp(z)", true);
    const auto rs = contracted_identity_checks(c, k.geo(), k.chk(), soliton_residual(c, k.geo(), k.chk()));
    for (const auto& r : rs) EXPECT_EQ(r.verdict, Verdict::Skipped);
}

TEST(Contracted, FlatZeroCandidate) {
    const Bench f = flat();
    const auto c = f.cand(SolitonKind::Riemann, {"0", "0", "0"}, "0", true);
    for (const auto& r : contracted_identity_checks(c, f.geo(), f.chk(), soliton_residual(c, f.geo(), f.chk())))
        EXPECT_TRUE(r.passed()) << r.name;
}

// Property: contraction coherence holds for arbitrary (V, lambda).
TEST(Properties, ContractionCoherence) {
    for (const Bench& s : {kenmotsu(), kenmotsu5()}) {
        testing::RandomExpr gen(s.coords, 21);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Expr> v;
            for (std::size_t i = 0; i < s.coords.size(); ++i) v.push_back(gen(2));
            const auto rs = contraction_coherence(vector_field(v), gen(2), s.geo(), s.chk());
            for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.name << " " << r.max_normalized;
        }
    }
}

TEST(Transfer, ExampleReproducesRicciFunction) {
    const Bench k = kenmotsu();
    const auto c = k.cand(SolitonKind::Riemann, {"0", "0", "exp(z)"}, "2*exp(z) - 1", true);
    const auto t = transfer_riemann_to_ricci(c, k.geo(), k.chk(), soliton_residual(c, k.geo(), k.chk()));
    ASSERT_TRUE(t.derived);
    for (const auto& p : k.chk().points())
        EXPECT_NEAR(evaluate(t.derived->lambda, p), std::exp(p[2]) - 2, 1e-10);
    for (const auto& r : t.reports) EXPECT_TRUE(r.passed()) << r.name;
}

TEST(Transfer, FlatAndSkipped) {
    const Bench f = flat();
    const auto c = f.cand(SolitonKind::Riemann, {"0", "0", "0"}, "0", true);
    const auto t = transfer_riemann_to_ricci(c, f.geo(), f.chk(), soliton_residual(c, f.geo(), f.chk()));
    ASSERT_TRUE(t.derived);
    for (const auto& r : t.reports) EXPECT_TRUE(r.passed());
    const Bench k = kenmotsu();
    const auto bad = k.cand(SolitonKind::Riemann, {"0", "0", "1"}, "0", true);
    const auto tb = transfer_riemann_to_ricci(bad, k.geo(), k.chk(), soliton_residual(bad, k.geo(), k.chk()));
    EXPECT_FALSE(tb.derived);
    for (const auto& r : tb.reports) EXPECT_EQ(r.verdict, Verdict::Skipped);
}

TEST(Transfer, FiveDimensionalKenmotsu) {
    const Bench k = kenmotsu5();
    const auto c = k.cand(SolitonKind::Riemann, {"0", "0", "0", "0", "exp(z)"}, "2*exp(z) - 1", true);
    const CheckReport h = soliton_residual(c, k.geo(), k.chk());
    ASSERT_TRUE(h.passed()) << h.max_residual;
    const auto t = transfer_riemann_to_ricci(c, k.geo(), k.chk().with_tolerance(1e-8), h);
    for (const auto& r : t.reports) EXPECT_TRUE(r.passed()) << r.name;
    for (const auto& p : k.chk().points())
        EXPECT_NEAR(evaluate(t.derived->lambda, p), 4 * (2 * std::exp(p[4]) - 1) - 5 * std::exp(p[4]), 1e-9);
}

TEST(QuasiEinstein, ExampleIsEinstein) {
    const Bench k = kenmotsu();
    const auto q = quasi_einstein_decompose(k.geo(), k.chk().with_tolerance(1e-10));
    EXPECT_TRUE(q.residual.passed());
    EXPECT_TRUE(q.einstein);
    for (std::size_t i = 0; i < q.a.size(); ++i) {
        EXPECT_NEAR(q.a[i], -2.0, 1e-12);
        EXPECT_NEAR(q.b[i], 0.0, 1e-12);
    }
    const Bench f = flat();
    const auto qf = quasi_einstein_decompose(f.geo(), f.chk());
    for (std::size_t i = 0; i < qf.a.size(); ++i) {
        EXPECT_EQ(qf.a[i], 0.0);
        EXPECT_EQ(qf.b[i], 0.0);
    }
}

TEST(Symmetry, ExampleResiduals) {
    const Bench k = kenmotsu();
    const auto c = k.cand(SolitonKind::Riemann, {"0", "0", "exp(z)"}, "2*exp(z) - 1", true);
    const auto rs = symmetry_condition_residuals(k.geo(), k.chk(), &c);
    for (const auto& r : rs) {
        EXPECT_TRUE(r.informational);
        EXPECT_TRUE(r.passed()) << r.name << " " << r.max_residual;
    }
    const auto iff = commutation_iff_checks(c, k.geo(), k.chk(), soliton_residual(c, k.geo(), k.chk()));
    for (const auto& r : iff) EXPECT_TRUE(r.passed()) << r.name;
}

TEST(Symmetry, NonEinsteinMetricShowsCurvatureAction) {
    // Smoke test: a non-Einstein structure gives a nonzero R(xi,.).Ric.
    const MetricField g(bilinear_form(3, exprs({"exp(z^2)", "0", "0", "0", "exp(z^2)", "0", "0", "0", "1"})));
    const auto base = testing::kenmotsu_structure(false);
    const Bench s(AlmostContactStructure(base.phi, base.xi, base.eta, g), testing::sample_points(42, 10));
    const auto rs = symmetry_condition_residuals(s.geo(), s.chk());
    EXPECT_GT(by_name(rs, "R(xi,.).Ric = 0").max_residual, 1e-6);
}

TEST(XiSoliton, CurvatureAlongXiFollowsFromSolitonEquation) {
    // Build the curvature a (xi, lambda) Riemann soliton forces on alpha-Kenmotsu
    // metrics and confirm R(xi,Y)Z = (lambda - alpha)[g(Y,Z) xi - eta(Z) Y].
    for (const char* w : {"exp(2*z)", "exp(4*z)"}) {
        const MetricField g(bilinear_form(3, exprs({w, "0", "0", "0", w, "0", "0", "0", "1"})));
        const double alpha = std::string(w) == "exp(2*z)" ? 1.0 : 2.0;
        const auto base = testing::kenmotsu_structure(false);
        const AlmostContactStructure s(base.phi, base.xi, base.eta, g);
        const Expr lambda = E("3 + z*x");
        const TensorField implied = soliton_implied_curvature(s.xi, lambda, g);
        const Checker chk(g, std::nullopt, testing::sample_points(1, 15), 1e-9);
        const CheckReport r = chk.zero("eq", "t", "", xi_curvature_residual(implied, lambda, constant(alpha), s), {implied});
        EXPECT_TRUE(r.passed()) << w << " " << r.max_residual;
        const CheckReport wrong =
            chk.zero("eq", "t", "", xi_curvature_residual(implied, lambda, constant(alpha + 1), s), {implied});
        EXPECT_FALSE(wrong.passed());
    }
}

TEST(XiSoliton, FlatCosymplecticPropositions) {
    const Bench f = flat();
    for (SolitonKind kind : {SolitonKind::Riemann, SolitonKind::Ricci}) {
        const auto c = f.cand(kind, {"0", "0", "1"}, "0", true);
        const auto rs = xi_soliton_checks(c, f.geo(), f.chk(), soliton_residual(c, f.geo(), f.chk()));
        for (const auto& r : rs)
            EXPECT_TRUE(r.passed() || r.verdict == Verdict::NotApplicable) << r.name << " " << r.note;
        EXPECT_TRUE(by_name(rs, "quasi-Einstein form").passed());
        EXPECT_TRUE(by_name(rs, "parallel Q").passed());
    }
}

TEST(XiSoliton, NotApplicableWithoutPassingHypothesis) {
    const Bench k = kenmotsu();
    const auto c = k.cand(SolitonKind::Riemann, {"0", "0", "1"}, "1/3", true);
    const auto rs = xi_soliton_checks(c, k.geo(), k.chk(), soliton_residual(c, k.geo(), k.chk()));
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_EQ(rs[0].verdict, Verdict::NotApplicable);
}

TEST(Multi, FlatCosymplecticTripleKind) {
    const Bench f = flat();
    std::vector<SolitonCandidate> cs;
    std::vector<CheckReport> rs;
    for (SolitonKind kind : {SolitonKind::Riemann, SolitonKind::Ricci, SolitonKind::Yamabe}) {
        cs.push_back(f.cand(kind, {"0", "0", "1"}, "0"));
        rs.push_back(soliton_residual(cs.back(), f.geo(), f.chk()));
        EXPECT_TRUE(rs.back().passed());
    }
    const auto out = multi_soliton_consistency(cs, rs, f.geo(), f.chk().with_tolerance(1e-10));
    ASSERT_EQ(out.size(), 2u);
    const CheckReport& flat_report = by_name(out, "Ricci-flat cosymplectic");
    EXPECT_TRUE(flat_report.passed()) << flat_report.note;
    EXPECT_LE(flat_report.max_residual, 1e-10);
    EXPECT_EQ(by_name(out, "Einstein relation").verdict, Verdict::NotApplicable);
}

TEST(Multi, ExampleXiCandidatesNotApplicable) {
    const Bench k = kenmotsu();
    std::vector<SolitonCandidate> cs{k.cand(SolitonKind::Riemann, {"0", "0", "1"}, "1/3"),
                                     k.cand(SolitonKind::Ricci, {"0", "0", "1"}, "-4/3")};
    std::vector<CheckReport> rs;
    for (const auto& c : cs) rs.push_back(soliton_residual(c, k.geo(), k.chk()));
    const auto out = multi_soliton_consistency(cs, rs, k.geo(), k.chk());
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].verdict, Verdict::NotApplicable);
}

TEST(Multi, ExampleSharedFieldIsNotApplicableAtNEqualsOne) {
    const Bench k = kenmotsu();
    std::vector<SolitonCandidate> cs{k.cand(SolitonKind::Riemann, {"0", "0", "exp(z)"}, "2*exp(z) - 1", true),
                                     k.cand(SolitonKind::Ricci, {"0", "0", "exp(z)"}, "exp(z) - 2", true)};
    std::vector<CheckReport> rs;
    for (const auto& c : cs) rs.push_back(soliton_residual(c, k.geo(), k.chk()));
    const auto out = multi_soliton_consistency(cs, rs, k.geo(), k.chk());
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].name, "Einstein relation");
    EXPECT_EQ(out[0].verdict, Verdict::NotApplicable);
}

TEST(Multi, FiveDimensionalEinsteinRelation) {
    const Bench k = kenmotsu5();
    std::vector<SolitonCandidate> cs{k.cand(SolitonKind::Riemann, {"0", "0", "0", "0", "exp(z)"}, "2*exp(z) - 1", true),
                                     k.cand(SolitonKind::Ricci, {"0", "0", "0", "0", "exp(z)"}, "exp(z) - 4", true)};
    std::vector<CheckReport> rs;
    for (const auto& c : cs) {
        rs.push_back(soliton_residual(c, k.geo(), k.chk()));
        ASSERT_TRUE(rs.back().passed()) << to_string(c.lambda);
    }
    const auto out = multi_soliton_consistency(cs, rs, k.geo(), k.chk().with_tolerance(1e-8));
    ASSERT_EQ(out.size(), 1u);
    EXPECT_TRUE(out[0].passed()) << out[0].note;
    EXPECT_EQ(out[0].values.size(), 3u);
}

TEST(Weyl, FiveDimensionalSolitonMetricIsConformallyFlat) {
    const Bench k = kenmotsu5();
    const auto c = k.cand(SolitonKind::Riemann, {"0", "0", "0", "0", "exp(z)"}, "2*exp(z) - 1", true);
    const auto rs = contracted_identity_checks(c, k.geo(), k.chk(), soliton_residual(c, k.geo(), k.chk()));
    const CheckReport& w = by_name(rs, "Weyl vanishes");
    EXPECT_TRUE(w.passed());
    EXPECT_EQ(w.evaluated, 12u);
}

}  // namespace
}  // namespace solitonkit
