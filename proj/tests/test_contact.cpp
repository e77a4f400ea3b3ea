#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "solitonkit/contact.hpp"
#include "solitonkit/geometry.hpp"
#include "support/fixtures.hpp"

namespace solitonkit {
namespace {

using testing::E;
using testing::exprs;

Checker checker_for(const MetricField& g, int count = 20, double zlo = 1.1, double zhi = 2.0) {
    return Checker(g, std::nullopt, testing::sample_points(42, count, zlo, zhi), 1e-9);
}

bool all_pass(const std::vector<CheckReport>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const CheckReport& r) { return r.passed(); });
}

const CheckReport& by_name(const std::vector<CheckReport>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.name == name) return r;
    throw std::runtime_error("no report " + name);
}

// Standard contact metric structure on R^3: eta = (dz - y dx)/2, xi = 2 d_z.
AlmostContactStructure sasakian_r3(double phi_sign) {
    const TensorField eta = one_form(exprs({"-y/2", "0", "1/2"}));
    TensorField g = constant(0.25) * bilinear_form(3, exprs({"1", "0", "0", "0", "1", "0", "0", "0", "0"}));
    g = g + tensor_product(eta, eta);
    const TensorField phi = constant(phi_sign) * endomorphism(3, exprs({"0", "1", "0", "-1", "0", "0", "0", "y", "0"}));
    return AlmostContactStructure(phi, vector_field(exprs({"0", "0", "2"})), eta, MetricField(g));
}

TEST(Structure, KenmotsuExampleValidates) {
    const auto s = testing::kenmotsu_structure();
    const auto rs = validate_structure(s, checker_for(s.g).with_tolerance(1e-10));
    EXPECT_EQ(rs.size(), 7u);
    for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.name << " " << r.max_residual;
    EXPECT_EQ(s.n, 1);
}

TEST(Structure, ScaledEtaBreaksNormalization) {
    const auto base = testing::kenmotsu_structure();
    const AlmostContactStructure s(base.phi, base.xi, one_form(exprs({"0", "0", "2"})), base.g);
    const auto rs = validate_structure(s, checker_for(s.g));
    EXPECT_FALSE(by_name(rs, "eta(xi) = 1").passed());
    EXPECT_NEAR(by_name(rs, "eta(xi) = 1").max_residual, 1.0, 1e-15);
}

TEST(Structure, FlatCosymplecticValidates) {
    const auto s = testing::flat_cosymplectic_structure();
    EXPECT_TRUE(all_pass(validate_structure(s, checker_for(s.g))));
}

TEST(Structure, EvenDimensionRejected) {
    const MetricField g = testing::flat_metric(2);
    EXPECT_THROW(AlmostContactStructure(identity(2), vector_field(exprs({"1", "0"}, {"x", "y"})),
                                        one_form(exprs({"1", "0"}, {"x", "y"})), g),
                 ShapeError);
}

TEST(AlphaBeta, KenmotsuExample) {
    const auto s = testing::kenmotsu_structure();
    const Connection conn(s.g);
    const auto p = fit_alpha_beta(s, conn, checker_for(s.g));
    EXPECT_TRUE(p.fit.passed()) << p.fit.max_residual;
    EXPECT_LT(p.fit.max_residual, 1e-9);
    for (std::size_t i = 0; i < p.alpha.size(); ++i) {
        EXPECT_NEAR(p.alpha[i], 1.0, 1e-12);
        EXPECT_NEAR(p.beta[i], 0.0, 1e-12);
    }
    EXPECT_EQ(p.classification, "Kenmotsu");
    ASSERT_TRUE(p.declared_match);
    EXPECT_TRUE(p.declared_match->passed());
    EXPECT_TRUE(p.passed());
}

TEST(AlphaBeta, DeclaredMismatchFailsValidation) {
    const auto base = testing::kenmotsu_structure();
    const AlmostContactStructure s(base.phi, base.xi, base.eta, base.g, constant(2.0), constant(0.0));
    const auto p = fit_alpha_beta(s, Connection(s.g), checker_for(s.g));
    EXPECT_TRUE(p.fit.passed());
    ASSERT_TRUE(p.declared_match);
    EXPECT_FALSE(p.declared_match->passed());
    EXPECT_FALSE(p.passed());
}

TEST(AlphaBeta, FlatIsCosymplectic) {
    const auto s = testing::flat_cosymplectic_structure();
    const auto p = fit_alpha_beta(s, Connection(s.g), checker_for(s.g));
    EXPECT_EQ(p.classification, "cosymplectic");
    EXPECT_TRUE(p.alpha_zero && p.beta_zero);
}

TEST(AlphaBeta, SasakianR3) {
    // Fix the orientation of phi by which sign satisfies the defining condition with beta > 0.
    auto s = sasakian_r3(1.0);
    auto chk = checker_for(s.g, 20, -1.0, 1.0);
    EXPECT_TRUE(all_pass(validate_structure(s, chk)));
    auto p = fit_alpha_beta(s, Connection(s.g), chk);
    ASSERT_TRUE(p.fit.passed());
    if (p.beta_mean < 0) {
        s = sasakian_r3(-1.0);
        p = fit_alpha_beta(s, Connection(s.g), chk);
    }
    EXPECT_EQ(p.classification, "Sasakian");
    EXPECT_NEAR(p.alpha_mean, 0.0, 1e-12);
    EXPECT_NEAR(p.beta_mean, 1.0, 1e-12);
    const auto b = riemann(Connection(s.g));
    EXPECT_TRUE(ricci_xi_xi_check(s, p, b, chk).passed());
}

TEST(AlphaBeta, NonConstantAlphaIsGeneral) {
    // e^{z^2}(dx^2 + dy^2) + dz^2 has alpha = z, beta = 0.
    const MetricField g(bilinear_form(3, exprs({"exp(z^2)", "0", "0", "0", "exp(z^2)", "0", "0", "0", "1"})));
    const auto base = testing::kenmotsu_structure(false);
    const AlmostContactStructure s(base.phi, base.xi, base.eta, g);
    const Connection conn(g);
    const Checker chk = checker_for(g);
    const auto p = fit_alpha_beta(s, conn, chk);
    EXPECT_TRUE(p.fit.passed());
    EXPECT_EQ(p.classification, "trans-Sasakian-general");
    for (std::size_t i = 0; i < p.alpha.size(); ++i) EXPECT_NEAR(p.alpha[i], chk.points()[i][2], 1e-12);
    EXPECT_FALSE(p.alpha_expr.has_value());
    for (const auto& r : f_operator_checks(s, p, conn, chk)) EXPECT_EQ(r.verdict, Verdict::Skipped);

    const AlmostContactStructure declared(base.phi, base.xi, base.eta, g, E("z"), constant(0.0));
    const auto pd = fit_alpha_beta(declared, conn, chk);
    EXPECT_TRUE(pd.passed());
    for (const auto& r : f_operator_checks(declared, pd, conn, chk)) EXPECT_TRUE(r.passed()) << r.name;
    EXPECT_TRUE(ricci_xi_xi_check(declared, pd, riemann(conn), chk).passed());
}

TEST(AlphaBeta, BrokenStructureIsNotAlphaBeta) {
    // A conformally rescaled phi direction breaks the defining condition.
    const MetricField g(bilinear_form(3, exprs({"exp(2*z)", "0", "0", "0", "exp(4*z)", "0", "0", "0", "1"})));
    const TensorField phi = endomorphism(3, exprs({"0", "-exp(z)", "0", "exp(-z)", "0", "0", "0", "0", "0"}));
    const AlmostContactStructure s(phi, vector_field(exprs({"0", "0", "1"})), one_form(exprs({"0", "0", "1"})), g);
    const Checker chk = checker_for(g);
    ASSERT_TRUE(all_pass(validate_structure(s, chk)));
    const auto p = fit_alpha_beta(s, Connection(g), chk);
    EXPECT_FALSE(p.fit.passed());
    EXPECT_EQ(p.classification, "not-alpha-beta");
}

TEST(FOperator, KenmotsuExampleIdentities) {
    const auto s = testing::kenmotsu_structure();
    const Connection conn(s.g);
    const Checker chk = checker_for(s.g).with_tolerance(1e-10);
    const auto p = fit_alpha_beta(s, conn, chk);
    const auto rs = f_operator_checks(s, p, conn, chk);
    ASSERT_EQ(rs.size(), 6u);
    for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.name << " " << r.max_residual;
    const Point pt{0.1, 0.2, 1.5};
    EXPECT_NEAR(evaluate(divergence(s.xi, conn), pt), 2.0, 1e-15);
}

TEST(FOperator, FlatCosymplecticIsTriviallyZero) {
    const auto s = testing::flat_cosymplectic_structure();
    const Connection conn(s.g);
    const Checker chk = checker_for(s.g);
    const auto rs = f_operator_checks(s, fit_alpha_beta(s, conn, chk), conn, chk);
    for (const auto& r : rs) {
        EXPECT_TRUE(r.passed());
        EXPECT_EQ(r.max_residual, 0.0);
    }
}

TEST(RicciXiXi, KenmotsuGivesMinusTwo) {
    const auto s = testing::kenmotsu_structure();
    const Connection conn(s.g);
    const Checker chk = checker_for(s.g);
    const auto p = fit_alpha_beta(s, conn, chk);
    const auto b = riemann(conn);
    const CheckReport r = ricci_xi_xi_check(s, p, b, chk.with_tolerance(1e-8));
    EXPECT_TRUE(r.passed());
    EXPECT_NEAR(evaluate(b.ricci.at({2, 2}), {0, 0, 1.3}), -2.0, 1e-12);
}

TEST(Properties, FitIsInvariantUnderSampleOrder) {
    const auto s = testing::kenmotsu_structure();
    const Connection conn(s.g);
    auto pts = testing::sample_points(3, 15);
    const auto a = fit_alpha_beta(s, conn, Checker(s.g, std::nullopt, pts, 1e-9));
    std::reverse(pts.begin(), pts.end());
    const auto b = fit_alpha_beta(s, conn, Checker(s.g, std::nullopt, pts, 1e-9));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_LE(std::abs(a.alpha[i] - b.alpha[pts.size() - 1 - i]), 1e-12);
        EXPECT_LE(std::abs(a.beta[i] - b.beta[pts.size() - 1 - i]), 1e-12);
        EXPECT_LE(std::abs(a.fit.points[i].residual - b.fit.points[pts.size() - 1 - i].residual), 1e-12);
    }
    EXPECT_EQ(classify_alpha_beta(a), a.classification);
}

}  // namespace
}  // namespace solitonkit
