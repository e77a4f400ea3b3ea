#include <cctype>
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "solitonkit/invariants.hpp"
#include "solitonkit/zoo.hpp"
#include "support/fd_oracle.hpp"

namespace solitonkit {
namespace {

using testing::fd_ricci;
using testing::fd_riemann;
using testing::metric_at;

std::vector<Point> first_points(const Manifold& mf, std::size_t n) {
    std::vector<Point> pts = mf.default_plan().points(mf.chart());
    if (pts.size() > n) pts.resize(n);
    return pts;
}

double fd_scalar(const MetricField& g, const Point& p) {
    const Eigen::MatrixXd inv = metric_at(g, p).inverse();
    double s = 0.0;
    for (int j = 0; j < g.dim(); ++j)
        for (int k = 0; k < g.dim(); ++k) s += inv(j, k) * fd_ricci(g, p, j, k);
    return s;
}

class EveryEntry : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryEntry, AdmittedWithPassingSelfValidation) {
    const ZooEntry e = zoo_entry(GetParam());
    EXPECT_EQ(e.name(), GetParam());
    ASSERT_FALSE(e.self_validation.empty());
    for (const auto& r : e.self_validation) EXPECT_TRUE(r.passed()) << r.name << " " << r.max_normalized;
}

TEST_P(EveryEntry, CurvatureMatchesFiniteDifferences) {
    const ZooEntry e = zoo_entry(GetParam());
    const Manifold& mf = *e.manifold;
    const int m = mf.dim();
    for (const Point& p : first_points(mf, 2)) {
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const double fd = fd_ricci(mf.metric(), p, j, k);
                EXPECT_NEAR(evaluate(mf.curvature().ricci.at({j, k}), p), fd, 1e-5 * (1 + std::abs(fd)));
            }
        const double s = fd_scalar(mf.metric(), p);
        EXPECT_NEAR(evaluate(mf.curvature().scalar, p), s, 1e-5 * (1 + std::abs(s)));
    }
}

TEST_P(EveryEntry, CurvatureInvariantsHold) {
    const ZooEntry e = zoo_entry(GetParam());
    const Manifold& mf = *e.manifold;
    SamplePlan plan = mf.default_plan().random_only(10);
    const auto reports = curvature_invariants(mf.connection(), mf.curvature(), mf.checker(plan, 1e-10), {1e-10, 1e-8, 1e-9});
    for (const auto& r : reports) EXPECT_TRUE(r.passed()) << r.name << " " << r.max_normalized;
}

TEST_P(EveryEntry, SpecRoundTripsThroughJson) {
    const ZooEntry e = zoo_entry(GetParam());
    const std::string text = dump_spec(e.spec());
    EXPECT_EQ(dump_spec(parse_spec(text)), text);
}

INSTANTIATE_TEST_SUITE_P(Zoo, EveryEntry, ::testing::ValuesIn(zoo_names()), [](const auto& info) {
    std::string s = info.param;
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    return s;
});

// ---------------------------------------------------------------------------

TEST(KenmotsuExample, FitAndClassification) {
    const ZooEntry e = paper_kenmotsu();
    EXPECT_EQ(e.profile.classification, "Kenmotsu");
    EXPECT_NEAR(e.profile.alpha_mean, 1.0, 1e-12);
    EXPECT_NEAR(e.profile.beta_mean, 0.0, 1e-12);
    EXPECT_TRUE(e.profile.alpha_constant);
    EXPECT_TRUE(e.profile.beta_zero);
}

TEST(KenmotsuExample, ConstantCurvatureMinusOneByFiniteDifferences) {
    // R(X,Y)Z = -(g(Y,Z)X - g(X,Z)Y)
    const ZooEntry e = paper_kenmotsu();
    const Manifold& mf = *e.manifold;
    for (const Point& p : first_points(mf, 2)) {
        const Eigen::MatrixXd g = metric_at(mf.metric(), p);
        for_each_index(3, 4, [&](const std::vector<int>& ix) {
            const int l = ix[0], i = ix[1], j = ix[2], k = ix[3];
            const double want = -((l == i ? g(j, k) : 0.0) - (l == j ? g(i, k) : 0.0));
            EXPECT_NEAR(fd_riemann(mf.metric(), p, l, i, j, k), want, 1e-5 * (1 + std::abs(want)));
        });
    }
}

TEST(KenmotsuExample, PublishedRicciDiagonalSumsToScalar) {
    const ZooEntry e = paper_kenmotsu();
    double trace = 0.0, scal = NAN;
    int ricci_entries = 0;
    for (const auto& x : e.spec().expected) {
        if (x.quantity == "ricci") {
            ASSERT_EQ(x.args[0], x.args[1]);
            trace += std::stod(x.value.at(0));
            ++ricci_entries;
        }
        if (x.quantity == "scalar_curvature") scal = std::stod(x.value.at(0));
    }
    EXPECT_EQ(ricci_entries, 3);
    EXPECT_DOUBLE_EQ(trace, -6.0);
    EXPECT_DOUBLE_EQ(scal, trace);
}

TEST(KenmotsuExample, DomainAndPlan) {
    const ZooEntry e = paper_kenmotsu();
    const Manifold& mf = *e.manifold;
    EXPECT_FALSE(mf.chart().contains({0.0, 0.0, 1.0}));
    EXPECT_TRUE(mf.chart().contains({0.0, 0.0, 1.5}));
    const auto pts = mf.default_plan().points(mf.chart());
    EXPECT_EQ(pts.size(), 150u);
    for (const auto& p : pts) EXPECT_GT(p[2], 1.0);
}

TEST(KenmotsuExample, CandidatesAndExpectations) {
    const ZooEntry e = paper_kenmotsu();
    const Manifold& mf = *e.manifold;
    for (const char* n : {"example-riemann", "example-ricci", "example-yamabe"}) EXPECT_TRUE(mf.candidate(n).expect_pass);
    for (const char* n : {"example-riemann-shifted", "xi-riemann", "xi-ricci", "xi-yamabe"})
        EXPECT_FALSE(mf.candidate(n).expect_pass);
    EXPECT_THROW(mf.candidate("nope"), Error);
}

TEST(KenmotsuExample, CandidateFieldsMatchClosedForms) {
    const ZooEntry e = paper_kenmotsu();
    const Manifold& mf = *e.manifold;
    const Point p{0.3, -0.2, 1.4};
    const double ez = std::exp(p[2]);
    EXPECT_NEAR(evaluate(mf.candidate("example-riemann").lambda, p), 2 * ez - 1, 1e-13);
    EXPECT_NEAR(evaluate(mf.candidate("example-ricci").lambda, p), ez - 2, 1e-13);
    EXPECT_NEAR(evaluate(mf.candidate("example-riemann").v.at({2}), p), ez, 1e-13);
}

// ---------------------------------------------------------------------------

TEST(FlatCosymplectic, FlatAndCosymplectic) {
    for (int m : {3, 5}) {
        const ZooEntry e = flat_cosymplectic(m);
        EXPECT_EQ(e.profile.classification, "cosymplectic");
        EXPECT_TRUE(e.profile.alpha_zero);
        EXPECT_TRUE(e.profile.beta_zero);
        const Manifold& mf = *e.manifold;
        const Point p(static_cast<std::size_t>(m), 0.25);
        for_each_index(m, 4, [&](const std::vector<int>& ix) {
            EXPECT_NEAR(evaluate(mf.curvature().riemann_up.at(ix), p), 0.0, 1e-14);
        });
        EXPECT_NEAR(evaluate(divergence(mf.structure().xi, mf.connection()), p), 0.0, 1e-14);
    }
}

TEST(FlatCosymplectic, EvenOrSmallDimensionRejected) {
    EXPECT_THROW(flat_cosymplectic_spec(4), ShapeError);
    EXPECT_THROW(flat_cosymplectic_spec(1), ShapeError);
    EXPECT_THROW(zoo_entry("flat-cosymplectic-4"), Error);
}

// ---------------------------------------------------------------------------

TEST(AlphaKenmotsu, FitAndRicXiXi) {
    for (double a : {2.0, 0.5}) {
        const ZooEntry e = alpha_kenmotsu_family(a);
        EXPECT_NEAR(e.profile.alpha_mean, a, 1e-12);
        EXPECT_NEAR(e.profile.beta_mean, 0.0, 1e-12);
        const Manifold& mf = *e.manifold;
        const Point p{0.1, 0.2, 0.4};
        // xi = d_z, so Ric(xi, xi) = Ric_zz
        EXPECT_NEAR(fd_ricci(mf.metric(), p, 2, 2), -2 * a * a, 1e-5 * (1 + a * a));
        EXPECT_NEAR(fd_scalar(mf.metric(), p), -6 * a * a, 1e-5 * (1 + a * a));
    }
}

TEST(AlphaKenmotsu, HigherDimension) {
    const ZooEntry e = zoo_entry("alpha-kenmotsu-1-m5");
    EXPECT_EQ(e.manifold->dim(), 5);
    EXPECT_NEAR(e.profile.alpha_mean, 1.0, 1e-12);
    const Point p{0.1, 0.2, -0.3, 0.4, 0.5};
    EXPECT_NEAR(fd_scalar(e.manifold->metric(), p), -20.0, 1e-4);
}

TEST(AlphaKenmotsu, NamesParse) {
    EXPECT_EQ(zoo_entry("alpha-kenmotsu-0.5").name(), "alpha-kenmotsu-0.5");
    EXPECT_THROW(zoo_entry("alpha-kenmotsu-abc"), Error);
}

// ---------------------------------------------------------------------------

TEST(SasakianR3, Classification) {
    const ZooEntry e = sasakian_r3();
    EXPECT_EQ(e.profile.classification, "Sasakian");
    EXPECT_NEAR(e.profile.alpha_mean, 0.0, 1e-12);
    EXPECT_NEAR(e.profile.beta_mean, 1.0, 1e-12);
    const Point p{0.2, -0.1, 0.3};
    EXPECT_NEAR(fd_scalar(e.manifold->metric(), p), evaluate(e.manifold->curvature().scalar, p), 1e-5);
}

TEST(Zoo, UnknownNamesRejected) {
    EXPECT_THROW(zoo_entry("no-such-manifold"), Error);
    EXPECT_THROW(zoo_entry(""), Error);
}

}  // namespace
}  // namespace solitonkit
