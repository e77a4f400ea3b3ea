#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "solitonkit/tensor.hpp"
#include "support/fixtures.hpp"
#include "support/random_expr.hpp"

namespace solitonkit {
namespace {

using testing::E;
using testing::exprs;

double at(const TensorField& t, std::initializer_list<int> idx, const Point& p) { return evaluate(t.at(idx), p); }

TensorField random_field(testing::RandomExpr& gen, int m, Signature sig, int depth = 2) {
    TensorField t(m, std::move(sig));
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = gen(depth);
    return t;
}

TEST(KulkarniNomizu, FlatMetricComponents) {
    const MetricField g = testing::flat_metric(3);
    const TensorField gg = kulkarni_nomizu(g.tensor(), g.tensor());
    const Point p{0.1, 0.2, 0.3};
    EXPECT_DOUBLE_EQ(at(gg, {0, 1, 1, 0}, p), 2.0);
    EXPECT_DOUBLE_EQ(at(gg, {0, 1, 0, 1}, p), -2.0);
    EXPECT_DOUBLE_EQ(at(gg, {0, 0, 1, 1}, p), 0.0);
}

TEST(KulkarniNomizu, EtaEtaSquareVanishes) {
    const TensorField eta = one_form(exprs({"0", "0", "1"}));
    const TensorField ee = tensor_product(eta, eta);
    const TensorField k = kulkarni_nomizu(ee, ee);
    for (std::size_t i = 0; i < k.size(); ++i) EXPECT_EQ(evaluate(k[i], {0.4, 0.5, 1.5}), 0.0);
}

TEST(KulkarniNomizu, SymmetricInArgumentsAndCurvatureLike) {
    testing::RandomExpr gen(testing::xyz(), 3);
    for (int trial = 0; trial < 10; ++trial) {
        TensorField a = random_field(gen, 3, {Co, Co});
        TensorField b = random_field(gen, 3, {Co, Co});
        a = a + permute(a, {1, 0});
        b = b + permute(b, {1, 0});
        const TensorField ab = kulkarni_nomizu(a, b);
        const TensorField ba = kulkarni_nomizu(b, a);
        const Point p = gen.point();
        for_each_index(3, 4, [&](const std::vector<int>& ix) {
            const double v = evaluate(ab.at(ix), p);
            ASSERT_NEAR(v, evaluate(ba.at(ix), p), 1e-12 * (1 + std::abs(v)));
            ASSERT_NEAR(v, -evaluate(ab.at({ix[1], ix[0], ix[2], ix[3]}), p), 1e-12 * (1 + std::abs(v)));
            ASSERT_NEAR(v, evaluate(ab.at({ix[2], ix[3], ix[0], ix[1]}), p), 1e-12 * (1 + std::abs(v)));
        });
    }
}

TEST(Contract, MetricTraceIsDimension) {
    for (const MetricField& g : {testing::warped_metric(), testing::generic_metric()}) {
        const TensorField tr = contract(g.tensor(), 0, 1, &g);
        ASSERT_EQ(tr.rank(), 0u);
        EXPECT_NEAR(evaluate(tr[0], {0.2, -0.3, 1.2}), 3.0, 1e-12);
    }
}

TEST(Contract, KulkarniNomizuTraceIsMultipleOfMetric) {
    const MetricField g = testing::generic_metric();
    const TensorField tr = contract(kulkarni_nomizu(g.tensor(), g.tensor()), 0, 3, &g);
    const Point p{0.2, -0.3, 0.4};
    for_each_index(3, 2, [&](const std::vector<int>& ix) {
        const double expect = 4.0 * evaluate(g.tensor().at(ix), p);
        EXPECT_NEAR(evaluate(tr.at(ix), p), expect, 1e-12 * (1 + std::abs(expect)));
    });
}

TEST(Contract, InvalidSlotsThrow) {
    const MetricField g = testing::flat_metric(3);
    EXPECT_THROW(contract(g.tensor(), 0, 0, &g), ShapeError);
    EXPECT_THROW(contract(g.tensor(), 0, 2, &g), ShapeError);
    EXPECT_THROW(contract(g.tensor(), 0, 1), ShapeError);
}

TEST(RaiseLower, LoweringXiGivesEta) {
    const MetricField g = testing::warped_metric();
    const TensorField xi = vector_field(exprs({"0", "0", "1"}));
    const TensorField low = raise_lower(xi, 0, g);
    const Point p{0.3, 0.1, 1.4};
    EXPECT_DOUBLE_EQ(evaluate(low.at({2}), p), 1.0);
    EXPECT_DOUBLE_EQ(evaluate(low.at({0}), p), 0.0);
}

TEST(RaiseLower, RoundTripIsIdentity) {
    const MetricField g = testing::generic_metric();
    testing::RandomExpr gen(testing::xyz(), 9);
    for (int trial = 0; trial < 5; ++trial) {
        const TensorField t = random_field(gen, 3, {Co, Contra, Co});
        const TensorField back = raise_lower(raise_lower(t, 0, g), 0, g);
        const Point p{gen.uniform(-0.5, 0.5), gen.uniform(-0.5, 0.5), gen.uniform(-0.5, 0.5)};
        for (std::size_t i = 0; i < t.size(); ++i) {
            const double v = evaluate(t[i], p);
            ASSERT_NEAR(evaluate(back[i], p), v, 1e-10 * (1 + std::abs(v)));
        }
    }
}

TEST(Metric, InverseTimesMetricIsIdentity) {
    const MetricField g = testing::generic_metric();
    Evaluator ev({0.3, 0.2, -0.1});
    Eigen::MatrixXd inv(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) inv(i, j) = ev(g.inverse(i, j));
    EXPECT_LT((inv * g.at(ev) - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Metric, DiagonalInverseIsSymbolic) {
    const MetricField g = testing::warped_metric();
    EXPECT_NE(g.inverse(0, 0).kind(), ExprKind::InverseMetric);
    EXPECT_TRUE(g.inverse(0, 1).is_zero());
    EXPECT_NEAR(evaluate(g.inverse(0, 0), {0, 0, 1.5}), std::exp(-3.0), 1e-15);
}

TEST(Metric, SingularMetricRaises) {
    const MetricField g(bilinear_form(2, exprs({"1", "1", "1", "1"}, {"x", "y"})));
    Evaluator ev({0.0, 0.0});
    EXPECT_THROW(ev(g.inverse(0, 0)), SingularMetricError);
}

TEST(LieDerivative, AlongDzOfWarpedMetric) {
    const MetricField g = testing::warped_metric();
    const TensorField l = lie_derivative(vector_field(exprs({"0", "0", "1"})), g.tensor());
    const Point p{0.0, 0.0, 1.3};
    EXPECT_NEAR(at(l, {0, 0}, p), 2.0 * std::exp(2.6), 1e-12);
    EXPECT_NEAR(at(l, {1, 1}, p), 2.0 * std::exp(2.6), 1e-12);
    EXPECT_EQ(at(l, {2, 2}, p), 0.0);
}

TEST(LieDerivative, ConformalFieldScalesMetric) {
    // V = e^z d_z gives L_V g = 2 e^z g on the warped metric.
    const MetricField g = testing::warped_metric();
    const TensorField l = lie_derivative(vector_field(exprs({"0", "0", "exp(z)"})), g.tensor());
    const TensorField expect = E("2*exp(z)") * g.tensor();
    for (const Point& p : testing::sample_points(1, 10)) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            const double v = evaluate(expect[i], p);
            ASSERT_NEAR(evaluate(l[i], p), v, 1e-12 * (1 + std::abs(v)));
        }
    }
}

TEST(LieDerivative, RejectsMixedVariance) {
    EXPECT_THROW(lie_derivative(vector_field(exprs({"1", "0", "0"})), identity(3)), ShapeError);
}

TEST(Algebra, ComposeApplyAndPair) {
    const TensorField phi = endomorphism(3, exprs({"0", "-1", "0", "1", "0", "0", "0", "0", "0"}));
    const TensorField phi2 = compose(phi, phi);
    const Point p{0, 0, 1.5};
    EXPECT_EQ(at(phi2, {0, 0}, p), -1.0);
    EXPECT_EQ(at(phi2, {2, 2}, p), 0.0);
    const TensorField v = apply(phi, vector_field(exprs({"1", "0", "0"})));
    EXPECT_EQ(at(v, {1}, p), 1.0);
    EXPECT_EQ(evaluate(pair(one_form(exprs({"0", "2", "0"})), v), p), 2.0);
    EXPECT_THROW(compose(phi, vector_field(exprs({"1", "0", "0"}))), ShapeError);
}

TEST(Frame, GramSchmidtIsOrthonormal) {
    const MetricField g = testing::generic_metric();
    Evaluator ev({0.1, 0.4, 0.2});
    const Eigen::MatrixXd gm = g.at(ev);
    const Eigen::MatrixXd e = gram_schmidt_frame(gm);
    EXPECT_LT((e.transpose() * gm * e - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Frame, ProjectionOfMetricIsIdentity) {
    const MetricField g = testing::generic_metric();
    Evaluator ev({0.1, 0.4, 0.2});
    const Eigen::MatrixXd gm = g.at(ev);
    const Eigen::MatrixXd e = gram_schmidt_frame(gm);
    const PointTensor pg = project_to_frame(evaluate(g.tensor(), ev), e, gm);
    const PointTensor pi = project_to_frame(evaluate(identity(3), ev), e, gm);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            EXPECT_NEAR(pg.at({a, b}), a == b ? 1.0 : 0.0, 1e-12);
            EXPECT_NEAR(pi.at({a, b}), a == b ? 1.0 : 0.0, 1e-12);
        }
}

}  // namespace
}  // namespace solitonkit
