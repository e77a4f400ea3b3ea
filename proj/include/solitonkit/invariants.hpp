#pragma once

// Identities every metric must satisfy; used to validate the curvature engine.

#include <numeric>
#include <vector>

#include "solitonkit/geometry.hpp"
#include "solitonkit/report.hpp"

namespace solitonkit {

inline constexpr const char* kGeometryGroup = "geometry";

namespace detail {

/// Sum of the three cyclic permutations of slots (a, b, c) of t.
inline TensorField cyclic_sum(const TensorField& t, std::size_t a, std::size_t b, std::size_t c) {
    std::vector<std::size_t> id(t.rank()), p1, p2;
    std::iota(id.begin(), id.end(), std::size_t{0});
    p1 = p2 = id;
    // result slot a takes source slot b, etc.
    p1[a] = b;
    p1[b] = c;
    p1[c] = a;
    p2[a] = c;
    p2[b] = a;
    p2[c] = b;
    return t + permute(t, p1) + permute(t, p2);
}

}  // namespace detail

struct InvariantTolerances {
    double algebraic = 1e-10;
    double second_bianchi = 1e-8;
    double weyl_trace = 1e-9;
};

/// Metric sanity plus connection and curvature identities.
inline std::vector<CheckReport> metric_checks(const MetricField& g, const Checker& checker, double tol = 1e-10) {
    const Checker c = checker.with_tolerance(tol);
    std::vector<CheckReport> out;
    out.push_back(c.equal("metric symmetric", kGeometryGroup, "g_ij = g_ji", g.tensor(), permute(g.tensor(), {1, 0})));
    out.push_back(c.run("metric positive definite", kGeometryGroup, "min eigenvalue of g > 0", [&](PointContext& ctx) {
        const Eigen::MatrixXd sym = 0.5 * (ctx.metric + ctx.metric.transpose());
        const double lo = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sym).eigenvalues().minCoeff();
        // residual is how far the smallest eigenvalue falls below zero
        return PointSample{point_scalar(g.dim(), lo > 0.0 ? 0.0 : 1.0 - lo), {}};
    }));
    out.push_back(c.run("metric inverse", kGeometryGroup, "g^{ik} g_kj = delta", [&](PointContext& ctx) {
        const int m = g.dim();
        PointTensor r{m, {Contra, Co}, std::vector<double>(static_cast<std::size_t>(m * m))};
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                double s = 0.0;
                for (int k = 0; k < m; ++k) s += ctx.scalar(g.inverse(i, k)) * ctx.metric(k, j);
                r.values[static_cast<std::size_t>(i * m + j)] = s - (i == j ? 1.0 : 0.0);
            }
        return PointSample{r, {}};
    }));
    return out;
}

inline std::vector<CheckReport> curvature_invariants(const Connection& conn, const CurvatureBundle& b, const Checker& checker,
                                                     const InvariantTolerances& tol = {}) {
    const MetricField& g = conn.metric();
    const int m = g.dim();
    const Checker c = checker.with_tolerance(tol.algebraic);
    std::vector<CheckReport> out;

    TensorField gamma(m, {Contra, Co, Co});
    for_each_index(m, 3, [&](const std::vector<int>& ix) { gamma.at(ix) = conn(ix[0], ix[1], ix[2]); });
    out.push_back(c.equal("Christoffel symmetry", kGeometryGroup, "Gamma^k_ij = Gamma^k_ji", gamma, permute(gamma, {0, 2, 1})));
    out.push_back(c.zero("metric compatibility", kGeometryGroup, "nabla g = 0", covariant_derivative(g.tensor(), conn),
                         {g.tensor()}));

    const TensorField& r = b.riemann;
    out.push_back(c.equal("Riemann antisymmetry (1,2)", kGeometryGroup, "R_ijkl = -R_jikl", r, -permute(r, {1, 0, 2, 3})));
    out.push_back(c.equal("Riemann antisymmetry (3,4)", kGeometryGroup, "R_ijkl = -R_ijlk", r, -permute(r, {0, 1, 3, 2})));
    out.push_back(c.equal("Riemann pair symmetry", kGeometryGroup, "R_ijkl = R_klij", r, permute(r, {2, 3, 0, 1})));
    out.push_back(c.zero("first Bianchi identity", kGeometryGroup, "R_ijkl + R_iklj + R_iljk = 0",
                         detail::cyclic_sum(r, 1, 2, 3), {r}));

    // (nabla R) slots (d, i, j, k, l); cyclic over (d, k, l) with (i, j) fixed.
    const TensorField nr = covariant_derivative(r, conn);
    out.push_back(checker.with_tolerance(tol.second_bianchi)
                      .zero("second Bianchi identity", kGeometryGroup,
                            "(nabla_m R)_ijkl + (nabla_k R)_ijlm + (nabla_l R)_ijmk = 0", detail::cyclic_sum(nr, 0, 3, 4),
                            {nr}));

    out.push_back(c.equal("Ricci symmetry", kGeometryGroup, "Ric_ij = Ric_ji", b.ricci, permute(b.ricci, {1, 0})));
    // g(QX, Y) = g(X, QY)
    TensorField gq(m, {Co, Co});
    for_each_index(m, 2, [&](const std::vector<int>& ix) {
        std::vector<Expr> t;
        for (int k = 0; k < m; ++k) t.push_back(g(k, ix[1]) * b.ricci_operator.at({k, ix[0]}));
        gq.at(ix) = sum(std::move(t));
    });
    out.push_back(c.equal("Ricci operator self-adjoint", kGeometryGroup, "g(QX, Y) = g(X, QY)", gq, permute(gq, {1, 0})));
    out.push_back(c.equal("scalar curvature is trace of Ric", kGeometryGroup, "scal = g^{ij} Ric_ij", b.scalar,
                          contract(b.ricci, 0, 1, &g)[0]));

    if (m >= 3) {
        out.push_back(checker.with_tolerance(tol.weyl_trace)
                          .zero("Weyl trace-free", kGeometryGroup, "g^{il} W_ijkl = 0", contract(b.weyl, 0, 3, &g),
                                {b.riemann}));
        if (m == 3)
            out.push_back(c.zero("Weyl vanishes in dimension 3", kGeometryGroup, "W = 0", b.weyl, {b.riemann}));
    }
    return out;
}

}  // namespace solitonkit
