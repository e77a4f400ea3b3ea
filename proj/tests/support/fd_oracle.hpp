#pragma once

// Finite-difference oracle: uses metric values only, everything else numeric.

#include <vector>

#include <Eigen/Dense>

#include "solitonkit/chart.hpp"
#include "solitonkit/tensor.hpp"

namespace solitonkit::testing {

using Mat = Eigen::MatrixXd;

inline Mat metric_at(const MetricField& g, const Point& p) {
    Evaluator ev(p);
    return g.at(ev);
}

// Gamma[k](i, j) from central differences of g.
inline std::vector<Mat> fd_christoffel(const MetricField& g, const Point& p, double h = 1e-5) {
    const int m = g.dim();
    std::vector<Mat> dg(static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) {
        Point a = p, b = p;
        a[static_cast<std::size_t>(l)] += h;
        b[static_cast<std::size_t>(l)] -= h;
        dg[static_cast<std::size_t>(l)] = (metric_at(g, a) - metric_at(g, b)) / (2 * h);
    }
    const Mat inv = metric_at(g, p).inverse();
    std::vector<Mat> gamma(static_cast<std::size_t>(m), Mat::Zero(m, m));
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int l = 0; l < m; ++l)
                    gamma[static_cast<std::size_t>(k)](i, j) +=
                        0.5 * inv(k, l) *
                        (dg[static_cast<std::size_t>(i)](j, l) + dg[static_cast<std::size_t>(j)](i, l) -
                         dg[static_cast<std::size_t>(l)](i, j));
    return gamma;
}

// R^l_ijk via differences of the numeric Christoffel symbols.
inline double fd_riemann(const MetricField& g, const Point& p, int l, int i, int j, int k, double h = 1e-4) {
    auto gamma_shift = [&](int coord, double d) {
        Point q = p;
        q[static_cast<std::size_t>(coord)] += d;
        return fd_christoffel(g, q);
    };
    const auto gi_p = gamma_shift(i, h), gi_m = gamma_shift(i, -h);
    const auto gj_p = gamma_shift(j, h), gj_m = gamma_shift(j, -h);
    const auto g0 = fd_christoffel(g, p);
    const auto L = static_cast<std::size_t>(l);
    double r = (gi_p[L](j, k) - gi_m[L](j, k)) / (2 * h) - (gj_p[L](i, k) - gj_m[L](i, k)) / (2 * h);
    for (int q = 0; q < g.dim(); ++q) {
        const auto Q = static_cast<std::size_t>(q);
        r += g0[L](i, q) * g0[Q](j, k) - g0[L](j, q) * g0[Q](i, k);
    }
    return r;
}

/// Ric_jk = R^i_ijk from the numeric Riemann tensor.
inline double fd_ricci(const MetricField& g, const Point& p, int j, int k) {
    double s = 0.0;
    for (int i = 0; i < g.dim(); ++i) s += fd_riemann(g, p, i, i, j, k);
    return s;
}

}  // namespace solitonkit::testing
