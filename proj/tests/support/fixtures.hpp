#pragma once

// Hand-built geometries for unit tests, independent of the zoo.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "solitonkit/chart.hpp"
#include "solitonkit/contact.hpp"
#include "solitonkit/parser.hpp"
#include "solitonkit/tensor.hpp"

namespace solitonkit::testing {

inline const std::vector<std::string>& xyz() {
    static const std::vector<std::string> c{"x", "y", "z"};
    return c;
}

inline Expr E(const std::string& text, const std::vector<std::string>& coords = xyz()) { return parse_expr(text, coords); }

inline std::vector<Expr> exprs(const std::vector<std::string>& texts, const std::vector<std::string>& coords = xyz()) {
    std::vector<Expr> out;
    for (const auto& t : texts) out.push_back(E(t, coords));
    return out;
}

/// e^{2z}(dx^2 + dy^2) + dz^2
inline MetricField warped_metric() {
    return MetricField(bilinear_form(3, exprs({"exp(2*z)", "0", "0", "0", "exp(2*z)", "0", "0", "0", "1"})));
}

inline MetricField flat_metric(int m) {
    TensorField g(m, {Co, Co});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.at({i, j}) = constant(i == j ? 1.0 : 0.0);
    return MetricField(g);
}

/// A non-diagonal metric with coordinate-dependent entries, positive definite near the origin.
inline MetricField generic_metric() {
    return MetricField(bilinear_form(
        3, exprs({"2 + sin(x)*0.3", "0.2*y", "0.1*x*z", "0.2*y", "1 + z^2", "0.1", "0.1*x*z", "0.1", "exp(0.5*x)"})));
}

/// Frame e^{-z} d_x, e^{-z} d_y, d_z.
inline std::vector<TensorField> warped_frame() {
    return {vector_field(exprs({"exp(-z)", "0", "0"})), vector_field(exprs({"0", "exp(-z)", "0"})),
            vector_field(exprs({"0", "0", "1"}))};
}

inline std::vector<Point> sample_points(std::uint64_t seed, int count, double zlo = 1.1, double zhi = 2.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0), w(zlo, zhi);
    std::vector<Point> pts;
    for (int i = 0; i < count; ++i) {
        const double x = u(rng), y = u(rng), z = w(rng);
        pts.push_back({x, y, z});
    }
    return pts;
}

/// phi = dx (x) d_y - dy (x) d_x, xi = d_z, eta = dz on the warped metric.
inline AlmostContactStructure kenmotsu_structure(bool declare = true) {
    const TensorField phi = endomorphism(3, exprs({"0", "-1", "0", "1", "0", "0", "0", "0", "0"}));
    std::optional<Expr> a, b;
    if (declare) {
        a = constant(1.0);
        b = constant(0.0);
    }
    return AlmostContactStructure(phi, vector_field(exprs({"0", "0", "1"})), one_form(exprs({"0", "0", "1"})),
                                  warped_metric(), a, b);
}

inline AlmostContactStructure flat_cosymplectic_structure() {
    const TensorField phi = endomorphism(3, exprs({"0", "-1", "0", "1", "0", "0", "0", "0", "0"}));
    return AlmostContactStructure(phi, vector_field(exprs({"0", "0", "1"})), one_form(exprs({"0", "0", "1"})),
                                  flat_metric(3));
}

}  // namespace solitonkit::testing
