#pragma once

// Per-point residual checks and their aggregate reports.
//
// A check evaluates a residual tensor at every sample point, projects it onto
// an orthonormal frame and records the largest absolute component. A point
// passes when residual <= tolerance * (1 + scale), where scale is the largest
// frame component of the inputs that produced the residual.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "solitonkit/chart.hpp"
#include "solitonkit/tensor.hpp"

namespace solitonkit {

enum class Verdict { Pass, Fail, Skipped, NotApplicable };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

struct PointRecord {
    Point point;
    bool evaluated = true;
    double residual = 0.0;             ///< max |frame component|
    double coordinate_residual = 0.0;  ///< max |coordinate component|
    double scale = 0.0;
    std::vector<int> worst_index;  ///< frame index of the largest component
    std::string diagnostic;

    bool ok(double tol) const { return evaluated && residual <= tol * (1.0 + scale); }
};

struct CheckReport {
    std::string name;
    std::string group;
    std::string statement;
    double tolerance = 0.0;
    Verdict verdict = Verdict::Skipped;
    /// Reported for inspection only; never affects an overall verdict.
    bool informational = false;
    /// Negative control: the check is meant to fail.
    bool expect_fail = false;
    std::vector<PointRecord> points;
    double max_residual = 0.0;     ///< max absolute residual over evaluated points
    double max_normalized = 0.0;   ///< max residual / (1 + scale)
    double mean_residual = 0.0;
    std::size_t evaluated = 0;
    std::size_t failed = 0;
    std::string note;
    std::map<std::string, double> values;

    bool passed() const { return verdict == Verdict::Pass; }

    /// Whether this report leaves an overall verdict green.
    bool meets_expectation() const {
        if (informational) return true;
        if (verdict == Verdict::Pass) return !expect_fail;
        if (verdict == Verdict::Fail) return expect_fail;
        return true;
    }

    /// Fraction of evaluated points within tolerance.
    double pass_fraction() const {
        return evaluated == 0 ? 0.0 : static_cast<double>(evaluated - failed) / static_cast<double>(evaluated);
    }

    const PointRecord* worst() const {
        const PointRecord* w = nullptr;
        for (const auto& p : points)
            if (p.evaluated && (!w || p.residual / (1.0 + p.scale) > w->residual / (1.0 + w->scale))) w = &p;
        return w;
    }

    /// Recomputes aggregates and verdict from the point records.
    void finalize() {
        max_residual = max_normalized = mean_residual = 0.0;
        evaluated = failed = 0;
        double total = 0.0;
        for (const auto& p : points) {
            if (!p.evaluated) continue;
            ++evaluated;
            total += p.residual;
            max_residual = std::max(max_residual, p.residual);
            max_normalized = std::max(max_normalized, p.residual / (1.0 + p.scale));
            if (!p.ok(tolerance)) ++failed;
        }
        if (evaluated == 0) {
            verdict = Verdict::Skipped;
            return;
        }
        mean_residual = total / static_cast<double>(evaluated);
        verdict = max_normalized <= tolerance ? Verdict::Pass : Verdict::Fail;
    }
};

inline CheckReport not_applicable(std::string name, std::string group, std::string statement, std::string why) {
    CheckReport r;
    r.name = std::move(name);
    r.group = std::move(group);
    r.statement = std::move(statement);
    r.verdict = Verdict::NotApplicable;
    r.note = std::move(why);
    return r;
}

inline CheckReport skipped(std::string name, std::string group, std::string statement, std::string why) {
    CheckReport r = not_applicable(std::move(name), std::move(group), std::move(statement), std::move(why));
    r.verdict = Verdict::Skipped;
    return r;
}

/// Everything a residual callback may need at one sample point.
struct PointContext {
    std::size_t index;
    const Point& point;
    Evaluator& ev;
    const Eigen::MatrixXd& metric;
    const Eigen::MatrixXd& frame;  ///< orthonormal frame, columns E_a in coordinates

    PointTensor eval(const TensorField& t) { return evaluate(t, ev); }
    PointTensor project(const PointTensor& t) const { return project_to_frame(t, frame, metric); }
    double scalar(const Expr& e) { return ev(e); }
};

/// A residual tensor (coordinate frame) and the inputs that set its scale.
struct PointSample {
    PointTensor residual;
    std::vector<PointTensor> inputs;
};

/// Runs residual callbacks over a fixed point set against one metric and frame.
class Checker {
public:
    Checker(MetricField g, std::optional<std::vector<TensorField>> frame, std::vector<Point> points, double tolerance)
        : g_(std::move(g)), frame_(std::move(frame)), points_(std::move(points)), tol_(tolerance) {}

    double tolerance() const { return tol_; }
    const std::vector<Point>& points() const { return points_; }
    const MetricField& metric() const { return g_; }

    Checker with_points(std::vector<Point> pts) const { return Checker(g_, frame_, std::move(pts), tol_); }
    Checker with_tolerance(double tol) const { return Checker(g_, frame_, points_, tol); }

    /// Orthonormal frame at a point: the declared frame, else Gram-Schmidt on d_1..d_m.
    Eigen::MatrixXd frame_at(Evaluator& ev, const Eigen::MatrixXd& g) const {
        if (!frame_) return gram_schmidt_frame(g);
        const int m = g_.dim();
        Eigen::MatrixXd e(m, m);
        for (int a = 0; a < m; ++a)
            for (int i = 0; i < m; ++i) e(i, a) = ev((*frame_)[static_cast<std::size_t>(a)].at({i}));
        return e;
    }

    /// Visits each point with a ready context; EvalErrors skip the point.
    template <class F>
    void for_each_point(F&& f) const {
        for (std::size_t n = 0; n < points_.size(); ++n) {
            Evaluator ev(points_[n]);
            const Eigen::MatrixXd g = g_.at(ev);
            const Eigen::MatrixXd e = frame_at(ev, g);
            PointContext ctx{n, points_[n], ev, g, e};
            f(ctx);
        }
    }

    CheckReport run(std::string name, std::string group, std::string statement,
                    const std::function<PointSample(PointContext&)>& fn) const {
        CheckReport r;
        r.name = std::move(name);
        r.group = std::move(group);
        r.statement = std::move(statement);
        r.tolerance = tol_;
        for (std::size_t n = 0; n < points_.size(); ++n) {
            PointRecord rec;
            rec.point = points_[n];
            try {
                Evaluator ev(points_[n]);
                const Eigen::MatrixXd g = g_.at(ev);
                const Eigen::MatrixXd e = frame_at(ev, g);
                PointContext ctx{n, points_[n], ev, g, e};
                PointSample s = fn(ctx);
                const PointTensor proj = ctx.project(s.residual);
                rec.coordinate_residual = s.residual.max_abs();
                std::size_t worst = 0;
                for (std::size_t i = 0; i < proj.values.size(); ++i) {
                    if (std::abs(proj.values[i]) > rec.residual) {
                        rec.residual = std::abs(proj.values[i]);
                        worst = i;
                    }
                }
                rec.worst_index = unflatten(worst, proj.dim, proj.rank());
                for (const auto& in : s.inputs) rec.scale = std::max(rec.scale, ctx.project(in).max_abs());
            } catch (const EvalError& err) {
                rec.evaluated = false;
                rec.diagnostic = err.what();
            }
            r.points.push_back(std::move(rec));
        }
        r.finalize();
        return r;
    }

    /// Residual given as a symbolic field; inputs set the scale.
    CheckReport zero(std::string name, std::string group, std::string statement, const TensorField& residual,
                     std::vector<TensorField> inputs = {}) const {
        return run(std::move(name), std::move(group), std::move(statement), [&](PointContext& c) {
            PointSample s{c.eval(residual), {}};
            for (const auto& in : inputs) s.inputs.push_back(c.eval(in));
            return s;
        });
    }

    /// lhs - rhs for two symbolic fields of equal shape.
    CheckReport equal(std::string name, std::string group, std::string statement, const TensorField& lhs,
                      const TensorField& rhs) const {
        return run(std::move(name), std::move(group), std::move(statement), [&](PointContext& c) {
            PointTensor l = c.eval(lhs);
            PointTensor r = c.eval(rhs);
            return PointSample{l - r, {l, r}};
        });
    }

    CheckReport equal(std::string name, std::string group, std::string statement, const Expr& lhs, const Expr& rhs) const {
        return equal(std::move(name), std::move(group), std::move(statement), scalar_field(g_.dim(), lhs),
                     scalar_field(g_.dim(), rhs));
    }

private:
    static std::vector<int> unflatten(std::size_t flat, int dim, std::size_t rank) {
        std::vector<int> idx(rank);
        for (std::size_t s = rank; s-- > 0;) {
            idx[s] = static_cast<int>(flat % static_cast<std::size_t>(dim));
            flat /= static_cast<std::size_t>(dim);
        }
        return idx;
    }

    MetricField g_;
    std::optional<std::vector<TensorField>> frame_;
    std::vector<Point> points_;
    double tol_;
};

inline PointTensor point_scalar(int dim, double v) { return PointTensor{dim, {}, {v}}; }

}  // namespace solitonkit
