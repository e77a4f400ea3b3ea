#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "solitonkit/expr.hpp"
#include "solitonkit/parser.hpp"

namespace solitonkit {

using Point = std::vector<double>;

/// One inequality `lhs OP rhs` restricting the chart domain.
struct DomainConstraint {
    enum class Op { Less, LessEqual, Greater, GreaterEqual };

    std::string text;
    Expr difference;  // lhs - rhs
    Op op = Op::Greater;

    bool holds(Evaluator& ev) const {
        const double d = ev(difference);
        switch (op) {
        case Op::Less: return d < 0.0;
        case Op::LessEqual: return d <= 0.0;
        case Op::Greater: return d > 0.0;
        case Op::GreaterEqual: return d >= 0.0;
        }
        return false;
    }
};

/// Coordinate names plus the inequalities carving the domain out of R^m.
class Chart {
public:
    Chart() = default;

    Chart(std::vector<std::string> coords, const std::vector<std::string>& constraints = {})
        : coords_(std::move(coords)) {
        if (coords_.empty()) throw ShapeError("chart needs at least one coordinate");
        for (const auto& c : constraints) constraints_.push_back(parse_constraint(c));
    }

    int dim() const { return static_cast<int>(coords_.size()); }
    const std::vector<std::string>& coordinates() const { return coords_; }
    const std::vector<DomainConstraint>& constraints() const { return constraints_; }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i] == name) return static_cast<int>(i);
        throw Error("unknown coordinate '" + name + "'");
    }

    Expr coordinate(int i) const { return solitonkit::coordinate(i, coords_.at(static_cast<std::size_t>(i))); }
    Expr parse(std::string_view text) const { return parse_expr(text, coords_); }

    bool contains(const Point& p) const {
        if (static_cast<int>(p.size()) != dim()) return false;
        Evaluator ev(p);
        try {
            for (const auto& c : constraints_)
                if (!c.holds(ev)) return false;
        } catch (const EvalError&) {
            return false;
        }
        return true;
    }

    void require(const Point& p) const {
        if (static_cast<int>(p.size()) != dim())
            throw DomainError("point has " + std::to_string(p.size()) + " coordinates, chart has " +
                              std::to_string(dim()));
        Evaluator ev(p);
        for (const auto& c : constraints_)
            if (!c.holds(ev)) throw DomainError("point violates domain constraint '" + c.text + "'");
    }

    /// Checked evaluation: domain violations raise DomainError.
    double evaluate(const Expr& e, const Point& p) const {
        require(p);
        return solitonkit::evaluate(e, p);
    }

    /// Derivative by coordinate name.
    Expr differentiate(const Expr& e, const std::string& coord) const {
        return solitonkit::differentiate(e, index_of(coord));
    }

private:
    DomainConstraint parse_constraint(const std::string& text) const {
        static const std::pair<const char*, DomainConstraint::Op> ops[] = {
            {">=", DomainConstraint::Op::GreaterEqual},
            {"<=", DomainConstraint::Op::LessEqual},
            {">", DomainConstraint::Op::Greater},
            {"<", DomainConstraint::Op::Less},
        };
        for (const auto& [tok, op] : ops) {
            const auto at = text.find(tok);
            if (at == std::string::npos) continue;
            const std::string lhs = text.substr(0, at);
            const std::string rhs = text.substr(at + std::char_traits<char>::length(tok));
            DomainConstraint c;
            c.text = text;
            c.op = op;
            c.difference = parse(lhs) - parse(rhs);
            return c;
        }
        throw ParseError("domain constraint '" + text + "' has no comparison operator");
    }

    std::vector<std::string> coords_;
    std::vector<DomainConstraint> constraints_;
};

/// Axis-aligned grid intersected with the chart domain, plus seeded uniform
/// random points drawn from the same box.
struct SamplePlan {
    struct Axis {
        double lo = -1.0;
        double hi = 1.0;
        int count = 5;
    };

    std::vector<Axis> axes;
    int random_count = 25;
    std::uint64_t seed = 42;

    std::vector<Point> points(const Chart& chart) const {
        if (static_cast<int>(axes.size()) != chart.dim())
            throw ShapeError("sample plan has " + std::to_string(axes.size()) + " axes, chart has " +
                             std::to_string(chart.dim()));
        std::vector<Point> out;
        std::vector<int> idx(axes.size(), 0);
        bool grid = true;
        for (const auto& a : axes)
            if (a.count <= 0) grid = false;
        while (grid) {
            Point p(axes.size());
            for (std::size_t k = 0; k < axes.size(); ++k) {
                const auto& a = axes[k];
                p[k] = a.count == 1 ? a.lo : a.lo + (a.hi - a.lo) * idx[k] / (a.count - 1);
            }
            if (chart.contains(p)) out.push_back(std::move(p));
            std::size_t k = 0;
            while (k < axes.size() && ++idx[k] == axes[k].count) idx[k++] = 0;
            if (k == axes.size()) break;
        }
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int r = 0; r < random_count; ++r) {
            bool placed = false;
            for (int attempt = 0; attempt < 10000 && !placed; ++attempt) {
                Point p(axes.size());
                for (std::size_t k = 0; k < axes.size(); ++k) p[k] = axes[k].lo + (axes[k].hi - axes[k].lo) * unit(rng);
                if (chart.contains(p)) {
                    out.push_back(std::move(p));
                    placed = true;
                }
            }
            if (!placed) throw DomainError("could not place a random sample inside the chart domain");
        }
        return out;
    }

    /// Same box, only `count` random points and no grid.
    SamplePlan random_only(int count) const {
        SamplePlan p = *this;
        for (auto& a : p.axes) a.count = 0;
        p.random_count = count;
        return p;
    }

    std::string describe() const {
        std::ostringstream os;
        for (std::size_t k = 0; k < axes.size(); ++k) {
            if (k) os << ",";
            os << "[" << format_number(axes[k].lo) << "," << format_number(axes[k].hi) << "]x" << axes[k].count;
        }
        os << " + " << random_count << " random (seed " << seed << ")";
        return os.str();
    }
};

/// Parses "x=lo:hi:count,y=..." into axes of `plan`, leaving unnamed axes untouched.
inline void apply_grid_spec(SamplePlan& plan, const Chart& chart, const std::string& spec) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("grid axis '" + item + "' must look like name=lo:hi:count");
        const int k = chart.index_of(item.substr(0, eq));
        std::stringstream fs(item.substr(eq + 1));
        std::string lo, hi, count;
        if (!std::getline(fs, lo, ':') || !std::getline(fs, hi, ':') || !std::getline(fs, count, ':'))
            throw ParseError("grid axis '" + item + "' must look like name=lo:hi:count");
        try {
            plan.axes.at(static_cast<std::size_t>(k)) = {std::stod(lo), std::stod(hi), std::stoi(count)};
        } catch (const std::logic_error&) {
            throw ParseError("grid axis '" + item + "' has a malformed number");
        }
    }
}

}  // namespace solitonkit
