#pragma once

// Closed-form scalar fields over chart coordinates.
//
// An Expr is an immutable, reference-counted expression DAG. Construction goes
// through smart constructors that fold constants and drop 0/1 operands, so the
// trees produced by repeated differentiation stay small. Differentiation is
// exact for every node kind; evaluation is a pure function of the point.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "solitonkit/error.hpp"

namespace solitonkit {

/// Exponent of a power node. Always stored with gcd(num, den) = 1 and den > 0.
struct Rational {
    long num = 1;
    long den = 1;

    static Rational make(long num, long den) {
        if (den == 0) throw Error("rational exponent with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long g = std::gcd(num, den);
        return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }

    friend Rational operator-(Rational a, Rational b) {
        return make(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class ExprKind {
    Constant,
    Coordinate,
    Sum,
    Product,
    Quotient,
    Power,
    Exp,
    Log,
    Sin,
    Cos,
    Negate,
    /// Entry (row, column) of the inverse of a symbolic metric, solved numerically per point.
    InverseMetric,
};

namespace detail {
struct Node;
}

struct InverseSource;

class Expr {
public:
    Expr();
    Expr(double value);  // NOLINT(google-explicit-constructor): constants mix freely with fields

    ExprKind kind() const;
    bool is_constant() const { return kind() == ExprKind::Constant; }
    bool is_zero() const;
    bool is_one() const;
    double constant_value() const;

    const std::vector<Expr>& args() const;
    int coordinate_index() const;
    const std::string& coordinate_name() const;
    Rational exponent() const;
    std::size_t hash() const;

    const detail::Node* node() const { return node_.get(); }

    explicit Expr(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

private:
    std::shared_ptr<const detail::Node> node_;
};

/// The symbolic metric whose numeric inverse backs InverseMetric nodes.
struct InverseSource {
    int dim = 0;
    std::vector<Expr> metric;  // row-major dim x dim
};

namespace detail {

struct Node {
    ExprKind kind = ExprKind::Constant;
    double value = 0.0;
    int index = -1;   // coordinate index, or inverse-metric row
    int column = -1;  // inverse-metric column
    Rational exponent{1, 1};
    std::vector<Expr> args;
    std::string name;
    std::shared_ptr<const InverseSource> source;
    std::size_t hash = 0;
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline Expr make_node(Node node) {
    std::size_t h = std::hash<int>{}(static_cast<int>(node.kind));
    hash_combine(h, std::hash<double>{}(node.value));
    hash_combine(h, std::hash<int>{}(node.index));
    hash_combine(h, std::hash<int>{}(node.column));
    hash_combine(h, std::hash<long>{}(node.exponent.num));
    hash_combine(h, std::hash<long>{}(node.exponent.den));
    hash_combine(h, std::hash<const void*>{}(node.source.get()));
    for (const auto& a : node.args) hash_combine(h, a.hash());
    node.hash = h;
    return Expr(std::make_shared<const Node>(std::move(node)));
}

}  // namespace detail

inline Expr constant(double value) {
    detail::Node n;
    n.kind = ExprKind::Constant;
    n.value = value == 0.0 ? 0.0 : value;  // normalise -0.0
    return detail::make_node(std::move(n));
}

inline Expr::Expr() : Expr(0.0) {}

inline Expr::Expr(double value) {
    detail::Node n;
    n.kind = ExprKind::Constant;
    n.value = value == 0.0 ? 0.0 : value;
    *this = detail::make_node(std::move(n));
}

inline ExprKind Expr::kind() const { return node_->kind; }
inline bool Expr::is_zero() const { return is_constant() && node_->value == 0.0; }
inline bool Expr::is_one() const { return is_constant() && node_->value == 1.0; }
inline double Expr::constant_value() const {
    if (!is_constant()) throw Error("expression is not a constant");
    return node_->value;
}
inline const std::vector<Expr>& Expr::args() const { return node_->args; }
inline int Expr::coordinate_index() const { return node_->index; }
inline const std::string& Expr::coordinate_name() const { return node_->name; }
inline Rational Expr::exponent() const { return node_->exponent; }
inline std::size_t Expr::hash() const { return node_->hash; }

inline Expr coordinate(int index, std::string name) {
    detail::Node n;
    n.kind = ExprKind::Coordinate;
    n.index = index;
    n.name = std::move(name);
    return detail::make_node(std::move(n));
}

inline Expr inverse_metric_entry(std::shared_ptr<const InverseSource> source, int row, int column) {
    if (row > column) std::swap(row, column);  // symmetric
    detail::Node n;
    n.kind = ExprKind::InverseMetric;
    n.index = row;
    n.column = column;
    n.source = std::move(source);
    return detail::make_node(std::move(n));
}

/// Structural equality. Sums and products compare operands in order.
inline bool equal(const Expr& a, const Expr& b) {
    if (a.node() == b.node()) return true;
    if (a.hash() != b.hash()) return false;
    const auto& na = *a.node();
    const auto& nb = *b.node();
    if (na.kind != nb.kind || na.value != nb.value || na.index != nb.index || na.column != nb.column ||
        !(na.exponent == nb.exponent) || na.source != nb.source || na.args.size() != nb.args.size())
        return false;
    for (std::size_t i = 0; i < na.args.size(); ++i)
        if (!equal(na.args[i], nb.args[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Smart constructors

inline Expr sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    double c = 0.0;
    for (auto& t : terms) {
        if (t.kind() == ExprKind::Sum) {
            for (const auto& u : t.args()) {
                if (u.is_constant())
                    c += u.constant_value();
                else
                    flat.push_back(u);
            }
        } else if (t.is_constant()) {
            c += t.constant_value();
        } else {
            flat.push_back(std::move(t));
        }
    }
    if (c != 0.0) flat.push_back(constant(c));
    if (flat.empty()) return constant(0.0);
    if (flat.size() == 1) return flat.front();
    detail::Node n;
    n.kind = ExprKind::Sum;
    n.args = std::move(flat);
    return detail::make_node(std::move(n));
}

inline Expr product(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    double c = 1.0;
    for (auto& f : factors) {
        if (f.kind() == ExprKind::Product) {
            for (const auto& u : f.args()) {
                if (u.is_constant())
                    c *= u.constant_value();
                else
                    flat.push_back(u);
            }
        } else if (f.is_constant()) {
            c *= f.constant_value();
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (c == 0.0) return constant(0.0);
    if (flat.empty()) return constant(c);
    if (c != 1.0) flat.insert(flat.begin(), constant(c));
    if (flat.size() == 1) return flat.front();
    detail::Node n;
    n.kind = ExprKind::Product;
    n.args = std::move(flat);
    return detail::make_node(std::move(n));
}

inline Expr negate(const Expr& a) {
    if (a.is_constant()) return constant(-a.constant_value());
    if (a.kind() == ExprKind::Negate) return a.args().front();
    if (a.kind() == ExprKind::Product && a.args().front().is_constant()) return product({constant(-1.0), a});
    detail::Node n;
    n.kind = ExprKind::Negate;
    n.args = {a};
    return detail::make_node(std::move(n));
}

inline Expr quotient(const Expr& num, const Expr& den) {
    if (den.is_one()) return num;
    if (num.is_zero()) return constant(0.0);
    if (num.is_constant() && den.is_constant() && den.constant_value() != 0.0)
        return constant(num.constant_value() / den.constant_value());
    if (den.is_constant() && den.constant_value() != 0.0) return product({constant(1.0 / den.constant_value()), num});
    detail::Node n;
    n.kind = ExprKind::Quotient;
    n.args = {num, den};
    return detail::make_node(std::move(n));
}

inline Expr pow(const Expr& base, Rational exponent) {
    exponent = Rational::make(exponent.num, exponent.den);
    if (exponent.num == 0) return constant(1.0);
    if (exponent == Rational{1, 1}) return base;
    if (base.is_constant()) {
        const double b = base.constant_value();
        const double v = std::pow(b, exponent.value());
        if (std::isfinite(v) && !(b < 0.0 && !exponent.is_integer())) return constant(v);
    }
    if (base.kind() == ExprKind::Power) {
        const Rational inner = base.exponent();
        // (u^p)^q = u^(pq) only when no sign information is lost.
        if (inner.den == 1 && exponent.den == 1)
            return pow(base.args().front(), Rational::make(inner.num * exponent.num, 1));
    }
    detail::Node n;
    n.kind = ExprKind::Power;
    n.exponent = exponent;
    n.args = {base};
    return detail::make_node(std::move(n));
}

namespace detail {
inline Expr unary(ExprKind kind, const Expr& a) {
    Node n;
    n.kind = kind;
    n.args = {a};
    return make_node(std::move(n));
}
}  // namespace detail

inline Expr exp(const Expr& a) {
    if (a.is_constant()) return constant(std::exp(a.constant_value()));
    if (a.kind() == ExprKind::Log) return a.args().front();
    return detail::unary(ExprKind::Exp, a);
}

inline Expr log(const Expr& a) {
    if (a.is_constant() && a.constant_value() > 0.0) return constant(std::log(a.constant_value()));
    if (a.kind() == ExprKind::Exp) return a.args().front();
    return detail::unary(ExprKind::Log, a);
}

inline Expr sin(const Expr& a) {
    if (a.is_constant()) return constant(std::sin(a.constant_value()));
    return detail::unary(ExprKind::Sin, a);
}

inline Expr cos(const Expr& a) {
    if (a.is_constant()) return constant(std::cos(a.constant_value()));
    return detail::unary(ExprKind::Cos, a);
}

inline Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
inline Expr operator-(const Expr& a, const Expr& b) { return sum({a, negate(b)}); }
inline Expr operator-(const Expr& a) { return negate(a); }
inline Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
inline Expr operator/(const Expr& a, const Expr& b) { return quotient(a, b); }
inline Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
inline Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
inline Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

// ---------------------------------------------------------------------------
// Evaluation

/// Evaluates expressions at one point, memoising shared sub-expressions and
/// the numeric inverse of every metric referenced by InverseMetric nodes.
class Evaluator {
public:
    explicit Evaluator(std::vector<double> point) : point_(std::move(point)) {}

    const std::vector<double>& point() const { return point_; }

    double operator()(const Expr& e) {
        roots_.push_back(e);  // keeps memo keys alive
        return eval(*e.node());
    }

    /// Numeric inverse of a symbolic metric at this point.
    const Eigen::MatrixXd& inverse(const InverseSource& source) {
        auto it = inverses_.find(&source);
        if (it != inverses_.end()) return it->second;
        const int m = source.dim;
        Eigen::MatrixXd g(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) g(i, j) = eval(*source.metric[static_cast<std::size_t>(i * m + j)].node());
        Eigen::LLT<Eigen::MatrixXd> llt(g);
        if (llt.info() != Eigen::Success) throw SingularMetricError("metric is singular or not positive definite");
        Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(m, m));
        const double cond = g.norm() * inv.norm();
        if (!inv.allFinite() || cond > 1e14) throw SingularMetricError("metric is numerically singular");
        return inverses_.emplace(&source, std::move(inv)).first->second;
    }

private:
    double eval(const detail::Node& n) {
        switch (n.kind) {
        case ExprKind::Constant: return n.value;
        case ExprKind::Coordinate:
            if (n.index < 0 || static_cast<std::size_t>(n.index) >= point_.size())
                throw EvalError("coordinate '" + n.name + "' is not part of the point");
            return point_[static_cast<std::size_t>(n.index)];
        default: break;
        }
        if (auto it = memo_.find(&n); it != memo_.end()) return it->second;
        const double v = compute(n);
        if (!std::isfinite(v)) throw EvalError("expression evaluated to a non-finite value");
        memo_.emplace(&n, v);
        return v;
    }

    double compute(const detail::Node& n) {
        switch (n.kind) {
        case ExprKind::Sum: {
            double s = 0.0;
            for (const auto& a : n.args) s += eval(*a.node());
            return s;
        }
        case ExprKind::Product: {
            double p = 1.0;
            for (const auto& a : n.args) p *= eval(*a.node());
            return p;
        }
        case ExprKind::Quotient: {
            const double num = eval(*n.args[0].node());
            const double den = eval(*n.args[1].node());
            if (den == 0.0) throw EvalError("division by zero");
            return num / den;
        }
        case ExprKind::Power: {
            const double b = eval(*n.args[0].node());
            const Rational r = n.exponent;
            if (b == 0.0 && r.num < 0) throw EvalError("division by zero in negative power");
            if (r.is_integer()) return std::pow(b, static_cast<double>(r.num));
            if (b < 0.0) {
                if (r.den % 2 == 0) throw EvalError("even root of a negative value");
                const double mag = std::pow(-b, r.value());
                return (r.num % 2 == 0) ? mag : -mag;
            }
            return std::pow(b, r.value());
        }
        case ExprKind::Exp: return std::exp(eval(*n.args[0].node()));
        case ExprKind::Log: {
            const double a = eval(*n.args[0].node());
            if (a <= 0.0) throw EvalError("log of a non-positive value");
            return std::log(a);
        }
        case ExprKind::Sin: return std::sin(eval(*n.args[0].node()));
        case ExprKind::Cos: return std::cos(eval(*n.args[0].node()));
        case ExprKind::Negate: return -eval(*n.args[0].node());
        case ExprKind::InverseMetric: return inverse(*n.source)(n.index, n.column);
        default: break;
        }
        throw EvalError("unknown expression node");
    }

    std::vector<double> point_;
    std::unordered_map<const detail::Node*, double> memo_;
    std::vector<Expr> roots_;
    std::unordered_map<const InverseSource*, Eigen::MatrixXd> inverses_;
};

/// One-shot evaluation without domain checks; see Chart::evaluate for the checked form.
inline double evaluate(const Expr& e, std::vector<double> point) {
    Evaluator ev(std::move(point));
    return ev(e);
}

// ---------------------------------------------------------------------------
// Differentiation

/// Exact partial derivative with respect to one coordinate. The memo keeps
/// shared sub-expressions shared in the result.
class Differentiator {
public:
    explicit Differentiator(int coordinate) : coord_(coordinate) {}

    int coordinate() const { return coord_; }

    Expr operator()(const Expr& e) {
        if (auto it = memo_.find(e.node()); it != memo_.end()) return it->second;
        Expr d = rule(e);
        roots_.push_back(e);
        memo_.emplace(e.node(), d);
        return d;
    }

private:
    Expr rule(const Expr& e) {
        const auto& a = e.args();
        switch (e.kind()) {
        case ExprKind::Constant: return constant(0.0);
        case ExprKind::Coordinate: return constant(e.coordinate_index() == coord_ ? 1.0 : 0.0);
        case ExprKind::Sum: {
            std::vector<Expr> terms;
            terms.reserve(a.size());
            for (const auto& t : a) terms.push_back((*this)(t));
            return sum(std::move(terms));
        }
        case ExprKind::Product: {
            std::vector<Expr> terms;
            for (std::size_t i = 0; i < a.size(); ++i) {
                Expr di = (*this)(a[i]);
                if (di.is_zero()) continue;
                std::vector<Expr> f = a;
                f[i] = di;
                terms.push_back(product(std::move(f)));
            }
            return sum(std::move(terms));
        }
        case ExprKind::Quotient: {
            const Expr& u = a[0];
            const Expr& v = a[1];
            Expr du = (*this)(u);
            Expr dv = (*this)(v);
            if (dv.is_zero()) return quotient(du, v);
            return quotient(du * v - u * dv, pow(v, Rational{2, 1}));
        }
        case ExprKind::Power: {
            Expr du = (*this)(a[0]);
            if (du.is_zero()) return constant(0.0);
            const Rational r = e.exponent();
            return product({constant(r.value()), pow(a[0], r - Rational{1, 1}), du});
        }
        case ExprKind::Exp: return e * (*this)(a[0]);
        case ExprKind::Log: return quotient((*this)(a[0]), a[0]);
        case ExprKind::Sin: return cos(a[0]) * (*this)(a[0]);
        case ExprKind::Cos: return negate(sin(a[0]) * (*this)(a[0]));
        case ExprKind::Negate: return negate((*this)(a[0]));
        case ExprKind::InverseMetric: return inverse_rule(e);
        }
        throw Error("unknown expression node");
    }

    // d(g^-1)_ij = -sum_ab (g^-1)_ia d(g_ab) (g^-1)_bj
    Expr inverse_rule(const Expr& e) {
        const auto& n = *e.node();
        const auto& src = n.source;
        const int m = src->dim;
        std::vector<Expr> terms;
        for (int p = 0; p < m; ++p) {
            for (int q = 0; q < m; ++q) {
                Expr dg = (*this)(src->metric[static_cast<std::size_t>(p * m + q)]);
                if (dg.is_zero()) continue;
                terms.push_back(product({constant(-1.0), entry(src, n.index, p), dg, entry(src, q, n.column)}));
            }
        }
        return sum(std::move(terms));
    }

    Expr entry(const std::shared_ptr<const InverseSource>& src, int i, int j) {
        if (i > j) std::swap(i, j);
        const auto key = std::make_pair(src.get(), i * src->dim + j);
        for (const auto& [k, v] : inverse_entries_)
            if (k == key) return v;
        Expr x = inverse_metric_entry(src, i, j);
        inverse_entries_.emplace_back(key, x);
        return x;
    }

    int coord_;
    std::unordered_map<const detail::Node*, Expr> memo_;
    std::vector<Expr> roots_;
    std::vector<std::pair<std::pair<const InverseSource*, int>, Expr>> inverse_entries_;
};

/// Partial derivatives in every coordinate direction, sharing memo tables
/// across calls so repeated differentiation of related fields stays compact.
class DerivativeCache {
public:
    explicit DerivativeCache(int dim) {
        for (int i = 0; i < dim; ++i) by_coord_.emplace_back(i);
    }

    Expr operator()(const Expr& e, int coord) {
        if (coord < 0 || static_cast<std::size_t>(coord) >= by_coord_.size())
            throw Error("coordinate index out of range");
        return by_coord_[static_cast<std::size_t>(coord)](e);
    }

    int dim() const { return static_cast<int>(by_coord_.size()); }

private:
    std::vector<Differentiator> by_coord_;
};

inline Expr differentiate(const Expr& e, int coord) { return Differentiator(coord)(e); }

// ---------------------------------------------------------------------------
// Simplification

namespace detail {

// Splits a term into numeric coefficient and the remaining factor.
inline std::pair<double, Expr> split_coefficient(const Expr& t) {
    if (t.is_constant()) return {t.constant_value(), constant(1.0)};
    if (t.kind() == ExprKind::Negate) {
        auto [c, rest] = split_coefficient(t.args().front());
        return {-c, rest};
    }
    if (t.kind() == ExprKind::Product && t.args().front().is_constant()) {
        std::vector<Expr> rest(t.args().begin() + 1, t.args().end());
        return {t.args().front().constant_value(), product(std::move(rest))};
    }
    return {1.0, t};
}

class Simplifier {
public:
    Expr operator()(const Expr& e) {
        if (auto it = memo_.find(e.node()); it != memo_.end()) return it->second;
        Expr s = rule(e);
        roots_.push_back(e);
        memo_.emplace(e.node(), s);
        return s;
    }

private:
    Expr rule(const Expr& e) {
        std::vector<Expr> a;
        a.reserve(e.args().size());
        for (const auto& x : e.args()) a.push_back((*this)(x));
        switch (e.kind()) {
        case ExprKind::Constant:
        case ExprKind::Coordinate:
        case ExprKind::InverseMetric: return e;
        case ExprKind::Sum: return merge_terms(sum(std::move(a)));
        case ExprKind::Product: return product(std::move(a));
        case ExprKind::Quotient: return cancel(a[0], a[1]);
        case ExprKind::Power: return pow(a[0], e.exponent());
        case ExprKind::Exp: return exp(a[0]);
        case ExprKind::Log: return log(a[0]);
        case ExprKind::Sin: return sin(a[0]);
        case ExprKind::Cos: return cos(a[0]);
        case ExprKind::Negate: return negate(a[0]);
        }
        return e;
    }

    static Expr merge_terms(const Expr& s) {
        if (s.kind() != ExprKind::Sum) return s;
        std::vector<std::pair<double, Expr>> groups;
        for (const auto& t : s.args()) {
            auto [c, rest] = split_coefficient(t);
            bool merged = false;
            for (auto& g : groups) {
                if (equal(g.second, rest)) {
                    g.first += c;
                    merged = true;
                    break;
                }
            }
            if (!merged) groups.emplace_back(c, rest);
        }
        std::vector<Expr> terms;
        for (auto& [c, rest] : groups) {
            if (c == 0.0) continue;
            terms.push_back(product({constant(c), rest}));
        }
        return sum(std::move(terms));
    }

    static Expr cancel(const Expr& num, const Expr& den) {
        if (equal(num, den)) return constant(1.0);
        auto [cn, rn] = split_coefficient(num);
        auto [cd, rd] = split_coefficient(den);
        if (equal(rn, rd) && cd != 0.0) return constant(cn / cd);
        if (rn.kind() == ExprKind::Product) {
            auto f = rn.args();
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (equal(f[i], rd) && cd != 0.0) {
                    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                    return product({constant(cn / cd), product(std::move(f))});
                }
            }
        }
        return quotient(num, den);
    }

    std::unordered_map<const Node*, Expr> memo_;
    std::vector<Expr> roots_;
};

}  // namespace detail

/// Constant folding, 0/1 elimination, like-term merging and cancellation of
/// identical numerator/denominator factors. Not a canonical form.
inline Expr simplify(const Expr& e) { return detail::Simplifier{}(e); }

// ---------------------------------------------------------------------------
// Printing

/// Shortest text that reads back to the same double.
inline std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace detail {

inline int precedence(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Sum: return 1;
    case ExprKind::Product:
    case ExprKind::Quotient: return 2;
    case ExprKind::Negate: return 3;
    case ExprKind::Power: return 4;
    case ExprKind::Constant: return e.constant_value() < 0.0 ? 3 : 5;
    default: return 5;
    }
}

inline std::string print(const Expr& e, int parent);

inline std::string wrap(const Expr& e, int min_prec) {
    std::string s = print(e, min_prec);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

inline std::string print(const Expr& e, int) {
    const auto& a = e.args();
    switch (e.kind()) {
    case ExprKind::Constant: return format_number(e.constant_value());
    case ExprKind::Coordinate: return e.coordinate_name();
    case ExprKind::Sum: {
        std::string s = wrap(a[0], 1);
        for (std::size_t i = 1; i < a.size(); ++i) {
            auto [c, rest] = split_coefficient(a[i]);
            if (c < 0.0) {
                Expr pos = rest.is_one() ? constant(-c) : product({constant(-c), rest});
                s += " - " + wrap(pos, 2);
            } else {
                s += " + " + wrap(a[i], 1);
            }
        }
        return s;
    }
    case ExprKind::Product: {
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += "*";
            s += wrap(a[i], 3);
        }
        return s;
    }
    case ExprKind::Quotient: return wrap(a[0], 2) + "/" + wrap(a[1], 3);
    case ExprKind::Power: {
        const Rational r = e.exponent();
        std::string ex = r.den == 1 ? std::to_string(r.num) : "(" + std::to_string(r.num) + "/" + std::to_string(r.den) + ")";
        if (r.den == 1 && r.num < 0) ex = "(" + ex + ")";
        return wrap(a[0], 5) + "^" + ex;
    }
    case ExprKind::Exp: return "exp(" + print(a[0], 0) + ")";
    case ExprKind::Log: return "log(" + print(a[0], 0) + ")";
    case ExprKind::Sin: return "sin(" + print(a[0], 0) + ")";
    case ExprKind::Cos: return "cos(" + print(a[0], 0) + ")";
    case ExprKind::Negate: return "-" + wrap(a[0], 3);
    case ExprKind::InverseMetric:
        return "ginv[" + std::to_string(e.node()->index) + "][" + std::to_string(e.node()->column) + "]";
    }
    return "?";
}

}  // namespace detail

/// Infix text. Re-parses to an equal-valued expression except for
/// inverse-metric entries, which have no text form.
inline std::string to_string(const Expr& e) { return detail::print(e, 0); }

/// Number of distinct nodes in the DAG.
inline std::size_t node_count(const Expr& e) {
    std::unordered_map<const detail::Node*, bool> seen;
    std::vector<const detail::Node*> stack{e.node()};
    while (!stack.empty()) {
        const auto* n = stack.back();
        stack.pop_back();
        if (!seen.emplace(n, true).second) continue;
        for (const auto& a : n->args) stack.push_back(a.node());
    }
    return seen.size();
}

}  // namespace solitonkit
