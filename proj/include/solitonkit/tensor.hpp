#pragma once

// Tensor fields in the coordinate frame.
//
// A TensorField of dimension m and rank k stores m^k expressions, row-major,
// with the first slot most significant. Slot variance is explicit: a (1,1)
// field has signature {Contravariant, Covariant} and component [a][b] is
// A^a_b, so A(d_b) = A^a_b d_a.

#include <cstdint>
#include <initializer_list>
#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "solitonkit/expr.hpp"

namespace solitonkit {

enum class Variance : std::uint8_t { Covariant, Contravariant };
using Signature = std::vector<Variance>;

constexpr Variance Co = Variance::Covariant;
constexpr Variance Contra = Variance::Contravariant;

inline std::size_t ipow(int m, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= static_cast<std::size_t>(m);
    return r;
}

/// Calls f(index) for every multi-index in [0, dim)^rank, last slot fastest.
template <class F>
void for_each_index(int dim, std::size_t rank, F&& f) {
    std::vector<int> idx(rank, 0);
    const std::size_t total = ipow(dim, rank);
    for (std::size_t n = 0; n < total; ++n) {
        f(static_cast<const std::vector<int>&>(idx));
        for (std::size_t s = rank; s-- > 0;) {
            if (++idx[s] < dim) break;
            idx[s] = 0;
        }
    }
}

inline std::size_t flat_index(int dim, std::span<const int> idx) {
    std::size_t f = 0;
    for (int i : idx) f = f * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
    return f;
}

class TensorField {
public:
    TensorField() = default;

    TensorField(int dim, Signature sig) : dim_(dim), sig_(std::move(sig)), comps_(ipow(dim, sig_.size())) {
        if (dim <= 0) throw ShapeError("tensor dimension must be positive");
    }

    TensorField(int dim, Signature sig, std::vector<Expr> comps) : dim_(dim), sig_(std::move(sig)), comps_(std::move(comps)) {
        if (dim <= 0) throw ShapeError("tensor dimension must be positive");
        if (comps_.size() != ipow(dim, sig_.size()))
            throw ShapeError("tensor has " + std::to_string(comps_.size()) + " components, expected " +
                             std::to_string(ipow(dim, sig_.size())));
    }

    int dim() const { return dim_; }
    std::size_t rank() const { return sig_.size(); }
    const Signature& signature() const { return sig_; }
    Variance variance(std::size_t slot) const { return sig_.at(slot); }
    std::size_t size() const { return comps_.size(); }

    const std::vector<Expr>& components() const { return comps_; }
    const Expr& operator[](std::size_t flat) const { return comps_[flat]; }
    Expr& operator[](std::size_t flat) { return comps_[flat]; }

    const Expr& at(std::initializer_list<int> idx) const { return comps_[flat_index(dim_, {idx.begin(), idx.size()})]; }
    Expr& at(std::initializer_list<int> idx) { return comps_[flat_index(dim_, {idx.begin(), idx.size()})]; }
    const Expr& at(std::span<const int> idx) const { return comps_[flat_index(dim_, idx)]; }
    Expr& at(std::span<const int> idx) { return comps_[flat_index(dim_, idx)]; }

    bool all_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

private:
    int dim_ = 0;
    Signature sig_;
    std::vector<Expr> comps_;
};

// ---------------------------------------------------------------------------
// Constructors for common shapes

inline TensorField scalar_field(int dim, Expr value) { return TensorField(dim, {}, {std::move(value)}); }

inline TensorField vector_field(std::vector<Expr> comps) {
    const int m = static_cast<int>(comps.size());
    return TensorField(m, {Contra}, std::move(comps));
}

inline TensorField one_form(std::vector<Expr> comps) {
    const int m = static_cast<int>(comps.size());
    return TensorField(m, {Co}, std::move(comps));
}

/// (0,2) field from a row-major m x m matrix.
inline TensorField bilinear_form(int dim, std::vector<Expr> comps) { return TensorField(dim, {Co, Co}, std::move(comps)); }

/// (1,1) field; comps[a*m + b] = A^a_b.
inline TensorField endomorphism(int dim, std::vector<Expr> comps) {
    return TensorField(dim, {Contra, Co}, std::move(comps));
}

inline TensorField identity(int dim) {
    TensorField t(dim, {Contra, Co});
    for (int a = 0; a < dim; ++a) t.at({a, a}) = constant(1.0);
    return t;
}

inline TensorField coordinate_vector(int dim, int k) {
    TensorField t(dim, {Contra});
    t.at({k}) = constant(1.0);
    return t;
}

// ---------------------------------------------------------------------------
// Algebra

inline void require_same_shape(const TensorField& a, const TensorField& b, const char* op) {
    if (a.dim() != b.dim() || a.signature() != b.signature())
        throw ShapeError(std::string(op) + ": operands differ in dimension or variance");
}

inline TensorField operator+(const TensorField& a, const TensorField& b) {
    require_same_shape(a, b, "add");
    TensorField r(a.dim(), a.signature());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline TensorField operator-(const TensorField& a, const TensorField& b) {
    require_same_shape(a, b, "subtract");
    TensorField r(a.dim(), a.signature());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline TensorField operator*(const Expr& s, const TensorField& a) {
    TensorField r(a.dim(), a.signature());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline TensorField operator-(const TensorField& a) { return constant(-1.0) * a; }

inline TensorField tensor_product(const TensorField& a, const TensorField& b) {
    if (a.dim() != b.dim()) throw ShapeError("tensor product: dimension mismatch");
    Signature sig = a.signature();
    sig.insert(sig.end(), b.signature().begin(), b.signature().end());
    TensorField r(a.dim(), sig);
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[k++] = a[i] * b[j];
    return r;
}

/// Composition of (1,1) fields: (A o B)^a_c = A^a_b B^b_c.
inline TensorField compose(const TensorField& a, const TensorField& b) {
    const Signature ep{Contra, Co};
    if (a.signature() != ep || b.signature() != ep || a.dim() != b.dim())
        throw ShapeError("compose: both operands must be (1,1) fields of equal dimension");
    const int m = a.dim();
    TensorField r(m, ep);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            std::vector<Expr> terms;
            for (int j = 0; j < m; ++j) terms.push_back(a.at({i, j}) * b.at({j, k}));
            r.at({i, k}) = sum(std::move(terms));
        }
    return r;
}

/// A(X) for a (1,1) field A and a vector field X.
inline TensorField apply(const TensorField& a, const TensorField& x) {
    if (a.signature() != Signature{Contra, Co} || x.signature() != Signature{Contra} || a.dim() != x.dim())
        throw ShapeError("apply: expected a (1,1) field and a vector field");
    const int m = a.dim();
    TensorField r(m, {Contra});
    for (int i = 0; i < m; ++i) {
        std::vector<Expr> terms;
        for (int j = 0; j < m; ++j) terms.push_back(a.at({i, j}) * x.at({j}));
        r.at({i}) = sum(std::move(terms));
    }
    return r;
}

/// Pairing of a 1-form with a vector field.
inline Expr pair(const TensorField& form, const TensorField& x) {
    if (form.signature() != Signature{Co} || x.signature() != Signature{Contra} || form.dim() != x.dim())
        throw ShapeError("pair: expected a 1-form and a vector field");
    std::vector<Expr> terms;
    for (int i = 0; i < form.dim(); ++i) terms.push_back(form.at({i}) * x.at({i}));
    return sum(std::move(terms));
}

/// Reorders slots: result slot s takes source slot perm[s].
inline TensorField permute(const TensorField& t, const std::vector<std::size_t>& perm) {
    if (perm.size() != t.rank()) throw ShapeError("permute: wrong permutation length");
    Signature sig(t.rank());
    for (std::size_t s = 0; s < perm.size(); ++s) sig[s] = t.variance(perm[s]);
    TensorField r(t.dim(), sig);
    std::vector<int> src(t.rank());
    for_each_index(t.dim(), t.rank(), [&](const std::vector<int>& idx) {
        for (std::size_t s = 0; s < perm.size(); ++s) src[perm[s]] = idx[s];
        r.at(idx) = t.at(src);
    });
    return r;
}

inline TensorField simplify(const TensorField& t) {
    detail::Simplifier s;
    TensorField r(t.dim(), t.signature());
    for (std::size_t i = 0; i < t.size(); ++i) r[i] = s(t[i]);
    return r;
}

// ---------------------------------------------------------------------------
// Metric

/// Symmetric positive-definite (0,2) field with a numerically solved inverse.
class MetricField {
public:
    MetricField() = default;

    explicit MetricField(TensorField g) : g_(std::move(g)) {
        if (g_.signature() != Signature{Co, Co}) throw ShapeError("metric must be a (0,2) field");
        auto src = std::make_shared<InverseSource>();
        src->dim = g_.dim();
        src->metric = g_.components();
        source_ = std::move(src);
        const int m = g_.dim();
        // Entries coupling different blocks of the sparsity pattern vanish;
        // 1x1 blocks invert symbolically, larger blocks numerically.
        std::vector<int> block(static_cast<std::size_t>(m));
        std::iota(block.begin(), block.end(), 0);
        for (bool changed = true; changed;) {
            changed = false;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (!g_.at({i, j}).is_zero() && block[static_cast<std::size_t>(i)] != block[static_cast<std::size_t>(j)]) {
                        const int lo = std::min(block[static_cast<std::size_t>(i)], block[static_cast<std::size_t>(j)]);
                        block[static_cast<std::size_t>(i)] = block[static_cast<std::size_t>(j)] = lo;
                        changed = true;
                    }
        }
        inverse_.resize(static_cast<std::size_t>(m * m));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                auto& slot = inverse_[static_cast<std::size_t>(i * m + j)];
                const int b = block[static_cast<std::size_t>(i)];
                if (b != block[static_cast<std::size_t>(j)]) {
                    slot = constant(0.0);
                } else if (std::count(block.begin(), block.end(), b) == 1) {
                    slot = quotient(constant(1.0), g_.at({i, i}));
                } else {
                    slot = inverse_metric_entry(source_, i, j);
                }
            }
        }
    }

    int dim() const { return g_.dim(); }
    const TensorField& tensor() const { return g_; }
    const Expr& operator()(int i, int j) const { return g_.at({i, j}); }
    const Expr& inverse(int i, int j) const { return inverse_[static_cast<std::size_t>(i * dim() + j)]; }
    TensorField inverse_field() const { return TensorField(dim(), {Contra, Contra}, inverse_); }
    const std::shared_ptr<const InverseSource>& source() const { return source_; }

    /// Numeric metric at the evaluator's point.
    Eigen::MatrixXd at(Evaluator& ev) const {
        const int m = dim();
        Eigen::MatrixXd g(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) g(i, j) = ev(g_.at({i, j}));
        return g;
    }

    /// g(X, Y) for symbolic vector fields.
    Expr inner(const TensorField& x, const TensorField& y) const {
        std::vector<Expr> terms;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) terms.push_back(g_.at({i, j}) * x.at({i}) * y.at({j}));
        return sum(std::move(terms));
    }

private:
    TensorField g_;
    std::shared_ptr<const InverseSource> source_;
    std::vector<Expr> inverse_;
};

// ---------------------------------------------------------------------------
// Core operations

/// (T1 . T2)(X,Y,Z,W) = T1(X,W)T2(Y,Z) + T1(Y,Z)T2(X,W) - T1(X,Z)T2(Y,W) - T1(Y,W)T2(X,Z).
inline TensorField kulkarni_nomizu(const TensorField& t1, const TensorField& t2) {
    const Signature cc{Co, Co};
    if (t1.signature() != cc || t2.signature() != cc) throw ShapeError("kulkarni_nomizu: operands must be (0,2) fields");
    if (t1.dim() != t2.dim()) throw ShapeError("kulkarni_nomizu: dimension mismatch");
    const int m = t1.dim();
    TensorField r(m, {Co, Co, Co, Co});
    for_each_index(m, 4, [&](const std::vector<int>& ix) {
        const int x = ix[0], y = ix[1], z = ix[2], w = ix[3];
        r.at(ix) = t1.at({x, w}) * t2.at({y, z}) + t1.at({y, z}) * t2.at({x, w}) - t1.at({x, z}) * t2.at({y, w}) -
                   t1.at({y, w}) * t2.at({x, z});
    });
    return r;
}

/// Trace over two slots. Mixed-variance pairs are traced directly; equal
/// variance pairs go through g^{ij} or g_{ij}.
inline TensorField contract(const TensorField& t, std::size_t slot_a, std::size_t slot_b, const MetricField* g = nullptr) {
    if (slot_a == slot_b || slot_a >= t.rank() || slot_b >= t.rank())
        throw ShapeError("contract: invalid slot pair (" + std::to_string(slot_a) + ", " + std::to_string(slot_b) + ")");
    if (slot_a > slot_b) std::swap(slot_a, slot_b);
    const bool same = t.variance(slot_a) == t.variance(slot_b);
    if (same && g == nullptr) throw ShapeError("contract: equal-variance slots need a metric");
    if (g && g->dim() != t.dim()) throw ShapeError("contract: metric dimension mismatch");
    const int m = t.dim();
    Signature sig;
    for (std::size_t s = 0; s < t.rank(); ++s)
        if (s != slot_a && s != slot_b) sig.push_back(t.variance(s));
    TensorField r(m, sig);
    std::vector<int> full(t.rank());
    for_each_index(m, sig.size(), [&](const std::vector<int>& idx) {
        for (std::size_t s = 0, k = 0; s < t.rank(); ++s)
            if (s != slot_a && s != slot_b) full[s] = idx[k++];
        std::vector<Expr> terms;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (!same && i != j) continue;
                full[slot_a] = i;
                full[slot_b] = j;
                const Expr& c = t.at(full);
                if (c.is_zero()) continue;
                if (!same) {
                    terms.push_back(c);
                } else {
                    const Expr& w = t.variance(slot_a) == Co ? g->inverse(i, j) : (*g)(i, j);
                    if (!w.is_zero()) terms.push_back(w * c);
                }
            }
        }
        r.at(idx) = sum(std::move(terms));
    });
    return r;
}

/// Flips the variance of one slot using the metric.
inline TensorField raise_lower(const TensorField& t, std::size_t slot, const MetricField& g) {
    if (slot >= t.rank()) throw ShapeError("raise_lower: invalid slot " + std::to_string(slot));
    if (g.dim() != t.dim()) throw ShapeError("raise_lower: metric dimension mismatch");
    const int m = t.dim();
    Signature sig = t.signature();
    const bool lowering = sig[slot] == Contra;
    sig[slot] = lowering ? Co : Contra;
    TensorField r(m, sig);
    std::vector<int> src;
    for_each_index(m, t.rank(), [&](const std::vector<int>& idx) {
        src = idx;
        std::vector<Expr> terms;
        for (int k = 0; k < m; ++k) {
            src[slot] = k;
            const Expr& c = t.at(src);
            if (c.is_zero()) continue;
            const Expr& w = lowering ? g(idx[slot], k) : g.inverse(idx[slot], k);
            if (!w.is_zero()) terms.push_back(w * c);
        }
        r.at(idx) = sum(std::move(terms));
    });
    return r;
}

/// Lie derivative of an all-covariant field:
/// (L_V T)_{i..} = V^k d_k T_{i..} + sum over slots of T_{..k..} d_{i_s} V^k.
inline TensorField lie_derivative(const TensorField& v, const TensorField& t) {
    if (v.signature() != Signature{Contra}) throw ShapeError("lie_derivative: V must be a vector field");
    for (auto s : t.signature())
        if (s != Co) throw ShapeError("lie_derivative: T must be covariant");
    if (v.dim() != t.dim()) throw ShapeError("lie_derivative: dimension mismatch");
    const int m = t.dim();
    DerivativeCache d(m);
    TensorField r(m, t.signature());
    std::vector<int> src;
    for_each_index(m, t.rank(), [&](const std::vector<int>& idx) {
        std::vector<Expr> terms;
        for (int k = 0; k < m; ++k) {
            if (!v.at({k}).is_zero()) terms.push_back(v.at({k}) * d(t.at(idx), k));
        }
        for (std::size_t s = 0; s < t.rank(); ++s) {
            src = idx;
            for (int k = 0; k < m; ++k) {
                src[s] = k;
                const Expr& c = t.at(src);
                if (c.is_zero()) continue;
                Expr dv = d(v.at({k}), idx[s]);
                if (!dv.is_zero()) terms.push_back(c * dv);
            }
        }
        r.at(idx) = sum(std::move(terms));
    });
    return r;
}

// ---------------------------------------------------------------------------
// Numeric tensors at a point

struct PointTensor {
    int dim = 0;
    Signature signature;
    std::vector<double> values;

    std::size_t rank() const { return signature.size(); }
    double at(std::span<const int> idx) const { return values[flat_index(dim, idx)]; }
    double at(std::initializer_list<int> idx) const { return values[flat_index(dim, {idx.begin(), idx.size()})]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

inline PointTensor evaluate(const TensorField& t, Evaluator& ev) {
    PointTensor p{t.dim(), t.signature(), std::vector<double>(t.size())};
    for (std::size_t i = 0; i < t.size(); ++i) p.values[i] = ev(t[i]);
    return p;
}

inline PointTensor operator-(const PointTensor& a, const PointTensor& b) {
    if (a.dim != b.dim || a.signature != b.signature) throw ShapeError("point tensor subtraction: shape mismatch");
    PointTensor r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
    return r;
}

/// new[..a..] = sum_i M(a, i) t[..i..] on one slot.
inline PointTensor apply_slot(const PointTensor& t, std::size_t slot, const Eigen::MatrixXd& m) {
    PointTensor r{t.dim, t.signature, std::vector<double>(t.values.size(), 0.0)};
    std::vector<int> src;
    for_each_index(t.dim, t.rank(), [&](const std::vector<int>& idx) {
        src = idx;
        double s = 0.0;
        for (int i = 0; i < t.dim; ++i) {
            src[slot] = i;
            s += m(idx[slot], i) * t.at(src);
        }
        r.values[flat_index(t.dim, idx)] = s;
    });
    return r;
}

/// Components against an orthonormal frame: covariant slots are fed frame
/// vectors E_a (columns of `frame`), contravariant slots the dual coframe g(E_a, .).
inline PointTensor project_to_frame(const PointTensor& t, const Eigen::MatrixXd& frame, const Eigen::MatrixXd& g) {
    const Eigen::MatrixXd co = frame.transpose();
    const Eigen::MatrixXd contra = frame.transpose() * g;
    PointTensor r = t;
    for (std::size_t s = 0; s < t.rank(); ++s) r = apply_slot(r, s, t.signature[s] == Co ? co : contra);
    return r;
}

/// Gram-Schmidt on the coordinate basis in the metric g; columns are E_a.
inline Eigen::MatrixXd gram_schmidt_frame(const Eigen::MatrixXd& g) {
    const int m = static_cast<int>(g.rows());
    Eigen::MatrixXd e = Eigen::MatrixXd::Identity(m, m);
    for (int a = 0; a < m; ++a) {
        Eigen::VectorXd v = e.col(a);
        for (int b = 0; b < a; ++b) v -= (e.col(b).dot(g * v)) * e.col(b);
        const double n2 = v.dot(g * v);
        if (!(n2 > 0.0)) throw SingularMetricError("Gram-Schmidt: degenerate metric");
        e.col(a) = v / std::sqrt(n2);
    }
    return e;
}

}  // namespace solitonkit
