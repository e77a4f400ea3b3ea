#pragma once

// Levi-Civita connection and curvature of a chart metric.
//
// Conventions:
//   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
//   R(d_i, d_j) d_k = R^l_ijk d_l, stored with slot order (l, i, j, k)
//   R_ijkl = g(R(d_i, d_j) d_k, d_l)
//   Ric(Y, Z) = trace(X -> R(X,Y)Z), i.e. Ric_jk = R^i_ijk
//   Q^a_b = g^{ac} Ric_cb

#include <memory>
#include <vector>

#include "solitonkit/expr.hpp"
#include "solitonkit/tensor.hpp"

namespace solitonkit {

class Connection {
public:
    Connection() = default;

    explicit Connection(MetricField g) : g_(std::move(g)), d_(std::make_shared<DerivativeCache>(g_.dim())) {
        const int m = g_.dim();
        DerivativeCache& d = *d_;
        // Christoffel symbols of the first kind, then raised with g^{kl}.
        std::vector<Expr> first(static_cast<std::size_t>(m * m * m));
        for (int l = 0; l < m; ++l)
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j) {
                    Expr v = constant(0.5) * (d(g_(j, l), i) + d(g_(i, l), j) - d(g_(i, j), l));
                    first[static_cast<std::size_t>((l * m + i) * m + j)] = v;
                    first[static_cast<std::size_t>((l * m + j) * m + i)] = v;
                }
        gamma_.resize(first.size());
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j) {
                    std::vector<Expr> terms;
                    for (int l = 0; l < m; ++l) {
                        const Expr& inv = g_.inverse(k, l);
                        const Expr& f = first[static_cast<std::size_t>((l * m + i) * m + j)];
                        if (!inv.is_zero() && !f.is_zero()) terms.push_back(inv * f);
                    }
                    Expr v = sum(std::move(terms));
                    gamma_[static_cast<std::size_t>((k * m + i) * m + j)] = v;
                    gamma_[static_cast<std::size_t>((k * m + j) * m + i)] = v;
                }
    }

    int dim() const { return g_.dim(); }
    const MetricField& metric() const { return g_; }

    /// Gamma^k_ij.
    const Expr& operator()(int k, int i, int j) const {
        const int m = dim();
        return gamma_[static_cast<std::size_t>((k * m + i) * m + j)];
    }

    /// Shared memo of partial derivatives; reused by every field built on this connection.
    DerivativeCache& derivatives() const { return *d_; }

private:
    MetricField g_;
    std::vector<Expr> gamma_;
    std::shared_ptr<DerivativeCache> d_;
};

/// Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
inline Connection christoffel(const MetricField& g) { return Connection(g); }

/// nabla T with the direction in a new leading covariant slot:
/// (nabla T)_{m, idx} = (nabla_{d_m} T)_{idx}.
inline TensorField covariant_derivative(const TensorField& t, const Connection& conn) {
    if (t.dim() != conn.dim()) throw ShapeError("covariant_derivative: dimension mismatch");
    const int m = t.dim();
    DerivativeCache& d = conn.derivatives();
    Signature sig{Co};
    sig.insert(sig.end(), t.signature().begin(), t.signature().end());
    TensorField r(m, sig);
    std::vector<int> src;
    for_each_index(m, sig.size(), [&](const std::vector<int>& full) {
        const int dir = full[0];
        const std::span<const int> idx(full.data() + 1, full.size() - 1);
        std::vector<Expr> terms;
        terms.push_back(d(t.at(idx), dir));
        for (std::size_t s = 0; s < t.rank(); ++s) {
            src.assign(idx.begin(), idx.end());
            for (int p = 0; p < m; ++p) {
                src[s] = p;
                const Expr& c = t.at(src);
                if (c.is_zero()) continue;
                if (t.variance(s) == Contra) {
                    const Expr& gm = conn(idx[s], dir, p);
                    if (!gm.is_zero()) terms.push_back(gm * c);
                } else {
                    const Expr& gm = conn(p, dir, idx[s]);
                    if (!gm.is_zero()) terms.push_back(negate(gm * c));
                }
            }
        }
        r.at(full) = sum(std::move(terms));
    });
    return r;
}

struct CurvatureBundle {
    TensorField riemann_up;      ///< R^l_ijk, slots (l, i, j, k)
    TensorField riemann;         ///< R_ijkl
    TensorField ricci;           ///< Ric_jk
    TensorField ricci_operator;  ///< Q^a_b
    Expr scalar;                 ///< scal = trace_g Ric
    TensorField weyl;            ///< empty when dim < 3
};

/// W = R + scal/(2(m-1)(m-2)) g.g - 1/(m-2) Ric.g
inline TensorField weyl(const CurvatureBundle& b, const MetricField& g) {
    const int m = g.dim();
    if (m < 3) throw ShapeError("weyl: dimension must be at least 3");
    const double md = m;
    const TensorField gg = kulkarni_nomizu(g.tensor(), g.tensor());
    const TensorField rg = kulkarni_nomizu(b.ricci, g.tensor());
    return b.riemann + (b.scalar / constant(2.0 * (md - 1.0) * (md - 2.0))) * gg - constant(1.0 / (md - 2.0)) * rg;
}

inline CurvatureBundle riemann(const Connection& conn) {
    const MetricField& g = conn.metric();
    const int m = g.dim();
    DerivativeCache& d = conn.derivatives();
    CurvatureBundle b;
    b.riemann_up = TensorField(m, {Contra, Co, Co, Co});
    for_each_index(m, 4, [&](const std::vector<int>& ix) {
        const int l = ix[0], i = ix[1], j = ix[2], k = ix[3];
        if (i == j) return;
        std::vector<Expr> terms{d(conn(l, j, k), i), negate(d(conn(l, i, k), j))};
        for (int p = 0; p < m; ++p) {
            terms.push_back(conn(l, i, p) * conn(p, j, k));
            terms.push_back(negate(conn(l, j, p) * conn(p, i, k)));
        }
        b.riemann_up.at(ix) = sum(std::move(terms));
    });
    b.riemann = TensorField(m, {Co, Co, Co, Co});
    for_each_index(m, 4, [&](const std::vector<int>& ix) {
        const int i = ix[0], j = ix[1], k = ix[2], l = ix[3];
        std::vector<Expr> terms;
        for (int p = 0; p < m; ++p) {
            const Expr& gl = g(l, p);
            const Expr& r = b.riemann_up.at({p, i, j, k});
            if (!gl.is_zero() && !r.is_zero()) terms.push_back(gl * r);
        }
        b.riemann.at(ix) = sum(std::move(terms));
    });
    b.ricci = contract(b.riemann_up, 0, 1);
    b.ricci_operator = raise_lower(b.ricci, 0, g);
    b.scalar = contract(b.ricci_operator, 0, 1)[0];
    if (m >= 3) b.weyl = weyl(b, g);
    return b;
}

/// grad f = g^{ij} d_j f d_i
inline TensorField gradient(const Expr& f, const MetricField& g) {
    const int m = g.dim();
    DerivativeCache d(m);
    TensorField r(m, {Contra});
    for (int i = 0; i < m; ++i) {
        std::vector<Expr> terms;
        for (int j = 0; j < m; ++j) {
            const Expr& inv = g.inverse(i, j);
            if (inv.is_zero()) continue;
            Expr dj = d(f, j);
            if (!dj.is_zero()) terms.push_back(inv * dj);
        }
        r.at({i}) = sum(std::move(terms));
    }
    return r;
}

/// df as a 1-form.
inline TensorField differential(const Expr& f, int dim) {
    DerivativeCache d(dim);
    TensorField r(dim, {Co});
    for (int i = 0; i < dim; ++i) r.at({i}) = d(f, i);
    return r;
}

/// X(f) = df(X).
inline Expr directional(const Expr& f, const TensorField& x) { return pair(differential(f, x.dim()), x); }

/// div V = d_i V^i + Gamma^i_ik V^k
inline Expr divergence(const TensorField& v, const Connection& conn) {
    if (v.signature() != Signature{Contra}) throw ShapeError("divergence: expected a vector field");
    const int m = conn.dim();
    DerivativeCache& d = conn.derivatives();
    std::vector<Expr> terms;
    for (int i = 0; i < m; ++i) {
        terms.push_back(d(v.at({i}), i));
        for (int k = 0; k < m; ++k) {
            const Expr& gm = conn(i, i, k);
            if (!gm.is_zero() && !v.at({k}).is_zero()) terms.push_back(gm * v.at({k}));
        }
    }
    return sum(std::move(terms));
}

/// R(X, Y)Z for vector fields, as a vector field.
inline TensorField curvature_apply(const CurvatureBundle& b, const TensorField& x, const TensorField& y, const TensorField& z) {
    const int m = x.dim();
    TensorField r(m, {Contra});
    for (int l = 0; l < m; ++l) {
        std::vector<Expr> terms;
        for_each_index(m, 3, [&](const std::vector<int>& ix) {
            const Expr& c = b.riemann_up.at({l, ix[0], ix[1], ix[2]});
            if (c.is_zero()) return;
            terms.push_back(c * x.at({ix[0]}) * y.at({ix[1]}) * z.at({ix[2]}));
        });
        r.at({l}) = sum(std::move(terms));
    }
    return r;
}

/// D(X,Y,Z) = Ric(R(xi,X)Y, Z) + Ric(Y, R(xi,X)Z); vanishes iff R(xi, .) . Ric = 0.
inline TensorField curvature_action_on_ric(const CurvatureBundle& b, const TensorField& xi) {
    const int m = xi.dim();
    // A^l_{xy} = xi^i R^l_{ixy}
    TensorField a(m, {Contra, Co, Co});
    for_each_index(m, 3, [&](const std::vector<int>& ix) {
        std::vector<Expr> terms;
        for (int i = 0; i < m; ++i) {
            const Expr& c = b.riemann_up.at({ix[0], i, ix[1], ix[2]});
            if (!c.is_zero() && !xi.at({i}).is_zero()) terms.push_back(xi.at({i}) * c);
        }
        a.at(ix) = sum(std::move(terms));
    });
    TensorField r(m, {Co, Co, Co});
    for_each_index(m, 3, [&](const std::vector<int>& ix) {
        const int x = ix[0], y = ix[1], z = ix[2];
        std::vector<Expr> terms;
        for (int l = 0; l < m; ++l) {
            terms.push_back(a.at({l, x, y}) * b.ricci.at({l, z}));
            terms.push_back(b.ricci.at({y, l}) * a.at({l, x, z}));
        }
        r.at(ix) = sum(std::move(terms));
    });
    return r;
}

}  // namespace solitonkit
