#pragma once

// Built-in manifolds. Every entry validates its own structure and (alpha, beta)
// on construction and refuses to exist otherwise.

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "solitonkit/contact.hpp"
#include "solitonkit/spec_file.hpp"

namespace solitonkit {

struct ZooEntry {
    std::shared_ptr<const Manifold> manifold;
    AlphaBetaProfile profile;                 ///< fitted on the default plan
    std::vector<CheckReport> self_validation; ///< structure axioms, fit, declared match

    const ManifoldSpec& spec() const { return manifold->spec(); }
    const std::string& name() const { return manifold->name(); }
};

namespace zoo_detail {

inline std::string num(double v) { return format_number(v); }

/// c * text with unit coefficients elided.
inline std::string times(double c, const std::string& text) {
    if (c == 1.0) return text;
    if (c == -1.0) return "-" + text;
    return num(c) + "*" + text;
}

inline std::vector<std::string> coordinate_names(int m) {
    if (m == 3) return {"x", "y", "z"};
    std::vector<std::string> c;
    for (int i = 1; i < m; ++i) c.push_back("x" + std::to_string(i));
    c.push_back("z");
    return c;
}

inline std::vector<std::vector<std::string>> zeros(int m) {
    return std::vector<std::vector<std::string>>(static_cast<std::size_t>(m), std::vector<std::string>(static_cast<std::size_t>(m), "0"));
}

/// phi(d_{2k}) = d_{2k+1}, phi(d_{2k+1}) = -d_{2k}, phi(d_z) = 0.
inline std::vector<std::vector<std::string>> standard_phi(int m) {
    auto phi = zeros(m);
    for (int k = 0; k + 1 < m; k += 2) {
        phi[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(k)] = "1";
        phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(k + 1)] = "-1";
    }
    return phi;
}

inline std::vector<std::string> last_unit(int m) {
    std::vector<std::string> v(static_cast<std::size_t>(m), "0");
    v.back() = "1";
    return v;
}

inline std::vector<std::string> along_last(int m, const std::string& f) {
    std::vector<std::string> v(static_cast<std::size_t>(m), "0");
    v.back() = f;
    return v;
}

inline CandidateSpec candidate(std::string name, std::string kind, std::vector<std::string> v, std::string lambda,
                               bool collinear, bool expect_pass = true, std::string note = {}) {
    return {std::move(name), std::move(kind), std::move(v), std::move(lambda), collinear, expect_pass, std::move(note)};
}

inline ExpectedSpec expected(std::string id, std::string quantity, std::vector<int> args, std::vector<std::string> value,
                             std::string source, std::string claim, std::string cand = {}) {
    return {std::move(id), std::move(quantity), std::move(args), std::move(cand), std::move(value), std::move(source),
            std::move(claim)};
}

/// Frame vector `a` (0-based) of e^{-a0 z} d_{x_i}, d_z, as text.
inline std::vector<std::vector<std::string>> warped_frame(int m, const std::string& inv_scale) {
    std::vector<std::vector<std::string>> f;
    for (int a = 0; a < m; ++a) {
        std::vector<std::string> e(static_cast<std::size_t>(m), "0");
        e[static_cast<std::size_t>(a)] = a + 1 < m ? inv_scale : "1";
        f.push_back(std::move(e));
    }
    return f;
}

inline std::vector<std::vector<std::string>> unit_frame(int m) {
    std::vector<std::vector<std::string>> f;
    for (int a = 0; a < m; ++a) {
        std::vector<std::string> e(static_cast<std::size_t>(m), "0");
        e[static_cast<std::size_t>(a)] = "1";
        f.push_back(std::move(e));
    }
    return f;
}

inline SamplePlanSpec box_plan(const std::vector<std::string>& coords, double zlo, double zhi, int count, int random) {
    SamplePlanSpec p;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const bool last = i + 1 == coords.size();
        p.grid.push_back({coords[i], last ? zlo : -1.0, last ? zhi : 1.0, count});
    }
    p.random = random;
    p.seed = 42;
    return p;
}

inline ZooEntry admit(ManifoldSpec spec, double tol = 1e-9) {
    ZooEntry e;
    e.manifold = std::make_shared<const Manifold>(std::move(spec));
    const Manifold& mf = *e.manifold;
    const Checker chk = mf.checker(tol);
    e.self_validation = validate_structure(mf.structure(), chk);
    e.profile = fit_alpha_beta(mf.structure(), mf.connection(), chk);
    e.self_validation.push_back(e.profile.fit);
    if (e.profile.declared_match) e.self_validation.push_back(*e.profile.declared_match);
    std::string bad;
    for (const auto& r : e.self_validation)
        if (!r.passed()) bad += "\n  " + r.name + ": " + to_string(r.verdict) + ", max residual " + format_number(r.max_residual);
    if (!bad.empty()) throw Error("zoo entry '" + mf.name() + "' failed self-validation:" + bad);
    return e;
}

}  // namespace zoo_detail

/// The three-dimensional Kenmotsu example on z > 1 with its published frame values.
inline ManifoldSpec paper_kenmotsu_spec() {
    using namespace zoo_detail;
    ManifoldSpec s;
    s.name = "paper-kenmotsu";
    s.description = "Kenmotsu structure on {z > 1} with g = e^{2z}(dx^2 + dy^2) + dz^2 and V = e^z d_z";
    s.coordinates = {"x", "y", "z"};
    s.domain = {"z > 1"};
    s.metric = {{"exp(2*z)", "0", "0"}, {"0", "exp(2*z)", "0"}, {"0", "0", "1"}};
    s.frame = {{"exp(-z)", "0", "0"}, {"0", "exp(-z)", "0"}, {"0", "0", "1"}};
    s.structure = StructureSpec{standard_phi(3), last_unit(3), last_unit(3), "1", "0"};
    const auto v = along_last(3, "exp(z)");
    s.candidates = {
        candidate("example-riemann", "riemann", v, "2*exp(z) - 1", true),
        candidate("example-ricci", "ricci", v, "exp(z) - 2", true),
        candidate("example-yamabe", "yamabe", v, "2*exp(z) - 6", true, true, "lambda = div V + scal"),
        candidate("example-riemann-shifted", "riemann", v, "2*exp(z)", true, false, "lambda raised by 1"),
        candidate("xi-riemann", "riemann", last_unit(3), "1/3", true, false, "best pointwise lambda"),
        candidate("xi-ricci", "ricci", last_unit(3), "-4/3", true, false, "best pointwise lambda"),
        candidate("xi-yamabe", "yamabe", last_unit(3), "-14/3", true, false, "best pointwise lambda"),
    };
    s.sample_plan = box_plan(s.coordinates, 1.1, 2.0, 5, 25);

    const std::vector<std::string> e1{"1", "0", "0"}, e2{"0", "1", "0"}, e3{"0", "0", "1"};
    const std::vector<std::string> m1{"-1", "0", "0"}, m2{"0", "-1", "0"}, m3{"0", "0", "-1"};
    const char* pub = "published";
    s.expected = {
        expected("nabla-E1-E1", "connection", {1, 1}, m3, pub, "nabla_{E1} E1 = -E3"),
        expected("nabla-E2-E2", "connection", {2, 2}, m3, pub, "nabla_{E2} E2 = -E3"),
        expected("nabla-E1-E3", "connection", {1, 3}, e1, pub, "nabla_{E1} E3 = E1"),
        expected("nabla-E2-E3", "connection", {2, 3}, e2, pub, "nabla_{E2} E3 = E2"),
        expected("R-E1-E2-E2", "curvature", {1, 2, 2}, m1, pub, "R(E1,E2)E2 = -E1"),
        expected("R-E1-E3-E3", "curvature", {1, 3, 3}, m1, pub, "R(E1,E3)E3 = -E1"),
        expected("R-E2-E1-E1", "curvature", {2, 1, 1}, m2, pub, "R(E2,E1)E1 = -E2"),
        expected("R-E2-E3-E3", "curvature", {2, 3, 3}, m2, pub, "R(E2,E3)E3 = -E2"),
        expected("R-E3-E1-E1", "curvature", {3, 1, 1}, m3, pub, "R(E3,E1)E1 = -E3"),
        expected("R-E3-E2-E2", "curvature", {3, 2, 2}, m3, pub, "R(E3,E2)E2 = -E3"),
        expected("Ric-E1-E1", "ricci", {1, 1}, {"-2"}, pub, "Ric(E1,E1) = -2"),
        expected("Ric-E2-E2", "ricci", {2, 2}, {"-2"}, pub, "Ric(E2,E2) = -2"),
        expected("Ric-E3-E3", "ricci", {3, 3}, {"-2"}, pub, "Ric(E3,E3) = -2"),
        expected("LVg-E1-E1", "lie_derivative", {1, 1}, {"2*exp(z)"}, pub, "(L_V g)(E1,E1) = 2e^z", "example-riemann"),
        expected("LVg-E2-E2", "lie_derivative", {2, 2}, {"2*exp(z)"}, pub, "(L_V g)(E2,E2) = 2e^z", "example-riemann"),
        expected("LVg-E3-E3", "lie_derivative", {3, 3}, {"2*exp(z)"}, pub, "(L_V g)(E3,E3) = 2e^z", "example-riemann"),
        expected("scal", "scalar_curvature", {}, {"-6"}, "derived", "scal = -6 (trace of the Ricci diagonal)"),
    };
    return s;
}

inline ZooEntry paper_kenmotsu() { return zoo_detail::admit(paper_kenmotsu_spec()); }

/// Identity metric on R^m with xi the last coordinate direction; alpha = beta = 0.
inline ManifoldSpec flat_cosymplectic_spec(int m) {
    using namespace zoo_detail;
    if (m < 3 || m % 2 == 0) throw ShapeError("flat-cosymplectic needs odd dimension m >= 3, got " + std::to_string(m));
    ManifoldSpec s;
    s.name = "flat-cosymplectic-" + std::to_string(m);
    s.description = "flat R^" + std::to_string(m) + " with its standard cosymplectic structure";
    s.coordinates = coordinate_names(m);
    s.metric = zeros(m);
    for (int i = 0; i < m; ++i) s.metric[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = "1";
    s.frame = unit_frame(m);
    s.structure = StructureSpec{standard_phi(m), last_unit(m), last_unit(m), "0", "0"};
    std::vector<std::string> radial = s.coordinates;
    s.candidates = {
        candidate("xi-riemann", "riemann", last_unit(m), "0", true),
        candidate("xi-ricci", "ricci", last_unit(m), "0", true),
        candidate("xi-yamabe", "yamabe", last_unit(m), "0", true),
        candidate("radial-ricci", "ricci", radial, "1", false, true, "homothetic field"),
    };
    s.sample_plan = box_plan(s.coordinates, -1.0, 1.0, m == 3 ? 3 : 0, m == 3 ? 25 : 30);
    s.expected = {expected("scal", "scalar_curvature", {}, {"0"}, "elementary", "scal = 0")};
    for (int a = 1; a <= m; ++a)
        s.expected.push_back(expected("Ric-E" + std::to_string(a) + "-E" + std::to_string(a), "ricci", {a, a}, {"0"},
                                      "elementary", "Ric(E" + std::to_string(a) + ",E" + std::to_string(a) + ") = 0"));
    return s;
}

inline ZooEntry flat_cosymplectic(int m = 3) { return zoo_detail::admit(flat_cosymplectic_spec(m)); }

/// g = e^{2 a z} sum dx_i^2 + dz^2: alpha = a, beta = 0, constant curvature -a^2.
inline ManifoldSpec alpha_kenmotsu_spec(double a0, int m = 3) {
    using namespace zoo_detail;
    if (a0 == 0.0 || !std::isfinite(a0)) throw Error("alpha-kenmotsu needs a finite nonzero alpha");
    if (m < 3 || m % 2 == 0) throw ShapeError("alpha-kenmotsu needs odd dimension m >= 3, got " + std::to_string(m));
    const std::string a = num(a0);
    ManifoldSpec s;
    s.name = "alpha-kenmotsu-" + a + (m == 3 ? "" : "-m" + std::to_string(m));
    s.description = "alpha-Kenmotsu warped product with alpha = " + a + " in dimension " + std::to_string(m);
    s.coordinates = coordinate_names(m);
    s.metric = zeros(m);
    for (int i = 0; i + 1 < m; ++i) s.metric[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = "exp(" + times(2 * a0, "z") + ")";
    s.metric.back().back() = "1";
    s.frame = warped_frame(m, "exp(" + times(-a0, "z") + ")");
    s.structure = StructureSpec{standard_phi(m), last_unit(m), last_unit(m), a, "0"};
    const std::string ez = "exp(" + times(a0, "z") + ")";
    const double md = m;
    const auto v = along_last(m, ez);
    s.candidates = {
        candidate("warped-riemann", "riemann", v, times(2 * a0, ez) + " - " + num(a0 * a0), true),
        candidate("warped-ricci", "ricci", v, times(a0, ez) + " - " + num((md - 1) * a0 * a0), true),
        candidate("warped-yamabe", "yamabe", v, times(2 * a0, ez) + " - " + num(md * (md - 1) * a0 * a0), true),
    };
    s.sample_plan = box_plan(s.coordinates, 0.0, 1.0, m == 3 ? 3 : 0, m == 3 ? 25 : 30);
    const std::string last = std::to_string(m);
    s.expected = {
        expected("Ric-xi-xi", "ricci", {m, m}, {num(-(md - 1) * a0 * a0)}, "derived",
                 "Ric(E" + last + ",E" + last + ") = -2n alpha^2"),
        expected("scal", "scalar_curvature", {}, {num(-md * (md - 1) * a0 * a0)}, "derived", "scal = -m(m-1) alpha^2"),
    };
    return s;
}

inline ZooEntry alpha_kenmotsu_family(double a0, int m = 3) { return zoo_detail::admit(alpha_kenmotsu_spec(a0, m)); }

/// Standard contact metric structure on R^3: eta = (dz - y dx)/2, xi = 2 d_z,
/// g = (dx^2 + dy^2)/4 + eta (x) eta. Admitted only when the engine confirms (0, 1).
inline ManifoldSpec sasakian_r3_spec(double phi_sign) {
    using namespace zoo_detail;
    ManifoldSpec s;
    s.name = "sasakian-r3";
    s.description = "standard Sasakian structure on R^3";
    s.coordinates = {"x", "y", "z"};
    s.metric = {{"1/4 + y^2/4", "0", "-y/4"}, {"0", "1/4", "0"}, {"-y/4", "0", "1/4"}};
    const std::string p = phi_sign > 0 ? "" : "-";
    const std::string n = phi_sign > 0 ? "-" : "";
    s.structure = StructureSpec{{{"0", p + "1", "0"}, {n + "1", "0", "0"}, {"0", p + "y", "0"}}, {"0", "0", "2"},
                                {"-y/2", "0", "1/2"}, std::nullopt, std::nullopt};
    s.sample_plan = box_plan(s.coordinates, -1.0, 1.0, 3, 25);
    return s;
}

inline ZooEntry sasakian_r3() {
    using namespace zoo_detail;
    ManifoldSpec spec = sasakian_r3_spec(1.0);
    {
        const Manifold probe(spec);
        const Checker chk = probe.checker(1e-9);
        const AlphaBetaProfile p = fit_alpha_beta(probe.structure(), probe.connection(), chk);
        if (p.fit.passed() && p.beta_mean < 0.0) spec = sasakian_r3_spec(-1.0);
    }
    // xi as a Yamabe potential: L_xi g = 0, so lambda must be the scalar curvature.
    // The value is whatever the engine computes; the candidate then tests its constancy.
    {
        const Manifold probe(spec);
        const double scal = probe.chart().evaluate(probe.curvature().scalar, probe.default_plan().points(probe.chart()).front());
        spec.candidates = {
            candidate("xi-yamabe", "yamabe", {"0", "0", "2"}, format_number(scal), true, true, "lambda = computed scal"),
            candidate("xi-ricci", "ricci", {"0", "0", "2"}, format_number(scal / 3.0), true, false, "not Einstein"),
        };
    }
    ZooEntry e = admit(std::move(spec));
    if (e.profile.classification != "Sasakian")
        throw Error("zoo entry 'sasakian-r3' classified as " + e.profile.classification + ", expected Sasakian");
    return e;
}

inline std::vector<std::string> zoo_names() {
    return {"paper-kenmotsu",  "flat-cosymplectic-3", "flat-cosymplectic-5", "alpha-kenmotsu-2",
            "alpha-kenmotsu-0.5", "alpha-kenmotsu-1-m5", "sasakian-r3"};
}

/// Accepts the listed names plus flat-cosymplectic-<m> and alpha-kenmotsu-<a>[-m<m>].
inline ZooEntry zoo_entry(const std::string& name) {
    if (name == "paper-kenmotsu") return paper_kenmotsu();
    if (name == "sasakian-r3") return sasakian_r3();
    auto unknown = [&] { return Error("unknown zoo entry '" + name + "'; run list-zoo for the available names"); };
    const std::string flat = "flat-cosymplectic-", ak = "alpha-kenmotsu-";
    try {
        if (name.rfind(flat, 0) == 0) {
            std::size_t used = 0;
            const int m = std::stoi(name.substr(flat.size()), &used);
            if (used != name.size() - flat.size()) throw unknown();
            return flat_cosymplectic(m);
        }
        if (name.rfind(ak, 0) == 0) {
            std::string rest = name.substr(ak.size());
            int m = 3;
            if (const auto at = rest.find("-m"); at != std::string::npos && at > 0) {
                std::size_t used = 0;
                m = std::stoi(rest.substr(at + 2), &used);
                if (used != rest.size() - at - 2) throw unknown();
                rest = rest.substr(0, at);
            }
            std::size_t used = 0;
            const double a0 = std::stod(rest, &used);
            if (used != rest.size()) throw unknown();
            return alpha_kenmotsu_family(a0, m);
        }
    } catch (const std::logic_error&) {
        throw unknown();
    }
    throw unknown();
}

}  // namespace solitonkit
