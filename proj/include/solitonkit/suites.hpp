#pragma once

// Command-level check suites and the report document they produce.

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "solitonkit/contact.hpp"
#include "solitonkit/invariants.hpp"
#include "solitonkit/soliton.hpp"
#include "solitonkit/spec_file.hpp"

#ifndef SOLITONKIT_VERSION
#define SOLITONKIT_VERSION "0.1.0"
#endif

namespace solitonkit {

inline constexpr const char* kExpectedGroup = "expected values";
inline constexpr const char* kReportSchema = "solitonkit-report/1";

struct RunOptions {
    double tol = 1e-9;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;  ///< random points
    std::string grid;            ///< "name=lo:hi:count,..."
    bool frame = false;          ///< frame-projected tables
    std::vector<std::string> candidates;  ///< empty = all
    bool solve_lambda = false;
    int invariant_points = 20;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct ReportDocument {
    std::string command;
    std::string manifold;
    std::string tool_version = SOLITONKIT_VERSION;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    std::string sample_plan;
    std::size_t sample_count = 0;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<CheckReport> checks;
    std::vector<Table> tables;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.meets_expectation()) return false;
        return true;
    }

    void add(std::vector<CheckReport> rs) {
        for (auto& r : rs) checks.push_back(std::move(r));
    }
    void add(CheckReport r) { checks.push_back(std::move(r)); }
    void fact(std::string k, std::string v) { facts.emplace_back(std::move(k), std::move(v)); }
};

/// The manifold's plan with command-line overrides applied.
inline SamplePlan effective_plan(const Manifold& mf, const RunOptions& o) {
    SamplePlan p = mf.default_plan();
    if (o.seed) p.seed = *o.seed;
    if (o.samples) {
        if (*o.samples < 0) throw Error("--samples must be non-negative");
        p.random_count = *o.samples;
    }
    if (!o.grid.empty()) apply_grid_spec(p, mf.chart(), o.grid);
    return p;
}

inline ReportDocument new_document(const std::string& command, const Manifold& mf, const SamplePlan& plan,
                                   const Checker& chk, const RunOptions& o) {
    ReportDocument d;
    d.command = command;
    d.manifold = mf.name();
    d.seed = plan.seed;
    d.tolerance = o.tol;
    d.sample_plan = plan.describe();
    d.sample_count = chk.points().size();
    return d;
}

// ---------------------------------------------------------------------------
// Expected frame values

namespace detail {

inline TensorField frame_combination(const std::vector<TensorField>& frame, const std::vector<Expr>& coeffs) {
    const int m = frame.front().dim();
    TensorField r(m, {Contra});
    for (int i = 0; i < m; ++i) {
        std::vector<Expr> t;
        for (std::size_t a = 0; a < frame.size(); ++a) t.push_back(coeffs[a] * frame[a].at({i}));
        r.at({i}) = sum(std::move(t));
    }
    return r;
}

inline Expr bilinear_on(const TensorField& b, const TensorField& x, const TensorField& y) {
    std::vector<Expr> t;
    const int m = b.dim();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t.push_back(b.at({i, j}) * x.at({i}) * y.at({j}));
    return sum(std::move(t));
}

/// nabla_X Y as a vector field.
inline TensorField nabla_along(const TensorField& x, const TensorField& y, const Connection& conn) {
    const TensorField ny = covariant_derivative(y, conn);  // slots (i, k)
    const int m = x.dim();
    TensorField r(m, {Contra});
    for (int k = 0; k < m; ++k) {
        std::vector<Expr> t;
        for (int i = 0; i < m; ++i) t.push_back(x.at({i}) * ny.at({i, k}));
        r.at({k}) = sum(std::move(t));
    }
    return r;
}

}  // namespace detail

/// One report per expected entry whose quantity passes `keep`.
template <class Keep>
std::vector<CheckReport> expected_value_checks(const Manifold& mf, const Checker& chk, Keep keep) {
    std::vector<CheckReport> out;
    const auto& spec = mf.spec();
    for (const ExpectedSpec& e : spec.expected) {
        if (!keep(e)) continue;
        std::vector<Expr> vals;
        for (const auto& t : e.value) vals.push_back(mf.parse(t));
        const std::string name = e.claim.empty() ? e.id : e.claim;
        std::string stmt = e.quantity;
        if (!e.args.empty()) {
            stmt += "(";
            for (std::size_t i = 0; i < e.args.size(); ++i) stmt += (i ? ",E" : "E") + std::to_string(e.args[i]);
            stmt += ")";
        }
        stmt += " = ";
        for (std::size_t i = 0; i < e.value.size(); ++i) stmt += (i ? ", " : "") + e.value[i];
        CheckReport r;
        if (e.quantity == "scalar_curvature") {
            r = chk.equal(name, kExpectedGroup, stmt, mf.curvature().scalar, vals[0]);
        } else {
            const auto& f = *mf.frame();
            auto E = [&](int k) -> const TensorField& { return f[static_cast<std::size_t>(e.args[static_cast<std::size_t>(k)] - 1)]; };
            if (e.quantity == "connection") {
                r = chk.equal(name, kExpectedGroup, stmt, detail::nabla_along(E(0), E(1), mf.connection()),
                              detail::frame_combination(f, vals));
            } else if (e.quantity == "curvature") {
                r = chk.equal(name, kExpectedGroup, stmt, curvature_apply(mf.curvature(), E(0), E(1), E(2)),
                              detail::frame_combination(f, vals));
            } else if (e.quantity == "ricci") {
                r = chk.equal(name, kExpectedGroup, stmt, detail::bilinear_on(mf.curvature().ricci, E(0), E(1)), vals[0]);
            } else {
                const TensorField lg = lie_derivative(mf.candidate(e.candidate).v, mf.metric().tensor());
                r = chk.equal(name, kExpectedGroup, stmt, detail::bilinear_on(lg, E(0), E(1)), vals[0]);
            }
        }
        r.note = e.id + " (" + e.source + ")";
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tables at one point

namespace detail {

inline std::string index_text(const std::vector<int>& ix) {
    std::string s;
    for (std::size_t i = 0; i < ix.size(); ++i) s += (i ? "," : "") + std::to_string(ix[i] + 1);
    return s;
}

inline void tabulate(Table& t, const PointTensor& p, double cutoff = 1e-12) {
    for_each_index(p.dim, p.rank(), [&](const std::vector<int>& ix) {
        const double v = p.at(std::span<const int>(ix));
        if (std::abs(v) > cutoff) t.rows.push_back({index_text(ix), format_number(v)});
    });
    if (t.rows.empty()) t.rows.push_back({"all", "0"});
}

}  // namespace detail

/// Nonzero components of Gamma, R, Ric, scal and W at the first sample point.
inline std::vector<Table> curvature_tables(const Manifold& mf, const Checker& chk, bool frame) {
    if (chk.points().empty()) return {};
    const Checker one = chk.with_points({chk.points().front()});
    std::vector<Table> out;
    const int m = mf.dim();
    const CurvatureBundle& b = mf.curvature();
    const std::string basis = frame ? "frame" : "coordinate";
    one.for_each_point([&](PointContext& c) {
        auto shown = [&](const TensorField& t) { return frame ? c.project(c.eval(t)) : c.eval(t); };
        Table gamma;
        if (frame && mf.frame()) {
            // nabla_{E_a} E_b = omega_ab^c E_c, listed as (a, b, c)
            gamma.name = "connection coefficients (frame): nabla_{E_a} E_b = w^c E_c";
            gamma.columns = {"a,b,c", "value"};
            const auto& f = *mf.frame();
            PointTensor w{m, {Co, Co, Contra}, std::vector<double>(static_cast<std::size_t>(m * m * m))};
            for (int a = 0; a < m; ++a)
                for (int bb = 0; bb < m; ++bb) {
                    const PointTensor v = c.project(c.eval(detail::nabla_along(f[static_cast<std::size_t>(a)],
                                                                               f[static_cast<std::size_t>(bb)],
                                                                               mf.connection())));
                    for (int k = 0; k < m; ++k) w.values[static_cast<std::size_t>((a * m + bb) * m + k)] = v.values[static_cast<std::size_t>(k)];
                }
            detail::tabulate(gamma, w);
        } else {
            gamma.name = "Christoffel symbols (coordinate): Gamma^k_ij, listed as (k, i, j)";
            gamma.columns = {"k,i,j", "value"};
            TensorField g3(m, {Contra, Co, Co});
            for_each_index(m, 3, [&](const std::vector<int>& ix) { g3.at(ix) = mf.connection()(ix[0], ix[1], ix[2]); });
            detail::tabulate(gamma, c.eval(g3));
            if (frame) gamma.name += "; no declared frame, so connection coefficients are not frame-projected";
        }
        out.push_back(std::move(gamma));

        Table r{"Riemann tensor (" + basis + "): R_ijkl = g(R(e_i,e_j)e_k, e_l)", {"i,j,k,l", "value"}, {}};
        detail::tabulate(r, shown(b.riemann));
        out.push_back(std::move(r));
        Table ric{"Ricci tensor (" + basis + ")", {"i,j", "value"}, {}};
        detail::tabulate(ric, shown(b.ricci));
        out.push_back(std::move(ric));
        Table scal{"scalar curvature", {"", "value"}, {{"", format_number(c.scalar(b.scalar))}}};
        out.push_back(std::move(scal));
        Table w{"Weyl tensor (" + basis + ")", {"i,j,k,l", "value"}, {}};
        if (m >= 3) detail::tabulate(w, shown(b.weyl));
        out.push_back(std::move(w));

        Table where{"sample point", {"coordinate", "value"}, {}};
        for (int i = 0; i < m; ++i)
            where.rows.push_back({mf.spec().coordinates[static_cast<std::size_t>(i)], format_number(c.point[static_cast<std::size_t>(i)])});
        out.insert(out.begin(), std::move(where));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Commands

namespace detail {

inline std::string range_text(double lo, double hi) {
    return lo == hi ? format_number(lo) : "[" + format_number(lo) + ", " + format_number(hi) + "]";
}

inline void structure_suite(ReportDocument& d, const Manifold& mf, const Checker& chk, AlphaBetaProfile& profile) {
    const AlmostContactStructure& s = mf.structure();
    d.add(validate_structure(s, chk));
    profile = fit_alpha_beta(s, mf.connection(), chk);
    d.add(profile.fit);
    if (profile.declared_match) d.add(*profile.declared_match);
    d.add(f_operator_checks(s, profile, mf.connection(), chk));
    d.add(ricci_xi_xi_check(s, profile, mf.curvature(), chk));
    d.fact("classification", profile.classification);
    const auto& v = profile.fit.values;
    if (v.count("alpha_min")) {
        d.fact("alpha", range_text(v.at("alpha_min"), v.at("alpha_max")));
        d.fact("beta", range_text(v.at("beta_min"), v.at("beta_max")));
    }
}

inline InvariantTolerances invariant_tolerances(double tol) { return {tol, 10.0 * tol, tol}; }

}  // namespace detail

inline ReportDocument cmd_validate(const Manifold& mf, const RunOptions& o) {
    const SamplePlan plan = effective_plan(mf, o);
    const Checker chk = mf.checker(plan, o.tol);
    ReportDocument d = new_document("validate", mf, plan, chk, o);
    d.add(metric_checks(mf.metric(), chk, o.tol));
    if (mf.has_structure()) {
        AlphaBetaProfile profile;
        detail::structure_suite(d, mf, chk, profile);
    } else {
        d.add(not_applicable("almost contact structure", kStructureGroup, "", "the spec declares no structure"));
    }
    return d;
}

inline ReportDocument cmd_curvature(const Manifold& mf, const RunOptions& o) {
    const SamplePlan plan = effective_plan(mf, o);
    const Checker chk = mf.checker(plan, o.tol);
    ReportDocument d = new_document("curvature", mf, plan, chk, o);
    d.add(metric_checks(mf.metric(), chk, o.tol));
    // The invariant suite differentiates R once more; a smaller seeded subset keeps it fast.
    const Checker inv = mf.checker(plan.random_only(o.invariant_points), o.tol);
    d.add(curvature_invariants(mf.connection(), mf.curvature(), inv, detail::invariant_tolerances(o.tol)));
    d.add(expected_value_checks(mf, chk, [](const ExpectedSpec& e) { return e.quantity != "lie_derivative"; }));
    d.tables = curvature_tables(mf, chk, o.frame);
    d.fact("invariant sample", std::to_string(inv.points().size()) + " random points");
    return d;
}

namespace detail {

inline std::vector<const SolitonCandidate*> select_candidates(const Manifold& mf, const RunOptions& o) {
    std::vector<const SolitonCandidate*> out;
    if (o.candidates.empty()) {
        for (const auto& c : mf.candidates()) out.push_back(&c);
    } else {
        for (const auto& n : o.candidates) out.push_back(&mf.candidate(n));
    }
    return out;
}

inline void tag(std::vector<CheckReport>& rs, const std::string& who) {
    for (auto& r : rs)
        if (r.note.find(who) == std::string::npos) r.note = who + (r.note.empty() ? "" : ": " + r.note);
}

inline void soliton_suite(ReportDocument& d, const Manifold& mf, const Checker& chk, const AlphaBetaProfile* profile,
                          const RunOptions& o) {
    const SolitonGeometry geo = mf.geometry(profile);
    const auto selected = select_candidates(mf, o);
    std::vector<SolitonCandidate> cands;
    std::vector<CheckReport> residuals;
    const SolitonCandidate* first_collinear = nullptr;
    for (const SolitonCandidate* c : selected) {
        CheckReport r = soliton_residual(*c, geo, chk);
        r.expect_fail = !c->expect_pass;
        d.add(r);
        if (o.solve_lambda) {
            LambdaFit fit = solve_lambda_pointwise(c->kind, c->v, geo, chk);
            CheckReport& ir = fit.irreducible;
            ir.note = c->name;
            if (!c->expect_pass) {
                ir.informational = true;
                ir.note += ir.passed() ? ": some lambda works for this V; the candidate's lambda is wrong"
                                       : std::string(": no lambda makes this V an almost ") + to_string(c->kind) +
                                             " soliton";
            }
            const auto st = detail::sample_stats(fit.lambda);
            ir.values["lambda_min"] = st.min;
            ir.values["lambda_max"] = st.max;
            d.add(std::move(ir));
        }
        std::vector<CheckReport> more = expected_value_checks(
            mf, chk, [&](const ExpectedSpec& e) { return e.quantity == "lie_derivative" && e.candidate == c->name; });
        if (c->collinear && mf.has_structure()) {
            auto lemma = collinear_lemma_checks(*c, geo, chk);
            more.insert(more.end(), lemma.begin(), lemma.end());
        }
        if (c->kind != SolitonKind::Yamabe) {
            auto ci = contracted_identity_checks(*c, geo, chk, r);
            more.insert(more.end(), ci.begin(), ci.end());
        }
        if (c->kind == SolitonKind::Riemann) {
            auto cc = contraction_coherence(c->v, c->lambda, geo, chk);
            more.insert(more.end(), cc.begin(), cc.end());
            TransferResult t = transfer_riemann_to_ricci(*c, geo, chk, r);
            more.insert(more.end(), t.reports.begin(), t.reports.end());
            if (t.derived) {
                // a declared Ricci candidate with the transferred field must carry the transferred lambda
                for (const auto& other : mf.candidates()) {
                    if (other.kind != SolitonKind::Ricci || !other.expect_pass) continue;
                    if (!detail::same_field(chk, other.v, t.derived->v)) continue;
                    CheckReport m = chk.equal("transfer matches " + other.name, kTransferGroup,
                                              "lambda' from the transfer = lambda of " + other.name, t.derived->lambda,
                                              other.lambda);
                    more.push_back(std::move(m));
                }
            }
        }
        if (mf.has_structure()) {
            auto xs = xi_soliton_checks(*c, geo, chk, r);
            if (!(xs.size() == 1 && xs[0].verdict == Verdict::NotApplicable && xs[0].note == "V is not xi")) {
                more.insert(more.end(), xs.begin(), xs.end());
            }
            if (c->collinear) {
                auto ci = commutation_iff_checks(*c, geo, chk, r);
                more.insert(more.end(), ci.begin(), ci.end());
            }
        }
        tag(more, c->name);
        d.add(std::move(more));
        if (c->collinear && c->expect_pass && !first_collinear) first_collinear = c;
        cands.push_back(*c);
        residuals.push_back(std::move(r));
    }
    if (mf.has_structure()) {
        QuasiEinsteinFit q = quasi_einstein_decompose(geo, chk);
        q.residual.informational = true;
        d.fact("Einstein", q.einstein ? "yes" : "no");
        d.add(std::move(q.residual));
        d.add(symmetry_condition_residuals(geo, chk, first_collinear));
    }
    d.add(multi_soliton_consistency(cands, residuals, geo, chk));
}

}  // namespace detail

inline ReportDocument cmd_check_soliton(const Manifold& mf, const RunOptions& o) {
    const SamplePlan plan = effective_plan(mf, o);
    const Checker chk = mf.checker(plan, o.tol);
    ReportDocument d = new_document("check-soliton", mf, plan, chk, o);
    if (mf.candidates().empty()) throw Error("manifold '" + mf.name() + "' declares no soliton candidates");
    std::optional<AlphaBetaProfile> profile;
    if (mf.has_structure()) {
        profile = fit_alpha_beta(mf.structure(), mf.connection(), chk);
        d.add(profile->fit);
        if (profile->declared_match) d.add(*profile->declared_match);
        d.fact("classification", profile->classification);
    }
    detail::soliton_suite(d, mf, chk, profile ? &*profile : nullptr, o);
    return d;
}

/// Everything at once: structure, curvature identities, expected values and the soliton chain.
inline ReportDocument cmd_verify(const Manifold& mf, const RunOptions& o) {
    const SamplePlan plan = effective_plan(mf, o);
    const Checker chk = mf.checker(plan, o.tol);
    ReportDocument d = new_document("verify-paper", mf, plan, chk, o);
    d.add(metric_checks(mf.metric(), chk, o.tol));
    AlphaBetaProfile profile;
    if (mf.has_structure()) detail::structure_suite(d, mf, chk, profile);
    const Checker inv = mf.checker(plan.random_only(o.invariant_points), o.tol);
    d.add(curvature_invariants(mf.connection(), mf.curvature(), inv, detail::invariant_tolerances(o.tol)));
    d.add(expected_value_checks(mf, chk, [](const ExpectedSpec& e) { return e.quantity != "lie_derivative"; }));
    RunOptions so = o;
    so.candidates.clear();
    so.solve_lambda = true;
    detail::soliton_suite(d, mf, chk, mf.has_structure() ? &profile : nullptr, so);
    return d;
}

// ---------------------------------------------------------------------------
// Serialization

inline Json report_to_json(const CheckReport& r) {
    Json j;
    j["name"] = r.name;
    j["group"] = r.group;
    j["statement"] = r.statement;
    j["verdict"] = to_string(r.verdict);
    j["expected"] = r.informational ? "informational" : r.expect_fail ? "fail" : "pass";
    j["ok"] = r.meets_expectation();
    j["tolerance"] = r.tolerance;
    j["max_residual"] = r.max_residual;
    j["max_normalized"] = r.max_normalized;
    j["mean_residual"] = r.mean_residual;
    j["evaluated"] = r.evaluated;
    j["failed"] = r.failed;
    j["skipped_points"] = r.points.size() - r.evaluated;
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.values.empty()) {
        Json v = Json::object();
        for (const auto& [k, x] : r.values) v[k] = x;
        j["values"] = std::move(v);
    }
    if (const PointRecord* w = r.worst()) {
        Json wj;
        wj["point"] = w->point;
        std::vector<int> one_based = w->worst_index;
        for (int& i : one_based) ++i;
        wj["frame_index"] = one_based;
        wj["residual"] = w->residual;
        wj["scale"] = w->scale;
        j["worst"] = std::move(wj);
    }
    for (const auto& p : r.points)
        if (!p.evaluated) {
            j["first_skipped_point"] = Json{{"point", p.point}, {"diagnostic", p.diagnostic}};
            break;
        }
    return j;
}

inline Json document_to_json(const ReportDocument& d) {
    Json j;
    j["schema"] = kReportSchema;
    j["tool"] = Json{{"name", "solitonkit"}, {"version", d.tool_version}};
    j["command"] = d.command;
    j["manifold"] = d.manifold;
    j["seed"] = d.seed;
    j["tolerance"] = d.tolerance;
    j["sample_plan"] = Json{{"description", d.sample_plan}, {"points", d.sample_count}};
    Json facts = Json::object();
    for (const auto& [k, v] : d.facts) facts[k] = v;
    j["facts"] = std::move(facts);
    j["checks"] = Json::array();
    for (const auto& r : d.checks) j["checks"].push_back(report_to_json(r));
    if (!d.tables.empty()) {
        j["tables"] = Json::array();
        for (const auto& t : d.tables) j["tables"].push_back(Json{{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
    }
    j["verdict"] = d.passed() ? "pass" : "fail";
    return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string join_numbers(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_number(v[i]);
    return s;
}

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + 1);
    return s;
}

}  // namespace detail

/// One row per check; tables are not included.
inline std::string document_to_csv(const ReportDocument& d) {
    using detail::csv_field;
    std::ostringstream os;
    os << "group,name,verdict,expected,ok,tolerance,max_residual,max_normalized,evaluated,failed,worst_point,worst_frame_index,note\n";
    for (const auto& r : d.checks) {
        const PointRecord* w = r.worst();
        os << csv_field(r.group) << ',' << csv_field(r.name) << ',' << to_string(r.verdict) << ','
           << (r.informational ? "informational" : r.expect_fail ? "fail" : "pass") << ','
           << (r.meets_expectation() ? "true" : "false") << ',' << format_number(r.tolerance) << ','
           << format_number(r.max_residual) << ',' << format_number(r.max_normalized) << ',' << r.evaluated << ','
           << r.failed << ',' << (w ? detail::join_numbers(w->point) : "") << ','
           << (w ? detail::join_ints(w->worst_index) : "") << ',' << csv_field(r.note) << '\n';
    }
    return os.str();
}

/// Human-readable line per check.
inline std::string document_to_table(const ReportDocument& d) {
    std::ostringstream os;
    os << "solitonkit " << d.tool_version << "  " << d.command << "  " << d.manifold << "\n";
    os << "tolerance " << format_number(d.tolerance) << ", " << d.sample_count << " points: " << d.sample_plan << "\n";
    for (const auto& [k, v] : d.facts) os << k << ": " << v << "\n";
    os << "\n";
    std::size_t gw = 5, nw = 5;
    for (const auto& r : d.checks) {
        gw = std::max(gw, r.group.size());
        nw = std::max(nw, r.name.size());
    }
    os << std::left << std::setw(22) << "VERDICT" << std::setw(static_cast<int>(gw) + 2) << "GROUP"
       << std::setw(static_cast<int>(nw) + 2) << "CHECK" << std::setw(24) << "MAX RESIDUAL" << "NOTE\n";
    std::size_t counts[5] = {0, 0, 0, 0, 0};
    for (const auto& r : d.checks) {
        std::string v = to_string(r.verdict);
        if (r.informational) {
            v += " (info)";
            ++counts[4];
        } else {
            ++counts[static_cast<int>(r.verdict)];
            if (r.expect_fail) v += " (expected fail)";
            if (!r.meets_expectation()) v = "!! " + v;
        }
        const std::string res = r.evaluated ? format_number(r.max_residual) : "-";
        os << std::left << std::setw(22) << v << std::setw(static_cast<int>(gw) + 2) << r.group
           << std::setw(static_cast<int>(nw) + 2) << r.name << std::setw(24) << res << r.note << "\n";
    }
    for (const auto& t : d.tables) {
        os << "\n" << t.name << "\n";
        for (const auto& row : t.rows) {
            os << "  ";
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "  " : "") << std::left << std::setw(i + 1 < row.size() ? 10 : 0) << row[i];
            os << "\n";
        }
    }
    os << "\n"
       << "overall: " << (d.passed() ? "pass" : "fail") << " (" << d.checks.size() << " checks: " << counts[0]
       << " pass, " << counts[1] << " fail, " << counts[2] << " skipped, " << counts[3] << " not applicable, "
       << counts[4] << " informational)\n";
    return os.str();
}

inline std::string render(const ReportDocument& d, const std::string& format) {
    if (format == "json") return pretty_json(document_to_json(d)) + "\n";
    if (format == "csv") return document_to_csv(d);
    if (format == "table") return document_to_table(d);
    throw Error("unknown format '" + format + "' (expected json, csv or table)");
}

}  // namespace solitonkit
