#pragma once

// Manifold spec files: JSON with expression strings.
//
// Loading keeps every expression as text so that save(load(text)) reproduces
// text produced by save. Frame indices in "expected" entries are 1-based.

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "solitonkit/chart.hpp"
#include "solitonkit/contact.hpp"
#include "solitonkit/geometry.hpp"
#include "solitonkit/report.hpp"
#include "solitonkit/soliton.hpp"

namespace solitonkit {

using Json = nlohmann::ordered_json;

struct AxisSpec {
    std::string coordinate;
    double lo = -1.0;
    double hi = 1.0;
    int count = 5;
};

struct SamplePlanSpec {
    std::vector<AxisSpec> grid;
    int random = 25;
    std::uint64_t seed = 42;
};

struct StructureSpec {
    std::vector<std::vector<std::string>> phi;  ///< phi[a][b] = phi^a_b
    std::vector<std::string> xi;
    std::vector<std::string> eta;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
};

struct CandidateSpec {
    std::string name;
    std::string kind;
    std::vector<std::string> v;
    std::string lambda;
    bool collinear = false;
    bool expect_pass = true;
    std::string note;
};

/// A frame-projected value the manifold is claimed to have.
///   connection        args [a, b]     value: frame components of nabla_{E_a} E_b
///   curvature         args [a, b, c]  value: frame components of R(E_a, E_b) E_c
///   ricci             args [a, b]     value: Ric(E_a, E_b)
///   lie_derivative    args [a, b]     value: (L_V g)(E_a, E_b), V from `candidate`
///   scalar_curvature  args []         value: scal
struct ExpectedSpec {
    std::string id;
    std::string quantity;
    std::vector<int> args;
    std::string candidate;
    std::vector<std::string> value;
    std::string source;  ///< where the value comes from: published, derived, elementary
    std::string claim;
};

struct ManifoldSpec {
    std::string name;
    std::string description;
    std::vector<std::string> coordinates;
    std::vector<std::string> domain;
    std::vector<std::vector<std::string>> metric;
    std::optional<std::vector<std::vector<std::string>>> frame;  ///< frame[a] = coordinate components of E_a
    std::optional<StructureSpec> structure;
    std::vector<CandidateSpec> candidates;
    std::optional<SamplePlanSpec> sample_plan;
    std::vector<ExpectedSpec> expected;

    int dim() const { return static_cast<int>(coordinates.size()); }
};

inline constexpr const char* kExpectedQuantities[] = {"connection", "curvature", "ricci", "lie_derivative",
                                                      "scalar_curvature"};

namespace detail {

inline std::string json_path_index(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

inline const Json& require_key(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + ": missing key '" + key + "'");
    return *it;
}

inline std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path + ": expected a string");
    return j.get<std::string>();
}

inline double as_number(const Json& j, const std::string& path) {
    if (!j.is_number()) throw ParseError(path + ": expected a number");
    return j.get<double>();
}

inline long long as_integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
    return j.get<long long>();
}

inline bool as_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean()) throw ParseError(path + ": expected true or false");
    return j.get<bool>();
}

inline std::vector<std::string> as_strings(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], json_path_index(path, i)));
    return out;
}

inline std::vector<std::vector<std::string>> as_matrix(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected an array of arrays");
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_strings(j[i], json_path_index(path, i)));
    return out;
}

inline std::string optional_string(const Json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    return it == j.end() ? std::string() : as_string(*it, path + "." + key);
}

inline void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok |= it.key() == k;
        if (!ok) throw ParseError(path + ": unknown key '" + it.key() + "'");
    }
}

/// 1-based line and column of a byte offset.
inline std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

/// Parses spec JSON. Syntax errors carry line and column; semantic errors name
/// the JSON path of the offending value.
inline ManifoldSpec parse_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is one past the offending character
        const auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", line, col);
    }
    using namespace detail;
    if (!j.is_object()) throw ParseError("$: expected an object");
    check_keys(j, {"name", "description", "coordinates", "domain", "metric", "frame", "structure", "candidates",
                   "sample_plan", "expected"},
               "$");
    ManifoldSpec s;
    s.name = as_string(require_key(j, "name", "$"), "$.name");
    s.description = optional_string(j, "description", "$");
    s.coordinates = as_strings(require_key(j, "coordinates", "$"), "$.coordinates");
    if (auto it = j.find("domain"); it != j.end()) s.domain = as_strings(*it, "$.domain");
    s.metric = as_matrix(require_key(j, "metric", "$"), "$.metric");
    if (auto it = j.find("frame"); it != j.end()) s.frame = as_matrix(*it, "$.frame");
    if (auto it = j.find("structure"); it != j.end()) {
        const Json& st = *it;
        check_keys(st, {"phi", "xi", "eta", "alpha", "beta"}, "$.structure");
        StructureSpec ss;
        ss.phi = as_matrix(require_key(st, "phi", "$.structure"), "$.structure.phi");
        ss.xi = as_strings(require_key(st, "xi", "$.structure"), "$.structure.xi");
        ss.eta = as_strings(require_key(st, "eta", "$.structure"), "$.structure.eta");
        if (auto a = st.find("alpha"); a != st.end()) ss.alpha = as_string(*a, "$.structure.alpha");
        if (auto b = st.find("beta"); b != st.end()) ss.beta = as_string(*b, "$.structure.beta");
        s.structure = std::move(ss);
    }
    if (auto it = j.find("candidates"); it != j.end()) {
        if (!it->is_array()) throw ParseError("$.candidates: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& c = (*it)[i];
            const std::string p = json_path_index("$.candidates", i);
            check_keys(c, {"name", "kind", "V", "lambda", "collinear", "expect", "note"}, p);
            CandidateSpec cs;
            cs.name = as_string(require_key(c, "name", p), p + ".name");
            cs.kind = as_string(require_key(c, "kind", p), p + ".kind");
            cs.v = as_strings(require_key(c, "V", p), p + ".V");
            cs.lambda = as_string(require_key(c, "lambda", p), p + ".lambda");
            if (auto f = c.find("collinear"); f != c.end()) cs.collinear = as_bool(*f, p + ".collinear");
            if (auto f = c.find("expect"); f != c.end()) {
                const std::string e = as_string(*f, p + ".expect");
                if (e != "pass" && e != "fail") throw ParseError(p + ".expect: must be \"pass\" or \"fail\"");
                cs.expect_pass = e == "pass";
            }
            cs.note = optional_string(c, "note", p);
            s.candidates.push_back(std::move(cs));
        }
    }
    if (auto it = j.find("sample_plan"); it != j.end()) {
        const Json& sp = *it;
        check_keys(sp, {"grid", "random", "seed"}, "$.sample_plan");
        SamplePlanSpec plan;
        const Json& grid = require_key(sp, "grid", "$.sample_plan");
        if (!grid.is_array()) throw ParseError("$.sample_plan.grid: expected an array");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const std::string p = json_path_index("$.sample_plan.grid", i);
            check_keys(grid[i], {"coordinate", "lo", "hi", "count"}, p);
            AxisSpec a;
            a.coordinate = as_string(require_key(grid[i], "coordinate", p), p + ".coordinate");
            a.lo = as_number(require_key(grid[i], "lo", p), p + ".lo");
            a.hi = as_number(require_key(grid[i], "hi", p), p + ".hi");
            const long long count = as_integer(require_key(grid[i], "count", p), p + ".count");
            if (count < 0 || count > 1000) throw ParseError(p + ".count: must be in [0, 1000]");
            a.count = static_cast<int>(count);
            plan.grid.push_back(std::move(a));
        }
        if (auto r = sp.find("random"); r != sp.end()) {
            const long long n = as_integer(*r, "$.sample_plan.random");
            if (n < 0) throw ParseError("$.sample_plan.random: must be non-negative");
            plan.random = static_cast<int>(n);
        }
        if (auto r = sp.find("seed"); r != sp.end()) {
            const long long seed = as_integer(*r, "$.sample_plan.seed");
            if (seed < 0) throw ParseError("$.sample_plan.seed: must be non-negative");
            plan.seed = static_cast<std::uint64_t>(seed);
        }
        s.sample_plan = std::move(plan);
    }
    if (auto it = j.find("expected"); it != j.end()) {
        if (!it->is_array()) throw ParseError("$.expected: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& e = (*it)[i];
            const std::string p = json_path_index("$.expected", i);
            check_keys(e, {"id", "quantity", "args", "candidate", "value", "source", "claim"}, p);
            ExpectedSpec es;
            es.id = as_string(require_key(e, "id", p), p + ".id");
            es.quantity = as_string(require_key(e, "quantity", p), p + ".quantity");
            if (auto a = e.find("args"); a != e.end()) {
                if (!a->is_array()) throw ParseError(p + ".args: expected an array of integers");
                for (std::size_t k = 0; k < a->size(); ++k)
                    es.args.push_back(static_cast<int>(as_integer((*a)[k], json_path_index(p + ".args", k))));
            }
            es.candidate = optional_string(e, "candidate", p);
            es.value = as_strings(require_key(e, "value", p), p + ".value");
            es.source = as_string(require_key(e, "source", p), p + ".source");
            es.claim = optional_string(e, "claim", p);
            s.expected.push_back(std::move(es));
        }
    }
    return s;
}

inline Json spec_to_json(const ManifoldSpec& s) {
    Json j;
    j["name"] = s.name;
    if (!s.description.empty()) j["description"] = s.description;
    j["coordinates"] = s.coordinates;
    j["domain"] = s.domain;
    j["metric"] = s.metric;
    if (s.frame) j["frame"] = *s.frame;
    if (s.structure) {
        Json st;
        st["phi"] = s.structure->phi;
        st["xi"] = s.structure->xi;
        st["eta"] = s.structure->eta;
        if (s.structure->alpha) st["alpha"] = *s.structure->alpha;
        if (s.structure->beta) st["beta"] = *s.structure->beta;
        j["structure"] = std::move(st);
    }
    j["candidates"] = Json::array();
    for (const auto& c : s.candidates) {
        Json cj;
        cj["name"] = c.name;
        cj["kind"] = c.kind;
        cj["V"] = c.v;
        cj["lambda"] = c.lambda;
        cj["collinear"] = c.collinear;
        cj["expect"] = c.expect_pass ? "pass" : "fail";
        if (!c.note.empty()) cj["note"] = c.note;
        j["candidates"].push_back(std::move(cj));
    }
    if (s.sample_plan) {
        Json sp;
        sp["grid"] = Json::array();
        for (const auto& a : s.sample_plan->grid)
            sp["grid"].push_back(Json{{"coordinate", a.coordinate}, {"lo", a.lo}, {"hi", a.hi}, {"count", a.count}});
        sp["random"] = s.sample_plan->random;
        sp["seed"] = s.sample_plan->seed;
        j["sample_plan"] = std::move(sp);
    }
    if (!s.expected.empty()) {
        j["expected"] = Json::array();
        for (const auto& e : s.expected) {
            Json ej;
            ej["id"] = e.id;
            ej["quantity"] = e.quantity;
            ej["args"] = e.args;
            if (!e.candidate.empty()) ej["candidate"] = e.candidate;
            ej["value"] = e.value;
            ej["source"] = e.source;
            if (!e.claim.empty()) ej["claim"] = e.claim;
            j["expected"].push_back(std::move(ej));
        }
    }
    return j;
}

/// Two-space indented JSON with arrays of scalars kept on one line.
inline std::string pretty_json(const Json& j, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' '), inner(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object()) {
        if (j.empty()) return "{}";
        std::string s = "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) s += ",\n";
            first = false;
            s += inner + Json(it.key()).dump() + ": " + pretty_json(it.value(), indent + 2);
        }
        return s + "\n" + pad + "}";
    }
    if (j.is_array()) {
        if (j.empty()) return "[]";
        bool flat = true;
        for (const auto& e : j) flat &= !e.is_structured();
        std::string s = flat ? "[" : "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (flat) {
                s += (i ? ", " : "") + j[i].dump();
            } else {
                s += (i ? ",\n" : "") + inner + pretty_json(j[i], indent + 2);
            }
        }
        return s + (flat ? "]" : "\n" + pad + "]");
    }
    return j.dump();
}

inline std::string dump_spec(const ManifoldSpec& s) { return pretty_json(spec_to_json(s)) + "\n"; }

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ManifoldSpec load_spec(const std::string& path) {
    try {
        return parse_spec(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void save_spec(const ManifoldSpec& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << dump_spec(s);
}

// ---------------------------------------------------------------------------
// Built manifold

/// A spec turned into symbolic fields. Heavy members are shared so copies are cheap
/// and SolitonGeometry pointers stay valid across moves.
class Manifold {
public:
    explicit Manifold(ManifoldSpec spec) : spec_(std::move(spec)) {
        const int m = spec_.dim();
        if (m == 0) throw ParseError("$.coordinates: at least one coordinate required");
        std::set<std::string> seen(spec_.coordinates.begin(), spec_.coordinates.end());
        if (static_cast<int>(seen.size()) != m) throw ParseError("$.coordinates: names must be distinct");
        for (std::size_t i = 0; i < spec_.domain.size(); ++i) {
            try {
                (void)Chart(spec_.coordinates, {spec_.domain[i]});
            } catch (const Error& e) {
                throw ParseError(detail::json_path_index("$.domain", i) + ": " + e.what());
            }
        }
        chart_ = std::make_shared<Chart>(spec_.coordinates, spec_.domain);

        g_ = MetricField(bilinear_form(m, matrix("$.metric", spec_.metric)));
        conn_ = std::make_shared<Connection>(g_);
        curv_ = std::make_shared<CurvatureBundle>(riemann(*conn_));

        if (spec_.frame) {
            if (static_cast<int>(spec_.frame->size()) != m)
                throw ParseError("$.frame: expected " + std::to_string(m) + " vectors");
            std::vector<TensorField> f;
            for (std::size_t a = 0; a < spec_.frame->size(); ++a)
                f.push_back(vector_field(exprs(detail::json_path_index("$.frame", a), (*spec_.frame)[a])));
            frame_ = std::move(f);
        }

        if (spec_.structure) {
            const StructureSpec& st = *spec_.structure;
            if (m % 2 == 0) throw ParseError("$.structure: almost contact structures need odd dimension");
            std::optional<Expr> a, b;
            if (st.alpha) a = expr("$.structure.alpha", *st.alpha);
            if (st.beta) b = expr("$.structure.beta", *st.beta);
            structure_ = std::make_shared<AlmostContactStructure>(
                endomorphism(m, matrix("$.structure.phi", st.phi)),
                vector_field(exprs("$.structure.xi", st.xi)), one_form(exprs("$.structure.eta", st.eta)), g_, a, b);
        }

        std::set<std::string> names;
        for (std::size_t i = 0; i < spec_.candidates.size(); ++i) {
            const CandidateSpec& cs = spec_.candidates[i];
            const std::string p = detail::json_path_index("$.candidates", i);
            if (!names.insert(cs.name).second) throw ParseError(p + ".name: duplicate candidate '" + cs.name + "'");
            SolitonCandidate c;
            c.name = cs.name;
            try {
                c.kind = parse_soliton_kind(cs.kind);
            } catch (const Error& e) {
                throw ParseError(p + ".kind: " + e.what());
            }
            c.v = vector_field(exprs(p + ".V", cs.v));
            c.lambda = expr(p + ".lambda", cs.lambda);
            c.collinear = cs.collinear;
            c.expect_pass = cs.expect_pass;
            c.note = cs.note;
            candidates_.push_back(std::move(c));
        }

        if (spec_.sample_plan) {
            const SamplePlanSpec& sp = *spec_.sample_plan;
            plan_.axes.assign(static_cast<std::size_t>(m), SamplePlan::Axis{});
            std::vector<bool> covered(static_cast<std::size_t>(m), false);
            for (std::size_t i = 0; i < sp.grid.size(); ++i) {
                const std::string p = detail::json_path_index("$.sample_plan.grid", i);
                int k = -1;
                for (int c = 0; c < m; ++c)
                    if (spec_.coordinates[static_cast<std::size_t>(c)] == sp.grid[i].coordinate) k = c;
                if (k < 0) throw ParseError(p + ".coordinate: unknown coordinate '" + sp.grid[i].coordinate + "'");
                if (covered[static_cast<std::size_t>(k)]) throw ParseError(p + ".coordinate: listed twice");
                if (!(sp.grid[i].lo <= sp.grid[i].hi)) throw ParseError(p + ": lo must not exceed hi");
                covered[static_cast<std::size_t>(k)] = true;
                plan_.axes[static_cast<std::size_t>(k)] = {sp.grid[i].lo, sp.grid[i].hi, sp.grid[i].count};
            }
            for (int c = 0; c < m; ++c)
                if (!covered[static_cast<std::size_t>(c)])
                    throw ParseError("$.sample_plan.grid: no axis for coordinate '" +
                                     spec_.coordinates[static_cast<std::size_t>(c)] + "'");
            plan_.random_count = sp.random;
            plan_.seed = sp.seed;
        } else {
            plan_.axes.assign(static_cast<std::size_t>(m), SamplePlan::Axis{-1.0, 1.0, 0});
            plan_.random_count = 25;
            plan_.seed = 42;
        }

        validate_expected();
    }

    const ManifoldSpec& spec() const { return spec_; }
    const std::string& name() const { return spec_.name; }
    int dim() const { return spec_.dim(); }
    const Chart& chart() const { return *chart_; }
    const MetricField& metric() const { return g_; }
    const Connection& connection() const { return *conn_; }
    const CurvatureBundle& curvature() const { return *curv_; }
    bool has_structure() const { return structure_ != nullptr; }
    const AlmostContactStructure& structure() const {
        if (!structure_) throw Error("manifold '" + spec_.name + "' has no almost contact structure");
        return *structure_;
    }
    const std::optional<std::vector<TensorField>>& frame() const { return frame_; }
    const std::vector<SolitonCandidate>& candidates() const { return candidates_; }
    const SamplePlan& default_plan() const { return plan_; }

    const SolitonCandidate& candidate(const std::string& name) const {
        for (const auto& c : candidates_)
            if (c.name == name) return c;
        std::string known;
        for (const auto& c : candidates_) known += (known.empty() ? "" : ", ") + c.name;
        throw Error("unknown candidate '" + name + "' (known: " + (known.empty() ? "none" : known) + ")");
    }

    Checker checker(const SamplePlan& plan, double tol) const {
        return Checker(g_, frame_, plan.points(*chart_), tol);
    }
    Checker checker(double tol = 1e-9) const { return checker(plan_, tol); }

    /// Geometry view; `profile` must outlive the result.
    SolitonGeometry geometry(const AlphaBetaProfile* profile = nullptr) const {
        return {conn_.get(), curv_.get(), structure_.get(), profile};
    }

    Expr parse(const std::string& text) const { return chart_->parse(text); }

private:
    Expr expr(const std::string& path, const std::string& text) const {
        try {
            return parse_expr(text, spec_.coordinates);
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }

    std::vector<Expr> exprs(const std::string& path, const std::vector<std::string>& texts) const {
        if (static_cast<int>(texts.size()) != dim())
            throw ParseError(path + ": expected " + std::to_string(dim()) + " components, got " +
                             std::to_string(texts.size()));
        std::vector<Expr> out;
        for (std::size_t i = 0; i < texts.size(); ++i) out.push_back(expr(detail::json_path_index(path, i), texts[i]));
        return out;
    }

    std::vector<Expr> matrix(const std::string& path, const std::vector<std::vector<std::string>>& rows) const {
        if (static_cast<int>(rows.size()) != dim())
            throw ParseError(path + ": expected " + std::to_string(dim()) + " rows, got " + std::to_string(rows.size()));
        std::vector<Expr> out;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto row = exprs(detail::json_path_index(path, i), rows[i]);
            out.insert(out.end(), row.begin(), row.end());
        }
        return out;
    }

    void validate_expected() const {
        const int m = dim();
        std::set<std::string> ids;
        for (std::size_t i = 0; i < spec_.expected.size(); ++i) {
            const ExpectedSpec& e = spec_.expected[i];
            const std::string p = detail::json_path_index("$.expected", i);
            if (!ids.insert(e.id).second) throw ParseError(p + ".id: duplicate id '" + e.id + "'");
            std::size_t nargs = 0, nvalues = 1;
            if (e.quantity == "connection") {
                nargs = 2;
                nvalues = static_cast<std::size_t>(m);
            } else if (e.quantity == "curvature") {
                nargs = 3;
                nvalues = static_cast<std::size_t>(m);
            } else if (e.quantity == "ricci" || e.quantity == "lie_derivative") {
                nargs = 2;
            } else if (e.quantity != "scalar_curvature") {
                throw ParseError(p + ".quantity: unknown quantity '" + e.quantity + "'");
            }
            if (e.args.size() != nargs)
                throw ParseError(p + ".args: " + e.quantity + " takes " + std::to_string(nargs) + " frame indices");
            for (int a : e.args)
                if (a < 1 || a > m) throw ParseError(p + ".args: frame indices run from 1 to " + std::to_string(m));
            if (e.value.size() != nvalues)
                throw ParseError(p + ".value: expected " + std::to_string(nvalues) + " expressions");
            for (std::size_t k = 0; k < e.value.size(); ++k) (void)expr(detail::json_path_index(p + ".value", k), e.value[k]);
            if (e.quantity == "lie_derivative") {
                if (e.candidate.empty()) throw ParseError(p + ".candidate: lie_derivative needs a candidate");
                try {
                    (void)candidate(e.candidate);
                } catch (const Error& err) {
                    throw ParseError(p + ".candidate: " + err.what());
                }
            }
            if (e.quantity != "scalar_curvature" && !frame_)
                throw ParseError(p + ": frame-projected values need a declared frame");
        }
    }

    ManifoldSpec spec_;
    std::shared_ptr<Chart> chart_;
    MetricField g_;
    std::shared_ptr<Connection> conn_;
    std::shared_ptr<CurvatureBundle> curv_;
    std::optional<std::vector<TensorField>> frame_;
    std::shared_ptr<AlmostContactStructure> structure_;
    std::vector<SolitonCandidate> candidates_;
    SamplePlan plan_;
};

}  // namespace solitonkit
