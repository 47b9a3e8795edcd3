#include "quivmod/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quivmod/catalog.hpp"
#include "quivmod/deform.hpp"
#include "quivmod/error.hpp"
#include "quivmod/invariants.hpp"
#include "quivmod/json_io.hpp"
#include "quivmod/kernels.hpp"
#include "quivmod/strata.hpp"

namespace quivmod {

namespace {

struct Options {
    std::string command;
    std::string input;
    std::string example;
    std::string stability;
    std::string deformed;
    std::string kernel = "auto";
    bool json = false;
    bool assume_nonempty = false;
    std::size_t max_box = Limits{}.max_box_cells;
};

struct Context {
    Options opt;
    ProblemSpec spec;
    Limits limits;
    std::string family;
    std::vector<std::int64_t> params;
};

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_input: return "invalid_input";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::consistency: return "consistency";
    }
    return "";
}

std::vector<std::int64_t> parse_list(const std::string& s, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw InvalidInput("bad_vector", std::string("cannot parse ") + what + " '" + s + "'");
        }
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
    return out;
}

std::string matrix_text(const std::vector<std::vector<std::int64_t>>& m, const std::string& indent) {
    std::size_t w = 1;
    for (const auto& row : m) {
        for (auto x : row) w = std::max(w, std::to_string(x).size());
    }
    std::string out;
    for (const auto& row : m) {
        out += indent + "[";
        for (auto x : row) {
            const std::string s = std::to_string(x);
            out += " " + std::string(w - s.size(), ' ') + s;
        }
        out += " ]\n";
    }
    return out;
}

// theta' to use: the given one, else the constructed generic deformation (indivisible d only).
std::optional<Stability> deformed_stability(const Context& ctx, bool* constructed) {
    *constructed = false;
    if (ctx.spec.theta_prime) return ctx.spec.theta_prime;
    if (!is_indivisible(ctx.spec.d)) return std::nullopt;
    *constructed = true;
    return generic_deformation(normalize_stability(ctx.spec.theta, ctx.spec.d), ctx.spec.d, ctx.limits).theta_prime;
}

Json header(const Context& ctx) {
    Json j;
    j["command"] = ctx.opt.command;
    j["problem"] = problem_to_json(ctx.spec);
    if (!ctx.family.empty()) j["example"] = {{"family", ctx.family}, {"params", ctx.params}};
    return j;
}

void emit(const Context& ctx, std::ostream& out, const Json& j, const std::string& text) {
    if (ctx.opt.json) {
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

int cmd_info(const Context& ctx, std::ostream& out) {
    const auto& s = ctx.spec;
    const Stability normalized = normalize_stability(s.theta, s.d);
    Json j = header(ctx);
    j["euler_matrix"] = euler_matrix(s.quiver);
    j["skew_rank"] = skew_rank(s.quiver);
    j["normalized_stability"] = to_json(normalized);
    const bool sym = symmetric_on_kernel(s.quiver, normalized);
    j["kernel_symmetric"] = sym;
    const bool coprime = !s.d.is_zero() && is_coprime(normalized, s.d, ctx.limits);
    j["coprime"] = coprime;
    j["indivisible"] = is_indivisible(s.d);
    j["expected_dimension"] = moduli_dim(s.quiver, s.d);
    j["symmetric_quiver"] = s.quiver.is_symmetric();

    std::ostringstream t;
    t << "quiver: " << s.quiver.vertex_count() << " vertices (" << join(s.quiver.vertices(), ", ") << "), "
      << s.quiver.arrow_total() << " arrows\n";
    t << "dimension: " << s.d << "\nstability: " << s.theta << " (normalized " << normalized << ")\n";
    t << "euler form:\n" << matrix_text(euler_matrix(s.quiver), "  ");
    t << "skew rank: " << skew_rank(s.quiver) << "\n";
    t << "kernel symmetric: " << yes_no(sym) << "\n";
    if (sym) {
        const EtaFactorization eta = eta_factorization(s.quiver, normalized);
        std::vector<std::string> e;
        for (const auto& x : eta.eta) e.push_back(rational_string(x));
        j["eta"] = e;
        t << "eta: (" << join(e, ",") << ")\n";
    }
    t << "coprime: " << yes_no(coprime) << "\nindivisible: " << yes_no(is_indivisible(s.d)) << "\n";
    t << "expected dimension: " << moduli_dim(s.quiver, s.d) << "\n";
    emit(ctx, out, j, t.str());
    return 0;
}

int cmd_deform(const Context& ctx, std::ostream& out) {
    const auto& s = ctx.spec;
    const Stability normalized = normalize_stability(s.theta, s.d);
    const GenericDeformation g = generic_deformation(normalized, s.d, ctx.limits);
    const DeformationCheck check = is_generic_deformation(normalized, g.theta_prime, s.d, ctx.limits);
    Json j = header(ctx);
    j["normalized_stability"] = to_json(normalized);
    j["constructed"] = {{"theta_prime", to_json(g.theta_prime)}, {"eta", to_json(g.eta)}, {"scale", g.scale},
                        {"check", to_json(check)}};
    std::ostringstream t;
    t << "stability (normalized): " << normalized << "\n";
    t << "eta: " << g.eta << "\nscale: " << g.scale << "\ndeformed stability: " << g.theta_prime << "\n";
    t << "verified generic: " << yes_no(check.passes) << "\n";
    if (s.theta_prime) {
        const DeformationCheck given = is_generic_deformation(normalized, normalize_stability(*s.theta_prime, s.d), s.d, ctx.limits);
        j["given"] = {{"theta_prime", to_json(*s.theta_prime)}, {"check", to_json(given)}};
        t << "given deformed stability " << *s.theta_prime << " generic: " << yes_no(given.passes) << "\n";
        for (const auto& v : given.violations) t << "  violates condition " << v.condition << " at " << v.e << "\n";
    }
    emit(ctx, out, j, t.str());
    return 0;
}

int cmd_pd(const Context& ctx, std::ostream& out) {
    const auto& s = ctx.spec;
    const auto decomps = hn_decompositions(s.d, s.theta, ctx.limits);
    const RatFunc p = p_poly(s.quiver, s.d, s.theta, ctx.limits);
    Json j = header(ctx);
    j["hn_decompositions"] = decomps.size();
    j["p"] = to_json(p);
    std::ostringstream t;
    t << "HN decompositions: " << decomps.size() << "\n";
    t << "p_d(q) = " << p.pretty() << "\n";
    emit(ctx, out, j, t.str());
    return 0;
}

int cmd_betti(const Context& ctx, std::ostream& out) {
    const auto& s = ctx.spec;
    const HalfLaurent b = betti_coprime(s.quiver, s.d, s.theta, ctx.limits);
    Json j = header(ctx);
    j["betti"] = to_json(b);
    j["assume_nonempty"] = s.assume_nonempty;
    j["expected_dimension"] = moduli_dim(s.quiver, s.d);
    std::ostringstream t;
    t << "betti polynomial: " << b.pretty() << "\n";
    t << "expected dimension: " << moduli_dim(s.quiver, s.d) << "\n";
    t << "nonempty moduli assumed: " << yes_no(s.assume_nonempty) << "\n";
    emit(ctx, out, j, t.str());
    return 0;
}

Json dt_json(const std::map<DimVector, RatFunc>& dt) {
    Json a = Json::array();
    for (const auto& [e, v] : dt) a.push_back({{"e", to_json(e)}, {"value", to_json(v)}});
    return a;
}

int cmd_dt(const Context& ctx, std::ostream& out) {
    const auto& s = ctx.spec;
    const auto dt = dt_invariants(s.quiver, s.theta, s.d, ctx.limits);
    Json j = header(ctx);
    j["dt"] = dt_json(dt);
    std::ostringstream t;
    for (const auto& [e, v] : dt) t << "DT" << e << " = " << v.pretty() << "\n";
    if (s.theta_prime) {
        const auto deformed = dt_invariants(s.quiver, *s.theta_prime, s.d, ctx.limits);
        bool agree = true;
        for (const auto& [e, v] : deformed) {
            auto it = dt.find(e);
            if (it != dt.end() && !(it->second == v)) agree = false;
        }
        j["deformed_dt"] = dt_json(deformed);
        j["deformation_invariant"] = agree;
        t << "deformed stability " << *s.theta_prime << ":\n";
        for (const auto& [e, v] : deformed) t << "  DT" << e << " = " << v.pretty() << "\n";
        t << "agree on common exponents: " << yes_no(agree) << "\n";
    }
    emit(ctx, out, j, t.str());
    return 0;
}

int cmd_ic(const Context& ctx, std::ostream& out) {
    const auto& s = ctx.spec;
    const HalfLaurent via_dt = ic_poincare_dt(s.quiver, s.d, s.theta, ctx.limits);
    Json j = header(ctx);
    j["assume_nonempty"] = s.assume_nonempty;
    j["dt_route"] = to_json(via_dt);
    j["result"] = to_json(via_dt);
    std::ostringstream t;
    t << "IC Poincare polynomial (DT route): " << via_dt.pretty() << "\n";
    bool constructed = false;
    if (auto tp = deformed_stability(ctx, &constructed)) {
        const HalfLaurent via_res = ic_poincare_resolution(s.quiver, s.d, s.theta, *tp, ctx.limits);
        j["resolution_route"] = to_json(via_res);
        j["deformed_stability"] = {{"theta_prime", to_json(*tp)}, {"constructed", constructed}};
        const bool agree = via_res == via_dt;
        j["routes_agree"] = agree;
        t << "IC Poincare polynomial (resolution route, theta' = " << *tp << (constructed ? ", constructed" : "")
          << "): " << via_res.pretty() << "\n";
        if (!agree) {
            throw ConsistencyError("route_disagreement", "DT route gives " + via_dt.pretty() + " but resolution route gives " + via_res.pretty());
        }
        t << "routes agree: yes\n";
    }
    t << "nonempty moduli assumed: " << yes_no(s.assume_nonempty) << "\n";
    emit(ctx, out, j, t.str());
    return 0;
}

std::vector<std::vector<std::int64_t>> partitions(std::int64_t g) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rest, std::int64_t max) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t k = std::min(rest, max); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(g, g);
    return out;
}

void point_config_section(const Context& ctx, Json& j, std::ostream& t) {
    const std::int64_t m = ctx.params[0], d = ctx.params[1];
    Json rows = Json::array();
    t << "marked partitions of gcd(m,d) (local data, closed-form cross-check):\n";
    for (const auto& parts : partitions(std::gcd(m, d))) {
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k > 0 && parts[k] == parts[k - 1]) continue;
            Json row = {{"parts", parts}, {"marked", k}};
            std::string label = "(";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                label += (i ? "," : "") + std::to_string(parts[i]) + (i == k ? "*" : "");
            }
            label += ")";
            try {
                const PointConfigLocal pc = point_config_local_data(m, d, {parts, k});
                row["local_quiver"] = to_json(pc.local);
                row["closed_form_arrows"] = pc.closed_form_arrows;
                row["closed_form_stability"] = pc.closed_form_stability;
                row["arrows_agree"] = pc.arrows_agree;
                row["stability_agree"] = pc.stability_agree;
                t << "  " << label << ": stability " << pc.local.theta << ", arrows agree with closed form: "
                  << yes_no(pc.arrows_agree) << ", stability agrees: " << yes_no(pc.stability_agree) << "\n";
            } catch (const PreconditionError& e) {
                row["note"] = e.what();
                t << "  " << label << ": " << e.what() << "\n";
            }
            rows.push_back(std::move(row));
        }
    }
    j["point_config"] = rows;
}

int cmd_strata(const Context& ctx, std::ostream& out) {
    const auto& s = ctx.spec;
    bool constructed = false;
    const auto tp = deformed_stability(ctx, &constructed);
    const Stability local_theta = tp ? normalize_stability(*tp, s.d) : Stability::zero(s.d.size());
    Json j = header(ctx);
    std::ostringstream t;
    if (tp) {
        j["deformed_stability"] = {{"theta_prime", to_json(*tp)}, {"constructed", constructed}};
        t << "deformed stability: " << *tp << (constructed ? " (constructed)" : "") << "\n";
    }
    if (s.quiver.is_symmetric()) {
        const HalfInt nb = nullcone_dim_bound(s.quiver, s.d);
        j["nullcone_bound"] = to_json(nb);
        t << "nullcone bound: " << nb.to_string() << "\n";
    }
    Json rows = Json::array();
    t << "types:\n";
    for (const auto& xi : luna_types(s.quiver, s.d, s.theta, ctx.limits)) {
        Json row = to_json(xi);
        t << "  " << xi.to_string() << "\n";
        const std::int64_t codim = codim_lower_bound(s.quiver, s.d, xi);
        row["codim_bound"] = codim;
        t << "    codim bound: " << codim << "\n";
        try {
            const LocalQuiver lq = local_quiver(s.quiver, xi, local_theta);
            row["local_quiver"] = to_json(lq);
            t << "    local quiver (d = " << lq.d << ", stability " << lq.theta << "):\n" << matrix_text(lq.quiver.arrow_matrix(), "      ");
            const HalfInt fiber = fiber_dim_bound(s.quiver, xi);
            const HalfInt margin = smallness_margin(s.quiver, s.d, xi);
            row["fiber_bound"] = to_json(fiber);
            row["margin"] = to_json(margin);
            t << "    fiber bound: " << fiber.to_string() << "\n    margin: " << margin.to_string() << "\n";
        } catch (const PreconditionError& e) {
            row["note"] = e.what();
            t << "    " << e.what() << "\n";
        }
        rows.push_back(std::move(row));
    }
    j["types"] = rows;
    if (ctx.family == "points") point_config_section(ctx, j, t);
    emit(ctx, out, j, t.str());
    return 0;
}

int cmd_smallness(const Context& ctx, std::ostream& out) {
    const auto& s = ctx.spec;
    bool constructed = false;
    const auto tp = deformed_stability(ctx, &constructed);
    Json j = header(ctx);
    std::ostringstream t;
    SmallnessReport report;
    if (tp) {
        report = certify_smallness(s.quiver, s.d, s.theta, *tp, s.assume_nonempty, ctx.limits);
        j["deformed_stability"] = {{"theta_prime", to_json(*tp)}, {"constructed", constructed}};
        t << "deformed stability: " << *tp << (constructed ? " (constructed)" : "") << "\n";
    } else {
        report.assume_stable_nonempty = s.assume_nonempty;
        report.reasons.push_back("no deformed stability given and d is divisible");
    }
    j["report"] = to_json(report);
    t << "verdict: " << verdict_name(report.verdict);
    if (!report.reasons.empty()) t << " (" << join(report.reasons, "; ") << ")";
    t << "\n";
    for (const auto& h : report.hypotheses) t << "hypothesis " << h.name << ": " << yes_no(h.holds) << "\n";
    t << "stable locus nonempty assumed: " << yes_no(report.assume_stable_nonempty) << "\n";
    if (!report.strata.empty()) {
        t << "type | fiber | codim | margin\n";
        for (const auto& r : report.strata) {
            t << r.type.to_string() << " | ";
            if (r.filtered) {
                t << "filtered: " << r.filter_reason << "\n";
            } else {
                t << r.fiber_bound.to_string() << " | " << r.codim_bound << " | " << r.margin.to_string() << "\n";
            }
        }
    }
    if (ctx.family == "kronecker_general") {
        const RankOneReport r = rank_one_smallness_report(ctx.params[0], ctx.params[1]);
        const std::string note = r.small ? "small (m<=n)" : "not small (m>n)";
        j["rank_one"] = {{"fiber_dim", r.fiber_dim}, {"codim", r.codim}, {"small", r.small}, {"note", note}};
        t << "rank one closed form: fiber " << r.fiber_dim << ", codim " << r.codim << ": " << note << "\n";
    }
    emit(ctx, out, j, t.str());
    return 0;
}

int cmd_examples(const Options& opt, std::ostream& out) {
    Json a = Json::array();
    std::ostringstream t;
    for (const auto& f : list_families()) {
        a.push_back({{"family", f.name}, {"params", f.params}, {"summary", f.summary}});
        t << f.name << ":" << f.params << "  " << f.summary << "\n";
    }
    if (opt.json) {
        out << Json{{"command", "examples"}, {"families", a}}.dump(2) << "\n";
    } else {
        out << t.str();
    }
    return 0;
}

std::string families_help() {
    std::string s = "Example families (--example family:p1,p2,...):\n";
    for (const auto& f : list_families()) s += "  " + f.name + ":" + f.params + "  " + f.summary + "\n";
    return s;
}

Context load(const Options& opt, std::istream& in) {
    Context ctx;
    ctx.opt = opt;
    ctx.limits.max_box_cells = opt.max_box;
    if (!opt.example.empty() && !opt.input.empty()) throw InvalidInput("conflicting_input", "give either an input file or --example, not both");
    if (!opt.example.empty()) {
        const Example ex = build_example(opt.example);
        ctx.spec = problem_from_example(ex);
        ctx.family = ex.family;
        ctx.params = ex.params;
    } else if (opt.input == "-") {
        ctx.spec = parse_problem(in);
    } else if (!opt.input.empty()) {
        std::ifstream f(opt.input);
        if (!f) throw InvalidInput("unreadable_input", "cannot open " + opt.input);
        ctx.spec = parse_problem(f);
    } else {
        throw InvalidInput("missing_input", "need an input file, '-' for stdin, or --example");
    }
    if (!opt.stability.empty()) {
        ctx.spec.theta = Stability(parse_list(opt.stability, "stability"));
        check_size(ctx.spec.quiver, ctx.spec.theta);
    }
    if (!opt.deformed.empty()) {
        ctx.spec.theta_prime = Stability(parse_list(opt.deformed, "deformed stability"));
        check_size(ctx.spec.quiver, *ctx.spec.theta_prime);
    }
    if (opt.assume_nonempty) ctx.spec.assume_nonempty = true;
    check_nonzero(ctx.spec.d);
    return ctx;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app("Exact invariants of quiver moduli: Betti and DT invariants, intersection cohomology, "
                 "generic deformations and smallness of desingularizations.",
                 "quivmod");
    app.footer(families_help());
    app.add_option("command", opt.command, "info | deform | pd | betti | dt | ic | strata | smallness | examples")
        ->required()
        ->check(CLI::IsMember({"info", "deform", "pd", "betti", "dt", "ic", "strata", "smallness", "examples"}));
    app.add_option("input", opt.input, "problem JSON file, or - for stdin");
    app.add_option("--example", opt.example, "catalog example family:p1,p2,...");
    app.add_option("--stability", opt.stability, "override the stability, comma separated");
    app.add_option("--deformed", opt.deformed, "deformed stability, comma separated");
    app.add_flag("--assume-nonempty", opt.assume_nonempty, "assert that the (stable) moduli space is nonempty");
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--max-box", opt.max_box, "largest enumeration (lattice cells) allowed")->capture_default_str();
    app.add_option("--kernel", opt.kernel, "integer kernel backend")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 1;
    }

    const auto fail = [&](ErrorKind kind, const std::string& code, const std::string& message) {
        if (opt.json) {
            out << Json{{"error", {{"kind", kind_name(kind)}, {"reason", code}, {"message", message}}}}.dump(2) << "\n";
        }
        err << "error: " << code << ": " << message << "\n";
        return static_cast<int>(kind);
    };

    try {
        if (opt.kernel == "scalar") {
            kernels::select_backend(kernels::Backend::scalar);
        } else if (opt.kernel == "avx2") {
            kernels::select_backend(kernels::Backend::avx2);
        } else {
            kernels::select_backend(kernels::avx2_supported() ? kernels::Backend::avx2 : kernels::Backend::scalar);
        }
        if (opt.command == "examples") return cmd_examples(opt, out);
        const Context ctx = load(opt, in);
        if (opt.command == "info") return cmd_info(ctx, out);
        if (opt.command == "deform") return cmd_deform(ctx, out);
        if (opt.command == "pd") return cmd_pd(ctx, out);
        if (opt.command == "betti") return cmd_betti(ctx, out);
        if (opt.command == "dt") return cmd_dt(ctx, out);
        if (opt.command == "ic") return cmd_ic(ctx, out);
        if (opt.command == "strata") return cmd_strata(ctx, out);
        return cmd_smallness(ctx, out);
    } catch (const Error& e) {
        return fail(e.kind(), e.code(), e.what());
    }
}

}  // namespace quivmod
