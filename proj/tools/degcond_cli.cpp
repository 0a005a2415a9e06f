// Command-line front end: condition checking, forcibly oracles, weak-optimality
// verification, sink enumeration, and best-monotone containment sweeps.
//
// Exit codes: 0 affirmative, 1 negative with certificate, 2 usage/validation
// error. Reports go to stdout, sweep progress to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <degcond/degcond.hpp>

using namespace degcond;
using nlohmann::ordered_json;

namespace {

struct output_options {
    bool json = false;
    std::string out_path;
};

void emit(const output_options& opt, const ordered_json& j, const std::string& text) {
    std::string payload = opt.json ? j.dump(2) + "\n" : text;
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        f << payload;
    } else {
        std::cout << payload;
    }
}

scale_limits limits_from_env() {
    scale_limits lim;
    if (const char* env = std::getenv("DEGCOND_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) {
            lim.realization_n = v;
            lim.sink_n = v;
            lim.cycle_oracle_n = std::max(lim.cycle_oracle_n, v);
            lim.partition_oracle_n = std::max(lim.partition_oracle_n, v);
        }
    }
    return lim;
}

struct param_flags {
    std::string k, beta, b, t;

    params build() const {
        params p;
        if (!k.empty()) p.k = std::stoll(k);
        if (!beta.empty()) p.beta = std::stoll(beta);
        if (!b.empty()) p.b = rational::parse(b);
        if (!t.empty()) p.t = rational::parse(t);
        return p;
    }
};

void add_param_flags(CLI::App* app, param_flags& pf) {
    app->add_option("--k", pf.k, "integer parameter k");
    app->add_option("--beta", pf.beta, "integer parameter beta");
    app->add_option("--b", pf.b, "rational parameter b (as p/q or integer)");
    app->add_option("--t", pf.t, "rational parameter t (as p/q or integer)");
}

property parse_property(const std::string& name, const param_flags& pf) {
    static const std::map<std::string, prop_kind> table = {
        {"hamiltonian", prop_kind::hamiltonian},
        {"traceable", prop_kind::traceable},
        {"k-connected", prop_kind::k_connected},
        {"k-edge-connected", prop_kind::k_edge_connected},
        {"binding", prop_kind::b_binding},
        {"tough", prop_kind::t_tough},
        {"deficient", prop_kind::beta_deficient},
        {"2-factor", prop_kind::has_2_factor},
        {"k-factor", prop_kind::has_k_factor},
        {"k-hamiltonian", prop_kind::k_hamiltonian},
        {"k-path-coverable", prop_kind::k_path_coverable},
        {"hamiltonian-connected", prop_kind::hamiltonian_connected},
        {"k-edge-hamiltonian", prop_kind::k_edge_hamiltonian},
        {"pancyclic", prop_kind::pancyclic},
        {"alpha-le", prop_kind::alpha_le},
        {"alpha-ge", prop_kind::alpha_ge},
        {"omega-ge", prop_kind::omega_ge},
        {"chi-le", prop_kind::chi_le},
        {"chi-ge", prop_kind::chi_ge},
        {"arboricity-le", prop_kind::arboricity_le},
    };
    auto it = table.find(name);
    if (it == table.end()) throw param_out_of_domain("unknown property '" + name + "'");
    property p = property::simple(it->second);
    if (p.has_int_param()) {
        if (!pf.k.empty())
            p.k = std::stoll(pf.k);
        else if (!pf.beta.empty())
            p.k = std::stoll(pf.beta);
        else
            throw param_out_of_domain("property " + name + " needs --k (or --beta)");
    }
    if (p.has_rat_param()) {
        if (!pf.b.empty())
            p.q = rational::parse(pf.b);
        else if (!pf.t.empty())
            p.q = rational::parse(pf.t);
        else
            throw param_out_of_domain("property " + name + " needs --b or --t");
    }
    return p;
}

// "name" or "name:value" where value fills the row's single parameter
std::pair<cond, params> parse_cond_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    cond c = cond_by_name(name);
    params p;
    if (colon != std::string::npos) {
        std::string value = spec.substr(colon + 1);
        const auto& r = row(c);
        if (r.param == "k")
            p.k = std::stoll(value);
        else if (r.param == "beta")
            p.beta = std::stoll(value);
        else if (r.param == "b")
            p.b = rational::parse(value);
        else if (r.param == "t")
            p.t = rational::parse(value);
        else
            throw param_out_of_domain(name + " takes no parameter");
    }
    return {c, p};
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::string failing_text(const verdict& v) {
    std::string s = "fails (" + v.failing->clause + ")";
    if (v.failing->i) s += " at i=" + std::to_string(*v.failing->i);
    if (v.failing->j) s += ", j=" + std::to_string(*v.failing->j);
    return s;
}

int cmd_check_cond(const std::string& seq_text, const std::string& cond_name,
                   const param_flags& pf, const output_options& opt) {
    auto pi = degree_sequence::parse(seq_text);
    cond c = cond_by_name(cond_name);
    auto v = evaluate(c, pf.build(), pi);
    ordered_json j = v.to_json();
    j["sequence"] = pi.to_json();
    emit(opt, j, v.declared ? "declared\n" : failing_text(v) + "\n");
    return v.declared ? 0 : 1;
}

int cmd_check_bound(const std::string& seq_text, const std::string& bound_name,
                    const param_flags& pf, const output_options& opt) {
    auto pi = degree_sequence::parse(seq_text);
    ordered_json j;
    j["bound"] = bound_name;
    j["sequence"] = pi.to_json();
    std::string text;
    if (bound_name == "murphy-alpha") {
        auto r = murphy_alpha(pi);
        j["value"] = r.rounded;
        text = std::to_string(r.rounded) + "\n";
    } else if (bound_name == "murphy-trace") {
        auto tr = murphy_f_trace(pi);
        j["trace"] = tr.finite;
        text = tr.str() + "\n";
    } else if (bound_name == "caro-wei") {
        auto r = caro_wei(pi);
        j["exact"] = r.exact.str();
        j["value"] = r.rounded;
        text = r.exact.str() + " (ceiling " + std::to_string(r.rounded) + ")\n";
    } else if (bound_name == "welsh-powell-chi") {
        auto r = welsh_powell_chi_upper(pi);
        j["value"] = r.rounded;
        text = std::to_string(r.rounded) + "\n";
    } else if (bound_name == "chi-trivial") {
        auto r = chi_upper_trivial(pi);
        j["value"] = r.rounded;
        text = std::to_string(r.rounded) + "\n";
    } else if (bound_name == "arboricity-maxmin") {
        auto r = arboricity_upper(pi);
        j["value"] = r.rounded;
        text = std::to_string(r.rounded) + "\n";
    } else if (bound_name == "arboricity-trivial") {
        auto r = arboricity_upper_trivial(pi);
        j["value"] = r.rounded;
        text = std::to_string(r.rounded) + "\n";
    } else if (bound_name == "omega-chi-lower") {
        auto r = clique_chromatic_lower(pi);
        j["value"] = r.rounded;
        text = std::to_string(r.rounded) + "\n";
    } else {
        throw param_out_of_domain("unknown bound '" + bound_name + "'");
    }
    emit(opt, j, text);
    return 0;
}

int cmd_forcibly(const std::string& seq_text, const std::string& prop_name, const param_flags& pf,
                 const scale_limits& lim, const output_options& opt) {
    auto pi = degree_sequence::parse(seq_text);
    property p = parse_property(prop_name, pf);
    auto res = forcibly(p, pi, lim);
    ordered_json j;
    j["property"] = p.display();
    j["sequence"] = pi.to_json();
    j["forcibly"] = res.holds;
    j["realizations_checked"] = res.checked;
    j["counterexample"] =
        res.counterexample ? res.counterexample->to_json() : ordered_json(nullptr);
    std::string text = res.holds
                           ? "forcibly " + p.display() + " (" + std::to_string(res.checked) +
                                 " realizations)\n"
                           : "not forcibly " + p.display() + "; counterexample " +
                                 res.counterexample->to_json().dump() + "\n";
    emit(opt, j, text);
    return res.holds ? 0 : 1;
}

int cmd_verify(const std::string& cond_spec, const std::string& range_text, int oracle_max,
               const output_options& opt) {
    auto [c, p] = parse_cond_spec(cond_spec);
    auto [lo, hi] = parse_range(range_text);
    ordered_json results = ordered_json::array();
    bool all_pass = true;
    std::string text;
    for (int n = lo; n <= hi; ++n) {
        optimality_report rep;
        try {
            rep = verify_weak_optimality(c, p, n, oracle_max);
        } catch (const sequence_too_short&) {
            continue;  // below the row's range
        } catch (const param_out_of_domain&) {
            continue;
        }
        all_pass = all_pass && rep.pass;
        ordered_json r;
        r["n"] = n;
        r["pass"] = rep.pass;
        r["cells"] = rep.cells.size();
        auto viol = ordered_json::array();
        for (const auto& v : rep.violations) viol.push_back(v);
        r["violations"] = std::move(viol);
        results.push_back(std::move(r));
        text += "n=" + std::to_string(n) + ": " + (rep.pass ? "PASS" : "FAIL") + " (" +
                std::to_string(rep.cells.size()) + " cells)\n";
        for (const auto& v : rep.violations) text += "  violation: " + v + "\n";
        std::cerr << "verified n=" << n << "\n";
    }
    ordered_json j;
    j["condition"] = row(c).name;
    j["params"] = p.to_json();
    j["results"] = std::move(results);
    j["pass"] = all_pass;
    emit(opt, j, text + (all_pass ? "PASS\n" : "FAIL\n"));
    return all_pass ? 0 : 1;
}

int cmd_sinks(const std::string& prop_name, const param_flags& pf, int n, const scale_limits& lim,
              const output_options& opt) {
    property p = parse_property(prop_name, pf);
    auto rep = sinks(p, n, lim);
    std::string text = "sinks(" + p.display() + ", " + std::to_string(n) +
                       "): count=" + std::to_string(rep.count()) + "\n";
    for (const auto& s : rep.sinks) text += "  " + s.render() + "\n";
    emit(opt, rep.to_json(), text);
    return 0;
}

int cmd_bm_sweep(const std::string& from_spec, const std::string& to_spec,
                 const std::string& range_text, const output_options& opt) {
    auto [cf, pf_] = parse_cond_spec(from_spec);
    auto [ct, pt_] = parse_cond_spec(to_spec);
    auto [lo, hi] = parse_range(range_text);
    bool holds = true;
    ordered_json counterexample = nullptr;
    ordered_json skipped = ordered_json::array();
    std::string text;
    for (int n = lo; n <= hi && holds; ++n) {
        std::cerr << "sweep n=" << n << "\n";
        // both rows must be applicable at this length
        try {
            validate(cf, pf_, n);
            validate(ct, pt_, n);
        } catch (const error& e) {
            skipped.push_back({{"n", n}, {"reason", e.what()}});
            continue;
        }
        for (const auto& pi : enumerate_graphical(n)) {
            auto vf = evaluate(cf, pf_, pi);
            if (!vf.declared) continue;
            auto vt = evaluate(ct, pt_, pi);
            if (!vt.declared) {
                holds = false;
                ordered_json cx;
                cx["n"] = n;
                cx["sequence"] = pi.to_json();
                cx["fails"] = vt.to_json();
                counterexample = std::move(cx);
                text += "containment FAILS at n=" + std::to_string(n) + ": " + pi.compact() +
                        " declared by " + from_spec + " but " + failing_text(vt) + " of " +
                        to_spec + "\n";
                break;
            }
        }
    }
    ordered_json j;
    j["from"] = from_spec;
    j["to"] = to_spec;
    j["holds"] = holds;
    j["skipped"] = std::move(skipped);
    j["counterexample"] = std::move(counterexample);
    emit(opt, j, holds ? text + "containment holds\n" : text);
    return holds ? 0 : 1;
}

int cmd_registry(const output_options& opt) {
    ordered_json rows = ordered_json::array();
    std::string text;
    for (const auto& r : registry()) {
        ordered_json jr;
        jr["id"] = r.name;
        jr["citation"] = r.citation;
        jr["param"] = r.param;
        jr["domain"] = r.domain;
        auto flags = ordered_json::array();
        if (r.best_monotone) flags.push_back("best_monotone");
        if (r.sufficient_only) flags.push_back("sufficient_only");
        if (r.structural_min_degree) flags.push_back("structural_min_degree");
        if (r.implication) flags.push_back("implication");
        jr["flags"] = std::move(flags);
        rows.push_back(std::move(jr));
        text += r.name + "  [" + r.citation + "]  " + r.domain + "\n";
    }
    emit(opt, rows, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"best monotone degree-condition toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    output_options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");
    app.add_option("--out", opt.out_path, "write the report to a file");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker cap for sweeps (advisory)");

    scale_limits lim = limits_from_env();
    int max_n_flag = 0;
    bool unlimited = false;
    app.add_option("--max-n", max_n_flag, "override the realization scale limit");
    app.add_flag("--unlimited", unlimited, "lift all scale limits");

    std::string seq_text, cond_name, bound_name, prop_name, range_text, from_spec, to_spec;
    param_flags pf;
    int n_single = 0;
    int oracle_max = 7;

    auto* check = app.add_subcommand("check", "evaluate a condition or bound on a sequence");
    check->add_option("--seq", seq_text, "degree sequence")->required();
    check->add_option("--cond", cond_name, "condition id (see `registry`)");
    check->add_option("--bound", bound_name,
                      "bound id: murphy-alpha, murphy-trace, caro-wei, welsh-powell-chi, "
                      "chi-trivial, arboricity-maxmin, arboricity-trivial, omega-chi-lower");
    add_param_flags(check, pf);

    auto* forc = app.add_subcommand("forcibly", "exhaustive forcibly-P oracle");
    forc->add_option("--seq", seq_text, "degree sequence")->required();
    forc->add_option("--prop", prop_name, "property id")->required();
    add_param_flags(forc, pf);

    auto* verify = app.add_subcommand("verify", "weak-optimality harness over a range of n");
    verify->add_option("--cond", cond_name, "condition id, optionally name:param")->required();
    verify->add_option("--n", range_text, "length or range a..b")->required();
    verify->add_option("--oracle-max-n", oracle_max, "largest n for oracle checks (default 7)");
    add_param_flags(verify, pf);

    auto* sinks_cmd = app.add_subcommand("sinks", "enumerate (P,n)-sinks");
    sinks_cmd->add_option("--prop", prop_name, "property id")->required();
    sinks_cmd->add_option("--n", n_single, "sequence length")->required();
    add_param_flags(sinks_cmd, pf);

    auto* sweep = app.add_subcommand("bm-sweep", "declared-set containment sweep");
    sweep->add_option("--from", from_spec, "condition id, optionally name:param")->required();
    sweep->add_option("--to", to_spec, "condition id, optionally name:param")->required();
    sweep->add_option("--n", range_text, "length range a..b")->required();

    auto* reg = app.add_subcommand("registry", "list the condition registry");
    (void)reg;

    CLI11_PARSE(app, argc, argv);
    (void)jobs;

    if (max_n_flag > 0) {
        lim.realization_n = max_n_flag;
        lim.sink_n = max_n_flag;
        lim.cycle_oracle_n = std::max(lim.cycle_oracle_n, max_n_flag);
        lim.partition_oracle_n = std::max(lim.partition_oracle_n, max_n_flag);
    }
    if (unlimited) lim.override_limits = true;

    try {
        if (check->parsed()) {
            if (!cond_name.empty() && !bound_name.empty())
                throw param_out_of_domain("use either --cond or --bound, not both");
            if (!cond_name.empty()) return cmd_check_cond(seq_text, cond_name, pf, opt);
            if (!bound_name.empty()) return cmd_check_bound(seq_text, bound_name, pf, opt);
            throw param_out_of_domain("check needs --cond or --bound");
        }
        if (forc->parsed()) return cmd_forcibly(seq_text, prop_name, pf, lim, opt);
        if (verify->parsed()) {
            std::string spec = cond_name;
            // params may come via flags instead of name:value
            auto [c, p0] = parse_cond_spec(spec);
            params p = p0;
            params flag_params = pf.build();
            if (flag_params.k) p.k = flag_params.k;
            if (flag_params.beta) p.beta = flag_params.beta;
            if (flag_params.b) p.b = flag_params.b;
            if (flag_params.t) p.t = flag_params.t;
            std::string rebuilt = row(c).name;
            if (p.k) rebuilt += ":" + std::to_string(*p.k);
            if (p.beta) rebuilt += ":" + std::to_string(*p.beta);
            if (p.b) rebuilt += ":" + p.b->str();
            if (p.t) rebuilt += ":" + p.t->str();
            return cmd_verify(rebuilt, range_text, oracle_max, opt);
        }
        if (sinks_cmd->parsed()) return cmd_sinks(prop_name, pf, n_single, lim, opt);
        if (sweep->parsed()) return cmd_bm_sweep(from_spec, to_spec, range_text, opt);
        if (reg->parsed()) return cmd_registry(opt);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
