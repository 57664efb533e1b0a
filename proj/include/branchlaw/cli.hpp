#pragma once

// Command-line front end. run() is the whole program minus main(), taking
// argv-style arguments and two output streams, so tests can drive every
// subcommand in-process. Exit codes carry I/O status only: 0 = ran, 2 = bad
// input expression or usage, 3 = dimension bookkeeping violated, 1 = other
// domain errors. Mathematical answers (false, zero, none) still exit 0.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "arthur.hpp"
#include "errors.hpp"
#include "ext_indices.hpp"
#include "json_io.hpp"
#include "models.hpp"
#include "recursion.hpp"
#include "relevance.hpp"
#include "speh.hpp"
#include "text.hpp"
#include "verify.hpp"

namespace branchlaw::cli {

namespace detail {

struct Options {
    std::string command;
    std::map<std::string, std::string> values;
    std::set<std::string> switches;
    std::vector<std::string> decls;
    bool json = false;
};

inline bool is_switch(const std::string& name) {
    return name == "json" || name == "witness" || name == "langlands";
}

inline Options parse_args(const std::vector<std::string>& args) {
    Options o;
    std::size_t i = 0;
    if (i < args.size() && args[i].rfind("--", 0) != 0) o.command = args[i++];
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0)
            throw text::ParseError("unexpected positional argument '" + a + "'");
        const std::string name = a.substr(2);
        if (is_switch(name)) {
            o.switches.insert(name);
            if (name == "json") o.json = true;
            continue;
        }
        if (i + 1 >= args.size())
            throw text::ParseError("flag --" + name + " needs a value");
        const std::string& value = args[++i];
        if (name == "decl")
            o.decls.push_back(value);
        else if (!o.values.emplace(name, value).second)
            throw text::ParseError("flag --" + name + " given twice");
    }
    return o;
}

inline const std::string& require(const Options& o, const std::string& name) {
    const auto it = o.values.find(name);
    if (it == o.values.end())
        throw text::ParseError(o.command + " requires --" + name);
    return it->second;
}

inline void reject_unknown(const Options& o, std::initializer_list<const char*> known) {
    for (const auto& [name, value] : o.values) {
        bool ok = false;
        for (const char* k : known)
            if (name == k) ok = true;
        if (!ok) throw text::ParseError("unknown flag --" + name + " for " + o.command);
    }
    for (const std::string& s : o.switches) {
        if (s == "json") continue;
        bool ok = false;
        for (const char* k : known)
            if (s == k) ok = true;
        if (!ok) throw text::ParseError("unknown flag --" + s + " for " + o.command);
    }
}

inline long long parse_int_flag(const Options& o, const std::string& name,
                                long long fallback) {
    const auto it = o.values.find(name);
    if (it == o.values.end()) return fallback;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw text::ParseError("flag --" + name + " needs an integer, got '" +
                               it->second + "'");
    }
}

inline jsonio::Json factor_json(const SpehRep& u) {
    jsonio::JsonObject o;
    o["rho"] = u.rho.name;
    o["m"] = static_cast<std::int64_t>(u.m);
    o["d"] = static_cast<std::int64_t>(u.d);
    o["k"] = static_cast<std::int64_t>(u.k);
    o["twist"] = to_string(u.twist);
    return jsonio::Json(std::move(o));
}

inline jsonio::Json witness_json(const RelevanceWitness& w) {
    jsonio::JsonObject o;
    jsonio::JsonArray p, q, fm, fn;
    for (const auto& [u, v] : w.p_pairs)
        p.push_back(jsonio::Json(jsonio::JsonArray{factor_json(u), factor_json(v)}));
    for (const auto& [u, v] : w.q_pairs)
        q.push_back(jsonio::Json(jsonio::JsonArray{factor_json(u), factor_json(v)}));
    for (const SpehRep& u : w.free_m) fm.push_back(factor_json(u));
    for (const SpehRep& v : w.free_n) fn.push_back(factor_json(v));
    o["p_pairs"] = jsonio::Json(std::move(p));
    o["q_pairs"] = jsonio::Json(std::move(q));
    o["free_m"] = jsonio::Json(std::move(fm));
    o["free_n"] = jsonio::Json(std::move(fn));
    return jsonio::Json(std::move(o));
}

inline text::SymbolTable symbol_table(const Options& o) {
    text::SymbolTable symbols;
    for (const std::string& d : o.decls) symbols.apply_decl(d);
    return symbols;
}

inline int cmd_check(const Options& o, std::ostream& out) {
    reject_unknown(o, {"pm", "pn", "model", "method", "witness"});
    const text::SymbolTable symbols = symbol_table(o);
    models::BranchingProblem p;
    p.big = text::parse_rep(require(o, "pm"), symbols);
    p.small = text::parse_rep(require(o, "pn"), symbols);
    const auto model_it = o.values.find("model");
    p.model = model_it == o.values.end() ? models::ModelSpec{}
                                         : text::parse_model(model_it->second);
    std::string method = "both";
    if (const auto it = o.values.find("method"); it != o.values.end()) method = it->second;
    if (method != "matching" && method != "recursive" && method != "both")
        throw text::ParseError("--method must be matching, recursive, or both");

    models::validate(p);
    const bool want_witness = o.switches.count("witness") > 0;

    std::optional<bool> by_matching, by_recursion;
    std::optional<RelevanceWitness> witness;
    if (method != "recursive" || want_witness) {
        witness = relevant(p.big, p.small);
        by_matching = witness.has_value();
    }
    if (method != "matching") {
        const models::Reduction basic = models::reduce_to_basic(p);
        by_recursion =
            decide_recursive(basic.problem.big, basic.problem.small).relevant;
    }
    if (by_matching && by_recursion && *by_matching != *by_recursion)
        throw std::runtime_error("matching and recursive deciders disagree");
    const bool answer = by_matching ? *by_matching : *by_recursion;

    std::optional<std::int64_t> formula_k;
    if (want_witness && witness.has_value() &&
        p.big.dimension() == p.small.dimension() + 1)
        formula_k = ext_index_formula_check(*witness);

    if (o.json) {
        jsonio::JsonObject j;
        j["command"] = "check";
        j["relevant"] = answer;
        j["method"] = method;
        j["model"] = text::print(p.model);
        if (want_witness)
            j["witness"] = witness.has_value() ? witness_json(*witness)
                                               : jsonio::Json(nullptr);
        if (formula_k) j["formula_k"] = *formula_k;
        out << jsonio::Json(std::move(j)).dump() << "\n";
        return 0;
    }
    out << "relevant: " << (answer ? "true" : "false") << "\n";
    if (want_witness) {
        if (witness.has_value())
            out << "witness: " << witness_json(*witness).dump() << "\n";
        else
            out << "witness: none\n";
    }
    if (formula_k) out << "formula k: " << *formula_k << "\n";
    return 0;
}

inline int cmd_dual(const Options& o, std::ostream& out) {
    reject_unknown(o, {"ms"});
    const text::SymbolTable symbols = symbol_table(o);
    const Multisegment dual =
        zelevinsky_dual(text::parse_multisegment(require(o, "ms"), symbols));
    if (o.json) {
        jsonio::JsonObject j;
        j["command"] = "dual";
        j["dual"] = text::print(dual);
        out << jsonio::Json(std::move(j)).dump() << "\n";
    } else {
        out << text::print(dual) << "\n";
    }
    return 0;
}

inline int cmd_derive(const Options& o, std::ostream& out) {
    reject_unknown(o, {"rep", "order", "side"});
    const text::SymbolTable symbols = symbol_table(o);
    const SpehRep u = text::parse_factor(require(o, "rep"), symbols);
    const long long order = parse_int_flag(o, "order", -1);
    if (o.values.find("order") == o.values.end())
        throw text::ParseError("derive requires --order");
    if (order < 0) throw text::ParseError("--order must be non-negative");
    const std::string& side = require(o, "side");
    if (side != "left" && side != "right")
        throw text::ParseError("--side must be left or right");

    // Orders that are not multiples of the line rank, or exceed the level,
    // give the zero derivative; that is an answer, not an error.
    const bool zero = (order % u.rho.rank) != 0 || order / u.rho.rank > u.m;
    std::optional<SpehDerivative> der;
    if (!zero) {
        const int j = static_cast<int>(order / u.rho.rank);
        der = side == "right" ? speh_right_derivative(u, j) : speh_left_derivative(u, j);
    } else if (u.k != 0) {
        throw std::domain_error("derivatives are undefined for the extended form");
    }

    if (o.json) {
        jsonio::JsonObject j;
        j["command"] = "derive";
        j["zero"] = zero;
        if (der) {
            j["twist"] = to_string(der->twist);
            j["data"] = text::print(der->data);
        }
        out << jsonio::Json(std::move(j)).dump() << "\n";
        return 0;
    }
    if (!der) {
        out << "derivative: 0\n";
    } else {
        out << "twist: " << to_string(der->twist) << "\n";
        out << "data: " << text::print(der->data) << "\n";
    }
    return 0;
}

inline int cmd_data(const Options& o, std::ostream& out) {
    reject_unknown(o, {"rep", "langlands"});
    const text::SymbolTable symbols = symbol_table(o);
    const SpehRep u = text::parse_factor(require(o, "rep"), symbols);
    const bool langlands = o.switches.count("langlands") > 0;
    const Multisegment data = langlands ? langlands_data(u) : zelevinsky_data(u);
    if (o.json) {
        jsonio::JsonObject j;
        j["command"] = "data";
        j["kind"] = langlands ? "langlands" : "zelevinsky";
        j["data"] = text::print(data);
        out << jsonio::Json(std::move(j)).dump() << "\n";
    } else {
        out << "data: " << text::print(data) << "\n";
    }
    return 0;
}

inline int cmd_ext_indices(const Options& o, std::ostream& out) {
    reject_unknown(o, {"pm", "pn"});
    const text::SymbolTable symbols = symbol_table(o);
    const ArthurTypeRep m = text::parse_rep(require(o, "pm"), symbols);
    const ArthurTypeRep n = text::parse_rep(require(o, "pn"), symbols);
    const std::set<std::int64_t> indices = candidate_derivative_indices(m, n);
    if (o.json) {
        jsonio::JsonObject j;
        j["command"] = "ext-indices";
        jsonio::JsonArray arr;
        for (const std::int64_t k : indices) arr.push_back(k);
        j["indices"] = jsonio::Json(std::move(arr));
        out << jsonio::Json(std::move(j)).dump() << "\n";
        return 0;
    }
    out << "indices:";
    if (indices.empty()) out << " none";
    for (const std::int64_t k : indices) out << " " << k;
    out << "\n";
    return 0;
}

inline int cmd_generic_ext_index(const Options& o, std::ostream& out) {
    reject_unknown(o, {"pm", "pn"});
    const text::SymbolTable symbols = symbol_table(o);
    const ArthurTypeRep m = text::parse_rep(require(o, "pm"), symbols);
    const ArthurTypeRep n = text::parse_rep(require(o, "pn"), symbols);
    const std::optional<std::int64_t> index = generic_ext_index(m, n);
    if (o.json) {
        jsonio::JsonObject j;
        j["command"] = "generic-ext-index";
        j["index"] = index ? jsonio::Json(*index) : jsonio::Json(nullptr);
        out << jsonio::Json(std::move(j)).dump() << "\n";
        return 0;
    }
    if (index)
        out << "index: " << *index << "\n";
    else
        out << "index: none\n";
    return 0;
}

inline int cmd_reduce(const Options& o, std::ostream& out) {
    reject_unknown(o, {"model", "pm", "pn"});
    const text::SymbolTable symbols = symbol_table(o);
    models::BranchingProblem p;
    p.big = text::parse_rep(require(o, "pm"), symbols);
    p.small = text::parse_rep(require(o, "pn"), symbols);
    p.model = text::parse_model(require(o, "model"));
    const models::Reduction red = models::reduce_to_basic(p);
    if (o.json) {
        jsonio::JsonObject j;
        j["command"] = "reduce";
        j["model"] = text::print(red.problem.model);
        j["big"] = text::print(red.problem.big);
        j["small"] = text::print(red.problem.small);
        jsonio::JsonArray trace;
        for (const models::ReductionStep& s : red.trace) {
            jsonio::JsonObject step;
            step["rule"] = s.rule;
            step["note"] = s.note;
            trace.push_back(jsonio::Json(std::move(step)));
        }
        j["trace"] = jsonio::Json(std::move(trace));
        out << jsonio::Json(std::move(j)).dump() << "\n";
        return 0;
    }
    out << "model: " << text::print(red.problem.model) << "\n";
    out << "big: " << text::print(red.problem.big) << "\n";
    out << "small: " << text::print(red.problem.small) << "\n";
    for (const models::ReductionStep& s : red.trace) {
        out << "step: " << s.rule << "\n";
        out << "  " << s.note << "\n";
    }
    return 0;
}

inline int default_jobs() {
    if (const char* env = std::getenv("BRANCHLAW_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
    reject_unknown(o, {"max-dim", "out", "jobs", "suite"});
    std::string suite = "equivalence";
    if (const auto it = o.values.find("suite"); it != o.values.end()) suite = it->second;
    if (suite != "equivalence" && suite != "involution" && suite != "all")
        throw text::ParseError("--suite must be equivalence, involution, or all");
    const long long max_dim = parse_int_flag(o, "max-dim", 6);
    if (max_dim < 0) throw text::ParseError("--max-dim must be non-negative");
    const long long jobs = parse_int_flag(o, "jobs", default_jobs());
    if (jobs < 1) throw text::ParseError("--jobs must be at least 1");

    jsonio::JsonObject j;
    j["command"] = "enumerate";
    j["suite"] = suite;
    std::string text_summary;

    if (suite == "equivalence" || suite == "all") {
        verify::EnumerationConfig cfg;
        cfg.max_big_dim = max_dim;
        cfg.parallelism = static_cast<int>(jobs);
        const verify::EnumerationReport report = verify::run_equivalence_suite(cfg);
        if (const auto it = o.values.find("out"); it != o.values.end()) {
            std::ofstream file(it->second);
            if (!file) throw std::runtime_error("cannot open output file: " + it->second);
            verify::write_jsonl(report, file);
            j["out"] = it->second;
        }
        j["equivalence"] = verify::aggregate_json(report);
        text_summary += "instances: " + std::to_string(report.total) + "\n";
        text_summary += "relevant: " + std::to_string(report.relevant_count) + "\n";
        text_summary +=
            std::string("equivalence ok: ") + (report.all_ok() ? "true" : "false") + "\n";
    }
    if (suite == "involution" || suite == "all") {
        verify::InvolutionConfig icfg;
        const verify::InvolutionReport ireport = verify::run_involution_suite(icfg);
        j["involution"] = verify::to_json(ireport);
        text_summary += "multisegments: " + std::to_string(ireport.multisegments_checked) + "\n";
        text_summary +=
            std::string("involution ok: ") + (ireport.all_ok() ? "true" : "false") + "\n";
    }

    if (o.json)
        out << jsonio::Json(std::move(j)).dump() << "\n";
    else
        out << text_summary;
    return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    detail::Options o;
    try {
        o = detail::parse_args(args);
        if (o.command.empty())
            throw text::ParseError(
                "usage: branchlaw <check|dual|derive|data|ext-indices|"
                "generic-ext-index|reduce|enumerate> [flags]");
        if (o.command == "check") return detail::cmd_check(o, out);
        if (o.command == "dual") return detail::cmd_dual(o, out);
        if (o.command == "derive") return detail::cmd_derive(o, out);
        if (o.command == "data") return detail::cmd_data(o, out);
        if (o.command == "ext-indices") return detail::cmd_ext_indices(o, out);
        if (o.command == "generic-ext-index") return detail::cmd_generic_ext_index(o, out);
        if (o.command == "reduce") return detail::cmd_reduce(o, out);
        if (o.command == "enumerate") return detail::cmd_enumerate(o, out);
        throw text::ParseError("unknown command '" + o.command + "'");
    } catch (const std::exception& e) {
        const char* kind = "domain";
        int code = 1;
        if (dynamic_cast<const text::ParseError*>(&e)) {
            kind = "parse";
            code = 2;
        } else if (dynamic_cast<const DimensionError*>(&e)) {
            kind = "dimension";
            code = 3;
        }
        if (o.json) {
            jsonio::JsonObject j;
            j["command"] = o.command.empty() ? "none" : o.command;
            jsonio::JsonObject detail;
            detail["kind"] = kind;
            detail["message"] = e.what();
            j["error"] = jsonio::Json(std::move(detail));
            out << jsonio::Json(std::move(j)).dump() << "\n";
        }
        err << kind << " error: " << e.what() << "\n";
        return code;
    }
}

}  // namespace branchlaw::cli
