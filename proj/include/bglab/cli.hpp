#ifndef BGLAB_CLI_HPP
#define BGLAB_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bglab/json_io.hpp"

namespace bglab {

namespace cli_detail {

struct Overrides {
    std::optional<long> seed, box, range;
    std::optional<int> precision, threads;
};

inline long get_long(const json &params, const char *key, const std::optional<long> &ov, long defv) {
    if (ov) return *ov;
    if (params.contains(key)) return params[key].get<long>();
    return defv;
}

inline int get_int(const json &params, const char *key, const std::optional<int> &ov, int defv) {
    if (ov) return *ov;
    if (params.contains(key)) return params[key].get<int>();
    return defv;
}

struct Experiment {
    NumberField field;
    std::map<std::string, NFMatrix> matrices;
    json params;
    json raw;
};

inline Experiment load_experiment(const json &spec) {
    Experiment e;
    e.raw = spec;
    e.field = spec.contains("field") ? field_from_json(spec["field"]) : nf_rationals();
    if (spec.contains("matrices")) {
        for (auto it = spec["matrices"].begin(); it != spec["matrices"].end(); ++it)
            e.matrices.emplace(it.key(), matrix_from_json(it.value(), e.field));
    }
    e.params = spec.contains("params") ? spec["params"] : json::object();
    return e;
}

inline const NFMatrix &named_matrix(const Experiment &e, const std::string &name) {
    auto it = e.matrices.find(name);
    if (it == e.matrices.end()) throw err_parse("matrix reference does not resolve: " + name);
    return it->second;
}

inline std::vector<NFMatrix> named_matrices(const Experiment &e, const json &names) {
    std::vector<NFMatrix> out;
    for (const auto &n : names) out.push_back(named_matrix(e, n.get<std::string>()));
    return out;
}

inline std::vector<NFElem> elem_list(const json &j, const NumberField &f) {
    std::vector<NFElem> out;
    for (const auto &x : j) out.push_back(nfelem_from_json(x, f));
    return out;
}

// Compact polynomial form: plain rational strings whenever every coefficient
// is rational, full coefficient vectors otherwise.
inline json upoly_nfelem_compact(const UPoly<NFElem> &f) {
    bool rational = true;
    for (const auto &c : f.coeffs)
        if (!c.is_rational()) { rational = false; break; }
    json arr = json::array();
    if (rational) {
        for (const auto &c : f.coeffs) arr.push_back(rat_to_string(c.rat_value()));
    } else {
        for (const auto &c : f.coeffs) arr.push_back(nfelem_to_json(c));
    }
    return arr;
}

inline json wrap(const std::string &command, const json &spec, const json &report) {
    return json{{"command", command}, {"inputs", spec}, {"report", report}};
}

// ---- command handlers ----

inline json cmd_analyze(const Experiment &e) {
    const NFMatrix &m = named_matrix(e, e.params.at("matrix").get<std::string>());
    json rep;
    rep["semisimple"] = is_semisimple(m);
    rep["minpoly"] = upoly_nfelem_compact(minpoly(m));
    rep["charpoly"] = upoly_nfelem_compact(charpoly(m));
    try {
        std::vector<NFElem> cands;
        if (e.params.contains("candidates")) cands = elem_list(e.params["candidates"], e.field);
        EigenData ed = eigenvalues_in_field(m, cands);
        json ev = json::array();
        for (const auto &l : ed.eigenvalues) ev.push_back(nfelem_to_json(l));
        rep["eigenvalues"] = ev;
        rep["diagonalizer"] = ed.diagonalizer ? matrix_to_json(*ed.diagonalizer) : json(nullptr);
    } catch (const NotSplitError &) {
        rep["eigenvalues"] = nullptr;
        rep["diagonalizer"] = nullptr;
    }
    return rep;
}

inline json cmd_decompose(const Experiment &e) {
    const NFMatrix &m = named_matrix(e, e.params.at("matrix").get<std::string>());
    JordanPair jp = jordan_chevalley(m);
    return json{{"semisimple_part", matrix_to_json(jp.semisimple_part)},
                {"unipotent_part", matrix_to_json(jp.unipotent_part)}};
}

inline json cmd_relations(const Experiment &e, const Overrides &ov) {
    MultGroup g = make_mult_group(e.field, elem_list(e.params.at("group"), e.field));
    long box = get_long(e.params, "box", ov.box, 4);
    int prec = get_int(e.params, "precision", ov.precision, 64);
    return lattice_to_json(relation_lattice(g, box, prec));
}

inline json cmd_independent(const Experiment &e, const Overrides &ov) {
    NFElem lambda = nfelem_from_json(e.params.at("lambda"), e.field);
    MultGroup g = make_mult_group(e.field, elem_list(e.params.at("group"), e.field));
    long box = get_long(e.params, "box", ov.box, 4);
    int prec = get_int(e.params, "precision", ov.precision, 64);
    return verdict_to_json(is_multiplicatively_independent(lambda, g, box, prec));
}

inline json cmd_resultant(const Experiment &e) {
    MPoly q = mpoly_from_json(e.params.at("q"), e.field);
    MPoly pt = mpoly_from_json(e.params.at("p_tilde"), e.field);
    return json{{"f", mpoly_to_json(resultant_z(q, pt))}};
}

inline json cmd_membership(const Experiment &e, const Overrides &ov) {
    const NFMatrix &gamma = named_matrix(e, e.params.at("gamma").get<std::string>());
    std::vector<NFMatrix> gens = named_matrices(e, e.params.at("gens"));
    long range = get_long(e.params, "range", ov.range, 8);
    long box = get_long(e.params, "box", ov.box, 8);
    int threads = get_int(e.params, "threads", ov.threads, 1);
    return jreport_to_json(compute_J(gamma, gens, range, box, threads));
}

inline json cmd_laurent(const Experiment &e, const Overrides &ov) {
    MPoly f = mpoly_from_json(e.params.at("f"), e.field);
    NFElem mu = nfelem_from_json(e.params.at("mu"), e.field);
    std::vector<NFElem> mu_list = elem_list(e.params.at("mu_list"), e.field);
    long range = get_long(e.params, "range", ov.range, 8);
    long box = get_long(e.params, "box", ov.box, 8);
    return mreport_to_json(laurent_enumerate(f, mu, mu_list, range, box));
}

inline std::pair<json, int> cmd_pipeline(const Experiment &e, const Overrides &ov) {
    const NFMatrix &gamma = named_matrix(e, e.params.at("gamma").get<std::string>());
    std::vector<NFMatrix> gens = named_matrices(e, e.params.at("gens"));
    std::optional<NFElem> hint;
    if (e.params.contains("lambda_hint") && !e.params["lambda_hint"].is_null())
        hint = nfelem_from_json(e.params["lambda_hint"], e.field);
    std::vector<NFElem> cands;
    if (e.params.contains("candidates")) cands = elem_list(e.params["candidates"], e.field);
    long range = get_long(e.params, "range", ov.range, 10);
    long box = get_long(e.params, "box", ov.box, 10);
    int prec = get_int(e.params, "precision", ov.precision, 64);
    int threads = get_int(e.params, "threads", ov.threads, 1);
    ObstructionCertificate cert = theorem41_pipeline(gamma, gens, hint, range, box, cands, prec, threads);
    int code = cert.conclusion == Conclusion::hypothesis_violated ? 2 : 0;
    return {certificate_to_json(cert), code};
}

inline json cmd_specialize(const Experiment &e, const Overrides &ov) {
    NumberField q = nf_rationals();
    std::vector<RatFuncMatrix> mats;
    for (const auto &m : e.params.at("func_matrices")) mats.push_back(ratfunc_matrix_from_json(m, q));
    RatF witness = ratf_from_json(e.params.at("witness"), q);
    unsigned long seed = static_cast<unsigned long>(get_long(e.params, "seed", ov.seed, 1));
    long tries = get_long(e.params, "max_tries", std::nullopt, 500);
    return specialization_to_json(specialize(mats, witness, seed, tries));
}

inline json cmd_solvable(const Experiment &e, const Overrides &ov) {
    std::vector<NFMatrix> gens = named_matrices(e, e.params.at("gens"));
    long ell = get_long(e.params, "ell", std::nullopt, 2);
    int depth = get_int(e.params, "depth", std::nullopt, static_cast<int>(gens[0].dim()) + 1);
    long budget = get_long(e.params, "budget", std::nullopt, 500);
    unsigned long seed = static_cast<unsigned long>(get_long(e.params, "seed", ov.seed, 1));
    auto w = derived_depth_witness(gens, ell, depth, budget, seed);
    json rep;
    rep["found"] = w.has_value();
    rep["witness"] = w ? solvability_witness_to_json(*w) : json(nullptr);
    return rep;
}

inline json cmd_hunt(const Experiment &e, const Overrides &ov) {
    std::vector<NFMatrix> gens = named_matrices(e, e.params.at("gens"));
    std::vector<NFMatrix> opps = named_matrices(e, e.params.at("opponents"));
    long budget = get_long(e.params, "budget", std::nullopt, 200);
    unsigned long seed = static_cast<unsigned long>(get_long(e.params, "seed", ov.seed, 1));
    long box = get_long(e.params, "box", ov.box, 6);
    std::vector<NFElem> cands;
    if (e.params.contains("candidates")) cands = elem_list(e.params["candidates"], e.field);
    HuntResult r = generic_hunt(gens, opps, budget, seed, box, cands);
    json rep;
    rep["found"] = r.word.has_value();
    rep["word"] = r.word ? word_to_json(*r.word) : json(nullptr);
    rep["element"] = r.element ? matrix_to_json(*r.element) : json(nullptr);
    rep["verdict"] = r.verdict ? verdict_to_json(*r.verdict) : json(nullptr);
    rep["attempts"] = r.attempts;
    rep["skipped_nonsplit"] = r.skipped_nonsplit;
    return rep;
}

inline json cmd_genericity(const Experiment &e) {
    const NFMatrix &m = named_matrix(e, e.params.at("matrix").get<std::string>());
    int budget = e.params.contains("primes_budget") ? e.params["primes_budget"].get<int>() : 8;
    return genericity_to_json(genericity_heuristic(m, budget));
}

// ---- verification of emitted reports ----

inline bool verify_report(const json &doc, std::ostream &errs) {
    if (!doc.contains("command") || !doc.contains("inputs") || !doc.contains("report")) {
        errs << "not a bglab report\n";
        return false;
    }
    const std::string command = doc["command"].get<std::string>();
    Experiment e = load_experiment(doc["inputs"]);
    const json &rep = doc["report"];

    auto power_product = [](const std::vector<NFElem> &gens, const IntVec &exps) {
        NFElem acc = NFElem::one(gens[0].field());
        for (size_t i = 0; i < gens.size(); ++i)
            if (exps[i] != 0) acc = acc * gens[i].pow(exps[i].get_si());
        return acc;
    };

    if (command == "relations" || command == "independent") {
        std::vector<NFElem> gens;
        if (command == "independent")
            gens.push_back(nfelem_from_json(e.params.at("lambda"), e.field));
        for (const auto &x : e.params.at("group")) gens.push_back(nfelem_from_json(x, e.field));
        const json &lat = command == "relations" ? rep : rep["lattice"];
        for (const auto &row : lat["basis"]) {
            IntVec v = intvec_from_json(row);
            if (!is_one(power_product(gens, v))) {
                errs << "basis vector fails exact verification\n";
                return false;
            }
        }
        if (command == "independent" && !rep["witness"].is_null()) {
            IntVec w = intvec_from_json(rep["witness"]);
            if (w[0] == 0 || !is_one(power_product(gens, w))) {
                errs << "dependence witness fails\n";
                return false;
            }
        }
        return true;
    }
    if (command == "membership") {
        const NFMatrix &gamma = named_matrix(e, e.params.at("gamma").get<std::string>());
        std::vector<NFMatrix> gens = named_matrices(e, e.params.at("gens"));
        for (const auto &w : rep["witnesses"]) {
            long m = w["m"].get<long>();
            std::vector<long> a = w["exponents"].get<std::vector<long>>();
            NFMatrix prod = NFMatrix::identity(gamma.field(), gamma.dim());
            for (size_t i = 0; i < gens.size(); ++i) prod = prod * nf_pow(gens[i], a[i]);
            if (prod != nf_pow(gamma, m)) {
                errs << "membership witness fails at m=" << m << "\n";
                return false;
            }
        }
        return true;
    }
    if (command == "laurent") {
        MPoly f = mpoly_from_json(e.params.at("f"), e.field);
        NFElem mu = nfelem_from_json(e.params.at("mu"), e.field);
        std::vector<NFElem> mu_list = elem_list(e.params.at("mu_list"), e.field);
        std::vector<MPoly> xc = collect_var(f, 0);
        for (const auto &s : rep["solutions"]) {
            long m = s["m"].get<long>();
            std::vector<long> a = s["exponents"].get<std::vector<long>>();
            std::vector<NFElem> assign{mu.pow(m)};
            for (size_t i = 0; i < mu_list.size(); ++i) assign.push_back(mu_list[i].pow(a[i]));
            if (!mpoly_eval(f, assign).is_zero_elem()) {
                errs << "laurent solution does not vanish at m=" << m << "\n";
                return false;
            }
            bool nonconst = false;
            for (size_t k = 1; k < xc.size(); ++k)
                if (!mpoly_eval(xc[k], assign).is_zero_elem()) nonconst = true;
            if (!nonconst) {
                errs << "laurent solution violates non-constancy at m=" << m << "\n";
                return false;
            }
        }
        return true;
    }
    if (command == "pipeline") {
        NFMatrix gamma = matrix_from_json(rep["gamma"], e.field);
        std::vector<NFMatrix> gens;
        for (const auto &g : rep["gens"]) gens.push_back(matrix_from_json(g, e.field));
        NFElem lambda = nfelem_from_json(rep["lambda"], e.field);
        if (!upoly_eval(charpoly(gamma), lambda).is_zero_elem()) {
            errs << "lambda is not an eigenvalue of gamma\n";
            return false;
        }
        std::vector<NFElem> merged{lambda};
        for (const auto &x : rep["lambda_group"]) merged.push_back(nfelem_from_json(x, e.field));
        for (const auto &row : rep["independence"]["lattice"]["basis"]) {
            if (!is_one(power_product(merged, intvec_from_json(row)))) {
                errs << "lattice basis vector fails\n";
                return false;
            }
        }
        for (const auto &w : rep["j_scan"]["witnesses"]) {
            long m = w["m"].get<long>();
            std::vector<long> a = w["exponents"].get<std::vector<long>>();
            NFMatrix prod = NFMatrix::identity(gamma.field(), gamma.dim());
            for (size_t i = 0; i < gens.size(); ++i) prod = prod * nf_pow(gens[i], a[i]);
            if (prod != nf_pow(gamma, m)) {
                errs << "membership witness fails at m=" << m << "\n";
                return false;
            }
        }
        return true;
    }
    if (command == "decompose") {
        const NFMatrix &m = named_matrix(e, e.params.at("matrix").get<std::string>());
        NFMatrix sigma = matrix_from_json(rep["semisimple_part"], e.field);
        NFMatrix upsilon = matrix_from_json(rep["unipotent_part"], e.field);
        if (sigma * upsilon != m || upsilon * sigma != m || !is_semisimple(sigma) || !is_unipotent(upsilon)) {
            errs << "jordan pair fails verification\n";
            return false;
        }
        return true;
    }
    if (command == "solvable") {
        if (!rep["found"].get<bool>()) return true; // absence carries no certificate
        std::vector<NFMatrix> gens = named_matrices(e, e.params.at("gens"));
        GroupWord w = word_from_json(rep["witness"]["word"]);
        NFMatrix el = matrix_from_json(rep["witness"]["element"], e.field);
        NFMatrix replay = eval_word(w, gens, invert_all(gens));
        if (replay != el || el.is_identity()) {
            errs << "solvability witness fails replay\n";
            return false;
        }
        return true;
    }
    if (command == "hunt") {
        if (!rep["found"].get<bool>()) return true;
        std::vector<NFMatrix> gens = named_matrices(e, e.params.at("gens"));
        GroupWord w = word_from_json(rep["word"]);
        NFMatrix el = matrix_from_json(rep["element"], e.field);
        if (eval_word(w, gens, invert_all(gens)) != el) {
            errs << "hunt word fails replay\n";
            return false;
        }
        return true;
    }
    if (command == "specialize") {
        NumberField q = nf_rationals();
        std::vector<Rat> point;
        for (const auto &x : rep["point"]) point.push_back(rat_from_json(x));
        for (const auto &p : rep["avoided"]) {
            MPoly poly = mpoly_from_json(p, q);
            if (bglab::is_zero(detail::eval_mpoly_at_rats(poly, point))) {
                errs << "avoided polynomial vanishes at the recorded point\n";
                return false;
            }
        }
        return true;
    }
    if (command == "analyze" || command == "genericity" || command == "resultant") {
        // Deterministic recomputation.
        json again;
        if (command == "analyze") again = cmd_analyze(e);
        else if (command == "genericity") again = cmd_genericity(e);
        else again = cmd_resultant(e);
        if (again != rep) {
            errs << "recomputation differs from report\n";
            return false;
        }
        return true;
    }
    errs << "unknown command in report: " << command << "\n";
    return false;
}

} // namespace cli_detail

// Runs the command line; returns the process exit code.  All JSON output on
// `out`, machine-readable errors on `errs`.
inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &errs) {
    CLI::App app{"bounded-generation laboratory: exact experiments on products of cyclic matrix groups"};
    app.require_subcommand(0, 1);

    std::string input, verify_path;
    long seed = 0, box = 0, range = 0;
    int precision = 0, threads = 0;
    app.add_option("--verify", verify_path, "re-verify a previously emitted report");

    const std::vector<std::string> commands = {"analyze",    "decompose", "relations", "independent",
                                               "resultant",  "membership", "laurent",  "pipeline",
                                               "specialize", "solvable",  "hunt",      "genericity"};
    std::map<std::string, CLI::App *> subs;
    for (const auto &name : commands) {
        CLI::App *sub = app.add_subcommand(name);
        sub->add_option("--input", input, "experiment spec: a file path or inline JSON");
        sub->add_option("--seed", seed);
        sub->add_option("--box", box);
        sub->add_option("--range", range);
        sub->add_option("--precision", precision);
        sub->add_option("--threads", threads);
        subs[name] = sub;
    }

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end()); // CLI11 parses reversed vectors
    try {
        app.parse(argv);
    } catch (const CLI::ParseError &ex) {
        if (app.exit(ex, out, errs) == 0) return 0;
        errs << json{{"code", "parse"}, {"message", ex.what()}}.dump() << "\n";
        return 1;
    }

    try {
        if (!verify_path.empty()) {
            std::ifstream in(verify_path);
            if (!in) throw err_parse("cannot open report: " + verify_path);
            json doc = json::parse(in, nullptr, true);
            bool ok = cli_detail::verify_report(doc, errs);
            out << json{{"verified", ok}}.dump(2) << "\n";
            return ok ? 0 : 1;
        }

        std::string chosen;
        for (const auto &name : commands)
            if (subs[name]->parsed()) chosen = name;
        if (chosen.empty()) {
            errs << json{{"code", "parse"}, {"message", "no subcommand given"}}.dump() << "\n";
            return 1;
        }

        json spec;
        if (input.empty()) {
            spec = json::object();
        } else if (!input.empty() && input.front() == '{') {
            spec = json::parse(input);
        } else {
            std::ifstream in(input);
            if (!in) throw err_parse("cannot open input: " + input);
            spec = json::parse(in);
        }

        cli_detail::Overrides ov;
        if (subs[chosen]->count("--seed")) ov.seed = seed;
        if (subs[chosen]->count("--box")) ov.box = box;
        if (subs[chosen]->count("--range")) ov.range = range;
        if (subs[chosen]->count("--precision")) ov.precision = precision;
        if (subs[chosen]->count("--threads")) ov.threads = threads;

        cli_detail::Experiment e = cli_detail::load_experiment(spec);
        json report;
        int code = 0;
        if (chosen == "analyze") report = cli_detail::cmd_analyze(e);
        else if (chosen == "decompose") report = cli_detail::cmd_decompose(e);
        else if (chosen == "relations") report = cli_detail::cmd_relations(e, ov);
        else if (chosen == "independent") report = cli_detail::cmd_independent(e, ov);
        else if (chosen == "resultant") report = cli_detail::cmd_resultant(e);
        else if (chosen == "membership") report = cli_detail::cmd_membership(e, ov);
        else if (chosen == "laurent") report = cli_detail::cmd_laurent(e, ov);
        else if (chosen == "pipeline") std::tie(report, code) = cli_detail::cmd_pipeline(e, ov);
        else if (chosen == "specialize") report = cli_detail::cmd_specialize(e, ov);
        else if (chosen == "solvable") report = cli_detail::cmd_solvable(e, ov);
        else if (chosen == "hunt") report = cli_detail::cmd_hunt(e, ov);
        else if (chosen == "genericity") report = cli_detail::cmd_genericity(e);

        out << cli_detail::wrap(chosen, spec, report).dump(2) << "\n";
        return code;
    } catch (const json::exception &ex) {
        errs << json{{"code", "parse"}, {"message", ex.what()}}.dump() << "\n";
        return 1;
    } catch (const Error &ex) {
        errs << json{{"code", ex.code()}, {"message", ex.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception &ex) {
        errs << json{{"code", "internal"}, {"message", ex.what()}}.dump() << "\n";
        return 1;
    }
}

} // namespace bglab

#endif
