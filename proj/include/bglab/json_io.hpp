#ifndef BGLAB_JSON_IO_HPP
#define BGLAB_JSON_IO_HPP

#include <json.hpp>

#include "bglab/genericity.hpp"
#include "bglab/hunt.hpp"
#include "bglab/pipeline.hpp"
#include "bglab/ratfunc.hpp"
#include "bglab/solvability.hpp"

namespace bglab {

using json = nlohmann::json;

// ---- rationals and polynomials over Q ----

inline json rat_to_json(const Rat &r) { return rat_to_string(r); }

inline Rat rat_from_json(const json &j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw err_parse("expected rational as string or integer");
}

inline json upoly_rat_to_json(const UPoly<Rat> &f) {
    json arr = json::array();
    for (const auto &c : f.coeffs) arr.push_back(rat_to_json(c));
    return arr;
}

inline UPoly<Rat> upoly_rat_from_json(const json &j) {
    if (!j.is_array()) throw err_parse("polynomial must be a coefficient array");
    UPoly<Rat> f;
    for (const auto &c : j) f.coeffs.push_back(rat_from_json(c));
    f.normalize();
    return f;
}

inline json field_to_json(const NumberField &f) { return json{{"minpoly", upoly_rat_to_json(f.minpoly())}}; }

inline NumberField field_from_json(const json &j) {
    if (!j.is_object() || !j.contains("minpoly")) throw err_parse("field needs a minpoly");
    return nf_new(upoly_rat_from_json(j["minpoly"]));
}

// ---- field elements and matrices ----

inline json nfelem_to_json(const NFElem &x) {
    json arr = json::array();
    for (const auto &c : x.coeffs()) arr.push_back(rat_to_json(c));
    return arr;
}

inline NFElem nfelem_from_json(const json &j, const NumberField &field) {
    if (j.is_string() || j.is_number_integer())
        return NFElem::from_rat(field, rat_from_json(j));
    if (!j.is_array()) throw err_parse("field element must be a coefficient array");
    std::vector<Rat> c;
    for (const auto &x : j) c.push_back(rat_from_json(x));
    c.resize(field.degree(), Rat(0));
    return NFElem(field, std::move(c));
}

inline json matrix_to_json(const NFMatrix &m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(nfelem_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"n", m.dim()}, {"entries", rows}};
}

inline NFMatrix matrix_from_json(const json &j, const NumberField &field) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw err_parse("matrix needs n and entries");
    int n = j["n"].get<int>();
    std::vector<NFElem> e;
    for (const auto &row : j["entries"])
        for (const auto &x : row) e.push_back(nfelem_from_json(x, field));
    if (static_cast<int>(e.size()) != n * n) throw err_parse("matrix entry count mismatch");
    return NFMatrix(field, n, std::move(e));
}

inline json upoly_nfelem_to_json(const UPoly<NFElem> &f) {
    json arr = json::array();
    for (const auto &c : f.coeffs) arr.push_back(nfelem_to_json(c));
    return arr;
}

// ---- multivariate polynomials ----

inline json mpoly_to_json(const MPoly &p) {
    json terms = json::array();
    for (const auto &[e, c] : p.terms) {
        json t;
        t["exp"] = e;
        t["coef"] = nfelem_to_json(c);
        terms.push_back(t);
    }
    return json{{"vars", p.vars}, {"terms", terms}};
}

inline MPoly mpoly_from_json(const json &j, const NumberField &field) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw err_parse("mpoly needs vars and terms");
    MPoly p = mpoly_zero(field, j["vars"].get<std::vector<std::string>>());
    for (const auto &t : j["terms"]) {
        std::vector<int> e = t["exp"].get<std::vector<int>>();
        if (e.size() != p.vars.size()) throw err_parse("term exponent length mismatch");
        p.insert_term(std::move(e), nfelem_from_json(t["coef"], field));
    }
    return p;
}

// ---- lattices and verdicts ----

inline json intvec_to_json(const IntVec &v) {
    json arr = json::array();
    for (const auto &x : v) {
        if (!x.fits_slong_p()) throw err_internal("lattice entry too large for JSON");
        arr.push_back(x.get_si());
    }
    return arr;
}

inline IntVec intvec_from_json(const json &j) {
    IntVec v;
    for (const auto &x : j) v.push_back(Int(x.get<long>()));
    return v;
}

inline json lattice_to_json(const RelationLattice &l) {
    json basis = json::array();
    for (const auto &row : l.basis) basis.push_back(intvec_to_json(row));
    return json{{"basis", basis},
                {"box", l.search_box},
                {"status", lattice_status_name(l.status)},
                {"num_generators", l.num_generators}};
}

inline RelationLattice lattice_from_json(const json &j) {
    RelationLattice l;
    l.search_box = j["box"].get<long>();
    l.num_generators = j["num_generators"].get<int>();
    l.status = j["status"].get<std::string>() == "verified-within-box"
                   ? LatticeStatus::verified_within_box
                   : LatticeStatus::lll_proposed_and_verified;
    for (const auto &row : j["basis"]) l.basis.push_back(intvec_from_json(row));
    return l;
}

inline json verdict_to_json(const IndependenceVerdict &v) {
    json j;
    j["independent"] = independence_name(v.independent);
    j["witness"] = v.witness ? intvec_to_json(*v.witness) : json(nullptr);
    j["lattice"] = lattice_to_json(v.lattice);
    return j;
}

inline IndependenceVerdict verdict_from_json(const json &j) {
    IndependenceVerdict v;
    std::string s = j["independent"].get<std::string>();
    v.independent = s == "yes" ? Independence::yes
                               : (s == "no" ? Independence::no : Independence::unknown_within_box);
    if (!j["witness"].is_null()) v.witness = intvec_from_json(j["witness"]);
    v.lattice = lattice_from_json(j["lattice"]);
    return v;
}

// ---- reports ----

inline json jreport_to_json(const JReport &r) {
    json ws = json::array();
    for (const auto &w : r.witnesses) ws.push_back(json{{"m", w.m}, {"exponents", w.exponents}});
    return json{{"range", r.m_range},
                {"box", r.exponent_box},
                {"witnesses", ws},
                {"complete_within_budget", r.complete_within_budget}};
}

inline JReport jreport_from_json(const json &j) {
    JReport r;
    r.m_range = j["range"].get<long>();
    r.exponent_box = j["box"].get<long>();
    r.complete_within_budget = j["complete_within_budget"].get<bool>();
    for (const auto &w : j["witnesses"]) {
        MembershipWitness mw;
        mw.m = w["m"].get<long>();
        mw.exponents = w["exponents"].get<std::vector<long>>();
        r.witnesses.push_back(std::move(mw));
    }
    return r;
}

inline json mreport_to_json(const MReport &r) {
    json sols = json::array();
    for (const auto &[m, a] : r.solutions) sols.push_back(json{{"m", m}, {"exponents", a}});
    return json{{"range", r.m_range},
                {"box", r.exponent_box},
                {"solutions", sols},
                {"difference_analysis", r.difference_analysis}};
}

inline MReport mreport_from_json(const json &j) {
    MReport r;
    r.m_range = j["range"].get<long>();
    r.exponent_box = j["box"].get<long>();
    for (const auto &s : j["solutions"])
        r.solutions.emplace_back(s["m"].get<long>(), s["exponents"].get<std::vector<long>>());
    for (const auto &d : j["difference_analysis"]) r.difference_analysis.push_back(d.get<std::vector<long>>());
    return r;
}

inline json truncation_to_json(const TruncationSelection &t) {
    json tallies = json::array();
    for (const auto &x : t.tallies)
        tallies.push_back(json{{"alpha", x.alpha}, {"beta", x.beta}, {"k", x.k}, {"nonzero_count", x.nonzero_count}});
    return json{{"alpha", t.choice.alpha}, {"beta", t.choice.beta}, {"t", t.choice.t}, {"tallies", tallies}};
}

inline json certificate_to_json(const ObstructionCertificate &c) {
    json j;
    j["case"] = pipeline_case_name(c.case_kind);
    j["lambda"] = nfelem_to_json(c.lambda);
    j["torsion"] = c.torsion ? json(*c.torsion) : json(nullptr);
    j["independence"] = verdict_to_json(c.independence);
    json lg = json::array();
    for (const auto &g : c.lambda_group) lg.push_back(nfelem_to_json(g));
    j["lambda_group"] = lg;
    j["f"] = mpoly_to_json(c.constructed_f);
    j["truncation"] = c.truncation ? truncation_to_json(*c.truncation) : json(nullptr);
    j["j_scan"] = jreport_to_json(c.j_scan);
    j["conclusion"] = conclusion_name(c.conclusion);
    j["gamma"] = matrix_to_json(c.gamma);
    json gens = json::array();
    for (const auto &g : c.gens) gens.push_back(matrix_to_json(g));
    j["gens"] = gens;
    json ext = json::array();
    for (const auto &g : c.extended_gens) ext.push_back(matrix_to_json(g));
    j["extended_gens"] = ext;
    json ge = json::array();
    for (const auto &ev : c.gen_eigenvalues) {
        json one = json::array();
        for (const auto &l : ev) one.push_back(nfelem_to_json(l));
        ge.push_back(one);
    }
    j["gen_eigenvalues"] = ge;
    j["unipotent_slot"] = c.unipotent_slot;
    j["range"] = c.m_range;
    j["box"] = c.box;
    j["precision"] = c.precision_bits;
    return j;
}

// ---- group words and solvability witnesses ----

inline json word_to_json(const GroupWord &w) {
    json arr = json::array();
    for (const auto &l : w.letters) arr.push_back(json::array({l.gen, l.exp}));
    return arr;
}

inline GroupWord word_from_json(const json &j) {
    GroupWord w;
    for (const auto &l : j) w.push(l[0].get<int>(), l[1].get<int>());
    return w;
}

inline json comm_tree_to_json(const CommTree &t) {
    if (t.is_leaf) return json{{"kind", "power"}, {"word", word_to_json(t.base)}, {"ell", t.ell}};
    return json{{"kind", "comm"}, {"left", comm_tree_to_json(*t.left)}, {"right", comm_tree_to_json(*t.right)}};
}

inline std::shared_ptr<CommTree> comm_tree_from_json(const json &j) {
    auto t = std::make_shared<CommTree>();
    if (j["kind"].get<std::string>() == "power") {
        t->is_leaf = true;
        t->base = word_from_json(j["word"]);
        t->ell = j["ell"].get<long>();
    } else {
        t->is_leaf = false;
        t->left = comm_tree_from_json(j["left"]);
        t->right = comm_tree_from_json(j["right"]);
    }
    return t;
}

inline json solvability_witness_to_json(const SolvabilityWitness &w) {
    return json{{"word", word_to_json(w.word)},
                {"depth", w.depth},
                {"ell", w.ell},
                {"element", matrix_to_json(w.element)},
                {"tree", comm_tree_to_json(*w.tree)}};
}

// ---- rational functions ----

inline json ratf_to_json(const RatF &f) {
    return json{{"num", mpoly_to_json(f.num)}, {"den", mpoly_to_json(f.den)}};
}

inline RatF ratf_from_json(const json &j, const NumberField &q) {
    return RatF(mpoly_from_json(j["num"], q), mpoly_from_json(j["den"], q));
}

inline json ratfunc_matrix_to_json(const RatFuncMatrix &m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.n; ++j2) row.push_back(ratf_to_json(m.at(i, j2)));
        rows.push_back(row);
    }
    return json{{"variables", m.variables}, {"n", m.n}, {"entries", rows}};
}

inline RatFuncMatrix ratfunc_matrix_from_json(const json &j, const NumberField &q) {
    RatFuncMatrix m;
    m.variables = j["variables"].get<std::vector<std::string>>();
    m.n = j["n"].get<int>();
    for (const auto &row : j["entries"])
        for (const auto &x : row) m.entries.push_back(ratf_from_json(x, q));
    if (static_cast<int>(m.entries.size()) != m.n * m.n) throw err_parse("matrix entry count mismatch");
    return m;
}

inline json specialization_to_json(const SpecializationRecord &r) {
    json pt = json::array();
    for (const auto &x : r.point) pt.push_back(rat_to_json(x));
    json av = json::array();
    for (const auto &p : r.avoided) av.push_back(mpoly_to_json(p));
    json imgs = json::array();
    for (const auto &m : r.image_matrices) imgs.push_back(matrix_to_json(m));
    return json{{"point", pt},
                {"avoided", av},
                {"image_matrices", imgs},
                {"source_semisimple", r.source_semisimple},
                {"checks",
                 json{{"a_nonzero", r.checks.a_nonzero},
                      {"all_discriminants_nonzero", r.checks.all_discriminants_nonzero},
                      {"semisimplicity_preserved", r.checks.semisimplicity_preserved},
                      {"witness_survives", r.checks.witness_survives}}}};
}

inline json genericity_to_json(const GenericityReport &r) {
    return json{{"charpoly", upoly_rat_to_json(r.charpoly)},
                {"primes_used", r.primes_used},
                {"cycle_types", r.cycle_types},
                {"verdict", genericity_verdict_name(r.verdict)}};
}

} // namespace bglab

#endif
