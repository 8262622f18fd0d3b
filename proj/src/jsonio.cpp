#include "valdim/jsonio.hpp"

#include <stdexcept>

#include "valdim/parse.hpp"

namespace valdim {

namespace {

const Json& need(const Json& j, const char* key, const char* what) {
    if (!j.is_object())
        throw std::invalid_argument(std::string(what) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
    return *it;
}

std::string need_string(const Json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

long need_long(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": expected an integer");
    return j.get<long>();
}

bool opt_bool(const Json& j, const char* key, bool fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const Json& v = j.at(key);
    if (!v.is_boolean())
        throw std::invalid_argument(std::string("field '") + key + "': expected a boolean");
    return v.get<bool>();
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(static_cast<int>(need_long(v, what)));
    return out;
}

}  // namespace

Json field_to_json(const Field& f) {
    if (f.is_rationals()) return Json("Q");
    return Json{{"Fp", f.p}};
}

Field field_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return Field::rationals();
        throw std::invalid_argument("field: unknown tag '" + j.get<std::string>() + "'");
    }
    if (j.is_object() && j.contains("Fp"))
        return Field::prime(static_cast<unsigned long>(need_long(j.at("Fp"), "field.Fp")));
    throw std::invalid_argument("field: expected \"Q\" or {\"Fp\": p}");
}

Json ring_to_json(const RingPtr& r) {
    Json ideal = Json::array();
    for (const auto& g : r->ideal_gens) ideal.push_back(to_string(g, r->vars));
    return Json{{"field", field_to_json(r->field)},
                {"vars", r->vars},
                {"ideal", ideal},
                {"assume_reduced", r->assume_reduced},
                {"assume_integral", r->assume_integral}};
}

RingPtr ring_from_json(const Json& j) {
    Field field = field_from_json(need(j, "field", "ring"));
    const Json& jv = need(j, "vars", "ring");
    if (!jv.is_array()) throw std::invalid_argument("ring.vars: expected an array");
    std::vector<std::string> vars;
    for (const auto& v : jv) vars.push_back(need_string(v, "ring.vars"));
    std::vector<Poly> ideal;
    if (j.contains("ideal")) {
        const Json& ji = j.at("ideal");
        if (!ji.is_array()) throw std::invalid_argument("ring.ideal: expected an array");
        for (const auto& g : ji)
            ideal.push_back(parse_poly(need_string(g, "ring.ideal"), field, vars));
    }
    return RingPresentation::make(field, std::move(vars), std::move(ideal),
                                  opt_bool(j, "assume_reduced", false),
                                  opt_bool(j, "assume_integral", false));
}

Json order_to_json(const OrderSpec& o) {
    if (o.kind == OrderSpec::Kind::Lex) return Json{{"kind", "lex"}, {"priority", o.priority}};
    return Json{{"kind", "matrix"}, {"rows", o.rows}};
}

OrderSpec order_from_json(const Json& j, int dim_hint) {
    std::string kind = need_string(need(j, "kind", "order"), "order.kind");
    if (kind == "lex") {
        return OrderSpec::lex(int_list(need(j, "priority", "order"), "order.priority"));
    }
    if (kind == "grlex") {
        long n = j.contains("n") ? need_long(j.at("n"), "order.n") : dim_hint;
        if (n < 0) throw std::invalid_argument("order: grlex needs 'n'");
        return OrderSpec::grlex(static_cast<int>(n));
    }
    if (kind == "matrix") {
        const Json& jr = need(j, "rows", "order");
        if (!jr.is_array()) throw std::invalid_argument("order.rows: expected an array");
        std::vector<std::vector<long>> rows;
        for (const auto& row : jr) {
            if (!row.is_array()) throw std::invalid_argument("order.rows: expected row arrays");
            std::vector<long> r;
            for (const auto& v : row) r.push_back(need_long(v, "order.rows"));
            rows.push_back(std::move(r));
        }
        return OrderSpec::matrix(std::move(rows));
    }
    throw std::invalid_argument("order.kind: unknown kind '" + kind + "'");
}

Json element_to_json(const RingElement& a) { return Json(to_string(a.repr, a.ring->vars)); }

RingElement element_from_json(const Json& j, const RingPtr& r) {
    return RingElement::from_poly(r, parse_poly(need_string(j, "element"), r->field, r->vars));
}

Json frac_to_json(const FracElement& v) {
    return Json{{"num", element_to_json(v.num)}, {"den", element_to_json(v.den)}};
}

FracElement frac_from_json(const Json& j, const RingPtr& r) {
    if (j.is_string()) return FracElement::whole(element_from_json(j, r));
    return FracElement::of(element_from_json(need(j, "num", "fraction"), r),
                           element_from_json(need(j, "den", "fraction"), r));
}

Json rpoly_to_json(const RPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms)
        terms.push_back(Json{{"exps", e}, {"coeff", to_string(c, p.ring->vars)}});
    return Json{{"nind", p.nind}, {"laurent", p.laurent}, {"terms", terms}};
}

RPoly rpoly_from_json(const Json& j, const RingPtr& r) {
    int nind = static_cast<int>(need_long(need(j, "nind", "rpoly"), "rpoly.nind"));
    bool laurent = opt_bool(j, "laurent", false);
    RPoly p = RPoly::zero(r, nind, laurent);
    const Json& jt = need(j, "terms", "rpoly");
    if (!jt.is_array()) throw std::invalid_argument("rpoly.terms: expected an array");
    for (const auto& t : jt) {
        std::vector<int> e = int_list(need(t, "exps", "rpoly term"), "rpoly term exps");
        if (static_cast<int>(e.size()) != nind)
            throw std::invalid_argument("rpoly term: exponent arity mismatch");
        Poly c = parse_poly(need_string(need(t, "coeff", "rpoly term"), "rpoly term coeff"),
                            r->field, r->vars);
        p.insert_term(e, c);
    }
    return p;
}

Json dimcert_to_json(const DimCertificate& c) {
    Json points = Json::array();
    for (const auto& x : c.points) points.push_back(element_to_json(x));
    return Json{{"ring", ring_to_json(c.ring)},
                {"points", points},
                {"order", order_to_json(c.order)},
                {"witness", rpoly_to_json(c.witness)},
                {"trailing", c.trailing}};
}

DimCertificate dimcert_from_json(const Json& j) { return dimcert_from_json(j, nullptr); }

DimCertificate dimcert_from_json(const Json& j, const RingPtr& over) {
    DimCertificate c;
    c.ring = ring_from_json(need(j, "ring", "certificate"));
    if (over) {
        if (ring_to_json(over) != ring_to_json(c.ring))
            throw std::invalid_argument("certificate.ring: presentation mismatch");
        c.ring = over;
    }
    const Json& jp = need(j, "points", "certificate");
    if (!jp.is_array()) throw std::invalid_argument("certificate.points: expected an array");
    for (const auto& x : jp) c.points.push_back(element_from_json(x, c.ring));
    c.order = order_from_json(need(j, "order", "certificate"),
                              static_cast<int>(c.points.size()));
    c.witness = rpoly_from_json(need(j, "witness", "certificate"), c.ring);
    c.trailing = int_list(need(j, "trailing", "certificate"), "certificate.trailing");
    return c;
}

Json valcert_to_json(const ValCert& c) {
    Json left = Json::array(), right = Json::array(), polys = Json::array();
    for (const auto& v : c.left) left.push_back(frac_to_json(v));
    for (const auto& v : c.right) right.push_back(frac_to_json(v));
    for (const auto& p : c.polys) polys.push_back(rpoly_to_json(p));
    return Json{{"form", c.form == ValCertForm::Vprime ? "Vprime" : "Vr"},
                {"left", left},
                {"exponents", c.exponents},
                {"right", right},
                {"polys", polys}};
}

ValCert valcert_from_json(const Json& j, const RingPtr& r) {
    ValCert c;
    std::string form = need_string(need(j, "form", "valcert"), "valcert.form");
    if (form == "Vprime")
        c.form = ValCertForm::Vprime;
    else if (form == "Vr")
        c.form = ValCertForm::Vr;
    else
        throw std::invalid_argument("valcert.form: unknown form '" + form + "'");
    for (const auto& v : need(j, "left", "valcert")) c.left.push_back(frac_from_json(v, r));
    for (const auto& e : need(j, "exponents", "valcert"))
        c.exponents.push_back(need_long(e, "valcert.exponents"));
    for (const auto& v : need(j, "right", "valcert")) c.right.push_back(frac_from_json(v, r));
    for (const auto& p : need(j, "polys", "valcert")) c.polys.push_back(rpoly_from_json(p, r));
    return c;
}

Json lattice_term_to_json(const LatticeTerm& t) {
    Json meets = Json::array();
    for (const auto& m : t.meets) meets.push_back(m);
    return Json{{"meets", meets}};
}

LatticeTerm lattice_term_from_json(const Json& j) {
    const Json& jm = need(j, "meets", "term");
    if (!jm.is_array()) throw std::invalid_argument("term.meets: expected an array");
    LatticeTerm t;
    for (const auto& m : jm) t.meets.push_back(int_list(m, "term.meets"));
    t.canonicalize();
    return t;
}

Json table_to_json(const EntailmentTable& t) {
    Json sequents = Json::array();
    for (const auto& [lhs, rhs] : t.sequents)
        sequents.push_back(Json{{"lhs", lhs}, {"rhs", rhs}});
    return Json{{"atoms", t.atoms}, {"sequents", sequents}};
}

EntailmentTable table_from_json(const Json& j) {
    EntailmentTable t;
    const Json& ja = need(j, "atoms", "table");
    if (!ja.is_array()) throw std::invalid_argument("table.atoms: expected an array");
    for (const auto& a : ja) t.atoms.push_back(need_string(a, "table.atoms"));
    if (j.contains("sequents")) {
        const Json& js = j.at("sequents");
        if (!js.is_array()) throw std::invalid_argument("table.sequents: expected an array");
        for (const auto& s : js) {
            auto lhs = int_list(need(s, "lhs", "sequent"), "sequent.lhs");
            auto rhs = int_list(need(s, "rhs", "sequent"), "sequent.rhs");
            int n = static_cast<int>(t.atoms.size());
            for (int a : lhs)
                if (a < 0 || a >= n) throw std::invalid_argument("sequent.lhs: atom out of range");
            for (int a : rhs)
                if (a < 0 || a >= n) throw std::invalid_argument("sequent.rhs: atom out of range");
            t.sequents.push_back({std::move(lhs), std::move(rhs)});
        }
    }
    return t;
}

Json decision_to_json(const Decision& d) {
    return Json{{"status", to_string(d.status)}, {"evidence", d.evidence}, {"bound", d.bound}};
}

Json chain_check_to_json(const ChainCheckResult& r) {
    Json steps = Json::array();
    for (const auto& d : r.steps) steps.push_back(decision_to_json(d));
    return Json{{"status", to_string(r.status)}, {"steps", steps}};
}

Json search_outcome_to_json(const SearchOutcome& s) {
    Json out{{"found", s.cert.has_value()},
             {"degree_bound", s.degree_bound},
             {"coeff_degree_bound", s.coeff_degree_bound},
             {"candidates_tried", s.candidates_tried}};
    if (s.cert) out["certificate"] = dimcert_to_json(*s.cert);
    return out;
}

Json split_to_json(const ComponentSplit& s) {
    Json comps = Json::array();
    for (const auto& c : s.components)
        comps.push_back(Json{{"ring", ring_to_json(c.ring)}, {"zero_set", c.zero_set}});
    return Json{{"parent", ring_to_json(s.parent)}, {"components", comps}};
}

Json chain_to_json(const ComplementaryChainV& ch) {
    Json xs = Json::array(), ys = Json::array(), us = Json::array(), atoms = Json::array();
    for (const auto& x : ch.xs) xs.push_back(frac_to_json(x));
    for (const auto& y : ch.ys) ys.push_back(frac_to_json(y));
    for (const auto& u : ch.us) us.push_back(lattice_term_to_json(u));
    for (int i = 0; i < ch.oracle->atom_count(); ++i)
        atoms.push_back(frac_to_json(ch.oracle->atom_value(i)));
    Json steps = Json::array();
    for (const auto& s : ch.steps) {
        Json step;
        switch (s.kind) {
            case ChainStep::Kind::ValCert:
                step["kind"] = "certificate";
                step["certificate"] = valcert_to_json(*s.cert);
                break;
            case ChainStep::Kind::Syntactic:
                step["kind"] = "syntactic";
                break;
            case ChainStep::Kind::ZeroAtom:
                step["kind"] = "zero-atom";
                break;
        }
        steps.push_back(step);
    }
    return Json{{"ring", ring_to_json(ch.ring)},
                {"xs", xs},
                {"ys", ys},
                {"us", us},
                {"x_atoms", ch.x_atoms},
                {"atoms", atoms},
                {"steps", steps},
                {"check", chain_check_to_json(ch.check)}};
}

Json divatom_to_json(const DivAtom& a) {
    return Json{{"a", element_to_json(a.a)}, {"b", element_to_json(a.b)}};
}

DivAtom divatom_from_json(const Json& j, const RingPtr& r) {
    return DivAtom{element_from_json(need(j, "a", "atom"), r),
                   element_from_json(need(j, "b", "atom"), r)};
}

namespace {

Json proofnode_to_json(const ProofNode& n) {
    Json out;
    Json ds = Json::array();
    for (const auto& d : n.derivations) {
        Json jd{{"rule", d.rule}, {"conclusion", divatom_to_json(d.conclusion)}};
        Json prems = Json::array();
        for (const auto& p : d.premises) prems.push_back(divatom_to_json(p));
        jd["premises"] = prems;
        if (d.param) jd["param"] = element_to_json(*d.param);
        ds.push_back(jd);
    }
    out["derivations"] = ds;
    switch (n.close) {
        case ProofNode::Close::Goal:
            out["close"] = "goal";
            out["closing"] = divatom_to_json(*n.closing);
            break;
        case ProofNode::Close::Collapse:
            out["close"] = "collapse";
            out["closing"] = divatom_to_json(*n.closing);
            break;
        case ProofNode::Close::Split: {
            out["close"] = "split";
            out["split_rule"] = n.split_rule;
            Json terms = Json::array();
            for (const auto& t : n.split_terms) terms.push_back(element_to_json(t));
            out["terms"] = terms;
            if (n.split_premise) out["premise"] = divatom_to_json(*n.split_premise);
            Json children = Json::array();
            for (const auto& c : n.children) children.push_back(proofnode_to_json(c));
            out["children"] = children;
            break;
        }
    }
    return out;
}

ProofNode proofnode_from_json(const Json& j, const RingPtr& r) {
    ProofNode n;
    const Json& jd = need(j, "derivations", "proof node");
    if (!jd.is_array()) throw std::invalid_argument("proof node derivations: expected an array");
    for (const auto& d : jd) {
        DynDerivation dd;
        dd.rule = need_string(need(d, "rule", "derivation"), "derivation.rule");
        for (const auto& p : need(d, "premises", "derivation"))
            dd.premises.push_back(divatom_from_json(p, r));
        dd.conclusion = divatom_from_json(need(d, "conclusion", "derivation"), r);
        if (d.contains("param")) dd.param = element_from_json(d.at("param"), r);
        n.derivations.push_back(std::move(dd));
    }
    std::string close = need_string(need(j, "close", "proof node"), "proof node close");
    if (close == "goal" || close == "collapse") {
        n.close = close == "goal" ? ProofNode::Close::Goal : ProofNode::Close::Collapse;
        n.closing = divatom_from_json(need(j, "closing", "proof node"), r);
    } else if (close == "split") {
        n.close = ProofNode::Close::Split;
        n.split_rule = need_string(need(j, "split_rule", "proof node"), "split_rule");
        for (const auto& t : need(j, "terms", "proof node"))
            n.split_terms.push_back(element_from_json(t, r));
        if (j.contains("premise")) n.split_premise = divatom_from_json(j.at("premise"), r);
        for (const auto& c : need(j, "children", "proof node"))
            n.children.push_back(proofnode_from_json(c, r));
    } else {
        throw std::invalid_argument("proof node close: unknown close '" + close + "'");
    }
    return n;
}

}  // namespace

Json prooftree_to_json(const ProofTree& t) {
    Json hyps = Json::array(), goals = Json::array(), samples = Json::array();
    for (const auto& h : t.hyps) hyps.push_back(divatom_to_json(h));
    for (const auto& g : t.goals) goals.push_back(divatom_to_json(g));
    for (const auto& x : t.k_sample) samples.push_back(element_to_json(x));
    return Json{{"ring", ring_to_json(t.ring)}, {"hyps", hyps},   {"goals", goals},
                {"k_sample", samples},          {"depth", t.depth}, {"root", proofnode_to_json(t.root)}};
}

ProofTree prooftree_from_json(const Json& j) {
    ProofTree t;
    t.ring = ring_from_json(need(j, "ring", "proof"));
    for (const auto& h : need(j, "hyps", "proof")) t.hyps.push_back(divatom_from_json(h, t.ring));
    for (const auto& g : need(j, "goals", "proof"))
        t.goals.push_back(divatom_from_json(g, t.ring));
    if (j.contains("k_sample"))
        for (const auto& x : j.at("k_sample")) t.k_sample.push_back(element_from_json(x, t.ring));
    t.depth = need_long(need(j, "depth", "proof"), "proof.depth");
    t.root = proofnode_from_json(need(j, "root", "proof"), t.ring);
    return t;
}

}  // namespace valdim
