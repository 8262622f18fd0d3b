#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "valdim/jsonio.hpp"
#include "valdim/parse.hpp"

using namespace valdim;

namespace {

// exit codes: 0 proved/true/found, 1 refuted/false, 2 unknown or not found
// within the bound, 3 input error
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUnknown = 2;
constexpr int kInputError = 3;

long opt_long(const Json& j, const char* key, long fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const Json& v = j.at(key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field '") + key + "': expected an integer");
    return v.get<long>();
}

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string need_string(const Json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

std::vector<RingElement> element_list(const Json& j, const RingPtr& ring, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<RingElement> out;
    for (const auto& v : j) out.push_back(element_from_json(v, ring));
    return out;
}

std::vector<FracElement> frac_list(const Json& j, const RingPtr& ring, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<FracElement> out;
    for (const auto& v : j) out.push_back(frac_from_json(v, ring));
    return out;
}

int exit_of(Tri status) {
    switch (status) {
        case Tri::Proved: return kTrue;
        case Tri::Refuted: return kFalse;
        case Tri::Unknown: return kUnknown;
    }
    return kInputError;
}

struct Dispatch {
    Json out;
    int code = kTrue;
};

Dispatch cmd_parse(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    bool laurent = in.contains("laurent") && in.at("laurent").is_boolean() &&
                   in.at("laurent").get<bool>();
    Json polys = Json::array();
    for (const auto& v : need(in, "polys")) {
        Poly p = parse_poly(need_string(v, "polys"), ring->field, ring->vars, laurent);
        if (laurent)
            polys.push_back(to_string(p, ring->vars));
        else
            polys.push_back(element_to_json(RingElement::from_poly(ring, p)));
    }
    return {Json{{"ring", ring_to_json(ring)}, {"laurent", laurent}, {"polys", polys}}, kTrue};
}

Dispatch cmd_gb(const Json& in) {
    Field field = field_from_json(need(in, "field"));
    std::vector<std::string> vars;
    for (const auto& v : need(in, "vars")) vars.push_back(need_string(v, "vars"));
    std::vector<Poly> gens;
    for (const auto& g : need(in, "gens"))
        gens.push_back(parse_poly(need_string(g, "gens"), field, vars));
    OrderSpec order = in.contains("order")
                          ? order_from_json(in.at("order"), static_cast<int>(vars.size()))
                          : OrderSpec::grlex(static_cast<int>(vars.size()));
    GroebnerBasis gb = buchberger(field, static_cast<int>(vars.size()), gens, order);
    Json basis = Json::array();
    for (const auto& g : gb.gens) basis.push_back(to_string(g, vars));
    return {Json{{"basis", basis}, {"order", order_to_json(order)}, {"trivial", gb.trivial()}},
            kTrue};
}

Dispatch cmd_member(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    RingElement a = element_from_json(need(in, "element"), ring);
    bool member = a.is_zero();
    return {Json{{"member", member}, {"normal_form", element_to_json(a)}},
            member ? kTrue : kFalse};
}

Dispatch cmd_radical_member(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    Poly f = parse_poly(need_string(need(in, "element"), "element"), ring->field, ring->vars);
    bool member = radical_member(f, ring->field, ring->nvars(), ring->ideal_gens);
    Json out{{"member", member}};
    if (member) out["exponent"] = radical_exponent(f, ring->basis());
    return {out, member ? kTrue : kFalse};
}

Dispatch cmd_ann(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    RingElement a = element_from_json(need(in, "element"), ring);
    Json gens = Json::array();
    for (const auto& g : annihilator(ring, a)) gens.push_back(to_string(g, ring->vars));
    return {Json{{"generators", gens}}, kTrue};
}

Dispatch cmd_split(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    RingElement a = element_from_json(need(in, "element"), ring);
    return {split_to_json(split_at(ring, a)), kTrue};
}

Dispatch cmd_rmin_stage(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    auto elems = element_list(need(in, "elements"), ring, "elements");
    return {split_to_json(split_sequence(ring, elems)), kTrue};
}

Dispatch search_command(const Json& in, bool explicit_order) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    auto points = element_list(need(in, "points"), ring, "points");
    int nind = static_cast<int>(points.size());
    OrderSpec order = explicit_order && in.contains("order")
                          ? order_from_json(in.at("order"), nind)
                          : OrderSpec::grlex(nind);
    long deg = opt_long(in, "degree_bound", 6);
    long cdeg = opt_long(in, "coeff_degree_bound", -1);
    SearchOutcome s = search_dim_cert(ring, points, order, deg, cdeg);
    return {search_outcome_to_json(s), s.cert ? kTrue : kUnknown};
}

Dispatch cmd_kdim_search(const Json& in) { return search_command(in, false); }
Dispatch cmd_dimv_search(const Json& in) { return search_command(in, true); }

Dispatch cmd_cert_verify(const Json& in) {
    DimCertificate c = dimcert_from_json(need(in, "certificate"));
    VerifyReport r = verify_dim_cert(c);
    return {Json{{"ok", r.ok}, {"diagnostic", r.diagnostic}}, r.ok ? kTrue : kFalse};
}

Dispatch cmd_glue(const Json& in) {
    DimCertificate c1 = dimcert_from_json(need(in, "first"));
    DimCertificate c2 = dimcert_from_json(need(in, "second"), c1.ring);
    DimCertificate glued = glue_components(c1, c2);
    return {Json{{"certificate", dimcert_to_json(glued)}}, kTrue};
}

Dispatch cmd_vdim_check(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    int n = static_cast<int>(opt_long(in, "n", 1));
    if (n < 0) throw std::invalid_argument("n: expected a nonnegative integer");
    RingPtr ext = polynomial_extension(ring, n);
    std::vector<std::vector<RingElement>> tuples;
    for (const auto& t : need(in, "tuples"))
        tuples.push_back(element_list(t, ext, "tuples"));
    long deg = opt_long(in, "degree_bound", 6);
    long cdeg = opt_long(in, "coeff_degree_bound", -1);
    SampledReport rep = vdim_leq_sampled(ext, n, tuples, deg, cdeg);
    Json jt = Json::array();
    for (const auto& tr : rep.tuples) {
        Json points = Json::array();
        for (const auto& x : tr.points) points.push_back(element_to_json(x));
        jt.push_back(Json{{"points", points},
                          {"found", tr.outcome.cert.has_value()},
                          {"candidates_tried", tr.outcome.candidates_tried}});
    }
    Json out{{"extension", ring_to_json(ext)},
             {"all_found", rep.all_found},
             {"degree_bound", rep.degree_bound},
             {"verdict", rep.verdict},
             {"tuples", jt}};
    return {out, rep.all_found ? kTrue : kUnknown};
}

Dispatch cmd_vdim_to_Vdim(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    auto points = frac_list(need(in, "points"), ring, "points");
    long deg = opt_long(in, "degree_bound", 6);
    long cdeg = opt_long(in, "coeff_degree_bound", -1);
    long p_bound = opt_long(in, "p_bound", 4);
    long val_deg = opt_long(in, "val_degree_bound", 6);
    VdimToVdimOutcome out = vdim_to_Vdim(ring, points, deg, cdeg, p_bound, val_deg);
    Json doc{{"subring", ring_to_json(out.subring)},
             {"search", search_outcome_to_json(out.search)}};
    bool proved = false;
    if (out.chain) {
        doc["chain"] = chain_to_json(*out.chain);
        proved = out.chain->check.status == Tri::Proved;
    }
    return {doc, proved ? kTrue : kUnknown};
}

Dispatch cmd_val_cert_verify(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    ValCert c = valcert_from_json(need(in, "certificate"), ring);
    VerifyReport r = verify_val_cert(c, ring);
    return {Json{{"ok", r.ok}, {"diagnostic", r.diagnostic}}, r.ok ? kTrue : kFalse};
}

Dispatch cmd_val_entail(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    long p_bound = opt_long(in, "p_bound", 4);
    long deg = opt_long(in, "degree_bound", 6);
    long cdeg = opt_long(in, "coeff_degree_bound", -1);
    ValuativeOracle oracle(ring, p_bound, deg, cdeg);
    std::vector<int> lhs, rhs;
    for (const auto& v : frac_list(need(in, "left"), ring, "left"))
        lhs.push_back(oracle.intern(v));
    for (const auto& v : frac_list(need(in, "right"), ring, "right"))
        rhs.push_back(oracle.intern(v));
    Decision d = oracle.decide(lhs, rhs);
    return {decision_to_json(d), exit_of(d.status)};
}

Dispatch cmd_lattice_leq(const Json& in) {
    EntailmentTable table = table_from_json(need(in, "table"));
    TableOracle oracle(table, opt_long(in, "node_cap", 100000));
    LatticeTerm lhs = lattice_term_from_json(need(in, "lhs"));
    LatticeTerm rhs = lattice_term_from_json(need(in, "rhs"));
    int n = static_cast<int>(table.atoms.size());
    for (const auto& m : lhs.meets)
        for (int a : m)
            if (a < 0 || a >= n) throw std::invalid_argument("lhs: atom out of range");
    for (const auto& m : rhs.meets)
        for (int a : m)
            if (a < 0 || a >= n) throw std::invalid_argument("rhs: atom out of range");
    Decision d = leq(lhs, rhs, oracle);
    return {decision_to_json(d), exit_of(d.status)};
}

Dispatch cmd_lattice_kdim(const Json& in) {
    EntailmentTable table = table_from_json(need(in, "table"));
    TableOracle oracle(table, opt_long(in, "node_cap", 100000));
    int n = static_cast<int>(opt_long(in, "n", 0));
    if (n < 0) throw std::invalid_argument("n: expected a nonnegative integer");
    int atoms = static_cast<int>(table.atoms.size());
    std::vector<std::vector<int>> tuples;
    if (in.contains("tuples")) {
        for (const auto& t : in.at("tuples")) {
            std::vector<int> tuple;
            for (const auto& v : t) {
                int a = static_cast<int>(v.get<long>());
                if (a < 0 || a >= atoms) throw std::invalid_argument("tuples: atom out of range");
                tuple.push_back(a);
            }
            if (static_cast<int>(tuple.size()) != n + 1)
                throw std::invalid_argument("tuples: expected length n+1");
            tuples.push_back(std::move(tuple));
        }
    } else {
        long count = 1;
        for (int i = 0; i <= n; ++i) {
            count *= atoms;
            if (count > 4096)
                throw std::invalid_argument("too many default tuples; pass 'tuples' explicitly");
        }
        std::vector<int> tuple(n + 1, 0);
        for (long k = 0; k < count; ++k) {
            long v = k;
            for (int i = n; i >= 0; --i) {
                tuple[i] = static_cast<int>(v % atoms);
                v /= atoms;
            }
            tuples.push_back(tuple);
        }
    }
    auto searcher = exhaustive_term_searcher(
        static_cast<int>(opt_long(in, "max_meet_width", 3)));
    auto results = kdim_leq_on_tuples(tuples, searcher, oracle);
    bool all = true;
    Json jr = Json::array();
    for (const auto& r : results) {
        bool proved = r.check.status == Tri::Proved;
        all = all && proved;
        Json item{{"tuple", r.tuple}, {"proved", proved}, {"exhausted", r.exhausted}};
        if (r.us) {
            Json us = Json::array();
            for (const auto& u : *r.us) us.push_back(lattice_term_to_json(u));
            item["us"] = us;
        }
        jr.push_back(item);
    }
    return {Json{{"status", all ? "proved" : "unknown"}, {"tuples", jr}},
            all ? kTrue : kUnknown};
}

Dispatch cmd_dyn_val_entail(const Json& in) {
    RingPtr ring = ring_from_json(need(in, "ring"));
    std::vector<DivAtom> hyps, goals;
    for (const auto& h : need(in, "hyps")) hyps.push_back(divatom_from_json(h, ring));
    for (const auto& g : need(in, "goals")) goals.push_back(divatom_from_json(g, ring));
    std::vector<RingElement> k_sample;
    if (in.contains("k_sample"))
        k_sample = element_list(in.at("k_sample"), ring, "k_sample");
    long depth = opt_long(in, "depth", 3);
    DynOutcome out = dyn_entails(ring, hyps, goals, depth, k_sample);
    Json doc{{"status", out.proof ? "proved" : "unknown"}, {"depth", out.depth}};
    if (out.proof) doc["proof"] = prooftree_to_json(*out.proof);
    return {doc, out.proof ? kTrue : kUnknown};
}

const std::map<std::string, std::function<Dispatch(const Json&)>> kCommands = {
    {"parse", cmd_parse},
    {"gb", cmd_gb},
    {"member", cmd_member},
    {"radical-member", cmd_radical_member},
    {"ann", cmd_ann},
    {"split", cmd_split},
    {"rmin-stage", cmd_rmin_stage},
    {"kdim-search", cmd_kdim_search},
    {"dimv-search", cmd_dimv_search},
    {"cert-verify", cmd_cert_verify},
    {"glue", cmd_glue},
    {"vdim-check", cmd_vdim_check},
    {"vdim-to-Vdim", cmd_vdim_to_Vdim},
    {"val-cert-verify", cmd_val_cert_verify},
    {"val-entail", cmd_val_entail},
    {"lattice-leq", cmd_lattice_leq},
    {"lattice-kdim", cmd_lattice_kdim},
    {"dyn-val-entail", cmd_dyn_val_entail},
};

int fail(const std::string& message) {
    Json err{{"error", Json{{"message", message}}}};
    std::cout << err.dump(2) << "\n";
    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::string names;
        for (const auto& [name, fn] : kCommands) names += (names.empty() ? "" : ", ") + name;
        return fail("usage: valdim-cli <command> < input.json; commands: " + names);
    }
    auto it = kCommands.find(argv[1]);
    if (it == kCommands.end()) return fail(std::string("unknown command '") + argv[1] + "'");
    Json in;
    try {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        in = Json::parse(buf.str());
    } catch (const std::exception& e) {
        return fail(std::string("invalid JSON input: ") + e.what());
    }
    try {
        Dispatch d = it->second(in);
        std::cout << d.out.dump(2) << "\n";
        return d.code;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}
