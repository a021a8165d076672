#include "nilrep/json_io.hpp"

namespace nilrep {

namespace {
const Int kI64Max = Int(std::numeric_limits<std::int64_t>::max());
const Int kI64Min = Int(std::numeric_limits<std::int64_t>::min());
} // namespace

Json int_to_json(const Int& x) {
    if (x <= kI64Max && x >= kI64Min) return x.convert_to<std::int64_t>();
    return x.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw DomainError("expected an integer (number or decimal string)");
}

std::string rat_to_string(const Rat& r) { return to_string(r); }

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rat(num, den);
}

Json angle_to_json(const Angle& a) {
    Json j;
    j["q"] = rat_to_string(a.q);
    Json sym = Json::object();
    for (const auto& [id, c] : a.sym) sym["theta" + std::to_string(id)] = rat_to_string(c);
    j["sym"] = std::move(sym);
    return j;
}

Angle angle_from_json(const Json& j) {
    Angle a;
    if (j.contains("q")) {
        if (j["q"].is_string())
            a.q = rat_from_string(j["q"].get<std::string>());
        else
            a.q = Rat(int_from_json(j["q"]));
    }
    if (j.contains("sym"))
        for (const auto& [key, val] : j["sym"].items()) {
            if (key.rfind("theta", 0) != 0)
                throw DomainError("symbol keys must look like \"theta1\"");
            int id = std::stoi(key.substr(5));
            a.sym[id] = rat_from_string(val.get<std::string>());
        }
    a.normalize();
    return a;
}

Json group_to_json(const GroupSpec& g) {
    Json j;
    Json s = Json::array();
    for (const Int& si : g.s) s.push_back(int_to_json(si));
    j["s"] = std::move(s);
    return j;
}

GroupSpec group_from_json(const Json& j) {
    if (!j.contains("s") || !j["s"].is_array())
        throw DomainError("group: expected {\"s\": [s1, ..., sn]}");
    std::vector<Int> s;
    for (const Json& si : j["s"]) s.push_back(int_from_json(si));
    return GroupSpec(std::move(s));
}

Json element_to_json(const Element& e) {
    Json j;
    Json u = Json::array(), v = Json::array();
    for (const Int& x : e.u) u.push_back(int_to_json(x));
    for (const Int& x : e.v) v.push_back(int_to_json(x));
    j["u"] = std::move(u);
    j["v"] = std::move(v);
    j["z"] = int_to_json(e.z);
    return j;
}

Element element_from_json(const Json& j, std::size_t rank) {
    Element e;
    if (j.contains("u"))
        for (const Json& x : j["u"]) e.u.push_back(int_from_json(x));
    if (j.contains("v"))
        for (const Json& x : j["v"]) e.v.push_back(int_from_json(x));
    if ((j.contains("u") && e.u.size() != rank) || (j.contains("v") && e.v.size() != rank))
        throw DomainError("element: \"u\" and \"v\" must have " + std::to_string(rank) +
                          " entries");
    e.u.resize(rank);
    e.v.resize(rank);
    if (j.contains("z")) e.z = int_from_json(j["z"]);
    return e;
}

Json subgroup_to_json(const TriSeq& h) {
    Json j;
    Json gens = Json::array();
    for (const Element& e : h.gens) gens.push_back(element_to_json(e));
    j["generators"] = std::move(gens);
    std::optional<Int> idx = index(h);
    j["index"] = idx ? int_to_json(*idx) : Json("infinite");
    return j;
}

TriSeq subgroup_from_json(const GroupSpec& g, const Json& j) {
    if (!j.contains("generators") || !j["generators"].is_array())
        throw DomainError("subgroup: expected {\"generators\": [element, ...]}");
    std::vector<Element> gens;
    for (const Json& e : j["generators"]) gens.push_back(element_from_json(e, g.rank()));
    return from_generators(g, gens);
}

Json character_to_json(const Character& c) {
    Json j;
    j["subgroup"] = subgroup_to_json(c.domain);
    Json vals = Json::array();
    for (const Angle& a : c.values) vals.push_back(angle_to_json(a));
    j["values"] = std::move(vals);
    return j;
}

Character character_from_json(const GroupSpec& g, const Json& j) {
    if (!j.contains("subgroup")) throw DomainError("character: missing \"subgroup\"");
    TriSeq dom = subgroup_from_json(g, j["subgroup"]);
    if (!j.contains("values") || !j["values"].is_array())
        throw DomainError("character: missing \"values\" array");
    std::vector<Angle> vals;
    for (const Json& a : j["values"]) vals.push_back(angle_from_json(a));
    if (vals.size() != dom.size())
        throw DomainError("character: values must align with the canonical generators (" +
                          std::to_string(dom.size()) + " expected)");
    return Character(std::move(dom), std::move(vals));
}

Json rep_to_json(const MonomialRep& r) {
    Json j;
    j["dim"] = r.dim();
    Json cosets = Json::array();
    for (const Element& e : r.table.reps) cosets.push_back(element_to_json(e));
    j["cosets"] = std::move(cosets);
    Json gens = Json::array();
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
        Json block;
        block["element"] = element_to_json(r.generators[i]);
        Json perm = Json::array(), phase = Json::array();
        for (std::size_t k = 0; k < r.dim(); ++k) {
            perm.push_back(r.gen_matrices[i].perm[k]);
            phase.push_back(angle_to_json(r.gen_matrices[i].phase[k]));
        }
        block["perm"] = std::move(perm);
        block["phase"] = std::move(phase);
        gens.push_back(std::move(block));
    }
    j["generators"] = std::move(gens);
    return j;
}

Json rank_one_report_to_json(const RankOneReport& r) {
    Json j;
    Json N = Json::array();
    for (const Int& x : r.N) N.push_back(int_to_json(x));
    j["N"] = std::move(N);
    j["predicted_dim"] = int_to_json(r.predicted_dim);
    j["constructed_dim"] = int_to_json(r.constructed_dim);
    j["irreducible"] = r.irreducible;
    j["subgroup_A"] = subgroup_to_json(r.subgroup_A);
    j["delta"] = character_to_json(r.delta);
    return j;
}

Json general_case_report_to_json(const GeneralCaseReport& r) {
    Json j;
    j["center_index"] = int_to_json(r.center_index);
    Json f = Json::array();
    for (const Int& x : r.invariant_factors) f.push_back(int_to_json(x));
    j["invariant_factors"] = std::move(f);
    j["dim"] = int_to_json(r.dim);
    j["chi_order"] = int_to_json(r.chi_order);
    j["divisibility_ok"] = r.divisibility_ok;
    j["sqrt_ok"] = r.sqrt_ok;
    return j;
}

Json corollary_report_to_json(const CorollaryReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["dim"] = int_to_json(r.dim);
    j["chi_order"] = int_to_json(r.chi_order);
    j["index"] = int_to_json(r.index);
    j["subgroup_match"] = r.subgroup_match;
    return j;
}

} // namespace nilrep
