#include "brt/json_io.hpp"

namespace brt {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

json require(const json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json fincategory_to_json(const FinCategory& c) {
    json j;
    json objects = json::array();
    for (int x = 0; x < c.n_objects; ++x) objects.push_back(c.object_name(x));
    j["objects"] = objects;
    json morphisms = json::array();
    for (int m = 0; m < c.n_mor(); ++m)
        morphisms.push_back(json{{"id", m}, {"name", c.morphism_name(m)}, {"src", c.src(m)}, {"tgt", c.tgt(m)}});
    j["morphisms"] = morphisms;
    j["identity"] = c.identity;
    json compose = json::array();
    for (int g = 0; g < c.n_mor(); ++g)
        for (int f = 0; f < c.n_mor(); ++f)
            if (c.compose(g, f) >= 0) compose.push_back(json::array({g, f, c.compose(g, f)}));
    j["compose"] = compose;
    return j;
}

FinCategory fincategory_from_json(const json& j) {
    FinCategory c;
    json objects = require(j, "objects");
    c.n_objects = static_cast<int>(objects.size());
    for (const auto& o : objects) c.object_names.push_back(o.get<std::string>());
    json morphisms = require(j, "morphisms");
    c.morphisms.resize(morphisms.size());
    for (const auto& m : morphisms) {
        int id = require(m, "id").get<int>();
        if (id < 0 || id >= static_cast<int>(c.morphisms.size())) bad("morphism id out of range");
        c.morphisms[id].src = require(m, "src").get<int>();
        c.morphisms[id].tgt = require(m, "tgt").get<int>();
        if (m.contains("name")) c.morphisms[id].name = m.at("name").get<std::string>();
    }
    c.identity = require(j, "identity").get<std::vector<int>>();
    c.compose_table.assign(c.morphisms.size() * c.morphisms.size(), -1);
    for (const auto& e : require(j, "compose")) {
        if (!e.is_array() || e.size() != 3) bad("compose entries must be [g, f, gf]");
        c.set_compose(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
    }
    auto errs = validate_category(c);
    if (!errs.empty()) bad("invalid category: " + errs.front());
    return c;
}

json presheaf_to_json(const Presheaf& a) {
    json j;
    j["sizes"] = a.sizes;
    j["action"] = a.action;
    if (!a.element_names.empty()) j["element_names"] = a.element_names;
    return j;
}

Presheaf presheaf_from_json(const json& j, const FinCategoryPtr& base) {
    Presheaf a;
    a.base = base;
    a.sizes = require(j, "sizes").get<std::vector<int>>();
    a.action = require(j, "action").get<std::vector<std::vector<int>>>();
    if (j.contains("element_names"))
        a.element_names = j.at("element_names").get<std::vector<std::vector<std::string>>>();
    auto errs = validate_presheaf(a);
    if (!errs.empty()) bad("invalid presheaf: " + errs.front());
    return a;
}

json presheaf_morphism_to_json(const PresheafMorphism& u) {
    return json{{"components", u.components}};
}

namespace {

PresheafMorphism arrow_from_json(const json& j, const char* key, const PresheafPtr& src,
                                 const PresheafPtr& tgt) {
    PresheafMorphism u;
    u.source = src;
    u.target = tgt;
    u.components = require(require(j, key), "components").get<std::vector<std::vector<int>>>();
    auto errs = validate_presheaf_morphism(u);
    if (!errs.empty()) bad(std::string("invalid arrow '") + key + "': " + errs.front());
    return u;
}

}  // namespace

json shape_to_json(const DescentShape& s) {
    json j;
    j["base"] = fincategory_to_json(*s.A0->base);
    j["presheaves"] = json{{"A0", presheaf_to_json(*s.A0)},
                           {"A1", presheaf_to_json(*s.A1)},
                           {"A2", presheaf_to_json(*s.A2)},
                           {"A3", presheaf_to_json(*s.A3)}};
    json arrows;
    arrows["a"] = presheaf_morphism_to_json(s.a);
    arrows["a1"] = presheaf_morphism_to_json(s.a1);
    arrows["a2"] = presheaf_morphism_to_json(s.a2);
    arrows["p1"] = presheaf_morphism_to_json(s.p1);
    arrows["p2"] = presheaf_morphism_to_json(s.p2);
    arrows["p3"] = presheaf_morphism_to_json(s.p3);
    if (s.Delta) arrows["Delta"] = presheaf_morphism_to_json(*s.Delta);
    if (s.s1) arrows["s1"] = presheaf_morphism_to_json(*s.s1);
    if (s.s2) arrows["s2"] = presheaf_morphism_to_json(*s.s2);
    if (s.sigma) arrows["sigma"] = presheaf_morphism_to_json(*s.sigma);
    if (s.Gamma) arrows["Gamma"] = presheaf_morphism_to_json(*s.Gamma);
    j["arrows"] = arrows;
    return j;
}

DescentShape shape_from_json(const json& j) {
    auto base = std::make_shared<FinCategory>(fincategory_from_json(require(j, "base")));
    json ps = require(j, "presheaves");
    DescentShape s;
    s.A0 = std::make_shared<Presheaf>(presheaf_from_json(require(ps, "A0"), base));
    s.A1 = std::make_shared<Presheaf>(presheaf_from_json(require(ps, "A1"), base));
    s.A2 = std::make_shared<Presheaf>(presheaf_from_json(require(ps, "A2"), base));
    s.A3 = std::make_shared<Presheaf>(presheaf_from_json(require(ps, "A3"), base));
    json ar = require(j, "arrows");
    s.a = arrow_from_json(ar, "a", s.A1, s.A0);
    s.a1 = arrow_from_json(ar, "a1", s.A2, s.A1);
    s.a2 = arrow_from_json(ar, "a2", s.A2, s.A1);
    s.p1 = arrow_from_json(ar, "p1", s.A3, s.A2);
    s.p2 = arrow_from_json(ar, "p2", s.A3, s.A2);
    s.p3 = arrow_from_json(ar, "p3", s.A3, s.A2);
    if (ar.contains("Delta")) s.Delta = arrow_from_json(ar, "Delta", s.A1, s.A2);
    if (ar.contains("s1")) s.s1 = arrow_from_json(ar, "s1", s.A2, s.A3);
    if (ar.contains("s2")) s.s2 = arrow_from_json(ar, "s2", s.A2, s.A3);
    if (ar.contains("sigma")) s.sigma = arrow_from_json(ar, "sigma", s.A2, s.A2);
    if (ar.contains("Gamma")) s.Gamma = arrow_from_json(ar, "Gamma", s.A2, s.A3);
    return s;
}

namespace {

json field_to_json(const Field& f) { return f.describe(); }

Field field_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "Q") return field_q();
    if (s.size() > 1 && s[0] == 'F') return field_fp(std::stoll(s.substr(1)));
    bad("unknown field '" + s + "'");
}

}  // namespace

json coeff_object_to_json(const CoeffObject& x) {
    json j;
    j["kind"] = x.kind == CoeffKind::Set ? "set" : "vect";
    j["n"] = x.n;
    if (x.kind == CoeffKind::Vect) j["field"] = field_to_json(x.field);
    return j;
}

CoeffObject coeff_object_from_json(const json& j) {
    std::string kind = require(j, "kind").get<std::string>();
    int n = require(j, "n").get<int>();
    if (kind == "set") return set_object(n);
    if (kind == "vect") return vect_object(n, field_from_json(require(j, "field")));
    bad("unknown coefficient kind '" + kind + "'");
}

json coeff_morphism_to_json(const CoeffMorphism& f) {
    json j;
    j["src"] = coeff_object_to_json(f.src);
    j["tgt"] = coeff_object_to_json(f.tgt);
    if (f.src.kind == CoeffKind::Set) {
        j["map"] = f.map;
    } else {
        json rows = json::array();
        for (int r = 0; r < f.mat.rows; ++r) {
            json row = json::array();
            for (int c = 0; c < f.mat.cols; ++c) row.push_back(f.mat.get(r, c).str());
            rows.push_back(row);
        }
        j["entries"] = rows;
    }
    return j;
}

CoeffMorphism coeff_morphism_from_json(const json& j) {
    CoeffObject src = coeff_object_from_json(require(j, "src"));
    CoeffObject tgt = coeff_object_from_json(require(j, "tgt"));
    if (src.kind == CoeffKind::Set)
        return set_morphism(src, tgt, require(j, "map").get<std::vector<int>>());
    Mat m = Mat::zero(tgt.n, src.n, src.field);
    json rows = require(j, "entries");
    if (static_cast<int>(rows.size()) != tgt.n) bad("entry row count mismatch");
    for (int r = 0; r < tgt.n; ++r) {
        if (static_cast<int>(rows[r].size()) != src.n) bad("entry column count mismatch");
        for (int c = 0; c < src.n; ++c) m.set(r, c, Rat(rows[r][c].get<std::string>()));
    }
    return vect_morphism(src, tgt, std::move(m));
}

json representation_to_json(const Representation& m) {
    json j;
    j["kind"] = m.kind == CoeffKind::Set ? "set" : "vect";
    if (m.kind == CoeffKind::Vect) j["field"] = field_to_json(m.field);
    json ob;
    for (int x = 0; x < m.elcat->cat.n_objects; ++x)
        ob[m.elcat->cat.object_name(x)] = coeff_object_to_json(m.ob[x]);
    j["objects"] = ob;
    json mor;
    for (int f = 0; f < m.elcat->cat.n_mor(); ++f)
        mor[m.elcat->cat.morphism_name(f)] = coeff_morphism_to_json(m.mor[f]);
    j["morphisms"] = mor;
    return j;
}

json rep_morphism_to_json(const RepMorphism& f) {
    json comp;
    const FinCategory& cat = f.src.elcat->cat;
    for (int x = 0; x < cat.n_objects; ++x)
        comp[cat.object_name(x)] = coeff_morphism_to_json(f.comp[x]);
    return json{{"components", comp}};
}

json scenario_to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["shape"] = shape_to_json(s.shape);
    j["coeff"] = s.kind == CoeffKind::Set ? json("set") : json("vect:" + s.field.describe());
    j["seed"] = s.seed;
    j["budget"] = s.budget;
    j["random_objects"] = s.random_objects;
    j["laws"] = s.laws;
    return j;
}

Scenario scenario_from_json(const json& j) {
    Scenario s;
    s.name = require(j, "name").get<std::string>();
    s.shape = shape_from_json(require(j, "shape"));
    std::string coeff = require(j, "coeff").get<std::string>();
    if (coeff == "set") {
        s.kind = CoeffKind::Set;
    } else if (coeff.rfind("vect:", 0) == 0) {
        s.kind = CoeffKind::Vect;
        s.field = field_from_json(json(coeff.substr(5)));
    } else {
        bad("unknown coeff '" + coeff + "' (expected 'set' or 'vect:<field>')");
    }
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("budget")) s.budget = j.at("budget").get<std::int64_t>();
    if (j.contains("random_objects")) s.random_objects = j.at("random_objects").get<int>();
    if (j.contains("laws")) s.laws = j.at("laws").get<std::vector<std::string>>();
    return s;
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["scenario"] = v.scenario;
    j["coeff"] = v.coeff;
    j["seed"] = v.seed;
    j["budget"] = v.budget;
    j["tested_objects"] = v.tested_objects;
    j["chi_status"] = v.chi_status;
    j["chi12_status"] = v.chi12_status;
    json laws = json::array();
    for (const LawResult& l : v.laws) {
        json e{{"name", l.name}, {"pass", l.status != "fail"}, {"status", l.status}};
        if (!l.witness.empty()) e["witness"] = l.witness;
        laws.push_back(e);
    }
    j["laws"] = laws;
    // the Theorem t1 algebra/descent-datum round trip, surfaced separately
    json rt{{"status", "n/a"}};
    for (const LawResult& l : v.laws)
        if (l.name == "descent-roundtrip") {
            rt["status"] = l.status;
            if (!l.witness.empty()) rt["witness"] = l.witness;
        }
    j["roundtrip"] = rt;
    j["all_pass"] = v.all_pass;
    return j;
}

}  // namespace brt
