#include "brt/presheaf.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace brt {

std::string Presheaf::element_name(int c, int elt) const {
    if (c < static_cast<int>(element_names.size()) && elt < static_cast<int>(element_names[c].size()) &&
        !element_names[c][elt].empty())
        return element_names[c][elt];
    return std::to_string(elt);
}

std::vector<std::string> validate_presheaf(const Presheaf& a) {
    std::vector<std::string> report;
    const FinCategory& base = *a.base;
    if (static_cast<int>(a.sizes.size()) != base.n_objects ||
        static_cast<int>(a.action.size()) != base.n_mor()) {
        report.push_back("structure: tables have wrong size");
        return report;
    }
    for (int f = 0; f < base.n_mor(); ++f) {
        if (static_cast<int>(a.action[f].size()) != a.sizes[base.tgt(f)]) {
            report.push_back("structure: action of morphism " + std::to_string(f) + " has wrong domain");
            continue;
        }
        for (int v : a.action[f])
            if (v < 0 || v >= a.sizes[base.src(f)])
                report.push_back("structure: action of morphism " + std::to_string(f) + " out of range");
    }
    if (!report.empty()) return report;
    for (int c = 0; c < base.n_objects; ++c)
        for (int e = 0; e < a.sizes[c]; ++e)
            if (a.act(base.identity[c], e) != e)
                report.push_back("law: identity action fails at object " + std::to_string(c));
    // contravariance: A(g∘f) = A(f)∘A(g)
    for (int g = 0; g < base.n_mor(); ++g)
        for (int f = 0; f < base.n_mor(); ++f) {
            if (base.src(g) != base.tgt(f)) continue;
            int gf = base.compose(g, f);
            for (int e = 0; e < a.sizes[base.tgt(g)]; ++e)
                if (a.act(gf, e) != a.act(f, a.act(g, e))) {
                    report.push_back("law: contravariant functoriality fails on (" + std::to_string(g) +
                                     "," + std::to_string(f) + ")");
                    break;
                }
        }
    return report;
}

bool presheaves_equal(const Presheaf& a, const Presheaf& b) {
    return a.sizes == b.sizes && a.action == b.action;
}

std::vector<std::string> validate_presheaf_morphism(const PresheafMorphism& u) {
    std::vector<std::string> report;
    const Presheaf& a = *u.source;
    const Presheaf& b = *u.target;
    const FinCategory& base = *a.base;
    if (static_cast<int>(u.components.size()) != base.n_objects) {
        report.push_back("structure: component table has wrong size");
        return report;
    }
    for (int c = 0; c < base.n_objects; ++c) {
        if (static_cast<int>(u.components[c].size()) != a.sizes[c]) {
            report.push_back("structure: component at object " + std::to_string(c) + " not total");
            return report;
        }
        for (int v : u.components[c])
            if (v < 0 || v >= b.sizes[c])
                report.push_back("structure: component at object " + std::to_string(c) + " out of range");
    }
    if (!report.empty()) return report;
    for (int f = 0; f < base.n_mor(); ++f) {
        int c = base.src(f), d = base.tgt(f);
        for (int e = 0; e < a.sizes[d]; ++e)
            if (u.components[c][a.act(f, e)] != b.act(f, u.components[d][e])) {
                report.push_back("law: naturality fails at morphism " + std::to_string(f) +
                                 " (base " + std::to_string(c) + "->" + std::to_string(d) + ")");
                break;
            }
    }
    return report;
}

PresheafMorphism psh_identity(const PresheafPtr& a) {
    PresheafMorphism u;
    u.source = u.target = a;
    u.components.resize(a->sizes.size());
    for (size_t c = 0; c < a->sizes.size(); ++c) {
        u.components[c].resize(a->sizes[c]);
        std::iota(u.components[c].begin(), u.components[c].end(), 0);
    }
    return u;
}

PresheafMorphism psh_compose(const PresheafMorphism& g, const PresheafMorphism& f) {
    if (!presheaves_equal(*f.target, *g.source)) throw std::invalid_argument("psh_compose: not composable");
    PresheafMorphism h;
    h.source = f.source;
    h.target = g.target;
    h.components.resize(f.components.size());
    for (size_t c = 0; c < f.components.size(); ++c) {
        h.components[c].resize(f.components[c].size());
        for (size_t e = 0; e < f.components[c].size(); ++e)
            h.components[c][e] = g.components[c][f.components[c][e]];
    }
    return h;
}

bool psh_equal(const PresheafMorphism& u, const PresheafMorphism& v) {
    return u.components == v.components && presheaves_equal(*u.source, *v.source) &&
           presheaves_equal(*u.target, *v.target);
}

bool psh_is_identity(const PresheafMorphism& u) {
    if (!presheaves_equal(*u.source, *u.target)) return false;
    for (size_t c = 0; c < u.components.size(); ++c)
        for (size_t e = 0; e < u.components[c].size(); ++e)
            if (u.components[c][e] != static_cast<int>(e)) return false;
    return true;
}

std::vector<PresheafMorphism> enumerate_presheaf_morphisms(const PresheafPtr& a, const PresheafPtr& b,
                                                           std::int64_t budget) {
    const FinCategory& base = *a->base;
    double count = 1;
    for (int c = 0; c < base.n_objects; ++c) {
        for (int e = 0; e < a->sizes[c]; ++e) {
            count *= b->sizes[c];
            if (count > static_cast<double>(budget))
                throw BudgetExceeded("enumerate_presheaf_morphisms: too large");
        }
    }
    std::vector<PresheafMorphism> out;
    PresheafMorphism u;
    u.source = a;
    u.target = b;
    u.components.resize(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c) u.components[c].assign(a->sizes[c], 0);

    // flatten positions for odometer-style enumeration
    std::vector<std::pair<int, int>> pos;
    for (int c = 0; c < base.n_objects; ++c)
        for (int e = 0; e < a->sizes[c]; ++e) pos.emplace_back(c, e);

    bool any_empty = false;
    for (auto [c, e] : pos)
        if (b->sizes[c] == 0) any_empty = true;
    if (any_empty) return out;

    while (true) {
        if (validate_presheaf_morphism(u).empty()) out.push_back(u);
        int i = static_cast<int>(pos.size()) - 1;
        while (i >= 0) {
            auto [c, e] = pos[i];
            if (u.components[c][e] + 1 < b->sizes[c]) {
                ++u.components[c][e];
                break;
            }
            u.components[c][e] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

ElCatPtr elements_category(const PresheafPtr& a) {
    auto el = std::make_shared<ElCat>();
    el->presheaf = a;
    const FinCategory& base = *a->base;

    el->obj_offset.resize(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c) {
        el->obj_offset[c] = static_cast<int>(el->obj_label.size());
        for (int e = 0; e < a->sizes[c]; ++e) el->obj_label.emplace_back(c, e);
    }
    FinCategory& cat = el->cat;
    cat.n_objects = static_cast<int>(el->obj_label.size());
    for (auto [c, e] : el->obj_label)
        cat.object_names.push_back("(" + base.object_name(c) + "," + a->element_name(c, e) + ")");

    // one morphism (c,γ) -> (d,δ) per base arrow φ: d -> c with A(φ)(γ) = δ
    el->mor_index_.assign(cat.n_objects, std::vector<int>(base.n_mor(), -1));
    for (int o = 0; o < cat.n_objects; ++o) {
        auto [c, gamma] = el->obj_label[o];
        for (int phi = 0; phi < base.n_mor(); ++phi) {
            if (base.tgt(phi) != c) continue;
            int d = base.src(phi);
            int delta = a->act(phi, gamma);
            FinCategory::Mor m;
            m.src = o;
            m.tgt = el->obj_index(d, delta);
            m.name = base.morphism_name(phi);
            el->mor_index_[o][phi] = cat.n_mor();
            cat.morphisms.push_back(m);
            el->mor_base.push_back(phi);
        }
    }
    cat.identity.resize(cat.n_objects);
    for (int o = 0; o < cat.n_objects; ++o)
        cat.identity[o] = el->mor_index_[o][base.identity[el->obj_label[o].first]];

    const int nm = cat.n_mor();
    cat.compose_table.assign(static_cast<size_t>(nm) * nm, -1);
    for (int m2 = 0; m2 < nm; ++m2)
        for (int m1 = 0; m1 < nm; ++m1) {
            if (cat.src(m2) != cat.tgt(m1)) continue;
            // (c,γ) -φ1-> (d,δ) -φ2-> (e,ζ): underlying arrow φ1∘φ2: e -> c
            int composed = base.compose(el->mor_base[m1], el->mor_base[m2]);
            cat.set_compose(m2, m1, el->mor_index_[cat.src(m1)][composed]);
        }
    return el;
}

CatFunctor elements_functor(const PresheafMorphism& u, const ElCatPtr& dom, const ElCatPtr& cod) {
    if (!presheaves_equal(*u.source, *dom->presheaf) || !presheaves_equal(*u.target, *cod->presheaf))
        throw std::invalid_argument("elements_functor: categories do not match the morphism");
    CatFunctor f;
    f.domain = std::shared_ptr<const FinCategory>(dom, &dom->cat);
    f.codomain = std::shared_ptr<const FinCategory>(cod, &cod->cat);
    for (auto [c, e] : dom->obj_label) f.object_map.push_back(cod->obj_index(c, u.at(c, e)));
    for (int m = 0; m < dom->cat.n_mor(); ++m)
        f.morphism_map.push_back(cod->mor_index(f.object_map[dom->cat.src(m)], dom->mor_base[m]));
    return f;
}

FibreProduct fibre_product(const PresheafMorphism& a, const PresheafMorphism& b) {
    if (!presheaves_equal(*a.target, *b.target)) throw std::invalid_argument("fibre_product: codomain mismatch");
    const Presheaf& a1 = *a.source;
    const Presheaf& bb = *b.source;
    const FinCategory& base = *a1.base;

    auto p = std::make_shared<Presheaf>();
    p->base = a1.base;
    FibreProduct fp;
    fp.pairs.resize(base.n_objects);
    p->sizes.resize(base.n_objects);
    std::vector<std::map<std::pair<int, int>, int>> index(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c) {
        for (int x = 0; x < a1.sizes[c]; ++x)
            for (int y = 0; y < bb.sizes[c]; ++y)
                if (a.at(c, x) == b.at(c, y)) {
                    index[c][{x, y}] = static_cast<int>(fp.pairs[c].size());
                    fp.pairs[c].emplace_back(x, y);
                }
        p->sizes[c] = static_cast<int>(fp.pairs[c].size());
    }
    p->element_names.resize(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c)
        for (auto [x, y] : fp.pairs[c])
            p->element_names[c].push_back("(" + a1.element_name(c, x) + "," + bb.element_name(c, y) + ")");
    p->action.resize(base.n_mor());
    for (int f = 0; f < base.n_mor(); ++f) {
        int c = base.src(f), d = base.tgt(f);
        p->action[f].resize(p->sizes[d]);
        for (int e = 0; e < p->sizes[d]; ++e) {
            auto [x, y] = fp.pairs[d][e];
            p->action[f][e] = index[c].at({a1.act(f, x), bb.act(f, y)});
        }
    }
    fp.object = p;
    fp.pi1.source = p;
    fp.pi1.target = a.source;
    fp.pi2.source = p;
    fp.pi2.target = b.source;
    fp.pi1.components.resize(base.n_objects);
    fp.pi2.components.resize(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c)
        for (auto [x, y] : fp.pairs[c]) {
            fp.pi1.components[c].push_back(x);
            fp.pi2.components[c].push_back(y);
        }
    return fp;
}

namespace {

void check_eq(std::vector<std::string>& report, const PresheafMorphism& lhs, const PresheafMorphism& rhs,
              const std::string& name) {
    if (!psh_equal(lhs, rhs)) report.push_back("law: " + name + " violated");
}

}  // namespace

std::vector<std::string> validate_shape(const DescentShape& s) {
    std::vector<std::string> report;
    for (const PresheafMorphism* u : {&s.a, &s.a1, &s.a2, &s.p1, &s.p2, &s.p3}) {
        auto r = validate_presheaf_morphism(*u);
        report.insert(report.end(), r.begin(), r.end());
    }
    if (!report.empty()) return report;
    check_eq(report, psh_compose(s.a, s.a1), psh_compose(s.a, s.a2), "a a1 = a a2");
    check_eq(report, psh_compose(s.a1, s.p2), psh_compose(s.a1, s.p3), "a1 p2 = a1 p3");
    check_eq(report, psh_compose(s.a1, s.p1), psh_compose(s.a2, s.p3), "a1 p1 = a2 p3");
    check_eq(report, psh_compose(s.a2, s.p1), psh_compose(s.a2, s.p2), "a2 p1 = a2 p2");
    if (s.Delta) {
        if (!psh_is_identity(psh_compose(s.a1, *s.Delta))) report.push_back("law: a1 Δ = 1 violated");
        if (!psh_is_identity(psh_compose(s.a2, *s.Delta))) report.push_back("law: a2 Δ = 1 violated");
    }
    if (s.s1) {
        if (!s.Delta) {
            report.push_back("structure: s1 present without Δ");
        } else {
            check_eq(report, psh_compose(s.p1, *s.s1), psh_compose(*s.Delta, s.a2), "p1 s1 = Δ a2");
            if (!psh_is_identity(psh_compose(s.p2, *s.s1))) report.push_back("law: p2 s1 = 1 violated");
            if (!psh_is_identity(psh_compose(s.p3, *s.s1))) report.push_back("law: p3 s1 = 1 violated");
        }
    }
    if (s.s2) {
        if (!s.Delta) {
            report.push_back("structure: s2 present without Δ");
        } else {
            if (!psh_is_identity(psh_compose(s.p1, *s.s2))) report.push_back("law: p1 s2 = 1 violated");
            if (!psh_is_identity(psh_compose(s.p2, *s.s2))) report.push_back("law: p2 s2 = 1 violated");
            check_eq(report, psh_compose(s.p3, *s.s2), psh_compose(*s.Delta, s.a1), "p3 s2 = Δ a1");
        }
    }
    if (s.sigma && !psh_is_identity(psh_compose(*s.sigma, *s.sigma)))
        report.push_back("law: σσ = 1 violated");
    if (s.Gamma) {
        if (!s.sigma || !s.Delta) {
            report.push_back("structure: Γ present without σ or Δ");
        } else {
            check_eq(report, psh_compose(s.p1, *s.Gamma), *s.sigma, "p1 Γ = σ");
            check_eq(report, psh_compose(s.p2, *s.Gamma), psh_compose(*s.Delta, s.a1), "p2 Γ = Δ a1");
            if (!psh_is_identity(psh_compose(s.p3, *s.Gamma))) report.push_back("law: p3 Γ = 1 violated");
        }
    }
    return report;
}

DescentShape canonical_shape(const PresheafMorphism& a) {
    DescentShape s;
    s.A1 = a.source;
    s.A0 = a.target;
    s.a = a;
    const FinCategory& base = *s.A1->base;

    FibreProduct fp2 = fibre_product(a, a);
    s.A2 = fp2.object;
    s.a1 = fp2.pi1;
    s.a2 = fp2.pi2;

    // A3 as pointwise triples over A0
    auto a3 = std::make_shared<Presheaf>();
    a3->base = s.A1->base;
    std::vector<std::vector<std::array<int, 3>>> triples(base.n_objects);
    std::vector<std::map<std::array<int, 3>, int>> index(base.n_objects);
    a3->sizes.resize(base.n_objects);
    a3->element_names.resize(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c) {
        for (int x = 0; x < s.A1->sizes[c]; ++x)
            for (int y = 0; y < s.A1->sizes[c]; ++y)
                for (int z = 0; z < s.A1->sizes[c]; ++z)
                    if (a.at(c, x) == a.at(c, y) && a.at(c, y) == a.at(c, z)) {
                        index[c][{x, y, z}] = static_cast<int>(triples[c].size());
                        triples[c].push_back({x, y, z});
                        a3->element_names[c].push_back("(" + s.A1->element_name(c, x) + "," +
                                                       s.A1->element_name(c, y) + "," +
                                                       s.A1->element_name(c, z) + ")");
                    }
        a3->sizes[c] = static_cast<int>(triples[c].size());
    }
    a3->action.resize(base.n_mor());
    for (int f = 0; f < base.n_mor(); ++f) {
        int c = base.src(f), d = base.tgt(f);
        a3->action[f].resize(a3->sizes[d]);
        for (int e = 0; e < a3->sizes[d]; ++e) {
            auto [x, y, z] = triples[d][e];
            a3->action[f][e] =
                index[c].at({s.A1->act(f, x), s.A1->act(f, y), s.A1->act(f, z)});
        }
    }
    s.A3 = a3;

    std::vector<std::map<std::pair<int, int>, int>> pair_index(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c)
        for (int e = 0; e < static_cast<int>(fp2.pairs[c].size()); ++e)
            pair_index[c][fp2.pairs[c][e]] = e;

    auto proj = [&](int keep_a, int keep_b) {
        PresheafMorphism u;
        u.source = s.A3;
        u.target = s.A2;
        u.components.resize(base.n_objects);
        for (int c = 0; c < base.n_objects; ++c)
            for (auto [x, y, z] : triples[c]) {
                std::array<int, 3> t = {x, y, z};
                u.components[c].push_back(pair_index[c].at({t[keep_a], t[keep_b]}));
            }
        return u;
    };
    s.p1 = proj(1, 2);  // omit first coordinate
    s.p2 = proj(0, 2);  // omit second
    s.p3 = proj(0, 1);  // omit third

    PresheafMorphism delta;
    delta.source = s.A1;
    delta.target = s.A2;
    delta.components.resize(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c)
        for (int x = 0; x < s.A1->sizes[c]; ++x)
            delta.components[c].push_back(pair_index[c].at({x, x}));
    s.Delta = delta;

    auto from_pairs = [&](int i0, int i1, int i2) {
        // A2 -> A3, (β1,β2) -> (β_{i0}, β_{i1}, β_{i2}) with indices into {1,2}
        PresheafMorphism u;
        u.source = s.A2;
        u.target = s.A3;
        u.components.resize(base.n_objects);
        for (int c = 0; c < base.n_objects; ++c)
            for (auto [x, y] : fp2.pairs[c]) {
                std::array<int, 2> b = {x, y};
                u.components[c].push_back(index[c].at({b[i0], b[i1], b[i2]}));
            }
        return u;
    };
    s.s1 = from_pairs(0, 1, 1);  // (β1,β2,β2)
    s.s2 = from_pairs(0, 0, 1);  // (β1,β1,β2)

    PresheafMorphism sigma;
    sigma.source = s.A2;
    sigma.target = s.A2;
    sigma.components.resize(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c)
        for (auto [x, y] : fp2.pairs[c]) sigma.components[c].push_back(pair_index[c].at({y, x}));
    s.sigma = sigma;

    PresheafMorphism gamma;
    gamma.source = s.A2;
    gamma.target = s.A3;
    gamma.components.resize(base.n_objects);
    for (int c = 0; c < base.n_objects; ++c)
        for (auto [x, y] : fp2.pairs[c]) gamma.components[c].push_back(index[c].at({x, y, x}));
    s.Gamma = gamma;
    return s;
}

StructureMapSearch search_structure_maps(const DescentShape& s, std::int64_t budget) {
    StructureMapSearch found;
    for (const auto& d : enumerate_presheaf_morphisms(s.A1, s.A2, budget)) {
        if (psh_is_identity(psh_compose(s.a1, d)) && psh_is_identity(psh_compose(s.a2, d))) {
            found.Delta = d;
            break;
        }
    }
    if (found.Delta) {
        for (const auto& m : enumerate_presheaf_morphisms(s.A2, s.A3, budget)) {
            if (!found.s1 && psh_equal(psh_compose(s.p1, m), psh_compose(*found.Delta, s.a2)) &&
                psh_is_identity(psh_compose(s.p2, m)) && psh_is_identity(psh_compose(s.p3, m)))
                found.s1 = m;
            if (!found.s2 && psh_is_identity(psh_compose(s.p1, m)) &&
                psh_is_identity(psh_compose(s.p2, m)) &&
                psh_equal(psh_compose(s.p3, m), psh_compose(*found.Delta, s.a1)))
                found.s2 = m;
        }
        // σ and Γ jointly: σ is determined by Γ through p1Γ = σ
        for (const auto& g : enumerate_presheaf_morphisms(s.A2, s.A3, budget)) {
            PresheafMorphism sig = psh_compose(s.p1, g);
            if (psh_is_identity(psh_compose(sig, sig)) &&
                psh_equal(psh_compose(s.p2, g), psh_compose(*found.Delta, s.a1)) &&
                psh_is_identity(psh_compose(s.p3, g))) {
                found.sigma = sig;
                found.Gamma = g;
                break;
            }
        }
    }
    return found;
}

}  // namespace brt
