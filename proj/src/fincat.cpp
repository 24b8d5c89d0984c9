#include "brt/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace brt {

std::vector<int> FinCategory::hom(int x, int y) const {
    std::vector<int> out;
    for (int m = 0; m < n_mor(); ++m)
        if (morphisms[m].src == x && morphisms[m].tgt == y) out.push_back(m);
    return out;
}

std::string FinCategory::object_name(int x) const {
    if (x >= 0 && x < static_cast<int>(object_names.size()) && !object_names[x].empty())
        return object_names[x];
    return "#" + std::to_string(x);
}

std::string FinCategory::morphism_name(int m) const {
    if (m >= 0 && m < n_mor() && !morphisms[m].name.empty()) return morphisms[m].name;
    return "m" + std::to_string(m);
}

CatFunctor identity_functor(const FinCategoryPtr& c) {
    CatFunctor f;
    f.domain = c;
    f.codomain = c;
    f.object_map.resize(c->n_objects);
    std::iota(f.object_map.begin(), f.object_map.end(), 0);
    f.morphism_map.resize(c->n_mor());
    std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
    return f;
}

CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f) {
    CatFunctor h;
    h.domain = f.domain;
    h.codomain = g.codomain;
    h.object_map.reserve(f.object_map.size());
    for (int x : f.object_map) h.object_map.push_back(g.object_map[x]);
    h.morphism_map.reserve(f.morphism_map.size());
    for (int m : f.morphism_map) h.morphism_map.push_back(g.morphism_map[m]);
    return h;
}

bool functors_equal(const CatFunctor& f, const CatFunctor& g) {
    return f.object_map == g.object_map && f.morphism_map == g.morphism_map;
}

std::vector<std::string> validate_category(const FinCategory& c) {
    std::vector<std::string> report;
    const int n = c.n_objects;
    const int m = c.n_mor();

    for (int i = 0; i < m; ++i) {
        if (c.src(i) < 0 || c.src(i) >= n || c.tgt(i) < 0 || c.tgt(i) >= n)
            report.push_back("structure: morphism " + std::to_string(i) + " has dangling src/tgt");
    }
    if (static_cast<int>(c.identity.size()) != n) {
        report.push_back("structure: identity table has wrong size");
        return report;
    }
    if (c.compose_table.size() != static_cast<size_t>(m) * m) {
        report.push_back("structure: composition table has wrong size");
        return report;
    }
    if (!report.empty()) return report;

    for (int x = 0; x < n; ++x) {
        int e = c.identity[x];
        if (e < 0 || e >= m) {
            report.push_back("structure: identity of object " + std::to_string(x) + " is dangling");
        } else if (c.src(e) != x || c.tgt(e) != x) {
            report.push_back("structure: identity of object " + std::to_string(x) + " is not an endomorphism");
        }
    }
    if (!report.empty()) return report;

    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            int gf = c.compose(g, f);
            bool composable = c.src(g) == c.tgt(f);
            if (!composable) {
                if (gf != -1)
                    report.push_back("structure: compose(" + std::to_string(g) + "," + std::to_string(f) +
                                     ") defined on non-composable pair");
                continue;
            }
            if (gf < 0 || gf >= m) {
                report.push_back("structure: compose(" + std::to_string(g) + "," + std::to_string(f) +
                                 ") missing or dangling");
            } else if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g)) {
                report.push_back("law: src/tgt mismatch in compose(" + std::to_string(g) + "," + std::to_string(f) + ")");
            }
        }
    if (!report.empty()) return report;

    for (int f = 0; f < m; ++f) {
        if (c.compose(f, c.identity[c.src(f)]) != f)
            report.push_back("law: right unit fails for morphism " + std::to_string(f));
        if (c.compose(c.identity[c.tgt(f)], f) != f)
            report.push_back("law: left unit fails for morphism " + std::to_string(f));
    }

    for (int h = 0; h < m; ++h)
        for (int g = 0; g < m; ++g) {
            if (c.src(h) != c.tgt(g)) continue;
            for (int f = 0; f < m; ++f) {
                if (c.src(g) != c.tgt(f)) continue;
                if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
                    report.push_back("law: associativity fails on triple (" + std::to_string(h) + "," +
                                     std::to_string(g) + "," + std::to_string(f) + ")");
            }
        }
    return report;
}

std::vector<std::string> validate_functor(const CatFunctor& f) {
    std::vector<std::string> report;
    const FinCategory& x = *f.domain;
    const FinCategory& z = *f.codomain;
    if (static_cast<int>(f.object_map.size()) != x.n_objects ||
        static_cast<int>(f.morphism_map.size()) != x.n_mor()) {
        report.push_back("structure: map tables have wrong size");
        return report;
    }
    for (int m = 0; m < x.n_mor(); ++m) {
        int fm = f.mor(m);
        if (z.src(fm) != f.ob(x.src(m)) || z.tgt(fm) != f.ob(x.tgt(m)))
            report.push_back("law: functor breaks src/tgt on morphism " + std::to_string(m));
    }
    for (int o = 0; o < x.n_objects; ++o)
        if (f.mor(x.identity[o]) != z.identity[f.ob(o)])
            report.push_back("law: functor breaks identity of object " + std::to_string(o));
    for (int g = 0; g < x.n_mor(); ++g)
        for (int m = 0; m < x.n_mor(); ++m) {
            if (x.src(g) != x.tgt(m)) continue;
            if (f.mor(x.compose(g, m)) != z.compose(f.mor(g), f.mor(m)))
                report.push_back("law: functor breaks composition on (" + std::to_string(g) + "," +
                                 std::to_string(m) + ")");
        }
    return report;
}

FinCategory delooping(const std::vector<std::vector<int>>& table,
                      const std::vector<std::string>& element_names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("delooping: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("delooping: ragged table");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("delooping: entry out of range");
    }
    // group axioms: associativity, two-sided identity, inverses
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int g = 0; g < n; ++g) ok = ok && table[cand][g] == g && table[g][cand] == g;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e < 0) throw std::invalid_argument("delooping: no identity element");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("delooping: non-associative table");
    for (int a = 0; a < n; ++a) {
        bool inv = false;
        for (int b = 0; b < n; ++b) inv = inv || (table[a][b] == e && table[b][a] == e);
        if (!inv) throw std::invalid_argument("delooping: element without inverse");
    }

    FinCategory c;
    c.n_objects = 1;
    c.object_names = {"*"};
    c.identity = {e};
    c.morphisms.resize(n);
    for (int g = 0; g < n; ++g) {
        c.morphisms[g].src = 0;
        c.morphisms[g].tgt = 0;
        c.morphisms[g].name =
            g < static_cast<int>(element_names.size()) ? element_names[g] : "g" + std::to_string(g);
    }
    c.compose_table.assign(static_cast<size_t>(n) * n, -1);
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f) c.set_compose(g, f, table[g][f]);
    return c;
}

std::optional<int> CommaCategory::object_index(int x, int u) const {
    for (int i = 0; i < static_cast<int>(object_labels.size()); ++i)
        if (object_labels[i] == std::make_pair(x, u)) return i;
    return std::nullopt;
}

CommaCategory comma_category(const CatFunctor& f, int z0, CommaDirection dir) {
    const FinCategory& x = *f.domain;
    const FinCategory& z = *f.codomain;
    CommaCategory k;

    for (int ox = 0; ox < x.n_objects; ++ox) {
        int fx = f.ob(ox);
        std::vector<int> us = dir == CommaDirection::Over ? z.hom(fx, z0) : z.hom(z0, fx);
        for (int u : us) k.object_labels.emplace_back(ox, u);
    }
    const int nk = static_cast<int>(k.object_labels.size());
    k.cat.n_objects = nk;
    for (auto [ox, u] : k.object_labels)
        k.cat.object_names.push_back("(" + x.object_name(ox) + "," + z.morphism_name(u) + ")");

    // a morphism (x,u) -> (x',u') for each t: x -> x' with the triangle commuting
    std::map<std::pair<std::pair<int, int>, int>, int> mor_index;  // ((src,tgt), t) -> id
    for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nk; ++b) {
            auto [xa, ua] = k.object_labels[a];
            auto [xb, ub] = k.object_labels[b];
            for (int t : x.hom(xa, xb)) {
                bool ok = dir == CommaDirection::Over ? z.compose(ub, f.mor(t)) == ua
                                                      : z.compose(f.mor(t), ua) == ub;
                if (!ok) continue;
                FinCategory::Mor m;
                m.src = a;
                m.tgt = b;
                m.name = x.morphism_name(t);
                mor_index[{{a, b}, t}] = k.cat.n_mor();
                k.cat.morphisms.push_back(m);
                k.morphism_labels.push_back(t);
            }
        }

    k.cat.identity.resize(nk);
    for (int a = 0; a < nk; ++a)
        k.cat.identity[a] = mor_index.at({{a, a}, x.identity[k.object_labels[a].first]});

    const int nm = k.cat.n_mor();
    k.cat.compose_table.assign(static_cast<size_t>(nm) * nm, -1);
    for (int g = 0; g < nm; ++g)
        for (int m = 0; m < nm; ++m) {
            if (k.cat.src(g) != k.cat.tgt(m)) continue;
            int t = x.compose(k.morphism_labels[g], k.morphism_labels[m]);
            k.cat.set_compose(g, m, mor_index.at({{k.cat.src(m), k.cat.tgt(g)}, t}));
        }

    k.projection.domain = std::make_shared<FinCategory>(k.cat);
    k.projection.codomain = f.domain;
    for (auto [ox, u] : k.object_labels) k.projection.object_map.push_back(ox);
    k.projection.morphism_map = k.morphism_labels;
    return k;
}

std::vector<int> initial_objects(const FinCategory& c) {
    std::vector<int> out;
    for (int x = 0; x < c.n_objects; ++x) {
        bool initial = true;
        for (int y = 0; y < c.n_objects && initial; ++y)
            initial = c.hom(x, y).size() == 1;
        if (initial) out.push_back(x);
    }
    return out;
}

std::vector<std::vector<int>> connected_components(const FinCategory& c) {
    std::vector<int> parent(c.n_objects);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int m = 0; m < c.n_mor(); ++m) {
        int a = find(c.src(m)), b = find(c.tgt(m));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> classes;
    for (int x = 0; x < c.n_objects; ++x) classes[find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : classes) out.push_back(members);
    return out;
}

bool categories_equal(const FinCategory& a, const FinCategory& b) {
    if (a.n_objects != b.n_objects || a.n_mor() != b.n_mor()) return false;
    for (int m = 0; m < a.n_mor(); ++m)
        if (a.src(m) != b.src(m) || a.tgt(m) != b.tgt(m)) return false;
    return a.identity == b.identity && a.compose_table == b.compose_table;
}

}  // namespace brt
