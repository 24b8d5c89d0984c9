#include "brt/rep.hpp"

#include <algorithm>
#include <map>

namespace brt {

namespace {

std::string rep_obj_name(const Representation& m, int x) { return m.elcat->cat.object_name(x); }

}  // namespace

std::vector<std::string> validate_representation(const Representation& m) {
    std::vector<std::string> errs;
    const FinCategory& cat = m.elcat->cat;
    if (static_cast<int>(m.ob.size()) != cat.n_objects) {
        errs.push_back("structure: object table size mismatch");
        return errs;
    }
    if (static_cast<int>(m.mor.size()) != cat.n_mor()) {
        errs.push_back("structure: morphism table size mismatch");
        return errs;
    }
    for (int x = 0; x < cat.n_objects; ++x) {
        if (m.ob[x].kind != m.kind) errs.push_back("structure: kind mismatch at " + rep_obj_name(m, x));
        if (m.kind == CoeffKind::Vect && !(m.ob[x].field == m.field))
            errs.push_back("structure: field mismatch at " + rep_obj_name(m, x));
    }
    for (int f = 0; f < cat.n_mor(); ++f) {
        if (m.mor[f].src != m.ob[cat.src(f)] || m.mor[f].tgt != m.ob[cat.tgt(f)])
            errs.push_back("structure: endpoint mismatch at morphism " + cat.morphism_name(f));
    }
    if (!errs.empty()) return errs;
    for (int x = 0; x < cat.n_objects; ++x)
        if (m.mor[cat.identity[x]] != coeff_identity(m.ob[x]))
            errs.push_back("law: identity not preserved at " + rep_obj_name(m, x));
    for (int g = 0; g < cat.n_mor(); ++g)
        for (int f = 0; f < cat.n_mor(); ++f) {
            int gf = cat.compose(g, f);
            if (gf < 0) continue;
            if (m.mor[gf] != coeff_compose(m.mor[g], m.mor[f]))
                errs.push_back("law: composition not preserved on (" + cat.morphism_name(g) + ", " +
                               cat.morphism_name(f) + ")");
        }
    return errs;
}

bool reps_equal(const Representation& m, const Representation& n) {
    if (m.kind != n.kind) return false;
    if (m.kind == CoeffKind::Vect && !(m.field == n.field)) return false;
    return m.ob == n.ob && m.mor == n.mor;
}

std::vector<std::string> validate_rep_morphism(const RepMorphism& f) {
    std::vector<std::string> errs;
    const FinCategory& cat = f.src.elcat->cat;
    if (static_cast<int>(f.comp.size()) != cat.n_objects) {
        errs.push_back("structure: component count mismatch");
        return errs;
    }
    for (int x = 0; x < cat.n_objects; ++x)
        if (f.comp[x].src != f.src.ob[x] || f.comp[x].tgt != f.tgt.ob[x])
            errs.push_back("structure: component endpoints wrong at " + cat.object_name(x));
    if (!errs.empty()) return errs;
    for (int m = 0; m < cat.n_mor(); ++m) {
        CoeffMorphism lhs = coeff_compose(f.tgt.mor[m], f.comp[cat.src(m)]);
        CoeffMorphism rhs = coeff_compose(f.comp[cat.tgt(m)], f.src.mor[m]);
        if (lhs != rhs) errs.push_back("law: naturality fails at " + cat.morphism_name(m));
    }
    return errs;
}

bool repmors_equal(const RepMorphism& f, const RepMorphism& g) { return f.comp == g.comp; }

RepMorphism rep_identity(const Representation& m) {
    RepMorphism f;
    f.src = m;
    f.tgt = m;
    for (const CoeffObject& x : m.ob) f.comp.push_back(coeff_identity(x));
    return f;
}

RepMorphism rep_compose(const RepMorphism& g, const RepMorphism& f) {
    RepMorphism h;
    h.src = f.src;
    h.tgt = g.tgt;
    for (size_t x = 0; x < f.comp.size(); ++x) h.comp.push_back(coeff_compose(g.comp[x], f.comp[x]));
    return h;
}

RepMorphism rep_inverse(const RepMorphism& f) {
    RepMorphism h;
    h.src = f.tgt;
    h.tgt = f.src;
    for (const CoeffMorphism& c : f.comp) h.comp.push_back(coeff_inverse(c));
    return h;
}

bool rep_is_iso(const RepMorphism& f) {
    return std::all_of(f.comp.begin(), f.comp.end(), [](const CoeffMorphism& c) { return is_iso(c); });
}
bool rep_is_epi(const RepMorphism& f) {
    return std::all_of(f.comp.begin(), f.comp.end(), [](const CoeffMorphism& c) { return is_epi(c); });
}
bool rep_is_mono(const RepMorphism& f) {
    return std::all_of(f.comp.begin(), f.comp.end(), [](const CoeffMorphism& c) { return is_mono(c); });
}

Representation representable_rep(const ElCatPtr& el, int obj, CoeffKind kind, Field field) {
    const FinCategory& cat = el->cat;
    Representation y;
    y.elcat = el;
    y.kind = CoeffKind::Set;
    std::vector<std::vector<int>> homs(cat.n_objects);
    for (int x = 0; x < cat.n_objects; ++x) {
        homs[x] = cat.hom(obj, x);
        y.ob.push_back(set_object(static_cast<int>(homs[x].size())));
    }
    for (int m = 0; m < cat.n_mor(); ++m) {
        int sx = cat.src(m), tx = cat.tgt(m);
        std::vector<int> map;
        for (int k : homs[sx]) {
            int mk = cat.compose(m, k);
            auto it = std::lower_bound(homs[tx].begin(), homs[tx].end(), mk);
            map.push_back(static_cast<int>(it - homs[tx].begin()));
        }
        y.mor.push_back(set_morphism(y.ob[sx], y.ob[tx], std::move(map)));
    }
    if (kind == CoeffKind::Set) return y;
    return linearize_rep(y, field);
}

Representation linearize_rep(const Representation& set_rep, Field field) {
    Representation v;
    v.elcat = set_rep.elcat;
    v.kind = CoeffKind::Vect;
    v.field = field;
    for (const CoeffObject& x : set_rep.ob) v.ob.push_back(free_object(x, field));
    for (const CoeffMorphism& f : set_rep.mor) v.mor.push_back(linearize_map(f, field));
    return v;
}

Representation rep_coproduct(const std::vector<Representation>& ms) {
    if (ms.empty()) throw std::invalid_argument("rep_coproduct: empty family");
    Representation out;
    out.elcat = ms[0].elcat;
    out.kind = ms[0].kind;
    out.field = ms[0].field;
    const FinCategory& cat = out.elcat->cat;
    for (int x = 0; x < cat.n_objects; ++x) {
        int n = 0;
        for (const Representation& m : ms) n += m.ob[x].n;
        out.ob.push_back(out.kind == CoeffKind::Set ? set_object(n) : vect_object(n, out.field));
    }
    for (int f = 0; f < cat.n_mor(); ++f) {
        int sx = cat.src(f), tx = cat.tgt(f);
        if (out.kind == CoeffKind::Set) {
            std::vector<int> map;
            int off = 0;
            for (const Representation& m : ms) {
                for (int v : m.mor[f].map) map.push_back(off + v);
                off += m.ob[tx].n;
            }
            out.mor.push_back(set_morphism(out.ob[sx], out.ob[tx], std::move(map)));
        } else {
            Mat blk = Mat::zero(out.ob[tx].n, out.ob[sx].n, out.field);
            int ro = 0, co = 0;
            for (const Representation& m : ms) {
                const Mat& b = m.mor[f].mat;
                for (int r = 0; r < b.rows; ++r)
                    for (int c = 0; c < b.cols; ++c) blk.set(ro + r, co + c, b.get(r, c));
                ro += b.rows;
                co += b.cols;
            }
            out.mor.push_back(vect_morphism(out.ob[sx], out.ob[tx], std::move(blk)));
        }
    }
    return out;
}

namespace {

RepMorphism from_components(const Representation& src, const Representation& tgt,
                            std::vector<CoeffMorphism> comp) {
    RepMorphism f;
    f.src = src;
    f.tgt = tgt;
    f.comp = std::move(comp);
    return f;
}

std::vector<RepMorphism> hom_reps_set(const Representation& m, const Representation& n,
                                      std::int64_t budget) {
    const FinCategory& cat = m.elcat->cat;
    int nob = cat.n_objects;
    std::vector<std::vector<CoeffMorphism>> cand(nob);
    std::int64_t total = 1;
    for (int x = 0; x < nob; ++x) {
        cand[x] = hom_set(m.ob[x], n.ob[x], budget);
        total *= std::max<std::int64_t>(1, static_cast<std::int64_t>(cand[x].size()));
        if (total > budget) throw BudgetExceeded("hom_reps: search space exceeds budget");
    }
    // morphisms checkable once object k is assigned
    std::vector<std::vector<int>> check_at(nob);
    for (int f = 0; f < cat.n_mor(); ++f) check_at[std::max(cat.src(f), cat.tgt(f))].push_back(f);

    std::vector<RepMorphism> out;
    std::vector<CoeffMorphism> comp(nob, coeff_identity(set_object(0)));
    auto rec = [&](auto&& self, int k) -> void {
        if (k == nob) {
            out.push_back(from_components(m, n, comp));
            return;
        }
        for (const CoeffMorphism& c : cand[k]) {
            comp[k] = c;
            bool ok = true;
            for (int f : check_at[k]) {
                if (coeff_compose(n.mor[f], comp[cat.src(f)]) !=
                    coeff_compose(comp[cat.tgt(f)], m.mor[f])) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<RepMorphism> hom_reps_vect(const Representation& m, const Representation& n,
                                       std::int64_t budget) {
    const FinCategory& cat = m.elcat->cat;
    int nob = cat.n_objects;
    // Unknowns: entries of each component matrix C_x (n.ob[x].n rows by
    // m.ob[x].n cols), row-major, blocks in object order.
    std::vector<int> off(nob + 1, 0);
    for (int x = 0; x < nob; ++x) off[x + 1] = off[x] + n.ob[x].n * m.ob[x].n;
    int unknowns = off[nob];
    std::int64_t nrows = 0;
    for (int f = 0; f < cat.n_mor(); ++f)
        nrows += static_cast<std::int64_t>(n.ob[cat.tgt(f)].n) * m.ob[cat.src(f)].n;
    if (nrows * unknowns > budget) throw BudgetExceeded("hom_reps: linear system exceeds budget");

    Mat sys = Mat::zero(static_cast<int>(nrows), unknowns, m.field);
    int row = 0;
    for (int f = 0; f < cat.n_mor(); ++f) {
        int sx = cat.src(f), tx = cat.tgt(f);
        const Mat& mf = m.mor[f].mat;  // m.ob[tx].n x m.ob[sx].n
        const Mat& nf = n.mor[f].mat;  // n.ob[tx].n x n.ob[sx].n
        // (N(f) C_sx - C_tx M(f))[i][j] = 0 for i < n.ob[tx].n, j < m.ob[sx].n
        for (int i = 0; i < n.ob[tx].n; ++i)
            for (int j = 0; j < m.ob[sx].n; ++j) {
                for (int k = 0; k < n.ob[sx].n; ++k)
                    sys.set(row, off[sx] + k * m.ob[sx].n + j, nf.get(i, k));
                for (int k = 0; k < m.ob[tx].n; ++k) {
                    int col = off[tx] + i * m.ob[tx].n + k;
                    sys.set(row, col, sys.get(row, col) - mf.get(k, j));
                }
                ++row;
            }
    }
    std::vector<RepMorphism> out;
    for (const Mat& v : mat_kernel_basis(sys)) {
        std::vector<CoeffMorphism> comp;
        for (int x = 0; x < nob; ++x) {
            Mat c = Mat::zero(n.ob[x].n, m.ob[x].n, m.field);
            for (int i = 0; i < c.rows; ++i)
                for (int j = 0; j < c.cols; ++j) c.set(i, j, v.get(off[x] + i * c.cols + j, 0));
            comp.push_back(vect_morphism(m.ob[x], n.ob[x], std::move(c)));
        }
        out.push_back(from_components(m, n, std::move(comp)));
    }
    return out;
}

}  // namespace

std::vector<RepMorphism> hom_reps(const Representation& m, const Representation& n,
                                  std::int64_t budget) {
    if (m.kind != n.kind) throw std::invalid_argument("hom_reps: kind mismatch");
    if (m.kind == CoeffKind::Vect && !(m.field == n.field))
        throw std::invalid_argument("hom_reps: field mismatch");
    return m.kind == CoeffKind::Set ? hom_reps_set(m, n, budget) : hom_reps_vect(m, n, budget);
}

BaseArrow make_base_arrow(const PresheafMorphism& a, const ElCatPtr& dom, const ElCatPtr& cod) {
    BaseArrow ar;
    ar.a = a;
    ar.dom = dom;
    ar.cod = cod;
    ar.functor = elements_functor(a, dom, cod);
    for (int z = 0; z < cod->cat.n_objects; ++z)
        ar.commas.push_back(comma_category(ar.functor, z, CommaDirection::Over));
    return ar;
}

Representation pullback_rep(const BaseArrow& ar, const Representation& m0) {
    Representation m;
    m.elcat = ar.dom;
    m.kind = m0.kind;
    m.field = m0.field;
    for (int x = 0; x < ar.dom->cat.n_objects; ++x) m.ob.push_back(m0.ob[ar.functor.ob(x)]);
    for (int f = 0; f < ar.dom->cat.n_mor(); ++f) m.mor.push_back(m0.mor[ar.functor.mor(f)]);
    return m;
}

RepMorphism pullback_mor(const BaseArrow& ar, const RepMorphism& f) {
    RepMorphism g;
    g.src = pullback_rep(ar, f.src);
    g.tgt = pullback_rep(ar, f.tgt);
    for (int x = 0; x < ar.dom->cat.n_objects; ++x) g.comp.push_back(f.comp[ar.functor.ob(x)]);
    return g;
}

DirectImage direct_image(const BaseArrow& ar, const Representation& m1) {
    DirectImage di;
    di.rep.elcat = ar.cod;
    di.rep.kind = m1.kind;
    di.rep.field = m1.field;
    const FinCategory& ccat = ar.cod->cat;
    for (int z = 0; z < ccat.n_objects; ++z) {
        const CommaCategory& k = ar.commas[z];
        Diagram d;
        d.shape = k.projection.domain;
        d.kind = m1.kind;
        d.field = m1.field;
        for (auto [x, u] : k.object_labels) {
            (void)u;
            d.ob.push_back(m1.ob[x]);
        }
        for (int t : k.morphism_labels) d.mor.push_back(m1.mor[t]);
        di.colims.push_back(colimit(d));
        di.rep.ob.push_back(di.colims.back().obj);
    }
    for (int w = 0; w < ccat.n_mor(); ++w) {
        int z = ccat.src(w), zp = ccat.tgt(w);
        const CommaCategory& kz = ar.commas[z];
        const CommaCategory& kzp = ar.commas[zp];
        std::vector<CoeffMorphism> legs;
        for (auto [x, u] : kz.object_labels) {
            auto idx = kzp.object_index(x, ccat.compose(w, u));
            legs.push_back(di.colims[zp].cocone[*idx]);
        }
        di.rep.mor.push_back(di.colims[z].factor(legs, di.rep.ob[zp]));
    }
    return di;
}

RepMorphism direct_image_mor(const BaseArrow& ar, const RepMorphism& f) {
    DirectImage dm = direct_image(ar, f.src);
    DirectImage dn = direct_image(ar, f.tgt);
    RepMorphism g;
    g.src = dm.rep;
    g.tgt = dn.rep;
    for (int z = 0; z < ar.cod->cat.n_objects; ++z) {
        const CommaCategory& k = ar.commas[z];
        std::vector<CoeffMorphism> legs;
        for (size_t i = 0; i < k.object_labels.size(); ++i)
            legs.push_back(coeff_compose(dn.colims[z].cocone[i], f.comp[k.object_labels[i].first]));
        g.comp.push_back(dm.colims[z].factor(legs, dn.rep.ob[z]));
    }
    return g;
}

RepMorphism unit(const BaseArrow& ar, const Representation& m) {
    DirectImage di = direct_image(ar, m);
    RepMorphism eta;
    eta.src = m;
    eta.tgt = pullback_rep(ar, di.rep);
    for (int x = 0; x < ar.dom->cat.n_objects; ++x) {
        int z = ar.functor.ob(x);
        auto idx = ar.commas[z].object_index(x, ar.cod->cat.identity[z]);
        eta.comp.push_back(di.colims[z].cocone[*idx]);
    }
    return eta;
}

RepMorphism counit(const BaseArrow& ar, const Representation& n) {
    Representation pb = pullback_rep(ar, n);
    DirectImage di = direct_image(ar, pb);
    RepMorphism eps;
    eps.src = di.rep;
    eps.tgt = n;
    for (int z = 0; z < ar.cod->cat.n_objects; ++z) {
        const CommaCategory& k = ar.commas[z];
        std::vector<CoeffMorphism> legs;
        for (auto [x, u] : k.object_labels) {
            (void)x;
            legs.push_back(n.mor[u]);
        }
        eps.comp.push_back(di.colims[z].factor(legs, n.ob[z]));
    }
    return eps;
}

RepMorphism transpose(const BaseArrow& ar, const Representation& m, const RepMorphism& psi) {
    return rep_compose(pullback_mor(ar, psi), unit(ar, m));
}

RepMorphism transpose_inv(const BaseArrow& ar, const Representation& n, const RepMorphism& theta) {
    return rep_compose(counit(ar, n), direct_image_mor(ar, theta));
}

std::vector<Rat> flatten_repmor(const RepMorphism& f) {
    std::vector<Rat> v;
    for (const CoeffMorphism& c : f.comp)
        for (int r = 0; r < c.mat.rows; ++r)
            for (int cc = 0; cc < c.mat.cols; ++cc) v.push_back(c.mat.get(r, cc));
    return v;
}

Mat stack_repmors(const std::vector<RepMorphism>& fs, Field field) {
    std::vector<std::vector<Rat>> cols;
    for (const RepMorphism& f : fs) cols.push_back(flatten_repmor(f));
    int total = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    Mat out = Mat::zero(total, static_cast<int>(fs.size()), field);
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t r = 0; r < cols[j].size(); ++r)
            out.set(static_cast<int>(r), static_cast<int>(j), cols[j][r]);
    return out;
}

std::vector<std::string> verify_adjunction(const BaseArrow& ar,
                                           const std::vector<Representation>& dom_samples,
                                           const std::vector<Representation>& cod_samples,
                                           std::int64_t budget) {
    std::vector<std::string> errs;
    for (size_t i = 0; i < dom_samples.size(); ++i) {
        const Representation& m = dom_samples[i];
        DirectImage di = direct_image(ar, m);
        RepMorphism tri = rep_compose(counit(ar, di.rep), direct_image_mor(ar, unit(ar, m)));
        if (!repmors_equal(tri, rep_identity(di.rep)))
            errs.push_back("triangle (εa_*)(a_*η) != id at domain sample " + std::to_string(i));
    }
    for (size_t i = 0; i < cod_samples.size(); ++i) {
        const Representation& n = cod_samples[i];
        Representation pb = pullback_rep(ar, n);
        RepMorphism tri = rep_compose(pullback_mor(ar, counit(ar, n)), unit(ar, pb));
        if (!repmors_equal(tri, rep_identity(pb)))
            errs.push_back("triangle (a*ε)(ηa*) != id at codomain sample " + std::to_string(i));
    }
    for (size_t i = 0; i < dom_samples.size(); ++i)
        for (size_t j = 0; j < cod_samples.size(); ++j) {
            const Representation& m = dom_samples[i];
            const Representation& n = cod_samples[j];
            DirectImage di = direct_image(ar, m);
            Representation pb = pullback_rep(ar, n);
            std::vector<RepMorphism> down = hom_reps(di.rep, n, budget);
            std::vector<RepMorphism> up = hom_reps(m, pb, budget);
            std::string where = " on pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (down.size() != up.size()) {
                errs.push_back("hom-set sizes differ under transpose" + where);
                continue;
            }
            bool ok = true;
            for (const RepMorphism& psi : down)
                if (!repmors_equal(transpose_inv(ar, n, transpose(ar, m, psi)), psi)) ok = false;
            for (const RepMorphism& th : up)
                if (!repmors_equal(transpose(ar, m, transpose_inv(ar, n, th)), th)) ok = false;
            if (!ok) errs.push_back("transpose not mutually inverse" + where);
        }
    return errs;
}

RepMorphism retraction_r(const BaseArrow& ar, const Representation& m, const Representation& n,
                         const RepMorphism& f) {
    DirectImage dn = direct_image(ar, n);
    return rep_compose(counit(ar, dn.rep),
                       rep_compose(direct_image_mor(ar, f), direct_image_mor(ar, unit(ar, m))));
}

bool is_cartesian(const BaseArrow& ar, const TotalArrow& t) {
    RepMorphism theta = t.tilde_cart ? *t.tilde_cart : transpose(ar, t.src, *t.tilde_cocart);
    return rep_is_iso(theta);
}

bool is_cocartesian(const BaseArrow& ar, const TotalArrow& t) {
    RepMorphism psi = t.tilde_cocart ? *t.tilde_cocart : transpose_inv(ar, t.tgt, *t.tilde_cart);
    return rep_is_iso(psi);
}

bool is_fully_faithful(const BaseArrow& ar, const std::vector<Representation>& family,
                       std::int64_t budget) {
    for (const Representation& m0 : family)
        for (const Representation& n0 : family) {
            std::vector<RepMorphism> below = hom_reps(m0, n0, budget);
            Representation pm = pullback_rep(ar, m0);
            Representation pn = pullback_rep(ar, n0);
            std::vector<RepMorphism> above = hom_reps(pm, pn, budget);
            if (m0.kind == CoeffKind::Set) {
                if (below.size() != above.size()) return false;
                std::vector<std::vector<CoeffMorphism>> images;
                for (const RepMorphism& f : below) {
                    RepMorphism pf = pullback_mor(ar, f);
                    if (std::find(images.begin(), images.end(), pf.comp) != images.end())
                        return false;  // not faithful
                    bool found = false;
                    for (const RepMorphism& g : above)
                        if (repmors_equal(pf, g)) found = true;
                    if (!found) return false;
                    images.push_back(pf.comp);
                }
            } else {
                if (below.size() != above.size()) return false;
                if (below.empty()) continue;
                std::vector<RepMorphism> pbs;
                for (const RepMorphism& f : below) pbs.push_back(pullback_mor(ar, f));
                if (mat_rank(stack_repmors(pbs, m0.field)) != static_cast<int>(pbs.size()))
                    return false;
            }
        }
    return true;
}

}  // namespace brt
