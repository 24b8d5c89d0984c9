#include "brt/monad.hpp"

#include <algorithm>

namespace brt {

MonadInstance make_monad(const BaseArrow& ar) { return MonadInstance{ar}; }

Representation monad_apply(const MonadInstance& t, const Representation& m) {
    return pullback_rep(t.arrow, direct_image(t.arrow, m).rep);
}

RepMorphism monad_apply_mor(const MonadInstance& t, const RepMorphism& f) {
    return pullback_mor(t.arrow, direct_image_mor(t.arrow, f));
}

RepMorphism monad_eta(const MonadInstance& t, const Representation& m) { return unit(t.arrow, m); }

RepMorphism monad_mu(const MonadInstance& t, const Representation& m) {
    return pullback_mor(t.arrow, counit(t.arrow, direct_image(t.arrow, m).rep));
}

std::vector<std::string> check_monad_laws(const MonadInstance& t,
                                          const std::vector<Representation>& samples) {
    std::vector<std::string> errs;
    for (size_t i = 0; i < samples.size(); ++i) {
        const Representation& m = samples[i];
        Representation tm = monad_apply(t, m);
        RepMorphism mu_m = monad_mu(t, m);
        // associativity: μ_M ∘ T^a(μ_M) = μ_M ∘ μ_{T^aM} on T^aT^aT^aM
        RepMorphism lhs = rep_compose(mu_m, monad_apply_mor(t, mu_m));
        RepMorphism rhs = rep_compose(mu_m, monad_mu(t, tm));
        if (!repmors_equal(lhs, rhs))
            errs.push_back("law: μ∘Tμ != μ∘μT at sample " + std::to_string(i));
        // unit laws: μ_M ∘ η_{T^aM} = id = μ_M ∘ T^a(η_M)
        RepMorphism id_tm = rep_identity(tm);
        if (!repmors_equal(rep_compose(mu_m, monad_eta(t, tm)), id_tm))
            errs.push_back("law: μ∘ηT != id at sample " + std::to_string(i));
        if (!repmors_equal(rep_compose(mu_m, monad_apply_mor(t, monad_eta(t, m))), id_tm))
            errs.push_back("law: μ∘Tη != id at sample " + std::to_string(i));
    }
    return errs;
}

bool check_unital(const MonadInstance& t, const AlgebraCandidate& cand) {
    return repmors_equal(rep_compose(cand.phi, monad_eta(t, cand.m)), rep_identity(cand.m));
}

bool check_associative(const MonadInstance& t, const AlgebraCandidate& cand) {
    return repmors_equal(rep_compose(cand.phi, monad_apply_mor(t, cand.phi)),
                         rep_compose(cand.phi, monad_mu(t, cand.m)));
}

AlgebraCandidate comparison_Ka(const MonadInstance& t, const Representation& m0) {
    AlgebraCandidate cand;
    cand.m = pullback_rep(t.arrow, m0);
    cand.phi = pullback_mor(t.arrow, counit(t.arrow, m0));
    return cand;
}

SplitResult split_unital_algebra(const MonadInstance& t, const AlgebraCandidate& cand,
                                 std::int64_t budget) {
    const BaseArrow& ar = t.arrow;
    const Representation& m = cand.m;
    RepMorphism e = rep_compose(monad_eta(t, m), cand.phi);  // T^aM -> T^aM
    if (!repmors_equal(rep_compose(e, e), e))
        throw std::runtime_error("split_unital_algebra: e = η∘φ is not idempotent (φ not unital?)");

    DirectImage di = direct_image(ar, m);
    std::vector<RepMorphism> endos = hom_reps(di.rep, di.rep, budget);
    std::optional<RepMorphism> tilde;
    if (m.kind == CoeffKind::Set) {
        for (const RepMorphism& c : endos) {
            if (!repmors_equal(rep_compose(c, c), c)) continue;
            if (repmors_equal(pullback_mor(ar, c), e)) {
                tilde = c;
                break;
            }
        }
    } else if (!endos.empty()) {
        // solve for e in the span of the pullbacks of the endomorphism basis
        std::vector<Rat> target = flatten_repmor(e);
        Mat sys = Mat::zero(static_cast<int>(target.size()), static_cast<int>(endos.size()), m.field);
        for (size_t j = 0; j < endos.size(); ++j) {
            std::vector<Rat> col = flatten_repmor(pullback_mor(ar, endos[j]));
            for (size_t r = 0; r < col.size(); ++r)
                sys.set(static_cast<int>(r), static_cast<int>(j), col[r]);
        }
        Mat b = Mat::zero(static_cast<int>(target.size()), 1, m.field);
        for (size_t r = 0; r < target.size(); ++r) b.set(static_cast<int>(r), 0, target[r]);
        Mat x;
        if (mat_solve(sys, b, x)) {
            RepMorphism c = rep_identity(di.rep);
            for (CoeffMorphism& comp : c.comp) comp.mat = mat_scale(comp.mat, Rat(0));
            for (size_t j = 0; j < endos.size(); ++j)
                for (size_t k = 0; k < c.comp.size(); ++k)
                    c.comp[k].mat = mat_add(c.comp[k].mat,
                                            mat_scale(endos[j].comp[k].mat, x.get(static_cast<int>(j), 0)));
            if (repmors_equal(rep_compose(c, c), c)) tilde = c;
        }
    }
    if (!tilde)
        throw std::runtime_error(
            "split_unital_algebra: no idempotent preimage of e under a* (full faithfulness fails?)");

    // split ẽ pointwise; the image assembles to a representation because ẽ is
    // a natural idempotent
    const FinCategory& ccat = ar.cod->cat;
    std::vector<IdempotentSplitting> splits;
    for (int z = 0; z < ccat.n_objects; ++z) splits.push_back(split_idempotent(tilde->comp[z]));
    Representation m0;
    m0.elcat = ar.cod;
    m0.kind = m.kind;
    m0.field = m.field;
    for (int z = 0; z < ccat.n_objects; ++z) m0.ob.push_back(splits[z].image);
    for (int w = 0; w < ccat.n_mor(); ++w)
        m0.mor.push_back(coeff_compose(
            splits[ccat.tgt(w)].pi, coeff_compose(di.rep.mor[w], splits[ccat.src(w)].iota)));

    RepMorphism pi;
    pi.src = di.rep;
    pi.tgt = m0;
    for (int z = 0; z < ccat.n_objects; ++z) pi.comp.push_back(splits[z].pi);

    SplitResult res;
    res.m0 = m0;
    res.nu = rep_compose(pullback_mor(ar, pi), monad_eta(t, m));
    if (!rep_is_iso(res.nu))
        throw std::runtime_error("split_unital_algebra: ν is not an isomorphism (internal error)");
    RepMorphism recovered = rep_compose(
        rep_inverse(res.nu),
        rep_compose(pullback_mor(ar, counit(ar, m0)), monad_apply_mor(t, res.nu)));
    if (!repmors_equal(recovered, cand.phi))
        throw std::runtime_error("split_unital_algebra: φ != ν⁻¹∘a*ε∘T^aν (internal error)");
    return res;
}

KaReport ka_essential_surjectivity_check(const MonadInstance& t,
                                         const std::vector<AlgebraCandidate>& algebras,
                                         std::int64_t budget) {
    KaReport rep;
    for (const AlgebraCandidate& cand : algebras) {
        KaReport::Item item;
        item.unital = check_unital(t, cand);
        item.associative = check_associative(t, cand);
        if (item.unital) {
            try {
                split_unital_algebra(t, cand, budget);
                item.splits = true;
                item.message = "splits: lands in the essential image of K^a";
            } catch (const std::exception& ex) {
                item.splits = false;
                item.message = ex.what();
            }
            if (!item.associative) rep.all_unital_associative = false;
            if (!item.splits) rep.all_unital_split = false;
        } else {
            item.message = "not unital; skipped";
        }
        rep.items.push_back(item);
    }
    return rep;
}

}  // namespace brt
