#ifndef BRT_MONAD_HPP
#define BRT_MONAD_HPP

#include "brt/rep.hpp"

namespace brt {

// The monad T^a = a*a_* on representations over A1 induced by a: A1 -> A0,
// with unit η (from module fibration) and multiplication μ = a* ε a_*.
struct MonadInstance {
    BaseArrow arrow;
};

MonadInstance make_monad(const BaseArrow& ar);

Representation monad_apply(const MonadInstance& t, const Representation& m);   // T^a M
RepMorphism monad_apply_mor(const MonadInstance& t, const RepMorphism& f);     // T^a f
RepMorphism monad_eta(const MonadInstance& t, const Representation& m);        // M -> T^a M
RepMorphism monad_mu(const MonadInstance& t, const Representation& m);         // T^a T^a M -> T^a M

// Monad laws μ∘T^aμ = μ∘μT^a and μ∘ηT^a = μ∘T^aη = id on the samples.
std::vector<std::string> check_monad_laws(const MonadInstance& t,
                                          const std::vector<Representation>& samples);

// A candidate algebra structure φ: T^a M -> M; classification is computed,
// not imposed.
struct AlgebraCandidate {
    Representation m;
    RepMorphism phi;
};

bool check_unital(const MonadInstance& t, const AlgebraCandidate& cand);       // φ∘η = id
bool check_associative(const MonadInstance& t, const AlgebraCandidate& cand);  // φ∘T^aφ = φ∘μ

// Eilenberg-Moore comparison K^a(M0) = (a*M0, a*ε_{M0}).
AlgebraCandidate comparison_Ka(const MonadInstance& t, const Representation& m0);

struct SplitResult {
    Representation m0;  // over A0
    RepMorphism nu;     // M ≅ a*M0
};

// Karoubian splitting of a unital algebra: e = η∘φ is a natural idempotent;
// a preimage ẽ of e under a* is found in hom(a_*M, a_*M) (search for Set,
// exact linear solve for Vect), split pointwise into M0, and ν = a*π ∘ η.
// Verifies φ = ν⁻¹ ∘ a*ε_{M0} ∘ T^aν before returning; throws on any failed
// precondition (e not idempotent, no idempotent preimage, identity fails).
SplitResult split_unital_algebra(const MonadInstance& t, const AlgebraCandidate& cand,
                                 std::int64_t budget = kDefaultBudget);

struct KaReport {
    struct Item {
        bool unital = false;
        bool associative = false;
        bool splits = false;
        std::string message;
    };
    std::vector<Item> items;
    bool all_unital_associative = true;  // Cor. c2 a) sweep
    bool all_unital_split = true;        // essential surjectivity sweep
};

KaReport ka_essential_surjectivity_check(const MonadInstance& t,
                                         const std::vector<AlgebraCandidate>& algebras,
                                         std::int64_t budget = kDefaultBudget);

}  // namespace brt

#endif
