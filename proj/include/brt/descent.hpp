#ifndef BRT_DESCENT_HPP
#define BRT_DESCENT_HPP

#include "brt/monad.hpp"

namespace brt {

// A commutative square s∘q = r∘p of presheaf arrows
//        p
//     V ---> X
//   q |      | r        yielding the base change morphism
//     v      v          χ_M: q_* p* M  ==>  s* r_* M   (M over X).
//     Y ---> Z
//        s
// Cartesianity is not required.
struct BaseChangeSquare {
    BaseArrow p, q, r, s;
};

BaseChangeSquare make_square(const BaseArrow& p, const BaseArrow& q, const BaseArrow& r,
                             const BaseArrow& s);  // throws unless s∘q = r∘p

// χ_M = ε^q(s*r_*M) ∘ q_*(p* η^r_M)
RepMorphism chi(const BaseChangeSquare& sq, const Representation& m);

enum class ExchangeVerdict { Iso, EpiOnly, Neither };

struct ExchangeReport {
    std::vector<std::pair<std::string, ExchangeVerdict>> per_object;  // tested family
    ExchangeVerdict aggregate = ExchangeVerdict::Iso;                 // meet of verdicts
};

// Evaluates χ on every representable over the square's X (the paper's
// sufficient family) plus caller-supplied objects.
ExchangeReport exchange_status(const BaseChangeSquare& sq, CoeffKind kind, Field field,
                               const std::vector<Representation>& extra = {},
                               std::int64_t budget = kDefaultBudget);

// A descent shape together with categories of elements, base-arrow machinery
// for every structure arrow, and the monad of a.
struct ShapeContext {
    DescentShape shape;
    ElCatPtr E0, E1, E2, E3;
    BaseArrow a, a1, a2, p1, p2, p3;
    std::optional<BaseArrow> Delta, sigma;
    MonadInstance monad;
};

ShapeContext make_context(const DescentShape& shape);

BaseChangeSquare square_eq6(const ShapeContext& c);   // (p,q,r,s) = (a1,a2,a,a)
BaseChangeSquare square_eq12(const ShapeContext& c);  // (p,q,r,s) = (p3,p1,a2,a1)

// λ_X = χ of the square (eq12): (p1)_* p3* X -> a1* (a2)_* X, X over A2.
RepMorphism lambda(const ShapeContext& c, const Representation& x);

// ξ(φ) = a2*φ ∘ a1*η_M for φ: T^aM -> N; and the defining chain
// (transpose of φ∘χ_M under (a2)_* ⊣ a2*), which must agree (key lemma).
RepMorphism xi(const ShapeContext& c, const Representation& m, const RepMorphism& phi);
RepMorphism xi_via_definition(const ShapeContext& c, const Representation& m,
                              const RepMorphism& phi);

// α12 = p3*, α13 = p2*, α23 = p1* on w: a1*M -> a2*N; θij = αij ∘ ξ.
RepMorphism alpha_ij(const ShapeContext& c, const RepMorphism& w, int i, int j);
RepMorphism theta_ij(const ShapeContext& c, const Representation& m, const RepMorphism& phi,
                     int i, int j);

// ρ(ψ) for ψ: T^aT^aM -> N: precompose with (χ*χ)∘((a2)_*λa1*), then
// transpose under (a2)_* and (p1)_* to land in hom(b1*M, b3*N).
RepMorphism rho(const ShapeContext& c, const Representation& m, const RepMorphism& psi);

// Lemma l1 a): the two composites (b3)_*b1*M -> T^aM agree; the two strict
// realizations (a2)_*(p1)_* and (a2)_*(p2)_* of (b3)_* are bridged by the
// canonical isomorphism between two left adjoints of the same functor b3*.
bool check_l1_diagram(const ShapeContext& c, const Representation& m);

struct PreDescentDatum {
    Representation m;  // over A1
    RepMorphism v;     // a1*M -> a2*M
};

bool predescent_check(const ShapeContext& c, const PreDescentDatum& d);  // p2*v = p1*v ∘ p3*v
bool descent_check(const ShapeContext& c, const PreDescentDatum& d);     // + Δ*v = 1

// Wraps ξ and asserts Eq. (4.1) Δ*ξ(φ) = φ∘η_M; if the candidate is
// associative, asserts the cocycle condition; if also unital, asserts the
// descent condition. Violations throw (they would be implementation bugs).
PreDescentDatum algebra_to_descent(const ShapeContext& c, const AlgebraCandidate& cand);

enum class InverseMode { ExactInverse, Search };

// ExactInverse: φ = adj⁻¹(v) ∘ χ_M⁻¹, requires χ_M iso. Search: the unique
// φ ∈ hom(T^aM, M) with ξ(φ) = v; throws if none or several are found.
AlgebraCandidate descent_to_algebra(const ShapeContext& c, const PreDescentDatum& d,
                                    InverseMode mode, std::int64_t budget = kDefaultBudget);

struct P41Report {
    bool ii_to_i_applicable = false;  // v cancellable + s1/s2 available
    bool ii_to_i_pass = false;        // Δ*v = 1 verified
    bool i_to_ii_applicable = false;  // Δ*v = 1 + σ available with a1σ = a2
    bool i_to_ii_pass = false;        // σ*v a two-sided inverse of v
    std::vector<std::string> notes;
};

P41Report p41_check(const ShapeContext& c, const PreDescentDatum& d);

struct ChevalleyReport {
    struct Item {
        std::string object;
        bool chi_iso = false;
        bool c_witness_cocartesian = false;   // k1 of the (C) witness square
        bool cprime_witness_cartesian = false;  // χ of the (C') witness square
    };
    std::vector<Item> items;
    bool c_equivalent = true;       // (C) verdict matches exchange on every witness
    bool cprime_equivalent = true;  // (C') verdict matches exchange on every witness
};

// Lemma l5: builds the proof's witness squares (eq7) over the square (eq6)
// for each instance M'0 and checks both Chevalley conditions against the
// exchange verdict.
ChevalleyReport chevalley_check(const ShapeContext& c, const std::vector<Representation>& instances);

// Lemma l3: for every f: M -> a*M0, ξ(a*(adj⁻¹ f)) = a1*f.
bool lemma_l3_check(const ShapeContext& c, const Representation& m, const Representation& m0,
                    std::int64_t budget = kDefaultBudget);

}  // namespace brt

#endif
