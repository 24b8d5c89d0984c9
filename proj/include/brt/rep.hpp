#ifndef BRT_REP_HPP
#define BRT_REP_HPP

#include "brt/coeff.hpp"
#include "brt/fincat.hpp"
#include "brt/presheaf.hpp"

namespace brt {

// A representation of a presheaf A with coefficients in Set or Vect: a
// covariant functor from the category of elements of A.
struct Representation {
    ElCatPtr elcat;
    CoeffKind kind = CoeffKind::Set;
    Field field;
    std::vector<CoeffObject> ob;     // per ∫A object
    std::vector<CoeffMorphism> mor;  // per ∫A morphism
};

std::vector<std::string> validate_representation(const Representation& m);
bool reps_equal(const Representation& m, const Representation& n);

struct RepMorphism {
    Representation src, tgt;              // same base presheaf
    std::vector<CoeffMorphism> comp;      // per ∫A object
};

std::vector<std::string> validate_rep_morphism(const RepMorphism& f);
bool repmors_equal(const RepMorphism& f, const RepMorphism& g);
RepMorphism rep_identity(const Representation& m);
RepMorphism rep_compose(const RepMorphism& g, const RepMorphism& f);  // g∘f
RepMorphism rep_inverse(const RepMorphism& f);
bool rep_is_iso(const RepMorphism& f);
bool rep_is_epi(const RepMorphism& f);
bool rep_is_mono(const RepMorphism& f);

// Representable representation at an ∫A object: x -> hom(o, x), morphisms by
// post-composition. Vect kind yields its free linearization.
Representation representable_rep(const ElCatPtr& el, int obj, CoeffKind kind, Field field = Field{});
Representation rep_coproduct(const std::vector<Representation>& ms);
Representation linearize_rep(const Representation& set_rep, Field field);

// Complete enumeration (Set) or basis (Vect) of natural transformations
// m -> n, in deterministic order.
std::vector<RepMorphism> hom_reps(const Representation& m, const Representation& n,
                                  std::int64_t budget = kDefaultBudget);

// One base arrow a: A1 -> A0 together with all machinery of the adjunction
// (a_* ⊣ a*): the elements functor, and for every object z of ∫A0 the comma
// category whose colimit computes the direct image at z.
struct BaseArrow {
    PresheafMorphism a;
    ElCatPtr dom, cod;  // ∫A1, ∫A0
    CatFunctor functor;
    std::vector<CommaCategory> commas;  // per ∫A0 object, objects (x, u: F(x) -> z)
};

BaseArrow make_base_arrow(const PresheafMorphism& a, const ElCatPtr& dom, const ElCatPtr& cod);

Representation pullback_rep(const BaseArrow& ar, const Representation& m0);  // a*
RepMorphism pullback_mor(const BaseArrow& ar, const RepMorphism& f);

struct DirectImage {
    Representation rep;                 // a_*M over A0
    std::vector<ColimitResult> colims;  // per ∫A0 object
};

DirectImage direct_image(const BaseArrow& ar, const Representation& m1);  // a_*
RepMorphism direct_image_mor(const BaseArrow& ar, const RepMorphism& f);

RepMorphism unit(const BaseArrow& ar, const Representation& m);    // η: M -> a*a_*M
RepMorphism counit(const BaseArrow& ar, const Representation& n);  // ε: a_*a*N -> N

// adj(ψ) = a*ψ ∘ η_M : hom(a_*M, N) -> hom(M, a*N), and its inverse
// adj⁻¹(θ) = ε_N ∘ a_*θ. M and N name the endpoints that cannot be recovered
// from the tables of ψ resp. θ alone.
RepMorphism transpose(const BaseArrow& ar, const Representation& m, const RepMorphism& psi);
RepMorphism transpose_inv(const BaseArrow& ar, const Representation& n, const RepMorphism& theta);

// Triangle identities and transpose bijectivity over sample objects.
std::vector<std::string> verify_adjunction(const BaseArrow& ar,
                                           const std::vector<Representation>& dom_samples,
                                           const std::vector<Representation>& cod_samples,
                                           std::int64_t budget = kDefaultBudget);

// For f: T^aM -> T^aN over A1 (T^a = a*a_*), the retraction
// r(f) = ε_{a_*N} ∘ a_*f ∘ a_*η_M : a_*M -> a_*N of a* on hom(a_*M, a_*N).
RepMorphism retraction_r(const BaseArrow& ar, const Representation& m, const Representation& n,
                         const RepMorphism& f);

// An arrow of the total category over the base arrow, recorded by whichever
// adjoint transpose is available; the two determine each other.
struct TotalArrow {
    Representation src;  // over A1
    Representation tgt;  // over A0
    std::optional<RepMorphism> tilde_cart;    // src -> a*(tgt)
    std::optional<RepMorphism> tilde_cocart;  // a_*(src) -> tgt
};

bool is_cartesian(const BaseArrow& ar, const TotalArrow& t);
bool is_cocartesian(const BaseArrow& ar, const TotalArrow& t);

// Vectorization helpers for linear arguments about Vect rep morphisms: the
// component tables flattened row-major in object order, and a matrix whose
// columns are the flattenings of a family.
std::vector<Rat> flatten_repmor(const RepMorphism& f);
Mat stack_repmors(const std::vector<RepMorphism>& fs, Field field);

// Whether a* is bijective on hom(M0,N0) for every pair from the family.
bool is_fully_faithful(const BaseArrow& ar, const std::vector<Representation>& family,
                       std::int64_t budget = kDefaultBudget);

}  // namespace brt

#endif
