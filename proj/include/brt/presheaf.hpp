#ifndef BRT_PRESHEAF_HPP
#define BRT_PRESHEAF_HPP

#include <map>
#include <optional>

#include "brt/coeff.hpp"
#include "brt/fincat.hpp"

namespace brt {

// A presheaf of finite sets on a finite base category: contravariant, so a
// base morphism f: c -> d acts by A(f): A(d) -> A(c). Elements of A(c) are
// 0..sizes[c]-1.
struct Presheaf {
    FinCategoryPtr base;
    std::vector<int> sizes;                  // per base object
    std::vector<std::vector<int>> action;    // per base morphism f: A(tgt f) -> A(src f)
    std::vector<std::vector<std::string>> element_names;  // optional

    int size(int c) const { return sizes[c]; }
    int act(int f, int elt) const { return action[f][elt]; }
    std::string element_name(int c, int elt) const;
};

using PresheafPtr = std::shared_ptr<const Presheaf>;

std::vector<std::string> validate_presheaf(const Presheaf& a);
bool presheaves_equal(const Presheaf& a, const Presheaf& b);

struct PresheafMorphism {
    PresheafPtr source, target;
    std::vector<std::vector<int>> components;  // per base object: A(c) -> B(c)

    int at(int c, int elt) const { return components[c][elt]; }
};

std::vector<std::string> validate_presheaf_morphism(const PresheafMorphism& u);
PresheafMorphism psh_identity(const PresheafPtr& a);
PresheafMorphism psh_compose(const PresheafMorphism& g, const PresheafMorphism& f);  // g∘f
bool psh_equal(const PresheafMorphism& u, const PresheafMorphism& v);
bool psh_is_identity(const PresheafMorphism& u);

// All presheaf morphisms A -> B, lexicographic in the component tables.
std::vector<PresheafMorphism> enumerate_presheaf_morphisms(const PresheafPtr& a, const PresheafPtr& b,
                                                           std::int64_t budget = kDefaultBudget);

// The category of elements of A. Objects are pairs (c, γ∈A(c)); there is one
// morphism (c,γ) -> (d,δ) for each base arrow φ: d -> c with A(φ)(γ) = δ.
// Representations (module rep) are covariant functors on this category; with
// this orientation the representable at (c,γ) evaluates at (d,δ) to
// {φ: d -> c | A(φ)(γ) = δ}.
struct ElCat {
    PresheafPtr presheaf;
    FinCategory cat;
    std::vector<std::pair<int, int>> obj_label;  // ∫-object -> (c, elt)
    std::vector<int> obj_offset;                 // base object -> first ∫-object id
    std::vector<int> mor_base;                   // ∫-morphism -> base morphism id
    std::vector<std::vector<int>> mor_index_;    // [∫-object][base morphism] -> ∫-morphism or -1

    int obj_index(int c, int elt) const { return obj_offset[c] + elt; }
    // the ∫-morphism out of src_obj with underlying base arrow phi (-1 if none)
    int mor_index(int src_obj, int phi) const { return mor_index_[src_obj][phi]; }
};

using ElCatPtr = std::shared_ptr<const ElCat>;

ElCatPtr elements_category(const PresheafPtr& a);
CatFunctor elements_functor(const PresheafMorphism& u, const ElCatPtr& dom, const ElCatPtr& cod);

struct FibreProduct {
    PresheafPtr object;
    PresheafMorphism pi1, pi2;
    std::vector<std::vector<std::pair<int, int>>> pairs;  // per base object, in index order
};

FibreProduct fibre_product(const PresheafMorphism& a, const PresheafMorphism& b);

// The simplicial-style shape underlying (pre-)descent data: four presheaves
// with arrows satisfying a∘a1 = a∘a2 and the face identities
// a1p2 = a1p3, a1p1 = a2p3, a2p1 = a2p2 (defining b1, b2, b3), plus optional
// diagonal, partial diagonals, factor exchange and graph maps.
struct DescentShape {
    PresheafPtr A0, A1, A2, A3;
    PresheafMorphism a, a1, a2, p1, p2, p3;
    std::optional<PresheafMorphism> Delta;  // a1Δ = a2Δ = id
    std::optional<PresheafMorphism> s1;     // p1s1 = Δa2, p2s1 = p3s1 = id
    std::optional<PresheafMorphism> s2;     // p1s2 = p2s2 = id, p3s2 = Δa1
    std::optional<PresheafMorphism> sigma;  // σσ = id
    std::optional<PresheafMorphism> Gamma;  // p1Γ = σ, p2Γ = Δa1, p3Γ = id

    PresheafMorphism b1() const { return psh_compose(a1, p2); }
    PresheafMorphism b2() const { return psh_compose(a1, p1); }
    PresheafMorphism b3() const { return psh_compose(a2, p1); }
};

std::vector<std::string> validate_shape(const DescentShape& s);

// A2 = A1×_{A0}A1, A3 = A1×_{A0}A1×_{A0}A1 with projections p_i omitting the
// i-th coordinate, and the canonical diagonal/partial-diagonal/exchange/graph
// structure maps.
DescentShape canonical_shape(const PresheafMorphism& a);

struct StructureMapSearch {
    std::optional<PresheafMorphism> Delta, s1, s2, sigma, Gamma;
};

// Exhaustive search for structure maps satisfying the defining equations of
// DescentShape (σ and Γ are searched jointly).
StructureMapSearch search_structure_maps(const DescentShape& s, std::int64_t budget = kDefaultBudget);

}  // namespace brt

#endif
