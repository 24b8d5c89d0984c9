#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brt/rep.hpp"
#include "brt/scenario.hpp"

using namespace brt;

namespace {

struct Fix {
    Scenario s = builtin_scenario("set-canonical");
    ElCatPtr e1 = elements_category(s.shape.A1);
    ElCatPtr e0 = elements_category(s.shape.A0);
    BaseArrow a = make_base_arrow(s.shape.a, e1, e0);
};

}  // namespace

TEST_CASE("representables satisfy the Yoneda count |Nat(y(o), M)| = |M(o)|") {
    Fix f;
    Representation big = rep_coproduct({representable_rep(f.e1, 0, CoeffKind::Set, {}),
                                        representable_rep(f.e1, 2, CoeffKind::Set, {})});
    std::vector<size_t> expected = {2, 0, 1};
    for (int o = 0; o < 3; ++o) {
        Representation y = representable_rep(f.e1, o, CoeffKind::Set, {});
        CHECK(validate_representation(y).empty());
        CHECK(hom_reps(y, big).size() == expected[o]);
        CHECK(static_cast<size_t>(big.ob[o].n) == expected[o]);
    }
}

TEST_CASE("linearized representable spans the same dimensions") {
    Fix f;
    Field f5 = field_fp(5);
    Representation y = representable_rep(f.e1, 0, CoeffKind::Set, {});
    Representation ly = linearize_rep(y, f5);
    Representation yv = representable_rep(f.e1, 0, CoeffKind::Vect, f5);
    CHECK(reps_equal(ly, yv));
    for (int o = 0; o < 3; ++o) CHECK(ly.ob[o].n == y.ob[o].n);
}

TEST_CASE("direct image of representables has the frozen cardinalities") {
    Fix f;
    std::vector<std::vector<int>> expected = {{1, 0}, {1, 0}, {1, 1}};
    for (int o = 0; o < 3; ++o) {
        DirectImage d = direct_image(f.a, representable_rep(f.e1, o, CoeffKind::Set, {}));
        CHECK(validate_representation(d.rep).empty());
        for (int z = 0; z < 2; ++z) CHECK(d.rep.ob[z].n == expected[o][z]);
    }
}

TEST_CASE("pullbacks are strict: a1*(a*X) == a2*(a*X) on the nose") {
    Scenario s = builtin_scenario("set-canonical");
    ShapeContext c = make_context(s.shape);
    Representation x0 = representable_rep(c.E0, 0, s.kind, s.field);
    Representation ax = pullback_rep(c.a, x0);
    Representation l = pullback_rep(c.a1, ax);
    Representation r = pullback_rep(c.a2, ax);
    CHECK(reps_equal(l, r));
}

TEST_CASE("adjunction triangles and transpose bijection") {
    Fix f;
    std::vector<Representation> dom, cod;
    for (int o = 0; o < 3; ++o) dom.push_back(representable_rep(f.e1, o, CoeffKind::Set, {}));
    for (int o = 0; o < 2; ++o) cod.push_back(representable_rep(f.e0, o, CoeffKind::Set, {}));
    CHECK(verify_adjunction(f.a, dom, cod).empty());

    // transpose and transpose_inv are mutually inverse on a sample hom-set
    Representation m = dom[2];
    Representation n = cod[0];
    DirectImage dm = direct_image(f.a, m);
    for (const RepMorphism& psi : hom_reps(dm.rep, n)) {
        RepMorphism theta = transpose(f.a, m, psi);
        RepMorphism back = transpose_inv(f.a, n, theta);
        CHECK(back.comp == psi.comp);
    }
}

TEST_CASE("unit and counit are natural transformations with correct endpoints") {
    Fix f;
    Representation m = representable_rep(f.e1, 2, CoeffKind::Set, {});
    RepMorphism eta = unit(f.a, m);
    CHECK(validate_rep_morphism(eta).empty());
    CHECK(reps_equal(eta.src, m));
    Representation n = representable_rep(f.e0, 0, CoeffKind::Set, {});
    RepMorphism eps = counit(f.a, n);
    CHECK(validate_rep_morphism(eps).empty());
    CHECK(reps_equal(eps.tgt, n));
}

TEST_CASE("full faithfulness detection") {
    // identity builtin: a is an isomorphism, a* fully faithful
    Scenario si = builtin_scenario("identity");
    ShapeContext ci = make_context(si.shape);
    std::vector<Representation> fam_i;
    for (int o = 0; o < ci.E0->cat.n_objects; ++o)
        fam_i.push_back(representable_rep(ci.E0, o, si.kind, si.field));
    CHECK(is_fully_faithful(ci.a, fam_i));

    // canonical builtin: a collapses two elements; a* is not fully faithful on
    // the direct image of y(0,p0) ⊕ y(0,p1) (End grows from 4 to 16 under a*)
    Scenario sc = builtin_scenario("set-canonical");
    ShapeContext cc = make_context(sc.shape);
    Representation m = rep_coproduct({representable_rep(cc.E1, 0, sc.kind, sc.field),
                                      representable_rep(cc.E1, 1, sc.kind, sc.field)});
    std::vector<Representation> fam_c = {direct_image(cc.a, m).rep};
    CHECK(!is_fully_faithful(cc.a, fam_c));
}

TEST_CASE("hom_reps over Vect returns a basis (count equals hom dimension)") {
    Field f5 = field_fp(5);
    Scenario s = builtin_scenario("vect-canonical");
    ShapeContext c = make_context(s.shape);
    Representation y0 = representable_rep(c.E1, 0, CoeffKind::Vect, f5);
    Representation y2 = representable_rep(c.E1, 2, CoeffKind::Vect, f5);
    // Yoneda: Hom(y0, y2 ⊕ y0) has dimension card(y2⊕y0 at obj 0) = 1 + 1
    Representation big = rep_coproduct({y2, y0});
    CHECK(hom_reps(y0, big).size() == 2);
    // basis elements are linearly independent
    auto basis = hom_reps(y0, big);
    Mat st = stack_repmors(basis, f5);
    CHECK(mat_rank(st) == static_cast<int>(basis.size()));
}

TEST_CASE("cartesian and cocartesian detection through adjoint transposes") {
    Fix f;
    Representation m0 = representable_rep(f.e0, 0, CoeffKind::Set, {});
    Representation am0 = pullback_rep(f.a, m0);
    // the identity transpose a*M0 -> a*M0 is a cartesian arrow over a
    TotalArrow cart;
    cart.src = am0;
    cart.tgt = m0;
    cart.tilde_cart = rep_identity(am0);
    CHECK(is_cartesian(f.a, cart));

    DirectImage dm = direct_image(f.a, am0);
    TotalArrow cocart;
    cocart.src = am0;
    cocart.tgt = dm.rep;
    cocart.tilde_cocart = rep_identity(dm.rep);
    CHECK(is_cocartesian(f.a, cocart));
}
