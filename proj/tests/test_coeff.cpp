#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brt/coeff.hpp"

using namespace brt;

TEST_CASE("field constructors") {
    CHECK(field_fp(5).describe() == "F5");
    CHECK(field_q().describe() == "Q");
    CHECK_THROWS_AS(field_fp(6), std::invalid_argument);
}

TEST_CASE("exact matrix arithmetic over F5 and Q") {
    Field f5 = field_fp(5);
    Mat a = Mat::zero(2, 2, f5);
    a.set_int(0, 0, 1);
    a.set_int(0, 1, 2);
    a.set_int(1, 0, 3);
    a.set_int(1, 1, 4);
    CHECK(mat_rank(a) == 2);  // det = 4 - 6 = -2 ≠ 0 mod 5
    Mat inv = mat_inverse(a);
    CHECK(mat_mul(a, inv) == Mat::eye(2, f5));

    Field q = field_q();
    Mat b = Mat::zero(2, 2, q);
    b.set(0, 0, Rat(1, 2));
    b.set(0, 1, Rat(1, 3));
    b.set(1, 0, Rat(3, 2));
    b.set(1, 1, Rat(1));  // det = 1/2 - 1/2 = 0
    CHECK(mat_rank(b) == 1);
    CHECK(mat_kernel_basis(b).size() == 1);
    CHECK_THROWS(mat_inverse(b));

    Mat rhs = Mat::zero(2, 1, q);
    rhs.set(0, 0, Rat(1, 6));
    rhs.set(1, 0, Rat(1, 2));
    Mat x;
    CHECK(mat_solve(b, rhs, x));
    CHECK(mat_mul(b, x) == rhs);
}

TEST_CASE("hom_set enumeration counts and budget") {
    CHECK(hom_set(set_object(3), set_object(2)).size() == 8);  // 2^3
    CHECK(hom_set(set_object(0), set_object(2)).size() == 1);  // empty map
    Field f5 = field_fp(5);
    CHECK(hom_set(vect_object(2, f5), vect_object(3, f5)).size() == 6);  // matrix units
    CHECK_THROWS_AS(hom_set(set_object(20), set_object(20), 1000), BudgetExceeded);
}

TEST_CASE("idempotent splitting in Set and Vect") {
    CoeffMorphism e = set_morphism(set_object(3), set_object(3), {0, 0, 2});
    IdempotentSplitting s = split_idempotent(e);
    CHECK(s.image.n == 2);
    CHECK(coeff_compose(s.iota, s.pi) == e);
    CHECK(coeff_compose(s.pi, s.iota) == coeff_identity(s.image));

    Field f5 = field_fp(5);
    Mat m = Mat::zero(2, 2, f5);
    m.set_int(0, 0, 1);  // projection onto first coordinate
    CoeffMorphism ev = vect_morphism(vect_object(2, f5), vect_object(2, f5), m);
    IdempotentSplitting sv = split_idempotent(ev);
    CHECK(sv.image.n == 1);
    CHECK(coeff_compose(sv.iota, sv.pi) == ev);

    CoeffMorphism not_idem = set_morphism(set_object(2), set_object(2), {1, 0});
    CHECK_THROWS(split_idempotent(not_idem));
}

TEST_CASE("pushout colimit in Set with universal property") {
    // span: 2 <- 1 -> 2 glues one point of each: colimit has 3 elements
    auto shape = std::make_shared<FinCategory>();
    shape->n_objects = 3;  // 0 = apex, 1, 2 = feet
    shape->morphisms = {{0, 0, "i0"}, {1, 1, "i1"}, {2, 2, "i2"}, {0, 1, "l"}, {0, 2, "r"}};
    shape->identity = {0, 1, 2};
    shape->compose_table.assign(25, -1);
    shape->set_compose(0, 0, 0);
    shape->set_compose(1, 1, 1);
    shape->set_compose(2, 2, 2);
    shape->set_compose(3, 0, 3);
    shape->set_compose(1, 3, 3);
    shape->set_compose(4, 0, 4);
    shape->set_compose(2, 4, 4);
    REQUIRE(validate_category(*shape).empty());

    Diagram d;
    d.shape = shape;
    d.kind = CoeffKind::Set;
    d.ob = {set_object(1), set_object(2), set_object(2)};
    d.mor = {coeff_identity(d.ob[0]), coeff_identity(d.ob[1]), coeff_identity(d.ob[2]),
             set_morphism(d.ob[0], d.ob[1], {0}), set_morphism(d.ob[0], d.ob[2], {0})};
    REQUIRE(validate_diagram(d).empty());

    ColimitResult col = colimit(d);
    CHECK(col.obj.n == 3);
    // cocone commutes with diagram arrows
    CHECK(coeff_compose(col.cocone[1], d.mor[3]) == col.cocone[0]);
    CHECK(coeff_compose(col.cocone[2], d.mor[4]) == col.cocone[0]);
    // factoring a competing cocone: constant maps to a singleton
    std::vector<CoeffMorphism> legs = {set_morphism(d.ob[0], set_object(1), {0}),
                                       set_morphism(d.ob[1], set_object(1), {0, 0}),
                                       set_morphism(d.ob[2], set_object(1), {0, 0})};
    CoeffMorphism med = col.factor(legs, set_object(1));
    for (int i = 0; i < 3; ++i) CHECK(coeff_compose(med, col.cocone[i]) == legs[i]);
}

TEST_CASE("vect colimit of a coequalizer") {
    Field f5 = field_fp(5);
    // two parallel arrows 1 -> 1: id and 2·id; coequalizer kills the difference
    auto shape = std::make_shared<FinCategory>();
    shape->n_objects = 2;
    shape->morphisms = {{0, 0, "i0"}, {1, 1, "i1"}, {0, 1, "u"}, {0, 1, "v"}};
    shape->identity = {0, 1};
    shape->compose_table.assign(16, -1);
    shape->set_compose(0, 0, 0);
    shape->set_compose(1, 1, 1);
    shape->set_compose(2, 0, 2);
    shape->set_compose(1, 2, 2);
    shape->set_compose(3, 0, 3);
    shape->set_compose(1, 3, 3);
    REQUIRE(validate_category(*shape).empty());

    Diagram d;
    d.shape = shape;
    d.kind = CoeffKind::Vect;
    d.field = f5;
    d.ob = {vect_object(1, f5), vect_object(1, f5)};
    Mat one = Mat::eye(1, f5);
    Mat two = Mat::zero(1, 1, f5);
    two.set_int(0, 0, 2);
    d.mor = {coeff_identity(d.ob[0]), coeff_identity(d.ob[1]),
             vect_morphism(d.ob[0], d.ob[1], one), vect_morphism(d.ob[0], d.ob[1], two)};
    ColimitResult col = colimit(d);
    CHECK(col.obj.n == 0);  // x identified with 2x forces x = 0
}

TEST_CASE("free/forgetful utilities") {
    Field f5 = field_fp(5);
    CHECK(free_object(set_object(3), f5).n == 3);
    CHECK(underlying_set(vect_object(2, f5)).n == 25);
    CoeffMorphism f = set_morphism(set_object(2), set_object(2), {1, 0});
    CoeffMorphism lf = linearize_map(f, f5);
    CHECK(lf.mat.get(0, 1) == Rat(1));
    CHECK(lf.mat.get(1, 0) == Rat(1));
    CHECK(lf.mat.get(0, 0) == Rat(0));
}
