#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brt/descent.hpp"
#include "brt/scenario.hpp"

using namespace brt;

TEST_CASE("exchange verdicts per builtin") {
    auto aggregate = [](const std::string& name) {
        Scenario s = builtin_scenario(name);
        ShapeContext c = make_context(s.shape);
        return exchange_status(square_eq6(c), s.kind, s.field).aggregate;
    };
    CHECK(aggregate("set-canonical") == ExchangeVerdict::Iso);
    CHECK(aggregate("vect-canonical") == ExchangeVerdict::Iso);
    CHECK(aggregate("identity") == ExchangeVerdict::Iso);
    CHECK(aggregate("epi-only") == ExchangeVerdict::EpiOnly);
}

TEST_CASE("epi-only: χ is epi but not mono at a representable") {
    Scenario s = builtin_scenario("epi-only");
    ShapeContext c = make_context(s.shape);
    RepMorphism x = chi(square_eq6(c), representable_rep(c.E1, 0, s.kind, s.field));
    CHECK(rep_is_epi(x));
    CHECK(!rep_is_mono(x));
}

TEST_CASE("make_square rejects a non-commuting square") {
    Scenario s = builtin_scenario("set-canonical");
    ShapeContext c = make_context(s.shape);
    CHECK_THROWS(make_square(c.a1, c.a2, c.a1, c.a2));
}

TEST_CASE("key lemma on an exhaustive sweep of the canonical instance") {
    Scenario s = builtin_scenario("set-canonical");
    ShapeContext c = make_context(s.shape);
    for (int o = 0; o < c.E1->cat.n_objects; ++o) {
        Representation m = representable_rep(c.E1, o, s.kind, s.field);
        Representation tm = monad_apply(c.monad, m);
        for (int p = 0; p < c.E1->cat.n_objects; ++p) {
            Representation n = representable_rep(c.E1, p, s.kind, s.field);
            for (const RepMorphism& phi : hom_reps(tm, n))
                CHECK(xi(c, m, phi).comp == xi_via_definition(c, m, phi).comp);
        }
    }
}

TEST_CASE("lemma l1 a) diagram commutes on all canonical representables") {
    Scenario s = builtin_scenario("set-canonical");
    ShapeContext c = make_context(s.shape);
    for (int o = 0; o < c.E1->cat.n_objects; ++o)
        CHECK(check_l1_diagram(c, representable_rep(c.E1, o, s.kind, s.field)));
}

TEST_CASE("algebra_to_descent produces genuine descent data for K^a algebras") {
    Scenario s = builtin_scenario("vect-canonical");
    ShapeContext c = make_context(s.shape);
    for (int o = 0; o < c.E0->cat.n_objects; ++o) {
        AlgebraCandidate ka = comparison_Ka(c.monad, representable_rep(c.E0, o, s.kind, s.field));
        PreDescentDatum d = algebra_to_descent(c, ka);
        CHECK(predescent_check(c, d));
        CHECK(descent_check(c, d));
    }
}

TEST_CASE("descent_to_algebra search mode agrees with the exact inverse") {
    Scenario s = builtin_scenario("set-canonical");
    ShapeContext c = make_context(s.shape);
    Representation m = representable_rep(c.E1, 2, s.kind, s.field);
    Representation a1m = pullback_rep(c.a1, m);
    Representation a2m = pullback_rep(c.a2, m);
    for (const RepMorphism& v : hom_reps(a1m, a2m)) {
        AlgebraCandidate exact = descent_to_algebra(c, {m, v}, InverseMode::ExactInverse);
        AlgebraCandidate found = descent_to_algebra(c, {m, v}, InverseMode::Search);
        CHECK(exact.phi.comp == found.phi.comp);
    }
}

TEST_CASE("p41_check verifies both directions on an identity descent datum") {
    Scenario s = builtin_scenario("set-canonical");
    ShapeContext c = make_context(s.shape);
    AlgebraCandidate ka = comparison_Ka(c.monad, representable_rep(c.E0, 0, s.kind, s.field));
    PreDescentDatum d{ka.m, xi(c, ka.m, ka.phi)};
    P41Report r = p41_check(c, d);
    CHECK(r.i_to_ii_applicable);
    CHECK(r.i_to_ii_pass);
    CHECK(r.ii_to_i_applicable);
    CHECK(r.ii_to_i_pass);
}

TEST_CASE("chevalley conditions match the exchange verdict") {
    Scenario s = builtin_scenario("set-canonical");
    ShapeContext c = make_context(s.shape);
    std::vector<Representation> insts;
    for (int o = 0; o < c.E1->cat.n_objects; ++o)
        insts.push_back(representable_rep(c.E1, o, s.kind, s.field));
    ChevalleyReport r = chevalley_check(c, insts);
    CHECK(r.c_equivalent);
    CHECK(r.cprime_equivalent);
    for (const auto& it : r.items) {
        CHECK(it.chi_iso);
        CHECK(it.c_witness_cocartesian);
        CHECK(it.cprime_witness_cartesian);
    }

    Scenario se = builtin_scenario("epi-only");
    ShapeContext ce = make_context(se.shape);
    std::vector<Representation> einsts;
    for (int o = 0; o < ce.E1->cat.n_objects; ++o)
        einsts.push_back(representable_rep(ce.E1, o, se.kind, se.field));
    ChevalleyReport re = chevalley_check(ce, einsts);
    CHECK(re.c_equivalent);
    CHECK(re.cprime_equivalent);
    bool failure_witness = false;
    for (const auto& it : re.items)
        if (!it.chi_iso && !it.c_witness_cocartesian) failure_witness = true;
    CHECK(failure_witness);
}

TEST_CASE("lambda is the eq1.2 base change morphism with matching endpoints") {
    Scenario s = builtin_scenario("set-canonical");
    ShapeContext c = make_context(s.shape);
    Representation x = representable_rep(c.E2, 0, s.kind, s.field);
    RepMorphism l = lambda(c, x);
    CHECK(validate_rep_morphism(l).empty());
    CHECK(rep_is_iso(l));  // cartesian canonical shape
}
