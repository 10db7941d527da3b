#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "isolink/complexes.hpp"
#include "isolink/conncalc.hpp"
#include "isolink/errors.hpp"
#include "isolink/groups.hpp"
#include "isolink/strata.hpp"

using namespace isolink;

namespace {

GroupPtr grp(FiniteGroup g) { return std::make_shared<FiniteGroup>(std::move(g)); }

ConnFn random_fn(std::mt19937& rng, const FiniteGroup& g) {
    ConnFn out = constant_conn_fn(g, LinkMode::Isovariant, 1, ExtInt::finite(0));
    for (auto& [key, v] : out.values) {
        unsigned pick = rng() % 9u;
        if (pick == 0)
            v.value = ExtInt::negative_infinity();
        else if (pick == 8)
            v.value = ExtInt::infinity();
        else
            v.value = ExtInt::finite(static_cast<long long>(pick) - 4);
        v.homological_caveat = rng() % 2u == 0;
    }
    return out;
}

// raises some values, leaving the rest alone
ConnFn raised(std::mt19937& rng, const ConnFn& a) {
    ConnFn out = a;
    for (auto& [key, v] : out.values) {
        unsigned pick = rng() % 3u;
        if (pick == 1 && v.value.is_finite()) v.value = ExtInt::finite(v.value.value + 2);
        if (pick == 2) v.value = ExtInt::infinity();
    }
    return out;
}

bool pointwise_leq(const ConnFn& a, const ConnFn& b) {
    for (const auto& [key, v] : a.values)
        if (!(v.value <= b.values.at(key).value)) return false;
    return true;
}

} // namespace

TEST_SUITE("conncalc") {

TEST_CASE("canonical class keys") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    CHECK(class_keys(c2, LinkMode::Isovariant, 1) ==
          std::vector<std::string>{"C2", "e", "e<C2"});
    CHECK(class_keys(c2, LinkMode::Equivariant, 1) == std::vector<std::string>{"C2", "e"});
    // equivariant keys ignore the chain length bound
    CHECK(class_keys(c2, LinkMode::Equivariant, 4) == std::vector<std::string>{"C2", "e"});

    FiniteGroup c4 = FiniteGroup::cyclic(4);
    CHECK(class_keys(c4, LinkMode::Isovariant, 2) ==
          std::vector<std::string>{"C2", "C2<C4", "C4", "e", "e<C2", "e<C2<C4", "e<C4"});

    // conjugate chains collapse to one key each
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(class_keys(s3, LinkMode::Isovariant, 1) ==
          std::vector<std::string>{"(1)", "(1)<G", "(3)", "(3)<G", "G", "e", "e<(1)", "e<(3)",
                                   "e<G"});
    CHECK(class_keys(s3, LinkMode::Equivariant, 1) ==
          std::vector<std::string>{"(1)", "(3)", "G", "e"});

    // representatives are canonical and aligned with the keys
    for (LinkMode mode : {LinkMode::Isovariant, LinkMode::Equivariant}) {
        auto keys = class_keys(s3, mode, 1);
        auto reps = class_representatives(s3, mode, 1);
        REQUIRE(keys.size() == reps.size());
        for (size_t i = 0; i < reps.size(); ++i) {
            CHECK(chain_key(s3, reps[i]) == keys[i]);
            CHECK(chain_class(s3, reps[i]).canonical == reps[i]);
        }
    }
}

TEST_CASE("constant functions cover the key set") {
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    ConnFn fn = constant_conn_fn(c4, LinkMode::Isovariant, 2, ExtInt::finite(3));
    auto keys = class_keys(c4, LinkMode::Isovariant, 2);
    REQUIRE(fn.values.size() == keys.size());
    for (const std::string& key : keys) {
        CHECK(fn.values.at(key) == Connectivity{ExtInt::finite(3), false});
    }
    CHECK(constant_conn_fn(c4, LinkMode::Equivariant, 1, ExtInt::infinity()).values.size() == 3);
}

TEST_CASE("measured connectivity of the reflection pairs") {
    auto c2 = grp(FiniteGroup::cyclic(2));

    // two swapped points into their cone
    auto sign_pair = inclusion_map(rep_sphere(c2, {{RepGenerator::Kind::Sign}}),
                                   rep_disk(c2, {{RepGenerator::Kind::Sign}}));
    ConnFn sign_fn = measure_conn_fn(sign_pair, LinkMode::Isovariant, 1);
    CHECK(sign_fn.values.at("C2") == Connectivity{ExtInt::finite(-1), false});
    CHECK(sign_fn.values.at("e") == Connectivity{ExtInt::infinity(), true});
    CHECK(sign_fn.values.at("e<C2") == Connectivity{ExtInt::finite(-1), false});

    ConnFn sign_eqvt = measure_conn_fn(sign_pair, LinkMode::Equivariant, 1);
    CHECK(sign_eqvt.values.at("C2").value == ExtInt::finite(-1));
    CHECK(sign_eqvt.values.at("e").value == ExtInt::finite(0));

    // fixed circle into its cone
    auto regular_pair = inclusion_map(
        rep_sphere(c2, {{RepGenerator::Kind::Trivial}, {RepGenerator::Kind::Sign}}),
        rep_disk(c2, {{RepGenerator::Kind::Trivial}, {RepGenerator::Kind::Sign}}));
    ConnFn reg_fn = measure_conn_fn(regular_pair, LinkMode::Isovariant, 1);
    CHECK(reg_fn.values.at("C2") == Connectivity{ExtInt::finite(0), false});
    CHECK(reg_fn.values.at("e") == Connectivity{ExtInt::infinity(), true});
    CHECK(reg_fn.values.at("e<C2") == Connectivity{ExtInt::finite(0), false});

    // identities are infinitely connected on every class
    ConnFn ident = measure_conn_fn(
        identity_map(rep_disk(c2, {{RepGenerator::Kind::Trivial}, {RepGenerator::Kind::Sign}})),
        LinkMode::Isovariant, 1);
    for (const auto& [key, v] : ident.values) CHECK(v.value == ExtInt::infinity());
}

TEST_CASE("measured space connectivity") {
    auto c2 = grp(FiniteGroup::cyclic(2));
    auto circle = rep_sphere(c2, {{RepGenerator::Kind::Trivial}, {RepGenerator::Kind::Sign}});
    ConnFn fn = measure_space_conn(circle, LinkMode::Isovariant, 1);
    // each link model is a pair of points or two arcs, all disconnected
    CHECK(fn.values.at("C2") == Connectivity{ExtInt::finite(-1), false});
    CHECK(fn.values.at("e") == Connectivity{ExtInt::finite(-1), false});
    CHECK(fn.values.at("e<C2") == Connectivity{ExtInt::finite(-1), false});

    ConnFn eq = measure_space_conn(circle, LinkMode::Equivariant, 1);
    CHECK(eq.values.at("C2").value == ExtInt::finite(-1));
    CHECK(eq.values.at("e").value == ExtInt::finite(0));

    // provisional models taint the estimate
    auto c4 = grp(FiniteGroup::cyclic(4));
    auto disk4 = rep_disk(c4, {{RepGenerator::Kind::Rotation, 1},
                               {RepGenerator::Kind::Rotation, 2}});
    ConnFn deep = measure_space_conn(disk4, LinkMode::Isovariant, 2);
    CHECK(deep.values.at("e<C2<C4").homological_caveat);
    CHECK(deep.values.at("e<C2").homological_caveat);
}

TEST_CASE("pushout estimate arithmetic") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    ConnFn a = constant_conn_fn(c2, LinkMode::Isovariant, 1, ExtInt::finite(0));
    a.values["e"].value = ExtInt::infinity();

    ConnFn once = bm_pushout(a, a);
    CHECK(once.values.at("e").value == ExtInt::infinity());
    CHECK(once.values.at("C2").value == ExtInt::finite(-1));
    CHECK(once.values.at("e<C2").value == ExtInt::finite(-1));

    // iterating keeps subtracting one; there is no floor
    ConnFn twice = bm_pushout(once, once);
    CHECK(twice.values.at("e").value == ExtInt::infinity());
    CHECK(twice.values.at("C2").value == ExtInt::finite(-3));
    CHECK(twice.values.at("e<C2").value == ExtInt::finite(-3));

    // plus infinity absorbs minus infinity
    ConnFn top = constant_conn_fn(c2, LinkMode::Isovariant, 1, ExtInt::infinity());
    ConnFn bottom = constant_conn_fn(c2, LinkMode::Isovariant, 1, ExtInt::negative_infinity());
    CHECK(bm_pushout(top, bottom).values.at("e").value == ExtInt::infinity());
    CHECK(bm_pushout(bottom, top).values.at("e").value == ExtInt::infinity());
    CHECK(bm_pushout(bottom, bottom).values.at("e").value == ExtInt::negative_infinity());

    // caveats propagate through the arithmetic
    ConnFn tainted = a;
    tainted.values["C2"].homological_caveat = true;
    CHECK(bm_pushout(tainted, a).values.at("C2").homological_caveat);
    CHECK(bm_pushout(a, tainted).values.at("C2").homological_caveat);
    CHECK_FALSE(bm_pushout(a, a).values.at("C2").homological_caveat);

    // shape mismatches are rejected
    ConnFn eqvt = constant_conn_fn(c2, LinkMode::Equivariant, 1, ExtInt::finite(0));
    CHECK_THROWS_AS(bm_pushout(a, eqvt), ModeMismatch);
    ConnFn other = constant_conn_fn(FiniteGroup::cyclic(3), LinkMode::Isovariant, 1,
                                    ExtInt::finite(0));
    CHECK_THROWS_AS(bm_pushout(a, other), ModeMismatch);
}

TEST_CASE("cube estimates") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    std::mt19937 rng(1357u);

    // in dimension two the cube estimate is the pushout estimate
    for (int trial = 0; trial < 20; ++trial) {
        ConnFn a = random_fn(rng, c2);
        ConnFn b = random_fn(rng, c2);
        CHECK(bm_cube(2, {a, b}) == bm_pushout(a, b));
        CHECK(bm_pushout(a, b) == bm_pushout(b, a));
    }

    ConnFn one = constant_conn_fn(c2, LinkMode::Isovariant, 1, ExtInt::finite(1));
    ConnFn cube3 = bm_cube(3, {one, one, one});
    for (const auto& [key, v] : cube3.values) CHECK(v.value == ExtInt::finite(1));

    ConnFn zero = constant_conn_fn(c2, LinkMode::Isovariant, 1, ExtInt::finite(0));
    ConnFn cube4 = bm_cube(4, {one, one, zero, zero});
    for (const auto& [key, v] : cube4.values) CHECK(v.value == ExtInt::finite(-1));

    CHECK_THROWS_AS(bm_cube(1, {one}), WrongArity);
    CHECK_THROWS_AS(bm_cube(3, {one, one}), WrongArity);
    CHECK_THROWS_AS(bm_cube(2, {one, one, one}), WrongArity);
}

TEST_CASE("suspension bounds") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);

    ConnFn zero = constant_conn_fn(c2, LinkMode::Isovariant, 1, ExtInt::finite(0));
    FreudenthalBounds b0 = freudenthal_suite(zero);
    for (const auto& [key, v] : b0.universe_bound.values) CHECK(v.value == ExtInt::finite(1));
    for (const auto& [key, v] : b0.freudenthal_bound.values) CHECK(v.value == ExtInt::finite(1));

    ConnFn minus = constant_conn_fn(c2, LinkMode::Isovariant, 1, ExtInt::finite(-1));
    FreudenthalBounds b1 = freudenthal_suite(minus);
    for (const auto& [key, v] : b1.universe_bound.values) CHECK(v.value == ExtInt::finite(0));
    for (const auto& [key, v] : b1.freudenthal_bound.values) CHECK(v.value == ExtInt::finite(-1));

    ConnFn top = constant_conn_fn(c2, LinkMode::Isovariant, 1, ExtInt::infinity());
    FreudenthalBounds binf = freudenthal_suite(top);
    for (const auto& [key, v] : binf.freudenthal_bound.values)
        CHECK(v.value == ExtInt::infinity());

    // the stable bound is the pushout of the suspension bound with itself
    std::mt19937 rng(8642u);
    for (int trial = 0; trial < 20; ++trial) {
        ConnFn a = random_fn(rng, c2);
        FreudenthalBounds b = freudenthal_suite(a);
        CHECK(b.freudenthal_bound == bm_pushout(b.universe_bound, b.universe_bound));
        for (const auto& [key, v] : a.values) {
            CHECK(b.universe_bound.values.at(key).value == ext_add(v.value, 1));
            CHECK(b.universe_bound.values.at(key).homological_caveat == v.homological_caveat);
        }
    }

    ConnFn eqvt = constant_conn_fn(c2, LinkMode::Equivariant, 1, ExtInt::finite(0));
    CHECK_THROWS_AS(freudenthal_suite(eqvt), ModeMismatch);
}

TEST_CASE("pushout estimates are monotone") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    std::mt19937 rng(397u);
    for (int trial = 0; trial < 100; ++trial) {
        ConnFn a = random_fn(rng, c2);
        ConnFn b = random_fn(rng, c2);
        ConnFn higher = raised(rng, a);
        REQUIRE(pointwise_leq(a, higher));
        CHECK(pointwise_leq(bm_pushout(a, b), bm_pushout(higher, b)));
        CHECK(pointwise_leq(bm_pushout(b, a), bm_pushout(b, higher)));
    }
}

TEST_CASE("class representatives stand for their whole class") {
    auto s3 = grp(FiniteGroup::symmetric(3));
    auto e = trivial_subgroup();
    std::vector<Subgroup> order2;
    for (const Subgroup& h : enumerate_subgroups(*s3))
        if (h.order() == 2) order2.push_back(h);

    auto x = linking_simplex(s3, SubgroupChain({e, order2[0]}));
    ConnFn fn = measure_space_conn(x, LinkMode::Isovariant, 1);
    for (const Subgroup& h : order2) {
        auto model = chain_link_model(x, SubgroupChain({e, h}));
        CHECK(connectivity_of(model.complex).value == fn.values.at("e<(1)").value);
        auto single = stratum_model(x, h);
        CHECK(connectivity_of(single.complex).value == fn.values.at("(1)").value);
    }
}

} // TEST_SUITE("conncalc")
