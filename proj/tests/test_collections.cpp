#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nabla/classifier.hpp"
#include "nabla/collections.hpp"
#include "nabla/corpus.hpp"
#include "nabla/errors.hpp"

#include <algorithm>
#include <set>

using namespace nabla;
using enum Operator;

namespace {

Polynomial x1() { return Polynomial::variable(Axis::X1); }
Polynomial x2() { return Polynomial::variable(Axis::X2); }
Polynomial x3() { return Polynomial::variable(Axis::X3); }

OrderResult harmonic_order(const Polynomial& p) {
    return collection_order(CollectionKind::Harmonic, FieldValue{p}, 10);
}

}  // namespace

TEST_CASE("collection_order examples") {
    const auto r2 = radius_squared();
    CHECK(harmonic_order(x1() * x1() - x2() * x2()) == OrderResult{Order{1}});
    CHECK(harmonic_order(r2) == OrderResult{Order{2}});

    // Δr⁴ = 20r², Δ²r⁴ = 120.
    const auto r4 = r2 * r2;
    CHECK(laplacian(r4) == Rational(20) * r2);
    CHECK(laplacian_power(r4, 2) == Polynomial(120));
    CHECK(harmonic_order(r4) == OrderResult{Order{3}});

    const FieldValue rot = VectorField{-x2(), x1(), {}};
    CHECK(collection_order(CollectionKind::Curling, rot, 10) == OrderResult{Order{2}});
    CHECK(collection_order(CollectionKind::VectorHarmonic, rot, 10) == OrderResult{Order{1}});
}

TEST_CASE("collection_order bounds and sorts") {
    CHECK(collection_order(CollectionKind::Harmonic, FieldValue{pow(radius_squared(), 4)}, 3) ==
          OrderResult{ExceedsBound{3}});
    CHECK(harmonic_order(Polynomial()) == OrderResult{Order{1}});
    CHECK_THROWS_AS(collection_order(CollectionKind::Curling, FieldValue{x1()}), SortMismatch);
    CHECK_THROWS_AS(collection_order(CollectionKind::Harmonic, FieldValue{VectorField{}}),
                    SortMismatch);
    CHECK_THROWS_AS(collection_order(CollectionKind::Harmonic, FieldValue{x1()}, 0),
                    std::invalid_argument);
}

TEST_CASE("annihilates") {
    CHECK(annihilates(Chain{Div, Grad}, FieldValue{x1() * x2() * x3()}));
    CHECK_FALSE(annihilates(Chain{Div, Grad}, FieldValue{x1() * x1()}));
    CHECK(annihilates(Chain{Curl, Curl}, FieldValue{VectorField{-x2(), x1(), {}}}));
    CHECK_THROWS_AS(annihilates(Chain{Grad, Grad}, FieldValue{x1()}), MeaninglessChain);
    CHECK_THROWS_AS(annihilates(Chain{Curl}, FieldValue{x1()}), SortMismatch);
}

TEST_CASE("inclusion chains are monotone") {
    FieldGenerator gen(19);
    for (int i = 0; i < 20; ++i) {
        const FieldValue f = gen.polynomial(6);
        auto order = collection_order(CollectionKind::Harmonic, f, 16);
        REQUIRE(std::holds_alternative<Order>(order));
        const unsigned n = std::get<Order>(order).n;
        for (unsigned m = 1; m <= n + 2; ++m) {
            CHECK(is_zero(collection_iterate(CollectionKind::Harmonic, f, m)) == (m >= n));
            CHECK(annihilates(nontrivial_chain(Family::GradDivAlternating, 2 * m), f) == (m >= n));
        }

        const FieldValue v = gen.vector_field(4);
        for (auto kind : {CollectionKind::Curling, CollectionKind::VectorHarmonic}) {
            auto vo = collection_order(kind, v, 16);
            REQUIRE(std::holds_alternative<Order>(vo));
            const unsigned k = std::get<Order>(vo).n;
            for (unsigned m = 1; m <= k + 2; ++m)
                CHECK(is_zero(collection_iterate(kind, v, m)) == (m >= k));
        }
    }
}

TEST_CASE("strictness witnesses") {
    CHECK(harmonic_order(x1()) == OrderResult{Order{1}});
    CHECK(harmonic_order(radius_squared()) == OrderResult{Order{2}});
    CHECK(harmonic_order(pow(radius_squared(), 2)) == OrderResult{Order{3}});
}

TEST_CASE("laplacian power of x1 times f") {
    // f = x1: Δ(x1²) = 2 = 2·∂x1/∂x1 + x1·Δx1.
    CHECK(laplacian(x1() * x1()) == Polynomial(2));
    CHECK(check_example2(x1(), 1));
    CHECK(check_example2(Polynomial(), 3));

    FieldGenerator gen(21);
    for (int i = 0; i < 20; ++i) {
        auto f = gen.polynomial(4);
        for (unsigned n = 1; n <= 4; ++n) {
            CHECK(check_example2(f, n));
            CHECK(check_example2(f, n, Axis::X3));
        }
    }
    CHECK_THROWS_AS(check_example2(x1(), 0), std::invalid_argument);
}

TEST_CASE("laplacian power of x1^2 times f") {
    CHECK(check_example3(Polynomial(1), 2));

    // f = x1², n = 2: Δ²(x1⁴) = 24 and 8·2 + 0 + 4·2 + 0 = 24.
    const auto f = x1() * x1();
    CHECK(laplacian_power(x1() * x1() * f, 2) == Polynomial(24));
    CHECK(check_example3(f, 2));

    FieldGenerator gen(23);
    for (int i = 0; i < 20; ++i) {
        auto g = gen.polynomial(4);
        for (unsigned n = 1; n <= 4; ++n) {
            CHECK(check_example3(g, n));
            CHECK(check_example3(g, n, Axis::X2));
        }
    }
    CHECK_THROWS_AS(check_example3(f, 0), std::invalid_argument);
}

TEST_CASE("a wrong coefficient is detected") {
    // Guards against check_example3 comparing a side with itself.
    const auto f = pow(x1(), 3) * x2();
    const auto x = x1();
    auto lhs = laplacian_power(x * x * f, 2);
    auto wrong = Rational(7) * partial_derivative(partial_derivative(f, Axis::X1), Axis::X1) +
                 Rational(8) * x * partial_derivative(laplacian(f), Axis::X1) +
                 Rational(4) * laplacian(f) + x * x * laplacian_power(f, 2);
    CHECK(lhs != wrong);
    CHECK(check_example3(f, 2));
}

TEST_CASE("multiplying by x1 or r² raises the harmonic order by at most one") {
    FieldGenerator gen(29);
    for (unsigned n : {2u, 3u}) {
        for (int i = 0; i < 20; ++i) {
            auto f = gen.polyharmonic(n - 1);
            REQUIRE(harmonic_order(f) == OrderResult{Order{n - 1}});
            for (const auto& g : {x1() * f, radius_squared() * f}) {
                auto o = harmonic_order(g);
                REQUIRE(std::holds_alternative<Order>(o));
                CHECK(std::get<Order>(o).n <= n);
            }
        }
    }
}

TEST_CASE("curl curl equals grad div on vector-harmonic fields") {
    CHECK(check_eq22(VectorField{x2(), x3(), x1()}));
    CHECK(check_eq22(VectorField{x1() * x2(), x2() * x3(), x3() * x1()}));
    CHECK_THROWS_AS(check_eq22(VectorField{x1() * x1(), {}, {}}), NotInCollection);

    FieldGenerator gen(22);
    for (int i = 0; i < 20; ++i) CHECK(check_eq22(gen.vector_harmonic()));
}

TEST_CASE("third-order products vanish on harmonic arguments") {
    auto all_vanish = [](const auto& report) {
        return std::all_of(report.begin(), report.end(), [](const auto& e) { return e.vanishes; });
    };
    CHECK(all_vanish(example1_suite(x1() * x1() - x2() * x2(), VectorField{x2(), x3(), x1()})));
    CHECK(all_vanish(example1_suite(x1() * x2(), VectorField{x2() * x3(), x1() * x3(), x1() * x2()})));
    CHECK_THROWS_AS(example1_suite(x1() * x1(), VectorField{}), NotInCollection);
    CHECK_THROWS_AS(example1_suite(x1(), VectorField{x1() * x1(), {}, {}}), NotInCollection);

    auto report = example1_suite(Polynomial(), VectorField{});
    std::set<Chain> chains;
    for (const auto& e : report) {
        CHECK(chain_signature(e.chain).is_meaningful());
        chains.insert(e.chain);
    }
    CHECK(chains.size() == 8);

    // Off the harmonic collections the nontrivial third-order products survive.
    const auto f = pow(x1(), 4);
    CHECK_FALSE(is_zero(apply_chain(Chain{Grad, Div, Grad}, FieldValue{f})));
}
