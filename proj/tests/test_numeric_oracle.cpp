#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nabla/corpus.hpp"
#include "nabla/errors.hpp"
#include "nabla/numeric_oracle.hpp"

#include <cmath>
#include <limits>

using namespace nabla;
using enum Operator;

namespace {

bool close(double approx, double exact, const FdConfig& cfg = {}) {
    return std::abs(approx - exact) <= std::max(cfg.rel_tol * std::abs(exact), cfg.abs_floor);
}

Polynomial x1() { return Polynomial::variable(Axis::X1); }
Polynomial x2() { return Polynomial::variable(Axis::X2); }

std::vector<Point> points(std::uint64_t seed, int n = 10) {
    FieldGenerator gen(seed);
    std::vector<Point> out;
    for (int i = 0; i < n; ++i) out.push_back(gen.point());
    return out;
}

}  // namespace

TEST_CASE("fd_partial") {
    auto sq = SampledField::scalar([](const Point& p) { return p.x() * p.x(); });
    CHECK(close(fd_partial(sq, Axis::X1, Point(1, 0, 0)), 2.0));

    auto constant = SampledField::scalar([](const Point&) { return 4.25; });
    for (auto a : kAllAxes) CHECK(close(fd_partial(constant, a, Point(0.3, -1, 2)), 0.0));

    auto prod = SampledField::scalar([](const Point& p) { return p.x() * p.y() * p.z(); });
    CHECK(close(fd_partial(prod, Axis::X2, Point(2, 1, 3)), 6.0));
}

TEST_CASE("fd_partial errors") {
    auto nan = SampledField::scalar([](const Point&) { return std::numeric_limits<double>::quiet_NaN(); });
    CHECK_THROWS_AS(fd_partial(nan, Axis::X1, Point(0, 0, 0)), NumericalFailure);
    auto vec = SampledField::vector([](const Point& p) { return p; });
    CHECK_THROWS_AS(fd_partial(vec, Axis::X1, Point(0, 0, 0)), SortMismatch);
    FdConfig bad;
    bad.step = 2.0;
    auto sq = SampledField::scalar([](const Point& p) { return p.x(); });
    CHECK_THROWS_AS(fd_partial(sq, Axis::X1, Point(0, 0, 0), bad), std::invalid_argument);
    bad = FdConfig{};
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("fd_first_order") {
    auto identity = SampledField::vector([](const Point& p) { return p; });
    CHECK(close(std::get<double>(fd_first_order(Div, identity, Point(0.5, -1.5, 2))), 3.0));

    auto rot = SampledField::vector([](const Point& p) { return Eigen::Vector3d(-p.y(), p.x(), 0); });
    const auto c = std::get<Eigen::Vector3d>(fd_first_order(Curl, rot, Point(1, 2, 3)));
    CHECK(close(c.x(), 0.0));
    CHECK(close(c.y(), 0.0));
    CHECK(close(c.z(), 2.0));
    CHECK(std::get<Eigen::Vector3d>(fd_first_order(Curl, sample(VectorField{-x2(), x1(), {}}),
                                                   Point(1, 2, 3))) == c);

    auto sine = SampledField::scalar([](const Point& p) { return std::sin(p.x()); });
    const auto g = std::get<Eigen::Vector3d>(fd_first_order(Grad, sine, Point(0, 0, 0)));
    CHECK(close(g.x(), 1.0));
    CHECK(close(g.y(), 0.0));
    CHECK(close(g.z(), 0.0));

    CHECK_THROWS_AS(fd_first_order(Grad, rot, Point(0, 0, 0)), SortMismatch);
}

TEST_CASE("identities on smooth non-polynomial fields") {
    // f = sin(x)·e^y·cos(z), v = (sin(yz), x·cos(z), e^(xy)).
    auto f = SampledField::scalar([](const Point& p) {
        return std::sin(p.x()) * std::exp(p.y()) * std::cos(p.z());
    });
    auto v = SampledField::vector([](const Point& p) {
        return Eigen::Vector3d(std::sin(p.y() * p.z()), p.x() * std::cos(p.z()), std::exp(p.x() * p.y()));
    });
    for (const auto& p : points(31)) {
        auto cg = std::get<Eigen::Vector3d>(fd_chain(Chain{Curl, Grad}, f).evaluate(p));
        auto dc = std::get<double>(fd_chain(Chain{Div, Curl}, v).evaluate(p));
        CHECK(cg.cwiseAbs().maxCoeff() < 1e-5);
        CHECK(std::abs(dc) < 1e-5);
    }
}

TEST_CASE("cross_check") {
    auto pts = points(41);
    auto lap = cross_check(Chain{Div, Grad}, FieldValue{radius_squared()}, pts);
    CHECK(lap.passed());
    CHECK(lap.points == 10);
    CHECK(lap.max_rel_deviation < 1e-3);

    auto rot = cross_check(Chain{Curl}, FieldValue{VectorField{-x2(), x1(), {}}}, pts);
    CHECK(rot.passed());

    CHECK_THROWS_AS(cross_check(Chain{Grad, Div, Grad}, FieldValue{x1()}, pts), DepthUnsupported);
    CHECK_THROWS_AS(cross_check(Chain{Grad, Grad}, FieldValue{x1()}, pts), MeaninglessChain);
}

TEST_CASE("cross_check notices a wrong exact value") {
    // A sampled field that is not the polynomial: differences disagree.
    auto pts = points(43);
    auto sampled = sample(FieldValue{radius_squared()});
    auto fd = fd_first_order(Grad, sampled, pts[0]);
    Sample shifted = Eigen::Vector3d(std::get<Eigen::Vector3d>(fd) + Eigen::Vector3d(1e-3, 0, 0));
    CHECK_FALSE(within_tolerance(shifted, fd, 1e-6, 1e-9));
    CHECK(within_tolerance(fd, fd, 1e-6, 1e-9));
    CHECK_FALSE(within_tolerance(Sample{1.0}, fd, 1e-6, 1e-9));
}

TEST_CASE("first-order agreement on degree-3 polynomial fields") {
    FieldGenerator gen(12);
    FdConfig cfg;
    cfg.step = kFirstOrderStep;
    for (int i = 0; i < 20; ++i) {
        const FieldValue f = gen.polynomial(3);
        const FieldValue v = gen.vector_field(3);
        auto pts = points(1000 + i);
        CHECK(cross_check(Chain{Grad}, f, pts, cfg).passed());
        CHECK(cross_check(Chain{Curl}, v, pts, cfg).passed());
        CHECK(cross_check(Chain{Div}, v, pts, cfg).passed());
    }
}

TEST_CASE("second-order agreement on degree-3 polynomial fields") {
    FieldGenerator gen(13);
    for (int i = 0; i < 10; ++i) {
        const FieldValue f = gen.polynomial(3);
        const FieldValue v = gen.vector_field(3);
        auto pts = points(2000 + i);
        for (const auto& c : enumerate_chains(2)) {
            auto sig = chain_signature(c);
            if (!sig.is_meaningful()) continue;
            CHECK(cross_check(c, sig.input() == Sort::Scalar ? f : v, pts).passed());
        }
    }
}

TEST_CASE("central differences converge at second order") {
    auto quartic = SampledField::scalar([](const Point& p) { return std::pow(p.x(), 4); });
    FdConfig coarse, fine;
    coarse.step = 1e-3;
    fine.step = 1e-4;
    const Point at(1, 0, 0);
    double e1 = std::abs(fd_partial(quartic, Axis::X1, at, coarse) - 4.0);
    double e2 = std::abs(fd_partial(quartic, Axis::X1, at, fine) - 4.0);
    CHECK(e1 / e2 >= 25.0);
    CHECK(e1 / e2 <= 400.0);
    // Leading truncation term is h²/6 · f''' = 4h².
    CHECK(e1 == doctest::Approx(4e-6).epsilon(1e-3));
}
