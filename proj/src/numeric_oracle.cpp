#include "nabla/numeric_oracle.hpp"

#include "nabla/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nabla {

SampledField SampledField::scalar(std::function<double(const Point&)> fn) {
    return {Sort::Scalar, [fn = std::move(fn)](const Point& p) -> Sample { return fn(p); }};
}

SampledField SampledField::vector(std::function<Eigen::Vector3d(const Point&)> fn) {
    return {Sort::Vector, [fn = std::move(fn)](const Point& p) -> Sample { return fn(p); }};
}

namespace {

std::array<long double, 3> to_array(const Point& p) { return {p.x(), p.y(), p.z()}; }

double eval_ld(const Polynomial& f, const std::array<long double, 3>& a) {
    return static_cast<double>(evaluate(f, a));
}

void check_finite(const Sample& s) {
    bool finite = std::visit(
        [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>)
                return std::isfinite(v);
            else
                return v.allFinite();
        },
        s);
    if (!finite) throw NumericalFailure("non-finite sample value");
}

/// Central difference of every component along one axis.
Sample central_difference(const SampledField& field, Axis axis, const Point& p, double h) {
    Point fwd = p, bwd = p;
    fwd[index(axis)] += h;
    bwd[index(axis)] -= h;
    // Divide by the representable distance between the two abscissae.
    const double width = fwd[index(axis)] - bwd[index(axis)];
    auto hi = field.evaluate(fwd);
    auto lo = field.evaluate(bwd);
    check_finite(hi);
    check_finite(lo);
    if (field.sort == Sort::Scalar) return (std::get<double>(hi) - std::get<double>(lo)) / width;
    return Eigen::Vector3d((std::get<Eigen::Vector3d>(hi) - std::get<Eigen::Vector3d>(lo)) / width);
}

}  // namespace

SampledField sample(const FieldValue& fv) {
    if (const auto* f = std::get_if<ScalarField>(&fv))
        return SampledField::scalar(
            [f = *f](const Point& p) { return eval_ld(f, to_array(p)); });
    return SampledField::vector([v = std::get<VectorField>(fv)](const Point& p) {
        auto a = to_array(p);
        return Eigen::Vector3d(eval_ld(v.components[0], a), eval_ld(v.components[1], a),
                               eval_ld(v.components[2], a));
    });
}

void FdConfig::validate() const {
    if (!(step > 0.0 && step < 1.0)) throw std::invalid_argument("fd step must lie in (0, 1)");
    if (!(rel_tol > 0.0) || !(abs_floor > 0.0))
        throw std::invalid_argument("fd tolerances must be positive");
}

double fd_partial(const SampledField& field, Axis axis, const Point& p, const FdConfig& cfg) {
    cfg.validate();
    if (field.sort != Sort::Scalar) throw SortMismatch("fd_partial expects a scalar field");
    return std::get<double>(central_difference(field, axis, p, cfg.step));
}

Sample fd_first_order(Operator op, const SampledField& field, const Point& p, const FdConfig& cfg) {
    cfg.validate();
    if (field.sort != signature(op).domain)
        throw SortMismatch(std::string(name(op)) + " expects a " +
                           std::string(name(signature(op).domain)) + " field");
    const double h = cfg.step;
    if (op == Operator::Grad) {
        Eigen::Vector3d g;
        for (auto a : kAllAxes) g[index(a)] = std::get<double>(central_difference(field, a, p, h));
        return g;
    }
    // Jacobian column a holds ∂v/∂xₐ.
    Eigen::Matrix3d jac;
    for (auto a : kAllAxes)
        jac.col(index(a)) = std::get<Eigen::Vector3d>(central_difference(field, a, p, h));
    if (op == Operator::Div) return jac.trace();
    return Eigen::Vector3d(jac(2, 1) - jac(1, 2), jac(0, 2) - jac(2, 0), jac(1, 0) - jac(0, 1));
}

SampledField fd_chain(const Chain& chain, const SampledField& field, const FdConfig& cfg) {
    auto sig = chain_signature(chain);
    if (!sig.is_meaningful()) throw MeaninglessChain("operator chain is meaningless");
    if (sig.input() != field.sort) throw SortMismatch("chain input sort differs from field sort");
    SampledField current = field;
    for (auto it = chain.ops().rbegin(); it != chain.ops().rend(); ++it) {
        Operator op = *it;
        current = SampledField{signature(op).codomain,
                               [op, inner = current, cfg](const Point& p) {
                                   return fd_first_order(op, inner, p, cfg);
                               }};
    }
    return current;
}

bool within_tolerance(const Sample& approx, const Sample& exact, double rel_tol, double abs_floor) {
    auto ok = [&](double a, double e) {
        return std::abs(a - e) <= std::max(rel_tol * std::abs(e), abs_floor);
    };
    if (approx.index() != exact.index()) return false;
    if (const auto* a = std::get_if<double>(&approx)) return ok(*a, std::get<double>(exact));
    const auto& av = std::get<Eigen::Vector3d>(approx);
    const auto& ev = std::get<Eigen::Vector3d>(exact);
    return ok(av[0], ev[0]) && ok(av[1], ev[1]) && ok(av[2], ev[2]);
}

CrossCheckReport cross_check(const Chain& chain, const FieldValue& poly_input,
                             std::span<const Point> points, const FdConfig& cfg) {
    if (chain.size() > kMaxOracleDepth)
        throw DepthUnsupported("finite-difference oracle supports chains of length <= " +
                               std::to_string(kMaxOracleDepth));
    cfg.validate();
    const auto exact_field = apply_chain(chain, poly_input);
    const auto fd = fd_chain(chain, sample(poly_input), cfg);

    // Nested differences carry cancellation error of order ε/h² even where
    // the exact value is zero, so the relaxed bound is scaled by max(|exact|, 1).
    const bool nested = chain.size() == 2;
    const double rel = nested ? kDepth2RelTol : cfg.rel_tol;
    const double floor = nested ? kDepth2RelTol : cfg.abs_floor;

    CrossCheckReport report;
    for (const auto& p : points) {
        std::array<Rational, 3> exact_point{Rational(p.x()), Rational(p.y()), Rational(p.z())};
        auto value = eval_at(exact_field, exact_point);
        Sample exact;
        if (const auto* s = std::get_if<Rational>(&value))
            exact = to_double(*s);
        else {
            const auto& v = std::get<std::array<Rational, 3>>(value);
            exact = Eigen::Vector3d(to_double(v[0]), to_double(v[1]), to_double(v[2]));
        }
        auto approx = fd.evaluate(p);

        auto track = [&](double a, double e) {
            double dev = std::abs(a - e);
            report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
            if (e != 0.0) report.max_rel_deviation = std::max(report.max_rel_deviation, dev / std::abs(e));
        };
        if (const auto* a = std::get_if<double>(&approx))
            track(*a, std::get<double>(exact));
        else
            for (int k = 0; k < 3; ++k)
                track(std::get<Eigen::Vector3d>(approx)[k], std::get<Eigen::Vector3d>(exact)[k]);

        ++report.points;
        if (!within_tolerance(approx, exact, rel, floor)) ++report.failures;
    }
    return report;
}

}  // namespace nabla
