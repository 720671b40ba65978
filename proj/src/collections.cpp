#include "nabla/collections.hpp"

#include "nabla/errors.hpp"

#include <string>

namespace nabla {

std::string_view name(CollectionKind kind) noexcept {
    switch (kind) {
        case CollectionKind::Harmonic: return "harmonic";
        case CollectionKind::Curling: return "curling";
        case CollectionKind::VectorHarmonic: return "vharmonic";
    }
    return "?";
}

Sort required_sort(CollectionKind kind) noexcept {
    return kind == CollectionKind::Harmonic ? Sort::Scalar : Sort::Vector;
}

namespace {

void require_sort(CollectionKind kind, const FieldValue& field) {
    if (sort_of(field) != required_sort(kind))
        throw SortMismatch(std::string(name(kind)) + " collection expects a " +
                           std::string(name(required_sort(kind))) + " field, got a " +
                           std::string(name(sort_of(field))) + " field");
}

FieldValue step(CollectionKind kind, const FieldValue& field) {
    switch (kind) {
        case CollectionKind::Harmonic: return laplacian(std::get<ScalarField>(field));
        case CollectionKind::Curling: return curl(std::get<VectorField>(field));
        case CollectionKind::VectorHarmonic:
            return vector_laplacian(std::get<VectorField>(field));
    }
    return field;
}

}  // namespace

FieldValue collection_iterate(CollectionKind kind, const FieldValue& field, unsigned m) {
    require_sort(kind, field);
    FieldValue value = field;
    for (unsigned i = 0; i < m && !is_zero(value); ++i) value = step(kind, value);
    return value;
}

OrderResult collection_order(CollectionKind kind, const FieldValue& field, unsigned max_n) {
    require_sort(kind, field);
    if (max_n == 0) throw std::invalid_argument("max order must be positive");
    FieldValue value = field;
    for (unsigned n = 1; n <= max_n; ++n) {
        value = step(kind, value);
        if (is_zero(value)) return Order{n};
    }
    return ExceedsBound{max_n};
}

bool annihilates(const Chain& chain, const FieldValue& field) {
    return is_zero(apply_chain(chain, field));
}

bool check_example2(const ScalarField& f, unsigned n, Axis axis) {
    if (n < 1) throw std::invalid_argument("check_example2 needs n >= 1");
    const auto x = Polynomial::variable(axis);
    auto lhs = laplacian_power(x * f, n);
    auto rhs = Rational(2 * n) * partial_derivative(laplacian_power(f, n - 1), axis) +
               x * laplacian_power(f, n);
    return lhs == rhs;
}

bool check_example3(const ScalarField& f, unsigned n, Axis axis) {
    if (n < 1) throw std::invalid_argument("check_example3 needs n >= 1");
    const auto x = Polynomial::variable(axis);
    const auto x2 = x * x;
    auto lhs = laplacian_power(x2 * f, n);
    if (n == 1) {
        auto rhs = Rational(2) * f + Rational(4) * x * partial_derivative(f, axis) +
                   x2 * laplacian(f);
        return lhs == rhs;
    }
    const auto delta_n2 = laplacian_power(f, n - 2);
    const auto delta_n1 = laplacian(delta_n2);
    const auto delta_n = laplacian(delta_n1);
    auto rhs = Rational(4 * n * (n - 1)) * partial_derivative(partial_derivative(delta_n2, axis), axis) +
               Rational(4 * n) * x * partial_derivative(delta_n1, axis) +
               Rational(2 * n) * delta_n1 + x2 * delta_n;
    return lhs == rhs;
}

bool check_eq22(const VectorField& v) {
    if (!vector_laplacian(v).is_zero())
        throw NotInCollection("curl curl = grad div needs a vector-harmonic field");
    return curl(curl(v)) == grad(div(v));
}

std::array<Example1Entry, 8> example1_suite(const ScalarField& f, const VectorField& v) {
    if (!laplacian(f).is_zero()) throw NotInCollection("scalar argument is not harmonic");
    if (!vector_laplacian(v).is_zero())
        throw NotInCollection("vector argument is not vector-harmonic");

    using enum Operator;
    // Nontrivial forms first, then the five trivial ones.
    const std::array<Chain, 8> chains = {
        Chain{Grad, Div, Grad}, Chain{Curl, Curl, Curl}, Chain{Div, Grad, Div},
        Chain{Div, Curl, Curl}, Chain{Div, Curl, Grad}, Chain{Curl, Curl, Grad},
        Chain{Curl, Grad, Div}, Chain{Grad, Div, Curl},
    };
    const FieldValue scalar_arg = f;
    const FieldValue vector_arg = v;

    auto entry = [&](const Chain& c) {
        const auto& arg = chain_signature(c).input() == Sort::Scalar ? scalar_arg : vector_arg;
        return Example1Entry{c, annihilates(c, arg)};
    };
    return {entry(chains[0]), entry(chains[1]), entry(chains[2]), entry(chains[3]),
            entry(chains[4]), entry(chains[5]), entry(chains[6]), entry(chains[7])};
}

}  // namespace nabla
