#include "nabla/fields.hpp"

#include "nabla/errors.hpp"

#include <string>

namespace nabla {

int VectorField::degree() const noexcept {
    return std::max({components[0].degree(), components[1].degree(), components[2].degree()});
}

VectorField& VectorField::operator+=(const VectorField& rhs) {
    for (std::size_t k = 0; k < 3; ++k) components[k] += rhs.components[k];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& rhs) {
    for (std::size_t k = 0; k < 3; ++k) components[k] -= rhs.components[k];
    return *this;
}

VectorField& VectorField::operator*=(const Rational& k) {
    for (auto& c : components) c *= k;
    return *this;
}

Sort sort_of(const FieldValue& fv) noexcept {
    return std::holds_alternative<ScalarField>(fv) ? Sort::Scalar : Sort::Vector;
}

VectorField grad(const ScalarField& f) {
    return {partial_derivative(f, Axis::X1), partial_derivative(f, Axis::X2),
            partial_derivative(f, Axis::X3)};
}

VectorField curl(const VectorField& v) {
    using enum Axis;
    return {partial_derivative(v[X3], X2) - partial_derivative(v[X2], X3),
            partial_derivative(v[X1], X3) - partial_derivative(v[X3], X1),
            partial_derivative(v[X2], X1) - partial_derivative(v[X1], X2)};
}

ScalarField div(const VectorField& v) {
    using enum Axis;
    return partial_derivative(v[X1], X1) + partial_derivative(v[X2], X2) +
           partial_derivative(v[X3], X3);
}

ScalarField laplacian(const ScalarField& f) {
    ScalarField out;
    for (auto a : kAllAxes) out += partial_derivative(partial_derivative(f, a), a);
    return out;
}

VectorField vector_laplacian(const VectorField& v) {
    return {laplacian(v.components[0]), laplacian(v.components[1]), laplacian(v.components[2])};
}

ScalarField laplacian_power(ScalarField f, unsigned n) {
    for (unsigned i = 0; i < n && !f.is_zero(); ++i) f = laplacian(f);
    return f;
}

VectorField vector_laplacian_power(VectorField v, unsigned n) {
    for (unsigned i = 0; i < n && !v.is_zero(); ++i) v = vector_laplacian(v);
    return v;
}

namespace {

[[noreturn]] void sort_mismatch(Sort expected, Sort actual, std::string_view what) {
    throw SortMismatch(std::string(what) + " expects a " + std::string(name(expected)) +
                       " field, got a " + std::string(name(actual)) + " field");
}

}  // namespace

FieldValue apply_operator(Operator op, const FieldValue& input) {
    auto expected = signature(op).domain;
    if (sort_of(input) != expected) sort_mismatch(expected, sort_of(input), name(op));
    switch (op) {
        case Operator::Grad: return grad(std::get<ScalarField>(input));
        case Operator::Curl: return curl(std::get<VectorField>(input));
        case Operator::Div: return div(std::get<VectorField>(input));
    }
    return input;
}

FieldValue apply_chain(const Chain& chain, const FieldValue& input) {
    auto sig = chain_signature(chain);
    if (!sig.is_meaningful()) throw MeaninglessChain("operator chain is meaningless");
    if (sig.input() != sort_of(input)) sort_mismatch(sig.input(), sort_of(input), "chain");
    FieldValue value = input;
    for (auto it = chain.ops().rbegin(); it != chain.ops().rend(); ++it)
        value = apply_operator(*it, value);
    return value;
}

bool is_zero(const FieldValue& fv) noexcept {
    return std::visit([](const auto& f) { return f.is_zero(); }, fv);
}

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
    if (sort_of(a) != sort_of(b)) sort_mismatch(sort_of(a), sort_of(b), "field sum");
    if (const auto* f = std::get_if<ScalarField>(&a)) return *f + std::get<ScalarField>(b);
    return std::get<VectorField>(a) + std::get<VectorField>(b);
}

FieldValue operator*(const Rational& k, const FieldValue& a) {
    return std::visit([&](const auto& f) -> FieldValue { return k * f; }, a);
}

}  // namespace nabla
