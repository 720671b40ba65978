#pragma once

#include "nabla/operators.hpp"
#include "nabla/polynomial.hpp"

#include <array>
#include <variant>

namespace nabla {

/// A scalar field f(x1, x2, x3).
using ScalarField = Polynomial;

/// A vector field f1 e1 + f2 e2 + f3 e3.
struct VectorField {
    std::array<Polynomial, 3> components;

    VectorField() = default;
    VectorField(Polynomial f1, Polynomial f2, Polynomial f3)
        : components{std::move(f1), std::move(f2), std::move(f3)} {}

    const Polynomial& operator[](Axis a) const { return components[index(a)]; }
    Polynomial& operator[](Axis a) { return components[index(a)]; }

    bool is_zero() const noexcept {
        return components[0].is_zero() && components[1].is_zero() && components[2].is_zero();
    }
    int degree() const noexcept;

    VectorField& operator+=(const VectorField& rhs);
    VectorField& operator-=(const VectorField& rhs);
    VectorField& operator*=(const Rational& k);

    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Rational& k, VectorField a) { return a *= k; }
    friend VectorField operator*(VectorField a, const Rational& k) { return a *= k; }

    friend bool operator==(const VectorField&, const VectorField&) = default;
};

using FieldValue = std::variant<ScalarField, VectorField>;

Sort sort_of(const FieldValue& fv) noexcept;

VectorField grad(const ScalarField& f);
VectorField curl(const VectorField& v);
ScalarField div(const VectorField& v);

/// Sum of unmixed second partials; identical to div(grad(f)).
ScalarField laplacian(const ScalarField& f);
VectorField vector_laplacian(const VectorField& v);

/// n-fold iterates; n = 0 returns the argument.
ScalarField laplacian_power(ScalarField f, unsigned n);
VectorField vector_laplacian_power(VectorField v, unsigned n);

/// One first-order operation. Throws SortMismatch if the argument has the wrong sort.
FieldValue apply_operator(Operator op, const FieldValue& input);

/// Applies the chain innermost first. Throws MeaninglessChain when the chain
/// has no meaningful signature and SortMismatch when the input sort differs
/// from the chain's input sort.
FieldValue apply_chain(const Chain& chain, const FieldValue& input);

/// Exact identical-zero test.
bool is_zero(const FieldValue& fv) noexcept;

FieldValue operator+(const FieldValue& a, const FieldValue& b);
FieldValue operator*(const Rational& k, const FieldValue& a);

template <typename Scalar>
using PointValue = std::variant<Scalar, std::array<Scalar, 3>>;

/// Evaluation by substitution; scalar fields give a Scalar, vector fields a triple.
template <typename Scalar>
PointValue<Scalar> eval_at(const FieldValue& fv, const std::array<Scalar, 3>& point) {
    if (const auto* f = std::get_if<ScalarField>(&fv)) return evaluate(*f, point);
    const auto& v = std::get<VectorField>(fv);
    return std::array<Scalar, 3>{evaluate(v.components[0], point),
                                 evaluate(v.components[1], point),
                                 evaluate(v.components[2], point)};
}

}  // namespace nabla
