#pragma once

#include "nabla/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>

namespace nabla {

/// Exponents of x1, x2, x3 in a monomial.
using Exponents = std::array<unsigned, 3>;

/// Coordinate axis, 1-based as in x1, x2, x3.
enum class Axis : unsigned { X1 = 1, X2 = 2, X3 = 3 };

inline constexpr Axis kAllAxes[] = {Axis::X1, Axis::X2, Axis::X3};

constexpr std::size_t index(Axis a) noexcept { return static_cast<std::size_t>(a) - 1; }

/// Operations producing more terms than this throw ResourceError.
inline constexpr std::size_t kMaxTerms = 1'000'000;

/// Sparse polynomial in x1, x2, x3 over the rationals. Zero coefficients are
/// never stored, so the zero polynomial is the empty term map and equality is
/// structural.
class Polynomial {
public:
    using Terms = std::map<Exponents, Rational>;

    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(long long constant) : Polynomial(Rational(constant)) {}

    static Polynomial monomial(const Rational& coefficient, Exponents exponents);
    static Polynomial variable(Axis axis);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of the monomial, zero when absent.
    Rational coefficient(const Exponents& e) const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept;

    /// Adds coefficient·x^e, dropping the term if it cancels.
    void add_term(const Exponents& e, const Rational& coefficient);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& k);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
    friend Polynomial operator*(const Rational& k, Polynomial a) { return a *= k; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_size() const;

    Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Exact formal partial derivative.
Polynomial partial_derivative(const Polynomial& p, Axis axis);

/// Evaluates by substitution. Instantiated for Rational (exact), double and
/// long double.
template <typename Scalar>
Scalar evaluate(const Polynomial& p, const std::array<Scalar, 3>& point);

/// Human-readable form such as "3/2*x1^2*x3 - x2 + 7".
std::string to_string(const Polynomial& p);

}  // namespace nabla
