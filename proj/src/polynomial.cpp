#include "nabla/polynomial.hpp"

#include "nabla/errors.hpp"

#include <sstream>

namespace nabla {

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Exponents{0, 0, 0}, constant);
}

Polynomial Polynomial::monomial(const Rational& coefficient, Exponents exponents) {
    Polynomial p;
    p.add_term(exponents, coefficient);
    return p;
}

Polynomial Polynomial::variable(Axis axis) {
    Exponents e{0, 0, 0};
    e[index(axis)] = 1;
    return monomial(Rational(1), e);
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const noexcept {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[0] + e[1] + e[2]));
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_size() const {
    if (terms_.size() > kMaxTerms)
        throw ResourceError("polynomial exceeds " + std::to_string(kMaxTerms) + " terms");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    check_size();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, Rational(-c));
    check_size();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.term_count() * b.term_count() > 4 * kMaxTerms)
        throw ResourceError("polynomial product too large");
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Rational c = ca * cb;
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, c);
        }
    }
    out.check_size();
    return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(Rational(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * base;
    return result;
}

Polynomial partial_derivative(const Polynomial& p, Axis axis) {
    const auto k = index(axis);
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
        if (e[k] == 0) continue;
        Exponents lowered = e;
        --lowered[k];
        Rational coeff = c * e[k];
        out.add_term(lowered, coeff);
    }
    return out;
}

template <typename Scalar>
Scalar evaluate(const Polynomial& p, const std::array<Scalar, 3>& point) {
    Scalar sum(0);
    for (const auto& [e, c] : p.terms()) {
        Scalar term;
        if constexpr (std::is_same_v<Scalar, Rational>)
            term = c;
        else
            term = c.template convert_to<Scalar>();
        for (std::size_t k = 0; k < 3; ++k)
            for (unsigned j = 0; j < e[k]; ++j) term *= point[k];
        sum += term;
    }
    return sum;
}

template Rational evaluate<Rational>(const Polynomial&, const std::array<Rational, 3>&);
template double evaluate<double>(const Polynomial&, const std::array<double, 3>&);
template long double evaluate<long double>(const Polynomial&, const std::array<long double, 3>&);

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Reverse exponent order lists higher powers of x1 first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        bool constant = e[0] + e[1] + e[2] == 0;
        bool wrote = false;
        if (mag != 1 || constant) {
            out << to_string(mag);
            wrote = true;
        }
        for (std::size_t k = 0; k < 3; ++k) {
            if (e[k] == 0) continue;
            if (wrote) out << '*';
            out << 'x' << (k + 1);
            if (e[k] > 1) out << '^' << e[k];
            wrote = true;
        }
    }
    return out.str();
}

}  // namespace nabla
