#include "nabla/corpus.hpp"

#include <stdexcept>

namespace nabla {

namespace {

Polynomial mono(long long c, unsigned a, unsigned b, unsigned d) {
    return Polynomial::monomial(Rational(c), {a, b, d});
}

}  // namespace

std::vector<Polynomial> harmonic_basis(unsigned max_degree) {
    if (max_degree > 3) throw std::invalid_argument("harmonic basis is tabulated through degree 3");
    std::vector<Polynomial> basis;
    basis.push_back(mono(1, 0, 0, 0));
    if (max_degree >= 1) {
        basis.push_back(mono(1, 1, 0, 0));
        basis.push_back(mono(1, 0, 1, 0));
        basis.push_back(mono(1, 0, 0, 1));
    }
    if (max_degree >= 2) {
        basis.push_back(mono(1, 1, 1, 0));
        basis.push_back(mono(1, 0, 1, 1));
        basis.push_back(mono(1, 1, 0, 1));
        basis.push_back(mono(1, 2, 0, 0) - mono(1, 0, 2, 0));
        basis.push_back(mono(1, 0, 2, 0) - mono(1, 0, 0, 2));
    }
    if (max_degree >= 3) {
        basis.push_back(mono(1, 1, 1, 1));
        basis.push_back(mono(1, 3, 0, 0) - mono(3, 1, 2, 0));
        basis.push_back(mono(1, 3, 0, 0) - mono(3, 1, 0, 2));
        basis.push_back(mono(1, 0, 3, 0) - mono(3, 2, 1, 0));
        basis.push_back(mono(1, 0, 3, 0) - mono(3, 0, 1, 2));
        basis.push_back(mono(1, 0, 0, 3) - mono(3, 2, 0, 1));
        basis.push_back(mono(1, 0, 0, 3) - mono(3, 0, 2, 1));
    }
    return basis;
}

Polynomial radius_squared() { return mono(1, 2, 0, 0) + mono(1, 0, 2, 0) + mono(1, 0, 0, 2); }

long long FieldGenerator::uniform_int(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("empty integer range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(engine_() % span);
}

double FieldGenerator::uniform_real(double lo, double hi) {
    double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

Polynomial FieldGenerator::polynomial(unsigned degree, int coeff_bound) {
    const long long D = degree;
    Polynomial p;
    auto terms = uniform_int(1, 8);
    for (long long t = 0; t < terms; ++t) {
        auto e1 = uniform_int(0, D);
        auto e2 = uniform_int(0, D - e1);
        auto e3 = uniform_int(0, D - e1 - e2);
        auto c = uniform_int(-coeff_bound, coeff_bound);
        p.add_term({static_cast<unsigned>(e1), static_cast<unsigned>(e2), static_cast<unsigned>(e3)},
                   Rational(c));
    }
    return p;
}

VectorField FieldGenerator::vector_field(unsigned degree, int coeff_bound) {
    auto f1 = polynomial(degree, coeff_bound);
    auto f2 = polynomial(degree, coeff_bound);
    auto f3 = polynomial(degree, coeff_bound);
    return {std::move(f1), std::move(f2), std::move(f3)};
}

FieldValue FieldGenerator::field(Sort sort, unsigned degree, int coeff_bound) {
    if (sort == Sort::Scalar) return polynomial(degree, coeff_bound);
    return vector_field(degree, coeff_bound);
}

Polynomial FieldGenerator::harmonic(unsigned max_degree, int coeff_bound) {
    const auto basis = harmonic_basis(max_degree);
    for (;;) {
        Polynomial h;
        auto picks = uniform_int(1, 8);
        for (long long i = 0; i < picks; ++i) {
            auto k = uniform_int(0, static_cast<long long>(basis.size()) - 1);
            auto c = uniform_int(-coeff_bound, coeff_bound);
            h += Rational(c) * basis[static_cast<std::size_t>(k)];
        }
        if (!h.is_zero()) return h;
    }
}

VectorField FieldGenerator::vector_harmonic(unsigned max_degree, int coeff_bound) {
    auto f1 = harmonic(max_degree, coeff_bound);
    auto f2 = harmonic(max_degree, coeff_bound);
    auto f3 = harmonic(max_degree, coeff_bound);
    return {std::move(f1), std::move(f2), std::move(f3)};
}

Polynomial FieldGenerator::polyharmonic(unsigned order, unsigned max_degree, int coeff_bound) {
    if (order == 0) throw std::invalid_argument("polyharmonic order must be positive");
    auto h1 = harmonic(max_degree, coeff_bound);
    auto h2 = harmonic(max_degree, coeff_bound);
    return pow(radius_squared(), order - 1) * h1 + h2;
}

Point FieldGenerator::point(double lo, double hi) {
    double x = uniform_real(lo, hi);
    double y = uniform_real(lo, hi);
    double z = uniform_real(lo, hi);
    return {x, y, z};
}

}  // namespace nabla
