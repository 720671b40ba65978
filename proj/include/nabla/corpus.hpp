#pragma once

#include "nabla/fields.hpp"
#include "nabla/numeric_oracle.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace nabla {

/// Harmonic polynomials spanning every harmonic polynomial of degree <= 3
/// (1 + 3 + 5 + 7 = 16 elements). Throws std::invalid_argument above degree 3.
std::vector<Polynomial> harmonic_basis(unsigned max_degree = 3);

/// Seeded pseudorandom field corpus.
///
/// The generator is std::mt19937_64 seeded with the given value. A bounded
/// integer in [lo, hi] is lo + (draw mod (hi − lo + 1)); a real in [lo, hi)
/// is lo + (hi − lo)·(draw >> 11)·2⁻⁵³. A random polynomial of degree <= D
/// draws its term count in [1, 8]; each term draws e1 in [0, D], e2 in
/// [0, D − e1], e3 in [0, D − e1 − e2] and then a coefficient in [−B, B],
/// in that order. Repeated exponents accumulate. Vector fields draw their
/// components in order x1, x2, x3. Every draw sequence is fixed, so a seed
/// reproduces the corpus on any platform.
class FieldGenerator {
public:
    static constexpr int kDefaultCoefficientBound = 9;

    explicit FieldGenerator(std::uint64_t seed) : engine_(seed) {}

    long long uniform_int(long long lo, long long hi);
    double uniform_real(double lo, double hi);

    Polynomial polynomial(unsigned degree, int coeff_bound = kDefaultCoefficientBound);
    VectorField vector_field(unsigned degree, int coeff_bound = kDefaultCoefficientBound);
    FieldValue field(Sort sort, unsigned degree, int coeff_bound = kDefaultCoefficientBound);

    /// 1–8 basis elements of degree <= max_degree with coefficients in [−B, B];
    /// resampled until nonzero.
    Polynomial harmonic(unsigned max_degree = 3, int coeff_bound = kDefaultCoefficientBound);
    VectorField vector_harmonic(unsigned max_degree = 3, int coeff_bound = kDefaultCoefficientBound);

    /// A field of Harmonic order exactly `order`: r^(2(order−1))·h₁ + h₂ with
    /// h₁ harmonic and nonzero, h₂ harmonic.
    Polynomial polyharmonic(unsigned order, unsigned max_degree = 3,
                            int coeff_bound = kDefaultCoefficientBound);

    Point point(double lo = -2.0, double hi = 2.0);

private:
    std::mt19937_64 engine_;
};

/// x1² + x2² + x3².
Polynomial radius_squared();

}  // namespace nabla
