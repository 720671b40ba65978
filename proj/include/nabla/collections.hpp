#pragma once

#include "nabla/fields.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <variant>

namespace nabla {

/// Harmonic: Δⁿf = 0 (scalar). Curling: curlⁿ v = 0⃗. VectorHarmonic: Δ⃗ⁿ v = 0⃗.
enum class CollectionKind { Harmonic, Curling, VectorHarmonic };

std::string_view name(CollectionKind kind) noexcept;
Sort required_sort(CollectionKind kind) noexcept;

struct Order {
    unsigned n;
    friend bool operator==(const Order&, const Order&) = default;
};

struct ExceedsBound {
    unsigned bound;
    friend bool operator==(const ExceedsBound&, const ExceedsBound&) = default;
};

using OrderResult = std::variant<Order, ExceedsBound>;

inline constexpr unsigned kDefaultMaxOrder = 16;

/// The m-fold defining iterate of the collection (Δᵐ, curlᵐ or Δ⃗ᵐ).
FieldValue collection_iterate(CollectionKind kind, const FieldValue& field, unsigned m);

/// Least n in [1, max_n] whose n-fold iterate vanishes, else ExceedsBound.
/// The zero field has order 1.
OrderResult collection_order(CollectionKind kind, const FieldValue& field,
                             unsigned max_n = kDefaultMaxOrder);

/// Whether the chain's product sends the field to zero.
bool annihilates(const Chain& chain, const FieldValue& field);

/// Δⁿ(x·f) = 2n·∂(Δⁿ⁻¹f)/∂x + x·Δⁿf with x the coordinate of `axis`, n >= 1.
/// Both sides are computed independently and compared exactly.
bool check_example2(const ScalarField& f, unsigned n, Axis axis = Axis::X1);

/// For n >= 2:
///   Δⁿ(x²f) = 4n(n−1)·∂²(Δⁿ⁻²f)/∂x² + 4nx·∂(Δⁿ⁻¹f)/∂x + 2n·Δⁿ⁻¹f + x²·Δⁿf.
/// For n = 1 the base equation Δ(x²f) = 2f + 4x·∂f/∂x + x²·Δf is checked.
bool check_example3(const ScalarField& f, unsigned n, Axis axis = Axis::X1);

/// curl curl v == grad div v for Δ⃗v = 0⃗. Throws NotInCollection otherwise.
bool check_eq22(const VectorField& v);

struct Example1Entry {
    Chain chain;
    bool vanishes;
};

/// All eight meaningful third-order products applied to f (scalar input) or
/// v (vector input). Requires Δf = 0 and Δ⃗v = 0⃗, else NotInCollection.
std::array<Example1Entry, 8> example1_suite(const ScalarField& f, const VectorField& v);

}  // namespace nabla
