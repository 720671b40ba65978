#pragma once

#include "nabla/operators.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>

namespace nabla {

/// The three shapes a nontrivial product can take, keyed by the innermost
/// operator: grad/div alternation ending in grad, curl powers, and div/grad
/// alternation ending in div.
enum class Family : std::uint8_t { GradDivAlternating, CurlPower, DivGradAlternating };

inline constexpr Family kAllFamilies[] = {Family::GradDivAlternating, Family::CurlPower,
                                          Family::DivGradAlternating};

std::string_view name(Family family) noexcept;

struct NormalForm {
    Family family;
    std::size_t order;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct Meaningless {
    friend bool operator==(const Meaningless&, const Meaningless&) = default;
};

/// Meaningful product that vanishes identically. `witness` is the index of
/// the outer element of the leftmost (div, curl) or (curl, grad) pair.
struct TrivialZero {
    Sort output_sort;
    std::size_t witness;

    friend bool operator==(const TrivialZero&, const TrivialZero&) = default;
};

struct Nontrivial {
    NormalForm form;

    friend bool operator==(const Nontrivial&, const Nontrivial&) = default;
};

using Classification = std::variant<Meaningless, TrivialZero, Nontrivial>;

/// True for the two adjacent pairs (outer, inner) that annihilate: div∘curl and curl∘grad.
constexpr bool is_annihilating_pair(Operator outer, Operator inner) noexcept {
    return (outer == Operator::Div && inner == Operator::Curl) ||
           (outer == Operator::Curl && inner == Operator::Grad);
}

Classification classify(const Chain& chain);

/// The unique chain of the family with the given length.
Chain nontrivial_chain(Family family, std::size_t order);

struct Census {
    std::size_t length = 0;
    std::uint64_t meaningless_count = 0;
    std::uint64_t trivial_count = 0;
    std::uint64_t nontrivial_count = 0;

    std::uint64_t meaningful_count() const noexcept { return trivial_count + nontrivial_count; }
    std::uint64_t total() const noexcept { return meaningless_count + meaningful_count(); }
};

inline constexpr std::size_t kDefaultCensusBound = 12;

/// Classifies all 3^length words. Throws std::out_of_range unless 1 <= length <= max_length.
Census census(std::size_t length, std::size_t max_length = kDefaultCensusBound);

}  // namespace nabla
