#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace nabla {

/// Field sorts: scalar fields F and vector fields F⃗. The nowhere-defined
/// value is a composition outcome, never a sort.
enum class Sort : std::uint8_t { Scalar, Vector };

enum class Operator : std::uint8_t { Grad, Curl, Div };

inline constexpr Operator kAllOperators[] = {Operator::Grad, Operator::Curl, Operator::Div};
inline constexpr Sort kAllSorts[] = {Sort::Scalar, Sort::Vector};

struct Arrow {
    Sort domain;
    Sort codomain;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

constexpr Arrow signature(Operator op) noexcept {
    switch (op) {
        case Operator::Grad: return {Sort::Scalar, Sort::Vector};
        case Operator::Curl: return {Sort::Vector, Sort::Vector};
        case Operator::Div: return {Sort::Vector, Sort::Scalar};
    }
    return {Sort::Scalar, Sort::Scalar};
}

std::string_view name(Operator op) noexcept;
std::string_view name(Sort sort) noexcept;

/// Either the nowhere-defined value or a meaningful arrow input -> output.
class ChainSignature {
public:
    static constexpr ChainSignature meaningless() noexcept { return ChainSignature{}; }
    static constexpr ChainSignature meaningful(Sort input, Sort output) noexcept {
        return ChainSignature{Arrow{input, output}};
    }
    static constexpr ChainSignature of(Operator op) noexcept {
        return ChainSignature{signature(op)};
    }

    constexpr bool is_meaningful() const noexcept { return arrow_.has_value(); }
    constexpr Sort input() const { return arrow_.value().domain; }
    constexpr Sort output() const { return arrow_.value().codomain; }

    /// Outcome of feeding an argument of the given sort; nullopt is the nowhere-defined value.
    constexpr std::optional<Sort> apply_to(Sort argument) const noexcept {
        if (!arrow_ || arrow_->domain != argument) return std::nullopt;
        return arrow_->codomain;
    }

    friend constexpr bool operator==(const ChainSignature&, const ChainSignature&) = default;

private:
    constexpr ChainSignature() = default;
    constexpr explicit ChainSignature(Arrow a) : arrow_(a) {}

    std::optional<Arrow> arrow_;
};

/// Signature of outer ∘ inner where both sides are already composite.
constexpr ChainSignature compose(ChainSignature outer, ChainSignature inner) noexcept {
    if (!outer.is_meaningful() || !inner.is_meaningful()) return ChainSignature::meaningless();
    if (outer.input() != inner.output()) return ChainSignature::meaningless();
    return ChainSignature::meaningful(inner.input(), outer.output());
}

constexpr ChainSignature compose_pair(Operator outer, Operator inner) noexcept {
    return compose(ChainSignature::of(outer), ChainSignature::of(inner));
}

/// A nonempty operator word. Element 0 is the outermost operator, so
/// {Div, Curl, Grad} is div∘curl∘grad and acts on its argument right to left.
class Chain {
public:
    explicit Chain(std::vector<Operator> ops);
    Chain(std::initializer_list<Operator> ops);

    std::size_t size() const noexcept { return ops_.size(); }
    Operator operator[](std::size_t i) const { return ops_[i]; }
    Operator outermost() const noexcept { return ops_.front(); }
    Operator innermost() const noexcept { return ops_.back(); }
    std::span<const Operator> ops() const noexcept { return ops_; }

    auto begin() const noexcept { return ops_.begin(); }
    auto end() const noexcept { return ops_.end(); }

    /// Contiguous subword [first, first + count).
    Chain slice(std::size_t first, std::size_t count) const;

    friend bool operator==(const Chain&, const Chain&) = default;
    friend auto operator<=>(const Chain&, const Chain&) = default;

private:
    std::vector<Operator> ops_;
};

/// Composite signature folded right to left (innermost first).
ChainSignature chain_signature(const Chain& chain) noexcept;

/// Same composite folded left to right (outermost first). Agrees with
/// chain_signature for every chain by associativity.
ChainSignature chain_signature_left_fold(const Chain& chain) noexcept;

/// All 3^length words in lexicographic order of operator index.
std::vector<Chain> enumerate_chains(std::size_t length);

/// Number of meaningful words of the given length, counted as walks of
/// that length in the two-state sort graph (transfer-matrix power).
std::uint64_t meaningful_chain_count(std::size_t length);

}  // namespace nabla
