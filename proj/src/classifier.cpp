#include "nabla/classifier.hpp"

#include <stdexcept>
#include <string>

namespace nabla {

std::string_view name(Family family) noexcept {
    switch (family) {
        case Family::GradDivAlternating: return "grad-div-alternating";
        case Family::CurlPower: return "curl-power";
        case Family::DivGradAlternating: return "div-grad-alternating";
    }
    return "?";
}

namespace {

Family family_of_innermost(Operator op) {
    switch (op) {
        case Operator::Grad: return Family::GradDivAlternating;
        case Operator::Curl: return Family::CurlPower;
        case Operator::Div: return Family::DivGradAlternating;
    }
    return Family::CurlPower;
}

}  // namespace

Classification classify(const Chain& chain) {
    if (!chain_signature(chain).is_meaningful()) return Meaningless{};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (is_annihilating_pair(chain[i], chain[i + 1]))
            return TrivialZero{signature(chain.outermost()).codomain, i};
    }
    return Nontrivial{{family_of_innermost(chain.innermost()), chain.size()}};
}

Chain nontrivial_chain(Family family, std::size_t order) {
    if (order == 0) throw std::invalid_argument("normal form order must be positive");
    std::vector<Operator> ops(order);
    // Fill from the innermost end outward.
    for (std::size_t k = 0; k < order; ++k) {
        auto& slot = ops[order - 1 - k];
        switch (family) {
            case Family::GradDivAlternating:
                slot = (k % 2 == 0) ? Operator::Grad : Operator::Div;
                break;
            case Family::CurlPower:
                slot = Operator::Curl;
                break;
            case Family::DivGradAlternating:
                slot = (k % 2 == 0) ? Operator::Div : Operator::Grad;
                break;
        }
    }
    return Chain(std::move(ops));
}

Census census(std::size_t length, std::size_t max_length) {
    if (length < 1 || length > max_length)
        throw std::out_of_range("census length must be in [1, " + std::to_string(max_length) +
                                "], got " + std::to_string(length));
    Census result;
    result.length = length;

    std::vector<std::size_t> digits(length, 0);
    std::vector<Operator> word(length);
    for (;;) {
        for (std::size_t i = 0; i < length; ++i) word[i] = kAllOperators[digits[i]];
        auto c = classify(Chain(word));
        if (std::holds_alternative<Meaningless>(c))
            ++result.meaningless_count;
        else if (std::holds_alternative<TrivialZero>(c))
            ++result.trivial_count;
        else
            ++result.nontrivial_count;

        std::size_t pos = length;
        while (pos > 0 && digits[pos - 1] == 2) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }
    return result;
}

}  // namespace nabla
