#include "nabla/operators.hpp"

#include <Eigen/Core>

#include <stdexcept>

namespace nabla {

std::string_view name(Operator op) noexcept {
    switch (op) {
        case Operator::Grad: return "grad";
        case Operator::Curl: return "curl";
        case Operator::Div: return "div";
    }
    return "?";
}

std::string_view name(Sort sort) noexcept {
    return sort == Sort::Scalar ? "scalar" : "vector";
}

Chain::Chain(std::vector<Operator> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw std::invalid_argument("operator chain must not be empty");
}

Chain::Chain(std::initializer_list<Operator> ops) : Chain(std::vector<Operator>(ops)) {}

Chain Chain::slice(std::size_t first, std::size_t count) const {
    if (first + count > ops_.size()) throw std::out_of_range("chain slice out of range");
    return Chain(std::vector<Operator>(ops_.begin() + first, ops_.begin() + first + count));
}

ChainSignature chain_signature(const Chain& chain) noexcept {
    auto sig = ChainSignature::of(chain.innermost());
    for (auto i = chain.size() - 1; i-- > 0;) sig = compose(ChainSignature::of(chain[i]), sig);
    return sig;
}

ChainSignature chain_signature_left_fold(const Chain& chain) noexcept {
    auto sig = ChainSignature::of(chain.outermost());
    for (std::size_t i = 1; i < chain.size(); ++i) sig = compose(sig, ChainSignature::of(chain[i]));
    return sig;
}

std::vector<Chain> enumerate_chains(std::size_t length) {
    if (length == 0) throw std::invalid_argument("chain length must be positive");
    std::vector<Chain> out;
    std::vector<Operator> word(length, Operator::Grad);
    std::vector<std::size_t> digits(length, 0);
    for (;;) {
        for (std::size_t i = 0; i < length; ++i) word[i] = kAllOperators[digits[i]];
        out.emplace_back(word);
        std::size_t pos = length;
        while (pos > 0 && digits[pos - 1] == 2) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }
    return out;
}

std::uint64_t meaningful_chain_count(std::size_t length) {
    if (length == 0) throw std::invalid_argument("chain length must be positive");
    // F(length + 3) overflows 64 bits past this point.
    if (length > 90) throw std::out_of_range("meaningful chain count overflows 64 bits");

    using Transfer = Eigen::Matrix<std::uint64_t, 2, 2>;
    // Rows index the output sort, columns the input sort (0 = scalar, 1 = vector).
    Transfer step = Transfer::Zero();
    for (auto op : kAllOperators) {
        auto [in, out] = signature(op);
        step(static_cast<int>(out), static_cast<int>(in)) += 1;
    }
    Transfer walks = step;
    for (std::size_t i = 1; i < length; ++i) walks = (step * walks).eval();
    return walks.sum();
}

}  // namespace nabla
