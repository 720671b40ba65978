#include "nabla/parser.hpp"

#include "nabla/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace nabla {

namespace {

constexpr std::string_view kCompose = "∘";  // ∘
constexpr std::string_view kNabla = "∇";    // ∇

std::size_t code_points(std::string_view bytes) {
    return static_cast<std::size_t>(std::count_if(bytes.begin(), bytes.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::optional<Operator> lookup(std::string_view token) {
    auto t = lowercase(token);
    if (t == "grad" || t == "nabla1") return Operator::Grad;
    if (t == "curl" || t == "nabla2") return Operator::Curl;
    if (t == "div" || t == "nabla3") return Operator::Div;
    if (t.starts_with(kNabla) && t.size() == kNabla.size() + 1) {
        switch (t.back()) {
            case '1': return Operator::Grad;
            case '2': return Operator::Curl;
            case '3': return Operator::Div;
            default: break;
        }
    }
    return std::nullopt;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Token {
    std::string_view text;
    std::size_t byte_offset;
    bool glyph;  // an explicit composition separator
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
        } else if (text[i] == '.') {
            tokens.push_back({text.substr(i, 1), i, true});
            ++i;
        } else if (text.substr(i).starts_with(kCompose)) {
            tokens.push_back({text.substr(i, kCompose.size()), i, true});
            i += kCompose.size();
        } else {
            auto start = i;
            while (i < text.size() && !is_space(text[i]) && text[i] != '.' &&
                   !text.substr(i).starts_with(kCompose))
                ++i;
            auto word = text.substr(start, i - start);
            tokens.push_back({word, start, word == "o" || word == "O"});
        }
    }
    return tokens;
}

}  // namespace

Chain parse_chain(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw ParseError(0, "empty operator expression");

    auto offset = [&](const Token& t) { return code_points(text.substr(0, t.byte_offset)); };

    std::vector<Operator> ops;
    bool expect_operator = true;
    for (const auto& tok : tokens) {
        if (tok.glyph) {
            if (expect_operator)
                throw ParseError(offset(tok), "composition separator \"" + std::string(tok.text) +
                                                  "\" must stand between two operators");
            expect_operator = true;
            continue;
        }
        auto op = lookup(tok.text);
        if (!op) {
            std::string msg = "unknown token \"" + std::string(tok.text) + "\"";
            auto lower = lowercase(tok.text);
            if (lower == "f" || lower == "f⃗" || lower == "v")
                msg += " (expressions denote operators, not applications)";
            throw ParseError(offset(tok), msg);
        }
        ops.push_back(*op);
        expect_operator = false;
    }
    if (expect_operator)
        throw ParseError(offset(tokens.back()), "expression ends with a composition separator");
    return Chain(std::move(ops));
}

std::string format_chain(const Chain& chain) {
    std::string out;
    for (auto op : chain) {
        if (!out.empty()) out += ' ';
        out += name(op);
    }
    return out;
}

}  // namespace nabla
