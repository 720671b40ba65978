#include "nabla/field_io.hpp"

#include "nabla/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nabla {

namespace {

using nlohmann::json;

Polynomial terms_from_json(const json& terms, std::string_view where) {
    Polynomial p;
    if (terms.is_null()) return p;
    if (!terms.is_array()) throw FormatError(std::string(where) + ": terms must be an array");
    std::set<Exponents> seen;
    for (const auto& term : terms) {
        if (!term.is_object() || !term.contains("c") || !term.contains("e"))
            throw FormatError(std::string(where) + ": each term needs \"c\" and \"e\"");
        const auto& c = term.at("c");
        Rational coeff;
        if (c.is_string())
            coeff = parse_rational(c.get<std::string>());
        else if (c.is_number_integer())
            coeff = Rational(c.get<long long>());
        else
            throw FormatError(std::string(where) + ": coefficient must be a \"p/q\" string");

        const auto& e = term.at("e");
        if (!e.is_array() || e.size() != 3)
            throw FormatError(std::string(where) + ": exponent must be a triple");
        Exponents exps{};
        for (std::size_t k = 0; k < 3; ++k) {
            if (!e[k].is_number_integer() || e[k].get<long long>() < 0 ||
                e[k].get<long long>() > 1'000'000)
                throw FormatError(std::string(where) + ": exponents must be non-negative integers");
            exps[k] = e[k].get<unsigned>();
        }
        if (!seen.insert(exps).second)
            throw FormatError(std::string(where) + ": duplicate exponent triple [" +
                              std::to_string(exps[0]) + "," + std::to_string(exps[1]) + "," +
                              std::to_string(exps[2]) + "]");
        p.add_term(exps, coeff);
    }
    return p;
}

nlohmann::ordered_json terms_to_json(const Polynomial& p) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["c"] = to_string(c);
        term["e"] = {e[0], e[1], e[2]};
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace

FieldValue field_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw FormatError("field document needs a \"kind\" string");
    auto kind = doc["kind"].get<std::string>();
    if (kind == "scalar") return terms_from_json(doc.value("terms", json()), "scalar");
    if (kind == "vector") {
        VectorField v;
        if (!doc.contains("components") || doc["components"].is_null()) return v;
        const auto& comps = doc["components"];
        if (!comps.is_array() || comps.size() != 3)
            throw FormatError("vector field needs exactly three components");
        for (std::size_t k = 0; k < 3; ++k)
            v.components[k] = terms_from_json(comps[k], "component " + std::to_string(k + 1));
        return v;
    }
    throw FormatError("unknown field kind \"" + kind + "\"");
}

FieldValue parse_field(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return field_from_json(doc);
}

FieldValue read_field_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open field file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_field(buf.str());
}

nlohmann::ordered_json field_to_json(const FieldValue& fv) {
    nlohmann::ordered_json doc;
    if (const auto* f = std::get_if<ScalarField>(&fv)) {
        doc["kind"] = "scalar";
        doc["terms"] = terms_to_json(*f);
    } else {
        const auto& v = std::get<VectorField>(fv);
        doc["kind"] = "vector";
        doc["components"] = {terms_to_json(v.components[0]), terms_to_json(v.components[1]),
                             terms_to_json(v.components[2])};
    }
    return doc;
}

std::string dump_field(const FieldValue& fv) { return field_to_json(fv).dump(); }

nlohmann::ordered_json point_value_to_json(const PointValue<Rational>& value) {
    nlohmann::ordered_json doc;
    if (const auto* s = std::get_if<Rational>(&value)) {
        doc["kind"] = "scalar";
        doc["value"] = to_string(*s);
    } else {
        const auto& v = std::get<std::array<Rational, 3>>(value);
        doc["kind"] = "vector";
        doc["value"] = {to_string(v[0]), to_string(v[1]), to_string(v[2])};
    }
    return doc;
}

std::string to_string(const PointValue<Rational>& value) {
    if (const auto* s = std::get_if<Rational>(&value)) return to_string(*s);
    const auto& v = std::get<std::array<Rational, 3>>(value);
    return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + ")";
}

std::array<Rational, 3> parse_point(std::string_view text) {
    std::array<Rational, 3> point;
    std::size_t k = 0;
    while (true) {
        auto comma = text.find(',');
        auto piece = text.substr(0, comma);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        if (k == 3) throw FormatError("point must have exactly three coordinates");
        point[k++] = parse_rational(piece);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (k != 3) throw FormatError("point must have exactly three coordinates");
    return point;
}

}  // namespace nabla
