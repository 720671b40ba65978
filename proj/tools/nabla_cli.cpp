// nabla: classify, enumerate and evaluate grad/curl/div operator chains.
//
// Exit status: 0 success, 1 usage or input error, 2 meaningless chain where a
// meaningful one is required, 3 a verification suite found a violated identity.

#include "nabla/classifier.hpp"
#include "nabla/collections.hpp"
#include "nabla/errors.hpp"
#include "nabla/field_io.hpp"
#include "nabla/parser.hpp"
#include "nabla/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

enum ExitStatus : int { kOk = 0, kInputError = 1, kMeaningless = 2, kVerifyFailed = 3 };

std::string join(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

std::string describe(const nabla::Chain& chain) {
    using namespace nabla;
    return std::visit(
        [&](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Meaningless>) {
                return "meaningless";
            } else if constexpr (std::is_same_v<T, TrivialZero>) {
                return "zero (" + std::string(name(c.output_sort)) +
                       "), annihilating pair at position " + std::to_string(c.witness) + ": " +
                       format_chain(chain.slice(c.witness, 2));
            } else {
                auto sig = chain_signature(chain);
                return "nontrivial: " + std::string(name(c.form.family)) + ", order " +
                       std::to_string(c.form.order) + ", signature " +
                       std::string(name(sig.input())) + " -> " + std::string(name(sig.output()));
            }
        },
        classify(chain));
}

int run_classify(const std::vector<std::string>& words) {
    auto chain = nabla::parse_chain(join(words));
    std::cout << describe(chain) << "\n";
    return kOk;
}

int run_census(std::size_t max_order, bool json) {
    std::vector<nabla::Census> rows;
    for (std::size_t n = 1; n <= max_order; ++n) rows.push_back(nabla::census(n));
    if (json) {
        auto doc = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["length"] = r.length;
            row["total"] = r.total();
            row["meaningless"] = r.meaningless_count;
            row["meaningful"] = r.meaningful_count();
            row["trivial"] = r.trivial_count;
            row["nontrivial"] = r.nontrivial_count;
            doc.push_back(std::move(row));
        }
        std::cout << doc.dump() << "\n";
        return kOk;
    }
    std::cout << std::left << std::setw(8) << "length" << std::setw(10) << "total"
              << std::setw(13) << "meaningless" << std::setw(12) << "meaningful" << std::setw(14)
              << "trivial-zero"
              << "nontrivial\n";
    for (const auto& r : rows)
        std::cout << std::left << std::setw(8) << r.length << std::setw(10) << r.total()
                  << std::setw(13) << r.meaningless_count << std::setw(12) << r.meaningful_count()
                  << std::setw(14) << r.trivial_count << r.nontrivial_count << "\n";
    return kOk;
}

int run_apply(const std::string& chain_expr, const std::string& field_path,
              const std::string& at, bool json) {
    auto chain = nabla::parse_chain(chain_expr);
    auto field = nabla::read_field_file(field_path);
    auto result = nabla::apply_chain(chain, field);
    if (at.empty()) {
        std::cout << nabla::dump_field(result) << "\n";
        return kOk;
    }
    auto value = nabla::eval_at(result, nabla::parse_point(at));
    if (json)
        std::cout << nabla::point_value_to_json(value).dump() << "\n";
    else
        std::cout << nabla::to_string(value) << "\n";
    return kOk;
}

int run_order(nabla::CollectionKind kind, const std::string& field_path, unsigned max_n) {
    auto field = nabla::read_field_file(field_path);
    auto result = nabla::collection_order(kind, field, max_n);
    if (const auto* o = std::get_if<nabla::Order>(&result))
        std::cout << "order " << o->n << "\n";
    else
        std::cout << "exceeds " << std::get<nabla::ExceedsBound>(result).bound << "\n";
    return kOk;
}

int run_verify(const std::string& suite, const nabla::VerifyOptions& options) {
    auto report = nabla::run_suite(suite, options);
    std::cout << nabla::format_report(report);
    return report.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operator algebra for grad, curl and div on R^3"};
    app.require_subcommand(1);

    std::vector<std::string> classify_expr;
    auto* classify = app.add_subcommand("classify", "Classify an operator chain");
    classify->add_option("expr", classify_expr, "Operator chain, outermost first")->required();

    std::size_t census_max = 3;
    bool census_json = false;
    auto* census = app.add_subcommand("census", "Count chains by classification per length");
    census->add_option("--max", census_max, "Largest chain length")
        ->check(CLI::Range(std::size_t{1}, nabla::kDefaultCensusBound));
    census->add_flag("--json", census_json, "Machine-readable output");

    std::string apply_chain_expr, apply_field, apply_at;
    bool apply_json = false;
    auto* apply = app.add_subcommand("apply", "Apply a chain to a polynomial field");
    apply->add_option("--chain", apply_chain_expr, "Operator chain")->required();
    apply->add_option("--field", apply_field, "Field JSON file")->required();
    apply->add_option("--at", apply_at, "Evaluate at a point \"a,b,c\"");
    apply->add_flag("--json", apply_json, "JSON output for --at");

    std::string order_kind, order_field;
    unsigned order_max = nabla::kDefaultMaxOrder;
    auto* order = app.add_subcommand("order", "Least order of a field in a collection");
    order->add_option("--collection", order_kind, "harmonic | curling | vharmonic")
        ->required()
        ->check(CLI::IsMember({"harmonic", "curling", "vharmonic"}));
    order->add_option("--field", order_field, "Field JSON file")->required();
    order->add_option("--max", order_max, "Largest order tried")->check(CLI::PositiveNumber);

    std::string verify_suite;
    nabla::VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run a seeded identity suite");
    verify->add_option("--suite", verify_suite, "identities | associativity | examples | oracle")
        ->required()
        ->check(CLI::IsMember({"identities", "associativity", "examples", "oracle"}));
    verify->add_option("--trials", verify_opts.trials, "Corpus size")->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_opts.seed, "Corpus seed");
    verify->add_option("--degree", verify_opts.degree, "Maximum polynomial degree");
    verify->add_flag("--inject-fault", verify_opts.inject_fault,
                     "Force the first check to fail (tests the failure path)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    try {
        if (*classify) return run_classify(classify_expr);
        if (*census) return run_census(census_max, census_json);
        if (*apply) return run_apply(apply_chain_expr, apply_field, apply_at, apply_json);
        if (*order) {
            auto kind = order_kind == "harmonic"  ? nabla::CollectionKind::Harmonic
                        : order_kind == "curling" ? nabla::CollectionKind::Curling
                                                  : nabla::CollectionKind::VectorHarmonic;
            return run_order(kind, order_field, order_max);
        }
        if (*verify) return run_verify(verify_suite, verify_opts);
    } catch (const nabla::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const nabla::MeaninglessChain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMeaningless;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
