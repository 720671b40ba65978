#include "nabla/verify.hpp"

#include "nabla/classifier.hpp"
#include "nabla/collections.hpp"
#include "nabla/corpus.hpp"
#include "nabla/field_io.hpp"
#include "nabla/numeric_oracle.hpp"
#include "nabla/parser.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nabla {

bool SuiteReport::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); });
}

namespace {

/// Accumulates named checks; the first failure of each keeps a counterexample.
class Tally {
public:
    explicit Tally(bool inject_fault) : inject_fault_(inject_fault) {}

    void record(const std::string& name, bool ok, const std::function<std::string()>& describe) {
        if (inject_fault_) {
            ok = false;
            inject_fault_ = false;
        }
        auto& r = results_[name];
        r.name = name;
        ++r.total;
        if (ok)
            ++r.passed;
        else if (!r.counterexample)
            r.counterexample = describe();
    }

    SuiteReport finish(std::string suite) && {
        SuiteReport report{std::move(suite), {}};
        for (auto& [name, r] : results_) report.checks.push_back(std::move(r));
        return report;
    }

private:
    bool inject_fault_;
    std::map<std::string, CheckResult> results_;
};

std::string describe(const FieldValue& fv) { return dump_field(fv); }

std::vector<Chain> meaningful_chains(std::size_t length) {
    std::vector<Chain> out;
    for (auto& c : enumerate_chains(length))
        if (chain_signature(c).is_meaningful()) out.push_back(std::move(c));
    return out;
}

Rational random_rational(FieldGenerator& gen) {
    auto num = gen.uniform_int(-9, 9);
    auto den = gen.uniform_int(1, 9);
    return Rational(num, den);
}

SuiteReport identities(const VerifyOptions& opt) {
    using enum Operator;
    FieldGenerator gen(opt.seed);
    Tally tally(opt.inject_fault);
    std::vector<Chain> linear_chains;
    for (std::size_t n = 1; n <= 3; ++n)
        for (auto& c : meaningful_chains(n)) linear_chains.push_back(std::move(c));

    const std::vector<std::pair<std::string, Chain>> zero_chains = {
        {"div curl = 0", Chain{Div, Curl}},
        {"curl grad = 0", Chain{Curl, Grad}},
        {"div curl curl = 0", Chain{Div, Curl, Curl}},
        {"div curl grad = 0", Chain{Div, Curl, Grad}},
        {"curl curl grad = 0", Chain{Curl, Curl, Grad}},
        {"curl grad div = 0", Chain{Curl, Grad, Div}},
        {"grad div curl = 0", Chain{Grad, Div, Curl}},
    };

    for (std::size_t t = 0; t < opt.trials; ++t) {
        const FieldValue f = gen.polynomial(opt.degree);
        const FieldValue v = gen.vector_field(opt.degree);
        const auto& fs = std::get<ScalarField>(f);
        const auto& vv = std::get<VectorField>(v);

        for (const auto& [label, chain] : zero_chains) {
            const auto& arg = chain_signature(chain).input() == Sort::Scalar ? f : v;
            tally.record(label, is_zero(apply_chain(chain, arg)), [&] { return describe(arg); });
        }

        tally.record("curl curl = grad div - vector laplacian",
                     curl(curl(vv)) == grad(div(vv)) - vector_laplacian(vv),
                     [&] { return describe(v); });
        tally.record("laplacian = div grad", laplacian(fs) == div(grad(fs)),
                     [&] { return describe(f); });

        for (auto op : kAllOperators) {
            const auto& arg = signature(op).domain == Sort::Scalar ? f : v;
            auto out = apply_operator(op, arg);
            int din = std::visit([](const auto& x) { return x.degree(); }, arg);
            int dout = std::visit([](const auto& x) { return x.degree(); }, out);
            bool ok = is_zero(out) || (op == Grad ? dout == din - 1 : dout <= din - 1);
            tally.record("degree drops under " + std::string(name(op)), ok,
                         [&] { return describe(arg); });
        }

        const auto a = random_rational(gen);
        const auto b = random_rational(gen);
        const FieldValue f2 = gen.polynomial(opt.degree);
        const FieldValue v2 = gen.vector_field(opt.degree);
        for (const auto& chain : linear_chains) {
            bool scalar_in = chain_signature(chain).input() == Sort::Scalar;
            const auto& u = scalar_in ? f : v;
            const auto& w = scalar_in ? f2 : v2;
            auto lhs = apply_chain(chain, a * u + b * w);
            auto rhs = a * apply_chain(chain, u) + b * apply_chain(chain, w);
            tally.record("linearity", lhs == rhs, [&] {
                return format_chain(chain) + " on " + describe(u) + " and " + describe(w);
            });
        }
    }
    return std::move(tally).finish("identities");
}

SuiteReport associativity(const VerifyOptions& opt) {
    FieldGenerator gen(opt.seed);
    Tally tally(opt.inject_fault);
    for (auto i : kAllOperators)
        for (auto j : kAllOperators)
            for (auto k : kAllOperators)
                for (auto s : kAllSorts) {
                    auto right = compose(ChainSignature::of(i), compose_pair(j, k)).apply_to(s);
                    auto left = compose(compose_pair(i, j), ChainSignature::of(k)).apply_to(s);
                    auto folded = chain_signature(Chain{i, j, k}).apply_to(s);
                    tally.record("signature groupings (54 cases)", left == right && left == folded,
                                 [&] {
                                     return format_chain(Chain{i, j, k}) + " on " +
                                            std::string(name(s));
                                 });
                }

    for (const auto& chain : meaningful_chains(3)) {
        const auto in = chain_signature(chain).input();
        for (std::size_t t = 0; t < opt.trials; ++t) {
            const auto x = gen.field(in, opt.degree);
            auto right = apply_operator(chain[0], apply_chain(chain.slice(1, 2), x));
            auto left = apply_chain(chain.slice(0, 2), apply_operator(chain[2], x));
            tally.record("value groupings", left == right,
                         [&] { return format_chain(chain) + " on " + describe(x); });
        }
    }
    return std::move(tally).finish("associativity");
}

SuiteReport examples(const VerifyOptions& opt) {
    FieldGenerator gen(opt.seed);
    Tally tally(opt.inject_fault);
    const auto x1 = Polynomial::variable(Axis::X1);
    const auto r2 = radius_squared();

    for (std::size_t t = 0; t < opt.trials; ++t) {
        const auto h = gen.harmonic();
        const auto hv = gen.vector_harmonic();
        for (const auto& e : example1_suite(h, hv))
            tally.record("third-order products vanish on harmonic fields", e.vanishes, [&] {
                return format_chain(e.chain) + " on " + describe(h) + " / " + describe(hv);
            });
        tally.record("curl curl = grad div on vector-harmonic", check_eq22(hv),
                     [&] { return describe(hv); });

        const auto f = gen.polynomial(opt.degree);
        for (unsigned n = 1; n <= 4; ++n)
            tally.record("laplacian power of x1 f product rule", check_example2(f, n), [&] {
                return "n=" + std::to_string(n) + " f=" + describe(f);
            });
        for (unsigned n = 1; n <= 4; ++n)
            tally.record(n == 1 ? "laplacian of x1^2 f product rule" : "laplacian power of x1^2 f product rule",
                         check_example3(f, n),
                         [&] { return "n=" + std::to_string(n) + " f=" + describe(f); });

        for (unsigned n = 2; n <= 3; ++n) {
            const auto g = gen.polyharmonic(n - 1);
            const FieldValue gv = g;
            tally.record("polyharmonic corpus has exact order",
                         collection_order(CollectionKind::Harmonic, gv) == OrderResult{Order{n - 1}},
                         [&] { return describe(gv); });
            auto within = [&](const Polynomial& p) {
                auto r = collection_order(CollectionKind::Harmonic, FieldValue{p});
                return std::holds_alternative<Order>(r) && std::get<Order>(r).n <= n;
            };
            tally.record("x1 * H(n-1) lies in H(n)", within(x1 * g), [&] { return describe(gv); });
            tally.record("r^2 * H(n-1) lies in H(n)", within(r2 * g), [&] { return describe(gv); });
        }
    }

    const std::array<std::pair<Polynomial, unsigned>, 3> witnesses = {{
        {x1 * x1 - Polynomial::variable(Axis::X2) * Polynomial::variable(Axis::X2), 1},
        {r2, 2},
        {r2 * r2, 3},
    }};
    for (const auto& [p, n] : witnesses)
        tally.record("harmonic strictness witnesses",
                     collection_order(CollectionKind::Harmonic, FieldValue{p}) ==
                         OrderResult{Order{n}},
                     [&, &p = p] { return describe(p); });
    return std::move(tally).finish("examples");
}

SuiteReport oracle(const VerifyOptions& opt) {
    FieldGenerator gen(opt.seed);
    Tally tally(opt.inject_fault);
    FdConfig first_order;
    first_order.step = kFirstOrderStep;
    const FdConfig nested;  // defaults, relaxed tolerance applies at depth 2

    // Tolerances are calibrated for fields of degree <= 3.
    const unsigned degree = std::min(opt.degree, kOracleMaxDegree);
    std::vector<Point> points;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const FieldValue f = gen.polynomial(degree);
        const FieldValue v = gen.vector_field(degree);
        points.clear();
        for (int i = 0; i < 10; ++i) points.push_back(gen.point());

        for (auto op : kAllOperators) {
            const auto& arg = signature(op).domain == Sort::Scalar ? f : v;
            auto report = cross_check(Chain{op}, arg, points, first_order);
            tally.record("first-order " + std::string(name(op)) + " matches finite differences",
                         report.passed(), [&] { return describe(arg); });
        }
        for (const auto& chain : meaningful_chains(2)) {
            const auto& arg = chain_signature(chain).input() == Sort::Scalar ? f : v;
            auto report = cross_check(chain, arg, points, nested);
            tally.record("second-order chains match nested differences", report.passed(),
                         [&] { return format_chain(chain) + " on " + describe(arg); });
        }
    }

    auto quartic = SampledField::scalar([](const Point& p) { return std::pow(p.x(), 4); });
    const Point at(1.0, 0.0, 0.0);
    FdConfig coarse, fine;
    coarse.step = 1e-3;
    fine.step = 1e-4;
    double e1 = std::abs(fd_partial(quartic, Axis::X1, at, coarse) - 4.0);
    double e2 = std::abs(fd_partial(quartic, Axis::X1, at, fine) - 4.0);
    double ratio = e1 / e2;
    tally.record("central difference converges at second order", ratio >= 25.0 && ratio <= 400.0,
                 [&] { return "error ratio " + std::to_string(ratio); });
    return std::move(tally).finish("oracle");
}

}  // namespace

SuiteReport run_suite(std::string_view suite, const VerifyOptions& options) {
    if (options.trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (suite == "identities") return identities(options);
    if (suite == "associativity") return associativity(options);
    if (suite == "examples") return examples(options);
    if (suite == "oracle") return oracle(options);
    throw std::invalid_argument("unknown suite \"" + std::string(suite) + "\"");
}

std::string format_report(const SuiteReport& report) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        out << (c.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.passed << "/" << c.total << ")\n";
        if (!c.ok()) {
            ++failed;
            out << "  counterexample: " << c.counterexample.value_or("?") << "\n";
        }
    }
    out << report.suite << ": " << (report.checks.size() - failed) << "/" << report.checks.size()
        << " checks passed\n";
    return out.str();
}

}  // namespace nabla
