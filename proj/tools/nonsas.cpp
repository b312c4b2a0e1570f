// Command-line surface: run axiom suites, evaluate .axm programs, print
// canonical witnesses, and describe label schemes.
//
// Exit codes: 0 all verdicts as expected; 1 unexpected violation or missing
// expected violation; 2 undetermined results present; 3 usage/config error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nonsas/dsl.hpp"
#include "nonsas/report.hpp"

namespace {

using namespace nonsas;

struct BuiltinScheme {
    LabelScheme scheme;
    std::string description;
    // expected verdict per axiom id; absent axioms are expected to Hold
    std::map<std::string, Status> expected;
};

const std::map<std::string, BuiltinScheme>& builtin_schemes() {
    static const std::map<std::string, BuiltinScheme> table = [] {
        std::map<std::string, BuiltinScheme> t;
        t["identity"] = {LabelScheme::identity(),
                         "identity bijection at every vertex; plain Euclidean congruence",
                         {}};
        t["counterexample"] = {
            LabelScheme::counterexample(),
            "swaps the classes 1/4 pi and 7/16 pi at the vertex (1, 1); breaks SAS and the "
            "parallel postulate while Playfair survives",
            {{"sas", Status::Violated},
             {"pp", Status::Violated},
             {"cn5", Status::Violated},
             {"additivity", Status::Violated}}};
        for (auto [suffix, r] : std::initializer_list<std::pair<const char*, Rational>>{
                 {"3/2", Rational(3, 2)}, {"2", Rational(2)}, {"5/2", Rational(5, 2)}}) {
            t[std::string("power-") + suffix] = {
                LabelScheme::power({{point(1, 1), r}}),
                std::string("order-preserving power map x*(2x/pi)^r with r = ") + suffix +
                    " at the vertex (1, 1); keeps the part less than the whole but breaks "
                    "additivity",
                {{"sas", Status::Violated},
                 {"pp", Status::Violated},
                 {"additivity", Status::Violated}}};
        }
        return t;
    }();
    return table;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedSpec("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json parse_json_file(const std::string& path) {
    try {
        return nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedSpec(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

// Named built-in, or a path to a scheme config document. Custom schemes carry
// no expectation table: every check is expected to Hold.
BuiltinScheme resolve_scheme(const std::string& name_or_path) {
    auto it = builtin_schemes().find(name_or_path);
    if (it != builtin_schemes().end()) return it->second;
    return {LabelScheme::from_json(parse_json_file(name_or_path)),
            "custom scheme from " + name_or_path, {}};
}

Domain resolve_domain(const std::string& path, std::uint64_t seed, long budget) {
    Domain d = path.empty() ? Domain::canonical() : Domain::from_json(parse_json_file(path));
    d.seed = seed;
    d.budget = budget;
    return d;
}

int cmd_verify(const std::string& scheme_arg, const std::string& domain_path,
               const std::vector<std::string>& axioms, std::uint64_t seed, long budget,
               const std::string& format) {
    BuiltinScheme bs = resolve_scheme(scheme_arg);
    Domain d = resolve_domain(domain_path, seed, budget);
    auto checks = run_suite(bs.scheme, d, axioms);
    Report rep = make_report(scheme_arg, d, checks);
    if (format == "json")
        std::cout << rep.to_json_string();
    else
        std::cout << rep.to_text();

    bool mismatch = false, undetermined = false;
    for (const auto& c : checks) {
        auto e = bs.expected.find(c.axiom_id);
        Status want = e == bs.expected.end() ? Status::Holds : e->second;
        if (c.status == Status::Undetermined)
            undetermined = true;
        else if (c.status != want)
            mismatch = true;
    }
    return mismatch ? 1 : (undetermined ? 2 : 0);
}

int cmd_witness(const std::string& which) {
    LabelScheme s = LabelScheme::counterexample();
    Domain d = Domain::canonical();
    if (which == "pp-failure") {
        CheckResult r = check_pp(s, d);
        if (r.status != Status::Violated) return 1;
        std::cout << "parallel postulate failure (counterexample scheme)\n"
                  << r.witness.dump(2) << "\n";
        return 0;
    }
    if (which == "sas-failure") {
        CheckResult r = check_sas(s, d);
        if (r.status != Status::Violated) return 1;
        std::cout << "SAS failure (counterexample scheme)\n" << r.witness.dump(2) << "\n";
        return 0;
    }
    std::cerr << "unknown witness '" << which << "' (pp-failure | sas-failure)\n";
    return 3;
}

int cmd_eval(const std::string& program_path, const std::string& scheme_arg,
             const std::string& domain_path, std::uint64_t seed, long budget) {
    BuiltinScheme bs = resolve_scheme(scheme_arg);
    // Bounded quantifier evaluation defaults to the small carrier; the full
    // grid is quadratically larger in rays and only suits the sampled checkers.
    Domain d = domain_path.empty()
                   ? Domain::compact(seed, budget)
                   : resolve_domain(domain_path, seed, budget);
    dsl::Program prog = dsl::parse(read_file(program_path));
    auto results = dsl::evaluate(prog, d, bs.scheme);
    bool unknown = false;
    for (const auto& [name, out] : results) {
        const char* v = out.verdict == TriBool::True    ? "True"
                        : out.verdict == TriBool::False ? "False"
                                                        : "Unknown";
        if (out.verdict == TriBool::Unknown) unknown = true;
        std::cout << name << ": " << v << "\n";
        for (const auto& [var, val] : out.witness)
            std::cout << "  " << var << " = " << val << "\n";
    }
    return unknown ? 2 : 0;
}

int cmd_label(const std::string& point_arg, const std::string& measure_arg) {
    auto comma = point_arg.find(',');
    if (comma == std::string::npos) throw MalformedSpec("--point expects x,y");
    auto x = parse_rational(point_arg.substr(0, comma));
    auto y = parse_rational(point_arg.substr(comma + 1));
    auto q = parse_rational(measure_arg);
    if (!x || !y || !q) throw MalformedSpec("bad fraction literal");
    if (!(*q > 0 && *q < 1)) throw MalformedSpec("--measure must lie in (0, 1) (units of pi)");
    LabelScheme s = LabelScheme::counterexample();
    Point p{*x, *y};
    AngleValue mu = AngleValue::pi_multiple(*q);
    const HatBijection& hat = s.hat_for(p);
    AngleValue out = AngleValue::zero();
    Cmp c = compare_with_pi_multiple(mu, Rational(1, 2));
    if (c == Cmp::Equal)
        out = AngleValue::pi_multiple(Rational(1, 2));
    else if (c == Cmp::Less)
        out = hat_apply(hat, mu);
    else
        out = AngleValue::pi_multiple(Rational(1)) -
              hat_apply(hat, AngleValue::pi_multiple(Rational(1) - *q));
    std::cout << out.str() << "\n";
    return 0;
}

int cmd_scheme(const std::string& sub, const std::string& name) {
    if (sub == "list") {
        for (const auto& [n, b] : builtin_schemes()) std::cout << n << "\n";
        return 0;
    }
    if (sub == "describe") {
        auto it = builtin_schemes().find(name);
        if (it == builtin_schemes().end()) {
            std::cerr << "unknown scheme '" << name << "'\n";
            return 3;
        }
        std::cout << it->first << ": " << it->second.description << "\n"
                  << it->second.scheme.to_json().dump(2) << "\n";
        std::cout << "expected deviations from Holds:";
        if (it->second.expected.empty()) std::cout << " none";
        for (const auto& [ax, st] : it->second.expected)
            std::cout << " " << ax << "=" << to_string(st);
        std::cout << "\n";
        return 0;
    }
    std::cerr << "unknown scheme subcommand '" << sub << "' (list | describe)\n";
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"axiom suites over exact plane geometry with relabeled angle congruence"};
    app.require_subcommand(1);

    std::string scheme_arg = "counterexample", domain_path, format = "text";
    std::vector<std::string> axioms;
    std::uint64_t seed = 42;
    long budget = 1000;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--scheme", scheme_arg, "built-in scheme name or config path");
        c->add_option("--domain", domain_path, "domain JSON path (default: canonical)");
        c->add_option("--seed", seed, "sampling seed");
        c->add_option("--budget", budget, "sample budget");
    };

    auto* verify = app.add_subcommand("verify", "run the axiom suite");
    add_common(verify);
    verify->add_option("--axioms", axioms, "subset of axiom ids")->delimiter(',');
    verify->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* witness = app.add_subcommand("witness", "print a canonical failure witness");
    std::string witness_which;
    witness->add_option("kind", witness_which, "pp-failure | sas-failure")->required();

    auto* eval = app.add_subcommand("eval", "evaluate an .axm program");
    std::string program_path;
    eval->add_option("--program", program_path, ".axm file")->required();
    add_common(eval);

    auto* label = app.add_subcommand("label", "print the label of q*pi at a point");
    std::string point_arg, measure_arg;
    label->add_option("--point", point_arg, "vertex as x,y")->required();
    label->add_option("--measure", measure_arg, "measure as a fraction of pi")->required();

    auto* scheme = app.add_subcommand("scheme", "document built-in schemes");
    std::string scheme_sub, scheme_name;
    scheme->add_option("subcommand", scheme_sub, "list | describe")->required();
    scheme->add_option("name", scheme_name, "scheme name for describe");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (verify->parsed())
            return cmd_verify(scheme_arg, domain_path, axioms, seed, budget, format);
        if (witness->parsed()) return cmd_witness(witness_which);
        if (eval->parsed())
            return cmd_eval(program_path, scheme_arg, domain_path, seed, budget);
        if (label->parsed()) return cmd_label(point_arg, measure_arg);
        if (scheme->parsed()) return cmd_scheme(scheme_sub, scheme_name);
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
