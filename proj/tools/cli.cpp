#include "cli.hpp"

#include <metaopt/consequence.hpp>
#include <metaopt/metaenc.hpp>
#include <metaopt/optimize.hpp>
#include <metaopt/parser.hpp>
#include <metaopt/reify.hpp>
#include <metaopt/semantics.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace metaopt::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::stringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot read " + path);
    }
    ss << file.rdbuf();
    return ss.str();
}

struct Options {
    std::string program = "-";
    std::optional<std::string> criteria;
    std::optional<std::size_t> limit;
    std::size_t max_atoms = 20;
    std::string mode = "complex";
    std::string interpretation;
    bool default_card = false;
};

void print_sets(std::ostream& out, const std::vector<Interpretation>& sets, const std::string& prefix = "") {
    for (const auto& x : sets) {
        out << prefix << to_string(x) << '\n';
    }
}

CriteriaSet load_criteria(const Options& o, std::istream& in) {
    return o.criteria ? parse_criteria(read_input(*o.criteria, in)) : CriteriaSet{};
}

Interpretation parse_interpretation(const std::string& csv, const Program& p) {
    const auto known = atoms(p);
    Interpretation x;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) {
            continue;
        }
        item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
        if (!Atom::valid_name(item) || !known.contains(Atom(item))) {
            throw UsageError("unknown atom " + item);
        }
        x.insert(Atom(item));
    }
    return x;
}

int cmd_reify(const Options& o, std::istream& in, std::ostream& out) {
    out << render_facts(reify(parse_program(read_input(o.program, in))));
    return ok;
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
    const auto sets = enumerate_answer_sets(parse_program(read_input(o.program, in)), {o.max_atoms, o.limit});
    print_sets(out, sets);
    return sets.empty() ? no_solution : ok;
}

int cmd_optimize(const Options& o, std::istream& in, std::ostream& out) {
    if (o.mode != "complex" && o.mode != "default") {
        throw UsageError("unknown mode " + o.mode);
    }
    if (o.mode == "default" && o.criteria) {
        throw UsageError("--criteria is not used in default mode");
    }
    const Program p = parse_program(read_input(o.program, in));
    const EnumerationOptions e{o.max_atoms, o.limit};
    std::vector<Interpretation> sets;
    if (o.mode == "default") {
        sets = default_optimal(p, e);
    } else {
        CriteriaSet c = load_criteria(o, in);
        if (o.default_card) {
            c = with_default_card(c, p.minimize);
        }
        sets = optimal_answer_sets(p, c, e);
    }
    print_sets(out, sets);
    return sets.empty() ? no_solution : ok;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
    const Program p = parse_program(read_input(o.program, in));
    const Interpretation x = parse_interpretation(o.interpretation, p);
    if (!is_model(x, p)) {
        out << "non-model\n";
    } else if (is_answer_set(x, p)) {
        out << "answer-set\n";
    } else if (is_supported_model(p, x)) {
        out << "supported-model\n";
        const auto d = sccs(p);
        for (std::size_t c = 0; c < d.nontrivial_count(); ++c) {
            const auto table = wait_levels(p, d, x, c);
            if (!table.waiting_true.empty()) {
                out << "component " << c << " step " << table.z << ": " << to_string(table.waiting_true) << '\n';
            }
        }
    } else {
        out << "model\n";
    }
    return ok;
}

int cmd_metaenc(const Options& o, std::istream& in, std::ostream& out) {
    const Program p = parse_program(read_input(o.program, in));
    const CriteriaSet c = load_criteria(o, in);
    out << render_meta(build_meta_program(reify(p), c, {.default_card = o.default_card}));
    return ok;
}

int cmd_crosscheck(const Options& o, std::istream& in, std::ostream& out) {
    const Program p = parse_program(read_input(o.program, in));
    const CriteriaSet c = load_criteria(o, in);
    CrosscheckOptions co;
    co.native.max_atoms = o.max_atoms;
    co.meta.max_guess = o.max_atoms;
    co.default_card = o.default_card;
    const auto report = crosscheck(p, c, co);
    print_sets(out, report.native, "native ");
    print_sets(out, report.meta, "meta ");
    if (report.agree()) {
        out << "PASS " << report.native.size() << (report.native.size() == 1 ? " set\n" : " sets\n");
        return ok;
    }
    print_sets(out, report.only_native, "only native ");
    print_sets(out, report.only_meta, "only meta ");
    out << "FAIL\n";
    return disagree;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Answer sets, reification and optimization criteria for ground programs", "metaopt"};
    app.require_subcommand(1);
    Options o;

    auto program = [&o](CLI::App* sub) { sub->add_option("program", o.program, "program file, - for stdin")->required(); };
    auto max_atoms = [&o](CLI::App* sub) {
        sub->add_option("--max-atoms", o.max_atoms, "cap on enumerated atoms")->capture_default_str();
    };
    auto criteria = [&o](CLI::App* sub) { sub->add_option("--criteria", o.criteria, "optimize/prefer facts"); };
    auto default_card = [&o](CLI::App* sub) {
        sub->add_flag("--default-card", o.default_card, "card for minimize groups without a criterion");
    };

    auto* reify_cmd = app.add_subcommand("reify", "print the program as facts");
    program(reify_cmd);

    auto* solve = app.add_subcommand("solve", "enumerate answer sets");
    program(solve);
    solve->add_option("--limit", o.limit, "print at most K sets");
    max_atoms(solve);

    auto* optimize = app.add_subcommand("optimize", "enumerate optimal answer sets");
    program(optimize);
    criteria(optimize);
    optimize->add_option("--mode", o.mode, "complex or default")->capture_default_str();
    optimize->add_option("--limit", o.limit, "print at most K sets");
    max_atoms(optimize);
    default_card(optimize);

    auto* check = app.add_subcommand("check", "classify an interpretation");
    program(check);
    check->add_option("--interpretation", o.interpretation, "comma-separated true atoms")->required();

    auto* metaenc = app.add_subcommand("metaenc", "print the meta program");
    program(metaenc);
    criteria(metaenc);
    default_card(metaenc);

    auto* cross = app.add_subcommand("crosscheck", "compare native and meta-program optima");
    program(cross);
    criteria(cross);
    max_atoms(cross);
    default_card(cross);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    try {
        if (*reify_cmd) return cmd_reify(o, in, out);
        if (*solve) return cmd_solve(o, in, out);
        if (*optimize) return cmd_optimize(o, in, out);
        if (*check) return cmd_check(o, in, out);
        if (*metaenc) return cmd_metaenc(o, in, out);
        return cmd_crosscheck(o, in, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_error;
    } catch (const ReifyError& e) {
        err << "malformed facts: " << e.what() << '\n';
        return parse_error;
    } catch (const LimitExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return cap_exceeded;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

} // namespace metaopt::cli
