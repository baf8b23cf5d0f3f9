#include <doctest.h>

#include "generators.hpp"
#include "support.hpp"

#include <metaopt/metaenc.hpp>
#include <metaopt/optimize.hpp>
#include <metaopt/parser.hpp>

#include <algorithm>

using namespace metaopt;
using testing::fixture_program;
using testing::interp;
using testing::interps;

namespace {

MetaProgram meta_for(const Program& p, const CriteriaSet& c, MetaOptions o = {}) {
    return build_meta_program(reify(p), c, o);
}

std::vector<Interpretation> sorted(std::vector<Interpretation> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool is_hold(const MetaProgram& mp, const Atom& a) { return mp.terms.at(a).is("hold", 1); }

} // namespace

TEST_CASE("meta program of the running example") {
    const Program p = fixture_program("pi1.lp");
    CHECK(solve_meta(meta_for(p, parse_criteria("optimize(1,1,incl)."))) ==
          sorted(interps({"p,q", "p,r", "s,t"})));
    CHECK(solve_meta(meta_for(p, parse_criteria("optimize(1,1,card)."))) == interps({"s,t"}));
    CHECK(solve_meta(meta_for(p, CriteriaSet{})) == sorted(interps({"p,q", "p,r", "p,s", "p,s,t", "s,t"})));
    CHECK(solve_meta(meta_for(p, CriteriaSet{}, {.default_card = true})) == interps({"s,t"}));
}

TEST_CASE("meta program of a program without answer sets") {
    const Program p = parse_program("a :- not a. #minimize[a=1@1].");
    CHECK(solve_meta(meta_for(p, parse_criteria("optimize(1,1,card)."))).empty());
    CHECK(solve_meta(meta_for(p, CriteriaSet{})).empty());
}

TEST_CASE("meta program structure") {
    const Program p = fixture_program("pi1.lp");
    const MetaProgram mp = meta_for(p, parse_criteria("optimize(1,1,incl)."));
    const auto& rules = mp.program.rules;

    SUBCASE("last rule is the final constraint") {
        REQUIRE(!rules.empty());
        const Rule want{Disjunction{}, {{Polarity::negative, mp.bot}}};
        CHECK(rules.back() == want);
    }
    SUBCASE("saturation rules for every object atom") {
        for (const auto& a : mp.object_atoms) {
            const Rule t{Disjunction{{mp.true_atom.at(a)}}, {{Polarity::positive, mp.bot}}};
            const Rule f{Disjunction{{mp.fail_atom.at(a)}}, {{Polarity::positive, mp.bot}}};
            CHECK(std::find(rules.begin(), rules.end(), t) != rules.end());
            CHECK(std::find(rules.begin(), rules.end(), f) != rules.end());
            const Rule guess{Disjunction{{mp.true_atom.at(a), mp.fail_atom.at(a)}}, {}};
            CHECK(std::find(rules.begin(), rules.end(), guess) != rules.end());
        }
    }
    SUBCASE("rendering parses back") {
        CHECK(parse_program(render_meta(mp)) == mp.program);
    }
    SUBCASE("part boundaries") {
        CHECK(mp.element_rules <= mp.candidate_rules);
        CHECK(mp.candidate_rules <= mp.counterexample_rules);
        CHECK(mp.counterexample_rules < rules.size());
        for (std::size_t i = 0; i < mp.candidate_rules; ++i) {
            for (const auto& a : metaopt::atoms(rules[i])) {
                CHECK(is_hold(mp, a));
            }
        }
    }
    SUBCASE("wait levels of the component") {
        // {p,r,t} is the only nontrivial component: atoms wait at 0..3, bodies and sums at 0..2.
        std::map<std::string, std::size_t> deepest;
        for (const auto& [a, t] : mp.terms) {
            if (t.is("wait", 3)) {
                auto& d = deepest[t.args[1].name];
                d = std::max(d, static_cast<std::size_t>(t.args[2].value));
            }
        }
        CHECK(deepest["atom"] == 3);
        CHECK(deepest["conjunction"] == 2);
        CHECK(deepest["sum"] == 2);
    }
}

TEST_CASE("property: default negation only over hold atoms, apart from the final constraint") {
    testing::ProgramGenerator gen(71);
    const testing::ProgramShape shape{.atoms = 5, .max_rules = 6, .minimize = true, .levels = 2, .weights = 2};
    for (int i = 0; i < 60; ++i) {
        const Program p = gen.program(shape);
        const MetaProgram mp = meta_for(p, gen.criteria(shape, p));
        const auto& rules = mp.program.rules;
        for (std::size_t k = 0; k + 1 < rules.size(); ++k) {
            for (const auto& b : rules[k].body) {
                if (const auto* a = std::get_if<Atom>(&b.element)) {
                    if (b.negative()) {
                        CHECK(is_hold(mp, *a));
                    }
                } else {
                    for (const auto& wl : std::get<SumConstraint>(b.element).elements) {
                        if (wl.literal.negative()) {
                            CHECK(is_hold(mp, wl.literal.atom));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("property: answer sets of the meta program without comparison pair answer sets") {
    testing::ProgramGenerator gen(72);
    const testing::ProgramShape shape{.atoms = 4, .max_rules = 6};
    for (int i = 0; i < 40; ++i) {
        const Program p = gen.program(shape);
        const auto as = enumerate_answer_sets(p);
        std::vector<MetaPair> want;
        for (const auto& x : as) {
            for (const auto& y : as) {
                want.push_back({x, y});
            }
        }
        std::sort(want.begin(), want.end());
        const auto got = enumerate_meta_pairs(meta_for(p, {}, {.optimization = false}));
        CHECK_MESSAGE(got == want, render_program(p));
    }
}

TEST_CASE("property: meta answer sets are the optimal answer sets") {
    testing::ProgramGenerator gen(73);
    SUBCASE("single level") {
        const testing::ProgramShape shape{.atoms = 5, .max_rules = 7, .minimize = true};
        for (int i = 0; i < 60; ++i) {
            const Program p = gen.program(shape);
            const auto report = crosscheck(p, gen.criteria(shape, p));
            CHECK_MESSAGE(report.agree(), render_program(p));
        }
    }
    SUBCASE("levels, weights and preferences") {
        const testing::ProgramShape shape{
            .atoms = 5, .max_rules = 7, .minimize = true, .levels = 2, .weights = 2, .choice = 0.6};
        for (int i = 0; i < 60; ++i) {
            const Program p = gen.program(shape);
            const auto c = gen.criteria(shape, p);
            const auto report = crosscheck(p, c, {.default_card = gen.coin()});
            CHECK_MESSAGE(report.agree(), render_program(p) << render_criteria(c));
        }
    }
    SUBCASE("eight atoms") {
        const testing::ProgramShape shape{.atoms = 8, .max_rules = 10, .minimize = true, .levels = 2, .choice = 0.6};
        for (int i = 0; i < 50; ++i) {
            const Program p = gen.program(shape);
            const auto report = crosscheck(p, gen.criteria(shape, p));
            CHECK_MESSAGE(report.agree(), render_program(p));
        }
    }
    SUBCASE("positive loops") {
        // Dense positive bodies produce nontrivial components.
        const testing::ProgramShape shape{.atoms = 4, .max_rules = 8, .max_body = 2, .minimize = true};
        for (int i = 0; i < 60; ++i) {
            Program p = gen.program(shape);
            p.rules.push_back({Disjunction{{Atom("a")}}, {{Polarity::positive, Atom("b")}}});
            p.rules.push_back({Disjunction{{Atom("b")}}, {{Polarity::positive, Atom("a")}}});
            const auto report = crosscheck(p, gen.criteria(shape, p));
            CHECK_MESSAGE(report.agree(), render_program(p));
        }
    }
}

TEST_CASE("meta program of the repair fixture") {
    const Program p = fixture_program("repair.lp");
    const CriteriaSet c = parse_criteria(testing::read_fixture("repair.crit"));
    const auto report = crosscheck(p, c);
    CHECK(report.agree());
    CHECK(!report.native.empty());
}

TEST_CASE("solve_meta respects the guess cap and limit") {
    const Program p = fixture_program("pi1.lp");
    const MetaProgram mp = meta_for(p, CriteriaSet{});
    CHECK_THROWS_AS((void)solve_meta(mp, {.max_guess = 3}), LimitExceeded);
    CHECK(solve_meta(mp, {.limit = 2}).size() == 2);
}

TEST_CASE("property: one saturated answer set per optimal candidate") {
    // Enumerating counterexample guesses as well: every meta answer set is saturated and
    // no two share a candidate.
    testing::ProgramGenerator gen(74);
    const testing::ProgramShape shape{.atoms = 4, .max_rules = 6, .minimize = true, .levels = 2};
    for (int i = 0; i < 30; ++i) {
        const Program p = gen.program(shape);
        const CriteriaSet c = gen.criteria(shape, p);
        const auto pairs = enumerate_meta_pairs(meta_for(p, c));
        std::vector<Interpretation> candidates;
        for (const auto& pair : pairs) {
            CHECK(!pair.counterexample);
            candidates.push_back(pair.candidate);
        }
        CHECK(std::adjacent_find(candidates.begin(), candidates.end()) == candidates.end());
        CHECK(candidates == sorted(optimal_answer_sets(p, c)));
    }
}
