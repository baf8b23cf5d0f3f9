#pragma once
// Ground disjunctive meta-program whose answer sets are the optimal answer sets of a
// reified extended program.
//
// The candidate part re-derives the object program over hold(atom(a)). The counterexample
// part guesses true(atom(a)) | fail(atom(a)), derives bot whenever the guess violates a
// rule, lacks support, or has an unfounded atom (wait levels per nontrivial component),
// and the comparison part derives bot whenever the guess fails to dominate the candidate.
// Saturation rules turn bot into every true/fail atom and `:- not bot.` keeps only
// candidates for which no counterexample exists.
//
// Meta atoms are flat names derived from their terms, e.g. hold(atom(p)) is hold_atom_p
// and wait(0,sum(1,0,2),1) is wait_0_sum_1_0_2_1; a negative integer -k is spelled mk.

#include <metaopt/core.hpp>
#include <metaopt/error.hpp>
#include <metaopt/reify.hpp>
#include <metaopt/semantics.hpp>
#include <metaopt/term.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace metaopt {

struct MetaProgram {
    Program program;
    std::set<Atom> object_atoms;
    std::map<Atom, Atom> hold;
    std::map<Atom, Atom> true_atom;
    std::map<Atom, Atom> fail_atom;
    Atom bot{"bot"};
    /// The structured term behind every meta atom.
    std::map<Atom, Term> terms;
    /// Rules [0, element_rules) define hold atoms of sums and rule bodies, sums first.
    std::size_t element_rules = 0;
    /// Rules [0, candidate_rules) form the candidate part.
    std::size_t candidate_rules = 0;
    /// Rules [candidate_rules, counterexample_rules) form the counterexample part; the rest
    /// compares candidate and counterexample.
    std::size_t counterexample_rules = 0;
};

struct MetaOptions {
    /// Give card to minimize groups without a criterion.
    bool default_card = false;
    /// Without the comparison part and the final constraint, answer sets pair a candidate
    /// with each counterexample.
    bool optimization = true;
};

/// Throws ContractViolation if the meta atom names collide.
[[nodiscard]] MetaProgram build_meta_program(const ReifiedProgram& facts, const CriteriaSet& crit,
                                             const MetaOptions& options = {});
/// Validates the facts first (ReifyError).
[[nodiscard]] MetaProgram build_meta_program(const Reification& facts, const CriteriaSet& crit,
                                             const MetaOptions& options = {});

/// Program text with section comments; parses back to mp.program.
[[nodiscard]] std::string render_meta(const MetaProgram& mp);

struct MetaSolveOptions {
    /// Upper bound on guessed object atoms.
    std::size_t max_guess = 26;
    std::optional<std::size_t> limit;
};

/// Answer sets of the meta program projected to the object atoms whose hold atom is true.
/// Candidates are enumerated over hold(atom(a)); for each one that passes the candidate
/// part, the saturated interpretation is built and checked as an answer set of the whole
/// program. Throws LimitExceeded beyond `max_guess` object atoms.
[[nodiscard]] std::vector<Interpretation> solve_meta(const MetaProgram& mp, const MetaSolveOptions& options = {});

struct MetaPair {
    Interpretation candidate;
    /// Absent for the saturated answer set.
    std::optional<Interpretation> counterexample;

    friend bool operator==(const MetaPair&, const MetaPair&) = default;
    friend auto operator<=>(const MetaPair&, const MetaPair&) = default;
};

/// All answer sets of a meta program, each given by its hold and true projections;
/// enumerates candidate and counterexample guesses. Intended for small programs.
[[nodiscard]] std::vector<MetaPair> enumerate_meta_pairs(const MetaProgram& mp, const MetaSolveOptions& options = {});

struct CrosscheckOptions {
    EnumerationOptions native;
    MetaSolveOptions meta;
    bool default_card = false;
};

struct CrosscheckReport {
    std::vector<Interpretation> native;
    std::vector<Interpretation> meta;
    std::vector<Interpretation> only_native;
    std::vector<Interpretation> only_meta;

    [[nodiscard]] bool agree() const noexcept { return only_native.empty() && only_meta.empty(); }
};

[[nodiscard]] CrosscheckReport crosscheck(const Program& p, const CriteriaSet& crit,
                                          const CrosscheckOptions& options = {});

} // namespace metaopt
