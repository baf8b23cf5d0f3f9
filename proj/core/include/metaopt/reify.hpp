#pragma once
// Fact representation of extended programs:
//
//   rule(pos(H),pos(conjunction(S)))   H is atom(a), sum(L,S',U) or false
//   set(S,pos(E)) / set(S,neg(E))      members of body S; E is atom(a) or sum(L,S',U)
//   wlist(S,Q,pos(atom(a)),W)          Q-th weighted literal of list S (also neg(atom(a)))
//   scc(C,E)                           E is atom(a), conjunction(S) or sum(L,S',U)
//   minimize(J,S)                      entries of priority level J are the list S
//
// Weighted lists and conjunctions are numbered independently, in order of first
// occurrence; structurally identical lists or conjunctions share a label.

#include <metaopt/core.hpp>
#include <metaopt/error.hpp>
#include <metaopt/term.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <variant>
#include <vector>

namespace metaopt {

using Reification = std::vector<Term>;

/// Throws ContractViolation on a proper disjunction.
[[nodiscard]] Reification reify(const Program& p);

/// Materializes trivial sum bounds (0 and the total weight), sorts and deduplicates rule
/// bodies and disjunctions, and groups minimize entries by level in order of first
/// occurrence. parse_reified(reify(p)) == normalize(p).
[[nodiscard]] Program normalize(const Program& p);

struct SumRef {
    Weight lower = 0;
    std::size_t list = 0;
    Weight upper = 0;

    friend bool operator==(const SumRef&, const SumRef&) = default;
    friend std::strong_ordering operator<=>(const SumRef&, const SumRef&) = default;
};

struct ConjRef {
    std::size_t label = 0;

    friend bool operator==(const ConjRef&, const ConjRef&) = default;
    friend std::strong_ordering operator<=>(const ConjRef&, const ConjRef&) = default;
};

struct FalseHead {
    friend bool operator==(const FalseHead&, const FalseHead&) = default;
    friend std::strong_ordering operator<=>(const FalseHead&, const FalseHead&) = default;
};

using HeadRef = std::variant<FalseHead, Atom, SumRef>;
using MemberRef = std::variant<Atom, SumRef>;
using ElementRef = std::variant<Atom, ConjRef, SumRef>;

struct SetMember {
    Polarity polarity = Polarity::positive;
    MemberRef element;

    friend bool operator==(const SetMember&, const SetMember&) = default;
    friend std::strong_ordering operator<=>(const SetMember&, const SetMember&) = default;
};

struct ReifiedRule {
    HeadRef head;
    std::size_t body = 0;
};

/// Validated, label-preserving view of a reification.
struct ReifiedProgram {
    std::vector<ReifiedRule> rules;
    std::map<std::size_t, std::vector<WeightedLiteral>> lists;
    std::map<std::size_t, std::vector<SetMember>> sets;
    std::map<std::size_t, std::set<ElementRef>> components;
    std::vector<std::pair<Level, std::size_t>> minimize;

    /// Empty if the label has no wlist facts.
    [[nodiscard]] const std::vector<WeightedLiteral>& list(std::size_t label) const;
    /// Empty if the label has no set facts.
    [[nodiscard]] const std::vector<SetMember>& set(std::size_t label) const;
    [[nodiscard]] SumConstraint sum(const SumRef& s) const;
    [[nodiscard]] std::vector<BodyLiteral> body(std::size_t label) const;
    /// Labels of all rule bodies, ascending.
    [[nodiscard]] std::set<std::size_t> conjunctions() const;
    /// All sums occurring in heads or bodies.
    [[nodiscard]] std::set<SumRef> sums() const;
    [[nodiscard]] std::set<Atom> atoms() const;
    [[nodiscard]] Program program() const;
};

/// Throws ReifyError on unknown or malformed facts, gaps or duplicates in wlist indexes,
/// labels that nothing refers to, and scc facts that disagree with the program.
[[nodiscard]] ReifiedProgram analyze(const Reification& facts);

[[nodiscard]] Program parse_reified(const Reification& facts);

[[nodiscard]] Term to_term(const SumRef& s);
[[nodiscard]] Term to_term(const ElementRef& e);

} // namespace metaopt
