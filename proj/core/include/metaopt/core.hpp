#pragma once
// Abstract syntax of ground extended and disjunctive logic programs.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace metaopt {

using Weight = std::int64_t;
using Level = std::int64_t;

/// A propositional atom; the name matches `[a-z][A-Za-z0-9_]*`.
class Atom {
public:
    explicit Atom(std::string name);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] static bool valid_name(std::string_view name) noexcept;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;

private:
    std::string name_;
};

enum class Polarity : std::uint8_t { positive, negative };

struct Literal {
    Polarity polarity = Polarity::positive;
    Atom atom;

    [[nodiscard]] static Literal pos(Atom a) { return {Polarity::positive, std::move(a)}; }
    [[nodiscard]] static Literal neg(Atom a) { return {Polarity::negative, std::move(a)}; }
    [[nodiscard]] bool negative() const noexcept { return polarity == Polarity::negative; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal&, const Literal&) = default;
};

struct WeightedLiteral {
    Literal literal;
    Weight weight = 1;

    friend bool operator==(const WeightedLiteral&, const WeightedLiteral&) = default;
    friend std::strong_ordering operator<=>(const WeightedLiteral&, const WeightedLiteral&) = default;
};

/// `L #sum[l1=w1,...,lk=wk] U`. The elements form a multiset: order is irrelevant for
/// equality, duplicates are not. An absent lower bound means 0, an absent upper bound
/// means unbounded.
struct SumConstraint {
    std::optional<Weight> lower;
    std::vector<WeightedLiteral> elements;
    std::optional<Weight> upper;

    [[nodiscard]] Weight lower_bound() const noexcept { return lower.value_or(0); }
    [[nodiscard]] Weight total_weight() const noexcept;

    friend bool operator==(const SumConstraint& a, const SumConstraint& b) {
        return a.canonical() == b.canonical();
    }
    friend std::strong_ordering operator<=>(const SumConstraint& a, const SumConstraint& b) {
        return a.canonical() <=> b.canonical();
    }

private:
    [[nodiscard]] std::tuple<Weight, std::optional<Weight>, std::vector<WeightedLiteral>> canonical() const;
};

/// `a1 | ... | ak`; the empty disjunction is falsum.
struct Disjunction {
    std::vector<Atom> atoms;

    friend bool operator==(const Disjunction& a, const Disjunction& b) {
        return a.canonical() == b.canonical();
    }
    friend std::strong_ordering operator<=>(const Disjunction& a, const Disjunction& b) {
        return a.canonical() <=> b.canonical();
    }

private:
    [[nodiscard]] std::vector<Atom> canonical() const;
};

using Head = std::variant<Disjunction, SumConstraint>;
using BodyAtomOrSum = std::variant<Atom, SumConstraint>;

struct BodyLiteral {
    Polarity polarity = Polarity::positive;
    BodyAtomOrSum element;

    [[nodiscard]] bool negative() const noexcept { return polarity == Polarity::negative; }

    friend bool operator==(const BodyLiteral&, const BodyLiteral&) = default;
    friend std::strong_ordering operator<=>(const BodyLiteral&, const BodyLiteral&) = default;
};

struct Rule {
    Head head;
    std::vector<BodyLiteral> body;

    [[nodiscard]] bool is_fact() const noexcept { return body.empty(); }
    [[nodiscard]] bool is_constraint() const noexcept;
    /// True if the head is a disjunction over more than one atom.
    [[nodiscard]] bool is_proper_disjunctive() const noexcept;

    friend bool operator==(const Rule&, const Rule&) = default;
};

struct MinimizeEntry {
    Literal literal;
    Weight weight = 1;
    Level level = 1;

    friend bool operator==(const MinimizeEntry&, const MinimizeEntry&) = default;
};

struct MinimizeStatement {
    std::vector<MinimizeEntry> entries;

    [[nodiscard]] bool empty() const noexcept { return entries.empty(); }
    friend bool operator==(const MinimizeStatement&, const MinimizeStatement&) = default;
};

struct Program {
    std::vector<Rule> rules;
    MinimizeStatement minimize;

    /// True if no rule has a proper disjunction in its head.
    [[nodiscard]] bool is_extended() const noexcept;

    friend bool operator==(const Program&, const Program&) = default;
};

/// The set of true atoms; everything else is false.
using Interpretation = std::set<Atom>;

/// A (level, weight) pair identifying a group of minimize entries.
struct GroupKey {
    Level level = 1;
    Weight weight = 1;

    friend bool operator==(const GroupKey&, const GroupKey&) = default;
    friend std::strong_ordering operator<=>(const GroupKey&, const GroupKey&) = default;
};

enum class Criterion : std::uint8_t { card, incl, pref };

[[nodiscard]] std::string_view to_string(Criterion c) noexcept;
[[nodiscard]] std::optional<Criterion> criterion_from_string(std::string_view s) noexcept;

using PreferencePair = std::pair<Literal, Literal>;

/// The active relations M (one criterion per group) plus the literal preference relation.
struct CriteriaSet {
    std::map<GroupKey, Criterion> relations;
    std::set<PreferencePair> prefer;

    /// Adds a relation; throws ContractViolation if the group already has a different one.
    void add(GroupKey key, Criterion c);
    [[nodiscard]] bool empty() const noexcept { return relations.empty(); }

    friend bool operator==(const CriteriaSet&, const CriteriaSet&) = default;
};

// --- projections -------------------------------------------------------------

[[nodiscard]] std::set<Atom> atoms(const Program& p);
[[nodiscard]] std::set<Atom> atoms(const Rule& r);

/// pos(B1,...,not Bn) = {B1,...,Bm}
[[nodiscard]] std::vector<BodyAtomOrSum> positive_part(std::span<const BodyLiteral> body);
/// pos(a1 | ... | ak) = {a1,...,ak}
[[nodiscard]] std::set<Atom> positive_part(const Disjunction& d);
/// pos(L #sum[...] U) = the positively signed weighted literals, duplicates kept.
[[nodiscard]] std::vector<WeightedLiteral> positive_part(const SumConstraint& s);
/// atom(S) for a multiset of weighted literals.
[[nodiscard]] std::set<Atom> atom_set(std::span<const WeightedLiteral> elements);
/// atom(pos(H)) for either head variant.
[[nodiscard]] std::set<Atom> head_atoms(const Head& h);
/// atom(pos(B)) for a single positive body component.
[[nodiscard]] std::set<Atom> element_atoms(const BodyAtomOrSum& e);

/// `{a,b,c}` with atoms in lexicographic order.
[[nodiscard]] std::string to_string(const Interpretation& x);
[[nodiscard]] std::string to_string(const Literal& l);

} // namespace metaopt
