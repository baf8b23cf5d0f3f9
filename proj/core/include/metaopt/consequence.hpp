#pragma once
// Positive dependency graph, strongly connected components, the immediate consequence
// operator, and the wait-level check for unfounded atoms of a component.

#include <metaopt/core.hpp>
#include <metaopt/error.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace metaopt {

/// A rule body viewed as a set of body literals (sorted, duplicates removed).
struct Conjunction {
    std::vector<BodyLiteral> literals;

    [[nodiscard]] static Conjunction of(std::span<const BodyLiteral> body);

    friend bool operator==(const Conjunction&, const Conjunction&) = default;
    friend std::strong_ordering operator<=>(const Conjunction&, const Conjunction&) = default;
};

/// The things that can belong to a component: atoms, rule bodies, and positive body sums.
using Element = std::variant<Atom, Conjunction, SumConstraint>;

[[nodiscard]] std::string to_string(const Element& e);

struct DependencyGraph {
    std::set<Atom> nodes;
    /// (a, b): a occurs in a head whose rule has b in a positive body component.
    std::set<std::pair<Atom, Atom>> edges;
};

[[nodiscard]] DependencyGraph dependency_graph(const Program& p);

struct Component {
    /// Present only for nontrivial components, numbered 0, 1, ... in discovery order.
    std::optional<std::size_t> label;
    std::set<Atom> atoms;
    /// Bodies and positive body sums of rules that link head atoms of this component to
    /// positive body atoms of it. Empty for trivial components.
    std::set<Element> connecting;

    [[nodiscard]] bool nontrivial() const noexcept { return label.has_value(); }
};

struct SccDecomposition {
    /// Ordered so that no edge leads from a component to a later one.
    std::vector<Component> components;

    /// Throws ContractViolation for an unknown label.
    [[nodiscard]] const Component& nontrivial(std::size_t label) const;
    [[nodiscard]] std::size_t nontrivial_count() const noexcept;
};

[[nodiscard]] SccDecomposition sccs(const DependencyGraph& g, const Program& p);
[[nodiscard]] SccDecomposition sccs(const Program& p);

/// Heads of the rules of a positive program whose bodies x satisfies.
[[nodiscard]] std::set<Head> tp_step(const Program& positive, const Interpretation& x);

/// T^0 = seed, T^(i+1) = T^i united with the atoms of tp_step(T^i). Throws
/// ContractViolation on a head with more than one atom.
[[nodiscard]] Interpretation tp_iterate(const Program& positive, const Interpretation& seed, std::size_t steps);

/// x is a model and, for every component C, iterating the reduct |C| times from x minus C
/// recovers x on C.
[[nodiscard]] bool scc_fixpoint_check(const Program& p, const Interpretation& x);

[[nodiscard]] bool is_supported_model(const Program& p, const Interpretation& x);

struct WaitTable {
    std::size_t label = 0;
    /// Number of atoms in the component; atoms have steps 0..z, bodies and sums 0..z-1.
    std::size_t z = 0;
    std::map<Element, std::vector<bool>> wait;
    /// True atoms of the component still waiting at step z.
    std::set<Atom> waiting_true;

    [[nodiscard]] bool waits(const Element& e, std::size_t step) const;
};

/// Throws ContractViolation if `label` names no nontrivial component.
[[nodiscard]] WaitTable wait_levels(const Program& p, const Interpretation& x, std::size_t label);
[[nodiscard]] WaitTable wait_levels(const Program& p, const SccDecomposition& d, const Interpretation& x,
                                    std::size_t label);

} // namespace metaopt
