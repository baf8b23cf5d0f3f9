#pragma once
// Integer-indexed form of a ground program used by the enumeration and checking code.

#include <metaopt/core.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace metaopt::detail {

using AtomId = std::uint32_t;
/// One byte per atom, nonzero = true.
using Assignment = std::vector<char>;

struct GroundSum {
    Weight lower = 0;
    std::optional<Weight> upper;
    std::vector<std::pair<AtomId, Weight>> pos;
    std::vector<std::pair<AtomId, Weight>> neg;
};

struct GroundElem {
    bool negative = false;
    bool is_sum = false;
    std::uint32_t index = 0; // atom id or sum index
};

struct GroundRule {
    bool sum_head = false;
    std::uint32_t head_sum = 0;
    std::vector<AtomId> head; // disjunction atoms, or the distinct positive atoms of the sum head
    std::vector<GroundElem> body;
};

struct PositiveSum {
    Weight lower = 0;
    std::vector<std::pair<AtomId, Weight>> elems;
};

struct PositiveRule {
    std::vector<AtomId> head;
    std::vector<AtomId> atoms;
    std::vector<PositiveSum> sums;
};

struct PositiveGround {
    std::size_t atom_count = 0;
    std::vector<PositiveRule> rules;
};

class GroundProgram {
public:
    /// The atom table is atoms(p) plus `extra`, in lexicographic order.
    static GroundProgram compile(const Program& p, const Interpretation& extra = {});

    [[nodiscard]] const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
    [[nodiscard]] std::optional<AtomId> id(const Atom& a) const;
    [[nodiscard]] const std::vector<GroundRule>& rules() const noexcept { return rules_; }
    [[nodiscard]] const std::vector<GroundSum>& sums() const noexcept { return sums_; }

    /// Atoms of x outside the table are dropped.
    [[nodiscard]] Assignment assignment(const Interpretation& x) const;
    [[nodiscard]] Interpretation interpretation(const Assignment& x) const;

    [[nodiscard]] bool sum_holds(std::uint32_t s, const Assignment& x) const;
    [[nodiscard]] bool body_holds(const GroundRule& r, const Assignment& x) const;
    [[nodiscard]] bool rule_holds(const GroundRule& r, const Assignment& x) const;
    [[nodiscard]] bool is_model(const Assignment& x) const;
    [[nodiscard]] PositiveGround reduct(const Assignment& x) const;
    [[nodiscard]] bool is_answer_set(const Assignment& x) const;

    /// Turns a compiled reduct back into a program over this table's atoms.
    [[nodiscard]] Program decompile(const PositiveGround& g) const;

private:
    std::vector<Atom> atoms_;
    std::map<Atom, AtomId> index_;
    std::vector<GroundSum> sums_;
    std::vector<GroundRule> rules_;
};

[[nodiscard]] bool positive_model(const PositiveGround& g, const Assignment& x);

/// Exact check that no proper subset of x is a model of g. Branches only on rules with
/// more than one open head atom; throws LimitExceeded after `max_nodes` search nodes.
[[nodiscard]] bool positive_minimal(const PositiveGround& g, const Assignment& x,
                                    std::size_t max_nodes = std::size_t{1} << 22);

} // namespace metaopt::detail
