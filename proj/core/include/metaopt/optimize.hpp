#pragma once
// Comparison relations over minimize groups, dominance, and optimal answer sets.
//
// For a group (J,w) of a minimize statement, the relations read "x is at least as good
// as y": leq_at counts true occurrences, incl_at compares the sets of true literals, and
// pref_at applies a preference relation between literals. y dominates x if some group
// (J,w) of the criteria has not (x R y) while y R' x holds for every group (J',w') of the
// criteria with J' >= J.

#include <metaopt/core.hpp>
#include <metaopt/semantics.hpp>

#include <optional>
#include <set>
#include <vector>

namespace metaopt {

/// Literals of the entries with exactly this level and weight, duplicates kept.
[[nodiscard]] std::vector<Literal> group_literals(GroupKey k, const MinimizeStatement& m);

/// |{occurrences true under x}| <= |{occurrences true under y}|
[[nodiscard]] bool leq_at(const Interpretation& x, const Interpretation& y, GroupKey k, const MinimizeStatement& m);
/// Every group literal true under x is true under y.
[[nodiscard]] bool incl_at(const Interpretation& x, const Interpretation& y, GroupKey k, const MinimizeStatement& m);
/// x is preferable to y: some pair (l1,l2) of `prefer` over group literals has x |= l1,
/// y |/= l1, y |= l2, x |/= l2, and no group literal l with (l,l1) but not (l1,l) in
/// `prefer` has y |= l and x |/= l. Pairs mentioning other literals are ignored.
[[nodiscard]] bool pref_at(const Interpretation& x, const Interpretation& y, GroupKey k, const MinimizeStatement& m,
                           const std::set<PreferencePair>& prefer);

[[nodiscard]] bool relation_at(Criterion c, const Interpretation& x, const Interpretation& y, GroupKey k,
                               const MinimizeStatement& m, const std::set<PreferencePair>& prefer);

struct DominanceVerdict {
    bool dominated = false;
    std::optional<GroupKey> witness;
};

/// Whether y dominates x. The witness is the qualifying group with the highest level
/// (lowest weight among ties).
[[nodiscard]] DominanceVerdict dominates(const Interpretation& y, const Interpretation& x, const MinimizeStatement& m,
                                         const CriteriaSet& crit);

/// Answer sets not dominated by any answer set, in enumeration order.
[[nodiscard]] std::vector<Interpretation> optimal_answer_sets(const Program& p, const CriteriaSet& crit,
                                                              const EnumerationOptions& options = {});

/// Weighted sums compared lexicographically, higher levels first.
[[nodiscard]] std::vector<Interpretation> default_optimal(const Program& p, const EnumerationOptions& options = {});

/// Per-level weighted sums of the true minimize entries, keyed by level.
[[nodiscard]] std::map<Level, Weight> level_sums(const Interpretation& x, const MinimizeStatement& m);

/// Adds card for every group of m that has no criterion.
[[nodiscard]] CriteriaSet with_default_card(const CriteriaSet& crit, const MinimizeStatement& m);

/// Reflexive and transitive closure of the relation over the literals it mentions.
[[nodiscard]] std::set<PreferencePair> preference_closure(const std::set<PreferencePair>& prefer);

/// Preference pairs whose literals do not both occur in some group carrying pref.
[[nodiscard]] std::vector<PreferencePair> unused_preferences(const CriteriaSet& crit, const MinimizeStatement& m);

} // namespace metaopt
