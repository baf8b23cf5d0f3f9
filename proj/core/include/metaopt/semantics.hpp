#pragma once
// Satisfaction, reduct, and answer sets of ground extended and disjunctive programs.

#include <metaopt/core.hpp>
#include <metaopt/error.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace metaopt {

[[nodiscard]] bool satisfies(const Interpretation& x, const Literal& l);
[[nodiscard]] bool satisfies(const Interpretation& x, const Disjunction& d);
[[nodiscard]] bool satisfies(const Interpretation& x, const SumConstraint& s);
[[nodiscard]] bool satisfies(const Interpretation& x, const Head& h);
[[nodiscard]] bool satisfies(const Interpretation& x, const BodyLiteral& b);
[[nodiscard]] bool satisfies(const Interpretation& x, const Rule& r);
/// X satisfies every literal of the body.
[[nodiscard]] bool body_holds(const Interpretation& x, std::span<const BodyLiteral> body);

[[nodiscard]] bool is_model(const Interpretation& x, const Program& p);

/// The reduct of p relative to x. Sum heads become one single-atom rule per true head
/// atom; positive body sums keep only their positive elements and a lower bound reduced by
/// the weight of negative elements satisfied by absence; negative components are dropped.
/// Within each rule, atom components precede sum components.
[[nodiscard]] Program reduct(const Program& p, const Interpretation& x);

/// No negative body component, no upper bound, no sum head.
[[nodiscard]] bool is_positive(const Program& p);

/// x is a model of the positive program and no proper subset is. Exact search that only
/// branches on disjunctive heads; throws LimitExceeded if the search grows too large.
[[nodiscard]] bool is_minimal_model(const Interpretation& x, const Program& positive);

/// Same judgment by testing all 2^|x| subsets; throws LimitExceeded if |x| > max_atoms.
[[nodiscard]] bool is_minimal_model_exhaustive(const Interpretation& x, const Program& positive,
                                               std::size_t max_atoms = 20);

[[nodiscard]] bool is_answer_set(const Interpretation& x, const Program& p);

struct EnumerationOptions {
    std::size_t max_atoms = 20;
    std::optional<std::size_t> limit;
};

/// All answer sets in lexicographic order of their sorted atom lists; throws
/// LimitExceeded if the program has more than `max_atoms` atoms.
[[nodiscard]] std::vector<Interpretation> enumerate_answer_sets(const Program& p,
                                                                const EnumerationOptions& options = {});

} // namespace metaopt
