#include <metaopt/semantics.hpp>

#include "ground.hpp"

#include <algorithm>

namespace metaopt {

bool satisfies(const Interpretation& x, const Literal& l) { return x.contains(l.atom) != l.negative(); }

bool satisfies(const Interpretation& x, const Disjunction& d) {
    return std::any_of(d.atoms.begin(), d.atoms.end(), [&x](const Atom& a) { return x.contains(a); });
}

bool satisfies(const Interpretation& x, const SumConstraint& s) {
    Weight total = 0;
    for (const auto& wl : s.elements) {
        if (satisfies(x, wl.literal)) {
            total += wl.weight;
        }
    }
    return s.lower_bound() <= total && (!s.upper || total <= *s.upper);
}

bool satisfies(const Interpretation& x, const Head& h) {
    return std::visit([&x](const auto& v) { return satisfies(x, v); }, h);
}

bool satisfies(const Interpretation& x, const BodyLiteral& b) {
    const bool v = std::visit(
        [&x](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Atom>) {
                return x.contains(e);
            } else {
                return satisfies(x, e);
            }
        },
        b.element);
    return v != b.negative();
}

bool body_holds(const Interpretation& x, std::span<const BodyLiteral> body) {
    return std::all_of(body.begin(), body.end(), [&x](const BodyLiteral& b) { return satisfies(x, b); });
}

bool satisfies(const Interpretation& x, const Rule& r) { return satisfies(x, r.head) || !body_holds(x, r.body); }

bool is_model(const Interpretation& x, const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(), [&x](const Rule& r) { return satisfies(x, r); });
}

Program reduct(const Program& p, const Interpretation& x) {
    const auto g = detail::GroundProgram::compile(p, x);
    return g.decompile(g.reduct(g.assignment(x)));
}

bool is_positive(const Program& p) {
    for (const auto& r : p.rules) {
        if (!std::holds_alternative<Disjunction>(r.head)) {
            return false;
        }
        for (const auto& b : r.body) {
            if (b.negative()) {
                return false;
            }
            if (const auto* s = std::get_if<SumConstraint>(&b.element)) {
                if (s->upper || std::any_of(s->elements.begin(), s->elements.end(),
                                            [](const WeightedLiteral& wl) { return wl.literal.negative(); })) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

void require_positive(const Program& p) {
    if (!is_positive(p)) {
        throw ContractViolation("minimal-model check requires a positive program");
    }
}

} // namespace

bool is_minimal_model(const Interpretation& x, const Program& positive) {
    require_positive(positive);
    const auto g = detail::GroundProgram::compile(positive, x);
    const auto assignment = g.assignment(x);
    // A positive program compiles to itself as its own reduct.
    return detail::positive_minimal(g.reduct(assignment), assignment);
}

bool is_minimal_model_exhaustive(const Interpretation& x, const Program& positive, std::size_t max_atoms) {
    require_positive(positive);
    if (x.size() > max_atoms) {
        throw LimitExceeded("interpretation has " + std::to_string(x.size()) + " atoms, limit is " +
                            std::to_string(max_atoms));
    }
    if (!is_model(x, positive)) {
        return false;
    }
    const std::vector<Atom> members(x.begin(), x.end());
    const std::size_t full = (std::size_t{1} << members.size()) - 1;
    for (std::size_t mask = 0; mask < full; ++mask) {
        Interpretation sub;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if ((mask >> i) & 1U) {
                sub.insert(members[i]);
            }
        }
        if (is_model(sub, positive)) {
            return false;
        }
    }
    return true;
}

bool is_answer_set(const Interpretation& x, const Program& p) {
    const auto g = detail::GroundProgram::compile(p, x);
    return g.is_answer_set(g.assignment(x));
}

std::vector<Interpretation> enumerate_answer_sets(const Program& p, const EnumerationOptions& options) {
    const auto g = detail::GroundProgram::compile(p);
    const std::size_t n = g.size();
    if (n > options.max_atoms) {
        throw LimitExceeded("program has " + std::to_string(n) + " atoms, cap is " +
                            std::to_string(options.max_atoms));
    }
    std::vector<Interpretation> out;
    detail::Assignment x(n, 0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<char>((mask >> i) & 1U);
        }
        if (g.is_answer_set(x)) {
            out.push_back(g.interpretation(x));
        }
    }
    std::sort(out.begin(), out.end());
    if (options.limit && out.size() > *options.limit) {
        out.resize(*options.limit);
    }
    return out;
}

} // namespace metaopt
