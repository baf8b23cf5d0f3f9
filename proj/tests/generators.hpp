#pragma once
// Random ground programs and criteria for property tests.

#include <metaopt/core.hpp>

#include <random>
#include <string>
#include <vector>

namespace testing {

struct ProgramShape {
    int atoms = 6;
    int max_rules = 8;
    int max_body = 3;
    bool disjunctive = false;
    bool minimize = false;
    int levels = 1;
    int weights = 1;
    /// Probability of a leading choice rule over a random subset of the atoms.
    double choice = 0.0;
};

class ProgramGenerator {
public:
    explicit ProgramGenerator(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    metaopt::Atom atom(int n) { return metaopt::Atom(std::string(1, static_cast<char>('a' + uniform(0, n - 1)))); }

    metaopt::Literal literal(int n, double neg = 0.3) {
        auto a = atom(n);
        return coin(neg) ? metaopt::Literal::neg(std::move(a)) : metaopt::Literal::pos(std::move(a));
    }

    metaopt::SumConstraint sum(int n, double neg) {
        metaopt::SumConstraint s;
        const int k = uniform(1, 3);
        for (int i = 0; i < k; ++i) {
            s.elements.push_back({literal(n, neg), uniform(1, 2)});
        }
        const auto total = s.total_weight();
        if (coin(0.7)) {
            s.lower = uniform(0, static_cast<int>(total));
        }
        if (coin(0.4)) {
            s.upper = uniform(static_cast<int>(s.lower_bound()), static_cast<int>(total));
        }
        return s;
    }

    metaopt::Rule rule(const ProgramShape& shape) {
        const int n = shape.atoms;
        metaopt::Rule r{metaopt::Disjunction{}, {}};
        const int kind = uniform(0, 9);
        if (kind < 5) {
            r.head = metaopt::Disjunction{{atom(n)}};
        } else if (kind < 8) {
            r.head = sum(n, 0.2);
        } else if (kind < 9 && shape.disjunctive) {
            r.head = metaopt::Disjunction{{atom(n), atom(n)}};
        } else if (kind < 9) {
            r.head = metaopt::Disjunction{{atom(n)}};
        }
        const int b = uniform(0, shape.max_body);
        for (int i = 0; i < b; ++i) {
            const auto polarity = coin(0.35) ? metaopt::Polarity::negative : metaopt::Polarity::positive;
            if (coin(0.7)) {
                r.body.push_back({polarity, atom(n)});
            } else {
                r.body.push_back({polarity, sum(n, 0.3)});
            }
        }
        return r;
    }

    metaopt::Program program(const ProgramShape& shape) {
        metaopt::Program p;
        if (shape.choice > 0 && coin(shape.choice)) {
            metaopt::SumConstraint s;
            for (int i = 0; i < shape.atoms; ++i) {
                if (coin()) {
                    s.elements.push_back({metaopt::Literal::pos(metaopt::Atom(std::string(1, static_cast<char>('a' + i)))), 1});
                }
            }
            p.rules.push_back({s, {}});
        }
        const int k = uniform(1, shape.max_rules);
        for (int i = 0; i < k; ++i) {
            p.rules.push_back(rule(shape));
        }
        if (shape.minimize) {
            const int e = uniform(1, shape.atoms + 1);
            for (int i = 0; i < e; ++i) {
                p.minimize.entries.push_back({literal(shape.atoms, 0.2), uniform(1, shape.weights), uniform(1, shape.levels)});
            }
        }
        return p;
    }

    /// Random criteria over the (level, weight) grid of the shape, with random preferences
    /// between literals of the program's minimize statement.
    metaopt::CriteriaSet criteria(const ProgramShape& shape, const metaopt::Program& p) {
        metaopt::CriteriaSet c;
        for (int level = 1; level <= shape.levels; ++level) {
            for (int w = 1; w <= shape.weights; ++w) {
                const int pick = uniform(0, 3);
                if (pick < 3) {
                    c.add({level, w}, static_cast<metaopt::Criterion>(pick));
                }
            }
        }
        const auto& entries = p.minimize.entries;
        if (!entries.empty()) {
            const int k = uniform(0, 3);
            for (int i = 0; i < k; ++i) {
                const auto& a = entries[static_cast<std::size_t>(uniform(0, static_cast<int>(entries.size()) - 1))];
                const auto& b = entries[static_cast<std::size_t>(uniform(0, static_cast<int>(entries.size()) - 1))];
                c.prefer.emplace(a.literal, b.literal);
            }
        }
        return c;
    }

private:
    std::mt19937_64 rng_;
};

/// All subsets of the given atoms.
inline std::vector<metaopt::Interpretation> all_interpretations(const std::set<metaopt::Atom>& atoms) {
    const std::vector<metaopt::Atom> v(atoms.begin(), atoms.end());
    std::vector<metaopt::Interpretation> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << v.size()); ++mask) {
        metaopt::Interpretation x;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if ((mask >> i) & 1U) {
                x.insert(v[i]);
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace testing
