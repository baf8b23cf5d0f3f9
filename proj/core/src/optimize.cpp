#include <metaopt/optimize.hpp>

#include <algorithm>

namespace metaopt {

std::vector<Literal> group_literals(GroupKey k, const MinimizeStatement& m) {
    std::vector<Literal> out;
    for (const auto& e : m.entries) {
        if (e.level == k.level && e.weight == k.weight) {
            out.push_back(e.literal);
        }
    }
    return out;
}

namespace {

std::size_t count_true(const Interpretation& x, const std::vector<Literal>& lits) {
    return static_cast<std::size_t>(
        std::count_if(lits.begin(), lits.end(), [&x](const Literal& l) { return satisfies(x, l); }));
}

} // namespace

bool leq_at(const Interpretation& x, const Interpretation& y, GroupKey k, const MinimizeStatement& m) {
    const auto lits = group_literals(k, m);
    return count_true(x, lits) <= count_true(y, lits);
}

bool incl_at(const Interpretation& x, const Interpretation& y, GroupKey k, const MinimizeStatement& m) {
    const auto lits = group_literals(k, m);
    return std::all_of(lits.begin(), lits.end(),
                       [&](const Literal& l) { return !satisfies(x, l) || satisfies(y, l); });
}

bool pref_at(const Interpretation& x, const Interpretation& y, GroupKey k, const MinimizeStatement& m,
             const std::set<PreferencePair>& prefer) {
    const auto all = group_literals(k, m);
    const std::set<Literal> lits(all.begin(), all.end());
    auto in_group = [&lits](const Literal& l) { return lits.contains(l); };
    for (const auto& [l1, l2] : prefer) {
        if (!in_group(l1) || !in_group(l2)) {
            continue;
        }
        if (!(satisfies(x, l1) && !satisfies(y, l1) && satisfies(y, l2) && !satisfies(x, l2))) {
            continue;
        }
        const bool defeated = std::any_of(lits.begin(), lits.end(), [&](const Literal& d) {
            return prefer.contains({d, l1}) && !prefer.contains({l1, d}) && satisfies(y, d) && !satisfies(x, d);
        });
        if (!defeated) {
            return true;
        }
    }
    return false;
}

bool relation_at(Criterion c, const Interpretation& x, const Interpretation& y, GroupKey k,
                 const MinimizeStatement& m, const std::set<PreferencePair>& prefer) {
    switch (c) {
        case Criterion::card: return leq_at(x, y, k, m);
        case Criterion::incl: return incl_at(x, y, k, m);
        case Criterion::pref: return pref_at(x, y, k, m, prefer);
    }
    return false;
}

DominanceVerdict dominates(const Interpretation& y, const Interpretation& x, const MinimizeStatement& m,
                           const CriteriaSet& crit) {
    // Walk levels from the top; `upper_ok` records that y R' x held on every group seen so far.
    std::map<Level, std::vector<std::pair<Weight, Criterion>>, std::greater<>> levels;
    for (const auto& [key, c] : crit.relations) {
        levels[key.level].emplace_back(key.weight, c);
    }
    for (const auto& [level, groups] : levels) {
        bool level_ok = true;
        std::optional<GroupKey> witness;
        for (const auto& [w, c] : groups) {
            const GroupKey k{level, w};
            level_ok = level_ok && relation_at(c, y, x, k, m, crit.prefer);
            if (!witness && !relation_at(c, x, y, k, m, crit.prefer)) {
                witness = k;
            }
        }
        if (!level_ok) {
            return {};
        }
        if (witness) {
            return {true, witness};
        }
    }
    return {};
}

std::vector<Interpretation> optimal_answer_sets(const Program& p, const CriteriaSet& crit,
                                                const EnumerationOptions& options) {
    EnumerationOptions all = options;
    all.limit.reset();
    const auto sets = enumerate_answer_sets(p, all);
    std::vector<Interpretation> out;
    for (const auto& x : sets) {
        const bool beaten = std::any_of(sets.begin(), sets.end(),
                                        [&](const Interpretation& y) { return dominates(y, x, p.minimize, crit).dominated; });
        if (!beaten) {
            out.push_back(x);
        }
    }
    if (options.limit && out.size() > *options.limit) {
        out.resize(*options.limit);
    }
    return out;
}

std::map<Level, Weight> level_sums(const Interpretation& x, const MinimizeStatement& m) {
    std::map<Level, Weight> out;
    for (const auto& e : m.entries) {
        auto& s = out[e.level];
        if (satisfies(x, e.literal)) {
            s += e.weight;
        }
    }
    return out;
}

std::vector<Interpretation> default_optimal(const Program& p, const EnumerationOptions& options) {
    EnumerationOptions all = options;
    all.limit.reset();
    const auto sets = enumerate_answer_sets(p, all);
    // Higher levels are more significant, so compare the sums in descending level order.
    auto key = [&p](const Interpretation& x) {
        std::vector<Weight> v;
        const auto sums = level_sums(x, p.minimize);
        for (auto it = sums.rbegin(); it != sums.rend(); ++it) {
            v.push_back(it->second);
        }
        return v;
    };
    std::vector<std::vector<Weight>> keys;
    keys.reserve(sets.size());
    for (const auto& x : sets) {
        keys.push_back(key(x));
    }
    std::vector<Interpretation> out;
    if (!sets.empty()) {
        const auto best = *std::min_element(keys.begin(), keys.end());
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (keys[i] == best) {
                out.push_back(sets[i]);
            }
        }
    }
    if (options.limit && out.size() > *options.limit) {
        out.resize(*options.limit);
    }
    return out;
}

CriteriaSet with_default_card(const CriteriaSet& crit, const MinimizeStatement& m) {
    CriteriaSet out = crit;
    for (const auto& e : m.entries) {
        out.relations.try_emplace(GroupKey{e.level, e.weight}, Criterion::card);
    }
    return out;
}

std::set<PreferencePair> preference_closure(const std::set<PreferencePair>& prefer) {
    std::set<Literal> lits;
    for (const auto& [a, b] : prefer) {
        lits.insert(a);
        lits.insert(b);
    }
    std::set<PreferencePair> out = prefer;
    for (const auto& l : lits) {
        out.emplace(l, l);
    }
    // Warshall over the literal set.
    for (const auto& k : lits) {
        for (const auto& i : lits) {
            if (!out.contains({i, k})) {
                continue;
            }
            for (const auto& j : lits) {
                if (out.contains({k, j})) {
                    out.emplace(i, j);
                }
            }
        }
    }
    return out;
}

std::vector<PreferencePair> unused_preferences(const CriteriaSet& crit, const MinimizeStatement& m) {
    std::vector<PreferencePair> out;
    for (const auto& pair : crit.prefer) {
        bool used = false;
        for (const auto& [key, c] : crit.relations) {
            if (c != Criterion::pref) {
                continue;
            }
            const auto lits = group_literals(key, m);
            if (std::find(lits.begin(), lits.end(), pair.first) != lits.end() &&
                std::find(lits.begin(), lits.end(), pair.second) != lits.end()) {
                used = true;
                break;
            }
        }
        if (!used) {
            out.push_back(pair);
        }
    }
    return out;
}

} // namespace metaopt
