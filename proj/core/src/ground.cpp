#include "ground.hpp"

#include <metaopt/error.hpp>

#include <algorithm>

namespace metaopt::detail {

GroundProgram GroundProgram::compile(const Program& p, const Interpretation& extra) {
    GroundProgram g;
    auto universe = metaopt::atoms(p);
    universe.insert(extra.begin(), extra.end());
    g.atoms_.assign(universe.begin(), universe.end());
    for (AtomId i = 0; i < g.atoms_.size(); ++i) {
        g.index_.emplace(g.atoms_[i], i);
    }
    auto add_sum = [&g](const SumConstraint& s) {
        GroundSum out;
        out.lower = s.lower_bound();
        out.upper = s.upper;
        for (const auto& wl : s.elements) {
            auto& side = wl.literal.negative() ? out.neg : out.pos;
            side.emplace_back(g.index_.at(wl.literal.atom), wl.weight);
        }
        g.sums_.push_back(std::move(out));
        return static_cast<std::uint32_t>(g.sums_.size() - 1);
    };
    for (const auto& r : p.rules) {
        GroundRule gr;
        if (const auto* d = std::get_if<Disjunction>(&r.head)) {
            for (const auto& a : d->atoms) {
                gr.head.push_back(g.index_.at(a));
            }
        } else {
            gr.sum_head = true;
            gr.head_sum = add_sum(std::get<SumConstraint>(r.head));
            for (const auto& [a, w] : g.sums_[gr.head_sum].pos) {
                gr.head.push_back(a);
            }
        }
        std::sort(gr.head.begin(), gr.head.end());
        gr.head.erase(std::unique(gr.head.begin(), gr.head.end()), gr.head.end());
        for (const auto& b : r.body) {
            GroundElem e;
            e.negative = b.negative();
            if (const auto* a = std::get_if<Atom>(&b.element)) {
                e.index = g.index_.at(*a);
            } else {
                e.is_sum = true;
                e.index = add_sum(std::get<SumConstraint>(b.element));
            }
            gr.body.push_back(e);
        }
        g.rules_.push_back(std::move(gr));
    }
    return g;
}

std::optional<AtomId> GroundProgram::id(const Atom& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Assignment GroundProgram::assignment(const Interpretation& x) const {
    Assignment out(atoms_.size(), 0);
    for (const auto& a : x) {
        if (auto i = id(a)) {
            out[*i] = 1;
        }
    }
    return out;
}

Interpretation GroundProgram::interpretation(const Assignment& x) const {
    Interpretation out;
    for (AtomId i = 0; i < atoms_.size(); ++i) {
        if (x[i] != 0) {
            out.insert(out.end(), atoms_[i]);
        }
    }
    return out;
}

bool GroundProgram::sum_holds(std::uint32_t s, const Assignment& x) const {
    const auto& sum = sums_[s];
    Weight total = 0;
    for (const auto& [a, w] : sum.pos) {
        if (x[a] != 0) {
            total += w;
        }
    }
    for (const auto& [a, w] : sum.neg) {
        if (x[a] == 0) {
            total += w;
        }
    }
    return sum.lower <= total && (!sum.upper || total <= *sum.upper);
}

bool GroundProgram::body_holds(const GroundRule& r, const Assignment& x) const {
    for (const auto& e : r.body) {
        const bool v = e.is_sum ? sum_holds(e.index, x) : x[e.index] != 0;
        if (v == e.negative) {
            return false;
        }
    }
    return true;
}

bool GroundProgram::rule_holds(const GroundRule& r, const Assignment& x) const {
    if (!body_holds(r, x)) {
        return true;
    }
    if (r.sum_head) {
        return sum_holds(r.head_sum, x);
    }
    return std::any_of(r.head.begin(), r.head.end(), [&x](AtomId a) { return x[a] != 0; });
}

bool GroundProgram::is_model(const Assignment& x) const {
    return std::all_of(rules_.begin(), rules_.end(), [&](const GroundRule& r) { return rule_holds(r, x); });
}

PositiveGround GroundProgram::reduct(const Assignment& x) const {
    PositiveGround out;
    out.atom_count = atoms_.size();
    for (const auto& r : rules_) {
        if (!body_holds(r, x)) {
            continue;
        }
        PositiveRule body;
        for (const auto& e : r.body) {
            if (e.negative) {
                continue;
            }
            if (!e.is_sum) {
                body.atoms.push_back(e.index);
                continue;
            }
            const auto& s = sums_[e.index];
            PositiveSum ps;
            ps.lower = s.lower;
            for (const auto& [a, w] : s.neg) {
                if (x[a] == 0) {
                    ps.lower -= w;
                }
            }
            ps.elems = s.pos;
            body.sums.push_back(std::move(ps));
        }
        if (r.sum_head) {
            for (AtomId a : r.head) {
                if (x[a] != 0) {
                    PositiveRule pr = body;
                    pr.head = {a};
                    out.rules.push_back(std::move(pr));
                }
            }
        } else {
            body.head = r.head;
            out.rules.push_back(std::move(body));
        }
    }
    return out;
}

bool GroundProgram::is_answer_set(const Assignment& x) const {
    return is_model(x) && positive_minimal(reduct(x), x);
}

Program GroundProgram::decompile(const PositiveGround& g) const {
    Program p;
    for (const auto& r : g.rules) {
        Rule out{Disjunction{}, {}};
        auto& head = std::get<Disjunction>(out.head);
        for (AtomId a : r.head) {
            head.atoms.push_back(atoms_[a]);
        }
        for (AtomId a : r.atoms) {
            out.body.push_back({Polarity::positive, atoms_[a]});
        }
        for (const auto& s : r.sums) {
            SumConstraint sc;
            sc.lower = s.lower;
            for (const auto& [a, w] : s.elems) {
                sc.elements.push_back({Literal::pos(atoms_[a]), w});
            }
            out.body.push_back({Polarity::positive, std::move(sc)});
        }
        p.rules.push_back(std::move(out));
    }
    return p;
}

namespace {

bool positive_body_holds(const PositiveRule& r, const Assignment& x) {
    for (AtomId a : r.atoms) {
        if (x[a] == 0) {
            return false;
        }
    }
    for (const auto& s : r.sums) {
        Weight total = 0;
        for (const auto& [a, w] : s.elems) {
            if (x[a] != 0) {
                total += w;
            }
        }
        if (total < s.lower) {
            return false;
        }
    }
    return true;
}

// Depth-first search for a model strictly inside x. Atoms outside x are excluded up front;
// each node propagates single-candidate rules and branches on the first rule whose body
// holds but whose head has several open atoms.
class SubmodelSearch {
public:
    SubmodelSearch(const PositiveGround& g, const Assignment& x, std::size_t max_nodes)
        : g_(g), max_nodes_(max_nodes) {
        const std::size_t n = g.atom_count;
        atom_rules_.resize(n);
        atom_sums_.resize(n);
        target_ = static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](char c) { return c != 0; }));
        root_.in.assign(n, 0);
        root_.out.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            root_.out[a] = x[a] == 0 ? 1 : 0;
        }
        root_.missing.resize(g.rules.size());
        root_.unsat.assign(g.rules.size(), 0);
        for (std::uint32_t r = 0; r < g.rules.size(); ++r) {
            const auto& rule = g.rules[r];
            auto distinct = rule.atoms;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            root_.missing[r] = static_cast<std::uint32_t>(distinct.size());
            for (AtomId a : distinct) {
                atom_rules_[a].push_back(r);
            }
            for (const auto& s : rule.sums) {
                const auto k = static_cast<std::uint32_t>(sum_rule_.size());
                sum_rule_.push_back(r);
                root_.need.push_back(s.lower);
                if (s.lower > 0) {
                    ++root_.unsat[r];
                }
                for (const auto& [a, w] : s.elems) {
                    atom_sums_[a].emplace_back(k, w);
                }
            }
            if (root_.missing[r] == 0 && root_.unsat[r] == 0) {
                root_.pending.push_back(r);
            }
        }
    }

    bool found() { return explore(root_, std::nullopt); }

private:
    struct State {
        Assignment in;
        Assignment out;
        std::vector<std::uint32_t> missing;
        std::vector<std::uint32_t> unsat;
        std::vector<Weight> need;
        std::vector<std::uint32_t> pending; // rules whose body holds
        std::size_t count = 0;
    };

    void make_true(State& s, AtomId a, std::vector<AtomId>& queue) {
        if (s.in[a] != 0) {
            return;
        }
        s.in[a] = 1;
        ++s.count;
        queue.push_back(a);
    }

    // Returns false on conflict.
    bool propagate(State& s, std::vector<AtomId> queue) {
        std::size_t cursor = 0;
        while (true) {
            while (!queue.empty()) {
                const AtomId a = queue.back();
                queue.pop_back();
                for (std::uint32_t r : atom_rules_[a]) {
                    if (--s.missing[r] == 0 && s.unsat[r] == 0) {
                        s.pending.push_back(r);
                    }
                }
                for (const auto& [k, w] : atom_sums_[a]) {
                    if (s.need[k] > 0) {
                        s.need[k] -= w;
                        if (s.need[k] <= 0) {
                            const auto r = sum_rule_[k];
                            if (--s.unsat[r] == 0 && s.missing[r] == 0) {
                                s.pending.push_back(r);
                            }
                        }
                    }
                }
            }
            if (cursor == s.pending.size()) {
                return true;
            }
            for (; cursor < s.pending.size() && queue.empty(); ++cursor) {
                if (!settle(s, s.pending[cursor], queue)) {
                    return false;
                }
            }
        }
    }

    bool settle(State& s, std::uint32_t r, std::vector<AtomId>& queue) {
        const auto& head = g_.rules[r].head;
        std::optional<AtomId> only;
        std::size_t open = 0;
        for (AtomId h : head) {
            if (s.in[h] != 0) {
                return true;
            }
            if (s.out[h] == 0) {
                ++open;
                only = h;
            }
        }
        if (open == 0) {
            return false;
        }
        if (open == 1) {
            make_true(s, *only, queue);
        }
        return true;
    }

    bool explore(State s, std::optional<AtomId> seed) {
        if (++nodes_ > max_nodes_) {
            throw LimitExceeded("minimality check exceeded " + std::to_string(max_nodes_) + " search nodes");
        }
        std::vector<AtomId> queue;
        if (seed) {
            make_true(s, *seed, queue);
        }
        if (!propagate(s, std::move(queue))) {
            return false;
        }
        if (s.count == target_) {
            return false;
        }
        for (std::uint32_t r : s.pending) {
            const auto& head = g_.rules[r].head;
            if (std::any_of(head.begin(), head.end(), [&s](AtomId h) { return s.in[h] != 0; })) {
                continue;
            }
            std::vector<AtomId> open;
            for (AtomId h : head) {
                if (s.out[h] == 0) {
                    open.push_back(h);
                }
            }
            for (std::size_t i = 0; i < open.size(); ++i) {
                State child = s;
                for (std::size_t j = 0; j < i; ++j) {
                    child.out[open[j]] = 1;
                }
                if (explore(std::move(child), open[i])) {
                    return true;
                }
            }
            return false;
        }
        return true;
    }

    const PositiveGround& g_;
    std::size_t max_nodes_;
    std::size_t nodes_ = 0;
    std::size_t target_ = 0;
    std::vector<std::vector<std::uint32_t>> atom_rules_;
    std::vector<std::vector<std::pair<std::uint32_t, Weight>>> atom_sums_;
    std::vector<std::uint32_t> sum_rule_;
    State root_;
};

} // namespace

bool positive_model(const PositiveGround& g, const Assignment& x) {
    for (const auto& r : g.rules) {
        if (positive_body_holds(r, x) &&
            std::none_of(r.head.begin(), r.head.end(), [&x](AtomId a) { return x[a] != 0; })) {
            return false;
        }
    }
    return true;
}

bool positive_minimal(const PositiveGround& g, const Assignment& x, std::size_t max_nodes) {
    if (!positive_model(g, x)) {
        return false;
    }
    return !SubmodelSearch(g, x, max_nodes).found();
}

} // namespace metaopt::detail
