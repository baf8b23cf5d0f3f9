#include <metaopt/consequence.hpp>
#include <metaopt/parser.hpp>
#include <metaopt/semantics.hpp>

#include <algorithm>
#include <functional>

namespace metaopt {

Conjunction Conjunction::of(std::span<const BodyLiteral> body) {
    Conjunction c{{body.begin(), body.end()}};
    std::sort(c.literals.begin(), c.literals.end());
    c.literals.erase(std::unique(c.literals.begin(), c.literals.end()), c.literals.end());
    return c;
}

std::string to_string(const Element& e) {
    if (const auto* a = std::get_if<Atom>(&e)) {
        return a->name();
    }
    if (const auto* s = std::get_if<SumConstraint>(&e)) {
        return render(*s);
    }
    std::string out = "{";
    const auto& lits = std::get<Conjunction>(e).literals;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        out += i == 0 ? "" : ", ";
        out += render(lits[i]);
    }
    return out + "}";
}

DependencyGraph dependency_graph(const Program& p) {
    DependencyGraph g;
    g.nodes = atoms(p);
    for (const auto& r : p.rules) {
        const auto heads = head_atoms(r.head);
        for (const auto& b : positive_part(r.body)) {
            for (const auto& target : element_atoms(b)) {
                for (const auto& source : heads) {
                    g.edges.emplace(source, target);
                }
            }
        }
    }
    return g;
}

const Component& SccDecomposition::nontrivial(std::size_t label) const {
    for (const auto& c : components) {
        if (c.label == label) {
            return c;
        }
    }
    throw ContractViolation("no nontrivial component with label " + std::to_string(label));
}

std::size_t SccDecomposition::nontrivial_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [](const Component& c) { return c.nontrivial(); }));
}

namespace {

bool intersects(const std::set<Atom>& a, const std::set<Atom>& b) {
    return std::any_of(a.begin(), a.end(), [&b](const Atom& x) { return b.contains(x); });
}

std::vector<std::set<Atom>> tarjan(const DependencyGraph& g) {
    std::map<Atom, std::vector<Atom>> adj;
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
    }
    std::map<Atom, std::size_t> index;
    std::map<Atom, std::size_t> low;
    std::set<Atom> on_stack;
    std::vector<Atom> stack;
    std::vector<std::set<Atom>> out;
    std::size_t next = 0;

    std::function<void(const Atom&)> visit = [&](const Atom& v) {
        index[v] = low[v] = next++;
        stack.push_back(v);
        on_stack.insert(v);
        for (const auto& w : adj[v]) {
            if (!index.contains(w)) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack.contains(w)) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::set<Atom> comp;
            Atom w = v;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack.erase(w);
                comp.insert(w);
            } while (w != v);
            out.push_back(std::move(comp));
        }
    };
    for (const auto& v : g.nodes) {
        if (!index.contains(v)) {
            visit(v);
        }
    }
    return out;
}

} // namespace

SccDecomposition sccs(const DependencyGraph& g, const Program& p) {
    SccDecomposition d;
    std::size_t next_label = 0;
    for (auto& atoms_of : tarjan(g)) {
        Component c;
        c.atoms = std::move(atoms_of);
        const Atom& first = *c.atoms.begin();
        const bool cyclic = c.atoms.size() > 1 || g.edges.contains({first, first});
        if (cyclic) {
            c.label = next_label++;
            for (const auto& r : p.rules) {
                if (!intersects(head_atoms(r.head), c.atoms)) {
                    continue;
                }
                bool linked = false;
                for (const auto& b : positive_part(r.body)) {
                    if (!intersects(element_atoms(b), c.atoms)) {
                        continue;
                    }
                    linked = true;
                    if (const auto* s = std::get_if<SumConstraint>(&b)) {
                        c.connecting.insert(*s);
                    }
                }
                if (linked) {
                    c.connecting.insert(Conjunction::of(r.body));
                }
            }
        }
        d.components.push_back(std::move(c));
    }
    return d;
}

SccDecomposition sccs(const Program& p) { return sccs(dependency_graph(p), p); }

std::set<Head> tp_step(const Program& positive, const Interpretation& x) {
    std::set<Head> out;
    for (const auto& r : positive.rules) {
        if (body_holds(x, r.body)) {
            out.insert(r.head);
        }
    }
    return out;
}

Interpretation tp_iterate(const Program& positive, const Interpretation& seed, std::size_t steps) {
    Interpretation cur = seed;
    for (std::size_t i = 0; i < steps; ++i) {
        Interpretation next = cur;
        for (const auto& h : tp_step(positive, cur)) {
            const auto heads = head_atoms(h);
            if (heads.size() > 1) {
                throw ContractViolation("immediate consequence operator applied to a disjunctive head");
            }
            next.insert(heads.begin(), heads.end());
        }
        if (next == cur) {
            break;
        }
        cur = std::move(next);
    }
    return cur;
}

bool scc_fixpoint_check(const Program& p, const Interpretation& x) {
    if (!is_model(x, p)) {
        return false;
    }
    const auto red = reduct(p, x);
    Interpretation rebuilt;
    for (const auto& c : sccs(p).components) {
        Interpretation seed;
        std::set_difference(x.begin(), x.end(), c.atoms.begin(), c.atoms.end(), std::inserter(seed, seed.end()));
        for (const auto& a : tp_iterate(red, seed, c.atoms.size())) {
            if (c.atoms.contains(a)) {
                rebuilt.insert(a);
            }
        }
    }
    return rebuilt == x;
}

bool is_supported_model(const Program& p, const Interpretation& x) {
    if (!is_model(x, p)) {
        return false;
    }
    return std::all_of(x.begin(), x.end(), [&](const Atom& a) {
        return std::any_of(p.rules.begin(), p.rules.end(), [&](const Rule& r) {
            return head_atoms(r.head).contains(a) && body_holds(x, r.body);
        });
    });
}

bool WaitTable::waits(const Element& e, std::size_t step) const {
    auto it = wait.find(e);
    return it != wait.end() && step < it->second.size() && it->second[step];
}

WaitTable wait_levels(const Program& p, const Interpretation& x, std::size_t label) {
    return wait_levels(p, sccs(p), x, label);
}

WaitTable wait_levels(const Program& p, const SccDecomposition& d, const Interpretation& x, std::size_t label) {
    const Component& c = d.nontrivial(label);
    WaitTable t;
    t.label = label;
    t.z = c.atoms.size();
    const std::size_t z = t.z;

    struct AtomInfo {
        bool external = false; // some body outside the component holds
        std::vector<Conjunction> internal;
    };
    std::map<Atom, AtomInfo> info;
    for (const auto& a : c.atoms) {
        info[a];
    }
    for (const auto& r : p.rules) {
        const auto body = Conjunction::of(r.body);
        const bool internal = c.connecting.contains(body);
        for (const auto& a : head_atoms(r.head)) {
            auto it = info.find(a);
            if (it == info.end()) {
                continue;
            }
            if (internal) {
                it->second.internal.push_back(body);
            } else if (body_holds(x, r.body)) {
                it->second.external = true;
            }
        }
    }

    for (const auto& a : c.atoms) {
        t.wait[a].assign(z + 1, false);
        t.wait[a][0] = true;
    }
    std::vector<Conjunction> conjunctions;
    std::vector<SumConstraint> sums;
    for (const auto& e : c.connecting) {
        t.wait[e].assign(z, false);
        if (const auto* b = std::get_if<Conjunction>(&e)) {
            conjunctions.push_back(*b);
        } else {
            sums.push_back(std::get<SumConstraint>(e));
        }
    }

    for (std::size_t step = 0; step <= z; ++step) {
        if (step > 0) {
            for (const auto& a : c.atoms) {
                const auto& ai = info.at(a);
                const bool all_wait = std::all_of(ai.internal.begin(), ai.internal.end(), [&](const Conjunction& b) {
                    return t.wait.at(b)[step - 1];
                });
                t.wait[a][step] = !x.contains(a) || (!ai.external && all_wait);
            }
        }
        if (step == z) {
            break;
        }
        for (const auto& s : sums) {
            bool waits = !satisfies(x, s);
            if (!waits) {
                Weight blocked = 0;
                for (const auto& wl : s.elements) {
                    const Atom& a = wl.literal.atom;
                    if (wl.literal.negative()) {
                        blocked += x.contains(a) ? wl.weight : 0;
                    } else if (c.atoms.contains(a)) {
                        blocked += t.wait.at(a)[step] ? wl.weight : 0;
                    } else {
                        blocked += x.contains(a) ? 0 : wl.weight;
                    }
                }
                waits = blocked > s.total_weight() - s.lower_bound();
            }
            t.wait[s][step] = waits;
        }
        for (const auto& b : conjunctions) {
            bool waits = !body_holds(x, b.literals);
            for (const auto& lit : b.literals) {
                if (waits || lit.negative()) {
                    continue;
                }
                if (const auto* a = std::get_if<Atom>(&lit.element)) {
                    waits = c.atoms.contains(*a) && t.wait.at(*a)[step];
                } else {
                    const auto& s = std::get<SumConstraint>(lit.element);
                    waits = c.connecting.contains(s) && t.wait.at(s)[step];
                }
            }
            t.wait[b][step] = waits;
        }
    }
    for (const auto& a : c.atoms) {
        if (x.contains(a) && t.wait.at(a)[z]) {
            t.waiting_true.insert(a);
        }
    }
    return t;
}

} // namespace metaopt
