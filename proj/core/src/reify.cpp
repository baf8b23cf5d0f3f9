#include <metaopt/consequence.hpp>
#include <metaopt/reify.hpp>

#include <algorithm>

namespace metaopt {

namespace {

SumConstraint materialize(const SumConstraint& s) {
    SumConstraint out = s;
    out.lower = s.lower_bound();
    out.upper = s.upper.value_or(s.total_weight());
    return out;
}

BodyLiteral normalize_literal(const BodyLiteral& b) {
    if (const auto* s = std::get_if<SumConstraint>(&b.element)) {
        return {b.polarity, materialize(*s)};
    }
    return b;
}

Term int_term(Weight v) { return Term::integer(v); }

Term atom_term(const Atom& a) { return Term::fn("atom", {Term::symbol(a.name())}); }

Term literal_term(const Literal& l) { return Term::fn(l.negative() ? "neg" : "pos", {atom_term(l.atom)}); }

class Reifier {
public:
    Reification run(const Program& input) {
        const Program p = normalize(input);
        for (const auto& r : p.rules) {
            rule(r);
        }
        components(p);
        minimize(p.minimize);
        return std::move(out_);
    }

private:
    std::size_t list(const std::vector<WeightedLiteral>& elements, Reification& buffer) {
        auto [it, inserted] = lists_.emplace(elements, lists_.size());
        if (inserted) {
            for (std::size_t q = 0; q < elements.size(); ++q) {
                buffer.push_back(Term::fn("wlist", {int_term(static_cast<Weight>(it->second)),
                                                    int_term(static_cast<Weight>(q)),
                                                    literal_term(elements[q].literal), int_term(elements[q].weight)}));
            }
        }
        return it->second;
    }

    Term sum(const SumConstraint& s, Reification& buffer) {
        const auto label = list(s.elements, buffer);
        return to_term(SumRef{s.lower_bound(), label, *s.upper});
    }

    void rule(const Rule& r) {
        Reification pending;
        Term head;
        if (const auto* s = std::get_if<SumConstraint>(&r.head)) {
            head = sum(*s, pending);
        } else {
            const auto& d = std::get<Disjunction>(r.head);
            head = d.atoms.empty() ? Term::symbol("false") : atom_term(d.atoms.front());
        }
        const auto key = Conjunction::of(r.body);
        std::size_t body = 0;
        if (auto it = conjunctions_.find(key); it != conjunctions_.end()) {
            body = it->second;
        } else {
            std::vector<std::pair<Term, Reification>> members;
            for (const auto& b : key.literals) {
                Reification lists;
                Term element = std::holds_alternative<Atom>(b.element)
                                   ? atom_term(std::get<Atom>(b.element))
                                   : sum(std::get<SumConstraint>(b.element), lists);
                members.emplace_back(Term::fn(b.negative() ? "neg" : "pos", {std::move(element)}), std::move(lists));
            }
            body = conjunctions_.size();
            conjunctions_.emplace(key, body);
            for (auto& [member, lists] : members) {
                pending.push_back(Term::fn("set", {int_term(static_cast<Weight>(body)), std::move(member)}));
                pending.insert(pending.end(), lists.begin(), lists.end());
            }
        }
        out_.push_back(Term::fn("rule", {Term::fn("pos", {std::move(head)}),
                                         Term::fn("pos", {Term::fn("conjunction", {int_term(static_cast<Weight>(body))})})}));
        out_.insert(out_.end(), pending.begin(), pending.end());
    }

    void components(const Program& p) {
        for (const auto& c : sccs(p).components) {
            if (!c.nontrivial()) {
                continue;
            }
            const auto label = int_term(static_cast<Weight>(*c.label));
            for (const auto& a : c.atoms) {
                out_.push_back(Term::fn("scc", {label, atom_term(a)}));
            }
            std::set<std::size_t> bodies;
            std::set<SumRef> sums;
            for (const auto& e : c.connecting) {
                if (const auto* b = std::get_if<Conjunction>(&e)) {
                    bodies.insert(conjunctions_.at(*b));
                } else if (const auto* s = std::get_if<SumConstraint>(&e)) {
                    sums.insert(SumRef{s->lower_bound(), lists_.at(s->elements), *s->upper});
                }
            }
            for (auto b : bodies) {
                out_.push_back(Term::fn("scc", {label, to_term(ElementRef{ConjRef{b}})}));
            }
            for (const auto& s : sums) {
                out_.push_back(Term::fn("scc", {label, to_term(s)}));
            }
        }
    }

    void minimize(const MinimizeStatement& m) {
        std::vector<Level> order;
        std::map<Level, std::vector<WeightedLiteral>> groups;
        for (const auto& e : m.entries) {
            if (!groups.contains(e.level)) {
                order.push_back(e.level);
            }
            groups[e.level].push_back({e.literal, e.weight});
        }
        for (Level level : order) {
            Reification pending;
            const auto label = list(groups.at(level), pending);
            out_.push_back(Term::fn("minimize", {int_term(level), int_term(static_cast<Weight>(label))}));
            out_.insert(out_.end(), pending.begin(), pending.end());
        }
    }

    Reification out_;
    std::map<std::vector<WeightedLiteral>, std::size_t> lists_;
    std::map<Conjunction, std::size_t> conjunctions_;
};

[[noreturn]] void bad(const Term& fact, const std::string& why) {
    throw ReifyError("malformed fact " + to_string(fact) + ": " + why);
}

Weight int_of(const Term& fact, const Term& t) {
    if (t.kind != Term::Kind::integer) {
        bad(fact, "expected an integer, found " + to_string(t));
    }
    return t.value;
}

std::size_t label_of(const Term& fact, const Term& t) {
    const Weight v = int_of(fact, t);
    if (v < 0) {
        bad(fact, "negative label");
    }
    return static_cast<std::size_t>(v);
}

Atom atom_of(const Term& fact, const Term& t) {
    if (!t.is("atom", 1) || t.args[0].kind != Term::Kind::symbol || !Atom::valid_name(t.args[0].name)) {
        bad(fact, "expected atom(name), found " + to_string(t));
    }
    return Atom(t.args[0].name);
}

SumRef sum_of(const Term& fact, const Term& t) {
    if (!t.is("sum", 3)) {
        bad(fact, "expected sum(L,S,U), found " + to_string(t));
    }
    return {int_of(fact, t.args[0]), label_of(fact, t.args[1]), int_of(fact, t.args[2])};
}

Polarity polarity_of(const Term& fact, const Term& t) {
    if (t.is("pos", 1)) {
        return Polarity::positive;
    }
    if (t.is("neg", 1)) {
        return Polarity::negative;
    }
    bad(fact, "expected pos(...) or neg(...), found " + to_string(t));
}

} // namespace

Program normalize(const Program& p) {
    Program out;
    for (const auto& r : p.rules) {
        Rule n{Disjunction{}, {}};
        if (const auto* d = std::get_if<Disjunction>(&r.head)) {
            const auto atoms_of = positive_part(*d);
            n.head = Disjunction{{atoms_of.begin(), atoms_of.end()}};
        } else {
            n.head = materialize(std::get<SumConstraint>(r.head));
        }
        for (const auto& b : r.body) {
            n.body.push_back(normalize_literal(b));
        }
        n.body = Conjunction::of(n.body).literals;
        out.rules.push_back(std::move(n));
    }
    std::vector<Level> order;
    for (const auto& e : p.minimize.entries) {
        if (std::find(order.begin(), order.end(), e.level) == order.end()) {
            order.push_back(e.level);
        }
    }
    for (Level level : order) {
        for (const auto& e : p.minimize.entries) {
            if (e.level == level) {
                out.minimize.entries.push_back(e);
            }
        }
    }
    return out;
}

Reification reify(const Program& p) {
    for (const auto& r : p.rules) {
        if (r.is_proper_disjunctive()) {
            throw ContractViolation("cannot reify a rule with a proper disjunction in its head");
        }
    }
    return Reifier().run(p);
}

Term to_term(const SumRef& s) {
    return Term::fn("sum", {int_term(s.lower), int_term(static_cast<Weight>(s.list)), int_term(s.upper)});
}

Term to_term(const ElementRef& e) {
    if (const auto* a = std::get_if<Atom>(&e)) {
        return atom_term(*a);
    }
    if (const auto* c = std::get_if<ConjRef>(&e)) {
        return Term::fn("conjunction", {int_term(static_cast<Weight>(c->label))});
    }
    return to_term(std::get<SumRef>(e));
}

const std::vector<WeightedLiteral>& ReifiedProgram::list(std::size_t label) const {
    static const std::vector<WeightedLiteral> empty;
    auto it = lists.find(label);
    return it == lists.end() ? empty : it->second;
}

const std::vector<SetMember>& ReifiedProgram::set(std::size_t label) const {
    static const std::vector<SetMember> empty;
    auto it = sets.find(label);
    return it == sets.end() ? empty : it->second;
}

SumConstraint ReifiedProgram::sum(const SumRef& s) const {
    SumConstraint out;
    out.lower = s.lower;
    out.elements = list(s.list);
    out.upper = s.upper;
    return out;
}

std::vector<BodyLiteral> ReifiedProgram::body(std::size_t label) const {
    std::vector<BodyLiteral> out;
    for (const auto& m : set(label)) {
        if (const auto* a = std::get_if<Atom>(&m.element)) {
            out.push_back({m.polarity, *a});
        } else {
            out.push_back({m.polarity, sum(std::get<SumRef>(m.element))});
        }
    }
    return out;
}

std::set<std::size_t> ReifiedProgram::conjunctions() const {
    std::set<std::size_t> out;
    for (const auto& r : rules) {
        out.insert(r.body);
    }
    return out;
}

std::set<SumRef> ReifiedProgram::sums() const {
    std::set<SumRef> out;
    for (const auto& r : rules) {
        if (const auto* s = std::get_if<SumRef>(&r.head)) {
            out.insert(*s);
        }
        for (const auto& m : set(r.body)) {
            if (const auto* s = std::get_if<SumRef>(&m.element)) {
                out.insert(*s);
            }
        }
    }
    return out;
}

std::set<Atom> ReifiedProgram::atoms() const { return metaopt::atoms(program()); }

Program ReifiedProgram::program() const {
    Program p;
    for (const auto& r : rules) {
        Rule out{Disjunction{}, body(r.body)};
        if (const auto* a = std::get_if<Atom>(&r.head)) {
            out.head = Disjunction{{*a}};
        } else if (const auto* s = std::get_if<SumRef>(&r.head)) {
            out.head = sum(*s);
        }
        p.rules.push_back(std::move(out));
    }
    for (const auto& [level, label] : minimize) {
        for (const auto& wl : list(label)) {
            p.minimize.entries.push_back({wl.literal, wl.weight, level});
        }
    }
    return p;
}

ReifiedProgram analyze(const Reification& facts) {
    ReifiedProgram out;
    std::map<std::size_t, std::map<std::size_t, WeightedLiteral>> indexed;
    std::set<std::size_t> used_lists;
    std::map<std::size_t, std::set<SetMember>> seen_members;

    for (const auto& f : facts) {
        if (f.is("rule", 2)) {
            if (!f.args[0].is("pos", 1) || !f.args[1].is("pos", 1) || !f.args[1].args[0].is("conjunction", 1)) {
                bad(f, "expected rule(pos(H),pos(conjunction(S)))");
            }
            const Term& h = f.args[0].args[0];
            ReifiedRule r;
            if (h.is("false", 0)) {
                r.head = FalseHead{};
            } else if (h.is("atom", 1)) {
                r.head = atom_of(f, h);
            } else {
                const auto s = sum_of(f, h);
                used_lists.insert(s.list);
                r.head = s;
            }
            r.body = label_of(f, f.args[1].args[0].args[0]);
            out.rules.push_back(r);
        } else if (f.is("set", 2)) {
            const auto label = label_of(f, f.args[0]);
            const auto pol = polarity_of(f, f.args[1]);
            const Term& e = f.args[1].args[0];
            auto element = [&]() -> MemberRef {
                if (e.is("atom", 1)) {
                    return atom_of(f, e);
                }
                const auto s = sum_of(f, e);
                used_lists.insert(s.list);
                return s;
            };
            const SetMember m{pol, element()};
            if (seen_members[label].insert(m).second) {
                out.sets[label].push_back(m);
            }
        } else if (f.is("wlist", 4)) {
            const auto label = label_of(f, f.args[0]);
            const auto q = label_of(f, f.args[1]);
            const auto pol = polarity_of(f, f.args[2]);
            Atom a = atom_of(f, f.args[2].args[0]);
            WeightedLiteral wl{{pol, std::move(a)}, int_of(f, f.args[3])};
            if (!indexed[label].emplace(q, wl).second) {
                throw ReifyError("duplicate index " + std::to_string(q) + " in weighted list " + std::to_string(label));
            }
        } else if (f.is("scc", 2)) {
            const auto label = label_of(f, f.args[0]);
            const Term& e = f.args[1];
            if (e.is("atom", 1)) {
                out.components[label].insert(atom_of(f, e));
            } else if (e.is("conjunction", 1)) {
                out.components[label].insert(ConjRef{label_of(f, e.args[0])});
            } else {
                const auto s = sum_of(f, e);
                used_lists.insert(s.list);
                out.components[label].insert(s);
            }
        } else if (f.is("minimize", 2)) {
            const auto label = label_of(f, f.args[1]);
            used_lists.insert(label);
            out.minimize.emplace_back(int_of(f, f.args[0]), label);
        } else {
            throw ReifyError("unknown fact " + to_string(f));
        }
    }

    for (auto& [label, entries] : indexed) {
        std::size_t expected = 0;
        for (auto& [q, wl] : entries) {
            if (q != expected) {
                throw ReifyError("indexes of weighted list " + std::to_string(label) + " are not consecutive from 0");
            }
            ++expected;
            out.lists[label].push_back(std::move(wl));
        }
        if (!used_lists.contains(label)) {
            throw ReifyError("dangling label: weighted list " + std::to_string(label) + " is never used");
        }
    }
    const auto bodies = out.conjunctions();
    for (const auto& [label, members] : out.sets) {
        if (!bodies.contains(label)) {
            throw ReifyError("dangling label: conjunction " + std::to_string(label) + " is not a rule body");
        }
    }

    std::set<std::set<Element>> claimed;
    for (const auto& [label, elements] : out.components) {
        std::set<Element> members;
        for (const auto& e : elements) {
            if (const auto* a = std::get_if<Atom>(&e)) {
                members.insert(*a);
            } else if (const auto* c = std::get_if<ConjRef>(&e)) {
                if (!bodies.contains(c->label)) {
                    throw ReifyError("dangling label: scc fact refers to conjunction " + std::to_string(c->label));
                }
                members.insert(Conjunction::of(out.body(c->label)));
            } else {
                members.insert(out.sum(std::get<SumRef>(e)));
            }
        }
        claimed.insert(std::move(members));
    }
    std::set<std::set<Element>> actual;
    for (const auto& c : sccs(out.program()).components) {
        if (c.nontrivial()) {
            std::set<Element> members(c.connecting.begin(), c.connecting.end());
            members.insert(c.atoms.begin(), c.atoms.end());
            actual.insert(std::move(members));
        }
    }
    if (claimed != actual) {
        throw ReifyError("scc facts do not match the components of the positive dependency graph");
    }
    return out;
}

Program parse_reified(const Reification& facts) { return analyze(facts).program(); }

} // namespace metaopt
