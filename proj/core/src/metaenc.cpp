#include <metaopt/metaenc.hpp>

#include <metaopt/optimize.hpp>
#include <metaopt/parser.hpp>

#include "ground.hpp"

#include <algorithm>
#include <functional>

namespace metaopt {

namespace {

using detail::Assignment;
using detail::GroundProgram;

std::string mangle(const Term& t) {
    switch (t.kind) {
        case Term::Kind::integer:
            return t.value < 0 ? "m" + std::to_string(-t.value) : std::to_string(t.value);
        case Term::Kind::symbol: return t.name;
        case Term::Kind::compound: break;
    }
    std::string out = t.name;
    for (const auto& a : t.args) {
        out += '_';
        out += mangle(a);
    }
    return out;
}

Term num(Weight v) { return Term::integer(v); }
Term num(std::size_t v) { return Term::integer(static_cast<Weight>(v)); }
Term atom_term(const Atom& a) { return Term::fn("atom", {Term::symbol(a.name())}); }
Term conj_term(std::size_t label) { return Term::fn("conjunction", {num(label)}); }
Term lit_term(const Literal& l) {
    return Term::fn(l.negative() ? "neg" : "pos", {atom_term(l.atom)});
}

BodyLiteral pos(Atom a) { return {Polarity::positive, std::move(a)}; }
BodyLiteral neg(Atom a) { return {Polarity::negative, std::move(a)}; }
Rule fact(Atom a) { return {Disjunction{{std::move(a)}}, {}}; }
Rule rule(Atom h, std::vector<BodyLiteral> body) { return {Disjunction{{std::move(h)}}, std::move(body)}; }

class Builder {
public:
    Builder(const ReifiedProgram& rp, const CriteriaSet& crit, const MetaOptions& options)
        : rp_(rp), options_(options) {
        const Program p = rp.program();
        crit_ = options.default_card ? with_default_card(crit, p.minimize) : crit;
        minimize_ = p.minimize;
        mp_.object_atoms = rp.atoms();
        for (const auto& r : rp.rules) {
            if (std::holds_alternative<FalseHead>(r.head)) {
                has_constraints_ = true;
            }
        }
        // Body sums get a hold atom and true/fail atoms; head sums only need fail.
        for (const auto& label : rp.conjunctions()) {
            for (const auto& m : rp.set(label)) {
                if (const auto* s = std::get_if<SumRef>(&m.element)) {
                    body_sums_.insert(*s);
                }
            }
        }
        for (const auto& r : rp.rules) {
            if (const auto* s = std::get_if<SumRef>(&r.head)) {
                head_sums_.insert(*s);
            }
        }
    }

    MetaProgram build() {
        mp_.terms.emplace(mp_.bot, Term::symbol("bot"));
        for (const auto& a : mp_.object_atoms) {
            mp_.hold.emplace(a, hold(atom_term(a)));
            mp_.true_atom.emplace(a, truth(atom_term(a)));
            mp_.fail_atom.emplace(a, failed(atom_term(a)));
        }
        candidate();
        counterexample();
        if (options_.optimization) {
            comparison();
            emit({Disjunction{}, {neg(mp_.bot)}});
        }
        return std::move(mp_);
    }

private:
    Atom meta(const Term& t) {
        Atom a(mangle(t));
        auto [it, fresh] = mp_.terms.emplace(a, t);
        if (!fresh && it->second != t) {
            throw ContractViolation("meta atom name " + a.name() + " stands for both " + to_string(it->second) +
                                    " and " + to_string(t));
        }
        return a;
    }
    Atom hold(const Term& e) { return meta(Term::fn("hold", {e})); }
    Atom truth(const Term& e) { return meta(Term::fn("true", {e})); }
    Atom failed(const Term& e) { return meta(Term::fn("fail", {e})); }
    Atom wait(std::size_t c, const Term& e, std::size_t d) { return meta(Term::fn("wait", {num(c), e, num(d)})); }

    void emit(Rule r) { mp_.program.rules.push_back(std::move(r)); }

    // Candidate side: X |= l and X |/= l over hold atoms.
    BodyLiteral x_holds(const Literal& l) {
        return l.negative() ? neg(mp_.hold.at(l.atom)) : pos(mp_.hold.at(l.atom));
    }
    BodyLiteral x_fails(const Literal& l) {
        return l.negative() ? pos(mp_.hold.at(l.atom)) : neg(mp_.hold.at(l.atom));
    }
    // Counterexample side: Y |= l and Y |/= l.
    Atom y_holds(const Literal& l) {
        return l.negative() ? mp_.fail_atom.at(l.atom) : mp_.true_atom.at(l.atom);
    }
    Atom y_fails(const Literal& l) {
        return l.negative() ? mp_.true_atom.at(l.atom) : mp_.fail_atom.at(l.atom);
    }

    SumConstraint weighted(Weight lower, const std::vector<std::pair<Literal, Weight>>& elems) {
        SumConstraint s;
        s.lower = lower;
        for (const auto& [l, w] : elems) {
            s.elements.push_back({l, w});
        }
        return s;
    }

    std::vector<std::pair<Literal, Weight>> hold_list(std::size_t list) {
        std::vector<std::pair<Literal, Weight>> out;
        for (const auto& wl : rp_.list(list)) {
            out.emplace_back(Literal{wl.literal.polarity, mp_.hold.at(wl.literal.atom)}, wl.weight);
        }
        return out;
    }
    std::vector<std::pair<Literal, Weight>> y_list(std::size_t list, bool holding) {
        std::vector<std::pair<Literal, Weight>> out;
        for (const auto& wl : rp_.list(list)) {
            out.emplace_back(Literal::pos(holding ? y_holds(wl.literal) : y_fails(wl.literal)), wl.weight);
        }
        return out;
    }

    Weight total(std::size_t list) const {
        Weight t = 0;
        for (const auto& wl : rp_.list(list)) {
            t += wl.weight;
        }
        return t;
    }

    void candidate() {
        for (const auto& s : body_sums_) {
            SumConstraint body = weighted(s.lower, hold_list(s.list));
            body.upper = s.upper;
            emit(rule(hold(to_term(s)), {{Polarity::positive, std::move(body)}}));
        }
        for (const auto& label : rp_.conjunctions()) {
            std::vector<BodyLiteral> body;
            for (const auto& m : rp_.set(label)) {
                const Atom a = std::holds_alternative<Atom>(m.element)
                                   ? mp_.hold.at(std::get<Atom>(m.element))
                                   : hold(to_term(std::get<SumRef>(m.element)));
                body.push_back({m.polarity, a});
            }
            emit(rule(hold(conj_term(label)), std::move(body)));
        }
        mp_.element_rules = mp_.program.rules.size();
        for (const auto& r : rp_.rules) {
            const Atom b = hold(conj_term(r.body));
            if (const auto* a = std::get_if<Atom>(&r.head)) {
                emit(rule(mp_.hold.at(*a), {pos(b)}));
            } else if (const auto* s = std::get_if<SumRef>(&r.head)) {
                SumConstraint head = weighted(s->lower, hold_list(s->list));
                head.upper = s->upper;
                emit({std::move(head), {pos(b)}});
            } else {
                emit({Disjunction{}, {pos(b)}});
            }
        }
        mp_.candidate_rules = mp_.program.rules.size();
    }

    void counterexample() {
        for (const auto& a : mp_.object_atoms) {
            emit({Disjunction{{mp_.true_atom.at(a), mp_.fail_atom.at(a)}}, {}});
        }
        if (has_constraints_) {
            emit(fact(failed(Term::symbol("false"))));
        }
        std::set<SumRef> all = body_sums_;
        all.insert(head_sums_.begin(), head_sums_.end());
        for (const auto& s : all) {
            const Term t = to_term(s);
            const Weight tw = total(s.list);
            if (body_sums_.contains(s)) {
                emit(rule(truth(t), {{Polarity::positive, weighted(s.lower, y_list(s.list, true))},
                                     {Polarity::positive, weighted(tw - s.upper, y_list(s.list, false))}}));
            }
            emit(rule(failed(t), {{Polarity::positive, weighted(tw - s.lower + 1, y_list(s.list, false))}}));
            emit(rule(failed(t), {{Polarity::positive, weighted(s.upper + 1, y_list(s.list, true))}}));
        }
        for (const auto& label : rp_.conjunctions()) {
            const Term t = conj_term(label);
            std::vector<BodyLiteral> body;
            std::vector<Atom> falsifiers;
            for (const auto& m : rp_.set(label)) {
                Atom yes = std::holds_alternative<Atom>(m.element) ? mp_.true_atom.at(std::get<Atom>(m.element))
                                                                   : truth(to_term(std::get<SumRef>(m.element)));
                Atom no = std::holds_alternative<Atom>(m.element) ? mp_.fail_atom.at(std::get<Atom>(m.element))
                                                                  : failed(to_term(std::get<SumRef>(m.element)));
                if (m.polarity == Polarity::negative) {
                    std::swap(yes, no);
                }
                body.push_back(pos(yes));
                falsifiers.push_back(no);
            }
            emit(rule(truth(t), std::move(body)));
            for (auto& f : falsifiers) {
                emit(rule(failed(t), {pos(f)}));
            }
        }
        // Rules violated by the counterexample.
        for (const auto& r : rp_.rules) {
            const Atom b = truth(conj_term(r.body));
            if (const auto* a = std::get_if<Atom>(&r.head)) {
                emit(rule(mp_.bot, {pos(b), pos(mp_.fail_atom.at(*a))}));
            } else if (const auto* s = std::get_if<SumRef>(&r.head)) {
                emit(rule(mp_.bot, {pos(b), pos(failed(to_term(*s)))}));
            } else {
                emit(rule(mp_.bot, {pos(b), pos(failed(Term::symbol("false")))}));
            }
        }
        // Unsupported true atoms.
        const auto support = supporting_bodies();
        for (const auto& a : mp_.object_atoms) {
            std::vector<BodyLiteral> body{pos(mp_.true_atom.at(a))};
            if (auto it = support.find(a); it != support.end()) {
                for (auto label : it->second) {
                    body.push_back(pos(failed(conj_term(label))));
                }
            }
            emit(rule(mp_.bot, std::move(body)));
        }
        for (const auto& [c, elements] : rp_.components) {
            unfounded(c, elements, support);
        }
        for (const auto& a : mp_.object_atoms) {
            emit(rule(mp_.true_atom.at(a), {pos(mp_.bot)}));
            emit(rule(mp_.fail_atom.at(a), {pos(mp_.bot)}));
        }
        mp_.counterexample_rules = mp_.program.rules.size();
    }

    std::map<Atom, std::set<std::size_t>> supporting_bodies() const {
        std::map<Atom, std::set<std::size_t>> out;
        for (const auto& r : rp_.rules) {
            if (const auto* a = std::get_if<Atom>(&r.head)) {
                out[*a].insert(r.body);
            } else if (const auto* s = std::get_if<SumRef>(&r.head)) {
                for (const auto& wl : rp_.list(s->list)) {
                    if (!wl.literal.negative()) {
                        out[wl.literal.atom].insert(r.body);
                    }
                }
            }
        }
        return out;
    }

    // Wait levels of component c: an atom waits at step d if it is false or all its
    // supporting bodies from outside c are false and every internal one waits at d-1.
    void unfounded(std::size_t c, const std::set<ElementRef>& elements,
                   const std::map<Atom, std::set<std::size_t>>& support) {
        std::set<Atom> in;
        std::set<std::size_t> conjs;
        std::set<SumRef> sums;
        for (const auto& e : elements) {
            if (const auto* a = std::get_if<Atom>(&e)) {
                in.insert(*a);
            } else if (const auto* k = std::get_if<ConjRef>(&e)) {
                conjs.insert(k->label);
            } else {
                sums.insert(std::get<SumRef>(e));
            }
        }
        const std::size_t z = in.size();
        const Term sccw_fn = num(c);
        for (const auto& a : in) {
            emit(fact(wait(c, atom_term(a), 0)));
            const Atom sccw = meta(Term::fn("sccw", {sccw_fn, atom_term(a)}));
            std::vector<BodyLiteral> external;
            std::vector<std::size_t> internal;
            if (auto it = support.find(a); it != support.end()) {
                for (auto label : it->second) {
                    if (conjs.contains(label)) {
                        internal.push_back(label);
                    } else {
                        external.push_back(pos(failed(conj_term(label))));
                    }
                }
            }
            emit(rule(sccw, std::move(external)));
            for (std::size_t d = 1; d <= z; ++d) {
                const Atom w = wait(c, atom_term(a), d);
                emit(rule(w, {pos(mp_.fail_atom.at(a))}));
                std::vector<BodyLiteral> body{pos(sccw)};
                for (auto label : internal) {
                    body.push_back(pos(wait(c, conj_term(label), d - 1)));
                }
                emit(rule(w, std::move(body)));
            }
            emit(rule(mp_.bot, {pos(mp_.true_atom.at(a)), pos(wait(c, atom_term(a), z))}));
        }
        for (std::size_t d = 0; d < z; ++d) {
            for (const auto& s : sums) {
                const Term t = to_term(s);
                const Atom w = wait(c, t, d);
                emit(rule(w, {pos(failed(t))}));
                std::vector<std::pair<Literal, Weight>> blocked;
                for (const auto& wl : rp_.list(s.list)) {
                    const Atom& a = wl.literal.atom;
                    Atom b = wl.literal.negative() ? mp_.true_atom.at(a)
                             : in.contains(a)      ? wait(c, atom_term(a), d)
                                                   : mp_.fail_atom.at(a);
                    blocked.emplace_back(Literal::pos(std::move(b)), wl.weight);
                }
                emit(rule(w, {{Polarity::positive, weighted(total(s.list) - s.lower + 1, blocked)}}));
            }
            for (auto label : conjs) {
                const Term t = conj_term(label);
                const Atom w = wait(c, t, d);
                emit(rule(w, {pos(failed(t))}));
                for (const auto& m : rp_.set(label)) {
                    if (m.polarity == Polarity::negative) {
                        continue;
                    }
                    if (const auto* a = std::get_if<Atom>(&m.element); a && in.contains(*a)) {
                        emit(rule(w, {pos(wait(c, atom_term(*a), d))}));
                    } else if (const auto* s = std::get_if<SumRef>(&m.element); s && sums.contains(*s)) {
                        emit(rule(w, {pos(wait(c, to_term(*s), d))}));
                    }
                }
            }
        }
    }

    void comparison() {
        std::map<Level, std::vector<std::pair<Weight, Criterion>>, std::greater<>> levels;
        for (const auto& [key, c] : crit_.relations) {
            levels[key.level].emplace_back(key.weight, c);
        }
        if (levels.empty()) {
            emit(fact(mp_.bot));
            return;
        }
        std::optional<std::pair<Atom, Atom>> previous; // insp and equal of the level above
        for (const auto& [level, groups] : levels) {
            const Atom insp = meta(Term::fn("insp", {num(level)}));
            const Atom eq = meta(Term::fn("equal", {num(level)}));
            const Atom worse = meta(Term::fn("worse", {num(level)}));
            if (previous) {
                emit(rule(insp, {pos(previous->first), pos(previous->second)}));
            } else {
                emit(fact(insp));
            }
            std::vector<BodyLiteral> all_equal;
            for (const auto& [w, c] : groups) {
                const GroupKey k{level, w};
                const Atom ge = meta(Term::fn("equal", {num(level), num(w), Term::symbol(std::string(to_string(c)))}));
                all_equal.push_back(pos(ge));
                const auto lits = group_literals(k, minimize_);
                switch (c) {
                    case Criterion::incl: incl(k, lits, ge, worse); break;
                    case Criterion::card: card(k, lits, ge, worse); break;
                    case Criterion::pref: pref(k, lits, ge, worse); break;
                }
            }
            emit(rule(eq, std::move(all_equal)));
            emit(rule(mp_.bot, {pos(insp), pos(worse)}));
            previous.emplace(insp, eq);
        }
        // Equal on every level: the counterexample is as good as the candidate.
        emit(rule(mp_.bot, {pos(previous->first), pos(previous->second)}));
    }

    void incl(GroupKey k, const std::vector<Literal>& lits, const Atom& eq, const Atom& worse) {
        const std::set<Literal> distinct(lits.begin(), lits.end());
        std::vector<BodyLiteral> body;
        for (const auto& l : distinct) {
            const Atom nd = meta(Term::fn("ndiff", {num(k.level), num(k.weight), lit_term(l)}));
            emit(rule(nd, {x_fails(l)}));
            emit(rule(nd, {pos(y_holds(l))}));
            body.push_back(pos(nd));
            emit(rule(worse, {pos(y_holds(l)), x_fails(l)}));
        }
        emit(rule(eq, std::move(body)));
    }

    // cnt(q,i): i of the first q occurrences hold under X. cdown(q,i): starting from the
    // X count, some subset of the Y-true occurrences from q on has been subtracted, with
    // everything below zero collapsed into -1.
    void card(GroupKey k, const std::vector<Literal>& lits, const Atom& eq, const Atom& worse) {
        auto cnt = [&](std::size_t q, std::size_t i) {
            return meta(Term::fn("cnt", {num(k.level), num(k.weight), num(q), num(i)}));
        };
        auto cdown = [&](std::size_t q, Weight i) {
            return meta(Term::fn("cdown", {num(k.level), num(k.weight), num(q), num(i)}));
        };
        const std::size_t n = lits.size();
        emit(fact(cnt(0, 0)));
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t i = 0; i <= q; ++i) {
                emit(rule(cnt(q + 1, i), {pos(cnt(q, i)), x_fails(lits[q])}));
                emit(rule(cnt(q + 1, i + 1), {pos(cnt(q, i)), x_holds(lits[q])}));
            }
        }
        for (std::size_t i = 0; i <= n; ++i) {
            emit(rule(cdown(n, static_cast<Weight>(i)), {pos(cnt(n, i))}));
        }
        for (std::size_t q = n; q-- > 0;) {
            for (Weight i = -1; i <= static_cast<Weight>(n); ++i) {
                emit(rule(cdown(q, i), {pos(cdown(q + 1, i))}));
                emit(rule(cdown(q, std::max<Weight>(i - 1, -1)), {pos(cdown(q + 1, i)), pos(y_holds(lits[q]))}));
            }
        }
        emit(rule(eq, {pos(cdown(0, 0))}));
        emit(rule(worse, {pos(cdown(0, -1))}));
    }

    void pref(GroupKey k, const std::vector<Literal>& lits, const Atom& eq, const Atom& worse) {
        const std::set<Literal> distinct(lits.begin(), lits.end());
        auto lit_atom = [&](const char* name, const Literal& l) { return meta(Term::fn(name, {lit_term(l)})); };
        auto group_atom = [&](const char* name, const Literal& l) {
            return meta(Term::fn(name, {num(k.level), num(k.weight), lit_term(l)}));
        };
        for (const auto& l : distinct) {
            if (!pref_done_.insert(l).second) {
                continue;
            }
            emit(rule(lit_atom("cando", l), {x_holds(l), pos(y_fails(l))}));
            emit(rule(lit_atom("condo", l), {x_fails(l), pos(y_holds(l))}));
            emit(rule(lit_atom("nocon", l), {x_holds(l)}));
            emit(rule(lit_atom("nocon", l), {pos(y_fails(l))}));
            emit(rule(lit_atom("nocan", l), {x_fails(l)}));
            emit(rule(lit_atom("nocan", l), {pos(y_holds(l))}));
        }
        std::map<Literal, std::vector<Literal>> better;
        for (const auto& [l1, l2] : crit_.prefer) {
            if (distinct.contains(l1) && distinct.contains(l2)) {
                better[l1].push_back(l2);
            }
        }
        auto defeaters = [&](const Literal& l) {
            std::vector<Literal> out;
            for (const auto& d : distinct) {
                if (crit_.prefer.contains({d, l}) && !crit_.prefer.contains({l, d})) {
                    out.push_back(d);
                }
            }
            return out;
        };
        std::vector<BodyLiteral> all_blocked;
        for (const auto& [l1, l2s] : better) {
            const Atom w = group_atom("candow", l1);
            for (const auto& l2 : l2s) {
                emit(rule(w, {pos(lit_atom("cando", l1)), pos(lit_atom("condo", l2))}));
            }
            std::vector<BodyLiteral> body{pos(w)};
            for (const auto& d : defeaters(l1)) {
                body.push_back(pos(lit_atom("nocon", d)));
            }
            emit(rule(eq, std::move(body)));

            // l1 cannot make Y preferable to X.
            const Atom nw = group_atom("noconw", l1);
            emit(rule(nw, {pos(lit_atom("nocon", l1))}));
            std::vector<BodyLiteral> none;
            for (const auto& l2 : l2s) {
                none.push_back(pos(lit_atom("nocan", l2)));
            }
            emit(rule(nw, std::move(none)));
            for (const auto& d : defeaters(l1)) {
                emit(rule(nw, {pos(lit_atom("cando", d))}));
            }
            all_blocked.push_back(pos(nw));
        }
        emit(rule(worse, std::move(all_blocked)));
    }

    const ReifiedProgram& rp_;
    MetaOptions options_;
    CriteriaSet crit_;
    MinimizeStatement minimize_;
    MetaProgram mp_;
    bool has_constraints_ = false;
    std::set<SumRef> body_sums_;
    std::set<SumRef> head_sums_;
    std::set<Literal> pref_done_;
};

std::map<Atom, Atom> invert(const std::map<Atom, Atom>& m) {
    std::map<Atom, Atom> out;
    for (const auto& [k, v] : m) {
        out.emplace(v, k);
    }
    return out;
}

Interpretation project(const Interpretation& z, const std::map<Atom, Atom>& back) {
    Interpretation out;
    for (const auto& a : z) {
        if (auto it = back.find(a); it != back.end()) {
            out.insert(it->second);
        }
    }
    return out;
}

// Least fixpoint of the single-headed rules starting from x. Negation only mentions
// hold atoms, which no rule outside the candidate part derives.
void close(const GroundProgram& g, Assignment& x) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules()) {
            if (r.sum_head || r.head.size() != 1 || x[r.head[0]]) {
                continue;
            }
            if (g.body_holds(r, x)) {
                x[r.head[0]] = 1;
                changed = true;
            }
        }
    }
}

// Enumerates candidates over hold(atom(a)); calls visit with each assignment that is an
// answer set of the candidate part, as an interpretation over the meta atoms.
void for_each_candidate(const MetaProgram& mp, const MetaSolveOptions& options,
                        const std::function<void(const Interpretation&)>& visit) {
    const std::size_t n = mp.object_atoms.size();
    if (n > options.max_guess) {
        throw LimitExceeded("meta program has " + std::to_string(n) + " object atoms, cap is " +
                            std::to_string(options.max_guess));
    }
    Program part;
    part.rules.assign(mp.program.rules.begin(),
                      mp.program.rules.begin() + static_cast<std::ptrdiff_t>(mp.candidate_rules));
    Interpretation holds;
    for (const auto& [a, h] : mp.hold) {
        holds.insert(h);
    }
    const auto g = GroundProgram::compile(part, holds);
    std::vector<detail::AtomId> ids;
    for (const auto& h : holds) {
        ids.push_back(*g.id(h));
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Assignment x(g.size(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            x[ids[i]] = static_cast<char>((mask >> i) & 1U);
        }
        for (std::size_t r = 0; r < mp.element_rules; ++r) {
            const auto& gr = g.rules()[r];
            if (g.body_holds(gr, x)) {
                x[gr.head[0]] = 1;
            }
        }
        if (g.is_answer_set(x)) {
            visit(g.interpretation(x));
        }
    }
}

} // namespace

MetaProgram build_meta_program(const ReifiedProgram& facts, const CriteriaSet& crit, const MetaOptions& options) {
    return Builder(facts, crit, options).build();
}

MetaProgram build_meta_program(const Reification& facts, const CriteriaSet& crit, const MetaOptions& options) {
    return build_meta_program(analyze(facts), crit, options);
}

std::string render_meta(const MetaProgram& mp) {
    std::string out;
    const auto& rules = mp.program.rules;
    auto section = [&](const char* title, std::size_t from, std::size_t to) {
        out += "% ";
        out += title;
        out += '\n';
        for (std::size_t i = from; i < to; ++i) {
            out += render(rules[i]);
            out += '\n';
        }
    };
    section("candidate", 0, mp.candidate_rules);
    section("counterexample", mp.candidate_rules, mp.counterexample_rules);
    if (mp.counterexample_rules < rules.size()) {
        section("comparison", mp.counterexample_rules, rules.size());
    }
    return out;
}

std::vector<Interpretation> solve_meta(const MetaProgram& mp, const MetaSolveOptions& options) {
    const auto g = GroundProgram::compile(mp.program);
    const auto back = invert(mp.hold);
    const auto bot = *g.id(mp.bot);
    std::set<Interpretation> found;
    for_each_candidate(mp, options, [&](const Interpretation& xc) {
        Assignment z = g.assignment(xc);
        z[bot] = 1;
        close(g, z);
        if (g.is_answer_set(z)) {
            found.insert(project(g.interpretation(z), back));
        }
    });
    std::vector<Interpretation> out(found.begin(), found.end());
    if (options.limit && out.size() > *options.limit) {
        out.resize(*options.limit);
    }
    return out;
}

std::vector<MetaPair> enumerate_meta_pairs(const MetaProgram& mp, const MetaSolveOptions& options) {
    const auto g = GroundProgram::compile(mp.program);
    const auto back_hold = invert(mp.hold);
    const auto back_true = invert(mp.true_atom);
    const std::vector<Atom> objects(mp.object_atoms.begin(), mp.object_atoms.end());
    const std::size_t n = objects.size();
    std::set<MetaPair> found;
    for_each_candidate(mp, options, [&](const Interpretation& xc) {
        std::set<Assignment> tried;
        for (std::uint64_t mask = 0; mask <= (std::uint64_t{1} << n); ++mask) {
            Assignment z = g.assignment(xc);
            if (mask == (std::uint64_t{1} << n)) {
                z[*g.id(mp.bot)] = 1;
            } else {
                for (std::size_t i = 0; i < n; ++i) {
                    const Atom& a = ((mask >> i) & 1U) ? mp.true_atom.at(objects[i]) : mp.fail_atom.at(objects[i]);
                    z[*g.id(a)] = 1;
                }
            }
            close(g, z);
            if (!tried.insert(z).second || !g.is_answer_set(z)) {
                continue;
            }
            MetaPair pair{project(g.interpretation(z), back_hold), std::nullopt};
            if (!z[*g.id(mp.bot)]) {
                pair.counterexample = project(g.interpretation(z), back_true);
            }
            found.insert(std::move(pair));
        }
    });
    return {found.begin(), found.end()};
}

CrosscheckReport crosscheck(const Program& p, const CriteriaSet& crit, const CrosscheckOptions& options) {
    CrosscheckReport out;
    const CriteriaSet effective = options.default_card ? with_default_card(crit, p.minimize) : crit;
    out.native = optimal_answer_sets(p, effective, options.native);
    std::sort(out.native.begin(), out.native.end());
    out.meta = solve_meta(build_meta_program(reify(p), effective), options.meta);
    std::set_difference(out.native.begin(), out.native.end(), out.meta.begin(), out.meta.end(),
                        std::back_inserter(out.only_native));
    std::set_difference(out.meta.begin(), out.meta.end(), out.native.begin(), out.native.end(),
                        std::back_inserter(out.only_meta));
    return out;
}

} // namespace metaopt
