#include <metaopt/core.hpp>
#include <metaopt/error.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

namespace metaopt {

Atom::Atom(std::string name) : name_(std::move(name)) {
    if (!valid_name(name_)) {
        throw ContractViolation("invalid atom name '" + name_ + "'");
    }
}

bool Atom::valid_name(std::string_view name) noexcept {
    if (name.empty() || !(name.front() >= 'a' && name.front() <= 'z')) {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    });
}

Weight SumConstraint::total_weight() const noexcept {
    return std::accumulate(elements.begin(), elements.end(), Weight{0},
                           [](Weight acc, const WeightedLiteral& wl) { return acc + wl.weight; });
}

std::tuple<Weight, std::optional<Weight>, std::vector<WeightedLiteral>> SumConstraint::canonical() const {
    auto sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    return {lower_bound(), upper, std::move(sorted)};
}

std::vector<Atom> Disjunction::canonical() const {
    auto sorted = atoms;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted;
}

bool Rule::is_constraint() const noexcept {
    const auto* d = std::get_if<Disjunction>(&head);
    return d != nullptr && d->atoms.empty();
}

bool Rule::is_proper_disjunctive() const noexcept {
    const auto* d = std::get_if<Disjunction>(&head);
    if (d == nullptr) {
        return false;
    }
    return positive_part(*d).size() > 1;
}

bool Program::is_extended() const noexcept {
    return std::none_of(rules.begin(), rules.end(), [](const Rule& r) { return r.is_proper_disjunctive(); });
}

std::string_view to_string(Criterion c) noexcept {
    switch (c) {
        case Criterion::card: return "card";
        case Criterion::incl: return "incl";
        case Criterion::pref: return "pref";
    }
    return "?";
}

std::optional<Criterion> criterion_from_string(std::string_view s) noexcept {
    if (s == "card") return Criterion::card;
    if (s == "incl") return Criterion::incl;
    if (s == "pref") return Criterion::pref;
    return std::nullopt;
}

void CriteriaSet::add(GroupKey key, Criterion c) {
    auto [it, inserted] = relations.emplace(key, c);
    if (!inserted && it->second != c) {
        throw ContractViolation("conflicting criteria for level " + std::to_string(key.level) + " and weight " +
                                std::to_string(key.weight));
    }
}

namespace {
void collect(const SumConstraint& s, std::set<Atom>& out) {
    for (const auto& wl : s.elements) {
        out.insert(wl.literal.atom);
    }
}
} // namespace

std::set<Atom> atoms(const Rule& r) {
    std::set<Atom> out;
    if (const auto* d = std::get_if<Disjunction>(&r.head)) {
        out.insert(d->atoms.begin(), d->atoms.end());
    } else {
        collect(std::get<SumConstraint>(r.head), out);
    }
    for (const auto& b : r.body) {
        if (const auto* a = std::get_if<Atom>(&b.element)) {
            out.insert(*a);
        } else {
            collect(std::get<SumConstraint>(b.element), out);
        }
    }
    return out;
}

std::set<Atom> atoms(const Program& p) {
    std::set<Atom> out;
    for (const auto& r : p.rules) {
        out.merge(atoms(r));
    }
    for (const auto& e : p.minimize.entries) {
        out.insert(e.literal.atom);
    }
    return out;
}

std::vector<BodyAtomOrSum> positive_part(std::span<const BodyLiteral> body) {
    std::vector<BodyAtomOrSum> out;
    for (const auto& b : body) {
        if (!b.negative() && std::find(out.begin(), out.end(), b.element) == out.end()) {
            out.push_back(b.element);
        }
    }
    return out;
}

std::set<Atom> positive_part(const Disjunction& d) { return {d.atoms.begin(), d.atoms.end()}; }

std::vector<WeightedLiteral> positive_part(const SumConstraint& s) {
    std::vector<WeightedLiteral> out;
    std::copy_if(s.elements.begin(), s.elements.end(), std::back_inserter(out),
                 [](const WeightedLiteral& wl) { return !wl.literal.negative(); });
    return out;
}

std::set<Atom> atom_set(std::span<const WeightedLiteral> elements) {
    std::set<Atom> out;
    for (const auto& wl : elements) {
        out.insert(wl.literal.atom);
    }
    return out;
}

std::set<Atom> head_atoms(const Head& h) {
    if (const auto* d = std::get_if<Disjunction>(&h)) {
        return positive_part(*d);
    }
    return atom_set(positive_part(std::get<SumConstraint>(h)));
}

std::set<Atom> element_atoms(const BodyAtomOrSum& e) {
    if (const auto* a = std::get_if<Atom>(&e)) {
        return {*a};
    }
    return atom_set(positive_part(std::get<SumConstraint>(e)));
}

std::string to_string(const Interpretation& x) {
    std::string out = "{";
    bool first = true;
    for (const auto& a : x) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += a.name();
    }
    out += '}';
    return out;
}

std::string to_string(const Literal& l) { return (l.negative() ? "not " : "") + l.atom.name(); }

} // namespace metaopt
