#include "qcluster/relations.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace qcluster {

SimpleLabel SimpleLabel::p(int k, int ell) {
    if (k == 0) return unit();
    return {Kind::P, k, ell};
}

std::string SimpleLabel::to_string() const {
    switch (kind) {
        case Kind::P:
            return "P_{" + std::to_string(k) + "," + std::to_string(ell) + "}";
        case Kind::Pdet:
            return "P_{0,det}";
        case Kind::Unit:
            return "Unit";
        case Kind::KoszulUnit:
            return "KoszulUnit";
    }
    return "?";
}

SimpleLabel SimpleLabel::parse(const std::string& text) {
    if (text == "P_{0,det}") return det();
    if (text == "Unit") return unit();
    if (text == "KoszulUnit") return koszul();
    static const std::regex re(R"(P_\{(-?\d+),(-?\d+)\})");
    std::smatch m;
    if (std::regex_match(text, m, re)) return p(std::stoi(m[1]), std::stoi(m[2]));
    throw std::invalid_argument("unrecognized label: " + text);
}

std::string RelationInstance::name() const {
    std::string s = family;
    for (const auto& [k, v] : params) s += " " + k + "=" + std::to_string(v);
    return s;
}

std::vector<SimpleLabel> RelationInstance::labels() const {
    std::set<SimpleLabel> seen;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& w : *side)
            for (const auto& f : w.factors) seen.insert(f.label);
    return {seen.begin(), seen.end()};
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::MutN:
            return "mut_n";
        case Suite::Old:
            return "old";
        case Suite::Commute:
            return "commute";
        case Suite::Glue:
            return "glue";
        case Suite::Abelian:
            return "abelian";
    }
    return "?";
}

Suite parse_suite(const std::string& name) {
    for (Suite s : {Suite::MutN, Suite::Old, Suite::Commute, Suite::Glue, Suite::Abelian})
        if (suite_name(s) == name) return s;
    throw std::invalid_argument("unknown suite: " + name);
}

namespace {

Factor fac(SimpleLabel l, int power = 1) { return {l, power}; }

Word word(std::vector<Factor> fs, int shift = 0) { return {std::move(fs), shift}; }

RelationInstance rel(std::string family, std::map<std::string, int> params, std::vector<Word> lhs,
                     std::vector<Word> rhs) {
    return {std::move(family), std::move(params), std::move(lhs), std::move(rhs)};
}

void add_mut_n(std::vector<RelationInstance>& out, int n, int l) {
    const SimpleLabel d = n == 1 ? SimpleLabel::koszul() : SimpleLabel::det();
    auto P = SimpleLabel::p;
    // 0 -> D*P_{n-1,l}{-n} -> P_{n,l}*(D*P_{-1,-l}){n} -> P_{n-1,l+1} -> 0
    out.push_back(rel("top_exchange_1", {{"ell", l}, {"n", n}},
                      {word({fac(P(n, l)), fac(d), fac(P(-1, -l))}, n)},
                      {word({fac(d), fac(P(n - 1, l))}, -n), word({fac(P(n - 1, l + 1))})}));
    // 0 -> P_{n-1,l+1} -> (P_{-1,-l}*D)*P_{n,l}{-n} -> P_{n-1,l}*D{n} -> 0
    out.push_back(rel("top_exchange_2", {{"ell", l}, {"n", n}},
                      {word({fac(P(-1, -l)), fac(d), fac(P(n, l))}, -n)},
                      {word({fac(P(n - 1, l + 1))}), word({fac(P(n - 1, l)), fac(d)}, n)}));
}

void add_old(std::vector<RelationInstance>& out, int n, int l) {
    auto P = SimpleLabel::p;
    for (int k = 1; k <= n - 1; ++k) {
        out.push_back(rel("adjacent_exchange_1", {{"ell", l}, {"k", k}, {"n", n}},
                          {word({fac(P(k, l + 1)), fac(P(k, l - 1))}, -2 * k)},
                          {word({fac(P(k - 1, l)), fac(P(k + 1, l))}, -1), word({fac(P(k, l)), fac(P(k, l))})}));
        out.push_back(rel("adjacent_exchange_2", {{"ell", l}, {"k", k}, {"n", n}},
                          {word({fac(P(k, l - 1)), fac(P(k, l + 1))}, 2 * k)},
                          {word({fac(P(k, l)), fac(P(k, l))}), word({fac(P(k + 1, l)), fac(P(k - 1, l))}, 1)}));
    }
}

RelationInstance commute(std::string family, int l, SimpleLabel a, SimpleLabel b, int shift) {
    return rel(std::move(family), {{"ell", l}}, {word({fac(a), fac(b)})}, {word({fac(b), fac(a)}, shift)});
}

void add_commute(std::vector<RelationInstance>& out, int l) {
    auto P = SimpleLabel::p;
    out.push_back(commute("commute_top", l, P(2, 0), P(1, l), -2 * l));
    out.push_back(commute("commute_bottom", l, P(-2, 0), P(-1, l), 2 * l));
    out.push_back(commute("commute_positive_adjacent", l, P(1, l), P(1, l + 1), -2));
    out.push_back(commute("commute_negative_adjacent", l, P(-1, l), P(-1, l + 1), 2));
    out.push_back(commute("commute_opposite", l, P(1, l), P(-1, -l), 0));
    out.push_back(commute("commute_opposite_shifted", l, P(1, l), P(-1, -l + 1), 0));
}

void add_glue(std::vector<RelationInstance>& out, int l) {
    auto P = SimpleLabel::p;
    const SimpleLabel d = SimpleLabel::det();
    const SimpleLabel u = SimpleLabel::unit();
    out.push_back(rel("strip_exchange_1", {{"ell", l}}, {word({fac(P(1, 1 + l)), fac(P(-1, 1 - l)), fac(d, -1)})},
                      {word({fac(u)}, -1), word({fac(P(1, l)), fac(P(-1, -l))})}));
    out.push_back(rel("strip_exchange_2", {{"ell", l}}, {word({fac(d, -1), fac(P(-1, 1 - l)), fac(P(1, 1 + l))})},
                      {word({fac(P(-1, -l)), fac(P(1, l))}), word({fac(u)}, 1)}));
    out.push_back(rel("strip_exchange_3", {{"ell", l}}, {word({fac(P(1, l)), fac(P(-1, -1 - l)), fac(d)})},
                      {word({fac(P(1, 1 + l)), fac(P(-1, -l))}), word({fac(u)}, 1)}));
    out.push_back(rel("strip_exchange_4", {{"ell", l}}, {word({fac(d), fac(P(-1, -1 - l)), fac(P(1, l))})},
                      {word({fac(u)}, -1), word({fac(P(-1, -l)), fac(P(1, 1 + l))})}));
}

}  // namespace

std::vector<RelationInstance> instantiate(Suite suite, int n, int lo, int hi) {
    std::vector<RelationInstance> out;
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if ((suite == Suite::Commute || suite == Suite::Glue) && n != 2)
        throw std::invalid_argument(suite_name(suite) + " relations are defined for n = 2");
    if (suite == Suite::Abelian) {
        if (n != 1) throw std::invalid_argument("abelian relations are defined for n = 1");
        return out;  // checked directly in coulomb; the shifted unit has no label class
    }
    for (int l = lo; l <= hi; ++l) {
        switch (suite) {
            case Suite::MutN:
                add_mut_n(out, n, l);
                break;
            case Suite::Old:
                add_old(out, n, l);
                break;
            case Suite::Commute:
                add_commute(out, l);
                break;
            case Suite::Glue:
                add_glue(out, l);
                break;
            case Suite::Abelian:
                break;
        }
    }
    return out;
}

bool SimpleClassRegistry::has(const SimpleLabel& l) const {
    return l.kind == SimpleLabel::Kind::Unit || l == frozen_label || classes.count(l);
}

TorusElement SimpleClassRegistry::class_of(const SimpleLabel& l) const {
    if (l.kind == SimpleLabel::Kind::Unit) return TorusElement::one(ambient);
    if (l == frozen_label) return TorusElement::generator(ambient, frozen_index);
    auto it = classes.find(l);
    if (it == classes.end()) throw std::out_of_range("no class registered for " + l.to_string());
    return it->second;
}

namespace {

TorusElement factor_value(const Factor& f, const SimpleClassRegistry& reg) {
    TorusElement x = reg.class_of(f.label);
    if (f.power >= 0) return x.power(static_cast<unsigned>(f.power));
    return x.monomial_inverse().power(static_cast<unsigned>(-f.power));
}

}  // namespace

std::optional<TorusElement> evaluate_word(const Word& w, const SimpleClassRegistry& reg) {
    TorusElement r = TorusElement::one(reg.ambient);
    for (const auto& f : w.factors) {
        if (!reg.has(f.label)) return std::nullopt;
        r = r * factor_value(f, reg);
    }
    return r.shifted(reg.loop_shift2 * w.shift);
}

std::optional<TorusElement> evaluate_side(const std::vector<Word>& side, const SimpleClassRegistry& reg) {
    TorusElement r = TorusElement::zero(reg.ambient);
    for (const auto& w : side) {
        auto x = evaluate_word(w, reg);
        if (!x) return std::nullopt;
        r += *x;
    }
    return r;
}

InstanceResult evaluate(const RelationInstance& inst, const SimpleClassRegistry& reg) {
    InstanceResult r;
    for (const auto& l : inst.labels())
        if (!reg.has(l)) r.missing.push_back(l);
    if (!r.missing.empty()) {
        r.status = "skip";
        return r;
    }
    r.lhs = *evaluate_side(inst.lhs, reg);
    r.rhs = *evaluate_side(inst.rhs, reg);
    r.status = r.lhs == r.rhs ? "pass" : "fail";
    return r;
}

int occurrences(const RelationInstance& inst, const SimpleLabel& unknown) {
    int c = 0;
    for (const auto* side : {&inst.lhs, &inst.rhs})
        for (const auto& w : *side)
            for (const auto& f : w.factors)
                if (f.label == unknown) ++c;
    return c;
}

std::optional<TorusElement> solve_linear(const RelationInstance& inst, const SimpleLabel& unknown,
                                         const SimpleClassRegistry& reg) {
    if (occurrences(inst, unknown) != 1) return std::nullopt;
    for (const auto& l : inst.labels())
        if (!(l == unknown) && !reg.has(l)) return std::nullopt;

    const std::vector<Word>* sides[2] = {&inst.lhs, &inst.rhs};
    for (int s = 0; s < 2; ++s) {
        const auto& side = *sides[s];
        for (std::size_t wi = 0; wi < side.size(); ++wi) {
            const Word& w = side[wi];
            auto pos = std::find_if(w.factors.begin(), w.factors.end(),
                                    [&](const Factor& f) { return f.label == unknown; });
            if (pos == w.factors.end()) continue;
            if (pos->power != 1) return std::nullopt;

            TorusElement target = *evaluate_side(*sides[1 - s], reg);
            for (std::size_t wj = 0; wj < side.size(); ++wj)
                if (wj != wi) target -= *evaluate_word(side[wj], reg);
            target = target.shifted(-reg.loop_shift2 * w.shift);

            TorusElement left = TorusElement::one(reg.ambient);
            TorusElement right = TorusElement::one(reg.ambient);
            for (auto it = w.factors.begin(); it != pos; ++it) left = left * factor_value(*it, reg);
            for (auto it = pos + 1; it != w.factors.end(); ++it) right = right * factor_value(*it, reg);
            try {
                return right.right_divide(left.left_divide(target));
            } catch (const InexactDivision&) {
                return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

}  // namespace qcluster
