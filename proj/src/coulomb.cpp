#include "qcluster/coulomb.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace qcluster {

QuantumSeed initial_seed_gl2() {
    SkewForm l({{0, -2, -2, 2}, {2, 0, 0, 2}, {2, 0, 0, 4}, {-2, -2, -4, 0}});
    ExchangeMatrix b({{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}, {0, -1, 1}});
    return QuantumSeed::initial(std::move(l), std::move(b), {"P_{1,1}", "P_{1,0}", "P_{2,0}", "P_{0,det}"});
}

QuantumSeed initial_seed_gl1(int lambda12) {
    SkewForm l({{0, lambda12}, {-lambda12, 0}});
    ExchangeMatrix b(std::vector<std::vector<int>>{{0}, {1}});
    return QuantumSeed::initial(std::move(l), std::move(b), {"P_{1,0}", "KoszulUnit"});
}

SimpleClassRegistry initial_registry(const QuantumSeed& seed, int loop_shift2) {
    SimpleClassRegistry reg;
    reg.ambient = seed.ambient();
    reg.frozen_index = seed.mutable_count();
    reg.frozen_label = SimpleLabel::parse(seed.labels.at(reg.frozen_index));
    reg.loop_shift2 = loop_shift2;
    for (int i = 0; i < seed.mutable_count(); ++i) {
        SimpleLabel l = SimpleLabel::parse(seed.labels[i]);
        reg.classes[l] = seed.variables[i];
        reg.normalizations[l] = {0, 0, "initial seed"};
    }
    return reg;
}

std::vector<RelationInstance> initial_commutation_relations(const QuantumSeed& seed) {
    std::set<SimpleLabel> own;
    for (const auto& s : seed.labels) own.insert(SimpleLabel::parse(s));
    own.insert(SimpleLabel::unit());
    std::vector<RelationInstance> out;
    for (auto& inst : instantiate(Suite::Commute, 2, -3, 3)) {
        auto ls = inst.labels();
        if (std::all_of(ls.begin(), ls.end(), [&](const SimpleLabel& l) { return own.count(l) > 0; }))
            out.push_back(std::move(inst));
    }
    return out;
}

int fit_loop_shift(const QuantumSeed& seed, const std::vector<RelationInstance>& relations) {
    std::vector<int> survivors;
    for (int c : {-4, -2, -1, 1, 2, 4}) {
        SimpleClassRegistry reg = initial_registry(seed, c);
        bool ok = true;
        for (const auto& inst : relations) {
            auto r = evaluate(inst, reg);
            if (r.status == "fail") {
                ok = false;
                break;
            }
        }
        if (ok) survivors.push_back(c);
    }
    if (survivors.empty()) throw FitError("no loop-shift exponent is consistent with the relations");
    if (survivors.size() > 1) {
        std::string s;
        for (int c : survivors) s += " " + std::to_string(c);
        throw FitError("loop-shift exponent is ambiguous; surviving 2s:" + s);
    }
    return survivors.front();
}

// ---------------------------------------------------------------------------
// Labelling the GL_2 exchange graph

namespace {

using Triangle = std::array<SimpleLabel, 3>;

Triangle sorted_triangle(SimpleLabel a, SimpleLabel b, SimpleLabel c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

// Clusters of the strip-and-fans picture: the two fans around P_{2,0} and
// P_{-2,0}, and the two rows of the strip between them.
class Triangulation {
public:
    explicit Triangulation(int radius) {
        auto P = SimpleLabel::p;
        for (int l = -radius; l <= radius; ++l) {
            add(sorted_triangle(P(2, 0), P(1, l + 1), P(1, l)));
            add(sorted_triangle(P(1, l + 1), P(1, l), P(-1, -l)));
            add(sorted_triangle(P(1, l), P(-1, -l), P(-1, -l + 1)));
            add(sorted_triangle(P(-2, 0), P(-1, l), P(-1, l + 1)));
        }
    }

    std::optional<SimpleLabel> flip(std::vector<SimpleLabel> cluster, const SimpleLabel& removed) const {
        std::sort(cluster.begin(), cluster.end());
        std::vector<SimpleLabel> kept;
        for (const auto& l : cluster)
            if (!(l == removed)) kept.push_back(l);
        if (kept.size() != 2) return std::nullopt;
        auto it = by_edge_.find({kept[0], kept[1]});
        if (it == by_edge_.end()) return std::nullopt;
        for (const auto& t : it->second) {
            if (std::equal(t.begin(), t.end(), cluster.begin())) continue;
            for (const auto& l : t)
                if (!(l == kept[0]) && !(l == kept[1])) return l;
        }
        return std::nullopt;
    }

private:
    void add(const Triangle& t) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) by_edge_[{t[i], t[j]}].push_back(t);
    }
    std::map<std::pair<SimpleLabel, SimpleLabel>, std::vector<Triangle>> by_edge_;
};

std::vector<SimpleLabel> mutable_labels(const std::vector<SimpleLabel>& all, int m) {
    return {all.begin(), all.begin() + m};
}

}  // namespace

LabeledGraph label_gl2_graph(int depth, int threads) {
    const QuantumSeed root = initial_seed_gl2();
    LabeledGraph lg{explore(root, depth, threads), {}};
    const int m = root.mutable_count();
    const Triangulation tri(depth + 8);

    std::vector<int> order = canonical_order(root);
    std::vector<SimpleLabel> root_labels;
    for (int i = 0; i < m; ++i) root_labels.push_back(SimpleLabel::parse(root.labels[order[i]]));
    for (int i = m; i < root.rank(); ++i) root_labels.push_back(SimpleLabel::parse(root.labels[i]));
    lg.labels[lg.graph.root] = root_labels;

    std::map<SimpleLabel, std::string> var_of;
    std::map<std::string, SimpleLabel> label_of;
    auto bind = [&](const SimpleLabel& l, const TorusElement& x) {
        const std::string s = x.to_string();
        auto [it, fresh] = var_of.emplace(l, s);
        if (!fresh && it->second != s) throw RegistryError("label " + l.to_string() + " names two cluster variables");
        auto [jt, fresh2] = label_of.emplace(s, l);
        if (!fresh2 && !(jt->second == l)) throw RegistryError("cluster variable carries two labels");
    };

    std::deque<std::string> queue{lg.graph.root};
    std::set<std::string> visited{lg.graph.root};
    while (!queue.empty()) {
        const std::string from = queue.front();
        queue.pop_front();
        const QuantumSeed& s = lg.graph.nodes.at(from);
        const auto& fl = lg.labels.at(from);
        for (int i = 0; i < m; ++i) bind(fl[i], s.variables[i]);

        for (auto it = lg.graph.edges.lower_bound({from, 0, std::string()});
             it != lg.graph.edges.end() && std::get<0>(*it) == from; ++it) {
            const int k = std::get<1>(*it);
            const std::string& to = std::get<2>(*it);
            const QuantumSeed& t = lg.graph.nodes.at(to);
            auto fresh = tri.flip(mutable_labels(fl, m), fl[k]);
            if (!fresh) throw RegistryError("flip rule undefined at " + fl[k].to_string());
            std::vector<SimpleLabel> tl(fl.size());
            for (int j = 0; j < m; ++j) {
                tl[j] = *fresh;
                for (int i = 0; i < m; ++i)
                    if (i != k && s.variables[i] == t.variables[j]) tl[j] = fl[i];
            }
            for (std::size_t j = m; j < fl.size(); ++j) tl[j] = fl[j];
            auto known = lg.labels.find(to);
            if (known != lg.labels.end()) {
                if (known->second != tl) throw RegistryError("inconsistent labels on a seed reached twice");
                continue;
            }
            lg.labels[to] = tl;
            if (visited.insert(to).second) queue.push_back(to);
        }
    }
    return lg;
}

std::string find_cluster(const LabeledGraph& g, std::vector<SimpleLabel> cluster) {
    std::sort(cluster.begin(), cluster.end());
    for (const auto& [key, labels] : g.labels) {
        const int m = g.graph.nodes.at(key).mutable_count();
        auto mine = mutable_labels(labels, m);
        std::sort(mine.begin(), mine.end());
        if (mine == cluster) return key;
    }
    return {};
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

TorusElement frozen_power(const FormPtr& form, int index, int f) {
    TorusElement g = TorusElement::generator(form, index);
    if (f >= 0) return g.power(static_cast<unsigned>(f));
    return g.monomial_inverse().power(static_cast<unsigned>(-f));
}

std::string describe(const SimpleLabel& l, const Normalization& n) {
    return l.to_string() + ": frozen^" + std::to_string(n.frozen_exponent) + " v^" + std::to_string(n.v_power) +
           " by " + n.designated;
}

// Class v^a F^f x solving a relation in which the unknown appears on both sides
// of a two-word identity; f is forced by the q-commutation exponent and a by
// bar invariance.
std::optional<std::pair<TorusElement, Normalization>> solve_two_sided(const RelationInstance& inst,
                                                                      const SimpleLabel& unknown,
                                                                      const SimpleClassRegistry& reg,
                                                                      const TorusElement& x) {
    if (inst.lhs.size() != 1 || inst.rhs.size() != 1) return std::nullopt;
    auto gap = [&](int f) -> std::optional<int> {
        SimpleClassRegistry trial = reg;
        trial.classes[unknown] = frozen_power(reg.ambient, reg.frozen_index, f) * x;
        auto l = evaluate_side(inst.lhs, trial);
        auto r = evaluate_side(inst.rhs, trial);
        if (!l || !r) return std::nullopt;
        return detect_q_proportional(*l, *r);
    };
    auto d0 = gap(0), d1 = gap(1);
    if (!d0 || !d1 || *d0 == *d1) return std::nullopt;
    const int slope = *d1 - *d0;
    if (*d0 % slope != 0) return std::nullopt;
    const int f = -*d0 / slope;
    TorusElement y = frozen_power(reg.ambient, reg.frozen_index, f) * x;
    auto m = detect_q_proportional(y.bar(), y);
    if (!m || *m % 2 != 0) return std::nullopt;
    return std::make_pair(y.shifted(*m / 2), Normalization{f, *m / 2, inst.name()});
}

}  // namespace

std::optional<Normalization> match_up_to_frozen(const TorusElement& target, const TorusElement& x, int frozen_index) {
    if (target.is_zero() || x.is_zero()) return std::nullopt;
    const auto& lt = target.leading_term().first;
    const auto& lx = x.leading_term().first;
    for (std::size_t i = 0; i < lt.size(); ++i)
        if (static_cast<int>(i) != frozen_index && lt[i] != lx[i]) return std::nullopt;
    const int f = lt[frozen_index] - lx[frozen_index];
    TorusElement y = frozen_power(x.form(), frozen_index, f) * x;
    auto a = detect_q_proportional(target, y);
    if (!a) return std::nullopt;
    return Normalization{f, *a, ""};
}

std::optional<std::pair<SimpleLabel, Normalization>> identify(const SimpleClassRegistry& reg, const TorusElement& x) {
    std::optional<std::pair<SimpleLabel, Normalization>> found;
    for (const auto& [label, cls] : reg.classes) {
        // P_{+-2,l} for l != 0 are frozen twists of P_{+-2,0}.
        if (std::abs(label.k) == 2 && label.ell != 0) continue;
        auto n = match_up_to_frozen(cls, x, reg.frozen_index);
        if (!n) continue;
        if (found) return std::nullopt;
        found = std::make_pair(label, *n);
    }
    return found;
}

Gl2Model build_gl2_model(int depth, int ell_window, int threads) {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    if (ell_window < 0) throw std::invalid_argument("ell window must be nonnegative");
    Gl2Model model;
    model.root = initial_seed_gl2();
    model.depth = depth;
    model.ell_window = ell_window;
    const int s2 = fit_loop_shift(model.root, initial_commutation_relations(model.root));
    model.graph = label_gl2_graph(depth, threads);
    SimpleClassRegistry reg = initial_registry(model.root, s2);
    const int m = model.root.mutable_count();

    auto in_window = [&](const SimpleLabel& l) {
        if (std::abs(l.k) == 1) return std::abs(l.ell) <= ell_window;
        return std::abs(l.k) == 2 && l.ell == 0;
    };
    std::map<SimpleLabel, TorusElement> base;
    for (const auto& [key, labels] : model.graph.labels) {
        const QuantumSeed& s = model.graph.graph.nodes.at(key);
        for (int i = 0; i < m; ++i)
            if (in_window(labels[i])) base.emplace(labels[i], s.variables[i]);
    }
    std::set<SimpleLabel> optional_labels;
    for (int l = -ell_window; l <= ell_window; ++l) {
        if (l == 0) continue;
        base.emplace(SimpleLabel::p(2, l), reg.class_of(SimpleLabel::p(2, 0)));
        optional_labels.insert(SimpleLabel::p(2, l));
    }

    std::vector<RelationInstance> candidates;
    for (Suite s : {Suite::MutN, Suite::Glue, Suite::Old, Suite::Commute}) {
        auto v = instantiate(s, 2, -ell_window - 2, ell_window + 2);
        candidates.insert(candidates.end(), v.begin(), v.end());
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& [label, x] : base) {
            if (reg.classes.count(label)) continue;
            for (const auto& inst : candidates) {
                const int occ = occurrences(inst, label);
                if (occ == 0) continue;
                auto ls = inst.labels();
                if (!std::all_of(ls.begin(), ls.end(),
                                 [&](const SimpleLabel& l) { return l == label || reg.has(l); }))
                    continue;
                if (occ == 1) {
                    auto solved = solve_linear(inst, label, reg);
                    if (!solved)
                        throw RegistryError("no exact solution for " + label.to_string() + " from " + inst.name());
                    auto n = match_up_to_frozen(*solved, x, reg.frozen_index);
                    if (!n)
                        throw RegistryError(inst.name() + " forces a class for " + label.to_string() +
                                            " that is not a frozen multiple of its cluster variable");
                    n->designated = inst.name();
                    reg.classes[label] = *solved;
                    reg.normalizations[label] = *n;
                } else {
                    auto solved = solve_two_sided(inst, label, reg, x);
                    if (!solved) continue;
                    reg.classes[label] = solved->first;
                    reg.normalizations[label] = solved->second;
                }
                progress = true;
                break;
            }
        }
    }
    for (const auto& [label, x] : base)
        if (!reg.classes.count(label) && !optional_labels.count(label)) model.unresolved.push_back(label);
    model.registry = std::move(reg);
    return model;
}

SimpleClassRegistry build_registry(int depth, int ell_window) { return build_gl2_model(depth, ell_window).registry; }

// ---------------------------------------------------------------------------
// Reports

namespace {

std::vector<std::string> normalizations_for(const RelationInstance& inst, const SimpleClassRegistry& reg) {
    std::vector<std::string> out;
    for (const auto& l : inst.labels()) {
        auto it = reg.normalizations.find(l);
        if (it != reg.normalizations.end()) out.push_back(describe(l, it->second));
    }
    return out;
}

std::string missing_text(const std::vector<SimpleLabel>& missing) {
    std::string s = "missing:";
    for (const auto& l : missing) s += " " + l.to_string();
    return s;
}

}  // namespace

Report verify_relations(const SimpleClassRegistry& reg, Suite suite, int lo, int hi) {
    if (suite == Suite::Abelian) throw std::invalid_argument("abelian sequences are checked by verify_abelian");
    const int n = reg.frozen_label == SimpleLabel::koszul() ? 1 : 2;
    Report rep{suite_name(suite), {}};
    std::map<std::string, std::string> designated;
    for (const auto& [l, nm] : reg.normalizations) designated[nm.designated] += " " + l.to_string();
    for (const auto& inst : instantiate(suite, n, lo, hi)) {
        auto r = evaluate(inst, reg);
        CheckRecord rec{inst.family, inst.params, r.status, "", "", "", {}};
        if (r.status == "skip") {
            rec.details = missing_text(r.missing);
        } else {
            rec.lhs = r.lhs.to_string();
            rec.rhs = r.rhs.to_string();
            rec.normalization_used = normalizations_for(inst, reg);
            auto d = designated.find(inst.name());
            if (d != designated.end()) rec.details = "fixes normalization of" + d->second;
        }
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

SimpleLabel left_dual_label(const SimpleLabel& l) {
    if (l.kind != SimpleLabel::Kind::P || std::abs(l.k) != 1) throw std::invalid_argument("dual defined on P_{+-1,l}");
    if (l.k == 1) return SimpleLabel::p(-1, 2 - l.ell);
    return SimpleLabel::p(1, -l.ell - 1);
}

namespace {

CheckRecord compare_twist(const std::string& name, std::map<std::string, int> params, const SimpleClassRegistry& reg,
                          const std::vector<SimpleLabel>& start, const QuantumSeed& out, int iterations) {
    CheckRecord rec{name, std::move(params), "pass", "", "", "", {}};
    const int m = out.mutable_count();
    for (int i = 0; i < m; ++i) {
        SimpleLabel target = start[i];
        for (int t = 0; t < iterations; ++t) target = left_dual_label(target);
        std::string entry = start[i].to_string() + " -> " + target.to_string();
        if (!reg.has(target)) {
            if (rec.status == "pass") rec.status = "skip";
            rec.details += entry + " (outside registry); ";
            continue;
        }
        auto n = match_up_to_frozen(reg.class_of(target), out.variables[i], reg.frozen_index);
        if (!n) {
            rec.status = "fail";
            rec.details += entry + " (no match); ";
            continue;
        }
        rec.normalization_used.push_back(entry + ": frozen^" + std::to_string(n->frozen_exponent) + " v^" +
                                         std::to_string(n->v_power));
    }
    return rec;
}

std::vector<SimpleLabel> labels_of(const Gl2Model& model, const std::string& key) {
    return mutable_labels(model.graph.labels.at(key), model.root.mutable_count());
}

}  // namespace

Report verify_twist_duality(const Gl2Model& model) {
    Report rep{"twist", {}};
    auto P = SimpleLabel::p;
    const auto& reg = model.registry;

    const std::string start = find_cluster(model.graph, {P(-1, -1), P(1, 1), P(-1, 0)});
    if (start.empty()) throw RegistryError("cluster {P_{-1,-1}, P_{1,1}, P_{-1,0}} not reached within depth");
    const QuantumSeed& seed = model.graph.graph.nodes.at(start);
    const auto start_labels = labels_of(model, start);

    auto acyc = is_acyclic(seed);
    rep.records.push_back({"acyclic_start", {}, acyc.acyclic ? "pass" : "fail", "", "", "", {}});
    if (!acyc.acyclic) return rep;

    TwistResult tw = twist(seed);
    {
        std::string seq;
        for (int k : tw.sequence) seq += std::to_string(k + 1) + " ";
        CheckRecord rec{"source_mutation_count", {}, tw.sequence.size() == 3 ? "pass" : "fail",
                        "sequence " + seq, "", "", {}};
        rep.records.push_back(rec);
    }
    {
        // The image cluster, looked up among the labelled seeds.
        std::vector<SimpleLabel> expect{P(1, 0), P(-1, 1), P(1, -1)};
        std::sort(expect.begin(), expect.end());
        const QuantumSeed canon = permute_mutable(tw.seed, canonical_order(tw.seed));
        auto it = model.graph.labels.find(canonical_form(canon));
        CheckRecord rec{"twist_target_cluster", {}, "skip", "image not within explored depth", "", "", {}};
        if (it != model.graph.labels.end()) {
            auto got = mutable_labels(it->second, seed.mutable_count());
            std::sort(got.begin(), got.end());
            std::string text;
            for (const auto& l : got) text += l.to_string() + " ";
            rec.status = got == expect ? "pass" : "fail";
            rec.details = "image " + text;
        }
        rep.records.push_back(rec);
    }
    rep.records.push_back(compare_twist("twist_matches_left_dual", {}, reg, start_labels, tw.seed, 1));

    for (int l = -1; l <= 1; ++l) {
        const std::string key = find_cluster(model.graph, {P(1, l), P(-1, -l), P(-1, -l + 1)});
        if (key.empty()) {
            rep.records.push_back({"dual_pattern", {{"ell", l}}, "fail", "strip cluster not reached", "", "", {}});
            continue;
        }
        const QuantumSeed& s = model.graph.graph.nodes.at(key);
        if (!is_acyclic(s).acyclic) {
            rep.records.push_back({"dual_pattern", {{"ell", l}}, "fail", "strip cluster is cyclic", "", "", {}});
            continue;
        }
        rep.records.push_back(compare_twist("dual_pattern", {{"ell", l}}, reg, labels_of(model, key), twist(s).seed, 1));
    }

    if (!is_acyclic(tw.seed).acyclic) {
        rep.records.push_back({"double_twist", {}, "fail", "twisted seed is cyclic", "", "", {}});
    } else {
        rep.records.push_back(compare_twist("double_twist", {}, reg, start_labels, twist(tw.seed).seed, 2));
    }
    return rep;
}

Report verify_commutation_closure(const SimpleClassRegistry& reg, int lo, int hi) {
    Report rep{"commutation_closure", {}};
    for (const auto& inst : instantiate(Suite::Commute, 2, lo, hi)) {
        const SimpleLabel a = inst.lhs[0].factors[0].label;
        const SimpleLabel b = inst.lhs[0].factors[1].label;
        if (!reg.has(a) || !reg.has(b)) {
            rep.records.push_back({inst.family, inst.params, "skip", "outside registry", "", "", {}});
            continue;
        }
        const int expected = reg.loop_shift2 * inst.rhs[0].shift;
        auto c = q_commutation_exponent(reg.class_of(a), reg.class_of(b));
        CheckRecord rec{inst.family, inst.params, c && *c == expected ? "pass" : "fail",
                        "expected v^" + std::to_string(expected) + ", found " + (c ? "v^" + std::to_string(*c) : "none"),
                        "", "", {}};
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

Report verify_common_clusters(const Gl2Model& model) {
    Report rep{"common_clusters", {}};
    const auto& reg = model.registry;
    const int m = model.root.mutable_count();
    std::set<std::pair<SimpleLabel, SimpleLabel>> together;
    for (const auto& [key, labels] : model.graph.labels)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) together.emplace(labels[i], labels[j]);

    std::vector<SimpleLabel> ls;
    for (const auto& [l, c] : reg.classes)
        if (!(std::abs(l.k) == 2 && l.ell != 0)) ls.push_back(l);
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            const bool qc = q_commutation_exponent(reg.class_of(ls[i]), reg.class_of(ls[j])).has_value();
            const bool share = together.count({ls[i], ls[j]}) > 0;
            if (!qc && !share) continue;
            CheckRecord rec{"q_commuting_pair", {}, "pass", ls[i].to_string() + " " + ls[j].to_string(), "", "", {}};
            if (share && !qc) {
                rec.status = "fail";
                rec.details += ": share a cluster but do not q-commute";
            } else if (qc && !share) {
                rec.status = "fail";
                rec.details += ": q-commute but share no cluster within depth " + std::to_string(model.depth);
            }
            rep.records.push_back(std::move(rec));
        }
    return rep;
}

Report verify_positivity(const Gl2Model& model, int depth, int threads) {
    Report rep{"positivity", {}};
    ExchangeGraph g = explore(model.root, depth, threads);
    auto inv = variable_inventory(g);
    int bad = 0;
    for (const auto& x : inv)
        if (!x.has_nonnegative_coefficients()) {
            ++bad;
            rep.records.push_back({"cluster_variable_positive", {}, "fail", x.to_string(), "", "", {}});
        }
    rep.records.push_back({"cluster_variables_positive",
                           {{"depth", depth}, {"variables", static_cast<int>(inv.size())}},
                           bad == 0 ? "pass" : "fail", std::to_string(bad) + " with a negative coefficient", "", "",
                           {}});
    for (const auto& [l, c] : model.registry.classes) {
        rep.records.push_back({"registry_class_positive", {}, c.has_nonnegative_coefficients() ? "pass" : "fail",
                               l.to_string(), "", "", {}});
        rep.records.push_back({"registry_class_bar_invariant", {}, c.bar() == c ? "pass" : "fail", l.to_string(), "",
                               "", {}});
    }
    return rep;
}

Report verify_inventory(const Gl2Model& model, int depth) {
    Report rep{"inventory", {}};
    const int m = model.root.mutable_count();
    std::map<std::string, SimpleLabel> seen;
    for (const auto& [key, labels] : model.graph.labels) {
        if (model.graph.graph.depth.at(key) > depth) continue;
        const QuantumSeed& s = model.graph.graph.nodes.at(key);
        for (int i = 0; i < m; ++i) seen.emplace(s.variables[i].to_string(), labels[i]);
    }
    for (const auto& [key, labels] : model.graph.labels) {
        if (model.graph.graph.depth.at(key) > depth) continue;
        const QuantumSeed& s = model.graph.graph.nodes.at(key);
        for (int i = 0; i < m; ++i) {
            const std::string text = s.variables[i].to_string();
            auto it = seen.find(text);
            if (it == seen.end()) continue;
            const SimpleLabel expect = it->second;
            seen.erase(it);
            CheckRecord rec{"inventory_label", {}, "pass", expect.to_string(), "", "", {}};
            if (!model.registry.has(expect)) {
                rec.status = "skip";
                rec.details += " outside registry";
            } else {
                auto id = identify(model.registry, s.variables[i]);
                if (!id || !(id->first == expect)) {
                    rec.status = "fail";
                    rec.details += id ? " identified as " + id->first.to_string() : " unidentified";
                } else {
                    rec.normalization_used.push_back(describe(expect, id->second));
                }
            }
            rep.records.push_back(std::move(rec));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// GL_1

Gl1Model build_gl1_model(int loop_shift2) {
    std::vector<Gl1Model> survivors;
    for (int lam : {-2, -1, 1, 2}) {
        QuantumSeed seed = initial_seed_gl1(lam);
        SimpleClassRegistry reg = initial_registry(seed, loop_shift2);
        const SimpleLabel target = SimpleLabel::p(-1, 0);
        const TorusElement x = mutated_variable(seed, 0);
        auto insts = instantiate(Suite::MutN, 1, 0, 0);
        auto solved = solve_linear(insts[0], target, reg);
        if (!solved) continue;
        auto n = match_up_to_frozen(*solved, x, reg.frozen_index);
        if (!n) continue;
        n->designated = insts[0].name();
        reg.classes[target] = *solved;
        reg.normalizations[target] = *n;
        if (evaluate(insts[1], reg).status != "pass") continue;
        survivors.push_back({seed, reg, lam});
    }
    if (survivors.size() != 1)
        throw FitError("GL_1 convention search left " + std::to_string(survivors.size()) + " candidates");
    return survivors.front();
}

Report verify_abelian(const Gl1Model& model) {
    Report rep{"abelian", {}};
    const auto& reg = model.registry;
    const TorusElement a = reg.class_of(SimpleLabel::p(1, 0));
    const TorusElement b = reg.class_of(SimpleLabel::p(-1, 0));
    const TorusElement one = TorusElement::one(reg.ambient);
    struct Shifted {
        bool ok = false;
        int frozen = 0;
        int v = 0;
    };
    auto shifted_unit = [&](const TorusElement& prod) {
        Shifted r;
        TorusElement d = prod - one;
        if (d.size() != 1 || !d.is_invertible_monomial()) return r;
        const auto& [e, c] = d.leading_term();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != reg.frozen_index && e[i] != 0) return r;
        if (c.coefficients().begin()->second != 1) return r;
        r = {true, e[reg.frozen_index], c.min_exponent()};
        return r;
    };
    const TorusElement ab = a * b, ba = b * a;
    Shifted s1 = shifted_unit(ab), s2 = shifted_unit(ba);
    auto rec = [&](const std::string& name, const Shifted& s, const TorusElement& prod) {
        CheckRecord r{name, {}, s.ok ? "pass" : "fail", "", prod.to_string(), "", {}};
        if (s.ok)
            r.details = "unit + v^" + std::to_string(s.v) + " frozen^" + std::to_string(s.frozen);
        r.rhs = s.ok ? "1 + shifted unit" : "not of the form unit + shifted unit";
        return r;
    };
    rep.records.push_back(rec("abelian_sequence_1", s1, ab));
    rep.records.push_back(rec("abelian_sequence_2", s2, ba));
    const bool same_monomial = s1.ok && s2.ok && s1.frozen == s2.frozen;
    rep.records.push_back({"same_shifted_unit", {}, same_monomial ? "pass" : "fail",
                           "frozen exponents " + std::to_string(s1.frozen) + " and " + std::to_string(s2.frozen), "",
                           "", {}});
    rep.records.push_back({"opposite_loop_shifts", {}, same_monomial && s1.v == -s2.v ? "pass" : "fail",
                           "v-powers " + std::to_string(s1.v) + " and " + std::to_string(s2.v), "", "", {}});
    rep.records.push_back({"classical_classes_agree", {},
                           ab.specialize_classical() == ba.specialize_classical() ? "pass" : "fail", "", "", "", {}});
    return rep;
}

}  // namespace qcluster
