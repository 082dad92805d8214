#include "qcluster/serialize.hpp"

#include <fstream>
#include <sstream>

namespace qcluster {

Json scalar_to_json(const QuantumScalar& c) {
    Json out = Json::array();
    for (const auto& [e, k] : c.coefficients()) out.push_back(Json::array({e, k.get_str()}));
    return out;
}

QuantumScalar scalar_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("scalar must be an array of [exponent, coefficient]");
    QuantumScalar r;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw FormatError("scalar term must be [exponent, coefficient]");
        Integer c;
        if (t[1].is_string()) {
            if (c.set_str(t[1].get<std::string>(), 10) != 0) throw FormatError("bad integer coefficient");
        } else if (t[1].is_number_integer()) {
            c = t[1].get<long>();
        } else {
            throw FormatError("coefficient must be a string or integer");
        }
        r += QuantumScalar::v_power(t[0].get<int>(), c);
    }
    return r;
}

Json element_to_json(const TorusElement& x) {
    Json out = Json::array();
    for (const auto& [a, c] : x.terms()) out.push_back({{"x", a}, {"c", scalar_to_json(c)}});
    return out;
}

TorusElement element_from_json(const Json& j, const FormPtr& form) {
    if (!j.is_array()) throw FormatError("element must be an array of terms");
    TorusElement r = TorusElement::zero(form);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("x") || !t.contains("c")) throw FormatError("term needs fields x and c");
        auto a = t["x"].get<ExponentVector>();
        if (static_cast<int>(a.size()) != form->rank()) throw FormatError("exponent vector has wrong length");
        r += TorusElement::monomial(form, a, scalar_from_json(t["c"]));
    }
    return r;
}

namespace {

std::vector<std::vector<int>> int_matrix(const Json& j, const char* what) {
    try {
        return j.get<std::vector<std::vector<int>>>();
    } catch (const Json::exception&) {
        throw FormatError(std::string(what) + " must be an integer matrix");
    }
}

}  // namespace

Json seed_to_json(const QuantumSeed& seed) {
    Json vars = Json::array();
    for (const auto& x : seed.variables) vars.push_back(element_to_json(x));
    return {{"rank", seed.rank()},
            {"mutable", seed.mutable_count()},
            {"lambda", seed.lambda.entries()},
            {"b", seed.exchange.rows()},
            {"labels", seed.labels},
            {"vars", vars},
            {"ambient", seed.ambient()->entries()}};
}

QuantumSeed seed_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("seed must be an object");
    for (const char* f : {"rank", "mutable", "lambda", "b"})
        if (!j.contains(f)) throw FormatError(std::string("seed is missing field ") + f);
    if (!j["rank"].is_number_integer() || !j["mutable"].is_number_integer())
        throw FormatError("rank and mutable must be integers");
    const int n = j["rank"].get<int>();
    const int m = j["mutable"].get<int>();
    if (n < 1 || n > kMaxRank || m < 0 || m > n) throw FormatError("rank or mutable count out of range");

    auto lam = int_matrix(j["lambda"], "lambda");
    auto b = int_matrix(j["b"], "b");
    if (static_cast<int>(lam.size()) != n || static_cast<int>(b.size()) != n)
        throw FormatError("matrix row count differs from rank");
    for (const auto& r : b)
        if (static_cast<int>(r.size()) != m) throw FormatError("b must have `mutable` columns");

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        try {
            labels = j["labels"].get<std::vector<std::string>>();
        } catch (const Json::exception&) {
            throw FormatError("labels must be strings");
        }
        if (static_cast<int>(labels.size()) != n) throw FormatError("label count differs from rank");
    }
    SkewForm form = [&] {
        try {
            return SkewForm(lam);
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("lambda: ") + e.what());
        }
    }();
    ExchangeMatrix ex = m == 0 ? ExchangeMatrix(n, 0) : ExchangeMatrix(b);
    QuantumSeed seed = QuantumSeed::initial(form, ex, labels);
    if (j.contains("vars")) {
        FormPtr ambient = seed.ambient();
        if (j.contains("ambient")) {
            try {
                ambient = make_form(SkewForm(int_matrix(j["ambient"], "ambient")));
            } catch (const std::invalid_argument& e) {
                throw FormatError(std::string("ambient: ") + e.what());
            }
            if (ambient->rank() != n) throw FormatError("ambient form has wrong rank");
        }
        const Json& vs = j["vars"];
        if (!vs.is_array() || static_cast<int>(vs.size()) != n) throw FormatError("vars must list rank elements");
        for (int i = 0; i < n; ++i) seed.variables[i] = element_from_json(vs[i], ambient);
    }
    validate_shape(seed);
    return seed;
}

Json report_to_json(const Report& r) {
    Json recs = Json::array();
    for (const auto& c : r.records) {
        Json rec = {{"name", c.name}, {"params", c.params}, {"status", c.status}};
        if (!c.details.empty()) rec["details"] = c.details;
        if (!c.lhs.empty()) rec["lhs"] = c.lhs;
        if (!c.rhs.empty()) rec["rhs"] = c.rhs;
        if (!c.normalization_used.empty()) rec["normalization_used"] = c.normalization_used;
        recs.push_back(std::move(rec));
    }
    return {{"suite", r.suite},
            {"instances", recs},
            {"summary", {{"pass", r.count("pass")}, {"fail", r.count("fail")}, {"skip", r.count("skip")}}}};
}

Json graph_to_json(const ExchangeGraph& g) {
    // Nodes are numbered by sorted key so the document stays compact.
    std::map<std::string, int> index;
    for (const auto& [k, s] : g.nodes) index.emplace(k, static_cast<int>(index.size()));
    Json nodes = Json::array();
    for (const auto& [k, s] : g.nodes) {
        Json js = seed_to_json(s);
        nodes.push_back({{"id", index[k]}, {"depth", g.depth.at(k)}, {"seed", js}});
    }
    Json edges = Json::array();
    for (const auto& [from, kk, to] : g.edges) edges.push_back(Json::array({index[from], kk + 1, index[to]}));
    Json inv = Json::array();
    for (const auto& x : variable_inventory(g)) inv.push_back(element_to_json(x));
    return {{"root", index[g.root]}, {"nodes", nodes}, {"edges", edges}, {"inventory", inv}, {"closed", g.closed}};
}

Json character_to_json(const TruncatedCharacter& c) {
    Json rows = Json::array();
    for (const auto& [p, u, k] : c.table()) rows.push_back(Json::array({p, u, k.get_str()}));
    const auto& w = c.window();
    return {{"window", {{"p", {w.p_lo, w.p_hi}}, {"u", {w.u_lo, 0}}}}, {"rows", rows}};
}

Json pair_to_json(const DominantPair& p) { return {{"lambda", p.lambda}, {"mu", p.mu}}; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace qcluster
