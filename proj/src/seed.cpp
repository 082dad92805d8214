#include "qcluster/seed.hpp"

#include <algorithm>
#include <numeric>

namespace qcluster {

ExchangeMatrix::ExchangeMatrix(int rank, int mutable_count)
    : rows_(rank, std::vector<int>(mutable_count, 0)) {
    if (mutable_count > rank || mutable_count < 0) throw SeedError("mutable count exceeds rank");
}

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw SeedError("exchange matrix has no rows");
    const std::size_t m = rows_[0].size();
    for (const auto& r : rows_)
        if (r.size() != m) throw SeedError("exchange matrix rows differ in length");
    if (m > rows_.size()) throw SeedError("mutable count exceeds rank");
}

bool ExchangeMatrix::principal_part_skew_symmetric() const {
    const int m = mutable_count();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (rows_[i][j] != -rows_[j][i]) return false;
    return true;
}

QuantumSeed QuantumSeed::initial(SkewForm lambda, ExchangeMatrix exchange, std::vector<std::string> labels) {
    const int n = lambda.rank();
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    FormPtr ambient = make_form(lambda);
    std::vector<TorusElement> vars;
    vars.reserve(n);
    for (int i = 0; i < n; ++i) vars.push_back(TorusElement::generator(ambient, i));
    QuantumSeed s{std::move(lambda), std::move(exchange), std::move(labels), std::move(vars)};
    validate_shape(s);
    return s;
}

void validate_shape(const QuantumSeed& seed) {
    const int n = seed.lambda.rank();
    if (seed.exchange.rank() != n) throw SeedError("exchange matrix rows != rank");
    if (static_cast<int>(seed.labels.size()) != n) throw SeedError("label count != rank");
    if (static_cast<int>(seed.variables.size()) != n) throw SeedError("variable count != rank");
    for (const auto& x : seed.variables)
        if (!same_form(x.form(), seed.variables.front().form()))
            throw SeedError("seed variables over different ambient tori");
    if (!seed.exchange.principal_part_skew_symmetric())
        throw SeedError("principal part of exchange matrix is not skew-symmetric");
}

CompatibilityReport check_compatibility(const SkewForm& lambda, const ExchangeMatrix& b) {
    CompatibilityReport rep;
    const int n = lambda.rank();
    const int m = b.mutable_count();
    if (b.rank() != n || m == 0) return rep;
    rep.product.assign(m, std::vector<long>(n, 0));
    for (int c = 0; c < m; ++c)
        for (int j = 0; j < n; ++j) {
            long s = 0;
            for (int i = 0; i < n; ++i) s += static_cast<long>(b(i, c)) * lambda(i, j);
            rep.product[c][j] = s;
        }
    const long d = rep.product[0][0];
    bool ok = d != 0;
    for (int c = 0; c < m && ok; ++c)
        for (int j = 0; j < n && ok; ++j) ok = rep.product[c][j] == (c == j ? d : 0);
    rep.ok = ok;
    rep.d = ok ? static_cast<int>(d) : 0;
    return rep;
}

CompatibilityReport check_compatibility(const QuantumSeed& seed) {
    return check_compatibility(seed.lambda, seed.exchange);
}

ExchangeMatrix mutate_exchange(const ExchangeMatrix& b, int k) {
    ExchangeMatrix r = b;
    const int n = b.rank();
    const int m = b.mutable_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == k || j == k) {
                r(i, j) = -b(i, j);
            } else {
                const int bik = b(i, k);
                const int sgn = (bik > 0) - (bik < 0);
                r(i, j) = b(i, j) + sgn * std::max(0, bik * b(k, j));
            }
        }
    return r;
}

SkewForm mutate_lambda(const SkewForm& lambda, const ExchangeMatrix& b, int k, int eps) {
    const int n = lambda.rank();
    std::vector<std::vector<long>> e(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) e[i][i] = 1;
    for (int i = 0; i < n; ++i) e[i][k] = (i == k) ? -1 : std::max(0, -eps * b(i, k));
    // E^T L E
    std::vector<std::vector<long>> le(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long s = 0;
            for (int t = 0; t < n; ++t) s += lambda(i, t) * e[t][j];
            le[i][j] = s;
        }
    std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long s = 0;
            for (int t = 0; t < n; ++t) s += e[t][i] * le[t][j];
            out[i][j] = static_cast<int>(s);
        }
    return SkewForm(std::move(out));
}

namespace {

void check_index(const QuantumSeed& seed, int k) {
    if (k < 0 || k >= seed.rank()) throw SeedError("mutation index " + std::to_string(k + 1) + " out of range");
    if (k >= seed.mutable_count()) throw SeedError("mutation index " + std::to_string(k + 1) + " is frozen");
}

std::pair<ExponentVector, ExponentVector> split_column(const ExchangeMatrix& b, int k) {
    const int n = b.rank();
    ExponentVector plus(n, 0), minus(n, 0);
    for (int i = 0; i < n; ++i) {
        plus[i] = std::max(0, b(i, k));
        minus[i] = std::max(0, -b(i, k));
    }
    return {plus, minus};
}

}  // namespace

TorusElement exchange_binomial(const QuantumSeed& seed, int k) {
    check_index(seed, k);
    FormPtr own = make_form(seed.lambda);
    auto [plus, minus] = split_column(seed.exchange, k);
    plus[k] -= 1;
    minus[k] -= 1;
    return TorusElement::monomial(own, plus) + TorusElement::monomial(own, minus);
}

TorusElement seed_monomial(const QuantumSeed& seed, const ExponentVector& c) {
    const int n = seed.rank();
    const int m = seed.mutable_count();
    TorusElement r = TorusElement::one(seed.ambient());
    for (int i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        if (c[i] > 0) {
            r = r * seed.variables[i].power(static_cast<unsigned>(c[i]));
        } else {
            if (i < m) throw SeedError("negative exponent on a mutable variable");
            r = r * seed.variables[i].monomial_inverse().power(static_cast<unsigned>(-c[i]));
        }
    }
    return r.shifted(static_cast<int>(-seed.lambda.normalization_exponent(c)));
}

TorusElement mutated_variable(const QuantumSeed& seed, int k) {
    check_index(seed, k);
    auto [plus, minus] = split_column(seed.exchange, k);
    ExponentVector ek(seed.rank(), 0);
    ek[k] = 1;
    // Y^(-e_k + c) = v^(L(e_k, c)) Y_k^-1 Y^(c)
    TorusElement numerator = seed_monomial(seed, plus).shifted(static_cast<int>(seed.lambda.pairing(ek, plus))) +
                             seed_monomial(seed, minus).shifted(static_cast<int>(seed.lambda.pairing(ek, minus)));
    return seed.variables[k].left_divide(numerator);
}

QuantumSeed mutate(const QuantumSeed& seed, int k) {
    check_index(seed, k);
    if (!check_compatibility(seed).ok) throw SeedError("seed is not compatible");
    SkewForm lp = mutate_lambda(seed.lambda, seed.exchange, k, +1);
    SkewForm lm = mutate_lambda(seed.lambda, seed.exchange, k, -1);
    if (!(lp == lm)) throw std::logic_error("Lambda mutation depends on the sign choice");
    QuantumSeed out{std::move(lp), mutate_exchange(seed.exchange, k), seed.labels, seed.variables};
    out.variables[k] = mutated_variable(seed, k);
    return out;
}

// ---------------------------------------------------------------------------
// GL_n quiver

namespace {

struct GlnIndex {
    int n;
    int p1(int k) const { return 2 * (k - 1); }      // P_{k,1}, k < n
    int p0(int k) const { return k == n ? 2 * n - 2 : 2 * (k - 1) + 1; }
    int det() const { return 2 * n - 1; }
};

}  // namespace

ExchangeMatrix build_quiver_gln(int n) {
    if (n < 2) throw std::invalid_argument("GL_n quiver needs n >= 2");
    GlnIndex ix{n};
    ExchangeMatrix b(2 * n, 2 * n - 1);
    const int m = 2 * n - 1;
    auto arrow = [&](int from, int to, int count) {
        if (to < m) b(from, to) += count;
        if (from < m) b(to, from) -= count;
    };
    for (int k = 1; k <= n - 1; ++k) arrow(ix.p1(k), ix.p0(k), 2);
    for (int k = 1; k <= n - 2; ++k) arrow(ix.p0(k), ix.p1(k + 1), 1);
    for (int k = 1; k <= n - 1; ++k) arrow(ix.p0(k + 1), ix.p1(k), 1);
    arrow(ix.p0(n - 1), ix.p0(n), 1);
    arrow(ix.p0(n - 1), ix.det(), 1);
    arrow(ix.det(), ix.p0(n), 1);
    return b;
}

std::vector<std::string> quiver_gln_labels(int n) {
    std::vector<std::string> labels;
    for (int k = 1; k <= n - 1; ++k) {
        labels.push_back("P_{" + std::to_string(k) + ",1}");
        labels.push_back("P_{" + std::to_string(k) + ",0}");
    }
    labels.push_back("P_{" + std::to_string(n) + ",0}");
    labels.push_back("P_{0,det}");
    return labels;
}

// ---------------------------------------------------------------------------
// Lambda completion

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

int rank_over_q(IntMatrix a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Integer f = a[i][c], g = a[r][c];
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
        }
        ++r;
    }
    return r;
}

// Integer solution of A x = rhs via unimodular column reduction A U = H.
// Free coordinates of y = U^-1 x are set to zero.
std::optional<std::vector<Integer>> solve_integer(IntMatrix a, const std::vector<Integer>& rhs) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    IntMatrix u(cols, std::vector<Integer>(cols, 0));
    for (int i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_axpy = [&](int dst, int src, const Integer& q) {  // col_dst -= q col_src
        for (int i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
        for (int i = 0; i < cols; ++i) u[i][dst] -= q * u[i][src];
    };
    auto col_swap = [&](int x, int y) {
        for (int i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        for (int i = 0; i < cols; ++i) std::swap(u[i][x], u[i][y]);
    };

    std::vector<int> pivot_col_of_row(rows, -1);
    int pc = 0;
    for (int r = 0; r < rows && pc < cols; ++r) {
        for (int c = pc + 1; c < cols; ++c) {
            while (a[r][c] != 0) {
                Integer q = a[r][pc] / a[r][c];
                col_axpy(pc, c, q);
                col_swap(pc, c);
            }
        }
        if (a[r][pc] != 0) pivot_col_of_row[r] = pc++;
    }

    std::vector<Integer> y(cols, 0);
    for (int r = 0; r < rows; ++r) {
        Integer s = rhs[r];
        const int p = pivot_col_of_row[r];
        const int upto = p < 0 ? cols : p;
        for (int c = 0; c < upto; ++c) s -= a[r][c] * y[c];
        if (p < 0) {
            if (s != 0) return std::nullopt;
            continue;
        }
        if (!mpz_divisible_p(s.get_mpz_t(), a[r][p].get_mpz_t())) return std::nullopt;
        y[p] = s / a[r][p];
    }
    std::vector<Integer> x(cols, 0);
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j) x[i] += u[i][j] * y[j];
    return x;
}

}  // namespace

std::optional<SkewForm> complete_lambda(const ExchangeMatrix& b, int d) {
    const int n = b.rank();
    const int m = b.mutable_count();
    if (d == 0) throw std::invalid_argument("compatibility scalar must be nonzero");
    IntMatrix bm(n, std::vector<Integer>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) bm[i][j] = b(i, j);
    if (rank_over_q(bm) < m) throw RankError("exchange matrix lacks full column rank");

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int unknowns = static_cast<int>(pairs.size());

    IntMatrix a(m * n, std::vector<Integer>(unknowns, 0));
    std::vector<Integer> rhs(m * n, 0);
    for (int c = 0; c < m; ++c)
        for (int j = 0; j < n; ++j) {
            const int row = c * n + j;
            rhs[row] = (c == j) ? d : 0;
            for (int p = 0; p < unknowns; ++p) {
                auto [lo, hi] = pairs[p];
                // Lambda_{lo,hi} = x_p, Lambda_{hi,lo} = -x_p
                if (j == hi) a[row][p] += b(lo, c);
                if (j == lo) a[row][p] -= b(hi, c);
            }
        }
    auto x = solve_integer(std::move(a), rhs);
    if (!x) return std::nullopt;
    std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
    for (int p = 0; p < unknowns; ++p) {
        if (!(*x)[p].fits_sint_p()) return std::nullopt;
        auto [lo, hi] = pairs[p];
        entries[lo][hi] = static_cast<int>((*x)[p].get_si());
        entries[hi][lo] = -entries[lo][hi];
    }
    SkewForm lam(std::move(entries));
    if (!check_compatibility(lam, b).ok) throw std::logic_error("lambda completion produced an incompatible form");
    return lam;
}

// ---------------------------------------------------------------------------
// Canonical keys

QuantumSeed permute_mutable(const QuantumSeed& seed, const std::vector<int>& order) {
    const int n = seed.rank();
    const int m = seed.mutable_count();
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i < m ? order.at(i) : i;
    std::vector<std::vector<int>> lam(n, std::vector<int>(n));
    ExchangeMatrix b(n, m);
    std::vector<std::string> labels(n);
    std::vector<TorusElement> vars(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) lam[i][j] = seed.lambda(sigma[i], sigma[j]);
        for (int j = 0; j < m; ++j) b(i, j) = seed.exchange(sigma[i], sigma[j]);
        labels[i] = seed.labels[sigma[i]];
        vars[i] = seed.variables[sigma[i]];
    }
    return QuantumSeed{SkewForm(std::move(lam)), std::move(b), std::move(labels), std::move(vars)};
}

namespace {

std::string key_for(const QuantumSeed& seed, const std::vector<std::string>& prints, const std::vector<int>& order) {
    const int n = seed.rank();
    const int m = seed.mutable_count();
    auto sig = [&](int i) { return i < m ? order[i] : i; };
    std::string key = "V";
    for (int i = 0; i < n; ++i) key += "|" + prints[sig(i)];
    key += "#B";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) key += "," + std::to_string(seed.exchange(sig(i), sig(j)));
    key += "#L";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) key += "," + std::to_string(seed.lambda(sig(i), sig(j)));
    return key;
}

}  // namespace

std::vector<int> canonical_order(const QuantumSeed& seed) {
    const int n = seed.rank();
    const int m = seed.mutable_count();
    std::vector<std::string> prints(n);
    for (int i = 0; i < n; ++i) prints[i] = seed.variables[i].to_string();

    // Keys start with the variable fingerprints, so the minimum over all m!
    // permutations is attained on orders sorting the fingerprints; only ties
    // need enumerating.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return prints[a] < prints[b]; });

    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < m;) {
        int j = i;
        while (j < m && prints[order[j]] == prints[order[i]]) ++j;
        if (j - i > 1) blocks.emplace_back(i, j);
        i = j;
    }
    if (blocks.empty()) return order;

    std::vector<int> best = order;
    std::string best_key = key_for(seed, prints, order);
    std::vector<int> cur = order;
    // Odometer over permutations within each tie block.
    for (auto& [lo, hi] : blocks) std::sort(cur.begin() + lo, cur.begin() + hi);
    while (true) {
        std::string k = key_for(seed, prints, cur);
        if (k < best_key) {
            best_key = std::move(k);
            best = cur;
        }
        std::size_t bi = 0;
        for (; bi < blocks.size(); ++bi) {
            auto [lo, hi] = blocks[bi];
            if (std::next_permutation(cur.begin() + lo, cur.begin() + hi)) break;
        }
        if (bi == blocks.size()) break;
    }
    return best;
}

std::string canonical_form(const QuantumSeed& seed) {
    const int n = seed.rank();
    std::vector<std::string> prints(n);
    for (int i = 0; i < n; ++i) prints[i] = seed.variables[i].to_string();
    return key_for(seed, prints, canonical_order(seed));
}

}  // namespace qcluster
