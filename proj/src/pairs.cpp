#include "qcluster/pairs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qcluster {

DominantPair canonicalize(std::vector<int> lambda, std::vector<int> mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("lambda and mu differ in length");
    std::vector<std::pair<int, int>> cols;
    for (std::size_t i = 0; i < lambda.size(); ++i) cols.emplace_back(lambda[i], mu[i]);
    std::sort(cols.begin(), cols.end(), std::greater<>());
    DominantPair p;
    for (auto [l, m] : cols) {
        p.lambda.push_back(l);
        p.mu.push_back(m);
    }
    return p;
}

bool is_dominant(const DominantPair& p) {
    for (int i = 0; i + 1 < p.n(); ++i) {
        if (p.lambda[i] < p.lambda[i + 1]) return false;
        if (p.lambda[i] == p.lambda[i + 1] && p.mu[i] < p.mu[i + 1]) return false;
    }
    return true;
}

std::vector<DominantPair> enumerate_box(int n, int lo, int hi) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<DominantPair> out;
    if (lo > hi) return out;
    std::vector<int> lam(n), mu(n);
    // Columns (lambda_i, mu_i) are chosen in weakly decreasing pair order.
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back({lam, mu});
            return;
        }
        for (int l = hi; l >= lo; --l) {
            if (i > 0 && l > lam[i - 1]) continue;
            for (int m = hi; m >= lo; --m) {
                if (i > 0 && l == lam[i - 1] && m > mu[i - 1]) continue;
                lam[i] = l;
                mu[i] = m;
                rec(i + 1);
            }
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t orbit_count_bruteforce(int n, int lo, int hi) {
    if (n < 1 || n > 4) throw GuardExceeded("brute-force orbit count needs 1 <= n <= 4");
    if (lo > hi) return 0;
    const std::int64_t side = hi - lo + 1;
    std::int64_t fact = 1, size = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int i = 0; i < 2 * n; ++i) {
        size *= side;
        if (size * fact > 100000000) throw GuardExceeded("box too large for brute-force orbit count");
    }

    // Points are encoded as base-side digits: lambda_0..lambda_{n-1}, mu_0..mu_{n-1}.
    auto decode = [&](std::int64_t code, std::vector<int>& digits) {
        for (int i = 0; i < 2 * n; ++i) {
            digits[i] = static_cast<int>(code % side);
            code /= side;
        }
    };
    auto encode = [&](const std::vector<int>& digits) {
        std::int64_t code = 0;
        for (int i = 2 * n - 1; i >= 0; --i) code = code * side + digits[i];
        return code;
    };
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    std::vector<int> digits(2 * n), moved(2 * n), perm(n);
    std::int64_t orbits = 0;
    for (std::int64_t code = 0; code < size; ++code) {
        if (seen[code]) continue;
        ++orbits;
        decode(code, digits);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (int i = 0; i < n; ++i) {
                moved[i] = digits[perm[i]];
                moved[n + i] = digits[n + perm[i]];
            }
            seen[encode(moved)] = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return orbits;
}

DominantPair label_to_pair(const SimpleLabel& label, int n) {
    std::vector<int> lam(n, 0), mu(n, 0);
    switch (label.kind) {
        case SimpleLabel::Kind::Unit:
        case SimpleLabel::Kind::KoszulUnit:
            break;
        case SimpleLabel::Kind::Pdet:
            std::fill(mu.begin(), mu.end(), 1);
            break;
        case SimpleLabel::Kind::P: {
            const int k = std::abs(label.k);
            if (k > n) throw std::invalid_argument("label " + label.to_string() + " exceeds rank");
            for (int i = 0; i < k; ++i) {
                const int pos = label.k > 0 ? i : n - 1 - i;
                lam[pos] = label.k > 0 ? 1 : -1;
                mu[pos] = label.ell;
            }
            break;
        }
    }
    return canonicalize(lam, mu);
}

}  // namespace qcluster
