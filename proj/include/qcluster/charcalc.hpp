// Bigraded Euler characteristics of symmetric and exterior algebras on dual
// loop generators.  p carries loop weight, u carries eta weight.
#pragma once

#include "qcluster/qtorus.hpp"
#include "qcluster/report.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcluster {

class TruncationUnsafe : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct GradedGenerator {
    int loop_weight = 0;
    int eta_weight = -1;  // must be negative
    int degree = 0;       // 0 symmetric, -1 exterior
};

/// Weights first, first+step, first+2 step, ... (count < 0 means unbounded).
struct GeneratorFamily {
    int first_weight = 0;
    int step = 1;  // +1 or -1
    int count = -1;
    int eta_weight = -1;
    int degree = 0;

    std::vector<GradedGenerator> prefix(int n) const;
};

struct CharWindow {
    int p_lo = 0;
    int p_hi = 0;
    int u_lo = 0;  // u-degrees run over [u_lo, 0]

    bool contains(int p, int u) const { return p >= p_lo && p <= p_hi && u >= u_lo && u <= 0; }
};

/// p-support of the full series in one u-degree; nullopt ends are unbounded.
struct SupportBound {
    std::optional<long> lo;
    std::optional<long> hi;
};

class TruncatedCharacter {
public:
    TruncatedCharacter() = default;
    explicit TruncatedCharacter(CharWindow w) : window_(w) {}

    const CharWindow& window() const { return window_; }
    /// Exact coefficient of p^p u^u; throws TruncationUnsafe outside the window.
    Integer coefficient(int p, int u) const;
    const std::map<std::pair<int, int>, Integer>& coefficients() const { return coeffs_; }
    /// Support of each nonempty u-degree of the untruncated series.
    const std::map<int, SupportBound>& support() const { return support_; }

    void set(int p, int u, const Integer& c);
    void set_support(int u, SupportBound b) { support_[u] = b; }

    /// Same series seen on a smaller window.
    TruncatedCharacter restricted(const CharWindow& w) const;

    /// Equality of the coefficients on a common window.
    bool agrees_on(const TruncatedCharacter& o, const CharWindow& w) const;

    /// Rows (p, u, coefficient) sorted by (u desc, p asc).
    std::vector<std::tuple<int, int, Integer>> table() const;

private:
    CharWindow window_;
    std::map<std::pair<int, int>, Integer> coeffs_;  // keyed (p, u), no zeros
    std::map<int, SupportBound> support_;
};

TruncatedCharacter constant_character(const Integer& c, CharWindow w);

/// Product of 1/(1 - u^e p^w) over a finite list of degree 0 generators.
TruncatedCharacter sym_character(const std::vector<GradedGenerator>& gens, CharWindow w);
/// Product of (1 - u^e p^w) over a finite list of degree -1 generators.
TruncatedCharacter ext_character(const std::vector<GradedGenerator>& gens, CharWindow w);
/// Character of the full (possibly infinite) family on the window, with the
/// support bounds of the untruncated series.
TruncatedCharacter family_character(const GeneratorFamily& family, CharWindow w);

/// Product exact on `target`.  Throws TruncationUnsafe if some coefficient in
/// the target receives contributions from outside the factors' windows or
/// from infinitely many terms.
TruncatedCharacter multiply(const TruncatedCharacter& a, const TruncatedCharacter& b, CharWindow target);

/// 1 - u^b p^a, exact.
TruncatedCharacter binomial_character(int a, int b, CharWindow w);

/// Dual-generator families of the abelian example.
GeneratorFamily dual_of_o();           // weights 0, 1, 2, ...
GeneratorFamily dual_of_to();          // weights 1, 2, ...
GeneratorFamily dual_of_k_mod_o();     // weights -1, -2, ..., exterior
GeneratorFamily dual_of_tinv_o_mod_o(); // weight -1 only, exterior

/// Solves chi(Z) = (1 - u^b p^a) chi(classical) for both convolution orders
/// and compares coefficients on p in [-N, N], u in [-N, 0].
Report verify_abelian_sequences(int n);

}  // namespace qcluster
