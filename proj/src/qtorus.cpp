#include "qcluster/qtorus.hpp"

#include <algorithm>
#include <sstream>

namespace qcluster {

// ---------------------------------------------------------------------------
// QuantumScalar

QuantumScalar::QuantumScalar(long c) {
    if (c != 0) coeffs_[0] = c;
}

QuantumScalar::QuantumScalar(const Integer& c) {
    if (c != 0) coeffs_[0] = c;
}

QuantumScalar QuantumScalar::v_power(int e, const Integer& c) {
    QuantumScalar s;
    if (c != 0) s.coeffs_[e] = c;
    return s;
}

Integer QuantumScalar::coefficient(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

bool QuantumScalar::is_unit() const {
    return coeffs_.size() == 1 && abs(coeffs_.begin()->second) == 1;
}

int QuantumScalar::min_exponent() const {
    if (coeffs_.empty()) throw std::logic_error("min_exponent of zero scalar");
    return coeffs_.begin()->first;
}

int QuantumScalar::max_exponent() const {
    if (coeffs_.empty()) throw std::logic_error("max_exponent of zero scalar");
    return coeffs_.rbegin()->first;
}

bool QuantumScalar::is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& t) { return t.second > 0; });
}

void QuantumScalar::add_term(int e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

QuantumScalar QuantumScalar::shifted(int e) const {
    if (e == 0) return *this;
    QuantumScalar r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace_hint(r.coeffs_.end(), k + e, c);
    return r;
}

QuantumScalar QuantumScalar::bar() const {
    QuantumScalar r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(-k, c);
    return r;
}

Integer QuantumScalar::at_one() const {
    Integer s = 0;
    for (const auto& [k, c] : coeffs_) s += c;
    return s;
}

std::optional<QuantumScalar> QuantumScalar::divide_exact(const QuantumScalar& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero scalar");
    if (is_zero()) return QuantumScalar{};
    const int dmin = d.min_exponent();
    const Integer& dlead = d.coeffs_.begin()->second;
    const int qmax = max_exponent() - d.max_exponent();
    QuantumScalar rem = *this;
    QuantumScalar quot;
    while (!rem.is_zero()) {
        auto [e, c] = *rem.coeffs_.begin();
        const int qe = e - dmin;
        if (qe > qmax || !mpz_divisible_p(c.get_mpz_t(), dlead.get_mpz_t())) return std::nullopt;
        Integer qc = c / dlead;
        quot.add_term(qe, qc);
        for (const auto& [k, dc] : d.coeffs_) rem.add_term(k + qe, -qc * dc);
    }
    return quot;
}

QuantumScalar& QuantumScalar::operator+=(const QuantumScalar& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
}

QuantumScalar& QuantumScalar::operator-=(const QuantumScalar& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
}

QuantumScalar& QuantumScalar::operator*=(const QuantumScalar& o) {
    QuantumScalar r;
    for (const auto& [k1, c1] : coeffs_)
        for (const auto& [k2, c2] : o.coeffs_) r.add_term(k1 + k2, c1 * c2);
    *this = std::move(r);
    return *this;
}

QuantumScalar QuantumScalar::operator-() const {
    QuantumScalar r = *this;
    for (auto& [k, c] : r.coeffs_) c = -c;
    return r;
}

std::string QuantumScalar::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Integer mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'v';
        if (k != 1) os << '^' << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// SkewForm

SkewForm::SkewForm(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    if (n == 0 || n > static_cast<std::size_t>(kMaxRank))
        throw std::invalid_argument("skew form rank must be in [1, 64]");
    for (std::size_t i = 0; i < n; ++i) {
        if (entries_[i].size() != n) throw std::invalid_argument("skew form must be square");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (entries_[i][j] != -entries_[j][i])
                throw std::invalid_argument("form is not skew-symmetric at (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ")");
}

SkewForm SkewForm::zero(int rank) {
    return SkewForm(std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0)));
}

long SkewForm::pairing(const ExponentVector& a, const ExponentVector& b) const {
    long s = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        long row = 0;
        for (int j = 0; j < n; ++j) row += static_cast<long>(entries_[i][j]) * b[j];
        s += a[i] * row;
    }
    return s;
}

long SkewForm::normalization_exponent(const ExponentVector& a) const {
    long s = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += static_cast<long>(a[i]) * a[j] * entries_[i][j];
    return s;
}

SkewForm SkewForm::negated() const {
    auto e = entries_;
    for (auto& row : e)
        for (auto& x : row) x = -x;
    return SkewForm(std::move(e));
}

// ---------------------------------------------------------------------------
// TorusElement

bool same_form(const FormPtr& a, const FormPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

std::string exponent_to_string(const ExponentVector& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    return s + ")";
}

TorusElement::TorusElement(FormPtr form) : form_(std::move(form)) {
    if (!form_) throw std::invalid_argument("torus element needs a form");
}

TorusElement TorusElement::zero(FormPtr form) { return TorusElement(std::move(form)); }

TorusElement TorusElement::one(FormPtr form) {
    const int n = form->rank();
    return monomial(std::move(form), ExponentVector(n, 0));
}

TorusElement TorusElement::monomial(FormPtr form, ExponentVector a, QuantumScalar c) {
    TorusElement x(std::move(form));
    if (static_cast<int>(a.size()) != x.rank()) throw std::invalid_argument("exponent length != rank");
    if (!c.is_zero()) x.terms_.emplace(std::move(a), std::move(c));
    return x;
}

TorusElement TorusElement::generator(FormPtr form, int i) {
    ExponentVector a(form->rank(), 0);
    a.at(i) = 1;
    return monomial(std::move(form), std::move(a));
}

void TorusElement::check_same_form(const TorusElement& o) const {
    if (!same_form(form_, o.form_)) throw FormMismatch("torus elements live over different skew forms");
}

bool TorusElement::is_invertible_monomial() const {
    return terms_.size() == 1 && terms_.begin()->second.is_unit();
}

const std::pair<const ExponentVector, QuantumScalar>& TorusElement::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero element");
    return *terms_.rbegin();
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    check_same_form(o);
    for (const auto& [a, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(a, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) { return *this += -o; }

TorusElement operator*(const TorusElement& x, const TorusElement& y) {
    x.check_same_form(y);
    TorusElement r(x.form_);
    const SkewForm& L = *x.form_;
    ExponentVector sum(x.rank());
    for (const auto& [a, c] : x.terms_) {
        for (const auto& [b, d] : y.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
            QuantumScalar p = (c * d).shifted(static_cast<int>(L.pairing(a, b)));
            auto [it, inserted] = r.terms_.try_emplace(sum, p);
            if (!inserted) {
                it->second += p;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

TorusElement TorusElement::operator-() const {
    TorusElement r = *this;
    for (auto& [a, c] : r.terms_) c = -c;
    return r;
}

TorusElement TorusElement::scaled(const QuantumScalar& s) const {
    TorusElement r(form_);
    if (s.is_zero()) return r;
    for (const auto& [a, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), a, c * s);
    return r;
}

TorusElement TorusElement::shifted(int e) const {
    TorusElement r = *this;
    for (auto& [a, c] : r.terms_) c = c.shifted(e);
    return r;
}

TorusElement TorusElement::bar() const {
    TorusElement r = *this;
    for (auto& [a, c] : r.terms_) c = c.bar();
    return r;
}

TorusElement TorusElement::power(unsigned k) const {
    TorusElement r = one(form_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

TorusElement TorusElement::monomial_inverse() const {
    if (!is_invertible_monomial()) throw InexactDivision("element is not an invertible monomial");
    const auto& [a, c] = *terms_.begin();
    ExponentVector neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    // X^(a) X^(-a) = X^(0), and c^-1 = +-v^-k.
    const int k = c.min_exponent();
    return monomial(form_, std::move(neg), QuantumScalar::v_power(-k, c.coefficient(k)));
}

namespace {

// Long division in the twisted group ring with respect to lex order on Z^n,
// which is a group order, so leading terms multiply.
TorusElement divide(const TorusElement& divisor, const TorusElement& r, bool left) {
    if (divisor.is_zero()) throw InexactDivision("division by zero element");
    if (!same_form(divisor.form(), r.form())) throw FormMismatch("division over different forms");
    const SkewForm& L = *divisor.form();
    TorusElement quot = TorusElement::zero(divisor.form());
    if (r.is_zero()) return quot;

    const auto& [ld, cd] = divisor.leading_term();
    const ExponentVector& lowest_d = divisor.terms().begin()->first;
    ExponentVector bound = r.terms().begin()->first;
    for (std::size_t i = 0; i < bound.size(); ++i) bound[i] -= lowest_d[i];

    TorusElement rem = r;
    constexpr int kMaxSteps = 1'000'000;
    for (int step = 0; !rem.is_zero(); ++step) {
        if (step == kMaxSteps) throw InexactDivision("division did not terminate");
        const auto& [lr, cr] = rem.leading_term();
        ExponentVector lq(lr.size());
        for (std::size_t i = 0; i < lq.size(); ++i) lq[i] = lr[i] - ld[i];
        if (lq < bound) throw InexactDivision("quotient is not a Laurent element");
        const long twist = left ? L.pairing(ld, lq) : L.pairing(lq, ld);
        auto qc = cr.shifted(static_cast<int>(-twist)).divide_exact(cd);
        if (!qc) throw InexactDivision("leading coefficient does not divide");
        TorusElement t = TorusElement::monomial(divisor.form(), lq, *qc);
        quot += t;
        rem -= left ? divisor * t : t * divisor;
    }
    return quot;
}

}  // namespace

TorusElement TorusElement::left_divide(const TorusElement& r) const { return divide(*this, r, true); }

TorusElement TorusElement::right_divide(const TorusElement& r) const { return divide(*this, r, false); }

LaurentPolynomial TorusElement::specialize_classical() const {
    LaurentPolynomial p;
    for (const auto& [a, c] : terms_) {
        Integer s = c.at_one();
        if (s != 0) p.emplace(a, s);
    }
    return p;
}

bool TorusElement::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_nonnegative(); });
}

std::string TorusElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (c != QuantumScalar(1)) s += "[" + c.to_string() + "]";
        s += "X^" + exponent_to_string(a);
    }
    return s;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
    return same_form(a.form_, b.form_) && a.terms_ == b.terms_;
}

std::optional<int> detect_q_proportional(const TorusElement& x, const TorusElement& y) {
    if (!same_form(x.form(), y.form())) throw FormMismatch("detect_q_proportional over different forms");
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero() ? std::optional<int>(0) : std::nullopt;
    if (x.size() != y.size()) return std::nullopt;
    const auto& [ax, cx] = *x.terms().begin();
    const auto& [ay, cy] = *y.terms().begin();
    if (ax != ay) return std::nullopt;
    const int m = cx.min_exponent() - cy.min_exponent();
    if (y.shifted(m) == x) return m;
    return std::nullopt;
}

std::optional<int> q_commutation_exponent(const TorusElement& a, const TorusElement& b) {
    return detect_q_proportional(a * b, b * a);
}

}  // namespace qcluster
