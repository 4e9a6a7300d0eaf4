#include "harmonia/algebra.hpp"

#include "harmonia/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace harmonia {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_finite(Complex c)
{
    if (!finite(c)) {
        throw Error(ErrorCode::InvalidArgument, "non-finite coefficient in expression");
    }
}

double binomial(int n, int k)
{
    double b = 1.0;
    for (int i = 1; i <= k; ++i) {
        b = b * (n - k + i) / i;
    }
    return b;
}

} // namespace

// ---------------------------------------------------------------------------
// LogLaurentExpr

LogLaurentExpr::LogLaurentExpr(std::initializer_list<LogLaurentTerm> terms, double cut_angle)
    : cut_angle_(cut_angle)
{
    for (const auto& t : terms) {
        add_term(t.coeff, t.power, t.logpow);
    }
}

LogLaurentExpr::LogLaurentExpr(const std::vector<LogLaurentTerm>& terms, double cut_angle)
    : cut_angle_(cut_angle)
{
    for (const auto& t : terms) {
        add_term(t.coeff, t.power, t.logpow);
    }
}

LogLaurentExpr LogLaurentExpr::constant(Complex c, double cut_angle)
{
    return monomial(c, 0, 0, cut_angle);
}

LogLaurentExpr LogLaurentExpr::monomial(Complex c, int power, int logpow, double cut_angle)
{
    LogLaurentExpr e(cut_angle);
    e.add_term(c, power, logpow);
    return e;
}

std::vector<LogLaurentTerm> LogLaurentExpr::term_list() const
{
    std::vector<LogLaurentTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
        out.push_back({c, key.first, key.second});
    }
    return out;
}

bool LogLaurentExpr::has_log() const noexcept
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.second > 0; });
}

Complex LogLaurentExpr::coefficient(int power, int logpow) const
{
    auto it = terms_.find({power, logpow});
    return it == terms_.end() ? Complex{} : it->second;
}

int LogLaurentExpr::max_logpow() const noexcept
{
    int m = 0;
    for (const auto& kv : terms_) {
        m = std::max(m, kv.first.second);
    }
    return m;
}

LogLaurentExpr LogLaurentExpr::with_cut(double cut_angle) const
{
    LogLaurentExpr e = *this;
    e.cut_angle_ = cut_angle;
    return e;
}

LogLaurentExpr LogLaurentExpr::shifted(int shift) const
{
    LogLaurentExpr e(cut_angle_);
    for (const auto& [key, c] : terms_) {
        e.terms_[{key.first + shift, key.second}] = c;
    }
    return e;
}

LogLaurentExpr LogLaurentExpr::reciprocal_argument() const
{
    LogLaurentExpr e(cut_angle_);
    for (const auto& [key, c] : terms_) {
        const double sign = (key.second % 2 == 0) ? 1.0 : -1.0;
        e.terms_[{-key.first, key.second}] = sign * c;
    }
    return e;
}

LogLaurentExpr LogLaurentExpr::conjugate_reflect() const
{
    LogLaurentExpr e(kTwoPi - cut_angle_);
    for (const auto& [key, c] : terms_) {
        e.terms_[key] = std::conj(c);
    }
    return e;
}

LogLaurentExpr& LogLaurentExpr::add_term(Complex c, int power, int logpow)
{
    require_finite(c);
    if (logpow < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative log power");
    }
    auto& slot = terms_[{power, logpow}];
    slot += c;
    if (std::abs(slot) < kDropThreshold) {
        terms_.erase({power, logpow});
    }
    return *this;
}

LogLaurentExpr& LogLaurentExpr::operator+=(const LogLaurentExpr& rhs)
{
    for (const auto& [key, c] : rhs.terms_) {
        terms_[key] += c;
    }
    normalize();
    return *this;
}

LogLaurentExpr& LogLaurentExpr::operator-=(const LogLaurentExpr& rhs)
{
    for (const auto& [key, c] : rhs.terms_) {
        terms_[key] -= c;
    }
    normalize();
    return *this;
}

LogLaurentExpr& LogLaurentExpr::operator*=(Complex s)
{
    require_finite(s);
    for (auto& kv : terms_) {
        kv.second *= s;
    }
    normalize();
    return *this;
}

LogLaurentExpr operator*(const LogLaurentExpr& lhs, const LogLaurentExpr& rhs)
{
    LogLaurentExpr out(lhs.cut_angle_);
    for (const auto& [a, ca] : lhs.terms_) {
        for (const auto& [b, cb] : rhs.terms_) {
            out.terms_[{a.first + b.first, a.second + b.second}] += ca * cb;
        }
    }
    out.normalize();
    return out;
}

void LogLaurentExpr::normalize()
{
    std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kDropThreshold; });
}

// ---------------------------------------------------------------------------
// BivariateLaurentExpr

BivariateLaurentExpr::BivariateLaurentExpr(std::initializer_list<Term> terms)
{
    for (const auto& t : terms) {
        add_term(t.coeff, t.zpow, t.zetapow);
    }
}

BivariateLaurentExpr::BivariateLaurentExpr(const std::vector<Term>& terms)
{
    for (const auto& t : terms) {
        add_term(t.coeff, t.zpow, t.zetapow);
    }
}

BivariateLaurentExpr BivariateLaurentExpr::constant(Complex c)
{
    BivariateLaurentExpr e;
    e.add_term(c, 0, 0);
    return e;
}

std::vector<BivariateLaurentExpr::Term> BivariateLaurentExpr::term_list() const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
        out.push_back({c, key.first, key.second});
    }
    return out;
}

BivariateLaurentExpr& BivariateLaurentExpr::add_term(Complex c, int zpow, int zetapow)
{
    require_finite(c);
    auto& slot = terms_[{zpow, zetapow}];
    slot += c;
    if (std::abs(slot) < kDropThreshold) {
        terms_.erase({zpow, zetapow});
    }
    return *this;
}

Complex BivariateLaurentExpr::eval(Complex z, Complex zeta) const
{
    Complex sum{};
    for (const auto& [key, c] : terms_) {
        sum += c * ipow(z, key.first) * ipow(zeta, key.second);
    }
    return sum;
}

BivariateLaurentExpr& BivariateLaurentExpr::operator+=(const BivariateLaurentExpr& rhs)
{
    for (const auto& [key, c] : rhs.terms_) {
        terms_[key] += c;
    }
    normalize();
    return *this;
}

BivariateLaurentExpr& BivariateLaurentExpr::operator*=(Complex s)
{
    require_finite(s);
    for (auto& kv : terms_) {
        kv.second *= s;
    }
    normalize();
    return *this;
}

BivariateLaurentExpr operator*(const BivariateLaurentExpr& lhs, const BivariateLaurentExpr& rhs)
{
    BivariateLaurentExpr out;
    for (const auto& [a, ca] : lhs.terms_) {
        for (const auto& [b, cb] : rhs.terms_) {
            out.terms_[{a.first + b.first, a.second + b.second}] += ca * cb;
        }
    }
    out.normalize();
    return out;
}

void BivariateLaurentExpr::normalize()
{
    std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kDropThreshold; });
}

// ---------------------------------------------------------------------------
// Free functions

Complex ipow(Complex z, int k)
{
    if (k == 0) {
        return {1.0, 0.0};
    }
    if (z == Complex{}) {
        if (k < 0) {
            throw Error(ErrorCode::Domain, "negative power of zero");
        }
        return {};
    }
    unsigned n = static_cast<unsigned>(k < 0 ? -k : k);
    Complex result{1.0, 0.0};
    Complex base = z;
    while (n != 0) {
        if (n & 1U) {
            result *= base;
        }
        base *= base;
        n >>= 1U;
    }
    return k < 0 ? Complex{1.0, 0.0} / result : result;
}

double branch_argument(double theta, double cut_angle) noexcept
{
    double t = std::fmod(theta - cut_angle, kTwoPi);
    if (t > 0.0) {
        t -= kTwoPi;
    }
    if (t <= -kTwoPi) {
        t += kTwoPi;
    }
    return cut_angle + t;
}

double distance_to_cut(double theta, double cut_angle) noexcept
{
    double d = std::fmod(std::abs(theta - cut_angle), kTwoPi);
    return std::min(d, kTwoPi - d);
}

Complex branch_log(Complex z, double cut_angle)
{
    if (z == Complex{}) {
        throw Error(ErrorCode::Domain, "log of zero");
    }
    return {std::log(std::abs(z)), branch_argument(std::arg(z), cut_angle)};
}

Complex eval(const LogLaurentExpr& e, Complex z, double cut_margin)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::Domain, "non-finite evaluation point");
    }
    if (z == Complex{}) {
        throw Error(ErrorCode::Domain, "expression evaluated at z = 0");
    }
    Complex log_z{};
    if (e.has_log()) {
        const double arg = std::arg(z);
        if (distance_to_cut(arg, e.cut_angle()) < cut_margin) {
            throw Error(ErrorCode::CutProximity,
                        "evaluation point within " + std::to_string(cut_margin) +
                            " rad of the branch cut");
        }
        log_z = {std::log(std::abs(z)), branch_argument(arg, e.cut_angle())};
    }
    Complex sum{};
    for (const auto& [key, c] : e.terms()) {
        Complex term = c * ipow(z, key.first);
        for (int j = 0; j < key.second; ++j) {
            term *= log_z;
        }
        sum += term;
    }
    return sum;
}

LogLaurentExpr differentiate(const LogLaurentExpr& e)
{
    LogLaurentExpr d(e.cut_angle());
    for (const auto& [key, c] : e.terms()) {
        const auto [k, m] = key;
        if (k != 0) {
            d.add_term(c * static_cast<double>(k), k - 1, m);
        }
        if (m > 0) {
            d.add_term(c * static_cast<double>(m), k - 1, m - 1);
        }
    }
    return d;
}

LogLaurentExpr antiderivative_over_arg(const LogLaurentExpr& e)
{
    LogLaurentExpr a(e.cut_angle());
    for (const auto& [key, c] : e.terms()) {
        const auto [k, m] = key;
        if (k == 0) {
            // integral of (log z)^m / z
            a.add_term(c / static_cast<double>(m + 1), 0, m + 1);
            continue;
        }
        // integral of z^{k-1} (log z)^m = z^k sum_j (-1)^j m!/(m-j)! (log z)^{m-j} / k^{j+1}
        double coef = 1.0 / k;
        for (int j = 0; j <= m; ++j) {
            a.add_term(c * coef, k, m - j);
            coef *= -static_cast<double>(m - j) / k;
        }
    }
    return a;
}

LogLaurentExpr restrict_bivariate_to_circle(const BivariateLaurentExpr& phi, double cut_angle)
{
    LogLaurentExpr e(cut_angle);
    for (const auto& [key, c] : phi.terms()) {
        e.add_term(c, key.first - key.second, 0);
    }
    return e;
}

LogLaurentExpr restrict_to_ray(const LogLaurentExpr& e, double theta, double cut_margin)
{
    double angle = theta;
    if (e.has_log()) {
        if (distance_to_cut(theta, e.cut_angle()) < cut_margin) {
            throw Error(ErrorCode::CutProximity, "ray lies on the branch cut");
        }
        angle = branch_argument(theta, e.cut_angle());
    }
    const Complex i_theta{0.0, angle};
    LogLaurentExpr out(kDefaultCutAngle);
    for (const auto& [key, c] : e.terms()) {
        const auto [k, m] = key;
        const Complex rotated = c * std::polar(1.0, k * angle);
        // (log rho + i theta)^m = sum_j C(m, j) (i theta)^{m-j} (log rho)^j
        for (int j = 0; j <= m; ++j) {
            Complex w = rotated * binomial(m, j);
            for (int p = 0; p < m - j; ++p) {
                w *= i_theta;
            }
            out.add_term(w, k, j);
        }
    }
    return out;
}

Complex integrate_over_arg(const LogLaurentExpr& e, double from, double to)
{
    if (from <= 0.0 || to <= 0.0) {
        throw Error(ErrorCode::Domain, "radial integration limits must be positive");
    }
    if (from == to) {
        return {};
    }
    const LogLaurentExpr a = antiderivative_over_arg(e.with_cut(kDefaultCutAngle));
    return eval(a, Complex{to, 0.0}) - eval(a, Complex{from, 0.0});
}

bool equivalent(const LogLaurentExpr& lhs, const LogLaurentExpr& rhs, double rel_tol, double abs_tol)
{
    const auto& a = lhs.terms();
    const auto& b = rhs.terms();
    for (const auto& [key, ca] : a) {
        auto it = b.find(key);
        const Complex cb = it == b.end() ? Complex{} : it->second;
        const double diff = std::abs(ca - cb);
        if (diff > abs_tol && diff > rel_tol * std::max(std::abs(ca), std::abs(cb))) {
            return false;
        }
    }
    for (const auto& [key, cb] : b) {
        if (a.find(key) == a.end() && std::abs(cb) > abs_tol) {
            return false;
        }
    }
    return true;
}

} // namespace harmonia
