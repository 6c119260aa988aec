#ifndef EISEN_SPECIAL_FUNCTIONS_HPP
#define EISEN_SPECIAL_FUNCTIONS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "arithmetic.hpp"
#include "errors.hpp"

namespace eisen
{

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// Exclusion radius around the poles of gamma, zeta and xi.
inline constexpr double special_pole_radius = 1e-9;

// Accuracy targets for the iterative evaluators (zeta, bessel_k).
class AccuracyPolicy
{
public:
    AccuracyPolicy() = default;
    AccuracyPolicy(double abs_error, double rel_error, int max_terms)
        : target_abs_error_(abs_error), target_rel_error_(rel_error), max_terms_(max_terms)
    {
        if (!(abs_error > 0 && abs_error < 1) || !(rel_error > 0 && rel_error < 1)) {
            throw PreconditionError("AccuracyPolicy: target errors must lie in (0, 1)");
        }
        if (max_terms < 8) {
            throw PreconditionError("AccuracyPolicy: max_terms must be at least 8");
        }
    }

    double target_abs_error() const noexcept { return target_abs_error_; }
    double target_rel_error() const noexcept { return target_rel_error_; }
    int max_terms() const noexcept { return max_terms_; }

private:
    double target_abs_error_ = 1e-16;
    double target_rel_error_ = 1e-15;
    int max_terms_ = 1 << 14;
};

namespace detail
{

inline bool finite(const Complex &z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex checked(const Complex &z, const char *what)
{
    if (!finite(z)) {
        throw OverflowError(std::string(what) + ": result not representable in double precision");
    }
    return z;
}

// sin(pi*s) with the real part reduced first, so that the zeros at the
// integers stay exact.
inline Complex sin_pi(const Complex &s)
{
    const double n = std::round(s.real());
    const Complex r(s.real() - n, s.imag());
    const Complex v = std::sin(pi * r);
    return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

// Godfrey's coefficients for g = 607/128, n = 15.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_coeff = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5,
};

// B_{2k}/(2k)! for k = 1..20.
inline constexpr std::array<double, 20> bernoulli_over_factorial = {
    8.3333333333333333333e-2,   -1.3888888888888888889e-3,  3.3068783068783068783e-5,
    -8.2671957671957671958e-7,  2.0876756987868098979e-8,   -5.2841901386874931848e-10,
    1.3382536530684678833e-11,  -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.174868698558061873e-16,  5.5090028283602295152e-18,  -1.3954464685812523341e-19,
    3.5347070396294674717e-21,  -8.9535174270375468504e-23, 2.2679524523376830603e-24,
    -5.7447906688722024453e-26, 1.4551724756148649019e-27,  -3.6859949406653101782e-29,
    9.336734257095044672e-31,   -2.3650224157006299346e-32,
};

// Lanczos sum for Re(s) >= 1/2.
inline Complex gamma_lanczos(const Complex &s)
{
    const Complex z = s - 1.0;
    Complex series = lanczos_coeff[0];
    for (std::size_t k = 1; k < lanczos_coeff.size(); ++k) {
        series += lanczos_coeff[k] / (z + static_cast<double>(k));
    }
    const Complex t = z + lanczos_g + 0.5;
    return std::sqrt(2 * pi) * std::exp((z + 0.5) * std::log(t) - t) * series;
}

// Euler-Maclaurin for zeta on Re(s) >= 0 (any s != 1 in principle; the
// cancellation in the direct sum grows like N^{-Re s} for Re(s) < 0).
inline Complex zeta_euler_maclaurin(const Complex &s, const AccuracyPolicy &acc)
{
    const int n_direct = std::min(acc.max_terms(), 15 + static_cast<int>(std::ceil(std::abs(s))));
    const double big_n = n_direct;

    Complex sum = 0.0;
    for (int n = n_direct - 1; n >= 1; --n) {
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    }
    const Complex n_pow = std::exp(-s * std::log(big_n)); // N^{-s}
    sum += n_pow * big_n / (s - 1.0) + 0.5 * n_pow;

    // T_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    Complex rising = s;
    Complex power = n_pow / big_n;
    const int max_corr = std::min<int>(static_cast<int>(bernoulli_over_factorial.size()), acc.max_terms());
    for (int k = 1; k <= max_corr; ++k) {
        const Complex term = bernoulli_over_factorial[k - 1] * rising * power;
        sum += term;
        const double tol = std::max(acc.target_abs_error(), acc.target_rel_error() * std::abs(sum));
        if (std::abs(term) < tol) {
            return sum;
        }
        rising *= (s + (2.0 * k - 1)) * (s + 2.0 * k);
        power /= big_n * big_n;
    }
    throw ConvergenceError("zeta: Euler-Maclaurin corrections did not converge");
}

} // namespace detail

/// Gamma function on the complex plane.
///
/// Lanczos approximation (g = 607/128) for Re(s) >= 1/2 and the reflection
/// formula below that. Positive integers up to 170 return the exact factorial.
/// Relative error is about 1e-14 for |s| <= 50.
inline Complex gamma(const Complex &s)
{
    const double n = std::round(s.real());
    if (n <= 0 && std::abs(s - Complex(n, 0)) <= special_pole_radius) {
        throw PoleError("gamma: pole at nonpositive integer " + std::to_string(static_cast<long>(n)));
    }
    if (s.imag() == 0 && s.real() > 170) {
        throw OverflowError("gamma: real argument above 170");
    }
    if (s.imag() == 0 && s.real() == n && n >= 1) {
        double f = 1;
        for (int k = 2; k < static_cast<int>(n); ++k) {
            f *= k;
        }
        return f;
    }
    if (s.real() < 0.5) {
        return detail::checked(pi / (detail::sin_pi(s) * detail::gamma_lanczos(1.0 - s)), "gamma");
    }
    return detail::checked(detail::gamma_lanczos(s), "gamma");
}

// Keeps eisen::gamma(2.5) from resolving to the C library's ::gamma, which is
// log-gamma on glibc.
inline Complex gamma(double s) { return gamma(Complex(s, 0.0)); }

/// Riemann zeta function, analytically continued.
///
/// Euler-Maclaurin summation with N = 15 + ceil(|s|) direct terms and up to
/// twenty Bernoulli corrections on Re(s) >= 0; the functional equation
/// zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s) on Re(s) < 0.
inline Complex zeta(const Complex &s, const AccuracyPolicy &acc = {})
{
    if (std::abs(s - 1.0) <= special_pole_radius) {
        throw PoleError("zeta: pole at s = 1");
    }
    if (s.real() >= 0) {
        return detail::checked(detail::zeta_euler_maclaurin(s, acc), "zeta");
    }
    const Complex one_minus = 1.0 - s;
    const Complex factor = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(pi)) *
                           detail::sin_pi(0.5 * s) * gamma(one_minus);
    return detail::checked(factor * detail::zeta_euler_maclaurin(one_minus, acc), "zeta");
}

/// Completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s), composed directly.
/// The symmetry xi(s) = xi(1-s) is only used inside the pole radius of
/// Gamma(s/2) at s = -2, -4, ..., where the composition is 0 * infinity.
inline Complex xi_completed(const Complex &s, const AccuracyPolicy &acc = {})
{
    if (std::abs(s) <= special_pole_radius) {
        throw PoleError("xi: pole at s = 0");
    }
    if (std::abs(s - 1.0) <= special_pole_radius) {
        throw PoleError("xi: pole at s = 1");
    }
    // Gamma(s/2) has poles at s = -2, -4, ... cancelled by trivial zeros of zeta.
    const double half_re = 0.5 * s.real();
    const double nearest = std::round(half_re);
    if (nearest < 0 && std::abs(0.5 * s - Complex(nearest, 0)) <= special_pole_radius) {
        // xi is entire away from {0, 1}; evaluate through the reflected point.
        return xi_completed(1.0 - s, acc);
    }
    const Complex v = std::exp(-0.5 * s * std::log(pi)) * gamma(0.5 * s) * zeta(s, acc);
    return detail::checked(v, "xi");
}

/// Divisor power sum sigma_s(n) = sum_{d | n} d^s, 1 <= n <= 10^12.
/// Divisors are summed in ascending order; real s uses real powers.
inline Complex sigma_power(std::uint64_t n, const Complex &s)
{
    if (n < 1 || n > 1'000'000'000'000ULL) {
        throw DomainError("sigma_power: n must lie in [1, 10^12]");
    }
    Complex sum = 0.0;
    for (auto d : arith::divisors(n)) {
        const double dd = static_cast<double>(d);
        if (s.imag() == 0) {
            sum += std::pow(dd, s.real());
        } else {
            sum += std::exp(s * std::log(dd));
        }
    }
    return detail::checked(sum, "sigma_power");
}

/// Modified Bessel function of the second kind, K_order(y), for complex order.
///
/// Trapezoid rule on K_v(y) = int_0^inf exp(-y cosh t) cosh(v t) dt. The
/// integrand decays double-exponentially, so the rule converges
/// geometrically as the step halves. Truncation T is taken where the envelope
/// exp(-y cosh t) cosh(Re v t) falls below 1e-18 of its maximum. The step is
/// halved until successive sums differ by less than sqrt(target_rel_error)
/// times the envelope integral, and then once more; the resulting absolute
/// error is below target_rel_error times the envelope integral (which equals
/// K_{Re v}(y) and is >= |K_v(y)|).
inline Complex bessel_k(const Complex &order, double y, const AccuracyPolicy &acc = {})
{
    if (!(y > 0) || !std::isfinite(y)) {
        throw DomainError("bessel_k: argument y must be positive");
    }
    if (std::abs(order) > 100) {
        throw DomainError("bessel_k: |order| must not exceed 100");
    }
    const double a = std::abs(order.real());

    // log of the envelope exp(-y cosh t) cosh(a t), up to the factor 1/2.
    auto log_env = [&](double t) { return -y * std::cosh(t) + a * t; };

    // Peak of the envelope: y sinh t = a.
    const double t_peak = a > 0 ? std::asinh(a / y) : 0.0;
    const double log_peak = std::max(log_env(t_peak), -y);
    const double cut = std::log(1e-18);
    double t_max = std::max(t_peak, 1.0);
    while (log_env(t_max) - log_peak > cut) {
        t_max *= 1.25;
    }

    auto f = [&](double t) {
        const Complex vt = order * t;
        const double ych = y * std::cosh(t);
        return 0.5 * (std::exp(vt - ych) + std::exp(-vt - ych));
    };
    auto env = [&](double t) {
        return 0.5 * (std::exp(a * t - y * std::cosh(t)) + std::exp(-a * t - y * std::cosh(t)));
    };

    int nodes = 16;
    double h = t_max / nodes;
    Complex sum = 0.5 * f(0.0);
    double env_sum = 0.5 * env(0.0);
    for (int k = 1; k <= nodes; ++k) {
        sum += f(k * h);
        env_sum += env(k * h);
    }
    Complex estimate = h * sum;

    const double gate = std::sqrt(acc.target_rel_error());
    bool settled = false;
    while (nodes * 2 <= acc.max_terms()) {
        Complex mid = 0.0;
        double env_mid = 0.0;
        for (int k = 0; k < nodes; ++k) {
            const double t = (k + 0.5) * h;
            mid += f(t);
            env_mid += env(t);
        }
        sum += mid;
        env_sum += env_mid;
        nodes *= 2;
        h *= 0.5;
        const Complex refined = h * sum;
        const double scale = std::max(h * env_sum, acc.target_abs_error());
        const double diff = std::abs(refined - estimate);
        estimate = refined;
        if (settled) {
            return detail::checked(estimate, "bessel_k");
        }
        if (diff <= gate * scale) {
            settled = true;
        }
    }
    if (settled) {
        return detail::checked(estimate, "bessel_k");
    }
    throw ConvergenceError("bessel_k: trapezoid rule did not settle within max_terms nodes");
}

} // namespace eisen

#endif
