#ifndef EISEN_EISENSTEIN_HPP
#define EISEN_EISENSTEIN_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "arithmetic.hpp"
#include "errors.hpp"
#include "special_functions.hpp"

// The real-analytic Eisenstein series for SL2(Z) on the upper half-plane,
//
//   E(x+iy, s) = 1/2 sum_{(m,n)=1} y^s / |m(x+iy) + n|^{2s},
//
// i.e. the sum over coprime pairs taken up to sign (one term per coset of
// the stabilizer of infinity). This is the normalization whose constant term
// is y^s + xi(2s-1)/xi(2s) y^{1-s}; the plain sum over all coprime pairs is
// twice it. Evaluated by the coprime lattice sum (Re s > 1) and by its Fourier
// expansion a_0 + sum_{n != 0} a_n(y,s) e^{2 pi i n x}, which continues it to
// the whole s-plane away from the poles.
namespace eisen
{

class HalfPlanePoint
{
public:
    HalfPlanePoint(double x, double y) : x_(x), y_(y)
    {
        if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0)) {
            throw DomainError("HalfPlanePoint: need finite x and y > 0");
        }
    }

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    Complex z() const noexcept { return {x_, y_}; }

private:
    double x_;
    double y_;
};

// The spectral variable s. Operations that divide by xi(2s) or xi(2s-1)
// refuse values within pole_exclusion_radius of 1/2 and 1.
class SpectralParameter
{
public:
    SpectralParameter(Complex value, double pole_exclusion_radius = 1e-6)
        : value_(value), radius_(pole_exclusion_radius)
    {
        if (!detail::finite(value)) {
            throw DomainError("SpectralParameter: non-finite value");
        }
        if (!(pole_exclusion_radius >= 0)) {
            throw PreconditionError("SpectralParameter: exclusion radius must be nonnegative");
        }
    }

    SpectralParameter(double value, double pole_exclusion_radius = 1e-6)
        : SpectralParameter(Complex(value, 0.0), pole_exclusion_radius)
    {}

    Complex value() const noexcept { return value_; }
    double pole_exclusion_radius() const noexcept { return radius_; }

    SpectralParameter reflected() const { return {1.0 - value_, radius_}; }

    void require_off_poles(const char *op) const
    {
        for (double p : {0.5, 1.0}) {
            if (std::abs(value_ - p) <= radius_) {
                throw PoleError(std::string(op) + ": s within exclusion radius of " +
                                (p == 0.5 ? "1/2" : "1"));
            }
        }
    }

private:
    Complex value_;
    double radius_;
};

struct TruncationPolicy
{
    int lattice_radius = 2000;
    int fourier_terms = 30;
    int quadrature_nodes = 128;
    // Keep adding Fourier modes while the last one exceeds
    // target_error * max(1, |E|), up to max_fourier_terms.
    bool auto_escalate = true;
    double target_error = 1e-16;
    int max_fourier_terms = 2000;

    void validate() const
    {
        if (lattice_radius < 10) {
            throw PreconditionError("TruncationPolicy: lattice_radius must be at least 10");
        }
        if (fourier_terms < 1) {
            throw PreconditionError("TruncationPolicy: fourier_terms must be at least 1");
        }
        if (quadrature_nodes < 16) {
            throw PreconditionError("TruncationPolicy: quadrature_nodes must be at least 16");
        }
        if (!(target_error > 0) || max_fourier_terms < fourier_terms) {
            throw PreconditionError("TruncationPolicy: bad escalation settings");
        }
    }
};

// A truncated series value together with an estimate of the omitted part.
struct Evaluation
{
    Complex value;
    double tail_bound = 0;
    int terms = 0; // lattice radius or number of Fourier modes actually used
};

enum class IntegrandSource { lattice, fourier };

namespace detail
{

// One term y^s / |m z + n|^{2s} of the unhalved coprime sum.
inline Complex lattice_term(long long m, long long n, const Complex &z, const Complex &s)
{
    const double u = static_cast<double>(m) * z.real() + static_cast<double>(n);
    const double v = static_cast<double>(m) * z.imag();
    return std::exp(s * std::log(z.imag()) - s * std::log(u * u + v * v));
}

// a_n for n >= 1 given a precomputed xi(2s).
inline Complex nonconstant_coefficient(std::uint64_t n, double y, const Complex &s, const Complex &xi_2s)
{
    const double nd = static_cast<double>(n);
    const Complex order = s - 0.5;
    const Complex k = bessel_k(order, 2 * pi * nd * y);
    const Complex npow = std::exp(order * std::log(nd));
    return 2.0 * npow * sigma_power(n, 1.0 - 2.0 * s) * std::sqrt(y) * k / xi_2s;
}

inline Complex constant_coefficient(double y, const Complex &s, const Complex &ratio)
{
    const double ly = std::log(y);
    return std::exp(s * ly) + ratio * std::exp((1.0 - s) * ly);
}

// min over the boundary of the unit max-norm square of |a z + b|^2.
inline double lattice_shell_constant(double x, double y)
{
    double c = y * y + std::pow(std::max(0.0, std::abs(x) - 1.0), 2);
    const double r2 = x * x + y * y;
    const double a_star = -x / r2;
    if (std::abs(a_star) <= 1) {
        c = std::min(c, y * y / r2);
    } else {
        c = std::min({c, (x + 1) * (x + 1) + y * y, (1 - x) * (1 - x) + y * y});
    }
    return c;
}

} // namespace detail

/// Partial coprime lattice sum over max(|m|, |n|) <= lattice_radius, halved.
///
/// Pairs (m, n) and (-m, -n) contribute equally, so the half-sum is the m > 0
/// half-plane plus the single m = 0 coset {(0, 1), (0, -1)}. The tail bound drops the gcd
/// condition and uses |mz + n|^2 >= c k^2 on the shell max(|m|,|n|) = k, with
/// 8k points per shell:
///
///   tail <= 4 y^sigma c^{-sigma} R^{2 - 2 sigma} / (2 sigma - 2)
///
/// (half of the full-lattice bound).
inline Evaluation eval_lattice_sum(const HalfPlanePoint &z, const SpectralParameter &sp,
                                   const TruncationPolicy &t = {})
{
    t.validate();
    const Complex s = sp.value();
    const double sigma = s.real();
    const double tau = s.imag();
    if (sigma <= 1) {
        throw DivergenceError("eval_lattice_sum: the lattice sum needs Re(s) > 1");
    }
    const int radius = t.lattice_radius;
    const double x = z.x();
    const double y = z.y();

    std::vector<char> coprime(2 * static_cast<std::size_t>(radius) + 1);
    double total_re = 0;
    double total_im = 0;
    for (int m = 1; m <= radius; ++m) {
        std::fill(coprime.begin(), coprime.end(), 1);
        for (const auto &[p, e] : arith::factorize(static_cast<std::uint64_t>(m))) {
            const int ip = static_cast<int>(p);
            for (int n = -(radius / ip) * ip; n <= radius; n += ip) {
                coprime[n + radius] = 0;
            }
        }
        const double mx = m * x;
        const double my2 = (m * y) * (m * y);
        double row_re = 0;
        double row_im = 0;
        if (tau == 0) {
            for (int n = -radius; n <= radius; ++n) {
                if (coprime[n + radius]) {
                    const double u = mx + n;
                    row_re += std::pow(u * u + my2, -sigma);
                }
            }
        } else {
            for (int n = -radius; n <= radius; ++n) {
                if (coprime[n + radius]) {
                    const double u = mx + n;
                    const double l = std::log(u * u + my2);
                    const double mag = std::exp(-sigma * l);
                    row_re += mag * std::cos(tau * l);
                    row_im -= mag * std::sin(tau * l);
                }
            }
        }
        total_re += row_re;
        total_im += row_im;
    }
    const Complex ys = std::exp(s * std::log(y));
    const Complex value = ys * (1.0 + Complex(total_re, total_im));

    const double c = detail::lattice_shell_constant(x, y);
    const double tail = 4 * std::pow(y, sigma) * std::pow(c, -sigma) *
                        std::pow(static_cast<double>(radius), 2 - 2 * sigma) / (2 * sigma - 2);
    return {detail::checked(value, "eval_lattice_sum"), tail, radius};
}

/// xi(2s - 1) / xi(2s), the coefficient of y^{1-s} in the constant term and
/// the factor in E(z, s) = phi(s) E(z, 1 - s).
inline Complex scattering_ratio(const SpectralParameter &sp)
{
    sp.require_off_poles("scattering_ratio");
    const Complex s = sp.value();
    return detail::checked(xi_completed(2.0 * s - 1.0) / xi_completed(2.0 * s), "scattering_ratio");
}

/// Closed-form Fourier coefficient a_n(y, s); a_{-n} = a_n.
///
///   a_0 = y^s + xi(2s-1)/xi(2s) y^{1-s}
///   a_n = 2 |n|^{s-1/2} sigma_{1-2s}(|n|) sqrt(y) K_{s-1/2}(2 pi |n| y) / xi(2s)
inline Complex fourier_coefficient(long long n, double y, const SpectralParameter &sp)
{
    if (!(y > 0)) {
        throw DomainError("fourier_coefficient: y must be positive");
    }
    sp.require_off_poles("fourier_coefficient");
    const Complex s = sp.value();
    if (n == 0) {
        return detail::checked(detail::constant_coefficient(y, s, scattering_ratio(sp)), "fourier_coefficient");
    }
    const auto abs_n = static_cast<std::uint64_t>(n < 0 ? -n : n);
    return detail::checked(detail::nonconstant_coefficient(abs_n, y, s, xi_completed(2.0 * s)),
                           "fourier_coefficient");
}

/// Fourier expansion a_0 + 2 sum_{n=1}^{N} a_n cos(2 pi n x).
///
/// N starts at fourier_terms and grows while auto_escalate is set and the last
/// mode still exceeds target_error * max(1, |E|). x is reduced mod 1 first.
/// The tail bound sums the moduli of the next modes until they drop below
/// 1e-20 * max(1, |E|), then closes with the geometric factor e^{-2 pi y}.
inline Evaluation eval_fourier(const HalfPlanePoint &z, const SpectralParameter &sp,
                               const TruncationPolicy &t = {})
{
    t.validate();
    sp.require_off_poles("eval_fourier");
    const Complex s = sp.value();
    const double y = z.y();
    const double x = z.x() - std::floor(z.x());

    const Complex xi_2s = xi_completed(2.0 * s);
    const Complex ratio = xi_completed(2.0 * s - 1.0) / xi_2s;
    Complex value = detail::constant_coefficient(y, s, ratio);

    int n = 0;
    double last = 0;
    while (true) {
        ++n;
        const Complex mode = 2.0 * detail::nonconstant_coefficient(n, y, s, xi_2s);
        value += mode * std::cos(2 * pi * n * x);
        last = std::abs(mode);
        if (n < t.fourier_terms) {
            continue;
        }
        if (!t.auto_escalate || n >= t.max_fourier_terms ||
            last <= t.target_error * std::max(1.0, std::abs(value))) {
            break;
        }
    }

    const double scale = std::max(1.0, std::abs(value));
    const double q = std::exp(-2 * pi * y);
    double tail = 0;
    for (int k = n + 1; k <= n + 64; ++k) {
        last = std::abs(2.0 * detail::nonconstant_coefficient(k, y, s, xi_2s));
        tail += last;
        if (last < 1e-20 * scale) {
            break;
        }
    }
    tail += last * q / (1 - q);
    return {detail::checked(value, "eval_fourier"), tail, n};
}

/// |E(z, s) - phi(s) E(z, 1 - s)| with both sides from eval_fourier.
inline double functional_equation_defect(const HalfPlanePoint &z, const SpectralParameter &sp,
                                         const TruncationPolicy &t = {})
{
    const SpectralParameter reflected = sp.reflected();
    reflected.require_off_poles("functional_equation_defect");
    const Complex lhs = eval_fourier(z, sp, t).value;
    const Complex rhs = scattering_ratio(sp) * eval_fourier(z, reflected, t).value;
    return std::abs(lhs - rhs);
}

/// int_0^1 E(x + iy, s) e^{-2 pi i n x} dx by the quadrature_nodes-point
/// trapezoid rule. The rule is exact for modes |k| < nodes - |n|, so the
/// aliasing error is of the size of a_{nodes - |n|}.
inline Complex extract_coefficient_by_quadrature(long long n, double y, const SpectralParameter &sp,
                                                 const TruncationPolicy &t = {},
                                                 IntegrandSource source = IntegrandSource::lattice)
{
    t.validate();
    if (!(y > 0)) {
        throw DomainError("extract_coefficient_by_quadrature: y must be positive");
    }
    if (source == IntegrandSource::lattice && sp.value().real() <= 1) {
        throw DivergenceError("extract_coefficient_by_quadrature: lattice integrand needs Re(s) > 1");
    }
    const int nodes = t.quadrature_nodes;
    Complex sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double x = static_cast<double>(k) / nodes;
        const HalfPlanePoint z(x, y);
        const Complex e = source == IntegrandSource::lattice ? eval_lattice_sum(z, sp, t).value
                                                             : eval_fourier(z, sp, t).value;
        // e^{-2 pi i n k / nodes}, with the exponent reduced mod nodes.
        const long long r = ((n % nodes) * k) % nodes;
        const double angle = -2 * pi * static_cast<double>(r) / nodes;
        sum += e * Complex(std::cos(angle), std::sin(angle));
    }
    return sum / static_cast<double>(nodes);
}

/// Relative defect of the first-coefficient identity a_1(y, s) = phi(s) a_1(y, 1 - s)
/// at y = 1:
///
///   |a_1(s) - phi(s) a_1(1-s)| / (|a_1(s)| + |phi(s) a_1(1-s)|).
///
/// K_{s-1/2} = K_{1/2-s} and sigma_{1-2s}(1) = 1, so the identity holds exactly
/// when xi(2 - 2s) = xi(2s - 1), i.e. xi(u) = xi(1 - u) at u = 2s - 1.
inline double first_coefficient_xi_check(const Complex &s)
{
    const SpectralParameter sp(s);
    const SpectralParameter reflected = sp.reflected();
    reflected.require_off_poles("first_coefficient_xi_check");
    const Complex lhs = fourier_coefficient(1, 1.0, sp);
    const Complex rhs = scattering_ratio(sp) * fourier_coefficient(1, 1.0, reflected);
    const double denom = std::abs(lhs) + std::abs(rhs);
    return denom == 0 ? 0.0 : std::abs(lhs - rhs) / denom;
}

/// The 20-point grid used by the functional-equation sweeps:
/// sigma in {0.1, 0.3, 0.7, 0.9}, t in {-5, -2.5, 0, 2.5, 5}.
inline std::vector<Complex> default_fe_grid()
{
    std::vector<Complex> grid;
    for (double sigma : {0.1, 0.3, 0.7, 0.9}) {
        for (double t : {-5.0, -2.5, 0.0, 2.5, 5.0}) {
            grid.emplace_back(sigma, t);
        }
    }
    return grid;
}

} // namespace eisen

#endif
