#ifndef EISEN_EULER_PRODUCTS_HPP
#define EISEN_EULER_PRODUCTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arithmetic.hpp"
#include "errors.hpp"
#include "special_functions.hpp"

// Partial L-functions L_S(s) = prod_{v not in S} det(I - rho(t_v) q_v^{-s})^{-1}
// over explicit Satake data, and the scalar constant-term ratio
// prod_j L(a_j s) / L(1 + a_j s).
namespace eisen
{

// Spectrum of rho(t_v) as a multiset of nonzero eigenvalues.
class SatakeClass
{
public:
    SatakeClass() = default;
    explicit SatakeClass(std::vector<Complex> eigenvalues) : eigenvalues_(std::move(eigenvalues))
    {
        if (eigenvalues_.empty()) {
            throw PreconditionError("SatakeClass: at least one eigenvalue required");
        }
        for (const auto &l : eigenvalues_) {
            if (!detail::finite(l) || l == Complex(0, 0)) {
                throw PreconditionError("SatakeClass: eigenvalues must be finite and nonzero");
            }
        }
    }

    const std::vector<Complex> &eigenvalues() const noexcept { return eigenvalues_; }
    std::size_t dimension() const noexcept { return eigenvalues_.size(); }

    friend bool operator==(const SatakeClass &, const SatakeClass &) = default;

private:
    std::vector<Complex> eigenvalues_;
};

struct PlaceDatum
{
    PlaceDatum(std::uint64_t q, SatakeClass satake) : q(q), satake(std::move(satake))
    {
        if (!arith::is_prime_power(q)) {
            throw PreconditionError("PlaceDatum: q = " + std::to_string(q) + " is not a prime power");
        }
    }

    std::uint64_t q;
    SatakeClass satake;

    friend bool operator==(const PlaceDatum &, const PlaceDatum &) = default;
};

class LFunctionData
{
public:
    LFunctionData() = default;
    LFunctionData(std::vector<PlaceDatum> places, std::string excluded_set_label = "S = {infinity}")
        : places_(std::move(places)), label_(std::move(excluded_set_label))
    {
        for (std::size_t i = 1; i < places_.size(); ++i) {
            if (places_[i].q <= places_[i - 1].q) {
                throw PreconditionError("LFunctionData: places must be strictly ascending in q");
            }
            if (places_[i].satake.dimension() != places_[0].satake.dimension()) {
                throw PreconditionError("LFunctionData: Satake classes must share one dimension");
            }
        }
    }

    // Eigenvalue {1} at every prime p <= prime_bound: the Euler product of zeta.
    static LFunctionData trivial(std::uint64_t prime_bound)
    {
        std::vector<PlaceDatum> places;
        for (auto p : arith::primes_up_to(prime_bound)) {
            places.emplace_back(p, SatakeClass({Complex(1, 0)}));
        }
        return {std::move(places), "S = {infinity}"};
    }

    const std::vector<PlaceDatum> &places() const noexcept { return places_; }
    const std::string &excluded_set_label() const noexcept { return label_; }
    std::size_t dimension() const noexcept { return places_.empty() ? 0 : places_[0].satake.dimension(); }

    // max over places and eigenvalues of log|lambda| / log q.
    double growth_exponent() const
    {
        double theta = 0;
        for (const auto &pl : places_) {
            const double lq = std::log(static_cast<double>(pl.q));
            for (const auto &l : pl.satake.eigenvalues()) {
                theta = std::max(theta, std::log(std::abs(l)) / lq);
            }
        }
        return theta;
    }

private:
    std::vector<PlaceDatum> places_;
    std::string label_ = "S = {infinity}";
};

struct RatioLevel
{
    int a;
    LFunctionData data;
};

class RatioSpec
{
public:
    explicit RatioSpec(std::vector<RatioLevel> levels) : levels_(std::move(levels))
    {
        if (levels_.empty() || levels_.size() > 8) {
            throw PreconditionError("RatioSpec: need 1 to 8 levels");
        }
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            if (levels_[i].a < 1 || (i > 0 && levels_[i].a <= levels_[i - 1].a)) {
                throw PreconditionError("RatioSpec: a_j must be positive and strictly increasing");
            }
        }
    }

    const std::vector<RatioLevel> &levels() const noexcept { return levels_; }
    std::size_t size() const noexcept { return levels_.size(); }

private:
    std::vector<RatioLevel> levels_;
};

// Margin below which partial_l reports a convergence warning.
inline constexpr double convergence_margin_floor = 0.1;
inline constexpr double euler_pole_radius = 1e-12;

/// det(I - rho(t_v) q^{-s})^{-1} = prod_lambda (1 - lambda q^{-s})^{-1},
/// evaluated as 1 / prod_lambda (1 - lambda q^{-s}).
inline Complex local_factor(const PlaceDatum &place, const Complex &s)
{
    const Complex q_pow = std::exp(-s * std::log(static_cast<double>(place.q)));
    Complex det = 1.0;
    for (const auto &l : place.satake.eigenvalues()) {
        const Complex f = 1.0 - l * q_pow;
        if (std::abs(f) <= euler_pole_radius) {
            throw PoleError("local_factor: det(I - rho(t_v) q^-s) vanishes at q = " + std::to_string(place.q));
        }
        det *= f;
    }
    return detail::checked(1.0 / det, "local_factor");
}

struct PartialLResult
{
    Complex value{1.0, 0.0};
    std::size_t factor_count = 0;
    // Estimated relative size of the omitted places, exp(bound) - 1.
    double tail_estimate = 0;
    // Re(s) - (1 + growth exponent).
    double convergence_margin = 0;
    std::vector<std::string> warnings;
};

/// Product of local factors over places with q <= max_q, in ascending q.
///
/// Tail estimate: with theta the growth exponent and Q the largest included q,
/// |log of omitted part| <= d * sum_{p > Q} p^{theta - sigma}, bounded by
/// d Q^{1 + theta - sigma} / ((sigma - theta - 1) log Q).
inline PartialLResult partial_l(const LFunctionData &data, const Complex &s, std::uint64_t max_q)
{
    PartialLResult r;
    const double theta = data.growth_exponent();
    r.convergence_margin = s.real() - (1 + theta);
    if (r.convergence_margin < convergence_margin_floor) {
        r.warnings.push_back("ConvergenceWarning: Re(s) exceeds the abscissa 1 + " + std::to_string(theta) +
                             " by only " + std::to_string(r.convergence_margin));
    }

    std::uint64_t largest = 0;
    for (const auto &pl : data.places()) {
        if (pl.q > max_q) {
            break;
        }
        r.value *= local_factor(pl, s);
        largest = pl.q;
        ++r.factor_count;
    }
    detail::checked(r.value, "partial_l");

    if (r.factor_count == 0) {
        r.warnings.push_back("empty product: no places with q <= max_q");
        return r;
    }
    const double excess = s.real() - theta - 1;
    if (excess > 0 && largest >= 2) {
        const double lq = std::log(static_cast<double>(largest));
        const double bound = static_cast<double>(data.dimension()) *
                             std::exp((1 + theta - s.real()) * lq) / (excess * lq);
        r.tail_estimate = std::expm1(std::min(bound, 700.0));
    } else {
        r.tail_estimate = std::numeric_limits<double>::max();
    }
    return r;
}

struct RatioResult
{
    Complex value{1.0, 0.0};
    std::vector<Complex> level_values;
    std::vector<std::string> warnings;
};

/// prod_j L(a_j s) / L(1 + a_j s) with every L truncated at max_q.
/// Errors and warnings carry the 1-based level index.
inline RatioResult constant_term_ratio(const RatioSpec &spec, const Complex &s, std::uint64_t max_q)
{
    RatioResult r;
    for (std::size_t j = 0; j < spec.size(); ++j) {
        const auto &level = spec.levels()[j];
        const std::string tag = "level " + std::to_string(j + 1) + ": ";
        const Complex arg = static_cast<double>(level.a) * s;
        try {
            const auto num = partial_l(level.data, arg, max_q);
            const auto den = partial_l(level.data, 1.0 + arg, max_q);
            for (const auto &w : num.warnings) {
                r.warnings.push_back(tag + w);
            }
            const Complex ratio = num.value / den.value;
            r.level_values.push_back(ratio);
            r.value *= ratio;
        } catch (const PoleError &e) {
            throw PoleError(tag + e.what());
        }
    }
    detail::checked(r.value, "constant_term_ratio");
    return r;
}

/// One factor pair of the crude functional equation
///   prod_j L_S(a_j s, dual pi, r_j) = prod_j L_S(1 - a_j s, pi, r_j) x (local factors at S).
struct CrudeLevel
{
    int a;
    bool lhs_dual = true;  // left side carries the contragredient
    bool rhs_dual = false;

    // (a s, 1 - a s)
    std::pair<Complex, Complex> arguments(const Complex &s) const
    {
        const Complex as = static_cast<double>(a) * s;
        return {as, 1.0 - as};
    }

    friend bool operator==(const CrudeLevel &, const CrudeLevel &) = default;
};

struct CrudeEquationDescriptor
{
    std::string excluded_set_label;
    std::vector<CrudeLevel> levels;

    friend bool operator==(const CrudeEquationDescriptor &, const CrudeEquationDescriptor &) = default;
};

inline CrudeEquationDescriptor crude_equation_descriptor(const RatioSpec &spec)
{
    CrudeEquationDescriptor d;
    d.excluded_set_label = spec.levels().front().data.excluded_set_label();
    for (const auto &level : spec.levels()) {
        d.levels.push_back({level.a, true, false});
    }
    return d;
}

namespace detail
{

inline std::string scaled(int a, const char *var)
{
    return a == 1 ? std::string(var) : std::to_string(a) + var;
}

inline const char *rep_name(bool dual) { return dual ? "dual" : "direct"; }

} // namespace detail

/// Line-oriented canonical form, one level per line:
///
///   crude-fe m=2 S=<label>
///   level j=1 a=1 lhs=s:dual rhs=1-s:direct
///   level j=2 a=2 lhs=2s:dual rhs=1-2s:direct
inline std::string render(const CrudeEquationDescriptor &d)
{
    std::ostringstream os;
    os << "crude-fe m=" << d.levels.size() << " S=" << d.excluded_set_label << '\n';
    for (std::size_t j = 0; j < d.levels.size(); ++j) {
        const auto &l = d.levels[j];
        os << "level j=" << j + 1 << " a=" << l.a << " lhs=" << detail::scaled(l.a, "s") << ':'
           << detail::rep_name(l.lhs_dual) << " rhs=1-" << detail::scaled(l.a, "s") << ':'
           << detail::rep_name(l.rhs_dual) << '\n';
    }
    return os.str();
}

/// Human-readable identity, e.g.
/// L_S(s, ~pi, r_1) L_S(2s, ~pi, r_2) = L_S(1-s, pi, r_1) L_S(1-2s, pi, r_2) x [local factors at S]
inline std::string render_identity(const CrudeEquationDescriptor &d)
{
    auto side = [&](bool lhs) {
        std::string out;
        for (std::size_t j = 0; j < d.levels.size(); ++j) {
            const auto &l = d.levels[j];
            const bool dual = lhs ? l.lhs_dual : l.rhs_dual;
            if (j) {
                out += ' ';
            }
            out += "L_S(" + std::string(lhs ? "" : "1-") + detail::scaled(l.a, "s") + ", " +
                   (dual ? "~pi" : "pi") + ", r_" + std::to_string(j + 1) + ")";
        }
        return out;
    };
    return side(true) + " = " + side(false) + " x [local factors at " + d.excluded_set_label + "]";
}

/// Inverse of render(); throws ParseError on malformed text.
inline CrudeEquationDescriptor parse_descriptor(const std::string &text)
{
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    auto expect_prefix = [&](const std::string &tok, const std::string &prefix) {
        if (tok.rfind(prefix, 0) != 0) {
            throw ParseError(lineno, "expected '" + prefix + "', got '" + tok + "'");
        }
        return tok.substr(prefix.size());
    };
    auto to_int = [&](const std::string &v) {
        try {
            std::size_t used = 0;
            const int x = std::stoi(v, &used);
            if (used != v.size()) {
                throw ParseError(lineno, "bad integer '" + v + "'");
            }
            return x;
        } catch (const std::logic_error &) {
            throw ParseError(lineno, "bad integer '" + v + "'");
        }
    };
    auto to_rep = [&](const std::string &v) {
        if (v == "dual") {
            return true;
        }
        if (v == "direct") {
            return false;
        }
        throw ParseError(lineno, "bad representation marker '" + v + "'");
    };

    CrudeEquationDescriptor d;
    if (!std::getline(is, line)) {
        throw ParseError(1, "empty descriptor");
    }
    ++lineno;
    {
        std::istringstream hs(line);
        std::string head, m;
        hs >> head >> m;
        if (head != "crude-fe") {
            throw ParseError(lineno, "missing 'crude-fe' header");
        }
        const int count = to_int(expect_prefix(m, "m="));
        const auto pos = line.find(" S=");
        if (pos == std::string::npos) {
            throw ParseError(lineno, "missing S label");
        }
        d.excluded_set_label = line.substr(pos + 3);
        d.levels.reserve(static_cast<std::size_t>(std::max(count, 0)));
        for (int j = 1; j <= count; ++j) {
            if (!std::getline(is, line)) {
                throw ParseError(lineno + 1, "missing level line");
            }
            ++lineno;
            std::istringstream ls(line);
            std::string word, jt, at, lhs, rhs, extra;
            ls >> word >> jt >> at >> lhs >> rhs;
            if (word != "level" || to_int(expect_prefix(jt, "j=")) != j || (ls >> extra)) {
                throw ParseError(lineno, "malformed level line");
            }
            CrudeLevel l{to_int(expect_prefix(at, "a="))};
            const std::string arg = detail::scaled(l.a, "s");
            const auto lhs_v = expect_prefix(lhs, "lhs=");
            const auto rhs_v = expect_prefix(rhs, "rhs=");
            if (lhs_v.rfind(arg + ":", 0) != 0 || rhs_v.rfind("1-" + arg + ":", 0) != 0) {
                throw ParseError(lineno, "arguments do not match a=" + std::to_string(l.a));
            }
            l.lhs_dual = to_rep(lhs_v.substr(arg.size() + 1));
            l.rhs_dual = to_rep(rhs_v.substr(arg.size() + 3));
            d.levels.push_back(l);
        }
    }
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw ParseError(lineno, "trailing content");
        }
    }
    return d;
}

/// Place-data text format: one place per line,
///   q re(l_1) im(l_1) re(l_2) im(l_2) ...
/// '#' starts a comment; blank lines are skipped.
inline LFunctionData parse_places(std::istream &in, std::string excluded_set_label = "S = {infinity}")
{
    std::vector<PlaceDatum> places;
    std::string line;
    std::size_t lineno = 0;
    std::size_t dim = 0;
    std::uint64_t prev_q = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() < 3 || tokens.size() % 2 == 0) {
            throw ParseError(lineno, "expected q followed by (re, im) eigenvalue pairs");
        }
        std::uint64_t q = 0;
        try {
            std::size_t used = 0;
            if (tokens[0].find_first_not_of("0123456789") != std::string::npos) {
                throw std::invalid_argument("q");
            }
            q = std::stoull(tokens[0], &used);
        } catch (const std::logic_error &) {
            throw ParseError(lineno, "q must be a positive integer, got '" + tokens[0] + "'");
        }
        if (!arith::is_prime_power(q)) {
            throw ParseError(lineno, "q = " + tokens[0] + " is not a prime power");
        }
        if (q <= prev_q) {
            throw ParseError(lineno, "places must be strictly ascending in q");
        }
        std::vector<Complex> eig;
        for (std::size_t i = 1; i < tokens.size(); i += 2) {
            double re = 0;
            double im = 0;
            try {
                std::size_t u1 = 0;
                std::size_t u2 = 0;
                re = std::stod(tokens[i], &u1);
                im = std::stod(tokens[i + 1], &u2);
                if (u1 != tokens[i].size() || u2 != tokens[i + 1].size()) {
                    throw std::invalid_argument("trailing");
                }
            } catch (const std::logic_error &) {
                throw ParseError(lineno, "bad eigenvalue component near '" + tokens[i] + "'");
            }
            eig.emplace_back(re, im);
        }
        if (dim != 0 && eig.size() != dim) {
            throw ParseError(lineno, "Satake class of dimension " + std::to_string(eig.size()) +
                                         ", expected " + std::to_string(dim));
        }
        try {
            places.emplace_back(q, SatakeClass(std::move(eig)));
        } catch (const PreconditionError &e) {
            throw ParseError(lineno, e.what());
        }
        dim = places.back().satake.dimension();
        prev_q = q;
    }
    return {std::move(places), std::move(excluded_set_label)};
}

inline void write_places(std::ostream &out, const LFunctionData &data)
{
    const auto old_prec = out.precision(17);
    for (const auto &pl : data.places()) {
        out << pl.q;
        for (const auto &l : pl.satake.eigenvalues()) {
            out << ' ' << l.real() << ' ' << l.imag();
        }
        out << '\n';
    }
    out.precision(old_prec);
}

} // namespace eisen

#endif
