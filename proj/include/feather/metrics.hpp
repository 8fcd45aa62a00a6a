#ifndef FEATHER_METRICS_HPP
#define FEATHER_METRICS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "feather/coloring.hpp"

namespace feather {

using Rational = boost::multiprecision::cpp_rational;

// ---- counting identities ----------------------------------------------------
// Each function counts directly and throws IdentityViolation when the count
// disagrees with the closed form it is paired with.

/// Odd numbers in (x, V(x)]; equals x + (x + 1) / 2.
u128 odds_between(Odd x);

/// A_g numbers < V(V(b)) for type-B b; equals 2b / 3.
u128 ag_below_v2_of_b(Odd b);

/// A_g numbers < V(V(c)) for type-C c; equals (2c + 1) / 3.
u128 ag_below_v2_of_c(Odd c);

enum class RbCase {
    ThreeC,  // A_g <= R_b(3c), equals (2c + 1) / 3; seed type C
    ThreeA,  // A_g <  R_b(3a), equals (2a - 1) / 3; seed type A
};

u128 ag_counts_via_rb(RbCase kind, Odd seed);

// ---- reproductive rates ----------------------------------------------------

enum class DotClass { TypeB, TypeC, TypeAg, Black };

std::string_view name(DotClass c);

struct RateReport {
    DotClass dot_class;
    std::size_t sample_count;
    Rational mean_rate;
    std::string window;

    [[nodiscard]] double mean() const { return mean_rate.convert_to<double>(); }
};

inline constexpr u128 kDefaultRateSampleBound = 8192;

/// Mean number of cells first colored by x at or below V(x) (V(x) + 2 for
/// A_g), over processed cells x > 1 of the class with x <= sample_bound.
/// Throws InsufficientSamples when no cell qualifies; Black is not a run class.
RateReport empirical_rate(const ColoringState& run, DotClass dot_class,
                          u128 sample_bound = kDefaultRateSampleBound);

/// Black dots new to x in the binary tree: its children G(x), S(x) (minus x
/// itself), plus the mean over those children of their own children at or
/// below V(x). Averaged over odd x <= bound. Tends to 7/2.
RateReport black_structural_rate(u128 bound);

// ---- the averaging series --------------------------------------------------

/// sum_{i=1..n} (3i + 5/2) / 2^i, exact.
struct SeriesPoint {
    unsigned n;
    Rational partial_sum;
};

SeriesPoint series_partial_sum(unsigned n);

/// Exact limit of the series.
Rational series_limit();

/// The limit quoted alongside the series in the source material (13/2).
/// It does not equal series_limit().
Rational series_reference_limit();

// ---- log-linearity of expenses -------------------------------------------

struct LogFit {
    double slope;
    double intercept;
    double r_squared;
    std::vector<int> rows;
    std::vector<double> log_expense;  // natural log
    std::vector<double> residuals;
};

/// Least squares of ln(expense) on row. Throws DegenerateFit with fewer than
/// four rows, a zero expense, or all expenses equal.
LogFit loglinearity(std::span<const RowReport> reports);

// ---- CSV ------------------------------------------------------------------

void write_rates_csv(std::ostream& out, std::span<const RateReport> rates);
void write_series_csv(std::ostream& out, std::span<const SeriesPoint> points);
void write_fit_csv(std::ostream& out, const LogFit& fit);

/// Rational as a fixed-point decimal with `digits` places (rounded toward zero).
std::string to_decimal(const Rational& r, unsigned digits);

} // namespace feather

#endif // FEATHER_METRICS_HPP
