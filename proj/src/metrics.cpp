#include "feather/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "feather/hydra.hpp"

namespace feather {

namespace {

// A_g numbers <= y, for any y >= 0.
u128 ag_at_most(u128 y) { return (y + 7) / 24; }

void require(NumberType want, Odd x, std::string_view op) {
    if (classify_type(x) != want) {
        throw TypeMismatch(std::string(op) + ": " + to_string(x) + " is type " +
                           std::string(name(classify_type(x))));
    }
}

u128 check(u128 counted, u128 expected, std::string_view what, Odd x) {
    if (counted != expected) {
        throw IdentityViolation(std::string(what) + " at " + to_string(x) + ": counted " +
                                to_string(counted) + ", expected " + to_string(expected));
    }
    return counted;
}

} // namespace

u128 odds_between(Odd x) {
    const u128 v = act_v(x).value();
    const u128 counted = (v - x.value()) / 2;
    return check(counted, x.value() + (x.value() + 1) / 2, "odds_between", x);
}

u128 ag_below_v2_of_b(Odd b) {
    require(NumberType::B, b, "ag_below_v2_of_b");
    const u128 v2 = act_v(act_v(b)).value();
    return check(ag_at_most(v2 - 1), 2 * b.value() / 3, "ag_below_v2_of_b", b);
}

u128 ag_below_v2_of_c(Odd c) {
    require(NumberType::C, c, "ag_below_v2_of_c");
    const u128 v2 = act_v(act_v(c)).value();
    return check(ag_at_most(v2 - 1), (2 * c.value() + 1) / 3, "ag_below_v2_of_c", c);
}

u128 ag_counts_via_rb(RbCase kind, Odd seed) {
    const Odd three(checked_mul(seed.value(), 3));
    if (kind == RbCase::ThreeC) {
        require(NumberType::C, seed, "ag_counts_via_rb(3c)");
        return check(ag_at_most(r_b(three).value()), (2 * seed.value() + 1) / 3,
                     "ag_counts_via_rb(3c)", seed);
    }
    require(NumberType::A, seed, "ag_counts_via_rb(3a)");
    return check(ag_at_most(r_b(three).value() - 1), (2 * seed.value() - 1) / 3,
                 "ag_counts_via_rb(3a)", seed);
}

std::string_view name(DotClass c) {
    switch (c) {
    case DotClass::TypeB: return "B";
    case DotClass::TypeC: return "C";
    case DotClass::TypeAg: return "Ag";
    case DotClass::Black: return "black";
    }
    return "?";
}

RateReport empirical_rate(const ColoringState& run, DotClass dot_class, u128 sample_bound) {
    if (dot_class == DotClass::Black) {
        throw DomainError("empirical_rate: black dots are rated structurally");
    }
    auto in_class = [&](Odd x) {
        switch (dot_class) {
        case DotClass::TypeB: return classify_type(x) == NumberType::B;
        case DotClass::TypeC: return classify_type(x) == NumberType::C;
        case DotClass::TypeAg: return is_ag(x);
        case DotClass::Black: break;
        }
        return false;
    };
    const u128 slack = dot_class == DotClass::TypeAg ? 2 : 0;

    std::unordered_map<u128, std::size_t, U128Hash> offspring;
    for (const auto& [y, cell] : run.cells()) {
        if (cell.parent == 0 || cell.parent > sample_bound) {
            continue;
        }
        if (y <= act_v(Odd(cell.parent)).value() + slack) {
            ++offspring[cell.parent];
        }
    }

    std::size_t samples = 0;
    std::size_t total = 0;
    for (u128 v = 3; v <= sample_bound; v += 2) {
        const Odd x(v);
        if (run.state(v) != CellState::Blue || !in_class(x)) {
            continue;
        }
        ++samples;
        if (auto it = offspring.find(v); it != offspring.end()) {
            total += it->second;
        }
    }
    if (samples == 0) {
        throw InsufficientSamples("empirical_rate: no processed " + std::string(name(dot_class)) +
                                  " cell <= " + to_string(sample_bound));
    }
    std::string window = dot_class == DotClass::TypeAg ? "y <= V(x)+2" : "y <= V(x)";
    return {dot_class, samples, Rational(total, samples),
            window + ", processed x <= " + to_string(sample_bound)};
}

RateReport black_structural_rate(u128 bound) {
    if (bound < 1) {
        throw InsufficientSamples("black_structural_rate: empty range");
    }
    Rational sum = 0;
    std::size_t samples = 0;
    for (u128 v = 1; v <= bound; v += 2) {
        const Odd x(v);
        const u128 top = act_v(x).value();
        std::vector<Odd> children;
        for (Odd c : {act_g(x), act_s(x)}) {
            if (c != x) {
                children.push_back(c);
            }
        }
        Rational rate = static_cast<long>(children.size());
        if (!children.empty()) {
            Rational grand = 0;
            for (Odd c : children) {
                for (Odd g : {act_g(c), act_s(c)}) {
                    if (g != c && g.value() <= top) {
                        grand += 1;
                    }
                }
            }
            rate += grand / static_cast<long>(children.size());
        }
        sum += rate;
        ++samples;
    }
    return {DotClass::Black, samples, sum / static_cast<long>(samples),
            "binary-tree descendants <= V(x), x <= " + to_string(bound)};
}

SeriesPoint series_partial_sum(unsigned n) {
    if (n < 1) {
        throw DomainError("series_partial_sum: n must be >= 1");
    }
    Rational sum = 0;
    Rational scale = 1;
    for (unsigned i = 1; i <= n; ++i) {
        scale /= 2;
        sum += (Rational(3 * static_cast<long>(i)) + Rational(5, 2)) * scale;
    }
    return {n, sum};
}

Rational series_limit() { return Rational(17, 2); }

Rational series_reference_limit() { return Rational(13, 2); }

LogFit loglinearity(std::span<const RowReport> reports) {
    if (reports.size() < 4) {
        throw DegenerateFit("loglinearity: need at least 4 rows, got " +
                            std::to_string(reports.size()));
    }
    LogFit fit{};
    bool all_equal = true;
    for (const auto& r : reports) {
        if (r.expense == 0) {
            throw DegenerateFit("loglinearity: row " + std::to_string(r.row) + " has zero expense");
        }
        all_equal = all_equal && r.expense == reports.front().expense;
        fit.rows.push_back(r.row);
        fit.log_expense.push_back(std::log(static_cast<double>(r.expense)));
    }
    if (all_equal) {
        throw DegenerateFit("loglinearity: all expenses equal");
    }
    const double n = static_cast<double>(reports.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < fit.rows.size(); ++i) {
        const double x = fit.rows[i];
        const double y = fit.log_expense[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0) {
        throw DegenerateFit("loglinearity: all rows equal");
    }
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    const double mean = sy / n;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < fit.rows.size(); ++i) {
        const double r = fit.log_expense[i] - (fit.intercept + fit.slope * fit.rows[i]);
        fit.residuals.push_back(r);
        ss_res += r * r;
        ss_tot += (fit.log_expense[i] - mean) * (fit.log_expense[i] - mean);
    }
    fit.r_squared = 1.0 - ss_res / ss_tot;
    return fit;
}

std::string to_decimal(const Rational& r, unsigned digits) {
    using boost::multiprecision::cpp_int;
    cpp_int num = boost::multiprecision::numerator(r);
    const cpp_int den = boost::multiprecision::denominator(r);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    cpp_int scale = 1;
    for (unsigned i = 0; i < digits; ++i) {
        scale *= 10;
    }
    const cpp_int scaled = num * scale / den;
    std::string text = cpp_int(scaled / scale).str();
    if (digits > 0) {
        std::string frac = cpp_int(scaled % scale).str();
        text += '.' + std::string(digits - frac.size(), '0') + frac;
    }
    return sign + text;
}

void write_rates_csv(std::ostream& out, std::span<const RateReport> rates) {
    out << "class,sample_count,mean_rate\n";
    for (const auto& r : rates) {
        out << name(r.dot_class) << ',' << r.sample_count << ',' << to_decimal(r.mean_rate, 6) << '\n';
    }
}

void write_series_csv(std::ostream& out, std::span<const SeriesPoint> points) {
    out << "n,partial_sum\n";
    for (const auto& p : points) {
        out << p.n << ',' << to_decimal(p.partial_sum, 12) << '\n';
    }
}

void write_fit_csv(std::ostream& out, const LogFit& fit) {
    out << "row,log_expense,fit_residual\n";
    char buf[64];
    for (std::size_t i = 0; i < fit.rows.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.9f,%.9f", fit.log_expense[i], fit.residuals[i]);
        out << fit.rows[i] << ',' << buf << '\n';
    }
}

} // namespace feather
