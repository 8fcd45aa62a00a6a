#include "feather/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "feather/chain.hpp"
#include "feather/coloring.hpp"
#include "feather/hydra.hpp"
#include "feather/metrics.hpp"
#include "feather/quiver.hpp"
#include "feather/verify.hpp"

namespace feather {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

Odd parse_odd(const std::string& text, std::string_view what) {
    u128 v = 0;
    try {
        v = parse_u128(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": not a non-negative integer: " + text);
    }
    if (v == 0 || v % 2 == 0) {
        throw UsageError(std::string(what) + ": expected a positive odd integer, got " + text);
    }
    return Odd(v);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::out | std::ios::trunc);
    if (!f) {
        throw UsageError("cannot open " + path + " for writing");
    }
    return f;
}

void close_out(std::ofstream& f, const std::string& path) {
    f.close();
    if (!f) {
        throw UsageError("error writing " + path);
    }
}

std::string variety_text(Odd x) {
    const Variety v = variety_classify(x);
    if (v.kind == VarietyKind::None) {
        return "none";
    }
    return std::string(v.kind == VarietyKind::S ? "S" : "V") + "(b=" + to_string(v.b) +
           ",k=" + std::to_string(v.k) + ")";
}

// ---- options --------------------------------------------------------------

struct Options {
    std::string value;
    std::string max;
    std::string bound;
    std::string out;
    std::string snapshots;
    std::string trace;
    std::string fit;
    std::string schedule = "min-first";
    std::string parents = "-1,0,1,1,0";
    std::string strategy = "leftmost";
    std::string regrowth = "step";
    int rows = 12;
    int fit_from = 6;
    int seed_row = 2;
    int last_row = 0;
    unsigned heads_per_step = 1;
    std::uint64_t stride = 0;
    std::uint64_t budget = 0;
    bool inject_corrupt = false;
};

Schedule schedule_of(const Options& o) {
    auto s = parse_schedule(o.schedule);
    if (!s) {
        throw UsageError("unknown schedule: " + o.schedule);
    }
    return *s;
}

// Data goes to --out when given, otherwise to stdout; the human summary then
// moves to stderr so stdout stays a clean CSV.
struct Sinks {
    std::ofstream file;
    std::ostream* data;
    std::ostream* note;
};

Sinks sinks(const std::string& path, std::ostream& out, std::ostream& err) {
    Sinks s{{}, &out, &err};
    if (!path.empty()) {
        s.file = open_out(path);
        s.data = &s.file;
        s.note = &out;
    }
    return s;
}

void finish(Sinks& s, const std::string& path) {
    if (!path.empty()) {
        close_out(s.file, path);
    }
}

// ---- commands -------------------------------------------------------------

int cmd_classify(const Options& o, std::ostream& out) {
    const Odd x = parse_odd(o.value, "classify");
    out << to_string(x) << ' ' << name(classify_type(x)) << " rank=" << rank(x) << ' '
        << name(verticality(x)) << " ag=" << (is_ag(x) ? "true" : "false")
        << " variety=" << variety_text(x) << '\n';
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Odd max = parse_odd(o.max.empty() ? "1025" : o.max, "--max");
    std::vector<Claim> extra;
    if (o.inject_corrupt) {
        // A well-formed pair whose rhs no generator produces from this lhs.
        const Odd a(17);
        extra.push_back({a, Odd(r_a(a).value() + 2), RuleId::Ra});
    }
    const VerifyReport r = verify_claims(max.value(), extra);
    out << "claims=" << r.claims << " oracle_failures=" << r.oracle_failures
        << " structural_failures=" << r.structural_failures << " bound_hits=" << r.bound_hits << '\n';
    if (r.ok()) {
        out << "all claims confirmed\n";
        return kExitOk;
    }
    for (const Claim& c : r.first_failures) {
        out << "FAILED " << to_string(c) << '\n';
    }
    return kExitVerificationFailed;
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.rows < 2) {
        throw UsageError("--rows must be >= 2");
    }
    RowRunConfig config{o.rows, schedule_of(o), o.budget == 0 ? kDefaultTickBudget : o.budget};
    const u128 snap_limit = row_high(o.rows);

    std::ofstream snap;
    std::ofstream trace;
    if (!o.snapshots.empty()) {
        snap = open_out(o.snapshots);
        write_snapshot_header(snap);
        write_snapshot(snap, ColoringState(config.schedule), snap_limit);
    }
    if (!o.trace.empty()) {
        trace = open_out(o.trace);
        write_trace_header(trace);
    }
    TickObserver observer;
    if (snap.is_open() || trace.is_open()) {
        observer = [&](const ColoringState& st, Odd x, std::span<const ColoringState::Coloring> c) {
            if (trace.is_open()) {
                write_trace_tick(trace, st.tick(), x, c);
            }
            if (snap.is_open() && o.stride > 0 && st.tick() % o.stride == 0) {
                write_snapshot(snap, st, snap_limit);
            }
        };
    }
    const RowRun run = run_rows(config, observer);
    if (snap.is_open()) {
        if (o.stride == 0 || run.state.tick() % o.stride != 0) {
            write_snapshot(snap, run.state, snap_limit);
        }
        close_out(snap, o.snapshots);
    }
    if (trace.is_open()) {
        close_out(trace, o.trace);
    }

    Sinks s = sinks(o.out, out, err);
    write_row_reports(*s.data, run.rows);
    finish(s, o.out);
    *s.note << "rows=2.." << o.rows << " ticks=" << run.state.tick()
            << " colored=" << run.state.colored_count() << " schedule=" << name(config.schedule)
            << '\n';

    if (!o.fit.empty()) {
        std::vector<RowReport> tail;
        for (const auto& r : run.rows) {
            if (r.row >= o.fit_from) {
                tail.push_back(r);
            }
        }
        const LogFit fit = loglinearity(tail);
        std::ofstream f = open_out(o.fit);
        write_fit_csv(f, fit);
        close_out(f, o.fit);
        *s.note << "log fit rows " << o.fit_from << ".." << o.rows << ": slope=" << fit.slope
                << " r_squared=" << fit.r_squared << '\n';
    }
    return kExitOk;
}

int cmd_chain(const Options& o, std::ostream& out, std::ostream& err) {
    const Odd start = parse_odd(o.value, "chain");
    if (start.value() == 1) {
        out << "1 \xE2\x89\xA1 1 " << label(RuleId::Rc) << " (fixed point)\n";
        return kExitOk;
    }
    const u128 bound = o.bound.empty() ? default_chain_bound(start) : parse_u128(o.bound);
    const Chain chain =
        follow_a_branch(start, bound, o.budget == 0 ? kDefaultChainBudget : o.budget);
    for (const auto& step : chain.steps) {
        out << to_string(step.from) << " \xE2\x89\xA1 " << to_string(step.to) << ' '
            << label(step.rule) << '\n';
    }
    switch (chain.stop) {
    case ChainStop::BelowBound:
    case ChainStop::ReachedOne: return kExitOk;
    case ChainStop::CycleDetected:
    case ChainStop::BudgetExceeded:
    case ChainStop::Overflow: break;
    }
    err << "chain stopped: " << name(chain.stop) << " after " << chain.steps.size() << " steps\n";
    return kExitAborted;
}

int cmd_quiver(const Options& o, std::ostream& out) {
    const Odd limit = parse_odd(o.max.empty() ? "31" : o.max, "--max");
    const std::string dot = export_quiver_dot(build_quiver(limit));
    if (o.out.empty()) {
        out << dot;
        return kExitOk;
    }
    std::ofstream f = open_out(o.out);
    f << dot;
    close_out(f, o.out);
    return kExitOk;
}

int cmd_hydra(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<int> parents;
    std::stringstream ss(o.parents);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            parents.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("--parents: bad entry '" + item + "'");
        }
    }
    HydraTree tree;
    try {
        tree = HydraTree::from_parents(parents);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    HeadStrategy strategy;
    if (o.strategy == "leftmost") {
        strategy = leftmost_head();
    } else if (o.strategy == "rightmost") {
        strategy = rightmost_head();
    } else if (o.strategy == "short-first") {
        strategy = short_heads_first();
    } else {
        throw UsageError("unknown strategy: " + o.strategy);
    }
    RegrowthPolicy regrowth;
    if (o.regrowth == "step") {
        regrowth = step_indexed_regrowth();
    } else {
        try {
            regrowth = fixed_regrowth(static_cast<unsigned>(std::stoul(o.regrowth)));
        } catch (const std::exception&) {
            throw UsageError("--regrowth: expected 'step' or a count, got " + o.regrowth);
        }
    }
    GameConfig config;
    if (o.budget != 0) {
        config.budget = o.budget;
    }
    config.heads_per_step = o.heads_per_step;
    config.record_trace = !o.out.empty();

    const GameResult r = play_game(std::move(tree), strategy, regrowth, config);
    if (!o.out.empty()) {
        std::ofstream f = open_out(o.out);
        write_cut_trace(f, r.trace);
        close_out(f, o.out);
    }
    if (r.outcome == GameOutcome::RootReached) {
        out << "root_reached steps=" << r.steps << '\n';
        return kExitOk;
    }
    out << "budget_exceeded steps=" << r.steps << '\n';
    err << "hydra: budget exhausted before the root was reached\n";
    return kExitAborted;
}

int cmd_rates(const Options& o, std::ostream& out, std::ostream& err) {
    const u128 sample_bound = o.max.empty() ? kDefaultRateSampleBound : parse_u128(o.max);
    const u128 black_bound = o.bound.empty() ? 65536 : parse_u128(o.bound);
    RowRunConfig config{o.rows, schedule_of(o), o.budget == 0 ? kDefaultTickBudget : o.budget};
    const RowRun run = run_rows(config);
    std::vector<RateReport> rates;
    for (DotClass c : {DotClass::TypeB, DotClass::TypeC, DotClass::TypeAg}) {
        rates.push_back(empirical_rate(run.state, c, sample_bound));
    }
    rates.push_back(black_structural_rate(black_bound));

    Sinks s = sinks(o.out, out, err);
    write_rates_csv(*s.data, rates);
    finish(s, o.out);
    for (const auto& r : rates) {
        *s.note << name(r.dot_class) << ": " << r.window << '\n';
    }
    return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out, std::ostream& err) {
    const unsigned n = o.max.empty() ? 30 : static_cast<unsigned>(parse_u128(o.max));
    if (n < 1 || n > 4096) {
        throw UsageError("--max must be in [1, 4096]");
    }
    std::vector<SeriesPoint> points;
    for (unsigned i = 1; i <= n; ++i) {
        points.push_back(series_partial_sum(i));
    }
    Sinks s = sinks(o.out, out, err);
    write_series_csv(*s.data, points);
    finish(s, o.out);
    const Rational limit = series_limit();
    const Rational gap = limit - points.back().partial_sum;
    *s.note << "exact limit " << limit << " = " << to_decimal(limit, 1) << "; gap at n=" << n
            << " is " << to_decimal(gap, 12) << '\n';
    if (series_reference_limit() != limit) {
        *s.note << "reference value " << series_reference_limit() << " = "
                << to_decimal(series_reference_limit(), 1) << " does not match the exact limit "
                << limit << '\n';
    }
    return kExitOk;
}

int cmd_conjecture(const Options& o, std::ostream& out, std::ostream& err) {
    const int first = o.seed_row;
    const int last = o.last_row == 0 ? first : o.last_row;
    if (first < 1 || last < first || last > 40) {
        throw UsageError("--seed-row/--rows must satisfy 1 <= seed-row <= rows <= 40");
    }
    const std::uint64_t budget = o.budget == 0 ? kDefaultTickBudget : o.budget;
    Sinks s = sinks(o.out, out, err);
    *s.data << "n,holds,ticks\n";
    bool all = true;
    for (int n = first; n <= last; ++n) {
        const ConjectureResult r = conjecture1_check(n, budget, schedule_of(o));
        *s.data << n << ',' << (r.holds ? 1 : 0) << ',' << r.ticks << '\n';
        all = all && r.holds;
    }
    finish(s, o.out);
    *s.note << (all ? "every odd <= 2^(n+1) colored for each n" : "budget exhausted for some n")
            << '\n';
    return all ? kExitOk : kExitAborted;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Collatz equivalence rules, golden automaton and hydra tools", "feather"};
    app.require_subcommand(1);
    Options o;

    auto* classify = app.add_subcommand("classify", "type, rank, verticality and variety of x");
    classify->add_option("x", o.value, "positive odd integer")->required();

    auto* verify = app.add_subcommand("verify", "oracle-check every generated claim");
    verify->add_option("--max", o.max, "largest generator input (odd)");
    verify->add_flag("--inject-corrupt", o.inject_corrupt, "add one corrupt claim (test mode)");

    auto* run = app.add_subcommand("run", "coloring game row reports");
    run->add_option("--rows", o.rows, "last row to complete")->capture_default_str();
    run->add_option("--out", o.out, "row report CSV");
    run->add_option("--snapshots", o.snapshots, "snapshot CSV");
    run->add_option("--stride", o.stride, "ticks between snapshots (0: first and last only)");
    run->add_option("--trace", o.trace, "per-tick coloring trace CSV");
    run->add_option("--fit", o.fit, "log-linearity fit CSV");
    run->add_option("--fit-from", o.fit_from, "first row of the fit")->capture_default_str();
    run->add_option("--budget", o.budget, "tick budget");
    run->add_option("--schedule", o.schedule, "min-first or fifo")->capture_default_str();

    auto* chain = app.add_subcommand("chain", "A-branch macro-chain from a start");
    chain->add_option("start", o.value, "positive odd integer")->required();
    chain->add_option("--bound", o.bound, "stop below this value (default S(start))");
    chain->add_option("--budget", o.budget, "step budget");

    auto* quiver = app.add_subcommand("quiver", "graph text of the rule quiver");
    quiver->add_option("--max", o.max, "largest node (odd)");
    quiver->add_option("--out", o.out, "output file");

    auto* hydra = app.add_subcommand("hydra", "play a hydra game");
    hydra->add_option("--parents", o.parents, "parent index per node, root first (-1)")
        ->capture_default_str();
    hydra->add_option("--strategy", o.strategy, "leftmost, rightmost or short-first")
        ->capture_default_str();
    hydra->add_option("--regrowth", o.regrowth, "'step' or a fixed count")->capture_default_str();
    hydra->add_option("--heads-per-step", o.heads_per_step, "heads cut per step")
        ->capture_default_str();
    hydra->add_option("--budget", o.budget, "cut budget");
    hydra->add_option("--out", o.out, "cut trace CSV");

    auto* rates = app.add_subcommand("rates", "reproductive rates");
    rates->add_option("--rows", o.rows, "rows of the coloring run")->capture_default_str();
    rates->add_option("--max", o.max, "largest sampled cell");
    rates->add_option("--bound", o.bound, "range of the black-dot average");
    rates->add_option("--budget", o.budget, "tick budget");
    rates->add_option("--schedule", o.schedule, "min-first or fifo")->capture_default_str();
    rates->add_option("--out", o.out, "rates CSV");

    auto* series = app.add_subcommand("series", "partial sums of the averaging series");
    series->add_option("--max", o.max, "last n (default 30)");
    series->add_option("--out", o.out, "series CSV");

    auto* conjecture = app.add_subcommand("conjecture", "doubling-interval coloring check");
    conjecture->add_option("--seed-row", o.seed_row, "n: seed every odd <= 2^n")
        ->capture_default_str();
    conjecture->add_option("--rows", o.last_row, "sweep n from --seed-row to this value");
    conjecture->add_option("--budget", o.budget, "tick budget");
    conjecture->add_option("--schedule", o.schedule, "min-first or fifo")->capture_default_str();
    conjecture->add_option("--out", o.out, "result CSV");

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (run->parsed()) return cmd_run(o, out, err);
        if (chain->parsed()) return cmd_chain(o, out, err);
        if (quiver->parsed()) return cmd_quiver(o, out);
        if (hydra->parsed()) return cmd_hydra(o, out, err);
        if (rates->parsed()) return cmd_rates(o, out, err);
        if (series->parsed()) return cmd_series(o, out, err);
        if (conjecture->parsed()) return cmd_conjecture(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NonTermination& e) {
        err << "aborted: " << e.what() << '\n';
        return kExitAborted;
    } catch (const OverflowError& e) {
        err << "aborted: " << e.what() << '\n';
        return kExitAborted;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace feather
