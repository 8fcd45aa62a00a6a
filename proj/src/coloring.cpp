#include "feather/coloring.hpp"

#include <ostream>

namespace feather {

char letter(CellState s) {
    switch (s) {
    case CellState::Black: return 'B';
    case CellState::Gold: return 'G';
    case CellState::Blue: return 'U';
    }
    return '?';
}

std::string_view name(Schedule s) {
    return s == Schedule::MinFirst ? "min-first" : "fifo";
}

std::optional<Schedule> parse_schedule(std::string_view text) {
    if (text == "min-first") {
        return Schedule::MinFirst;
    }
    if (text == "fifo") {
        return Schedule::Fifo;
    }
    return std::nullopt;
}

int row_of(Odd x) { return bit_width_minus_one(x.value()); }

u128 row_low(int n) { return n == 0 ? 1 : (static_cast<u128>(1) << n) + 1; }

u128 row_high(int n) { return (static_cast<u128>(1) << (n + 1)) - 1; }

u128 row_size(int n) { return n == 0 ? 1 : static_cast<u128>(1) << (n - 1); }

ColoringState::ColoringState(Schedule schedule) : ColoringState(std::span<const u128>{}, schedule) {
    color(1, 0, RuleId::R1, nullptr);
}

ColoringState::ColoringState(std::span<const u128> seeds, Schedule schedule) : schedule_(schedule) {
    for (u128 s : seeds) {
        color(Odd(s).value(), 0, RuleId::R1, nullptr);
    }
}

CellState ColoringState::state(u128 x) const {
    auto it = cells_.find(x);
    return it == cells_.end() ? CellState::Black : it->second.state;
}

const ColoringState::Cell* ColoringState::cell(u128 x) const {
    auto it = cells_.find(x);
    return it == cells_.end() ? nullptr : &it->second;
}

bool ColoringState::exhausted() const { return worklist_size() == 0; }

std::size_t ColoringState::worklist_size() const {
    return schedule_ == Schedule::MinFirst ? min_queue_.size() : fifo_.size() - fifo_head_;
}

u128 ColoringState::colored_above_row(int n) const {
    u128 below = 0;
    for (int m = 0; m <= n; ++m) {
        below += row_counts_[m];
    }
    return cells_.size() - below;
}

void ColoringState::color(u128 x, u128 parent, RuleId rule, std::vector<Coloring>* colored) {
    auto [it, inserted] = cells_.try_emplace(x);
    if (!inserted) {
        return;
    }
    it->second = Cell{parent, tick_, CellState::Gold, rule};
    ++row_counts_[row_of(Odd(x))];
    if (schedule_ == Schedule::MinFirst) {
        min_queue_.insert(x);
    } else {
        fifo_.push_back(x);
    }
    if (colored != nullptr) {
        colored->push_back({Odd(x), rule});
    }
}

u128 ColoringState::pop() {
    if (schedule_ == Schedule::MinFirst) {
        auto it = min_queue_.begin();
        const u128 x = *it;
        min_queue_.erase(it);
        return x;
    }
    return fifo_[fifo_head_++];
}

Odd ColoringState::step(std::vector<Coloring>* colored) {
    if (exhausted()) {
        throw Exhausted("coloring: no gold cell left to process");
    }
    const Odd x(pop());
    ++tick_;
    const u128 v = x.value();

    color(act_v(x).value(), v, RuleId::R1, colored);
    if (rule_two_links_up(x)) {
        color(act_s(x).value(), v, RuleId::R2, colored);
    }
    switch (classify_type(x)) {
    case NumberType::A: color(r_a(x).value(), v, RuleId::Ra, colored); break;
    case NumberType::B: break;
    case NumberType::C:
        if (v > 1) {
            color(r_c(x).value(), v, RuleId::Rc, colored);
        }
        break;
    }

    if (v != 1) {
        cells_.at(v).state = CellState::Blue;
    }
    return x;
}

ColoringState coloring_step(ColoringState state) {
    state.step();
    return state;
}

RowRun run_rows(const RowRunConfig& config, const TickObserver& observer) {
    if (config.max_row < 2 || config.max_row > 60) {
        throw DomainError("run_rows: max_row must be in [2, 60]");
    }
    RowRun run{{}, ColoringState(config.schedule)};
    ColoringState& st = run.state;
    std::vector<std::optional<RowReport>> done(config.max_row + 1);
    int remaining = config.max_row - 1;
    std::vector<ColoringState::Coloring> colored;

    while (remaining > 0) {
        if (st.tick() >= config.tick_budget) {
            throw NonTermination("run_rows: tick budget " + std::to_string(config.tick_budget) +
                                 " exhausted with " + std::to_string(remaining) +
                                 " rows incomplete");
        }
        if (st.exhausted()) {
            throw NonTermination("run_rows: worklist empty with " + std::to_string(remaining) +
                                 " rows incomplete");
        }
        colored.clear();
        const Odd x = st.step(observer ? &colored : nullptr);
        if (observer) {
            observer(st, x, colored);
        }
        for (int n = 2; n <= config.max_row; ++n) {
            if (!done[n] && st.row_complete(n)) {
                done[n] = RowReport{n, st.tick(), st.colored_above_row(n)};
                --remaining;
            }
        }
    }
    for (int n = 2; n <= config.max_row; ++n) {
        run.rows.push_back(*done[n]);
    }
    return run;
}

ConjectureResult conjecture1_check(int n, std::uint64_t budget, Schedule schedule) {
    if (n < 1 || n > 40) {
        throw DomainError("conjecture1_check: n must be in [1, 40]");
    }
    std::vector<u128> seeds;
    for (u128 v = 1; v <= (static_cast<u128>(1) << n); v += 2) {
        seeds.push_back(v);
    }
    ColoringState st(seeds, schedule);
    auto target_met = [&] {
        for (int m = 0; m <= n; ++m) {
            if (!st.row_complete(m)) {
                return false;
            }
        }
        return true;
    };
    // Odds <= 2^(n+1) are exactly rows 0..n.
    while (!target_met()) {
        if (st.tick() >= budget || st.exhausted()) {
            return {false, st.tick()};
        }
        st.step();
    }
    return {true, st.tick()};
}

void write_row_reports(std::ostream& out, std::span<const RowReport> rows) {
    out << "row,completion_tick,expense\n";
    for (const auto& r : rows) {
        out << r.row << ',' << r.completion_tick << ',' << to_string(r.expense) << '\n';
    }
}

void write_snapshot_header(std::ostream& out) { out << "tick,cell,state\n"; }

void write_snapshot(std::ostream& out, const ColoringState& state, u128 limit) {
    const std::string tick = std::to_string(state.tick());
    for (u128 v = 1; v <= limit; v += 2) {
        out << tick << ',' << to_string(v) << ',' << letter(state.state(v)) << '\n';
    }
}

void write_trace_header(std::ostream& out) { out << "tick,processed,colored,rule\n"; }

void write_trace_tick(std::ostream& out, std::uint64_t tick, Odd processed,
                      std::span<const ColoringState::Coloring> colored) {
    if (colored.empty()) {
        out << tick << ',' << to_string(processed) << ",-,-\n";
        return;
    }
    for (const auto& c : colored) {
        out << tick << ',' << to_string(processed) << ',' << to_string(c.cell) << ','
            << name(c.rule) << '\n';
    }
}

} // namespace feather
