#ifndef FEATHER_COLORING_HPP
#define FEATHER_COLORING_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "feather/rules.hpp"

namespace feather {

enum class CellState : std::uint8_t { Black, Gold, Blue };

/// CSV letter: B, G, U.
char letter(CellState s);

enum class Schedule { MinFirst, Fifo };

std::string_view name(Schedule s);
std::optional<Schedule> parse_schedule(std::string_view text);

/// Row n holds the odd numbers in [2^n + 1, 2^(n+1) - 1]; 1 alone is row 0.
int row_of(Odd x);
u128 row_low(int n);
u128 row_high(int n);
u128 row_size(int n);  // 2^(n-1) for n >= 1, 1 for n == 0

/// Black -> Gold -> Blue over the odd numbers, stored sparsely (unknown cells
/// are Black). Processing a Gold x colors:
///   V(x)                              (Rule 1)
///   S(x) when rule_two_links_up(x)    (Rule 2)
///   r_a(x) when x is type A           (R_a)
///   r_c(x) when x is type C, x > 1    (R_c)
/// then turns x Blue. 1 is processed once and stays Gold.
class ColoringState {
public:
    struct Cell {
        u128 parent = 0;          // first colorer; 0 for seeds
        std::uint64_t tick = 0;   // tick at which it turned Gold
        CellState state = CellState::Black;
        RuleId rule = RuleId::R1; // meaningless for seeds
    };

    struct Coloring {
        Odd cell;
        RuleId rule;
    };

    /// Seeded with {1}.
    explicit ColoringState(Schedule schedule = Schedule::MinFirst);

    /// Seeded with the given cells (all Gold at tick 0).
    ColoringState(std::span<const u128> seeds, Schedule schedule);

    [[nodiscard]] CellState state(u128 x) const;
    [[nodiscard]] const Cell* cell(u128 x) const;
    [[nodiscard]] std::uint64_t tick() const { return tick_; }
    [[nodiscard]] bool exhausted() const;
    [[nodiscard]] std::size_t colored_count() const { return cells_.size(); }
    [[nodiscard]] std::size_t worklist_size() const;
    [[nodiscard]] Schedule schedule() const { return schedule_; }

    /// Gold + Blue cells in row n.
    [[nodiscard]] u128 colored_in_row(int n) const { return row_counts_.at(n); }
    [[nodiscard]] bool row_complete(int n) const { return row_counts_.at(n) == row_size(n); }
    /// Gold + Blue cells above 2^(n+1) - 1.
    [[nodiscard]] u128 colored_above_row(int n) const;

    const std::unordered_map<u128, Cell, U128Hash>& cells() const { return cells_; }

    /// Processes one Gold cell. Throws Exhausted when there is none.
    /// `colored` receives the cells that left Black during this tick.
    Odd step(std::vector<Coloring>* colored = nullptr);

private:
    void color(u128 x, u128 parent, RuleId rule, std::vector<Coloring>* colored);
    u128 pop();

    Schedule schedule_;
    std::unordered_map<u128, Cell, U128Hash> cells_;
    std::set<u128> min_queue_;
    std::vector<u128> fifo_;
    std::size_t fifo_head_ = 0;
    std::vector<u128> row_counts_ = std::vector<u128>(129, 0);
    std::uint64_t tick_ = 0;
};

/// Single-step form over a copy.
ColoringState coloring_step(ColoringState state);

struct RowReport {
    int row;
    std::uint64_t completion_tick;
    u128 expense;

    friend bool operator==(const RowReport&, const RowReport&) = default;
};

inline constexpr std::uint64_t kDefaultTickBudget = 10'000'000;

struct RowRunConfig {
    int max_row = 12;
    Schedule schedule = Schedule::MinFirst;
    std::uint64_t tick_budget = kDefaultTickBudget;
};

/// Called after every tick with the state and the cells colored in it.
using TickObserver =
    std::function<void(const ColoringState&, Odd processed, std::span<const ColoringState::Coloring>)>;

struct RowRun {
    std::vector<RowReport> rows;  // rows 2..max_row, in row order
    ColoringState state;
};

/// Runs from {1} until rows 2..max_row are complete. Throws NonTermination
/// when the budget runs out or the worklist empties first.
RowRun run_rows(const RowRunConfig& config, const TickObserver& observer = {});

struct ConjectureResult {
    bool holds;
    std::uint64_t ticks;
};

/// Seeds every odd <= 2^n Gold and runs until every odd <= 2^(n+1) is colored.
/// Running out of budget is reported as holds == false.
ConjectureResult conjecture1_check(int n, std::uint64_t budget = kDefaultTickBudget,
                                   Schedule schedule = Schedule::MinFirst);

void write_row_reports(std::ostream& out, std::span<const RowReport> rows);

/// `tick,cell,state` for every odd cell <= limit (Black included).
void write_snapshot_header(std::ostream& out);
void write_snapshot(std::ostream& out, const ColoringState& state, u128 limit);

/// `tick,processed,colored,rule`, one line per newly colored cell; a tick
/// that colors nothing gets a line with colored and rule set to "-".
void write_trace_header(std::ostream& out);
void write_trace_tick(std::ostream& out, std::uint64_t tick, Odd processed,
                      std::span<const ColoringState::Coloring> colored);

} // namespace feather

#endif // FEATHER_COLORING_HPP
