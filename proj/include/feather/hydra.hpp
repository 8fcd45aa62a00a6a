#ifndef FEATHER_HYDRA_HPP
#define FEATHER_HYDRA_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "feather/chain.hpp"

namespace feather {

// ---- heads on the odd numbers ----------------------------------------------

/// Type A and vertical even; equivalently x mod 24 == 17.
bool is_ag(Odd x);

/// Number of A_g values <= x: floor((x + 7) / 24).
u128 heads_up_to(Odd x);

/// Sources of the Rule-5 macro-steps of a chain, in order. Throws
/// HeadInvariantViolation if any of them is not an A_g number.
std::vector<Odd> map_run_to_cuts(std::span<const ChainStep> chain);

/// Statistics for the odd numbers strictly between two consecutive heads.
struct HeadWindow {
    u128 head;                  // lower head
    u128 next_head;             // upper head
    unsigned non_a = 0;         // odd numbers of type B or C
    unsigned mapped_to_next = 0;  // non-A numbers whose macro-step lands on next_head
    unsigned ups = 0;           // B/C numbers of rank >= 2 with x == S(x) under Rule 2
};

struct HeadGapReport {
    std::size_t heads = 0;
    std::size_t gap_violations = 0;     // consecutive heads not 24 apart
    std::size_t non_a_violations = 0;   // windows without exactly 8 non-A numbers
    std::size_t mapped_over_one = 0;    // windows with more than one number mapped to next head
    std::size_t ups_over_three = 0;     // windows with more than three rank >= 2 ups
    std::vector<HeadWindow> windows;
};

/// Scans the odd numbers up to range_bound, locating heads by type and
/// verticality (not by residue) and checking their spacing. The "mapped" and
/// "ups" counts are reported, never asserted.
HeadGapReport head_gap_check(Odd range_bound);

// ---- the rooted-tree game -------------------------------------------------

using NodeId = std::uint32_t;

class HydraTree {
public:
    static constexpr NodeId kRoot = 0;
    static constexpr NodeId kNone = static_cast<NodeId>(-1);

    HydraTree();

    /// parents[0] must be -1 (the root); parents[i] < i for the rest.
    static HydraTree from_parents(std::span<const int> parents);

    NodeId add_child(NodeId parent);

    [[nodiscard]] bool alive(NodeId id) const;
    [[nodiscard]] NodeId parent(NodeId id) const;
    [[nodiscard]] const std::vector<NodeId>& children(NodeId id) const;

    /// A live leaf other than the root.
    [[nodiscard]] bool is_head(NodeId id) const;
    /// Head whose parent is the root.
    [[nodiscard]] bool is_short(NodeId id) const;

    [[nodiscard]] std::size_t node_count() const { return live_; }
    [[nodiscard]] bool only_root() const { return live_ == 1; }
    [[nodiscard]] std::size_t depth() const;
    [[nodiscard]] std::vector<NodeId> heads() const;  // preorder, leftmost first

    struct CutInfo {
        bool was_short;
        std::size_t grown;      // nodes added by regrowth
        bool capped = false;    // regrowth stopped at max_live
    };

    /// Cuts a head. A long head's parent, minus the head, is copied n times
    /// under the grandparent; a short head grows nothing. Regrowth stops early
    /// once the tree holds more than max_live nodes, leaving a partial copy.
    /// Throws NotAHead for the root or a node with children.
    CutInfo cut(NodeId head, unsigned n, std::size_t max_live = static_cast<std::size_t>(-1));

    /// Structure only, ids ignored.
    friend bool same_shape(const HydraTree& a, const HydraTree& b);

private:
    struct Node {
        NodeId parent = kNone;
        std::vector<NodeId> children;
        bool alive = false;
    };

    NodeId allocate(NodeId parent);
    bool copy_subtree(NodeId src, NodeId dst_parent, std::size_t& grown, std::size_t max_live);

    std::vector<Node> nodes_;
    std::vector<NodeId> free_;
    std::size_t live_ = 0;
};

HydraTree cut_head(HydraTree tree, NodeId head, unsigned n);

/// Picks the next head to cut. Only called while heads exist.
using HeadStrategy = std::function<NodeId(const HydraTree&)>;
/// Regrowth multiplicity for a 1-based step number.
using RegrowthPolicy = std::function<unsigned(std::uint64_t step)>;

HeadStrategy leftmost_head();
HeadStrategy rightmost_head();
HeadStrategy short_heads_first();

RegrowthPolicy fixed_regrowth(unsigned n);
RegrowthPolicy step_indexed_regrowth();

struct CutRecord {
    std::uint64_t step;
    NodeId head;
    bool was_short;
    unsigned regrowth_n;
    std::size_t node_count;  // after the cut
};

enum class GameOutcome { RootReached, BudgetExceeded };

struct GameConfig {
    std::uint64_t budget = 10'000'000;  // cuts
    std::size_t max_nodes = 5'000'000;  // live nodes; exceeding it ends the game as BudgetExceeded
    unsigned heads_per_step = 1;        // >1 cuts several heads per step, all with the same n
    bool record_trace = false;
    bool record_snapshots = false;      // tree copy after every step; small games only
};

struct GameResult {
    GameOutcome outcome;
    std::uint64_t steps;  // cuts performed
    std::vector<CutRecord> trace;
    std::vector<HydraTree> snapshots;
};

GameResult play_game(HydraTree tree, const HeadStrategy& strategy, const RegrowthPolicy& regrowth,
                     const GameConfig& config = {});

/// `step,head_id,was_short,regrowth_n,node_count` with a header row.
void write_cut_trace(std::ostream& out, std::span<const CutRecord> trace);

} // namespace feather

#endif // FEATHER_HYDRA_HPP
