#include "feather/hydra.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

namespace feather {

bool is_ag(Odd x) { return x.value() % 24 == 17; }

u128 heads_up_to(Odd x) { return (x.value() + 7) / 24; }

std::vector<Odd> map_run_to_cuts(std::span<const ChainStep> chain) {
    std::vector<Odd> cuts;
    for (const auto& step : chain) {
        if (step.rule != RuleId::R5) {
            continue;
        }
        if (!is_ag(step.from)) {
            throw HeadInvariantViolation("Rule-5 step from " + to_string(step.from) +
                                         " which is not an A_g number");
        }
        cuts.push_back(step.from);
    }
    return cuts;
}

namespace {

bool head_by_structure(Odd x) {
    return classify_type(x) == NumberType::A && verticality(x) == Verticality::VerticalEven;
}

} // namespace

HeadGapReport head_gap_check(Odd range_bound) {
    HeadGapReport report;
    std::optional<u128> prev;
    HeadWindow window{};
    for (u128 v = 1; v <= range_bound.value(); v += 2) {
        const Odd x(v);
        if (head_by_structure(x)) {
            ++report.heads;
            if (prev) {
                window.next_head = v;
                for (u128 y = *prev + 2; y < v; y += 2) {
                    const Odd o(y);
                    if (classify_type(o) == NumberType::A) {
                        continue;
                    }
                    ++window.non_a;
                    if (macro_step(o).to.value() == v) {
                        ++window.mapped_to_next;
                    }
                    if (rank(o) >= 2 && rule_two_links_up(o)) {
                        ++window.ups;
                    }
                }
                if (v - *prev != 24) {
                    ++report.gap_violations;
                }
                if (window.non_a != 8) {
                    ++report.non_a_violations;
                }
                if (window.mapped_to_next > 1) {
                    ++report.mapped_over_one;
                }
                if (window.ups > 3) {
                    ++report.ups_over_three;
                }
                report.windows.push_back(window);
            }
            prev = v;
            window = HeadWindow{v, 0};
        }
    }
    return report;
}

// ---- HydraTree ------------------------------------------------------------

HydraTree::HydraTree() { allocate(kNone); }

HydraTree HydraTree::from_parents(std::span<const int> parents) {
    if (parents.empty() || parents[0] != -1) {
        throw DomainError("hydra: parents[0] must be -1");
    }
    HydraTree t;
    for (std::size_t i = 1; i < parents.size(); ++i) {
        if (parents[i] < 0 || static_cast<std::size_t>(parents[i]) >= i) {
            throw DomainError("hydra: parent of node " + std::to_string(i) + " must precede it");
        }
        t.add_child(static_cast<NodeId>(parents[i]));
    }
    return t;
}

NodeId HydraTree::allocate(NodeId parent) {
    NodeId id;
    if (!free_.empty()) {
        id = free_.back();
        free_.pop_back();
    } else {
        id = static_cast<NodeId>(nodes_.size());
        nodes_.emplace_back();
    }
    Node& n = nodes_[id];
    n.parent = parent;
    n.children.clear();
    n.alive = true;
    ++live_;
    return id;
}

NodeId HydraTree::add_child(NodeId parent) {
    if (!alive(parent)) {
        throw DomainError("hydra: no live node " + std::to_string(parent));
    }
    const NodeId id = allocate(parent);
    nodes_[parent].children.push_back(id);
    return id;
}

bool HydraTree::alive(NodeId id) const { return id < nodes_.size() && nodes_[id].alive; }

NodeId HydraTree::parent(NodeId id) const { return nodes_.at(id).parent; }

const std::vector<NodeId>& HydraTree::children(NodeId id) const { return nodes_.at(id).children; }

bool HydraTree::is_head(NodeId id) const {
    return id != kRoot && alive(id) && nodes_[id].children.empty();
}

bool HydraTree::is_short(NodeId id) const { return is_head(id) && nodes_[id].parent == kRoot; }

std::size_t HydraTree::depth() const {
    std::size_t best = 0;
    std::vector<std::pair<NodeId, std::size_t>> stack{{kRoot, 0}};
    while (!stack.empty()) {
        auto [id, d] = stack.back();
        stack.pop_back();
        best = std::max(best, d);
        for (NodeId c : nodes_[id].children) {
            stack.emplace_back(c, d + 1);
        }
    }
    return best;
}

std::vector<NodeId> HydraTree::heads() const {
    std::vector<NodeId> out;
    std::vector<NodeId> stack{kRoot};
    while (!stack.empty()) {
        const NodeId id = stack.back();
        stack.pop_back();
        const auto& ch = nodes_[id].children;
        if (ch.empty() && id != kRoot) {
            out.push_back(id);
        }
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    return out;
}

bool HydraTree::copy_subtree(NodeId src, NodeId dst_parent, std::size_t& grown,
                             std::size_t max_live) {
    if (live_ >= max_live) {
        return false;
    }
    const NodeId copy = add_child(dst_parent);
    ++grown;
    // Indexing, not iterators: add_child may reallocate nodes_.
    for (std::size_t i = 0; i < nodes_[src].children.size(); ++i) {
        if (!copy_subtree(nodes_[src].children[i], copy, grown, max_live)) {
            return false;
        }
    }
    return true;
}

HydraTree::CutInfo HydraTree::cut(NodeId head, unsigned n, std::size_t max_live) {
    if (head == kRoot || !alive(head)) {
        throw NotAHead("node " + std::to_string(head) + " is not a head");
    }
    if (!nodes_[head].children.empty()) {
        throw NotAHead("node " + std::to_string(head) + " has children");
    }
    const NodeId p = nodes_[head].parent;
    auto& siblings = nodes_[p].children;
    // Regrowth appends, so recent heads sit at the back.
    siblings.erase(std::find(siblings.rbegin(), siblings.rend(), head).base() - 1);
    nodes_[head].alive = false;
    free_.push_back(head);
    --live_;

    CutInfo info{p == kRoot, 0};
    if (info.was_short) {
        return info;
    }
    const NodeId g = nodes_[p].parent;
    for (unsigned k = 0; k < n && !info.capped; ++k) {
        info.capped = !copy_subtree(p, g, info.grown, max_live);
    }
    return info;
}

namespace {

bool same_shape_at(const HydraTree& a, NodeId x, const HydraTree& b, NodeId y) {
    const auto& cx = a.children(x);
    const auto& cy = b.children(y);
    if (cx.size() != cy.size()) {
        return false;
    }
    for (std::size_t i = 0; i < cx.size(); ++i) {
        if (!same_shape_at(a, cx[i], b, cy[i])) {
            return false;
        }
    }
    return true;
}

} // namespace

bool same_shape(const HydraTree& a, const HydraTree& b) {
    return a.node_count() == b.node_count() &&
           same_shape_at(a, HydraTree::kRoot, b, HydraTree::kRoot);
}

HydraTree cut_head(HydraTree tree, NodeId head, unsigned n) {
    tree.cut(head, n);
    return tree;
}

// ---- strategies and regrowth ----------------------------------------------

HeadStrategy leftmost_head() {
    return [](const HydraTree& t) {
        NodeId id = HydraTree::kRoot;
        while (!t.children(id).empty()) {
            id = t.children(id).front();
        }
        return id;
    };
}

HeadStrategy rightmost_head() {
    return [](const HydraTree& t) {
        NodeId id = HydraTree::kRoot;
        while (!t.children(id).empty()) {
            id = t.children(id).back();
        }
        return id;
    };
}

HeadStrategy short_heads_first() {
    return [](const HydraTree& t) {
        for (NodeId c : t.children(HydraTree::kRoot)) {
            if (t.children(c).empty()) {
                return c;
            }
        }
        return leftmost_head()(t);
    };
}

RegrowthPolicy fixed_regrowth(unsigned n) {
    return [n](std::uint64_t) { return n; };
}

RegrowthPolicy step_indexed_regrowth() {
    return [](std::uint64_t step) { return static_cast<unsigned>(std::min<std::uint64_t>(step, ~0U)); };
}

// ---- the game -----------------------------------------------------------

GameResult play_game(HydraTree tree, const HeadStrategy& strategy, const RegrowthPolicy& regrowth,
                     const GameConfig& config) {
    GameResult result{GameOutcome::RootReached, 0, {}, {}};
    const unsigned per_step = std::max(1U, config.heads_per_step);
    std::uint64_t step = 0;
    while (!tree.only_root()) {
        if (result.steps >= config.budget || tree.node_count() > config.max_nodes) {
            result.outcome = GameOutcome::BudgetExceeded;
            return result;
        }
        ++step;
        const unsigned n = regrowth(step);
        for (unsigned k = 0; k < per_step && !tree.only_root(); ++k) {
            const NodeId head = strategy(tree);
            const auto info = tree.cut(head, n, config.max_nodes + 1);
            ++result.steps;
            if (config.record_trace) {
                result.trace.push_back(
                    {result.steps, head, info.was_short, info.was_short ? 0U : n, tree.node_count()});
            }
            if (info.capped) {
                result.outcome = GameOutcome::BudgetExceeded;
                return result;
            }
        }
        if (config.record_snapshots) {
            result.snapshots.push_back(tree);
        }
    }
    return result;
}

void write_cut_trace(std::ostream& out, std::span<const CutRecord> trace) {
    out << "step,head_id,was_short,regrowth_n,node_count\n";
    for (const auto& r : trace) {
        out << r.step << ',' << r.head << ',' << (r.was_short ? 1 : 0) << ',' << r.regrowth_n << ','
            << r.node_count << '\n';
    }
}

} // namespace feather
