#include <functional>
#include <sstream>

#include "feather/chain.hpp"
#include "feather/hydra.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace feather;

namespace {

// Value-semantics hydra, leftmost play only. Shares no code with HydraTree.
struct Nest {
    std::vector<Nest> kids;

    [[nodiscard]] std::size_t size() const {
        std::size_t n = 1;
        for (const auto& k : kids) n += k.size();
        return n;
    }
};

Nest nest_from_parents(const std::vector<int>& parents) {
    std::vector<std::vector<int>> kids(parents.size());
    for (std::size_t i = 1; i < parents.size(); ++i) kids[parents[i]].push_back(static_cast<int>(i));
    std::function<Nest(int)> build = [&](int id) {
        Nest n;
        for (int k : kids[id]) n.kids.push_back(build(k));
        return n;
    };
    return build(0);
}

// Leftmost cut; returns whether the head was short.
bool nest_cut_leftmost(Nest& root, unsigned n) {
    std::vector<Nest*> path{&root};
    while (!path.back()->kids.empty()) path.push_back(&path.back()->kids.front());
    Nest* parent = path[path.size() - 2];
    parent->kids.erase(parent->kids.begin());
    if (path.size() == 2) return true;
    Nest* grand = path[path.size() - 3];
    const Nest copy = *parent;
    for (unsigned k = 0; k < n; ++k) grand->kids.push_back(copy);
    return false;
}

std::vector<std::vector<int>> trees_up_to(std::size_t max_nodes, int max_depth) {
    std::vector<std::vector<int>> out;
    std::vector<int> par{-1}, depth{0};
    std::function<void()> rec = [&] {
        if (par.size() >= 2) out.push_back(par);
        if (par.size() == max_nodes) return;
        for (int v = static_cast<int>(par.size()) - 1; v != -1; v = par[v]) {
            if (depth[v] >= max_depth) continue;
            par.push_back(v);
            depth.push_back(depth[v] + 1);
            rec();
            par.pop_back();
            depth.pop_back();
        }
    };
    rec();
    return out;
}

} // namespace

TEST_SUITE("hydra") {

TEST_CASE("heads on the odd numbers") {
    CHECK(is_ag(odd(17)));
    CHECK(is_ag(odd(41)));
    CHECK_FALSE(is_ag(odd(15)));
    CHECK(heads_up_to(odd(1025)) == 43);
    CHECK(heads_up_to(odd(17)) == 1);
    CHECK(heads_up_to(odd(41)) == 2);
    for (std::uint64_t x = 17; x < 20000; x += 2) {
        CHECK(heads_up_to(Odd(x)) == oracle::count_17_mod_24(x));
    }
}

TEST_CASE("A_g characterization below 10^6") {
    std::size_t mismatches = 0;
    for (std::uint64_t x = 1; x <= 1'000'000; x += 2) {
        const Odd o(x);
        const bool structural = oracle::last_ternary_digit(x) == 2 && x % 8 == 1 && x >= 9;
        const bool residue = x % 24 == 17;
        mismatches += (structural == residue && is_ag(o) == residue &&
                       (classify_type(o) == NumberType::A &&
                        verticality(o) == Verticality::VerticalEven) == residue)
                          ? 0
                          : 1;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("cuts of the chain from 15") {
    const Chain c = follow_a_branch(odd(15), 31);
    const auto cuts = map_run_to_cuts(c.steps);
    const std::vector<unsigned long long> want{1025, 809, 425, 377, 593, 233, 137, 161, 41};
    REQUIRE(cuts.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(cuts[i] == odd(want[i]));
        CHECK(cuts[i].value() % 24 == 17);
    }
    CHECK(map_run_to_cuts({}).empty());
    const std::vector<ChainStep> no_heads{{odd(15), odd(81), RuleId::R3}};
    CHECK(map_run_to_cuts(no_heads).empty());
    const std::vector<ChainStep> forged{{odd(25), odd(11), RuleId::R5}};
    CHECK_THROWS_AS(map_run_to_cuts(forged), HeadInvariantViolation);
}

TEST_CASE("head spacing") {
    const HeadGapReport r = head_gap_check(odd(10001));
    CHECK(r.heads == heads_up_to(odd(10001)));
    CHECK(r.gap_violations == 0);
    CHECK(r.non_a_violations == 0);
    REQUIRE_FALSE(r.windows.empty());
    const HeadWindow& first = r.windows.front();
    CHECK(first.head == 17);
    CHECK(first.next_head == 41);
    CHECK(first.non_a == 8);
    // 27 = S(13), 13 vertical odd: a rank-2 type-B up between 17 and 41
    CHECK(classify_type(odd(27)) == NumberType::B);
    CHECK(rank(odd(27)) == 2);
    CHECK(rule_two_links_up(odd(27)));
    CHECK(first.ups >= 1);
    for (const auto& w : r.windows) {
        CHECK(w.next_head - w.head == 24);
    }
}

TEST_CASE("cutting heads") {
    const std::vector<int> one_head{-1, 0};
    HydraTree t = HydraTree::from_parents(one_head);
    CHECK(t.is_short(1));
    const HydraTree cut = cut_head(t, 1, 5);
    CHECK(cut.only_root());
    CHECK(t.node_count() == 2);  // the argument is untouched

    // root - a - h, n = 2: h goes, a is copied twice under the root
    const std::vector<int> path{-1, 0, 1};
    const HydraTree after = cut_head(HydraTree::from_parents(path), 2, 2);
    CHECK(after.node_count() == 4);
    CHECK(after.children(HydraTree::kRoot).size() == 3);
    for (NodeId c : after.children(HydraTree::kRoot)) {
        CHECK(after.children(c).empty());
        CHECK(after.is_short(c));
    }
    const std::vector<int> three_leaves{-1, 0, 0, 0};
    CHECK(same_shape(after, HydraTree::from_parents(three_leaves)));

    HydraTree p = HydraTree::from_parents(path);
    CHECK_THROWS_AS(p.cut(HydraTree::kRoot, 1), NotAHead);
    CHECK_THROWS_AS(p.cut(1, 1), NotAHead);
    CHECK_THROWS_AS(p.cut(9, 1), NotAHead);
    CHECK_FALSE(p.is_short(2));
    CHECK(p.is_head(2));
    CHECK(p.depth() == 2);
}

TEST_CASE("bad parent arrays") {
    const std::vector<int> no_root{0, 0};
    const std::vector<int> forward{-1, 2, 0};
    CHECK_THROWS_AS(HydraTree::from_parents(no_root), DomainError);
    CHECK_THROWS_AS(HydraTree::from_parents(forward), DomainError);
}

TEST_CASE("depth-1 hydras take one cut per head") {
    for (int k = 1; k <= 20; ++k) {
        std::vector<int> parents(k + 1, 0);
        parents[0] = -1;
        for (const auto& strategy : {leftmost_head(), rightmost_head(), short_heads_first()}) {
            const GameResult r = play_game(HydraTree::from_parents(parents), strategy,
                                           step_indexed_regrowth());
            CHECK(r.outcome == GameOutcome::RootReached);
            CHECK(r.steps == static_cast<std::uint64_t>(k));
        }
    }
}

TEST_CASE("frozen game lengths") {
    const std::vector<int> path3{-1, 0, 1, 2};
    const std::vector<int> fan{-1, 0, 1, 1, 1};
    const std::vector<int> two{-1, 0, 1, 1};
    auto steps = [](const std::vector<int>& p, const HeadStrategy& s, const RegrowthPolicy& g) {
        const GameResult r = play_game(HydraTree::from_parents(p), s, g);
        REQUIRE(r.outcome == GameOutcome::RootReached);
        return r.steps;
    };
    CHECK(steps(path3, leftmost_head(), step_indexed_regrowth()) == 23);
    CHECK(steps(path3, rightmost_head(), step_indexed_regrowth()) == 37);
    CHECK(steps(two, leftmost_head(), step_indexed_regrowth()) == 11);
    CHECK(steps(two, rightmost_head(), step_indexed_regrowth()) == 13);
    CHECK(steps(fan, leftmost_head(), step_indexed_regrowth()) == 143);
    CHECK(steps(fan, leftmost_head(), fixed_regrowth(1)) > 3);
}

TEST_CASE("every hydra with at most 4 nodes finishes under every strategy") {
    for (const auto& p : trees_up_to(4, 3)) {
        for (const auto& strategy : {leftmost_head(), rightmost_head(), short_heads_first()}) {
            const GameResult r =
                play_game(HydraTree::from_parents(p), strategy, step_indexed_regrowth());
            CHECK(r.outcome == GameOutcome::RootReached);
        }
    }
}

TEST_CASE("some 5-node depth-3 hydras outgrow the node cap") {
    // root - a - b with two heads on b: leftmost play with n = step number
    const std::vector<int> p{-1, 0, 1, 2, 2};
    GameConfig config;
    config.max_nodes = 1'000'000;
    const GameResult r = play_game(HydraTree::from_parents(p), leftmost_head(),
                                   step_indexed_regrowth(), config);
    CHECK(r.outcome == GameOutcome::BudgetExceeded);
    CHECK(r.steps < 10'000);
}

TEST_CASE("leftmost games agree with the nested model") {
    std::size_t compared = 0;
    for (const auto& p : trees_up_to(6, 3)) {
        GameConfig config;
        config.budget = 5000;
        config.max_nodes = 200'000;
        config.record_trace = true;
        const GameResult r =
            play_game(HydraTree::from_parents(p), leftmost_head(), step_indexed_regrowth(), config);
        if (r.outcome != GameOutcome::RootReached) {
            continue;
        }
        ++compared;
        Nest model = nest_from_parents(p);
        for (const CutRecord& rec : r.trace) {
            const bool was_short = nest_cut_leftmost(model, static_cast<unsigned>(rec.step));
            REQUIRE(was_short == rec.was_short);
            REQUIRE(model.size() == rec.node_count);
        }
        CHECK(model.kids.empty());
    }
    CHECK(compared >= 30);
}

TEST_CASE("multi-cut steps") {
    const std::vector<int> p{-1, 0, 0, 0, 0, 0, 0};
    GameConfig config;
    config.heads_per_step = 4;
    config.record_trace = true;
    const GameResult r = play_game(HydraTree::from_parents(p), leftmost_head(), fixed_regrowth(3), config);
    CHECK(r.outcome == GameOutcome::RootReached);
    CHECK(r.steps == 6);
    CHECK(r.trace.size() == 6);
}

TEST_CASE("budgets and snapshots") {
    const std::vector<int> p{-1, 0, 1, 2};
    GameConfig config;
    config.budget = 5;
    config.record_snapshots = true;
    const GameResult r = play_game(HydraTree::from_parents(p), leftmost_head(), step_indexed_regrowth(), config);
    CHECK(r.outcome == GameOutcome::BudgetExceeded);
    CHECK(r.steps == 5);
    CHECK(r.snapshots.size() == 5);
    const GameResult zero = play_game(HydraTree::from_parents(p), leftmost_head(), fixed_regrowth(1),
                                      GameConfig{.budget = 0});
    CHECK(zero.outcome == GameOutcome::BudgetExceeded);
    CHECK(zero.steps == 0);
    CHECK(play_game(HydraTree{}, leftmost_head(), fixed_regrowth(1)).steps == 0);
}

TEST_CASE("trace text") {
    const std::vector<int> p{-1, 0, 1};
    GameConfig config;
    config.record_trace = true;
    const GameResult r = play_game(HydraTree::from_parents(p), leftmost_head(), fixed_regrowth(2), config);
    std::ostringstream out;
    write_cut_trace(out, r.trace);
    CHECK(out.str() ==
          "step,head_id,was_short,regrowth_n,node_count\n"
          "1,2,0,2,4\n"
          "2,1,1,0,3\n"
          "3,2,1,0,2\n"
          "4,3,1,0,1\n");
}

}
