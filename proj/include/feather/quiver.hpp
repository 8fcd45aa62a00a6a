#ifndef FEATHER_QUIVER_HPP
#define FEATHER_QUIVER_HPP

#include <string>
#include <vector>

#include "feather/rules.hpp"

namespace feather {

struct QuiverNode {
    Odd value;
    NumberType type;
    Verticality vert;
    bool ag;
};

/// Labelled multigraph over the odd numbers up to a limit. Nodes are sorted by
/// value; edges are sorted by (lhs, rhs, rule) and unique on that triple.
struct Quiver {
    std::vector<QuiverNode> nodes;
    std::vector<Claim> edges;
};

/// All odd numbers <= limit, with the Rule 1, Rule 2 (generalized family),
/// R_a, R_b, R_c and Rule 5 claims whose endpoints both lie <= limit.
/// Identity claims (1 == 1) are dropped.
Quiver build_quiver(Odd limit);

/// Graphviz text. Nodes are filled by type (A teal, B gold, C purple) and
/// edges are labelled with the rule tag.
std::string export_quiver_dot(const Quiver& q);

} // namespace feather

#endif // FEATHER_QUIVER_HPP
