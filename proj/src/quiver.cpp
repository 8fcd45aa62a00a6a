#include "feather/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "feather/hydra.hpp"

namespace feather {

Quiver build_quiver(Odd limit) {
    const u128 lim = limit.value();
    Quiver q;
    std::vector<Claim> edges;
    auto keep = [&](const Claim& c) {
        if (c.lhs != c.rhs && c.lhs.value() <= lim && c.rhs.value() <= lim) {
            edges.push_back(c);
        }
    };

    for (u128 v = 1; v <= lim; v += 2) {
        const Odd x(v);
        q.nodes.push_back({x, classify_type(x), verticality(x), is_ag(x)});

        // Targets grow at least linearly, so anything above the limit is
        // skipped before it is built.
        if (v <= (lim - 1) / 4) {
            keep(rule_one(x));
        }
        if (v <= (lim - 1) / 2) {
            if (auto c = rule_two_up(x)) {
                keep(*c);
            }
        }
        switch (classify_type(x)) {
        case NumberType::A: keep(claim_r_a(x)); break;
        case NumberType::B:
            if (v <= lim / 5) {
                keep(claim_r_b(x));
            }
            break;
        case NumberType::C: keep(claim_r_c(x)); break;
        }
        if (auto p = rule_five_params(x)) {
            for (const Claim& c : rule_five_full(p->x, p->n)) {
                keep(c);
            }
        }
    }

    auto key = [](const Claim& c) {
        return std::make_tuple(c.lhs.value(), c.rhs.value(), static_cast<int>(c.rule));
    };
    std::sort(edges.begin(), edges.end(),
              [&](const Claim& a, const Claim& b) { return key(a) < key(b); });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [&](const Claim& a, const Claim& b) { return key(a) == key(b); }),
                edges.end());
    q.edges = std::move(edges);
    return q;
}

std::string export_quiver_dot(const Quiver& q) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    out << "  node [shape=circle, style=filled];\n";
    for (const auto& n : q.nodes) {
        const char* color = "purple";
        const char* fill = "#f2e6f2";
        switch (n.type) {
        case NumberType::A:
            color = "teal";
            fill = "#e6f2f2";
            break;
        case NumberType::B:
            color = "gold";
            fill = "#fff8e0";
            break;
        case NumberType::C: break;
        }
        out << "  \"" << to_string(n.value) << "\" [color=" << color << ", fillcolor=\"" << fill
            << "\", type=" << name(n.type);
        if (n.ag) {
            out << ", penwidth=3, xlabel=\"Ag\"";
        }
        out << "];\n";
    }
    for (const auto& e : q.edges) {
        out << "  \"" << to_string(e.lhs) << "\" -> \"" << to_string(e.rhs) << "\" [label=\""
            << name(e.rule) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace feather
