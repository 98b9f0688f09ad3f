#include "dualham/dot.hpp"

#include <sstream>

namespace dualham {

namespace {

std::string node_name(const io::InstanceDocument& doc, Vertex v) {
    if (!doc.fibers) return "\"" + std::to_string(v) + "\"";
    const int base = doc.fibers->base_size;
    return "\"" + std::to_string(v % base) + "@" + std::to_string(v / base) + "\"";
}

const char* fill(Color c) { return c == Color::red ? "gray" : "black"; }

std::string quartet_role(const Quartet& q, Vertex v) {
    if (v == q.i_red) return "i_red";
    if (v == q.i_blue) return "i_blue";
    if (v == q.j_red) return "j_red";
    if (v == q.j_blue) return "j_blue";
    return {};
}

}  // namespace

std::string export_dot(const io::InstanceDocument& doc, const DotStyle& style) {
    const auto& g = doc.graph;
    const auto& c = doc.coloring;
    std::ostringstream out;
    out << "graph instance {\n";
    out << "  node [shape=circle, style=filled, label=\"\", width=0.2];\n";

    auto emit_node = [&](Vertex v, const char* indent) {
        out << indent << node_name(doc, v) << " [fillcolor=" << fill(c[v]) << ", color=" << fill(c[v]);
        if (style.quartet_labels) {
            if (auto role = quartet_role(doc.quartet, v); !role.empty()) out << ", xlabel=\"" << role << "\"";
        }
        out << "];\n";
    };

    if (doc.fibers && style.clusters) {
        const int base = doc.fibers->base_size;
        for (int x = 0; x < doc.fibers->count; ++x) {
            out << "  subgraph cluster_" << x << " {\n";
            out << "    label=\"x=" << x << "\";\n";
            for (Vertex v = x * base; v < (x + 1) * base; ++v) emit_node(v, "    ");
            out << "  }\n";
        }
    } else {
        for (Vertex v = 0; v < g.vertex_count(); ++v) emit_node(v, "  ");
    }

    for (const auto& e : g.edges()) {
        out << "  " << node_name(doc, e.u) << " -- " << node_name(doc, e.v);
        if (c[e.u] == c[e.v]) {
            out << " [color=" << fill(c[e.u]) << ", penwidth=3];\n";
        } else {
            out << " [style=dotted];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace dualham
