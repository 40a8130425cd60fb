#pragma once
// Quivers with quadratic monomial relations: the combinatorial presentation
// of a gentle algebra, with parsing, validation and the nonzero-path basis.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct Arrow {
    std::string name;
    int source = -1;
    int target = -1;
};

// Finite directed multigraph. Vertices and arrows keep their declaration
// order; every enumeration downstream uses that order.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return static_cast<int>(i);
        return -1;
    }
    int arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return static_cast<int>(i);
        return -1;
    }
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }
};

// #vertices - #arrows
inline int euler_characteristic(const Quiver& q) {
    return q.num_vertices() - q.num_arrows();
}

// A path: either the trivial path at a vertex, or a nonempty composable
// arrow sequence. Composition reads left to right ("ab" = a then b).
// `vertex` is always the source vertex.
struct Path {
    int vertex = -1;
    std::vector<int> arrows;

    static Path trivial_at(int v) { return Path{v, {}}; }
    static Path of(const Quiver& q, std::vector<int> as) {
        Path p;
        p.arrows = std::move(as);
        p.vertex = q.arrows[p.arrows.front()].source;
        return p;
    }

    bool trivial() const { return arrows.empty(); }
    int length() const { return static_cast<int>(arrows.size()); }
    int source() const { return vertex; }
    int target(const Quiver& q) const {
        return arrows.empty() ? vertex : q.arrows[arrows.back()].target;
    }

    std::string str(const Quiver& q) const {
        if (arrows.empty()) return "e_" + q.vertices[vertex];
        std::string s;
        for (int a : arrows) s += q.arrows[a].name;
        return s;
    }

    auto operator<=>(const Path&) const = default;
};

// The relation set holds ordered composable pairs (a,b): the length-2 path
// ab is zero in the algebra.
struct GentlePresentation {
    Quiver quiver;
    std::set<std::pair<int, int>> relations;

    bool is_relation(int a, int b) const {
        return relations.count({a, b}) > 0;
    }
    bool composable(int a, int b) const {
        return quiver.arrows[a].target == quiver.arrows[b].source;
    }
};

// ---------------------------------------------------------------------------
// Input format (line oriented, '#' starts a comment):
//
//   vertices: <id> <id> ...
//   arrow <id>: <vertex> -> <vertex>
//   relation <arrow-id> <arrow-id>
// ---------------------------------------------------------------------------

inline GentlePresentation parse_presentation(const std::string& text) {
    GentlePresentation pres;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::vector<std::string> tok;
        for (std::string t; line >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        if (tok[0] == "vertices:") {
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (pres.quiver.vertex_index(tok[i]) >= 0)
                    throw ParseError(lineno, "duplicate vertex id '" + tok[i] + "'");
                pres.quiver.vertices.push_back(tok[i]);
            }
        } else if (tok[0] == "arrow") {
            if (tok.size() != 5 || tok[3] != "->" || tok[1].size() < 2 || tok[1].back() != ':')
                throw ParseError(lineno, "expected 'arrow <id>: <vertex> -> <vertex>'");
            std::string name = tok[1].substr(0, tok[1].size() - 1);
            if (pres.quiver.arrow_index(name) >= 0)
                throw ParseError(lineno, "duplicate arrow id '" + name + "'");
            int s = pres.quiver.vertex_index(tok[2]);
            int t = pres.quiver.vertex_index(tok[4]);
            if (s < 0) throw ParseError(lineno, "unknown vertex '" + tok[2] + "'");
            if (t < 0) throw ParseError(lineno, "unknown vertex '" + tok[4] + "'");
            pres.quiver.arrows.push_back(Arrow{name, s, t});
        } else if (tok[0] == "relation") {
            if (tok.size() != 3)
                throw ParseError(lineno, "expected 'relation <arrow-id> <arrow-id>'");
            int a = pres.quiver.arrow_index(tok[1]);
            int b = pres.quiver.arrow_index(tok[2]);
            if (a < 0) throw ParseError(lineno, "unknown arrow '" + tok[1] + "'");
            if (b < 0) throw ParseError(lineno, "unknown arrow '" + tok[2] + "'");
            if (!pres.composable(a, b))
                throw ParseError(lineno, "relation " + tok[1] + " " + tok[2] +
                                             " is not composable (target/source mismatch)");
            pres.relations.insert({a, b});
        } else {
            throw ParseError(lineno, "unrecognized directive '" + tok[0] + "'");
        }
    }
    if (pres.quiver.vertices.empty())
        throw ParseError(lineno, "no vertices declared");
    return pres;
}

// Canonical emission; parse(serialize(p)) == p.
inline std::string serialize_presentation(const GentlePresentation& pres) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : pres.quiver.vertices) out << ' ' << v;
    out << '\n';
    for (const auto& a : pres.quiver.arrows)
        out << "arrow " << a.name << ": " << pres.quiver.vertices[a.source] << " -> "
            << pres.quiver.vertices[a.target] << '\n';
    for (const auto& [a, b] : pres.relations)
        out << "relation " << pres.quiver.arrows[a].name << ' ' << pres.quiver.arrows[b].name
            << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Gentle axioms.
//   G1  every vertex has valence <= 2 on each side
//   G2  each arrow has at most one relation successor and one nonzero successor
//   G3  dually for predecessors
//   G4  no relation-free cyclic path (finite dimensionality)
//   G5  connected underlying graph
// ---------------------------------------------------------------------------

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const AxiomCheck& c) { return c.pass; });
    }
    std::string summary() const {
        std::string s;
        for (const auto& c : checks) {
            s += c.axiom;
            s += c.pass ? ": pass" : ": FAIL (" + c.witness + ")";
            s += '\n';
        }
        return s;
    }
};

inline ValidationReport validate_gentle(const GentlePresentation& pres) {
    const Quiver& q = pres.quiver;
    ValidationReport rep;

    AxiomCheck g1{"G1", true, ""};
    for (int v = 0; v < q.num_vertices() && g1.pass; ++v) {
        int in = 0, out = 0;
        for (const auto& a : q.arrows) {
            if (a.source == v) ++out;
            if (a.target == v) ++in;
        }
        if (in > 2 || out > 2) {
            g1.pass = false;
            g1.witness = "vertex " + q.vertices[v] + " has " + std::to_string(in) +
                         " incoming / " + std::to_string(out) + " outgoing arrows";
        }
    }
    rep.checks.push_back(g1);

    AxiomCheck g2{"G2", true, ""};
    for (int a = 0; a < q.num_arrows() && g2.pass; ++a) {
        int rel = 0, nonzero = 0;
        for (int b = 0; b < q.num_arrows(); ++b) {
            if (!pres.composable(a, b)) continue;
            (pres.is_relation(a, b) ? rel : nonzero)++;
        }
        if (rel > 1 || nonzero > 1) {
            g2.pass = false;
            g2.witness = "arrow " + q.arrows[a].name + " has " + std::to_string(rel) +
                         " relation successors and " + std::to_string(nonzero) +
                         " nonzero successors";
        }
    }
    rep.checks.push_back(g2);

    AxiomCheck g3{"G3", true, ""};
    for (int b = 0; b < q.num_arrows() && g3.pass; ++b) {
        int rel = 0, nonzero = 0;
        for (int a = 0; a < q.num_arrows(); ++a) {
            if (!pres.composable(a, b)) continue;
            (pres.is_relation(a, b) ? rel : nonzero)++;
        }
        if (rel > 1 || nonzero > 1) {
            g3.pass = false;
            g3.witness = "arrow " + q.arrows[b].name + " has " + std::to_string(rel) +
                         " relation predecessors and " + std::to_string(nonzero) +
                         " nonzero predecessors";
        }
    }
    rep.checks.push_back(g3);

    // G4: cycle search in the digraph on arrows whose edges are the
    // composable non-relation pairs. Runs even when G2/G3 fail.
    AxiomCheck g4{"G4", true, ""};
    {
        const int n = q.num_arrows();
        std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
        std::vector<int> stack, pos_in_stack(n, -1);
        std::function<bool(int)> dfs = [&](int a) -> bool {
            state[a] = 1;
            pos_in_stack[a] = static_cast<int>(stack.size());
            stack.push_back(a);
            for (int b = 0; b < n; ++b) {
                if (!pres.composable(a, b) || pres.is_relation(a, b)) continue;
                if (state[b] == 1) {
                    std::string cyc;
                    for (std::size_t i = pos_in_stack[b]; i < stack.size(); ++i)
                        cyc += q.arrows[stack[i]].name;
                    g4.pass = false;
                    g4.witness = "relation-free cycle " + cyc;
                    return true;
                }
                if (state[b] == 0 && dfs(b)) return true;
            }
            stack.pop_back();
            pos_in_stack[a] = -1;
            state[a] = 2;
            return false;
        };
        for (int a = 0; a < n && g4.pass; ++a)
            if (state[a] == 0) dfs(a);
    }
    rep.checks.push_back(g4);

    AxiomCheck g5{"G5", true, ""};
    {
        std::vector<int> comp(q.num_vertices(), -1);
        std::vector<int> work{0};
        if (!comp.empty()) comp[0] = 0;
        while (!work.empty()) {
            int v = work.back();
            work.pop_back();
            for (const auto& a : q.arrows) {
                int u = -1;
                if (a.source == v) u = a.target;
                else if (a.target == v) u = a.source;
                if (u >= 0 && comp[u] < 0) {
                    comp[u] = 0;
                    work.push_back(u);
                }
            }
        }
        for (int v = 0; v < q.num_vertices(); ++v)
            if (comp[v] < 0) {
                g5.pass = false;
                g5.witness = "vertex " + q.vertices[v] + " unreachable from " + q.vertices[0];
                break;
            }
    }
    rep.checks.push_back(g5);

    return rep;
}

inline void require_gentle(const GentlePresentation& pres) {
    ValidationReport rep = validate_gentle(pres);
    if (!rep.passed())
        throw std::invalid_argument("presentation is not gentle:\n" + rep.summary());
}

// ---------------------------------------------------------------------------
// Successor/predecessor structure. On a valid gentle presentation each arrow
// has at most one relation successor and at most one nonzero successor (G2),
// and dually (G3).
// ---------------------------------------------------------------------------

struct Successors {
    std::optional<int> relation;
    std::optional<int> nonzero;
};

inline Successors successors(const GentlePresentation& pres, int a) {
    Successors s;
    for (int b = 0; b < pres.quiver.num_arrows(); ++b) {
        if (!pres.composable(a, b)) continue;
        if (pres.is_relation(a, b)) s.relation = b;
        else s.nonzero = b;
    }
    return s;
}

inline Successors predecessors(const GentlePresentation& pres, int b) {
    Successors s;
    for (int a = 0; a < pres.quiver.num_arrows(); ++a) {
        if (!pres.composable(a, b)) continue;
        if (pres.is_relation(a, b)) s.relation = a;
        else s.nonzero = a;
    }
    return s;
}

// All nonzero paths: the trivial paths plus every arrow path containing no
// relation pair. These form a K-basis of the algebra. G4 bounds their length,
// so the walk along the nonzero-successor map terminates.
// Sorted canonically: trivial paths by vertex, then by (source, arrow sequence).
inline std::vector<Path> nonzero_paths(const GentlePresentation& pres) {
    std::vector<Path> out;
    for (int v = 0; v < pres.quiver.num_vertices(); ++v)
        out.push_back(Path::trivial_at(v));
    for (int a = 0; a < pres.quiver.num_arrows(); ++a) {
        std::vector<int> walk{a};
        while (true) {
            out.push_back(Path::of(pres.quiver, walk));
            auto next = successors(pres, walk.back()).nonzero;
            if (!next) break;
            walk.push_back(*next);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gentle
