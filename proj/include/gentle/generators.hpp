#pragma once
// Named example corpus and a seeded random generator of gentle presentations.
// Random quivers are drawn with per-vertex valence <= 2 on each side; the
// relation set is derived from sampled sign functions (which guarantees the
// successor-uniqueness axioms by construction) and resampled until the
// admissibility and connectivity axioms hold.

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/ag_invariant.hpp"
#include "gentle/presentation.hpp"

namespace gentle {

// Deterministic RNG wrapper: mt19937_64 is fully specified by the standard,
// and we avoid std::uniform_int_distribution (implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return (next() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

struct CorpusEntry {
    std::string name;
    std::string text;
    std::optional<PhiInvariant> expected_phi;
    std::optional<std::vector<long long>> expected_dims_char0;  // degrees 0..12
    std::optional<std::vector<long long>> expected_dims_char2;
    std::string note;

    GentlePresentation parse() const { return parse_presentation(text); }
};

namespace detail {

inline PhiInvariant make_phi(std::initializer_list<std::array<long long, 3>> triples) {
    PhiInvariant p;
    for (const auto& t : triples)
        p.add(static_cast<int>(t[0]), static_cast<int>(t[1]), t[2]);
    return p;
}

// head entries, then constant tail out to degree 12
inline std::vector<long long> dims_pattern(std::initializer_list<long long> head,
                                           long long tail) {
    std::vector<long long> v(head);
    while (v.size() < 13) v.push_back(tail);
    return v;
}

inline std::string linear_a_text(int n) {
    std::string s = "vertices:";
    for (int i = 1; i <= n; ++i) s += " " + std::to_string(i);
    s += "\n";
    for (int i = 1; i < n; ++i)
        s += "arrow a" + std::to_string(i) + ": " + std::to_string(i) + " -> " +
             std::to_string(i + 1) + "\n";
    return s;
}

inline std::string cycle_z_text(int n) {
    std::string s = "vertices:";
    for (int i = 1; i <= n; ++i) s += " " + std::to_string(i);
    s += "\n";
    for (int i = 1; i <= n; ++i)
        s += "arrow a" + std::to_string(i) + ": " + std::to_string(i) + " -> " +
             std::to_string(i % n + 1) + "\n";
    for (int i = 1; i <= n; ++i)
        s += "relation a" + std::to_string(i) + " a" + std::to_string(i % n + 1) + "\n";
    return s;
}

}  // namespace detail

// Named corpus. Expected dimension tables are frozen to degree 12; phi values
// were traced through the thread pairing by hand and are re-derived
// mechanically by the test suite.
inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        using detail::dims_pattern;
        using detail::make_phi;
        std::vector<CorpusEntry> v;

        v.push_back({"dual_numbers",
                     "vertices: 1\narrow a: 1 -> 1\nrelation a a\n",
                     make_phi({{1, 0, 1}, {0, 1, 1}}),
                     dims_pattern({2}, 1),
                     dims_pattern({2}, 2),
                     "K[x]/(x^2); classical dimensions"});

        for (int n = 1; n <= 6; ++n)
            v.push_back({"linear_A_" + std::to_string(n),
                         detail::linear_a_text(n),
                         make_phi({{n + 1, n - 1, 1}}),
                         dims_pattern({1}, 0),
                         dims_pattern({1}, 0),
                         "hereditary type A; HH vanishes in positive degrees"});

        v.push_back({"kronecker",
                     "vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n",
                     make_phi({{1, 1, 2}}),
                     dims_pattern({1, 3}, 0),
                     dims_pattern({1, 3}, 0),
                     "hereditary Kronecker quiver"});

        {
            std::vector<std::optional<std::vector<long long>>> z_dims0 = {
                std::nullopt,
                dims_pattern({2}, 1),  // Z_1 = dual numbers
                dims_pattern({1}, 1),
                std::vector<long long>{1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1},
                std::vector<long long>{1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1}};
            std::vector<std::optional<std::vector<long long>>> z_dims2 = {
                std::nullopt,
                dims_pattern({2}, 2),
                dims_pattern({1}, 1),
                std::vector<long long>{1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1},
                std::vector<long long>{1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1}};
            for (int n = 1; n <= 4; ++n)
                v.push_back({"cycle_Z_" + std::to_string(n),
                             detail::cycle_z_text(n),
                             make_phi({{n, 0, 1}, {0, n, 1}}),
                             z_dims0[n],
                             z_dims2[n],
                             "oriented cycle with full relations; self-injective Nakayama"});
        }

        v.push_back({"a3_one_relation",
                     "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation a b\n",
                     make_phi({{4, 2, 1}}),
                     dims_pattern({1}, 0),
                     dims_pattern({1}, 0),
                     "A_3 with one zero relation; derived equivalent to hereditary A_3"});

        v.push_back({"a4_two_relations",
                     "vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n"
                     "relation a b\nrelation b c\n",
                     make_phi({{5, 3, 1}}),
                     dims_pattern({1}, 0),
                     dims_pattern({1}, 0),
                     "A_4 with consecutive relations"});

        v.push_back({"two_critical_cycles",
                     "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\narrow c: 2 -> 2\n"
                     "relation a b\nrelation b a\nrelation c c\n",
                     make_phi({{1, 0, 1}, {0, 1, 1}, {0, 2, 1}}),
                     dims_pattern({2}, 2),
                     dims_pattern({2}, 3),
                     "critical cycles of lengths 1 and 2 plus a length-3 permitted thread"});

        v.push_back({"loop_with_tail",
                     "vertices: 1 2\narrow a: 1 -> 1\narrow b: 1 -> 2\nrelation a a\n",
                     make_phi({{2, 1, 1}, {0, 1, 1}}),
                     dims_pattern({1}, 1),
                     dims_pattern({1}, 2),
                     "dual numbers with a pendant arrow"});

        v.push_back({"double_track",
                     "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 1 -> 2\narrow c: 2 -> 3\n"
                     "relation b c\n",
                     make_phi({{1, 1, 1}, {2, 2, 1}}),
                     dims_pattern({1, 2}, 0),
                     dims_pattern({1, 2}, 0),
                     "parallel arrows feeding one relation"});

        v.push_back({"square_no_relations",
                     "vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\n"
                     "arrow d: 3 -> 4\n",
                     make_phi({{2, 2, 2}}),
                     dims_pattern({1, 1}, 0),
                     dims_pattern({1, 1}, 0),
                     "hereditary tilde-A_3 orientation of the square"});

        v.push_back({"square_two_relations",
                     "vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\n"
                     "arrow d: 3 -> 4\nrelation a b\nrelation c d\n",
                     make_phi({{2, 2, 2}}),
                     dims_pattern({1, 1}, 0),
                     dims_pattern({1, 1}, 0),
                     "square with both compositions zero"});

        v.push_back({"atilde_cycle",
                     "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 3 -> 2\narrow c: 3 -> 1\n",
                     make_phi({{1, 1, 1}, {2, 2, 1}}),
                     dims_pattern({1, 2}, 0),
                     dims_pattern({1, 2}, 0),
                     "hereditary tilde-A_2, acyclic orientation"});

        return v;
    }();
    return entries;
}

// ---------------------------------------------------------------------------
// Random generation.
// ---------------------------------------------------------------------------

inline GentlePresentation random_gentle(int max_vertices, int max_arrows, std::uint64_t seed,
                                        int max_attempts = 1000) {
    if (max_vertices < 1 || max_arrows < 1)
        throw std::invalid_argument("random_gentle: bounds must be >= 1");
    Rng rng(seed);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const int nv = static_cast<int>(rng.uniform(1, max_vertices));
        const int na = static_cast<int>(rng.uniform(0, max_arrows));
        if (na < nv - 1) continue;  // cannot be connected

        Quiver q;
        for (int i = 1; i <= nv; ++i) q.vertices.push_back(std::to_string(i));
        std::vector<int> outdeg(nv, 0), indeg(nv, 0);
        bool stuck = false;
        for (int i = 0; i < na && !stuck; ++i) {
            std::vector<int> srcs, dsts;
            for (int u = 0; u < nv; ++u) {
                if (outdeg[u] < 2) srcs.push_back(u);
                if (indeg[u] < 2) dsts.push_back(u);
            }
            if (srcs.empty() || dsts.empty()) {
                stuck = true;
                break;
            }
            int s = srcs[rng.uniform(0, static_cast<long long>(srcs.size()) - 1)];
            int t = dsts[rng.uniform(0, static_cast<long long>(dsts.size()) - 1)];
            ++outdeg[s];
            ++indeg[t];
            q.arrows.push_back(Arrow{std::string(1, static_cast<char>('a' + i % 26)) +
                                         (i >= 26 ? std::to_string(i / 26) : ""),
                                     s, t});
        }
        if (stuck) continue;

        // sample sigma/epsilon satisfying S1/S2, then read the relations off
        // the signs: (a,b) is a relation iff sigma(b) == epsilon(a)
        const int n = static_cast<int>(q.arrows.size());
        std::vector<int> sigma(n, 0), epsilon(n, 0);
        for (int u = 0; u < nv; ++u) {
            int prev = 0;
            for (int a = 0; a < n; ++a)
                if (q.arrows[a].source == u) {
                    sigma[a] = prev == 0 ? (rng.coin() ? 1 : -1) : -prev;
                    prev = sigma[a];
                }
            prev = 0;
            for (int a = 0; a < n; ++a)
                if (q.arrows[a].target == u) {
                    epsilon[a] = prev == 0 ? (rng.coin() ? 1 : -1) : -prev;
                    prev = epsilon[a];
                }
        }

        GentlePresentation pres;
        pres.quiver = std::move(q);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (pres.composable(a, b) && sigma[b] == epsilon[a]) pres.relations.insert({a, b});

        if (validate_gentle(pres).passed()) return pres;
    }
    throw std::runtime_error("random_gentle: no valid presentation within retry budget");
}

// Isomorphic copy under a seeded permutation of vertex/arrow ids and of the
// declaration order.
inline GentlePresentation relabel(const GentlePresentation& pres, std::uint64_t seed) {
    Rng rng(seed);
    const int nv = pres.quiver.num_vertices();
    const int na = pres.quiver.num_arrows();

    auto shuffled = [&](int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(p[i], p[rng.uniform(0, i)]);
        return p;
    };
    std::vector<int> vorder = shuffled(nv);  // new position -> old vertex
    std::vector<int> aorder = shuffled(na);

    std::vector<int> vnew(nv), anew(na);  // old index -> new index
    GentlePresentation out;
    for (int i = 0; i < nv; ++i) {
        vnew[vorder[i]] = i;
        out.quiver.vertices.push_back("v" + std::to_string(i + 1));
    }
    for (int i = 0; i < na; ++i) {
        const Arrow& a = pres.quiver.arrows[aorder[i]];
        anew[aorder[i]] = i;
        out.quiver.arrows.push_back(
            Arrow{"x" + std::to_string(i + 1), vnew[a.source], vnew[a.target]});
    }
    for (const auto& [a, b] : pres.relations) out.relations.insert({anew[a], anew[b]});
    return out;
}

}  // namespace gentle
