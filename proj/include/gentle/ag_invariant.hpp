#pragma once
// The Avella-Alaminos--Geiss derived invariant phi of a gentle algebra,
// computed by pairing permitted threads against forbidden threads into
// cycles, plus one (0, m) entry per primitive critical relation-cycle.

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentle/presentation.hpp"
#include "gentle/signs.hpp"

namespace gentle {

// A thread side-datum: the path together with the signs used by the pairing.
// For a non-trivial thread the signs are sigma(first arrow) / epsilon(last
// arrow); trivial threads carry signs fixed by the conventions below.
struct Thread {
    bool permitted = true;
    Path path;
    int start_vertex = -1;
    int end_vertex = -1;
    int start_sign = 0;
    int end_sign = 0;
};

// Finite multiset over N^2, stored as (n,m) -> multiplicity.
struct PhiInvariant {
    std::map<std::pair<int, int>, long long> entries;

    void add(int n, int m, long long mult = 1) { entries[{n, m}] += mult; }
    long long at(int n, int m) const {
        auto it = entries.find({n, m});
        return it == entries.end() ? 0 : it->second;
    }
    bool operator==(const PhiInvariant&) const = default;
};

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    bool is_integer() const { return den == 1; }
    bool operator==(const Rational&) const = default;
};

// ---------------------------------------------------------------------------
// Thread enumeration.
// ---------------------------------------------------------------------------

// Maximal relation-free arrow paths; every arrow lies in exactly one.
inline std::vector<Path> nontrivial_permitted_threads(const GentlePresentation& pres) {
    std::vector<Path> out;
    for (int a = 0; a < pres.quiver.num_arrows(); ++a) {
        if (predecessors(pres, a).nonzero) continue;  // not a thread start
        std::vector<int> walk{a};
        while (auto next = successors(pres, walk.back()).nonzero) walk.push_back(*next);
        out.push_back(Path::of(pres.quiver, walk));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Arrows lying on a cycle of the relation-successor map.
inline std::vector<bool> on_critical_cycle(const GentlePresentation& pres) {
    const int n = pres.quiver.num_arrows();
    std::vector<bool> on(n, false);
    for (int a = 0; a < n; ++a) {
        // follow relation successors; with out-degree <= 1 a walk of length n
        // from a returns to a iff a is on a cycle
        int cur = a;
        for (int steps = 0; steps < n; ++steps) {
            auto next = successors(pres, cur).relation;
            if (!next) {
                cur = -1;
                break;
            }
            cur = *next;
            if (cur == a) break;
        }
        if (cur == a) on[a] = true;
    }
    return on;
}

}  // namespace detail

// Primitive cyclic paths in which every consecutive pair, including the
// wrap-around, is a relation. Each reported once, written from its least
// arrow.
inline std::vector<Path> critical_cycles(const GentlePresentation& pres) {
    auto on = detail::on_critical_cycle(pres);
    std::vector<Path> out;
    std::vector<bool> seen(pres.quiver.num_arrows(), false);
    for (int a = 0; a < pres.quiver.num_arrows(); ++a) {
        if (!on[a] || seen[a]) continue;
        std::vector<int> cyc{a};
        seen[a] = true;
        for (int cur = *successors(pres, a).relation; cur != a;
             cur = *successors(pres, cur).relation) {
            cyc.push_back(cur);
            seen[cur] = true;
        }
        out.push_back(Path::of(pres.quiver, cyc));
    }
    return out;
}

// Maximal all-relation arrow paths among arrows not on critical cycles;
// every such arrow lies in exactly one.
inline std::vector<Path> nontrivial_forbidden_threads(const GentlePresentation& pres) {
    auto on = detail::on_critical_cycle(pres);
    std::vector<Path> out;
    for (int a = 0; a < pres.quiver.num_arrows(); ++a) {
        if (on[a]) continue;
        auto pred = predecessors(pres, a).relation;
        if (pred) continue;  // extendable to the left (predecessor is never on a cycle here)
        std::vector<int> walk{a};
        while (auto next = successors(pres, walk.back()).relation) walk.push_back(*next);
        out.push_back(Path::of(pres.quiver, walk));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Trivial threads. At a vertex v with at most one incoming arrow b and at
// most one outgoing arrow c:
//   e_v is a trivial permitted thread iff (b,c), when both exist, is NOT a
//   relation (no forbidden path passes through v is the dual reading);
//   e_v is a trivial forbidden thread iff (b,c), when both exist, IS a
//   relation.
// Signs: opposite to the incident arrow where one exists; where a side is
// bare the two kinds take opposite signs (the choice is inert, the pairing
// only ever matches them against each other).
// ---------------------------------------------------------------------------

inline std::pair<std::vector<Thread>, std::vector<Thread>> trivial_threads(
    const GentlePresentation& pres, const SignAssignment& signs) {
    std::vector<Thread> permitted, forbidden;
    const Quiver& q = pres.quiver;
    for (int v = 0; v < q.num_vertices(); ++v) {
        std::optional<int> in, out;
        int in_count = 0, out_count = 0;
        for (int a = 0; a < q.num_arrows(); ++a) {
            if (q.arrows[a].target == v) {
                ++in_count;
                in = a;
            }
            if (q.arrows[a].source == v) {
                ++out_count;
                out = a;
            }
        }
        if (in_count > 1 || out_count > 1) continue;

        bool has_permitted, has_forbidden;
        if (in && out) {
            bool through_rel = pres.is_relation(*in, *out);
            has_permitted = !through_rel;
            has_forbidden = through_rel;
        } else {
            has_permitted = has_forbidden = true;
        }

        auto make = [&](bool perm) {
            Thread t;
            t.permitted = perm;
            t.path = Path::trivial_at(v);
            t.start_vertex = t.end_vertex = v;
            if (out) t.start_sign = -signs.sigma[*out];
            else t.start_sign = perm ? +1 : -1;
            if (in) t.end_sign = -signs.epsilon[*in];
            else t.end_sign = perm ? +1 : -1;
            return t;
        };
        if (has_permitted) permitted.push_back(make(true));
        if (has_forbidden) forbidden.push_back(make(false));
    }
    return {permitted, forbidden};
}

namespace detail {

inline Thread make_nontrivial_thread(const GentlePresentation& pres, const SignAssignment& signs,
                                     bool permitted, const Path& p) {
    Thread t;
    t.permitted = permitted;
    t.path = p;
    t.start_vertex = p.source();
    t.end_vertex = p.target(pres.quiver);
    t.start_sign = signs.sigma[p.arrows.front()];
    t.end_sign = signs.epsilon[p.arrows.back()];
    return t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The invariant.
// ---------------------------------------------------------------------------

inline PhiInvariant phi(const GentlePresentation& pres) {
    PhiInvariant result;

    // Lambda = K: single vertex, no arrows.
    if (pres.quiver.num_vertices() == 1 && pres.quiver.num_arrows() == 0) {
        result.add(2, 0);
        return result;
    }

    SignAssignment signs = assign_signs(pres);
    auto [trivial_perm, trivial_forb] = trivial_threads(pres, signs);

    std::vector<Thread> H, F;
    for (const Path& p : nontrivial_permitted_threads(pres))
        H.push_back(detail::make_nontrivial_thread(pres, signs, true, p));
    for (auto& t : trivial_perm) H.push_back(std::move(t));
    for (const Path& p : nontrivial_forbidden_threads(pres))
        F.push_back(detail::make_nontrivial_thread(pres, signs, false, p));
    for (auto& t : trivial_forb) F.push_back(std::move(t));

    auto unique_match = [&](const std::vector<Thread>& pool, int vertex, int sign, bool at_end,
                            const char* what) {
        int found = -1;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const Thread& t = pool[i];
            bool hit = at_end ? (t.end_vertex == vertex && t.end_sign == sign)
                              : (t.start_vertex == vertex && t.start_sign == sign);
            if (!hit) continue;
            if (found >= 0)
                throw std::logic_error(std::string("phi: two candidates while matching ") + what);
            found = static_cast<int>(i);
        }
        if (found < 0)
            throw std::logic_error(std::string("phi: no candidate while matching ") + what);
        return found;
    };

    // From permitted thread h: the forbidden thread ending where h ends with
    // opposite end sign; from that, the permitted thread starting where it
    // starts with opposite start sign.
    std::vector<int> forb_of(H.size()), next_of(H.size());
    for (std::size_t h = 0; h < H.size(); ++h) {
        forb_of[h] = unique_match(F, H[h].end_vertex, -H[h].end_sign, true, "forbidden end");
        const Thread& f = F[forb_of[h]];
        next_of[h] = unique_match(H, f.start_vertex, -f.start_sign, false, "permitted start");
    }

    std::vector<bool> used(H.size(), false);
    for (std::size_t h0 = 0; h0 < H.size(); ++h0) {
        if (used[h0]) continue;
        int n = 0;
        long long m = 0;
        std::size_t h = h0;
        do {
            if (used[h]) throw std::logic_error("phi: thread consumed twice");
            used[h] = true;
            ++n;
            m += F[forb_of[h]].path.length();
            h = static_cast<std::size_t>(next_of[h]);
        } while (h != h0);
        result.add(n, static_cast<int>(m));
    }

    for (const Path& cyc : critical_cycles(pres)) result.add(0, cyc.length());

    return result;
}

// psi(n) = sum of phi(0,d) over divisors d of n.
inline long long psi(const PhiInvariant& phi_inv, int n) {
    if (n <= 0) throw std::invalid_argument("psi: n must be positive");
    long long total = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) total += phi_inv.at(0, d);
    return total;
}

// (1/2) * sum phi(n,m) * (n - m); equals the Euler characteristic of the
// quiver for every gentle presentation, which callers verify as a checksum.
inline Rational euler_from_phi(const PhiInvariant& phi_inv) {
    long long twice = 0;
    for (const auto& [key, mult] : phi_inv.entries)
        twice += mult * (key.first - key.second);
    return Rational(twice, 2);
}

}  // namespace gentle
