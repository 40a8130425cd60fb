#pragma once
// Independent ground truth for Hochschild cohomology dimensions: the cochain
// complex induced by the bimodule projective resolution of a quadratic
// monomial algebra. Degree-n generators are the length-n paths all of whose
// consecutive pairs are relations; Hom into the algebra is spanned by
// parallel nonzero paths, and ranks of the integer coboundary matrices give
// the dimensions over any coefficient field.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentle/int_matrix.hpp"
#include "gentle/presentation.hpp"

namespace gentle {

struct DimSeries {
    long long characteristic = 0;  // 0 or a prime
    std::vector<long long> dims;   // dims[i] = dim HH^i

    bool operator==(const DimSeries&) const = default;
};

// Degree-n critical paths: walks of length n under the relation-successor
// map (degree 0: trivial paths at the vertices). Ordered by first arrow.
inline std::vector<Path> critical_paths(const GentlePresentation& pres, int n) {
    std::vector<Path> out;
    if (n == 0) {
        for (int v = 0; v < pres.quiver.num_vertices(); ++v)
            out.push_back(Path::trivial_at(v));
        return out;
    }
    for (int a = 0; a < pres.quiver.num_arrows(); ++a) {
        std::vector<int> walk{a};
        while (static_cast<int>(walk.size()) < n) {
            auto next = successors(pres, walk.back()).relation;
            if (!next) break;
            walk.push_back(*next);
        }
        if (static_cast<int>(walk.size()) == n) out.push_back(Path::of(pres.quiver, walk));
    }
    return out;
}

// Degree-n piece: basis of parallel pairs (w, p) and the integer coboundary
// matrix into degree n+1.
struct CochainDegree {
    int degree = 0;
    std::vector<std::pair<Path, Path>> basis;  // (critical path w, parallel nonzero path p)
    IntMatrix coboundary;                      // rows: degree n+1 basis, cols: degree n basis
};

struct CochainComplex {
    std::vector<CochainDegree> degrees;  // 0..N
};

namespace detail {

struct AlgebraTables {
    std::vector<Path> nz;            // nonzero paths, canonical order
    std::map<Path, int> nz_index;    // path -> position in nz
    // (source, target) -> indices into nz, in canonical order
    std::map<std::pair<int, int>, std::vector<int>> parallel;

    explicit AlgebraTables(const GentlePresentation& pres) : nz(nonzero_paths(pres)) {
        for (std::size_t i = 0; i < nz.size(); ++i) {
            nz_index[nz[i]] = static_cast<int>(i);
            parallel[{nz[i].source(), nz[i].target(pres.quiver)}].push_back(static_cast<int>(i));
        }
    }

    const std::vector<int>& parallel_to(const GentlePresentation& pres, const Path& w) const {
        static const std::vector<int> empty;
        auto it = parallel.find({w.source(), w.target(pres.quiver)});
        return it == parallel.end() ? empty : it->second;
    }

    // index of arrow * path in the nonzero basis, or -1 if the product is zero
    int left_multiply(const GentlePresentation& pres, int arrow, const Path& p) const {
        if (!p.trivial() && pres.is_relation(arrow, p.arrows.front())) return -1;
        Path q;
        q.vertex = pres.quiver.arrows[arrow].source;
        q.arrows.reserve(p.arrows.size() + 1);
        q.arrows.push_back(arrow);
        q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
        auto it = nz_index.find(q);
        return it == nz_index.end() ? -1 : it->second;
    }

    // index of path * arrow, or -1 if zero
    int right_multiply(const GentlePresentation& pres, const Path& p, int arrow) const {
        if (!p.trivial() && pres.is_relation(p.arrows.back(), arrow)) return -1;
        Path q = p;
        if (q.trivial()) q.vertex = pres.quiver.arrows[arrow].source;
        q.arrows.push_back(arrow);
        auto it = nz_index.find(q);
        return it == nz_index.end() ? -1 : it->second;
    }
};

// basis index lookup for one degree: (position of w in Gamma_n, nz path id) -> column
struct DegreeBasis {
    std::vector<Path> critical;
    std::vector<std::pair<Path, Path>> pairs;
    std::map<std::pair<int, int>, int> index;  // (critical pos, nz id) -> basis pos
};

inline DegreeBasis build_degree_basis(const GentlePresentation& pres, const AlgebraTables& tab,
                                      int n) {
    DegreeBasis db;
    db.critical = critical_paths(pres, n);
    for (std::size_t wi = 0; wi < db.critical.size(); ++wi)
        for (int pi : tab.parallel_to(pres, db.critical[wi])) {
            db.index[{static_cast<int>(wi), pi}] = static_cast<int>(db.pairs.size());
            db.pairs.emplace_back(db.critical[wi], tab.nz[pi]);
        }
    return db;
}

// position of a critical path within Gamma_n, keyed by (first arrow) for
// n >= 1 and by vertex for n = 0; uniqueness holds because relation
// successors are unique.
inline int critical_position(const DegreeBasis& db, const Path& w) {
    for (std::size_t i = 0; i < db.critical.size(); ++i)
        if (db.critical[i] == w) return static_cast<int>(i);
    return -1;
}

}  // namespace detail

// Builds degrees 0..N with coboundaries. The coboundary of a functional f on
// a degree-(n+1) critical path a_0 a_1 ... a_n is
//   a_0 * f(a_1...a_n)  +  (-1)^{n+1} f(a_0...a_{n-1}) * a_n,
// expanded in the nonzero-path basis (products through a relation vanish).
inline CochainComplex build_cochain_complex(const GentlePresentation& pres, int max_degree) {
    detail::AlgebraTables tab(pres);
    CochainComplex cx;

    std::vector<detail::DegreeBasis> bases;
    for (int n = 0; n <= max_degree + 1; ++n)
        bases.push_back(detail::build_degree_basis(pres, tab, n));

    for (int n = 0; n <= max_degree; ++n) {
        const auto& dom = bases[n];
        const auto& cod = bases[n + 1];
        IntMatrix delta(static_cast<int>(cod.pairs.size()), static_cast<int>(dom.pairs.size()));
        const int sign = (n + 1) % 2 == 0 ? +1 : -1;

        for (std::size_t ui = 0; ui < cod.critical.size(); ++ui) {
            const Path& u = cod.critical[ui];
            const int first = u.arrows.front();
            const int last = u.arrows.back();

            Path suffix = u.arrows.size() == 1
                              ? Path::trivial_at(u.target(pres.quiver))
                              : Path::of(pres.quiver, {u.arrows.begin() + 1, u.arrows.end()});
            Path prefix = u.arrows.size() == 1
                              ? Path::trivial_at(u.source())
                              : Path::of(pres.quiver, {u.arrows.begin(), u.arrows.end() - 1});

            int wi = detail::critical_position(dom, suffix);
            for (int pi : tab.parallel_to(pres, suffix)) {
                int q = tab.left_multiply(pres, first, tab.nz[pi]);
                if (q < 0) continue;
                int row = cod.index.at({static_cast<int>(ui), q});
                int col = dom.index.at({wi, pi});
                delta.at(row, col) += 1;
            }
            wi = detail::critical_position(dom, prefix);
            for (int pi : tab.parallel_to(pres, prefix)) {
                int q = tab.right_multiply(pres, tab.nz[pi], last);
                if (q < 0) continue;
                int row = cod.index.at({static_cast<int>(ui), q});
                int col = dom.index.at({wi, pi});
                delta.at(row, col) += sign;
            }
        }

        cx.degrees.push_back(CochainDegree{n, dom.pairs, std::move(delta)});
    }
    return cx;
}

inline CochainDegree cochain_degree(const GentlePresentation& pres, int n) {
    return build_cochain_complex(pres, n).degrees.back();
}

// dims[n] = dim C^n - rank delta^n - rank delta^{n-1}, ranks exact over Q
// (characteristic 0) or over F_p.
inline DimSeries hh_dims_from_complex(const CochainComplex& cx, long long characteristic) {
    DimSeries out;
    out.characteristic = characteristic;
    std::vector<int> ranks(cx.degrees.size());
    for (std::size_t n = 0; n < cx.degrees.size(); ++n)
        ranks[n] = characteristic == 0 ? rank_rational(cx.degrees[n].coboundary)
                                       : rank_mod_p(cx.degrees[n].coboundary, characteristic);
    for (std::size_t n = 0; n < cx.degrees.size(); ++n) {
        long long dim = static_cast<long long>(cx.degrees[n].basis.size()) - ranks[n] -
                        (n == 0 ? 0 : ranks[n - 1]);
        out.dims.push_back(dim);
    }
    return out;
}

inline DimSeries hh_dims_oracle(const GentlePresentation& pres, long long characteristic,
                                int max_degree) {
    return hh_dims_from_complex(build_cochain_complex(pres, max_degree), characteristic);
}

struct ComplexCheck {
    bool pass = true;
    int degree = -1;
    std::string witness;
};

// delta^{n+1} o delta^n = 0 over the integers for 0 <= n < max_degree.
inline ComplexCheck verify_complex(const GentlePresentation& pres, int max_degree) {
    CochainComplex cx = build_cochain_complex(pres, max_degree);
    for (int n = 0; n + 1 <= max_degree; ++n) {
        IntMatrix prod = multiply(cx.degrees[n + 1].coboundary, cx.degrees[n].coboundary);
        if (prod.is_zero()) continue;
        for (int r = 0; r < prod.rows; ++r)
            for (int c = 0; c < prod.cols; ++c)
                if (prod.at(r, c) != 0) {
                    const auto& [w, p] = cx.degrees[n].basis[c];
                    return ComplexCheck{false, n,
                                        "delta^2 != 0 at degree " + std::to_string(n) +
                                            ", basis element (" + w.str(pres.quiver) + ", " +
                                            p.str(pres.quiver) + ")"};
                }
    }
    return ComplexCheck{};
}

}  // namespace gentle
