#pragma once
// Sign functions sigma, epsilon characterizing a gentle presentation:
//   S1  distinct arrows with the same source have opposite sigma
//   S2  distinct arrows with the same target have opposite epsilon
//   S3  for a composable pair (a,b): sigma(b) == epsilon(a) iff (a,b) is a relation
// Solved by parity propagation over a union-find; canonicalized so that in
// each constraint component the least variable gets +1.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "gentle/presentation.hpp"

namespace gentle {

struct SignAssignment {
    std::vector<int> sigma;    // per arrow, +1 or -1
    std::vector<int> epsilon;  // per arrow, +1 or -1
};

struct NoSignAssignment : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Union-find where each node carries its parity relative to the root.
class ParityUnionFind {
public:
    explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // returns (root, parity of x relative to root)
    std::pair<int, int> find(int x) {
        if (parent_[x] == x) return {x, 0};
        auto [root, par] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= par;
        return {root, parity_[x]};
    }

    // relate x and y with given parity (0 = equal, 1 = opposite);
    // returns false on contradiction
    bool relate(int x, int y, int parity) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == parity;
        parent_[rx] = ry;
        parity_[rx] = px ^ py ^ parity;
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> parity_;
};

}  // namespace detail

// Variables are indexed sigma(a) -> 2a, epsilon(a) -> 2a+1.
inline SignAssignment assign_signs(const GentlePresentation& pres) {
    const int n = pres.quiver.num_arrows();
    detail::ParityUnionFind uf(2 * n);
    auto fail = [&](const std::string& why) {
        throw NoSignAssignment("no sign assignment: " + why);
    };

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (pres.quiver.arrows[a].source == pres.quiver.arrows[b].source)
                if (!uf.relate(2 * a, 2 * b, 1))
                    fail("S1 conflict at arrows " + pres.quiver.arrows[a].name + ", " +
                         pres.quiver.arrows[b].name);
            if (pres.quiver.arrows[a].target == pres.quiver.arrows[b].target)
                if (!uf.relate(2 * a + 1, 2 * b + 1, 1))
                    fail("S2 conflict at arrows " + pres.quiver.arrows[a].name + ", " +
                         pres.quiver.arrows[b].name);
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (pres.composable(a, b))
                if (!uf.relate(2 * a + 1, 2 * b, pres.is_relation(a, b) ? 0 : 1))
                    fail("S3 conflict at pair (" + pres.quiver.arrows[a].name + ", " +
                         pres.quiver.arrows[b].name + ")");

    // Canonicalize: scanning variables in index order, the first variable seen
    // in each component (its least member) is pinned to +1.
    std::vector<int> root_value(2 * n, 0);
    std::vector<int> value(2 * n, 0);
    for (int x = 0; x < 2 * n; ++x) {
        auto [root, par] = uf.find(x);
        if (root_value[root] == 0) root_value[root] = par == 0 ? 1 : -1;
        value[x] = (par == 0) ? root_value[root] : -root_value[root];
    }

    SignAssignment out;
    out.sigma.resize(n);
    out.epsilon.resize(n);
    for (int a = 0; a < n; ++a) {
        out.sigma[a] = value[2 * a];
        out.epsilon[a] = value[2 * a + 1];
    }
    return out;
}

}  // namespace gentle
