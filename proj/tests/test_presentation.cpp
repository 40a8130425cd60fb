#include <catch2/catch_amalgamated.hpp>

#include "gentle/generators.hpp"
#include "gentle/presentation.hpp"

using namespace gentle;

namespace {

GentlePresentation p(const std::string& text) { return parse_presentation(text); }

const char* kLoop = "vertices: 1\narrow a: 1 -> 1\nrelation a a\n";
const char* kA2 = "vertices: 1 2\narrow a: 1 -> 2\n";
const char* kA3 = "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n";
const char* kZ2 = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a b\nrelation b a\n";

// every path of length <= |arrows| over all composable continuations,
// keeping only those with no relation pair
std::vector<Path> brute_force_nonzero_paths(const GentlePresentation& pres) {
    std::vector<Path> acc;
    for (int v = 0; v < pres.quiver.num_vertices(); ++v) acc.push_back(Path::trivial_at(v));
    std::vector<std::vector<int>> frontier;
    for (int a = 0; a < pres.quiver.num_arrows(); ++a) frontier.push_back({a});
    int bound = pres.quiver.num_arrows() * std::max(1, pres.quiver.num_vertices());
    for (int len = 1; len <= bound && !frontier.empty(); ++len) {
        std::vector<std::vector<int>> next;
        for (auto& w : frontier) {
            acc.push_back(Path::of(pres.quiver, w));
            for (int b = 0; b < pres.quiver.num_arrows(); ++b)
                if (pres.composable(w.back(), b) && !pres.is_relation(w.back(), b)) {
                    auto w2 = w;
                    w2.push_back(b);
                    next.push_back(std::move(w2));
                }
        }
        frontier = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

}  // namespace

TEST_CASE("parser reads a loop presentation", "[presentation]") {
    auto pres = p(kLoop);
    REQUIRE(pres.quiver.num_vertices() == 1);
    REQUIRE(pres.quiver.num_arrows() == 1);
    REQUIRE(pres.relations.size() == 1);
    REQUIRE(pres.is_relation(0, 0));
}

TEST_CASE("parser rejects malformed input", "[presentation]") {
    SECTION("unknown vertex") {
        REQUIRE_THROWS_AS(p("arrow a: 1 -> 2\n"), ParseError);
    }
    SECTION("relation pair not composable") {
        REQUIRE_THROWS_WITH(p("vertices: 1 2\narrow a: 1 -> 2\nrelation a a\n"),
                            Catch::Matchers::ContainsSubstring("not composable"));
    }
    SECTION("duplicate arrow id") {
        REQUIRE_THROWS_WITH(p("vertices: 1 2\narrow a: 1 -> 2\narrow a: 2 -> 1\n"),
                            Catch::Matchers::ContainsSubstring("duplicate"));
    }
    SECTION("duplicate vertex id") {
        REQUIRE_THROWS_AS(p("vertices: 1 1\n"), ParseError);
    }
    SECTION("unknown directive carries the line number") {
        try {
            p("vertices: 1\nnonsense here\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.line == 2);
        }
    }
    SECTION("unknown arrow in relation") {
        REQUIRE_THROWS_AS(p("vertices: 1\narrow a: 1 -> 1\nrelation a z\n"), ParseError);
    }
    SECTION("empty input") {
        REQUIRE_THROWS_AS(p("# only a comment\n"), ParseError);
    }
}

TEST_CASE("comments and blank lines are ignored", "[presentation]") {
    auto pres = p("# header\nvertices: 1 2  # trailing\n\narrow a: 1 -> 2\n");
    REQUIRE(pres.quiver.num_arrows() == 1);
}

TEST_CASE("serialize then parse is the identity on corpus entries", "[presentation]") {
    for (const auto& e : corpus()) {
        auto pres = e.parse();
        REQUIRE(serialize_presentation(pres) == e.text);
        auto reparsed = parse_presentation(serialize_presentation(pres));
        REQUIRE(reparsed.quiver.vertices == pres.quiver.vertices);
        REQUIRE(reparsed.relations == pres.relations);
    }
}

TEST_CASE("gentle axioms validate", "[presentation]") {
    SECTION("loop with relation passes, including the wrap-around G4 case") {
        REQUIRE(validate_gentle(p(kLoop)).passed());
    }
    SECTION("relation-free loop fails G4") {
        auto rep = validate_gentle(p("vertices: 1\narrow a: 1 -> 1\n"));
        REQUIRE_FALSE(rep.passed());
        REQUIRE(rep.checks[3].axiom == "G4");
        REQUIRE_FALSE(rep.checks[3].pass);
        REQUIRE_THAT(rep.checks[3].witness, Catch::Matchers::ContainsSubstring("a"));
    }
    SECTION("three outgoing arrows fail G1") {
        auto rep = validate_gentle(
            p("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\narrow c: 1 -> 2\n"));
        REQUIRE_FALSE(rep.checks[0].pass);
    }
    SECTION("two relation successors fail G2") {
        auto rep = validate_gentle(p("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n"
                                     "arrow c: 2 -> 2\nrelation a b\nrelation a c\n"));
        REQUIRE_FALSE(rep.checks[1].pass);
    }
    SECTION("two nonzero predecessors fail G3") {
        auto rep = validate_gentle(
            p("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 3 -> 2\narrow c: 2 -> 3\n"));
        // both (a,c) and (b,c) are composable non-relations
        REQUIRE_FALSE(rep.checks[2].pass);
    }
    SECTION("disconnected quiver fails G5") {
        auto rep = validate_gentle(p("vertices: 1 2\n"));
        REQUIRE_FALSE(rep.checks[4].pass);
    }
    SECTION("single vertex with no arrows is gentle") {
        REQUIRE(validate_gentle(p("vertices: 1\n")).passed());
    }
    SECTION("longer relation-free cycle fails G4") {
        auto rep = validate_gentle(
            p("vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n"));
        REQUIRE_FALSE(rep.checks[3].pass);
    }
}

TEST_CASE("euler characteristic", "[presentation]") {
    REQUIRE(euler_characteristic(p(kA2).quiver) == 1);
    REQUIRE(euler_characteristic(p(kLoop).quiver) == 0);
    REQUIRE(euler_characteristic(
                p("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n").quiver) == 0);
}

TEST_CASE("euler characteristic is invariant under relabeling", "[presentation]") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto pres = random_gentle(6, 10, 900 + seed);
        REQUIRE(euler_characteristic(relabel(pres, seed).quiver) ==
                euler_characteristic(pres.quiver));
    }
}

TEST_CASE("successor structure", "[presentation]") {
    SECTION("loop: relation successor only") {
        auto s = successors(p(kLoop), 0);
        REQUIRE(s.relation == 0);
        REQUIRE_FALSE(s.nonzero.has_value());
    }
    SECTION("A2: no successors") {
        auto s = successors(p(kA2), 0);
        REQUIRE_FALSE(s.relation.has_value());
        REQUIRE_FALSE(s.nonzero.has_value());
    }
    SECTION("A3: nonzero successor") {
        auto s = successors(p(kA3), 0);
        REQUIRE_FALSE(s.relation.has_value());
        REQUIRE(s.nonzero == 1);
    }
}

TEST_CASE("nonzero path basis on the named examples", "[presentation]") {
    REQUIRE(nonzero_paths(p(kA2)).size() == 3);   // e1, e2, a
    REQUIRE(nonzero_paths(p(kLoop)).size() == 2); // e1, a
    REQUIRE(nonzero_paths(p(kZ2)).size() == 4);   // e1, e2, a, b
}

TEST_CASE("nonzero path enumeration agrees with brute force", "[presentation]") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto pres = random_gentle(5, 8, 7000 + seed);
        auto fast = nonzero_paths(pres);
        auto slow = brute_force_nonzero_paths(pres);
        INFO(serialize_presentation(pres));
        REQUIRE(fast == slow);
    }
}
