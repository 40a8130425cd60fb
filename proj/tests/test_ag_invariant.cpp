#include <catch2/catch_amalgamated.hpp>

#include "gentle/ag_invariant.hpp"
#include "gentle/generators.hpp"

using namespace gentle;

namespace {

GentlePresentation p(const std::string& text) { return parse_presentation(text); }

const char* kLoop = "vertices: 1\narrow a: 1 -> 1\nrelation a a\n";
const char* kA2 = "vertices: 1 2\narrow a: 1 -> 2\n";
const char* kA3 = "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n";
const char* kZ2 = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a b\nrelation b a\n";
const char* kKronecker = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n";

std::vector<std::string> path_names(const GentlePresentation& pres,
                                    const std::vector<Path>& paths) {
    std::vector<std::string> out;
    for (const auto& q : paths) out.push_back(q.str(pres.quiver));
    return out;
}

}  // namespace

TEST_CASE("non-trivial permitted threads", "[ag]") {
    REQUIRE(path_names(p(kA2), nontrivial_permitted_threads(p(kA2))) ==
            std::vector<std::string>{"a"});
    REQUIRE(path_names(p(kA3), nontrivial_permitted_threads(p(kA3))) ==
            std::vector<std::string>{"ab"});
    REQUIRE(path_names(p(kZ2), nontrivial_permitted_threads(p(kZ2))) ==
            std::vector<std::string>{"a", "b"});
}

TEST_CASE("non-trivial forbidden threads", "[ag]") {
    REQUIRE(path_names(p(kA2), nontrivial_forbidden_threads(p(kA2))) ==
            std::vector<std::string>{"a"});
    REQUIRE(path_names(p(kA3), nontrivial_forbidden_threads(p(kA3))) ==
            std::vector<std::string>{"a", "b"});
    // both arrows of Z2 lie on the critical cycle
    REQUIRE(nontrivial_forbidden_threads(p(kZ2)).empty());
}

TEST_CASE("trivial threads at qualifying vertices", "[ag]") {
    SECTION("Kronecker has none (valence 2 on one side)") {
        auto pres = p(kKronecker);
        auto [perm, forb] = trivial_threads(pres, assign_signs(pres));
        REQUIRE(perm.empty());
        REQUIRE(forb.empty());
    }
    SECTION("A2 endpoints carry trivial permitted threads") {
        auto pres = p(kA2);
        auto [perm, forb] = trivial_threads(pres, assign_signs(pres));
        REQUIRE(perm.size() == 2);
        REQUIRE(forb.size() == 2);
    }
    SECTION("loop vertex has a trivial forbidden thread only") {
        auto pres = p(kLoop);
        auto [perm, forb] = trivial_threads(pres, assign_signs(pres));
        REQUIRE(perm.empty());
        REQUIRE(forb.size() == 1);
    }
}

TEST_CASE("critical cycles", "[ag]") {
    auto loop_cycles = critical_cycles(p(kLoop));
    REQUIRE(loop_cycles.size() == 1);
    REQUIRE(loop_cycles[0].length() == 1);

    auto z2_cycles = critical_cycles(p(kZ2));
    REQUIRE(z2_cycles.size() == 1);  // ab ~ ba up to rotation
    REQUIRE(z2_cycles[0].length() == 2);

    REQUIRE(critical_cycles(p(kA2)).empty());
}

TEST_CASE("phi on the named examples", "[ag]") {
    PhiInvariant loop_phi = phi(p(kLoop));
    REQUIRE(loop_phi.at(1, 0) == 1);
    REQUIRE(loop_phi.at(0, 1) == 1);
    REQUIRE(loop_phi.entries.size() == 2);

    PhiInvariant kr = phi(p(kKronecker));
    REQUIRE(kr.at(1, 1) == 2);
    REQUIRE(kr.entries.size() == 1);

    PhiInvariant z2 = phi(p(kZ2));
    REQUIRE(z2.at(2, 0) == 1);
    REQUIRE(z2.at(0, 2) == 1);
    REQUIRE(z2.entries.size() == 2);
}

TEST_CASE("phi matches the expected corpus values", "[ag]") {
    for (const auto& e : corpus()) {
        if (!e.expected_phi) continue;
        INFO(e.name);
        REQUIRE(phi(e.parse()) == *e.expected_phi);
    }
}

TEST_CASE("psi divisor sums", "[ag]") {
    PhiInvariant a;
    a.add(0, 1);
    a.add(0, 2);
    REQUIRE(psi(a, 2) == 2);

    PhiInvariant b;
    b.add(0, 1);
    REQUIRE(psi(b, 3) == 1);

    PhiInvariant empty;
    for (int n = 1; n <= 6; ++n) REQUIRE(psi(empty, n) == 0);

    REQUIRE_THROWS_AS(psi(a, 0), std::invalid_argument);
}

TEST_CASE("euler characteristic from phi", "[ag]") {
    PhiInvariant a;
    a.add(1, 0);
    a.add(0, 1);
    REQUIRE(euler_from_phi(a) == Rational(0, 1));

    PhiInvariant b;
    b.add(1, 1, 2);
    REQUIRE(euler_from_phi(b) == Rational(0, 1));

    PhiInvariant c;
    c.add(2, 0);
    c.add(0, 2);
    REQUIRE(euler_from_phi(c) == Rational(0, 1));

    PhiInvariant k;
    k.add(2, 0);
    REQUIRE(euler_from_phi(k) == Rational(1, 1));
}

TEST_CASE("euler checksum holds on corpus and random presentations", "[ag]") {
    auto check = [](const GentlePresentation& pres) {
        Rational r = euler_from_phi(phi(pres));
        INFO(serialize_presentation(pres));
        REQUIRE(r.is_integer());
        REQUIRE(r.num == euler_characteristic(pres.quiver));
    };
    for (const auto& e : corpus()) check(e.parse());
    for (std::uint64_t seed = 0; seed < 100; ++seed) check(random_gentle(8, 16, 4000 + seed));
}

TEST_CASE("pairing consumes every permitted thread exactly once", "[ag]") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto pres = random_gentle(7, 14, 5000 + seed);
        if (pres.quiver.num_arrows() == 0) continue;  // Lambda = K is special-cased
        auto signs = assign_signs(pres);
        auto [trivial_perm, trivial_forb] = trivial_threads(pres, signs);
        long long total_threads = static_cast<long long>(
            nontrivial_permitted_threads(pres).size() + trivial_perm.size());

        PhiInvariant inv = phi(pres);
        long long consumed = 0, critical_length = 0;
        for (const auto& [key, mult] : inv.entries) {
            consumed += static_cast<long long>(key.first) * mult;
            if (key.first == 0) critical_length += static_cast<long long>(key.second) * mult;
        }
        INFO(serialize_presentation(pres));
        REQUIRE(consumed == total_threads);

        long long cycle_length = 0;
        for (const auto& cyc : critical_cycles(pres)) cycle_length += cyc.length();
        REQUIRE(critical_length == cycle_length);
    }
}

TEST_CASE("phi is invariant under relabeling", "[ag]") {
    for (const auto& e : corpus()) {
        auto pres = e.parse();
        PhiInvariant reference = phi(pres);
        for (std::uint64_t s = 0; s < 5; ++s) {
            INFO(e.name << " seed " << s);
            REQUIRE(phi(relabel(pres, s)) == reference);
        }
    }
}

TEST_CASE("phi of the one-point algebra", "[ag]") {
    PhiInvariant k = phi(p("vertices: 1\n"));
    REQUIRE(k.at(2, 0) == 1);
    REQUIRE(k.entries.size() == 1);
}
