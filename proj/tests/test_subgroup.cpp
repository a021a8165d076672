#include "nilrep/selftest.hpp"
#include "nilrep/subgroup.hpp"

#include "doctest.h"

#include <map>
#include <set>

using namespace nilrep;

namespace {

Element el(std::vector<Int> u, std::vector<Int> v, Int z) {
    return Element(std::move(u), std::move(v), std::move(z));
}

// Products of at most `len` generator factors (the Cayley ball).
std::set<Element> word_ball(const GroupSpec& g, const std::vector<Element>& gens,
                            int len) {
    std::set<Element> seen{identity_element(g)};
    std::vector<Element> frontier{identity_element(g)};
    std::vector<Element> steps;
    for (const Element& x : gens) {
        steps.push_back(x);
        steps.push_back(inv(g, x));
    }
    for (int l = 0; l < len; ++l) {
        std::vector<Element> next;
        for (const Element& at : frontier)
            for (const Element& s : steps) {
                Element nx = mul(g, at, s);
                if (seen.insert(nx).second) next.push_back(nx);
            }
        frontier = std::move(next);
    }
    return seen;
}

// Bounded enumeration oracle: all subgroup elements reachable by generator
// steps inside a coordinate box. Complete for elements well inside the box.
std::set<Element> enumerate_box(const TriSeq& h, long box) {
    std::set<Element> seen{identity_element(h.group)};
    std::vector<Element> queue{identity_element(h.group)};
    std::vector<Element> steps;
    for (const Element& x : h.gens) {
        steps.push_back(x);
        steps.push_back(inv(h.group, x));
    }
    auto inside = [&](const Element& e) {
        for (std::size_t p = 0; p <= 2 * h.group.rank(); ++p)
            if (abs(e.coord(p)) > box) return false;
        return true;
    };
    while (!queue.empty()) {
        Element at = queue.back();
        queue.pop_back();
        for (const Element& s : steps) {
            Element nx = mul(h.group, at, s);
            if (inside(nx) && seen.insert(nx).second) queue.push_back(nx);
        }
    }
    return seen;
}

} // namespace

TEST_CASE("from_generators canonical examples") {
    GroupSpec g({1});
    SUBCASE("identity generates the trivial subgroup") {
        TriSeq h = from_generators(g, {identity_element(g)});
        CHECK(h.size() == 0);
        CHECK(h == trivial_subgroup(g));
        CHECK(contains(h, identity_element(g)).member);
        CHECK_FALSE(contains(h, el({1}, {0}, 0)).member);
    }
    SUBCASE("x, y force the central commutator") {
        TriSeq h = from_generators(g, {el({1}, {0}, 0), el({0}, {1}, 0)});
        REQUIRE(h.size() == 3);
        CHECK(h.gens[2] == el({0}, {0}, 1));
        CHECK(h == full_group(g));
    }
    SUBCASE("trace expresses results over inputs") {
        std::vector<Element> gens{el({2}, {1}, 0), el({0}, {2}, 0)};
        IntMatrix trace;
        TriSeq h = from_generators(g, gens, &trace);
        REQUIRE(trace.rows == h.size());
        // the (u,v)-part of each result row is the traced combination
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t p = 0; p < 2; ++p) {
                Int acc = 0;
                for (std::size_t j = 0; j < gens.size(); ++j)
                    acc += trace(i, j) * gens[j].coord(p);
                CHECK(acc == h.gens[i].coord(p));
            }
    }
    SUBCASE("canonical generators are reachable words in the inputs") {
        // bounded word-search oracle: the Cayley ball over the input
        // generators reaches every canonical generator
        Rng rng(73);
        int verified = 0;
        for (int t = 0; t < 12; ++t) {
            GroupSpec gg(std::vector<Int>{rng.pick_int(1, 2)});
            std::vector<Element> gens;
            for (int i = 0; i < 2; ++i) gens.push_back(random_element(rng, gg, 1));
            TriSeq h = from_generators(gg, gens);
            std::set<Element> ball = word_ball(gg, gens, 12);
            for (const Element& x : h.gens) {
                bool found = ball.count(x) > 0;
                CHECK(found);
                verified += found;
            }
        }
        CHECK(verified >= 12);
    }
}

TEST_CASE("membership with certificate") {
    GroupSpec g({1});
    TriSeq h = from_generators(g, {el({2}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
    CHECK(contains(h, identity_element(g)).member);
    CHECK(contains(h, el({2}, {0}, 0)).member);
    CHECK_FALSE(contains(h, el({1}, {0}, 0)).member);
    // the certificate reconstructs the element in TriSeq order
    Element x = el({4}, {-3}, 7);
    Membership m = contains(h, x);
    REQUIRE(m.member);
    Element acc = identity_element(g);
    for (std::size_t i = 0; i < h.size(); ++i)
        acc = mul(g, acc, pow(g, h.gens[i], m.exponents[i]));
    CHECK(acc == x);
    // oracle: agreement with bounded enumeration
    std::set<Element> box = enumerate_box(h, 6);
    for (long u = -2; u <= 2; ++u)
        for (long v = -2; v <= 2; ++v)
            for (long z = -2; z <= 2; ++z) {
                Element e = el({u}, {v}, z);
                CHECK(contains(h, e).member == (box.count(e) > 0));
            }
    // and across random finite-index subgroups (index <= 24)
    Rng rng(79);
    for (int t = 0; t < 8; ++t) {
        TriSeq hh = random_finite_subgroup(rng, g, 24);
        std::set<Element> reach = enumerate_box(hh, 8);
        for (long u = -2; u <= 2; ++u)
            for (long v = -2; v <= 2; ++v)
                for (long z = -2; z <= 2; ++z) {
                    Element e = el({u}, {v}, z);
                    CHECK(contains(hh, e).member == (reach.count(e) > 0));
                }
    }
}

TEST_CASE("index") {
    GroupSpec g({1});
    CHECK(*index(full_group(g)) == 1);
    CHECK_FALSE(index(from_generators(g, {el({1}, {0}, 0)})).has_value());
    GroupSpec g2({1, 1});
    // (N Z)^n x Z^n x Z has index N^n
    for (long N : {2L, 3L}) {
        std::vector<Element> gens;
        for (std::size_t j = 0; j < 2; ++j) {
            Element e = identity_element(g2);
            e.u[j] = N;
            gens.push_back(e);
        }
        for (std::size_t j = 0; j < 2; ++j) {
            Element e = identity_element(g2);
            e.v[j] = 1;
            gens.push_back(e);
        }
        Element c = identity_element(g2);
        c.z = 1;
        gens.push_back(c);
        CHECK(*index(from_generators(g2, gens)) == N * N);
    }
}

TEST_CASE("coset table") {
    GroupSpec g({1});
    SUBCASE("index one") {
        CosetTable t = coset_table(full_group(g));
        REQUIRE(t.index == 1);
        CHECK(t.reps[0] == identity_element(g));
    }
    SUBCASE("3Z x Z x Z") {
        TriSeq h = from_generators(g, {el({3}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
        CosetTable t = coset_table(h);
        REQUIRE(t.index == 3);
        CHECK(t.reps[0] == identity_element(g));
        CHECK(t.reps[1] == el({1}, {0}, 0));
        CHECK(t.reps[2] == el({2}, {0}, 0));
        CHECK(t.reduce_index(el({7}, {2}, 5)) == 1);
    }
    SUBCASE("infinite index errors") {
        TriSeq h = from_generators(g, {el({1}, {0}, 0)});
        CHECK_THROWS_AS(coset_table(h), InfiniteIndexError);
    }
    SUBCASE("random: coset count equals index") {
        Rng rng(5);
        for (int t = 0; t < 50; ++t) {
            GroupSpec gg = random_group(rng);
            TriSeq h = random_finite_subgroup(rng, gg, 24);
            CHECK(Int(coset_table(h).index) == *index(h));
        }
    }
}

TEST_CASE("intersection") {
    GroupSpec g({1});
    auto axis = [&](long k) {
        return from_generators(g, {el({k}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
    };
    TriSeq h2 = axis(2), h3 = axis(3), h6 = axis(6);
    TriSeq cap = intersect(h2, h3);
    CHECK(cap == h6);
    // membership-based exhaustive check over the 6-element quotient box
    for (long u = 0; u < 6; ++u) {
        Element e = el({u}, {0}, 0);
        CHECK(contains(cap, e).member == (contains(h2, e).member && contains(h3, e).member));
    }
    CHECK(intersect(h2, h2) == h2);
    // infinite-index inputs are fine (general algorithm)
    TriSeq a = from_generators(g, {el({2}, {0}, 0)});
    TriSeq b = from_generators(g, {el({3}, {0}, 1)});
    TriSeq m = intersect(a, b);
    for (const Element& x : m.gens) {
        CHECK(contains(a, x).member);
        CHECK(contains(b, x).member);
    }
    // the z-lift matching condition can force a proper sublattice
    {
        TriSeq p = from_generators(g, {el({1}, {0}, 0)});
        TriSeq q = from_generators(g, {el({1}, {0}, 1)});
        TriSeq cap = intersect(p, q);
        CHECK(cap == trivial_subgroup(g));
    }
    {
        // H1 = <(1,0,0),(0,0,4)>, H2 = <(1,0,1),(0,0,6)>: the common
        // elements over (2,0) start at z = 8, central part is 12Z
        TriSeq p = from_generators(g, {el({1}, {0}, 0), el({0}, {0}, 4)});
        TriSeq q = from_generators(g, {el({1}, {0}, 1), el({0}, {0}, 6)});
        TriSeq cap = intersect(p, q);
        CHECK(cap == from_generators(g, {el({2}, {0}, 8), el({0}, {0}, 12)}));
        for (long u = -4; u <= 4; ++u)
            for (long z = -14; z <= 14; ++z) {
                Element x = el({u}, {0}, z);
                CHECK(contains(cap, x).member ==
                      (contains(p, x).member && contains(q, x).member));
            }
    }
}

TEST_CASE("conjugate subgroup") {
    GroupSpec g({1});
    TriSeq h = from_generators(g, {el({2}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
    CHECK(conjugate_subgroup(h, identity_element(g)) == h);
    // full group is normal
    CHECK(conjugate_subgroup(full_group(g), el({3}, {-1}, 2)) == full_group(g));
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        GroupSpec gg = random_group(rng);
        TriSeq hh = random_finite_subgroup(rng, gg, 16);
        Element x = random_element(rng, gg, 3);
        CHECK(conjugate_subgroup(conjugate_subgroup(hh, x), inv(gg, x)) == hh);
    }
}

TEST_CASE("radical") {
    GroupSpec g({1});
    SUBCASE("finite index saturates to the full group") {
        TriSeq h = from_generators(g, {el({2}, {0}, 0), el({0}, {3}, 0), el({0}, {0}, 4)});
        CHECK(radical(h) == full_group(g));
        // power_return-style witness: generators of G have powers in sqrt(H)
        for (const Element& x : full_group(g).gens) CHECK(contains(radical(h), x).member);
    }
    SUBCASE("central saturation") {
        TriSeq h = from_generators(g, {el({0}, {0}, 2)});
        CHECK(radical(h) == center(g));
    }
    SUBCASE("definition oracle on a box") {
        // sqrt(H) = { x : x^k in H for some k } in nilpotent groups
        for (auto gens : {std::vector<Element>{el({0}, {0}, 2)},
                          std::vector<Element>{el({2}, {0}, 1)},
                          std::vector<Element>{el({2}, {0}, 0), el({0}, {2}, 0)}}) {
            TriSeq h = from_generators(g, gens);
            TriSeq rad = radical(h);
            for (long u = -3; u <= 3; ++u)
                for (long v = -3; v <= 3; ++v)
                    for (long z = -4; z <= 4; ++z) {
                        Element x = el({u}, {v}, z);
                        bool has_root = false;
                        for (Int k = 1; k <= 8 && !has_root; ++k)
                            if (contains(h, pow(g, x, k)).member) has_root = true;
                        CHECK(contains(rad, x).member == has_root);
                    }
        }
    }
    SUBCASE("isolated subgroup is its own radical") {
        TriSeq h = from_generators(g, {el({2}, {0}, 1)});
        CHECK(radical(h) == h);
    }
    SUBCASE("definition oracle in rank two") {
        GroupSpec g2({1, 1});
        for (auto gens : {std::vector<Element>{el({2, 0}, {0, 0}, 1)},
                          std::vector<Element>{el({1, 0}, {0, 0}, 0), el({0, 1}, {0, 0}, 5)},
                          std::vector<Element>{el({2, 0}, {0, 0}, 0), el({0, 0}, {0, 2}, 1)}}) {
            TriSeq h = from_generators(g2, gens);
            TriSeq rad = radical(h);
            // sample the box {-2..2}^4 x {-3..3}
            for (long a = -2; a <= 2; ++a)
                for (long b = -2; b <= 2; ++b)
                    for (long c = -2; c <= 2; ++c)
                        for (long d = -2; d <= 2; ++d)
                            for (long z = -3; z <= 3; ++z) {
                                Element x = el({a, b}, {c, d}, z);
                                bool has_root = false;
                                for (Int k = 1; k <= 8 && !has_root; ++k)
                                    if (contains(h, pow(g2, x, k)).member) has_root = true;
                                if (contains(rad, x).member != has_root) {
                                    CAPTURE(h.str());
                                    CAPTURE(x.str());
                                    CHECK(contains(rad, x).member == has_root);
                                }
                            }
        }
    }
}

TEST_CASE("normalizer") {
    GroupSpec g({1});
    // normal subgroup -> full group
    TriSeq a = from_generators(g, {el({3}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
    CHECK(normalizer(a) == full_group(g));
    // <(1,0,0)> has normalizer Z x 0 x Z
    TriSeq h = from_generators(g, {el({1}, {0}, 0)});
    TriSeq n = normalizer(h);
    CHECK(n == from_generators(g, {el({1}, {0}, 0), el({0}, {0}, 1)}));
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        GroupSpec gg = random_group(rng);
        TriSeq hh = (t % 2 == 0) ? random_subgroup(rng, gg) : random_finite_subgroup(rng, gg, 12);
        CHECK(radical(normalizer(hh)) == normalizer(radical(hh)));
    }
}

TEST_CASE("double cosets") {
    GroupSpec g({1});
    SUBCASE("normal subgroup: every double coset is one coset") {
        TriSeq a = from_generators(g, {el({3}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
        auto dcs = double_cosets(a);
        CHECK(dcs.size() == 3);
        for (const auto& dc : dcs) CHECK(dc.cosets.size() == 1);
    }
    SUBCASE("full group: one double coset") {
        CHECK(double_cosets(full_group(g)).size() == 1);
    }
    SUBCASE("orbit sizes partition the index") {
        Rng rng(29);
        for (int t = 0; t < 30; ++t) {
            GroupSpec gg = random_group(rng);
            TriSeq h = random_finite_subgroup(rng, gg, 24);
            auto dcs = double_cosets(h);
            std::size_t total = 0;
            for (const auto& dc : dcs) total += dc.cosets.size();
            CHECK(Int(total) == *index(h));
        }
    }
    SUBCASE("orbits do not depend on the representative choice") {
        Rng rng(71);
        for (int t = 0; t < 20; ++t) {
            GroupSpec gg = random_group(rng);
            TriSeq h = random_finite_subgroup(rng, gg, 16);
            CosetTable ct = coset_table(h);
            for (const auto& dc : double_cosets(h)) {
                // h1 * rep * h2 lies in the same double coset: same orbit set
                Element h1 = identity_element(gg), h2 = identity_element(gg);
                for (const Element& x : h.gens) {
                    h1 = mul(gg, h1, pow(gg, x, rng.pick_int(-2, 2)));
                    h2 = mul(gg, h2, pow(gg, x, rng.pick_int(-2, 2)));
                }
                Element alt = mul(gg, mul(gg, h1, dc.rep), h2);
                std::size_t at = ct.reduce_index(alt);
                CHECK(std::find(dc.cosets.begin(), dc.cosets.end(), at) != dc.cosets.end());
                // and the same intersection subgroup up to conjugacy data used
                // by the Kutzko count: [H : H ∩ H^g] is rep-independent
                Int a = *index(intersect(h, conjugate_subgroup(h, dc.rep)));
                Int b = *index(intersect(h, conjugate_subgroup(h, alt)));
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("power return exponent") {
    GroupSpec g({1});
    TriSeq h = from_generators(g, {el({2}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
    // normal subgroup: kappa = 1 always
    TriSeq a = from_generators(g, {el({3}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
    CHECK(power_return_exponent(a, el({1}, {2}, 3), el({3}, {0}, 0)) == 1);
    // witness: g = (0,1,0), x = (2,0,0): g x g^-1 = (2,0,-2) in H
    CHECK(conjugate(g, el({2}, {0}, 0), el({0}, {1}, 0)) == el({2}, {0}, -2));
    CHECK(power_return_exponent(h, el({0}, {1}, 0), el({2}, {0}, 0)) == 1);
    CHECK_THROWS_AS(power_return_exponent(h, el({0}, {1}, 0), el({1}, {0}, 0)),
                    PreconditionError);
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        GroupSpec gg = random_group(rng);
        TriSeq hh = random_finite_subgroup(rng, gg, 16);
        // build a member from random exponents
        Element x = identity_element(gg);
        for (const Element& e : hh.gens) x = mul(gg, x, pow(gg, e, rng.pick_int(-2, 2)));
        Int kappa = power_return_exponent(hh, random_element(rng, gg, 3), x);
        CHECK(kappa >= 1);
        CHECK(kappa <= *index(hh));
    }
}

TEST_CASE("derived subgroup and center") {
    GroupSpec g({2, 6});
    CHECK(derived_subgroup(g).gens ==
          std::vector<Element>{el({0, 0}, {0, 0}, 2)});
    CHECK(center(g).gens == std::vector<Element>{el({0, 0}, {0, 0}, 1)});
    // every commutator of random elements lies in [G,G]
    Rng rng(37);
    for (int t = 0; t < 50; ++t) {
        Element x = random_element(rng, g), y = random_element(rng, g);
        CHECK(contains(derived_subgroup(g), commutator(g, x, y)).member);
        // central elements commute with everything
        Element c = el({0, 0}, {0, 0}, rng.pick_int(-5, 5));
        CHECK(commutator(g, c, x) == identity_element(g));
    }
    // (1,0,0) is not central in H(1): witness (0,1,0)
    GroupSpec g1({1});
    CHECK_FALSE(commutator(g1, el({1}, {0}, 0), el({0}, {1}, 0)) == identity_element(g1));
}
