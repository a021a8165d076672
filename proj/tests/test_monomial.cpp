#include "nilrep/monomial.hpp"
#include "nilrep/selftest.hpp"

#include "doctest.h"

#ifdef NILREP_HAVE_EIGEN
#include <Eigen/Dense>
#endif

#include <cmath>
#include <complex>
#include <numbers>

using namespace nilrep;

namespace {

Element el(std::vector<Int> u, std::vector<Int> v, Int z) {
    return Element(std::move(u), std::move(v), std::move(z));
}
Angle rat(long p, long q) { return Angle::rational(Rat(p, q)); }

MonomialRep three_dim_rep() {
    GroupSpec g({1});
    TriSeq h = from_generators(g, {el({3}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
    Character chi(h, {rat(0, 1), rat(0, 1), rat(1, 3)});
    return induce(h, chi);
}

#ifdef NILREP_HAVE_EIGEN
using CMat = Eigen::MatrixXcd;

CMat dense(const MonomialMatrix& m) {
    CMat out = CMat::Zero(static_cast<Eigen::Index>(m.dim()), static_cast<Eigen::Index>(m.dim()));
    for (std::size_t j = 0; j < m.dim(); ++j) {
        double a = 2.0 * std::numbers::pi * m.phase[j].numeric();
        out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m.perm[j])) =
            std::complex<double>(std::cos(a), std::sin(a));
    }
    return out;
}

// Dense SVD nullity of the stacked intertwiner equations: the independent
// numeric route used to cross-check the sparse component count.
std::size_t commutant_dim_svd(const MonomialRep& r) {
    const auto d = static_cast<Eigen::Index>(r.dim());
    CMat stacked(d * d * static_cast<Eigen::Index>(r.gen_matrices.size()), d * d);
    Eigen::Index at = 0;
    for (const MonomialMatrix& gm : r.gen_matrices) {
        CMat m = dense(gm);
        CMat id = CMat::Identity(d, d);
        // vec(XM - MX) = (M^T ⊗ I - I ⊗ M) vec(X)
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                for (Eigen::Index k = 0; k < d; ++k)
                    for (Eigen::Index l = 0; l < d; ++l)
                        stacked(at + i * d + j, k * d + l) =
                            m(l, j) * id(i, k) - m(i, k) * id(l, j);
        at += d * d;
    }
    Eigen::JacobiSVD<CMat> svd(stacked);
    const auto& sv = svd.singularValues();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-9) ++rank;
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(d) - rank;
}

// Dense eigen-equation oracle for the weight space.
std::size_t weight_space_dim_svd(const MonomialRep& r, const TriSeq& k, const Character& psi) {
    const auto d = static_cast<Eigen::Index>(r.dim());
    CMat stacked(static_cast<Eigen::Index>(k.size()) * d, d);
    for (std::size_t i = 0; i < k.size(); ++i) {
        CMat m = dense(r.matrix(k.gens[i]));
        double a = 2.0 * std::numbers::pi * psi.values[i].numeric();
        m -= std::complex<double>(std::cos(a), std::sin(a)) * CMat::Identity(d, d);
        stacked.block(static_cast<Eigen::Index>(i) * d, 0, d, d) = m;
    }
    Eigen::JacobiSVD<CMat> svd(stacked);
    const auto& sv = svd.singularValues();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-9) ++rank;
    return static_cast<std::size_t>(d) - rank;
}
#endif

} // namespace

TEST_CASE("monomial matrix algebra") {
    CHECK(MonomialMatrix(4).is_identity());
    MonomialMatrix id(2);
    MonomialMatrix m(2);
    m.perm = {1, 0};
    m.phase = {rat(1, 4), rat(0, 1)};
    CHECK((m * m.inverse()).is_identity());
    CHECK((m.inverse() * m).is_identity());
    CHECK((m * id) == m);
    CHECK((id * m) == m);
}

TEST_CASE("induce from the full group is the character itself") {
    GroupSpec g({1});
    TriSeq G = full_group(g);
    Character chi(G, {rat(1, 5), rat(2, 3), rat(0, 1)});
    REQUIRE(validate(chi));
    MonomialRep r = induce(G, chi);
    CHECK(r.dim() == 1);
    Element x = el({2}, {-1}, 4);
    CHECK(r.matrix(x).phase[0] == evaluate(chi, x));
}

TEST_CASE("three-dimensional worked example") {
    MonomialRep r = three_dim_rep();
    REQUIRE(r.dim() == 3);
    GroupSpec g({1});
    MonomialMatrix mx = r.matrix(el({1}, {0}, 0));
    CHECK(mx.perm == std::vector<std::size_t>{1, 2, 0});
    for (const Angle& a : mx.phase) CHECK(a.is_zero());
    // y acts diagonally with phases j/3, c acts as the scalar 1/3
    MonomialMatrix my = r.matrix(el({0}, {1}, 0));
    CHECK(my.perm == std::vector<std::size_t>{0, 1, 2});
    CHECK(my.phase == std::vector<Angle>{rat(0, 1), rat(1, 3), rat(2, 3)});
    MonomialMatrix mc = r.matrix(el({0}, {0}, 1));
    CHECK(mc.perm == std::vector<std::size_t>{0, 1, 2});
    CHECK(mc.phase == std::vector<Angle>{rat(1, 3), rat(1, 3), rat(1, 3)});
    // matrix(h) for h in H fixes the trivial coset with phase chi(h)
    Element hh = el({3}, {2}, 1);
    MonomialMatrix mh = r.matrix(hh);
    CHECK(mh.perm[0] == 0);
    CHECK(mh.phase[0] == evaluate(r.chi, hh));
}

TEST_CASE("homomorphism property") {
    Rng rng(43);
    for (int t = 0; t < 200; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h = random_finite_subgroup(rng, g, 16);
        Character chi = random_character(rng, h, true);
        if (!validate(chi)) continue;
        MonomialRep r = induce(h, chi);
        Element a = random_element(rng, g, 3), b = random_element(rng, g, 3);
        CHECK(r.matrix(a) * r.matrix(b) == r.matrix(mul(g, a, b)));
        CHECK(r.matrix(inv(g, a)) == r.matrix(a).inverse());
    }
}

TEST_CASE("induce errors") {
    GroupSpec g({1});
    TriSeq h = from_generators(g, {el({1}, {0}, 0)});
    CHECK_THROWS_AS(induce(h, trivial_character(h)), InfiniteIndexError);
    TriSeq G = full_group(g);
    Character bad(G, {rat(0, 1), rat(0, 1), rat(1, 2)});
    CHECK_THROWS_AS(induce(G, bad), PreconditionError);
    Character other(center(g), {rat(1, 2)});
    CHECK_THROWS_AS(induce(G, other), PreconditionError);
}

TEST_CASE("Kutzko endomorphism count") {
    GroupSpec g({1});
    SUBCASE("reducible: 2Z x Z x Z with the trivial character") {
        TriSeq h = from_generators(g, {el({2}, {0}, 0), el({0}, {1}, 0), el({0}, {0}, 1)});
        MonomialRep r = induce(h, trivial_character(h));
        CHECK(endo_dim_kutzko(r) == 2);
        CHECK(commutant_dim_numeric(r) == 2);
        IrreducibilityVerdict v = is_irreducible(r);
        CHECK_FALSE(v.irreducible);
        REQUIRE(v.witness.has_value());
        CHECK(*v.witness == el({1}, {0}, 0));
    }
    SUBCASE("full group: endo dim 1") {
        TriSeq G = full_group(g);
        Character chi(G, {rat(1, 3), rat(0, 1), rat(0, 1)});
        REQUIRE(validate(chi));
        MonomialRep r = induce(G, chi);
        CHECK(endo_dim_kutzko(r) == 1);
        CHECK(is_irreducible(r).irreducible);
    }
    SUBCASE("three-dimensional irreducible") {
        MonomialRep r = three_dim_rep();
        CHECK(endo_dim_kutzko(r) == 1);
        CHECK(commutant_dim_numeric(r) == 1);
        CHECK(weight_space_dim(r, r.subgroup, r.chi) == 1);
    }
}

TEST_CASE("weight spaces") {
    MonomialRep r = three_dim_rep();
    GroupSpec g({1});
    // no constraint from the trivial subgroup
    TriSeq triv = trivial_subgroup(g);
    CHECK(weight_space_dim(r, triv, trivial_character(triv)) == r.dim());
    // the center acts by the central character: full space for the right
    // character, nothing for a wrong one
    TriSeq z = center(g);
    CHECK(weight_space_dim(r, z, Character(z, {rat(1, 3)})) == r.dim());
    CHECK(weight_space_dim(r, z, Character(z, {rat(1, 2)})) == 0);
}

TEST_CASE("kernel") {
    GroupSpec g({1});
    SUBCASE("trivial character on G has kernel G") {
        TriSeq G = full_group(g);
        MonomialRep r = induce(G, trivial_character(G));
        CHECK(kernel(r) == G);
    }
    SUBCASE("the abelian-pullback construction") {
        MonomialRep r = three_dim_rep();
        TriSeq ker = kernel(r);
        // contains K = <(0,0,N1*s1)> = <(0,0,3)>
        CHECK(contains(ker, el({0}, {0}, 3)).member);
        CHECK_FALSE(contains(ker, el({0}, {0}, 1)).member);
        for (const Element& x : ker.gens) CHECK(r.matrix(x).is_identity());
    }
    SUBCASE("nontrivial s1: H(2,6) with N1 = 2") {
        RankOneReport rep = rank_one_report(GroupSpec({2, 6}), Angle::rational(Rat(1, 2)));
        MonomialRep r = induce(rep.subgroup_A, rep.delta);
        TriSeq ker = kernel(r);
        // K = <(0,0,N1*s1)> = <(0,0,4)> lies in the kernel
        Element k4 = identity_element(r.group);
        k4.z = 4;
        CHECK(contains(ker, k4).member);
        for (const Element& x : ker.gens) CHECK(r.matrix(x).is_identity());
        // and the kernel misses anything acting nontrivially
        Element k2 = identity_element(r.group);
        k2.z = 2;
        CHECK_FALSE(contains(ker, k2).member);
    }
    SUBCASE("symbolic characters are unsupported") {
        GroupSpec g1({1});
        TriSeq G = full_group(g1);
        Character chi(G, {Angle::symbol(1), rat(0, 1), rat(0, 1)});
        REQUIRE(validate(chi));
        MonomialRep r = induce(G, chi);
        CHECK_THROWS_AS(kernel(r), UnsupportedError);
    }
}

TEST_CASE("hom spaces") {
    GroupSpec g({1});
    MonomialRep r = three_dim_rep();
    SUBCASE("Schur: hom(r, r) = 1 for irreducible r") {
        CHECK(hom_dim_numeric(r, r) == 1);
    }
    SUBCASE("conjugate constructions are equivalent") {
        Element x = el({1}, {2}, 0);
        TriSeq h2 = conjugate_subgroup(r.subgroup, x);
        Character c2 = conjugate_character(r.chi, x);
        MonomialRep r2 = induce(h2, c2);
        CHECK(hom_dim_numeric(r, r2) == 1);
    }
    SUBCASE("distinct central characters never intertwine") {
        TriSeq h = r.subgroup;
        Character c3(h, {rat(0, 1), rat(0, 1), rat(2, 3)});
        REQUIRE(validate(c3));
        MonomialRep r3 = induce(h, c3);
        CHECK(hom_dim_numeric(r, r3) == 0);
    }
    SUBCASE("dimension cap") {
        CHECK_THROWS_AS(commutant_dim_numeric(r, 2), UnsupportedError);
    }
}

#ifdef NILREP_HAVE_EIGEN
TEST_CASE("numeric oracles against dense SVD") {
    Rng rng(47);
    int done = 0;
    for (int t = 0; t < 60 && done < 25; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h = random_finite_subgroup(rng, g, 12);
        Character chi = random_character(rng, h, true);
        if (!validate(chi)) continue;
        MonomialRep r = induce(h, chi);
        CHECK(commutant_dim_numeric(r) == commutant_dim_svd(r));
        CHECK(weight_space_dim(r, h, chi) == weight_space_dim_svd(r, h, chi));
        ++done;
    }
    CHECK(done >= 25);
}
#endif

TEST_CASE("Frobenius reciprocity dimensions") {
    Rng rng(53);
    int done = 0;
    for (int t = 0; t < 60 && done < 20; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h1 = random_finite_subgroup(rng, g, 12);
        TriSeq h2 = random_finite_subgroup(rng, g, 12);
        Character c1 = random_character(rng, h1);
        Character c2 = random_character(rng, h2);
        if (!validate(c1) || !validate(c2)) continue;
        MonomialRep pi = induce(h1, c1);
        CHECK(hom_dim_numeric(pi, induce(h2, c2)) == hom_dim_to_character_numeric(pi, c2));
        ++done;
    }
    CHECK(done >= 20);
}
