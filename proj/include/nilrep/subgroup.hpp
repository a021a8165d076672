#pragma once

#include "nilrep/group.hpp"
#include "nilrep/int_matrix.hpp"

#include <optional>
#include <vector>

namespace nilrep {

// Canonical triangular generating sequence of a subgroup, echelon along the
// polycyclic coordinate order (u1..un, v1..vn, z): strictly increasing
// leading positions, positive leading entries, entries above each leading
// entry reduced into [0, leading), z-parts reduced modulo the central
// generator. Two TriSeqs represent the same subgroup iff they are equal.
struct TriSeq {
    GroupSpec group;
    std::vector<Element> gens;
    std::vector<std::size_t> pivots;

    explicit TriSeq(GroupSpec g) : group(std::move(g)) {}

    std::size_t size() const { return gens.size(); }
    Int leading(std::size_t i) const { return gens[i].coord(pivots[i]); }
    // z of the trailing central generator, 0 when H ∩ Z(G) is trivial.
    Int central() const;
    bool operator==(const TriSeq& o) const {
        return group == o.group && gens == o.gens;
    }
    std::string str() const;
};

// Canonical TriSeq of the subgroup generated by gens. Closure under
// commutators is adjoined automatically (two-step: they are central).
// When trace is non-null it receives a (result gens) x (input gens)
// exponent matrix T with result[i] = homomorphic image of prod gens[j]^T[i][j]
// (exact up to commutators, which any character kills).
TriSeq from_generators(const GroupSpec& g, const std::vector<Element>& gens,
                       IntMatrix* trace = nullptr);

struct Membership {
    bool member = false;
    std::vector<Int> exponents;  // aligned with TriSeq gens; x = prod gens[i]^e[i]
    explicit operator bool() const { return member; }
};

Membership contains(const TriSeq& h, const Element& x);

// Finite iff the sequence has full length 2n+1; then the product of the
// leading entries.
std::optional<Int> index(const TriSeq& h);

struct CosetTable {
    TriSeq subgroup;
    std::vector<Element> reps;  // residue box in lexicographic order
    std::size_t index = 0;

    explicit CosetTable(TriSeq h) : subgroup(std::move(h)) {}

    // Canonical right-coset representative of H*x and its position.
    Element reduce_rep(const Element& x) const;
    std::size_t reduce_index(const Element& x) const;

private:
    std::vector<std::size_t> strides_;
    friend CosetTable coset_table(const TriSeq&);
};

CosetTable coset_table(const TriSeq& h);  // InfiniteIndexError if infinite

// Exact intersection via the (u,v)-lattice intersection plus a CRT match
// of the central z-lifts. Works for arbitrary index.
TriSeq intersect(const TriSeq& h1, const TriSeq& h2);

// g^-1 H g; conjugate characters chi^g live on it.
TriSeq conjugate_subgroup(const TriSeq& h, const Element& g);

// Smallest isolated (root-closed) subgroup containing H.
TriSeq radical(const TriSeq& h);

// N_G(H) = {g : [g, h_i] in H for all generators}; commutators are central
// and bilinear, so the condition is a congruence system on (u,v).
TriSeq normalizer(const TriSeq& h);

struct DoubleCoset {
    Element rep;                      // representative of smallest coset index
    std::vector<std::size_t> cosets;  // orbit of the right H-action, ascending
};

std::vector<DoubleCoset> double_cosets(const TriSeq& h);

// Least kappa >= 1 with (g x g^-1)^kappa in H; requires x in H and finite
// index (then kappa <= index).
Int power_return_exponent(const TriSeq& h, const Element& g, const Element& x);

TriSeq trivial_subgroup(const GroupSpec& g);
TriSeq full_group(const GroupSpec& g);
TriSeq center(const GroupSpec& g);
// [G,G] = <(0,0,s1)>.
TriSeq derived_subgroup(const GroupSpec& g);

} // namespace nilrep
