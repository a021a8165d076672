#pragma once

#include "nilrep/character.hpp"

#include <optional>

namespace nilrep {

// Permutation-plus-phase matrix acting on coset-indexed functions:
// (M f)(j) = e(phase[j]) * f(perm[j]) with e(a) = exp(2*pi*i*a).
// Row j has its single nonzero entry in column perm[j].
struct MonomialMatrix {
    std::vector<std::size_t> perm;
    std::vector<Angle> phase;

    MonomialMatrix() = default;
    explicit MonomialMatrix(std::size_t n);

    std::size_t dim() const { return perm.size(); }
    bool is_identity() const;

    MonomialMatrix operator*(const MonomialMatrix& o) const;
    MonomialMatrix inverse() const;
    bool operator==(const MonomialMatrix& o) const = default;
};

// Finite induction Ind_H^G(chi) on the canonical right-coset basis {f_i}:
// rho(g) f_i = chi(g_j g g_i^-1) f_j for the j with g_j g in H g_i.
struct MonomialRep {
    GroupSpec group;
    TriSeq subgroup;
    Character chi;
    CosetTable table;
    std::vector<Element> generators;          // standard generators of G
    std::vector<MonomialMatrix> gen_matrices; // write-once cache, aligned

    std::size_t dim() const { return table.index; }
    MonomialMatrix matrix(const Element& g) const;
};

// InfiniteIndexError for infinite index; PreconditionError when the
// character is invalid or lives on a different subgroup.
MonomialRep induce(const TriSeq& h, const Character& c);

// Kutzko count: number of (H,H)-double cosets HgH with chi^g = chi on
// H ∩ g^-1 H g. Each intertwining block is 0- or 1-dimensional for
// characters, so this is dim End_G(Ind_H^G(chi)).
std::size_t endo_dim_kutzko(const MonomialRep& r);

struct IrreducibilityVerdict {
    bool irreducible = false;
    std::size_t endo_dim = 0;
    std::optional<Element> witness;  // smallest offending double-coset rep
};

IrreducibilityVerdict is_irreducible(const MonomialRep& r);

// Dimension of {v : rho(k) v = psi(k) v for all k in K}, counted orbit-wise
// over the K-action on cosets. K may have infinite index (orbits live in
// the finite coset space).
std::size_t weight_space_dim(const MonomialRep& r, const TriSeq& k, const Character& psi);

// {g : matrix(g) = 1} = intersection over coset reps of g_j^-1 (ker chi) g_j.
// UnsupportedError for symbolic characters.
TriSeq kernel(const MonomialRep& r);

// Numeric oracles: rank decisions over complex floating point, tolerance
// 1e-9, symbols instantiated at the fixed surrogates. cap = 0 means the
// default dimension cap (64, or the NILREP_DIM_CAP environment override).
std::size_t default_dim_cap();
std::size_t commutant_dim_numeric(const MonomialRep& r, std::size_t cap = 0);
std::size_t hom_dim_numeric(const MonomialRep& r1, const MonomialRep& r2, std::size_t cap = 0);
// dim Hom_K(r|_K, rho) for a character rho on K: the restriction side of
// Frobenius reciprocity.
std::size_t hom_dim_to_character_numeric(const MonomialRep& r, const Character& rho,
                                         std::size_t cap = 0);

} // namespace nilrep
