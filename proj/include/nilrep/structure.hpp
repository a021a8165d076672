#pragma once

#include "nilrep/monomial.hpp"

namespace nilrep {

// The antisymmetric central pairing f(w, w') = chi([x, y]) on the
// abelianization coordinates Z^2n, induced by a rational character value
// on (0,0,s1). f(w,w') = (w^T * gram * w' / s1) * chi_on_derived in Q/Z.
struct CentralPairing {
    GroupSpec group;
    Angle chi_on_derived;  // value at (0,0,s1), rational
    IntMatrix gram;        // 2n x 2n, antisymmetric, entries +-s_i
    Int modulus;           // s1 * N1: w^T gram w' ≡ 0 (mod modulus) iff f = 0
};

CentralPairing pairing_from_character(const GroupSpec& g, const Angle& chi_central);
Angle pairing_value(const CentralPairing& p, const std::vector<Int>& w,
                    const std::vector<Int>& w2);

// Basis (hnf rows, full rank 2n) of {w : f(w, -) = 0}; its index in Z^2n
// is |G_rho / Z(G_rho)|.
IntMatrix pairing_radical(const CentralPairing& p);
// [Z^2n : rowspan(basis)] for a full-rank basis.
Int lattice_index(const IntMatrix& basis);

struct RankOneReport {
    std::vector<Int> N;  // N_1..N_n
    Int predicted_dim;
    Int constructed_dim;
    bool irreducible = false;
    TriSeq subgroup_A;
    Character delta;
};

// N_j = least N >= 1 with N1 | N*s_j/s1, by direct minimal search.
std::vector<Int> rank_one_Nj(const GroupSpec& g, const Int& N1);

// Builds A = (N1 Z x ... x Nn Z) x Z^n x Z, extends chi' to delta (free
// values on the u- and v-generators default to 0), induces, and reports
// predicted vs constructed dimension and irreducibility.
RankOneReport rank_one_report(const GroupSpec& g, const Angle& chi_central,
                              const std::vector<Angle>* u_values = nullptr,
                              const std::vector<Angle>* v_values = nullptr);

struct GeneralCaseReport {
    Int center_index;
    std::vector<Int> invariant_factors;  // of Z^2n / radical, all 2n of them
    Int dim;
    Int chi_order;
    bool divisibility_ok = false;  // chi_order | dim
    bool sqrt_ok = false;          // dim^2 = center_index
};

// Reads chi on [G,G] off the representation, builds the pairing and checks
// the dimension and divisibility laws. The paired-invariant-factor and
// exponent facts are theorems and are hard-asserted.
GeneralCaseReport general_case_report(const MonomialRep& r);

// Maximal isotropic sublattice containing the radical (greedy, canonical
// order), pulled back to a subgroup containing the center, with a character
// extension built by repeated diamond extension.
std::pair<TriSeq, Character> polarization(const CentralPairing& p);

struct CorollaryReport {
    bool ok = false;
    Int dim;
    Int chi_order;
    Int index;
    bool subgroup_match = false;
};

// Four-way equivalence on H(1,...,1): dim = N^n, chi_C of order N,
// index N^n, and H(V) = (N Z)^n x Z^n x Z.
CorollaryReport corollary_check(std::size_t n, const Int& N);

} // namespace nilrep
