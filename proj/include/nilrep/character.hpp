#pragma once

#include "nilrep/subgroup.hpp"

#include <map>
#include <optional>
#include <string>

namespace nilrep {

// Character value written additively: an exact rational in Q/Z plus a formal
// Q-linear combination of independent irrational angle symbols theta_k.
// Only the rational part is reduced modulo Z; symbol coefficients are formal.
// Equality of angles is exact equality of the multiplicative values.
struct Angle {
    Rat q;                   // in [0,1)
    std::map<int, Rat> sym;  // symbol id -> coefficient, no zero entries

    Angle() = default;
    static Angle rational(Rat r);
    static Angle symbol(int id, Rat coeff = Rat(1));

    bool is_zero() const { return q == 0 && sym.empty(); }
    bool is_rational() const { return sym.empty(); }

    Angle operator+(const Angle& o) const;
    Angle operator-(const Angle& o) const;
    Angle scaled(const Int& k) const;
    bool operator==(const Angle& o) const = default;

    // Order in Q/Z: the denominator of q; infinite (nullopt) with symbols.
    std::optional<Int> order() const;

    // Value in [0,1) with symbols instantiated at the fixed generic
    // surrogates theta_1 -> 1/101, theta_2 -> 1/103, ... (primes).
    double numeric() const;

    std::string str() const;

    void normalize();
};

// A character on a subgroup, stored as one exact angle per TriSeq generator.
// chi(prod gens[i]^e[i]) = sum e[i] * values[i]; this is a homomorphism iff
// validate() holds (every generator-pair commutator evaluates to 0).
struct Character {
    TriSeq domain;
    std::vector<Angle> values;

    Character(TriSeq d, std::vector<Angle> vals);
    bool operator==(const Character& o) const = default;
};

Character trivial_character(const TriSeq& domain);

bool validate(const Character& c);

// DomainError when x is outside the domain.
Angle evaluate(const Character& c, const Element& x);

// chi^g on g^-1 H g, chi^g(x) = chi(g x g^-1).
Character conjugate_character(const Character& c, const Element& g);

// Do the characters agree on k? Checked on the TriSeq generators of k,
// which suffices by additivity. DomainError if k is not contained in both
// domains.
bool equal_on(const Character& c1, const Character& c2, const TriSeq& k);

// Order of chi restricted to [G,G] = <(0,0,s1)>; nullopt = infinite.
// DomainError if [G,G] is not contained in the domain.
std::optional<Int> order_on_derived(const Character& c);

// Product-character extension: given chi on H and delta on K with (1) K
// normalizing H, (2) chi K-conjugation-invariant, (3) chi = delta on H ∩ K,
// the product character on <H, K> restricting to chi and delta.
// PreconditionError naming the failed hypothesis otherwise.
Character diamond_extend(const Character& chi, const Character& delta);

} // namespace nilrep
