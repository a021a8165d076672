#pragma once

#include "nilrep/numeric.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace nilrep {

// The group H(s1,...,sn) on Z^n x Z^n x Z with
//   (u,v,z)(u',v',z') = (u+u', v+v', z+z' + sum_i s_i u_i v'_i).
// The twist vector must satisfy the divisibility chain s1 | s2 | ... | sn;
// other inputs are rejected at construction.
struct GroupSpec {
    std::vector<Int> s;

    explicit GroupSpec(std::vector<Int> twists);

    std::size_t rank() const { return s.size(); }
    bool operator==(const GroupSpec& o) const = default;
};

// Group element in normal-form coordinates (u, v, z). The coordinate
// tuple determines the element; equality is componentwise.
struct Element {
    std::vector<Int> u, v;
    Int z;

    Element() = default;
    Element(std::vector<Int> uu, std::vector<Int> vv, Int zz)
        : u(std::move(uu)), v(std::move(vv)), z(std::move(zz)) {}

    std::size_t rank() const { return u.size(); }
    bool is_identity() const;

    // Polycyclic coordinate order (u1..un, v1..vn, z), positions 0..2n.
    const Int& coord(std::size_t pos) const;
    Int& coord(std::size_t pos);
    // First nonzero position, or 2n+1 for the identity.
    std::size_t leading_position() const;

    bool operator==(const Element& o) const = default;
    std::strong_ordering operator<=>(const Element& o) const;

    std::string str() const;  // "(u1,..,un,v1,..,vn,z)"
};

Element identity_element(const GroupSpec& g);
// Standard generators x1..xn, y1..yn, c in coordinate order.
std::vector<Element> standard_generators(const GroupSpec& g);

Element mul(const GroupSpec& g, const Element& a, const Element& b);
Element inv(const GroupSpec& g, const Element& a);
Element pow(const GroupSpec& g, const Element& a, const Int& k);
// [a,b] = a b a^-1 b^-1; always central, z = sum_i s_i (a.u_i b.v_i - b.u_i a.v_i).
Element commutator(const GroupSpec& g, const Element& a, const Element& b);
Element conjugate(const GroupSpec& g, const Element& x, const Element& by);  // by * x * by^-1

// sum_i s_i a.u_i b.v_i  (the z-twist of a*b)
Int twist(const GroupSpec& g, const Element& a, const Element& b);
// z-coordinate of [a,b]; bilinear in the (u,v) coordinates.
Int commutator_z(const GroupSpec& g, const Element& a, const Element& b);

} // namespace nilrep
