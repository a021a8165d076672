#include "nilrep/group.hpp"

#include <sstream>

namespace nilrep {

GroupSpec::GroupSpec(std::vector<Int> twists) : s(std::move(twists)) {
    if (s.empty()) throw DimensionError("GroupSpec: rank must be >= 1");
    for (const Int& si : s)
        if (si < 1) throw DimensionError("GroupSpec: twists must be positive");
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i + 1] % s[i] != 0)
            throw DimensionError("GroupSpec: divisibility chain s1|s2|...|sn required");
}

bool Element::is_identity() const {
    if (z != 0) return false;
    for (const Int& x : u)
        if (x != 0) return false;
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

const Int& Element::coord(std::size_t pos) const {
    const std::size_t n = rank();
    if (pos < n) return u[pos];
    if (pos < 2 * n) return v[pos - n];
    return z;
}

Int& Element::coord(std::size_t pos) {
    const std::size_t n = rank();
    if (pos < n) return u[pos];
    if (pos < 2 * n) return v[pos - n];
    return z;
}

std::size_t Element::leading_position() const {
    const std::size_t total = 2 * rank() + 1;
    for (std::size_t p = 0; p < total; ++p)
        if (coord(p) != 0) return p;
    return total;
}

std::strong_ordering Element::operator<=>(const Element& o) const {
    const std::size_t total = 2 * rank() + 1;
    for (std::size_t p = 0; p < total; ++p) {
        if (coord(p) < o.coord(p)) return std::strong_ordering::less;
        if (coord(p) > o.coord(p)) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Element::str() const {
    std::ostringstream os;
    os << "(";
    for (const Int& x : u) os << x << ",";
    for (const Int& x : v) os << x << ",";
    os << z << ")";
    return os.str();
}

namespace {
void check_rank(const GroupSpec& g, const Element& a) {
    if (a.u.size() != g.rank() || a.v.size() != g.rank())
        throw DimensionError("element rank does not match group");
}
} // namespace

Element identity_element(const GroupSpec& g) {
    return Element(std::vector<Int>(g.rank()), std::vector<Int>(g.rank()), 0);
}

std::vector<Element> standard_generators(const GroupSpec& g) {
    std::vector<Element> gens;
    const std::size_t n = g.rank();
    for (std::size_t i = 0; i < n; ++i) {
        Element e = identity_element(g);
        e.u[i] = 1;
        gens.push_back(e);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Element e = identity_element(g);
        e.v[i] = 1;
        gens.push_back(e);
    }
    Element c = identity_element(g);
    c.z = 1;
    gens.push_back(c);
    return gens;
}

Int twist(const GroupSpec& g, const Element& a, const Element& b) {
    Int t = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) t += g.s[i] * a.u[i] * b.v[i];
    return t;
}

Int commutator_z(const GroupSpec& g, const Element& a, const Element& b) {
    return twist(g, a, b) - twist(g, b, a);
}

Element mul(const GroupSpec& g, const Element& a, const Element& b) {
    check_rank(g, a);
    check_rank(g, b);
    Element r = a;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        r.u[i] += b.u[i];
        r.v[i] += b.v[i];
    }
    r.z += b.z + twist(g, a, b);
    return r;
}

Element inv(const GroupSpec& g, const Element& a) {
    check_rank(g, a);
    Element r = a;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        r.u[i] = -a.u[i];
        r.v[i] = -a.v[i];
    }
    r.z = -a.z + twist(g, a, a);
    return r;
}

Element pow(const GroupSpec& g, const Element& a, const Int& k) {
    check_rank(g, a);
    // a^k = (k u, k v, k z + k(k-1)/2 * twist(a,a)), valid for all k in Z.
    Element r = a;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        r.u[i] = k * a.u[i];
        r.v[i] = k * a.v[i];
    }
    r.z = k * a.z + (k * (k - 1) / 2) * twist(g, a, a);
    return r;
}

Element commutator(const GroupSpec& g, const Element& a, const Element& b) {
    check_rank(g, a);
    check_rank(g, b);
    Element r = identity_element(g);
    r.z = commutator_z(g, a, b);
    return r;
}

Element conjugate(const GroupSpec& g, const Element& x, const Element& by) {
    // by*x*by^-1 = [by,x]*x, and commutators are central.
    Element r = x;
    r.z += commutator_z(g, by, x);
    return r;
}

} // namespace nilrep
