#include "nilrep/character.hpp"

#include <cmath>
#include <sstream>

namespace nilrep {

namespace {

Rat mod_one(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    return Rat(floormod(num, den), den);
}

// Surrogate denominators for the numeric instantiation of symbols.
long surrogate_prime(int id) {
    static const long primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                                  151, 157, 163, 167, 173, 179, 181, 191, 193, 197};
    if (id >= 1 && id <= 20) return primes[id - 1];
    // deterministic fallback past the table
    long p = 199 + 2L * id;
    return p;
}

} // namespace

Angle Angle::rational(Rat r) {
    Angle a;
    a.q = mod_one(r);
    return a;
}

Angle Angle::symbol(int id, Rat coeff) {
    Angle a;
    if (coeff != 0) a.sym[id] = std::move(coeff);
    return a;
}

void Angle::normalize() {
    q = mod_one(q);
    for (auto it = sym.begin(); it != sym.end();)
        it = (it->second == 0) ? sym.erase(it) : std::next(it);
}

Angle Angle::operator+(const Angle& o) const {
    Angle r = *this;
    r.q = mod_one(r.q + o.q);
    for (const auto& [id, c] : o.sym) {
        Rat& slot = r.sym[id];
        slot += c;
        if (slot == 0) r.sym.erase(id);
    }
    return r;
}

Angle Angle::operator-(const Angle& o) const { return *this + o.scaled(-1); }

Angle Angle::scaled(const Int& k) const {
    Angle r;
    r.q = mod_one(q * Rat(k));
    if (k != 0)
        for (const auto& [id, c] : sym) r.sym[id] = c * Rat(k);
    return r;
}

std::optional<Int> Angle::order() const {
    if (!sym.empty()) return std::nullopt;
    return Int(boost::multiprecision::denominator(q));
}

double Angle::numeric() const {
    double x = q.convert_to<double>();
    for (const auto& [id, c] : sym)
        x += c.convert_to<double>() / static_cast<double>(surrogate_prime(id));
    return x - std::floor(x);
}

std::string Angle::str() const {
    std::ostringstream os;
    os << to_string(q);
    for (const auto& [id, c] : sym) os << " + " << to_string(c) << "*theta" << id;
    return os.str();
}

Character::Character(TriSeq d, std::vector<Angle> vals)
    : domain(std::move(d)), values(std::move(vals)) {
    if (values.size() != domain.size())
        throw DimensionError("Character: one value per TriSeq generator required");
    for (Angle& a : values) a.normalize();
}

Character trivial_character(const TriSeq& domain) {
    return Character(domain, std::vector<Angle>(domain.size()));
}

bool validate(const Character& c) {
    for (std::size_t i = 0; i < c.domain.size(); ++i)
        for (std::size_t j = i + 1; j < c.domain.size(); ++j) {
            Element w = commutator(c.domain.group, c.domain.gens[i], c.domain.gens[j]);
            if (w.is_identity()) continue;
            if (!evaluate(c, w).is_zero()) return false;
        }
    return true;
}

Angle evaluate(const Character& c, const Element& x) {
    Membership m = contains(c.domain, x);
    if (!m) throw DomainError("evaluate: element outside the character's domain");
    Angle out;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        if (m.exponents[i] != 0) out = out + c.values[i].scaled(m.exponents[i]);
    return out;
}

Character conjugate_character(const Character& c, const Element& g) {
    TriSeq dom = conjugate_subgroup(c.domain, g);
    std::vector<Angle> vals;
    vals.reserve(dom.size());
    for (const Element& x : dom.gens) vals.push_back(evaluate(c, conjugate(dom.group, x, g)));
    return Character(std::move(dom), std::move(vals));
}

bool equal_on(const Character& c1, const Character& c2, const TriSeq& k) {
    for (const Element& x : k.gens)
        if (!(evaluate(c1, x) == evaluate(c2, x))) return false;
    return true;
}

std::optional<Int> order_on_derived(const Character& c) {
    Element d = identity_element(c.domain.group);
    d.z = c.domain.group.s[0];
    return evaluate(c, d).order();
}

Character diamond_extend(const Character& chi, const Character& delta) {
    const TriSeq& H = chi.domain;
    const TriSeq& K = delta.domain;
    if (!(H.group == K.group)) throw DimensionError("diamond_extend: group mismatch");
    const GroupSpec& g = H.group;

    // (1) K normalizes H: [k, h] in H for all generator pairs suffices,
    // since commutators are central and bilinear in coordinates.
    for (const Element& kk : K.gens)
        for (const Element& hh : H.gens)
            if (!contains(H, commutator(g, kk, hh)))
                throw PreconditionError("diamond_extend: K does not normalize H");
    // (2) chi is K-conjugation-invariant: chi(k h k^-1) = chi(h).
    for (const Element& kk : K.gens)
        for (const Element& hh : H.gens)
            if (!evaluate(chi, commutator(g, kk, hh)).is_zero())
                throw PreconditionError(
                    "diamond_extend: chi is not K-conjugation-invariant");
    // (3) chi and delta agree on H ∩ K.
    TriSeq HK_cap = intersect(H, K);
    if (!equal_on(chi, delta, HK_cap))
        throw PreconditionError("diamond_extend: chi and delta disagree on H ∩ K");

    std::vector<Element> gens = H.gens;
    gens.insert(gens.end(), K.gens.begin(), K.gens.end());
    IntMatrix trace;
    TriSeq HK = from_generators(g, gens, &trace);
    // Values follow the abelianized words: any character of <H,K> kills
    // commutators, so the traced exponents determine it.
    std::vector<Angle> vals(HK.size());
    for (std::size_t i = 0; i < HK.size(); ++i) {
        for (std::size_t j = 0; j < H.size(); ++j)
            vals[i] = vals[i] + chi.values[j].scaled(trace(i, j));
        for (std::size_t j = 0; j < K.size(); ++j)
            vals[i] = vals[i] + delta.values[j].scaled(trace(i, H.size() + j));
    }
    Character out(std::move(HK), std::move(vals));
    // The extension restricts exactly whenever the hypotheses hold.
    internal_check(validate(out), "the product character is a homomorphism");
    for (std::size_t j = 0; j < H.size(); ++j)
        internal_check(evaluate(out, H.gens[j]) == chi.values[j],
                       "the product character restricts to chi on H");
    for (std::size_t j = 0; j < K.size(); ++j)
        internal_check(evaluate(out, K.gens[j]) == delta.values[j],
                       "the product character restricts to delta on K");
    return out;
}

} // namespace nilrep
