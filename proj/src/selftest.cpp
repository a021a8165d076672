#include "nilrep/selftest.hpp"

#include <functional>
#include <set>

namespace nilrep {

GroupSpec random_group(Rng& rng, std::size_t max_rank) {
    std::size_t n = static_cast<std::size_t>(rng.pick(1, static_cast<long>(max_rank)));
    std::vector<Int> s;
    Int cur = rng.pick_int(1, 3);
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back(cur);
        cur *= rng.pick_int(1, 3);
    }
    return GroupSpec(std::move(s));
}

Element random_element(Rng& rng, const GroupSpec& g, long bound) {
    Element e = identity_element(g);
    for (std::size_t p = 0; p <= 2 * g.rank(); ++p) e.coord(p) = rng.pick_int(-bound, bound);
    return e;
}

TriSeq random_subgroup(Rng& rng, const GroupSpec& g) {
    std::size_t k = static_cast<std::size_t>(rng.pick(1, 4));
    std::vector<Element> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_element(rng, g, 3));
    return from_generators(g, gens);
}

TriSeq random_finite_subgroup(Rng& rng, const GroupSpec& g, long index_cap) {
    const std::size_t total = 2 * g.rank() + 1;
    std::vector<Int> diag(total, 1);
    Int prod = 1;
    for (std::size_t p = 0; p < total; ++p) {
        long d = rng.pick(1, 4);
        if (prod * d <= index_cap) {
            diag[p] = d;
            prod *= d;
        }
    }
    std::vector<Element> gens;
    for (std::size_t p = 0; p < total; ++p) {
        Element e = identity_element(g);
        e.coord(p) = diag[p];
        for (std::size_t q = p + 1; q <= 2 * g.rank(); ++q) e.coord(q) = rng.pick_int(-2, 2);
        gens.push_back(std::move(e));
    }
    return from_generators(g, gens);
}

Character random_character(Rng& rng, const TriSeq& h, bool with_symbol) {
    std::vector<Angle> vals(h.size());
    Int c = h.central();
    // commutator constraint: (omega_ij / c) * chi(central) must vanish
    Int d = 0;
    if (c > 0)
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = i + 1; j < h.size(); ++j)
                d = gcd(d, commutator_z(h.group, h.gens[i], h.gens[j]) / c);
    for (std::size_t i = 0; i < h.size(); ++i) {
        bool is_central = (h.pivots[i] == 2 * h.group.rank());
        if (is_central) {
            Int q;
            if (d == 0) {
                q = rng.pick_int(1, 6);
            } else {
                // a random divisor of d keeps the commutator values trivial
                std::vector<Int> divisors;
                for (Int t = 1; t * t <= d; ++t)
                    if (d % t == 0) {
                        divisors.push_back(t);
                        divisors.push_back(d / t);
                    }
                q = divisors[static_cast<std::size_t>(rng.pick(
                    0, static_cast<long>(divisors.size()) - 1))];
            }
            vals[i] = Angle::rational(Rat(rng.pick_int(0, 11), q));
        } else {
            vals[i] = Angle::rational(Rat(rng.pick_int(0, 11), rng.pick_int(1, 6)));
            if (with_symbol && rng.pick(0, 2) == 0)
                vals[i] = vals[i] + Angle::symbol(static_cast<int>(rng.pick(1, 3)),
                                                  Rat(rng.pick_int(1, 3)));
        }
    }
    return Character(h, std::move(vals));
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct Harness {
    std::uint64_t seed;
    std::size_t budget;
    std::vector<PropertyResult> results;

    using Body = std::function<void(Rng&, std::size_t, PropertyResult&)>;

    void run(const std::string& name, std::size_t cases, const Body& body) {
        PropertyResult r;
        r.name = name;
        Rng rng(seed ^ fnv1a(name));
        body(rng, cases, r);
        results.push_back(std::move(r));
    }
};

void expect(PropertyResult& r, bool ok, const std::string& note) {
    ++r.cases;
    if (!ok) {
        ++r.failures;
        if (r.note.empty()) r.note = note;
    }
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.pick_int(-bound, bound);
    return m;
}

IntMatrix diag_matrix(const std::vector<Int>& d, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

// ---- lattice properties ----

void prop_hnf(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        IntMatrix m = random_matrix(rng, static_cast<std::size_t>(rng.pick(1, 4)),
                                    static_cast<std::size_t>(rng.pick(1, 4)), 9);
        IntMatrix h = hnf(m);
        expect(r, hnf(h) == h, "hnf not idempotent on " + m.str());
        // random unimodular row operations preserve the form
        IntMatrix w = m;
        for (int k = 0; k < 8; ++k) {
            std::size_t i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(w.rows) - 1));
            std::size_t j = static_cast<std::size_t>(rng.pick(0, static_cast<long>(w.rows) - 1));
            switch (rng.pick(0, 2)) {
                case 0:
                    if (i != j)
                        for (std::size_t c2 = 0; c2 < w.cols; ++c2) std::swap(w(i, c2), w(j, c2));
                    break;
                case 1:
                    for (std::size_t c2 = 0; c2 < w.cols; ++c2) w(i, c2) = -w(i, c2);
                    break;
                default:
                    if (i != j) {
                        Int q = rng.pick_int(-3, 3);
                        for (std::size_t c2 = 0; c2 < w.cols; ++c2) w(i, c2) += q * w(j, c2);
                    }
            }
        }
        expect(r, hnf(w) == h, "hnf not invariant under row ops on " + m.str());
    }
}

void prop_snf(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        IntMatrix m = random_matrix(rng, static_cast<std::size_t>(rng.pick(1, 4)),
                                    static_cast<std::size_t>(rng.pick(1, 4)), 9);
        SnfResult s = snf(m);
        bool chain = true;
        for (std::size_t i = 0; i + 1 < s.d.size(); ++i)
            if (s.d[i] != 0 && s.d[i + 1] % s.d[i] != 0) chain = false;
        for (const Int& d : s.d)
            if (d < 0) chain = false;
        expect(r, chain, "divisibility chain broken on " + m.str());
        expect(r, mat_mul(mat_mul(s.u, m), s.v) == diag_matrix(s.d, m.rows, m.cols),
               "u*m*v != diag(d) on " + m.str());
        expect(r, abs(determinant(s.u)) == 1 && abs(determinant(s.v)) == 1,
               "transforms not unimodular on " + m.str());
        expect(r,
               mat_mul(s.u, s.u_inv) == IntMatrix::identity(m.rows) &&
                   mat_mul(s.v, s.v_inv) == IntMatrix::identity(m.cols),
               "inverse transforms wrong on " + m.str());
    }
}

void prop_saturate(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        IntMatrix m = random_matrix(rng, static_cast<std::size_t>(rng.pick(1, 3)),
                                    static_cast<std::size_t>(rng.pick(1, 3)), 6);
        IntMatrix s = saturate(m);
        expect(r, saturate(s) == s, "saturate not idempotent on " + m.str());
        // every original row is in the saturation
        bool inside = true;
        for (std::size_t i = 0; i < m.rows; ++i)
            if (!m.row_is_zero(i) && !in_lattice(s, m.row(i))) inside = false;
        expect(r, inside, "row span not inside saturation on " + m.str());
    }
}

void prop_solve_congruence(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.pick(1, 2));
        std::size_t cols = static_cast<std::size_t>(rng.pick(1, 3));
        IntMatrix a = random_matrix(rng, rows, cols, 4);
        std::vector<Int> moduli;
        for (std::size_t i = 0; i < rows; ++i) moduli.push_back(rng.pick_int(1, 4));
        IntMatrix sol = solve_congruence(a, moduli);
        bool subst = true;
        for (std::size_t i = 0; i < sol.rows; ++i)
            for (std::size_t e = 0; e < rows; ++e) {
                Int acc = 0;
                for (std::size_t j = 0; j < cols; ++j) acc += a(e, j) * sol(i, j);
                if (acc % moduli[e] != 0) subst = false;
            }
        expect(r, subst, "basis vector fails the congruences for " + a.str());
        // exhaustive check over a box: the basis generates every solution
        Int box = 1;
        for (const Int& md : moduli) box = lcm(box, md);
        long B = box.convert_to<long>();
        bool agree = true;
        std::vector<long> x(cols, 0);
        for (;;) {
            std::vector<Int> xi(x.begin(), x.end());
            bool solves = true;
            for (std::size_t e = 0; e < rows; ++e) {
                Int acc = 0;
                for (std::size_t j = 0; j < cols; ++j) acc += a(e, j) * xi[j];
                if (acc % moduli[e] != 0) solves = false;
            }
            if (solves != in_lattice(sol, xi)) agree = false;
            std::size_t p = 0;
            while (p < cols && ++x[p] == B) x[p++] = 0;
            if (p == cols) break;
        }
        expect(r, agree, "exhaustive box disagrees for " + a.str());
    }
}

// ---- group properties ----

void prop_group_laws(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        Element a = random_element(rng, g), b = random_element(rng, g),
                c = random_element(rng, g);
        expect(r, mul(g, mul(g, a, b), c) == mul(g, a, mul(g, b, c)), "associativity");
        expect(r, mul(g, a, inv(g, a)) == identity_element(g), "inverse");
        expect(r, commutator(g, mul(g, a, b), c) ==
                      mul(g, commutator(g, a, c), commutator(g, b, c)),
               "commutator bilinearity");
        expect(r, mul(g, mul(g, a, b), inv(g, a)) == mul(g, commutator(g, a, b), b),
               "conjugation identity g h g^-1 = [g,h] h");
        Int k = rng.pick_int(-6, 6), m = rng.pick_int(-6, 6);
        expect(r, mul(g, pow(g, a, k), pow(g, a, m)) == pow(g, a, k + m), "power law");
        for (long l = -3; l <= 3; ++l)
            expect(r, commutator(g, pow(g, a, l), b) == pow(g, commutator(g, a, b), l),
                   "[x^l, y] = [x,y]^l");
    }
}

// ---- subgroup properties ----

void prop_triseq_canonical(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h = random_subgroup(rng, g);
        // Reversible moves on a generating set keep the subgroup, so the
        // canonical TriSeq must not change.
        std::vector<Element> gens = h.gens;
        if (gens.empty()) continue;
        for (int mv = 0; mv < 10; ++mv) {
            std::size_t i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(gens.size()) - 1));
            std::size_t j = static_cast<std::size_t>(rng.pick(0, static_cast<long>(gens.size()) - 1));
            switch (rng.pick(0, 3)) {
                case 0: std::swap(gens[i], gens[j]); break;
                case 1: gens[i] = inv(g, gens[i]); break;
                case 2:
                    if (i != j) gens[i] = mul(g, gens[i], pow(g, gens[j], rng.pick_int(-2, 2)));
                    break;
                default: gens.push_back(mul(g, gens[i], gens[j]));
            }
        }
        expect(r, from_generators(g, gens) == h, "canonical TriSeq changed: " + h.str());
        // membership round trip for every canonical generator
        bool member = true;
        for (const Element& x : h.gens)
            if (!contains(h, x)) member = false;
        expect(r, member, "generator not a member: " + h.str());
    }
}

void prop_coset_reduction(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h = random_finite_subgroup(rng, g, 24);
        CosetTable ct = coset_table(h);
        Element a = random_element(rng, g, 5);
        // exponents over the TriSeq give a member
        Element hh = identity_element(g);
        for (const Element& x : h.gens) hh = mul(g, hh, pow(g, x, rng.pick_int(-2, 2)));
        expect(r, ct.reduce_rep(mul(g, hh, a)) == ct.reduce_rep(a),
               "reduce(h*a) != reduce(a) for " + h.str());
        expect(r, contains(h, mul(g, a, inv(g, ct.reduce_rep(a)))).member,
               "a * rep(a)^-1 not in H for " + h.str());
        std::size_t idx = ct.index;
        expect(r, Int(idx) == *index(h), "coset count != index for " + h.str());
    }
}

void prop_radical_laws(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h = (rng.pick(0, 1) == 0) ? random_subgroup(rng, g)
                                         : random_finite_subgroup(rng, g, 16);
        TriSeq rad = radical(h);
        bool inside = true;
        for (const Element& x : h.gens)
            if (!contains(rad, x)) inside = false;
        expect(r, inside, "H not inside its radical: " + h.str());
        expect(r, radical(rad) == rad, "radical not idempotent: " + h.str());
        expect(r, radical(normalizer(h)) == normalizer(rad),
               "sqrt(N_G(H)) != N_G(sqrt(H)): " + h.str());
    }
}

void prop_double_cosets(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h = random_finite_subgroup(rng, g, 24);
        auto dcs = double_cosets(h);
        std::size_t total = 0;
        std::set<std::size_t> seen;
        for (const auto& dc : dcs) {
            total += dc.cosets.size();
            seen.insert(dc.cosets.begin(), dc.cosets.end());
        }
        std::size_t idx = index(h)->convert_to<std::size_t>();
        expect(r, total == idx && seen.size() == idx, "orbits do not partition " + h.str());
        // orbit size = [H : H ∩ H^g]
        bool sizes = true;
        for (const auto& dc : dcs) {
            TriSeq cap = intersect(h, conjugate_subgroup(h, dc.rep));
            Int rel = *index(cap) / *index(h);
            if (rel != Int(dc.cosets.size())) sizes = false;
        }
        expect(r, sizes, "orbit size != [H : H ∩ H^g] for " + h.str());
    }
}

void prop_intersect(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h1 = random_finite_subgroup(rng, g, 12);
        TriSeq h2 = random_finite_subgroup(rng, g, 12);
        expect(r, intersect(h1, h1) == h1, "intersect(h,h) != h");
        TriSeq cap = intersect(h1, h2);
        expect(r, *index(cap) <= *index(h1) * *index(h2), "index bound violated");
        bool both = true;
        for (const Element& x : cap.gens)
            if (!contains(h1, x) || !contains(h2, x)) both = false;
        expect(r, both, "intersection escapes a factor");
        // membership agrees with the definition on random samples
        bool defn = true;
        for (int s = 0; s < 12; ++s) {
            Element x = random_element(rng, g, 4);
            if (contains(cap, x).member !=
                (contains(h1, x).member && contains(h2, x).member))
                defn = false;
        }
        expect(r, defn, "cap membership contradicts the definition");
        Element gg = random_element(rng, g, 3);
        expect(r, conjugate_subgroup(conjugate_subgroup(h1, gg), inv(g, gg)) == h1,
               "conjugation round trip");
        Element x = random_element(rng, g, 2);
        if (contains(h1, x)) {
            Int kappa = power_return_exponent(h1, gg, x);
            expect(r, kappa >= 1 && kappa <= *index(h1), "kappa out of range");
        }
    }
}

// ---- character properties ----

void prop_character_hom(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h = random_finite_subgroup(rng, g, 16);
        Character chi = random_character(rng, h, true);
        if (!validate(chi)) continue;
        auto member = [&] {
            Element x = identity_element(g);
            for (const Element& e : h.gens) x = mul(g, x, pow(g, e, rng.pick_int(-2, 2)));
            return x;
        };
        Element x = member(), y = member();
        expect(r, evaluate(chi, mul(g, x, y)) == evaluate(chi, x) + evaluate(chi, y),
               "evaluate not a homomorphism on " + h.str());
        Element gg = random_element(rng, g, 3), hh = random_element(rng, g, 3);
        Character cg = conjugate_character(chi, gg);
        expect(r, validate(cg), "conjugate not valid");
        expect(r, conjugate_character(cg, hh) == conjugate_character(chi, mul(g, gg, hh)),
               "chi^(g h) != (chi^g)^h");
        // two-step shift law on a common member
        Element cx = conjugate(g, x, inv(g, gg));  // in g^-1 H g
        expect(r, evaluate(cg, cx) == evaluate(chi, x),
               "conjugate evaluation mismatch");
        if (contains(h, cx)) {
            Element comm = commutator(g, gg, cx);
            if (contains(h, comm))
                expect(r, evaluate(cg, cx) - evaluate(chi, cx) == evaluate(chi, comm),
                       "shift law chi^g(x) - chi(x) != chi([g,x])");
        }
    }
}

void prop_diamond(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        // H = center (normal, conjugation-invariant characters), K = <x>
        // with x non-central: H ∩ K is trivial, so the hypotheses hold and
        // the extension must restrict exactly.
        TriSeq h = center(g);
        Character chi(h, {Angle::rational(Rat(rng.pick_int(0, 5), rng.pick_int(1, 6)))});
        Element x = random_element(rng, g, 3);
        if (x.leading_position() >= 2 * g.rank()) continue;  // want non-central
        TriSeq k = from_generators(g, {x});
        Character delta(k, {rng.pick(0, 1) == 0
                                ? Angle::symbol(1, Rat(rng.pick_int(1, 3)))
                                : Angle::rational(Rat(rng.pick_int(0, 5), rng.pick_int(1, 6)))});
        Character ext = diamond_extend(chi, delta);
        bool restricts = true;
        for (std::size_t i = 0; i < h.size(); ++i)
            if (!(evaluate(ext, h.gens[i]) == chi.values[i])) restricts = false;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (!(evaluate(ext, k.gens[i]) == delta.values[i])) restricts = false;
        expect(r, restricts && validate(ext), "diamond extension does not restrict to inputs");
    }
}

// ---- monomial properties ----

void prop_monomial_hom(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h = random_finite_subgroup(rng, g, 16);
        Character chi = random_character(rng, h, true);
        if (!validate(chi)) continue;
        MonomialRep rep = induce(h, chi);
        expect(r, Int(rep.dim()) == *index(h), "dim != index");
        Element a = random_element(rng, g, 3), b = random_element(rng, g, 3);
        expect(r, rep.matrix(a) * rep.matrix(b) == rep.matrix(mul(g, a, b)),
               "matrix(a)matrix(b) != matrix(ab)");
        expect(r, rep.matrix(inv(g, a)) == rep.matrix(a).inverse(), "matrix(g^-1) wrong");
        expect(r, rep.matrix(identity_element(g)).is_identity(), "matrix(e) != 1");
        Membership mh = contains(h, a);
        if (mh) {
            MonomialMatrix m = rep.matrix(a);
            expect(r, m.perm[0] == 0 && m.phase[0] == evaluate(chi, a),
                   "matrix(h) does not fix the trivial coset with phase chi(h)");
        }
    }
}

void prop_kutzko_commutant(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h = random_finite_subgroup(rng, g, 24);
        Character chi = random_character(rng, h);
        if (!validate(chi)) continue;
        MonomialRep rep = induce(h, chi);
        std::size_t kutzko = endo_dim_kutzko(rep);
        std::size_t numeric = commutant_dim_numeric(rep);
        expect(r, kutzko == numeric,
               "endo_dim_kutzko=" + std::to_string(kutzko) + " != commutant=" +
                   std::to_string(numeric) + " on " + h.str());
        IrreducibilityVerdict verdict = is_irreducible(rep);
        if (verdict.irreducible)
            expect(r, weight_space_dim(rep, h, chi) == 1, "V_H(chi) not one-dimensional");
        // Mackey dimension identity
        Int mackey = 0;
        for (const auto& dc : double_cosets(h))
            mackey += *index(intersect(h, conjugate_subgroup(h, dc.rep))) / *index(h);
        expect(r, mackey == *index(h), "Mackey dimension identity fails");
    }
}

void prop_frobenius(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        TriSeq h1 = random_finite_subgroup(rng, g, 12);
        TriSeq h2 = random_finite_subgroup(rng, g, 12);
        Character c1 = random_character(rng, h1);
        Character c2 = random_character(rng, h2);
        if (!validate(c1) || !validate(c2)) continue;
        MonomialRep pi = induce(h1, c1);
        MonomialRep ind = induce(h2, c2);
        expect(r, hom_dim_numeric(pi, ind) == hom_dim_to_character_numeric(pi, c2),
               "Frobenius reciprocity dimensions differ");
    }
}

// ---- structure properties ----

void prop_rank_one(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        Int N1 = rng.pick_int(1, 5);
        Int p = rng.pick_int(1, 6);
        while (gcd(p, N1) != 1) ++p;
        RankOneReport rep = rank_one_report(g, Angle::rational(Rat(p, N1)));
        expect(r, rep.constructed_dim == rep.predicted_dim, "dim mismatch");
        expect(r, rep.irreducible, "rank-one construction reducible");
        bool divides = true;
        for (const Int& nj : rep.N)
            if (N1 % nj != 0) divides = false;
        expect(r, divides, "N_j does not divide N_1");
        expect(r, *order_on_derived(rep.delta) == N1, "order on [G,G] not recovered");
        // converse: N1 is recovered from the representation's central scalar
        MonomialRep rr = induce(rep.subgroup_A, rep.delta);
        Element d1 = identity_element(g);
        d1.z = g.s[0];
        expect(r, *rr.matrix(d1).phase[0].order() == N1,
               "central scalar does not rebuild N1");
    }
}

void prop_pairing(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        Int N1 = rng.pick_int(1, 6);
        CentralPairing p = pairing_from_character(g, Angle::rational(Rat(1, N1)));
        std::vector<Int> w, w2;
        for (std::size_t i = 0; i < 2 * g.rank(); ++i) {
            w.push_back(rng.pick_int(-4, 4));
            w2.push_back(rng.pick_int(-4, 4));
        }
        expect(r, pairing_value(p, w, w).is_zero(), "f(w,w) != 0");
        expect(r, pairing_value(p, w, w2) + pairing_value(p, w2, w) == Angle{},
               "pairing not antisymmetric");
        IntMatrix rad = pairing_radical(p);
        Int ci = lattice_index(rad);
        // paired invariant factors make the index a perfect square
        SnfResult s = snf(rad);
        Int root = 1;
        for (std::size_t i = 0; i + 1 < s.d.size(); i += 2) root *= s.d[i];
        expect(r, root * root == ci, "radical index is not a perfect square");
    }
}

void prop_polarization(Rng& rng, std::size_t cases, PropertyResult& r) {
    for (std::size_t t = 0; t < cases; ++t) {
        GroupSpec g = random_group(rng);
        Int N1 = rng.pick_int(1, 4);
        CentralPairing p = pairing_from_character(g, Angle::rational(Rat(1, N1)));
        auto [h, chi] = polarization(p);
        MonomialRep rep = induce(h, chi);
        expect(r, is_irreducible(rep).irreducible, "polarization not irreducible");
        Int ci = lattice_index(pairing_radical(p));
        expect(r, Int(rep.dim()) * Int(rep.dim()) == ci, "dim^2 != center index");
    }
}

} // namespace

SelftestReport run_selftest(std::uint64_t seed, std::size_t budget) {
    Harness h{seed, budget, {}};
    const std::size_t full = budget;
    const std::size_t small = std::max<std::size_t>(budget / 5, budget ? 1 : 0);

    h.run("lattice/hnf", full, prop_hnf);
    h.run("lattice/snf", full, prop_snf);
    h.run("lattice/saturate", full, prop_saturate);
    h.run("lattice/solve-congruence", small, prop_solve_congruence);
    h.run("group/laws", full, prop_group_laws);
    h.run("subgroups/canonical", small, prop_triseq_canonical);
    h.run("subgroups/coset-reduction", small, prop_coset_reduction);
    h.run("subgroups/radical-laws", small, prop_radical_laws);
    h.run("subgroups/double-cosets", small, prop_double_cosets);
    h.run("subgroups/intersect", small, prop_intersect);
    h.run("characters/homomorphism", small, prop_character_hom);
    h.run("characters/diamond", small, prop_diamond);
    h.run("monomial/homomorphism", small, prop_monomial_hom);
    h.run("monomial/kutzko-commutant", small, prop_kutzko_commutant);
    h.run("monomial/frobenius", small, prop_frobenius);
    h.run("structure/rank-one", small, prop_rank_one);
    h.run("structure/pairing", small, prop_pairing);
    h.run("structure/polarization", small, prop_polarization);

    SelftestReport report{seed, budget, std::move(h.results), true};
    for (const PropertyResult& p : report.properties)
        if (p.failures > 0) report.ok = false;
    return report;
}

} // namespace nilrep
