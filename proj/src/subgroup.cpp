#include "nilrep/subgroup.hpp"

#include <algorithm>
#include <sstream>

namespace nilrep {

Int TriSeq::central() const {
    if (!gens.empty() && pivots.back() == 2 * group.rank()) return gens.back().z;
    return 0;
}

std::string TriSeq::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].str();
    os << ">";
    return os.str();
}

namespace {

struct WorkRow {
    Element g;
    std::vector<Int> w;  // abelianized word over the input generators
};

void row_absorb(const GroupSpec& gs, WorkRow& a, const WorkRow& b, const Int& t) {
    // a <- a * b^t
    a.g = mul(gs, a.g, pow(gs, b.g, t));
    for (std::size_t j = 0; j < a.w.size(); ++j) a.w[j] += t * b.w[j];
}

void row_invert(const GroupSpec& gs, WorkRow& a) {
    a.g = inv(gs, a.g);
    for (Int& x : a.w) x = -x;
}

} // namespace

TriSeq from_generators(const GroupSpec& g, const std::vector<Element>& gens, IntMatrix* trace) {
    const std::size_t n = g.rank();
    const std::size_t zpos = 2 * n;
    const std::size_t k = gens.size();

    std::vector<WorkRow> pool;
    std::vector<WorkRow> centrals;
    auto stash = [&](WorkRow&& r) {
        std::size_t lead = r.g.leading_position();
        if (lead < zpos)
            pool.push_back(std::move(r));
        else if (r.g.z != 0)
            centrals.push_back(std::move(r));
        // identity rows carry no information
    };

    for (std::size_t i = 0; i < k; ++i) {
        if (gens[i].u.size() != n || gens[i].v.size() != n)
            throw DimensionError("from_generators: element rank mismatch");
        WorkRow r{gens[i], std::vector<Int>(k)};
        r.w[i] = 1;
        stash(std::move(r));
    }
    // Pairwise commutators land in the center and close the subgroup.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            Element c = commutator(g, gens[i], gens[j]);
            if (c.z != 0) centrals.push_back(WorkRow{c, std::vector<Int>(k)});
        }

    std::vector<WorkRow> rows;
    for (std::size_t p = 0; p < zpos; ++p) {
        for (;;) {
            std::vector<std::size_t> at;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (pool[i].g.leading_position() == p) at.push_back(i);
            if (at.empty()) break;
            if (at.size() == 1) {
                WorkRow r = std::move(pool[at[0]]);
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at[0]));
                if (r.g.coord(p) < 0) row_invert(g, r);
                rows.push_back(std::move(r));
                break;
            }
            std::size_t bi = at[0];
            for (std::size_t i : at)
                if (abs(pool[i].g.coord(p)) < abs(pool[bi].g.coord(p))) bi = i;
            for (std::size_t i : at) {
                if (i == bi) continue;
                Int q = pool[i].g.coord(p) / pool[bi].g.coord(p);
                row_absorb(g, pool[i], pool[bi], -q);
            }
            // rows whose (u,v)-part vanished are central now
            std::vector<WorkRow> keep;
            for (WorkRow& r : pool) {
                if (r.g.leading_position() >= zpos) {
                    if (r.g.z != 0) centrals.push_back(std::move(r));
                } else {
                    keep.push_back(std::move(r));
                }
            }
            pool = std::move(keep);
        }
    }
    internal_check(pool.empty(), "triangular reduction consumed every row");

    // gcd of the collected central z-values, with word tracking
    WorkRow cgen{identity_element(g), std::vector<Int>(k)};
    for (WorkRow& cr : centrals) {
        if (cgen.g.z == 0) {
            cgen = std::move(cr);
            if (cgen.g.z < 0) row_invert(g, cgen);
            continue;
        }
        Int p, q;
        Int d = xgcd(cgen.g.z, cr.g.z, p, q);
        std::vector<Int> w(k);
        for (std::size_t j = 0; j < k; ++j) w[j] = p * cgen.w[j] + q * cr.w[j];
        cgen = WorkRow{Element(std::vector<Int>(n), std::vector<Int>(n), d), std::move(w)};
    }
    if (cgen.g.z != 0) rows.push_back(std::move(cgen));

    // reduce entries above each leading entry, left to right
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t p = rows[i].g.leading_position();
        Int lead = rows[i].g.coord(p);
        for (std::size_t j = 0; j < i; ++j) {
            Int q = floordiv(rows[j].g.coord(p), lead);
            if (q != 0) row_absorb(g, rows[j], rows[i], -q);
        }
    }

    TriSeq h(g);
    for (WorkRow& r : rows) {
        h.pivots.push_back(r.g.leading_position());
        h.gens.push_back(std::move(r.g));
    }
    if (trace) {
        *trace = IntMatrix(rows.size(), k);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < k; ++j) (*trace)(i, j) = rows[i].w[j];
    }
    return h;
}

Membership contains(const TriSeq& h, const Element& x) {
    const std::size_t n = h.group.rank();
    if (x.u.size() != n || x.v.size() != n)
        throw DimensionError("contains: element rank mismatch");
    Element rem = x;
    std::vector<Int> exps(h.size());
    std::size_t gi = 0;
    for (std::size_t p = 0; p <= 2 * n; ++p) {
        if (gi < h.size() && h.pivots[gi] == p) {
            Int lead = h.leading(gi);
            Int c = rem.coord(p);
            if (c % lead != 0) return {};
            Int e = c / lead;
            if (e != 0) rem = mul(h.group, pow(h.group, h.gens[gi], -e), rem);
            exps[gi] = e;
            ++gi;
        } else if (rem.coord(p) != 0) {
            return {};
        }
    }
    internal_check(rem.is_identity(), "membership reduction ends at the identity");
    return {true, std::move(exps)};
}

std::optional<Int> index(const TriSeq& h) {
    if (h.size() != 2 * h.group.rank() + 1) return std::nullopt;
    Int idx = 1;
    for (std::size_t i = 0; i < h.size(); ++i) idx *= h.leading(i);
    return idx;
}

Element CosetTable::reduce_rep(const Element& x) const {
    Element rem = x;
    const TriSeq& h = subgroup;
    for (std::size_t i = 0; i < h.size(); ++i) {
        Int e = floordiv(rem.coord(h.pivots[i]), h.leading(i));
        if (e != 0) rem = mul(h.group, pow(h.group, h.gens[i], -e), rem);
    }
    return rem;
}

std::size_t CosetTable::reduce_index(const Element& x) const {
    Element rem = reduce_rep(x);
    std::size_t at = 0;
    for (std::size_t i = 0; i < subgroup.size(); ++i)
        at += rem.coord(subgroup.pivots[i]).convert_to<std::size_t>() * strides_[i];
    return at;
}

CosetTable coset_table(const TriSeq& h) {
    std::optional<Int> idx = index(h);
    if (!idx) throw InfiniteIndexError("coset_table: subgroup has infinite index");
    if (*idx > 1 << 22) throw UnsupportedError("coset_table: index too large for a table");
    const std::size_t m = h.size();
    CosetTable t(h);
    t.index = idx->convert_to<std::size_t>();
    t.strides_.assign(m, 1);
    for (std::size_t i = m; i-- > 1;)
        t.strides_[i - 1] = t.strides_[i] * h.leading(i).convert_to<std::size_t>();
    t.reps.reserve(t.index);
    std::vector<Int> res(m);
    for (std::size_t at = 0; at < t.index; ++at) {
        Element e = identity_element(h.group);
        for (std::size_t i = 0; i < m; ++i) e.coord(h.pivots[i]) = res[i];
        t.reps.push_back(std::move(e));
        for (std::size_t i = m; i-- > 0;) {
            if (++res[i] < h.leading(i)) break;
            res[i] = 0;
        }
    }
    return t;
}

namespace {

// (u,v)-projections of the non-central generators, as lattice basis rows.
IntMatrix uv_rows(const TriSeq& h) {
    const std::size_t n = h.group.rank();
    std::size_t r = h.size();
    if (r > 0 && h.pivots.back() == 2 * n) --r;
    IntMatrix m(r, 2 * n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) = h.gens[i].coord(j);
    return m;
}

// The element of H over a (u,v)-vector in the lattice of uv_rows(h);
// unique modulo the central part.
Element lift_uv(const TriSeq& h, const std::vector<Int>& w) {
    const std::size_t n = h.group.rank();
    std::vector<Int> rem = w;
    Element out = identity_element(h.group);
    std::size_t r = h.size();
    if (r > 0 && h.pivots.back() == 2 * n) --r;
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t p = h.pivots[i];
        Int lead = h.leading(i);
        if (rem[p] % lead != 0) throw DomainError("lift_uv: vector not in the (u,v)-lattice");
        Int e = rem[p] / lead;
        for (std::size_t j = 0; j < 2 * n; ++j) rem[j] -= e * h.gens[i].coord(j);
        if (e != 0) out = mul(h.group, out, pow(h.group, h.gens[i], e));
    }
    for (const Int& x : rem)
        if (x != 0) throw DomainError("lift_uv: vector not in the (u,v)-lattice");
    return out;
}

Element element_from_uv(const GroupSpec& g, const std::vector<Int>& w, Int z = 0) {
    const std::size_t n = g.rank();
    Element e = identity_element(g);
    for (std::size_t j = 0; j < 2 * n; ++j) e.coord(j) = w[j];
    e.z = std::move(z);
    return e;
}

// z with z ≡ z1 (mod c1), z ≡ z2 (mod c2); modulus 0 means exact.
std::optional<Int> crt(const Int& z1, const Int& c1, const Int& z2, const Int& c2) {
    if (c1 == 0 && c2 == 0) {
        if (z1 != z2) return std::nullopt;
        return z1;
    }
    if (c1 == 0) {
        if ((z2 - z1) % c2 != 0) return std::nullopt;
        return z1;
    }
    if (c2 == 0) {
        if ((z1 - z2) % c1 != 0) return std::nullopt;
        return z2;
    }
    Int p, q;
    Int d = xgcd(c1, c2, p, q);
    if ((z2 - z1) % d != 0) return std::nullopt;
    Int m = c2 / d;
    Int t = floormod(((z2 - z1) / d) * p, m);
    return z1 + c1 * t;
}

} // namespace

TriSeq intersect(const TriSeq& h1, const TriSeq& h2) {
    if (!(h1.group == h2.group)) throw DimensionError("intersect: group mismatch");
    const GroupSpec& g = h1.group;
    const std::size_t n = g.rank();
    const Int c1 = h1.central(), c2 = h2.central();

    std::vector<Element> gens;
    IntMatrix W = lattice_intersection(uv_rows(h1), uv_rows(h2));
    if (W.rows > 0) {
        // The lift defect delta(w) = z1(w) - z2(w) is a homomorphism
        // modulo gcd(c1, c2); its kernel is the projection of H1 ∩ H2.
        Int gc = gcd(c1, c2);
        IntMatrix deltas(1, W.rows);
        for (std::size_t i = 0; i < W.rows; ++i)
            deltas(0, i) = lift_uv(h1, W.row(i)).z - lift_uv(h2, W.row(i)).z;
        IntMatrix coeff = solve_congruence(deltas, {gc});
        for (std::size_t i = 0; i < coeff.rows; ++i) {
            std::vector<Int> m(2 * n);
            for (std::size_t kk = 0; kk < W.rows; ++kk)
                for (std::size_t j = 0; j < 2 * n; ++j) m[j] += coeff(i, kk) * W(kk, j);
            Element x1 = lift_uv(h1, m);
            Element x2 = lift_uv(h2, m);
            std::optional<Int> z = crt(x1.z, c1, x2.z, c2);
            internal_check(z.has_value(), "central lifts must admit a common value");
            gens.push_back(element_from_uv(g, m, *z));
        }
    }
    if (c1 > 0 && c2 > 0) {
        Element c = identity_element(g);
        c.z = lcm(c1, c2);
        gens.push_back(std::move(c));
    }
    return from_generators(g, gens);
}

TriSeq conjugate_subgroup(const TriSeq& h, const Element& g) {
    Element gi = inv(h.group, g);
    std::vector<Element> gens;
    gens.reserve(h.size());
    for (const Element& x : h.gens) gens.push_back(conjugate(h.group, x, gi));
    return from_generators(h.group, gens);
}

TriSeq radical(const TriSeq& h) {
    const GroupSpec& g = h.group;
    const std::size_t n = g.rank();
    IntMatrix L = uv_rows(h);
    IntMatrix sat = saturate(L);
    std::vector<Element> gens;

    if (h.central() > 0) {
        // Z(G) meets H nontrivially, so Z(G) lies in the radical and any
        // z-lift of the saturated lattice works.
        for (std::size_t i = 0; i < sat.rows; ++i)
            gens.push_back(element_from_uv(g, sat.row(i)));
        Element c = identity_element(g);
        c.z = 1;
        gens.push_back(std::move(c));
        return from_generators(g, gens);
    }

    // H ∩ Z(G) = 1: the radical meets the center trivially too, and each
    // saturation class either has a unique root-lift or contributes nothing.
    if (sat.rows == 0) return from_generators(g, {});
    // residues of sat/L, via the coordinates of L in the sat basis
    IntMatrix X(L.rows, sat.rows);
    for (std::size_t i = 0; i < L.rows; ++i) {
        std::vector<Int> cf;
        internal_check(in_lattice(sat, L.row(i), &cf), "rows lie inside their saturation");
        for (std::size_t j = 0; j < sat.rows; ++j) X(i, j) = cf[j];
    }
    IntMatrix XH = hnf_rows(X);
    internal_check(XH.rows == sat.rows, "saturation preserves the rank");
    Int count = 1;
    for (std::size_t i = 0; i < XH.rows; ++i) count *= XH(i, i);
    if (count > 20000) throw UnsupportedError("radical: saturation quotient too large");

    gens = h.gens;
    std::vector<Int> res(sat.rows);
    for (Int it = 0; it < count; ++it) {
        std::vector<Int> w(2 * n);
        for (std::size_t i = 0; i < sat.rows; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j) w[j] += res[i] * sat(i, j);
        Int k = min_multiple_in_lattice(L, w);
        internal_check(k >= 1, "saturation classes have a multiple in the lattice");
        std::vector<Int> kw(2 * n);
        for (std::size_t j = 0; j < 2 * n; ++j) kw[j] = k * w[j];
        Element xh = lift_uv(h, kw);
        Element we = element_from_uv(g, w);
        Int zeta_num = xh.z - (k * (k - 1) / 2) * twist(g, we, we);
        if (zeta_num % k == 0) gens.push_back(element_from_uv(g, w, zeta_num / k));
        for (std::size_t i = sat.rows; i-- > 0;) {
            if (++res[i] < XH(i, i)) break;
            res[i] = 0;
        }
    }
    return from_generators(g, gens);
}

TriSeq normalizer(const TriSeq& h) {
    const GroupSpec& g = h.group;
    const std::size_t n = g.rank();
    std::size_t r = h.size();
    if (r > 0 && h.pivots.back() == 2 * n) --r;
    // [x, h_i] = (0,0, omega(x, h_i)) must land in H, i.e. be 0 mod central().
    IntMatrix A(r, 2 * n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t kk = 0; kk < n; ++kk) {
            A(i, kk) = g.s[kk] * h.gens[i].v[kk];
            A(i, n + kk) = -g.s[kk] * h.gens[i].u[kk];
        }
    IntMatrix B = solve_congruence(A, std::vector<Int>(r, h.central()));
    std::vector<Element> gens;
    for (std::size_t i = 0; i < B.rows; ++i) gens.push_back(element_from_uv(g, B.row(i)));
    Element c = identity_element(g);
    c.z = 1;  // the center always normalizes
    gens.push_back(std::move(c));
    return from_generators(g, gens);
}

std::vector<DoubleCoset> double_cosets(const TriSeq& h) {
    CosetTable t = coset_table(h);
    std::vector<Element> steps;
    for (const Element& x : h.gens) {
        steps.push_back(x);
        steps.push_back(inv(h.group, x));
    }
    std::vector<bool> seen(t.index, false);
    std::vector<DoubleCoset> out;
    for (std::size_t j0 = 0; j0 < t.index; ++j0) {
        if (seen[j0]) continue;
        std::vector<std::size_t> orbit{j0};
        seen[j0] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (const Element& s : steps) {
                std::size_t next = t.reduce_index(mul(h.group, t.reps[orbit[head]], s));
                if (!seen[next]) {
                    seen[next] = true;
                    orbit.push_back(next);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(DoubleCoset{t.reps[j0], std::move(orbit)});
    }
    return out;
}

Int power_return_exponent(const TriSeq& h, const Element& g, const Element& x) {
    if (!contains(h, x)) throw PreconditionError("power_return_exponent: x is not in H");
    std::optional<Int> idx = index(h);
    if (!idx) throw InfiniteIndexError("power_return_exponent: subgroup has infinite index");
    Element y = conjugate(h.group, x, g);
    for (Int kappa = 1; kappa <= *idx; ++kappa)
        if (contains(h, pow(h.group, y, kappa))) return kappa;
    throw std::logic_error("power_return_exponent: no exponent up to the index");
}

TriSeq trivial_subgroup(const GroupSpec& g) { return from_generators(g, {}); }

TriSeq full_group(const GroupSpec& g) { return from_generators(g, standard_generators(g)); }

TriSeq center(const GroupSpec& g) {
    Element c = identity_element(g);
    c.z = 1;
    return from_generators(g, {c});
}

TriSeq derived_subgroup(const GroupSpec& g) {
    Element c = identity_element(g);
    c.z = g.s[0];
    return from_generators(g, {c});
}

} // namespace nilrep
