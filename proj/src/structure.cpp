#include "nilrep/structure.hpp"


namespace nilrep {

CentralPairing pairing_from_character(const GroupSpec& g, const Angle& chi_central) {
    if (!chi_central.is_rational())
        throw UnsupportedError("pairing_from_character: symbolic central value");
    const std::size_t n = g.rank();
    CentralPairing p{g, chi_central, IntMatrix(2 * n, 2 * n), 0};
    for (std::size_t i = 0; i < n; ++i) {
        p.gram(i, n + i) = g.s[i];
        p.gram(n + i, i) = -g.s[i];
    }
    Int N1 = *chi_central.order();
    p.modulus = g.s[0] * N1;
    return p;
}

Angle pairing_value(const CentralPairing& p, const std::vector<Int>& w,
                    const std::vector<Int>& w2) {
    const std::size_t m = 2 * p.group.rank();
    if (w.size() != m || w2.size() != m) throw DimensionError("pairing_value: bad vectors");
    Int t = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t += w[i] * p.gram(i, j) * w2[j];
    // t is a multiple of s1 by the divisibility chain
    return p.chi_on_derived.scaled(t / p.group.s[0]);
}

IntMatrix pairing_radical(const CentralPairing& p) {
    const std::size_t m = 2 * p.group.rank();
    return solve_congruence(p.gram, std::vector<Int>(m, p.modulus));
}

Int lattice_index(const IntMatrix& basis) {
    IntMatrix b = hnf_rows(basis);
    if (b.rows != b.cols) throw DomainError("lattice_index: basis is not full rank");
    Int idx = 1;
    for (std::size_t i = 0; i < b.rows; ++i) idx *= b(i, i);
    return idx;
}

std::vector<Int> rank_one_Nj(const GroupSpec& g, const Int& N1) {
    if (N1 < 1) throw DomainError("rank_one_Nj: N1 must be positive");
    std::vector<Int> out;
    out.reserve(g.rank());
    for (std::size_t j = 0; j < g.rank(); ++j) {
        Int ratio = g.s[j] / g.s[0];
        Int N = 1;
        while ((N * ratio) % N1 != 0) ++N;
        internal_check(N == N1 / gcd(N1, ratio), "closed form agrees with the search");
        out.push_back(N);
    }
    return out;
}

RankOneReport rank_one_report(const GroupSpec& g, const Angle& chi_central,
                              const std::vector<Angle>* u_values,
                              const std::vector<Angle>* v_values) {
    if (!chi_central.is_rational())
        throw UnsupportedError("rank_one_report: symbolic central value");
    const std::size_t n = g.rank();
    Int N1 = *chi_central.order();
    std::vector<Int> N = rank_one_Nj(g, N1);

    std::vector<Element> gens;
    for (std::size_t j = 0; j < n; ++j) {
        Element e = identity_element(g);
        e.u[j] = N[j];
        gens.push_back(std::move(e));
    }
    for (std::size_t j = 0; j < n; ++j) {
        Element e = identity_element(g);
        e.v[j] = 1;
        gens.push_back(std::move(e));
    }
    Element c = identity_element(g);
    c.z = 1;
    gens.push_back(std::move(c));
    TriSeq A = from_generators(g, gens);
    internal_check(A.gens == gens, "the pullback generators are already canonical");

    // delta restricted to [G,G] must be chi': s1 * delta(0,0,1) = chi_central
    std::vector<Angle> vals(A.size());
    for (std::size_t j = 0; j < n; ++j) {
        if (u_values) vals[j] = (*u_values)[j];
        if (v_values) vals[n + j] = (*v_values)[j];
    }
    vals[2 * n] = Angle::rational(chi_central.q / Rat(g.s[0]));
    Character delta(A, std::move(vals));

    MonomialRep rep = induce(A, delta);
    RankOneReport report{std::move(N), 1, Int(rep.dim()), false, std::move(A), std::move(delta)};
    for (const Int& Nj : report.N) report.predicted_dim *= Nj;
    report.irreducible = is_irreducible(rep).irreducible;
    return report;
}

GeneralCaseReport general_case_report(const MonomialRep& r) {
    for (const Angle& a : r.chi.values)
        if (!a.is_rational())
            throw UnsupportedError("general_case_report: symbolic character");
    IrreducibilityVerdict verdict = is_irreducible(r);
    if (!verdict.irreducible)
        throw PreconditionError("general_case_report: representation is reducible");

    // chi on [G,G], read off the representation: (0,0,s1) acts as a scalar.
    Element d = identity_element(r.group);
    d.z = r.group.s[0];
    MonomialMatrix md = r.matrix(d);
    Angle chi_central = md.dim() > 0 ? md.phase[0] : Angle{};
    for (std::size_t j = 0; j < md.dim(); ++j)
        internal_check(md.perm[j] == j && md.phase[j] == chi_central,
                       "a central element must act as a scalar on an irreducible");

    CentralPairing p = pairing_from_character(r.group, chi_central);
    IntMatrix rad = pairing_radical(p);
    GeneralCaseReport rep;
    rep.center_index = lattice_index(rad);
    SnfResult s = snf(rad);
    rep.invariant_factors = s.d;
    rep.dim = Int(r.dim());
    rep.chi_order = *chi_central.order();
    rep.divisibility_ok = (rep.dim % rep.chi_order == 0);
    rep.sqrt_ok = (rep.dim * rep.dim == rep.center_index);

    // Structural facts: invariant factors pair up and their per-pair
    // product annihilates chi. Violations mean an implementation bug.
    Int prod = 1;
    for (const Int& f : rep.invariant_factors) prod *= f;
    internal_check(prod == rep.center_index, "center index = product of invariant factors");
    internal_check(rep.invariant_factors.size() % 2 == 0, "invariant factor count is even");
    Int pair_prod = 1;
    for (std::size_t i = 0; i + 1 < rep.invariant_factors.size(); i += 2) {
        internal_check(rep.invariant_factors[i] == rep.invariant_factors[i + 1],
                       "invariant factors come in equal pairs");
        pair_prod *= rep.invariant_factors[i];
    }
    internal_check(chi_central.scaled(pair_prod).is_zero(),
                   "the per-pair factor product annihilates chi");
    return rep;
}

std::pair<TriSeq, Character> polarization(const CentralPairing& p) {
    const GroupSpec& g = p.group;
    const std::size_t m = 2 * g.rank();
    IntMatrix M = pairing_radical(p);
    for (;;) {
        // orthogonal lattice of M under f
        IntMatrix A(M.rows, m);
        for (std::size_t i = 0; i < M.rows; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k2 = 0; k2 < m; ++k2) A(i, j) += p.gram(j, k2) * M(i, k2);
        IntMatrix orth = solve_congruence(A, std::vector<Int>(M.rows, p.modulus));
        // grow by the first orthogonal basis vector outside M
        bool grew = false;
        for (std::size_t i = 0; i < orth.rows && !grew; ++i) {
            if (in_lattice(M, orth.row(i))) continue;
            IntMatrix bigger(M.rows + 1, m);
            for (std::size_t r2 = 0; r2 < M.rows; ++r2)
                for (std::size_t j = 0; j < m; ++j) bigger(r2, j) = M(r2, j);
            for (std::size_t j = 0; j < m; ++j) bigger(M.rows, j) = orth(i, j);
            M = hnf_rows(bigger);
            grew = true;
        }
        if (!grew) break;  // M = M^perp: maximal isotropic
    }

    // pull back to H_rho = M x Z (center included) with the extension chi~
    Element cgen = identity_element(g);
    cgen.z = 1;
    TriSeq dom = from_generators(g, {cgen});
    Character chi_t(dom, {Angle::rational(p.chi_on_derived.q / Rat(g.s[0]))});
    for (std::size_t i = 0; i < M.rows; ++i) {
        Element e = identity_element(g);
        for (std::size_t j = 0; j < m; ++j) e.coord(j) = M(i, j);
        TriSeq kdom = from_generators(g, {e});
        chi_t = diamond_extend(chi_t, trivial_character(kdom));
    }
    TriSeq h_rho = chi_t.domain;

    // the stabilizer of chi~ in G equals H_rho (maximality, hard-checked)
    CosetTable t = coset_table(h_rho);
    for (std::size_t j = 1; j < t.index; ++j)
        internal_check(!equal_on(conjugate_character(chi_t, t.reps[j]), chi_t, h_rho),
                       "the stabilizer of the extended character equals its domain");
    return {std::move(h_rho), std::move(chi_t)};
}

CorollaryReport corollary_check(std::size_t n, const Int& N) {
    if (n == 0 || N < 1) throw DomainError("corollary_check: need n >= 1, N >= 1");
    GroupSpec g(std::vector<Int>(n, 1));
    RankOneReport r = rank_one_report(g, Angle::rational(Rat(1, N)));
    Int expected = 1;
    for (std::size_t i = 0; i < n; ++i) expected *= N;

    CorollaryReport out;
    out.dim = r.constructed_dim;
    // chi_C = restriction of delta to the center <(0,0,1)>
    Element c = identity_element(g);
    c.z = 1;
    out.chi_order = *evaluate(r.delta, c).order();
    out.index = *index(r.subgroup_A);

    std::vector<Element> gens;
    for (std::size_t j = 0; j < n; ++j) {
        Element e = identity_element(g);
        e.u[j] = N;
        gens.push_back(std::move(e));
    }
    for (std::size_t j = 0; j < n; ++j) {
        Element e = identity_element(g);
        e.v[j] = 1;
        gens.push_back(std::move(e));
    }
    gens.push_back(std::move(c));
    out.subgroup_match = (r.subgroup_A == from_generators(g, gens));

    out.ok = r.irreducible && out.dim == expected && out.chi_order == N &&
             out.index == expected && out.subgroup_match;
    return out;
}

} // namespace nilrep
