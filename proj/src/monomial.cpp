#include "nilrep/monomial.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>

namespace nilrep {

MonomialMatrix::MonomialMatrix(std::size_t n) : perm(n), phase(n) {
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;
}

bool MonomialMatrix::is_identity() const {
    for (std::size_t j = 0; j < dim(); ++j)
        if (perm[j] != j || !phase[j].is_zero()) return false;
    return true;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
    if (dim() != o.dim()) throw DimensionError("MonomialMatrix: size mismatch");
    MonomialMatrix r(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        r.perm[j] = o.perm[perm[j]];
        r.phase[j] = phase[j] + o.phase[perm[j]];
    }
    return r;
}

MonomialMatrix MonomialMatrix::inverse() const {
    MonomialMatrix r(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        r.perm[perm[j]] = j;
        r.phase[perm[j]] = Angle{} - phase[j];
    }
    return r;
}

namespace {

MonomialMatrix action_matrix(const GroupSpec& gs, const CosetTable& table,
                             const Character& chi, const Element& g) {
    MonomialMatrix m(table.index);
    for (std::size_t j = 0; j < table.index; ++j) {
        Element t = mul(gs, table.reps[j], g);
        std::size_t i = table.reduce_index(t);
        Element h = mul(gs, t, inv(gs, table.reps[i]));
        m.perm[j] = i;
        m.phase[j] = evaluate(chi, h);
    }
    return m;
}

} // namespace

MonomialMatrix MonomialRep::matrix(const Element& g) const {
    for (std::size_t i = 0; i < gen_matrices.size(); ++i)
        if (generators[i] == g) return gen_matrices[i];
    return action_matrix(group, table, chi, g);
}

MonomialRep induce(const TriSeq& h, const Character& c) {
    if (!(c.domain == h))
        throw PreconditionError("induce: character is not defined on the inducing subgroup");
    if (!validate(c)) throw PreconditionError("induce: character is not a homomorphism");
    CosetTable table = coset_table(h);  // throws InfiniteIndexError
    MonomialRep r{h.group, h, c, std::move(table), standard_generators(h.group), {}};
    r.gen_matrices.reserve(r.generators.size());
    for (const Element& g : r.generators)
        r.gen_matrices.push_back(action_matrix(r.group, r.table, r.chi, g));
    return r;
}

std::size_t endo_dim_kutzko(const MonomialRep& r) { return is_irreducible(r).endo_dim; }

IrreducibilityVerdict is_irreducible(const MonomialRep& r) {
    IrreducibilityVerdict v;
    for (const DoubleCoset& dc : double_cosets(r.subgroup)) {
        TriSeq hg = conjugate_subgroup(r.subgroup, dc.rep);
        TriSeq cap = intersect(r.subgroup, hg);
        if (equal_on(conjugate_character(r.chi, dc.rep), r.chi, cap)) {
            ++v.endo_dim;
            if (v.endo_dim == 2) v.witness = dc.rep;  // smallest non-trivial rep
        }
    }
    v.irreducible = (v.endo_dim == 1);
    return v;
}

std::size_t weight_space_dim(const MonomialRep& r, const TriSeq& k, const Character& psi) {
    if (!(psi.domain == k)) throw DomainError("weight_space_dim: psi is not a character of K");
    if (!validate(psi)) throw DomainError("weight_space_dim: psi is not a homomorphism");
    const std::size_t d = r.dim();
    // orbits of the right K-action on cosets
    std::vector<Element> steps;
    for (const Element& x : k.gens) {
        steps.push_back(x);
        steps.push_back(inv(r.group, x));
    }
    std::vector<bool> seen(d, false);
    std::size_t total = 0;
    for (std::size_t j0 = 0; j0 < d; ++j0) {
        if (seen[j0]) continue;
        std::vector<std::size_t> orbit{j0};
        seen[j0] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (const Element& s : steps) {
                std::size_t nx = r.table.reduce_index(mul(r.group, r.table.reps[orbit[head]], s));
                if (!seen[nx]) {
                    seen[nx] = true;
                    orbit.push_back(nx);
                }
            }
        // The orbit carries one psi-eigenvector iff the transported character
        // matches psi on the base-point stabilizer K ∩ g0^-1 H g0.
        const Element& g0 = r.table.reps[j0];
        TriSeq stab = intersect(k, conjugate_subgroup(r.subgroup, g0));
        if (equal_on(conjugate_character(r.chi, g0), psi, stab)) ++total;
    }
    return total;
}

TriSeq kernel(const MonomialRep& r) {
    for (const Angle& a : r.chi.values)
        if (!a.is_rational())
            throw UnsupportedError("kernel: symbolic character values are not supported");
    const TriSeq& h = r.subgroup;
    const std::size_t m = h.size();
    // ker chi inside H: exponent vectors e with sum e_i q_i ≡ 0 (mod 1)
    Int q_lcm = 1;
    for (const Angle& a : r.chi.values)
        q_lcm = lcm(q_lcm, Int(boost::multiprecision::denominator(a.q)));
    IntMatrix row(1, m);
    for (std::size_t i = 0; i < m; ++i)
        row(0, i) = Int(boost::multiprecision::numerator(r.chi.values[i].q)) *
                    (q_lcm / Int(boost::multiprecision::denominator(r.chi.values[i].q)));
    IntMatrix sol = solve_congruence(row, {q_lcm});
    std::vector<Element> gens;
    for (std::size_t i = 0; i < sol.rows; ++i) {
        Element e = identity_element(r.group);
        for (std::size_t j = 0; j < m; ++j)
            if (sol(i, j) != 0) e = mul(r.group, e, pow(r.group, h.gens[j], sol(i, j)));
        gens.push_back(std::move(e));
    }
    // the central kernel part, needed to generate ker chi on the nose
    if (h.central() > 0) {
        std::optional<Int> t = r.chi.values.back().order();
        Element c = identity_element(r.group);
        c.z = h.central() * *t;
        gens.push_back(std::move(c));
    }
    TriSeq ker_chi = from_generators(r.group, gens);
    TriSeq out = ker_chi;
    for (std::size_t j = 1; j < r.table.reps.size(); ++j)
        out = intersect(out, conjugate_subgroup(ker_chi, r.table.reps[j]));
    return out;
}

std::size_t default_dim_cap() {
    if (const char* env = std::getenv("NILREP_DIM_CAP")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 64;
}

namespace {

constexpr double kRankTol = 1e-9;

// Dimension of {X : X*A_i = B_i*X} for monomial A_i, B_i (unit-modulus
// phases). Each constraint ties exactly two entries:
//   X[b.perm[a], a.perm[c]] = e(a.phase[c] - b.phase[a]) * X[a, c],
// so the solution space decomposes along the entry graph: a connected
// component contributes 1 iff every cycle has a numerically consistent
// phase product (rank decision at tolerance kRankTol).
std::size_t intertwiner_dim(const std::vector<MonomialMatrix>& in,
                            const std::vector<MonomialMatrix>& out) {
    internal_check(in.size() == out.size(), "matched generator lists");
    const std::size_t d_in = in.empty() ? 0 : in[0].dim();
    const std::size_t d_out = out.empty() ? 0 : out[0].dim();
    const std::size_t nodes = d_in * d_out;
    struct Edge {
        std::size_t to;
        std::complex<double> ratio;
    };
    std::vector<std::vector<Edge>> adj(nodes);
    const double tau = 2.0 * std::numbers::pi;
    for (std::size_t g = 0; g < in.size(); ++g) {
        const MonomialMatrix& A = in[g];
        const MonomialMatrix& B = out[g];
        for (std::size_t a = 0; a < d_out; ++a)
            for (std::size_t c = 0; c < d_in; ++c) {
                std::size_t from = a * d_in + c;
                std::size_t to = B.perm[a] * d_in + A.perm[c];
                double ang = tau * (A.phase[c].numeric() - B.phase[a].numeric());
                std::complex<double> ratio(std::cos(ang), std::sin(ang));
                adj[from].push_back({to, ratio});
                adj[to].push_back({from, 1.0 / ratio});
            }
    }
    std::vector<std::complex<double>> val(nodes, 0.0);
    std::vector<bool> seen(nodes, false);
    std::size_t dim = 0;
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < nodes; ++root) {
        if (seen[root]) continue;
        bool consistent = true;
        seen[root] = true;
        val[root] = 1.0;
        stack.assign(1, root);
        while (!stack.empty()) {
            std::size_t at = stack.back();
            stack.pop_back();
            for (const Edge& e : adj[at]) {
                std::complex<double> want = e.ratio * val[at];
                if (!seen[e.to]) {
                    seen[e.to] = true;
                    val[e.to] = want;
                    stack.push_back(e.to);
                } else if (std::abs(val[e.to] - want) > kRankTol) {
                    consistent = false;
                }
            }
        }
        if (consistent) ++dim;
    }
    return dim;
}

} // namespace

std::size_t commutant_dim_numeric(const MonomialRep& r, std::size_t cap) {
    if (cap == 0) cap = default_dim_cap();
    if (r.dim() > cap) throw UnsupportedError("commutant_dim_numeric: dimension over the cap");
    return intertwiner_dim(r.gen_matrices, r.gen_matrices);
}

std::size_t hom_dim_numeric(const MonomialRep& r1, const MonomialRep& r2, std::size_t cap) {
    if (cap == 0) cap = default_dim_cap();
    if (!(r1.group == r2.group)) throw DimensionError("hom_dim_numeric: group mismatch");
    if (r1.dim() > cap || r2.dim() > cap)
        throw UnsupportedError("hom_dim_numeric: dimension over the cap");
    return intertwiner_dim(r1.gen_matrices, r2.gen_matrices);
}

std::size_t hom_dim_to_character_numeric(const MonomialRep& r, const Character& rho,
                                         std::size_t cap) {
    if (cap == 0) cap = default_dim_cap();
    if (r.dim() > cap)
        throw UnsupportedError("hom_dim_to_character_numeric: dimension over the cap");
    // functionals phi with phi∘rho_V(k) = rho(k)·phi, one scalar per coset
    std::vector<MonomialMatrix> in, out;
    for (std::size_t i = 0; i < rho.domain.size(); ++i) {
        in.push_back(r.matrix(rho.domain.gens[i]));
        MonomialMatrix scalar(1);
        scalar.phase[0] = rho.values[i];
        out.push_back(std::move(scalar));
    }
    return intertwiner_dim(in, out);
}

} // namespace nilrep
