#pragma once
// Center computations at roots of unity.
//
// * is_central: exact membership in the center by commuting with every
//   generator.
// * power_centrality_exponent: the exponent l (an lcm of parameter orders)
//   for which all x_ij^l are central.
// * center_generators_odd: for O_q(M_n) with ord(q) = m odd, the generating
//   family x_ij^m, the quantum determinant D, and the mixed antidiagonal
//   minor powers Y_{t,r} = D(t)^r tau(D(n-t))^{m-r}.
// * leading_exponent_matrix / exponent_kernel: the quasipolynomial shadow
//   x_k x_l = zeta^{a_kl} x_l x_k of a presentation and the subgroup of
//   exponent vectors commuting with every generator in that shadow, found
//   through a Smith-style diagonalization.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qma/qdet.hpp"

namespace qma {

inline bool is_central(const AlgebraElement& x) {
    for (int k = 0; k < x.pres()->size(); ++k)
        if (!commutator(x, AlgebraElement::generator(x.pres(), k)).is_zero()) return false;
    return true;
}

/// lcm of ord(p_ij) and ord(lambda p_ji) over ordered pairs i != j; the
/// common exponent making every x_ij^l central.  Requires specialized
/// (cyclotomic) coefficients whose parameters are roots of unity.
inline std::optional<long> power_centrality_exponent(const PresentationPtr& pres) {
    const QMAStructure& s = pres->qma();
    if (pres->mode() != CoefficientMode::cyclotomic) return std::nullopt;
    long l = 1;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            if (i == j) continue;
            auto o1 = s.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].cyclotomic().order();
            auto o2 = (s.lambda * s.p[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                          .cyclotomic()
                          .order();
            if (!o1 || !o2) return std::nullopt;
            l = lcm_long(l, lcm_long(*o1, *o2));
        }
    return l;
}

/// Generating family of the center of O_q(M_n) with q a primitive m-th root
/// of unity, m odd and >= 3.
struct CenterGeneratorsOdd {
    int n = 0;
    long m = 0;
    std::vector<std::vector<AlgebraElement>> Z;               // Z_ij = x_ij^m
    std::vector<AlgebraElement> D;                            // the quantum determinant, singleton
    std::map<std::pair<int, int>, AlgebraElement> Y;          // (t, r) -> D(t)^r tau(D(n-t))^{m-r}

    const AlgebraElement& determinant() const { return D.front(); }
    const AlgebraElement& z(int i, int j) const {  // 1-based
        return Z.at(static_cast<std::size_t>(i) - 1).at(static_cast<std::size_t>(j) - 1);
    }
    const AlgebraElement& y(int t, int r) const { return Y.at({t, r}); }
};

inline CenterGeneratorsOdd center_generators_odd(const PresentationPtr& pres) {
    const QMAStructure& s = pres->qma();
    const Coefficient& q = pres->single_parameter();
    if (q.mode() != CoefficientMode::cyclotomic)
        throw std::invalid_argument("center_generators_odd: requires a root-of-unity q");
    auto ord = q.cyclotomic().order();
    if (!ord || *ord < 3 || *ord % 2 == 0)
        throw std::invalid_argument("center_generators_odd: requires ord(q) odd and >= 3");
    const long m = *ord;

    CenterGeneratorsOdd out;
    out.n = s.n;
    out.m = m;
    for (int i = 1; i <= s.n; ++i) {
        std::vector<AlgebraElement> row;
        for (int j = 1; j <= s.n; ++j)
            row.push_back(AlgebraElement::generator(pres, pres->qma_index(i, j))
                              .pow(static_cast<unsigned long>(m)));
        out.Z.push_back(std::move(row));
    }
    out.D.push_back(quantum_determinant(pres));
    for (int t = 1; t <= s.n - 1; ++t) {
        const AlgebraElement dt = antidiagonal_minor(pres, t);
        const AlgebraElement taud = antidiagonal_minor_transposed(pres, s.n - t);
        for (int r = 1; r <= m - 1; ++r)
            out.Y.emplace(std::make_pair(t, r), dt.pow(static_cast<unsigned long>(r)) *
                                                    taud.pow(static_cast<unsigned long>(m - r)));
    }
    return out;
}

/// Classical (signed) determinant of a matrix of pairwise commuting algebra
/// elements, by the Leibniz sum.
inline AlgebraElement commutative_determinant(const std::vector<std::vector<AlgebraElement>>& M) {
    if (M.empty()) throw std::invalid_argument("commutative_determinant: empty matrix");
    const std::size_t t = M.size();
    const PresentationPtr& pres = M[0][0].pres();
    AlgebraElement sum = AlgebraElement::zero(pres);
    std::vector<std::size_t> sigma(t);
    for (std::size_t k = 0; k < t; ++k) sigma[k] = k;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < t; ++a)
            for (std::size_t b = a + 1; b < t; ++b)
                if (sigma[a] > sigma[b]) ++inversions;
        AlgebraElement prod = AlgebraElement::one(pres);
        for (std::size_t r = 0; r < t; ++r) prod = prod * M[r].at(sigma[r]);
        sum = inversions % 2 == 0 ? sum + prod : sum - prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sum;
}

/// det of the top-right t x t block (Z_ij with i <= t, j >= n-t+1).
inline AlgebraElement det_top_right_block(const CenterGeneratorsOdd& c, int t) {
    std::vector<std::vector<AlgebraElement>> M;
    for (int i = 1; i <= t; ++i) {
        std::vector<AlgebraElement> row;
        for (int j = c.n - t + 1; j <= c.n; ++j) row.push_back(c.z(i, j));
        M.push_back(std::move(row));
    }
    return commutative_determinant(M);
}

/// det of the bottom-left t x t block (Z_ij with i >= n-t+1, j <= t).
inline AlgebraElement det_bottom_left_block(const CenterGeneratorsOdd& c, int t) {
    std::vector<std::vector<AlgebraElement>> M;
    for (int i = c.n - t + 1; i <= c.n; ++i) {
        std::vector<AlgebraElement> row;
        for (int j = 1; j <= t; ++j) row.push_back(c.z(i, j));
        M.push_back(std::move(row));
    }
    return commutative_determinant(M);
}

/// det of the full Z matrix.
inline AlgebraElement det_z_matrix(const CenterGeneratorsOdd& c) {
    return commutative_determinant(c.Z);
}

// ---------------------------------------------------------------------------
// Quasipolynomial shadow and its central exponent vectors.

/// x_k x_l = zeta_L^{a[k][l]} x_l x_k, reading only the leading (swap)
/// coefficients of the straightening rules.  L is the lcm of their orders.
struct LeadingExponentMatrix {
    long L = 1;
    std::vector<std::vector<long>> a;  // g x g, a[k][l] in [0, L), a[l][k] = -a[k][l] mod L
};

inline LeadingExponentMatrix leading_exponent_matrix(const PresentationPtr& pres) {
    if (pres->mode() != CoefficientMode::cyclotomic)
        throw std::invalid_argument("leading_exponent_matrix: requires cyclotomic coefficients");
    const int g = pres->size();
    long L = 1;
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < a; ++b) {
            auto o = pres->rule(a, b).swap.cyclotomic().order();
            if (!o) throw std::invalid_argument("leading_exponent_matrix: swap is not a root of unity");
            L = lcm_long(L, *o);
        }
    LeadingExponentMatrix out;
    out.L = L;
    out.a.assign(static_cast<std::size_t>(g), std::vector<long>(static_cast<std::size_t>(g), 0));
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < a; ++b) {
            const Coefficient& swap = pres->rule(a, b).swap;
            long k = -1;
            for (long e = 0; e < L; ++e)
                if (swap == Coefficient(cyclo(L, e))) {
                    k = e;
                    break;
                }
            if (k < 0) throw std::logic_error("leading_exponent_matrix: exponent not found");
            out.a[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = k;
            out.a[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = (L - k) % L;
        }
    return out;
}

/// Diagonalization S = R A C with R, C unimodular; returns diag(S) and C.
struct SmithDiagonalization {
    std::vector<Integer> diag;                // length = matrix size
    std::vector<std::vector<Integer>> C;      // accumulated column transforms
};

inline SmithDiagonalization smith_diagonalize(std::vector<std::vector<Integer>> M) {
    const std::size_t g = M.size();
    for (const auto& row : M)
        if (row.size() != g) throw std::invalid_argument("smith_diagonalize: matrix must be square");
    std::vector<std::vector<Integer>> C(g, std::vector<Integer>(g, 0));
    for (std::size_t i = 0; i < g; ++i) C[i][i] = 1;

    auto swap_rows = [&](std::size_t i, std::size_t j) { std::swap(M[i], M[j]); };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < g; ++r) std::swap(M[r][i], M[r][j]);
        for (std::size_t r = 0; r < g; ++r) std::swap(C[r][i], C[r][j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t c = 0; c < g; ++c) M[dst][c] += f * M[src][c];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t r = 0; r < g; ++r) M[r][dst] += f * M[r][src];
        for (std::size_t r = 0; r < g; ++r) C[r][dst] += f * C[r][src];
    };

    for (std::size_t t = 0; t < g; ++t) {
        // Find a nonzero pivot in the trailing submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < g && !found; ++i)
            for (std::size_t j = t; j < g; ++j)
                if (M[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                    break;
                }
        if (!found) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < g; ++i)
                while (M[i][t] != 0) {
                    if (M[t][t] == 0 || abs(M[i][t]) < abs(M[t][t])) swap_rows(i, t);
                    if (M[i][t] == 0) break;
                    Integer f = -(M[i][t] / M[t][t]);
                    add_row(i, t, f);
                    if (M[i][t] != 0) swap_rows(i, t);
                }
            for (std::size_t j = t + 1; j < g; ++j)
                while (M[t][j] != 0) {
                    if (M[t][t] == 0 || abs(M[t][j]) < abs(M[t][t])) swap_cols(j, t);
                    if (M[t][j] == 0) break;
                    Integer f = -(M[t][j] / M[t][t]);
                    add_col(j, t, f);
                    if (M[t][j] != 0) swap_cols(j, t);
                }
            for (std::size_t i = t + 1; i < g; ++i)
                if (M[i][t] != 0) clean = false;
        }
    }

    SmithDiagonalization out;
    out.diag.reserve(g);
    for (std::size_t i = 0; i < g; ++i) out.diag.push_back(M[i][i]);
    out.C = std::move(C);
    return out;
}

/// Solutions e in (Z/L)^g of A e = 0 (mod L): the exponent vectors whose
/// monomials are central in the quasipolynomial shadow.
struct ExponentKernel {
    long L = 1;
    std::vector<long> divisor_gcds;          // gcd(s_i, L) per diagonal entry
    Integer size = 1;                        // product of the gcds
    bool only_trivial = false;               // kernel = {0}, i.e. (L Z)^g upstairs
    std::vector<std::vector<long>> basis;    // generators of the kernel mod L
};

inline ExponentKernel exponent_kernel(const LeadingExponentMatrix& lem) {
    const std::size_t g = lem.a.size();
    std::vector<std::vector<Integer>> M(g, std::vector<Integer>(g, 0));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) M[i][j] = lem.a[i][j];
    SmithDiagonalization s = smith_diagonalize(std::move(M));

    ExponentKernel out;
    out.L = lem.L;
    out.only_trivial = true;
    for (std::size_t i = 0; i < g; ++i) {
        Integer d = gcd(s.diag[i], Integer(lem.L));
        long dl = d.get_si();
        out.divisor_gcds.push_back(dl);
        out.size *= d;
        if (dl != 1) {
            out.only_trivial = false;
            // Kernel generator: C * ((L/d) e_i) reduced mod L.
            std::vector<long> vec(g, 0);
            const long step = lem.L / dl;
            for (std::size_t r = 0; r < g; ++r) {
                Integer v = s.C[r][i] * step;
                Integer reduced = (v % lem.L + lem.L) % lem.L;
                vec[r] = reduced.get_si();
            }
            out.basis.push_back(std::move(vec));
        }
    }
    return out;
}

}  // namespace qma
