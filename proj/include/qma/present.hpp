#pragma once
// Commutative presentation of the center of O_q(M_n) at an odd root of
// unity of order m, and the analyses that hang off it:
//
// * center_presentation: the polynomial ring T = k[Z_ij, D, Y_tr] together
//   with the relation families
//     D^m - det(Z),
//     Y_ti Y_tj - Y_{t,i+j} det(B_{n-t})   (i + j < m),
//     Y_ti Y_tj - det(A_t) det(B_{n-t})    (i + j = m),
//     Y_ti Y_tj - Y_{t,i+j-m} det(A_t)     (i + j > m),
//   where A_t is the top-right t x t block of (Z_ij) and B_{n-t} the
//   bottom-left (n-t) x (n-t) block.
// * TwoTierOrder: degree-lex on the Y-part (Y_11 > ... > Y_{n-1,m-1}),
//   ties broken by lex on (D, Z_11, ..., Z_nn).
// * groebner_verify: Buchberger's criterion - every S-polynomial of the
//   relation set reduces to zero, and the leading terms are exactly D^m
//   and the products Y_ti Y_tj.
// * normal_monomial_count / z_free_normal_count / hilbert_degree: counting
//   monomials avoiding the leading terms, and the degree of the count's
//   asymptotic polynomial obtained by exact finite differences.
// * jacobian_rank_at: exact rank of the relation Jacobian at a point of
//   the variety (points off the variety are rejected).
// * p_locus_survey: seeded sampling confirming that rank 1 happens exactly
//   on the locus v = w = t_1 = ... = t_{m-1} = 0, (u,z) != (0,0).
// * socle_witness: the finite quotient by (Z_ij), its socle dimension, and
//   the witness elements D^{m-1} prod_t Y_{t,1} and D^{m-1} prod_t Y_{t,2}.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qma/compoly.hpp"

namespace qma {

// ---------------------------------------------------------------------------
// Presentation layout and relation families
// ---------------------------------------------------------------------------

/// Variable layout for T = k[Z_ij, D, Y_tr]: indices [0, n^2) hold Z
/// row-major, index n^2 holds D, and the remaining (n-1)(m-1) indices hold
/// Y_tr with t major and r minor.
struct CenterPresentation {
    int n = 0;
    int m = 0;
    std::vector<std::string> names;
    std::vector<ComPoly> relations;
    std::vector<std::string> relation_names;

    int variable_count() const { return n * n + 1 + (n - 1) * (m - 1); }
    int z_index(int i, int j) const { return (i - 1) * n + (j - 1); }
    int d_index() const { return n * n; }
    int y_index(int t, int r) const { return n * n + 1 + (t - 1) * (m - 1) + (r - 1); }
};

inline CenterPresentation center_presentation(int n, int m) {
    if (n < 1) throw std::invalid_argument("center_presentation: n must be at least 1");
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("center_presentation: order m must be odd and at least 3");
    CenterPresentation cp;
    cp.n = n;
    cp.m = m;
    const int nv = cp.variable_count();
    cp.names.resize(nv);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            cp.names[cp.z_index(i, j)] = "Z[" + std::to_string(i) + "," + std::to_string(j) + "]";
    cp.names[cp.d_index()] = "D";
    for (int t = 1; t <= n - 1; ++t)
        for (int r = 1; r <= m - 1; ++r)
            cp.names[cp.y_index(t, r)] = "Y[" + std::to_string(t) + "," + std::to_string(r) + "]";

    auto zvar = [&](int i, int j) { return ComPoly::variable(nv, cp.z_index(i, j)); };
    auto block_det = [&](int r0, int r1, int c0, int c1) {
        std::vector<std::vector<ComPoly>> blk;
        for (int i = r0; i <= r1; ++i) {
            std::vector<ComPoly> row;
            for (int j = c0; j <= c1; ++j) row.push_back(zvar(i, j));
            blk.push_back(row);
        }
        return compoly_determinant(blk);
    };

    ComPoly dpow = ComPoly::variable(nv, cp.d_index()).pow(m);
    cp.relations.push_back(dpow - block_det(1, n, 1, n));
    cp.relation_names.push_back("D^m - det(Z)");

    for (int t = 1; t <= n - 1; ++t) {
        ComPoly det_a = block_det(1, t, n - t + 1, n);
        ComPoly det_b = block_det(t + 1, n, 1, n - t);
        for (int i = 1; i <= m - 1; ++i) {
            for (int j = i; j <= m - 1; ++j) {
                ComPoly lhs = ComPoly::variable(nv, cp.y_index(t, i)) *
                              ComPoly::variable(nv, cp.y_index(t, j));
                ComPoly rhs;
                if (i + j < m)
                    rhs = ComPoly::variable(nv, cp.y_index(t, i + j)) * det_b;
                else if (i + j == m)
                    rhs = det_a * det_b;
                else
                    rhs = ComPoly::variable(nv, cp.y_index(t, i + j - m)) * det_a;
                cp.relations.push_back(lhs - rhs);
                cp.relation_names.push_back("Y[" + std::to_string(t) + "," + std::to_string(i) +
                                            "]*Y[" + std::to_string(t) + "," + std::to_string(j) +
                                            "]");
            }
        }
    }
    return cp;
}

/// Degree-lex on the Y-part with Y_11 > ... > Y_{n-1,m-1}; ties broken by
/// lex on (D, Z_11, ..., Z_nn).  A strict less-than, multiplicative and
/// total on the monomials of the layout above.
struct TwoTierOrder {
    int n = 0;
    int m = 0;

    bool operator()(const CMonomial& a, const CMonomial& b) const {
        const int zc = n * n;
        const int nv = zc + 1 + (n - 1) * (m - 1);
        long ya = 0, yb = 0;
        for (int i = zc + 1; i < nv; ++i) {
            ya += a[i];
            yb += b[i];
        }
        if (ya != yb) return ya < yb;
        for (int i = zc + 1; i < nv; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        if (a[zc] != b[zc]) return a[zc] < b[zc];
        for (int i = 0; i < zc; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// ---------------------------------------------------------------------------
// Groebner verification
// ---------------------------------------------------------------------------

/// Full remainder of f on division by gens under the given order.
inline ComPoly reduce_modulo(const ComPoly& f, const std::vector<ComPoly>& gens,
                             const MonomialOrder& less) {
    std::vector<std::pair<CMonomial, CyclotomicScalar>> lts;
    lts.reserve(gens.size());
    for (const ComPoly& g : gens) lts.push_back(leading_term(g, less));
    ComPoly work = f;
    ComPoly remainder = ComPoly::zero(f.variable_count());
    while (!work.is_zero()) {
        auto [lm, lc] = leading_term(work, less);
        bool hit = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (!cmonomial_divides(lts[k].first, lm)) continue;
            ComPoly mult = ComPoly::monomial(f.variable_count(), cmonomial_quotient(lm, lts[k].first),
                                             lc * lts[k].second.inverse());
            work = work - mult * gens[k];
            hit = true;
            break;
        }
        if (!hit) {
            ComPoly head = ComPoly::monomial(f.variable_count(), lm, lc);
            remainder = remainder + head;
            work = work - head;
        }
    }
    return remainder;
}

inline ComPoly s_polynomial(const ComPoly& f, const ComPoly& g, const MonomialOrder& less) {
    auto [fm, fc] = leading_term(f, less);
    auto [gm, gc] = leading_term(g, less);
    CMonomial lcm(fm.size());
    for (std::size_t i = 0; i < fm.size(); ++i) lcm[i] = std::max(fm[i], gm[i]);
    ComPoly left = ComPoly::monomial(f.variable_count(), cmonomial_quotient(lcm, fm), fc.inverse());
    ComPoly right = ComPoly::monomial(f.variable_count(), cmonomial_quotient(lcm, gm), gc.inverse());
    return left * f - right * g;
}

struct GroebnerReport {
    int n = 0;
    int m = 0;
    std::size_t relation_count = 0;
    std::size_t spoly_count = 0;
    bool leading_terms_match = false;
    bool all_spolys_reduce = false;
    std::vector<std::string> failures;

    bool ok() const { return leading_terms_match && all_spolys_reduce; }
};

/// Buchberger check: the relation set is a Groebner basis under the
/// two-tier order, with leading terms exactly D^m and the Y_ti Y_tj.
inline GroebnerReport groebner_verify(int n, int m) {
    CenterPresentation cp = center_presentation(n, m);
    TwoTierOrder ord{n, m};
    MonomialOrder less = ord;
    GroebnerReport report;
    report.n = n;
    report.m = m;
    report.relation_count = cp.relations.size();

    report.leading_terms_match = true;
    const int nv = cp.variable_count();
    {
        auto [lm, lc] = leading_term(cp.relations[0], less);
        CMonomial expect(nv, 0);
        expect[cp.d_index()] = m;
        if (lm != expect || !lc.is_one()) {
            report.leading_terms_match = false;
            report.failures.push_back("leading term of " + cp.relation_names[0]);
        }
    }
    std::size_t idx = 1;
    for (int t = 1; t <= n - 1; ++t) {
        for (int i = 1; i <= m - 1; ++i) {
            for (int j = i; j <= m - 1; ++j, ++idx) {
                auto [lm, lc] = leading_term(cp.relations[idx], less);
                CMonomial expect(nv, 0);
                expect[cp.y_index(t, i)] += 1;
                expect[cp.y_index(t, j)] += 1;
                if (lm != expect || !lc.is_one()) {
                    report.leading_terms_match = false;
                    report.failures.push_back("leading term of " + cp.relation_names[idx]);
                }
            }
        }
    }

    report.all_spolys_reduce = true;
    for (std::size_t a = 0; a < cp.relations.size(); ++a) {
        for (std::size_t b = a + 1; b < cp.relations.size(); ++b) {
            ++report.spoly_count;
            ComPoly s = s_polynomial(cp.relations[a], cp.relations[b], less);
            if (!reduce_modulo(s, cp.relations, less).is_zero()) {
                report.all_spolys_reduce = false;
                report.failures.push_back("S(" + cp.relation_names[a] + ", " + cp.relation_names[b] +
                                          ") does not reduce to zero");
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Counting normal monomials and the Hilbert degree
// ---------------------------------------------------------------------------

inline Integer binomial(long nn, long kk) {
    if (kk < 0 || nn < 0 || kk > nn) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(nn), static_cast<unsigned long>(kk));
    return r;
}

/// Number of degree-N monomials avoiding every leading term: D-exponent
/// at most m-1 and at most one Y factor per tier t.
inline Integer normal_monomial_count(int n, int m, long N) {
    if (N < 0) throw std::invalid_argument("normal_monomial_count: negative degree");
    if (n < 1 || m < 3 || m % 2 == 0)
        throw std::invalid_argument("normal_monomial_count: invalid (n, m)");
    const long zc = static_cast<long>(n) * n;
    Integer total = 0;
    for (long a = 0; a <= std::min<long>(m - 1, N); ++a) {
        for (long s = 0; s <= std::min<long>(n - 1, N - a); ++s) {
            Integer ways = binomial(n - 1, s) * ipow(m - 1, static_cast<unsigned long>(s));
            total += ways * binomial(N - a - s + zc - 1, zc - 1);
        }
    }
    return total;
}

/// Total number of Z-free normal monomials (finite: D^a times at most one
/// Y per tier); equals m^n.
inline Integer z_free_normal_count(int n, int m) {
    if (n < 1 || m < 3 || m % 2 == 0)
        throw std::invalid_argument("z_free_normal_count: invalid (n, m)");
    Integer total = 0;
    for (long a = 0; a <= m - 1; ++a)
        for (long s = 0; s <= n - 1; ++s)
            total += binomial(n - 1, s) * ipow(m - 1, static_cast<unsigned long>(s));
    return total;
}

/// Degree of the polynomial that normal_monomial_count(n, m, -) agrees
/// with for large N, obtained by exact finite differences on the window
/// N = m + n, ..., m + n + n^2.
inline int hilbert_degree(int n, int m) {
    const long n0 = m + n;
    const int points = n * n + 1;
    std::vector<Integer> row;
    for (int i = 0; i < points; ++i) row.push_back(normal_monomial_count(n, m, n0 + i));
    int degree = 0;
    while (true) {
        bool all_zero = true;
        for (const Integer& v : row)
            if (v != 0) all_zero = false;
        if (all_zero) return degree - 1;
        if (row.size() == 1)
            throw std::runtime_error("hilbert_degree: counts do not stabilize on the window");
        std::vector<Integer> next;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
        row = std::move(next);
        ++degree;
    }
}

// ---------------------------------------------------------------------------
// Jacobian ranks and the locus survey
// ---------------------------------------------------------------------------

/// Exact row-echelon rank over the cyclotomic coefficient field.
inline int cyclotomic_matrix_rank(std::vector<std::vector<CyclotomicScalar>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        CyclotomicScalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            CyclotomicScalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Jacobian matrix of the relation set evaluated at the point (layout as
/// in CenterPresentation): rows = relations, columns = variables.
inline std::vector<std::vector<CyclotomicScalar>> jacobian_matrix_at(
    const CenterPresentation& cp, const std::vector<CyclotomicScalar>& point) {
    if (static_cast<int>(point.size()) != cp.variable_count())
        throw std::invalid_argument("jacobian_matrix_at: point has wrong length");
    for (std::size_t k = 0; k < cp.relations.size(); ++k)
        if (!cp.relations[k].evaluate(point).is_zero())
            throw std::domain_error("jacobian_matrix_at: point does not satisfy relation " +
                                    cp.relation_names[k]);
    std::vector<std::vector<CyclotomicScalar>> jac;
    for (const ComPoly& rel : cp.relations) {
        std::vector<CyclotomicScalar> row;
        for (int v = 0; v < cp.variable_count(); ++v) row.push_back(rel.derivative(v).evaluate(point));
        jac.push_back(std::move(row));
    }
    return jac;
}

/// Exact Jacobian rank at a point of the variety; throws std::domain_error
/// if the point does not satisfy every relation.
inline int jacobian_rank_at(int n, int m, const std::vector<CyclotomicScalar>& point) {
    CenterPresentation cp = center_presentation(n, m);
    return cyclotomic_matrix_rank(jacobian_matrix_at(cp, point));
}

struct PLocusReport {
    int m = 0;
    int samples = 0;
    unsigned long long seed = 0;
    int claimed_rank1 = 0;
    bool claimed_all_rank1 = false;
    int generic_count = 0;
    int generic_min_rank = 0;
    bool generic_none_rank1 = false;
    bool rank1_points_in_vanishing_set = false;
    int origin_rank = -1;

    bool pass() const {
        return claimed_all_rank1 && generic_none_rank1 && rank1_points_in_vanishing_set &&
               origin_rank == 0;
    }
};

/// Seeded survey of Jacobian ranks for n = 2: points of the claimed locus
/// (v = w = t = 0, c^m = ab) must have rank exactly 1, generic points with
/// v, w nonzero must not, every observed rank-1 point must lie in
/// V(v, w, t_1, ..., t_{m-1}), and the origin has rank 0.
inline PLocusReport p_locus_survey(int m, int samples, unsigned long long seed) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("p_locus_survey: order m must be odd >= 3");
    if (samples < 1) throw std::invalid_argument("p_locus_survey: need at least one sample");
    const int n = 2;
    CenterPresentation cp = center_presentation(n, m);
    const int nv = cp.variable_count();
    const int iu = cp.z_index(1, 1), iv = cp.z_index(1, 2), iw = cp.z_index(2, 1),
              iz = cp.z_index(2, 2), id = cp.d_index();

    std::mt19937_64 rng(seed);
    auto small_int = [&](bool nonzero) {
        std::uniform_int_distribution<int> num(-9, 9);
        int v = num(rng);
        while (nonzero && v == 0) v = num(rng);
        return v;
    };
    auto rat = [&](bool nonzero) {
        std::uniform_int_distribution<int> den(1, 9);
        return CyclotomicScalar::from_rational(frac(small_int(nonzero), den(rng)));
    };

    PLocusReport report;
    report.m = m;
    report.samples = samples;
    report.seed = seed;

    bool in_vanishing = true;
    auto check_vanishing = [&](const std::vector<CyclotomicScalar>& pt, int rank) {
        if (rank != 1) return;
        if (!pt[iv].is_zero() || !pt[iw].is_zero()) in_vanishing = false;
        for (int r = 1; r <= m - 1; ++r)
            if (!pt[cp.y_index(1, r)].is_zero()) in_vanishing = false;
    };

    report.claimed_all_rank1 = true;
    for (int s = 0; s < samples; ++s) {
        std::vector<CyclotomicScalar> pt(nv, CyclotomicScalar::zero());
        switch (s % 3) {
            case 0: {  // a != 0, c free, b = c^m / a
                CyclotomicScalar a = rat(true), c = rat(false);
                pt[iu] = a;
                pt[id] = c;
                pt[iz] = c.pow(m) / a;
                break;
            }
            case 1: {  // a != 0, c = 0, b = 0
                pt[iu] = rat(true);
                break;
            }
            default: {  // a = 0, b != 0, c = 0
                pt[iz] = rat(true);
                break;
            }
        }
        int rank = cyclotomic_matrix_rank(jacobian_matrix_at(cp, pt));
        if (rank == 1) ++report.claimed_rank1;
        else report.claimed_all_rank1 = false;
        check_vanishing(pt, rank);
    }

    report.generic_none_rank1 = true;
    report.generic_min_rank = nv + 1;
    for (int s = 0; s < samples; ++s) {
        std::vector<CyclotomicScalar> pt(nv, CyclotomicScalar::zero());
        CyclotomicScalar u = rat(true), beta = rat(true), gamma = rat(true), d = rat(false);
        pt[iu] = u;
        pt[iv] = beta.pow(m);
        pt[iw] = gamma.pow(m);
        pt[id] = d;
        for (int r = 1; r <= m - 1; ++r) pt[cp.y_index(1, r)] = beta.pow(r) * gamma.pow(m - r);
        pt[iz] = (d.pow(m) + pt[iv] * pt[iw]) / u;
        int rank = cyclotomic_matrix_rank(jacobian_matrix_at(cp, pt));
        ++report.generic_count;
        report.generic_min_rank = std::min(report.generic_min_rank, rank);
        if (rank == 1) report.generic_none_rank1 = false;
        check_vanishing(pt, rank);
    }
    report.rank1_points_in_vanishing_set = in_vanishing;

    std::vector<CyclotomicScalar> origin(nv, CyclotomicScalar::zero());
    report.origin_rank = cyclotomic_matrix_rank(jacobian_matrix_at(cp, origin));
    return report;
}

// ---------------------------------------------------------------------------
// Socle of the finite quotient
// ---------------------------------------------------------------------------

struct SocleReport {
    int n = 0;
    int m = 0;
    Integer quotient_dim = 0;
    int socle_dim = 0;
    bool first_witness_in_socle = false;
    bool second_witness_in_socle = false;
    std::vector<std::string> socle_basis;
};

/// The finite local quotient A = T / (relations + all Z_ij) has basis
/// D^a prod_{t in S} Y_{t,r_t} with a < m and at most one Y per tier; its
/// socle (annihilator of the maximal ideal) is computed by exact linear
/// algebra, and the two witness elements D^{m-1} prod_t Y_{t,1} and
/// D^{m-1} prod_t Y_{t,2} are checked for membership.
inline SocleReport socle_witness(int n, int m) {
    if (n < 2) throw std::invalid_argument("socle_witness: need n >= 2");
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("socle_witness: order m must be odd and at least 3");
    const int tiers = n - 1;
    long dim = 1;
    for (int t = 0; t < tiers + 1; ++t) dim *= m;  // m choices for a, m per tier (absent or r)

    // Basis index: a + m * sum_t c_t m^{t-1}, with c_t = 0 for "no Y factor"
    // and c_t = r for a Y_{t,r} factor.
    auto decode = [&](long idx, long& a, std::vector<int>& c) {
        a = idx % m;
        idx /= m;
        c.assign(tiers, 0);
        for (int t = 0; t < tiers; ++t) {
            c[t] = static_cast<int>(idx % m);
            idx /= m;
        }
    };
    auto encode = [&](long a, const std::vector<int>& c) {
        long idx = 0;
        for (int t = tiers - 1; t >= 0; --t) idx = idx * m + c[t];
        return idx * m + a;
    };
    auto basis_name = [&](long idx) {
        long a;
        std::vector<int> c;
        decode(idx, a, c);
        std::string s;
        if (a > 0) s = a == 1 ? "D" : "D^" + std::to_string(a);
        for (int t = 0; t < tiers; ++t) {
            if (c[t] == 0) continue;
            if (!s.empty()) s += "*";
            s += "Y[" + std::to_string(t + 1) + "," + std::to_string(c[t]) + "]";
        }
        return s.empty() ? std::string("1") : s;
    };

    // Multiplication by each algebra generator of the maximal ideal, as a
    // matrix on the monomial basis.  D^m = det(Z) = 0 and same-tier Y
    // products vanish in the quotient; cross-tier products survive.
    std::vector<std::vector<std::pair<long, long>>> maps;  // list of (src, dst)
    {
        std::vector<std::pair<long, long>> dmap;
        for (long idx = 0; idx < dim; ++idx) {
            long a;
            std::vector<int> c;
            decode(idx, a, c);
            if (a + 1 < m) dmap.emplace_back(idx, encode(a + 1, c));
        }
        maps.push_back(std::move(dmap));
    }
    for (int t = 0; t < tiers; ++t) {
        for (int r = 1; r <= m - 1; ++r) {
            std::vector<std::pair<long, long>> ymap;
            for (long idx = 0; idx < dim; ++idx) {
                long a;
                std::vector<int> c;
                decode(idx, a, c);
                if (c[t] != 0) continue;
                std::vector<int> c2 = c;
                c2[t] = r;
                ymap.emplace_back(idx, encode(a, c2));
            }
            maps.push_back(std::move(ymap));
        }
    }

    // Stack all maps and compute the kernel over the rationals.
    const std::size_t rows_total = maps.size() * static_cast<std::size_t>(dim);
    std::vector<std::vector<Rational>> mat(rows_total, std::vector<Rational>(dim, Rational(0)));
    for (std::size_t g = 0; g < maps.size(); ++g)
        for (const auto& [src, dst] : maps[g]) mat[g * dim + dst][src] = Rational(1);

    // Row echelon; free columns span the kernel.
    std::vector<int> pivot_of_col(dim, -1);
    std::size_t r = 0;
    for (long c = 0; c < dim && r < rows_total; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_total && mat[pivot][c] == 0) ++pivot;
        if (pivot == rows_total) continue;
        std::swap(mat[pivot], mat[r]);
        Rational inv = Rational(1) / mat[r][c];
        for (long j = c; j < dim; ++j) mat[r][j] *= inv;
        for (std::size_t i = 0; i < rows_total; ++i) {
            if (i == r || mat[i][c] == 0) continue;
            Rational f = mat[i][c];
            for (long j = c; j < dim; ++j) mat[i][j] -= f * mat[r][j];
        }
        pivot_of_col[c] = static_cast<int>(r);
        ++r;
    }

    SocleReport report;
    report.n = n;
    report.m = m;
    report.quotient_dim = dim;
    for (long c = 0; c < dim; ++c) {
        if (pivot_of_col[c] != -1) continue;
        ++report.socle_dim;
        // Kernel basis vector: e_c minus the pivot-column entries of column c.
        std::string name;
        bool pure = true;
        for (long j = 0; j < dim; ++j) {
            if (j == c) continue;
            if (pivot_of_col[j] != -1 && mat[pivot_of_col[j]][c] != 0) pure = false;
        }
        name = pure ? basis_name(c) : ("combination at column " + std::to_string(c));
        report.socle_basis.push_back(name);
    }

    auto witness_in_socle = [&](int rr) {
        std::vector<int> c(tiers, rr);
        long idx = encode(m - 1, c);
        // The witness is a basis monomial: it lies in the socle exactly when
        // every generator kills it, i.e. its column is absent from all maps.
        for (const auto& mp : maps)
            for (const auto& [src, dst] : mp)
                if (src == idx) return false;
        return true;
    };
    report.first_witness_in_socle = witness_in_socle(1);
    report.second_witness_in_socle = witness_in_socle(2);
    return report;
}

}  // namespace qma
