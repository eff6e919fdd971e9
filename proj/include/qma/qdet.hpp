#pragma once
// Quantum determinants and quantum minors of O_{lambda,p}(M_n).
//
// The quantum determinant is the Leibniz sum over permutations
//
//     D = sum_pi ( prod_{a<b, pi(a)>pi(b)} -p_{pi(a),pi(b)} ) x_{1,pi(1)} ... x_{n,pi(n)} ,
//
// with one sign-and-parameter factor per inversion of pi, indexed by the
// inverted column labels.  A quantum minor D(I, J) is the same sum over
// bijections I -> J, keeping the ambient parameter labels; since the row
// indices are taken in ascending order, every summand is already a PBW
// normal monomial.  In the single-parameter algebra each inversion factor
// becomes -q, recovering the classical (-q)^{l(pi)} form.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qma/element.hpp"

namespace qma {

/// Quantum minor D(I, J) for ascending 1-based row set I and column set J.
inline AlgebraElement quantum_minor(const PresentationPtr& pres, const std::vector<int>& rows,
                                    const std::vector<int>& cols) {
    const QMAStructure& s = pres->qma();
    if (rows.size() != cols.size())
        throw std::invalid_argument("quantum_minor: row and column sets must have equal size");
    auto check = [&](const std::vector<int>& v, const char* what) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] < 1 || v[k] > s.n) throw std::invalid_argument(std::string("quantum_minor: ") + what + " out of range");
            if (k > 0 && v[k] <= v[k - 1])
                throw std::invalid_argument(std::string("quantum_minor: ") + what + " must be strictly ascending");
        }
    };
    check(rows, "row");
    check(cols, "column");

    AlgebraElement result = AlgebraElement::zero(pres);
    if (rows.empty()) return AlgebraElement::one(pres);

    Presentation::ElementMap terms;
    std::vector<int> sigma = cols;  // ascending start for next_permutation
    do {
        Coefficient coeff = pres->unit();
        for (std::size_t a = 0; a < sigma.size(); ++a)
            for (std::size_t b = a + 1; b < sigma.size(); ++b)
                if (sigma[a] > sigma[b])
                    coeff = coeff * (-s.p[static_cast<std::size_t>(sigma[a]) - 1]
                                         [static_cast<std::size_t>(sigma[b]) - 1]);
        Monomial m = pres->zero_monomial();
        for (std::size_t a = 0; a < rows.size(); ++a)
            m[static_cast<std::size_t>(pres->qma_index(rows[a], sigma[a]))] += 1;
        Presentation::add_term(terms, m, coeff);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return AlgebraElement::from_terms(pres, std::move(terms));
}

/// The quantum determinant D = D({1..n}, {1..n}).
inline AlgebraElement quantum_determinant(const PresentationPtr& pres) {
    const int n = pres->qma().n;
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return quantum_minor(pres, all, all);
}

/// Complementary minor A(i, j) = D({1..n} \ {i}, {1..n} \ {j}).
inline AlgebraElement complement_minor(const PresentationPtr& pres, int i, int j) {
    const int n = pres->qma().n;
    std::vector<int> rows, cols;
    for (int k = 1; k <= n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
    }
    if (static_cast<int>(rows.size()) != n - 1 || static_cast<int>(cols.size()) != n - 1)
        throw std::invalid_argument("complement_minor: indices out of range");
    return quantum_minor(pres, rows, cols);
}

/// Antidiagonal minor D(t) = D({1..t}, {n-t+1..n}).
inline AlgebraElement antidiagonal_minor(const PresentationPtr& pres, int t) {
    const int n = pres->qma().n;
    if (t < 0 || t > n) throw std::invalid_argument("antidiagonal_minor: t out of range");
    std::vector<int> rows, cols;
    for (int k = 1; k <= t; ++k) {
        rows.push_back(k);
        cols.push_back(n - t + k);
    }
    return quantum_minor(pres, rows, cols);
}

/// Transposed antidiagonal minor D({n-t+1..n}, {1..t}), the image of D(t)
/// under the transpose map.
inline AlgebraElement antidiagonal_minor_transposed(const PresentationPtr& pres, int t) {
    const int n = pres->qma().n;
    if (t < 0 || t > n) throw std::invalid_argument("antidiagonal_minor_transposed: t out of range");
    std::vector<int> rows, cols;
    for (int k = 1; k <= t; ++k) {
        rows.push_back(n - t + k);
        cols.push_back(k);
    }
    return quantum_minor(pres, rows, cols);
}

/// Predicted normality scalar: D x_ij = gamma_ij x_ij D with
/// gamma_ij = lambda^{j-i} prod_l p_{jl} p_{li}.
inline Coefficient determinant_normality_scalar(const PresentationPtr& pres, int i, int j) {
    const QMAStructure& s = pres->qma();
    if (i < 1 || i > s.n || j < 1 || j > s.n)
        throw std::invalid_argument("determinant_normality_scalar: position out of range");
    Coefficient gamma = s.lambda.pow(j - i);
    for (int l = 1; l <= s.n; ++l)
        gamma = gamma * s.p[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(l) - 1] *
                s.p[static_cast<std::size_t>(l) - 1][static_cast<std::size_t>(i) - 1];
    return gamma;
}

/// Single-parameter Laplace expansion along row i:
/// sum_j (-q)^{j-i} x_ij A(i,j); equals D in O_q(M_n).
inline AlgebraElement laplace_row_expansion(const PresentationPtr& pres, int i) {
    const Coefficient q = pres->single_parameter();
    const int n = pres->qma().n;
    if (i < 1 || i > n) throw std::invalid_argument("laplace_row_expansion: row out of range");
    AlgebraElement sum = AlgebraElement::zero(pres);
    for (int j = 1; j <= n; ++j) {
        Coefficient c = (-q).pow(j - i);
        sum = sum + (AlgebraElement::generator(pres, pres->qma_index(i, j)) * complement_minor(pres, i, j))
                        .scaled(c);
    }
    return sum;
}

/// Single-parameter Laplace expansion along column j:
/// sum_i (-q)^{i-j} x_ij A(i,j); equals D in O_q(M_n).
inline AlgebraElement laplace_column_expansion(const PresentationPtr& pres, int j) {
    const Coefficient q = pres->single_parameter();
    const int n = pres->qma().n;
    if (j < 1 || j > n) throw std::invalid_argument("laplace_column_expansion: column out of range");
    AlgebraElement sum = AlgebraElement::zero(pres);
    for (int i = 1; i <= n; ++i) {
        Coefficient c = (-q).pow(i - j);
        sum = sum + (AlgebraElement::generator(pres, pres->qma_index(i, j)) * complement_minor(pres, i, j))
                        .scaled(c);
    }
    return sum;
}

}  // namespace qma
