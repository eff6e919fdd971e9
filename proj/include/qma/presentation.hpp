#pragma once
// Presentations of iterated-Ore-extension algebras with a chosen PBW basis.
//
// A presentation has generators x_0 < x_1 < ... < x_{g-1} and, for every
// out-of-order pair a > b, a straightening rule
//
//     x_a x_b  =  swap * x_b x_a  +  sum_t  c_t * x_{u_t} x_{v_t}
//
// whose correction words are ordered (u_t <= v_t) and lie strictly between
// b and a (b < u_t, v_t < a).  Repeatedly applying such rules rewrites any
// word into a combination of ascending words; ascending words are recorded
// as exponent vectors, the PBW monomials x_0^{e_0} ... x_{g-1}^{e_{g-1}}.
//
// Instances cover multiparameter quantum matrix algebras O_{lambda,p}(M_n),
// their single-parameter specialization O_q(M_n), straightening-closed
// subalgebras of these, and quasipolynomial (skew-commuting) algebras.

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qma/coefficient.hpp"

namespace qma {

/// PBW monomial as an exponent vector (one slot per generator).
using Monomial = std::vector<int>;

/// Unreduced product of generators, listed by index left to right.
using Word = std::vector<int>;

struct GeneratorInfo {
    std::string name;
    int row = 0;  // first grading component (matrix row for O(M_n))
    int col = 0;  // second grading component (matrix column; 0 when unused)
};

struct StraighteningRule {
    Coefficient swap;
    std::vector<std::pair<std::array<int, 2>, Coefficient>> corrections;
};

/// Extra structure carried by a full quantum matrix algebra presentation.
struct QMAStructure {
    int n = 0;
    Coefficient lambda;
    // p[i][j] (0-based) with p[i][i] = 1 and p[i][j] p[j][i] = 1.
    std::vector<std::vector<Coefficient>> p;
};

/// Extra structure carried by a quasipolynomial algebra presentation.
struct QuasiStructure {
    Coefficient q;
    // x_a x_b = q^{c[a][b]} x_b x_a for a > b.
    std::vector<std::vector<long>> c;
};

class Presentation {
  public:
    using ElementMap = std::map<Monomial, Coefficient>;

    // ---- factories -------------------------------------------------------

    /// O_{lambda,p}(M_n): generators x_ij in row-major order with
    ///   x_lm x_ij = p_li p_jm x_ij x_lm + (lambda - 1) p_li x_im x_lj   (l>i, m>j)
    ///   x_lm x_ij = lambda p_li p_jm x_ij x_lm                          (l>i, m<=j)
    ///   x_im x_ij = p_jm x_ij x_im                                      (m>j)
    /// Requires p square of size n, p_ii = 1, p_ij p_ji = 1, and
    /// lambda^2 != 1.
    static std::shared_ptr<const Presentation> quantum_matrix(int n, const Coefficient& lambda,
                                                              const std::vector<std::vector<Coefficient>>& p) {
        if (n < 1) throw std::invalid_argument("quantum_matrix: n must be >= 1");
        if (!lambda.is_unit()) throw std::invalid_argument("quantum_matrix: lambda must be a unit");
        if ((lambda * lambda).is_one())
            throw std::invalid_argument("quantum_matrix: lambda^2 = 1 is excluded");
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("quantum_matrix: p must be n x n");
        const Coefficient one = lambda.same_mode_rational(1);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(p[i].size()) != n)
                throw std::invalid_argument("quantum_matrix: p must be n x n");
            if (p[i][i] != one) throw std::invalid_argument("quantum_matrix: p_ii must be 1");
            for (int j = 0; j < n; ++j)
                if (!(p[i][j] * p[j][i]).is_one())
                    throw std::invalid_argument("quantum_matrix: p_ij p_ji must be 1");
        }

        auto pres = std::shared_ptr<Presentation>(new Presentation());
        pres->kind_ = "quantum_matrix";
        pres->unit_ = one;
        pres->qma_ = QMAStructure{n, lambda, p};
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                pres->gens_.push_back({"x_" + std::to_string(i) + std::to_string(j), i, j});
        const int g = n * n;
        pres->rules_.assign(static_cast<std::size_t>(g) * g, StraighteningRule{});
        for (int a = 0; a < g; ++a) {
            const int l = a / n + 1, m = a % n + 1;
            for (int b = 0; b < a; ++b) {
                const int i = b / n + 1, j = b % n + 1;
                StraighteningRule r;
                if (l > i && m > j) {
                    r.swap = p[l - 1][i - 1] * p[j - 1][m - 1];
                    Coefficient corr = (lambda - one) * p[l - 1][i - 1];
                    if (!corr.is_zero())
                        r.corrections.push_back({{(i - 1) * n + (m - 1), (l - 1) * n + (j - 1)}, corr});
                } else if (l > i) {  // m <= j
                    r.swap = lambda * p[l - 1][i - 1] * p[j - 1][m - 1];
                } else {  // l == i, m > j
                    r.swap = p[j - 1][m - 1];
                }
                pres->rules_[static_cast<std::size_t>(a) * g + b] = std::move(r);
            }
        }
        pres->label_ = "O_{lambda,p}(M_" + std::to_string(n) + ")";
        pres->validate();
        return pres;
    }

    /// Single-parameter O_q(M_n): the quantum matrix algebra with
    /// p_ij = q for i > j (so p_ij = q^{-1} for i < j) and lambda = q^{-2}.
    static std::shared_ptr<const Presentation> quantum_matrix_single(int n, const Coefficient& q) {
        if (!q.is_unit()) throw std::invalid_argument("quantum_matrix_single: q must be a unit");
        const Coefficient one = q.same_mode_rational(1);
        std::vector<std::vector<Coefficient>> p(n, std::vector<Coefficient>(n, one));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i > j)
                    p[i][j] = q;
                else if (i < j)
                    p[i][j] = q.inverse();
        auto pres = quantum_matrix(n, q.pow(-2), p);
        const_cast<Presentation&>(*pres).label_ = "O_q(M_" + std::to_string(n) + ")";
        const_cast<Presentation&>(*pres).single_q_ = q;
        return pres;
    }

    /// Generic multiparameter O_{lambda,p}(M_n) over Laurent polynomials in
    /// lambda and p_ij for i > j (with p_ij = p_ji^{-1} for i < j).
    static std::shared_ptr<const Presentation> quantum_matrix_generic(int n) {
        Coefficient lambda{LaurentScalar::parameter("lambda")};
        std::vector<std::vector<Coefficient>> p(
            n, std::vector<Coefficient>(n, Coefficient(LaurentScalar::one())));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const int hi = std::max(i, j) + 1, lo = std::min(i, j) + 1;
                LaurentScalar base =
                    LaurentScalar::parameter("p_" + std::to_string(hi) + std::to_string(lo));
                p[i][j] = Coefficient(i > j ? base : base.inverse());
            }
        return quantum_matrix(n, lambda, p);
    }

    /// Generic single-parameter O_q(M_n) over Laurent polynomials in q.
    static std::shared_ptr<const Presentation> quantum_matrix_generic_single(int n) {
        return quantum_matrix_single(n, Coefficient(LaurentScalar::parameter("q")));
    }

    /// The subalgebra generated by the given parent generators, which is
    /// again presented by straightening rules provided every correction term
    /// stays inside the subset; otherwise throws std::domain_error naming a
    /// violating pair.
    static std::shared_ptr<const Presentation> subalgebra(std::shared_ptr<const Presentation> parent,
                                                          std::vector<int> keep) {
        if (!parent) throw std::invalid_argument("subalgebra: null parent");
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        std::map<int, int> local;  // parent index -> local index
        for (std::size_t k = 0; k < keep.size(); ++k) {
            if (keep[k] < 0 || keep[k] >= parent->size())
                throw std::invalid_argument("subalgebra: generator index out of range");
            local[keep[k]] = static_cast<int>(k);
        }
        auto pres = std::shared_ptr<Presentation>(new Presentation());
        pres->kind_ = "subalgebra";
        pres->unit_ = parent->unit_;
        pres->parent_ = parent;
        pres->parent_index_ = keep;
        for (int pk : keep) pres->gens_.push_back(parent->gen(pk));
        const int g = static_cast<int>(keep.size());
        pres->rules_.assign(static_cast<std::size_t>(g) * g, StraighteningRule{});
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < a; ++b) {
                const StraighteningRule& pr = parent->rule(keep[a], keep[b]);
                StraighteningRule r;
                r.swap = pr.swap;
                for (const auto& [w, c] : pr.corrections) {
                    auto u = local.find(w[0]), v = local.find(w[1]);
                    if (u == local.end() || v == local.end())
                        throw std::domain_error(
                            "subalgebra: not closed under straightening: " + parent->gen(keep[a]).name +
                            " * " + parent->gen(keep[b]).name + " has a correction term using " +
                            parent->gen(u == local.end() ? w[0] : w[1]).name);
                    r.corrections.push_back({{u->second, v->second}, c});
                }
                pres->rules_[static_cast<std::size_t>(a) * g + b] = std::move(r);
            }
        pres->label_ = "subalgebra of " + parent->label_;
        pres->validate();
        return pres;
    }

    /// Quasipolynomial algebra on g generators, x_a x_b = q^{c[a][b]} x_b x_a
    /// for a > b (0-based indices into c).
    static std::shared_ptr<const Presentation> quasipolynomial(const Coefficient& q,
                                                               const std::vector<std::vector<long>>& c) {
        if (!q.is_unit()) throw std::invalid_argument("quasipolynomial: q must be a unit");
        const int g = static_cast<int>(c.size());
        for (const auto& row : c)
            if (static_cast<int>(row.size()) != g)
                throw std::invalid_argument("quasipolynomial: exponent matrix must be square");
        auto pres = std::shared_ptr<Presentation>(new Presentation());
        pres->kind_ = "quasipolynomial";
        pres->unit_ = q.same_mode_rational(1);
        pres->quasi_ = QuasiStructure{q, c};
        for (int k = 0; k < g; ++k) pres->gens_.push_back({"x_" + std::to_string(k + 1), k + 1, 0});
        pres->rules_.assign(static_cast<std::size_t>(g) * g, StraighteningRule{});
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < a; ++b)
                pres->rules_[static_cast<std::size_t>(a) * g + b].swap = q.pow(c[a][b]);
        pres->label_ = "quasipolynomial algebra on " + std::to_string(g) + " generators";
        pres->validate();
        return pres;
    }

    // ---- basic accessors -------------------------------------------------

    int size() const { return static_cast<int>(gens_.size()); }
    const GeneratorInfo& gen(int k) const { return gens_.at(static_cast<std::size_t>(k)); }
    const std::string& kind() const { return kind_; }
    const std::string& label() const { return label_; }
    const Coefficient& unit() const { return unit_; }
    Coefficient rational_coeff(const Rational& r) const { return unit_.same_mode_rational(r); }
    CoefficientMode mode() const { return unit_.mode(); }

    int index_of(const std::string& name) const {
        for (int k = 0; k < size(); ++k)
            if (gens_[static_cast<std::size_t>(k)].name == name) return k;
        return -1;
    }

    bool has_qma() const { return qma_.has_value(); }
    const QMAStructure& qma() const {
        if (!qma_) throw std::logic_error("presentation is not a full quantum matrix algebra");
        return *qma_;
    }

    /// Generator index of x_ij (1-based matrix position) in a full quantum
    /// matrix algebra presentation.
    int qma_index(int i, int j) const {
        const auto& s = qma();
        if (i < 1 || i > s.n || j < 1 || j > s.n)
            throw std::out_of_range("qma_index: position out of range");
        return (i - 1) * s.n + (j - 1);
    }

    /// The single parameter q when the presentation was built as O_q(M_n).
    const Coefficient& single_parameter() const {
        if (!single_q_) throw std::logic_error("presentation has no single parameter q");
        return *single_q_;
    }
    bool has_single_parameter() const { return single_q_.has_value(); }

    bool has_quasi() const { return quasi_.has_value(); }
    const QuasiStructure& quasi() const {
        if (!quasi_) throw std::logic_error("presentation is not quasipolynomial");
        return *quasi_;
    }

    const std::shared_ptr<const Presentation>& parent() const { return parent_; }
    const std::vector<int>& parent_index() const { return parent_index_; }

    /// Straightening rule for x_a x_b, a > b.
    const StraighteningRule& rule(int a, int b) const {
        if (a <= b || b < 0 || a >= size()) throw std::out_of_range("rule: need size > a > b >= 0");
        return rules_[static_cast<std::size_t>(a) * size() + b];
    }

    Monomial zero_monomial() const { return Monomial(static_cast<std::size_t>(size()), 0); }

    Monomial generator_monomial(int k) const {
        Monomial m = zero_monomial();
        m.at(static_cast<std::size_t>(k)) = 1;
        return m;
    }

    static long total_degree(const Monomial& m) {
        long d = 0;
        for (int e : m) d += e;
        return d;
    }

    /// Grading of a PBW monomial: componentwise counts of generator rows and
    /// of generator columns (the matrix bidegree for O(M_n) presentations).
    std::pair<std::vector<long>, std::vector<long>> bidegree(const Monomial& m) const {
        int mr = 0, mc = 0;
        for (const auto& gi : gens_) {
            mr = std::max(mr, gi.row);
            mc = std::max(mc, gi.col);
        }
        std::vector<long> rows(static_cast<std::size_t>(mr), 0), cols(static_cast<std::size_t>(mc), 0);
        for (int k = 0; k < size(); ++k) {
            if (m[static_cast<std::size_t>(k)] == 0) continue;
            const auto& gi = gens_[static_cast<std::size_t>(k)];
            if (gi.row > 0) rows[static_cast<std::size_t>(gi.row - 1)] += m[static_cast<std::size_t>(k)];
            if (gi.col > 0) cols[static_cast<std::size_t>(gi.col - 1)] += m[static_cast<std::size_t>(k)];
        }
        return {std::move(rows), std::move(cols)};
    }

    static Word monomial_to_word(const Monomial& m) {
        Word w;
        for (std::size_t k = 0; k < m.size(); ++k)
            for (int t = 0; t < m[k]; ++t) w.push_back(static_cast<int>(k));
        return w;
    }

    std::string monomial_string(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < size(); ++k) {
            const int e = m[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            if (!first) os << " ";
            os << gens_[static_cast<std::size_t>(k)].name;
            if (e != 1) os << "^" << e;
            first = false;
        }
        if (first) os << "1";
        return os.str();
    }

    // ---- normal-form machinery ------------------------------------------

    /// Normal form of (ascending monomial m) * x_j, memoized.
    const ElementMap& mono_times_gen(const Monomial& m, int j) const {
        if (j < 0 || j >= size()) throw std::out_of_range("mono_times_gen: generator out of range");
        std::lock_guard<std::recursive_mutex> lock(memo_mutex_);
        auto key = std::make_pair(m, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        ElementMap result;
        int a = -1;
        for (int k = size() - 1; k >= 0; --k)
            if (m[static_cast<std::size_t>(k)] > 0) {
                a = k;
                break;
            }
        if (a <= j) {
            Monomial r = m;
            r[static_cast<std::size_t>(j)] += 1;
            result.emplace(std::move(r), unit_);
        } else {
            Monomial mp = m;
            mp[static_cast<std::size_t>(a)] -= 1;
            const StraighteningRule& r = rule(a, j);
            accumulate(result, times_gen(mono_times_gen(mp, j), a), r.swap);
            for (const auto& [w, c] : r.corrections)
                accumulate(result, times_gen(mono_times_gen(mp, w[0]), w[1]), c);
        }
        auto pos = memo_.emplace(std::move(key), std::move(result)).first;
        return pos->second;
    }

    /// (element) * x_j, termwise.
    ElementMap times_gen(const ElementMap& e, int j) const {
        ElementMap result;
        for (const auto& [m, c] : e) accumulate(result, mono_times_gen(m, j), c);
        return result;
    }

    /// Product of two elements in normal form.
    ///
    /// Term pairs whose crossing generator pairs all straighten without
    /// correction terms multiply directly: every letter of the right factor
    /// crosses each higher-indexed letter of the left factor exactly once,
    /// so the product is a single monomial scaled by the product of swap
    /// factors.  Remaining pairs go through the memoized letter fold.
    ElementMap multiply(const ElementMap& lhs, const ElementMap& rhs) const {
        ElementMap result;
        for (const auto& [mb, cb] : rhs) {
            Word wb;
            bool wb_ready = false;
            for (const auto& [ma, ca] : lhs) {
                bool pure_swaps = true;
                Coefficient scale = unit_;
                for (int l = 1; l < size() && pure_swaps; ++l) {
                    if (ma[static_cast<std::size_t>(l)] == 0) continue;
                    for (int k = 0; k < l; ++k) {
                        if (mb[static_cast<std::size_t>(k)] == 0) continue;
                        const StraighteningRule& r = rules_[static_cast<std::size_t>(l) * size() + k];
                        if (!r.corrections.empty()) {
                            pure_swaps = false;
                            break;
                        }
                        scale = scale * r.swap.pow(static_cast<long>(ma[static_cast<std::size_t>(l)]) *
                                                   mb[static_cast<std::size_t>(k)]);
                    }
                }
                if (pure_swaps) {
                    Monomial sum = ma;
                    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += mb[i];
                    add_term(result, sum, ca * cb * scale);
                    continue;
                }
                if (!wb_ready) {
                    wb = monomial_to_word(mb);
                    wb_ready = true;
                }
                ElementMap acc{{ma, ca * cb}};
                for (int letter : wb) acc = times_gen(acc, letter);
                for (const auto& [m, c] : acc) add_term(result, m, c);
            }
        }
        return result;
    }

    /// Normal form of an arbitrary word, computed through the memoized
    /// generator-multiplication path.
    ElementMap normalize_word(const Word& w) const {
        ElementMap acc{{zero_monomial(), unit_}};
        for (int letter : w) acc = times_gen(acc, letter);
        return acc;
    }

    /// Normal form of an arbitrary word by direct rewriting: repeatedly pick
    /// an out-of-order adjacent pair and apply its straightening rule.  With
    /// rng == nullptr the site is chosen deterministically (first inversion
    /// of the lexicographically largest unfinished word); otherwise the site
    /// is chosen uniformly at random.  Any choice strategy must produce the
    /// same answer, which makes this an independent cross-check of
    /// normalize_word.
    ElementMap rewrite_word(const Word& w0, std::mt19937* rng = nullptr) const {
        for (int letter : w0)
            if (letter < 0 || letter >= size()) throw std::out_of_range("rewrite_word: bad letter");
        std::map<Word, Coefficient> active{{w0, unit_}};
        for (;;) {
            // Locate the rewrite site.
            bool found = false;
            Word w;
            std::size_t pos = 0;
            if (rng == nullptr) {
                for (auto it = active.rbegin(); it != active.rend() && !found; ++it)
                    for (std::size_t k = 0; k + 1 < it->first.size(); ++k)
                        if (it->first[k] > it->first[k + 1]) {
                            w = it->first;
                            pos = k;
                            found = true;
                            break;
                        }
            } else {
                std::vector<std::pair<Word, std::size_t>> sites;
                for (const auto& [cand, c] : active)
                    for (std::size_t k = 0; k + 1 < cand.size(); ++k)
                        if (cand[k] > cand[k + 1]) sites.emplace_back(cand, k);
                if (!sites.empty()) {
                    auto& s = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(*rng)];
                    w = std::move(s.first);
                    pos = s.second;
                    found = true;
                }
            }
            if (!found) break;

            const Coefficient c = active.at(w);
            active.erase(w);
            const StraighteningRule& r = rule(w[pos], w[pos + 1]);
            Word sw = w;
            std::swap(sw[pos], sw[pos + 1]);
            add_word(active, sw, c * r.swap);
            for (const auto& [cw, cc] : r.corrections) {
                Word t = w;
                t[pos] = cw[0];
                t[pos + 1] = cw[1];
                add_word(active, t, c * cc);
            }
        }
        ElementMap result;
        for (const auto& [w, c] : active) {
            Monomial m = zero_monomial();
            for (int letter : w) m[static_cast<std::size_t>(letter)] += 1;
            add_term(result, m, c);
        }
        return result;
    }

    /// Accumulate src scaled by the given coefficient into dst.
    static void accumulate(ElementMap& dst, const ElementMap& src, const Coefficient& scale) {
        if (scale.is_zero()) return;
        for (const auto& [m, c] : src) add_term(dst, m, scale * c);
    }

    static void add_term(ElementMap& dst, const Monomial& m, const Coefficient& c) {
        if (c.is_zero()) return;
        auto it = dst.find(m);
        if (it == dst.end()) {
            dst.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) dst.erase(it);
        }
    }

  private:
    Presentation() = default;

    std::vector<GeneratorInfo> gens_;
    std::vector<StraighteningRule> rules_;  // index a * size() + b for a > b
    Coefficient unit_;
    std::string kind_;
    std::string label_;
    std::optional<QMAStructure> qma_;
    std::optional<QuasiStructure> quasi_;
    std::optional<Coefficient> single_q_;
    std::shared_ptr<const Presentation> parent_;
    std::vector<int> parent_index_;

    mutable std::map<std::pair<Monomial, int>, ElementMap> memo_;
    mutable std::recursive_mutex memo_mutex_;

    static void add_word(std::map<Word, Coefficient>& dst, const Word& w, const Coefficient& c) {
        if (c.is_zero()) return;
        auto it = dst.find(w);
        if (it == dst.end()) {
            dst.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) dst.erase(it);
        }
    }

    /// Structural sanity of the rule table (unit swap coefficients; ordered
    /// correction words strictly between the rewritten pair).
    void validate() const {
        const int g = size();
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < a; ++b) {
                const StraighteningRule& r = rule(a, b);
                if (!r.swap.is_unit())
                    throw std::logic_error("presentation: swap coefficient must be a unit");
                for (const auto& [w, c] : r.corrections) {
                    if (c.is_zero()) throw std::logic_error("presentation: zero correction stored");
                    if (!(b < w[0] && w[0] <= w[1] && w[1] < a))
                        throw std::logic_error("presentation: correction word out of bounds");
                }
            }
    }
};

using PresentationPtr = std::shared_ptr<const Presentation>;

}  // namespace qma
