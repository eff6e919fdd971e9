#pragma once

// File-format layer for the command-line tools: algebra spec files and
// morphism files, both JSON.
//
// Algebra spec:
//   { "rows": r, "cols": c, "mode": "generic" | "cyclotomic",
//     "level": L, "lambda_exp": k, "p_exps": [[k_ij]],
//     "subset": [[i,j], ...] }          // subset optional, 1-based
//
// In cyclotomic mode the parameters are lambda = zeta_L^k and
// p_ij = zeta_L^{k_ij}.  In generic mode the exponents, when given, apply to
// a symbolic q (lambda = q^k, p_ij = q^{k_ij}); with no exponent fields the
// presentation is fully generic in lambda and the p_ij.  The single-parameter
// pattern (p_ij = q for i > j with lambda = q^-2) is detected and produces a
// presentation that knows its q.  Rectangular grids (rows != cols) and
// subsets are realized as straightening-closed subalgebras of the
// max(rows, cols) square algebra.
//
// Morphism file:
//   { "algebra": <spec object or path string>, "images": { "x11": "<expr>" } }
//
// Image keys name generators as x11 / x_11; generators without an image map
// to themselves.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qma/expr.hpp"

namespace qma {

/// Malformed input file or command usage; the CLI reports these with exit 2.
class SpecError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct LoadedAlgebra {
    PresentationPtr pres;
    std::string digest;  // canonical one-line description of the input
};

namespace detail {

inline long json_int(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) throw SpecError("algebra spec: missing \"" + key + "\"");
    if (!j.at(key).is_number_integer())
        throw SpecError("algebra spec: \"" + key + "\" must be an integer");
    return j.at(key).get<long>();
}

inline void check_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                       const std::string& what) {
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw SpecError(what + ": unknown key \"" + key + "\"");
}

inline std::vector<std::vector<long>> json_exponent_matrix(const nlohmann::json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw SpecError("algebra spec: \"p_exps\" must be a " + std::to_string(n) + "x" +
                        std::to_string(n) + " integer matrix");
    std::vector<std::vector<long>> out;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw SpecError("algebra spec: \"p_exps\" must be a " + std::to_string(n) + "x" +
                            std::to_string(n) + " integer matrix");
        std::vector<long> r;
        for (const auto& entry : row) {
            if (!entry.is_number_integer())
                throw SpecError("algebra spec: \"p_exps\" entries must be integers");
            r.push_back(entry.get<long>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// p must be multiplicatively antisymmetric: exponents satisfy
/// k_ii = 0 and k_ij + k_ji = 0, modulo `level` when positive.
inline void check_antisymmetric(const std::vector<std::vector<long>>& exps, long level) {
    auto reduce = [level](long k) { return level > 0 ? ((k % level) + level) % level : k; };
    const int n = static_cast<int>(exps.size());
    for (int a = 0; a < n; ++a) {
        if (reduce(exps[a][a]) != 0)
            throw SpecError("algebra spec: p_exps diagonal must vanish (p_ii = 1)");
        for (int b = 0; b < a; ++b)
            if (reduce(exps[a][b] + exps[b][a]) != 0)
                throw SpecError("algebra spec: p_exps must be antisymmetric (p_ij p_ji = 1), "
                                "violated at (" +
                                std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
    }
}

}  // namespace detail

inline LoadedAlgebra algebra_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SpecError("algebra spec: expected a JSON object");
    detail::check_keys(j, {"rows", "cols", "mode", "level", "lambda_exp", "p_exps", "subset"},
                       "algebra spec");
    const long rows = detail::json_int(j, "rows");
    const long cols = j.contains("cols") ? detail::json_int(j, "cols") : rows;
    if (rows < 1 || cols < 1) throw SpecError("algebra spec: rows and cols must be >= 1");
    if (rows > 9 || cols > 9) throw SpecError("algebra spec: grids beyond 9x9 are not supported");
    if (!j.contains("mode") || !j.at("mode").is_string())
        throw SpecError("algebra spec: missing \"mode\" (\"generic\" or \"cyclotomic\")");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "generic" && mode != "cyclotomic")
        throw SpecError("algebra spec: mode must be \"generic\" or \"cyclotomic\"");
    const int n = static_cast<int>(std::max(rows, cols));

    std::ostringstream digest;
    digest << "rows=" << rows << ";cols=" << cols << ";mode=" << mode;

    PresentationPtr full;
    try {
        if (mode == "cyclotomic") {
            const long level = detail::json_int(j, "level");
            if (level < 1) throw SpecError("algebra spec: level must be >= 1");
            const long lambda_exp = detail::json_int(j, "lambda_exp");
            if (!j.contains("p_exps")) throw SpecError("algebra spec: missing \"p_exps\"");
            auto exps = detail::json_exponent_matrix(j.at("p_exps"), n);
            detail::check_antisymmetric(exps, level);
            digest << ";level=" << level << ";lambda_exp=" << lambda_exp << ";p_exps=[";
            for (int a = 0; a < n; ++a) {
                digest << (a ? ",[" : "[");
                for (int b = 0; b < n; ++b) digest << (b ? "," : "") << exps[a][b];
                digest << "]";
            }
            digest << "]";
            auto mod = [level](long k) { return ((k % level) + level) % level; };
            bool single = n >= 2;
            const long k0 = n >= 2 ? mod(exps[1][0]) : 0;
            for (int a = 0; a < n && single; ++a)
                for (int b = 0; b < a; ++b)
                    if (mod(exps[a][b]) != k0) {
                        single = false;
                        break;
                    }
            if (single && mod(lambda_exp + 2 * k0) != 0) single = false;
            if (single) {
                full = Presentation::quantum_matrix_single(
                    n, Coefficient(CyclotomicScalar::root_of_unity(level, k0)));
            } else {
                Coefficient lambda{CyclotomicScalar::root_of_unity(level, lambda_exp)};
                std::vector<std::vector<Coefficient>> p(
                    static_cast<std::size_t>(n),
                    std::vector<Coefficient>(static_cast<std::size_t>(n),
                                             Coefficient(CyclotomicScalar::one(level))));
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                            Coefficient(CyclotomicScalar::root_of_unity(level, exps[a][b]));
                full = Presentation::quantum_matrix(n, lambda, p);
            }
        } else {
            const bool has_exps = j.contains("p_exps") || j.contains("lambda_exp");
            if (j.contains("level"))
                throw SpecError("algebra spec: \"level\" applies only to cyclotomic mode");
            if (!has_exps) {
                full = Presentation::quantum_matrix_generic(n);
            } else {
                const long lambda_exp = detail::json_int(j, "lambda_exp");
                if (!j.contains("p_exps")) throw SpecError("algebra spec: missing \"p_exps\"");
                auto exps = detail::json_exponent_matrix(j.at("p_exps"), n);
                detail::check_antisymmetric(exps, 0);
                digest << ";lambda_exp=" << lambda_exp << ";p_exps=[";
                for (int a = 0; a < n; ++a) {
                    digest << (a ? ",[" : "[");
                    for (int b = 0; b < n; ++b) digest << (b ? "," : "") << exps[a][b];
                    digest << "]";
                }
                digest << "]";
                bool single = n >= 2 && lambda_exp == -2;
                for (int a = 0; a < n && single; ++a)
                    for (int b = 0; b < a; ++b)
                        if (exps[a][b] != 1) {
                            single = false;
                            break;
                        }
                if (single) {
                    full = Presentation::quantum_matrix_generic_single(n);
                } else {
                    Coefficient q{LaurentScalar::parameter("q")};
                    Coefficient lambda = q.pow(lambda_exp);
                    std::vector<std::vector<Coefficient>> p(
                        static_cast<std::size_t>(n),
                        std::vector<Coefficient>(static_cast<std::size_t>(n),
                                                 Coefficient(LaurentScalar::one())));
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                                q.pow(exps[a][b]);
                    full = Presentation::quantum_matrix(n, lambda, p);
                }
            }
        }
    } catch (const SpecError&) {
        throw;
    } catch (const std::exception& ex) {
        throw SpecError(std::string("algebra spec: ") + ex.what());
    }

    // Rectangular grids and explicit subsets become subalgebras.
    std::set<std::pair<long, long>> wanted;
    if (j.contains("subset")) {
        const nlohmann::json& sub = j.at("subset");
        if (!sub.is_array() || sub.empty())
            throw SpecError("algebra spec: \"subset\" must be a nonempty array of [i,j] pairs");
        for (const auto& entry : sub) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
                !entry[1].is_number_integer())
                throw SpecError("algebra spec: \"subset\" entries must be [i,j] integer pairs");
            long i = entry[0].get<long>(), jj = entry[1].get<long>();
            if (i < 1 || i > rows || jj < 1 || jj > cols)
                throw SpecError("algebra spec: subset entry [" + std::to_string(i) + "," +
                                std::to_string(jj) + "] is outside the " + std::to_string(rows) +
                                "x" + std::to_string(cols) + " grid");
            wanted.insert({i, jj});
        }
        digest << ";subset=[";
        bool first = true;
        for (const auto& [i, jj] : wanted) {
            digest << (first ? "" : ",") << "[" << i << "," << jj << "]";
            first = false;
        }
        digest << "]";
    } else {
        for (long i = 1; i <= rows; ++i)
            for (long jj = 1; jj <= cols; ++jj) wanted.insert({i, jj});
    }

    LoadedAlgebra out;
    out.digest = digest.str();
    if (static_cast<int>(wanted.size()) == n * n) {
        out.pres = full;
        return out;
    }
    std::vector<int> keep;
    for (const auto& [i, jj] : wanted)
        keep.push_back(static_cast<int>((i - 1) * n + (jj - 1)));
    try {
        out.pres = Presentation::subalgebra(full, keep);
    } catch (const std::exception& ex) {
        throw SpecError(std::string("algebra spec: ") + ex.what());
    }
    return out;
}

inline nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const std::exception& ex) {
        throw SpecError(path + ": " + ex.what());
    }
}

inline LoadedAlgebra load_algebra_file(const std::string& path) {
    return algebra_from_json(parse_json_file(path));
}

// ---------------------------------------------------------------------------
// Morphism files

struct LoadedMorphism {
    LoadedAlgebra algebra;
    std::vector<AlgebraElement> images;     // one per generator, PBW order
    std::vector<std::string> given;         // generator names with explicit images
};

namespace detail {

/// "x11" / "x_11" / "x[1,1]" -> (1,1); anything else is an error.
inline std::pair<int, int> parse_generator_key(const std::string& key) {
    if (key.empty() || key[0] != 'x')
        throw SpecError("morphism: image key \"" + key + "\" does not name a generator");
    std::string digits;
    for (std::size_t k = 1; k < key.size(); ++k) {
        char c = key[k];
        if (std::isdigit(static_cast<unsigned char>(c)))
            digits += c;
        else if (c != '_' && c != '[' && c != ']' && c != ',')
            throw SpecError("morphism: image key \"" + key + "\" does not name a generator");
    }
    if (digits.size() != 2)
        throw SpecError("morphism: image key \"" + key + "\" must name x<i><j> with one digit each");
    return {digits[0] - '0', digits[1] - '0'};
}

}  // namespace detail

/// Evaluate an "images" object against an existing presentation.  Generators
/// without an explicit entry map to themselves.  Appends the names of the
/// explicitly given generators (sorted) to *given when non-null.
inline std::vector<AlgebraElement> morphism_images(const nlohmann::json& images_json,
                                                   const PresentationPtr& pres,
                                                   std::vector<std::string>* given = nullptr) {
    std::vector<AlgebraElement> images;
    images.reserve(static_cast<std::size_t>(pres->size()));
    for (int k = 0; k < pres->size(); ++k) images.push_back(AlgebraElement::generator(pres, k));
    if (!images_json.is_object()) throw SpecError("morphism: \"images\" must be an object");
    std::set<int> seen;
    std::vector<std::string> names;
    for (const auto& [key, value] : images_json.items()) {
        auto [row, col] = detail::parse_generator_key(key);
        int index = -1;
        for (int k = 0; k < pres->size(); ++k)
            if (pres->gen(k).row == row && pres->gen(k).col == col) index = k;
        if (index < 0)
            throw SpecError("morphism: \"" + key + "\" is not a generator of this presentation");
        if (!seen.insert(index).second)
            throw SpecError("morphism: duplicate image for \"" + key + "\"");
        if (!value.is_string())
            throw SpecError("morphism: image for \"" + key + "\" must be an expression string");
        try {
            images[static_cast<std::size_t>(index)] =
                evaluate_expression(value.get<std::string>(), pres);
        } catch (const std::exception& ex) {
            throw SpecError("morphism: image for \"" + key + "\": " + ex.what());
        }
        names.push_back(pres->gen(index).name);
    }
    std::sort(names.begin(), names.end());
    if (given) given->insert(given->end(), names.begin(), names.end());
    return images;
}

inline LoadedMorphism morphism_from_json(const nlohmann::json& j, const std::string& base_dir) {
    if (!j.is_object()) throw SpecError("morphism: expected a JSON object");
    detail::check_keys(j, {"algebra", "images"}, "morphism");
    if (!j.contains("algebra")) throw SpecError("morphism: missing \"algebra\"");
    LoadedMorphism out;
    const nlohmann::json& alg = j.at("algebra");
    if (alg.is_string()) {
        std::filesystem::path p = alg.get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        out.algebra = load_algebra_file(p.string());
    } else {
        out.algebra = algebra_from_json(alg);
    }
    const PresentationPtr& pres = out.algebra.pres;
    if (!j.contains("images")) {
        for (int k = 0; k < pres->size(); ++k)
            out.images.push_back(AlgebraElement::generator(pres, k));
        return out;
    }
    out.images = morphism_images(j.at("images"), pres, &out.given);
    return out;
}

inline LoadedMorphism load_morphism_file(const std::string& path) {
    return morphism_from_json(parse_json_file(path),
                              std::filesystem::path(path).parent_path().string());
}

}  // namespace qma
