#include "stratavol/verify.hpp"

#include "stratavol/pnum.hpp"
#include "stratavol/ribbon.hpp"
#include "stratavol/sts.hpp"
#include "stratavol/volumes.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stratavol::verify {

namespace {

using exact::Rational;

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// Runs body, turning exceptions into a failed check.
Check attempt(const std::string& suite, const std::string& name, const std::function<bool(std::string&)>& body) {
    Check c{suite, name, false, ""};
    try {
        c.passed = body(c.detail);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

std::vector<Check> bivariate() {
    std::vector<Check> out;
    for (int g = 0; g <= 6; ++g) {
        out.push_back(attempt("bivariate", "C^{2g} coefficient identity, g=" + std::to_string(g),
                              [g](std::string&) { return volumes::verify_bivariate_relation(g); }));
    }
    out.push_back(attempt("bivariate", "table route equals Lagrange route to order 12", [](std::string&) {
        return volumes::c_series(12) == volumes::c_series_inverse_route(12);
    }));
    return out;
}

std::vector<Check> multivariate() {
    std::vector<Check> out;
    for (int k = 0; k <= 8; ++k) {
        out.push_back(attempt("multivariate", "T^k coefficient identity, k=" + std::to_string(k),
                              [k](std::string&) { return pnum::verify_multivariate_relation(k, 8); }));
    }
    return out;
}

std::vector<Check> walls(std::uint64_t seed) {
    std::vector<Check> out;
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            out.push_back(attempt("walls", "generic positive trees, k=" + std::to_string(k) + " l=" + std::to_string(l),
                                  [&](std::string& detail) {
                                      const auto expected = exact::factorial(static_cast<unsigned>(k + l - 2)).get_ui();
                                      const auto wall = ribbon::Wall::full(k, l);
                                      std::set<std::uint64_t> seen;
                                      for (std::uint64_t s = seed; s < seed + 4; ++s) {
                                          seen.insert(ribbon::count_positive_trees(k, l, ribbon::wall_sample_point(wall, s)));
                                      }
                                      detail = "expected " + std::to_string(expected) + ", distinct values " +
                                               std::to_string(seen.size());
                                      return seen == std::set<std::uint64_t>{expected};
                                  }));
        }
    }
    for (const auto& [n, cells_wanted] : std::vector<std::pair<int, std::size_t>>{{2, 2}, {3, 4}}) {
        out.push_back(attempt("walls", "constancy across open cells of V_" + std::to_string(n), [&](std::string& detail) {
            const auto wall = ribbon::Wall::diagonal(n);
            std::map<std::vector<int>, std::uint64_t> by_cell;
            bool constant = true;
            for (std::uint64_t s = seed; s < seed + 200 && by_cell.size() < cells_wanted; ++s) {
                const auto p = ribbon::wall_sample_point(wall, s);
                const auto count = ribbon::count_positive_trees(n, n, p);
                by_cell.emplace(ribbon::cell_signature(n, n, p), count);
                constant = constant && count == by_cell.begin()->second;
            }
            detail = std::to_string(by_cell.size()) + " cells, value " +
                     (by_cell.empty() ? std::string("none") : std::to_string(by_cell.begin()->second));
            return constant && by_cell.size() >= cells_wanted;
        }));
    }
    out.push_back(attempt("walls", "ray polynomial leading term, g=1 k=l=1", [](std::string& detail) {
        const auto p = ribbon::PerimeterPair::of_integers({1}, {1});
        const auto poly = ribbon::fit_ray_polynomial(1, 1, 1, p, 8);
        const Rational top = pnum::pgvn_polynomial(1, 1).evaluate({Rational(1)});
        detail = "leading " + poly.coeff(2).str() + ", volume polynomial " + top.str();
        return poly.degree() == 2 && poly.coeff(2) == top;
    }));
    out.push_back(attempt("walls", "ray polynomial leading term, g=1 k=l=2 on V_2", [](std::string& detail) {
        const auto p = ribbon::PerimeterPair::of_integers({5, 1}, {5, 1});
        const auto poly = ribbon::fit_ray_polynomial(1, 2, 2, p, 6);
        const Rational top = pnum::pgvn_polynomial(1, 2).evaluate({Rational(5), Rational(1)});
        detail = "leading " + poly.coeff(2).str() + ", volume polynomial " + top.str();
        return poly.degree() == 2 && poly.coeff(2) == top;
    }));
    return out;
}

std::vector<Check> oracle_p(std::uint64_t seed) {
    std::vector<Check> out;
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<int>> blocks;
        for (int total = n; total <= 4; ++total) {
            for (auto& c : pnum::compositions(total, n, 1)) blocks.push_back(std::move(c));
        }
        for (const auto& b : blocks) {
            for (const auto& w : blocks) {
                out.push_back(attempt("oracle-p", "positive trees on W^{" + join(b) + "}_{" + join(w) + "}",
                                      [&](std::string& detail) {
                                          const auto trees = ribbon::p0_oracle(b, w, seed);
                                          const auto p = pnum::p_bw_value(b, w);
                                          detail = std::to_string(trees) + " vs " + p.get_str();
                                          return p == exact::Integer(static_cast<unsigned long>(trees));
                                      }));
            }
        }
    }
    return out;
}

std::vector<Check> oracle_sts() {
    std::vector<Check> out;
    for (int g = 1; g <= 2; ++g) {
        std::vector<sts::CylinderFormulaRow> rows;
        try {
            rows = sts::cylinder_formula_table(g, 6);
        } catch (const std::exception& e) {
            out.push_back({"oracle-sts", "cylinder formula, g=" + std::to_string(g), false,
                           std::string("exception: ") + e.what()});
        }
        for (const auto& row : rows) {
            out.push_back(attempt("oracle-sts",
                                  "cylinder formula, g=" + std::to_string(g) + " n=" + std::to_string(row.n) +
                                      " N<=" + std::to_string(row.N),
                                  [&row](std::string& detail) {
                                      detail = std::to_string(row.census_count) + " vs " + row.formula.str();
                                      return Rational(exact::Integer(static_cast<unsigned long>(row.census_count))) ==
                                             row.formula;
                                  }));
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bivariate", "multivariate", "walls", "oracle-p", "oracle-sts"};
    return names;
}

std::vector<Check> run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "all") {
        std::vector<Check> out;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, seed);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (name == "bivariate") return bivariate();
    if (name == "multivariate") return multivariate();
    if (name == "walls") return walls(seed);
    if (name == "oracle-p") return oracle_p(seed);
    if (name == "oracle-sts") return oracle_sts();
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace stratavol::verify
