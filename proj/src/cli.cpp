#include "stratavol/cli.hpp"

#include "stratavol/pnum.hpp"
#include "stratavol/ribbon.hpp"
#include "stratavol/serialize.hpp"
#include "stratavol/sts.hpp"
#include "stratavol/verify.hpp"
#include "stratavol/volumes.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace stratavol::cli {

namespace {

using exact::Rational;
using serialize::Json;
using serialize::to_json;

enum class Format { json, csv, pretty };

struct Settings {
    Format format = Format::pretty;
    bool with_float = false;
    std::uint64_t seed = 0;
};

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// Rows of strings emitted either as CSV or as an aligned text table.
struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& out, Format format) const {
        if (format == Format::csv) {
            auto line = [&](const std::vector<std::string>& cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
                out << '\n';
            };
            line(headers);
            for (const auto& r : rows) line(r);
            return;
        }
        std::vector<std::size_t> width(headers.size());
        for (std::size_t i = 0; i < headers.size(); ++i) width[i] = headers[i].size();
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                s += cells[i];
                if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
            }
            out << s << '\n';
        };
        line(headers);
        for (const auto& r : rows) line(r);
    }
};

int cmd_volumes(const Settings& st, int g_max, std::ostream& out) {
    if (g_max < 0 || g_max > 10) throw std::invalid_argument("--gmax must be between 0 and 10");
    Json json = Json::array();
    Table table{{"g", "n", "a_gn", "vol_coeff", "vol_pi_exp"}, {}};
    if (st.with_float) {
        table.headers.push_back("a_gn_float");
        table.headers.push_back("vol_float");
    }
    for (int g = 1; g <= g_max; ++g) {
        for (int n = 1; n <= g; ++n) {
            const Rational a = volumes::a_gn(g, n);
            const auto vol = volumes::vol_n(g, n);
            Json j;
            j["g"] = g;
            j["n"] = n;
            j["a_gn"] = to_json(a);
            j["vol"] = to_json(vol);
            std::vector<std::string> row{std::to_string(g), std::to_string(n), a.str(), vol.coefficient().str(),
                                         std::to_string(vol.pi_exponent())};
            if (st.with_float) {
                j["a_gn_float"] = decimal(a.to_double());
                j["vol_float"] = decimal(vol.to_double());
                row.push_back(decimal(a.to_double()));
                row.push_back(decimal(vol.to_double()));
            }
            json.push_back(std::move(j));
            table.rows.push_back(std::move(row));
        }
    }
    if (st.format == Format::json) {
        out << json.dump(2) << '\n';
    } else {
        table.write(out, st.format);
    }
    return 0;
}

int cmd_pnumbers(const Settings& st, int weight_max, std::ostream& out) {
    if (weight_max < 0 || weight_max > 20) throw std::invalid_argument("--weight must be between 0 and 20");
    std::map<pnum::PartitionIndex, exact::Integer> entries;
    std::vector<pnum::PartitionIndex> order;
    for (int s = 1; 2 * s <= weight_max; ++s) {
        for (const auto& half : pnum::partitions(s, 1)) {
            std::vector<int> parts;
            for (int x : half) parts.push_back(2 * x);
            pnum::PartitionIndex index(parts);
            entries.emplace(index, pnum::p_value(index));
            order.push_back(index);
        }
    }
    if (st.format == Format::json) {
        Json json = Json::array();
        for (const auto& index : order) {
            Json j;
            j["parts"] = index.parts();
            j["value"] = entries.at(index).get_str();
            json.push_back(std::move(j));
        }
        out << json.dump(2) << '\n';
        return 0;
    }
    Table table{{"parts", "value"}, {}};
    for (const auto& index : order) {
        std::vector<std::int64_t> wide(index.parts().begin(), index.parts().end());
        table.rows.push_back({join(wide, " "), entries.at(index).get_str()});
    }
    table.write(out, st.format);
    return 0;
}

int cmd_series(const Settings& st, int order, const std::string& route, std::ostream& out) {
    if (order < 2 || order > 24 || order % 2 != 0) throw std::invalid_argument("--order must be even, 2..24");
    const auto c = route == "table" ? volumes::c_series(order) : volumes::c_series_inverse_route(order);
    Json terms = Json::array();
    Table table{{"t", "u", "coeff"}, {}};
    if (st.with_float) table.headers.push_back("coeff_float");
    for (int t = 0; t <= order; ++t) {
        const auto& poly = c.coeff(t);
        for (int u = 0; u <= poly.degree(); ++u) {
            const Rational x = poly.coeff(static_cast<unsigned>(u));
            if (x.is_zero()) continue;
            Json j;
            j["t"] = t;
            j["u"] = u;
            j["coeff"] = to_json(x);
            std::vector<std::string> row{std::to_string(t), std::to_string(u), x.str()};
            if (st.with_float) {
                j["coeff_float"] = decimal(x.to_double());
                row.push_back(decimal(x.to_double()));
            }
            terms.push_back(std::move(j));
            table.rows.push_back(std::move(row));
        }
    }
    if (st.format == Format::json) {
        Json j;
        j["order"] = order;
        j["route"] = route;
        j["terms"] = terms;
        out << j.dump(2) << '\n';
    } else {
        table.write(out, st.format);
    }
    return 0;
}

struct CountArgs {
    int genus = 0;
    std::vector<std::int64_t> black;
    std::vector<std::int64_t> white;
    int max_squares = 6;
    bool graphs = false;
};

int cmd_count_value(const Settings& st, const std::string& kind, const CountArgs& a, std::ostream& out) {
    if (a.black.empty() || a.white.empty()) throw std::invalid_argument("--black and --white are required");
    const auto p = ribbon::PerimeterPair::of_integers(a.black, a.white);
    const int k = static_cast<int>(a.black.size());
    const int l = static_cast<int>(a.white.size());
    const Rational value = kind == "ribbon"
                               ? ribbon::counting_function(a.genus, k, l, p)
                               : Rational(exact::Integer(static_cast<unsigned long>(ribbon::count_positive_trees(k, l, p))));
    const int genus = kind == "ribbon" ? a.genus : 0;
    if (st.format == Format::json) {
        Json j;
        j["kind"] = kind;
        j["genus"] = genus;
        j["black"] = a.black;
        j["white"] = a.white;
        j["value"] = to_json(value);
        if (st.with_float) j["value_float"] = decimal(value.to_double());
        if (a.graphs && kind == "ribbon") {
            Json graphs = Json::array();
            for (const auto& cls : ribbon::enumerate_graphs(a.genus, k, l)) graphs.push_back(to_json(cls));
            j["graphs"] = graphs;
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    if (st.format == Format::csv) {
        Table table{{"kind", "genus", "black", "white", "value"}, {}};
        table.rows.push_back({kind, std::to_string(genus), join(a.black, " "), join(a.white, " "), value.str()});
        if (st.with_float) {
            table.headers.push_back("value_float");
            table.rows.back().push_back(decimal(value.to_double()));
        }
        table.write(out, st.format);
        return 0;
    }
    const std::string name = kind == "ribbon" ? "P^" + std::to_string(genus) : std::string("positive trees");
    out << name << "_{" << k << "," << l << "}(" << join(a.black, ",") << "; " << join(a.white, ",")
        << ") = " << value.str();
    if (st.with_float) out << " (" << decimal(value.to_double()) << ")";
    out << '\n';
    return 0;
}

int cmd_count_sts(const Settings& st, const CountArgs& a, std::ostream& out) {
    const auto census = sts::census(a.genus, a.max_squares);
    Table table{{"g", "N", "n", "count", "weighted_count"}, {}};
    if (st.with_float) table.headers.push_back("weighted_float");
    Json rows = Json::array();
    std::uint64_t total = 0;
    for (const auto& [key, entry] : census) {
        total += entry.count;
        Json j;
        j["g"] = a.genus;
        j["N"] = key.first;
        j["n"] = key.second;
        j["count"] = entry.count;
        j["weighted_count"] = to_json(entry.weighted_count);
        std::vector<std::string> row{std::to_string(a.genus), std::to_string(key.first), std::to_string(key.second),
                                     std::to_string(entry.count), entry.weighted_count.str()};
        if (st.with_float) {
            j["weighted_float"] = decimal(entry.weighted_count.to_double());
            row.push_back(decimal(entry.weighted_count.to_double()));
        }
        rows.push_back(std::move(j));
        table.rows.push_back(std::move(row));
    }
    if (st.format == Format::json) {
        Json j;
        j["genus"] = a.genus;
        j["max_squares"] = a.max_squares;
        j["rows"] = rows;
        j["total"] = total;
        out << j.dump(2) << '\n';
        return 0;
    }
    table.write(out, st.format);
    if (st.format == Format::pretty) out << "total " << total << '\n';
    return 0;
}

int cmd_verify(const Settings& st, const std::string& suite, std::ostream& out) {
    const auto checks = verify::run_suite(suite, st.seed);
    const auto passed = static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const verify::Check& c) { return c.passed; }));
    const bool ok = passed == checks.size();
    if (st.format == Format::json) {
        Json list = Json::array();
        for (const auto& c : checks) {
            Json j;
            j["suite"] = c.suite;
            j["check"] = c.name;
            j["passed"] = c.passed;
            j["detail"] = c.detail;
            list.push_back(std::move(j));
        }
        Json j;
        j["suite"] = suite;
        j["passed"] = ok;
        j["checks"] = list;
        out << j.dump(2) << '\n';
    } else if (st.format == Format::csv) {
        Table table{{"suite", "check", "passed", "detail"}, {}};
        for (const auto& c : checks) table.rows.push_back({c.suite, c.name, c.passed ? "true" : "false", c.detail});
        table.write(out, st.format);
    } else {
        for (const auto& c : checks) {
            out << (c.passed ? "PASS  " : "FAIL  ") << c.suite << ": " << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << '\n';
        }
        out << passed << "/" << checks.size() << " checks passed\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact volumes of minimal strata of Abelian differentials", "stratavol"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings st;
    std::string format = "pretty";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_flag("--float", st.with_float, "Add decimal columns next to exact values");
    app.add_option("--seed", st.seed, "Seed for sampled wall points and cache checks");

    int g_max = 4;
    auto* volumes_cmd = app.add_subcommand("volumes", "Volume contributions a_{g,n} and Vol_n");
    volumes_cmd->add_option("--gmax", g_max, "Largest genus (at most 10)");

    int weight = 8;
    auto* pnumbers_cmd = app.add_subcommand("pnumbers", "p-numbers with even indices");
    pnumbers_cmd->add_option("--weight", weight, "Largest total weight (at most 20)");

    int order = 12;
    std::string route = "table";
    auto* series_cmd = app.add_subcommand("series", "Coefficients of C(t,u)");
    series_cmd->add_option("--order", order, "Even truncation order");
    series_cmd->add_option("--route", route, "Computation route")->check(CLI::IsMember({"table", "lagrange"}));

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Exact counts");
    count_cmd->require_subcommand(1);
    auto* ribbon_cmd = count_cmd->add_subcommand("ribbon", "Counting function P^g_{k,l}");
    ribbon_cmd->add_option("--genus", count_args.genus)->required();
    ribbon_cmd->add_option("--black", count_args.black, "Black perimeters")->delimiter(',')->required();
    ribbon_cmd->add_option("--white", count_args.white, "White perimeters")->delimiter(',')->required();
    ribbon_cmd->add_flag("--graphs", count_args.graphs, "Include the enumerated graphs (json only)");
    auto* trees_cmd = count_cmd->add_subcommand("trees", "Positive plane trees");
    trees_cmd->add_option("--black", count_args.black, "Black perimeters")->delimiter(',')->required();
    trees_cmd->add_option("--white", count_args.white, "White perimeters")->delimiter(',')->required();
    auto* sts_cmd = count_cmd->add_subcommand("sts", "Square-tiled surface census in H(2g-2)");
    sts_cmd->add_option("--genus", count_args.genus)->required();
    sts_cmd->add_option("--max-squares", count_args.max_squares, "Largest square count");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = verify::suite_names();
    suites.push_back("all");
    verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));

    for (auto* sub : {volumes_cmd, pnumbers_cmd, series_cmd, count_cmd, ribbon_cmd, trees_cmd, sts_cmd, verify_cmd}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
    }
    st.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::pretty;

    const char* cache_env = std::getenv("STRATAVOL_CACHE");
    const std::string cache_path = cache_env ? cache_env : "";
    try {
        if (!cache_path.empty()) {
            const auto loaded = serialize::load_pnumber_cache(cache_path, pnum::PNumberTable::shared(), st.seed);
            if (!loaded.accepted) {
                err << "warning: discarding p-number cache " << cache_path << ": " << loaded.problem << '\n';
            }
        }

        int code = 0;
        if (volumes_cmd->parsed()) {
            code = cmd_volumes(st, g_max, out);
        } else if (pnumbers_cmd->parsed()) {
            code = cmd_pnumbers(st, weight, out);
        } else if (series_cmd->parsed()) {
            code = cmd_series(st, order, route, out);
        } else if (ribbon_cmd->parsed()) {
            code = cmd_count_value(st, "ribbon", count_args, out);
        } else if (trees_cmd->parsed()) {
            code = cmd_count_value(st, "trees", count_args, out);
        } else if (sts_cmd->parsed()) {
            code = cmd_count_sts(st, count_args, out);
        } else if (verify_cmd->parsed()) {
            code = cmd_verify(st, suite, out);
        }

        if (!cache_path.empty()) serialize::save_pnumber_cache(cache_path, pnum::PNumberTable::shared());
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace stratavol::cli
