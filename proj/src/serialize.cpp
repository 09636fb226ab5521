#include "stratavol/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

namespace stratavol::serialize {

using exact::Integer;
using exact::Rational;

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const exact::PiScaled& v) {
    Json j;
    j["coeff"] = v.coefficient().str();
    j["pi_exp"] = v.pi_exponent();
    return j;
}

Json to_json(const ribbon::GraphClass& cls) {
    const auto& g = cls.graph;
    const int darts = 2 * g.edge_count();
    Json colors = Json::array();
    Json labels = Json::array();
    for (int d = 0; d < darts; ++d) {
        const int e = d / 2;
        const bool black = d % 2 == 0;
        colors.push_back(black ? "black" : "white");
        labels.push_back(black ? g.black_of_edge()[e] : g.white_of_edge()[e]);
    }
    Json j;
    j["darts"] = darts;
    j["rotation"] = g.rotation();
    j["pairing"] = g.pairing();
    j["colors"] = colors;
    j["labels"] = labels;
    j["genus"] = g.genus();
    j["faces"] = g.face_count();
    j["aut"] = cls.automorphisms;
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a string");
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

Json pnumber_dump(const std::map<pnum::PartitionIndex, Integer>& entries) {
    Json out = Json::array();
    for (const auto& [index, value] : entries) {
        Json j;
        j["parts"] = index.parts();
        j["value"] = value.get_str();
        out.push_back(std::move(j));
    }
    return out;
}

std::map<pnum::PartitionIndex, Integer> pnumber_parse(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("p-number dump must be an array");
    std::map<pnum::PartitionIndex, Integer> out;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("parts") || !entry.contains("value")) {
            throw std::invalid_argument("p-number entry needs parts and value");
        }
        const Rational v = rational_from_json(entry.at("value"));
        if (!v.is_integer() || v.sign() <= 0) throw std::invalid_argument("p-number value must be a positive integer");
        pnum::PartitionIndex index(entry.at("parts").get<std::vector<int>>());
        if (!out.emplace(index, v.to_integer()).second) {
            throw std::invalid_argument("duplicate p-number entry " + index.str());
        }
    }
    return out;
}

CacheLoad load_pnumber_cache(const std::string& path, pnum::PNumberTable& table, std::uint64_t seed) {
    CacheLoad result;
    std::ifstream in(path);
    if (!in) {
        result.accepted = true;
        return result;
    }
    std::map<pnum::PartitionIndex, Integer> entries;
    try {
        entries = pnumber_parse(Json::parse(in));
    } catch (const std::exception& e) {
        result.problem = e.what();
        return result;
    }
    if (!entries.empty()) {
        std::mt19937_64 rng(seed);
        auto it = entries.begin();
        std::advance(it, static_cast<long>(std::uniform_int_distribution<std::size_t>(0, entries.size() - 1)(rng)));
        pnum::PNumberTable fresh;
        const Integer recomputed = pnum::p_value(it->first, fresh);
        if (recomputed != it->second) {
            result.problem = "entry " + it->first.str() + " is " + it->second.get_str() + ", recomputed " +
                             recomputed.get_str();
            return result;
        }
    }
    for (const auto& [index, value] : entries) {
        if (!table.contains(index)) table.insert(index, value);
    }
    result.accepted = true;
    result.entries = entries.size();
    return result;
}

void save_pnumber_cache(const std::string& path, const pnum::PNumberTable& table) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache " + tmp.string());
        out << pnumber_dump(table.snapshot()).dump(1) << '\n';
        if (!out) throw std::runtime_error("cannot write cache " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace stratavol::serialize
