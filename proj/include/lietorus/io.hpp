#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "sl_model.hpp"
#include "ssp_model.hpp"
#include "tkk_model.hpp"

namespace lietorus {

using Json = nlohmann::json;

inline Json cyc_to_json(const Cyc& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(rat_str(r));
    return Json{{"m", c.order()}, {"coeffs", coeffs}};
}

inline Cyc cyc_from_json(const Json& j) {
    int m = j.at("m").get<int>();
    std::vector<Rat> coeffs;
    for (const auto& entry : j.at("coeffs")) coeffs.push_back(parse_rat(entry.get<std::string>()));
    return Cyc(m, std::move(coeffs));
}

inline Json lattice_vec_to_json(const LatticeVec& v) {
    Json out = Json::array();
    for (long long x : v) out.push_back(x);
    return out;
}

inline LatticeVec lattice_vec_from_json(const Json& j) {
    LatticeVec v;
    for (const auto& entry : j) v.push_back(entry.get<long long>());
    return v;
}

/// Quantum matrix entries: +-1 as numbers, or "z^k" / "-z^k" for powers of
/// zeta_m.
inline Cyc q_entry_from_json(const Json& j, int m) {
    if (j.is_number_integer()) {
        long v = j.get<long>();
        return Cyc::of_long(v, m);
    }
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        bool neg = false;
        if (!s.empty() && s[0] == '-') {
            neg = true;
            s = s.substr(1);
        }
        Cyc out = Cyc::one(m);
        if (s == "1") {
        } else if (s == "z") {
            out = Cyc::zeta(m);
        } else if (s.rfind("z^", 0) == 0) {
            out = Cyc::zeta(m).pow(std::stol(s.substr(2)));
        } else {
            throw std::invalid_argument("bad q entry: " + j.dump());
        }
        return neg ? -out : out;
    }
    throw std::invalid_argument("bad q entry: " + j.dump());
}

inline std::vector<std::vector<Cyc>> q_matrix_from_json(const Json& j, int n, int m) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw std::invalid_argument("q matrix must be n x n");
    std::vector<std::vector<Cyc>> q;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("q matrix must be n x n");
        std::vector<Cyc> out;
        for (const auto& entry : row) out.push_back(q_entry_from_json(entry, m));
        q.push_back(std::move(out));
    }
    return q;
}

/// Torus specs:
///   {"kind":"laurent","n":1}
///   {"kind":"quantum","n":2,"m":2,"q":[[1,-1],[-1,1]]}
///   {"kind":"octonion","extra_laurent":0}
///   {"kind":"spin","n":3}
///   {"kind":"jordan_plus","n":2,"m":2,"q":[[1,-1],[-1,1]]}
inline Torus torus_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "laurent") return Torus::laurent(j.at("n").get<int>(), j.value("m", 2));
    if (kind == "quantum") {
        int n = j.at("n").get<int>();
        int m = j.value("m", 2);
        return Torus::quantum(n, q_matrix_from_json(j.at("q"), n, m), m);
    }
    if (kind == "octonion") return Torus::octonion(j.value("extra_laurent", 0));
    if (kind == "spin") return Torus::spin(j.value("n", 3));
    if (kind == "jordan_plus") {
        int n = j.at("n").get<int>();
        int m = j.value("m", 2);
        return Torus::jordan_plus(n, q_matrix_from_json(j.at("q"), n, m), m);
    }
    throw std::invalid_argument("unknown torus kind: " + kind);
}

/// Involutions: {"e":[1,-1,...]} meaning iota(x_i) = e_i x_i.
inline Involution involution_from_json(const Torus& t, const Json& j) {
    return Involution(t, j.at("e").get<std::vector<int>>());
}

/// Shift homomorphisms: {"s":[[1,0],[0,0]]} or the CLI form "1,0;0,0".
inline ShiftHom shift_from_json(const Json& j, int lambda_rank) {
    std::vector<LatticeVec> images;
    for (const auto& row : j.at("s")) images.push_back(lattice_vec_from_json(row));
    return ShiftHom(std::move(images), lambda_rank);
}

inline LatticeVec parse_vec(const std::string& s) {
    LatticeVec out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return out;
}

inline ShiftHom parse_shift(const std::string& s, int lambda_rank) {
    std::vector<LatticeVec> images;
    std::string cur;
    for (char ch : s + ";") {
        if (ch == ';') {
            if (!cur.empty()) images.push_back(parse_vec(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return ShiftHom(std::move(images), lambda_rank);
}

using AnyModel = std::variant<SlModel, TkkModel, SspModel>;

/// Model specs:
///   {"model":"sl","r":3,"coord":{...}}
///   {"model":"tkk","coord":{...}}
///   {"model":"ssp","r":4,"coord":{...},"involution":{"e":[...]}}
inline AnyModel model_from_json(const Json& j) {
    std::string model = j.at("model").get<std::string>();
    Torus coord = torus_from_json(j.at("coord"));
    if (model == "sl") return SlModel(coord, j.at("r").get<int>());
    if (model == "tkk") return TkkModel(coord, j.value("action_window", 1LL));
    if (model == "ssp")
        return SspModel(involution_from_json(coord, j.at("involution")), j.at("r").get<int>());
    throw std::invalid_argument("unknown model kind: " + model);
}

inline std::string model_name(const AnyModel& m) {
    return std::visit([](const auto& model) { return model.name(); }, m);
}

inline int model_lambda_rank(const AnyModel& m) {
    return std::visit([](const auto& model) { return model.lambda_rank(); }, m);
}

inline int model_base_rank(const AnyModel& m) {
    return std::visit([](const auto& model) { return model.datum().rank(); }, m);
}

/// Per-model default verification window (larger matrices get the smaller
/// default).
inline long long model_default_window(const AnyModel& m) {
    if (std::holds_alternative<TkkModel>(m)) return 1;
    if (const auto* ssp = std::get_if<SspModel>(&m)) return ssp->rank() <= 3 ? 2 : 1;
    return 2;
}

} // namespace lietorus
