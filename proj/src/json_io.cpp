#include "swlab/json_io.hpp"

#include <nlohmann/json.hpp>

namespace swlab {

using nlohmann::json;

json tableau_to_json(const StandardTableau& t) {
    json a = json::array();
    for (auto c : t.word) a.push_back(int(c));
    return a;
}

StandardTableau tableau_from_json(const json& j) {
    StandardTableau t;
    for (const auto& e : j) t.word.push_back(static_cast<std::uint8_t>(e.get<int>()));
    if (!t.isValid()) throw std::invalid_argument("row word violates the ballot condition");
    return t;
}

json operator_to_json(const SparseOperator& a) {
    json out;
    out["dim"] = a.rows();
    json basis = json::array();
    for (const auto& t : a.basis) basis.push_back(tableau_to_json(t));
    out["basis"] = basis;
    json trips = json::array();
    for (int r = 0; r < a.rows(); ++r)
        for (const auto& [c, v] : a.row(r)) trips.push_back({r, c, v});
    out["triplets"] = trips;
    return out;
}

json tensor_to_json(const TensorVector& v) {
    json out;
    out["n"] = v.n;
    json amps = json::array();
    for (const auto& [b, a] : v.amps) amps.push_back({b, a.real(), a.imag()});
    out["amplitudes"] = amps;
    return out;
}

TensorVector tensor_from_json(const json& j) {
    TensorVector v;
    v.n = j.at("n").get<int>();
    if (v.n < 0 || v.n > 62) throw std::invalid_argument("tensor length out of range");
    for (const auto& e : j.at("amplitudes")) {
        std::uint64_t b = e.at(0).get<std::uint64_t>();
        if (v.n < 64 && b >= (std::uint64_t{1} << v.n))
            throw std::invalid_argument("bitstring exceeds tensor length");
        v.add(b, {e.at(1).get<double>(), e.at(2).get<double>()});
    }
    return v;
}

json spec_to_json(const EmbeddingSpec& s) {
    json out;
    if (s.isGeneralized()) {
        out["kJump"] = s.jumpHalfWidth;
        out["h"] = s.jumpCoeffs;
    } else {
        out["k"] = s.k;
        out["stationary"] = s.stationary;
        out["p"] = s.params.at(0).p;
        out["q"] = s.params.at(0).q;
    }
    return out;
}

EmbeddingSpec spec_from_json(const json& j) {
    EmbeddingSpec s;
    if (j.contains("kJump")) {
        s.jumpHalfWidth = j.at("kJump").get<int>();
        s.jumpCoeffs = j.at("h").get<std::vector<double>>();
        s.k = 1;
        return s;
    }
    s.k = j.at("k").get<int>();
    s.stationary = j.value("stationary", true);
    UnitPair h{j.at("p").get<double>(), j.at("q").get<double>()};
    if (!h.isUnit()) throw std::invalid_argument("(p, q) must have unit norm");
    s.params = {h};
    return s;
}

}  // namespace swlab
