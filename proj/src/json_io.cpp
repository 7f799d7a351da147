#include "qca/json_io.hpp"

#include <limits>

#include "qca/errors.hpp"

namespace qca {

namespace {

Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw BadInput("expected an integer or a decimal string");
}

}  // namespace

Json qlaurent_to_json(const QLaurent& a) {
    Json out = Json::array();
    for (const auto& [e, c] : a.terms()) out.push_back(Json::array({e.twice, int_to_json(c)}));
    return out;
}

QLaurent qlaurent_from_json(const Json& j) {
    if (!j.is_array()) throw BadInput("q-coefficient must be an array of [2e, c] pairs");
    QLaurent out;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw BadInput("q-coefficient term must be a [2e, c] pair");
        out += QLaurent::q_power(HalfInt(pair[0].get<std::int64_t>()), int_from_json(pair[1]));
    }
    return out;
}

Json torus_to_json(const TorusElement& t) {
    Json out = Json::array();
    for (const auto& [e, c] : t.terms()) {
        Json term;
        term["exponent"] = e;
        term["coefficient"] = qlaurent_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json matrix_to_json(const IntMat& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

IntMat matrix_from_json(const Json& j) {
    if (!j.is_array()) throw BadInput("matrix must be an array of rows");
    IntMat m;
    for (const auto& row : j) {
        if (!row.is_array()) throw BadInput("matrix row must be an array");
        m.push_back(row.get<std::vector<std::int64_t>>());
    }
    return m;
}

Json exchange_to_json(const ExchangeData& e) {
    Json out;
    out["btilde"] = matrix_to_json(e.btilde());
    out["d"] = e.d();
    return out;
}

ExchangeData exchange_from_json(const Json& j) {
    if (j.is_array()) return ExchangeData(matrix_from_json(j));
    if (!j.is_object() || !j.contains("btilde")) throw BadInput("expected {\"btilde\": [[...]], \"d\": [...]}");
    IntMat m = matrix_from_json(j.at("btilde"));
    if (j.contains("d")) return ExchangeData(std::move(m), j.at("d").get<std::vector<std::int64_t>>());
    return ExchangeData(std::move(m));
}

Json word_to_json(const MutationWord& w) { return Json(w); }

MutationWord word_from_json(const Json& j) {
    if (!j.is_array()) throw BadInput("word must be an array of directions");
    return j.get<MutationWord>();
}

Json qfpoly_to_json(const QFPoly& f) {
    Json out;
    out["b0"] = matrix_to_json(f.context()->b0);
    out["d"] = f.context()->d;
    Json terms = Json::array();
    for (const auto& [a, c] : f.terms()) {
        Json term;
        term["a"] = a;
        term["coeff"] = qlaurent_to_json(c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

QFPoly qfpoly_from_json(const Json& j) {
    ZContextPtr ctx = ZContext::make(matrix_from_json(j.at("b0")), j.at("d").get<std::vector<std::int64_t>>());
    TorusElement elem(ctx->form);
    for (const auto& term : j.at("terms"))
        elem.add_term(term.at("a").get<ExpVec>(), qlaurent_from_json(term.at("coeff")));
    return QFPoly::from_torus(std::move(ctx), std::move(elem));
}

Json seed_to_json(const QuantumSeed& s) {
    Json out;
    out["word"] = word_to_json(s.word());
    out["lambda"] = matrix_to_json(s.pair().lambda.entries());
    out["btilde"] = matrix_to_json(s.pair().exchange.btilde());
    Json cluster = Json::array();
    for (const auto& x : s.cluster()) cluster.push_back(torus_to_json(x));
    out["cluster"] = std::move(cluster);
    return out;
}

Json commpoly_to_json(const CommPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["exponent"] = e;
        term["coefficient"] = int_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json quiver_to_json(const Quiver& q) {
    Json arcs = Json::array();
    for (auto [i, j] : q.arcs()) arcs.push_back(Json::array({i, j}));
    Json out;
    out["n"] = q.vertex_count();
    out["arcs"] = std::move(arcs);
    return out;
}

}  // namespace qca
