#pragma once

#include <json.hpp>

#include "qca/qfpoly.hpp"
#include "qca/quiver.hpp"
#include "qca/seed.hpp"

namespace qca {

using Json = nlohmann::ordered_json;

/// QLaurent <-> sorted [twice_exponent, coefficient] pairs; coefficients
/// render as numbers while they fit in 64 bits, decimal strings beyond.
Json qlaurent_to_json(const QLaurent& a);
QLaurent qlaurent_from_json(const Json& j);

Json torus_to_json(const TorusElement& t);

Json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const Json& j);

Json exchange_to_json(const ExchangeData& e);
/// Accepts {"btilde": [[...]], "d": [...]} with optional "d", or a bare matrix.
ExchangeData exchange_from_json(const Json& j);

Json word_to_json(const MutationWord& w);
MutationWord word_from_json(const Json& j);

Json qfpoly_to_json(const QFPoly& f);
QFPoly qfpoly_from_json(const Json& j);

Json seed_to_json(const QuantumSeed& s);

Json commpoly_to_json(const CommPoly& p);

Json quiver_to_json(const Quiver& q);

}  // namespace qca
