#ifndef ZK_JSONIO_HPP
#define ZK_JSONIO_HPP

#include <json.hpp>

#include "zk/fpalg.hpp"
#include "zk/fraction.hpp"
#include "zk/order.hpp"
#include "zk/poly.hpp"

namespace zk {

using json = nlohmann::json;

// Polynomial wire format:
//   {"field": "Q" | "Fp:<p>", "vars": ["X","Y"], "terms":
//     [{"coeff": "<int>" | "<int>/<int>", "exps": [e0, e1, ...]}, ...]}
// Canonical output sorts terms descending under the given term order.
json poly_to_json(const MultiPoly& p, const TermOrder& ord = TermOrder::grevlex());
MultiPoly poly_from_json(const json& doc);
/// Parse into an existing ring (doc may omit "field"/"vars").
MultiPoly poly_from_json(const json& doc, const RingPtr& ring);

// Algebra format: {"field": ..., "n": ..., "names": [...], "relations": [poly...]}
json algebra_to_json(const FPAlgebra& A, const TermOrder& ord = TermOrder::grevlex());
FPAlgebra algebra_from_json(const json& doc);

// Fraction format: {"num": [poly...], "den": poly, "k": int}
json fraction_to_json(const LaurentFraction& f, const TermOrder& ord = TermOrder::grevlex());
LaurentFraction fraction_from_json(const json& doc, const RingPtr& ring);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& doc, const Field& F);

/// Infix polynomial sugar for CLI flags only: "X^2*Y - 3*X + 1/2".
MultiPoly parse_infix(const std::string& text, const RingPtr& ring);

/// Flexible flag payload: JSON object when it starts with '{', infix otherwise.
MultiPoly poly_from_arg(const std::string& arg, const RingPtr& ring);

}  // namespace zk

#endif
