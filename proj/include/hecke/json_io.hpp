#pragma once

// JSON encoding of the library's value types. Integers that fit in int64 are
// written as numbers, larger ones as decimal strings; both forms are accepted
// on input.

#include <json.hpp>

#include "hecke/cf.hpp"
#include "hecke/field.hpp"
#include "hecke/group.hpp"
#include "hecke/isp.hpp"
#include "hecke/quadforms.hpp"
#include "hecke/rpf.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

Json to_json(const mpz_class& n);
Json to_json(const MinPoly& m);
Json to_json(const RingElem& x);
Json to_json(const FieldElem& x);
/// {"u": field, "v": field}; the discriminant is carried by the enclosing object.
Json to_json(const ExtElem& x);
Json to_json(const Surd& s);
Json to_json(const CF& cf);
Json to_json(const QForm& q);
Json to_json(const GenWord& w);
/// Adds "positives_decimal" rendered to `digits` significant digits.
Json to_json(const ISP& isp, int digits = 30);
Json to_json(const CountTable& t);
Json to_json(const RPF& q);
Json to_json(const Verdict& v, int digits = 30);

mpz_class integer_from_json(const Json& j);
RingElem ring_from_json(int p, const Json& j);
FieldElem field_from_json(int p, const Json& j);
ExtElem ext_from_json(int p, const RingElem& D, const Json& j);
Surd surd_from_json(int p, const Json& j);
GenWord word_from_json(const Json& j);
/// Validates shape and invariants; throws ParseError.
RPF rpf_from_json(const Json& j);

}  // namespace hecke
