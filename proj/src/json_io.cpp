#include "hecke/json_io.hpp"

#include <limits>

namespace hecke {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int small_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ParseError(std::string(what) + " out of range");
    return static_cast<int>(v);
}

Json coeff_array(const std::vector<mpz_class>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(to_json(c));
    return a;
}

}  // namespace

Json to_json(const mpz_class& n) {
    if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

Json to_json(const MinPoly& m) {
    return Json{{"p", m.p}, {"coeffs", coeff_array(m.coeffs)}, {"text", m.to_string()}};
}

Json to_json(const RingElem& x) { return coeff_array(x.coeffs()); }

Json to_json(const FieldElem& x) { return Json{{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

Json to_json(const ExtElem& x) { return Json{{"u", to_json(x.u())}, {"v", to_json(x.v())}}; }

Json to_json(const Surd& s) { return Json{{"P", to_json(s.P())}, {"Q", to_json(s.Q())}, {"D", to_json(s.D())}}; }

Json to_json(const CF& cf) {
    return Json{{"p", cf.p}, {"preperiod", cf.preperiod}, {"period", cf.period}, {"text", cf.to_string()}};
}

Json to_json(const QForm& q) { return Json{{"A", to_json(q.A)}, {"B", to_json(q.B)}, {"C", to_json(q.C)}}; }

Json to_json(const GenWord& w) { return Json{{"p", w.p}, {"letters", w.letters}}; }

Json to_json(const ISP& isp, int digits) {
    Json pos = Json::array();
    Json dec = Json::array();
    for (const Surd& s : isp.positives) {
        pos.push_back(to_json(s));
        dec.push_back(to_decimal(s, digits));
    }
    return Json{{"p", isp.p()},
                {"word", isp.word.letters},
                {"D", to_json(isp.D)},
                {"positives", pos},
                {"symmetric", isp.symmetric},
                {"conjugate_word", isp.conjugate_word.letters},
                {"positives_decimal", dec}};
}

Json to_json(const CountTable& t) {
    Json rows = Json::array();
    for (const auto& [n, c] : t.rows) rows.push_back(Json{{"n", n}, {"count", to_json(c)}});
    return Json{{"p", t.p}, {"rows", rows}};
}

Json to_json(const RPF& q) {
    Json terms = Json::array();
    for (const PoleTerm& t : q.pole_terms)
        terms.push_back(Json{{"alpha", to_json(t.alpha)}, {"order", t.order}, {"coeff", to_json(t.coeff)}});
    Json tail = Json::array();
    for (const ExtElem& c : q.tail) tail.push_back(to_json(c));
    return Json{{"p", q.p},
                {"k", q.k},
                {"D", to_json(q.D)},
                {"pole_terms", terms},
                {"zero_part", Json{{"a0", to_json(q.a0)}, {"b1", to_json(q.b1)}}},
                {"tail", tail}};
}

Json to_json(const Verdict& v, int digits) {
    Json j{{"valid", v.valid}, {"points_checked", v.points_checked}};
    if (!v.valid) {
        j["relation"] = v.relation;
        if (v.witness) j["witness"] = to_json(*v.witness);
        if (v.residual) j["residual"] = to_decimal(*v.residual, digits);
    }
    return j;
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return mpz_class(j.get<std::uint64_t>());
        return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        mpz_class n;
        if (n.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.get<std::string>());
        return n;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

RingElem ring_from_json(int p, const Json& j) {
    if (!j.is_array()) throw ParseError("ring element must be a coefficient array");
    std::vector<mpz_class> cs;
    for (const auto& c : j) cs.push_back(integer_from_json(c));
    if (static_cast<int>(cs.size()) > HeckeField::get(p).degree())
        throw ParseError("ring element has more coefficients than the field degree");
    return RingElem(p, std::move(cs));
}

FieldElem field_from_json(int p, const Json& j) {
    const mpz_class den = integer_from_json(field(j, "den"));
    if (den == 0) throw ParseError("zero denominator");
    return FieldElem(ring_from_json(p, field(j, "num")), den);
}

ExtElem ext_from_json(int p, const RingElem& D, const Json& j) {
    return ExtElem(field_from_json(p, field(j, "u")), field_from_json(p, field(j, "v")), D);
}

Surd surd_from_json(int p, const Json& j) {
    try {
        return Surd(ring_from_json(p, field(j, "P")), ring_from_json(p, field(j, "Q")), ring_from_json(p, field(j, "D")));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid surd: ") + e.what());
    }
}

GenWord word_from_json(const Json& j) {
    const int p = small_int(field(j, "p"), "p");
    const Json& letters = field(j, "letters");
    if (!letters.is_array()) throw ParseError("letters must be an array");
    std::vector<int> ls;
    for (const auto& l : letters) ls.push_back(small_int(l, "letter"));
    try {
        return GenWord::make(p, ls);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

RPF rpf_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("RPF must be a JSON object");
    const int p = small_int(field(j, "p"), "p");
    const int k = small_int(field(j, "k"), "k");
    if (p < 3) throw ParseError("p must be at least 3");
    if (k < 1) throw ParseError("k must be at least 1");
    const RingElem D = ring_from_json(p, field(j, "D"));
    RPF q = RPF::zero(p, k, D);

    const Json& terms = field(j, "pole_terms");
    if (!terms.is_array()) throw ParseError("pole_terms must be an array");
    for (const auto& t : terms) {
        PoleTerm pt{surd_from_json(p, field(t, "alpha")), small_int(field(t, "order"), "order"),
                    ext_from_json(p, D, field(t, "coeff"))};
        if (pt.order < 1 || pt.order > k) throw ParseError("pole order must lie in 1..k");
        if (pt.alpha.D() != D && !pt.coeff.in_base_field())
            throw ParseError("pole term coefficient uses a different discriminant");
        q.pole_terms.push_back(std::move(pt));
    }

    const Json& zero = field(j, "zero_part");
    q.a0 = ext_from_json(p, D, field(zero, "a0"));
    q.b1 = ext_from_json(p, D, field(zero, "b1"));
    if (k != 1 && !q.b1.is_zero()) throw ParseError("b1 must vanish unless k = 1");

    const Json& tail = field(j, "tail");
    if (!tail.is_array() || tail.size() != static_cast<std::size_t>(2 * k - 1))
        throw ParseError("tail must hold 2k - 1 coefficients");
    for (std::size_t i = 0; i < tail.size(); ++i) q.tail[i] = ext_from_json(p, D, tail[i]);
    return q;
}

}  // namespace hecke
