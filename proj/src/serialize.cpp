// Copyright 2026 The fractal-interior Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fractal/serialize.hpp"

#include <stdexcept>

namespace fractal {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j)
{
    if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

Json to_json(const MapDescriptor& m)
{
    switch (m.kind()) {
    case MapDescriptor::Kind::U: return Json{{"op", "U"}};
    case MapDescriptor::Kind::D0: return Json{{"op", "D0"}};
    case MapDescriptor::Kind::D:
        if (m.n().fits_ulong_p()) return Json{{"op", "D"}, {"k", m.k()}, {"n", m.n().get_ui()}};
        return Json{{"op", "D"}, {"k", m.k()}, {"n", m.n().get_str()}};
    }
    throw std::logic_error("unknown map kind");
}

MapDescriptor map_from_json(const Json& j)
{
    const std::string op = j.at("op").get<std::string>();
    if (op == "U") return MapDescriptor::up();
    if (op == "D0") return MapDescriptor::down();
    if (op == "D") {
        const Json& n = j.at("n");
        BigInt value = n.is_string() ? BigInt(n.get<std::string>(), 10) : BigInt(n.get<unsigned long>());
        return MapDescriptor::shifted(j.at("k").get<unsigned long>(), value);
    }
    throw std::invalid_argument("unknown map op '" + op + "'");
}

Json to_json(const Word& w)
{
    Json out = Json::array();
    for (const auto& m : w.maps) out.push_back(to_json(m));
    return out;
}

Word word_from_json(const Json& j)
{
    if (!j.is_array()) throw std::invalid_argument("word must be a JSON array");
    Word w;
    for (const auto& e : j) w.maps.push_back(map_from_json(e));
    return w;
}

Json to_json(const GreedyExpansion& e)
{
    Json digits = Json::array();
    for (const auto& d : e.digits) digits.push_back(to_json(d));
    return Json{{"x", to_json(e.x)}, {"digits", digits}, {"remainder", to_json(e.remainder())}};
}

Json to_json(const ANMembership& a)
{
    Json trace = Json::array();
    for (const auto& t : a.trace) trace.push_back(Json::array({t.n, t.zeros}));
    return Json{{"N", a.N}, {"horizon", a.horizon}, {"verdict", a.verdict}, {"firstFailure", a.first_failure},
                {"trace", trace}};
}

Json to_json(const FibreCertificate& c)
{
    Json windows = Json::array();
    for (const auto& w : c.windows)
        windows.push_back(Json{{"k", w.k}, {"targets", w.targets}, {"selection", w.selection}, {"available", w.available}});
    Json assignment = Json::array();
    for (const auto& a : c.assignment)
        assignment.push_back(Json{{"src", a.source}, {"dst", a.target}, {"digit", to_json(a.digit)}});
    return Json{{"y", to_json(c.y.y)},
                {"N", c.N},
                {"x", to_json(c.x)},
                {"windows", windows},
                {"assignment", assignment},
                {"finiteSupport", c.finite_support},
                {"residual", to_json(c.sparse.residual)},
                {"truncationBits", c.truncation_bits},
                {"digitCap", c.digit_cap ? Json(*c.digit_cap) : Json(nullptr)},
                {"verified", c.verified}};
}

Json to_json(const OpenInterval& i) { return Json::array({to_json(i.lo), to_json(i.hi)}); }

Json to_json(const GapCertificate& g)
{
    return Json{{"m", g.m},
                {"epsilon", to_json(g.epsilon)},
                {"delta", to_json(g.delta)},
                {"window", to_json(g.window)},
                {"outer", to_json(g.outer)},
                {"inner", to_json(g.inner)},
                {"width", to_json(g.width)}};
}

Json to_json(const InteriorWitness& w)
{
    Json word = Json::array();
    for (auto bit : w.word) word.push_back(static_cast<int>(bit));
    return Json{{"I", to_json(w.I)},
                {"J", to_json(w.J)},
                {"word", word},
                {"m", w.m},
                {"x", to_json(w.x)},
                {"r", to_json(w.r)},
                {"rectangle", Json{{"x", to_json(w.rectangle.x)}, {"y", to_json(w.rectangle.y)}}},
                {"gap", to_json(w.gap)}};
}

Json to_json(const MeasureCertificate& m)
{
    return Json{{"N", m.N},
                {"M", m.M},
                {"c", to_json(m.domination.c)},
                {"rho", to_json(m.domination.rho)},
                {"exactPart", to_json(m.exact_part)},
                {"tailBound", to_json(m.tail_bound)},
                {"anLower", to_json(m.an_lower)},
                {"areaLower", to_json(m.area_lower)},
                {"spotCheck", Json{{"from", m.spot_check_from}, {"to", m.spot_check_to}, {"ok", m.spot_check_ok}}},
                {"chernoffLemma", m.lemma_ok},
                {"transcript", m.transcript}};
}

Json to_json(const VerificationReport& r)
{
    return Json{{"ok", r.ok}, {"firstIndex", r.first_index}, {"failures", r.failures}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace fractal
