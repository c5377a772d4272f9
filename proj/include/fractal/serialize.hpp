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

#pragma once

// JSON forms of the library's certificates. Rationals are always the
// canonical string "p/q"; key order is fixed so output is byte-stable.

#include "fractal/expansion.hpp"
#include "fractal/fibre.hpp"
#include "fractal/ifs.hpp"
#include "fractal/interior.hpp"
#include "fractal/measure.hpp"

#include "json.hpp"

namespace fractal {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const MapDescriptor& m);
MapDescriptor map_from_json(const Json& j);
Json to_json(const Word& w);
Word word_from_json(const Json& j);

Json to_json(const GreedyExpansion& e);
Json to_json(const ANMembership& a);
Json to_json(const FibreCertificate& c);
Json to_json(const OpenInterval& i);
Json to_json(const GapCertificate& g);
Json to_json(const InteriorWitness& w);
Json to_json(const MeasureCertificate& m);
Json to_json(const VerificationReport& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

} // namespace fractal
