/*
   Copyright 2026 The cyclotome Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>

#include "json.hpp"

#include "cyclotome/codes.hpp"
#include "cyclotome/corpus.hpp"
#include "cyclotome/cyclotomy.hpp"
#include "cyclotome/weights.hpp"

namespace cyclotome {

using Json = nlohmann::json;

Json to_json(const CodeSpec& spec);
CodeSpec spec_from_json(const Json& j);

/// {"n", "k", "d", "weights": [{"w", "count"}]}; counts are decimal strings.
Json to_json(const WeightDistribution& dist);
WeightDistribution distribution_from_json(const Json& j);

Json to_json(const CaseClassification& cls);
Json to_json(const AssumptionReport& rep);
Json to_json(const ClosedFormPeriods& cf);
Json to_json(const GaussianPeriodSet& set);

Json params_document(const CyclicCode& code);
Json periods_document(const FieldTower& F, const GaussianPeriodSet& exact, const std::optional<ClosedFormPeriods>& closed);
Json weights_document(const CyclicCode& code, const CaseClassification& cls, const WeightDistribution& dist,
                      const std::string& method, bool methods_agreed);
Json verification_document(const CyclicCode& code, const VerificationReport& rep);
Json corpus_document(const std::vector<CorpusResult>& results);

/// Compact single-line form with sorted keys.
std::string dump(const Json& j);

}  // namespace cyclotome
