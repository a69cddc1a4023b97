// Copyright 2026 The Blemish Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "blemish/engine.hpp"

namespace blemish {

// Replacement noise. Numeric kinds draw from Normal((min+max)/2, (max-min)/6)
// clamped to the original column's [min, max]; categorical-int draws a
// discretized normal over the sorted distinct index space; categorical-string
// emits synthetic "noise_<j>" labels with half-normal j.
Contaminated noise_continuous(const Dataset& dataset, const ContaminationSpec& spec,
                              const ContaminationManifest& manifest);
Contaminated noise_discrete_int(const Dataset& dataset, const ContaminationSpec& spec,
                                const ContaminationManifest& manifest);
Contaminated noise_categorical_int(const Dataset& dataset, const ContaminationSpec& spec,
                                   const ContaminationManifest& manifest);
Contaminated noise_categorical_string(const Dataset& dataset, const ContaminationSpec& spec,
                                      const ContaminationManifest& manifest);
// Dispatches on the column kind; boolean and datetime columns are kDomain.
Contaminated add_noise(const Dataset& dataset, const ContaminationSpec& spec,
                       const ContaminationManifest& manifest);

// "noise_", extended with underscores until no domain value is the prefix
// followed by digits only.
std::string synthetic_label_prefix(const std::vector<Cell>& distinct);

}  // namespace blemish
