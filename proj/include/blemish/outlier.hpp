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

inline constexpr const char* kOutlierLabel = "Puck was here";

// v = mean + s * (3 + u) * sigma, s a fair sign, u in (0, 1], using the
// original column's mean and population sigma.
Contaminated outlier_continuous(const Dataset& dataset, const ContaminationSpec& spec,
                                const ContaminationManifest& manifest);
// As above, rounded outward (ceil above the mean, floor below).
Contaminated outlier_int(const Dataset& dataset, const ContaminationSpec& spec,
                         const ContaminationManifest& manifest);
// The literal "Puck was here", suffixed when the domain already has it.
Contaminated outlier_categorical_string(const Dataset& dataset, const ContaminationSpec& spec,
                                        const ContaminationManifest& manifest);
// max(distinct) + 1.
Contaminated outlier_categorical_int(const Dataset& dataset, const ContaminationSpec& spec,
                                     const ContaminationManifest& manifest);
Contaminated add_outliers(const Dataset& dataset, const ContaminationSpec& spec,
                          const ContaminationManifest& manifest);

std::string outlier_label_for(const std::vector<Cell>& distinct);

}  // namespace blemish
