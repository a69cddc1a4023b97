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

#include "blemish/engine.hpp"

namespace blemish {

// spec.column names the label column; the manifest scope is the dataset.
Contaminated flip_binary(const Dataset& dataset, const ContaminationSpec& spec,
                         const ContaminationManifest& manifest);
// Uniform over the other existing classes.
Contaminated flip_multiclass(const Dataset& dataset, const ContaminationSpec& spec,
                             const ContaminationManifest& manifest);
// params.strategy: "auto" (default), "binary" or "multiclass".
Contaminated flip_labels(const Dataset& dataset, const ContaminationSpec& spec,
                         const ContaminationManifest& manifest);

}  // namespace blemish
