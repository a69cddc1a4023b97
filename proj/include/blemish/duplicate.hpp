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

// Appends k exact copies of rows drawn uniformly with replacement. The
// fraction is taken against the original (pre-duplication) row count.
Contaminated duplicate_random(const Dataset& dataset, const ContaminationSpec& spec,
                              const ContaminationManifest& manifest);
// spec.column and params.value select the source rows; the fraction is taken
// against the matching subset.
Contaminated duplicate_targeted(const Dataset& dataset, const ContaminationSpec& spec,
                                const ContaminationManifest& manifest);
Contaminated duplicate_rows(const Dataset& dataset, const ContaminationSpec& spec,
                            const ContaminationManifest& manifest);

}  // namespace blemish
