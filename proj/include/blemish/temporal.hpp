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

Contaminated invert_boolean(const Dataset& dataset, const ContaminationSpec& spec,
                            const ContaminationManifest& manifest);

// Uniform non-zero delta in [-max, +max]. params.max_shift_days (default 30),
// or params.max_shift_seconds for second granularity on formats with time
// fields.
Contaminated datetime_shift(const Dataset& dataset, const ContaminationSpec& spec,
                            const ContaminationManifest& manifest);

// Re-renders cells in the alternate format, keeping the instant.
Contaminated datetime_misformat(const Dataset& dataset, const ContaminationSpec& spec,
                                const ContaminationManifest& manifest);

}  // namespace blemish
