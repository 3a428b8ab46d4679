// Copyright 2026 The harary-closeness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "harary/closed_forms.hpp"
#include "harary/closeness.hpp"
#include "harary/distance.hpp"
#include "harary/error.hpp"
#include "harary/export.hpp"
#include "harary/formula_result.hpp"
#include "harary/graph.hpp"
#include "harary/parallel.hpp"
#include "harary/report.hpp"
#include "harary/verifier.hpp"
