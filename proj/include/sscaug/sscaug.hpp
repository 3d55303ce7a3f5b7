// Copyright 2026 The sscaug Authors
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

#include "sscaug/augment_distance.hpp"
#include "sscaug/augment_result.hpp"
#include "sscaug/bench.hpp"
#include "sscaug/dist.hpp"
#include "sscaug/errors.hpp"
#include "sscaug/graph.hpp"
#include "sscaug/graph_io.hpp"
#include "sscaug/leaders.hpp"
#include "sscaug/pmi.hpp"
#include "sscaug/rng.hpp"
#include "sscaug/ssc_oracle.hpp"
#include "sscaug/zero_forcing.hpp"
