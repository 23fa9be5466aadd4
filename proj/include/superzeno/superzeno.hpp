// Copyright 2026 The superzeno authors
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

#include "superzeno/analysis.hpp"
#include "superzeno/cli_config.hpp"
#include "superzeno/evolve.hpp"
#include "superzeno/format.hpp"
#include "superzeno/hamiltonian.hpp"
#include "superzeno/matrix.hpp"
#include "superzeno/parallel.hpp"
#include "superzeno/report.hpp"
#include "superzeno/search.hpp"
#include "superzeno/sequences.hpp"
#include "superzeno/series.hpp"
#include "superzeno/subspace.hpp"
#include "superzeno/version.hpp"
