// Copyright 2026 The treelike Authors.
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

// Umbrella header.

#pragma once

#include "treelike/budget.hpp"
#include "treelike/campaigns.hpp"
#include "treelike/catalog.hpp"
#include "treelike/chordality.hpp"
#include "treelike/classify.hpp"
#include "treelike/constructions.hpp"
#include "treelike/distance.hpp"
#include "treelike/embedding.hpp"
#include "treelike/errors.hpp"
#include "treelike/generators.hpp"
#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"
#include "treelike/hyperbolicity.hpp"
#include "treelike/io.hpp"
#include "treelike/quadrangle.hpp"
#include "treelike/random.hpp"
#include "treelike/treelength.hpp"
#include "treelike/vertex_set.hpp"
