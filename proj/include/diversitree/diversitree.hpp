// Copyright 2026 The DiversiTree Authors
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

#ifndef DIVERSITREE_DIVERSITREE_HPP_
#define DIVERSITREE_DIVERSITREE_HPP_

#include "diversitree/diversity.hpp"
#include "diversitree/engine.hpp"
#include "diversitree/error.hpp"
#include "diversitree/generators.hpp"
#include "diversitree/harness.hpp"
#include "diversitree/json_io.hpp"
#include "diversitree/model.hpp"
#include "diversitree/mps.hpp"
#include "diversitree/selectors.hpp"
#include "diversitree/simplex.hpp"
#include "diversitree/subset.hpp"

#endif  // DIVERSITREE_DIVERSITREE_HPP_
