// Copyright 2026 The ptc Authors
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

#ifndef PTC_PTC_HPP
#define PTC_PTC_HPP

#include "ptc/audit.hpp"
#include "ptc/closed_forms.hpp"
#include "ptc/connectivity.hpp"
#include "ptc/constructions.hpp"
#include "ptc/corpus.hpp"
#include "ptc/enumerate.hpp"
#include "ptc/graph.hpp"
#include "ptc/io.hpp"
#include "ptc/isomorphism.hpp"
#include "ptc/kappa.hpp"
#include "ptc/mu.hpp"
#include "ptc/naive.hpp"
#include "ptc/pendant_tree.hpp"
#include "ptc/random.hpp"
#include "ptc/rational.hpp"
#include "ptc/report.hpp"
#include "ptc/search.hpp"
#include "ptc/tau.hpp"
#include "ptc/transforms.hpp"

#endif  // PTC_PTC_HPP
