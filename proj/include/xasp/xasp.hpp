/*
 * Copyright 2026 The xasp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Convenience umbrella for the whole library.

#pragma once

#include "xasp/aspif.hpp"
#include "xasp/assumption.hpp"
#include "xasp/atomset.hpp"
#include "xasp/digraph.hpp"
#include "xasp/errors.hpp"
#include "xasp/explanation.hpp"
#include "xasp/graphdoc.hpp"
#include "xasp/parse.hpp"
#include "xasp/program.hpp"
#include "xasp/solver.hpp"
#include "xasp/support.hpp"
#include "xasp/traverse.hpp"
