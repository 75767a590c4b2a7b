/*
 *  Copyright (C) 2026  The paraseq authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#pragma once

#include "paraseq/core/parse.hpp"
#include "paraseq/core/program.hpp"
#include "paraseq/core/serialize.hpp"
#include "paraseq/core/signature.hpp"
#include "paraseq/graph/dependency_graph.hpp"
#include "paraseq/semantics/paracoherent.hpp"
#include "paraseq/solver/reference.hpp"
#include "paraseq/transform/epistemic.hpp"
#include "paraseq/transform/modular.hpp"
#include "paraseq/transform/split.hpp"
