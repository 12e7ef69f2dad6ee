// Copyright 2026 The Authors.
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

// Everything at once.

#include "predimlab/amalgam.hpp"
#include "predimlab/canonical.hpp"
#include "predimlab/classes.hpp"
#include "predimlab/closure.hpp"
#include "predimlab/constructions.hpp"
#include "predimlab/control_function.hpp"
#include "predimlab/errors.hpp"
#include "predimlab/gadget.hpp"
#include "predimlab/generic_builder.hpp"
#include "predimlab/independence.hpp"
#include "predimlab/io.hpp"
#include "predimlab/limits.hpp"
#include "predimlab/predimension.hpp"
#include "predimlab/replay.hpp"
#include "predimlab/report.hpp"
#include "predimlab/sa_extensions.hpp"
#include "predimlab/structure.hpp"
#include "predimlab/suites.hpp"
#include "predimlab/vertex_set.hpp"
