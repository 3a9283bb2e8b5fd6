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

#include "flames/digraph.hpp"
#include "flames/errors.hpp"
#include "flames/flame.hpp"
#include "flames/flow.hpp"
#include "flames/gammoid.hpp"
#include "flames/greedoid.hpp"
#include "flames/oracle.hpp"
#include "flames/rational.hpp"
