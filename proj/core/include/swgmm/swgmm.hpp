// Copyright 2026 The swgmm Authors.
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

#include "swgmm/dataset.hpp"
#include "swgmm/datasets.hpp"
#include "swgmm/em.hpp"
#include "swgmm/errors.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/init.hpp"
#include "swgmm/io.hpp"
#include "swgmm/ot1d.hpp"
#include "swgmm/rng.hpp"
#include "swgmm/slicing.hpp"
#include "swgmm/swm.hpp"
#include "swgmm/trace.hpp"
