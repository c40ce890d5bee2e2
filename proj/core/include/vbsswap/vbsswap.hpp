// Copyright 2026 The vbsswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "vbsswap/filter.hpp"
#include "vbsswap/outcome.hpp"
#include "vbsswap/random.hpp"
#include "vbsswap/swap_qubit.hpp"
#include "vbsswap/swap_qudit.hpp"
#include "vbsswap/tensor.hpp"
#include "vbsswap/vbs_oracle.hpp"
#include "vbsswap/version.hpp"
