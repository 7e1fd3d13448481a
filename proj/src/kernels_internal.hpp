// Copyright 2026 The prasym Authors.
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

#include "prasym/kernels.hpp"

namespace prasym::kernels::detail {

// Defined in kernels_avx2.cpp, which is compiled with -mavx2 -mfma. Only
// call after a CPUID check.
const KernelTable& avx2_table_unchecked();

}  // namespace prasym::kernels::detail
