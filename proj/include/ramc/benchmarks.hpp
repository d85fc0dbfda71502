// Copyright 2026 The ramc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef RAMC_BENCHMARKS_HPP
#define RAMC_BENCHMARKS_HPP

#include "ramc/program.hpp"

#include <cstdint>
#include <string>

namespace ramc {

/// N writer threads w<i> storing i to x, then a thread `reader` reading x
/// once. N+1 weak traces.
Program nWritersProgram(std::uint32_t n);

/// Two threads storing 1 to x N times each and a third reading x twice.
/// 3N²+3N+1 weak traces.
Program redundantCoProgram(std::uint32_t n);

std::uint64_t nWritersExpected(std::uint32_t n);
std::uint64_t redundantCoExpected(std::uint32_t n);

} // namespace ramc

#endif // RAMC_BENCHMARKS_HPP
