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


#ifndef RAMC_TRACE_OPS_HPP
#define RAMC_TRACE_OPS_HPP

#include "ramc/trace.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ramc {

/// Canonical text of a trace's events, po and rf. Equal keys mean equal
/// weak traces.
struct WeakTraceKey {
	std::string text;

	auto operator<=>(const WeakTraceKey &) const = default;
};

WeakTraceKey weaken(const Trace &trace);

/// Whether co^x is a strict total order on the writes of x for every x.
bool isTotal(const Trace &trace);

/// fr^x = (rf^x)^-1 ; co^x as (read, write) pairs, sorted.
std::vector<EventPair> derivedFr(const Trace &trace, VarId x);

} // namespace ramc

template <>
struct std::hash<ramc::WeakTraceKey> {
	std::size_t operator()(const ramc::WeakTraceKey &k) const noexcept
	{
		return std::hash<std::string>{}(k.text);
	}
};

#endif // RAMC_TRACE_OPS_HPP
