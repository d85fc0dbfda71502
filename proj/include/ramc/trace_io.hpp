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


#ifndef RAMC_TRACE_IO_HPP
#define RAMC_TRACE_IO_HPP

#include "ramc/trace.hpp"

#include <string>
#include <string_view>

namespace ramc {

/// "t<k>.<i>" with 1-based thread numbers, or "init.<var>".
std::string formatEventId(const Trace &trace, EventId id);
/// Inverse of formatEventId. Throws FormatError.
EventId parseEventId(const Trace &trace, std::string_view text);

/*
 * JSON trace format:
 *   {"vars": [...], "events": [{"thread": 1 | "init", "index": i,
 *    "kind": "W" | "R", "var": "x", "value": v}, ...],
 *   "rf": [["t1.1", "t2.1"], ...], "co": [["init.x", "t1.1"], ...]}
 *
 * "vars" is optional on input; initializer entries may be omitted. Stored
 * co edges are exported as-is (the implicit initializer edges are not).
 */
std::string toJson(const Trace &trace, int indent = 2);
Trace traceFromJson(std::string_view text); // throws FormatError

/// Graphviz rendering: po solid, rf dashed, co dotted.
std::string toDot(const Trace &trace, std::string_view name = "trace");

} // namespace ramc

#endif // RAMC_TRACE_IO_HPP
