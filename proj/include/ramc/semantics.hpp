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


#ifndef RAMC_SEMANTICS_HPP
#define RAMC_SEMANTICS_HPP

#include "ramc/program.hpp"
#include "ramc/trace.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace ramc {

/// A write event, or a read event paired with the write it reads from.
struct Observation {
	EventId event;
	std::optional<EventId> source; // set iff the observation is a read

	static Observation write(EventId e) { return {e, std::nullopt}; }
	static Observation read(EventId r, EventId src) { return {r, src}; }

	bool isWrite() const { return !source.has_value(); }
	bool isRead() const { return source.has_value(); }

	auto operator<=>(const Observation &) const = default;
};

using ObservationSequence = std::vector<Observation>;

/// Writes on x that a new read of `thread` may read from, sorted by id
/// (initializer first). Throws LookupError on an unknown variable.
std::vector<EventId> readable(const Trace &trace, ThreadId thread, VarId x);
/// The readable writes that reach `thread` through po ∪ rf.
std::vector<EventId> visible(const Trace &trace, ThreadId thread, VarId x);

/// Appends a write to `thread`; adds only the po edge.
EventId extendWrite(Trace &trace, ThreadId thread, VarId x, Value value);
/// Appends a read of x reading from `source` and orders every other visible
/// write before `source`. Throws NotReadableError unless `source` is readable.
EventId extendRead(Trace &trace, ThreadId thread, VarId x, EventId source);

/// One WriteObs per thread blocked on a write, one ReadObs per readable
/// source for each thread blocked on a read. Threads in ascending order.
std::vector<Observation> enabledObservations(const Configuration &config, const Trace &trace);

/// Whether `obs` is among enabledObservations(config, trace).
bool isEnabled(const Configuration &config, const Trace &trace, const Observation &obs);

/// Advances both the configuration and the trace by `obs`. Throws
/// InvariantError if `obs` is not enabled.
void step(Configuration &config, Trace &trace, const Observation &obs);

} // namespace ramc

#endif // RAMC_SEMANTICS_HPP
