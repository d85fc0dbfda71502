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


#ifndef RAMC_RA_CHECKER_HPP
#define RAMC_RA_CHECKER_HPP

#include "ramc/trace.hpp"

#include <optional>
#include <vector>

namespace ramc {

struct ConsistencyVerdict {
	bool consistent = true;
	/// A cycle in po ∪ rf ∪ co^x ∪ fr^x, listed in edge order; the last event
	/// has an edge back to the first. Empty when consistent.
	std::vector<EventId> witnessCycle;
	std::optional<VarId> variable;

	explicit operator bool() const { return consistent; }
};

/// Acyclicity of po ∪ rf ∪ co^x ∪ fr^x for every variable x.
ConsistencyVerdict satisfiesRa(const Trace &trace);

bool isSaturated(const Trace &trace);

/// Least extension of co that makes the trace saturated.
Trace saturate(Trace trace);

/// satisfiesRa(saturate(trace)): whether some total extension satisfies RA.
ConsistencyVerdict isRaConsistent(const Trace &trace);

/// Copy of `trace` with (e1, e2) added to co. Throws DomainError.
Trace addCoEdge(Trace trace, EventId e1, EventId e2);

/// Whether, for every x, po ∪ rf ∪ co^x ∪ fr^x is acyclic exactly when
/// po ∪ rf ∪ co^x is.
bool checkFrAbstract(const Trace &trace);

} // namespace ramc

#endif // RAMC_RA_CHECKER_HPP
