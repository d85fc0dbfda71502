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


#ifndef RAMC_ORACLE_HPP
#define RAMC_ORACLE_HPP

#include "ramc/dpor.hpp"
#include "ramc/program.hpp"
#include "ramc/trace.hpp"
#include "ramc/trace_ops.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ramc {

/*
 * Reference enumeration that shares no code with the saturated semantics or
 * the RA checker: it builds total traces directly (each new write is placed
 * at every coherence position, each read takes any existing write) and
 * discards those with a cycle in po ∪ rf ∪ co^x ∪ fr^x.
 */

struct OracleLimits {
	std::size_t maxEvents = 14;         // non-initializer events per run
	std::size_t maxWritesPerVar = 6;    // non-initializer writes per variable
};

struct ReferenceResult {
	std::uint64_t totalTraces = 0;
	std::set<WeakTraceKey> weakKeys;
};

/// Throws CapacityError when a run exceeds `limits`.
ReferenceResult enumerateTotalTraces(const std::shared_ptr<const Program> &program,
				     const OracleLimits &limits = {});

/// Second, independent route: enumerate weak traces without consistency
/// pruning, then count the RA-satisfying coherence permutations of each.
ReferenceResult enumerateByPermutation(const std::shared_ptr<const Program> &program,
				       const OracleLimits &limits = {});

/// Whether some total coherence order containing the trace's co satisfies
/// RA. Throws CapacityError if a variable has more than `maxWrites` writes.
bool checkConsistencyBruteforce(const Trace &trace, std::size_t maxWrites = 8);

/// The coherence edges (a, b) between distinct non-initializer writes that
/// hold in every RA-satisfying total extension of `trace`.
std::set<EventPair> mandatoryCoherence(const Trace &trace, std::size_t maxWrites = 8);

struct FuzzSpec {
	std::uint32_t threads = 3;
	std::uint32_t variables = 2;
	std::uint32_t statementsPerThread = 5; // non-label statements
	Value maxWriteValue = 3;               // values drawn from 1..max
	double conditionalProbability = 0.15;
	std::uint64_t seed = 0;
};

/// Deterministic in `spec`. Loop-free; every thread has 1..statementsPerThread
/// statements; the program contains at least one write.
Program generateProgram(const FuzzSpec &spec);

struct DifferentialReport {
	bool match = false;
	std::uint64_t dporTraces = 0;
	std::uint64_t dporDuplicates = 0;
	std::uint64_t oracleTotalTraces = 0;
	std::set<WeakTraceKey> dporKeys;
	std::set<WeakTraceKey> oracleKeys;
	std::vector<WeakTraceKey> onlyDpor;
	std::vector<WeakTraceKey> onlyOracle;
};

DifferentialReport differentialCheck(const std::shared_ptr<const Program> &program,
				     const ExplorerOptions &options = {},
				     const OracleLimits &limits = {});

} // namespace ramc

#endif // RAMC_ORACLE_HPP
