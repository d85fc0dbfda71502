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


#ifndef RAMC_DPOR_HPP
#define RAMC_DPOR_HPP

#include "ramc/program.hpp"
#include "ramc/semantics.hpp"
#include "ramc/trace.hpp"
#include "ramc/trace_ops.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace ramc {

/// Observations replayed to let a read take its value from a postponed
/// write. The last two entries are WriteObs(e) and ReadObs(e', e).
struct Schedule {
	ObservationSequence observations;

	bool operator==(const Schedule &) const = default;
};

/// Equal as sets of observations.
bool schedulesEquivalent(const Schedule &a, const Schedule &b);

/// Schedules collected for one read event.
struct ReadBookkeeping {
	std::vector<Schedule> scheduled;
	std::set<ObservationSequence> canonical; // sorted observation lists
};

/// One step of the current exploration path. `book` is null for writes and
/// for reads that are not swappable (reads replayed from a schedule).
struct PathEntry {
	Observation obs;
	ReadBookkeeping *book = nullptr;
};

using ExplorationPath = std::vector<PathEntry>;

enum class PostponeStrategy {
	ClosestRead, // stop at the nearest matching read
	AllReads,    // schedule every matching read
};

struct ExplorerOptions {
	PostponeStrategy strategy = PostponeStrategy::ClosestRead;
	/// Also look for postponed writes among writes replayed from a schedule.
	bool declareDuringReplay = true;
	/// Check saturation, RA and cache consistency after every step.
	bool debugInvariants = false;
};

struct ExplorationStats {
	std::uint64_t terminalTraces = 0;
	std::set<WeakTraceKey> weakKeys;
	std::uint64_t duplicateTraces = 0;
	std::uint64_t schedulesCreated = 0;
	std::uint64_t schedulesDeduplicated = 0;
	std::uint64_t eventsExecuted = 0;
	std::size_t longestSchedule = 0;
	/// Exists: some terminal state satisfies the final condition. Forall:
	/// every one does. Empty without a final condition.
	std::optional<bool> assertionOutcome;
};

struct TerminalState {
	const Configuration &config;
	const Trace &trace;
	const WeakTraceKey &key;
	bool finalHolds;
	bool duplicate;
};

using Reporter = std::function<void(const TerminalState &)>;

/*
 * Depth-first exploration of the weak traces of a program under the
 * saturated semantics. Writes run before reads (lowest thread first); a read
 * branches over its readable sources and then replays the schedules that
 * later writes declared for it.
 */
class Explorer {
public:
	explicit Explorer(ExplorerOptions options = {}, Reporter reporter = {});

	/// Explores every weak trace reachable from (config, trace, path).
	void explore(const Configuration &config, const Trace &trace, ExplorationPath &path);

	/// `path` ends with the write e. Adds a schedule to the closest swappable
	/// read on e's variable that does not precede e in (po ∪ rf)+.
	void declarePostponed(const Trace &trace, const ExplorationPath &path);

	/// Replays `schedule` from (config, trace, path), then explores.
	void runSchedule(const Configuration &config, const Trace &trace, ExplorationPath &path,
			 const Schedule &schedule);

	const ExplorationStats &stats() const { return stats_; }
	ExplorationStats takeStats() { return std::move(stats_); }

private:
	void replayFrom(const Configuration &config, const Trace &trace, ExplorationPath &path,
			const Schedule &schedule, std::size_t next);
	void onTerminal(const Configuration &config, const Trace &trace);
	void checkInvariants(const Trace &trace) const;
	void addSchedule(ReadBookkeeping &book, Schedule schedule);

	ExplorerOptions options_;
	Reporter reporter_;
	ExplorationStats stats_;
};

/// Explores `program` from its initial configuration and the empty trace.
ExplorationStats exploreProgram(std::shared_ptr<const Program> program,
				const ExplorerOptions &options = {}, const Reporter &reporter = {});

} // namespace ramc

#endif // RAMC_DPOR_HPP
