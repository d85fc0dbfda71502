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


#include "ramc/dpor.hpp"

#include "ramc/errors.hpp"
#include "ramc/ra_checker.hpp"
#include "ramc/trace_io.hpp"

#include <algorithm>

namespace ramc {

namespace {

ObservationSequence canonical(const Schedule &s)
{
	auto obs = s.observations;
	std::sort(obs.begin(), obs.end());
	return obs;
}

std::string describe(const Trace &trace, const Observation &obs)
{
	auto text = formatEventId(trace, obs.event);
	if (obs.isRead())
		text += "<-" + (trace.contains(*obs.source) ? formatEventId(trace, *obs.source) : "?");
	return text;
}

} // namespace

bool schedulesEquivalent(const Schedule &a, const Schedule &b) { return canonical(a) == canonical(b); }

Explorer::Explorer(ExplorerOptions options, Reporter reporter)
	: options_(options), reporter_(std::move(reporter))
{}

void Explorer::checkInvariants(const Trace &trace) const
{
	trace.verify();
	if (!isSaturated(trace))
		throw InvariantError("explored trace is not saturated:\n" + toJson(trace));
	if (auto v = satisfiesRa(trace); !v.consistent)
		throw InvariantError("explored trace violates RA:\n" + toJson(trace));
}

void Explorer::onTerminal(const Configuration &config, const Trace &trace)
{
	if (options_.debugInvariants)
		checkInvariants(trace);
	auto key = weaken(trace);
	const bool duplicate = !stats_.weakKeys.insert(key).second;
	++stats_.terminalTraces;
	if (duplicate)
		++stats_.duplicateTraces;

	const auto &program = config.program();
	const bool holds = evalFinalCondition(config, program);
	if (program.final) {
		const bool exists = program.final->mode == FinalCondition::Mode::Exists;
		if (!stats_.assertionOutcome)
			stats_.assertionOutcome = !exists;
		*stats_.assertionOutcome = exists ? (*stats_.assertionOutcome || holds)
						  : (*stats_.assertionOutcome && holds);
	}
	if (reporter_)
		reporter_(TerminalState{config, trace, key, holds, duplicate});
}

void Explorer::explore(const Configuration &config, const Trace &trace, ExplorationPath &path)
{
	if (config.isTerminal()) {
		onTerminal(config, trace);
		return;
	}

	std::optional<PendingGlobal> chosen;
	for (std::uint32_t t = 0; t < config.threadCount() && !chosen; ++t)
		if (auto g = config.nextGlobal(t); g && g->isWrite)
			chosen = g;
	for (std::uint32_t t = 0; t < config.threadCount() && !chosen; ++t)
		if (auto g = config.nextGlobal(t))
			chosen = g;

	const auto t = chosen->thread;
	const auto id = EventId::of(t, trace.threadSize(t) + 1);

	if (chosen->isWrite) {
		auto c = config;
		auto tr = trace;
		const auto obs = Observation::write(id);
		step(c, tr, obs);
		++stats_.eventsExecuted;
		if (options_.debugInvariants)
			checkInvariants(tr);
		path.push_back({obs, nullptr});
		explore(c, tr, path);
		declarePostponed(tr, path);
		path.pop_back();
		return;
	}

	const auto sources = readable(trace, t, chosen->var);
	if (sources.empty())
		throw InvariantError("no readable write for " + formatEventId(trace, id));

	ReadBookkeeping book;
	for (auto src : sources) {
		auto c = config;
		auto tr = trace;
		const auto obs = Observation::read(id, src);
		step(c, tr, obs);
		++stats_.eventsExecuted;
		if (options_.debugInvariants)
			checkInvariants(tr);
		path.push_back({obs, &book});
		explore(c, tr, path);
		path.pop_back();
	}
	// Replays may append further schedules to `book`; iterate by index.
	for (std::size_t i = 0; i < book.scheduled.size(); ++i) {
		const Schedule s = book.scheduled[i];
		runSchedule(config, trace, path, s);
	}
}

void Explorer::addSchedule(ReadBookkeeping &book, Schedule schedule)
{
	stats_.longestSchedule = std::max(stats_.longestSchedule, schedule.observations.size());
	if (!book.canonical.insert(canonical(schedule)).second) {
		++stats_.schedulesDeduplicated;
		return;
	}
	++stats_.schedulesCreated;
	book.scheduled.push_back(std::move(schedule));
}

void Explorer::declarePostponed(const Trace &trace, const ExplorationPath &path)
{
	if (path.empty() || !path.back().obs.isWrite())
		throw InvariantError("declarePostponed expects a path ending in a write");
	const auto e = path.back().obs.event;
	const auto x = trace.event(e).var;

	for (std::size_t k = path.size() - 1; k-- > 0;) {
		const auto &cand = path[k];
		if (!cand.obs.isRead() || cand.book == nullptr)
			continue;
		if (trace.event(cand.obs.event).var != x || trace.reachesPoRf(cand.obs.event, e))
			continue;

		Schedule s;
		for (std::size_t j = k + 1; j + 1 < path.size(); ++j)
			if (trace.reachesPoRf(path[j].obs.event, e))
				s.observations.push_back(path[j].obs);
		s.observations.push_back(Observation::write(e));
		s.observations.push_back(Observation::read(cand.obs.event, e));
		addSchedule(*cand.book, std::move(s));

		if (options_.strategy == PostponeStrategy::ClosestRead)
			break;
	}
}

void Explorer::runSchedule(const Configuration &config, const Trace &trace, ExplorationPath &path,
			   const Schedule &schedule)
{
	replayFrom(config, trace, path, schedule, 0);
}

void Explorer::replayFrom(const Configuration &config, const Trace &trace, ExplorationPath &path,
			  const Schedule &schedule, std::size_t next)
{
	if (next == schedule.observations.size()) {
		explore(config, trace, path);
		return;
	}
	const auto &obs = schedule.observations[next];
	if (!isEnabled(config, trace, obs))
		throw InvariantError("scheduled observation " + describe(trace, obs) +
				     " is not enabled in:\n" + toJson(trace));
	auto c = config;
	auto tr = trace;
	step(c, tr, obs);
	++stats_.eventsExecuted;
	if (options_.debugInvariants)
		checkInvariants(tr);
	path.push_back({obs, nullptr});
	replayFrom(c, tr, path, schedule, next + 1);
	if (obs.isWrite() && options_.declareDuringReplay)
		declarePostponed(tr, path);
	path.pop_back();
}

ExplorationStats exploreProgram(std::shared_ptr<const Program> program, const ExplorerOptions &options,
				const Reporter &reporter)
{
	auto config = Configuration::initial(program);
	auto trace = Trace::empty(program->vars);
	Explorer explorer(options, reporter);
	ExplorationPath path;
	explorer.explore(config, trace, path);
	return explorer.takeStats();
}

} // namespace ramc
