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


#include "ramc/semantics.hpp"

#include "ramc/errors.hpp"

#include <algorithm>

namespace ramc {

namespace {

// reachesThread[n]: node n is [po ∪ rf]* before some event of `thread`.
std::vector<bool> reachesThread(const Trace &trace, ThreadId thread)
{
	std::vector<bool> out(trace.size(), false);
	if (trace.threadSize(thread) == 0)
		return out;
	const auto last = trace.node(EventId::of(thread, trace.threadSize(thread)));
	for (Trace::NodeId n = 0; n < trace.size(); ++n)
		out[n] = n == last || trace.reachesPoRfNode(n, last);
	return out;
}

void checkArgs(const Trace &trace, VarId x)
{
	if (x >= trace.varCount())
		throw LookupError("unknown variable #" + std::to_string(x));
}

std::vector<EventId> readableWith(const Trace &trace, VarId x, const std::vector<bool> &reach)
{
	std::vector<EventId> out;
	const auto ws = trace.writes(x);
	std::vector<Trace::NodeId> nodes;
	for (auto w : ws)
		nodes.push_back(trace.node(w));
	for (std::size_t i = 0; i < ws.size(); ++i) {
		bool hidden = false;
		for (std::size_t j = 0; j < ws.size() && !hidden; ++j)
			hidden = reach[nodes[j]] && trace.reachesNode(nodes[i], nodes[j], x);
		if (!hidden)
			out.push_back(ws[i]);
	}
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace

std::vector<EventId> readable(const Trace &trace, ThreadId thread, VarId x)
{
	checkArgs(trace, x);
	return readableWith(trace, x, reachesThread(trace, thread));
}

std::vector<EventId> visible(const Trace &trace, ThreadId thread, VarId x)
{
	checkArgs(trace, x);
	const auto reach = reachesThread(trace, thread);
	auto out = readableWith(trace, x, reach);
	std::erase_if(out, [&](EventId e) { return !reach[trace.node(e)]; });
	return out;
}

EventId extendWrite(Trace &trace, ThreadId thread, VarId x, Value value)
{
	return trace.appendWrite(thread, x, value);
}

EventId extendRead(Trace &trace, ThreadId thread, VarId x, EventId source)
{
	checkArgs(trace, x);
	const auto reach = reachesThread(trace, thread);
	const auto candidates = readableWith(trace, x, reach);
	if (!std::binary_search(candidates.begin(), candidates.end(), source))
		throw NotReadableError("write is not readable by thread " + std::to_string(thread + 1));

	std::vector<EventPair> edges;
	for (auto v : candidates)
		if (v != source && !v.isInit() && reach[trace.node(v)])
			edges.emplace_back(v, source);
	auto id = trace.appendRead(thread, x, source);
	trace.addCoEdges(edges);
	return id;
}

std::vector<Observation> enabledObservations(const Configuration &config, const Trace &trace)
{
	std::vector<Observation> out;
	for (std::uint32_t t = 0; t < config.threadCount(); ++t) {
		auto g = config.nextGlobal(t);
		if (!g)
			continue;
		const auto id = EventId::of(t, trace.threadSize(t) + 1);
		if (g->isWrite) {
			out.push_back(Observation::write(id));
			continue;
		}
		for (auto src : readable(trace, t, g->var))
			out.push_back(Observation::read(id, src));
	}
	return out;
}

bool isEnabled(const Configuration &config, const Trace &trace, const Observation &obs)
{
	if (obs.event.isInit() || obs.event.threadId() >= config.threadCount())
		return false;
	const auto t = obs.event.threadId();
	auto g = config.nextGlobal(t);
	if (!g || obs.event.index != trace.threadSize(t) + 1 || g->isWrite != obs.isWrite())
		return false;
	if (obs.isWrite())
		return true;
	if (!trace.contains(*obs.source))
		return false;
	auto candidates = readable(trace, t, g->var);
	return std::binary_search(candidates.begin(), candidates.end(), *obs.source);
}

void step(Configuration &config, Trace &trace, const Observation &obs)
{
	if (!isEnabled(config, trace, obs))
		throw InvariantError("observation is not enabled");
	const auto t = obs.event.threadId();
	const auto g = *config.nextGlobal(t);
	if (obs.isWrite()) {
		extendWrite(trace, t, g.var, g.value);
		config.applyWrite(t);
	} else {
		extendRead(trace, t, g.var, *obs.source);
		config.applyRead(t, trace.event(*obs.source).value);
	}
}

} // namespace ramc
