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


#include "ramc/ra_checker.hpp"

#include "ramc/trace_ops.hpp"

#include <algorithm>

namespace ramc {

namespace {

using Adjacency = std::vector<std::vector<Trace::NodeId>>;

// Explicit edges of po ∪ rf ∪ co^x, optionally with fr^x.
Adjacency edgesFor(const Trace &trace, VarId x, bool withFr)
{
	Adjacency adj(trace.size());
	for (ThreadId t = 0; t < trace.threadCount(); ++t) {
		auto ids = trace.threadEvents(t);
		for (std::size_t i = 1; i < ids.size(); ++i)
			adj[trace.node(ids[i - 1])].push_back(trace.node(ids[i]));
	}
	for (auto [w, r] : trace.rfEdges())
		adj[trace.node(w)].push_back(trace.node(r));

	const auto ws = trace.writes(x);
	const auto init = trace.node(EventId::init(x));
	for (auto w : ws)
		if (!w.isInit())
			adj[init].push_back(trace.node(w));
	for (auto [a, b] : trace.coEdges(x))
		adj[trace.node(a)].push_back(trace.node(b));
	if (withFr)
		for (auto [r, w] : derivedFr(trace, x))
			adj[trace.node(r)].push_back(trace.node(w));
	for (auto &succ : adj) {
		std::sort(succ.begin(), succ.end());
		succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
	}
	return adj;
}

// Iterative DFS; returns the first cycle closed by a back edge.
std::vector<Trace::NodeId> findCycle(const Adjacency &adj)
{
	enum : std::uint8_t { White, Grey, Black };
	std::vector<std::uint8_t> colour(adj.size(), White);
	std::vector<std::pair<Trace::NodeId, std::size_t>> stack;

	for (Trace::NodeId root = 0; root < adj.size(); ++root) {
		if (colour[root] != White)
			continue;
		stack.emplace_back(root, 0);
		colour[root] = Grey;
		while (!stack.empty()) {
			auto &[n, next] = stack.back();
			if (next == adj[n].size()) {
				colour[n] = Black;
				stack.pop_back();
				continue;
			}
			const auto m = adj[n][next++];
			if (colour[m] == Grey) {
				std::vector<Trace::NodeId> cycle;
				auto it = std::find_if(stack.begin(), stack.end(),
						       [m](const auto &f) { return f.first == m; });
				for (; it != stack.end(); ++it)
					cycle.push_back(it->first);
				return cycle;
			}
			if (colour[m] == White) {
				colour[m] = Grey;
				stack.emplace_back(m, 0);
			}
		}
	}
	return {};
}

bool acyclic(const Trace &trace, VarId x, bool withFr)
{
	return findCycle(edgesFor(trace, x, withFr)).empty();
}

// Edges (e, w) that saturation requires but the trace does not yet imply.
std::vector<EventPair> missingEdges(const Trace &trace)
{
	std::vector<EventPair> out;
	for (VarId x = 0; x < trace.varCount(); ++x) {
		const auto ws = trace.writes(x);
		for (auto r : trace.reads(x)) {
			auto src = trace.readSource(r);
			if (!src)
				continue;
			const auto rn = trace.node(r);
			const auto sn = trace.node(*src);
			for (auto e : ws) {
				if (e == *src)
					continue;
				const auto en = trace.node(e);
				if (trace.reachesNode(en, rn, x) && !trace.reachesNode(en, sn, x))
					out.emplace_back(e, *src);
			}
		}
	}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

} // namespace

ConsistencyVerdict satisfiesRa(const Trace &trace)
{
	for (VarId x = 0; x < trace.varCount(); ++x) {
		auto cycle = findCycle(edgesFor(trace, x, true));
		if (cycle.empty())
			continue;
		ConsistencyVerdict v;
		v.consistent = false;
		v.variable = x;
		const auto events = trace.events();
		for (auto n : cycle)
			v.witnessCycle.push_back(events[n].id);
		return v;
	}
	return {};
}

bool isSaturated(const Trace &trace) { return missingEdges(trace).empty(); }

Trace saturate(Trace trace)
{
	for (;;) {
		auto edges = missingEdges(trace);
		if (edges.empty())
			return trace;
		trace.addCoEdges(edges);
	}
}

ConsistencyVerdict isRaConsistent(const Trace &trace) { return satisfiesRa(saturate(trace)); }

Trace addCoEdge(Trace trace, EventId e1, EventId e2)
{
	trace.addCoEdge(e1, e2);
	return trace;
}

bool checkFrAbstract(const Trace &trace)
{
	for (VarId x = 0; x < trace.varCount(); ++x)
		if (acyclic(trace, x, true) != acyclic(trace, x, false))
			return false;
	return true;
}

} // namespace ramc
