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

#include "ramc/trace.hpp"

#include "ramc/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace ramc {

namespace {

std::string describe(EventId id)
{
	std::ostringstream os;
	if (id.isInit())
		os << "init#" << id.initVar;
	else
		os << "t" << id.thread + 1 << "." << id.index;
	return os.str();
}

const std::vector<std::string> kNoVars;

} // namespace

Trace Trace::empty(std::vector<std::string> variables)
{
	std::unordered_set<std::string> seen;
	for (const auto &v : variables) {
		if (v.empty())
			throw FormatError("empty variable name");
		if (!seen.insert(v).second)
			throw FormatError("duplicate variable '" + v + "'");
	}

	Trace t;
	const auto n = variables.size();
	t.vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
	t.writesByVar_.resize(n);
	t.readsByVar_.resize(n);
	t.co_.resize(n);
	t.perVar_.resize(n);
	for (VarId x = 0; x < n; ++x) {
		Event init{EventId::init(x), EventKind::Write, x, 0};
		t.initNode_.push_back(t.appendNode(init, std::nullopt));
	}
	return t;
}

const std::vector<std::string> &Trace::varNames() const { return vars_ ? *vars_ : kNoVars; }

const std::string &Trace::varName(VarId x) const
{
	if (x >= varCount())
		throw LookupError("unknown variable #" + std::to_string(x));
	return (*vars_)[x];
}

std::optional<VarId> Trace::findVar(std::string_view name) const
{
	for (VarId x = 0; x < varCount(); ++x)
		if ((*vars_)[x] == name)
			return x;
	return std::nullopt;
}

bool Trace::contains(EventId id) const
{
	if (id.isInit())
		return id.index == 0 && id.initVar < initNode_.size();
	if (id.thread < 0 || id.threadId() >= threads_.size())
		return false;
	return id.initVar == 0 && id.index >= 1 && id.index <= threads_[id.threadId()].nodes.size();
}

Trace::NodeId Trace::node(EventId id) const
{
	if (!contains(id))
		throw LookupError("unknown event " + describe(id));
	if (id.isInit())
		return initNode_[id.initVar];
	return threads_[id.threadId()].nodes[id.index - 1];
}

std::uint32_t Trace::threadSize(ThreadId t) const
{
	return t < threads_.size() ? static_cast<std::uint32_t>(threads_[t].nodes.size()) : 0;
}

std::vector<EventId> Trace::threadEvents(ThreadId t) const
{
	std::vector<EventId> out;
	if (t >= threads_.size())
		return out;
	for (auto n : threads_[t].nodes)
		out.push_back(events_[n].id);
	return out;
}

std::vector<EventId> Trace::writes(VarId x) const
{
	if (x >= varCount())
		throw LookupError("unknown variable #" + std::to_string(x));
	std::vector<EventId> out;
	for (auto n : writesByVar_[x])
		out.push_back(events_[n].id);
	return out;
}

std::vector<EventId> Trace::reads(VarId x) const
{
	if (x >= varCount())
		throw LookupError("unknown variable #" + std::to_string(x));
	std::vector<EventId> out;
	for (auto n : readsByVar_[x])
		out.push_back(events_[n].id);
	return out;
}

std::optional<EventId> Trace::readSource(EventId read) const
{
	auto n = node(read);
	if (!rf_[n])
		return std::nullopt;
	return events_[*rf_[n]].id;
}

std::vector<EventPair> Trace::rfEdges() const
{
	std::vector<EventPair> out;
	for (NodeId n = 0; n < events_.size(); ++n)
		if (rf_[n])
			out.emplace_back(events_[*rf_[n]].id, events_[n].id);
	return out;
}

std::vector<EventPair> Trace::coEdges(VarId x) const
{
	if (x >= varCount())
		throw LookupError("unknown variable #" + std::to_string(x));
	std::vector<EventPair> out;
	for (auto [a, b] : co_[x])
		out.emplace_back(events_[a].id, events_[b].id);
	return out;
}

bool Trace::hasStoredCoEdge(EventId a, EventId b) const
{
	auto na = node(a);
	auto nb = node(b);
	const auto &ea = events_[na];
	if (!ea.isWrite())
		return false;
	return co_[ea.var].contains({na, nb});
}

bool Trace::coRelated(EventId a, EventId b) const
{
	const auto &ea = event(a);
	const auto &eb = event(b);
	if (!ea.isWrite() || !eb.isWrite() || ea.var != eb.var)
		return false;
	if (ea.isInit() && !eb.isInit())
		return true;
	return co_[ea.var].contains({node(a), node(b)});
}

bool Trace::reachesNode(NodeId from, NodeId to, std::optional<VarId> coVar) const
{
	if (coVar)
		return perVar_.at(*coVar).test(from, to);
	return all_.test(from, to);
}

bool Trace::reachesPoRfNode(NodeId from, NodeId to) const { return porf_.test(from, to); }

bool Trace::reaches(EventId from, EventId to, std::optional<VarId> coVar) const
{
	if (coVar && *coVar >= varCount())
		throw LookupError("unknown variable #" + std::to_string(*coVar));
	return reachesNode(node(from), node(to), coVar);
}

bool Trace::reachesPoRf(EventId from, EventId to) const
{
	return reachesPoRfNode(node(from), node(to));
}

Trace::NodeId Trace::appendNode(Event ev, std::optional<NodeId> rfSource)
{
	const NodeId n = events_.size();
	std::optional<NodeId> poPred;
	if (!ev.isInit()) {
		auto &slot = threads_[ev.id.threadId()];
		if (!slot.nodes.empty())
			poPred = slot.nodes.back();
		slot.nodes.push_back(n);
	}

	std::vector<std::size_t> preds;
	if (poPred)
		preds.push_back(*poPred);
	if (rfSource)
		preds.push_back(*rfSource);

	closureWork_ += porf_.appendSink(preds);
	for (VarId x = 0; x < perVar_.size(); ++x) {
		auto withInit = preds;
		if (ev.isWrite() && !ev.isInit() && ev.var == x)
			withInit.push_back(initNode_[x]);
		closureWork_ += perVar_[x].appendSink(withInit);
	}
	if (ev.isWrite() && !ev.isInit())
		preds.push_back(initNode_[ev.var]);
	closureWork_ += all_.appendSink(preds);

	if (ev.isWrite())
		writesByVar_[ev.var].push_back(n);
	else
		readsByVar_[ev.var].push_back(n);
	events_.push_back(ev);
	rf_.push_back(rfSource);
	return n;
}

EventId Trace::appendWrite(ThreadId thread, VarId x, Value value)
{
	if (x >= varCount())
		throw LookupError("unknown variable #" + std::to_string(x));
	if (thread >= threads_.size())
		threads_.resize(thread + 1);
	auto id = EventId::of(thread, threadSize(thread) + 1);
	appendNode(Event{id, EventKind::Write, x, value}, std::nullopt);
	return id;
}

EventId Trace::appendRead(ThreadId thread, VarId x, EventId source)
{
	if (x >= varCount())
		throw LookupError("unknown variable #" + std::to_string(x));
	const auto src = node(source);
	if (!events_[src].isWrite() || events_[src].var != x)
		throw DomainError("read of " + varName(x) + " cannot read from " + describe(source));
	if (thread >= threads_.size())
		threads_.resize(thread + 1);
	auto id = EventId::of(thread, threadSize(thread) + 1);
	appendNode(Event{id, EventKind::Read, x, 0}, src);
	return id;
}

EventId Trace::appendUnsourcedRead(ThreadId thread, VarId x)
{
	if (x >= varCount())
		throw LookupError("unknown variable #" + std::to_string(x));
	if (thread >= threads_.size())
		threads_.resize(thread + 1);
	auto id = EventId::of(thread, threadSize(thread) + 1);
	appendNode(Event{id, EventKind::Read, x, 0}, std::nullopt);
	return id;
}

void Trace::setReadSource(EventId read, EventId source)
{
	const auto r = node(read);
	const auto w = node(source);
	if (!events_[r].isRead())
		throw DomainError(describe(read) + " is not a read");
	if (!events_[w].isWrite() || events_[w].var != events_[r].var)
		throw DomainError(describe(source) + " is not a write on the variable read by " +
				  describe(read));
	rf_[r] = w;
	recomputeClosures();
}

void Trace::checkCoEdge(EventId from, EventId to) const
{
	const auto &a = event(from);
	const auto &b = event(to);
	if (!a.isWrite() || !b.isWrite())
		throw DomainError("co edge " + describe(from) + " -> " + describe(to) +
				  " must relate two writes");
	if (a.var != b.var)
		throw DomainError("co edge " + describe(from) + " -> " + describe(to) +
				  " relates different variables");
	if (from == to)
		throw DomainError("co edge " + describe(from) + " is reflexive");
}

bool Trace::addCoEdge(EventId from, EventId to)
{
	const EventPair edge{from, to};
	return addCoEdges(std::span<const EventPair>(&edge, 1)) == 1;
}

std::size_t Trace::addCoEdges(std::span<const EventPair> edges)
{
	for (const auto &[a, b] : edges)
		checkCoEdge(a, b);
	std::size_t added = 0;
	for (const auto &[a, b] : edges)
		added += co_[event(a).var].insert({node(a), node(b)}).second ? 1 : 0;
	if (added)
		recomputeClosures();
	return added;
}

BitMatrix Trace::directEdges(std::optional<VarId> coVar, bool withCo) const
{
	BitMatrix m(events_.size());
	for (const auto &slot : threads_)
		for (std::size_t i = 1; i < slot.nodes.size(); ++i)
			m.set(slot.nodes[i - 1], slot.nodes[i]);
	for (NodeId n = 0; n < events_.size(); ++n)
		if (rf_[n])
			m.set(*rf_[n], n);
	if (!withCo)
		return m;
	for (VarId x = 0; x < varCount(); ++x) {
		if (coVar && *coVar != x)
			continue;
		for (auto [a, b] : co_[x])
			m.set(a, b);
		for (auto w : writesByVar_[x])
			if (w != initNode_[x])
				m.set(initNode_[x], w);
	}
	return m;
}

void Trace::recomputeClosures()
{
	porf_ = directEdges(std::nullopt, false);
	closureWork_ += porf_.closeTransitively();
	for (VarId x = 0; x < perVar_.size(); ++x) {
		perVar_[x] = directEdges(x, true);
		closureWork_ += perVar_[x].closeTransitively();
	}
	all_ = directEdges(std::nullopt, true);
	closureWork_ += all_.closeTransitively();
}

void Trace::verify() const
{
	for (NodeId n = 0; n < events_.size(); ++n) {
		const auto &ev = events_[n];
		if (ev.isInit() && (ev.id.index != 0 || !ev.isWrite() || ev.value != 0))
			throw InvariantError("malformed initializer " + describe(ev.id));
		if (ev.isRead()) {
			if (!rf_[n])
				throw InvariantError("read " + describe(ev.id) + " has no rf source");
			const auto &src = events_[*rf_[n]];
			if (!src.isWrite() || src.var != ev.var)
				throw InvariantError("rf source of " + describe(ev.id) + " is malformed");
		} else if (rf_[n]) {
			throw InvariantError("write " + describe(ev.id) + " has an rf source");
		}
	}
	for (ThreadId t = 0; t < threads_.size(); ++t)
		for (std::size_t i = 0; i < threads_[t].nodes.size(); ++i)
			if (events_[threads_[t].nodes[i]].id != EventId::of(t, static_cast<std::uint32_t>(i + 1)))
				throw InvariantError("po numbering broken in thread " + std::to_string(t + 1));
	for (VarId x = 0; x < co_.size(); ++x)
		for (auto [a, b] : co_[x])
			if (a == b || !events_[a].isWrite() || !events_[b].isWrite() ||
			    events_[a].var != x || events_[b].var != x)
				throw InvariantError("malformed co edge on " + varName(x));

	auto fresh = directEdges(std::nullopt, false);
	fresh.closeTransitively();
	if (!(fresh == porf_))
		throw InvariantError("stale po/rf closure");
	for (VarId x = 0; x < perVar_.size(); ++x) {
		auto m = directEdges(x, true);
		m.closeTransitively();
		if (!(m == perVar_[x]))
			throw InvariantError("stale closure for variable " + varName(x));
	}
	auto allFresh = directEdges(std::nullopt, true);
	allFresh.closeTransitively();
	if (!(allFresh == all_))
		throw InvariantError("stale po/rf/co closure");
}

bool Trace::sameGraph(const Trace &other) const
{
	if (varNames() != other.varNames() || size() != other.size())
		return false;
	auto threadsOf = [](const Trace &t) {
		std::vector<std::vector<std::tuple<EventKind, VarId, Value>>> out;
		for (ThreadId i = 0; i < t.threadCount(); ++i) {
			std::vector<std::tuple<EventKind, VarId, Value>> seq;
			for (auto id : t.threadEvents(i)) {
				const auto &e = t.event(id);
				seq.emplace_back(e.kind, e.var, e.isWrite() ? e.value : 0);
			}
			out.push_back(std::move(seq));
		}
		while (!out.empty() && out.back().empty())
			out.pop_back();
		return out;
	};
	if (threadsOf(*this) != threadsOf(other))
		return false;
	auto rfA = rfEdges();
	auto rfB = other.rfEdges();
	std::sort(rfA.begin(), rfA.end());
	std::sort(rfB.begin(), rfB.end());
	if (rfA != rfB)
		return false;
	for (VarId x = 0; x < varCount(); ++x) {
		auto a = coEdges(x);
		auto b = other.coEdges(x);
		std::sort(a.begin(), a.end());
		std::sort(b.begin(), b.end());
		if (a != b)
			return false;
	}
	return true;
}

} // namespace ramc
