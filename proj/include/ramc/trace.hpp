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

#ifndef RAMC_TRACE_HPP
#define RAMC_TRACE_HPP

#include "ramc/bit_matrix.hpp"
#include "ramc/event.hpp"

#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramc {

using EventPair = std::pair<EventId, EventId>;

/*
 * An execution graph: events (one initializer write of 0 per variable plus
 * the events of each thread), program order, reads-from and a per-variable
 * coherence relation.
 *
 * Program order is implicit in the per-thread event lists. Coherence is
 * stored as explicit edge pairs and is not required to be transitive. Every
 * relational query additionally treats init_x as coherence-before each
 * non-initializer write on x; these edges are never stored.
 *
 * The trace caches the transitive closures of po ∪ rf, of po ∪ rf ∪ co^x for
 * every variable x, and of po ∪ rf ∪ co. Appending an event that has no
 * successors extends the caches incrementally; adding coherence or
 * reads-from edges into existing events recomputes the affected closures.
 *
 * Traces are plain values: copying one copies the caches.
 */
class Trace {
public:
	using NodeId = std::size_t;

	Trace() = default;

	/// The empty trace over `variables`. Throws FormatError on duplicates.
	static Trace empty(std::vector<std::string> variables);

	/* Variables */

	std::size_t varCount() const { return vars_ ? vars_->size() : 0; }
	const std::vector<std::string> &varNames() const;
	const std::string &varName(VarId x) const;
	std::optional<VarId> findVar(std::string_view name) const;

	/* Events */

	std::size_t size() const { return events_.size(); }
	std::span<const Event> events() const { return events_; }
	bool contains(EventId id) const;
	const Event &event(EventId id) const { return events_[node(id)]; }
	NodeId node(EventId id) const; // throws LookupError

	/// Number of thread slots (threads with at least one event, plus any gap).
	std::size_t threadCount() const { return threads_.size(); }
	std::uint32_t threadSize(ThreadId t) const;
	std::vector<EventId> threadEvents(ThreadId t) const;

	std::vector<EventId> writes(VarId x) const; // includes init_x
	std::vector<EventId> reads(VarId x) const;

	/* Relations */

	std::optional<EventId> readSource(EventId read) const;
	std::vector<EventPair> rfEdges() const;

	/// Explicitly stored coherence edges on x (initializer edges excluded).
	std::vector<EventPair> coEdges(VarId x) const;
	/// Whether (a, b) is in co^x, counting the implicit initializer edges.
	bool coRelated(EventId a, EventId b) const;
	/// Whether (a, b) is stored explicitly.
	bool hasStoredCoEdge(EventId a, EventId b) const;

	/* Reachability over the cached closures (non-reflexive) */

	/// [po ∪ rf ∪ co]+ when `coVar` is empty, [po ∪ rf ∪ co^x]+ otherwise.
	bool reaches(EventId from, EventId to, std::optional<VarId> coVar = std::nullopt) const;
	/// [po ∪ rf]+.
	bool reachesPoRf(EventId from, EventId to) const;

	bool reachesNode(NodeId from, NodeId to, std::optional<VarId> coVar) const;
	bool reachesPoRfNode(NodeId from, NodeId to) const;

	/* Construction */

	/// Appends a write as the last event of `thread`.
	EventId appendWrite(ThreadId thread, VarId x, Value value);
	/// Appends a read of x as the last event of `thread`, reading from `source`.
	EventId appendRead(ThreadId thread, VarId x, EventId source);
	/// Appends a read whose source is set later with setReadSource (importers).
	EventId appendUnsourcedRead(ThreadId thread, VarId x);
	void setReadSource(EventId read, EventId source);

	/// Adds (from, to) to co. Both must be distinct writes on the same
	/// variable (DomainError otherwise). Returns false if already present.
	bool addCoEdge(EventId from, EventId to);
	/// Batched addCoEdge; recomputes the closures once.
	std::size_t addCoEdges(std::span<const EventPair> edges);

	/* Diagnostics */

	/// Recomputes every closure from scratch and compares with the caches;
	/// also checks the structural invariants. Throws InvariantError.
	void verify() const;

	/// Word operations spent maintaining the closures so far.
	std::uint64_t closureWork() const { return closureWork_; }

	/// Structural equality: events, po, rf and stored co.
	bool sameGraph(const Trace &other) const;

private:
	struct Slot {
		std::vector<NodeId> nodes;
	};

	NodeId appendNode(Event ev, std::optional<NodeId> rfSource);
	void checkCoEdge(EventId from, EventId to) const;
	void recomputeClosures();
	BitMatrix directEdges(std::optional<VarId> coVar, bool withCo) const;

	std::shared_ptr<const std::vector<std::string>> vars_;
	std::vector<Event> events_;
	std::vector<std::optional<NodeId>> rf_;          // per node, reads only
	std::vector<NodeId> initNode_;                   // per variable
	std::vector<Slot> threads_;
	std::vector<std::vector<NodeId>> writesByVar_;   // includes init
	std::vector<std::vector<NodeId>> readsByVar_;
	std::vector<std::set<std::pair<NodeId, NodeId>>> co_;

	BitMatrix porf_;
	std::vector<BitMatrix> perVar_;
	BitMatrix all_;
	std::uint64_t closureWork_ = 0;
};

} // namespace ramc

#endif // RAMC_TRACE_HPP
