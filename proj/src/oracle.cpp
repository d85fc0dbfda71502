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


#include "ramc/oracle.hpp"

#include "ramc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace ramc {

namespace {

/* Plain graphs and cycle detection, kept separate from the core library. */

using Graph = std::vector<std::vector<std::size_t>>;

bool hasCycle(const Graph &g)
{
	std::vector<std::size_t> indegree(g.size(), 0);
	for (const auto &succ : g)
		for (auto s : succ)
			++indegree[s];
	std::vector<std::size_t> ready;
	for (std::size_t n = 0; n < g.size(); ++n)
		if (indegree[n] == 0)
			ready.push_back(n);
	std::size_t removed = 0;
	while (!ready.empty()) {
		auto n = ready.back();
		ready.pop_back();
		++removed;
		for (auto s : g[n])
			if (--indegree[s] == 0)
				ready.push_back(s);
	}
	return removed != g.size();
}

/* Oracle state: a total trace under construction. */

constexpr std::uint32_t kInit = static_cast<std::uint32_t>(-1);

struct OEvent {
	std::uint32_t thread; // kInit for initializers
	std::uint32_t index;
	bool write;
	VarId var;
	Value value;
	std::size_t source; // reads: position of the source write in `events`
};

struct State {
	Configuration config;
	std::vector<OEvent> events; // execution order; initializers first
	std::vector<std::vector<std::size_t>> co; // per variable, excluding init
	std::vector<std::uint32_t> threadSize;
	std::vector<std::size_t> writesPerVar;
};

std::string idText(const OEvent &e)
{
	if (e.thread == kInit)
		return "i" + std::to_string(e.var);
	return std::to_string(e.thread) + "." + std::to_string(e.index);
}

// Canonical text independent of the interleaving that produced the state.
std::string totalKey(const State &s, bool withCo)
{
	std::vector<std::size_t> order(s.events.size());
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
		const auto &ea = s.events[a];
		const auto &eb = s.events[b];
		return std::tuple(ea.thread + 1, ea.index, ea.var) < std::tuple(eb.thread + 1, eb.index, eb.var);
	});
	std::string out;
	for (auto i : order) {
		const auto &e = s.events[i];
		if (e.thread == kInit)
			continue;
		out += idText(e);
		out += e.write ? "W" : "R";
		out += std::to_string(e.var);
		out += e.write ? "=" + std::to_string(e.value) : "<" + idText(s.events[e.source]);
		out += ';';
	}
	if (withCo) {
		for (VarId x = 0; x < s.co.size(); ++x) {
			out += '|';
			for (auto i : s.co[x])
				out += idText(s.events[i]) + ",";
		}
	}
	return out;
}

// po ∪ rf ∪ co^x ∪ fr^x over the state's events.
Graph raGraph(const State &s, VarId x)
{
	Graph g(s.events.size());
	std::map<std::uint32_t, std::size_t> lastOfThread;
	for (std::size_t i = 0; i < s.events.size(); ++i) {
		const auto &e = s.events[i];
		if (e.thread != kInit) {
			if (auto it = lastOfThread.find(e.thread); it != lastOfThread.end())
				g[it->second].push_back(i);
			lastOfThread[e.thread] = i;
		}
		if (!e.write)
			g[e.source].push_back(i);
	}
	std::vector<std::size_t> order{x}; // init_x sits at position x
	order.insert(order.end(), s.co[x].begin(), s.co[x].end());
	for (std::size_t a = 0; a < order.size(); ++a)
		for (std::size_t b = a + 1; b < order.size(); ++b)
			g[order[a]].push_back(order[b]);
	for (std::size_t i = 0; i < s.events.size(); ++i) {
		const auto &e = s.events[i];
		if (e.write || e.var != x)
			continue;
		auto pos = std::find(order.begin(), order.end(), e.source) - order.begin();
		for (auto b = static_cast<std::size_t>(pos) + 1; b < order.size(); ++b)
			g[i].push_back(order[b]);
	}
	return g;
}

State initialState(const std::shared_ptr<const Program> &program)
{
	State s{Configuration::initial(program), {}, {}, {}, {}};
	for (VarId x = 0; x < program->vars.size(); ++x)
		s.events.push_back({kInit, 0, true, x, 0, 0});
	s.co.resize(program->vars.size());
	s.writesPerVar.assign(program->vars.size(), 0);
	s.threadSize.assign(program->threads.size(), 0);
	return s;
}

State append(const State &s, const PendingGlobal &g, std::size_t sourceOrPos, const OracleLimits &limits)
{
	State n = s;
	const auto t = g.thread;
	const auto index = ++n.threadSize[t];
	if (n.events.size() - n.co.size() + 1 > limits.maxEvents)
		throw CapacityError("run exceeds " + std::to_string(limits.maxEvents) + " events",
				    n.events.size() - n.co.size() + 1);
	if (g.isWrite) {
		if (++n.writesPerVar[g.var] > limits.maxWritesPerVar)
			throw CapacityError("variable exceeds " + std::to_string(limits.maxWritesPerVar) +
						    " writes",
					    n.writesPerVar[g.var]);
		n.events.push_back({t, index, true, g.var, g.value, 0});
		auto &order = n.co[g.var];
		order.insert(order.begin() + static_cast<std::ptrdiff_t>(sourceOrPos), n.events.size() - 1);
		n.config.applyWrite(t);
	} else {
		n.events.push_back({t, index, false, g.var, 0, sourceOrPos});
		n.config.applyRead(t, s.events[sourceOrPos].value);
	}
	return n;
}

WeakTraceKey weakKeyOf(const State &s, const Program &program)
{
	auto trace = Trace::empty(program.vars);
	std::vector<EventId> ids;
	for (const auto &e : s.events) {
		if (e.thread == kInit) {
			ids.push_back(EventId::init(e.var));
			continue;
		}
		if (e.write)
			ids.push_back(trace.appendWrite(e.thread, e.var, e.value));
		else
			ids.push_back(trace.appendRead(e.thread, e.var, ids[e.source]));
	}
	return weaken(trace);
}

class TotalEnumerator {
public:
	TotalEnumerator(std::shared_ptr<const Program> program, OracleLimits limits)
		: program_(std::move(program)), limits_(limits)
	{}

	ReferenceResult run()
	{
		dfs(initialState(program_));
		return std::move(result_);
	}

private:
	void dfs(const State &s)
	{
		if (!visited_.insert(totalKey(s, true)).second)
			return;
		if (s.config.isTerminal()) {
			++result_.totalTraces;
			result_.weakKeys.insert(weakKeyOf(s, *program_));
			return;
		}
		for (std::uint32_t t = 0; t < s.config.threadCount(); ++t) {
			auto g = s.config.nextGlobal(t);
			if (!g)
				continue;
			if (g->isWrite) {
				for (std::size_t pos = 0; pos <= s.co[g->var].size(); ++pos)
					visit(append(s, *g, pos, limits_), g->var);
			} else {
				for (std::size_t i = 0; i < s.events.size(); ++i)
					if (s.events[i].write && s.events[i].var == g->var)
						visit(append(s, *g, i, limits_), g->var);
			}
		}
	}

	// The new event only carries co/fr edges of its own variable, so an
	// RA violation can only appear in that variable's graph.
	void visit(const State &n, VarId x)
	{
		if (!hasCycle(raGraph(n, x)))
			dfs(n);
	}

	std::shared_ptr<const Program> program_;
	OracleLimits limits_;
	ReferenceResult result_;
	std::unordered_set<std::string> visited_;
};

/* Second route: weak traces first, coherence permutations afterwards. */

class PermutationEnumerator {
public:
	PermutationEnumerator(std::shared_ptr<const Program> program, OracleLimits limits)
		: program_(std::move(program)), limits_(limits)
	{}

	ReferenceResult run()
	{
		dfs(initialState(program_));
		return std::move(result_);
	}

private:
	void dfs(const State &s)
	{
		if (!visited_.insert(totalKey(s, false)).second)
			return;
		if (s.config.isTerminal()) {
			countOrders(s);
			return;
		}
		for (std::uint32_t t = 0; t < s.config.threadCount(); ++t) {
			auto g = s.config.nextGlobal(t);
			if (!g)
				continue;
			if (g->isWrite) {
				dfs(append(s, *g, s.co[g->var].size(), limits_));
			} else {
				for (std::size_t i = 0; i < s.events.size(); ++i)
					if (s.events[i].write && s.events[i].var == g->var)
						dfs(append(s, *g, i, limits_));
			}
		}
	}

	void countOrders(const State &s)
	{
		std::uint64_t total = 1;
		for (VarId x = 0; x < s.co.size() && total; ++x) {
			State probe = s;
			auto &order = probe.co[x];
			std::sort(order.begin(), order.end());
			std::uint64_t ok = 0;
			do {
				ok += hasCycle(raGraph(probe, x)) ? 0 : 1;
			} while (std::next_permutation(order.begin(), order.end()));
			total *= ok;
		}
		if (total == 0)
			return;
		result_.totalTraces += total;
		result_.weakKeys.insert(weakKeyOf(s, *program_));
	}

	std::shared_ptr<const Program> program_;
	OracleLimits limits_;
	ReferenceResult result_;
	std::unordered_set<std::string> visited_;
};

/* Brute force over coherence orders of an arbitrary trace. */

Graph poRf(const Trace &trace)
{
	Graph g(trace.size());
	for (ThreadId t = 0; t < trace.threadCount(); ++t) {
		auto ids = trace.threadEvents(t);
		for (std::size_t i = 1; i < ids.size(); ++i)
			g[trace.node(ids[i - 1])].push_back(trace.node(ids[i]));
	}
	for (auto [w, r] : trace.rfEdges())
		g[trace.node(w)].push_back(trace.node(r));
	return g;
}

// Calls `visit(order)` for every RA-satisfying total order of x's writes
// (initializer first) that contains the trace's stored co^x edges, until
// `visit` returns false.
template <typename Visit>
void forEachValidOrder(const Trace &trace, VarId x, std::size_t maxWrites, Visit visit)
{
	auto writes = trace.writes(x);
	std::erase_if(writes, [](EventId e) { return e.isInit(); });
	if (writes.size() > maxWrites)
		throw CapacityError("variable has " + std::to_string(writes.size()) + " writes",
				    writes.size());
	const auto init = EventId::init(x);
	const auto stored = trace.coEdges(x);
	for (auto [a, b] : stored)
		if (b == init)
			return; // nothing may precede the initializer
	const auto base = poRf(trace);

	std::sort(writes.begin(), writes.end());
	do {
		std::vector<EventId> order{init};
		order.insert(order.end(), writes.begin(), writes.end());
		std::map<EventId, std::size_t> pos;
		for (std::size_t i = 0; i < order.size(); ++i)
			pos[order[i]] = i;
		bool respects = std::all_of(stored.begin(), stored.end(),
					    [&](const EventPair &p) { return pos[p.first] < pos[p.second]; });
		if (!respects)
			continue;
		Graph g = base;
		for (std::size_t a = 0; a < order.size(); ++a)
			for (std::size_t b = a + 1; b < order.size(); ++b)
				g[trace.node(order[a])].push_back(trace.node(order[b]));
		for (auto r : trace.reads(x)) {
			auto src = trace.readSource(r);
			if (!src)
				continue;
			for (auto b = pos[*src] + 1; b < order.size(); ++b)
				g[trace.node(r)].push_back(trace.node(order[b]));
		}
		if (!hasCycle(g) && !visit(order))
			return;
	} while (std::next_permutation(writes.begin(), writes.end()));
}

} // namespace

ReferenceResult enumerateTotalTraces(const std::shared_ptr<const Program> &program, const OracleLimits &limits)
{
	if (program->hasBackwardJump())
		throw DomainError("the oracle needs a loop-free program; unroll it first");
	return TotalEnumerator(program, limits).run();
}

ReferenceResult enumerateByPermutation(const std::shared_ptr<const Program> &program,
				       const OracleLimits &limits)
{
	if (program->hasBackwardJump())
		throw DomainError("the oracle needs a loop-free program; unroll it first");
	return PermutationEnumerator(program, limits).run();
}

bool checkConsistencyBruteforce(const Trace &trace, std::size_t maxWrites)
{
	for (VarId x = 0; x < trace.varCount(); ++x) {
		bool found = false;
		forEachValidOrder(trace, x, maxWrites, [&](const std::vector<EventId> &) {
			found = true;
			return false;
		});
		if (!found)
			return false;
	}
	return true;
}

std::set<EventPair> mandatoryCoherence(const Trace &trace, std::size_t maxWrites)
{
	std::set<EventPair> out;
	for (VarId x = 0; x < trace.varCount(); ++x) {
		std::optional<std::set<EventPair>> common;
		forEachValidOrder(trace, x, maxWrites, [&](const std::vector<EventId> &order) {
			std::set<EventPair> pairs;
			for (std::size_t a = 1; a < order.size(); ++a)
				for (std::size_t b = a + 1; b < order.size(); ++b)
					pairs.emplace(order[a], order[b]);
			if (!common) {
				common = std::move(pairs);
				return true;
			}
			std::set<EventPair> kept;
			std::set_intersection(common->begin(), common->end(), pairs.begin(), pairs.end(),
					      std::inserter(kept, kept.end()));
			common = std::move(kept);
			return true;
		});
		if (common)
			out.insert(common->begin(), common->end());
	}
	return out;
}

/* Fuzzing */

Program generateProgram(const FuzzSpec &spec)
{
	std::mt19937_64 rng(spec.seed);
	auto below = [&](std::uint64_t n) { return n == 0 ? 0 : rng() % n; };
	auto chance = [&](double p) { return static_cast<double>(rng() % 1'000'000) < p * 1'000'000; };

	const auto threads = std::max<std::uint32_t>(1, spec.threads);
	const auto vars = std::max<std::uint32_t>(1, spec.variables);
	const auto maxStatements = std::max<std::uint32_t>(1, spec.statementsPerThread);
	const auto maxValue = std::max<Value>(1, spec.maxWriteValue);

	std::ostringstream os;
	os << "vars";
	for (std::uint32_t v = 0; v < vars; ++v)
		os << ' ' << static_cast<char>('x' + v % 3) << (v < 3 ? "" : std::to_string(v));
	os << '\n';
	auto varName = [&](std::uint64_t v) {
		return std::string(1, static_cast<char>('x' + v % 3)) + (v < 3 ? "" : std::to_string(v));
	};

	bool anyWrite = false;
	for (std::uint32_t t = 0; t < threads; ++t) {
		os << "thread t" << t + 1 << '\n';
		const auto count = 1 + below(maxStatements);
		std::uint32_t regs = 0;
		std::uint32_t labels = 0;
		std::vector<std::pair<std::uint64_t, std::string>> pendingLabels; // (position, name)
		for (std::uint64_t i = 0; i < count; ++i) {
			for (auto it = pendingLabels.begin(); it != pendingLabels.end();) {
				if (it->first == i) {
					os << "  label " << it->second << '\n';
					it = pendingLabels.erase(it);
				} else {
					++it;
				}
			}
			const bool last = i + 1 == count;
			const bool mustWrite = !anyWrite && t + 1 == threads && last;
			if (!mustWrite && regs > 0 && !last && chance(spec.conditionalProbability)) {
				auto name = "L" + std::to_string(++labels);
				auto target = i + 1 + below(count - i); // in (i, count]
				os << "  l if r" << below(regs) << (rng() % 2 ? " == " : " != ") << below(maxValue + 1)
				   << " goto " << name << '\n';
				pendingLabels.emplace_back(target, name);
				continue;
			}
			const auto var = varName(below(vars));
			if (mustWrite || rng() % 2) {
				anyWrite = true;
				os << "  w " << var << ' ';
				if (regs > 0 && rng() % 4 == 0)
					os << "r" << below(regs) << " + " << 1 + below(maxValue);
				else
					os << 1 + below(maxValue);
				os << '\n';
			} else {
				os << "  r " << var << " r" << regs++ << '\n';
			}
		}
		for (const auto &[pos, name] : pendingLabels)
			os << "  label " << name << '\n';
		os << "end\n";
	}
	return parseProgram(os.str());
}

DifferentialReport differentialCheck(const std::shared_ptr<const Program> &program,
				     const ExplorerOptions &options, const OracleLimits &limits)
{
	DifferentialReport report;
	auto stats = exploreProgram(program, options);
	report.dporTraces = stats.terminalTraces;
	report.dporDuplicates = stats.duplicateTraces;
	report.dporKeys = std::move(stats.weakKeys);

	auto ref = enumerateTotalTraces(program, limits);
	report.oracleTotalTraces = ref.totalTraces;
	report.oracleKeys = std::move(ref.weakKeys);

	std::set_difference(report.dporKeys.begin(), report.dporKeys.end(), report.oracleKeys.begin(),
			    report.oracleKeys.end(), std::back_inserter(report.onlyDpor));
	std::set_difference(report.oracleKeys.begin(), report.oracleKeys.end(), report.dporKeys.begin(),
			    report.dporKeys.end(), std::back_inserter(report.onlyOracle));
	report.match = report.onlyDpor.empty() && report.onlyOracle.empty() && report.dporDuplicates == 0;
	return report;
}

} // namespace ramc
