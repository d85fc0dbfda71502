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


// Python bindings. Programs and traces cross the boundary as text (the
// program language and the JSON trace format).

#include "ramc/benchmarks.hpp"
#include "ramc/dpor.hpp"
#include "ramc/errors.hpp"
#include "ramc/oracle.hpp"
#include "ramc/program.hpp"
#include "ramc/ra_checker.hpp"
#include "ramc/trace_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace py::literals;

namespace {

std::shared_ptr<const ramc::Program> load(const std::string &text, std::size_t bound)
{
	if (bound == 0)
		throw ramc::DomainError("unroll bound must be at least 1");
	return std::make_shared<const ramc::Program>(ramc::unroll(ramc::parseProgram(text), bound));
}

ramc::ExplorerOptions options(const std::string &strategy, bool replayDeclare, bool debugInvariants)
{
	ramc::ExplorerOptions o;
	if (strategy == "all")
		o.strategy = ramc::PostponeStrategy::AllReads;
	else if (strategy != "closest")
		throw ramc::DomainError("strategy must be 'closest' or 'all'");
	o.declareDuringReplay = replayDeclare;
	o.debugInvariants = debugInvariants;
	return o;
}

std::vector<std::string> keys(const std::set<ramc::WeakTraceKey> &set)
{
	std::vector<std::string> out;
	for (const auto &k : set)
		out.push_back(k.text);
	return out;
}

py::dict explore(const std::string &text, std::size_t unrollBound, const std::string &strategy,
		 bool replayDeclare, bool debugInvariants, bool collectTraces)
{
	auto program = load(text, unrollBound);
	std::vector<std::string> traces;
	ramc::Reporter reporter;
	if (collectTraces)
		reporter = [&](const ramc::TerminalState &st) {
			if (!st.duplicate)
				traces.push_back(ramc::toJson(st.trace));
		};
	ramc::ExplorationStats s;
	{
		py::gil_scoped_release release;
		s = ramc::exploreProgram(program, options(strategy, replayDeclare, debugInvariants), reporter);
	}
	py::dict d("traces"_a = s.weakKeys.size(), "events"_a = s.eventsExecuted,
		   "schedules_created"_a = s.schedulesCreated,
		   "schedules_deduplicated"_a = s.schedulesDeduplicated, "duplicates"_a = s.duplicateTraces,
		   "keys"_a = keys(s.weakKeys));
	d["assertion"] = s.assertionOutcome ? py::cast(*s.assertionOutcome) : py::none();
	if (collectTraces)
		d["trace_json"] = traces;
	return d;
}

py::dict checkTrace(const std::string &json)
{
	const auto trace = ramc::traceFromJson(json);
	const auto v = ramc::isRaConsistent(trace);
	const auto sat = ramc::saturate(trace);
	std::vector<std::string> cycle;
	for (auto e : v.witnessCycle)
		cycle.push_back(ramc::formatEventId(sat, e));
	py::dict d("consistent"_a = v.consistent, "cycle"_a = cycle);
	d["variable"] = v.variable ? py::cast(sat.varName(*v.variable)) : py::none();
	return d;
}

py::dict reference(const std::string &text, std::size_t maxEvents, std::size_t maxWrites)
{
	auto r = ramc::enumerateTotalTraces(load(text, 1), {maxEvents, maxWrites});
	return py::dict("total"_a = r.totalTraces, "keys"_a = keys(r.weakKeys));
}

py::dict differential(const std::string &text, std::size_t maxEvents, std::size_t maxWrites)
{
	auto r = ramc::differentialCheck(load(text, 1), {}, {maxEvents, maxWrites});
	return py::dict("match"_a = r.match, "dpor"_a = r.dporKeys.size(), "oracle"_a = r.oracleKeys.size(),
			"only_dpor"_a = r.onlyDpor.size(), "only_oracle"_a = r.onlyOracle.size());
}

} // namespace

PYBIND11_MODULE(ramc, m)
{
	m.doc() = "Stateless model checking for release-acquire programs";

	auto base = py::register_exception<ramc::Error>(m, "Error", PyExc_RuntimeError);
	py::register_exception<ramc::FormatError>(m, "FormatError", base.ptr());
	py::register_exception<ramc::LookupError>(m, "LookupError", base.ptr());
	py::register_exception<ramc::DomainError>(m, "DomainError", base.ptr());
	py::register_exception<ramc::CapacityError>(m, "CapacityError", base.ptr());
	py::register_exception<ramc::DivergenceError>(m, "DivergenceError", base.ptr());
	py::register_exception<ramc::InvariantError>(m, "InvariantError", base.ptr());

	m.def("format_program", [](const std::string &text) { return ramc::printProgram(ramc::parseProgram(text)); },
	      "Canonical text of a program", "text"_a);
	m.def("unroll", [](const std::string &text, std::size_t bound) { return ramc::printProgram(*load(text, bound)); },
	      "Unroll loops up to `bound` iterations", "text"_a, "bound"_a);
	m.def("explore", &explore, "Enumerate weak traces", "text"_a, "unroll"_a = 1, "strategy"_a = "closest",
	      "replay_declare"_a = true, "debug_invariants"_a = false, "collect_traces"_a = false);
	m.def("check_trace", &checkTrace, "RA-consistency of a JSON trace", "json"_a);
	m.def("saturate", [](const std::string &json) { return ramc::toJson(ramc::saturate(ramc::traceFromJson(json))); },
	      "Saturated JSON trace", "json"_a);
	m.def("to_dot", [](const std::string &json) { return ramc::toDot(ramc::traceFromJson(json)); }, "json"_a);
	m.def("reference", &reference, "Reference enumeration of total traces", "text"_a, "max_events"_a = 14,
	      "max_writes"_a = 6);
	m.def("differential", &differential, "Compare exploration with the reference enumeration", "text"_a,
	      "max_events"_a = 16, "max_writes"_a = 8);
	m.def(
		"generate_program",
		[](std::uint32_t threads, std::uint32_t variables, std::uint32_t statements, ramc::Value maxValue,
		   double conditional, std::uint64_t seed) {
			return ramc::printProgram(
				ramc::generateProgram({threads, variables, statements, maxValue, conditional, seed}));
		},
		"Random loop-free program", "threads"_a = 3, "variables"_a = 2, "statements"_a = 5,
		"max_value"_a = 3, "conditional"_a = 0.15, "seed"_a = 0);
	m.def("n_writers", [](std::uint32_t n) { return ramc::printProgram(ramc::nWritersProgram(n)); }, "n"_a);
	m.def("redundant_co", [](std::uint32_t n) { return ramc::printProgram(ramc::redundantCoProgram(n)); }, "n"_a);
}
