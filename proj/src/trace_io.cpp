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


#include "ramc/trace_io.hpp"

#include "ramc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace ramc {

using nlohmann::json;

std::string formatEventId(const Trace &trace, EventId id)
{
	if (id.isInit())
		return "init." + trace.varName(id.initVar);
	return "t" + std::to_string(id.thread + 1) + "." + std::to_string(id.index);
}

namespace {

bool parseUnsigned(std::string_view s, std::uint32_t &out)
{
	if (s.empty())
		return false;
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
	return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace

EventId parseEventId(const Trace &trace, std::string_view text)
{
	if (text.starts_with("init.")) {
		auto var = trace.findVar(text.substr(5));
		if (!var)
			throw FormatError("unknown variable in event id '" + std::string(text) + "'");
		return EventId::init(*var);
	}
	auto dot = text.find('.');
	std::uint32_t thread = 0;
	std::uint32_t index = 0;
	if (!text.starts_with("t") || dot == std::string_view::npos ||
	    !parseUnsigned(text.substr(1, dot - 1), thread) ||
	    !parseUnsigned(text.substr(dot + 1), index) || thread == 0 || index == 0)
		throw FormatError("malformed event id '" + std::string(text) + "'");
	return EventId::of(thread - 1, index);
}

std::string toJson(const Trace &trace, int indent)
{
	json doc;
	doc["vars"] = trace.varNames();
	json events = json::array();
	for (const auto &e : trace.events()) {
		json ev;
		if (e.isInit())
			ev["thread"] = "init";
		else
			ev["thread"] = e.id.thread + 1;
		ev["index"] = e.id.index;
		ev["kind"] = e.isWrite() ? "W" : "R";
		ev["var"] = trace.varName(e.var);
		if (e.isWrite())
			ev["value"] = e.value;
		events.push_back(std::move(ev));
	}
	doc["events"] = std::move(events);

	auto pairs = [&](std::vector<EventPair> edges) {
		std::sort(edges.begin(), edges.end());
		json arr = json::array();
		for (auto [a, b] : edges)
			arr.push_back({formatEventId(trace, a), formatEventId(trace, b)});
		return arr;
	};
	doc["rf"] = pairs(trace.rfEdges());
	std::vector<EventPair> co;
	for (VarId x = 0; x < trace.varCount(); ++x) {
		auto edges = trace.coEdges(x);
		co.insert(co.end(), edges.begin(), edges.end());
	}
	doc["co"] = pairs(std::move(co));
	return doc.dump(indent);
}

namespace {

struct RawEvent {
	ThreadId thread;
	std::uint32_t index;
	EventKind kind;
	std::string var;
	Value value;
};

const json &field(const json &obj, const char *key)
{
	auto it = obj.find(key);
	if (it == obj.end())
		throw FormatError(std::string("missing field '") + key + "'");
	return *it;
}

std::vector<EventPair> readPairs(const Trace &trace, const json &doc, const char *key)
{
	std::vector<EventPair> out;
	auto it = doc.find(key);
	if (it == doc.end())
		return out;
	if (!it->is_array())
		throw FormatError(std::string("'") + key + "' must be an array");
	for (const auto &p : *it) {
		if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
			throw FormatError(std::string("'") + key + "' entries must be [id, id] pairs");
		out.emplace_back(parseEventId(trace, p[0].get<std::string>()),
				 parseEventId(trace, p[1].get<std::string>()));
	}
	return out;
}

} // namespace

Trace traceFromJson(std::string_view text)
{
	json doc;
	try {
		doc = json::parse(text);
	} catch (const json::parse_error &e) {
		throw FormatError(std::string("invalid JSON: ") + e.what());
	}
	if (!doc.is_object())
		throw FormatError("trace JSON must be an object");

	try {
		std::vector<std::string> vars;
		auto addVar = [&](const std::string &v) {
			if (std::find(vars.begin(), vars.end(), v) == vars.end())
				vars.push_back(v);
		};
		if (auto it = doc.find("vars"); it != doc.end()) {
			std::vector<std::string> declared = it->get<std::vector<std::string>>();
			for (std::size_t i = 0; i < declared.size(); ++i)
				for (std::size_t j = 0; j < i; ++j)
					if (declared[i] == declared[j])
						throw FormatError("duplicate variable '" + declared[i] + "'");
			vars = std::move(declared);
		}

		std::vector<RawEvent> raw;
		for (const auto &ev : field(doc, "events")) {
			const auto &thread = field(ev, "thread");
			const auto kind = field(ev, "kind").get<std::string>();
			const auto var = field(ev, "var").get<std::string>();
			if (kind != "W" && kind != "R")
				throw FormatError("event kind must be \"W\" or \"R\"");
			addVar(var);
			if (thread.is_string()) {
				if (thread.get<std::string>() != "init")
					throw FormatError("thread must be a positive integer or \"init\"");
				if (kind != "W" || ev.value("index", 0) != 0 || ev.value("value", Value{0}) != 0)
					throw FormatError("initializer of '" + var + "' must be a write of 0 with index 0");
				continue;
			}
			const auto t = thread.get<std::int64_t>();
			const auto index = field(ev, "index").get<std::int64_t>();
			if (t < 1 || index < 1)
				throw FormatError("thread and index must be positive");
			RawEvent r{static_cast<ThreadId>(t - 1), static_cast<std::uint32_t>(index),
				   kind == "W" ? EventKind::Write : EventKind::Read, var, 0};
			if (r.kind == EventKind::Write)
				r.value = field(ev, "value").get<Value>();
			else if (ev.contains("value"))
				throw FormatError("read events carry no value");
			raw.push_back(std::move(r));
		}

		std::sort(raw.begin(), raw.end(), [](const RawEvent &a, const RawEvent &b) {
			return std::pair(a.thread, a.index) < std::pair(b.thread, b.index);
		});
		auto trace = Trace::empty(vars);
		for (const auto &r : raw) {
			if (r.index != trace.threadSize(r.thread) + 1)
				throw FormatError("thread " + std::to_string(r.thread + 1) +
						  " events must be numbered 1, 2, ... without gaps");
			const auto x = *trace.findVar(r.var);
			if (r.kind == EventKind::Write)
				trace.appendWrite(r.thread, x, r.value);
			else
				trace.appendUnsourcedRead(r.thread, x);
		}

		for (auto [w, r] : readPairs(trace, doc, "rf")) {
			if (!trace.contains(w) || !trace.contains(r))
				throw FormatError("rf edge mentions an unknown event");
			if (!trace.event(r).isRead())
				throw FormatError("rf target " + formatEventId(trace, r) + " is not a read");
			if (trace.readSource(r))
				throw FormatError("read " + formatEventId(trace, r) + " has two rf sources");
			trace.setReadSource(r, w);
		}
		for (VarId x = 0; x < trace.varCount(); ++x)
			for (auto r : trace.reads(x))
				if (!trace.readSource(r))
					throw FormatError("read " + formatEventId(trace, r) + " has no rf source");

		auto co = readPairs(trace, doc, "co");
		for (auto [a, b] : co)
			if (!trace.contains(a) || !trace.contains(b))
				throw FormatError("co edge mentions an unknown event");
		trace.addCoEdges(co);
		return trace;
	} catch (const json::exception &e) {
		throw FormatError(std::string("malformed trace: ") + e.what());
	} catch (const DomainError &e) {
		throw FormatError(e.what());
	}
}

std::string toDot(const Trace &trace, std::string_view name)
{
	std::ostringstream os;
	os << "digraph \"" << name << "\" {\n";
	os << "  node [shape=box, fontname=\"monospace\"];\n";
	auto node = [&](EventId id) { return "\"" + formatEventId(trace, id) + "\""; };
	for (const auto &e : trace.events()) {
		os << "  " << node(e.id) << " [label=\"" << formatEventId(trace, e.id) << ": "
		   << (e.isWrite() ? "W " : "R ") << trace.varName(e.var);
		if (e.isWrite())
			os << "=" << e.value;
		os << "\"];\n";
	}
	for (ThreadId t = 0; t < trace.threadCount(); ++t) {
		auto ids = trace.threadEvents(t);
		for (std::size_t i = 1; i < ids.size(); ++i)
			os << "  " << node(ids[i - 1]) << " -> " << node(ids[i]) << " [style=solid];\n";
	}
	auto rf = trace.rfEdges();
	std::sort(rf.begin(), rf.end());
	for (auto [w, r] : rf)
		os << "  " << node(w) << " -> " << node(r) << " [style=dashed, label=\"rf\"];\n";
	for (VarId x = 0; x < trace.varCount(); ++x) {
		auto co = trace.coEdges(x);
		std::sort(co.begin(), co.end());
		for (auto [a, b] : co)
			os << "  " << node(a) << " -> " << node(b) << " [style=dotted, label=\"co\"];\n";
	}
	os << "}\n";
	return os.str();
}

} // namespace ramc
