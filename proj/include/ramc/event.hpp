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

#ifndef RAMC_EVENT_HPP
#define RAMC_EVENT_HPP

#include <compare>
#include <cstdint>
#include <functional>

namespace ramc {

using ThreadId = std::uint32_t;
using VarId = std::uint32_t;
using Value = std::int64_t;

/*
 * Identifies an event by (thread, per-thread index). Thread events are
 * numbered from 1 in program order. Initializers live on a reserved thread
 * that sorts before every real thread, carry index 0, and are told apart by
 * the variable they initialize.
 */
struct EventId {
	static constexpr std::int32_t kInitThread = -1;

	std::int32_t thread = kInitThread;
	std::uint32_t index = 0;
	VarId initVar = 0; // always 0 for thread events

	static constexpr EventId init(VarId var) { return {kInitThread, 0, var}; }
	static constexpr EventId of(ThreadId thread, std::uint32_t index)
	{
		return {static_cast<std::int32_t>(thread), index, 0};
	}

	constexpr bool isInit() const { return thread == kInitThread; }
	constexpr ThreadId threadId() const { return static_cast<ThreadId>(thread); }

	auto operator<=>(const EventId &) const = default;
};

enum class EventKind : std::uint8_t { Write, Read };

struct Event {
	EventId id;
	EventKind kind = EventKind::Write;
	VarId var = 0;
	Value value = 0; // meaningful for writes only

	bool isWrite() const { return kind == EventKind::Write; }
	bool isRead() const { return kind == EventKind::Read; }
	bool isInit() const { return id.isInit(); }
};

} // namespace ramc

template <>
struct std::hash<ramc::EventId> {
	std::size_t operator()(const ramc::EventId &id) const noexcept
	{
		auto h = static_cast<std::uint64_t>(static_cast<std::uint32_t>(id.thread));
		h = h * 0x9E3779B97F4A7C15ULL ^ id.index;
		h = h * 0x9E3779B97F4A7C15ULL ^ id.initVar;
		return static_cast<std::size_t>(h);
	}
};

#endif // RAMC_EVENT_HPP
