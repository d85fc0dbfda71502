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


// Command-line driver: explore, check-trace, fuzz and bench.

#include "ramc/benchmarks.hpp"
#include "ramc/dpor.hpp"
#include "ramc/errors.hpp"
#include "ramc/oracle.hpp"
#include "ramc/program.hpp"
#include "ramc/ra_checker.hpp"
#include "ramc/trace_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

enum ExitCode : int {
	kOk = 0,
	kForallViolated = 1,
	kInputError = 2,
	kInconsistent = 3,
	kCapacity = 4,
	kInternal = 5,
};

std::string readFile(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw ramc::FormatError("cannot open " + path);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

void writeFile(const fs::path &path, const std::string &text)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw ramc::FormatError("cannot write " + path.string());
	out << text;
}

void prepareDir(const fs::path &dir)
{
	std::error_code ec;
	fs::create_directories(dir, ec);
	if (ec || !fs::is_directory(dir))
		throw ramc::FormatError("cannot create directory " + dir.string());
}

struct StrategyFlags {
	std::string strategy = "closest";
	bool noReplayDeclare = false;

	void attach(CLI::App *cmd)
	{
		cmd->add_option("--strategy", strategy, "Which reads a postponed write is scheduled for")
			->check(CLI::IsMember({"closest", "all"}));
		cmd->add_flag("--no-replay-declare", noReplayDeclare,
			      "Do not schedule writes that were replayed from a schedule");
	}

	ramc::ExplorerOptions options() const
	{
		ramc::ExplorerOptions o;
		o.strategy = strategy == "all" ? ramc::PostponeStrategy::AllReads
					       : ramc::PostponeStrategy::ClosestRead;
		o.declareDuringReplay = !noReplayDeclare;
		return o;
	}
};

/* explore */

struct ExploreArgs {
	std::string input;
	std::size_t unroll = 1;
	std::string emit = "none";
	std::string out = "traces";
	bool debugInvariants = false;
	std::string stats;
	StrategyFlags flags;
};

int runExplore(const ExploreArgs &args)
{
	const auto parsed = ramc::parseProgram(readFile(args.input));
	auto program = std::make_shared<const ramc::Program>(ramc::unroll(parsed, args.unroll));

	if (args.emit != "none")
		prepareDir(args.out);

	auto options = args.flags.options();
	options.debugInvariants = args.debugInvariants;

	std::size_t emitted = 0;
	ramc::Reporter reporter;
	if (args.emit != "none") {
		reporter = [&](const ramc::TerminalState &st) {
			if (st.duplicate)
				return;
			++emitted;
			const auto name = "trace_" + std::to_string(emitted);
			if (args.emit == "dot")
				writeFile(fs::path(args.out) / (name + ".dot"), ramc::toDot(st.trace, name));
			else
				writeFile(fs::path(args.out) / (name + ".json"), ramc::toJson(st.trace) + "\n");
		};
	}

	const auto start = std::chrono::steady_clock::now();
	const auto stats = ramc::exploreProgram(program, options, reporter);
	const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

	std::cout << "traces: " << stats.weakKeys.size() << '\n';
	if (stats.duplicateTraces != 0)
		std::cout << "duplicates: " << stats.duplicateTraces << '\n';

	int code = kOk;
	if (program->final && stats.assertionOutcome) {
		const bool holds = *stats.assertionOutcome;
		if (program->final->mode == ramc::FinalCondition::Mode::Exists) {
			std::cout << (holds ? "YES" : "NO") << '\n';
		} else {
			std::cout << (holds ? "OK" : "VIOLATED") << '\n';
			if (!holds)
				code = kForallViolated;
		}
	}

	if (!args.stats.empty()) {
		json j = {
			{"traces", stats.weakKeys.size()},
			{"events", stats.eventsExecuted},
			{"schedules_created", stats.schedulesCreated},
			{"schedules_deduplicated", stats.schedulesDeduplicated},
			{"wall_ms", elapsed.count()},
		};
		if (args.stats == "-")
			std::cout << j.dump() << '\n';
		else
			writeFile(args.stats, j.dump(2) + "\n");
	}
	return code;
}

/* check-trace */

int runCheckTrace(const std::string &input)
{
	const auto trace = ramc::traceFromJson(readFile(input));
	const auto verdict = ramc::isRaConsistent(trace);
	if (verdict.consistent) {
		std::cout << "CONSISTENT\n";
		return kOk;
	}
	const auto saturated = ramc::saturate(trace);
	std::cout << "INCONSISTENT\n";
	if (verdict.variable)
		std::cout << "variable: " << saturated.varName(*verdict.variable) << '\n';
	std::cout << "cycle:";
	for (auto e : verdict.witnessCycle)
		std::cout << ' ' << ramc::formatEventId(saturated, e) << " ->";
	if (!verdict.witnessCycle.empty())
		std::cout << ' ' << ramc::formatEventId(saturated, verdict.witnessCycle.front());
	std::cout << '\n';
	return kInconsistent;
}

/* fuzz */

struct FuzzArgs {
	std::size_t seeds = 200;
	std::string spec;
	std::string quarantine = "quarantine";
	std::size_t maxEvents = 16;
	std::size_t maxWrites = 8;
	StrategyFlags flags;
};

ramc::FuzzSpec loadFuzzSpec(const std::string &path)
{
	ramc::FuzzSpec spec;
	if (path.empty())
		return spec;
	json j;
	try {
		j = json::parse(readFile(path));
		spec.threads = j.value("threads", spec.threads);
		spec.variables = j.value("variables", spec.variables);
		spec.statementsPerThread = j.value("statements_per_thread", spec.statementsPerThread);
		spec.maxWriteValue = j.value("max_write_value", spec.maxWriteValue);
		spec.conditionalProbability = j.value("conditional_probability", spec.conditionalProbability);
		spec.seed = j.value("seed", spec.seed);
	} catch (const json::exception &e) {
		throw ramc::FormatError(path + ": " + e.what());
	}
	if (spec.threads == 0 || spec.variables == 0 || spec.statementsPerThread == 0)
		throw ramc::FormatError(path + ": threads, variables and statements_per_thread must be positive");
	return spec;
}

int runFuzz(const FuzzArgs &args)
{
	const auto base = loadFuzzSpec(args.spec);
	const ramc::OracleLimits limits{args.maxEvents, args.maxWrites};
	const auto options = args.flags.options();

	std::size_t mismatches = 0;
	std::uint64_t duplicates = 0;
	auto quarantine = [&](const ramc::Program &p, std::uint64_t seed, const std::string &note) {
		prepareDir(args.quarantine);
		writeFile(fs::path(args.quarantine) / ("seed_" + std::to_string(seed) + ".rap"),
			  "# " + note + "\n" + ramc::printProgram(p));
	};

	for (std::size_t i = 0; i < args.seeds; ++i) {
		auto spec = base;
		spec.seed = base.seed + i;
		auto program = std::make_shared<const ramc::Program>(ramc::generateProgram(spec));
		ramc::DifferentialReport report;
		try {
			report = ramc::differentialCheck(program, options, limits);
		} catch (const ramc::CapacityError &) {
			quarantine(*program, spec.seed, "oracle capacity exceeded");
			throw;
		}
		duplicates += report.dporDuplicates;
		if (report.match)
			continue;
		++mismatches;
		std::ostringstream note;
		note << "mismatch: dpor " << report.dporKeys.size() << ", oracle " << report.oracleKeys.size()
		     << ", dpor duplicates " << report.dporDuplicates;
		std::cout << "seed " << spec.seed << ": " << note.str() << '\n';
		quarantine(*program, spec.seed, note.str());
	}
	std::cout << "fuzz: " << args.seeds << " programs, " << args.seeds - mismatches << " matches, "
		  << mismatches << " mismatches, " << duplicates << " duplicate traces\n";
	return mismatches == 0 ? kOk : kInternal;
}

/* bench */

struct BenchArgs {
	std::uint32_t maxWriters = 10;
	std::uint32_t maxRedundant = 6;
	bool debugInvariants = false;
};

int runBench(const BenchArgs &args)
{
	ramc::ExplorerOptions options;
	options.debugInvariants = args.debugInvariants;
	bool allMatch = true;

	std::cout << std::left << std::setw(20) << "benchmark" << std::right << std::setw(4) << "N"
		  << std::setw(10) << "traces" << std::setw(10) << "expected" << std::setw(12) << "events"
		  << std::setw(11) << "schedules" << std::setw(11) << "ms" << '\n';
	auto row = [&](const char *family, std::uint32_t n, const ramc::Program &p, std::uint64_t expected) {
		const auto start = std::chrono::steady_clock::now();
		const auto s = ramc::exploreProgram(std::make_shared<const ramc::Program>(p), options);
		const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
		const auto traces = s.weakKeys.size();
		allMatch = allMatch && traces == expected && s.duplicateTraces == 0;
		std::cout << std::left << std::setw(20) << family << std::right << std::setw(4) << n
			  << std::setw(10) << traces << std::setw(10) << expected << std::setw(12)
			  << s.eventsExecuted << std::setw(11) << s.schedulesCreated << std::setw(11)
			  << std::fixed << std::setprecision(2) << ms.count() << '\n';
	};
	for (std::uint32_t n = 1; n <= args.maxWriters; ++n)
		row("n_writers_a_reader", n, ramc::nWritersProgram(n), ramc::nWritersExpected(n));
	for (std::uint32_t n = 1; n <= args.maxRedundant; ++n)
		row("redundant_co", n, ramc::redundantCoProgram(n), ramc::redundantCoExpected(n));
	return allMatch ? kOk : kInternal;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Stateless model checker for release-acquire programs"};
	app.require_subcommand(1);

	ExploreArgs explore;
	auto *exploreCmd = app.add_subcommand("explore", "Enumerate the weak traces of a program");
	exploreCmd->add_option("program", explore.input, "Program file")->required();
	exploreCmd->add_option("--unroll", explore.unroll, "Loop unrolling bound")
		->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
		->capture_default_str();
	exploreCmd->add_option("--emit", explore.emit, "Write each terminal trace to --out")
		->check(CLI::IsMember({"none", "dot", "json"}))
		->capture_default_str();
	exploreCmd->add_option("--out", explore.out, "Directory for emitted traces")->capture_default_str();
	exploreCmd->add_flag("--debug-invariants", explore.debugInvariants,
			     "Check saturation and RA after every step");
	exploreCmd->add_option("--stats", explore.stats, "Write statistics JSON to a file ('-' for stdout)");
	explore.flags.attach(exploreCmd);

	std::string traceInput;
	auto *checkCmd = app.add_subcommand("check-trace", "Decide RA-consistency of a JSON trace");
	checkCmd->add_option("trace", traceInput, "Trace file")->required();

	FuzzArgs fuzz;
	auto *fuzzCmd = app.add_subcommand("fuzz", "Compare exploration with the reference enumeration");
	fuzzCmd->add_option("--seeds", fuzz.seeds, "Number of programs")->capture_default_str();
	fuzzCmd->add_option("--spec", fuzz.spec, "Generator parameters (JSON)");
	fuzzCmd->add_option("--quarantine", fuzz.quarantine, "Directory for failing programs")
		->capture_default_str();
	fuzzCmd->add_option("--max-events", fuzz.maxEvents, "Reference enumeration event bound")
		->capture_default_str();
	fuzzCmd->add_option("--max-writes", fuzz.maxWrites, "Reference enumeration writes per variable")
		->capture_default_str();
	fuzz.flags.attach(fuzzCmd);

	BenchArgs bench;
	auto *benchCmd = app.add_subcommand("bench", "Run the synthetic benchmark families");
	benchCmd->add_option("--max-writers", bench.maxWriters, "Largest N for n_writers_a_reader")
		->capture_default_str();
	benchCmd->add_option("--max-redundant", bench.maxRedundant, "Largest N for redundant_co")
		->capture_default_str();
	benchCmd->add_flag("--debug-invariants", bench.debugInvariants, "Check invariants after every step");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return kInputError;
	}

	try {
		if (*exploreCmd)
			return runExplore(explore);
		if (*checkCmd)
			return runCheckTrace(traceInput);
		if (*fuzzCmd)
			return runFuzz(fuzz);
		return runBench(bench);
	} catch (const ramc::FormatError &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kInputError;
	} catch (const ramc::LookupError &e) {
		std::cerr << "error: " << e.what() << '\n';
		return kInputError;
	} catch (const ramc::CapacityError &e) {
		std::cerr << "capacity: " << e.what() << '\n';
		return kCapacity;
	} catch (const ramc::DivergenceError &e) {
		std::cerr << "capacity: " << e.what() << '\n';
		return kCapacity;
	} catch (const std::exception &e) {
		std::cerr << "internal error: " << e.what() << '\n';
		return kInternal;
	}
}
