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


#ifndef RAMC_PROGRAM_HPP
#define RAMC_PROGRAM_HPP

#include "ramc/event.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramc {

using RegId = std::uint32_t;

/// Register expression: integer literals, registers, + - * and negation.
struct Expr {
	enum class Kind : std::uint8_t { Const, Reg, Add, Sub, Mul, Neg };

	Kind kind = Kind::Const;
	Value value = 0;       // Const
	RegId reg = 0;         // Reg
	std::vector<Expr> args; // operands of Add/Sub/Mul (2) and Neg (1)

	static Expr constant(Value v) { return {Kind::Const, v, 0, {}}; }
	static Expr regRef(RegId r) { return {Kind::Reg, 0, r, {}}; }

	bool operator==(const Expr &) const = default;
};

enum class Cmp : std::uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

bool compare(Value lhs, Cmp op, Value rhs);
std::string_view cmpText(Cmp op);

struct Statement {
	enum class Kind : std::uint8_t { Write, Read, Assign, CondGoto, Goto, Label, Halt };

	Kind kind = Kind::Halt;
	VarId var = 0;     // Write, Read
	RegId reg = 0;     // Read, Assign
	Expr expr;         // Write value, Assign value, CondGoto lhs
	Expr rhs;          // CondGoto rhs
	Cmp cmp = Cmp::Eq; // CondGoto
	std::string label; // CondGoto, Goto target; Label name
	std::size_t target = 0; // resolved index of the target Label statement

	bool isGlobal() const { return kind == Kind::Write || kind == Kind::Read; }
	bool operator==(const Statement &) const = default;
};

struct ThreadCode {
	std::string name;
	std::vector<std::string> registers; // RegId -> name
	std::vector<Statement> body;

	std::optional<RegId> findRegister(std::string_view name) const;
	bool operator==(const ThreadCode &) const = default;
};

struct FinalAtom {
	std::uint32_t thread = 0;
	RegId reg = 0;
	Cmp cmp = Cmp::Eq;
	Value value = 0;

	bool operator==(const FinalAtom &) const = default;
};

struct FinalCondition {
	enum class Mode : std::uint8_t { Exists, Forall };

	Mode mode = Mode::Exists;
	std::vector<std::vector<FinalAtom>> disjuncts; // OR of ANDs

	bool operator==(const FinalCondition &) const = default;
};

struct Program {
	std::vector<std::string> vars;
	std::vector<ThreadCode> threads;
	std::optional<FinalCondition> final;

	std::optional<VarId> findVar(std::string_view name) const;
	std::optional<std::uint32_t> findThread(std::string_view name) const;
	/// Number of Write/Read statements over all threads.
	std::size_t globalStatementCount() const;
	/// Whether some goto targets a label at or before itself.
	bool hasBackwardJump() const;

	bool operator==(const Program &) const = default;
};

/// Parses the line-based program format. Throws FormatError with position.
Program parseProgram(std::string_view text);
/// Canonical text; parseProgram(printProgram(p)) == p.
std::string printProgram(const Program &program);

/// Replaces every backward jump by `bound` copies of the loop body; the
/// last copy's back edge leads to a Halt. Innermost loops go first.
Program unroll(const Program &program, std::size_t bound);

Value evaluate(const Expr &expr, const std::vector<Value> &regs);

/// The global statement a thread is blocked on.
struct PendingGlobal {
	std::uint32_t thread = 0;
	bool isWrite = true;
	VarId var = 0;
	Value value = 0; // writes
	RegId reg = 0;   // reads

	bool operator==(const PendingGlobal &) const = default;
};

/*
 * Per-thread (pc, registers). Configurations are kept normalized: after
 * construction and after every global step, each thread's local statements
 * are executed until the thread reaches a Write/Read or finishes.
 */
class Configuration {
public:
	static constexpr std::size_t kFinished = static_cast<std::size_t>(-1);
	static constexpr std::size_t kLocalStepBudget = 10000;

	/// Throws DivergenceError if a thread runs too many local steps.
	static Configuration initial(std::shared_ptr<const Program> program);

	const Program &program() const { return *program_; }
	std::size_t threadCount() const { return threads_.size(); }
	std::size_t pc(std::uint32_t thread) const { return threads_.at(thread).pc; }
	const std::vector<Value> &registers(std::uint32_t thread) const
	{
		return threads_.at(thread).regs;
	}

	std::optional<PendingGlobal> nextGlobal(std::uint32_t thread) const;
	bool isTerminal() const;

	/// Executes the pending write of `thread`.
	void applyWrite(std::uint32_t thread);
	/// Executes the pending read of `thread`, delivering `value`.
	void applyRead(std::uint32_t thread, Value value);

	bool operator==(const Configuration &other) const;

private:
	struct Local {
		std::size_t pc = 0;
		std::vector<Value> regs;

		bool operator==(const Local &) const = default;
	};

	void normalize(std::uint32_t thread);

	std::shared_ptr<const Program> program_;
	std::vector<Local> threads_;
};

/// Value of the final condition in a terminal configuration (true when the
/// program has none). Throws DomainError on a non-terminal configuration.
bool evalFinalCondition(const Configuration &config, const Program &program);

} // namespace ramc

#endif // RAMC_PROGRAM_HPP
