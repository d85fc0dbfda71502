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


#include "ramc/program.hpp"

#include "ramc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace ramc {

bool compare(Value lhs, Cmp op, Value rhs)
{
	switch (op) {
	case Cmp::Eq:
		return lhs == rhs;
	case Cmp::Ne:
		return lhs != rhs;
	case Cmp::Lt:
		return lhs < rhs;
	case Cmp::Le:
		return lhs <= rhs;
	case Cmp::Gt:
		return lhs > rhs;
	case Cmp::Ge:
		return lhs >= rhs;
	}
	return false;
}

std::string_view cmpText(Cmp op)
{
	switch (op) {
	case Cmp::Eq:
		return "==";
	case Cmp::Ne:
		return "!=";
	case Cmp::Lt:
		return "<";
	case Cmp::Le:
		return "<=";
	case Cmp::Gt:
		return ">";
	case Cmp::Ge:
		return ">=";
	}
	return "?";
}

std::optional<RegId> ThreadCode::findRegister(std::string_view n) const
{
	for (RegId r = 0; r < registers.size(); ++r)
		if (registers[r] == n)
			return r;
	return std::nullopt;
}

std::optional<VarId> Program::findVar(std::string_view name) const
{
	for (VarId x = 0; x < vars.size(); ++x)
		if (vars[x] == name)
			return x;
	return std::nullopt;
}

std::optional<std::uint32_t> Program::findThread(std::string_view name) const
{
	for (std::uint32_t t = 0; t < threads.size(); ++t)
		if (threads[t].name == name)
			return t;
	return std::nullopt;
}

std::size_t Program::globalStatementCount() const
{
	std::size_t n = 0;
	for (const auto &t : threads)
		n += static_cast<std::size_t>(std::count_if(t.body.begin(), t.body.end(),
							    [](const Statement &s) { return s.isGlobal(); }));
	return n;
}

namespace {

bool isJump(const Statement &s)
{
	return s.kind == Statement::Kind::Goto || s.kind == Statement::Kind::CondGoto;
}

} // namespace

bool Program::hasBackwardJump() const
{
	for (const auto &t : threads)
		for (std::size_t i = 0; i < t.body.size(); ++i)
			if (isJump(t.body[i]) && t.body[i].target <= i)
				return true;
	return false;
}

Value evaluate(const Expr &e, const std::vector<Value> &regs)
{
	// Wrapping arithmetic: overflow is defined behaviour for fuzzed inputs.
	auto wrap = [](std::uint64_t v) { return static_cast<Value>(v); };
	switch (e.kind) {
	case Expr::Kind::Const:
		return e.value;
	case Expr::Kind::Reg:
		return e.reg < regs.size() ? regs[e.reg] : 0;
	case Expr::Kind::Neg:
		return wrap(0 - static_cast<std::uint64_t>(evaluate(e.args[0], regs)));
	default:
		break;
	}
	const auto a = static_cast<std::uint64_t>(evaluate(e.args[0], regs));
	const auto b = static_cast<std::uint64_t>(evaluate(e.args[1], regs));
	if (e.kind == Expr::Kind::Add)
		return wrap(a + b);
	if (e.kind == Expr::Kind::Sub)
		return wrap(a - b);
	return wrap(a * b);
}

/* Parser */

namespace {

struct Token {
	enum class Kind { Ident, Int, Sym };
	Kind kind;
	std::string text;
	std::size_t column;
};

std::vector<Token> tokenize(std::string_view line, std::size_t lineNo)
{
	std::vector<Token> out;
	std::size_t i = 0;
	while (i < line.size()) {
		const char c = line[i];
		if (c == '#')
			break;
		if (std::isspace(static_cast<unsigned char>(c))) {
			++i;
			continue;
		}
		const std::size_t start = i;
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			while (i < line.size() &&
			       (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
				++i;
			out.push_back({Token::Kind::Ident, std::string(line.substr(start, i - start)), start + 1});
			continue;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
				++i;
			out.push_back({Token::Kind::Int, std::string(line.substr(start, i - start)), start + 1});
			continue;
		}
		static const char *const twoChar[] = {"==", "!=", "<=", ">=", "&&", "||"};
		bool matched = false;
		for (const char *sym : twoChar) {
			if (line.substr(i, 2) == sym) {
				out.push_back({Token::Kind::Sym, sym, start + 1});
				i += 2;
				matched = true;
				break;
			}
		}
		if (matched)
			continue;
		if (std::string_view("()+-*=<>@").find(c) != std::string_view::npos) {
			out.push_back({Token::Kind::Sym, std::string(1, c), start + 1});
			++i;
			continue;
		}
		throw FormatError(std::string("unexpected character '") + c + "'", lineNo, start + 1);
	}
	return out;
}

struct PendingFinal {
	FinalCondition::Mode mode;
	struct Atom {
		std::string reg;
		std::string thread;
		std::size_t column;
		Cmp cmp;
		Value value;
	};
	std::vector<std::vector<Atom>> disjuncts;
	std::size_t line;
};

class Parser {
public:
	explicit Parser(std::string_view text) : text_(text) {}

	Program run()
	{
		std::size_t lineNo = 0;
		std::size_t pos = 0;
		while (pos <= text_.size()) {
			auto nl = text_.find('\n', pos);
			if (nl == std::string_view::npos)
				nl = text_.size();
			auto line = text_.substr(pos, nl - pos);
			if (!line.empty() && line.back() == '\r')
				line.remove_suffix(1);
			++lineNo;
			line_ = lineNo;
			toks_ = tokenize(line, lineNo);
			lineLength_ = line.size();
			at_ = 0;
			if (!toks_.empty())
				statementLine();
			pos = nl + 1;
		}
		line_ = lineNo;
		if (current_)
			fail("thread '" + prog_.threads.back().name + "' is missing 'end'", lineLength_ + 1);
		if (prog_.threads.empty())
			throw FormatError("program declares no threads", 1, 1);
		if (final_)
			resolveFinal();
		return std::move(prog_);
	}

private:
	[[noreturn]] void fail(const std::string &msg, std::size_t column) const
	{
		throw FormatError(msg, line_, column);
	}
	[[noreturn]] void failHere(const std::string &msg) const
	{
		fail(msg, at_ < toks_.size() ? toks_[at_].column : lineLength_ + 1);
	}

	bool done() const { return at_ >= toks_.size(); }
	const Token &peek() const { return toks_[at_]; }
	bool peekSym(std::string_view s) const
	{
		return !done() && peek().kind == Token::Kind::Sym && peek().text == s;
	}

	const Token &next(const char *what)
	{
		if (done())
			failHere(std::string("expected ") + what);
		return toks_[at_++];
	}

	std::string ident(const char *what)
	{
		const auto &t = next(what);
		if (t.kind != Token::Kind::Ident) {
			--at_;
			failHere(std::string("expected ") + what);
		}
		return t.text;
	}

	void expectSym(std::string_view s)
	{
		const auto &t = next(std::string(s).c_str());
		if (t.kind != Token::Kind::Sym || t.text != s) {
			--at_;
			failHere("expected '" + std::string(s) + "'");
		}
	}

	void expectKeyword(std::string_view kw)
	{
		if (done() || peek().kind != Token::Kind::Ident || peek().text != kw)
			failHere("expected '" + std::string(kw) + "'");
		++at_;
	}

	void expectEnd()
	{
		if (!done())
			failHere("unexpected '" + peek().text + "'");
	}

	Value integer(const Token &t)
	{
		Value v = 0;
		auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
		if (ec != std::errc{} || p != t.text.data() + t.text.size())
			fail("integer literal out of range", t.column);
		return v;
	}

	Value signedInteger(const char *what)
	{
		bool neg = false;
		if (peekSym("-")) {
			neg = true;
			++at_;
		}
		const auto &t = next(what);
		if (t.kind != Token::Kind::Int) {
			--at_;
			failHere(std::string("expected ") + what);
		}
		auto v = integer(t);
		return neg ? -v : v;
	}

	VarId variable()
	{
		const auto column = done() ? lineLength_ + 1 : peek().column;
		auto name = ident("variable name");
		auto x = prog_.findVar(name);
		if (!x)
			fail("undeclared variable '" + name + "'", column);
		return *x;
	}

	RegId registerRef(const std::string &name, std::size_t column)
	{
		if (prog_.findVar(name))
			fail("shared variable '" + name + "' used as a register", column);
		if (name == "if" || name == "goto")
			fail("'" + name + "' is reserved", column);
		auto &th = *current_;
		if (auto r = th.findRegister(name))
			return *r;
		th.registers.push_back(name);
		return static_cast<RegId>(th.registers.size() - 1);
	}

	Expr expression()
	{
		auto lhs = term();
		while (peekSym("+") || peekSym("-")) {
			auto kind = peek().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
			++at_;
			Expr e{kind, 0, 0, {std::move(lhs), term()}};
			lhs = std::move(e);
		}
		return lhs;
	}

	Expr term()
	{
		auto lhs = unary();
		while (peekSym("*")) {
			++at_;
			Expr e{Expr::Kind::Mul, 0, 0, {std::move(lhs), unary()}};
			lhs = std::move(e);
		}
		return lhs;
	}

	Expr unary()
	{
		if (peekSym("-")) {
			++at_;
			if (!done() && peek().kind == Token::Kind::Int)
				return Expr::constant(-integer(toks_[at_++]));
			return Expr{Expr::Kind::Neg, 0, 0, {unary()}};
		}
		return primary();
	}

	Expr primary()
	{
		if (done())
			failHere("expected expression");
		const auto &t = toks_[at_++];
		if (t.kind == Token::Kind::Int)
			return Expr::constant(integer(t));
		if (t.kind == Token::Kind::Ident) {
			if (prog_.findVar(t.text))
				fail("shared variable '" + t.text + "' in expression", t.column);
			return Expr::regRef(registerRef(t.text, t.column));
		}
		if (t.text == "(") {
			auto e = expression();
			expectSym(")");
			return e;
		}
		--at_;
		failHere("expected expression");
	}

	Cmp comparison()
	{
		static const std::pair<const char *, Cmp> ops[] = {
			{"==", Cmp::Eq}, {"!=", Cmp::Ne}, {"<=", Cmp::Le},
			{">=", Cmp::Ge}, {"<", Cmp::Lt},  {">", Cmp::Gt},
		};
		for (auto [text, op] : ops) {
			if (peekSym(text)) {
				++at_;
				return op;
			}
		}
		failHere("expected comparison operator");
	}

	void statementLine()
	{
		const auto head = peek();
		if (head.kind != Token::Kind::Ident)
			failHere("expected a keyword");
		++at_;
		const auto &kw = head.text;

		if (kw == "vars") {
			if (current_ || !prog_.threads.empty())
				fail("'vars' must precede the threads", head.column);
			if (done())
				failHere("expected variable name");
			while (!done()) {
				const auto column = peek().column;
				auto name = ident("variable name");
				if (prog_.findVar(name))
					fail("duplicate variable '" + name + "'", column);
				prog_.vars.push_back(std::move(name));
			}
			return;
		}
		if (kw == "thread") {
			if (current_)
				fail("nested 'thread'", head.column);
			if (final_)
				fail("'final' must follow the threads", head.column);
			const auto column = done() ? lineLength_ + 1 : peek().column;
			auto name = ident("thread name");
			if (prog_.findThread(name))
				fail("duplicate thread '" + name + "'", column);
			expectEnd();
			prog_.threads.push_back(ThreadCode{std::move(name), {}, {}});
			current_ = &prog_.threads.back();
			jumps_.clear();
			return;
		}
		if (kw == "final") {
			if (current_)
				fail("'final' inside a thread", head.column);
			if (final_)
				fail("duplicate 'final'", head.column);
			finalLine();
			return;
		}
		if (!current_)
			fail("'" + kw + "' outside a thread", head.column);
		if (kw == "end") {
			expectEnd();
			closeThread();
			return;
		}

		Statement s;
		if (kw == "w") {
			s.kind = Statement::Kind::Write;
			s.var = variable();
			s.expr = expression();
		} else if (kw == "r") {
			s.kind = Statement::Kind::Read;
			s.var = variable();
			const auto column = done() ? lineLength_ + 1 : peek().column;
			s.reg = registerRef(ident("register"), column);
		} else if (kw == "l") {
			localStatement(s);
		} else if (kw == "label") {
			s.kind = Statement::Kind::Label;
			const auto column = done() ? lineLength_ + 1 : peek().column;
			s.label = ident("label name");
			for (const auto &prev : current_->body)
				if (prev.kind == Statement::Kind::Label && prev.label == s.label)
					fail("duplicate label '" + s.label + "'", column);
		} else if (kw == "halt") {
			s.kind = Statement::Kind::Halt;
		} else {
			fail("unknown statement '" + kw + "'", head.column);
		}
		expectEnd();
		current_->body.push_back(std::move(s));
	}

	void localStatement(Statement &s)
	{
		if (!done() && peek().kind == Token::Kind::Ident && peek().text == "if") {
			++at_;
			s.kind = Statement::Kind::CondGoto;
			s.expr = expression();
			s.cmp = comparison();
			s.rhs = expression();
			expectKeyword("goto");
			jumpTarget(s);
			return;
		}
		if (!done() && peek().kind == Token::Kind::Ident && peek().text == "goto") {
			++at_;
			s.kind = Statement::Kind::Goto;
			jumpTarget(s);
			return;
		}
		s.kind = Statement::Kind::Assign;
		const auto column = done() ? lineLength_ + 1 : peek().column;
		s.reg = registerRef(ident("register"), column);
		expectSym("=");
		s.expr = expression();
	}

	void jumpTarget(Statement &s)
	{
		const auto column = done() ? lineLength_ + 1 : peek().column;
		s.label = ident("label name");
		jumps_.push_back({current_->body.size(), line_, column});
	}

	void closeThread()
	{
		auto &body = current_->body;
		std::map<std::string, std::size_t> labels;
		for (std::size_t i = 0; i < body.size(); ++i)
			if (body[i].kind == Statement::Kind::Label)
				labels[body[i].label] = i;
		for (const auto &j : jumps_) {
			auto it = labels.find(body[j.index].label);
			if (it == labels.end())
				throw FormatError("unknown label '" + body[j.index].label + "'", j.line, j.column);
			body[j.index].target = it->second;
		}
		current_ = nullptr;
	}

	void finalLine()
	{
		PendingFinal f;
		f.line = line_;
		const auto mode = ident("'exists' or 'forall'");
		if (mode == "exists")
			f.mode = FinalCondition::Mode::Exists;
		else if (mode == "forall")
			f.mode = FinalCondition::Mode::Forall;
		else
			fail("expected 'exists' or 'forall'", toks_[at_ - 1].column);
		f.disjuncts.emplace_back();
		for (;;) {
			PendingFinal::Atom a;
			a.column = done() ? lineLength_ + 1 : peek().column;
			a.reg = ident("register");
			expectSym("@");
			a.thread = ident("thread name");
			a.cmp = comparison();
			a.value = signedInteger("integer");
			f.disjuncts.back().push_back(std::move(a));
			if (done())
				break;
			if (peekSym("&&")) {
				++at_;
			} else if (peekSym("||")) {
				++at_;
				f.disjuncts.emplace_back();
			} else {
				failHere("expected '&&', '||' or end of line");
			}
		}
		final_ = std::move(f);
	}

	void resolveFinal()
	{
		FinalCondition fc;
		fc.mode = final_->mode;
		for (const auto &conj : final_->disjuncts) {
			std::vector<FinalAtom> atoms;
			for (const auto &a : conj) {
				auto t = prog_.findThread(a.thread);
				if (!t)
					throw FormatError("unknown thread '" + a.thread + "'", final_->line, a.column);
				auto r = prog_.threads[*t].findRegister(a.reg);
				if (!r)
					throw FormatError("thread '" + a.thread + "' has no register '" + a.reg + "'",
							  final_->line, a.column);
				atoms.push_back({*t, *r, a.cmp, a.value});
			}
			fc.disjuncts.push_back(std::move(atoms));
		}
		prog_.final = std::move(fc);
	}

	struct JumpRef {
		std::size_t index;
		std::size_t line;
		std::size_t column;
	};

	std::string_view text_;
	Program prog_;
	ThreadCode *current_ = nullptr;
	std::vector<JumpRef> jumps_;
	std::optional<PendingFinal> final_;
	std::vector<Token> toks_;
	std::size_t at_ = 0;
	std::size_t line_ = 0;
	std::size_t lineLength_ = 0;
};

} // namespace

Program parseProgram(std::string_view text) { return Parser(text).run(); }

/* Printer */

namespace {

void printExpr(std::ostream &os, const Expr &e, const ThreadCode &t)
{
	switch (e.kind) {
	case Expr::Kind::Const:
		os << e.value;
		return;
	case Expr::Kind::Reg:
		os << t.registers[e.reg];
		return;
	case Expr::Kind::Neg:
		os << "-(";
		printExpr(os, e.args[0], t);
		os << ")";
		return;
	default:
		break;
	}
	const char *op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " : " * ";
	os << "(";
	printExpr(os, e.args[0], t);
	os << op;
	printExpr(os, e.args[1], t);
	os << ")";
}

} // namespace

std::string printProgram(const Program &p)
{
	std::ostringstream os;
	if (!p.vars.empty()) {
		os << "vars";
		for (const auto &v : p.vars)
			os << ' ' << v;
		os << '\n';
	}
	for (const auto &t : p.threads) {
		os << "thread " << t.name << '\n';
		for (const auto &s : t.body) {
			os << "  ";
			switch (s.kind) {
			case Statement::Kind::Write:
				os << "w " << p.vars[s.var] << ' ';
				printExpr(os, s.expr, t);
				break;
			case Statement::Kind::Read:
				os << "r " << p.vars[s.var] << ' ' << t.registers[s.reg];
				break;
			case Statement::Kind::Assign:
				os << "l " << t.registers[s.reg] << " = ";
				printExpr(os, s.expr, t);
				break;
			case Statement::Kind::CondGoto:
				os << "l if ";
				printExpr(os, s.expr, t);
				os << ' ' << cmpText(s.cmp) << ' ';
				printExpr(os, s.rhs, t);
				os << " goto " << s.label;
				break;
			case Statement::Kind::Goto:
				os << "l goto " << s.label;
				break;
			case Statement::Kind::Label:
				os << "label " << s.label;
				break;
			case Statement::Kind::Halt:
				os << "halt";
				break;
			}
			os << '\n';
		}
		os << "end\n";
	}
	if (p.final) {
		os << "final " << (p.final->mode == FinalCondition::Mode::Exists ? "exists" : "forall");
		for (std::size_t d = 0; d < p.final->disjuncts.size(); ++d) {
			if (d)
				os << " ||";
			const auto &conj = p.final->disjuncts[d];
			for (std::size_t i = 0; i < conj.size(); ++i) {
				const auto &a = conj[i];
				if (i)
					os << " &&";
				os << ' ' << p.threads[a.thread].registers[a.reg] << '@' << p.threads[a.thread].name
				   << ' ' << cmpText(a.cmp) << ' ' << a.value;
			}
		}
		os << '\n';
	}
	return os.str();
}

/* Unrolling */

namespace {

void resolveTargets(ThreadCode &t)
{
	std::map<std::string, std::size_t> labels;
	for (std::size_t i = 0; i < t.body.size(); ++i)
		if (t.body[i].kind == Statement::Kind::Label)
			labels[t.body[i].label] = i;
	for (auto &s : t.body)
		if (isJump(s))
			s.target = labels.at(s.label);
}

std::string freshLabel(const std::set<std::string> &taken, std::string base)
{
	while (taken.contains(base))
		base += '_';
	return base;
}

// Unrolls the back edge at `tail` (jumping to `head`) in place.
void unrollLoop(ThreadCode &t, std::size_t head, std::size_t tail, std::size_t bound,
		std::optional<std::string> &haltLabel)
{
	std::set<std::string> taken;
	for (const auto &s : t.body)
		if (s.kind == Statement::Kind::Label)
			taken.insert(s.label);

	std::set<std::string> local;
	for (std::size_t i = head; i <= tail; ++i)
		if (t.body[i].kind == Statement::Kind::Label)
			local.insert(t.body[i].label);

	// renamed[k][name]: label `name` inside copy k.
	std::vector<std::map<std::string, std::string>> renamed(bound);
	for (std::size_t k = 0; k < bound; ++k) {
		for (const auto &name : local) {
			if (k == 0) {
				renamed[k][name] = name;
				continue;
			}
			auto fresh = freshLabel(taken, name + "_u" + std::to_string(k));
			taken.insert(fresh);
			renamed[k][name] = fresh;
		}
	}

	const auto headLabel = t.body[head].label;
	const bool hadHalt = haltLabel.has_value();
	bool needHalt = false;
	std::vector<Statement> copies;
	for (std::size_t k = 0; k < bound; ++k) {
		for (std::size_t i = head; i <= tail; ++i) {
			Statement s = t.body[i];
			const bool last = k + 1 == bound;
			if (i == tail) {
				if (!last) {
					s.label = renamed[k + 1][headLabel];
				} else if (s.kind == Statement::Kind::Goto) {
					s = Statement{};
					s.kind = Statement::Kind::Halt;
				} else {
					if (!haltLabel)
						haltLabel = freshLabel(taken, "unroll_halt");
					s.label = *haltLabel;
					needHalt = true;
				}
			} else if (s.kind == Statement::Kind::Label || (isJump(s) && local.contains(s.label))) {
				s.label = renamed[k][s.label];
			}
			copies.push_back(std::move(s));
		}
	}

	std::vector<Statement> body(t.body.begin(), t.body.begin() + static_cast<std::ptrdiff_t>(head));
	body.insert(body.end(), copies.begin(), copies.end());
	body.insert(body.end(), t.body.begin() + static_cast<std::ptrdiff_t>(tail + 1), t.body.end());
	if (needHalt && !hadHalt) {
		Statement label;
		label.kind = Statement::Kind::Label;
		label.label = *haltLabel;
		body.push_back(std::move(label));
		Statement halt;
		halt.kind = Statement::Kind::Halt;
		body.push_back(std::move(halt));
	}
	t.body = std::move(body);
	resolveTargets(t);
}

} // namespace

Program unroll(const Program &program, std::size_t bound)
{
	if (bound == 0)
		throw DomainError("unroll bound must be at least 1");
	Program out = program;
	constexpr std::size_t kMaxStatements = 1'000'000;
	for (auto &t : out.threads) {
		std::optional<std::string> haltLabel;
		for (;;) {
			std::optional<std::pair<std::size_t, std::size_t>> best; // (head, tail)
			for (std::size_t i = 0; i < t.body.size(); ++i) {
				const auto &s = t.body[i];
				if (!isJump(s) || s.target > i)
					continue;
				if (!best || i - s.target < best->second - best->first)
					best = std::pair(s.target, i);
			}
			if (!best)
				break;
			unrollLoop(t, best->first, best->second, bound, haltLabel);
			if (t.body.size() > kMaxStatements)
				throw DomainError("unrolling thread '" + t.name + "' exceeds " +
						  std::to_string(kMaxStatements) + " statements");
		}
	}
	return out;
}

/* Configurations */

Configuration Configuration::initial(std::shared_ptr<const Program> program)
{
	Configuration c;
	c.program_ = std::move(program);
	for (const auto &t : c.program_->threads)
		c.threads_.push_back(Local{0, std::vector<Value>(t.registers.size(), 0)});
	for (std::uint32_t t = 0; t < c.threads_.size(); ++t)
		c.normalize(t);
	return c;
}

void Configuration::normalize(std::uint32_t thread)
{
	auto &local = threads_[thread];
	const auto &body = program_->threads[thread].body;
	for (std::size_t steps = 0; local.pc != kFinished; ++steps) {
		if (local.pc >= body.size()) {
			local.pc = kFinished;
			break;
		}
		const auto &s = body[local.pc];
		if (s.isGlobal())
			return;
		if (steps == kLocalStepBudget)
			throw DivergenceError("thread '" + program_->threads[thread].name + "' ran " +
					      std::to_string(kLocalStepBudget) +
					      " local steps without reaching a global statement");
		switch (s.kind) {
		case Statement::Kind::Assign:
			local.regs[s.reg] = evaluate(s.expr, local.regs);
			++local.pc;
			break;
		case Statement::Kind::CondGoto:
			if (compare(evaluate(s.expr, local.regs), s.cmp, evaluate(s.rhs, local.regs)))
				local.pc = s.target;
			else
				++local.pc;
			break;
		case Statement::Kind::Goto:
			local.pc = s.target;
			break;
		case Statement::Kind::Label:
			++local.pc;
			break;
		case Statement::Kind::Halt:
			local.pc = kFinished;
			break;
		default:
			break;
		}
	}
}

std::optional<PendingGlobal> Configuration::nextGlobal(std::uint32_t thread) const
{
	const auto &local = threads_.at(thread);
	if (local.pc == kFinished)
		return std::nullopt;
	const auto &s = program_->threads[thread].body[local.pc];
	PendingGlobal g;
	g.thread = thread;
	g.var = s.var;
	if (s.kind == Statement::Kind::Write) {
		g.isWrite = true;
		g.value = evaluate(s.expr, local.regs);
	} else {
		g.isWrite = false;
		g.reg = s.reg;
	}
	return g;
}

bool Configuration::isTerminal() const
{
	return std::all_of(threads_.begin(), threads_.end(),
			   [](const Local &l) { return l.pc == kFinished; });
}

void Configuration::applyWrite(std::uint32_t thread)
{
	auto g = nextGlobal(thread);
	if (!g || !g->isWrite)
		throw InvariantError("thread " + std::to_string(thread + 1) + " has no pending write");
	++threads_[thread].pc;
	normalize(thread);
}

void Configuration::applyRead(std::uint32_t thread, Value value)
{
	auto g = nextGlobal(thread);
	if (!g || g->isWrite)
		throw InvariantError("thread " + std::to_string(thread + 1) + " has no pending read");
	threads_[thread].regs[g->reg] = value;
	++threads_[thread].pc;
	normalize(thread);
}

bool Configuration::operator==(const Configuration &other) const
{
	return threads_ == other.threads_ &&
	       (program_ == other.program_ || (program_ && other.program_ && *program_ == *other.program_));
}

bool evalFinalCondition(const Configuration &config, const Program &program)
{
	if (!config.isTerminal())
		throw DomainError("final condition evaluated on a non-terminal configuration");
	if (!program.final)
		return true;
	for (const auto &conj : program.final->disjuncts) {
		bool all = true;
		for (const auto &a : conj) {
			if (a.thread >= config.threadCount())
				throw FormatError("final condition names an unknown thread");
			const auto &regs = config.registers(a.thread);
			if (a.reg >= regs.size())
				throw FormatError("final condition names an unknown register");
			if (!compare(regs[a.reg], a.cmp, a.value)) {
				all = false;
				break;
			}
		}
		if (all)
			return true;
	}
	return false;
}

} // namespace ramc
