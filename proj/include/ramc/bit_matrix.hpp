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

#ifndef RAMC_BIT_MATRIX_HPP
#define RAMC_BIT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ramc {

/*
 * Dense square boolean matrix with word-packed rows. Row i holds the
 * successors of node i. Used both as an adjacency matrix and as the cached
 * transitive closure of a relation.
 */
class BitMatrix {
public:
	BitMatrix() = default;
	explicit BitMatrix(std::size_t n);

	std::size_t size() const { return n_; }

	bool test(std::size_t from, std::size_t to) const
	{
		return (row(from)[to / 64] >> (to % 64)) & 1U;
	}
	void set(std::size_t from, std::size_t to) { row(from)[to / 64] |= bit(to); }

	/// Whether row `from` shares a set bit with `mask` (a row-sized span).
	bool intersects(std::size_t from, std::span<const std::uint64_t> mask) const;

	std::span<const std::uint64_t> row(std::size_t i) const
	{
		return {bits_.data() + i * words_, words_};
	}

	/// Appends an isolated node and returns its index.
	std::size_t addNode();

	/*
	 * Treats *this as a closed relation (already transitive) and appends a
	 * sink node whose immediate predecessors are `preds`. Keeps the matrix
	 * closed in O(n * |preds|) row probes. Returns the number of word
	 * operations performed.
	 */
	std::uint64_t appendSink(std::span<const std::size_t> preds);

	/// Replaces *this by its transitive closure (Warshall over packed rows).
	/// Returns the number of word operations performed.
	std::uint64_t closeTransitively();

	std::size_t words() const { return words_; }

	bool operator==(const BitMatrix &) const = default;

private:
	static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i % 64); }
	std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * words_, words_}; }
	void reserveColumns(std::size_t n);

	std::size_t n_ = 0;
	std::size_t words_ = 0;
	std::vector<std::uint64_t> bits_;
};

} // namespace ramc

#endif // RAMC_BIT_MATRIX_HPP
