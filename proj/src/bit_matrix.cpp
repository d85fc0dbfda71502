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

#include "ramc/bit_matrix.hpp"

#include <algorithm>

namespace ramc {

BitMatrix::BitMatrix(std::size_t n)
{
	reserveColumns(n);
	n_ = n;
	bits_.assign(n_ * words_, 0);
}

void BitMatrix::reserveColumns(std::size_t n)
{
	const std::size_t needed = std::max<std::size_t>(1, (n + 63) / 64);
	if (needed <= words_)
		return;

	std::vector<std::uint64_t> grown(n_ * needed, 0);
	for (std::size_t i = 0; i < n_; ++i)
		std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(i * words_), words_,
			    grown.begin() + static_cast<std::ptrdiff_t>(i * needed));
	bits_ = std::move(grown);
	words_ = needed;
}

bool BitMatrix::intersects(std::size_t from, std::span<const std::uint64_t> mask) const
{
	auto r = row(from);
	for (std::size_t w = 0; w < words_ && w < mask.size(); ++w)
		if (r[w] & mask[w])
			return true;
	return false;
}

std::size_t BitMatrix::addNode()
{
	reserveColumns(n_ + 1);
	bits_.resize((n_ + 1) * words_, 0);
	return n_++;
}

std::uint64_t BitMatrix::appendSink(std::span<const std::size_t> preds)
{
	const std::size_t node = addNode();
	std::uint64_t work = 0;
	for (std::size_t i = 0; i < node; ++i) {
		for (auto p : preds) {
			++work;
			if (i == p || test(i, p)) {
				set(i, node);
				break;
			}
		}
	}
	return work;
}

std::uint64_t BitMatrix::closeTransitively()
{
	std::uint64_t work = 0;
	for (std::size_t k = 0; k < n_; ++k) {
		auto through = row(k);
		for (std::size_t i = 0; i < n_; ++i) {
			if (!test(i, k))
				continue;
			auto target = row(i);
			for (std::size_t w = 0; w < words_; ++w)
				target[w] |= through[w];
			work += words_;
		}
	}
	return work;
}

} // namespace ramc
