// Copyright 2026 The Schubitope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schubitope/index_set.h"

#include <bit>
#include <charconv>

#include "schubitope/errors.h"

namespace schubitope {

std::uint64_t FullMask(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw DomainError("dimension " + std::to_string(n) + " outside [0, 64]");
  }
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

IndexSet::IndexSet(int n) : n_(n) { FullMask(n); }

IndexSet IndexSet::FromMask(int n, std::uint64_t mask) {
  IndexSet s(n);
  if ((mask & ~FullMask(n)) != 0) {
    throw DomainError("mask has bits outside [" + std::to_string(n) + "]");
  }
  s.mask_ = mask;
  return s;
}

IndexSet IndexSet::FromElements(int n, std::span<const int> elements) {
  IndexSet s(n);
  for (int i : elements) s.insert(i);
  return s;
}

IndexSet IndexSet::Full(int n) { return FromMask(n, FullMask(n)); }

IndexSet IndexSet::Parse(int n, std::string_view csv) {
  IndexSet s(n);
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t end = csv.find(',', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view token = csv.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw ParseError("set: '" + std::string(token) + "' is not an integer");
    }
    if (value < 1 || value > n) {
      throw ParseError("set: element " + std::to_string(value) +
                       " outside [1, " + std::to_string(n) + "]");
    }
    s.insert(value);
    pos = end + 1;
  }
  return s;
}

void IndexSet::CheckElement(int i) const {
  if (i < 1 || i > n_) {
    throw DomainError("element " + std::to_string(i) + " outside [1, " +
                      std::to_string(n_) + "]");
  }
}

bool IndexSet::contains(int i) const {
  if (i < 1 || i > n_) return false;
  return (mask_ >> (i - 1)) & 1u;
}

int IndexSet::size() const { return std::popcount(mask_); }

void IndexSet::insert(int i) {
  CheckElement(i);
  mask_ |= std::uint64_t{1} << (i - 1);
}

void IndexSet::erase(int i) {
  CheckElement(i);
  mask_ &= ~(std::uint64_t{1} << (i - 1));
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

IndexSet IndexSet::complement() const {
  return FromMask(n_, FullMask(n_) & ~mask_);
}

IndexSet IndexSet::operator|(const IndexSet& other) const {
  if (n_ != other.n_) throw DimensionError("set union across ground sets");
  return FromMask(n_, mask_ | other.mask_);
}

IndexSet IndexSet::operator&(const IndexSet& other) const {
  if (n_ != other.n_) throw DimensionError("set intersection across ground sets");
  return FromMask(n_, mask_ & other.mask_);
}

bool IndexSet::IsSubsetOf(const IndexSet& other) const {
  return (mask_ & ~other.mask_) == 0;
}

std::string IndexSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace schubitope
