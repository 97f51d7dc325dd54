// Copyright 2026 The cfdyn Authors.
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

#include "cfdyn/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cfdyn {

namespace {

void check_digit(std::int64_t digit) {
  if (digit < 1) throw std::domain_error("partial quotients must be >= 1");
}

}  // namespace

Word::Word(std::initializer_list<std::int64_t> digits) : digits_(digits) {
  for (std::int64_t d : digits_) check_digit(d);
}

Word::Word(std::vector<std::int64_t> digits) : digits_(std::move(digits)) {
  for (std::int64_t d : digits_) check_digit(d);
}

Word Word::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string_view::npos)
      throw std::invalid_argument("empty digit in word literal");
    tok = tok.substr(b, e - b + 1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed digit in word literal");
    check_digit(value);
    out.push_back(value);
    pos = comma + 1;
    if (pos == text.size() && comma != text.size())
      throw std::invalid_argument("trailing comma in word literal");
  }
  return Word(std::move(out));
}

void Word::push_back(std::int64_t digit) {
  check_digit(digit);
  digits_.push_back(digit);
}

Word Word::prefix(std::size_t n) const {
  if (n > digits_.size()) throw std::out_of_range("prefix longer than word");
  Word w;
  w.digits_.assign(digits_.begin(), digits_.begin() + n);
  return w;
}

Word Word::concat(const Word& other) const {
  Word w = *this;
  w.digits_.insert(w.digits_.end(), other.digits_.begin(), other.digits_.end());
  return w;
}

Word Word::without(std::size_t k) const {
  if (k < 1 || k > digits_.size())
    throw std::out_of_range("digit index out of range");
  Word w = *this;
  w.digits_.erase(w.digits_.begin() + (k - 1));
  return w;
}

std::int64_t Word::max_digit() const {
  std::int64_t m = 0;
  for (std::int64_t d : digits_) m = std::max(m, d);
  return m;
}

bool Word::is_prefix_of(const Word& other) const {
  if (size() > other.size()) return false;
  return std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(digits_[i]);
  }
  return out;
}

}  // namespace cfdyn
