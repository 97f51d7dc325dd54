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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cfdyn {

// A finite word of partial quotients.  Every digit is a positive integer;
// the empty word is allowed and denotes the trivial cylinder [0, 1).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<std::int64_t> digits);
  explicit Word(std::vector<std::int64_t> digits);

  // Parses a comma-separated digit list; "" parses to the empty word.
  static Word parse(std::string_view text);

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  std::int64_t operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<std::int64_t>& digits() const { return digits_; }

  void push_back(std::int64_t digit);
  void pop_back() { digits_.pop_back(); }

  Word prefix(std::size_t n) const;
  Word concat(const Word& other) const;
  // Returns the word with the 1-based k-th digit removed.
  Word without(std::size_t k) const;

  std::int64_t max_digit() const;  // 0 for the empty word
  bool is_prefix_of(const Word& other) const;

  std::string str() const;  // comma-separated, "" for the empty word

  friend bool operator==(const Word& a, const Word& b) {
    return a.digits_ == b.digits_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  // Lexicographic, used only to order report output deterministically.
  friend bool operator<(const Word& a, const Word& b) {
    return a.digits_ < b.digits_;
  }

 private:
  std::vector<std::int64_t> digits_;
};

}  // namespace cfdyn
