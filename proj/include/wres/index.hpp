// Copyright 2026 The wres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WRES_INDEX_HPP_
#define WRES_INDEX_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace wres {

// A frame index. Abstract labels are positive ids and range over 1..n;
// concrete indices carry a fixed value 1..n and are stored negated.
// Whether an abstract label is free or summed is determined by its
// occurrence count in the enclosing term (twice means summed).
struct Index {
  std::int32_t id = 0;

  static constexpr Index label(std::int32_t l) { return Index{l}; }
  static constexpr Index concrete(std::int32_t value) { return Index{-value}; }

  constexpr bool is_concrete() const { return id < 0; }
  constexpr bool is_abstract() const { return id > 0; }
  constexpr std::int32_t value() const { return -id; }

  // Concrete indices sort by value and before every abstract label.
  constexpr std::int64_t sort_key() const {
    return is_concrete() ? static_cast<std::int64_t>(value())
                         : (std::int64_t{1} << 32) + id;
  }
  friend constexpr bool operator==(Index a, Index b) { return a.id == b.id; }
  friend constexpr auto operator<=>(Index a, Index b) {
    return a.sort_key() <=> b.sort_key();
  }

  std::string to_string() const {
    return is_concrete() ? std::to_string(value()) : "i" + std::to_string(id);
  }
};

using LabelMap = std::map<Index, Index>;

}  // namespace wres

#endif  // WRES_INDEX_HPP_
