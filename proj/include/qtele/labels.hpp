// Copyright 2026 The qtele Authors
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

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtele {

/// Symbolic name of a qubit within a register ("a", "A1", "B2", ...).
class QubitLabel {
  public:
    QubitLabel(std::string name) : name_(std::move(name)) {}
    QubitLabel(const char *name) : name_(name) {}
    QubitLabel(std::string_view name) : name_(name) {}

    [[nodiscard]] const std::string &name() const noexcept { return name_; }

    friend auto operator<=>(const QubitLabel &, const QubitLabel &) = default;
    friend bool operator==(const QubitLabel &, const QubitLabel &) = default;

  private:
    std::string name_;
};

/// Ordered qubit labels. Element 0 is the most significant bit of a basis
/// index, so a ket |abc> is read left to right.
using Register = std::vector<QubitLabel>;

/// Builds a register from single-character names, e.g. "abcd".
Register register_from_chars(std::string_view names);

/// Throws LabelError if `labels` has a repeated entry.
void require_unique(const Register &labels);

/// Stringifies a register as "a,b,c".
std::string join_labels(const Register &labels);

} // namespace qtele
