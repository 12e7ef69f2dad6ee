// Copyright 2026 The Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace predimlab {

/// Malformed input: bad ids, bad files, parameters outside a construction's range.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed its configured cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::size_t cap, std::size_t requested)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ", requested " +
                           std::to_string(requested) + ")"),
        cap_(cap),
        requested_(requested) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::size_t cap_;
  std::size_t requested_;
};

/// A caller broke an operation's precondition (e.g. msa_base on a non-sa pair).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An invariant that should be guaranteed by a lemma failed at runtime.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace predimlab
