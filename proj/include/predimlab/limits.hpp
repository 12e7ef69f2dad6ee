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
#include <cstdint>
#include <cstdlib>
#include <string>

namespace predimlab {

/// Search caps. Each one can be overridden through a PREDIMLAB_* environment
/// variable (see caps_from_env).
struct Caps {
  std::size_t subset = 24;        // |B \ A| for exhaustive self-sufficiency checks
  std::size_t canonical = 8;      // vertices for canonical_form without a refinement split
  std::size_t membership = 22;    // vertices for exhaustive class membership
  std::size_t gadget = 22;        // |Y| for exhaustive gadget verification
  std::size_t connected_k = 18;   // connected-subset size bound for PARTIAL membership
  std::size_t samples = 1000;     // random subsets for PARTIAL membership
  std::size_t sa_extension = 12;  // |Y \ Z| in sa/msa searches
};

namespace detail {
inline std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(v));
  } catch (...) {
    return fallback;
  }
}
}  // namespace detail

inline Caps caps_from_env(Caps base = {}) {
  base.subset = detail::env_size("PREDIMLAB_SUBSET_CAP", base.subset);
  base.canonical = detail::env_size("PREDIMLAB_CANONICAL_CAP", base.canonical);
  base.membership = detail::env_size("PREDIMLAB_MEMBERSHIP_CAP", base.membership);
  base.gadget = detail::env_size("PREDIMLAB_GADGET_CAP", base.gadget);
  base.connected_k = detail::env_size("PREDIMLAB_CONNECTED_K", base.connected_k);
  base.samples = detail::env_size("PREDIMLAB_SAMPLES", base.samples);
  base.sa_extension = detail::env_size("PREDIMLAB_SA_CAP", base.sa_extension);
  return base;
}

}  // namespace predimlab
