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

// A short walk through the library: predimension and closures on a small
// graph, one gadget, a generic build and its extension audit.

#include <iostream>

#include "predimlab/predimlab.hpp"

using namespace predimlab;

int main() {
  const auto g = Signature::uniform(2, 1, 2);  // delta(A) = 2|A| - |edges in A|

  // a 4-cycle with a pendant vertex 4 hanging off 0
  const auto s = make_structure(g, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  const auto pair = s.set_of({0, 2});
  std::cout << "delta(S) = " << delta(s, s.all()) << "\n"
            << "delta({0,2}) = " << delta(s, pair) << ", d({0,2}) = " << dim(s, pair) << "\n"
            << "cl0({0,2}) has " << cl0(s, pair).closure.size() << " vertices, cl^d({0,2}) has "
            << cld(s, pair).size() << "\n"
            << "S in C0: " << (in_C0(s).member ? "yes" : "no") << "\n";

  const auto gp = build_gadget(5, 2, 2);
  const auto gr = verify_gadget(gp);
  std::cout << "gadget n=5 m=2: |Y| = " << gp.structure.order() << ", |X| = " << gp.x.size()
            << ", failures = " << gr.count(Status::Fail) << "\n";

  BuildConfig cfg;
  cfg.budget = 30;
  const auto b = build_generic(cfg);
  const auto audit = audit_extension_property(b.structure, b.tasks, 10, cfg.cls.mode(), 1);
  std::cout << "built " << b.structure.order() << " vertices in " << b.log.entries.size() << " steps; audit "
            << (audit.has_fail() ? "FAIL" : "PASS") << "\n";
  std::cout << emit_report(audit, ReportFormat::Text);
  return audit.has_fail() ? 1 : 0;
}
