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

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "predimlab/control_function.hpp"
#include "predimlab/errors.hpp"
#include "predimlab/io.hpp"
#include "predimlab/structure.hpp"

namespace predimlab {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "predimlab-report/1";

enum class Status { Pass, Fail, Degenerate, Partial };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Degenerate: return "DEGENERATE";
    case Status::Partial: return "PARTIAL";
  }
  return "?";
}

/// Enough to re-run a failed check: a claim name, its parameters, and the
/// structure (in predimlab/1 text, with the sets the claim reads).
struct Witness {
  std::string claim;
  std::map<std::string, std::string> params;
  std::string structure;

  static Witness of(std::string claim, const FiniteStructure& s,
                    const std::map<std::string, std::vector<VertexId>>& sets = {},
                    std::map<std::string, std::string> params = {}) {
    return Witness{std::move(claim), std::move(params), to_text(s, sets)};
  }
};

struct Case {
  std::string key;
  Status status = Status::Pass;
  std::optional<Witness> witness;
  std::optional<Rational> margin;
  std::string note;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  VerificationReport(std::string suite, std::uint64_t seed) : suite_(std::move(suite)), seed_(seed) {
    start_ = std::chrono::steady_clock::now();
  }

  const std::string& suite() const noexcept { return suite_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<Case>& cases() const noexcept { return cases_; }
  double wall_time() const noexcept { return wall_time_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  void label(std::string l) {
    if (std::find(labels_.begin(), labels_.end(), l) == labels_.end()) labels_.push_back(std::move(l));
  }

  /// Adds a case. A FAIL without a witness is a programming error.
  void add(Case c) {
    if (c.status == Status::Fail && !c.witness) throw InternalError("FAIL case '" + c.key + "' has no witness");
    cases_.push_back(std::move(c));
  }

  void pass(std::string key, std::optional<Rational> margin = std::nullopt, std::string note = {}) {
    add(Case{std::move(key), Status::Pass, std::nullopt, std::move(margin), std::move(note)});
  }

  void fail(std::string key, Witness w, std::optional<Rational> margin = std::nullopt, std::string note = {}) {
    add(Case{std::move(key), Status::Fail, std::move(w), std::move(margin), std::move(note)});
  }

  /// Sorts by key, checks uniqueness, stamps the wall time.
  void finalize() {
    std::sort(cases_.begin(), cases_.end(), [](const Case& a, const Case& b) { return a.key < b.key; });
    for (std::size_t i = 1; i < cases_.size(); ++i)
      if (cases_[i].key == cases_[i - 1].key) throw InternalError("duplicate case key '" + cases_[i].key + "'");
    wall_time_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(cases_.begin(), cases_.end(), [&](const Case& c) { return c.status == s; }));
  }
  bool has_fail() const { return count(Status::Fail) > 0; }

  const Case* find(const std::string& key) const {
    for (const auto& c : cases_)
      if (c.key == key) return &c;
    return nullptr;
  }

 private:
  std::string suite_;
  std::uint64_t seed_ = 0;
  std::vector<Case> cases_;
  std::vector<std::string> labels_;
  double wall_time_ = 0;
  std::chrono::steady_clock::time_point start_{};
};

enum class ReportFormat { Text, Machine };

/// JSON form. The wall time is left out unless asked for, so that identical
/// runs give identical bytes.
inline nlohmann::ordered_json report_json(const VerificationReport& r, bool with_wall_time = false) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = r.suite();
  j["toolVersion"] = kToolVersion;
  j["seed"] = r.seed();
  j["labels"] = r.labels();
  if (with_wall_time) j["wallTime"] = r.wall_time();
  j["summary"] = {{"total", r.cases().size()},
                  {"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"degenerate", r.count(Status::Degenerate)},
                  {"partial", r.count(Status::Partial)}};
  auto cases = nlohmann::ordered_json::array();
  for (const auto& c : r.cases()) {
    nlohmann::ordered_json jc;
    jc["caseKey"] = c.key;
    jc["status"] = status_name(c.status);
    if (c.margin) jc["margin"] = to_string(*c.margin);
    if (!c.note.empty()) jc["note"] = c.note;
    if (c.witness) {
      jc["witness"] = {{"claim", c.witness->claim}, {"params", c.witness->params}, {"structure", c.witness->structure}};
    }
    cases.push_back(std::move(jc));
  }
  j["cases"] = std::move(cases);
  return j;
}

inline std::string emit_report(const VerificationReport& r, ReportFormat fmt, bool with_wall_time = false) {
  if (fmt == ReportFormat::Machine) return report_json(r, with_wall_time).dump(2) + "\n";
  std::ostringstream os;
  os << "suite " << r.suite() << "  (predimlab " << kToolVersion << ", seed " << r.seed() << ")\n";
  for (const auto& l : r.labels()) os << "  note: " << l << '\n';
  for (const auto& c : r.cases()) {
    os << "  " << std::left << std::setw(10) << status_name(c.status) << ' ' << c.key;
    if (c.margin) {
      const auto q = to_string(*c.margin);
      if (q.size() <= 16) {
        os << "  margin " << q;
      } else {
        std::ostringstream approx;
        approx << std::setprecision(6) << static_cast<double>(*c.margin);
        os << "  margin ~" << approx.str();
      }
    }
    if (!c.note.empty()) os << "  (" << c.note << ')';
    os << '\n';
    if (c.witness) {
      os << "    witness claim " << c.witness->claim;
      for (const auto& [k, v] : c.witness->params) os << ' ' << k << '=' << v;
      os << '\n';
      std::istringstream lines(c.witness->structure);
      for (std::string line; std::getline(lines, line);) os << "      " << line << '\n';
    }
  }
  os << "summary: " << r.cases().size() << " cases, " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail)
     << " fail, " << r.count(Status::Degenerate) << " degenerate, " << r.count(Status::Partial) << " partial";
  if (with_wall_time) os << ", " << std::fixed << std::setprecision(3) << r.wall_time() << " s";
  os << '\n';
  return os.str();
}

/// Lower-case hex SHA-256.
inline std::string sha256_hex(const std::string& bytes) {
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw InternalError("sha256: cannot allocate context");
  const bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) == 1 && EVP_DigestFinal_ex(ctx, out, &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw InternalError("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(out[i]);
  return os.str();
}

inline std::string report_digest(const VerificationReport& r) { return sha256_hex(emit_report(r, ReportFormat::Machine)); }

}  // namespace predimlab
