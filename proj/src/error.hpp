// Copyright (c) 2026 The hypercross authors
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

#include <stdexcept>
#include <string>

namespace hx {

// Failure categories, mirrored one-to-one by the C API status codes.
enum class Err {
  invalid_argument,  // bad call: mismatched sizes, overlapping sets, bad edge, wrong signature
  degenerate,        // geometric degeneracy: dependent spans, zero normal, non-spanning input
  parse,             // malformed document
  search_exhausted,  // resampling or candidate search budget exhausted
  verify_failed,     // a certificate does not re-verify against its drawing
  internal,          // broken internal invariant; a bug, not bad input
};

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace hx
