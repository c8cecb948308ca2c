// Copyright 2026 The netcon Authors
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

// Line-oriented text format for instances:
//
//   netcon 1
//   objective wct            # or: maxlat
//   vertices <n>
//   edge <u> <v> <length>
//   pair <u> <v> <weight> [<due>]
//
// `#` starts a comment. The due column is required iff the objective is
// maxlat. WriteInstance emits the canonical form: edges sorted by (u, v),
// then pairs sorted by (u, v), with u < v on every line.

#ifndef NETCON_INSTANCE_IO_H_
#define NETCON_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "netcon/instance.h"

namespace netcon {

// Malformed input. line() is 1-based, or 0 when the error is not tied to a
// single line.
class ParseError : public InvalidInstanceError {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

Instance ParseInstance(std::string_view text);
std::string WriteInstance(const Instance& instance);

// Reads a whole file; throws Error if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace netcon

#endif  // NETCON_INSTANCE_IO_H_
