// Copyright 2026 The orient2 Authors
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

#ifndef ORIENT2_CLI_HPP_
#define ORIENT2_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace orient2::cli {

// Runs one `orient2` invocation. `args` excludes the program name.
// Exit codes: 0 success, 1 domain error (`error: <CODE>: <detail>` on
// stderr), 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace orient2::cli

#endif  // ORIENT2_CLI_HPP_
