/*
   Copyright 2026 the rdo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RDO_CLI_APP_HPP
#define RDO_CLI_APP_HPP

#include <string>
#include <vector>

namespace rdo::cli {

// Full command-line entry point. Exit codes: 0 success, 1 a sweep found
// mismatches or an identity check failed, 2 usage or domain error.
int run(int argc, const char* const* argv);

// Same, for tests: args exclude the program name.
int run(const std::vector<std::string>& args);

}  // namespace rdo::cli

#endif  // RDO_CLI_APP_HPP
