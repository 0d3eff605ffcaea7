/*
   Copyright 2026 The opfields authors

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

// Acceptance suite: every criterion is checked with exact arithmetic and
// reported on its own line. Exit status is nonzero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <opfields/suite.hpp>

int main(int argc, char** argv)
{
    uint64_t seed = 7;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    std::vector<opfields::CriterionResult> results;
    try {
        results = opfields::run_check_suite("all", seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 2;
    }

    bool all = true;
    for (const auto& r : results) {
        std::printf("%s criterion %d: %s%s%s\n", r.pass ? "PASS" : "FAIL", r.number,
                    r.name.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s: %zu criteria\n", all ? "ALL PASS" : "FAILURES PRESENT", results.size());
    return all ? 0 : 1;
}
