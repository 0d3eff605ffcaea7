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

#ifndef OPFIELDS_REPORT_HPP
#define OPFIELDS_REPORT_HPP

#include <string>
#include <vector>

namespace opfields {

/// Outcome of one verified identity. Failures carry a witness; they are
/// data, not errors.
struct CheckItem {
    std::string name;
    bool pass = true;
    std::string witness;
};

class CheckReport {
  public:
    void record(std::string name, bool pass, std::string witness = "")
    {
        items_.push_back({std::move(name), pass, std::move(witness)});
    }
    void require(std::string name, bool pass, std::string witness = "")
    {
        record(std::move(name), pass, std::move(witness));
    }
    void merge(const CheckReport& other, const std::string& prefix = "")
    {
        for (const auto& it : other.items_)
            items_.push_back({prefix.empty() ? it.name : prefix + "/" + it.name, it.pass,
                              it.witness});
    }

    bool all_pass() const
    {
        for (const auto& it : items_)
            if (!it.pass) return false;
        return true;
    }
    int fail_count() const
    {
        int n = 0;
        for (const auto& it : items_)
            if (!it.pass) ++n;
        return n;
    }
    const std::vector<CheckItem>& items() const { return items_; }

    std::string first_failure() const
    {
        for (const auto& it : items_)
            if (!it.pass) return it.name + (it.witness.empty() ? "" : ": " + it.witness);
        return "";
    }

  private:
    std::vector<CheckItem> items_;
};

}  // namespace opfields

#endif
