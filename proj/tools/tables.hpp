/*
   Copyright 2026 The popuc Authors

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

#ifndef POPUC_TOOLS_TABLES_HPP
#define POPUC_TOOLS_TABLES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace popuc::tables {

/// A published run of Verblunsky coefficients a_first, a_first+1, ... for C_M.
struct VerblunskyTable {
    std::string name;
    std::uint64_t M;
    std::size_t first;
    std::vector<std::string> values;
};

inline const std::vector<VerblunskyTable>& reference_tables()
{
    static const std::vector<VerblunskyTable> tables = {
        {"C_15", 15, 0, {"2/3", "-1/5", "-9/16", "1/5", "-2/7", "1/9", "1/8", "-1"}},
        {"C_21", 21, 0, {"2/3", "-1/5", "-1/4", "1/3", "-1/2", "-1/4", "1/10", "1/9", "-2/11", "1/13", "1/12", "-1"}},
        {"C_20", 20, 0, {"0", "1/2", "0", "-1/3", "0", "1/4", "0", "-1"}},
        {"C_35 head", 35, 0,
         {"4/5", "-1/9", "-13/32", "-5/19", "-4/15", "25/77", "-139/884", "1049/4619", "-302/1635", "-204/559",
          "359/2982", "-1292/15677", "20566/163715", "-6099/29521"}},
        {"C_85 head", 85, 0,
         {"4/5", "-1/9", "-1/8", "-1/7", "-1/6", "2/5", "-1/14", "-1/13", "-1/12", "-1/11", "4/15", "-1/19",
          "-65/144"}},
        {"C_85 tail", 85, 46,
         {"-481/1920", "1/49", "-4/53", "1/57", "1/56", "1/55", "1/54", "-2/29", "1/62", "1/61", "1/60", "1/59",
          "-4/63", "1/67", "1/66", "1/65", "1/64", "-1"}},
    };
    return tables;
}

} // namespace popuc::tables

#endif // POPUC_TOOLS_TABLES_HPP
