#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace discrim::reg {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct FunctionEntry {
    std::string name;
    unsigned param_count = 0;   // leading integer parameters before n
    std::string params_help;    // e.g. "d" or "a"
    std::string summary;
    u64 min_n = 1;
    // evaluate at index n; cap_override = 0 keeps the family default
    std::function<u64(const std::vector<i64>& params, u64 n, u64 cap_override)> eval;
    // validates params, throws std::invalid_argument
    std::function<void(const std::vector<i64>& params)> check_params;
};

const std::vector<FunctionEntry>& registry();
const FunctionEntry* find(const std::string& name);

}  // namespace discrim::reg
