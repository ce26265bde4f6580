#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace bitflip {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration or verification workload exceeds the configured budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// A parity-check matrix without constant column weight. Carries the weight
// histogram so callers can report what was seen.
struct NotLeftRegular : Error {
    NotLeftRegular(std::string msg, std::map<std::uint32_t, std::uint32_t> hist)
        : Error(std::move(msg)), histogram(std::move(hist)) {}
    std::map<std::uint32_t, std::uint32_t> histogram;  // weight -> #columns
};

}  // namespace bitflip
