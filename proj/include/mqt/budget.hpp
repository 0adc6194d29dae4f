#pragma once

#include <cstdint>
#include <string>

#include "mqt/errors.hpp"

namespace mqt {

/// Default cap on exhaustive enumerations, in vectors (or candidate tuples).
/// Sized so that GF(3) ambient 4 completes in seconds.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// Cap applied to every exhaustive enumeration. Exceeding it raises BudgetError.
struct Budget {
    std::uint64_t max_vectors = kDefaultEnumerationBudget;

    /// Throws BudgetError when base^exponent exceeds the cap (overflow-safe).
    void require_power(std::uint64_t base, std::uint64_t exponent, const char* what) const {
        unsigned __int128 total = 1;
        for (std::uint64_t i = 0; i < exponent; ++i) {
            total *= base;
            if (total > max_vectors) {
                throw BudgetError(std::string(what) + " needs " + std::to_string(base) + "^" +
                                      std::to_string(exponent) +
                                      " vectors, exceeding the enumeration budget of " +
                                      std::to_string(max_vectors),
                                  max_vectors);
            }
        }
    }

    /// Throws BudgetError when count exceeds the cap.
    void require_count(std::uint64_t count, const char* what) const {
        if (count > max_vectors) {
            throw BudgetError(std::string(what) + " needs " + std::to_string(count) +
                                  " items, exceeding the enumeration budget of " +
                                  std::to_string(max_vectors),
                              max_vectors);
        }
    }
};

}  // namespace mqt
