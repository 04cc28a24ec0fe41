#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gcl {

/// Finite point domain; points are the indices 0..size-1.
struct FiniteDomain {
  explicit FiniteDomain(std::size_t size,
                        std::optional<std::vector<std::string>> labels = std::nullopt);

  std::size_t size;
  std::optional<std::vector<std::string>> labels;
};

}  // namespace gcl
