#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minfam/classify.hpp"
#include "minfam/descriptor.hpp"

namespace minfam {

enum class OutputFormat { Text, Json };

struct RunOptions {
  bool chain = false;
  bool conics = false;
  bool complex = false;
  OutputFormat format = OutputFormat::Text;
};

// Full report document for one descriptor. Byte-deterministic.
std::string run(const SurfaceDescriptor& descriptor, const RunOptions& options);

// Shipped example descriptors, by name ("sphere", "chain", "par").
std::vector<std::string> fixture_names();
std::optional<std::string_view> fixture_text(std::string_view name);

}  // namespace minfam
