#pragma once

#include <stdexcept>
#include <string>

namespace vitpack {

// Invalid or inconsistent user configuration (CLI exit code 2).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shape disagreement between operands.
struct shape_error : std::invalid_argument {
  explicit shape_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed binary file. Carries the byte offset where parsing failed.
struct format_error : std::runtime_error {
  format_error(const std::string& msg, std::uint64_t offset)
      : std::runtime_error(msg + " (byte offset " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::uint64_t byte_offset;
};

// Coordinate lookup outside an absolute positional-embedding table.
struct coord_range_error : std::out_of_range {
  explicit coord_range_error(const std::string& msg) : std::out_of_range(msg) {}
};

// An example whose token count exceeds the sequence length.
struct oversize_error : std::invalid_argument {
  explicit oversize_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Batch/mask metadata disagree with each other.
struct integrity_error : std::logic_error {
  explicit integrity_error(const std::string& msg) : std::logic_error(msg) {}
};

// A loss was asked for on a batch with no usable rows.
struct degenerate_batch_error : std::invalid_argument {
  explicit degenerate_batch_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Objective evaluated to a non-finite value.
struct evaluation_error : std::runtime_error {
  explicit evaluation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vitpack
