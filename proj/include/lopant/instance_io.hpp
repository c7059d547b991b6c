#pragma once

// Dense-matrix LOP instance files (LOLIB / MBLIB style):
//
//     [optional name line]
//     n
//     w11 w12 ... w1n
//     ...
//
// Tokens are separated by any whitespace. Weights may be integers or decimals.

#include "lopant/lop_core.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lopant {

/// Parses instance text. A first line whose first token is not numeric is
/// taken as a name line and used as the instance name when `name` is empty.
/// Tokens beyond the n*n entries are ignored and reported in `warnings`.
/// Throws ParseError (codes Parse, Truncated or InvalidHeader).
Instance parse_instance(std::string_view text, std::string name = {},
                        std::vector<std::string>* warnings = nullptr);

/// Reads and parses a file; the instance is named after the file stem.
/// Throws LopError(Io) if the file cannot be read.
Instance read_instance_file(const std::filesystem::path& path,
                            std::vector<std::string>* warnings = nullptr);

/// n on its own line, then n rows of space-separated entries. Values are
/// written in shortest round-trip form, so integers print without a decimal point.
std::string write_instance(const Instance& instance);

void write_instance_file(const Instance& instance, const std::filesystem::path& path);

/// Off-diagonal entries uniform over the integers [low, high], driven by a
/// 64-bit Mersenne Twister seeded with `seed`.
Instance generate_random_instance(std::size_t n, std::int64_t low, std::int64_t high,
                                  std::uint64_t seed, std::string name = {});

} // namespace lopant
