#pragma once

#include <string>

#include "kbh/poisson/model.hpp"

namespace kbh {

inline constexpr const char* kModelFormat = "kbmodel/1";

/// Deterministic "kbmodel/1" JSON text (two-space indent, trailing
/// newline). Rationals are written as "a" or "a/b".
std::string save_model(const DolbeaultPoissonModel& m);

/// Parses and validates a model. Malformed text, wrong shapes and (unless
/// lax) unknown fields raise ParseError with the offending field path;
/// failed identities raise ValidationError naming the bidegree.
DolbeaultPoissonModel load_model(const std::string& text, bool lax = false);

/// Parse only; the identities are not checked.
DolbeaultPoissonModel parse_model(const std::string& text, bool lax = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace kbh
