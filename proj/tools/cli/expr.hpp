#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "realsets/series.hpp"

namespace realsets::cli {

/// A parse or evaluation error at a 1-based line and column.
struct EvalError : std::runtime_error {
  EvalError(std::size_t line, std::size_t col, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  std::size_t line;
  std::size_t col;
};

/// Evaluates one expression per non-blank line ('#' starts a comment) and
/// returns the printed results in order. Throws EvalError.
std::vector<std::string> eval_text(std::string_view text, ApproxLevel level);

/// Evaluates a single expression.
std::string eval_expression(std::string_view expr, ApproxLevel level);

}  // namespace realsets::cli
