#pragma once

#include <string>
#include <string_view>

#include "fanochern/chern_calculus.hpp"

namespace fanochern {

// Every renderer prints rationals as exact "p/q" strings, never decimals.
// CSV output is UTF-8 with LF line endings.

enum class OutputFormat { csv, json, tex, text };

/// Accepts "csv", "json", "tex" and "text". Throws std::invalid_argument.
OutputFormat parse_output_format(std::string_view name);
std::string_view to_string(OutputFormat format);

/// Rows (m, B_m) for 0 <= m <= max_m. Text renders like csv.
std::string render_bernoulli_table(unsigned max_m, OutputFormat format);

/// Rows i = 1..i_max of b_(i,j,k); csv header is "i,k0,k1,...", shorter rows
/// are padded with empty cells.
std::string render_b_table(int j, int i_max, OutputFormat format);

/// c_(m,p) for 1 <= m <= m_max, 1 <= p <= p_max; csv header is "m,p1,p2,...".
std::string render_c_table(int m_max, int p_max, OutputFormat format);

/// Terms in ascending chern index as (k, kind, L_power, coefficient).
std::string render_formal_class(const FormalClass& cls, OutputFormat format);

}  // namespace fanochern
