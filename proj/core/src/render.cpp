#include "fanochern/render.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "fanochern/coefficients.hpp"
#include "fanochern/combinatorics.hpp"
#include "json.hpp"

namespace fanochern {

namespace {

using Json = nlohmann::ordered_json;

std::string tex_cell(const Rational& value) {
  if (value.is_integer()) return "$" + value.str() + "$";
  const bool negative = value.sign() < 0;
  const BigInt num = negative ? BigInt(-value.numerator()) : value.numerator();
  return std::string("$") + (negative ? "-" : "") + "\\frac{" + num.get_str() + "}{" +
         value.denominator().get_str() + "}$";
}

Json string_array(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

// Layout shared by the b and c tables: one labelled row per index, columns
// numbered from `first_column`.
struct LabelledTable {
  std::string column_symbol;  // "k" or "p"
  int first_column = 0;
  int columns = 0;
  std::vector<std::string> tex_labels;
  std::vector<std::vector<Rational>> rows;
};

std::string render_tex(const LabelledTable& table) {
  std::ostringstream os;
  os << "\\begin{tabular}{c|" << std::string(static_cast<std::size_t>(table.columns), 'c') << "}\n";
  os << "$" << table.column_symbol << "$";
  for (int c = 0; c < table.columns; ++c) os << " & $" << table.first_column + c << "$";
  os << " \\\\ \\hline\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << table.tex_labels[r];
    for (int c = 0; c < table.columns; ++c) {
      os << " & ";
      if (c < static_cast<int>(table.rows[r].size())) os << tex_cell(table.rows[r][c]);
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string render_csv(const std::string& row_symbol, const LabelledTable& table) {
  std::ostringstream os;
  os << row_symbol;
  for (int c = 0; c < table.columns; ++c) os << "," << table.column_symbol << table.first_column + c;
  os << "\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << r + 1;
    for (int c = 0; c < table.columns; ++c) {
      os << ",";
      if (c < static_cast<int>(table.rows[r].size())) os << table.rows[r][c].str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "tex") return OutputFormat::tex;
  if (name == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv, json, tex or text)");
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
    case OutputFormat::tex:
      return "tex";
    case OutputFormat::text:
      return "text";
  }
  return "?";
}

std::string render_bernoulli_table(unsigned max_m, OutputFormat format) {
  const auto values = bernoulli_table(max_m);
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json: {
      Json out = Json::array();
      for (std::size_t m = 0; m < values.size(); ++m) out.push_back({{"m", m}, {"B", values[m].str()}});
      os << out.dump() << "\n";
      break;
    }
    case OutputFormat::tex:
      os << "\\begin{tabular}{c|" << std::string(values.size(), 'c') << "}\n$m$";
      for (std::size_t m = 0; m < values.size(); ++m) os << " & $" << m << "$";
      os << " \\\\ \\hline\n$B_m$";
      for (const auto& v : values) os << " & " << tex_cell(v);
      os << " \\\\\n\\end{tabular}\n";
      break;
    case OutputFormat::csv:
    case OutputFormat::text:
      os << "m,B\n";
      for (std::size_t m = 0; m < values.size(); ++m) os << m << "," << values[m].str() << "\n";
      break;
  }
  return os.str();
}

std::string render_b_table(int j, int i_max, OutputFormat format) {
  if (j < 1 || i_max < 1) throw std::invalid_argument("b table: j and i_max must be positive");
  LabelledTable table{"k", 0, i_max + j + 1, {}, {}};
  for (int i = 1; i <= i_max; ++i) {
    table.rows.push_back(b_row(i, j));
    table.tex_labels.push_back("$b_{(" + std::to_string(i) + "," + std::to_string(j) + ",k)}$");
  }
  switch (format) {
    case OutputFormat::json: {
      Json rows = Json::array();
      for (int i = 1; i <= i_max; ++i) rows.push_back({{"i", i}, {"b", string_array(table.rows[i - 1])}});
      return Json{{"j", j}, {"rows", rows}}.dump() + "\n";
    }
    case OutputFormat::tex:
      return render_tex(table);
    case OutputFormat::csv:
    case OutputFormat::text:
      return render_csv("i", table);
  }
  return {};
}

std::string render_c_table(int m_max, int p_max, OutputFormat format) {
  if (m_max < 1 || p_max < 1) throw std::invalid_argument("c table: m_max and p_max must be positive");
  LabelledTable table{"p", 1, p_max, {}, {}};
  for (int m = 1; m <= m_max; ++m) {
    std::vector<Rational> row;
    for (int p = 1; p <= p_max; ++p) row.push_back(c_coeff(m, p));
    table.rows.push_back(std::move(row));
    table.tex_labels.push_back("$c_{(" + std::to_string(m) + ",p)}$");
  }
  switch (format) {
    case OutputFormat::json: {
      Json rows = Json::array();
      for (int m = 1; m <= m_max; ++m) rows.push_back({{"m", m}, {"c", string_array(table.rows[m - 1])}});
      return Json{{"rows", rows}}.dump() + "\n";
    }
    case OutputFormat::tex:
      return render_tex(table);
    case OutputFormat::csv:
    case OutputFormat::text:
      return render_csv("m", table);
  }
  return {};
}

std::string render_formal_class(const FormalClass& cls, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      return cls.str() + "\n";
    case OutputFormat::tex:
      return "$" + cls.tex() + "$\n";
    case OutputFormat::json: {
      Json terms = Json::array();
      for (const auto& [term, c] : cls.terms()) {
        terms.push_back({{"k", term.chern_index()},
                         {"kind", std::string(to_string(term.kind()))},
                         {"L_power", term.l_power()},
                         {"coefficient", c.str()}});
      }
      return Json{{"depth", cls.depth()}, {"codimension", cls.codimension()}, {"terms", terms}}.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "k,kind,L_power,coefficient\n";
      for (const auto& [term, c] : cls.terms()) {
        os << term.chern_index() << "," << to_string(term.kind()) << "," << term.l_power() << "," << c.str() << "\n";
      }
      return os.str();
    }
  }
  return {};
}

}  // namespace fanochern
