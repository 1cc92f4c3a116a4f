#include "nilsemi/output.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nilsemi {

using nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

ExactInt parse_decimal(std::string_view text) {
  if (text.empty() || (text.size() > 1 && text.front() == '0') ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: '" +
                                std::string(text) + "'");
  }
  return ExactInt(std::string(text), 10);
}

OutputRecord make_record(CountResult const& result, bool with_breakdown) {
  OutputRecord rec{std::string(kind_name(result.kind)), result.n, result.value,
                   std::nullopt};
  if (with_breakdown) {
    rec.breakdown = result.per_m;
  }
  return rec;
}

namespace {

std::string pad_left(std::string const& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string pad_right(std::string const& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

// Columns: first left-aligned, the rest right-aligned.
std::string aligned(std::vector<std::vector<std::string>> const& rows) {
  std::vector<std::size_t> width;
  for (auto const& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::string out;
  for (auto const& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) {
        out += "  ";
      }
      out += i == 0 ? pad_right(row[i], width[i]) : pad_left(row[i], width[i]);
    }
    while (!out.empty() && out.back() == ' ') {
      out.pop_back();
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto const pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

std::uint32_t parse_n(std::string const& s) {
  auto const v = parse_decimal(s);
  if (!v.fits_uint_p()) {
    throw std::invalid_argument("n out of range: " + s);
  }
  return static_cast<std::uint32_t>(v.get_ui());
}

}  // namespace

std::string format_output(std::vector<OutputRecord> const& records,
                          OutputFormat format) {
  switch (format) {
    case OutputFormat::Plain: {
      std::vector<std::vector<std::string>> rows{{"kind", "n", "value"}};
      for (auto const& r : records) {
        rows.push_back({r.kind, std::to_string(r.n), r.value.get_str()});
        if (r.breakdown) {
          for (auto const& [m, v] : *r.breakdown) {
            rows.push_back({"  m=" + std::to_string(m), "", v.get_str()});
          }
        }
      }
      return aligned(rows);
    }
    case OutputFormat::Csv: {
      std::string out = "kind,n,value\n";
      for (auto const& r : records) {
        out += r.kind + "," + std::to_string(r.n) + "," + r.value.get_str() +
               "\n";
      }
      return out;
    }
    case OutputFormat::Json: {
      auto doc = ordered_json::array();
      for (auto const& r : records) {
        ordered_json obj;
        obj["kind"] = r.kind;
        obj["n"] = r.n;
        obj["value"] = r.value.get_str();
        if (r.breakdown) {
          auto parts = ordered_json::array();
          for (auto const& [m, v] : *r.breakdown) {
            parts.push_back(ordered_json::array({m, v.get_str()}));
          }
          obj["breakdown"] = std::move(parts);
        }
        doc.push_back(std::move(obj));
      }
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::vector<OutputRecord> parse_output(std::string_view text,
                                       OutputFormat format) {
  std::vector<OutputRecord> out;
  if (format == OutputFormat::Csv) {
    auto lines = split(text, '\n');
    if (lines.empty() || lines.front() != "kind,n,value") {
      throw std::invalid_argument("csv: missing header kind,n,value");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].empty()) {
        continue;
      }
      auto fields = split(lines[i], ',');
      if (fields.size() != 3) {
        throw std::invalid_argument("csv: expected 3 fields in '" + lines[i] +
                                    "'");
      }
      out.push_back({fields[0], parse_n(fields[1]), parse_decimal(fields[2]),
                     std::nullopt});
    }
    return out;
  }
  if (format == OutputFormat::Json) {
    ordered_json doc;
    try {
      doc = ordered_json::parse(text);
    } catch (ordered_json::exception const& e) {
      throw std::invalid_argument(std::string("json: ") + e.what());
    }
    if (!doc.is_array()) {
      throw std::invalid_argument("json: expected an array of records");
    }
    for (auto const& obj : doc) {
      if (!obj.is_object() || !obj.contains("kind") || !obj.contains("n") ||
          !obj.contains("value") || !obj["value"].is_string() ||
          !obj["n"].is_number_unsigned()) {
        throw std::invalid_argument("json: malformed record " + obj.dump());
      }
      OutputRecord rec{obj["kind"].get<std::string>(),
                       obj["n"].get<std::uint32_t>(),
                       parse_decimal(obj["value"].get<std::string>()),
                       std::nullopt};
      if (obj.contains("breakdown")) {
        std::vector<std::pair<std::uint32_t, ExactInt>> parts;
        for (auto const& p : obj["breakdown"]) {
          if (!p.is_array() || p.size() != 2 || !p[1].is_string()) {
            throw std::invalid_argument("json: malformed breakdown entry");
          }
          parts.emplace_back(p[0].get<std::uint32_t>(),
                             parse_decimal(p[1].get<std::string>()));
        }
        rec.breakdown = std::move(parts);
      }
      out.push_back(std::move(rec));
    }
    return out;
  }
  throw std::invalid_argument("plain output cannot be parsed back");
}

std::string format_table(std::vector<std::string> const& labels,
                         std::vector<TableRow> const& rows,
                         OutputFormat format) {
  switch (format) {
    case OutputFormat::Plain:
    case OutputFormat::Csv: {
      std::vector<std::vector<std::string>> cells;
      std::vector<std::string> header{"n"};
      header.insert(header.end(), labels.begin(), labels.end());
      cells.push_back(std::move(header));
      for (auto const& row : rows) {
        std::vector<std::string> line{std::to_string(row.n)};
        for (auto const& v : row.values) {
          line.push_back(v.get_str());
        }
        cells.push_back(std::move(line));
      }
      if (format == OutputFormat::Plain) {
        return aligned(cells);
      }
      std::string out;
      for (auto const& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
          out += (i ? "," : "") + line[i];
        }
        out += '\n';
      }
      return out;
    }
    case OutputFormat::Json: {
      auto doc = ordered_json::array();
      for (auto const& row : rows) {
        ordered_json obj;
        obj["n"] = row.n;
        for (std::size_t i = 0; i < labels.size(); ++i) {
          obj[labels[i]] = row.values.at(i).get_str();
        }
        doc.push_back(std::move(obj));
      }
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace nilsemi
