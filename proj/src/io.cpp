#include "ecfs/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace ecfs {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

// strtod rather than from_chars: it accepts "nan"/"inf" spellings, which must
// surface as non-finite errors rather than non-numeric ones.
std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

double parse_cell(const std::string& s, std::size_t row, std::size_t col) {
  const auto v = parse_double(s);
  const std::string where = "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  if (!v) throw LoadError(LoadErrorKind::non_numeric_cell, "non-numeric value '" + s + "' at " + where);
  if (!std::isfinite(*v)) throw LoadError(LoadErrorKind::non_finite_cell, "non-finite value at " + where);
  return *v;
}

std::optional<long long> parse_integer(const std::string& s) {
  long long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return v;
}

struct LabelMap {
  std::vector<int> y;
  std::vector<std::string> class_names;
};

LabelMap map_labels(const std::vector<std::string>& raw) {
  LabelMap out;
  std::vector<long long> ints;
  ints.reserve(raw.size());
  for (const auto& s : raw) {
    if (auto v = parse_integer(s)) {
      ints.push_back(*v);
    } else {
      ints.clear();
      break;
    }
  }

  if (ints.size() == raw.size() && !raw.empty()) {
    const long long lo = *std::min_element(ints.begin(), ints.end());
    const long long hi = *std::max_element(ints.begin(), ints.end());
    if (lo >= 0) {
      if (hi > 1'000'000) throw LoadError(LoadErrorKind::malformed, "class label too large");
      out.class_names.resize(static_cast<std::size_t>(hi) + 1);
      for (long long c = 0; c <= hi; ++c) out.class_names[c] = std::to_string(c);
      std::vector<std::size_t> counts(out.class_names.size(), 0);
      for (long long v : ints) {
        out.y.push_back(static_cast<int>(v));
        ++counts[v];
      }
      for (std::size_t c = 0; c < counts.size(); ++c)
        if (counts[c] == 0)
          throw LoadError(LoadErrorKind::empty_class,
                          "class " + std::to_string(c) + " has zero samples");
      return out;
    }
    std::vector<long long> distinct = ints;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (long long v : distinct) out.class_names.push_back(std::to_string(v));
    for (long long v : ints)
      out.y.push_back(static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
    return out;
  }

  std::map<std::string, int> index;
  for (const auto& s : raw) {
    auto [it, inserted] = index.try_emplace(s, static_cast<int>(out.class_names.size()));
    if (inserted) out.class_names.push_back(s);
    out.y.push_back(it->second);
  }
  return out;
}

Dataset assemble(std::vector<Vector> rows, const std::vector<std::string>& raw_labels,
                 std::vector<std::string> names) {
  if (rows.empty()) throw LoadError(LoadErrorKind::malformed, "no data rows");
  auto labels = map_labels(raw_labels);
  try {
    return Dataset(Matrix::from_rows(rows), std::move(labels.y), std::move(names),
                   std::move(labels.class_names));
  } catch (const DatasetError& e) {
    throw LoadError(LoadErrorKind::malformed, e.what());
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(LoadErrorKind::missing_file, "cannot open file: " + path.string());
  return in;
}

Dataset read_labelled_matrix(std::istream& matrix_in, std::istream& labels_in) {
  std::vector<Vector> rows;
  std::string line;
  std::size_t row = 0;
  while (std::getline(matrix_in, line)) {
    if (trim(line).empty()) continue;
    std::istringstream fields(line);
    Vector values;
    std::string token;
    std::size_t col = 0;
    while (fields >> token) values.push_back(parse_cell(token, row, col++));
    if (!rows.empty() && values.size() != rows.front().size())
      throw LoadError(LoadErrorKind::malformed, "row " + std::to_string(row) + " has " +
                                                    std::to_string(values.size()) + " columns, expected " +
                                                    std::to_string(rows.front().size()));
    rows.push_back(std::move(values));
    ++row;
  }

  std::vector<std::string> raw_labels;
  while (std::getline(labels_in, line)) {
    auto label = trim(line);
    if (!label.empty()) raw_labels.push_back(std::move(label));
  }
  if (raw_labels.size() != rows.size())
    throw LoadError(LoadErrorKind::malformed, "label file has " + std::to_string(raw_labels.size()) +
                                                  " labels for " + std::to_string(rows.size()) +
                                                  " samples");
  return assemble(std::move(rows), raw_labels, {});
}

}  // namespace

Dataset read_csv_dataset(std::istream& in, const std::string& label_column) {
  std::string line;
  if (!std::getline(in, line)) throw LoadError(LoadErrorKind::malformed, "missing CSV header");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  const auto header = split_csv_line(line);

  std::size_t label_idx = header.size() - 1;
  if (!label_column.empty()) {
    auto it = std::find(header.begin(), header.end(), label_column);
    if (it != header.end()) {
      label_idx = static_cast<std::size_t>(it - header.begin());
    } else if (auto idx = parse_integer(label_column); idx && *idx >= 0 &&
                                                       static_cast<std::size_t>(*idx) < header.size()) {
      label_idx = static_cast<std::size_t>(*idx);
    } else {
      throw LoadError(LoadErrorKind::malformed, "label column '" + label_column + "' not found");
    }
  }
  if (header.size() < 2) throw LoadError(LoadErrorKind::malformed, "CSV needs a label and a feature column");

  std::vector<std::string> names;
  for (std::size_t c = 0; c < header.size(); ++c)
    if (c != label_idx) names.push_back(header[c]);

  std::vector<Vector> rows;
  std::vector<std::string> raw_labels;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw LoadError(LoadErrorKind::malformed, "row " + std::to_string(row) + " has " +
                                                    std::to_string(fields.size()) + " fields, expected " +
                                                    std::to_string(header.size()));
    Vector values;
    values.reserve(fields.size() - 1);
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c == label_idx) continue;
      values.push_back(parse_cell(fields[c], row, c));
    }
    raw_labels.push_back(fields[label_idx]);
    rows.push_back(std::move(values));
    ++row;
  }
  return assemble(std::move(rows), raw_labels, std::move(names));
}

Dataset load_dataset(const std::filesystem::path& path, const LoadOptions& options) {
  auto in = open_input(path);
  if (options.format == DatasetFormat::csv_with_header) return read_csv_dataset(in, options.label_column);
  if (options.labels_path.empty())
    throw LoadError(LoadErrorKind::malformed, "labelled-matrix format needs a label file");
  auto labels = open_input(options.labels_path);
  return read_labelled_matrix(in, labels);
}

void write_csv(const Dataset& d, std::ostream& out) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (std::size_t j = 0; j < d.features(); ++j) out << d.feature_name(j) << ',';
  out << "class\n";
  for (std::size_t r = 0; r < d.samples(); ++r) {
    for (double v : d.x().row(r)) out << v << ',';
    out << d.class_names()[d.y()[r]] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace ecfs
