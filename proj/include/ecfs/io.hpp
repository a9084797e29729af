#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ecfs/dataset.hpp"

namespace ecfs {

enum class LoadErrorKind {
  missing_file,
  non_numeric_cell,
  non_finite_cell,
  empty_class,
  malformed,
};

class LoadError : public std::runtime_error {
 public:
  LoadError(LoadErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  LoadErrorKind kind() const noexcept { return kind_; }

 private:
  LoadErrorKind kind_;
};

enum class DatasetFormat { csv_with_header, labelled_matrix };

struct LoadOptions {
  DatasetFormat format = DatasetFormat::csv_with_header;
  /// CSV mode: header name or 0-based column index. Empty selects the last column.
  std::string label_column;
  /// Labelled-matrix mode: one label per line.
  std::filesystem::path labels_path;
};

/// Loads a dataset and maps labels to {0, ..., C-1}.
///
/// Labels that are all non-negative integers are used directly as class ids,
/// so a gap (e.g. {0, 2}) is reported as an empty class. All-integer labels
/// with negatives are mapped in ascending numeric order. Anything else is
/// treated as categorical and mapped in order of first appearance. The
/// mapping is kept in Dataset::class_names().
Dataset load_dataset(const std::filesystem::path& path, const LoadOptions& options = {});

Dataset read_csv_dataset(std::istream& in, const std::string& label_column);

/// Writes the dataset as CSV with feature columns followed by a "class" column.
void write_csv(const Dataset& d, std::ostream& out);

}  // namespace ecfs
