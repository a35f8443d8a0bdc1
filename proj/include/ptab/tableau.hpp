#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ptab {

/// A weakly decreasing sequence of positive parts. Zero parts are dropped
/// on construction.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  /// Parses "3,2,1" (an empty string is the empty partition).
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// Length of row `row` (0-based); zero past the last part.
  int row_length(int row) const {
    return row < num_parts() ? parts_[row] : 0;
  }
  int first_part() const { return parts_.empty() ? 0 : parts_.front(); }
  /// Number of rows of length >= col + 1 (col 0-based).
  int column_height(int col) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Filling size does not match the shape, or the shape does not fit the box.
/// Distinct from a well-formed filling that breaks the tableau conditions.
class MalformedTableau : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed filling that violates a tableau condition.
class InvalidTableau : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Cell {
  int row = 0;  // 0-based, top row is 0
  int col = 0;  // 0-based, left column is 0
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::string diagnostic;      // empty when valid
  std::optional<Cell> cell;    // offending cell, for the 0-pattern rule
  std::optional<int> column;   // offending column, for the column rule
};

/// Checks the two tableau conditions and the full-width top row.
/// Throws MalformedTableau when the shape does not fit the k x (n-k) box or
/// the filling size differs from |shape|.
ValidationReport validate_tableau(int k, int n, const Partition& shape,
                                  std::span<const std::uint8_t> filling);

/// A permutation tableau: a 0/1 filling of a Young diagram inside a
/// k x (n-k) box (English orientation, row 0 on top). Cells outside the
/// diagram are the implicit 2's and are never stored.
class PermutationTableau {
 public:
  /// The empty tableau with k = n = 0.
  PermutationTableau() = default;

  /// Validating constructor; throws MalformedTableau or InvalidTableau.
  PermutationTableau(int k, int n, Partition shape, std::vector<std::uint8_t> filling);

  /// The unique tableau with n rows and no columns.
  static PermutationTableau empty(int n);

  /// Rows given as strings of '0'/'1', top row first.
  static PermutationTableau from_rows(int k, int n, const std::vector<std::string>& rows);

  int k() const { return k_; }
  int n() const { return n_; }
  int num_columns() const { return n_ - k_; }
  const Partition& shape() const { return shape_; }
  const std::vector<std::uint8_t>& filling() const { return filling_; }

  bool in_shape(int row, int col) const {
    return row >= 0 && col >= 0 && col < shape_.row_length(row);
  }
  /// Entry at (row, col); the cell must lie in the diagram.
  int at(int row, int col) const { return filling_[offsets_[row] + col]; }
  /// 0, 1 or 2 over the whole box.
  int box_entry(int row, int col) const { return in_shape(row, col) ? at(row, col) : 2; }

  std::vector<std::string> rows() const;

  friend bool operator==(const PermutationTableau& a, const PermutationTableau& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.shape_ == b.shape_ && a.filling_ == b.filling_;
  }

 private:
  struct Unchecked {};
  PermutationTableau(Unchecked, int k, int n, Partition shape, std::vector<std::uint8_t> filling);
  void index_rows();

  int k_ = 0;
  int n_ = 0;
  Partition shape_;
  std::vector<std::uint8_t> filling_;
  std::vector<int> offsets_;

  friend void for_each_tableau(int, int, const std::function<void(const PermutationTableau&)>&);
};

ValidationReport validate_tableau(const PermutationTableau& t);

/// Shapes admissible in the k x (n-k) box: at most k parts and, when n > k,
/// first part exactly n-k. Lexicographic order on the parts.
std::vector<Partition> tableau_shapes(int k, int n);

/// Every partition in the k x m box (including the empty one), lexicographic.
std::vector<Partition> partitions_in_box(int k, int m);

/// Visits every permutation tableau in the k x (n-k) box once: shapes in
/// tableau_shapes() order, fillings in increasing row-major binary order.
void for_each_tableau(int k, int n, const std::function<void(const PermutationTableau&)>& visit);

std::vector<PermutationTableau> enumerate_tableaux(int k, int n);

enum class StepKind { vertical, horizontal };

/// The labelled south-east border of the shape inside its box, walked from
/// the north-east corner. For label i (1-based), `kind[i]` says whether the
/// step is vertical (the right edge of a row) or horizontal (the bottom edge
/// of a column), and `index[i]` is that row or column (0-based).
struct PathLabeling {
  std::vector<StepKind> kind;  // size n + 1, slot 0 unused
  std::vector<int> index;      // size n + 1, slot 0 unused
  std::vector<int> row_label;  // row -> label, size k
  std::vector<int> col_label;  // column -> label, size n - k

  std::vector<int> vertical_labels() const;
  std::vector<int> horizontal_labels() const;
};

PathLabeling path_labeling(const PermutationTableau& t);
/// Border labelling of an arbitrary shape in a k x (n-k) box.
PathLabeling path_labeling(int k, int n, const Partition& shape);

/// Text format: a "k n" header line then one '0'/'1' line per shape row.
std::string to_text(const PermutationTableau& t);
/// Parses the text format or its JSON mirror {"k":..,"n":..,"rows":[..]}.
PermutationTableau parse_tableau(std::string_view text);

nlohmann::json to_json(const PermutationTableau& t);
PermutationTableau tableau_from_json(const nlohmann::json& j);

}  // namespace ptab
