#include "ptab/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ptab {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative part in partition");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  // A zero can only survive in the middle if it is followed by a larger part,
  // which the check above rejects.
  parts_ = std::move(parts);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '(' || c == ')') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::column_height(int col) const {
  int h = 0;
  while (h < num_parts() && parts_[h] > col) ++h;
  return h;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < num_parts(); ++i) {
    if (i > 0) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

// --------------------------------------------------------------- validation

namespace {

std::string cell_name(int row, int col) {
  return "row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
}

void check_well_formed(int k, int n, const Partition& shape, std::size_t filling_size) {
  if (k < 0 || n < k) {
    throw MalformedTableau("box parameters must satisfy 0 <= k <= n (got k=" +
                           std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  if (shape.num_parts() > k || shape.first_part() > n - k) {
    throw MalformedTableau("shape " + shape.to_string() + " does not fit in a " +
                           std::to_string(k) + "x" + std::to_string(n - k) + " box");
  }
  if (filling_size != static_cast<std::size_t>(shape.size())) {
    throw MalformedTableau("filling has " + std::to_string(filling_size) +
                           " entries but the shape has " + std::to_string(shape.size()) +
                           " cells");
  }
}

}  // namespace

ValidationReport validate_tableau(int k, int n, const Partition& shape,
                                  std::span<const std::uint8_t> filling) {
  check_well_formed(k, n, shape, filling.size());
  for (auto v : filling) {
    if (v > 1) throw MalformedTableau("filling entries must be 0 or 1");
  }

  ValidationReport report;
  const int m = n - k;
  if (m > 0 && shape.first_part() != m) {
    report.valid = false;
    report.diagnostic = "top row has length " + std::to_string(shape.first_part()) +
                        " but the box has " + std::to_string(m) + " columns";
    return report;
  }

  std::vector<int> offsets(shape.num_parts() + 1, 0);
  for (int r = 0; r < shape.num_parts(); ++r) offsets[r + 1] = offsets[r] + shape.parts()[r];
  auto at = [&](int r, int c) { return filling[offsets[r] + c]; };

  std::vector<bool> one_above(m, false);
  for (int r = 0; r < shape.num_parts(); ++r) {
    bool one_left = false;
    for (int c = 0; c < shape.parts()[r]; ++c) {
      if (at(r, c) == 0 && one_above[c] && one_left) {
        report.valid = false;
        report.cell = Cell{r, c};
        report.diagnostic = "0 at " + cell_name(r, c) + " has a 1 above it and a 1 to its left";
        return report;
      }
      if (at(r, c) == 1) {
        one_left = true;
        one_above[c] = true;
      }
    }
  }
  for (int c = 0; c < m; ++c) {
    if (!one_above[c]) {
      report.valid = false;
      report.column = c;
      report.diagnostic = "column " + std::to_string(c + 1) + " contains no 1";
      return report;
    }
  }
  return report;
}

ValidationReport validate_tableau(const PermutationTableau& t) {
  return validate_tableau(t.k(), t.n(), t.shape(), t.filling());
}

// --------------------------------------------------------- PermutationTableau

PermutationTableau::PermutationTableau(int k, int n, Partition shape,
                                       std::vector<std::uint8_t> filling) {
  auto report = validate_tableau(k, n, shape, filling);
  if (!report.valid) throw InvalidTableau(report.diagnostic);
  k_ = k;
  n_ = n;
  shape_ = std::move(shape);
  filling_ = std::move(filling);
  index_rows();
}

PermutationTableau::PermutationTableau(Unchecked, int k, int n, Partition shape,
                                       std::vector<std::uint8_t> filling)
    : k_(k), n_(n), shape_(std::move(shape)), filling_(std::move(filling)) {
  index_rows();
}

void PermutationTableau::index_rows() {
  offsets_.assign(shape_.num_parts() + 1, 0);
  for (int r = 0; r < shape_.num_parts(); ++r) offsets_[r + 1] = offsets_[r] + shape_.parts()[r];
}

PermutationTableau PermutationTableau::empty(int n) {
  return PermutationTableau(n, n, Partition(), {});
}

PermutationTableau PermutationTableau::from_rows(int k, int n,
                                                 const std::vector<std::string>& rows) {
  std::vector<int> lengths;
  std::vector<std::uint8_t> filling;
  for (const auto& row : rows) {
    if (row.empty()) throw MalformedTableau("empty row in tableau text");
    lengths.push_back(static_cast<int>(row.size()));
    for (char c : row) {
      if (c != '0' && c != '1') {
        throw MalformedTableau(std::string("unexpected character '") + c + "' in tableau row");
      }
      filling.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  }
  Partition shape;
  try {
    shape = Partition(lengths);
  } catch (const std::invalid_argument& e) {
    throw MalformedTableau(std::string("rows do not form a partition shape: ") + e.what());
  }
  return PermutationTableau(k, n, std::move(shape), std::move(filling));
}

std::vector<std::string> PermutationTableau::rows() const {
  std::vector<std::string> out;
  for (int r = 0; r < shape_.num_parts(); ++r) {
    std::string row;
    for (int c = 0; c < shape_.parts()[r]; ++c) row.push_back(static_cast<char>('0' + at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

// ------------------------------------------------------------------ shapes

namespace {

void partitions_rec(int rows_left, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (rows_left == 0) return;
  for (int part = 1; part <= max_part; ++part) {
    prefix.push_back(part);
    partitions_rec(rows_left - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int k, int m) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(k, m, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> tableau_shapes(int k, int n) {
  if (k < 0 || n < k) return {};
  const int m = n - k;
  if (m == 0) return {Partition()};
  if (k == 0) return {};
  std::vector<Partition> out;
  std::vector<int> prefix{m};
  partitions_rec(k - 1, m, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------------- enumeration

void for_each_tableau(int k, int n, const std::function<void(const PermutationTableau&)>& visit) {
  for (const Partition& shape : tableau_shapes(k, n)) {
    const int m = n - k;
    const int cells = shape.size();
    std::vector<int> cell_row(cells), cell_col(cells);
    {
      int i = 0;
      for (int r = 0; r < shape.num_parts(); ++r) {
        for (int c = 0; c < shape.parts()[r]; ++c, ++i) {
          cell_row[i] = r;
          cell_col[i] = c;
        }
      }
    }
    std::vector<int> heights(m);
    for (int c = 0; c < m; ++c) heights[c] = shape.column_height(c);

    std::vector<std::uint8_t> filling(cells, 0);
    std::vector<int> ones_in_col(m, 0);
    std::vector<int> ones_in_row(shape.num_parts(), 0);

    // Depth-first over cells in row-major order, 0 before 1, which yields
    // fillings in increasing binary order.
    std::function<void(int)> place = [&](int i) {
      if (i == cells) {
        visit(PermutationTableau(PermutationTableau::Unchecked{}, k, n, shape, filling));
        return;
      }
      const int r = cell_row[i];
      const int c = cell_col[i];
      const bool bottom_of_column = (r == heights[c] - 1);
      const bool zero_allowed = !(ones_in_col[c] > 0 && ones_in_row[r] > 0) &&
                                !(bottom_of_column && ones_in_col[c] == 0);
      if (zero_allowed) {
        filling[i] = 0;
        place(i + 1);
      }
      filling[i] = 1;
      ++ones_in_col[c];
      ++ones_in_row[r];
      place(i + 1);
      --ones_in_col[c];
      --ones_in_row[r];
      filling[i] = 0;
    };
    place(0);
  }
}

std::vector<PermutationTableau> enumerate_tableaux(int k, int n) {
  std::vector<PermutationTableau> out;
  for_each_tableau(k, n, [&](const PermutationTableau& t) { out.push_back(t); });
  return out;
}

// ------------------------------------------------------------ path labeling

std::vector<int> PathLabeling::vertical_labels() const {
  std::vector<int> out;
  for (std::size_t i = 1; i < kind.size(); ++i) {
    if (kind[i] == StepKind::vertical) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> PathLabeling::horizontal_labels() const {
  std::vector<int> out;
  for (std::size_t i = 1; i < kind.size(); ++i) {
    if (kind[i] == StepKind::horizontal) out.push_back(static_cast<int>(i));
  }
  return out;
}

PathLabeling path_labeling(int k, int n, const Partition& shape) {
  PathLabeling path;
  path.kind.assign(n + 1, StepKind::vertical);
  path.index.assign(n + 1, -1);
  path.row_label.assign(k, 0);
  path.col_label.assign(n - k, 0);
  int row = 0;     // rows passed so far
  int col = n - k; // columns still to the left of the walker
  for (int label = 1; label <= n; ++label) {
    if (row < k && shape.row_length(row) == col) {
      path.kind[label] = StepKind::vertical;
      path.index[label] = row;
      path.row_label[row] = label;
      ++row;
    } else {
      --col;
      path.kind[label] = StepKind::horizontal;
      path.index[label] = col;
      path.col_label[col] = label;
    }
  }
  return path;
}

PathLabeling path_labeling(const PermutationTableau& t) {
  return path_labeling(t.k(), t.n(), t.shape());
}

// -------------------------------------------------------------------- I/O

std::string to_text(const PermutationTableau& t) {
  std::string out = std::to_string(t.k()) + " " + std::to_string(t.n()) + "\n";
  for (const auto& row : t.rows()) out += row + "\n";
  return out;
}

nlohmann::json to_json(const PermutationTableau& t) {
  return nlohmann::json{{"k", t.k()}, {"n", t.n()}, {"rows", t.rows()}};
}

PermutationTableau tableau_from_json(const nlohmann::json& j) {
  try {
    return PermutationTableau::from_rows(j.at("k").get<int>(), j.at("n").get<int>(),
                                         j.at("rows").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw MalformedTableau(std::string("bad tableau JSON: ") + e.what());
  }
}

PermutationTableau parse_tableau(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw MalformedTableau("empty tableau text");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw MalformedTableau(std::string("bad tableau JSON: ") + e.what());
    }
    return tableau_from_json(j);
  }
  std::istringstream in{std::string(text)};
  int k = 0, n = 0;
  std::string header;
  std::getline(in, header);
  {
    std::istringstream h(header);
    if (!(h >> k >> n)) throw MalformedTableau("tableau header must be 'k n'");
    std::string extra;
    if (h >> extra) throw MalformedTableau("unexpected text after tableau header");
  }
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  return PermutationTableau::from_rows(k, n, rows);
}

}  // namespace ptab
