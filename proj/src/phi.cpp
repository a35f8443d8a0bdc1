#include <stdexcept>

#include "ptab/bijections.hpp"
#include "ptab/statistics.hpp"

namespace ptab {

namespace {

enum class Heading { south, east };

}  // namespace

ZigZagTrace zigzag_trace(const PermutationTableau& t, const PathLabeling& path, int label) {
  ZigZagTrace trace;
  trace.label = label;
  const auto& shape = t.shape();
  int row = 0, col = 0;
  Heading heading;

  if (path.kind[label] == StepKind::vertical) {
    row = path.index[label];
    for (int c = shape.row_length(row) - 1; c >= 0; --c) {
      if (t.at(row, c) == 1) trace.cells.push_back({row, c});
    }
    if (trace.cells.empty()) {
      trace.exit_label = label;
      return trace;
    }
    col = trace.cells.back().col;
    heading = Heading::south;
  } else {
    col = path.index[label];
    for (int r = shape.column_height(col) - 1; r >= 0; --r) {
      if (t.at(r, col) == 1) trace.cells.push_back({r, col});
    }
    if (trace.cells.empty()) throw std::logic_error("column without a 1 in a permutation tableau");
    row = trace.cells.back().row;
    heading = Heading::east;
  }
  trace.zigzag_start = trace.cells.size() - 1;

  for (;;) {
    if (heading == Heading::south) {
      int next = -1;
      for (int r = row + 1; r < shape.column_height(col); ++r) {
        if (t.at(r, col) == 1) {
          next = r;
          break;
        }
      }
      if (next < 0) {
        trace.exit_label = path.col_label[col];
        return trace;
      }
      row = next;
      heading = Heading::east;
    } else {
      int next = -1;
      for (int c = col + 1; c < shape.row_length(row); ++c) {
        if (t.at(row, c) == 1) {
          next = c;
          break;
        }
      }
      if (next < 0) {
        trace.exit_label = path.row_label[row];
        return trace;
      }
      col = next;
      heading = Heading::south;
    }
    trace.cells.push_back({row, col});
  }
}

std::vector<std::pair<ZigZagTrace::Node, ZigZagTrace::Node>> ZigZagTrace::directed_edges() const {
  std::vector<std::pair<Node, Node>> edges;
  if (cells.empty()) return edges;
  auto node = [](const Cell& c) { return Node{c.row, c.col, 0}; };
  edges.push_back({Node{-1, -1, label}, node(cells.front())});
  for (std::size_t i = 1; i < cells.size(); ++i) edges.push_back({node(cells[i - 1]), node(cells[i])});
  edges.push_back({node(cells.back()), Node{-1, -1, exit_label}});
  return edges;
}

std::vector<ZigZagTrace> zigzag_traces(const PermutationTableau& t) {
  const auto path = path_labeling(t);
  std::vector<ZigZagTrace> out;
  for (int label = 1; label <= t.n(); ++label) out.push_back(zigzag_trace(t, path, label));
  return out;
}

nlohmann::json to_json(const ZigZagTrace& trace) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : trace.cells) cells.push_back({c.row + 1, c.col + 1});
  return nlohmann::json{{"label", trace.label},
                        {"cells", cells},
                        {"zigzag_start", trace.zigzag_start},
                        {"exit", trace.exit_label}};
}

Permutation phi(const PermutationTableau& t) {
  const auto path = path_labeling(t);
  std::vector<int> word(t.n());
  for (int label = 1; label <= t.n(); ++label) {
    word[label - 1] = zigzag_trace(t, path, label).exit_label;
  }
  return Permutation(std::move(word));
}

// ---------------------------------------------------------------- inverse

namespace {

constexpr int kUndetermined = -1;

// Follows the route ending at `target` backwards through the already filled
// columns (those right of `col`) and returns the row where it must leave
// column `col` heading east.
int back_trace(const std::vector<std::vector<int>>& grid, const Partition& shape,
               const PathLabeling& path, int target, int col) {
  enum class Scan { west, north };
  Scan scan;
  int row, c;
  if (path.kind[target] == StepKind::vertical) {
    scan = Scan::west;
    row = path.index[target];
    c = shape.row_length(row);
  } else {
    scan = Scan::north;
    c = path.index[target];
    row = shape.column_height(c);
  }
  for (;;) {
    if (scan == Scan::west) {
      int found = -1;
      for (int cc = c - 1; cc > col; --cc) {
        if (grid[row][cc] == 1) {
          found = cc;
          break;
        }
      }
      if (found < 0) {
        if (shape.row_length(row) <= col) {
          throw std::logic_error("backward zig-zag left the shape");
        }
        return row;
      }
      c = found;
      scan = Scan::north;
    } else {
      int found = -1;
      for (int r = row - 1; r >= 0; --r) {
        if (grid[r][c] == 1) {
          found = r;
          break;
        }
      }
      if (found < 0) throw std::logic_error("backward zig-zag reached a column top");
      row = found;
      scan = Scan::west;
    }
  }
}

}  // namespace

PermutationTableau phi_inverse(const Permutation& p) {
  const int n = p.size();
  const auto wex = weak_excedances(p);
  const int k = wex.wex;
  const int m = n - k;

  // Step 0: the border path has its vertical steps at the wex bottoms.
  std::vector<bool> is_wexbottom(n + 1, false);
  for (int b : wex.bottoms) is_wexbottom[b] = true;
  std::vector<int> lengths;
  {
    int col = m;
    for (int label = 1; label <= n; ++label) {
      if (is_wexbottom[label]) {
        lengths.push_back(col);
      } else {
        --col;
      }
    }
  }
  const Partition shape(lengths);
  const auto path = path_labeling(k, n, shape);

  std::vector<std::vector<int>> grid(shape.num_parts());
  for (int r = 0; r < shape.num_parts(); ++r) grid[r].assign(shape.parts()[r], kUndetermined);

  Biword working = Biword::of(p);
  for (int col = m - 1;; --col) {
    // Step 1: a relative fixed point j -> j' zeroes the rest of row j.
    for (int pos : relative_fixed_points(working)) {
      const int j = working.bottoms()[pos];
      if (path.kind[j] != StepKind::vertical) {
        throw std::logic_error("relative fixed point on a column label");
      }
      const int row = path.index[j];
      for (int c = 0; c <= col && c < shape.row_length(row); ++c) {
        if (grid[row][c] == kUndetermined) grid[row][c] = 0;
      }
    }
    working = drop_relative_fixed_points(working);
    if (col < 0) break;

    // Step 2: the route from column label r determines its topmost 1.
    const int r = path.col_label[col];
    const int top = back_trace(grid, shape, path, p(r), col);
    for (int row = 0; row < top; ++row) {
      if (grid[row][col] == 1) throw std::logic_error("1 above the topmost 1 of a column");
      grid[row][col] = 0;
    }
    grid[top][col] = 1;
    for (int row = top + 1; row < shape.column_height(col); ++row) {
      if (grid[row][col] == kUndetermined) grid[row][col] = 1;
    }
    working.erase_bottom(r);
  }

  std::vector<std::uint8_t> filling;
  filling.reserve(shape.size());
  for (const auto& row : grid) {
    for (int v : row) {
      if (v == kUndetermined) throw std::logic_error("cell left undetermined by phi_inverse");
      filling.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return PermutationTableau(k, n, shape, std::move(filling));
}

// ------------------------------------------------------ relative sequence

std::vector<Biword> relative_sequence(const PermutationTableau& t) {
  const Permutation pi0 = phi(t);
  std::vector<Biword> seq{Biword::of(pi0)};
  Biword current = seq.front();
  for (int r = 1; r <= pi0.size(); ++r) {
    if (pi0(r) >= r) continue;
    current.erase_bottom(r);
    current = drop_relative_fixed_points(current);
    seq.push_back(current);
  }
  return seq;
}

PermutationTableau truncate_columns(const PermutationTableau& t, int columns) {
  const int keep = t.num_columns() - columns;
  if (columns < 0 || keep < 0) throw std::invalid_argument("cannot cut that many columns");
  std::vector<std::string> rows;
  for (const auto& row : t.rows()) {
    std::string kept = row.substr(0, std::min<std::size_t>(row.size(), keep));
    if (kept.find('1') != std::string::npos) rows.push_back(std::move(kept));
  }
  const int k = static_cast<int>(rows.size());
  return PermutationTableau::from_rows(k, k + keep, rows);
}

}  // namespace ptab
