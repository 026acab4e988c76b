#include "moonfill/filling.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>

#include "moonfill/error.hpp"

namespace moonfill {

Filling::Filling(MoonPolyomino shape, std::vector<int> row_cols)
    : shape_(std::move(shape)), row_cols_(std::move(row_cols)) {
  if (static_cast<int>(row_cols_.size()) != shape_.rows())
    throw Error(ErrorKind::InvalidFilling, "filling has " + std::to_string(row_cols_.size()) +
                                               " rows, shape has " +
                                               std::to_string(shape_.rows()));
  for (int i = 1; i <= shape_.rows(); ++i) {
    const int c = row_cols_[i - 1];
    if (c != 0 && !shape_.row(i).contains(c))
      throw Error(ErrorKind::CellOutsideShape,
                  "cell (" + std::to_string(i) + ", " + std::to_string(c) + ") is outside the shape",
                  {i, c});
  }
}

Filling::Filling(MoonPolyomino shape) : shape_(std::move(shape)), row_cols_(shape_.rows(), 0) {}

Filling Filling::from_cells(MoonPolyomino shape, std::span<const Cell> cells) {
  std::vector<int> row_cols(shape.rows(), 0);
  for (const Cell& cell : cells) {
    if (!shape.contains(cell.row, cell.col))
      throw Error(ErrorKind::CellOutsideShape,
                  "cell (" + std::to_string(cell.row) + ", " + std::to_string(cell.col) +
                      ") is outside the shape",
                  {cell.row, cell.col});
    if (row_cols[cell.row - 1] != 0)
      throw Error(ErrorKind::InvalidFilling,
                  "row " + std::to_string(cell.row) + " has more than one 1", {cell.row});
    row_cols[cell.row - 1] = cell.col;
  }
  return Filling(std::move(shape), std::move(row_cols));
}

std::vector<Cell> Filling::ones() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows(); ++i)
    if (row_cols_[i - 1] != 0) out.push_back({i, row_cols_[i - 1]});
  return out;
}

std::vector<int> Filling::row_sums() const {
  std::vector<int> e(rows());
  for (int i = 0; i < rows(); ++i) e[i] = row_cols_[i] != 0 ? 1 : 0;
  return e;
}

std::vector<int> Filling::col_sums() const {
  std::vector<int> s(cols(), 0);
  for (int c : row_cols_)
    if (c != 0) ++s[c - 1];
  return s;
}

template <typename Tag>
IndexSubset<Tag>::IndexSubset(std::span<const int> indices, int universe)
    : mask_(std::max(universe, 0), 0) {
  for (int i : indices) {
    if (i < 1 || i > universe)
      throw Error(ErrorKind::IndexOutOfRange,
                  "index " + std::to_string(i) + " outside 1.." + std::to_string(universe), {i});
    mask_[i - 1] = 1;
  }
}

template <typename Tag>
IndexSubset<Tag> IndexSubset<Tag>::from_mask(unsigned long long mask, int universe) {
  IndexSubset out;
  out.mask_.assign(universe, 0);
  for (int i = 0; i < universe && i < 64; ++i) out.mask_[i] = (mask >> i) & 1U ? 1 : 0;
  return out;
}

template <typename Tag>
IndexSubset<Tag> IndexSubset<Tag>::all(int universe) {
  IndexSubset out;
  out.mask_.assign(universe, 1);
  return out;
}

template <typename Tag>
std::vector<int> IndexSubset<Tag>::members() const {
  std::vector<int> out;
  for (int i = 1; i <= universe(); ++i)
    if (mask_[i - 1]) out.push_back(i);
  return out;
}

template <typename Tag>
IndexSubset<Tag> IndexSubset<Tag>::complement() const {
  IndexSubset out = *this;
  for (auto& bit : out.mask_) bit = bit ? 0 : 1;
  return out;
}

template class IndexSubset<RowTag>;
template class IndexSubset<ColTag>;

std::vector<Chain> chains(const Filling& filling) {
  const auto cells = filling.ones();
  const auto& shape = filling.shape();
  std::vector<Chain> out;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      const Cell& up = cells[a];
      const Cell& low = cells[b];
      if (up.col == low.col) continue;
      const RowInterval span{std::min(up.col, low.col), std::max(up.col, low.col)};
      if (!shape.row(up.row).contains(span) || !shape.row(low.row).contains(span)) continue;
      out.push_back({up, low, up.col > low.col});
    }
  }
  return out;
}

int ne_count(const Filling& filling) {
  const auto all = chains(filling);
  return static_cast<int>(std::count_if(all.begin(), all.end(), [](const Chain& c) { return c.northeast; }));
}

int se_count(const Filling& filling) {
  const auto all = chains(filling);
  return static_cast<int>(std::count_if(all.begin(), all.end(), [](const Chain& c) { return !c.northeast; }));
}

namespace {

template <typename Anchor>
int anchored_count(const Filling& filling, Anchor in_subset) {
  int total = 0;
  for (const Chain& c : chains(filling)) total += in_subset(c) == c.northeast ? 1 : 0;
  return total;
}

void check_universe(int universe, int expected, const char* what) {
  if (universe != expected)
    throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " subset has universe " +
                                                std::to_string(universe) + ", expected " +
                                                std::to_string(expected));
}

}  // namespace

int top_mixed(const Filling& filling, const RowSubset& rows) {
  check_universe(rows.universe(), filling.rows(), "row");
  return anchored_count(filling, [&](const Chain& c) { return rows.contains(c.upper.row); });
}

int bottom_mixed(const Filling& filling, const RowSubset& rows) {
  check_universe(rows.universe(), filling.rows(), "row");
  return anchored_count(filling, [&](const Chain& c) { return rows.contains(c.lower.row); });
}

int left_mixed(const Filling& filling, const ColSubset& cols) {
  check_universe(cols.universe(), filling.cols(), "column");
  return anchored_count(filling, [&](const Chain& c) { return cols.contains(c.left().col); });
}

int right_mixed(const Filling& filling, const ColSubset& cols) {
  check_universe(cols.universe(), filling.cols(), "column");
  return anchored_count(filling, [&](const Chain& c) { return cols.contains(c.right().col); });
}

std::pair<int, int> mixed_pair(const Filling& filling, MixedStatistic statistic,
                               std::span<const int> subset) {
  switch (statistic) {
    case MixedStatistic::top: {
      const RowSubset a(subset, filling.rows());
      return {top_mixed(filling, a), top_mixed(filling, a.complement())};
    }
    case MixedStatistic::bottom: {
      const RowSubset a(subset, filling.rows());
      return {bottom_mixed(filling, a), bottom_mixed(filling, a.complement())};
    }
    case MixedStatistic::left: {
      const ColSubset a(subset, filling.cols());
      return {left_mixed(filling, a), left_mixed(filling, a.complement())};
    }
    case MixedStatistic::right: {
      const ColSubset a(subset, filling.cols());
      return {right_mixed(filling, a), right_mixed(filling, a.complement())};
    }
  }
  return {0, 0};
}

namespace {

class Enumerator {
 public:
  Enumerator(const MoonPolyomino& shape, std::span<const int> e, std::span<const int> s)
      : shape_(shape),
        e_(e.begin(), e.end()),
        remaining_(s.begin(), s.end()),
        row_cols_(shape.rows(), 0),
        cover_(shape.rows() + 2, std::vector<int>(shape.cols() + 1, 0)) {
    for (int r = shape.rows(); r >= 1; --r) {
      cover_[r] = cover_[r + 1];
      if (e_[r - 1] == 0) continue;
      for (int j = shape.row(r).left; j <= shape.row(r).right; ++j) ++cover_[r][j];
    }
  }

  void run(int part, int parts, const FillingVisitor& visit) {
    if (!feasible_from(1)) return;
    int first = 1;
    while (first <= shape_.rows() && e_[first - 1] == 0) ++first;
    if (first > shape_.rows()) {
      visit(Filling(shape_, row_cols_));
      return;
    }
    int k = 0;
    const auto& row = shape_.row(first);
    for (int j = row.left; j <= row.right; ++j) {
      if (remaining_[j - 1] == 0) continue;
      place(first, j);
      if (feasible_from(first + 1)) {
        if (k % parts == part) descend(first + 1, visit);
        ++k;
      }
      unplace(first, j);
    }
  }

 private:
  bool feasible_from(int r) const {
    for (int j = 1; j <= shape_.cols(); ++j)
      if (remaining_[j - 1] > cover_[r][j]) return false;
    return true;
  }

  void place(int r, int j) {
    row_cols_[r - 1] = j;
    --remaining_[j - 1];
  }

  void unplace(int r, int j) {
    row_cols_[r - 1] = 0;
    ++remaining_[j - 1];
  }

  void descend(int r, const FillingVisitor& visit) {
    while (r <= shape_.rows() && e_[r - 1] == 0) ++r;
    if (r > shape_.rows()) {
      visit(Filling(shape_, row_cols_));
      return;
    }
    const auto& row = shape_.row(r);
    for (int j = row.left; j <= row.right; ++j) {
      if (remaining_[j - 1] == 0) continue;
      place(r, j);
      if (feasible_from(r + 1)) descend(r + 1, visit);
      unplace(r, j);
    }
  }

  const MoonPolyomino& shape_;
  std::vector<int> e_;
  std::vector<int> remaining_;
  std::vector<int> row_cols_;
  // cover_[r][j]: nonempty rows at index >= r containing column j.
  std::vector<std::vector<int>> cover_;
};

}  // namespace

void for_each_filling_part(const MoonPolyomino& shape, std::span<const int> e,
                           std::span<const int> s, int part, int parts,
                           const FillingVisitor& visit) {
  check_sums(shape, e, s);
  if (parts < 1 || part < 0 || part >= parts)
    throw Error(ErrorKind::IndexOutOfRange, "invalid enumeration share");
  Enumerator(shape, e, s).run(part, parts, visit);
}

void for_each_filling(const MoonPolyomino& shape, std::span<const int> e, std::span<const int> s,
                      const FillingVisitor& visit) {
  for_each_filling_part(shape, e, s, 0, 1, visit);
}

std::vector<Filling> enumerate_fillings(const MoonPolyomino& shape, std::span<const int> e,
                                        std::span<const int> s) {
  std::vector<Filling> out;
  for_each_filling(shape, e, s, [&](const Filling& f) { out.push_back(f); });
  return out;
}

long long count_fillings(const MoonPolyomino& shape, std::span<const int> e,
                         std::span<const int> s) {
  long long n = 0;
  for_each_filling(shape, e, s, [&](const Filling&) { ++n; });
  return n;
}

int default_threads() {
  const char* env = std::getenv("MOONFILL_THREADS");
  if (env == nullptr) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (const std::exception&) {
    return 1;
  }
}

namespace {

using PairCounts = std::map<std::pair<int, int>, long long>;

template <typename PairOf>
BivarPoly tally(const MoonPolyomino& shape, std::span<const int> e, std::span<const int> s,
                int threads, PairOf pair_of) {
  check_sums(shape, e, s);
  threads = std::max(1, threads);
  std::vector<PairCounts> partial(threads);
  if (threads == 1) {
    for_each_filling(shape, e, s, [&](const Filling& f) { ++partial[0][pair_of(f)]; });
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for_each_filling_part(shape, e, s, t, threads,
                                [&](const Filling& f) { ++partial[t][pair_of(f)]; });
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }
  BivarPoly out;
  for (const auto& counts : partial)
    for (const auto& [ab, n] : counts) out.add_term(ab.first, ab.second, n);
  return out;
}

}  // namespace

BivarPoly distribution(const MoonPolyomino& shape, std::span<const int> e,
                       std::span<const int> s, MixedStatistic statistic,
                       std::span<const int> subset, int threads) {
  const int universe = statistic == MixedStatistic::top || statistic == MixedStatistic::bottom
                           ? shape.rows()
                           : shape.cols();
  // Validates the subset before enumeration starts.
  const RowSubset checked(subset, universe);
  (void)checked;
  std::vector<int> a(subset.begin(), subset.end());
  return tally(shape, e, s, threads,
               [&](const Filling& f) { return mixed_pair(f, statistic, a); });
}

BivarPoly se_ne_distribution(const MoonPolyomino& shape, std::span<const int> e,
                             std::span<const int> s, int threads) {
  return tally(shape, e, s, threads, [](const Filling& f) {
    int ne = 0;
    int se = 0;
    for (const Chain& c : chains(f)) ++(c.northeast ? ne : se);
    return std::pair{se, ne};
  });
}

Filling restrict_filling(const Filling& filling, const Region& region) {
  const auto& local = region.shape;
  std::vector<int> row_cols(local.rows(), 0);
  for (int i = 1; i <= local.rows(); ++i) {
    const int c = filling.column_of_row(i + region.row_offset);
    if (c != 0 && local.row(i).contains(c - region.col_offset))
      row_cols[i - 1] = c - region.col_offset;
  }
  return Filling(local, std::move(row_cols));
}

Filling embed_filling(const Filling& host, const Region& region, const Filling& local) {
  std::vector<int> row_cols(host.row_columns().begin(), host.row_columns().end());
  for (int i = 1; i <= region.shape.rows(); ++i) {
    const int hr = i + region.row_offset;
    const int lc = local.column_of_row(i);
    if (lc != 0) {
      row_cols[hr - 1] = lc + region.col_offset;
    } else if (row_cols[hr - 1] != 0 &&
               region.shape.row(i).contains(row_cols[hr - 1] - region.col_offset)) {
      row_cols[hr - 1] = 0;
    }
  }
  return Filling(host.shape(), std::move(row_cols));
}

Filling reflect_filling_rows(const Filling& filling) {
  std::vector<int> row_cols(filling.row_columns().rbegin(), filling.row_columns().rend());
  return Filling(reflect_rows(filling.shape()), std::move(row_cols));
}

Filling reflect_filling_columns(const Filling& filling) {
  const int m = filling.cols();
  std::vector<int> row_cols;
  for (int c : filling.row_columns()) row_cols.push_back(c == 0 ? 0 : m + 1 - c);
  return Filling(reflect_columns(filling.shape()), std::move(row_cols));
}

}  // namespace moonfill
