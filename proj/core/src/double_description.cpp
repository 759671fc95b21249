#include "qlogic/double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "qlogic/linalg.hpp"

namespace qlogic {

namespace {

using Word = std::uint64_t;

// Fixed-width bitsets for the tight-constraint sets, stored row after row.
class ZeroSets {
 public:
  explicit ZeroSets(std::size_t bits) : words_((bits + 63) / 64) {}

  std::size_t words() const noexcept { return words_; }
  std::size_t size() const noexcept { return data_.size() / std::max<std::size_t>(words_, 1); }

  std::size_t add() {
    data_.resize(data_.size() + words_, 0);
    return size() - 1;
  }
  Word* row(std::size_t i) noexcept { return data_.data() + i * words_; }
  const Word* row(std::size_t i) const noexcept { return data_.data() + i * words_; }
  void set(std::size_t i, std::size_t bit) noexcept { row(i)[bit / 64] |= Word{1} << (bit % 64); }

  void swap(ZeroSets& other) noexcept { data_.swap(other.data_); }
  void clear() noexcept { data_.clear(); }

 private:
  std::size_t words_;
  std::vector<Word> data_;
};

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

std::size_t nonzeros(const IntVector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; }));
}

IntVector to_primitive(const RatVector& v) { return primitive_integer(v); }

// Expresses z-space vectors back in ambient coordinates: y = sum_j z_j N_j.
IntVector lift(const IntVector& z, const std::vector<IntVector>& basis, std::size_t dim) {
  RatVector y(dim, 0);
  for (std::size_t j = 0; j < z.size(); ++j)
    if (sgn(z[j]) != 0)
      for (std::size_t i = 0; i < dim; ++i) y[i] += Rational(z[j] * basis[j][i]);
  return to_primitive(y);
}

}  // namespace

ConeGenerators double_description(const ConeSystem& system, const DoubleDescriptionOptions& options) {
  const std::size_t n = system.dimension;
  for (const auto& r : system.inequalities)
    if (r.size() != n) throw Error("double_description: inequality row has wrong length");
  for (const auto& r : system.equalities)
    if (r.size() != n) throw Error("double_description: equality row has wrong length");

  // Restrict to the subspace cut out by the equalities: y = N z.
  std::vector<IntVector> basis;
  {
    linalg::Matrix eq;
    for (const auto& r : system.equalities) eq.push_back(to_rational(r));
    for (const auto& v : linalg::null_space(eq, n)) basis.push_back(to_primitive(v));
  }
  const std::size_t k = basis.size();

  ConeGenerators out;
  if (k == 0) return out;

  std::vector<IntVector> rows;
  for (const auto& a : system.inequalities) {
    IntVector r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = dot(a, basis[j]);
    make_primitive(r);
    if (nonzeros(r) > 0) rows.push_back(std::move(r));
  }
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return nonzeros(rows[a]) < nonzeros(rows[b]); });
  {
    std::vector<IntVector> sorted;
    sorted.reserve(rows.size());
    for (auto i : order) sorted.push_back(std::move(rows[i]));
    rows.swap(sorted);
  }

  linalg::Matrix row_matrix;
  for (const auto& r : rows) row_matrix.push_back(to_rational(r));
  for (const auto& l : linalg::null_space(row_matrix, k)) out.lineality.push_back(lift(to_primitive(l), basis, n));
  const std::size_t target_rank = k - out.lineality.size();
  if (target_rank == 0) return out;

  // Greedy maximal independent subset of the rows (in insertion order).
  std::vector<std::size_t> initial;
  {
    linalg::Matrix chosen;
    std::size_t current = 0;
    for (std::size_t i = 0; i < rows.size() && current < target_rank; ++i) {
      chosen.push_back(row_matrix[i]);
      const std::size_t r = linalg::rank(chosen);
      if (r > current) {
        current = r;
        initial.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  const std::size_t d = initial.size();

  // Initial simplicial cone {z : R z >= 0}: rays z_j = R^T (R R^T)^{-1} e_j.
  std::vector<IntVector> rays;
  ZeroSets zero(rows.size());
  {
    linalg::Matrix aug(d, RatVector(2 * d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) aug[i][j] = linalg::dot(row_matrix[initial[i]], row_matrix[initial[j]]);
      aug[i][d + i] = 1;
    }
    const auto inv = linalg::reduced_row_echelon(aug);
    for (std::size_t j = 0; j < d; ++j) {
      RatVector z(k, 0);
      for (std::size_t i = 0; i < d; ++i) {
        const Rational& coeff = inv.rows[i][d + j];
        if (sgn(coeff) == 0) continue;
        for (std::size_t c = 0; c < k; ++c) z[c] += coeff * row_matrix[initial[i]][c];
      }
      rays.push_back(to_primitive(z));
      const std::size_t id = zero.add();
      for (std::size_t i = 0; i < d; ++i)
        if (i != j) zero.set(id, initial[i]);
    }
  }

  std::vector<bool> processed(rows.size(), false);
  for (auto i : initial) processed[i] = true;

  const std::size_t words = zero.words();
  std::vector<Word> common(words);
  std::vector<Integer> values;

  for (std::size_t row = 0; row < rows.size(); ++row) {
    if (processed[row]) continue;
    processed[row] = true;
    const IntVector& a = rows[row];

    values.resize(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      values[r] = dot(a, rays[r]);
      const int s = sgn(values[r]);
      (s > 0 ? pos : s < 0 ? neg : zer).push_back(r);
    }
    if (neg.empty()) {
      for (auto r : zer) zero.set(r, row);
      continue;
    }

    std::vector<IntVector> next_rays;
    ZeroSets next_zero(rows.size());
    auto keep = [&](std::size_t r, bool tight) {
      next_rays.push_back(std::move(rays[r]));
      const std::size_t id = next_zero.add();
      std::copy_n(zero.row(r), words, next_zero.row(id));
      if (tight) next_zero.set(id, row);
    };

    // New rays from adjacent (+,-) pairs, computed before anything moves.
    std::vector<IntVector> fresh;
    std::vector<std::vector<Word>> fresh_zero;
    for (auto p : pos) {
      for (auto q : neg) {
        std::size_t count = 0;
        for (std::size_t w = 0; w < words; ++w) {
          common[w] = zero.row(p)[w] & zero.row(q)[w];
          count += static_cast<std::size_t>(std::popcount(common[w]));
        }
        if (d >= 2 && count + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          const Word* z = zero.row(r);
          bool superset = true;
          for (std::size_t w = 0; w < words; ++w)
            if ((common[w] & z[w]) != common[w]) {
              superset = false;
              break;
            }
          if (superset) adjacent = false;
        }
        if (!adjacent) continue;

        IntVector v(k);
        const Integer cp = values[p];
        const Integer cq = -values[q];
        for (std::size_t c = 0; c < k; ++c) v[c] = cp * rays[q][c] + cq * rays[p][c];
        make_primitive(v);
        fresh.push_back(std::move(v));
        fresh_zero.emplace_back(common.begin(), common.end());
      }
    }

    for (auto r : pos) keep(r, false);
    for (auto r : zer) keep(r, true);
    for (std::size_t f = 0; f < fresh.size(); ++f) {
      next_rays.push_back(std::move(fresh[f]));
      const std::size_t id = next_zero.add();
      std::copy(fresh_zero[f].begin(), fresh_zero[f].end(), next_zero.row(id));
      next_zero.set(id, row);
    }

    rays.swap(next_rays);
    zero.swap(next_zero);
    if (options.max_rays != 0 && rays.size() > options.max_rays)
      throw RayLimitExceeded("double description exceeded " + std::to_string(options.max_rays) + " rays");
  }

  out.rays.reserve(rays.size());
  for (const auto& z : rays) out.rays.push_back(lift(z, basis, n));
  return out;
}

}  // namespace qlogic
