#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "potalg/ncpoly.hpp"

namespace potalg {

using QMatrix = std::vector<std::vector<Scalar>>;

/// Rank by straightforward Gaussian elimination over the coefficient field.
long rank_gauss(QMatrix m);

/// Rank by fraction-free Bareiss elimination over the integers (rows are
/// cleared of denominators first).  Rational matrices only.
long rank_bareiss(const QMatrix& m);

QMatrix matmul(const QMatrix& a, const QMatrix& b);
bool is_zero_matrix(const QMatrix& m);

/// Incremental Gauss-Jordan over sparse rows with ordered keys: pivots are
/// the Less-greatest keys, tails are kept fully reduced (supported on
/// non-pivot keys only, with back-substitution on every new pivot).
///
/// Rational rows are held fraction-free: every stored vector is an
/// integer-primitive multiple of the reduced row, and elimination steps
/// cross-multiply and strip the integer content instead of dividing, which
/// keeps coefficient growth in check.  Z/p rows are used as-is.
template <class Key, class Less, class Hash>
class TriangularEliminator {
 public:
  using Row = std::map<Key, Scalar, Less>;

  explicit TriangularEliminator(Less less = Less()) : less_(std::move(less)) {}

  /// Reduce the row against the span; returns the new pivot when the row
  /// enlarges it, nothing when the row reduces to zero.
  std::optional<Key> add(Row row) {
    normalize(row);
    reduce(row);
    if (row.empty()) return std::nullopt;
    normalize(row);
    Key pivot = std::prev(row.end())->first;
    for (auto it = row.begin(); it != std::prev(row.end()); ++it)
      mentions_[it->first].push_back(pivot);
    rules_.emplace(pivot, std::move(row));
    substitute_into_tails(pivot);
    return pivot;
  }

  long rank() const { return static_cast<long>(rules_.size()); }
  bool is_pivot(const Key& k) const { return rules_.count(k) > 0; }
  /// The stored primitive row vector with the given pivot (pivot entry
  /// included), or nullptr.  The vector lies in the eliminated span.
  const Row* rule(const Key& k) const {
    auto it = rules_.find(k);
    return it == rules_.end() ? nullptr : &it->second;
  }
  std::vector<Key> pivots() const {
    std::vector<Key> out;
    out.reserve(rules_.size());
    for (const auto& [k, t] : rules_) out.push_back(k);
    std::sort(out.begin(), out.end(), less_);
    return out;
  }
  Row make_row() const { return Row(less_); }

 private:
  /// Rational rows: clear denominators, divide by the integer content, make
  /// the leading coefficient positive.  No-op over Z/p.
  void normalize(Row& row) const {
    if (row.empty() || !row.begin()->second.is_rational()) return;
    mpz_class lcm_den = 1;
    for (const auto& [k, c] : row) {
      const mpz_class& den = c.rational_value().get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
      lcm_den = lcm_den / g * den;
    }
    mpz_class content = 0;
    for (const auto& [k, c] : row) {
      const mpq_class& q = c.rational_value();
      mpz_class num = q.get_num() * (lcm_den / q.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    if (std::prev(row.end())->second.sign() < 0) content = -content;
    for (auto& [k, c] : row) {
      const mpq_class& q = c.rational_value();
      mpz_class num = q.get_num() * (lcm_den / q.get_den());
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), content.get_mpz_t());
      c = Scalar(mpq_class(num));
    }
  }

  /// row := lead(r) * row - c * r, with the pivot entry (carrying c)
  /// already erased from row; afterwards the content is stripped.
  void eliminate_with(Row& row, const Scalar& c, const Row& r) const {
    const Scalar& lead = std::prev(r.end())->second;
    for (auto& [k, v] : row) v *= lead;
    auto stop = std::prev(r.end());
    for (auto it = r.begin(); it != stop; ++it) {
      Scalar delta = -(c * it->second);
      auto [pos, inserted] = row.emplace(it->first, delta);
      if (!inserted) {
        pos->second += delta;
        if (pos->second.is_zero()) row.erase(pos);
      }
    }
    strip_content(row);
  }

  void strip_content(Row& row) const {
    if (row.empty() || !row.begin()->second.is_rational()) return;
    mpz_class content = 0;
    for (const auto& [k, c] : row) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
              c.rational_value().get_num().get_mpz_t());
      if (content == 1) return;
    }
    for (auto& [k, c] : row) {
      mpz_class num = c.rational_value().get_num();
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), content.get_mpz_t());
      c = Scalar(mpq_class(num));
    }
  }

  /// One descending sweep: substitution introduces only non-pivot keys
  /// strictly below the key replaced.  The whole row is rescaled on every
  /// elimination, so already-passed entries stay consistent.
  void reduce(Row& row) const {
    if (row.empty()) return;
    auto it = row.end();
    while (it != row.begin()) {
      --it;
      auto r = rules_.find(it->first);
      if (r == rules_.end()) continue;
      Key k = it->first;
      Scalar c = it->second;
      row.erase(it);
      eliminate_with(row, c, r->second);
      it = row.lower_bound(k);  // continue just below the eliminated key
    }
  }

  void substitute_into_tails(const Key& pivot) {
    auto men = mentions_.find(pivot);
    if (men == mentions_.end()) return;
    std::vector<Key> owners = std::move(men->second);
    mentions_.erase(men);
    const Row& r = rules_.at(pivot);
    for (const Key& owner : owners) {
      auto ro = rules_.find(owner);
      if (ro == rules_.end()) continue;
      Row& t = ro->second;
      auto entry = t.find(pivot);
      if (entry == t.end()) continue;  // stale mention
      Scalar c = entry->second;
      t.erase(entry);
      eliminate_with(t, c, r);
      // only keys inherited from r can be new to the owner's tail
      for (auto it = r.begin(); it != std::prev(r.end()); ++it)
        if (t.count(it->first)) mentions_[it->first].push_back(owner);
    }
  }

  Less less_;
  std::unordered_map<Key, Row, Hash> rules_;
  std::unordered_map<Key, std::vector<Key>, Hash> mentions_;
};

/// Word-keyed eliminator under a monomial order; rows fed as polynomials.
class WordSpanEliminator {
 public:
  using Base = TriangularEliminator<Word, MonomialOrder, WordHash>;
  using Row = Base::Row;

  explicit WordSpanEliminator(MonomialOrder ord) : base_(std::move(ord)) {}

  std::optional<Word> add(const NcPoly& row) {
    Base::Row acc = base_.make_row();
    for (const auto& [w, c] : row.terms()) acc.emplace(w, c);
    return base_.add(std::move(acc));
  }

  long rank() const { return base_.rank(); }
  bool is_pivot(const Word& w) const { return base_.is_pivot(w); }
  /// Primitive span vector whose leading word is the pivot, or nullptr.
  const Row* rule(const Word& w) const { return base_.rule(w); }
  std::vector<Word> pivots() const {
    std::vector<Word> out = base_.pivots();
    std::sort(out.begin(), out.end(), WordKeyLess());
    return out;
  }

 private:
  Base base_;
};

/// Integer-keyed eliminator for sparse columns of graded maps.
using SparseIntEliminator =
    TriangularEliminator<int, std::less<int>, std::hash<int>>;

/// Sparse column: (row index, value) pairs.
using SparseCol = std::vector<std::pair<int, Scalar>>;

long rank_sparse(const std::vector<SparseCol>& columns);

}  // namespace potalg
