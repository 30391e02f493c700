#include "nilcoh/linear_system.hpp"

#include <algorithm>
#include <set>

namespace nilcoh {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 q) { return u64((unsigned __int128)(a)*b % q); }

u64 powmod(u64 a, u64 e, u64 q) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, q))
    if (e & 1) r = mulmod(r, a, q);
  return r;
}

u64 invmod(u64 a, u64 q) { return powmod(a % q, q - 2, q); }

/// Residue of a scalar; nullopt when a rational denominator vanishes mod q.
std::optional<u64> to_residue(const Scalar& s, u64 q) {
  if (!s.field().is_rational()) return u64(s.residue()) % q;
  u64 num = mpz_fdiv_ui(s.rat().get_num().get_mpz_t(), q);
  u64 den = mpz_fdiv_ui(s.rat().get_den().get_mpz_t(), q);
  if (den == 0) return std::nullopt;
  return mulmod(num, invmod(den, q), q);
}

/// Dense echelon over F_q with unit pivots; reports whether a row reduced
/// to zero (modularly dependent).
class ModEchelon {
public:
  ModEchelon(std::size_t width, u64 q) : width_(width), q_(q) {}

  /// True when the row is independent of the current echelon mod q.
  bool insert(std::vector<u64> row) {
    for (std::size_t e = 0; e < rows_.size(); ++e) {
      u64 c = row[pivots_[e]];
      if (c == 0) continue;
      const std::vector<u64>& er = rows_[e];
      for (std::size_t j = pivots_[e]; j < width_; ++j)
        if (er[j]) row[j] = (row[j] + mulmod(q_ - c, er[j], q_)) % q_;
    }
    std::size_t piv = 0;
    while (piv < width_ && row[piv] == 0) ++piv;
    if (piv == width_) return false;
    u64 inv = invmod(row[piv], q_);
    for (std::size_t j = piv; j < width_; ++j) row[j] = mulmod(row[j], inv, q_);
    // keep pivot order ascending so reduction passes stay one-directional
    std::size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

private:
  std::size_t width_;
  u64 q_;
  std::vector<std::vector<u64>> rows_;
  std::vector<std::size_t> pivots_;
};

Scalar sparse_dot(const SparseVec& row, const Vec& x) {
  Scalar acc = Scalar::zero(x.empty() ? Field::rationals() : x[0].field());
  for (const auto& [j, c] : row) acc += c * x[j];
  return acc;
}

}  // namespace

LinearSystem::LinearSystem(const Field& f, std::size_t width) : field_(f), width_(width) {}

void LinearSystem::add_row(const SparseVec& row) {
  for (const auto& [j, c] : row)
    require(j < width_, error::code::internal, "linear system row out of range");
  if (!row.empty()) rows_.push_back(row);
}

void LinearSystem::add_row(const Vec& row) {
  require(row.size() == width_, error::code::internal, "linear system row width mismatch");
  add_row(sparsify(row));
}

Subspace LinearSystem::kernel() const {
  if (width_ == 0) return Subspace::zero(field_, 0);
  const u64 q = field_.is_rational() ? 2305843009213693951ULL : u64(field_.p());
  ModEchelon ech(width_, q);
  std::vector<std::size_t> kept;
  std::vector<bool> is_kept(rows_.size(), false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::vector<u64> mod(width_, 0);
    bool convertible = true;
    for (const auto& [j, c] : rows_[i]) {
      std::optional<u64> r = to_residue(c, q);
      if (!r) {
        convertible = false;
        break;
      }
      mod[j] = *r;
    }
    if (!convertible || ech.insert(std::move(mod))) {
      kept.push_back(i);
      is_kept[i] = true;
    }
  }
  for (;;) {
    std::vector<Vec> dense;
    for (std::size_t i : kept) dense.push_back(densify(field_, width_, rows_[i]));
    std::vector<Vec> basis = Matrix::from_rows(field_, width_, dense).nullspace_basis();
    bool certified = true;
    for (std::size_t i = 0; i < rows_.size() && certified; ++i) {
      if (is_kept[i]) continue;
      for (const Vec& v : basis)
        if (!sparse_dot(rows_[i], v).is_zero()) {
          kept.push_back(i);
          is_kept[i] = true;
          certified = false;
          break;
        }
    }
    if (certified) return Subspace::span(field_, width_, basis);
  }
}

}  // namespace nilcoh
