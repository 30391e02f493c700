#include "nilcoh/free_nilpotent.hpp"

#include <cstdlib>

namespace nilcoh {

int moebius(std::size_t d) {
  int m = 1;
  for (std::size_t q = 2; q * q <= d; ++q) {
    if (d % q != 0) continue;
    d /= q;
    if (d % q == 0) return 0;
    m = -m;
  }
  if (d > 1) m = -m;
  return m;
}

std::size_t witt_dim(std::size_t n, std::size_t i) {
  require(n >= 1 && i >= 1, error::code::parse, "witt_dim needs n, i >= 1");
  mpz_class sum = 0;
  for (std::size_t d = 1; d <= i; ++d) {
    if (i % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), n, i / d);
    sum += mu * pw;
  }
  mpz_class res;
  mpz_divexact_ui(res.get_mpz_t(), sum.get_mpz_t(), i);
  require(res.fits_ulong_p(), error::code::resource, "witt_dim overflow");
  return res.get_ui();
}

FreeNilpotent::FreeNilpotent(std::size_t n, std::size_t p, Field f)
    : n_(n), p_(p), field_(f) {}

HallSkeleton hall_skeleton(std::size_t n, std::size_t p) {
  require(n >= 1 && p >= 1, error::code::parse, "hall_skeleton needs n, p >= 1");
  HallSkeleton s{n, p, {}, {0, 0}};
  for (std::size_t i = 0; i < n; ++i) s.words.push_back(HallWord{-1, -1, 1});
  for (std::size_t d = 2; d <= p; ++d) {
    s.degree_start.push_back(s.words.size());
    std::size_t end_prev = s.words.size();
    for (std::size_t v = 0; v < end_prev; ++v) {
      if (s.words[v].degree >= d) break;
      std::size_t du = d - s.words[v].degree;
      for (std::size_t u = v + 1; u < end_prev; ++u) {
        if (s.words[u].degree != du) continue;
        if (s.words[u].left >= 0 && std::size_t(s.words[u].right) > v) continue;
        s.words.push_back(HallWord{int(u), int(v), d});
      }
    }
  }
  s.degree_start.push_back(s.words.size());
  return s;
}

void FreeNilpotent::enumerate_words() {
  HallSkeleton s = hall_skeleton(n_, p_);
  words_ = std::move(s.words);
  degree_start_ = std::move(s.degree_start);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w].left >= 0)
      pair_index_[{std::size_t(words_[w].left), std::size_t(words_[w].right)}] = w;
}

std::vector<std::size_t> FreeNilpotent::hall_degree_counts(std::size_t n, std::size_t p) {
  HallSkeleton s = hall_skeleton(n, p);
  std::vector<std::size_t> counts;
  for (std::size_t d = 1; d <= p; ++d)
    counts.push_back(s.degree_start[d + 1] - s.degree_start[d]);
  return counts;
}

std::shared_ptr<const FreeNilpotent> FreeNilpotent::build_basis_only(
    std::size_t n, std::size_t p, const Field& f, std::optional<std::size_t> cap) {
  require(n >= 1 && p >= 1, error::code::parse, "build needs n, p >= 1");
  std::size_t limit = cap.value_or(2000);
  if (!cap) {
    if (const char* env = std::getenv("NILCOH_DIM_CAP")) limit = std::strtoul(env, nullptr, 10);
  }
  std::size_t total = 0;
  for (std::size_t i = 1; i <= p; ++i) total += witt_dim(n, i);
  require(total <= limit, error::code::resource,
          "free nilpotent dimension " + std::to_string(total) + " exceeds cap " +
              std::to_string(limit));

  auto fn = std::shared_ptr<FreeNilpotent>(new FreeNilpotent(n, p, f));
  fn->enumerate_words();
  for (std::size_t i = 1; i <= p; ++i)
    require(fn->degree_start_[i + 1] - fn->degree_start_[i] == witt_dim(n, i),
            error::code::internal, "Hall enumeration disagrees with the Witt dimension");
  return fn;
}

std::shared_ptr<const FreeNilpotent> FreeNilpotent::build(std::size_t n, std::size_t p,
                                                          const Field& f,
                                                          std::optional<std::size_t> cap) {
  auto base = build_basis_only(n, p, f, cap);
  auto fn = std::const_pointer_cast<FreeNilpotent>(base);

  std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> brackets;
  for (std::size_t i = 0; i < fn->words_.size(); ++i)
    for (std::size_t j = i + 1; j < fn->words_.size(); ++j) {
      if (fn->words_[i].degree + fn->words_[j].degree > p) break;
      SparseVec sv = fn->normalize_bracket(i, j);
      if (!sv.empty()) brackets.emplace_back(i, j, std::move(sv));
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < fn->words_.size(); ++i) labels.push_back(fn->word_label(i));
  fn->algebra_ = std::make_shared<const LieAlgebra>(f, std::move(labels), std::move(brackets));
  return fn;
}

std::string FreeNilpotent::word_label(std::size_t idx) const {
  const HallWord& w = words_[idx];
  if (w.left < 0) return "x" + std::to_string(idx + 1);
  return "[" + word_label(w.left) + "," + word_label(w.right) + "]";
}

Subspace FreeNilpotent::graded_piece(std::size_t d) const {
  require(d >= 1 && d <= p_, error::code::parse, "graded_piece degree out of range");
  std::vector<Vec> rows;
  for (std::size_t i = degree_start_[d]; i < degree_start_[d + 1]; ++i) {
    Vec v = zero_vec(field_, dim());
    v[i] = Scalar::one(field_);
    rows.push_back(std::move(v));
  }
  return Subspace::span(field_, dim(), rows);
}

bool FreeNilpotent::is_hall_pair(std::size_t u, std::size_t v) const {
  return u > v && (words_[u].left < 0 || std::size_t(words_[u].right) <= v);
}

const SparseVec& FreeNilpotent::bracket_descending(std::size_t u, std::size_t v) const {
  auto it = memo_.find({u, v});
  if (it != memo_.end()) return it->second;
  SparseVec out;
  if (words_[u].degree + words_[v].degree <= p_) {
    if (is_hall_pair(u, v)) {
      out.emplace_back(pair_index_.at({u, v}), Scalar::one(field_));
    } else {
      // u = [a,b] with b > v: [[a,b],v] = [a,[b,v]] - [b,[a,v]]
      std::size_t a = words_[u].left, b = words_[u].right;
      std::map<std::size_t, Scalar> acc;
      auto add_term = [&](std::size_t x, const SparseVec& yv, bool negate) {
        for (const auto& [w, c] : yv)
          for (const auto& [t, c2] : normalize_bracket(x, w)) {
            Scalar val = negate ? -(c * c2) : c * c2;
            auto [pos, fresh] = acc.emplace(t, val);
            if (!fresh) pos->second += val;
          }
      };
      add_term(a, bracket_descending(b, v), false);
      add_term(b, bracket_descending(a, v), true);
      for (const auto& [t, c] : acc)
        if (!c.is_zero()) out.emplace_back(t, c);
    }
  }
  return memo_.emplace(std::make_pair(u, v), std::move(out)).first->second;
}

SparseVec FreeNilpotent::normalize_bracket(std::size_t u, std::size_t v) const {
  require(u < dim() && v < dim(), error::code::internal, "word index out of range");
  if (u == v) return {};
  if (u > v) return bracket_descending(u, v);
  SparseVec out = bracket_descending(v, u);
  for (auto& [k, c] : out) c = -c;
  return out;
}

Vec FreeNilpotent::evaluate_word(std::size_t idx, const LieAlgebra& g,
                                 const std::vector<Vec>& gen_images) const {
  require(gen_images.size() == n_, error::code::parse, "need one image per generator");
  const HallWord& w = words_[idx];
  if (w.left < 0) return gen_images[idx];
  return g.bracket(evaluate_word(w.left, g, gen_images), evaluate_word(w.right, g, gen_images));
}

AlgebraHom FreeNilpotent::universal_hom(const LiePtr& g, const std::vector<Vec>& gen_images) const {
  Matrix m(field_, g->dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec img = evaluate_word(j, *g, gen_images);
    for (std::size_t i = 0; i < g->dim(); ++i) m.at(i, j) = img[i];
  }
  return AlgebraHom(algebra_, g, std::move(m));
}

AlgebraHom FreeNilpotent::truncation_projection(const FreeNilpotent& target) const {
  require(target.n_ == n_ && target.field() == field_ && target.p_ <= p_, error::code::parse,
          "projection needs same generators and a lower class");
  Matrix m(field_, target.dim(), dim());
  for (std::size_t i = 0; i < target.dim(); ++i) m.at(i, i) = Scalar::one(field_);
  return AlgebraHom(algebra_, target.algebra_, std::move(m));
}

Matrix FreeNilpotent::canonical_inclusion(const FreeNilpotent& bigger) const {
  require(bigger.n_ == n_ && bigger.field() == field_ && bigger.p_ >= p_, error::code::parse,
          "inclusion needs same generators and a higher class");
  Matrix m(field_, bigger.dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m.at(i, i) = Scalar::one(field_);
  return m;
}

std::vector<std::pair<std::string, Vec>> degree3_monomial_basis(const FreeNilpotent& f) {
  require(f.step() >= 3, error::code::parse, "needs class >= 3");
  const std::size_t n = f.generators();
  require(n >= 2, error::code::parse, "needs at least 2 generators");
  const LieAlgebra& g = *f.algebra();
  auto gen = [&](std::size_t i) {
    Vec v = zero_vec(f.field(), f.dim());
    v[i] = Scalar::one(f.field());
    return v;
  };
  auto nest = [&](std::size_t a, std::size_t b, std::size_t c) {
    return g.bracket(gen(a), g.bracket(gen(b), gen(c)));
  };
  std::vector<std::pair<std::string, Vec>> out;
  auto tag = [](std::size_t a, std::size_t b, std::size_t c) {
    return "[x" + std::to_string(a + 1) + ",[x" + std::to_string(b + 1) + ",x" +
           std::to_string(c + 1) + "]]";
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      out.emplace_back(tag(i, i, j), nest(i, i, j));
      out.emplace_back(tag(j, i, j), nest(j, i, j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        out.emplace_back(tag(i, j, k), nest(i, j, k));
        out.emplace_back(tag(j, i, k), nest(j, i, k));
      }
  return out;
}

}  // namespace nilcoh
