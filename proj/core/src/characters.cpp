#include "spweyl/characters.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spweyl/patterns.hpp"

namespace spweyl {

void GradedCharacter::add(std::int64_t grade, const WeightVector& weight, const BigInt& mult) {
  if (mult == 0) return;
  if (weight.rank() != rank_) throw std::invalid_argument("character term has the wrong rank");
  auto [it, inserted] = terms_.try_emplace(TermKey{grade, weight}, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedCharacter::merge(const GradedCharacter& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("merge: rank mismatch");
  for (const auto& [k, v] : other.terms_) add(k.grade, k.weight, v);
}

GradedCharacter GradedCharacter::scaled(const BigInt& k) const {
  GradedCharacter out(rank_);
  if (k == 0) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * k);
  return out;
}

BigInt GradedCharacter::mult(std::int64_t grade, const WeightVector& weight) const {
  auto it = terms_.find(TermKey{grade, weight});
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::int64_t GradedCharacter::max_grade() const {
  std::int64_t g = -1;
  for (const auto& [k, v] : terms_) g = std::max(g, k.grade);
  return g;
}

std::map<WeightVector, QPolynomial, std::greater<>> GradedCharacter::by_weight() const {
  std::map<WeightVector, QPolynomial, std::greater<>> out;
  for (const auto& [k, v] : terms_) out[k.weight].add_term(k.grade, v);
  return out;
}

std::string GradedCharacter::to_text() const {
  std::string s;
  for (const auto& [w, poly] : by_weight()) {
    if (!s.empty()) s += " + ";
    const bool unit = poly == QPolynomial(1);
    const std::string e = w.is_zero() ? "1" : "e^{" + weight_to_text(w) + "}";
    if (unit) {
      s += e;
      continue;
    }
    const std::string c = poly.to_string();
    s += poly.terms().size() > 1 ? "(" + c + ")" : c;
    s += "·" + e;
  }
  return s.empty() ? "0" : s;
}

std::string GradedCharacter::to_latex() const {
  std::string s;
  for (const auto& [k, v] : terms_) {
    if (!s.empty()) s += " + ";
    if (v != 1) s += v.str() + " ";
    s += "q^{" + std::to_string(k.grade) + "} e^{";
    std::string w;
    for (int c = 0; c < k.weight.rank(); ++c) {
      const auto a = k.weight[c];
      if (a == 0) continue;
      if (a < 0)
        w += "-";
      else if (!w.empty())
        w += "+";
      if (a != 1 && a != -1) w += std::to_string(a < 0 ? -a : a);
      w += "\\varepsilon_{" + std::to_string(c + 1) + "}";
    }
    s += (w.empty() ? "0" : w) + "}";
  }
  return s.empty() ? "0" : s;
}

std::string GradedCharacter::to_csv() const {
  std::ostringstream out;
  out << "grade";
  for (int c = 1; c <= rank_; ++c) out << ",a" << c;
  out << ",mult\n";
  for (const auto& [k, v] : terms_) {
    out << k.grade;
    for (auto a : k.weight.coords) out << ',' << a;
    out << ',' << v.str() << '\n';
  }
  return out.str();
}

namespace {

// Runs work(index, acc) for index in [0, n) on up to `threads` workers with a
// strided assignment, then merges partial characters in worker order.
template <class Work>
GradedCharacter run_partitioned(int rank, std::size_t n, unsigned threads, Work work) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<GradedCharacter> partial(workers, GradedCharacter(rank));
  if (workers == 1) {
    for (std::size_t k = 0; k < n; ++k) work(k, partial[0]);
    return partial[0];
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < n; k += workers) work(k, partial[w]);
    });
  for (auto& t : pool) t.join();
  GradedCharacter out(rank);
  for (const auto& p : partial) out.merge(p);
  return out;
}

}  // namespace

GradedCharacter character_direct(const DominantWeight& lam, ParallelOptions opts) {
  const auto tops = top_eta_rows(lam);
  return run_partitioned(lam.rank(), tops.size(), opts.threads, [&](std::size_t k, GradedCharacter& acc) {
    for_each_pattern_with_top(lam, tops[k], [&](const PatternC& pat) {
      const WeightVector w = pattern_weight(pat);
      // every POP over this pattern shares the pattern's weight
      std::map<std::int64_t, BigInt> by_grade;
      for_each_pop_over(pat, [&](const Pop& p) {
        assert(pop_weight(p) == w);
        by_grade[pop_boxes(p)] += 1;
      });
      for (const auto& [g, c] : by_grade) acc.add(g, w, c);
    });
  });
}

ExponentArray ExponentArray::from_differences(const DiffArray& d) {
  if (d.restricted()) throw std::invalid_argument("ExponentArray needs an unrestricted difference array");
  ExponentArray a(d.rank());
  for (int j = 1; j <= d.rank(); ++j)
    for (int i = 1; i <= j; ++i) {
      a.barred[tri_index(i, j)] = d.barred(i, j).ell;
      if (j < d.rank()) a.unbarred[tri_index(i, j)] = d.unbarred(i, j).ell;
    }
  return a;
}

std::int64_t top_argument(const DominantWeight& lam, const ExponentArray& a, const Position& p) {
  const int r = lam.rank();
  auto ub = [&](int i, int k) -> std::int64_t {
    return (i >= 1 && i <= k && k < r) ? a.unbarred[tri_index(i, k)] : 0;
  };
  auto br = [&](int i, int k) -> std::int64_t {
    return (i >= 1 && i <= k && k <= r) ? a.barred[tri_index(i, k)] : 0;
  };
  const int i = p.i;
  const int j = p.j;
  if (p.barred && i == j) {
    std::int64_t n = lam.lambda(i);
    for (int k = i; k <= r - 1; ++k) n -= ub(i, k);
    for (int k = i + 1; k <= r; ++k) n -= br(i, k);
    return n;
  }
  std::int64_t n = lam.omega(i);
  const int first_unbarred = p.barred ? j : j + 1;
  for (int k = first_unbarred; k <= r - 1; ++k) n += ub(i + 1, k) - ub(i, k);
  for (int k = j + 1; k <= r; ++k) n += br(i + 1, k) - br(i, k);
  return n;
}

std::vector<Position> fermionic_order(int rank) {
  // block sequence reversed, i ascending inside each block
  std::vector<Position> out;
  for (int j = rank; j >= 1; --j) {
    if (j < rank)
      for (int i = 1; i <= j; ++i) out.push_back({i, j, false});
    for (int i = 1; i <= j; ++i) out.push_back({i, j, true});
  }
  return out;
}

WeightVector fermionic_weight(const DominantWeight& lam, const ExponentArray& a) {
  const int r = lam.rank();
  WeightVector w = lam.weight();
  for (int j = 1; j <= r; ++j)
    for (int i = 1; i <= j; ++i) {
      if (j < r) w -= a.unbarred[tri_index(i, j)] * root_vector({i, j, false}, r);
      w -= a.barred[tri_index(i, j)] * root_vector({i, j, true}, r);
    }
  return w;
}

QPolynomial fermionic_coefficient(const DominantWeight& lam, const ExponentArray& a) {
  QPolynomial c = 1;
  for (const auto& p : overlay_positions(lam.rank(), false)) {
    c *= q_binomial(top_argument(lam, a, p), a.at(p));
    if (c.is_zero()) break;
  }
  return c;
}

namespace {

struct FermionicWalk {
  const DominantWeight& lam;
  const std::vector<Position>& order;
  std::int64_t box;
  ExponentArray a;
  GradedCharacter& acc;

  void run(std::size_t k, const QPolynomial& coeff) {
    if (k == order.size()) {
      const WeightVector w = fermionic_weight(lam, a);
      for (const auto& [g, c] : coeff.terms()) acc.add(g, w, c);
      return;
    }
    const Position& pos = order[k];
    const std::int64_t n = top_argument(lam, a, pos);
    for (std::int64_t l = 0; l <= std::min(n, box); ++l) {
      a.at(pos) = l;
      run(k + 1, coeff * q_binomial(n, l));
    }
    a.at(pos) = 0;
  }
};

}  // namespace

GradedCharacter character_fermionic(const DominantWeight& lam, ParallelOptions opts) {
  const int r = lam.rank();
  const auto order = fermionic_order(r);
  const std::int64_t box = lam.lambda(1);
  // The first entry's top argument reads nothing, so its range is known upfront.
  const std::int64_t n0 = top_argument(lam, ExponentArray(r), order.front());
  const std::size_t first_values = n0 < 0 ? 0 : static_cast<std::size_t>(std::min(n0, box) + 1);
  return run_partitioned(r, first_values, opts.threads, [&](std::size_t v, GradedCharacter& acc) {
    FermionicWalk walk{lam, order, box, ExponentArray(r), acc};
    const auto l = static_cast<std::int64_t>(v);
    walk.a.at(order.front()) = l;
    walk.run(1, q_binomial(n0, l));
  });
}

GradedCharacter zeroth_piece(const GradedCharacter& ch) {
  GradedCharacter out(ch.rank());
  for (const auto& [k, v] : ch.terms())
    if (k.grade == 0) out.add(0, k.weight, v);
  return out;
}

GradedCharacter specialize_q1(const GradedCharacter& ch) {
  GradedCharacter out(ch.rank());
  for (const auto& [k, v] : ch.terms()) out.add(0, k.weight, v);
  return out;
}

BigInt total_dim(const GradedCharacter& ch) {
  BigInt s = 0;
  for (const auto& [k, v] : ch.terms()) s += v;
  return s;
}

GradedCharacter restrict_drop_last(const GradedCharacter& ch) {
  if (ch.rank() < 2) throw std::invalid_argument("restrict_drop_last needs rank >= 2");
  GradedCharacter out(ch.rank() - 1);
  for (const auto& [k, v] : ch.terms()) {
    WeightVector w(std::vector<std::int64_t>(k.weight.coords.begin(), k.weight.coords.end() - 1));
    out.add(k.grade, w, v);
  }
  return out;
}

}  // namespace spweyl
