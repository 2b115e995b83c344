#include "symqcs/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symqcs {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[v - 1])
      throw ArgError("not a permutation in one-line notation");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) throw ArgError("permutation degree mismatch in compose");
  std::vector<int> im(degree());
  for (int i = 1; i <= degree(); ++i) im[i - 1] = (*this)(other(i));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(degree());
  for (int i = 1; i <= degree(); ++i) im[images_[i - 1] - 1] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<int> Permutation::adjacent_word() const {
  // Bubble-sort the one-line notation by right multiplications; the swaps read
  // back in reverse give σ as a product of adjacent transpositions.
  std::vector<int> im = images_;
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < static_cast<int>(im.size()); ++i) {
      if (im[i] > im[i + 1]) {
        std::swap(im[i], im[i + 1]);
        word.push_back(i + 1);
        moved = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

int Permutation::sign() const { return adjacent_word().size() % 2 == 0 ? 1 : -1; }

std::string Permutation::str() const {
  std::string s = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

Permutation adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw ArgError("adjacent transposition index out of range");
  auto im = Permutation::identity(n).images();
  std::swap(im[i - 1], im[i]);
  return Permutation(std::move(im));
}

Permutation block_sum(const Permutation& s, const Permutation& t) {
  std::vector<int> im;
  im.reserve(s.degree() + t.degree());
  for (int v : s.images()) im.push_back(v);
  for (int v : t.images()) im.push_back(v + s.degree());
  return Permutation(std::move(im));
}

Permutation chi(int q, int p) {
  std::vector<int> im(p + q);
  for (int i = 1; i <= q; ++i) im[i - 1] = i + p;
  for (int i = q + 1; i <= p + q; ++i) im[i - 1] = i - q;
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

std::vector<std::vector<int>> subsets_lex(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(p);
  std::iota(cur.begin(), cur.end(), 1);
  if (p == 0) return {std::vector<int>{}};
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

static Permutation shuffle_from_subset(const std::vector<int>& a, int p, int q) {
  std::vector<bool> in_a(p + q + 1, false);
  for (int v : a) in_a[v] = true;
  std::vector<int> im(p + q);
  for (int i = 0; i < p; ++i) im[i] = a[i];
  int j = p;
  for (int v = 1; v <= p + q; ++v)
    if (!in_a[v]) im[j++] = v;
  return Permutation(std::move(im));
}

std::vector<Permutation> shuffle_reps(int p, int q) {
  std::vector<Permutation> out;
  for (const auto& a : subsets_lex(p + q, p)) out.push_back(shuffle_from_subset(a, p, q));
  return out;
}

static int subset_rank(const std::vector<int>& a, int n) {
  // Rank in the lexicographic enumeration produced by subsets_lex.
  int p = static_cast<int>(a.size());
  long long rank = 0;
  int prev = 0;
  for (int i = 0; i < p; ++i) {
    for (int v = prev + 1; v < a[i]; ++v) rank += binomial(n - v, p - 1 - i);
    prev = a[i];
  }
  return static_cast<int>(rank);
}

ShuffleFactor factor_shuffle(const Permutation& w, int p, int q) {
  if (w.degree() != p + q) throw ArgError("factor_shuffle degree mismatch");
  std::vector<int> a;
  for (int i = 1; i <= p; ++i) a.push_back(w(i));
  std::sort(a.begin(), a.end());
  Permutation rep = shuffle_from_subset(a, p, q);
  Permutation u = rep.inverse().compose(w);
  std::vector<int> si(p), ti(q);
  for (int i = 1; i <= p; ++i) si[i - 1] = u(i);
  for (int i = 1; i <= q; ++i) ti[i - 1] = u(p + i) - p;
  return ShuffleFactor{subset_rank(a, p + q), Permutation(std::move(si)),
                       Permutation(std::move(ti))};
}

std::vector<Permutation> coset_reps(int l, int q) {
  if (q > l) throw ArgError("coset_reps requires q <= l");
  int m = l - q;
  std::vector<Permutation> out;
  // Enumerate injections {1..m} -> {1..l} in lexicographic tuple order.
  std::vector<int> f(m, 0);
  std::vector<bool> used(l + 1, false);
  auto complete = [&]() {
    std::vector<int> im(l);
    for (int i = 0; i < m; ++i) im[i] = f[i];
    int j = m;
    for (int v = 1; v <= l; ++v)
      if (!used[v]) im[j++] = v;
    out.emplace_back(std::move(im));
  };
  if (m == 0) {
    complete();
    return out;
  }
  int i = 0;
  f[0] = 0;
  while (i >= 0) {
    if (f[i] > 0) used[f[i]] = false;
    int v = f[i] + 1;
    while (v <= l && used[v]) ++v;
    if (v > l) {
      f[i] = 0;
      --i;
      continue;
    }
    f[i] = v;
    used[v] = true;
    if (i == m - 1) {
      complete();
    } else {
      ++i;
      f[i] = 0;
    }
  }
  return out;
}

static long long injection_rank(const std::vector<int>& f, int l) {
  // Rank of an injection tuple among all injections {1..m}->{1..l}, lex order.
  int m = static_cast<int>(f.size());
  long long rank = 0;
  std::vector<bool> used(l + 1, false);
  for (int i = 0; i < m; ++i) {
    long long smaller = 0;
    for (int v = 1; v < f[i]; ++v)
      if (!used[v]) ++smaller;
    long long rest = 1;
    for (int j = i + 1; j < m; ++j) rest *= l - j;
    rank += smaller * rest;
    used[f[i]] = true;
  }
  return rank;
}

TailFactor factor_tail(const Permutation& w, int l, int q) {
  if (w.degree() != l) throw ArgError("factor_tail degree mismatch");
  int m = l - q;
  std::vector<int> f(m);
  for (int i = 1; i <= m; ++i) f[i - 1] = w(i);
  // rep: f on the first m letters, complement ascending on the tail.
  std::vector<bool> used(l + 1, false);
  for (int v : f) used[v] = true;
  std::vector<int> im(l);
  for (int i = 0; i < m; ++i) im[i] = f[i];
  int j = m;
  for (int v = 1; v <= l; ++v)
    if (!used[v]) im[j++] = v;
  Permutation rep{im};
  Permutation u = rep.inverse().compose(w);
  std::vector<int> hi(q);
  for (int i = 1; i <= q; ++i) hi[i - 1] = u(m + i) - m;
  return TailFactor{static_cast<int>(injection_rank(f, l)), Permutation(std::move(hi))};
}

}  // namespace symqcs
