#include "schur/prepcirc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schur {

double RegisterState::norm() const {
  double s = 0.0;
  for (const auto& [r, a] : amplitudes) s += a * a;
  return std::sqrt(s);
}

RegisterState initial_registers(const Ditstring& x, int d) {
  RegisterState s;
  s.n = static_cast<int>(x.size());
  s.d = d;
  Registers r;
  for (int v : x)
    if (v < 1 || v > d) throw std::out_of_range("input symbol outside [d]");
  r.x = x;
  r.p.assign(x.size(), 0);
  r.mu.assign(x.size(), 0);
  r.coset.assign(x.size(), 0);
  s.amplitudes.emplace(std::move(r), 1.0);
  return s;
}

namespace {

template <class F>
RegisterState map_basis(const RegisterState& s, F&& f) {
  RegisterState out;
  out.n = s.n;
  out.d = s.d;
  for (const auto& [r, a] : s.amplitudes) {
    Registers next = f(r);
    out.amplitudes[std::move(next)] += a;
  }
  return out;
}

int current_site(const Registers& r) {
  if (r.step >= static_cast<int>(r.x.size())) throw std::logic_error("all sites already absorbed");
  return r.step;  // 0-based index of the site being processed
}

int block_start(const std::vector<int>& mu, int e) {
  return std::accumulate(mu.begin(), mu.begin() + (e - 1), 0);
}

}  // namespace

RegisterState subroutine_a(const RegisterState& s) {
  return map_basis(s, [](const Registers& r) {
    if (r.pos != 0 || r.uniq != 0) throw AncillaError("subroutine A: ancilla registers are not zero");
    const int xm = r.x[current_site(r)];
    Registers o = r;
    int smaller = 0, seen = 0;
    for (int v : r.p) {
      if (v == 0) continue;
      if (v < xm) ++smaller;
      if (v == xm) seen = 1;
    }
    o.pos = smaller + 1;
    o.uniq = seen;
    return o;
  });
}

RegisterState subroutine_b(const RegisterState& s) {
  return map_basis(s, [](const Registers& r) {
    const int site = current_site(r);
    const int xm = r.x[site];
    const int e = r.pos;
    if (e < 1 || e > static_cast<int>(r.p.size())) throw std::logic_error("subroutine B: position register out of range");
    Registers o = r;
    if (r.uniq == 0) {
      if (o.p.back() != 0) throw std::logic_error("subroutine B: alphabet register full");
      o.p.insert(o.p.begin() + (e - 1), xm);
      o.p.pop_back();
    } else if (o.p[e - 1] != xm) {
      throw std::logic_error("subroutine B: repeated symbol not found at the recorded position");
    }
    o.x[site] = 0;
    return o;
  });
}

RegisterState subroutine_c(const RegisterState& s) {
  return map_basis(s, [](const Registers& r) {
    const int e = r.pos;
    Registers o = r;
    if (r.uniq == 0) {
      if (o.mu.back() != 0) throw std::logic_error("subroutine C: multiplicity register full");
      o.mu.insert(o.mu.begin() + (e - 1), 1);
      o.mu.pop_back();
    } else {
      ++o.mu[e - 1];
    }
    return o;
  });
}

RegisterState subroutine_d(const RegisterState& s) {
  return map_basis(s, [](const Registers& r) {
    Registers o = r;
    o.uniq ^= (r.mu[r.pos - 1] != 1) ? 1 : 0;
    if (o.uniq != 0) throw AncillaError("subroutine D: uniqueness bit not cleared");
    return o;
  });
}

RegisterState subroutine_e(const RegisterState& s) {
  RegisterState out;
  out.n = s.n;
  out.d = s.d;
  for (const auto& [r, a] : s.amplitudes) {
    const int site = current_site(r);
    const int e = r.pos;
    const int lo = block_start(r.mu, e);
    const int width = r.mu[e - 1];
    const double amp = a / std::sqrt(static_cast<double>(width));
    for (int ell = lo + 1; ell <= lo + width; ++ell) {
      Registers o = r;
      for (int k = 0; k < site; ++k)
        if (o.coset[k] >= ell) ++o.coset[k];
      o.coset[site] = ell;
      out.amplitudes[std::move(o)] += amp;
    }
  }
  return out;
}

RegisterState subroutine_h(const RegisterState& s) {
  return map_basis(s, [](const Registers& r) {
    const int site = current_site(r);
    const int ell = r.coset[site];
    const std::vector<int> sums = prefix_sums(r.mu);
    const int e = r.pos;
    const int below = e >= 2 ? sums[e - 2] : 0;
    if (!(below < ell && ell <= sums[e - 1])) throw std::logic_error("subroutine H: coset entry outside its block");
    int count = 0;
    for (std::size_t k = 0; k < r.mu.size(); ++k) {
      if (r.mu[k] == 0) continue;
      const int prev = k ? sums[k - 1] : 0;
      if (prev < ell) ++count;
    }
    Registers o = r;
    o.pos -= count;
    if (o.pos != 0) throw AncillaError("subroutine H: position register not cleared");
    o.step += 1;
    return o;
  });
}

RegisterState prep_step(const RegisterState& s) {
  return subroutine_h(subroutine_e(subroutine_d(subroutine_c(subroutine_b(subroutine_a(s))))));
}

RegisterState run_preprocessing(const Ditstring& x, int d) {
  RegisterState s = initial_registers(x, d);
  for (std::size_t i = 0; i < x.size(); ++i) s = prep_step(s);
  return s;
}

std::vector<int> prefix_sums(const std::vector<int>& mu) {
  std::vector<int> out(mu.size());
  std::partial_sum(mu.begin(), mu.end(), out.begin());
  return out;
}

AlphabetMap CompressedString::alphabet() const {
  std::vector<int> v;
  for (int s : p)
    if (s != 0) v.push_back(s);
  return AlphabetMap(std::move(v));
}

CompressedString compress_string(const Ditstring& x) {
  CompressedString cs;
  std::vector<int> distinct(x);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> counts(distinct.size(), 0);
  for (int v : x) {
    if (v < 1) throw std::out_of_range("symbols start at 1");
    const int rank = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin());
    cs.e.push_back(rank + 1);
    ++counts[rank];
  }
  cs.p = distinct;
  cs.p.resize(x.size(), 0);
  cs.mu = Composition(counts);
  return cs;
}

Ditstring decompress_string(const std::vector<int>& e, const std::vector<int>& p) {
  Ditstring x;
  for (int i : e) {
    if (i < 1 || i > static_cast<int>(p.size()) || p[i - 1] == 0) throw std::out_of_range("rank points at an empty alphabet slot");
    x.push_back(p[i - 1]);
  }
  return x;
}

std::vector<int> encode_perm(const Permutation& sigma) {
  std::vector<int> digits;
  Permutation cur = sigma;
  for (int k = sigma.size(); k >= 2; --k) {
    const int i = cur(k) % k;
    digits.push_back(i);
    // cur' = c_k^{k-i} cur fixes k
    cur = Permutation::cycle_prefix(sigma.size(), k).pow(k - i) * cur;
    if (cur(k) != k) throw std::logic_error("encode_perm: reduction failed to fix the last point");
  }
  return digits;
}

Permutation decode_perm(const std::vector<int>& digits, int n) {
  if (static_cast<int>(digits.size()) != std::max(n - 1, 0)) throw std::invalid_argument("decode_perm: need n-1 digits");
  Permutation sigma = Permutation::identity(n);
  for (int k = n; k >= 2; --k) {
    const int i = digits[n - k];
    if (i < 0 || i >= k) throw std::out_of_range("decode_perm: digit outside Z_k");
    sigma = sigma * Permutation::cycle_prefix(n, k).pow(i);
  }
  return sigma;
}

std::pair<int, int> row_index_map(const std::vector<int>& mu, int i) {
  const int n = std::accumulate(mu.begin(), mu.end(), 0);
  if (i < 1 || i > n) throw std::out_of_range("row_index_map: i outside [1, n]");
  int before = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (i <= before + mu[k]) return {static_cast<int>(k) + 1, i - before};
    before += mu[k];
  }
  throw std::logic_error("row_index_map: unreachable");
}

std::pair<int, int> row_index_map(const Composition& mu, int i) { return row_index_map(mu.parts(), i); }

}  // namespace schur
