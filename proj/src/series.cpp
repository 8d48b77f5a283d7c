#include "jetlab/series.hpp"

#include <algorithm>

namespace jetlab {

Series::Series(int vars, int cutoff) : vars_(vars), cutoff_(cutoff) {
  if (vars < 1)
    fail(Err::DimMismatch, "series needs at least one variable");
  if (cutoff < 0)
    fail(Err::Level, "negative truncation level");
}

Series Series::constant(int vars, int cutoff, const Rat &c) {
  Series s(vars, cutoff);
  s.set_coeff(MultiIndex::zero(vars), c);
  return s;
}

Series Series::variable(int vars, int cutoff, int i) {
  Series s(vars, cutoff);
  s.set_coeff(MultiIndex::unit(vars, i), Rat(1));
  return s;
}

Series Series::monomial(int vars, int cutoff, const MultiIndex &m,
                        const Rat &c) {
  Series s(vars, cutoff);
  s.set_coeff(m, c);
  return s;
}

int Series::order() const {
  if (terms_.empty())
    return kOrderInfinity;
  return terms_.begin()->first.degree();
}

int Series::max_degree() const {
  if (terms_.empty())
    return -1;
  return terms_.rbegin()->first.degree();
}

Rat Series::coeff(const MultiIndex &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Series::constant_term() const { return coeff(MultiIndex::zero(vars_)); }

void Series::set_coeff(const MultiIndex &m, const Rat &c) {
  if (m.vars() != vars_)
    fail(Err::DimMismatch, "multi-index does not match variable count");
  if (m.degree() > cutoff_ || c == 0) {
    terms_.erase(m);
    return;
  }
  terms_[m] = c;
}

void Series::add_coeff(const MultiIndex &m, const Rat &c) {
  if (m.degree() > cutoff_ || c == 0)
    return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Series Series::project(int level) const {
  if (level > cutoff_)
    fail(Err::Level, "projection level exceeds cutoff");
  Series s(vars_, level);
  for (const auto &[m, c] : terms_) {
    if (m.degree() > level)
      break;
    s.terms_.emplace(m, c);
  }
  return s;
}

Series Series::extended(int new_cutoff) const {
  if (new_cutoff < cutoff_)
    return project(new_cutoff);
  Series s(vars_, new_cutoff);
  s.terms_ = terms_;
  return s;
}

Series Series::homogeneous_part(int d) const {
  Series s(vars_, cutoff_);
  for (const auto &[m, c] : terms_)
    if (m.degree() == d)
      s.terms_.emplace(m, c);
  return s;
}

Series Series::derivative(int i) const {
  Series s(vars_, cutoff_);
  for (const auto &[m, c] : terms_) {
    int e = m.exp[static_cast<size_t>(i)];
    if (e == 0)
      continue;
    MultiIndex d = m;
    d.exp[static_cast<size_t>(i)] -= 1;
    d.deg -= 1;
    s.add_coeff(d, Rat(e) * c);
  }
  return s;
}

Series Series::operator-() const {
  Series s(vars_, cutoff_);
  for (const auto &[m, c] : terms_)
    s.terms_.emplace(m, -c);
  return s;
}

bool operator==(const Series &a, const Series &b) {
  return a.vars_ == b.vars_ && a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
}

static void require_compatible(const Series &a, const Series &b) {
  if (a.vars() != b.vars() || a.cutoff() != b.cutoff())
    fail(Err::DimMismatch, "series variable counts or cutoffs differ");
}

Series operator+(const Series &a, const Series &b) {
  require_compatible(a, b);
  Series s = a;
  for (const auto &[m, c] : b.terms())
    s.add_coeff(m, c);
  return s;
}

Series operator-(const Series &a, const Series &b) {
  require_compatible(a, b);
  Series s = a;
  for (const auto &[m, c] : b.terms())
    s.add_coeff(m, -c);
  return s;
}

Series operator*(const Series &a, const Series &b) {
  require_compatible(a, b);
  Series s(a.vars(), a.cutoff());
  for (const auto &[ma, ca] : a.terms()) {
    if (ma.degree() > a.cutoff())
      break;
    for (const auto &[mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > a.cutoff())
        break;
      s.add_coeff(ma.plus(mb), ca * cb);
    }
  }
  return s;
}

Series operator*(const Rat &c, const Series &a) {
  Series s(a.vars(), a.cutoff());
  if (c == 0)
    return s;
  for (const auto &[m, v] : a.terms())
    s.set_coeff(m, c * v);
  return s;
}

Series pow(const Series &a, long e) {
  if (e < 0)
    fail(Err::Parse, "negative power of a non-unit series");
  Series acc = Series::constant(a.vars(), a.cutoff(), Rat(1));
  Series base = a;
  long n = e;
  while (n > 0) {
    if (n & 1)
      acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Series unit_inverse(const Series &f) {
  Rat c = f.constant_term();
  if (c == 0)
    fail(Err::Parse, "division by a non-unit series (zero constant term)");
  // f = c(1 + h) with ord h >= 1; 1/f = (1/c) * sum (-h)^m.
  Series h = (Rat(1) / c) * f;
  h.set_coeff(MultiIndex::zero(f.vars()), Rat(0));
  Series acc = Series::constant(f.vars(), f.cutoff(), Rat(1));
  Series term = Series::constant(f.vars(), f.cutoff(), Rat(1));
  for (int m = 1; m <= f.cutoff(); ++m) {
    term = term * h;
    if (term.is_zero())
      break;
    if (m % 2 == 1)
      acc = acc - term;
    else
      acc = acc + term;
  }
  return (Rat(1) / c) * acc;
}

Series substitute(const Series &f, const std::vector<Series> &images) {
  if (static_cast<int>(images.size()) != f.vars())
    fail(Err::DimMismatch, "substitution image count differs from variables");
  for (const Series &g : images) {
    if (g.vars() != images[0].vars() || g.cutoff() != f.cutoff())
      fail(Err::DimMismatch, "substitution images live in different spaces");
    if (g.constant_term() != 0)
      fail(Err::DimMismatch,
           "substitution image has nonzero constant term");
  }
  int out_vars = images[0].vars();
  int cutoff = f.cutoff();
  Series result(out_vars, cutoff);
  // Cache image powers; exponents above the cutoff cannot contribute since
  // every image has order >= 1.
  std::vector<std::vector<Series>> powers(images.size());
  auto image_power = [&](size_t i, int e) -> const Series & {
    auto &cache = powers[i];
    if (cache.empty())
      cache.push_back(Series::constant(out_vars, cutoff, Rat(1)));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[i]);
    return cache[static_cast<size_t>(e)];
  };
  for (const auto &[m, c] : f.terms()) {
    Series term = Series::constant(out_vars, cutoff, c);
    for (size_t i = 0; i < images.size(); ++i) {
      int e = m.exp[i];
      if (e == 0)
        continue;
      term = term * image_power(i, e);
      if (term.is_zero())
        break;
    }
    result = result + term;
  }
  return result;
}

} // namespace jetlab
