#include "jetlab/multi_index.hpp"

#include <numeric>

namespace jetlab {

MultiIndex::MultiIndex(std::vector<int> exponents) : exp(std::move(exponents)) {
  deg = 0;
  for (int e : exp) {
    if (e < 0)
      fail(Err::Internal, "negative exponent in multi-index");
    deg += e;
  }
}

MultiIndex MultiIndex::zero(int vars) {
  MultiIndex m;
  m.exp.assign(static_cast<size_t>(vars), 0);
  m.deg = 0;
  return m;
}

MultiIndex MultiIndex::unit(int vars, int i) {
  MultiIndex m = zero(vars);
  m.exp[static_cast<size_t>(i)] = 1;
  m.deg = 1;
  return m;
}

MultiIndex MultiIndex::plus(const MultiIndex &other) const {
  if (vars() != other.vars())
    fail(Err::DimMismatch, "multi-index variable counts differ");
  MultiIndex m;
  m.exp.resize(exp.size());
  for (size_t i = 0; i < exp.size(); ++i)
    m.exp[i] = exp[i] + other.exp[i];
  m.deg = deg + other.deg;
  return m;
}

bool MultiIndex::dominates(const MultiIndex &other) const {
  for (size_t i = 0; i < exp.size(); ++i)
    if (exp[i] < other.exp[i])
      return false;
  return true;
}

bool operator==(const MultiIndex &a, const MultiIndex &b) {
  return a.deg == b.deg && a.exp == b.exp;
}

bool grlex_less(const MultiIndex &a, const MultiIndex &b) {
  if (a.deg != b.deg)
    return a.deg < b.deg;
  for (size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] != b.exp[i])
      return a.exp[i] > b.exp[i];
  return false;
}

static void collect_degree(int vars, int pos, int remaining, MultiIndex &cur,
                           std::vector<MultiIndex> &out) {
  if (pos == vars - 1) {
    cur.exp[static_cast<size_t>(pos)] = remaining;
    out.push_back(MultiIndex(cur.exp));
    return;
  }
  // Larger leading exponents first, matching grlex within a degree.
  for (int e = remaining; e >= 0; --e) {
    cur.exp[static_cast<size_t>(pos)] = e;
    collect_degree(vars, pos + 1, remaining - e, cur, out);
  }
}

std::vector<MultiIndex> monomials_up_to(int vars, int max_deg, int min_deg) {
  std::vector<MultiIndex> out;
  MultiIndex cur = MultiIndex::zero(vars);
  for (int d = min_deg; d <= max_deg; ++d)
    collect_degree(vars, 0, d, cur, out);
  return out;
}

long monomial_count(int vars, int max_deg) {
  // C(vars+max_deg, vars)
  long num = 1;
  for (int i = 1; i <= vars; ++i)
    num = num * (max_deg + i) / i;
  return num;
}

} // namespace jetlab
