#include "matroidal/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace matroidal {

namespace {

std::string format_term(const Int& coeff, const std::string& mono, bool first) {
  Int a = coeff >= 0 ? coeff : Int(-coeff);
  std::string sign = first ? (coeff < 0 ? "-" : "") : (coeff < 0 ? " - " : " + ");
  std::string body;
  if (mono.empty()) {
    body = a.get_str();
  } else if (a == 1) {
    body = mono;
  } else {
    body = a.get_str() + mono;
  }
  return sign + body;
}

std::string power_string(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

UnivarPoly::UnivarPoly(std::vector<Int> ascending_coeffs)
    : c_(std::move(ascending_coeffs)) {
  trim();
}

void UnivarPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivarPoly UnivarPoly::constant(Int c) {
  UnivarPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

UnivarPoly UnivarPoly::variable() { return UnivarPoly({Int(0), Int(1)}); }

Int UnivarPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
  return c_[i];
}

UnivarPoly UnivarPoly::operator+(const UnivarPoly& o) const {
  std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator-(const UnivarPoly& o) const {
  std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator*(const UnivarPoly& o) const {
  if (is_zero() || o.is_zero()) return UnivarPoly();
  std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator-() const {
  std::vector<Int> out(c_);
  for (auto& v : out) v = -v;
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator*(const Int& c) const {
  if (c == 0) return UnivarPoly();
  std::vector<Int> out(c_);
  for (auto& v : out) v *= c;
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::shifted(const Int& a) const {
  // Horner: p(q+a) accumulated from the leading coefficient down.
  UnivarPoly res;
  for (int i = degree(); i >= 0; --i) {
    // res = res * (q + a) + c_i
    std::vector<Int> up(res.c_.size() + 1, Int(0));
    for (size_t k = 0; k < res.c_.size(); ++k) {
      up[k + 1] += res.c_[k];
      up[k] += res.c_[k] * a;
    }
    res = UnivarPoly(std::move(up)) + UnivarPoly::constant(c_[i]);
  }
  return res;
}

UnivarPoly UnivarPoly::reversed(int top_degree) const {
  if (top_degree < degree())
    throw std::invalid_argument("reversed: top_degree below actual degree");
  std::vector<Int> out(static_cast<size_t>(top_degree) + 1, Int(0));
  for (int i = 0; i <= top_degree; ++i) out[i] = coeff(top_degree - i);
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::pow(unsigned e) const {
  UnivarPoly res = UnivarPoly::constant(Int(1));
  UnivarPoly base = *this;
  while (e > 0) {
    if (e & 1u) res = res * base;
    base = base * base;
    e >>= 1u;
  }
  return res;
}

UnivarPoly UnivarPoly::composed(const UnivarPoly& u) const {
  UnivarPoly res;
  for (int i = degree(); i >= 0; --i)
    res = res * u + UnivarPoly::constant(c_[i]);
  return res;
}

std::pair<UnivarPoly, Int> UnivarPoly::divided_by_linear(const Int& root) const {
  // Ruffini synthetic division by (q - root).
  if (is_zero()) return {UnivarPoly(), Int(0)};
  std::vector<Int> quot(c_.size() > 1 ? c_.size() - 1 : 0, Int(0));
  Int carry(0);
  for (int i = degree(); i >= 0; --i) {
    Int cur = c_[i] + carry;
    if (i == 0) return {UnivarPoly(std::move(quot)), cur};
    quot[i - 1] = cur;
    carry = cur * root;
  }
  return {UnivarPoly(std::move(quot)), Int(0)};
}

Int UnivarPoly::eval(const Int& x) const {
  Int res(0);
  for (int i = degree(); i >= 0; --i) res = res * x + c_[i];
  return res;
}

Rat UnivarPoly::eval(const Rat& x) const {
  Rat res(0);
  for (int i = degree(); i >= 0; --i) res = res * x + Rat(c_[i]);
  return res;
}

std::vector<std::string> UnivarPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.get_str());
  return out;
}

std::string UnivarPoly::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    out += format_term(c_[i], power_string(var, i), first);
    first = false;
  }
  return out;
}

BivarPoly::BivarPoly(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
  trim();
}

void BivarPoly::trim() {
  for (auto& row : rows_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

BivarPoly BivarPoly::constant(Int c) {
  BivarPoly p;
  if (c != 0) p.rows_.push_back({std::move(c)});
  return p;
}

BivarPoly BivarPoly::x() { return monomial(1, 0, Int(1)); }
BivarPoly BivarPoly::y() { return monomial(0, 1, Int(1)); }

BivarPoly BivarPoly::monomial(int i, int j, Int c) {
  BivarPoly p;
  if (c == 0) return p;
  p.rows_.assign(static_cast<size_t>(i) + 1, {});
  p.rows_[i].assign(static_cast<size_t>(j) + 1, Int(0));
  p.rows_[i][j] = std::move(c);
  return p;
}

int BivarPoly::y_degree() const {
  int d = -1;
  for (const auto& row : rows_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Int BivarPoly::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(rows_.size())) return Int(0);
  if (j < 0 || j >= static_cast<int>(rows_[i].size())) return Int(0);
  return rows_[i][j];
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  std::vector<std::vector<Int>> out(std::max(rows_.size(), o.rows_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    size_t w = 0;
    if (i < rows_.size()) w = std::max(w, rows_[i].size());
    if (i < o.rows_.size()) w = std::max(w, o.rows_[i].size());
    out[i].assign(w, Int(0));
    if (i < rows_.size())
      for (size_t j = 0; j < rows_[i].size(); ++j) out[i][j] += rows_[i][j];
    if (i < o.rows_.size())
      for (size_t j = 0; j < o.rows_[i].size(); ++j) out[i][j] += o.rows_[i][j];
  }
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  return *this + o * Int(-1);
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  if (is_zero() || o.is_zero()) return BivarPoly();
  std::vector<std::vector<Int>> out(
      rows_.size() + o.rows_.size() - 1,
      std::vector<Int>(static_cast<size_t>(y_degree() + o.y_degree()) + 1, Int(0)));
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] == 0) continue;
      for (size_t k = 0; k < o.rows_.size(); ++k)
        for (size_t l = 0; l < o.rows_[k].size(); ++l)
          out[i + k][j + l] += rows_[i][j] * o.rows_[k][l];
    }
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::operator*(const Int& c) const {
  if (c == 0) return BivarPoly();
  std::vector<std::vector<Int>> out(rows_);
  for (auto& row : out)
    for (auto& v : row) v *= c;
  return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::swapped_xy() const {
  std::vector<std::vector<Int>> out(static_cast<size_t>(y_degree()) + 1);
  for (auto& row : out) row.assign(rows_.size(), Int(0));
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j) out[j][i] = rows_[i][j];
  return BivarPoly(std::move(out));
}

UnivarPoly BivarPoly::substituted(const UnivarPoly& u, const UnivarPoly& v) const {
  // Row Horner in x; each row is a polynomial in y composed with v first.
  UnivarPoly res;
  for (int i = x_degree(); i >= 0; --i) {
    UnivarPoly row_poly;
    for (int j = static_cast<int>(rows_[i].size()) - 1; j >= 0; --j)
      row_poly = row_poly * v + UnivarPoly::constant(rows_[i][j]);
    res = res * u + row_poly;
  }
  return res;
}

Int BivarPoly::eval(const Int& x, const Int& y) const {
  Int res(0);
  for (int i = x_degree(); i >= 0; --i) {
    Int row(0);
    for (int j = static_cast<int>(rows_[i].size()) - 1; j >= 0; --j)
      row = row * y + rows_[i][j];
    res = res * x + row;
  }
  return res;
}

std::vector<std::vector<std::string>> BivarPoly::coeff_strings() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<std::string> r;
    r.reserve(row.size());
    for (const auto& v : row) r.push_back(v.get_str());
    out.push_back(std::move(r));
  }
  return out;
}

std::string BivarPoly::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = x_degree(); i >= 0; --i) {
    for (int j = static_cast<int>(rows_[i].size()) - 1; j >= 0; --j) {
      if (rows_[i][j] == 0) continue;
      std::string mono = power_string("x", i);
      mono += power_string("y", j);
      out += format_term(rows_[i][j], mono, first);
      first = false;
    }
  }
  return out;
}

}  // namespace matroidal
