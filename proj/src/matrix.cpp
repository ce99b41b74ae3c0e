#include "autocore/matrix.hpp"

#include <sstream>

namespace autocore {

std::string rat_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::optional<Rat> parse_rat(std::string_view s) {
  if (s.empty()) return std::nullopt;
  size_t slash = s.find('/');
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(s)) return std::nullopt;
      return Rat(boost::multiprecision::mpz_int(std::string(s)));
    }
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    boost::multiprecision::mpz_int q{std::string(den)};
    if (q == 0) return std::nullopt;
    return Rat(boost::multiprecision::mpz_int(std::string(num)), q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  RatMatrix m(int(rows.size()), int(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] < 0 || rows[i] >= rows_ || cols[j] < 0 || cols[j] >= cols_)
        throw Error("submatrix index out of range");
      m.at(int(i), int(j)) = at(rows[i], cols[j]);
    }
  return m;
}

RatMatrix RatMatrix::without_col(int col) const {
  RatMatrix m(rows_, cols_ - 1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0, k = 0; j < cols_; ++j) {
      if (j == col) continue;
      m.at(i, k++) = at(i, j);
    }
  return m;
}

std::vector<Rat> RatMatrix::mul(const std::vector<Rat>& v) const {
  if (int(v.size()) != cols_) throw Error("dimension mismatch in mul");
  std::vector<Rat> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<Rat> RatMatrix::tmul(const std::vector<Rat>& y) const {
  if (int(y.size()) != rows_) throw Error("dimension mismatch in tmul");
  std::vector<Rat> out(cols_);
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) out[j] += y[i] * at(i, j);
  return out;
}

Rat RatMatrix::determinant() const {
  if (!square()) throw Error("determinant of non-square matrix");
  int n = rows_;
  RatMatrix m = *this;
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat f = m.at(r, col) / m.at(col, col);
      for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return det;
}

int RatMatrix::rank() const {
  RatMatrix m = *this;
  int r = 0;
  for (int col = 0; col < cols_ && r < rows_; ++col) {
    int pivot = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = col; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    for (int i = r + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) / m.at(r, col);
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Rat> RatMatrix::char_poly() const {
  if (!square()) throw Error("char_poly of non-square matrix");
  int n = rows_;
  // Faddeev-LeVerrier: exact with rational arithmetic.
  std::vector<Rat> coeff(n + 1);
  coeff[0] = 1;
  RatMatrix b = *this;
  for (int k = 1; k <= n; ++k) {
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += b.at(i, i);
    coeff[k] = -tr / k;
    if (k == n) break;
    RatMatrix next(n, n);
    for (int i = 0; i < n; ++i) b.at(i, i) += coeff[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat s = 0;
        for (int l = 0; l < n; ++l) s += at(i, l) * b.at(l, j);
        next.at(i, j) = s;
      }
    b = next;
  }
  return coeff;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << rat_str(at(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace autocore
