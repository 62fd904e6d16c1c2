#include "qbundle/matrix.hpp"

#include <cctype>

namespace qb {

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, std::vector<QRat>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = QRat(1);
  return m;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  ScalarMatrix out(n, std::vector<QRat>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw MismatchError("matrix shapes do not match");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  ScalarMatrix a = m;
  ScalarMatrix inv = identity_matrix(n);
  for (const auto& row : a)
    if (row.size() != n) throw MismatchError("inverse of a non-square matrix");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw MismatchError("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const QRat f = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const QRat g = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= g * a[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

ScalarMatrix kronecker(const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  const std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  ScalarMatrix out(ar * br, std::vector<QRat>(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

PolyMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, std::vector<NCPoly>(cols));
}

PolyMatrix to_poly_matrix(const ScalarMatrix& m) {
  PolyMatrix out;
  for (const auto& row : m) {
    std::vector<NCPoly> r;
    for (const auto& c : row) r.emplace_back(c);
    out.push_back(std::move(r));
  }
  return out;
}

PolyMatrix multiply(const Presentation& p, const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  PolyMatrix out = zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw MismatchError("matrix shapes do not match");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[l][j].is_zero()) continue;
        out[i][j] += p.multiply(a[i][l], b[l][j]);
      }
    }
  }
  return out;
}

PolyMatrix subtract(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size() != b.size()) throw MismatchError("matrix shapes do not match");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw MismatchError("matrix shapes do not match");
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  }
  return out;
}

std::vector<std::string> differing_entries(const Presentation& p, const PolyMatrix& a, const PolyMatrix& b) {
  std::vector<std::string> out;
  if (a.size() != b.size()) return {"shape " + std::to_string(a.size()) + " vs " + std::to_string(b.size())};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return {"row " + std::to_string(i + 1) + " length differs"};
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j])
        out.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + p.format(a[i][j]) +
                      " vs " + p.format(b[i][j]));
  }
  return out;
}

NCPoly trace(const PolyMatrix& m) {
  NCPoly t;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i].at(i);
  return t;
}

PolyMatrix map_entries(const PolyMatrix& m, const std::function<NCPoly(const NCPoly&)>& f) {
  PolyMatrix out = m;
  for (auto& row : out)
    for (auto& e : row) e = f(e);
  return out;
}

std::string format_matrix(const Presentation& p, const PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ", ";
      out += "\"" + p.format(m[i][j]) + "\"";
    }
    out += "]";
  }
  return out + "]";
}

std::string format_scalar_matrix(const ScalarMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ", ";
      out += "\"" + m[i][j].to_string() + "\"";
    }
    out += "]";
  }
  return out + "]";
}

PolyMatrix parse_matrix(const Presentation& p, std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  PolyMatrix out;
  expect('[');
  skip();
  if (i < text.size() && text[i] == ']') return out;
  for (;;) {
    expect('[');
    std::vector<NCPoly> row;
    for (;;) {
      expect('"');
      const std::size_t start = i;
      while (i < text.size() && text[i] != '"') ++i;
      if (i >= text.size()) throw ParseError("unterminated string", start);
      try {
        row.push_back(p.parse(text.substr(start, i - start)));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), start + e.position());
      }
      ++i;
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(']');
    if (!out.empty() && row.size() != out.front().size()) throw ParseError("ragged matrix row", i);
    out.push_back(std::move(row));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  return out;
}

}  // namespace qb
