#include "tempered/rational.hpp"

#include <sstream>

namespace tempered {

Rat parseRat(const std::string& text) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    const long long p = std::stoll(s.substr(0, slash));
    const long long q = std::stoll(s.substr(slash + 1));
    if (q == 0) throw DomainError("zero denominator in rational literal");
    return Rat(p, q);
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal: " + text);
  } catch (const std::out_of_range&) {
    throw DomainError("rational literal out of range: " + text);
  }
}

std::string ratStr(const Rat& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

Weight parseWeight(const std::string& text, int rank) {
  Weight w;
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (!s.empty()) {
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) w.push_back(parseRat(item));
  }
  if (w.empty()) w.assign(static_cast<std::size_t>(rank), Rat(0));
  if (static_cast<int>(w.size()) != rank)
    throw DomainError("weight has wrong length: expected " + std::to_string(rank) +
                      " coordinates, got " + std::to_string(w.size()));
  return w;
}

std::string weightStr(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += ratStr(w[i]);
  }
  return out;
}

std::string rootStr(const Root& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r[i]);
  }
  return out;
}

Weight toWeight(const Root& r) {
  Weight w(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) w[i] = Rat(r[i]);
  return w;
}

Root negated(const Root& r) {
  Root out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
  return out;
}

Weight negated(const Weight& w) {
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = -w[i];
  return out;
}

bool isZero(const Weight& w) {
  for (const auto& c : w)
    if (c != Rat(0)) return false;
  return true;
}

Weight addWeights(const Weight& a, const Weight& b) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Weight scaleWeight(const Rat& c, const Weight& w) {
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = c * w[i];
  return out;
}

Root applyMat(const IntMat& m, const Root& v) {
  const std::size_t n = m.size();
  Root out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

Weight applyMat(const IntMat& m, const Weight& v) {
  const std::size_t n = m.size();
  Weight out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += Rat(m[i][j]) * v[j];
  return out;
}

IntMat matMul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size();
  IntMat out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const int aik = a[i][k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

IntMat identityMat(int n) {
  IntMat out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

IntMat matInverse(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != Rat(0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("singular matrix has no inverse");
    std::swap(a[col], a[pivot]);
    const Rat d = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rat(0)) continue;
      const Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  IntMat out(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& v = a[i][n + j];
      if (v.denominator() != 1) throw DomainError("matrix inverse is not integral");
      out[i][j] = static_cast<int>(v.numerator());
    }
  return out;
}

int matTrace(const IntMat& m) {
  int t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

double toDouble(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

} // namespace tempered
