#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "skewbrace/groups.hpp"

namespace sb::groups {

Perm Perm::identity(int degree) {
  std::vector<Idx> v(static_cast<size_t>(degree));
  std::iota(v.begin(), v.end(), Idx{0});
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[static_cast<size_t>(i)] != i) return false;
  return true;
}

int Perm::order() const {
  // lcm of cycle lengths
  int n = degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      j = img[static_cast<size_t>(j)];
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

int Perm::fixed_point_count() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i)
    if (img[static_cast<size_t>(i)] == i) ++c;
  return c;
}

Perm Perm::inverse() const {
  std::vector<Idx> v(img.size());
  for (size_t i = 0; i < img.size(); ++i) v[img[i]] = static_cast<Idx>(i);
  return Perm(std::move(v));
}

Perm compose(const Perm& f, const Perm& g) {
  std::vector<Idx> v(f.img.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = f.img[g.img[i]];
  return Perm(std::move(v));
}

bool is_bijection(std::span<const Idx> images) {
  std::vector<char> seen(images.size(), 0);
  for (Idx x : images) {
    if (x >= images.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::string cycle_string(const Perm& p, int index_base) {
  int n = p.degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)] || p(i) == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      if (!first) out << ' ';
      out << (j + index_base);
      first = false;
      j = p(j);
    }
    out << ')';
  }
  if (!any) return "id";
  return out.str();
}

Perm perm_from_cycles(const std::string& text, int degree, int index_base) {
  Perm p = Perm::identity(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) != 0)) ++i;
  };
  skip_ws();
  if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
    std::string word;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) word += text[i++];
    skip_ws();
    if ((word == "id" || word == "identity") && i == text.size()) return p;
    raise(Errc::parse_error, "ParseError: bad permutation '" + text + "'");
  }
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') raise(Errc::parse_error, "ParseError: expected '(' in '" + text + "'");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size() || (std::isdigit(static_cast<unsigned char>(text[i])) == 0))
        raise(Errc::parse_error, "ParseError: bad cycle in '" + text + "'");
      int v = 0;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) != 0))
        v = v * 10 + (text[i++] - '0');
      v -= index_base;
      if (v < 0 || v >= degree)
        raise(Errc::parse_error, "ParseError: point out of range in '" + text + "'");
      cyc.push_back(v);
    }
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      p.img[static_cast<size_t>(from)] = static_cast<Idx>(to);
    }
    skip_ws();
  }
  if (!is_bijection(p.img)) raise(Errc::parse_error, "ParseError: cycles overlap in '" + text + "'");
  return p;
}

}  // namespace sb::groups
