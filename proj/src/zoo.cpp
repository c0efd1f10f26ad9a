#include "hh/zoo.hpp"

#include <charconv>

namespace hh {

NoPrimitiveRoot::NoPrimitiveRoot(std::uint32_t n_, const FieldSpec& f)
    : AlgebraError("no primitive " + std::to_string(n_) + "-th root of unity in " + f.name()), n(n_), field(f) {}

namespace {

std::uint32_t parse_count(const std::string& s, const std::string& whole) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0 || v > 64) throw UnknownAlgebra("bad size in algebra name: " + whole);
  return v;
}

template <class K>
Algebra<K> monomial(const FieldSpec& f, std::uint32_t n, bool cyclic, const std::string& name) {
  std::vector<std::string> labels;
  std::string var = cyclic ? "g" : "x";
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
  std::vector<StructureConstant<K>> mul;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (cyclic) mul.push_back({i, j, (i + j) % n, K::from_int(f, 1)});
      else if (i + j < n) mul.push_back({i, j, i + j, K::from_int(f, 1)});
    }
  std::vector<K> unit(n, K::from_int(f, 0));
  unit[0] = K::from_int(f, 1);
  return Algebra<K>::make(f, labels, mul, unit, name);
}

template <class K>
Algebra<K> matrices(const FieldSpec& f, std::uint32_t n, const std::string& name) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<StructureConstant<K>> mul;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t l = 0; l < n; ++l) mul.push_back({i * n + j, j * n + l, i * n + l, K::from_int(f, 1)});
  std::vector<K> unit(n * n, K::from_int(f, 0));
  for (std::uint32_t i = 0; i < n; ++i) unit[i * n + i] = K::from_int(f, 1);
  return Algebra<K>::make(f, labels, mul, unit, name);
}

std::string monomial_label(const char* var, std::uint32_t e) {
  if (e == 0) return "";
  return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}

}  // namespace

template <class K>
Algebra<K> taft_algebra(std::uint32_t n, const K& w, const FieldSpec& f) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      std::string l = monomial_label("x", i) + monomial_label("g", j);
      labels.push_back(l.empty() ? "1" : l);
    }
  // (x^a g^b)(x^c g^e) = w^(-bc) x^(a+c) g^(b+e), since g x = w^-1 x g.
  const K winv = w.inverse();
  std::vector<StructureConstant<K>> mul;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; a + c < n; ++c)
        for (std::uint32_t e = 0; e < n; ++e)
          mul.push_back({a * n + b, c * n + e, (a + c) * n + (b + e) % n, power(winv, std::uint64_t(b) * c, f)});
  std::vector<K> unit(n * n, K::from_int(f, 0));
  unit[0] = K::from_int(f, 1);
  return Algebra<K>::make(f, labels, mul, unit, "taft:" + std::to_string(n));
}

template <class K>
bool parse_taft(const std::string& name, const FieldSpec& field, std::uint32_t& n, K& w) {
  if (name.rfind("taft:", 0) != 0) return false;
  std::string rest = name.substr(5);
  auto colon = rest.find(':');
  n = parse_count(rest.substr(0, colon), name);
  if (colon == std::string::npos) {
    if (!find_primitive_root(field, n, w)) throw NoPrimitiveRoot(n, field);
    return true;
  }
  w = K::parse(field, rest.substr(colon + 1));
  K acc = K::from_int(field, 1);
  for (std::uint32_t r = 1; r <= n; ++r) {
    acc *= w;
    if (acc.is_one() != (r == n)) throw NoPrimitiveRoot(n, field);
  }
  return true;
}

template <class K>
Algebra<K> zoo(const std::string& name, const FieldSpec& f) {
  if (name == "dual-numbers") return monomial<K>(f, 2, false, name);
  auto colon = name.find(':');
  if (colon == std::string::npos) throw UnknownAlgebra("unknown algebra: " + name);
  const std::string family = name.substr(0, colon);
  if (family == "taft") {
    std::uint32_t n;
    K w;
    parse_taft(name, f, n, w);
    return taft_algebra(n, w, f);
  }
  const std::uint32_t n = parse_count(name.substr(colon + 1), name);
  if (family == "trunc") return monomial<K>(f, n, false, name);
  if (family == "cyclic") return monomial<K>(f, n, true, name);
  if (family == "mat") return matrices<K>(f, n, name);
  throw UnknownAlgebra("unknown algebra: " + name);
}

#define HH_INSTANTIATE(K)                                                                   \
  template Algebra<K> zoo<K>(const std::string&, const FieldSpec&);                        \
  template Algebra<K> taft_algebra<K>(std::uint32_t, const K&, const FieldSpec&);          \
  template bool parse_taft<K>(const std::string&, const FieldSpec&, std::uint32_t&, K&);
HH_INSTANTIATE(Fp)
HH_INSTANTIATE(Rational)

}  // namespace hh
