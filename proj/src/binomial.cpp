#include "sgforge/binomial.hpp"

#include <algorithm>
#include <cctype>

namespace sgforge {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(a) + " variables, got " + std::to_string(b));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.empty()) throw Error(ErrorCode::ParseError, "missing number in '" + std::string(context) + "'");
  Int value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
    }
    value = checked_add(checked_mul(value, 10), c - '0');
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Monomial::Monomial(std::vector<Int> exponents) : exponents_(std::move(exponents)) {
  for (Int e : exponents_) {
    if (e < 0) throw Error(ErrorCode::PreconditionFailed, "negative exponent");
  }
}

Monomial Monomial::variable_power(std::size_t num_vars, std::size_t var, Int exponent) {
  Monomial m(num_vars);
  m.exponents_.at(var) = exponent;
  return m;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Int e) { return e == 0; });
}

Int Monomial::total_degree() const noexcept {
  Int s = 0;
  for (Int e : exponents_) s += e;
  return s;
}

std::optional<std::size_t> Monomial::pure_power_variable() const noexcept {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0 && other.exponents_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exponents_.size());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    r.exponents_[i] = checked_add(exponents_[i], other.exponents_[i]);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(exponents_.size());
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] = exponents_[i] - divisor.exponents_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exponents_.size());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    r.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
  }
  return r;
}

MonomialMatrix::MonomialMatrix(std::vector<Monomial> top_row, std::vector<Monomial> bottom_row)
    : top(std::move(top_row)), bottom(std::move(bottom_row)) {
  if (top.size() != bottom.size() || top.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "matrix rows must be non-empty and of equal length");
  }
  for (const auto* row : {&top, &bottom}) {
    for (const auto& entry : *row) {
      if (!entry.pure_power_variable()) {
        throw Error(ErrorCode::ShapeMismatch, "entry " + to_string(entry) + " is not a pure variable power");
      }
    }
  }
}

Int weighted_degree(const WeightedRing& ring, const Monomial& m) {
  require_same_size(ring.num_vars(), m.num_vars());
  Int d = 0;
  for (std::size_t i = 0; i < m.num_vars(); ++i) d = checked_add(d, checked_mul(m[i], ring.weights[i]));
  return d;
}

bool is_in_defining_ideal(const WeightedRing& ring, const Binomial& b) {
  if (b.is_monomial()) return false;
  return weighted_degree(ring, b.plus) == weighted_degree(ring, *b.minus);
}

Binomial canonical(Binomial b) {
  if (b.minus && *b.minus > b.plus) std::swap(b.plus, *b.minus);
  return b;
}

std::vector<Binomial> minors2(const MonomialMatrix& M) {
  std::vector<Binomial> out;
  const std::size_t n = M.columns();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(canonical(Binomial(M.top[i] * M.bottom[j], M.top[j] * M.bottom[i])));
    }
  }
  return out;
}

std::optional<Int> check_common_difference(const WeightedRing& ring, const MonomialMatrix& M) {
  const std::size_t n = M.columns();
  require_same_size(ring.num_vars(), n);
  std::optional<Int> diff;
  bool agree = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (M.top[i].pure_power_variable() != i || M.bottom[i].pure_power_variable() != (i + 1) % n) {
      throw Error(ErrorCode::ShapeMismatch, "column " + std::to_string(i + 1) + " is not of cyclic shape");
    }
    const Int d = weighted_degree(ring, M.bottom[i]) - weighted_degree(ring, M.top[i]);
    if (!diff) {
      diff = d;
    } else if (*diff != d) {
      agree = false;
    }
  }
  if (!agree) return std::nullopt;
  return diff;
}

Monomial relabel(const Monomial& m, std::span<const std::size_t> mapping) {
  require_same_size(m.num_vars(), mapping.size());
  std::vector<Int> e(m.num_vars(), 0);
  for (std::size_t k = 0; k < m.num_vars(); ++k) e[mapping[k]] = m[k];
  return Monomial(std::move(e));
}

Binomial relabel(const Binomial& b, std::span<const std::size_t> mapping) {
  Binomial r;
  r.plus = relabel(b.plus, mapping);
  if (b.minus) r.minus = relabel(*b.minus, mapping);
  return r;
}

MonomialMatrix relabel(const MonomialMatrix& M, std::span<const std::size_t> mapping) {
  MonomialMatrix r;
  for (const auto& m : M.top) r.top.push_back(relabel(m, mapping));
  for (const auto& m : M.bottom) r.bottom.push_back(relabel(m, mapping));
  return r;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'X' + std::to_string(i + 1);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b) {
  if (!b.minus) return to_string(b.plus);
  return to_string(b.plus) + " - " + to_string(*b.minus);
}

std::string to_string(const MonomialMatrix& M) {
  std::string out = "[";
  for (std::size_t i = 0; i < M.columns(); ++i) out += (i ? ", " : "") + to_string(M.top[i]);
  out += "; ";
  for (std::size_t i = 0; i < M.columns(); ++i) out += (i ? ", " : "") + to_string(M.bottom[i]);
  return out + "]";
}

Monomial parse_monomial(std::string_view text, std::size_t num_vars) {
  const std::string_view body = trim(text);
  Monomial m(num_vars);
  std::vector<Int> e(num_vars, 0);
  if (body == "1") return m;
  for (std::string_view factor : split(body, '*')) {
    factor = trim(factor);
    if (factor.size() < 2 || factor.front() != 'X') {
      throw Error(ErrorCode::ParseError, "bad factor '" + std::string(factor) + "'");
    }
    const auto caret = factor.find('^');
    const Int var = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
    const Int exponent = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), text);
    if (var < 1 || static_cast<std::size_t>(var) > num_vars) {
      throw Error(ErrorCode::DimensionMismatch, "variable X" + std::to_string(var) + " out of range");
    }
    auto& slot = e[static_cast<std::size_t>(var - 1)];
    slot = checked_add(slot, exponent);
  }
  return Monomial(std::move(e));
}

Binomial parse_binomial(std::string_view text, std::size_t num_vars) {
  const auto parts = split(text, '-');
  if (parts.size() == 1) return Binomial::monomial(parse_monomial(parts[0], num_vars));
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "expected 'u - v', got '" + std::string(text) + "'");
  return Binomial(parse_monomial(parts[0], num_vars), parse_monomial(parts[1], num_vars));
}

MonomialMatrix parse_matrix(std::string_view text, std::size_t num_vars) {
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw Error(ErrorCode::ParseError, "matrix must be enclosed in brackets");
  }
  body = body.substr(1, body.size() - 2);
  const auto rows = split(body, ';');
  if (rows.size() != 2) throw Error(ErrorCode::ParseError, "matrix must have two rows");
  std::vector<Monomial> top, bottom;
  for (auto entry : split(rows[0], ',')) top.push_back(parse_monomial(entry, num_vars));
  for (auto entry : split(rows[1], ',')) bottom.push_back(parse_monomial(entry, num_vars));
  return MonomialMatrix(std::move(top), std::move(bottom));
}

}  // namespace sgforge
