#include "rtfcheck/exactnum/laurent.hpp"

#include <charconv>

#include "rtfcheck/errors.hpp"

namespace rtfcheck::exactnum {

QsLaurent::QsLaurent(const Terms& terms) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

QsLaurent QsLaurent::constant(const Rational& c) { return monomial(0, c); }

QsLaurent QsLaurent::monomial(Exponent m, const Rational& c) {
  QsLaurent out;
  out.add_term(m, c);
  return out;
}

void QsLaurent::add_term(Exponent m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational QsLaurent::coefficient(Exponent m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string QsLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += '+';
    out += std::to_string(m);
    out += ':';
    out += c.to_string();
  }
  return out;
}

QsLaurent QsLaurent::parse(std::string_view text) {
  if (text == "0") return {};
  QsLaurent out;
  // Terms are separated by '+', but an exponent or coefficient can itself
  // start with '-'; a '+' only separates when it follows a digit.
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= text.size(); ++pos) {
    const bool at_end = pos == text.size();
    if (!at_end && !(text[pos] == '+' && pos > start && text[pos - 1] >= '0' && text[pos - 1] <= '9')) continue;
    const std::string_view term = text.substr(start, pos - start);
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("bad Laurent term '" + std::string(term) + "'");
    Exponent m = 0;
    const auto exp_text = term.substr(0, colon);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), m);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
      throw InvalidArgument("bad Laurent exponent '" + std::string(exp_text) + "'");
    }
    if (out.terms_.contains(m)) throw InvalidArgument("repeated Laurent exponent " + std::to_string(m));
    const Rational c = Rational::parse(term.substr(colon + 1));
    if (c.is_zero()) throw InvalidArgument("zero coefficient stored in Laurent text");
    out.add_term(m, c);
    start = pos + 1;
  }
  return out;
}

bool QsLaurent::is_symmetric() const {
  for (const auto& [m, c] : terms_) {
    if (coefficient(-m) != c) return false;
  }
  return true;
}

QsLaurent& QsLaurent::operator+=(const QsLaurent& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

QsLaurent& QsLaurent::operator-=(const QsLaurent& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

QsLaurent& QsLaurent::operator*=(const QsLaurent& rhs) {
  QsLaurent product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) product.add_term(ma + mb, ca * cb);
  }
  *this = std::move(product);
  return *this;
}

Rational normalized_derivative(const QsLaurent& poly, unsigned r) {
  Rational sum;
  for (const auto& [m, c] : poly.terms()) {
    sum += Rational(ipow(BigInt(static_cast<long>(m)), r)) * c;
  }
  return sum;
}

}  // namespace rtfcheck::exactnum
