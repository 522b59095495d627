#include "rearr/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rearr {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  BigInt num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt den = parse_integer(den_text, text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, int digits) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float value = Float(boost::multiprecision::numerator(r)) /
                Float(boost::multiprecision::denominator(r));
  std::ostringstream out;
  out << std::setprecision(digits) << value;
  return out.str();
}

BigInt floor(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) {
    --q;
  }
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace rearr
