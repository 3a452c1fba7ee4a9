#include "veritab/num.hpp"

#include <cctype>
#include <stdexcept>

namespace veritab {

std::optional<Num> Num::parse_decimal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits, frac;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac += text[i++];
  }
  if (i != text.size() || digits.empty()) return std::nullopt;
  mpz_class num(digits + frac);
  mpz_class den(1);
  for (size_t k = 0; k < frac.size(); ++k) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return Num(q);
}

namespace {

std::string group_digits(const std::string& s) {
  std::string out;
  int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out += ',';
    out += s[i];
  }
  return out;
}

}  // namespace

std::string Num::render(bool grouped) const {
  if (is_integer()) return render_fixed(0, grouped);
  std::string two = render_fixed(2, grouped);
  while (!two.empty() && two.back() == '0') two.pop_back();
  if (!two.empty() && two.back() == '.') two.pop_back();
  return two;
}

std::string Num::render_fixed(int dp, bool grouped) const {
  mpq_class q = v_;
  bool neg = q < 0;
  if (neg) q = -q;
  mpz_class scale(1);
  for (int k = 0; k < dp; ++k) scale *= 10;
  // Round half away from zero at the requested precision.
  mpz_class scaled_num = q.get_num() * scale * 2 + q.get_den();
  mpz_class scaled = scaled_num / (q.get_den() * 2);
  std::string s = scaled.get_str();
  while (static_cast<int>(s.size()) <= dp) s = "0" + s;
  std::string ip = s.substr(0, s.size() - dp);
  std::string fp = dp > 0 ? s.substr(s.size() - dp) : "";
  std::string out = grouped ? group_digits(ip) : ip;
  if (dp > 0) out += "." + fp;
  if (neg && !(scaled == 0)) out = "-" + out;
  return out;
}

}  // namespace veritab
