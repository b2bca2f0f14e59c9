#include "goodsemi/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "goodsemi/errors.hpp"

namespace goodsemi {

namespace {

int add_precision(int a, int b) { return std::min(kExact, a + b); }

}  // namespace

SeriesVector::SeriesVector(std::size_t s, int precision) : terms_(s), precision_(s, precision) {}

SeriesVector SeriesVector::monomial(std::size_t s, std::size_t branch, int exponent, const Rational& c,
                                    int precision) {
  SeriesVector v(s, precision);
  v.set(branch, exponent, c);
  return v;
}

SeriesVector SeriesVector::one(std::size_t s) {
  SeriesVector v(s);
  for (std::size_t i = 0; i < s; ++i) v.set(i, 0, 1);
  return v;
}

bool SeriesVector::exact() const {
  return std::all_of(precision_.begin(), precision_.end(), [](int p) { return p >= kExact; });
}

Rational SeriesVector::coefficient(std::size_t branch, int exponent) const {
  const auto it = terms_.at(branch).find(exponent);
  return it == terms_[branch].end() ? Rational(0) : it->second;
}

void SeriesVector::set(std::size_t branch, int exponent, const Rational& c) {
  if (exponent >= precision_.at(branch)) return;
  if (c == 0)
    terms_[branch].erase(exponent);
  else
    terms_[branch][exponent] = c;
}

std::optional<int> SeriesVector::order(std::size_t branch) const {
  if (terms_.at(branch).empty()) return std::nullopt;
  return terms_[branch].begin()->first;
}

int SeriesVector::order_or_precision(std::size_t branch) const {
  const auto o = order(branch);
  return o ? *o : precision_[branch];
}

bool SeriesVector::is_regular() const {
  return std::none_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.empty(); });
}

Point SeriesVector::value() const {
  if (!is_regular()) throw PreconditionError("value of a non-regular element: " + format(*this));
  Point p(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) p[i] = *order(i);
  return p;
}

bool SeriesVector::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.empty(); });
}

SeriesVector SeriesVector::truncated(int precision) const {
  return truncated(std::vector<int>(dim(), precision));
}

SeriesVector SeriesVector::truncated(const std::vector<int>& precision) const {
  if (precision.size() != dim()) throw DimensionMismatch("truncation vector has the wrong length");
  SeriesVector out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    out.precision_[i] = std::min(precision_[i], precision[i]);
    for (const auto& [e, c] : terms_[i])
      if (e < out.precision_[i]) out.terms_[i].emplace(e, c);
  }
  return out;
}

SeriesVector SeriesVector::operator+(const SeriesVector& o) const {
  if (dim() != o.dim()) throw DimensionMismatch("series vectors of different dimension");
  SeriesVector out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    out.precision_[i] = std::min(precision_[i], o.precision_[i]);
    for (const auto& [e, c] : terms_[i]) out.set(i, e, c);
    for (const auto& [e, c] : o.terms_[i]) out.set(i, e, out.coefficient(i, e) + c);
  }
  return out;
}

SeriesVector SeriesVector::operator-() const { return *this * Rational(-1); }

SeriesVector SeriesVector::operator-(const SeriesVector& o) const { return *this + (-o); }

SeriesVector SeriesVector::operator*(const Rational& c) const {
  SeriesVector out(dim(), 0);
  out.precision_ = precision_;
  if (c == 0) return out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (const auto& [e, x] : terms_[i]) out.terms_[i].emplace(e, x * c);
  return out;
}

SeriesVector SeriesVector::operator*(const SeriesVector& o) const {
  if (dim() != o.dim()) throw DimensionMismatch("series vectors of different dimension");
  SeriesVector out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    out.precision_[i] = std::min(add_precision(precision_[i], o.order_or_precision(i)),
                                 add_precision(o.precision_[i], order_or_precision(i)));
    std::map<int, Rational> acc;
    for (const auto& [ea, ca] : terms_[i])
      for (const auto& [eb, cb] : o.terms_[i])
        if (ea + eb < out.precision_[i]) acc[ea + eb] += ca * cb;
    for (auto& [e, c] : acc)
      if (c != 0) out.terms_[i].emplace(e, std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string format_branch(const std::map<int, Rational>& terms, int precision) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Rational a = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  if (precision < kExact) {
    os << (first ? "" : " + ") << "O(t^" << precision << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

class Parser {
 public:
  Parser(std::string_view text, int line, int column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  std::vector<SeriesVector> list() {
    std::vector<SeriesVector> out;
    skip();
    if (done()) return out;
    out.push_back(vector());
    skip();
    while (!done()) {
      expect(';');
      skip();
      const std::size_t start = pos_;
      out.push_back(vector());
      if (out.back().dim() != out.front().dim()) {
        pos_ = start;
        fail("vectors have different numbers of branches");
      }
      skip();
    }
    return out;
  }

  SeriesVector single() {
    SeriesVector v = vector();
    skip();
    if (!done()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, offset_ + static_cast<int>(pos_) + 1);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() {
    skip();
    return done() ? '\0' : text_[pos_];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  SeriesVector vector() {
    expect('(');
    std::vector<std::pair<std::map<int, Rational>, int>> branches;
    branches.push_back(branch());
    while (peek() == ',') {
      ++pos_;
      branches.push_back(branch());
    }
    expect(')');
    SeriesVector v(branches.size());
    for (std::size_t i = 0; i < branches.size(); ++i) {
      SeriesVector b(branches.size());
      for (const auto& [e, c] : branches[i].first) b.set(i, e, c);
      std::vector<int> prec(branches.size(), kExact);
      prec[i] = branches[i].second;
      v = v + b.truncated(prec);
    }
    return v;
  }

  std::string digits() {
    skip();
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
    return d;
  }

  int integer() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::string d = digits();
    if (d.empty() || d.size() > 8) fail("expected an exponent");
    const int v = std::stoi(d);
    return negative ? -v : v;
  }

  // One polynomial, possibly followed by O(t^p).
  std::pair<std::map<int, Rational>, int> branch() {
    std::map<int, Rational> terms;
    int precision = kExact;
    bool first = true;
    for (;;) {
      int sign = 1;
      const char c = peek();
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      if (peek() == 'O') {
        if (sign < 0) fail("O-term cannot be negated");
        ++pos_;
        expect('(');
        expect('t');
        expect('^');
        precision = integer();
        expect(')');
        break;
      }
      Rational coeff = 1;
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string num = digits();
        if (peek() == '/') {
          ++pos_;
          const std::string den = digits();
          if (den.empty()) fail("expected a denominator");
          num += "/" + den;
        }
        coeff = Rational(num);
        if (coeff.get_den() == 0) fail("zero denominator");
        coeff.canonicalize();
        have_coeff = true;
        if (peek() == '*') {
          ++pos_;
          if (peek() != 't') fail("expected 't' after '*'");
        }
      }
      int exponent = 0;
      if (peek() == 't') {
        ++pos_;
        exponent = 1;
        if (peek() == '^') {
          ++pos_;
          if (peek() == '(') {
            ++pos_;
            exponent = integer();
            expect(')');
          } else {
            exponent = integer();
          }
        }
      } else if (!have_coeff) {
        fail("expected a term");
      }
      terms[exponent] += coeff * sign;
    }
    for (auto it = terms.begin(); it != terms.end();) {
      if (it->second == 0 || it->first >= precision)
        it = terms.erase(it);
      else
        ++it;
    }
    return {terms, precision};
  }

  std::string_view text_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const SeriesVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += format_branch(v.terms(i), v.precision(i));
  }
  return out + ")";
}

std::string format(const std::vector<SeriesVector>& vs) {
  std::string out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) out += " ; ";
    out += format(vs[k]);
  }
  return out;
}

std::vector<SeriesVector> parse_series_list(std::string_view text, int line, int column_offset) {
  return Parser(text, line, column_offset).list();
}

SeriesVector parse_series(std::string_view text, int line, int column_offset) {
  return Parser(text, line, column_offset).single();
}

}  // namespace goodsemi
