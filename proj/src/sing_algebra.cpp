#include "legadj/sing_algebra.hpp"

#include <cctype>

namespace legadj {

namespace {

// Integers in type and germ expressions are capped well below int range.
constexpr long kMaxLiteral = 1'000'000;

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  void set_pos(std::size_t pos) { pos_ = pos; }

  // Returns the number of whitespace characters consumed.
  std::size_t skip_spaces() {
    std::size_t start = pos_;
    while (!at_end() && is_space(text_[pos_])) ++pos_;
    return pos_ - start;
  }

  // Int := [1-9][0-9]*. A literal "0" is accepted here so callers can report
  // the more specific range error.
  long read_int(const char* what) {
    std::size_t start = pos_;
    if (!is_digit(peek())) {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    if (peek() == '0') {
      advance();
      if (is_digit(peek())) throw ParseError("leading zero in integer", start);
      return 0;
    }
    long value = 0;
    while (is_digit(peek())) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxLiteral) throw ParseError("integer too large", start);
      advance();
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultisingularityType::MultisingularityType(Exponents exponents)
    : exponents_(std::move(exponents)) {
  for (const auto& [index, exponent] : exponents_) {
    if (index < 1) throw std::invalid_argument("A-symbol index must be >= 1");
    if (exponent < 1) throw std::invalid_argument("exponent must be >= 1");
  }
}

MultisingularityType MultisingularityType::single(int index, int exponent) {
  return MultisingularityType(Exponents{{index, exponent}});
}

int MultisingularityType::exponent(int index) const noexcept {
  auto it = exponents_.find(index);
  return it == exponents_.end() ? 0 : it->second;
}

int MultisingularityType::codim() const noexcept {
  int total = 0;
  for (const auto& [index, exponent] : exponents_) total += (index + 1) * exponent;
  return total;
}

int MultisingularityType::factor_count() const noexcept {
  int total = 0;
  for (const auto& entry : exponents_) total += entry.second;
  return total;
}

std::vector<int> MultisingularityType::factor_list() const {
  std::vector<int> list;
  for (const auto& [index, exponent] : exponents_) list.insert(list.end(), exponent, index);
  return list;
}

MultisingularityType MultisingularityType::operator*(
    const MultisingularityType& other) const {
  Exponents merged = exponents_;
  for (const auto& [index, exponent] : other.exponents_) merged[index] += exponent;
  return MultisingularityType(std::move(merged));
}

DGerm::DGerm(int mu, int delta) : mu_(mu), delta_(delta) {
  if (mu < 4) throw std::invalid_argument("D-germ index must be >= 4");
  if (delta != 1 && delta != -1) throw std::invalid_argument("delta must be +1 or -1");
  if (mu % 2 != 0) delta_ = 1;
}

MultisingularityType Profile::to_type() const {
  MultisingularityType::Exponents exponents;
  for (const auto& [index, exponent] : even_part) exponents[index] = exponent;
  for (const auto& [index, exponent] : odd_part) exponents[index] = exponent;
  return MultisingularityType(std::move(exponents));
}

MultisingularityType parse_type(std::string_view text) {
  Cursor cur(text);
  cur.skip_spaces();
  if (cur.at_end()) throw ParseError("empty type expression", cur.pos());

  if (cur.peek() == '1') {
    std::size_t start = cur.pos();
    cur.advance();
    cur.skip_spaces();
    if (!cur.at_end()) {
      throw ParseError("the trivial type \"1\" cannot be combined with factors",
                       start);
    }
    return {};
  }

  MultisingularityType::Exponents exponents;
  while (true) {
    std::size_t factor_start = cur.pos();
    char symbol = cur.peek();
    if (symbol == 'D' || symbol == 'E') {
      throw ParseError(std::string("unsupported symbol '") + symbol +
                           "': only A-type factors are allowed",
                       factor_start);
    }
    if (symbol != 'A') throw ParseError("expected factor 'A<index>'", factor_start);
    cur.advance();

    std::size_t index_pos = cur.pos();
    long index = cur.read_int("index after 'A'");
    if (index < 1) throw ParseError("A-symbol index must be >= 1", index_pos);

    long exponent = 1;
    std::size_t after_index = cur.pos();
    cur.skip_spaces();
    if (cur.peek() == '^') {
      cur.advance();
      cur.skip_spaces();
      std::size_t exp_pos = cur.pos();
      exponent = cur.read_int("exponent after '^'");
      if (exponent < 1) throw ParseError("exponent must be >= 1", exp_pos);
    } else {
      cur.set_pos(after_index);
    }

    long merged = static_cast<long>(exponents[static_cast<int>(index)]) + exponent;
    if (merged > kMaxLiteral) throw ParseError("exponent too large", factor_start);
    exponents[static_cast<int>(index)] = static_cast<int>(merged);

    // Separator: one or more spaces and/or '*'.
    bool separated = false;
    bool saw_star = false;
    while (!cur.at_end() && (is_space(cur.peek()) || cur.peek() == '*')) {
      saw_star = saw_star || cur.peek() == '*';
      separated = true;
      cur.advance();
    }
    if (cur.at_end()) {
      if (saw_star) throw ParseError("expected factor after '*'", cur.pos());
      break;
    }
    if (!separated) throw ParseError("expected separator between factors", cur.pos());
  }
  return MultisingularityType(std::move(exponents));
}

std::string format_type(const MultisingularityType& type) {
  if (type.is_trivial()) return "1";
  std::string out;
  for (const auto& [index, exponent] : type.exponents()) {
    if (!out.empty()) out += ' ';
    out += 'A';
    out += std::to_string(index);
    if (exponent > 1) {
      out += '^';
      out += std::to_string(exponent);
    }
  }
  return out;
}

DGerm parse_germ(std::string_view text) {
  Cursor cur(text);
  cur.skip_spaces();
  if (cur.peek() != 'D') throw ParseError("expected germ 'D<index>[+|-]'", cur.pos());
  cur.advance();
  cur.skip_spaces();
  std::size_t index_pos = cur.pos();
  long mu = cur.read_int("index after 'D'");
  if (mu < 4) throw ParseError("D-germ index must be >= 4", index_pos);
  cur.skip_spaces();

  int delta = 0;
  if (cur.peek() == '+') {
    delta = 1;
    cur.advance();
  } else if (cur.peek() == '-') {
    delta = -1;
    cur.advance();
  }
  cur.skip_spaces();
  if (!cur.at_end()) throw ParseError("unexpected trailing input", cur.pos());

  if (delta == 0) {
    if (mu % 2 == 0) throw ParseError("sign required for even index", cur.pos());
    delta = 1;
  }
  return DGerm(static_cast<int>(mu), delta);
}

std::string format_germ(const DGerm& germ) {
  std::string out = "D" + std::to_string(germ.mu());
  if (!germ.is_odd()) out += germ.delta() > 0 ? '+' : '-';
  return out;
}

Profile profile_of(const MultisingularityType& type) {
  Profile profile;
  for (const auto& [index, exponent] : type.exponents()) {
    if (index % 2 == 0) {
      profile.even_part.emplace_back(index, exponent);
      profile.m1 += exponent;
    } else {
      profile.odd_part.emplace_back(index, exponent);
      profile.m2 += exponent;
    }
    profile.codim += (index + 1) * exponent;
  }
  profile.a1 = type.exponent(1);
  profile.a3 = type.exponent(3);
  return profile;
}

std::optional<MultisingularityType> divide(const MultisingularityType& type,
                                           const MultisingularityType& factor) {
  MultisingularityType::Exponents quotient = type.exponents();
  for (const auto& [index, exponent] : factor.exponents()) {
    auto it = quotient.find(index);
    if (it == quotient.end() || it->second < exponent) return std::nullopt;
    it->second -= exponent;
    if (it->second == 0) quotient.erase(it);
  }
  return MultisingularityType(std::move(quotient));
}

}  // namespace legadj
