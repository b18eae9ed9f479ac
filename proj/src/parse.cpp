#include "curvesing/parse.hpp"

#include <cctype>
#include <sstream>

namespace curvesing {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  QPoly parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    QPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  QPoly expr() {
    QPoly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QPoly term() {
    QPoly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  QPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  QPoly power() {
    bool was_number = false;
    QPoly base = primary(was_number);
    // "3f" means 3*f; no other juxtaposition is accepted.
    if (was_number && pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      base = base * power();
      return base;
    }
    if (peek('^')) {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", start);
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 5 || std::stoul(digits) > 0xFFFFu) throw ParseError("exponent too large", start);
      return pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  QPoly primary(bool& was_number) {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly inner = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      was_number = true;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den == pos_) throw ParseError("expected denominator", den);
      }
      Rational value;
      try {
        value = Rational::parse(text_.substr(start, pos_ - start));
      } catch (const DivisionByZero&) {
        throw ParseError("zero denominator", start);
      }
      return QPoly::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      std::size_t idx = ring_->index_of(name);
      if (idx == ring_->size()) throw ParseError("unknown variable '" + name + "'", start);
      return QPoly::variable(ring_, idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

QPoly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

std::vector<QPoly> parse_poly_list(std::string_view text, const RingPtr& ring) {
  std::vector<QPoly> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t semi = text.find(';', start);
    std::string_view piece = text.substr(start, semi == std::string_view::npos ? text.npos : semi - start);
    try {
      out.push_back(parse_poly(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), start + e.position());
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string name =
        trim_copy(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
      throw ParseError("bad variable name '" + name + "'", start);
    }
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c))) throw ParseError("bad variable name '" + name + "'", start);
    }
    names.push_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return names;
}

IdealText parse_ideal_text(std::string_view text) {
  IdealText out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_offset = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string body = trim_copy(line);
    if (body.empty()) continue;
    if (!out.ring) {
      const std::string prefix = "ring:";
      if (body.rfind(prefix, 0) != 0) throw ParseError("expected 'ring: QQ[...]' header", line_offset);
      std::string spec = trim_copy(std::string_view(body).substr(prefix.size()));
      if (spec.rfind("QQ[", 0) != 0 || spec.back() != ']') {
        throw ParseError("ring must be written QQ[v1,v2,...]", line_offset);
      }
      out.ring = make_ring(parse_variable_list(std::string_view(spec).substr(3, spec.size() - 4)));
      continue;
    }
    while (!body.empty() && (body.back() == ',' || body.back() == ';')) body.pop_back();
    try {
      QPoly p = parse_poly(body, out.ring);
      if (!p.is_zero()) out.generators.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_offset + e.position());
    }
  }
  if (!out.ring) throw ParseError("missing ring header", 0);
  return out;
}

std::string format_ideal_text(const RingPtr& ring, const std::vector<QPoly>& generators) {
  std::string s = "ring: QQ[";
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (i) s += ",";
    s += ring->name(i);
  }
  s += "]\n";
  for (const auto& g : generators) s += g.str() + "\n";
  return s;
}

}  // namespace curvesing
