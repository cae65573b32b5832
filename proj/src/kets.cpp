// Copyright 2026 The Entanglemetry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entanglemetry/kets.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "entanglemetry/catalog.hpp"
#include "entanglemetry/error.hpp"

namespace entanglemetry {

namespace {

enum class Tok {
  kKet,
  kNumber,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kCaret,
  kLParen,
  kRParen,
  kLBrack,
  kRBrack,
  kI,
  kW,
  kSqrt,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::size_t pos = 0;
  std::string text;  // ket bits or number literal
  double value = 0.0;
};

constexpr std::string_view kRightAngle = "\xE2\x9F\xA9";  // U+27E9

[[noreturn]] void syntax_error(std::size_t pos, const std::string& message) {
  throw Error(ErrorCode::kSyntaxError, message, pos);
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Tok kind) {
      out.push_back({kind, start, {}, 0.0});
      ++i;
    };
    switch (ch) {
      case '+': single(Tok::kPlus); continue;
      case '-': single(Tok::kMinus); continue;
      case '*': single(Tok::kStar); continue;
      case '/': single(Tok::kSlash); continue;
      case '^': single(Tok::kCaret); continue;
      case '(': single(Tok::kLParen); continue;
      case ')': single(Tok::kRParen); continue;
      case '[': single(Tok::kLBrack); continue;
      case ']': single(Tok::kRBrack); continue;
      case 'i': single(Tok::kI); continue;
      case 'w': single(Tok::kW); continue;
      default: break;
    }
    if (ch == '|') {
      ++i;
      std::string bits;
      while (i < s.size() && (s[i] == '0' || s[i] == '1')) bits.push_back(s[i++]);
      if (bits.empty()) syntax_error(i, "expected 0 or 1 after '|'");
      if (i < s.size() && s[i] == '>') {
        ++i;
      } else if (s.substr(i, kRightAngle.size()) == kRightAngle) {
        i += kRightAngle.size();
      } else {
        syntax_error(i, "expected '>' to close ket");
      }
      out.push_back({Tok::kKet, start, std::move(bits), 0.0});
      continue;
    }
    if (s.substr(i, 4) == "sqrt") {
      out.push_back({Tok::kSqrt, start, {}, 0.0});
      i += 4;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '.') {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          j = k;
        }
      }
      Token t{Tok::kNumber, start, std::string(s.substr(i, j - i)), 0.0};
      const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (res.ec != std::errc() || res.ptr != t.text.data() + t.text.size()) {
        syntax_error(start, "malformed number '" + t.text + "'");
      }
      out.push_back(std::move(t));
      i = j;
      continue;
    }
    syntax_error(start, std::string("unexpected character '") + ch + "'");
  }
  out.push_back({Tok::kEnd, s.size(), {}, 0.0});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  KetExpr parse_all() {
    KetExpr e = expr();
    if (peek().kind != Tok::kEnd) syntax_error(peek().pos, "unexpected trailing input");
    return e;
  }

  Complex scalar_all() {
    const Complex v = scalar_expr();
    if (peek().kind != Tok::kEnd) syntax_error(peek().pos, "unexpected trailing input");
    return v;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(idx_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[idx_ < toks_.size() - 1 ? idx_++ : idx_]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) syntax_error(peek().pos, std::string("expected ") + what);
    take();
  }

  // True when the '(' at the cursor opens a group containing no ket.
  bool scalar_group_ahead() const {
    int depth = 0;
    for (std::size_t k = idx_; k < toks_.size(); ++k) {
      switch (toks_[k].kind) {
        case Tok::kLParen:
        case Tok::kLBrack: ++depth; break;
        case Tok::kRParen:
        case Tok::kRBrack:
          if (--depth == 0) return true;
          break;
        case Tok::kKet: return false;
        case Tok::kEnd: return true;
        default: break;
      }
    }
    return true;
  }

  bool starts_factor() const {
    switch (peek().kind) {
      case Tok::kNumber:
      case Tok::kI:
      case Tok::kW:
      case Tok::kSqrt: return true;
      case Tok::kLParen: return scalar_group_ahead();
      default: return false;
    }
  }

  KetExpr expr() {
    KetExpr sum;
    sum.kind = KetExpr::Kind::kSum;
    sum.position = peek().pos;
    double sign = 1.0;
    if (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      sign = take().kind == Tok::kMinus ? -1.0 : 1.0;
    }
    for (;;) {
      KetExpr t = term();
      if (sign < 0.0) t.coefficient = -t.coefficient;
      sum.children.push_back(std::move(t));
      if (peek().kind != Tok::kPlus && peek().kind != Tok::kMinus) break;
      sign = take().kind == Tok::kMinus ? -1.0 : 1.0;
    }
    return sum;
  }

  KetExpr term() {
    KetExpr scaled;
    scaled.kind = KetExpr::Kind::kScaled;
    scaled.position = peek().pos;
    scaled.coefficient = coeff();
    scaled.children.push_back(atom());
    return scaled;
  }

  KetExpr atom() {
    const Token& t = peek();
    if (t.kind == Tok::kKet) {
      KetExpr k;
      k.kind = KetExpr::Kind::kKet;
      k.bits = t.text;
      k.position = t.pos;
      take();
      return k;
    }
    if (t.kind == Tok::kLParen || t.kind == Tok::kLBrack) {
      const bool paren = t.kind == Tok::kLParen;
      KetExpr g;
      g.kind = KetExpr::Kind::kGroup;
      g.position = t.pos;
      take();
      g.children.push_back(expr());
      expect(paren ? Tok::kRParen : Tok::kRBrack, paren ? "')'" : "']'");
      return g;
    }
    syntax_error(t.pos, "expected a ket or a bracketed expression");
  }

  Complex coeff() {
    Complex value{1.0, 0.0};
    bool first = true;
    for (;;) {
      if (!first && peek().kind == Tok::kStar) {
        take();
        if (!starts_factor()) {
          // "2*|01>" multiplies the atom that follows.
          const Tok next = peek().kind;
          if (next == Tok::kKet || next == Tok::kLParen || next == Tok::kLBrack) break;
          syntax_error(peek().pos, "expected a factor or ket after '*'");
        }
      } else if (!starts_factor()) {
        break;
      }
      value *= factor();
      first = false;
    }
    return value;
  }

  double integer_arg() {
    const Token& t = peek();
    if (t.kind != Tok::kNumber) syntax_error(t.pos, "expected an integer");
    take();
    return t.value;
  }

  double sqrt_call() {
    expect(Tok::kSqrt, "'sqrt'");
    expect(Tok::kLParen, "'(' after sqrt");
    const double v = integer_arg();
    expect(Tok::kRParen, "')' after sqrt argument");
    return std::sqrt(v);
  }

  Complex factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNumber: {
        double v = t.value;
        take();
        if (peek().kind == Tok::kSlash) {
          const std::size_t slash = take().pos;
          double denom = 0.0;
          if (peek().kind == Tok::kSqrt) {
            denom = sqrt_call();
          } else {
            denom = integer_arg();
          }
          if (denom == 0.0) syntax_error(slash, "division by zero");
          v /= denom;
        }
        return {v, 0.0};
      }
      case Tok::kI: take(); return {0.0, 1.0};
      case Tok::kW: {
        take();
        int power = 1;
        if (peek().kind == Tok::kCaret) {
          take();
          const Token& p = peek();
          const double e = integer_arg();
          if (e != std::floor(e)) syntax_error(p.pos, "exponent of w must be an integer");
          power = static_cast<int>(e);
        }
        return std::pow(omega(), power);
      }
      case Tok::kSqrt: return {sqrt_call(), 0.0};
      case Tok::kLParen: {
        take();
        const Complex v = scalar_expr();
        expect(Tok::kRParen, "')'");
        return v;
      }
      default: syntax_error(t.pos, "expected a coefficient factor");
    }
  }

  Complex scalar_expr() {
    Complex total{0.0, 0.0};
    double sign = 1.0;
    if (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      sign = take().kind == Tok::kMinus ? -1.0 : 1.0;
    }
    for (;;) {
      if (!starts_factor()) syntax_error(peek().pos, "expected a coefficient");
      total += sign * coeff();
      if (peek().kind != Tok::kPlus && peek().kind != Tok::kMinus) break;
      sign = take().kind == Tok::kMinus ? -1.0 : 1.0;
    }
    return total;
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

struct Accumulator {
  std::map<std::size_t, Complex> amps;
  int width = -1;

  void visit(const KetExpr& e, Complex scale) {
    switch (e.kind) {
      case KetExpr::Kind::kSum:
      case KetExpr::Kind::kGroup:
        for (const auto& c : e.children) visit(c, scale);
        return;
      case KetExpr::Kind::kScaled:
        for (const auto& c : e.children) visit(c, scale * e.coefficient);
        return;
      case KetExpr::Kind::kKet: {
        const int w = static_cast<int>(e.bits.size());
        if (width < 0) {
          width = w;
        } else if (w != width) {
          throw Error(ErrorCode::kMixedKetLength,
                      "ket |" + e.bits + "> has " + std::to_string(w) + " qubits, expected " +
                          std::to_string(width),
                      e.position);
        }
        if (w > kMaxQubits) {
          throw Error(ErrorCode::kUnsupportedSize, "ket wider than 8 qubits", e.position);
        }
        std::size_t index = 0;
        for (char b : e.bits) index = (index << 1) | (b == '1' ? 1u : 0u);
        amps[index] += scale;
        return;
      }
    }
  }
};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

KetExpr parse_ket_expression(std::string_view text) {
  return Parser(tokenize(text)).parse_all();
}

StateVector evaluate(const KetExpr& expr, NormPolicy policy) {
  Accumulator acc;
  acc.visit(expr, {1.0, 0.0});
  if (acc.width <= 0) throw Error(ErrorCode::kSyntaxError, "expression has no kets", 0);
  std::vector<Complex> amps(std::size_t{1} << acc.width);
  for (const auto& [index, a] : acc.amps) amps[index] = a;
  return StateVector::from_amplitudes(acc.width, std::move(amps), policy);
}

StateVector parse_ket(std::string_view text, NormPolicy policy) {
  return evaluate(parse_ket_expression(text), policy);
}

Complex parse_scalar(std::string_view text) { return Parser(tokenize(text)).scalar_all(); }

std::string print_ket(const StateVector& state, double threshold) {
  std::string out;
  const int n = state.num_qubits();
  for (std::size_t b = 0; b < state.dimension(); ++b) {
    const Complex a = state[b];
    if (!(std::abs(a) > threshold)) continue;
    std::string ket = "|";
    for (int q = n - 1; q >= 0; --q) ket.push_back(((b >> q) & 1u) ? '1' : '0');
    ket += ">";

    const bool first = out.empty();
    const double re = a.real();
    const double im = a.imag();
    if (im == 0.0 || re == 0.0) {
      const double v = im == 0.0 ? re : im;
      const std::string unit = im == 0.0 ? "" : "i";
      if (first) {
        out += (v < 0.0 ? "-" : "") + format_number(std::abs(v)) + unit + ket;
      } else {
        out += (v < 0.0 ? " - " : " + ") + format_number(std::abs(v)) + unit + ket;
      }
    } else {
      if (!first) out += " + ";
      out += "(" + format_number(re) + (im < 0.0 ? "-" : "+") + format_number(std::abs(im)) +
             "i)" + ket;
    }
  }
  return out;
}

}  // namespace entanglemetry
