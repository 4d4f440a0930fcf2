#include "omega/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "omega/error.hpp"

namespace omega {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, const ParseOptions& options)
      : text_(text), sig_(sig), options_(options) {}

  Polynomial parse() {
    Polynomial result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t natural() {
    const std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  Polynomial expr() {
    Polynomial sum;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    while (true) {
      Polynomial t = term();
      sum = negate ? sum - t : sum + t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return sum;
  }

  // A term is a coefficient times an optional polynomial factor.
  struct Value {
    Coefficient coeff = Coefficient::one();
    std::optional<Polynomial> poly;

    void times(const Value& other) {
      coeff = coeff * other.coeff;
      if (other.poly) poly = poly ? *poly * *other.poly : *other.poly;
    }
  };

  Polynomial to_polynomial(const Value& v, std::size_t at) {
    if (v.poly) return v.coeff * *v.poly;
    if (v.coeff.is_zero()) return {};
    if (!options_.allow_unit) throw ParseError("a nonzero constant is not a word", at);
    return Polynomial(Word::unit(), v.coeff);
  }

  Polynomial term() {
    const std::size_t start = pos_;
    Value v = item();
    while (true) {
      if (accept('*')) {
        v.times(item());
      } else if (!v.poly && starts_item()) {
        // A leading coefficient may be juxtaposed: 2P(x), 3/2 lam*x.
        v.times(item());
      } else {
        break;
      }
    }
    return to_polynomial(v, start);
  }

  bool starts_item() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '_' || std::isalpha(static_cast<unsigned char>(c));
  }

  Value item() {
    Value base = atom();
    if (!accept('^')) return base;
    const std::uint32_t n = natural();
    if (n == 0) fail("zero exponent");
    Value out;
    for (std::uint32_t i = 0; i < n; ++i) out.times(base);
    return out;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    Value v;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (accept('/')) {
        const std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        num += "/" + den;
      }
      Rational r(num);
      r.canonicalize();
      v.coeff = Coefficient(r);
      return v;
    }
    if (c == '(') {
      ++pos_;
      v.poly = expr();
      expect(')');
      return v;
    }
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name.empty()) fail("unexpected '" + std::string(1, c) + "'");
    if (name == "lam") {
      v.coeff = options_.lambda_value ? Coefficient(*options_.lambda_value) : Coefficient::lambda();
      return v;
    }
    if (auto var = sig_.find_variable(name)) {
      v.poly = Polynomial(Word::variable(*var));
      return v;
    }
    if (auto op = sig_.find_operator(name)) {
      expect('(');
      std::vector<Polynomial> args;
      args.push_back(expr());
      while (accept(',')) args.push_back(expr());
      expect(')');
      const auto arity = sig_.op(*op).arity;
      if (args.size() != arity) {
        throw ParseError("operator '" + name + "' expects " + std::to_string(arity) + " argument(s), got " +
                             std::to_string(args.size()),
                         start);
      }
      for (const auto& a : args)
        for (const auto& [w, k] : a.terms())
          if (w.is_unit()) throw ParseError("operator argument cannot contain a constant term", start);
      v.poly = apply_operator(sig_, *op, args);
      return v;
    }
    throw ParseError("unknown identifier '" + name + "'", start);
  }

  std::string_view text_;
  const Signature& sig_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

void write_factor(std::ostream& out, const Factor& f, const Signature& sig);

void write_word(std::ostream& out, const Word& w, const Signature& sig) {
  if (w.is_unit()) {
    out << "1";
    return;
  }
  bool first = true;
  for (const auto& fp : w.factors()) {
    if (!first) out << "*";
    first = false;
    write_factor(out, fp.factor, sig);
    if (fp.exponent > 1) out << "^" << fp.exponent;
  }
}

void write_factor(std::ostream& out, const Factor& f, const Signature& sig) {
  if (f.is_variable()) {
    out << sig.variable_name(f.variable_id());
    return;
  }
  out << sig.op(f.op()).name << "(";
  for (std::size_t i = 0; i < f.args().size(); ++i) {
    if (i) out << ",";
    write_word(out, f.args()[i], sig);
  }
  out << ")";
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Signature& sig, const ParseOptions& options) {
  return Parser(text, sig, options).parse();
}

Word parse_word(std::string_view text, const Signature& sig) {
  Polynomial p = parse_polynomial(text, sig);
  if (p.size() != 1 || !p.terms()[0].second.is_one()) throw ParseError("expected a single word", 0);
  return p.terms()[0].first;
}

std::string format_word(const Word& w, const Signature& sig) {
  std::ostringstream out;
  write_word(out, w, sig);
  return out.str();
}

namespace {

std::string write_terms(const std::vector<const Polynomial::Term*>& terms, const Signature& sig) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto* t : terms) {
    const auto& parts = t->second.terms();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      const auto& [power, value] = *it;
      const bool negative = value < 0;
      if (first) out << (negative ? "-" : "");
      else out << (negative ? " - " : " + ");
      first = false;
      const Rational mag = abs(value);
      bool need_star = false;
      if (mag != 1 || (power == 0 && t->first.is_unit())) {
        out << mag.get_str();
        need_star = true;
      }
      if (power > 0) {
        out << (need_star ? "*" : "") << "lam";
        if (power > 1) out << "^" << power;
        need_star = true;
      }
      if (!t->first.is_unit()) {
        out << (need_star ? "*" : "");
        write_word(out, t->first, sig);
      }
    }
  }
  return out.str();
}

}  // namespace

std::string format_polynomial(const Polynomial& f, const Signature& sig, const MonomialOrder* order) {
  std::vector<const Polynomial::Term*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  if (order) {
    std::stable_sort(terms.begin(), terms.end(), [order](const Polynomial::Term* a, const Polynomial::Term* b) {
      return order->compare(a->first, b->first) > 0;
    });
  }
  return write_terms(terms, sig);
}

std::string format_terms(const std::vector<Polynomial::Term>& terms, const Signature& sig) {
  std::vector<const Polynomial::Term*> ptrs;
  for (const auto& t : terms) ptrs.push_back(&t);
  return write_terms(ptrs, sig);
}

std::string format_rounds(const std::vector<ReductionRound>& rounds, const Signature& sig, const MonomialOrder& order) {
  std::ostringstream out;
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    out << "round " << i + 1 << " (" << rounds[i].expansion.size() << " terms): "
        << format_terms(rounds[i].expansion, sig) << "\n";
    out << "  = " << format_polynomial(rounds[i].collected, sig, &order) << "\n";
  }
  return out.str();
}

std::string format_context(const Context& c, const Signature& sig) {
  std::string inner = "[]";
  if (!c.hole_residual().is_unit()) inner = "[]*" + format_word(c.hole_residual(), sig);
  const auto& path = c.path();
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    std::ostringstream out;
    out << sig.op(it->factor.op()).name << "(";
    const auto& args = it->factor.args();
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out << ",";
      if (i == it->arg_index) out << inner;
      else write_word(out, args[i], sig);
    }
    out << ")";
    if (!it->residual.is_unit()) out << "*" << format_word(it->residual, sig);
    inner = out.str();
  }
  return inner;
}

}  // namespace omega
