#include "hopfcyc/presentation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hopfcyc {

// ---- words and combinations ----

int Presentation::generator(const std::string& name) const {
  for (int i = 0; i < num_generators(); ++i)
    if (generators[i] == name) return i;
  return -1;
}

int Presentation::weight(const Word& w) const {
  int s = 0;
  for (int g : w) s += weights[g];
  return s;
}

bool Presentation::less(const Word& a, const Word& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += generators[w[i]];
  }
  return s;
}

namespace {

std::string coefficient_prefix(const Scalar& c, bool first) {
  std::string s = c.to_string();
  bool negative = !s.empty() && s[0] == '-';
  std::string body = negative ? s.substr(1) : s;
  std::string sign = negative ? (first ? "-" : " - ") : (first ? "" : " + ");
  if (body == "1") return sign;
  bool simple = body.find_first_of("+-/ ") == std::string::npos;
  return sign + (simple ? body : "(" + body + ")") + "*";
}

std::string term_string(const Scalar& c, const std::string& body, bool first) {
  std::string pre = coefficient_prefix(c, first);
  if (body == "1" && (pre.empty() || pre.back() == '*')) {
    if (!pre.empty()) return pre.substr(0, pre.size() - 1);
    return "1";
  }
  if (body == "1") return pre + "1";
  return pre + body;
}

template <class Key>
std::vector<std::pair<Key, Scalar>> sorted_terms(const std::map<Key, Scalar>& c,
                                                 const std::function<bool(const Key&, const Key&)>& less) {
  std::vector<std::pair<Key, Scalar>> v(c.begin(), c.end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return less(b.first, a.first); });
  return v;
}

void accumulate(WordCombination& c, const Word& w, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = c.emplace(w, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) c.erase(it);
  }
}

template <class Key>
void accumulate_any(std::map<Key, Scalar>& c, const Key& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = c.emplace(k, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) c.erase(it);
  }
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

std::string Presentation::to_string(const WordCombination& c) const {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, s] : sorted_terms<Word>(c, [this](const Word& a, const Word& b) { return less(a, b); })) {
    out += term_string(s, word_string(w), first);
    first = false;
  }
  return out;
}

std::string Presentation::to_string(const TensorCombination& c) const {
  if (c.empty()) return "0";
  using Key = std::pair<Word, Word>;
  std::string out;
  bool first = true;
  auto key_less = [this](const Key& a, const Key& b) {
    if (a.first != b.first) return less(a.first, b.first);
    return less(a.second, b.second);
  };
  for (const auto& [k, s] : sorted_terms<Key>(c, key_less)) {
    std::string pre = coefficient_prefix(s, first);
    out += pre + word_string(k.first) + "|" + word_string(k.second);
    first = false;
  }
  return out;
}

std::string Presentation::to_text() const {
  std::ostringstream o;
  o << "[field]\n" << (field.kind == FieldKind::RationalFunction ? "Q(q)" : field.name()) << "\n";
  o << "[generators]\n";
  for (int g = 0; g < num_generators(); ++g)
    o << (g ? " " : "") << generators[g] << (weights[g] != 1 ? ":" + std::to_string(weights[g]) : "");
  o << "\n[relations]\n";
  for (const auto& r : rules) o << word_string(r.lhs) << " -> " << to_string(r.rhs) << "\n";
  o << "[coproduct]\n";
  for (int g = 0; g < num_generators(); ++g) o << generators[g] << " -> " << to_string(coproduct[g]) << "\n";
  o << "[counit]\n";
  for (int g = 0; g < num_generators(); ++g) o << generators[g] << " -> " << counit[g].to_string() << "\n";
  o << "[antipode]\n";
  for (int g = 0; g < num_generators(); ++g) o << generators[g] << " -> " << to_string(antipode[g]) << "\n";
  if (!antipode_inv.empty()) {
    o << "[antipode_inverse]\n";
    for (int g = 0; g < num_generators(); ++g) o << generators[g] << " -> " << to_string(antipode_inv[g]) << "\n";
  }
  return o.str();
}

WordCombination single(const Word& w, const Scalar& c) {
  WordCombination out;
  if (!c.is_zero()) out.emplace(w, c);
  return out;
}

// ---- parsing ----

namespace {

struct Piece {
  std::string text;
  int col;  // 1-based column of text[0]
};

std::string trim(const std::string& s, int& offset) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  offset += static_cast<int>(a);
  return s.substr(a, b - a);
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprReader {
 public:
  ExprReader(const Presentation& p, int line) : p_(p), line_(line) {}

  // Splits at top-level '+' / '-' that are binary (not after '^', '*', '/', '(' or '|').
  std::vector<std::pair<bool, Piece>> terms(const Piece& in) const {
    std::vector<std::pair<bool, Piece>> out;
    int depth = 0;
    bool negative = false;
    std::size_t start = 0;
    char prev = 0;
    auto flush = [&](std::size_t end) {
      int col = in.col + static_cast<int>(start);
      std::string t = trim(in.text.substr(start, end - start), col);
      if (t.empty()) throw ParseError("empty term", line_, col);
      out.push_back({negative, {t, col}});
    };
    bool any = false;
    for (std::size_t i = 0; i < in.text.size(); ++i) {
      char c = in.text[i];
      if (c == '(') ++depth;
      if (c == ')') {
        if (--depth < 0) throw ParseError("unbalanced ')'", line_, in.col + static_cast<int>(i));
      }
      bool unary_context = prev == 0 || prev == '^' || prev == '*' || prev == '/' || prev == '(' || prev == '|';
      if (depth == 0 && (c == '+' || c == '-') && !unary_context) {
        flush(i);
        negative = c == '-';
        start = i + 1;
        prev = '(';
        continue;
      }
      if (depth == 0 && (c == '+' || c == '-') && prev == 0) {
        negative = c == '-';
        start = i + 1;
        prev = '(';
        continue;
      }
      if (!std::isspace(static_cast<unsigned char>(c))) {
        prev = c;
        any = true;
      }
    }
    if (depth != 0) throw ParseError("unbalanced '('", line_, in.col);
    if (!any) throw ParseError("empty expression", line_, in.col);
    flush(in.text.size());
    return out;
  }

  // One leg: '*'-separated factors of generators and scalars.
  std::pair<Scalar, Word> leg(const Piece& in) const {
    Scalar coef = Scalar::one(p_.field);
    Word w;
    int depth = 0;
    std::size_t start = 0;
    auto factor = [&](std::size_t end) {
      int col = in.col + static_cast<int>(start);
      std::string f = trim(in.text.substr(start, end - start), col);
      if (f.empty()) throw ParseError("missing factor", line_, col);
      if (is_ident_start(f[0])) {
        std::size_t k = 0;
        while (k < f.size() && is_ident(f[k])) ++k;
        std::string name = f.substr(0, k);
        int g = p_.generator(name);
        if (g >= 0) {
          int power = 1;
          if (k < f.size()) {
            if (f[k] != '^' || k + 1 == f.size() ||
                f.find_first_not_of("0123456789", k + 1) != std::string::npos)
              throw ParseError("bad generator power '" + f + "'", line_, col);
            power = std::stoi(f.substr(k + 1));
          }
          for (int i = 0; i < power; ++i) w.push_back(g);
          return;
        }
        if (!(name == "q" && p_.field.kind == FieldKind::RationalFunction))
          throw ParseError("unknown symbol '" + name + "'", line_, col);
      }
      try {
        coef *= parse_scalar(f, p_.field);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError("bad scalar '" + f + "': " + e.what(), line_, col);
      }
    };
    for (std::size_t i = 0; i < in.text.size(); ++i) {
      char c = in.text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == '*' && depth == 0) {
        factor(i);
        start = i + 1;
      }
    }
    factor(in.text.size());
    // a bare "1" is the empty word
    return {coef, w};
  }

  WordCombination combination(const Piece& in) const {
    WordCombination out;
    for (const auto& [neg, t] : terms(in)) {
      if (t.text.find('|') != std::string::npos) throw ParseError("unexpected tensor '|'", line_, t.col);
      auto [c, w] = leg(t);
      accumulate(out, w, neg ? -c : c);
    }
    return out;
  }

  TensorCombination tensor(const Piece& in) const {
    TensorCombination out;
    for (const auto& [neg, t] : terms(in)) {
      std::size_t bar = t.text.find('|');
      if (bar == std::string::npos || t.text.find('|', bar + 1) != std::string::npos)
        throw ParseError("expected exactly one '|' in a coproduct term", line_, t.col);
      auto [c1, w1] = leg({t.text.substr(0, bar), t.col});
      auto [c2, w2] = leg({t.text.substr(bar + 1), t.col + static_cast<int>(bar) + 1});
      Scalar c = c1 * c2;
      accumulate_any(out, std::make_pair(w1, w2), neg ? -c : c);
    }
    return out;
  }

 private:
  const Presentation& p_;
  int line_;
};

struct Line {
  std::string text;
  int number;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::map<std::string, std::vector<Line>> sections;
  std::map<std::string, int> section_line;
  const std::set<std::string> known{"field", "generators", "relations", "coproduct",
                                    "counit", "antipode", "antipode_inverse"};
  std::string current;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw.substr(0, raw.find('#'));
    int col = 1;
    line = trim(line, col);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", number, col);
      current = line.substr(1, line.size() - 2);
      if (!known.count(current)) throw ParseError("unknown section [" + current + "]", number, col);
      if (section_line.count(current)) throw ParseError("duplicate section [" + current + "]", number, col);
      section_line[current] = number;
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError("text outside any section", number, col);
    sections[current].push_back({std::string(col - 1, ' ') + line, number});
  }

  Presentation p;
  if (sections.count("field")) {
    const auto& lines = sections["field"];
    if (lines.size() != 1) throw ParseError("[field] takes one line", section_line["field"], 1);
    int col = 1;
    std::string f = trim(lines[0].text, col);
    try {
      p.field = Field::parse(f);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lines[0].number, col);
    }
  }
  for (const auto& l : sections["generators"]) {
    std::size_t i = 0;
    const std::string& s = l.text;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
        ++i;
        continue;
      }
      int col = static_cast<int>(i) + 1;
      if (!is_ident_start(s[i])) throw ParseError("bad generator name", l.number, col);
      std::size_t k = i;
      while (k < s.size() && is_ident(s[k])) ++k;
      std::string name = s.substr(i, k - i);
      int weight = 1;
      if (k < s.size() && s[k] == ':') {
        std::size_t e = k + 1;
        while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
        if (e == k + 1) throw ParseError("bad weight for '" + name + "'", l.number, static_cast<int>(k) + 2);
        weight = std::stoi(s.substr(k + 1, e - k - 1));
        if (weight < 1) throw ParseError("weights must be positive", l.number, static_cast<int>(k) + 2);
        k = e;
      }
      if (name == "q" && p.field.kind == FieldKind::RationalFunction)
        throw ParseError("'q' is the field parameter", l.number, col);
      if (p.generator(name) >= 0) throw ParseError("duplicate generator '" + name + "'", l.number, col);
      p.generators.push_back(name);
      p.weights.push_back(weight);
      i = k;
    }
  }
  const int n = p.num_generators();

  auto split_arrow = [](const Line& l, Piece& left, Piece& right) {
    std::size_t a = l.text.find("->");
    if (a == std::string::npos) {
      int col = 1;
      trim(l.text, col);
      throw ParseError("expected '->'", l.number, col);
    }
    int lc = 1, rc = static_cast<int>(a) + 3;
    left = {trim(l.text.substr(0, a), lc), lc};
    right = {trim(l.text.substr(a + 2), rc), rc};
    if (left.text.empty()) throw ParseError("missing left side", l.number, lc);
    if (right.text.empty()) throw ParseError("missing right side", l.number, rc);
  };
  auto generator_lhs = [&](const Line& l, const Piece& left) {
    int g = p.generator(left.text);
    if (g < 0) throw ParseError("unknown symbol '" + left.text + "'", l.number, left.col);
    return g;
  };

  for (const auto& l : sections["relations"]) {
    Piece left, right;
    split_arrow(l, left, right);
    ExprReader r(p, l.number);
    WordCombination lhs = r.combination(left);
    if (lhs.size() != 1 || !lhs.begin()->second.is_one() || lhs.begin()->first.empty())
      throw ParseError("left side must be a single monomial", l.number, left.col);
    RewriteRule rule{lhs.begin()->first, r.combination(right), l.number};
    for (const auto& [w, c] : rule.rhs)
      if (!p.less(w, rule.lhs))
        throw ParseError("rule " + p.word_string(rule.lhs) + " -> " + p.word_string(w) +
                             " violates the monomial order",
                         l.number, right.col);
    p.rules.push_back(std::move(rule));
  }

  auto per_generator = [&](const std::string& name, auto parse_one, auto& target, bool required) {
    using T = typename std::decay_t<decltype(target)>::value_type;
    std::vector<bool> seen(n, false);
    std::vector<T> values(n);
    for (const auto& l : sections[name]) {
      Piece left, right;
      split_arrow(l, left, right);
      int g = generator_lhs(l, left);
      if (seen[g]) throw ParseError("duplicate entry for '" + left.text + "'", l.number, left.col);
      seen[g] = true;
      values[g] = parse_one(l, right);
    }
    if (!required && !section_line.count(name)) return;
    for (int g = 0; g < n; ++g)
      if (!seen[g]) {
        int line = section_line.count(name) ? section_line[name] : number;
        throw ParseError("[" + name + "] missing generator '" + p.generators[g] + "'", line, 1);
      }
    target = std::move(values);
  };
  per_generator(
      "coproduct", [&](const Line& l, const Piece& r) { return ExprReader(p, l.number).tensor(r); }, p.coproduct, true);
  per_generator(
      "counit",
      [&](const Line& l, const Piece& r) {
        WordCombination c = ExprReader(p, l.number).combination(r);
        if (c.size() > 1 || (c.size() == 1 && !c.begin()->first.empty()))
          throw ParseError("counit must be a scalar", l.number, r.col);
        return c.empty() ? Scalar::zero(p.field) : c.begin()->second;
      },
      p.counit, true);
  per_generator(
      "antipode", [&](const Line& l, const Piece& r) { return ExprReader(p, l.number).combination(r); }, p.antipode,
      true);
  per_generator(
      "antipode_inverse", [&](const Line& l, const Piece& r) { return ExprReader(p, l.number).combination(r); },
      p.antipode_inv, false);
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

WordCombination parse_combination(const Presentation& p, const std::string& text) {
  return ExprReader(p, 1).combination({text, 1});
}

// ---- rewriting ----

namespace {

// position of the first rule match, scanning left to right
bool find_match(const Presentation& p, const Word& w, std::size_t& pos, const RewriteRule*& rule) {
  for (pos = 0; pos < w.size(); ++pos)
    for (const auto& r : p.rules)
      if (pos + r.lhs.size() <= w.size() && std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + pos)) {
        rule = &r;
        return true;
      }
  return false;
}

void apply_at(const Word& w, std::size_t pos, const RewriteRule& r, const Scalar& c,
              std::vector<std::pair<Word, Scalar>>& out) {
  for (const auto& [rw, rc] : r.rhs) {
    Word nw(w.begin(), w.begin() + pos);
    nw.insert(nw.end(), rw.begin(), rw.end());
    nw.insert(nw.end(), w.begin() + pos + r.lhs.size(), w.end());
    out.emplace_back(std::move(nw), c * rc);
  }
}

}  // namespace

WordCombination normal_form(const Presentation& p, const WordCombination& w, long long step_budget) {
  if (step_budget <= 0) throw PreconditionError("step budget must be positive");
  WordCombination out;
  std::vector<std::pair<Word, Scalar>> stack(w.begin(), w.end());
  long long steps = 0;
  while (!stack.empty()) {
    auto [word, c] = std::move(stack.back());
    stack.pop_back();
    if (c.is_zero()) continue;
    std::size_t pos;
    const RewriteRule* rule;
    if (!find_match(p, word, pos, rule)) {
      accumulate(out, word, c);
      continue;
    }
    if (++steps > step_budget)
      throw BudgetExceeded("rewriting exceeded " + std::to_string(step_budget) + " steps");
    apply_at(word, pos, *rule, c, stack);
  }
  return out;
}

WordCombination multiply(const Presentation& p, const WordCombination& a, const WordCombination& b,
                         long long step_budget) {
  WordCombination raw;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) accumulate(raw, concat(wa, wb), ca * cb);
  return normal_form(p, raw, step_budget);
}

namespace {

TensorCombination tensor_multiply(const Presentation& p, const TensorCombination& a, const TensorCombination& b,
                                  long long budget) {
  TensorCombination out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      WordCombination l = normal_form(p, single(concat(ka.first, kb.first), Scalar::one(p.field)), budget);
      WordCombination r = normal_form(p, single(concat(ka.second, kb.second), Scalar::one(p.field)), budget);
      Scalar c = ca * cb;
      for (const auto& [wl, sl] : l)
        for (const auto& [wr, sr] : r) accumulate_any(out, std::make_pair(wl, wr), c * sl * sr);
    }
  return out;
}

TensorCombination unit_tensor(const Presentation& p) {
  TensorCombination t;
  t.emplace(std::make_pair(Word{}, Word{}), Scalar::one(p.field));
  return t;
}

}  // namespace

TensorCombination coproduct_expand(const Presentation& p, const Word& w, int degree_bound, long long step_budget) {
  if (static_cast<int>(w.size()) > degree_bound)
    throw PreconditionError("word " + p.word_string(w) + " exceeds degree bound " + std::to_string(degree_bound));
  TensorCombination acc = unit_tensor(p);
  for (int g : w) acc = tensor_multiply(p, acc, p.coproduct[g], step_budget);
  return acc;
}

TensorCombination coproduct_of(const Presentation& p, const WordCombination& c, long long step_budget) {
  TensorCombination out;
  for (const auto& [w, s] : c)
    for (const auto& [k, t] : coproduct_expand(p, w, static_cast<int>(w.size()), step_budget))
      accumulate_any(out, k, s * t);
  return out;
}

Scalar counit_of(const Presentation& p, const WordCombination& c) {
  Scalar out = Scalar::zero(p.field);
  for (const auto& [w, s] : c) {
    Scalar e = s;
    for (int g : w) e *= p.counit[g];
    out += e;
  }
  return out;
}

WordCombination antipode_of(const Presentation& p, const WordCombination& c, bool inverse, long long step_budget) {
  const auto& table = inverse ? p.antipode_inv : p.antipode;
  if (table.empty() && p.num_generators() > 0) throw PreconditionError("presentation has no inverse antipode");
  WordCombination out;
  for (const auto& [w, s] : c) {
    WordCombination acc = single({}, s);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = multiply(p, acc, table[*it], step_budget);
    for (const auto& [x, t] : acc) accumulate(out, x, t);
  }
  return out;
}

std::vector<Word> normal_monomials(const Presentation& p, int max_length) {
  std::vector<Word> out{{}};
  std::vector<Word> frontier{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int g = 0; g < p.num_generators(); ++g) {
        Word x = w;
        x.push_back(g);
        // suffix check suffices since w is irreducible
        bool reducible = false;
        for (const auto& rule : p.rules)
          if (rule.lhs.size() <= x.size() && std::equal(rule.lhs.begin(), rule.lhs.end(), x.end() - rule.lhs.size()))
            reducible = true;
        if (!reducible) next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return p.less(a, b); });
  return out;
}

HopfAlgebra compile(const Presentation& p, int max_dim) {
  if (p.antipode_inv.empty() && p.num_generators() > 0)
    throw PreconditionError("compile needs an [antipode_inverse] section");
  const Field& f = p.field;
  std::set<Word> seen{{}};
  std::vector<Word> queue{{}};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int g = 0; g < p.num_generators(); ++g) {
      Word x = queue[i];
      x.push_back(g);
      for (const auto& [w, c] : normal_form(p, single(x, Scalar::one(f))))
        if (seen.insert(w).second) {
          if (static_cast<int>(seen.size()) > max_dim)
            throw NotFiniteDimensional("normal-form basis exceeds " + std::to_string(max_dim) + " elements");
          queue.push_back(w);
        }
    }
  std::vector<Word> basis(seen.begin(), seen.end());
  std::stable_sort(basis.begin(), basis.end(), [&](const Word& a, const Word& b) { return p.less(a, b); });
  std::map<Word, int> index;
  IndexedSpace space{"H", {}};
  for (const auto& w : basis) {
    index[w] = static_cast<int>(space.basis.size());
    space.basis.push_back(p.word_string(w));
  }
  const int d = static_cast<int>(basis.size());
  auto to_vec = [&](const WordCombination& c) {
    std::vector<std::pair<int, Scalar>> v;
    for (const auto& [w, s] : c) v.emplace_back(index.at(w), s);
    return vec_normalize(std::move(v));
  };
  SparseMatrix mult(d, d * d, f), comult(d * d, d, f), counit(1, d, f), s(d, d, f), sinv(d, d, f);
  std::vector<std::tuple<int, int, Scalar>> eps;
  for (int a = 0; a < d; ++a) {
    WordCombination wa = single(basis[a], Scalar::one(f));
    for (int b = 0; b < d; ++b) mult.set_col(a * d + b, to_vec(multiply(p, wa, single(basis[b], Scalar::one(f)))));
    std::vector<std::pair<int, Scalar>> cv;
    for (const auto& [k, c] : coproduct_of(p, wa)) cv.emplace_back(index.at(k.first) * d + index.at(k.second), c);
    comult.set_col(a, vec_normalize(std::move(cv)));
    Scalar e = counit_of(p, wa);
    if (!e.is_zero()) eps.emplace_back(0, a, e);
    s.set_col(a, to_vec(antipode_of(p, wa)));
    sinv.set_col(a, to_vec(antipode_of(p, wa, true)));
  }
  counit = SparseMatrix::from_entries(1, d, f, eps);
  return HopfAlgebra::make(f, std::move(space), std::move(mult), unit_vec(0, f), std::move(comult), std::move(counit),
                           std::move(s), std::move(sinv));
}

// ---- bounded-degree checks ----

namespace {

using Triple = std::array<Word, 3>;
using TripleCombination = std::map<Triple, Scalar>;

WordCombination apply_leg_counit(const Presentation& p, const TensorCombination& t, int leg) {
  WordCombination out;
  for (const auto& [k, c] : t) {
    const Word& drop = leg == 0 ? k.first : k.second;
    const Word& keep = leg == 0 ? k.second : k.first;
    accumulate(out, keep, c * counit_of(p, single(drop, Scalar::one(p.field))));
  }
  return out;
}

TripleCombination coassoc_side(const Presentation& p, const TensorCombination& t, bool left) {
  TripleCombination out;
  for (const auto& [k, c] : t) {
    const Word& split = left ? k.first : k.second;
    for (const auto& [k2, c2] : coproduct_of(p, single(split, Scalar::one(p.field)))) {
      Triple tr = left ? Triple{k2.first, k2.second, k.second} : Triple{k.first, k2.first, k2.second};
      accumulate_any(out, tr, c * c2);
    }
  }
  return out;
}

WordCombination antipode_convolution(const Presentation& p, const TensorCombination& t, bool left) {
  WordCombination out;
  for (const auto& [k, c] : t) {
    WordCombination a = single(k.first, c), b = single(k.second, Scalar::one(p.field));
    WordCombination prod = left ? multiply(p, antipode_of(p, a), b) : multiply(p, a, antipode_of(p, b));
    for (const auto& [w, s] : prod) accumulate(out, w, s);
  }
  return out;
}

}  // namespace

AxiomReport check_bounded(const Presentation& p, int degree_bound, std::vector<std::string>* witnesses) {
  const Field& f = p.field;
  std::map<std::string, bool> ok;
  for (const char* name : {"relations respected", "counit", "coassociativity", "Delta multiplicative",
                           "counit multiplicative", "antipode", "antipode inverse"})
    ok[name] = true;
  auto fail = [&](const std::string& name, const std::string& where) {
    if (ok[name] && witnesses) witnesses->push_back(name + " fails at " + where);
    ok[name] = false;
  };
  for (const auto& r : p.rules) {
    WordCombination lhs = single(r.lhs, Scalar::one(f));
    std::string where = p.word_string(r.lhs);
    if (coproduct_of(p, lhs) != coproduct_of(p, normal_form(p, r.rhs))) fail("relations respected", where + " (Delta)");
    if (counit_of(p, lhs) != counit_of(p, r.rhs)) fail("relations respected", where + " (counit)");
    if (antipode_of(p, lhs) != antipode_of(p, r.rhs)) fail("relations respected", where + " (S)");
    if (!p.antipode_inv.empty() && antipode_of(p, lhs, true) != antipode_of(p, r.rhs, true))
      fail("relations respected", where + " (S^-1)");
  }
  std::vector<Word> mons = normal_monomials(p, degree_bound);
  for (const auto& w : mons) {
    WordCombination x = single(w, Scalar::one(f));
    std::string where = p.word_string(w);
    TensorCombination d = coproduct_expand(p, w, degree_bound);
    if (apply_leg_counit(p, d, 0) != x || apply_leg_counit(p, d, 1) != x) fail("counit", where);
    if (coassoc_side(p, d, true) != coassoc_side(p, d, false)) fail("coassociativity", where);
    WordCombination unit_eps = single({}, counit_of(p, x));
    if (antipode_convolution(p, d, true) != unit_eps || antipode_convolution(p, d, false) != unit_eps)
      fail("antipode", where);
    if (!p.antipode_inv.empty()) {
      if (antipode_of(p, antipode_of(p, x, true)) != x || antipode_of(p, antipode_of(p, x), true) != x)
        fail("antipode inverse", where);
    }
    for (const auto& v : mons) {
      if (v.size() + w.size() > static_cast<std::size_t>(degree_bound)) continue;
      WordCombination y = single(v, Scalar::one(f));
      WordCombination vw = multiply(p, y, x);
      if (coproduct_of(p, vw) != tensor_multiply(p, coproduct_of(p, y), d, kDefaultSteps))
        fail("Delta multiplicative", p.word_string(v) + " * " + where);
      if (counit_of(p, vw) != counit_of(p, y) * counit_of(p, x))
        fail("counit multiplicative", p.word_string(v) + " * " + where);
    }
  }
  AxiomReport r;
  for (const char* name : {"relations respected", "counit", "coassociativity", "Delta multiplicative",
                           "counit multiplicative", "antipode", "antipode inverse"})
    r.add(name, ok[name]);
  return r;
}

bool critical_pairs_resolve(const Presentation& p, int max_degree, std::vector<std::string>* failures) {
  bool all = true;
  const Scalar one = Scalar::one(p.field);
  auto resolve = [&](const Word& w, std::size_t pos1, const RewriteRule& r1, std::size_t pos2,
                     const RewriteRule& r2) {
    std::vector<std::pair<Word, Scalar>> a, b;
    apply_at(w, pos1, r1, one, a);
    apply_at(w, pos2, r2, one, b);
    WordCombination ca, cb;
    for (const auto& [x, c] : a) accumulate(ca, x, c);
    for (const auto& [x, c] : b) accumulate(cb, x, c);
    if (normal_form(p, ca) != normal_form(p, cb)) {
      all = false;
      if (failures) failures->push_back("overlap " + p.word_string(w) + " does not resolve");
    }
  };
  for (const auto& r1 : p.rules)
    for (const auto& r2 : p.rules) {
      const Word &a = r1.lhs, &b = r2.lhs;
      // proper overlaps: a suffix of a equals a prefix of b
      for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
        if (!std::equal(a.end() - k, a.end(), b.begin())) continue;
        Word w = a;
        w.insert(w.end(), b.begin() + k, b.end());
        if (static_cast<int>(w.size()) > max_degree) continue;
        resolve(w, 0, r1, a.size() - k, r2);
      }
      // inclusions: b occurs inside a
      if (&r1 != &r2 && b.size() <= a.size())
        for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos)
          if (std::equal(b.begin(), b.end(), a.begin() + pos) && static_cast<int>(a.size()) <= max_degree)
            resolve(a, 0, r1, pos, r2);
    }
  return all;
}

// ---- modules ----

SparseMatrix act(const Presentation& p, const PresentedModule& m, const WordCombination& c) {
  if (static_cast<int>(m.generator_action.size()) != p.num_generators())
    throw DimensionMismatch("module lists " + std::to_string(m.generator_action.size()) + " generator actions");
  SparseMatrix out(m.dim(), m.dim(), p.field);
  for (const auto& [w, s] : c) {
    SparseMatrix a = SparseMatrix::identity(m.dim(), p.field);
    for (int g : w) a = a * m.generator_action[g];
    out = out + a.scaled(s);
  }
  return out;
}

AxiomReport check_presented_module(const Presentation& p, const PresentedModule& m) {
  AxiomReport r;
  bool ok = true;
  for (const auto& rule : p.rules)
    if (act(p, m, single(rule.lhs, Scalar::one(p.field))) != act(p, m, rule.rhs)) ok = false;
  r.add("relations", ok);
  return r;
}

MatchedPairCertificate check_matched_pair_bounded(const Presentation& p, const PresentedModule& m,
                                                  const WordCombination& sigma, int degree_bound) {
  using Elem = std::map<std::pair<int, Word>, Scalar>;
  const Field& f = p.field;
  MatchedPairCertificate cert;
  cert.degree_bound = degree_bound;
  SparseMatrix s = act(p, m, sigma);
  cert.sigma_fixes_M = s == SparseMatrix::identity(m.dim(), f);
  if (!cert.sigma_fixes_M) cert.details.push_back("sigma does not act as the identity on M");
  // S^(m (x) h) = h(2) m (x) sigma S(h(1))
  auto hat = [&](const Elem& x) {
    Elem out;
    for (const auto& [k, c] : x)
      for (const auto& [d, t] : coproduct_of(p, single(k.second, Scalar::one(f)))) {
        WordCombination right = multiply(p, sigma, antipode_of(p, single(d.first, Scalar::one(f))));
        SparseVec hm = act(p, m, single(d.second, Scalar::one(f))).col(k.first);
        for (const auto& [mi, mc] : hm)
          for (const auto& [w, wc] : right) accumulate_any(out, std::make_pair(mi, w), c * t * mc * wc);
      }
    return out;
  };
  cert.involution = true;
  for (const auto& h : normal_monomials(p, degree_bound))
    for (int mi = 0; mi < m.dim(); ++mi) {
      Elem x;
      x.emplace(std::make_pair(mi, h), Scalar::one(f));
      if (hat(hat(x)) != x) {
        if (cert.involution)
          cert.details.push_back("hat antipode squared moves " + m.space.basis[mi] + "|" + p.word_string(h));
        cert.involution = false;
      }
    }
  return cert;
}

}  // namespace hopfcyc
