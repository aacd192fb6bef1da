#include "hopfcyc/serialize.hpp"

#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "hopfcyc/error.hpp"

namespace hopfcyc {

namespace {

struct Arity {
  int in, out;
};

const std::vector<std::pair<std::string, Arity>>& tensor_sections() {
  static const std::vector<std::pair<std::string, Arity>> s{
      {"unit", {0, 1}},     {"mult", {2, 1}},     {"comult", {1, 2}},
      {"counit", {1, 0}},   {"antipode", {1, 1}}, {"antipode_inverse", {1, 1}}};
  return s;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// column index of input labels, row index of output labels
void write_tensor(std::ostringstream& o, const SparseMatrix& m, int in, int out, const IndexedSpace& s) {
  const int d = s.dim();
  auto labels = [&](int index, int arity) {
    std::vector<std::string> l(arity);
    for (int k = arity - 1; k >= 0; --k) {
      l[k] = s.basis[index % d];
      index /= d;
    }
    return l;
  };
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.col(c)) {
      for (const auto& x : labels(c, in)) o << x << ' ';
      for (const auto& x : labels(r, out)) o << x << ' ';
      o << v.to_string() << '\n';
    }
}

}  // namespace

std::string write_structure(const HopfAlgebra& h) {
  std::ostringstream o;
  o << "# structure constants of " << h.space.name << "\n";
  o << "[field]\n" << (h.field.kind == FieldKind::RationalFunction ? "Q(q)" : h.field.name()) << "\n";
  o << "[name]\n" << h.space.name << "\n";
  o << "[basis]\n";
  for (size_t i = 0; i < h.space.basis.size(); ++i) o << (i ? " " : "") << h.space.basis[i];
  o << "\n[unit]\n";
  write_tensor(o, SparseMatrix::from_columns(h.dim(), h.field, {h.unit}), 0, 1, h.space);
  o << "[mult]\n";
  write_tensor(o, h.mult, 2, 1, h.space);
  o << "[comult]\n";
  write_tensor(o, h.comult, 1, 2, h.space);
  o << "[counit]\n";
  write_tensor(o, h.counit, 1, 0, h.space);
  o << "[antipode]\n";
  write_tensor(o, h.antipode, 1, 1, h.space);
  o << "[antipode_inverse]\n";
  write_tensor(o, h.antipode_inv, 1, 1, h.space);
  return o.str();
}

HopfAlgebra parse_structure(const std::string& text) {
  struct Entry {
    std::vector<std::string> tok;
    int line;
  };
  std::map<std::string, std::vector<Entry>> sections;
  std::set<std::string> known{"field", "name", "basis"};
  for (const auto& [n, a] : tensor_sections()) known.insert(n);
  std::string current;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw.substr(0, raw.find('#'));
    std::vector<std::string> tok = tokens(line);
    if (tok.empty()) continue;
    const int col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    if (tok[0].front() == '[') {
      if (tok.size() != 1 || tok[0].back() != ']') throw ParseError("malformed section header", number, col);
      current = tok[0].substr(1, tok[0].size() - 2);
      if (!known.count(current)) throw ParseError("unknown section [" + current + "]", number, col);
      if (sections.count(current)) throw ParseError("duplicate section [" + current + "]", number, col);
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError("text outside any section", number, col);
    sections[current].push_back({tok, number});
  }
  for (const char* req : {"field", "basis", "unit", "mult", "comult", "counit", "antipode", "antipode_inverse"})
    if (!sections.count(req)) throw ParseError(std::string("missing section [") + req + "]", number, 1);
  auto one_line = [&](const std::string& s) {
    const auto& e = sections[s];
    if (e.size() != 1) throw ParseError("[" + s + "] takes one line", e.empty() ? number : e[0].line, 1);
    std::string out;
    for (const auto& t : e[0].tok) out += (out.empty() ? "" : " ") + t;
    return out;
  };
  Field f = Field::rational();
  try {
    f = Field::parse(one_line("field"));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), sections["field"][0].line, 1);
  }
  IndexedSpace space;
  space.name = sections.count("name") ? one_line("name") : "H";
  for (const auto& e : sections["basis"])
    for (const auto& t : e.tok) {
      if (space.index_of(t) >= 0) throw ParseError("duplicate basis label '" + t + "'", e.line, 1);
      space.basis.push_back(t);
    }
  const int d = space.dim();
  if (d == 0) throw ParseError("empty basis", number, 1);
  std::map<std::string, SparseMatrix> tensors;
  for (const auto& [name, ar] : tensor_sections()) {
    long long rows = 1, cols = 1;
    for (int k = 0; k < ar.out; ++k) rows *= d;
    for (int k = 0; k < ar.in; ++k) cols *= d;
    std::vector<std::vector<std::pair<int, Scalar>>> acc(cols);
    for (const auto& e : sections[name]) {
      const size_t n = static_cast<size_t>(ar.in + ar.out);
      if (e.tok.size() <= n) throw ParseError("[" + name + "] entry needs " + std::to_string(n) + " labels and a coefficient", e.line, 1);
      long long r = 0, c = 0;
      for (size_t k = 0; k < n; ++k) {
        int i = space.index_of(e.tok[k]);
        if (i < 0) throw ParseError("unknown basis label '" + e.tok[k] + "'", e.line, 1);
        if (static_cast<int>(k) < ar.in)
          c = c * d + i;
        else
          r = r * d + i;
      }
      std::string coef;
      for (size_t k = n; k < e.tok.size(); ++k) coef += e.tok[k];
      Scalar v = Scalar::zero(f);
      try {
        v = parse_scalar(coef, f);
      } catch (const Error& ex) {
        throw ParseError(std::string("bad coefficient: ") + ex.what(), e.line, 1);
      }
      acc[c].emplace_back(static_cast<int>(r), v);
    }
    SparseMatrix m(static_cast<int>(rows), static_cast<int>(cols), f);
    for (long long c = 0; c < cols; ++c) m.set_col(static_cast<int>(c), vec_normalize(std::move(acc[c])));
    tensors.emplace(name, std::move(m));
  }
  return HopfAlgebra::make(f, space, tensors["mult"], tensors["unit"].col(0), tensors["comult"], tensors["counit"],
                           tensors["antipode"], tensors["antipode_inverse"]);
}

}  // namespace hopfcyc
