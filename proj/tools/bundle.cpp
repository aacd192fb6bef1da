#include "bundle.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfcyc/presentation.hpp"
#include "hopfcyc/serialize.hpp"

namespace hopfcyc::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) return s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

std::string Bundle::get(const std::string& key, const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

std::string Bundle::require(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw ParseError("bundle is missing '" + key + "'", 1, 1);
  return it->second;
}

int Bundle::get_int(const std::string& key, int fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ParseError("'" + key + "' must be an integer", lines.at(key), 1);
  }
}

Bundle parse_bundle(const std::string& text, const std::string& path) {
  Bundle b;
  b.path = path;
  std::istringstream in(text);
  std::string raw, section;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const int col = static_cast<int>(raw.find_first_not_of(" \t")) + 1;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", number, col);
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw ParseError("empty section name", number, col);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", number, col);
    std::string key = trim(line.substr(0, eq)), value = unquote(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError("empty key", number, col);
    if (!section.empty()) key = section + "." + key;
    if (b.values.count(key)) throw ParseError("duplicate key '" + key + "'", number, col);
    b.values[key] = value;
    b.lines[key] = number;
  }
  return b;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Bundle load_bundle(const std::string& path) { return parse_bundle(read_file(path), path); }

HopfAlgebra load_hopf(const std::string& ref, const Field& field, const std::string& base_dir) {
  if (starts_with(ref, "builtin:")) {
    std::string name = ref.substr(8);
    if (starts_with(name, "dual:")) return dual_hopf(load_hopf("builtin:" + name.substr(5), field, base_dir));
    if (name == "s3") return symmetric_group_s3(field);
    if (name == "sweedler") return sweedler_algebra(field);
    if (name == "ground") return ground_field_hopf(field);
    if (name.size() > 1 && name[0] == 'z' && name.find_first_not_of("0123456789", 1) == std::string::npos)
      return cyclic_group_algebra(std::stoi(name.substr(1)), field);
    throw PreconditionError("unknown built-in Hopf algebra '" + name + "'");
  }
  std::filesystem::path p(ref);
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  std::string text = read_file(p.string());
  if (text.find("[basis]") != std::string::npos) return parse_structure(text);
  return compile(parse_presentation(text));
}

HopfAlgebra bundle_hopf(const Bundle& b) {
  Field f = Field::parse(b.get("field", "Q"));
  std::string dir = b.path.empty() ? "" : std::filesystem::path(b.path).parent_path().string();
  return load_hopf(b.require("hopf"), f, dir);
}

SparseMatrix parse_character(const HopfAlgebra& h, const std::string& spec) {
  if (spec == "counit" || spec == "trivial") return h.counit;
  if (!starts_with(spec, "character:")) throw PreconditionError("expected counit or character:<values>, got '" + spec + "'");
  std::vector<std::string> vals = split(spec.substr(10), ',');
  if (static_cast<int>(vals.size()) != h.dim())
    throw PreconditionError("character needs " + std::to_string(h.dim()) + " values");
  std::vector<Scalar> s;
  for (const auto& v : vals) s.push_back(parse_scalar(v, h.field));
  SparseMatrix chi = covector(h.field, s);
  if (!is_character(h, chi)) throw PreconditionError("'" + spec + "' is not an algebra map");
  return chi;
}

SparseVec parse_grouplike(const HopfAlgebra& h, const std::string& label) {
  SparseVec g = label == "unit" ? h.unit : h.element(label);
  if (!is_grouplike(h, g)) throw PreconditionError("'" + label + "' is not grouplike");
  return g;
}

HModule parse_module(const HopfAlgebra& h, const std::string& spec) {
  if (spec == "trivial") return trivial_module(h);
  if (spec == "regular") return regular_module(h);
  if (spec == "zero") return zero_module(h);
  if (spec == "sign") return sign_module_s3(h);
  return character_module(h, parse_character(h, spec), spec);
}

HComodule parse_comodule(const HopfAlgebra& h, const std::string& spec) {
  if (spec == "trivial") return grouplike_comodule(h, h.unit, "k");
  if (spec == "regular") return regular_comodule(h);
  if (spec == "zero") return zero_comodule(h);
  if (starts_with(spec, "grouplike:"))
    return grouplike_comodule(h, parse_grouplike(h, spec.substr(10)), "k_" + spec.substr(10));
  throw PreconditionError("unknown comodule '" + spec + "'");
}

HopfTriple bundle_triple(const Bundle& b, const HopfAlgebra& h) {
  HModule m = parse_module(h, b.get("triple.module", "trivial"));
  SparseVec sigma = parse_grouplike(h, b.get("triple.sigma", "unit"));
  std::string alg = b.get("triple.algebra", "self");
  if (alg == "self") return self_triple(h, m, sigma);
  if (starts_with(alg, "matrix:")) return make_triple(matrix_comodule_algebra(h, std::stoi(alg.substr(7))), h, m, sigma);
  throw PreconditionError("unknown triple algebra '" + alg + "'");
}

HopfCotriple bundle_cotriple(const Bundle& b, const HopfAlgebra& h) {
  HComodule v = parse_comodule(h, b.get("cotriple.comodule", "trivial"));
  SparseMatrix delta = parse_character(h, b.get("cotriple.delta", "counit"));
  std::string coalg = b.get("cotriple.coalgebra", "self");
  if (coalg != "self") throw PreconditionError("unknown cotriple coalgebra '" + coalg + "'");
  return self_cotriple(h, v, delta);
}

SmashProduct bundle_smash(const Bundle& b, const HopfAlgebra& h) {
  std::string alg = b.get("smash.algebra", "dual_numbers");
  if (alg == "dual_numbers") return build_smash(h, h.dim() == 4 ? dual_numbers_sweedler(h) : dual_numbers_sign(h));
  if (starts_with(alg, "truncated:")) {
    const int n = std::stoi(alg.substr(10));
    auto [mult, unit] = truncated_polynomial(n, h.field);
    return build_smash(h, trivial_right_module_algebra(h, IndexedSpace::numbered("k[x]/(x^" + std::to_string(n) + ")", n),
                                                       mult, unit));
  }
  throw PreconditionError("unknown smash algebra '" + alg + "'");
}

}  // namespace hopfcyc::cli
