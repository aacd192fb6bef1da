#pragma once

#include <map>
#include <string>

#include "hopfcyc/cotriples.hpp"
#include "hopfcyc/smash.hpp"

namespace hopfcyc::cli {

/// key = value lines under optional [section] headers; keys are stored as
/// "section.key" ("key" before the first header).
struct Bundle {
  std::string path;
  std::map<std::string, std::string> values;
  std::map<std::string, int> lines;

  std::string get(const std::string& key, const std::string& fallback) const;
  std::string require(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  std::string kind() const { return require("kind"); }
};

Bundle parse_bundle(const std::string& text, const std::string& path = "");
Bundle load_bundle(const std::string& path);
std::string read_file(const std::string& path);

/// "builtin:<name>" (z<n>, s3, sweedler, ground, dual:<name>) with `field`, or a
/// path to a .hopf presentation or a structure-constant file.
HopfAlgebra load_hopf(const std::string& ref, const Field& field, const std::string& base_dir);
HopfAlgebra bundle_hopf(const Bundle& b);

HModule parse_module(const HopfAlgebra& h, const std::string& spec);
HComodule parse_comodule(const HopfAlgebra& h, const std::string& spec);
SparseMatrix parse_character(const HopfAlgebra& h, const std::string& spec);
SparseVec parse_grouplike(const HopfAlgebra& h, const std::string& label);

HopfTriple bundle_triple(const Bundle& b, const HopfAlgebra& h);
HopfCotriple bundle_cotriple(const Bundle& b, const HopfAlgebra& h);
SmashProduct bundle_smash(const Bundle& b, const HopfAlgebra& h);

}  // namespace hopfcyc::cli
