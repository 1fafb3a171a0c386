// Group catalog: parametric builders for the standard small-group families,
// a frozen default catalog, and the two text file formats.
//
// Element numbering conventions (frozen, relied on by tests and the CLI):
//   Cyclic(n)              element i is the i-th power of the generator
//   ElementaryAbelian(p,k) element = base-p digit vector d, index = sum d_j p^j
//   Dihedral(2n)           0..n-1 rotations r^i, n+i is s*r^i
//   Dicyclic(4n)           0..2n-1 powers a^i, 2n+i is a^i*b
//   Symmetric/Alternating  permutations of {0..d-1} sorted lexicographically,
//                          composition (pq)(x) = p(q(x))
//   SemidirectCyclic(m,n,k) pair (x mod m, y mod n) has index x*n + y;
//                          (x1,y1)*(x2,y2) = (x1 + k^{y1} x2, y1 + y2)
//   DirectProduct(A,B)     pair (a,b) has index a*|B| + b
//
// CayleyFile:  optional "label <text>" line, then "order <n>", then n rows
//              of n 0-based indices.
// PermFile:    optional "label <text>" line, then "degree <d>", then one
//              generator per line as d 0-based images; the group is the
//              closure of the generators (capped at 5000 elements) in its
//              regular representation.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "submod/group.hpp"

namespace submod {

struct BuilderSpec {
  enum class Kind {
    Cyclic,            // a = n
    ElementaryAbelian, // a = p, b = k
    Dihedral,          // a = order (even)
    Dicyclic,          // a = order (multiple of 4)
    Symmetric,         // a = degree <= 5
    Alternating,       // a = degree <= 5
    SemidirectCyclic,  // a = m, b = n, c = k
    Product,           // factors
    FromFile,          // path
  };
  Kind kind{};
  int a = 0, b = 0, c = 0;
  std::vector<BuilderSpec> factors;
  std::string path;

  static BuilderSpec cyclic(int n) { return {Kind::Cyclic, n, 0, 0, {}, {}}; }
  static BuilderSpec elementary_abelian(int p, int k) {
    return {Kind::ElementaryAbelian, p, k, 0, {}, {}};
  }
  static BuilderSpec dihedral(int order) { return {Kind::Dihedral, order, 0, 0, {}, {}}; }
  static BuilderSpec dicyclic(int order) { return {Kind::Dicyclic, order, 0, 0, {}, {}}; }
  static BuilderSpec symmetric(int deg) { return {Kind::Symmetric, deg, 0, 0, {}, {}}; }
  static BuilderSpec alternating(int deg) { return {Kind::Alternating, deg, 0, 0, {}, {}}; }
  static BuilderSpec semidirect_cyclic(int m, int n, int k) {
    return {Kind::SemidirectCyclic, m, n, k, {}, {}};
  }
  static BuilderSpec product(std::vector<BuilderSpec> fs) {
    return {Kind::Product, 0, 0, 0, std::move(fs), {}};
  }
  static BuilderSpec from_file(std::string p) {
    return {Kind::FromFile, 0, 0, 0, {}, std::move(p)};
  }

  // canonical text form, e.g. "SDP(5,4,2)" or "S3 x C2"; doubles as the
  // default label and as the manifest-hash input
  std::string to_string() const;
};

struct CatalogEntry {
  std::string label;
  BuilderSpec spec;
};

// builds and validates; throws BadParameters / UnsupportedSize / ParseError
GroupTable build_group(const BuilderSpec& spec);

// the frozen verification catalog (labels unique, orders <= 120)
std::vector<CatalogEntry> default_catalog();

GroupTable parse_cayley(std::istream& in, const std::string& origin);
GroupTable parse_cayley_file(const std::string& path);
void write_cayley(const GroupTable& g, std::ostream& out);

GroupTable parse_perm(std::istream& in, const std::string& origin);
GroupTable parse_perm_file(const std::string& path);
// dispatches on the header line ("order" / "degree" / "label")
GroupTable parse_group_file(const std::string& path);

// manifest: one entry per line, "label = expr" or bare "expr", where expr is
//   C<n> | EA(p,k) | D<n> | Dic<n> | S<n> | A<n> | SDP(m,n,k) |
//   file(<path>) | expr x expr        ('#' starts a comment)
std::vector<CatalogEntry> parse_manifest(std::istream& in);
std::vector<CatalogEntry> parse_manifest_file(const std::string& path);

// FNV-1a over the canonical entry descriptors; stable across runs
std::string manifest_hash(const std::vector<CatalogEntry>& entries);

}  // namespace submod
